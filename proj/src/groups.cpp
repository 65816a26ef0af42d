#include "bracoid/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <thread>

#include "bracoid/errors.hpp"

namespace bracoid {
namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

CheckResult set_failure(std::string equation, std::vector<std::size_t> input, std::string lhs, std::string rhs) {
  CheckResult r{std::move(equation), Status::fail, Witness{std::move(input), {}, std::move(lhs), std::move(rhs)}, {}, false};
  return r;
}

CheckResult set_pass(std::string equation) { return CheckResult{std::move(equation), Status::pass, std::nullopt, {}, false}; }

using Perm = std::vector<std::size_t>;

// Extends generator images to a map on all of g along the Cayley graph, using
// image(x s) = compose(image(x), image(s)). Returns false when two paths
// disagree, which is exactly when no homomorphism has these generator images.
template <typename Image, typename Compose>
bool extend_from_generators(const FiniteGroup& g, const std::vector<std::size_t>& gens,
                            const std::vector<const Image*>& gen_images, const Image& identity, Compose&& compose_images,
                            std::vector<Image>& out) {
  const std::size_t n = g.order();
  out.assign(n, Image{});
  std::vector<char> known(n, 0);
  std::vector<std::size_t> queue{g.unit()};
  out[g.unit()] = identity;
  known[g.unit()] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const std::size_t x = queue[q];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const std::size_t y = g.mul(x, gens[k]);
      Image img = compose_images(out[x], *gen_images[k]);
      if (!known[y]) {
        out[y] = std::move(img);
        known[y] = 1;
        queue.push_back(y);
      } else if (!(out[y] == img)) {
        return false;
      }
    }
  }
  return queue.size() == n;
}

}  // namespace

Report validate_group(const CayleyTable& table, std::size_t unit) {
  const std::size_t n = table.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw ShapeError("group table is not square (row " + idx(a) + ")");
    for (auto v : table[a])
      if (v >= n) throw ShapeError("group table entry " + idx(v) + " out of range in row " + idx(a));
  }
  if (n == 0) throw ShapeError("group table is empty");
  if (unit >= n) throw ShapeError("group unit index out of range");
  Report r("group");

  CheckResult unit_check = set_pass("group unit");
  for (std::size_t a = 0; a < n && unit_check.status == Status::pass; ++a) {
    if (table[unit][a] != a) unit_check = set_failure("group unit", {unit, a}, idx(table[unit][a]), idx(a));
    else if (table[a][unit] != a) unit_check = set_failure("group unit", {a, unit}, idx(table[a][unit]), idx(a));
  }
  r.add(unit_check);

  CheckResult rows = set_pass("group rows are permutations");
  for (std::size_t a = 0; a < n && rows.status == Status::pass; ++a) {
    std::vector<std::size_t> seen(n, n);
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t v = table[a][b];
      if (seen[v] != n) {
        rows = set_failure("group rows are permutations", {a, b}, idx(v), "repeats column " + idx(seen[v]));
        break;
      }
      seen[v] = b;
    }
  }
  r.add(rows);

  CheckResult cols = set_pass("group columns are permutations");
  for (std::size_t b = 0; b < n && cols.status == Status::pass; ++b) {
    std::vector<std::size_t> seen(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t v = table[a][b];
      if (seen[v] != n) {
        cols = set_failure("group columns are permutations", {a, b}, idx(v), "repeats row " + idx(seen[v]));
        break;
      }
      seen[v] = a;
    }
  }
  r.add(cols);

  CheckResult assoc = set_pass("group associativity");
  for (std::size_t a = 0; a < n && assoc.status == Status::pass; ++a)
    for (std::size_t b = 0; b < n && assoc.status == Status::pass; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t lhs = table[table[a][b]][c];
        std::size_t rhs = table[a][table[b][c]];
        if (lhs != rhs) {
          assoc = set_failure("group associativity", {a, b, c}, idx(lhs), idx(rhs));
          break;
        }
      }
  r.add(assoc);

  CheckResult inverses = set_pass("group inverses");
  for (std::size_t a = 0; a < n && inverses.status == Status::pass; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) found = table[a][b] == unit && table[b][a] == unit;
    if (!found) inverses = set_failure("group inverses", {a}, "no two-sided inverse", "unit " + idx(unit));
  }
  r.add(inverses);
  return r;
}

FiniteGroup::FiniteGroup(CayleyTable table, std::size_t unit, std::string name)
    : table_(std::move(table)), unit_(unit), name_(std::move(name)) {
  Report r = validate_group(table_, unit_);
  if (const auto* f = r.first_failure()) throw PreconditionError("not a group: " + f->equation + " fails");
  inverses_.resize(table_.size());
  for (std::size_t a = 0; a < table_.size(); ++a)
    for (std::size_t b = 0; b < table_.size(); ++b)
      if (table_[a][b] == unit_) inverses_[a] = b;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteGroup FiniteGroup::opposite() const {
  CayleyTable t(order(), std::vector<std::size_t>(order()));
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = 0; b < order(); ++b) t[a][b] = table_[b][a];
  return FiniteGroup(std::move(t), unit_, name_.empty() ? name_ : name_ + "^op");
}

std::size_t element_order(const FiniteGroup& g, std::size_t x) {
  std::size_t k = 1;
  for (std::size_t y = x; y != g.unit(); y = g.mul(y, x)) ++k;
  return k;
}

std::vector<std::size_t> generators(const FiniteGroup& g) {
  std::vector<std::size_t> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](std::size_t a, std::size_t b) { return element_order(g, a) > element_order(g, b); });
  std::vector<std::size_t> gens;
  std::vector<char> in_subgroup(g.order(), 0);
  in_subgroup[g.unit()] = 1;
  std::size_t covered = 1;
  for (std::size_t x : by_order) {
    if (in_subgroup[x]) continue;
    gens.push_back(x);
    std::vector<std::size_t> members;
    for (std::size_t y = 0; y < g.order(); ++y)
      if (in_subgroup[y]) members.push_back(y);
    for (std::size_t q = 0; q < members.size(); ++q) {
      for (std::size_t s : gens) {
        std::size_t y = g.mul(members[q], s);
        if (!in_subgroup[y]) {
          in_subgroup[y] = 1;
          members.push_back(y);
        }
      }
    }
    covered = members.size();
    if (covered == g.order()) break;
  }
  return gens;
}

std::vector<IndexMap> homomorphisms(const FiniteGroup& source, const FiniteGroup& target) {
  const auto gens = generators(source);
  std::vector<IndexMap> out;
  std::vector<std::size_t> choice(gens.size(), 0);
  // Images of a generator must have order dividing the generator's order.
  std::vector<std::vector<std::size_t>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    std::size_t ord = element_order(source, gens[k]);
    for (std::size_t y = 0; y < target.order(); ++y)
      if (ord % element_order(target, y) == 0) candidates[k].push_back(y);
  }
  auto mul = [&](const std::size_t& a, const std::size_t& b) { return target.mul(a, b); };
  std::vector<std::size_t> images;
  std::vector<const std::size_t*> gen_images(gens.size());
  while (true) {
    for (std::size_t k = 0; k < gens.size(); ++k) gen_images[k] = &candidates[k][choice[k]];
    if (extend_from_generators(source, gens, gen_images, target.unit(), mul, images)) out.push_back(images);
    std::size_t k = 0;
    while (k < gens.size() && ++choice[k] == candidates[k].size()) choice[k++] = 0;
    if (k == gens.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IndexMap> automorphisms(const FiniteGroup& g) {
  std::vector<IndexMap> out;
  for (auto& h : homomorphisms(g, g)) {
    std::vector<char> hit(g.order(), 0);
    bool bijective = true;
    for (auto v : h) {
      if (hit[v]) bijective = false;
      hit[v] = 1;
    }
    if (bijective) out.push_back(std::move(h));
  }
  return out;
}

Report check_group_homomorphism(const IndexMap& f, const FiniteGroup& source, const FiniteGroup& target,
                                const std::string& label) {
  if (f.size() != source.order()) throw ShapeError(label + ": map has " + idx(f.size()) + " images for a group of order " + idx(source.order()));
  for (auto v : f)
    if (v >= target.order()) throw ShapeError(label + ": image index out of range");
  Report r(label + " homomorphism");
  CheckResult c = set_pass(label + " is a homomorphism");
  for (std::size_t a = 0; a < source.order() && c.status == Status::pass; ++a)
    for (std::size_t b = 0; b < source.order(); ++b) {
      std::size_t lhs = f[source.mul(a, b)];
      std::size_t rhs = target.mul(f[a], f[b]);
      if (lhs != rhs) {
        c = set_failure(label + " is a homomorphism", {a, b}, idx(lhs), idx(rhs));
        break;
      }
    }
  r.add(c);
  return r;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw ShapeError("cyclic group of order 0");
  CayleyTable t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(std::move(t), 0, "C" + idx(n));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t m = a.order();
  const std::size_t n = b.order();
  CayleyTable t(m * n, std::vector<std::size_t>(m * n));
  for (std::size_t x = 0; x < m * n; ++x)
    for (std::size_t y = 0; y < m * n; ++y) t[x][y] = a.mul(x / n, y / n) * n + b.mul(x % n, y % n);
  return FiniteGroup(std::move(t), a.unit() * n + b.unit(), a.name() + "x" + b.name());
}

FiniteGroup symmetric_group(std::size_t n) {
  std::vector<Perm> perms;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  CayleyTable t(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      Perm c(n);
      for (std::size_t x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = index.at(c);
    }
  return FiniteGroup(std::move(t), 0, "S" + idx(n));
}

FiniteGroup dihedral_group(std::size_t n) {
  CayleyTable t(2 * n, std::vector<std::size_t>(2 * n));
  for (std::size_t x = 0; x < 2 * n; ++x)
    for (std::size_t y = 0; y < 2 * n; ++y) {
      std::size_t a = x % n, e = x / n, b = y % n, f = y / n;
      std::size_t k = e == 0 ? (a + b) % n : (a + n - b) % n;
      t[x][y] = k + n * ((e + f) % 2);
    }
  return FiniteGroup(std::move(t), 0, "D" + idx(n));
}

FiniteGroup quaternion_group() {
  // Elements 1, i, j, k, -1, -i, -j, -k as 0..7: index = unit + 4 * sign.
  const int unit_table[4][4][2] = {
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  CayleyTable t(8, std::vector<std::size_t>(8));
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      const auto& cell = unit_table[x % 4][y % 4];
      std::size_t sign = (x / 4 + y / 4 + static_cast<std::size_t>(cell[1])) % 2;
      t[x][y] = static_cast<std::size_t>(cell[0]) + 4 * sign;
    }
  return FiniteGroup(std::move(t), 0, "Q8");
}

std::vector<FiniteGroup> small_groups(std::size_t max_order) {
  if (max_order > 8) throw BoundExceeded("group catalog only covers orders up to 8");
  std::vector<FiniteGroup> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    out.push_back(cyclic_group(n));
    if (n == 4) out.push_back(direct_product(cyclic_group(2), cyclic_group(2)));
    if (n == 6) out.push_back(symmetric_group(3));
    if (n == 8) {
      out.push_back(direct_product(cyclic_group(2), cyclic_group(4)));
      out.push_back(direct_product(cyclic_group(2), direct_product(cyclic_group(2), cyclic_group(2))));
      out.push_back(dihedral_group(4));
      out.push_back(quaternion_group());
    }
  }
  return out;
}

Report check_gskb(const GeneralizedSkewBracoid& b) {
  const FiniteGroup& g = b.acting;
  const FiniteGroup& n = b.carrier;
  const auto& t = b.action.table;
  if (b.action.g_order != g.order() || b.action.n_order != n.order() || t.size() != g.order()) {
    throw ShapeError("action table is " + idx(t.size()) + "x? for groups of orders " + idx(g.order()) + " and " +
                     idx(n.order()));
  }
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (t[x].size() != n.order()) throw ShapeError("action table row " + idx(x) + " has wrong length");
    for (auto v : t[x])
      if (v >= n.order()) throw ShapeError("action table entry " + idx(v) + " out of range");
  }
  Report r("skew bracoid");

  CheckResult unit = set_pass("action unit");
  for (std::size_t m = 0; m < n.order(); ++m)
    if (t[g.unit()][m] != m) {
      unit = set_failure("action unit", {g.unit(), m}, idx(t[g.unit()][m]), idx(m));
      break;
    }
  r.add(unit);

  CheckResult assoc = set_pass("action associativity");
  for (std::size_t x = 0; x < g.order() && assoc.status == Status::pass; ++x)
    for (std::size_t y = 0; y < g.order() && assoc.status == Status::pass; ++y)
      for (std::size_t m = 0; m < n.order(); ++m) {
        std::size_t lhs = t[x][t[y][m]];
        std::size_t rhs = t[g.mul(x, y)][m];
        if (lhs != rhs) {
          assoc = set_failure("action associativity", {x, y, m}, idx(lhs), idx(rhs));
          break;
        }
      }
  r.add(assoc);

  CheckResult bij = set_pass("action bijective");
  for (std::size_t x = 0; x < g.order() && bij.status == Status::pass; ++x) {
    std::vector<std::size_t> seen(n.order(), n.order());
    for (std::size_t m = 0; m < n.order(); ++m) {
      if (seen[t[x][m]] != n.order()) {
        bij = set_failure("action bijective", {x, m}, idx(t[x][m]), "also image of " + idx(seen[t[x][m]]));
        break;
      }
      seen[t[x][m]] = m;
    }
  }
  r.add(bij);

  CheckResult compat = set_pass("skew bracoid compatibility");
  for (std::size_t x = 0; x < g.order() && compat.status == Status::pass; ++x) {
    const std::size_t shift = n.inv(t[x][n.unit()]);
    for (std::size_t m = 0; m < n.order() && compat.status == Status::pass; ++m)
      for (std::size_t k = 0; k < n.order(); ++k) {
        std::size_t lhs = t[x][n.mul(m, k)];
        std::size_t rhs = n.mul(n.mul(t[x][m], shift), t[x][k]);
        if (lhs != rhs) {
          compat = set_failure("skew bracoid compatibility", {x, m, k}, idx(lhs), idx(rhs));
          break;
        }
      }
  }
  r.add(compat);
  return r;
}

bool is_transitive(const GeneralizedSkewBracoid& b) {
  std::vector<char> hit(b.carrier.order(), 0);
  for (std::size_t x = 0; x < b.acting.order(); ++x) hit[b.action.table[x][b.carrier.unit()]] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

Report check_gskb_morphism(const GeneralizedSkewBracoid& source, const GeneralizedSkewBracoid& target,
                           const GskbMorphism& m) {
  Report r("skew bracoid morphism");
  r.merge(check_group_homomorphism(m.acting_map, source.acting, target.acting, "acting map"));
  r.merge(check_group_homomorphism(m.carrier_map, source.carrier, target.carrier, "carrier map"));
  CheckResult eq = set_pass("morphism equivariance");
  for (std::size_t x = 0; x < source.acting.order() && eq.status == Status::pass; ++x)
    for (std::size_t n = 0; n < source.carrier.order(); ++n) {
      std::size_t lhs = m.carrier_map[source.action.table[x][n]];
      std::size_t rhs = target.action.table[m.acting_map[x]][m.carrier_map[n]];
      if (lhs != rhs) {
        eq = set_failure("morphism equivariance", {x, n}, idx(lhs), idx(rhs));
        break;
      }
    }
  r.add(eq);
  return r;
}

GeneralizedSkewBracoid opposite_gskb(const GeneralizedSkewBracoid& b) {
  return GeneralizedSkewBracoid{b.acting, b.carrier.opposite(), b.action};
}

std::vector<GeneralizedSkewBracoid> enumerate_gskb(const FiniteGroup& acting, const FiniteGroup& carrier,
                                                   const EnumerationOptions& options) {
  if (acting.order() > options.max_order || carrier.order() > options.max_order) {
    throw BoundExceeded("enumeration bound exceeded: orders " + idx(acting.order()) + " and " + idx(carrier.order()) +
                        " against max order " + idx(options.max_order) + "; raise --max-order or use smaller groups");
  }
  const std::size_t n = carrier.order();
  // A permutation b of N can be some g's action only if
  // b(x y) = b(x) b(e)^-1 b(y), i.e. b(x) = a alpha(x) with a in N and alpha in
  // Aut(N). Generator images are drawn from these permutations.
  std::vector<Perm> allowed;
  for (const auto& alpha : automorphisms(carrier))
    for (std::size_t a = 0; a < n; ++a) {
      Perm p(n);
      for (std::size_t x = 0; x < n; ++x) p[x] = carrier.mul(a, alpha[x]);
      allowed.push_back(std::move(p));
    }
  std::sort(allowed.begin(), allowed.end());
  allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());

  auto perm_order = [](const Perm& p) {
    std::size_t k = 1;
    Perm q = p;
    auto is_id = [](const Perm& r) {
      for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] != i) return false;
      return true;
    };
    while (!is_id(q)) {
      Perm next(q.size());
      for (std::size_t i = 0; i < q.size(); ++i) next[i] = p[q[i]];
      q = std::move(next);
      ++k;
    }
    return k;
  };

  const auto gens = generators(acting);
  std::vector<std::vector<const Perm*>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    std::size_t ord = element_order(acting, gens[k]);
    for (const auto& p : allowed)
      if (ord % perm_order(p) == 0) candidates[k].push_back(&p);
  }
  Perm identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  auto compose_perm = [](const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
  };

  // Each worker takes a stride of the first generator's candidates.
  auto work = [&](std::size_t worker, std::size_t workers, std::vector<CayleyTable>& found) {
    if (gens.empty()) {
      if (worker == 0) found.push_back(CayleyTable{identity});
      return;
    }
    std::vector<std::size_t> choice(gens.size(), 0);
    std::vector<const Perm*> images(gens.size());
    std::vector<Perm> ext;
    for (std::size_t first = worker; first < candidates[0].size(); first += workers) {
      std::fill(choice.begin(), choice.end(), 0);
      choice[0] = first;
      while (true) {
        for (std::size_t k = 0; k < gens.size(); ++k) images[k] = candidates[k][choice[k]];
        if (extend_from_generators(acting, gens, images, identity, compose_perm, ext)) found.push_back(ext);
        std::size_t k = 1;
        while (k < gens.size() && ++choice[k] == candidates[k].size()) choice[k++] = 0;
        if (k >= gens.size()) break;
      }
    }
  };

  const unsigned workers = std::max(1u, options.jobs);
  std::vector<std::vector<CayleyTable>> partial(workers);
  if (workers == 1) {
    work(0, 1, partial[0]);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w, workers, std::ref(partial[w]));
    for (auto& t : threads) t.join();
  }
  std::vector<CayleyTable> tables;
  for (auto& p : partial)
    for (auto& t : p) tables.push_back(std::move(t));
  std::sort(tables.begin(), tables.end());

  std::vector<GeneralizedSkewBracoid> out;
  out.reserve(tables.size());
  for (auto& t : tables) {
    GeneralizedSkewBracoid b{acting, carrier, ActionTable{acting.order(), n, std::move(t)}};
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<std::size_t> iso_classes(const std::vector<GeneralizedSkewBracoid>& list) {
  if (list.empty()) return {};
  const auto aut_g = automorphisms(list.front().acting);
  const auto aut_n = automorphisms(list.front().carrier);
  const std::size_t go = list.front().acting.order();
  const std::size_t no = list.front().carrier.order();
  std::map<CayleyTable, std::size_t> class_of;
  std::vector<std::size_t> out;
  CayleyTable moved(go, std::vector<std::size_t>(no));
  for (const auto& b : list) {
    if (!(b.acting == list.front().acting) || !(b.carrier == list.front().carrier))
      throw ShapeError("iso_classes: all bracoids must share their groups");
    CayleyTable best;
    for (const auto& alpha : aut_g)
      for (const auto& beta : aut_n) {
        for (std::size_t x = 0; x < go; ++x)
          for (std::size_t m = 0; m < no; ++m) moved[alpha[x]][beta[m]] = beta[b.action.table[x][m]];
        if (best.empty() || moved < best) best = moved;
      }
    auto [it, inserted] = class_of.emplace(std::move(best), class_of.size());
    out.push_back(it->second);
  }
  return out;
}

}  // namespace bracoid
