#include "bracoid/functors.hpp"

#include <string>

#include "bracoid/errors.hpp"

namespace bracoid {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

std::optional<std::size_t> unit_column(const LinMap& unit) { return unit.basis_image(0); }

void add_theorems(Report& r, const Report& sub) {
  for (const auto& c : sub.results()) require_theorem(r, c);
}

}  // namespace

HopfAlgebraData linearize_group(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> prod(n * n), diag(n), inv(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) prod[a * n + b] = g.mul(a, b);
    diag[a] = a * n + a;
    inv[a] = g.inv(a);
  }
  std::vector<std::size_t> unit{g.unit()};
  HopfAlgebraData h;
  h.algebra = {n, LinMap::from_function(1, n, unit), LinMap::from_function(n * n, n, prod)};
  h.coalgebra = {n, LinMap::from_function(n, 1, std::vector<std::size_t>(n, 0)), LinMap::from_function(n, n * n, diag)};
  h.antipode = LinMap::from_function(n, n, inv);
  return h;
}

LinMap linearize_map(const IndexMap& f, std::size_t target_size) {
  return LinMap::from_function(f.size(), target_size, f);
}

bool is_grouplike(const HopfAlgebraData& h, std::span<const Scalar> v) {
  validate_shape(h);
  const std::size_t n = h.dim();
  if (v.size() != n) throw ShapeError("is_grouplike: vector has length " + std::to_string(v.size()) + ", expected " + std::to_string(n));
  if (apply(h.counit(), v)[0] != Scalar(1)) return false;
  const auto d = apply(h.comult(), v);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d[i * n + j] != v[i] * v[j]) return false;
  return true;
}

GroupLikeSet basis_grouplikes(const HopfAlgebraData& h) {
  validate_shape(h);
  const std::size_t n = h.dim();
  std::vector<std::size_t> members;
  std::vector<std::size_t> position(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (h.comult().basis_image(i) == std::optional<std::size_t>(i * n + i) && h.counit().at(0, i).is_one()) {
      position[i] = members.size();
      members.push_back(i);
    }
  }
  const auto unit = unit_column(h.unit());
  if (!unit || position[*unit] == n) throw PreconditionError("non-pointed presentation: the unit is not a group-like basis vector");
  CayleyTable table(members.size(), std::vector<std::size_t>(members.size()));
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = 0; b < members.size(); ++b) {
      auto c = h.mult().basis_image(members[a] * n + members[b]);
      if (!c || position[*c] == n) {
        throw PreconditionError("non-pointed presentation: product of group-like basis vectors " + std::to_string(members[a]) +
                                " and " + std::to_string(members[b]) + " is not a group-like basis vector");
      }
      table[a][b] = position[*c];
    }
    auto s = h.antipode.basis_image(members[a]);
    if (!s || position[*s] == n) {
      throw PreconditionError("non-pointed presentation: antipode of group-like basis vector " + std::to_string(members[a]) +
                              " is not a group-like basis vector");
    }
  }
  if (!validate_group(table, position[*unit]).passed()) {
    throw PreconditionError("non-pointed presentation: group-like basis vectors do not form a group");
  }
  return GroupLikeSet{std::move(members), FiniteGroup(std::move(table), position[*unit])};
}

HopfBracoid linearize_gskb(const GeneralizedSkewBracoid& b) {
  const std::size_t g = b.acting.order();
  const std::size_t n = b.carrier.order();
  if (b.action.table.size() != g) throw ShapeError("action table has wrong number of rows");
  std::vector<std::size_t> images(g * n);
  for (std::size_t x = 0; x < g; ++x) {
    if (b.action.table[x].size() != n) throw ShapeError("action table row has wrong length");
    for (std::size_t m = 0; m < n; ++m) images[x * n + m] = b.action.table[x][m];
  }
  return HopfBracoid(linearize_group(b.acting), linearize_group(b.carrier), LinMap::from_function(g * n, n, images));
}

HopfBracoid functor_P(const GeneralizedSkewBracoid& b) {
  require(check_gskb(b).passed(), "P: input is not a generalized skew bracoid");
  return linearize_gskb(b);
}

BracoidMorphism functor_P(const GskbMorphism& m, const GeneralizedSkewBracoid& source,
                          const GeneralizedSkewBracoid& target) {
  require(check_gskb_morphism(source, target, m).passed(), "P: input is not a skew bracoid morphism");
  return {linearize_map(m.acting_map, target.acting.order()), linearize_map(m.carrier_map, target.carrier.order())};
}

namespace {

void require_restrictable(const HopfBracoid& b, const std::string& op) {
  require(check_bracoid(b).passed(), op + ": input is not a Hopf bracoid");
  require(is_action_coalgebra_morphism(b), op + ": action is not a coalgebra morphism");
}

IndexMap restrict_map(const LinMap& f, const GroupLikeSet& src, const GroupLikeSet& dst, std::size_t dst_dim,
                      const std::string& what) {
  std::vector<std::size_t> position(dst_dim, dst_dim);
  for (std::size_t k = 0; k < dst.members.size(); ++k) position[dst.members[k]] = k;
  IndexMap out(src.members.size());
  for (std::size_t k = 0; k < src.members.size(); ++k) {
    auto img = f.basis_image(src.members[k]);
    if (!img || position[*img] == dst_dim) {
      throw PreconditionError(what + ": group-like basis vector " + std::to_string(src.members[k]) +
                              " is not sent to a group-like basis vector (not restrictable)");
    }
    out[k] = position[*img];
  }
  return out;
}

}  // namespace

GeneralizedSkewBracoid functor_R(const HopfBracoid& b) {
  require_restrictable(b, "R");
  const GroupLikeSet gh = basis_grouplikes(b.acting());
  const GroupLikeSet gb = basis_grouplikes(b.carrier());
  const std::size_t n = b.b_dim();
  std::vector<std::size_t> position(n, n);
  for (std::size_t k = 0; k < gb.members.size(); ++k) position[gb.members[k]] = k;
  CayleyTable table(gh.members.size(), std::vector<std::size_t>(gb.members.size()));
  for (std::size_t x = 0; x < gh.members.size(); ++x)
    for (std::size_t m = 0; m < gb.members.size(); ++m) {
      auto img = b.action().basis_image(gh.members[x] * n + gb.members[m]);
      if (!img || position[*img] == n) {
        throw PreconditionError("R: action leaves the group-like basis at (" + std::to_string(gh.members[x]) + ", " +
                                std::to_string(gb.members[m]) + ") (not restrictable)");
      }
      table[x][m] = position[*img];
    }
  GeneralizedSkewBracoid out{gh.group, gb.group, ActionTable{gh.members.size(), gb.members.size(), std::move(table)}};
  Report r("R");
  add_theorems(r, check_gskb(out));
  return out;
}

GskbMorphism functor_R(const BracoidMorphism& m, const HopfBracoid& source, const HopfBracoid& target) {
  require(check_bracoid_morphism(source, target, m).passed(), "R: input is not a Hopf bracoid morphism");
  require_restrictable(source, "R");
  require_restrictable(target, "R");
  GskbMorphism out{
      restrict_map(m.acting_map, basis_grouplikes(source.acting()), basis_grouplikes(target.acting()), target.h_dim(),
                   "R: acting map"),
      restrict_map(m.carrier_map, basis_grouplikes(source.carrier()), basis_grouplikes(target.carrier()), target.b_dim(),
                   "R: carrier map")};
  Report r("R on morphisms");
  add_theorems(r, check_gskb_morphism(functor_R(source), functor_R(target), out));
  return out;
}

BracoidMorphism adjunction_inverse(const GeneralizedSkewBracoid& source, const HopfBracoid& target,
                                   const GskbMorphism& m) {
  const GeneralizedSkewBracoid restricted = functor_R(target);
  require(check_gskb_morphism(source, restricted, m).passed(), "adjunction: input is not a morphism into R(target)");
  const GroupLikeSet gh = basis_grouplikes(target.acting());
  const GroupLikeSet gb = basis_grouplikes(target.carrier());
  IndexMap f(m.acting_map.size()), g(m.carrier_map.size());
  for (std::size_t x = 0; x < f.size(); ++x) f[x] = gh.members[m.acting_map[x]];
  for (std::size_t x = 0; x < g.size(); ++x) g[x] = gb.members[m.carrier_map[x]];
  BracoidMorphism out{linearize_map(f, target.h_dim()), linearize_map(g, target.b_dim())};
  Report r("adjunction inverse");
  add_theorems(r, check_bracoid_morphism(functor_P(source), target, out));
  return out;
}

GskbMorphism adjunction_gamma(const GeneralizedSkewBracoid& source, const HopfBracoid& target,
                              const BracoidMorphism& m) {
  const HopfBracoid p = functor_P(source);
  require(check_bracoid_morphism(p, target, m).passed(), "adjunction: input is not a morphism out of P(source)");
  require_restrictable(target, "adjunction");
  const GroupLikeSet gh = basis_grouplikes(target.acting());
  const GroupLikeSet gb = basis_grouplikes(target.carrier());
  const GroupLikeSet sh = basis_grouplikes(p.acting());
  const GroupLikeSet sb = basis_grouplikes(p.carrier());
  GskbMorphism out{restrict_map(m.acting_map, sh, gh, target.h_dim(), "adjunction: acting map"),
                   restrict_map(m.carrier_map, sb, gb, target.b_dim(), "adjunction: carrier map")};
  Report r("adjunction");
  add_theorems(r, check_gskb_morphism(source, functor_R(target), out));
  if (!(adjunction_inverse(source, target, out) == m)) throw KernelBug("adjunction: the bijection does not invert");
  return out;
}

Report counit_identity_check(const HopfBracoid& b) {
  require_restrictable(b, "counit identity");
  require(basis_grouplikes(b.acting()).covers(b.h_dim()),
          "counit identity: H has basis vectors that are not group-like (not pointed cosemisimple)");
  require(basis_grouplikes(b.carrier()).covers(b.b_dim()),
          "counit identity: B has basis vectors that are not group-like (not pointed cosemisimple)");
  Report r("counit identity");
  const HopfBracoid back = functor_P(functor_R(b));
  CheckResult c{"P(R(b)) equals b", back == b ? Status::pass : Status::fail, std::nullopt, {}, true};
  if (c.status == Status::fail) c.witness = Witness{{}, {}, "P(R(b))", "b"};
  require_theorem(r, std::move(c));
  return r;
}

HopfBracoid functor_T(const HopfBrace& br) {
  require(check_hopf_brace(br).passed(), "T: input is not a Hopf brace");
  HopfBracoid out(br.second_hopf(), br.first_hopf(), br.second.mult);
  Report r("T");
  add_theorems(r, check_bracoid(out));
  add_theorems(r, action_coalgebra_report(out));
  return out;
}

HopfBracoid functor_Tprime(const HopfBrace& br) {
  require(check_hopf_brace(br).passed(), "Tprime: input is not a Hopf brace");
  const LinMap gamma = brace_twisted_action(br);
  HopfBracoid out(br.second_hopf(), br.first_hopf(), gamma);
  Report r("Tprime");
  add_theorems(r, check_bracoid(out));
  const std::size_t n = br.dim();
  require_theorem(r, compare_maps("twisted action equals brace twisted action", out.twisted_action(), gamma, {n, n}, {n}));
  return out;
}

BracoidMorphism brace_morphism_image(const LinMap& f) { return {f, f}; }

}  // namespace bracoid
