#include "oracle.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

using bracoid::LinMap;

std::vector<Vec> columns(const LinMap& f) {
  std::vector<Vec> out(f.dom_dim(), Vec(f.cod_dim(), 0));
  for (const auto& e : f.entries()) out[e.col][e.row] = e.value.to_mpq();
  return out;
}

Dense from_data(const bracoid::HopfAlgebraData& h) {
  Dense d;
  d.n = h.dim();
  d.unit = columns(h.unit())[0];
  d.mul = columns(h.mult());
  auto eps = columns(h.counit());
  d.counit.resize(d.n);
  for (std::size_t i = 0; i < d.n; ++i) d.counit[i] = eps[i][0];
  d.comult = columns(h.comult());
  d.antipode = columns(h.antipode);
  return d;
}

DenseAction from_action(std::size_t n, std::size_t m, const LinMap& action) {
  return DenseAction{n, m, columns(action)};
}

Dense group_algebra(const Table& t, std::size_t unit) {
  Dense d;
  d.n = t.size();
  d.unit = basis(d.n, unit);
  d.counit.assign(d.n, 1);
  for (std::size_t i = 0; i < d.n; ++i) {
    for (std::size_t j = 0; j < d.n; ++j) d.mul.push_back(basis(d.n, t[i][j]));
    Vec c(d.n * d.n, 0);
    c[i * d.n + i] = 1;
    d.comult.push_back(c);
    d.antipode.push_back(basis(d.n, inverse_of(t, unit, i)));
  }
  return d;
}

Vec basis(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

Vec mul(const Dense& h, const Vec& a, const Vec& b) {
  Vec out(h.n, 0);
  for (std::size_t i = 0; i < h.n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < h.n; ++j) {
      if (b[j] == 0) continue;
      mpq_class c = a[i] * b[j];
      const Vec& p = h.mul[i * h.n + j];
      for (std::size_t k = 0; k < h.n; ++k) out[k] += c * p[k];
    }
  }
  return out;
}

Vec act(const DenseAction& a, const Vec& h, const Vec& b) {
  Vec out(a.m, 0);
  for (std::size_t i = 0; i < a.n; ++i) {
    if (h[i] == 0) continue;
    for (std::size_t j = 0; j < a.m; ++j) {
      if (b[j] == 0) continue;
      mpq_class c = h[i] * b[j];
      const Vec& p = a.act[i * a.m + j];
      for (std::size_t k = 0; k < a.m; ++k) out[k] += c * p[k];
    }
  }
  return out;
}

Vec apply_cols(const std::vector<Vec>& cols, const Vec& v) {
  Vec out(cols.empty() ? 0 : cols[0].size(), 0);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += v[i] * cols[i][k];
  }
  return out;
}

mpq_class counit(const Dense& h, const Vec& a) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < h.n; ++i) s += a[i] * h.counit[i];
  return s;
}

namespace {

Vec scaled(const Vec& v, const mpq_class& c) {
  Vec out(v);
  for (auto& x : out) x *= c;
  return out;
}

void add_to(Vec& acc, const Vec& v) {
  for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += v[k];
}

// Flat n*n coefficients of delta(a).
Vec comult(const Dense& h, const Vec& a) {
  Vec out(h.n * h.n, 0);
  for (std::size_t i = 0; i < h.n; ++i)
    if (a[i] != 0) add_to(out, scaled(h.comult[i], a[i]));
  return out;
}

// Sum over p, q of coef(p, q) * f(e_p, e_q), the Sweedler sum for h.
template <typename F>
Vec sweedler(const Dense& h, std::size_t i, std::size_t out_dim, F&& f) {
  Vec out(out_dim, 0);
  for (std::size_t p = 0; p < h.n; ++p)
    for (std::size_t q = 0; q < h.n; ++q) {
      const mpq_class& c = h.comult[i][p * h.n + q];
      if (c != 0) add_to(out, scaled(f(p, q), c));
    }
  return out;
}

}  // namespace

bool hopf_holds(const Dense& h) {
  const std::size_t n = h.n;
  for (std::size_t i = 0; i < n; ++i) {
    Vec ei = basis(n, i);
    if (mul(h, h.unit, ei) != ei || mul(h, ei, h.unit) != ei) return false;
    for (std::size_t j = 0; j < n; ++j) {
      Vec ej = basis(n, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec ek = basis(n, k);
        if (mul(h, mul(h, ei, ej), ek) != mul(h, ei, mul(h, ej, ek))) return false;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vec left(n, 0), right(n, 0);
    std::vector<mpq_class> ll(n * n * n, 0), rr(n * n * n, 0);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        const mpq_class& c = h.comult[i][p * n + q];
        if (c == 0) continue;
        left[q] += c * h.counit[p];
        right[p] += c * h.counit[q];
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t s = 0; s < n; ++s) {
            ll[(r * n + s) * n + q] += c * h.comult[p][r * n + s];
            rr[(p * n + r) * n + s] += c * h.comult[q][r * n + s];
          }
      }
    if (left != basis(n, i) || right != basis(n, i) || ll != rr) return false;
  }
  if (counit(h, h.unit) != 1) return false;
  {
    Vec d1 = comult(h, h.unit);
    Vec expect(n * n, 0);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) expect[p * n + q] = h.unit[p] * h.unit[q];
    if (d1 != expect) return false;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec prod = mul(h, basis(n, i), basis(n, j));
      if (counit(h, prod) != h.counit[i] * h.counit[j]) return false;
      Vec lhs = comult(h, prod);
      Vec rhs(n * n, 0);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          const mpq_class& c = h.comult[i][p * n + q];
          if (c == 0) continue;
          for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < n; ++s) {
              const mpq_class& d = h.comult[j][r * n + s];
              if (d == 0) continue;
              Vec a = mul(h, basis(n, p), basis(n, r));
              Vec b = mul(h, basis(n, q), basis(n, s));
              for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y) rhs[x * n + y] += c * d * a[x] * b[y];
            }
        }
      if (lhs != rhs) return false;
    }
  for (std::size_t i = 0; i < n; ++i) {
    Vec expect = scaled(h.unit, h.counit[i]);
    Vec a = sweedler(h, i, n, [&](std::size_t p, std::size_t q) { return mul(h, h.antipode[p], basis(n, q)); });
    Vec b = sweedler(h, i, n, [&](std::size_t p, std::size_t q) { return mul(h, basis(n, p), h.antipode[q]); });
    if (a != expect || b != expect) return false;
  }
  return true;
}

bool module_holds(const Dense& h, const Dense& b, const DenseAction& a) {
  for (std::size_t y = 0; y < b.n; ++y) {
    Vec ey = basis(b.n, y);
    if (act(a, h.unit, ey) != ey) return false;
    for (std::size_t x = 0; x < h.n; ++x)
      for (std::size_t z = 0; z < h.n; ++z) {
        Vec ex = basis(h.n, x), ez = basis(h.n, z);
        if (act(a, ex, act(a, ez, ey)) != act(a, mul(h, ex, ez), ey)) return false;
      }
  }
  return true;
}

bool module_algebra_holds(const Dense& h, const Dense& b, const DenseAction& a) {
  if (!module_holds(h, b, a)) return false;
  for (std::size_t x = 0; x < h.n; ++x) {
    if (act(a, basis(h.n, x), b.unit) != scaled(b.unit, h.counit[x])) return false;
    for (std::size_t y = 0; y < b.n; ++y)
      for (std::size_t z = 0; z < b.n; ++z) {
        Vec lhs = act(a, basis(h.n, x), mul(b, basis(b.n, y), basis(b.n, z)));
        Vec rhs = sweedler(h, x, b.n, [&](std::size_t p, std::size_t q) {
          return mul(b, act(a, basis(h.n, p), basis(b.n, y)), act(a, basis(h.n, q), basis(b.n, z)));
        });
        if (lhs != rhs) return false;
      }
  }
  return true;
}

bool action_is_coalgebra_map(const Dense& h, const Dense& b, const DenseAction& a) {
  for (std::size_t x = 0; x < h.n; ++x)
    for (std::size_t y = 0; y < b.n; ++y) {
      Vec img = act(a, basis(h.n, x), basis(b.n, y));
      if (counit(b, img) != h.counit[x] * b.counit[y]) return false;
      Vec lhs = comult(b, img);
      Vec rhs(b.n * b.n, 0);
      for (std::size_t p = 0; p < h.n; ++p)
        for (std::size_t q = 0; q < h.n; ++q) {
          const mpq_class& c = h.comult[x][p * h.n + q];
          if (c == 0) continue;
          for (std::size_t r = 0; r < b.n; ++r)
            for (std::size_t s = 0; s < b.n; ++s) {
              const mpq_class& d = b.comult[y][r * b.n + s];
              if (d == 0) continue;
              Vec u = act(a, basis(h.n, p), basis(b.n, r));
              Vec v = act(a, basis(h.n, q), basis(b.n, s));
              for (std::size_t i = 0; i < b.n; ++i)
                for (std::size_t j = 0; j < b.n; ++j) rhs[i * b.n + j] += c * d * u[i] * v[j];
            }
        }
      if (lhs != rhs) return false;
    }
  return true;
}

DenseAction twisted(const Dense& h, const Dense& b, const DenseAction& a) {
  DenseAction out{h.n, b.n, {}};
  for (std::size_t x = 0; x < h.n; ++x)
    for (std::size_t y = 0; y < b.n; ++y)
      out.act.push_back(sweedler(h, x, b.n, [&](std::size_t p, std::size_t q) {
        Vec u = act(a, basis(h.n, p), b.unit);
        return mul(b, apply_cols(b.antipode, u), act(a, basis(h.n, q), basis(b.n, y)));
      }));
  return out;
}

bool bracoid_law_holds(const Dense& h, const Dense& b, const DenseAction& a) {
  DenseAction tw = twisted(h, b, a);
  for (std::size_t x = 0; x < h.n; ++x)
    for (std::size_t y = 0; y < b.n; ++y)
      for (std::size_t z = 0; z < b.n; ++z) {
        Vec lhs = act(a, basis(h.n, x), mul(b, basis(b.n, y), basis(b.n, z)));
        Vec rhs = sweedler(h, x, b.n, [&](std::size_t p, std::size_t q) {
          return mul(b, act(a, basis(h.n, p), basis(b.n, y)), act(tw, basis(h.n, q), basis(b.n, z)));
        });
        if (lhs != rhs) return false;
      }
  return true;
}

bool cocycle_law_holds(const Dense& h, const Dense& b, const DenseAction& gamma, const std::vector<Vec>& pi) {
  for (std::size_t x = 0; x < h.n; ++x)
    for (std::size_t y = 0; y < h.n; ++y) {
      Vec lhs = sweedler(h, x, b.n, [&](std::size_t p, std::size_t q) {
        return mul(b, pi[p], act(gamma, basis(h.n, q), pi[y]));
      });
      Vec rhs = apply_cols(pi, mul(h, basis(h.n, x), basis(h.n, y)));
      if (lhs != rhs) return false;
    }
  return true;
}

bool group_holds(const Table& t, std::size_t unit) {
  const std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (t[unit][a] != a || t[a][unit] != a) return false;
    bool has_inverse = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (t[a][b] == unit && t[b][a] == unit) has_inverse = true;
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
    }
    if (!has_inverse) return false;
  }
  return true;
}

std::size_t inverse_of(const Table& t, std::size_t unit, std::size_t a) {
  for (std::size_t b = 0; b < t.size(); ++b)
    if (t[a][b] == unit) return b;
  return t.size();
}

bool gskb_holds(const Table& g, std::size_t gu, const Table& n, std::size_t nu, const Table& action) {
  const std::size_t go = g.size(), no = n.size();
  for (std::size_t m = 0; m < no; ++m)
    if (action[gu][m] != m) return false;
  for (std::size_t x = 0; x < go; ++x) {
    std::vector<char> hit(no, 0);
    for (std::size_t m = 0; m < no; ++m) hit[action[x][m]] = 1;
    if (std::count(hit.begin(), hit.end(), 1) != static_cast<long>(no)) return false;
    for (std::size_t y = 0; y < go; ++y)
      for (std::size_t m = 0; m < no; ++m)
        if (action[x][action[y][m]] != action[g[x][y]][m]) return false;
    std::size_t shift = inverse_of(n, nu, action[x][nu]);
    for (std::size_t m = 0; m < no; ++m)
      for (std::size_t k = 0; k < no; ++k)
        if (action[x][n[m][k]] != n[n[action[x][m]][shift]][action[x][k]]) return false;
  }
  return true;
}

std::size_t count_gskb(const Table& g, std::size_t gu, const Table& n, std::size_t nu) {
  const std::size_t go = g.size(), no = n.size();
  std::size_t count = 0;
  if (go * no <= 9) {
    std::vector<std::size_t> flat(go * no, 0);
    Table action(go, std::vector<std::size_t>(no));
    while (true) {
      for (std::size_t i = 0; i < flat.size(); ++i) action[i / no][i % no] = flat[i];
      if (gskb_holds(g, gu, n, nu, action)) ++count;
      std::size_t i = 0;
      while (i < flat.size() && ++flat[i] == no) flat[i++] = 0;
      if (i == flat.size()) break;
    }
    return count;
  }
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(no);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::size_t> choice(go, 0);
  Table action(go);
  while (true) {
    for (std::size_t x = 0; x < go; ++x) action[x] = perms[choice[x]];
    if (gskb_holds(g, gu, n, nu, action)) ++count;
    std::size_t i = 0;
    while (i < go && ++choice[i] == perms.size()) choice[i++] = 0;
    if (i == go) break;
  }
  return count;
}

}  // namespace oracle
