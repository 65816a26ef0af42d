#include "bracoid/catalog.hpp"

#include <algorithm>

#include "bracoid/errors.hpp"
#include "bracoid/functors.hpp"

namespace bracoid {

HopfAlgebraData sweedler_hopf() {
  // Basis 0 = 1, 1 = g, 2 = x, 3 = gx.
  std::vector<LinMap::Entry> mult;
  auto prod = [&](std::size_t a, std::size_t b, std::size_t c, std::int64_t s) { mult.push_back({c, a * 4 + b, s}); };
  for (std::size_t a = 0; a < 4; ++a) {
    prod(0, a, a, 1);
    if (a != 0) prod(a, 0, a, 1);
  }
  prod(1, 1, 0, 1);
  prod(1, 2, 3, 1);
  prod(1, 3, 2, 1);
  prod(2, 1, 3, -1);
  prod(3, 1, 2, -1);
  std::vector<LinMap::Entry> comult{
      {0 * 4 + 0, 0, 1}, {1 * 4 + 1, 1, 1}, {2 * 4 + 0, 2, 1}, {1 * 4 + 2, 2, 1}, {3 * 4 + 1, 3, 1}, {0 * 4 + 3, 3, 1},
  };
  HopfAlgebraData h;
  h.algebra = {4, LinMap(1, 4, {{0, 0, 1}}), LinMap(16, 4, mult)};
  h.coalgebra = {4, LinMap(4, 1, {{0, 0, 1}, {0, 1, 1}}), LinMap(4, 16, comult)};
  h.antipode = LinMap(4, 4, {{0, 0, 1}, {1, 1, 1}, {3, 2, -1}, {2, 3, 1}});
  return h;
}

HopfBrace trivial_brace(const FiniteGroup& g) {
  const HopfAlgebraData k = linearize_group(g);
  return HopfBrace{k.coalgebra, k.algebra, k.antipode, k.algebra, k.antipode};
}

HopfBrace opposite_brace(const FiniteGroup& g) {
  HopfBrace br = trivial_brace(g);
  br.second.mult = compose(br.second.mult, flip(g.order(), g.order()));
  return br;
}

GeneralizedSkewBracoid left_multiplication_gskb(const FiniteGroup& g) {
  return GeneralizedSkewBracoid{g, g, ActionTable{g.order(), g.order(), g.table()}};
}

HopfBracoid left_multiplication_bracoid(const HopfAlgebraData& h) { return HopfBracoid(h, h, h.mult()); }

HopfBracoid trivial_action_bracoid(const HopfAlgebraData& h, const HopfAlgebraData& b) {
  return HopfBracoid(h, b, tensor(h.counit(), id(b.dim())));
}

Cocycle trivial_cocycle(const HopfAlgebraData& h) {
  return Cocycle{h, h, tensor(h.counit(), id(h.dim())), id(h.dim())};
}

Cocycle brace_cocycle(const HopfBrace& br) {
  return Cocycle{br.second_hopf(), br.first_hopf(), brace_twisted_action(br), id(br.dim())};
}

std::vector<IndexMap> crossed_homomorphisms(const FiniteGroup& g, const FiniteGroup& a, const ActionTable& action) {
  const auto gens = generators(g);
  std::vector<IndexMap> out;
  std::vector<std::size_t> choice(gens.size(), 0);
  IndexMap p(g.order());
  std::vector<char> known(g.order());
  while (true) {
    std::fill(known.begin(), known.end(), 0);
    p[g.unit()] = a.unit();
    known[g.unit()] = 1;
    std::vector<std::size_t> queue{g.unit()};
    bool ok = true;
    for (std::size_t q = 0; q < queue.size() && ok; ++q) {
      const std::size_t x = queue[q];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const std::size_t y = g.mul(x, gens[k]);
        const std::size_t value = a.mul(p[x], action.table[x][choice[k]]);
        if (!known[y]) {
          known[y] = 1;
          p[y] = value;
          queue.push_back(y);
        } else if (p[y] != value) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(p);
    std::size_t k = 0;
    while (k < gens.size() && ++choice[k] == a.order()) choice[k++] = 0;
    if (k == gens.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Cocycle crossed_homomorphism_cocycle(const FiniteGroup& g, const FiniteGroup& a, const ActionTable& action,
                                     const IndexMap& p) {
  const HopfBracoid lin = linearize_gskb(GeneralizedSkewBracoid{g, a, action});
  return Cocycle{lin.acting(), lin.carrier(), lin.action(), linearize_map(p, a.order())};
}

}  // namespace bracoid
