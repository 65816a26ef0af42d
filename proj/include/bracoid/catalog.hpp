#pragma once

#include <vector>

#include "bracoid/bracoid.hpp"
#include "bracoid/cocycle.hpp"
#include "bracoid/groups.hpp"
#include "bracoid/hopf.hpp"

namespace bracoid {

/// Sweedler's 4-dimensional Hopf algebra on the basis 1, g, x, gx with
/// g^2 = 1, x^2 = 0, xg = -gx, delta(x) = x (x) 1 + g (x) x.
HopfAlgebraData sweedler_hopf();

/// K[G] twice.
HopfBrace trivial_brace(const FiniteGroup& g);
/// K[G] with second product g o h = h g.
HopfBrace opposite_brace(const FiniteGroup& g);

/// G acting on itself by left multiplication.
GeneralizedSkewBracoid left_multiplication_gskb(const FiniteGroup& g);
/// (H, H, mu_H).
HopfBracoid left_multiplication_bracoid(const HopfAlgebraData& h);
/// (H, B, eps_H (x) id_B).
HopfBracoid trivial_action_bracoid(const HopfAlgebraData& h, const HopfAlgebraData& b);

/// (H, H, eps (x) id, id).
Cocycle trivial_cocycle(const HopfAlgebraData& h);
/// (H_2, H_1, Gamma, id) for a brace.
Cocycle brace_cocycle(const HopfBrace& br);

/// Maps p: G -> A with p(x y) = p(x) (x . p(y)), for an action of G on A by
/// automorphisms given as a table. Sorted.
std::vector<IndexMap> crossed_homomorphisms(const FiniteGroup& g, const FiniteGroup& a, const ActionTable& action);
/// Linearization: gamma from the action, pi = K[p].
Cocycle crossed_homomorphism_cocycle(const FiniteGroup& g, const FiniteGroup& a, const ActionTable& action,
                                     const IndexMap& p);

}  // namespace bracoid
