#pragma once

#include <span>
#include <vector>

#include "bracoid/bracoid.hpp"
#include "bracoid/groups.hpp"
#include "bracoid/hopf.hpp"

namespace bracoid {

/// K[G]: product from the Cayley table, diagonal coproduct, counit 1,
/// antipode from inverses.
HopfAlgebraData linearize_group(const FiniteGroup& g);
/// K[f] for a map of finite sets.
LinMap linearize_map(const IndexMap& f, std::size_t target_size);

/// The basis vectors of host that are group-like, with the group they form.
/// group element k is basis vector members[k].
struct GroupLikeSet {
  std::vector<std::size_t> members;
  FiniteGroup group;

  [[nodiscard]] bool covers(std::size_t dim) const { return members.size() == dim; }
};

/// Only basis vectors are tested. Throws PreconditionError ("non-pointed
/// presentation") when the group-like basis vectors are not closed under the
/// product and antipode or the unit is not among them.
GroupLikeSet basis_grouplikes(const HopfAlgebraData& h);
/// delta(v) = v (x) v and eps(v) = 1 for an arbitrary vector.
bool is_grouplike(const HopfAlgebraData& h, std::span<const Scalar> v);

/// The linearization (K[G], K[N], linear extension of the action), built
/// without checking the input.
HopfBracoid linearize_gskb(const GeneralizedSkewBracoid& b);
/// linearize_gskb after check_gskb; refuses invalid input.
HopfBracoid functor_P(const GeneralizedSkewBracoid& b);
BracoidMorphism functor_P(const GskbMorphism& m, const GeneralizedSkewBracoid& source,
                          const GeneralizedSkewBracoid& target);

/// Group-like elements of H and B with the restricted action. Refuses when
/// the action is not a coalgebra morphism or leaves the group-like basis.
GeneralizedSkewBracoid functor_R(const HopfBracoid& b);
GskbMorphism functor_R(const BracoidMorphism& m, const HopfBracoid& source, const HopfBracoid& target);

/// The adjunction bijection: a bracoid morphism P(source) -> target is sent
/// to its restriction source -> R(target). Asserts the result is a morphism
/// and that adjunction_inverse recovers m.
GskbMorphism adjunction_gamma(const GeneralizedSkewBracoid& source, const HopfBracoid& target,
                              const BracoidMorphism& m);
/// Linear extension of a morphism source -> R(target), followed by the
/// inclusion of group-likes.
BracoidMorphism adjunction_inverse(const GeneralizedSkewBracoid& source, const HopfBracoid& target,
                                   const GskbMorphism& m);

/// Requires every basis vector of H and B to be group-like and asserts
/// P(R(b)) == b.
Report counit_identity_check(const HopfBracoid& b);

/// (H_2, H_1, mu^2).
HopfBracoid functor_T(const HopfBrace& br);
/// (H_2, H_1, Gamma); asserts that the twisted action of the result is Gamma.
HopfBracoid functor_Tprime(const HopfBrace& br);
/// Both functors send a brace morphism f to (f, f).
BracoidMorphism brace_morphism_image(const LinMap& f);

}  // namespace bracoid
