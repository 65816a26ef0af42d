#pragma once

#include <memory>

#include "bracoid/hopf.hpp"
#include "bracoid/report.hpp"

namespace bracoid {

/// Hopf algebras H and B with an action phi: H (x) B -> B.
///
/// Nothing beyond shapes is validated on construction; check_bracoid is the
/// contract. The derived maps are computed on first use and cached; copies
/// share the cache, which is safe because the value never changes.
class HopfBracoid {
 public:
  HopfBracoid(HopfAlgebraData acting, HopfAlgebraData carrier, LinMap action);

  [[nodiscard]] const HopfAlgebraData& acting() const { return acting_; }
  [[nodiscard]] const HopfAlgebraData& carrier() const { return carrier_; }
  [[nodiscard]] const LinMap& action() const { return action_; }
  [[nodiscard]] std::size_t h_dim() const { return acting_.dim(); }
  [[nodiscard]] std::size_t b_dim() const { return carrier_.dim(); }

  /// phi o (H (x) eta_B): H -> B.
  [[nodiscard]] const LinMap& unit_map() const;
  /// mu_B o ((lambda_B o u) (x) phi) o (delta_H (x) B).
  [[nodiscard]] const LinMap& twisted_action() const;
  /// mu_B o (phi (x) (lambda_B o u)) o (H (x) c_{H,B}) o (delta_H (x) B).
  [[nodiscard]] const LinMap& right_twisted_action() const;

  friend bool operator==(const HopfBracoid& a, const HopfBracoid& b) {
    return a.acting_ == b.acting_ && a.carrier_ == b.carrier_ && a.action_ == b.action_;
  }

 private:
  struct Cache;

  HopfAlgebraData acting_;
  HopfAlgebraData carrier_;
  LinMap action_;
  std::shared_ptr<Cache> cache_;
};

struct BracoidMorphism {
  LinMap acting_map;   // H -> H'
  LinMap carrier_map;  // B -> B'

  friend bool operator==(const BracoidMorphism&, const BracoidMorphism&) = default;
};

inline const LinMap& action_unit(const HopfBracoid& b) { return b.unit_map(); }
inline const LinMap& phi_cap(const HopfBracoid& b) { return b.twisted_action(); }
inline const LinMap& phi_prime(const HopfBracoid& b) { return b.right_twisted_action(); }

/// Hopf axioms of both algebras, module axioms, the bracoid compatibility law
/// and its right-twisted form. The two forms are the same composite up to
/// coassociativity of H, so whenever H is a coalgebra their verdicts must
/// agree; disagreement throws KernelBug.
Report check_bracoid(const HopfBracoid& b);

/// Whether phi preserves counit and coproduct.
bool is_action_coalgebra_morphism(const HopfBracoid& b);
Report action_coalgebra_report(const HopfBracoid& b);

/// phi = mu_B (u (x) Phi) (delta_H (x) B), plus u eta_H = eta_B and
/// phi (H (x) u) = u mu_H. Requires check_bracoid to pass or phi to be a
/// coalgebra morphism.
Report reconstruct_action_check(const HopfBracoid& b);
/// u preserves coproduct and counit. Requires phi to be a coalgebra morphism.
Report u_coalgebra_check(const HopfBracoid& b);
/// Phi (H (x) lambda_B) = mu_B ((lambda_B phi) (x) u) (H (x) c) (delta_H (x) B) and
/// lambda_B phi (H (x) u) = mu_B (Phi (x) B) (H (x) ((lambda (x) lambda)(u (x) u) c)) (delta_H (x) H).
Report antipode_twist_check(const HopfBracoid& b);
/// (B, Phi) and (B, Phi') are H-module algebras.
Report module_algebra_suite(const HopfBracoid& b);
/// (Phi (x) H)(H (x) c)((c delta_H) (x) B) = (Phi (x) H)(H (x) c)(delta_H (x) B).
bool cocomm_class_check(const HopfBracoid& b);
/// The same condition with Phi' in place of Phi.
bool right_cocomm_class_check(const HopfBracoid& b);
/// Phi is a coalgebra morphism when the cocommutativity class condition holds;
/// Phi' is one when H is cocommutative. Clauses without their hypothesis are
/// reported as skipped.
Report phi_coalgebra_checks(const HopfBracoid& b);

/// check_bracoid followed by every theorem whose hypotheses hold.
Report bracoid_full_suite(const HopfBracoid& b);

/// (H, B with mu_B o c, phi). Refuses unless H is cocommutative and either
/// lambda_B is an involution or B is cocommutative.
HopfBracoid opposite_bracoid(const HopfBracoid& b);

/// The tensor product bracoid over H (x) A acting on B (x) D. Asserts that it
/// is a bracoid and that u and Phi factor.
HopfBracoid tensor_bracoid(const HopfBracoid& b1, const HopfBracoid& b2);
BracoidMorphism tensor_morphism(const BracoidMorphism& m1, const BracoidMorphism& m2);
/// (c_{H,A}, c_{B,D}) from b1 (x) b2 to b2 (x) b1.
BracoidMorphism symmetry_morphism(const HopfBracoid& b1, const HopfBracoid& b2);
/// (K, K, id), the unit for tensor_bracoid.
HopfBracoid unit_bracoid();
BracoidMorphism identity_morphism(const HopfBracoid& b);

/// Hopf morphism axioms for both maps and g phi = phi' (f (x) g).
Report check_bracoid_morphism(const HopfBracoid& source, const HopfBracoid& target, const BracoidMorphism& m);

}  // namespace bracoid
