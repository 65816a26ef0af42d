#pragma once

#include "bracoid/bracoid.hpp"
#include "bracoid/hopf.hpp"

namespace bracoid {

/// gamma: H (x) B -> B and pi: H -> B.
struct Cocycle {
  HopfAlgebraData acting;
  HopfAlgebraData carrier;
  LinMap gamma;
  LinMap pi;

  friend bool operator==(const Cocycle& a, const Cocycle& b) {
    return a.acting == b.acting && a.carrier == b.carrier && a.gamma == b.gamma && a.pi == b.pi;
  }
};

void validate_shape(const Cocycle& c);

/// Hopf axioms of H and B, gamma a module algebra action, pi a coalgebra
/// morphism, and mu_B (pi (x) gamma) (delta_H (x) pi) = pi mu_H. When all of
/// that holds, pi eta_H = eta_B is asserted.
Report check_cocycle(const Cocycle& c);

/// mu_B (pi (x) gamma) (delta_H (x) B).
LinMap cocycle_action(const Cocycle& c);

/// (H, B, psi). Asserts the result is a bracoid whose unit map is pi and
/// whose twisted action is gamma.
HopfBracoid functor_F(const Cocycle& c);
/// (H, B, Phi, u) of a bracoid whose action is a coalgebra morphism. Asserts
/// the result is a cocycle.
Cocycle functor_Gc(const HopfBracoid& b);

/// (gamma (x) H)(H (x) c)((c delta_H) (x) B) = (gamma (x) H)(H (x) c)(delta_H (x) B).
bool star_condition(const Cocycle& c);
/// psi is a coalgebra morphism; requires gamma to be a coalgebra morphism and
/// the star condition.
Report psi_coalgebra_check(const Cocycle& c);

/// Gc(F(c)) == c for c with coalgebraic gamma and the star condition.
Report cocycle_roundtrip(const Cocycle& c);
/// F(Gc(b)) == b for b with coalgebraic action in the cocommutativity class.
Report bracoid_roundtrip(const HopfBracoid& b);
Report roundtrip_suite(const Cocycle& c, const HopfBracoid& b);

/// The brace (B, B_pi) with product pi mu_H (pi^-1 (x) pi^-1) and antipode
/// pi lambda_H pi^-1 on the second structure. Refuses singular pi. Asserts the
/// brace axioms and that (pi, id_B) is a bracoid morphism F(c) -> T(result).
HopfBrace invertible_to_brace(const Cocycle& c);

/// check_cocycle plus every theorem whose hypotheses hold.
Report cocycle_full_suite(const Cocycle& c);

}  // namespace bracoid
