#pragma once

#include <cstddef>
#include <span>

#include "bracoid/linmap.hpp"
#include "bracoid/report.hpp"

namespace bracoid {

// Structures are plain data. Nothing is validated on construction so that
// broken instances can be represented; the check_* functions are the
// contracts.

struct AlgebraData {
  std::size_t dim = 0;
  LinMap unit;  // K -> A
  LinMap mult;  // A (x) A -> A
};

struct CoalgebraData {
  std::size_t dim = 0;
  LinMap counit;  // C -> K
  LinMap comult;  // C -> C (x) C
};

struct HopfAlgebraData {
  AlgebraData algebra;
  CoalgebraData coalgebra;
  LinMap antipode;

  [[nodiscard]] std::size_t dim() const { return algebra.dim; }
  [[nodiscard]] const LinMap& unit() const { return algebra.unit; }
  [[nodiscard]] const LinMap& mult() const { return algebra.mult; }
  [[nodiscard]] const LinMap& counit() const { return coalgebra.counit; }
  [[nodiscard]] const LinMap& comult() const { return coalgebra.comult; }

  friend bool operator==(const HopfAlgebraData& a, const HopfAlgebraData& b);
};

/// One coalgebra carrying two Hopf structures.
struct HopfBrace {
  CoalgebraData coalgebra;
  AlgebraData first;
  LinMap first_antipode;
  AlgebraData second;
  LinMap second_antipode;

  [[nodiscard]] std::size_t dim() const { return coalgebra.dim; }
  [[nodiscard]] HopfAlgebraData first_hopf() const { return {first, coalgebra, first_antipode}; }
  [[nodiscard]] HopfAlgebraData second_hopf() const { return {second, coalgebra, second_antipode}; }

  friend bool operator==(const HopfBrace& a, const HopfBrace& b);
};

/// A left action of a Hopf algebra on a vector space of dimension carrier_dim.
struct ModuleAction {
  HopfAlgebraData acting;
  std::size_t carrier_dim = 0;
  LinMap action;  // X (x) M -> M
};

/// Throws ShapeError unless every map has the dimensions its role requires.
void validate_shape(const AlgebraData& a);
void validate_shape(const CoalgebraData& c);
void validate_shape(const HopfAlgebraData& h);
void validate_shape(const HopfBrace& b);
void validate_shape(const ModuleAction& m);

Report check_algebra(const AlgebraData& a);
Report check_coalgebra(const CoalgebraData& c);
/// Algebra and coalgebra axioms, bialgebra compatibility, and both antipode
/// identities.
Report check_hopf(const HopfAlgebraData& h);

/// mu_A o (f (x) g) o delta_C.
LinMap convolution(const LinMap& f, const LinMap& g, const CoalgebraData& c, const AlgebraData& a);

bool is_cocommutative(const CoalgebraData& c);
bool is_commutative(const AlgebraData& a);

/// Anti-multiplicativity, anti-comultiplicativity, and unit/counit
/// invariance of the antipode. Throws PreconditionError unless check_hopf
/// passes and KernelBug if any identity fails.
Report antipode_property_suite(const HopfAlgebraData& h);

/// Unit and associativity of the action.
Report check_module(const ModuleAction& m);
/// Module axioms plus: the unit and multiplication of a are module maps.
Report check_module_algebra(const ModuleAction& m, const AlgebraData& a);
/// Module axioms plus: the counit and comultiplication of c are module maps.
Report check_module_coalgebra(const ModuleAction& m, const CoalgebraData& c);

/// The diagonal action (phi (x) phi) o (X (x) c_{X,M} (x) M) o (delta_X (x) M (x) M)
/// of X on M (x) M.
LinMap diagonal_action(const HopfAlgebraData& acting, std::size_t carrier_dim, const LinMap& action);

/// Whether f: X -> Y preserves unit, product, counit and coproduct.
Report check_hopf_morphism(const LinMap& f, const HopfAlgebraData& source, const HopfAlgebraData& target);

/// delta_Y o phi = (phi (x) phi) o (X (x) c (x) M) o (delta_X (x) delta_M) and
/// eps_M o phi = eps_X (x) eps_M, for phi: X (x) M -> M.
Report check_coalgebra_morphism_of_action(const CoalgebraData& acting, const CoalgebraData& carrier,
                                          const LinMap& action, std::string_view label);

/// Whether f: C -> D preserves counit and comultiplication.
Report check_coalgebra_morphism(const LinMap& f, const CoalgebraData& source, const CoalgebraData& target,
                                std::string_view label);

/// The Hopf algebra H (x) A with the symmetric tensor structure.
HopfAlgebraData tensor_product(const HopfAlgebraData& h, const HopfAlgebraData& a);

/// The one-dimensional Hopf algebra K.
HopfAlgebraData unit_hopf();

/// Brace axioms: both Hopf structures, equal units, the brace compatibility
/// law; when those hold, also the two derived identities for the twisted
/// action (a failure there throws KernelBug).
Report check_hopf_brace(const HopfBrace& b);

/// mu^1 o (lambda^1 (x) mu^2) o (delta (x) H). Requires check_hopf_brace to
/// pass (PreconditionError otherwise) and asserts the result is a module
/// algebra action of the second structure on the first.
LinMap brace_twisted_action(const HopfBrace& b);
/// Same composite without preconditions or assertions.
LinMap brace_twisted_action_raw(const HopfBrace& b);

}  // namespace bracoid
