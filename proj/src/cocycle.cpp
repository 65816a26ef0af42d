#include "bracoid/cocycle.hpp"

#include <string>

#include "bracoid/errors.hpp"
#include "bracoid/functors.hpp"

namespace bracoid {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

void add_theorems(Report& r, const Report& sub) {
  for (const auto& c : sub.results()) require_theorem(r, c);
}

bool gamma_coalgebraic(const Cocycle& c) {
  return check_coalgebra_morphism_of_action(c.acting.coalgebra, c.carrier.coalgebra, c.gamma, "gamma").passed();
}

}  // namespace

void validate_shape(const Cocycle& c) {
  validate_shape(c.acting);
  validate_shape(c.carrier);
  const std::size_t h = c.acting.dim();
  const std::size_t b = c.carrier.dim();
  if (c.gamma.dom_dim() != h * b || c.gamma.cod_dim() != b) throw ShapeError("cocycle action has the wrong shape");
  if (c.pi.dom_dim() != h || c.pi.cod_dim() != b) throw ShapeError("cocycle map has the wrong shape");
}

Report check_cocycle(const Cocycle& c) {
  validate_shape(c);
  const std::size_t h = c.acting.dim();
  const std::size_t n = c.carrier.dim();
  Report r("1-cocycle");
  r.merge(check_hopf(c.acting), "H: ");
  r.merge(check_hopf(c.carrier), "B: ");
  r.merge(check_module_algebra(ModuleAction{c.acting, n, c.gamma}, c.carrier.algebra), "gamma: ");
  r.merge(check_coalgebra_morphism(c.pi, c.acting.coalgebra, c.carrier.coalgebra, "pi"));
  r.add(compare_maps("cocycle condition",
                     compose(c.carrier.mult(), tensor(c.pi, c.gamma), tensor(c.acting.comult(), c.pi)),
                     compose(c.pi, c.acting.mult()), {h, h}, {n}));
  if (r.passed()) {
    require_theorem(r, compare_maps("pi preserves unit", compose(c.pi, c.acting.unit()), c.carrier.unit(), {}, {n}));
  } else {
    r.add(skipped("pi preserves unit", "cocycle axioms fail"));
  }
  return r;
}

LinMap cocycle_action(const Cocycle& c) {
  validate_shape(c);
  return compose(c.carrier.mult(), tensor(c.pi, c.gamma), tensor(c.acting.comult(), id(c.carrier.dim())));
}

HopfBracoid functor_F(const Cocycle& c) {
  require(check_cocycle(c).passed(), "F: input is not a 1-cocycle");
  HopfBracoid out(c.acting, c.carrier, cocycle_action(c));
  const std::size_t h = c.acting.dim();
  const std::size_t n = c.carrier.dim();
  Report r("F");
  add_theorems(r, check_bracoid(out));
  require_theorem(r, compare_maps("unit map equals pi", out.unit_map(), c.pi, {h}, {n}));
  require_theorem(r, compare_maps("twisted action equals gamma", out.twisted_action(), c.gamma, {h, n}, {n}));
  return out;
}

Cocycle functor_Gc(const HopfBracoid& b) {
  require(check_bracoid(b).passed(), "G: input is not a Hopf bracoid");
  require(is_action_coalgebra_morphism(b), "G: action is not a coalgebra morphism");
  Cocycle out{b.acting(), b.carrier(), b.twisted_action(), b.unit_map()};
  Report r("G");
  add_theorems(r, check_cocycle(out));
  return out;
}

bool star_condition(const Cocycle& c) {
  validate_shape(c);
  const std::size_t h = c.acting.dim();
  const std::size_t n = c.carrier.dim();
  const LinMap& delta = c.acting.comult();
  const LinMap prefix = compose(tensor(c.gamma, id(h)), tensor(id(h), flip(h, n)));
  return compose(prefix, tensor(compose(flip(h, h), delta), id(n))) == compose(prefix, tensor(delta, id(n)));
}

Report psi_coalgebra_check(const Cocycle& c) {
  require(check_cocycle(c).passed(), "psi coalgebra check: input is not a 1-cocycle");
  require(gamma_coalgebraic(c), "psi coalgebra check: gamma is not a coalgebra morphism");
  require(star_condition(c), "psi coalgebra check: star condition fails");
  Report r("psi coalgebra morphism");
  add_theorems(r, check_coalgebra_morphism_of_action(c.acting.coalgebra, c.carrier.coalgebra, cocycle_action(c), "psi"));
  return r;
}

Report cocycle_roundtrip(const Cocycle& c) {
  require(check_cocycle(c).passed(), "roundtrip: input is not a 1-cocycle");
  require(gamma_coalgebraic(c), "roundtrip: gamma is not a coalgebra morphism");
  require(star_condition(c), "roundtrip: star condition fails");
  Report r("cocycle roundtrip");
  const Cocycle back = functor_Gc(functor_F(c));
  require_theorem(r, compare_maps("G(F(c)) action equals gamma", back.gamma, c.gamma, {c.acting.dim(), c.carrier.dim()},
                                  {c.carrier.dim()}));
  require_theorem(r, compare_maps("G(F(c)) map equals pi", back.pi, c.pi, {c.acting.dim()}, {c.carrier.dim()}));
  CheckResult same{"G(F(c)) equals c", back == c ? Status::pass : Status::fail, std::nullopt, {}, true};
  require_theorem(r, std::move(same));
  return r;
}

Report bracoid_roundtrip(const HopfBracoid& b) {
  require(check_bracoid(b).passed(), "roundtrip: input is not a Hopf bracoid");
  require(is_action_coalgebra_morphism(b), "roundtrip: action is not a coalgebra morphism");
  require(cocomm_class_check(b), "roundtrip: cocommutativity class condition fails");
  Report r("bracoid roundtrip");
  const HopfBracoid back = functor_F(functor_Gc(b));
  require_theorem(r, compare_maps("F(G(b)) action equals action", back.action(), b.action(), {b.h_dim(), b.b_dim()},
                                  {b.b_dim()}));
  CheckResult same{"F(G(b)) equals b", back == b ? Status::pass : Status::fail, std::nullopt, {}, true};
  require_theorem(r, std::move(same));
  return r;
}

Report roundtrip_suite(const Cocycle& c, const HopfBracoid& b) {
  Report r("roundtrips");
  r.merge(cocycle_roundtrip(c));
  r.merge(bracoid_roundtrip(b));
  return r;
}

HopfBrace invertible_to_brace(const Cocycle& c) {
  require(check_cocycle(c).passed(), "Q: input is not a 1-cocycle");
  const std::size_t h = c.acting.dim();
  const std::size_t n = c.carrier.dim();
  if (h != n) throw PreconditionError("Q: pi is not invertible (it is " + std::to_string(n) + "x" + std::to_string(h) + ")");
  const auto inv = inverse(c.pi);
  if (!inv) {
    throw PreconditionError("Q: pi is not invertible (rank " + std::to_string(rank(c.pi)) + " < " + std::to_string(n) + ")");
  }
  HopfBrace br;
  br.coalgebra = c.carrier.coalgebra;
  br.first = c.carrier.algebra;
  br.first_antipode = c.carrier.antipode;
  br.second = AlgebraData{n, c.carrier.unit(), compose(c.pi, c.acting.mult(), tensor(*inv, *inv))};
  br.second_antipode = compose(c.pi, c.acting.antipode, *inv);
  Report r("Q");
  add_theorems(r, check_hopf_brace(br));
  const HopfBracoid image = functor_F(c);
  const HopfBracoid target = functor_T(br);
  add_theorems(r, check_bracoid_morphism(image, target, BracoidMorphism{c.pi, id(n)}));
  return br;
}

Report cocycle_full_suite(const Cocycle& c) {
  Report r = check_cocycle(c);
  if (!r.passed()) return r;
  const bool coalgebraic = gamma_coalgebraic(c);
  const bool star = star_condition(c);
  if (is_cocommutative(c.acting.coalgebra) && !star) throw KernelBug("cocommutative H but the star condition fails");
  r.add(info("gamma coalgebra morphism", coalgebraic));
  r.add(info("star condition", star));
  const HopfBracoid image = functor_F(c);
  r.merge(bracoid_full_suite(image), "F(c): ");
  if (coalgebraic && star) {
    r.merge(psi_coalgebra_check(c));
    r.merge(cocycle_roundtrip(c));
  } else {
    r.add(skipped("psi coalgebra morphism", "gamma not coalgebraic or star condition fails"));
    r.add(skipped("cocycle roundtrip", "gamma not coalgebraic or star condition fails"));
  }
  if (c.acting.dim() == c.carrier.dim() && inverse(c.pi)) {
    invertible_to_brace(c);
    r.add(CheckResult{"invertible cocycle gives a brace with (pi, id) an isomorphism", Status::pass, std::nullopt, {}, true});
  } else {
    r.add(skipped("invertible cocycle gives a brace with (pi, id) an isomorphism", "pi is not invertible"));
  }
  return r;
}

}  // namespace bracoid
