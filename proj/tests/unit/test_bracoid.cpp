#include "doctest.h"

#include "bracoid/bracoid.hpp"
#include "bracoid/catalog.hpp"
#include "bracoid/errors.hpp"
#include "bracoid/functors.hpp"
#include "oracle/oracle.hpp"

using namespace bracoid;

namespace {

GeneralizedSkewBracoid gskb(const FiniteGroup& g, const FiniteGroup& n, CayleyTable t) {
  return {g, n, ActionTable{g.order(), n.order(), std::move(t)}};
}

bool oracle_law(const HopfBracoid& b) {
  auto h = oracle::from_data(b.acting());
  auto c = oracle::from_data(b.carrier());
  return oracle::bracoid_law_holds(h, c, oracle::from_action(b.h_dim(), b.b_dim(), b.action()));
}

}  // namespace

TEST_CASE("derived maps on standard examples") {
  const FiniteGroup s3 = symmetric_group(3);
  const HopfAlgebraData h = linearize_group(s3);
  HopfBracoid lm = left_multiplication_bracoid(h);
  CHECK(action_unit(lm) == id(6));
  CHECK(phi_cap(lm) == tensor(h.counit(), id(6)));
  std::vector<std::size_t> conj(36);
  for (std::size_t g = 0; g < 6; ++g)
    for (std::size_t b = 0; b < 6; ++b) conj[g * 6 + b] = s3.mul(s3.mul(g, b), s3.inv(g));
  CHECK(phi_prime(lm) == LinMap::from_function(36, 6, conj));
  CHECK(check_bracoid(lm).passed());
  CHECK(bracoid_full_suite(lm).passed());

  HopfBracoid triv = trivial_action_bracoid(h, linearize_group(cyclic_group(3)));
  CHECK(action_unit(triv) == compose(triv.carrier().unit(), h.counit()));
  CHECK(phi_cap(triv) == triv.action());
  CHECK(phi_prime(triv) == triv.action());
  CHECK(is_action_coalgebra_morphism(triv));
  CHECK(bracoid_full_suite(triv).passed());

  HopfBracoid one = unit_bracoid();
  CHECK(phi_prime(one) == id(1));
  Report full = bracoid_full_suite(one);
  CHECK(full.passed());
  CHECK(full.find("cocommutativity class of twisted action")->detail == "true");
}

TEST_CASE("P images pass everything") {
  for (const auto& g : small_groups(4))
    for (const auto& n : small_groups(4))
      for (const auto& b : enumerate_gskb(g, n)) {
        HopfBracoid p = functor_P(b);
        Report r = bracoid_full_suite(p);
        CHECK(r.passed());
        CHECK(oracle_law(p));
        CHECK(is_action_coalgebra_morphism(p));
        CHECK(cocomm_class_check(p));
        CHECK(right_cocomm_class_check(p));
      }
}

TEST_CASE("inversion action has trivial unit map") {
  auto b = gskb(cyclic_group(2), cyclic_group(3), {{0, 1, 2}, {0, 2, 1}});
  HopfBracoid p = functor_P(b);
  CHECK(action_unit(p) == compose(p.carrier().unit(), p.acting().counit()));
  CHECK(phi_cap(p) == p.action());
}

TEST_CASE("linearized failing table fails with the lifted witness") {
  auto b = gskb(cyclic_group(2), cyclic_group(4), {{0, 1, 2, 3}, {0, 2, 1, 3}});
  CHECK_THROWS_AS(functor_P(b), PreconditionError);
  HopfBracoid p = linearize_gskb(b);
  Report r = check_bracoid(p);
  CHECK(!r.passed("bracoid compatibility"));
  CHECK(!r.passed("bracoid compatibility, right twisted form"));
  CHECK(!oracle_law(p));
  // The set-level check and the linear one agree on every table of C2 on C3.
  auto c2 = cyclic_group(2), c3 = cyclic_group(3);
  std::vector<std::size_t> flat(6, 0);
  while (true) {
    CayleyTable t(2, std::vector<std::size_t>(3));
    for (std::size_t i = 0; i < 6; ++i) t[i / 3][i % 3] = flat[i];
    auto cand = gskb(c2, c3, t);
    CHECK(check_gskb(cand).passed() == check_bracoid(linearize_gskb(cand)).passed());
    std::size_t i = 0;
    while (i < 6 && ++flat[i] == 3) flat[i++] = 0;
    if (i == 6) break;
  }
}

TEST_CASE("compatibility forms agree on corrupted actions") {
  HopfBracoid p = functor_P(left_multiplication_gskb(symmetric_group(3)));
  for (std::size_t col = 0; col < 36; col += 5) {
    auto e = p.action().entries();
    e.push_back({(col * 7) % 6, col, Scalar(1, 2)});
    HopfBracoid bad(p.acting(), p.carrier(), LinMap(36, 6, e));
    Report r = check_bracoid(bad);
    CHECK(r.passed("bracoid compatibility") == r.passed("bracoid compatibility, right twisted form"));
    CHECK(r.passed("bracoid compatibility") == oracle_law(bad));
  }
}

TEST_CASE("reconstruction holds for coalgebra-morphism actions without the bracoid law") {
  HopfAlgebraData c3 = linearize_group(cyclic_group(3));
  HopfAlgebraData c2 = linearize_group(cyclic_group(2));
  // C2 acting on C3 by a non-affine permutation: not a bracoid, but the
  // action sends basis vectors to basis vectors.
  auto b = gskb(cyclic_group(2), cyclic_group(3), {{0, 1, 2}, {1, 0, 2}});
  HopfBracoid p = linearize_gskb(b);
  CHECK(is_action_coalgebra_morphism(p));
  CHECK(reconstruct_action_check(p).passed());
  HopfBracoid bogus(c2, c3, LinMap(6, 3, {{0, 0, 1}, {1, 1, 1}, {1, 1, 1}, {2, 2, 1}, {0, 3, 1}, {0, 4, 1}, {1, 4, 1}, {2, 5, 1}}));
  CHECK(!is_action_coalgebra_morphism(bogus));
  CHECK_THROWS_AS(reconstruct_action_check(bogus), PreconditionError);
}

TEST_CASE("Sweedler left multiplication bracoid") {
  HopfAlgebraData s = sweedler_hopf();
  HopfBracoid lm = left_multiplication_bracoid(s);
  CHECK(check_bracoid(lm).passed());
  CHECK(is_action_coalgebra_morphism(lm));
  Report r = bracoid_full_suite(lm);
  CHECK(r.passed());
  // Recorded by exact evaluation: the left class condition holds (the
  // twisted action is eps (x) id) while the right one, built from the adjoint
  // action, fails.
  CHECK(cocomm_class_check(lm));
  CHECK(!right_cocomm_class_check(lm));
  CHECK(r.find("right twisted action preserves coproduct")->status == Status::skipped);
  auto d = oracle::from_data(s);
  auto tw = oracle::twisted(d, d, oracle::from_action(4, 4, lm.action()));
  CHECK(oracle::columns(phi_cap(lm)) == tw.act);
  CHECK(oracle::module_algebra_holds(d, d, oracle::from_action(4, 4, phi_prime(lm))));
}

TEST_CASE("opposite bracoid") {
  const FiniteGroup s3 = symmetric_group(3);
  HopfBracoid lm = functor_P(left_multiplication_gskb(s3));
  HopfBracoid op = opposite_bracoid(lm);
  CHECK(check_bracoid(op).passed());
  CHECK(op.carrier().mult() == compose(lm.carrier().mult(), flip(6, 6)));
  // Set level: the opposite gskb linearizes to the opposite bracoid.
  CHECK(functor_P(opposite_gskb(left_multiplication_gskb(s3))) == op);
  HopfBracoid ab = functor_P(left_multiplication_gskb(cyclic_group(4)));
  CHECK(opposite_bracoid(ab) == ab);
  HopfBracoid sw = left_multiplication_bracoid(sweedler_hopf());
  try {
    opposite_bracoid(sw);
    CHECK(false);
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()) == "opposite: H not cocommutative");
  }
  HopfBracoid onto_sw = trivial_action_bracoid(linearize_group(cyclic_group(2)), sweedler_hopf());
  CHECK_THROWS_WITH_AS(opposite_bracoid(onto_sw),
                       "opposite: antipode of B is not an involution and B is not cocommutative", PreconditionError);
}

TEST_CASE("tensor bracoids") {
  HopfBracoid a = functor_P(gskb(cyclic_group(2), cyclic_group(3), {{0, 1, 2}, {0, 2, 1}}));
  HopfBracoid b = functor_P(left_multiplication_gskb(cyclic_group(2)));
  HopfBracoid ab = tensor_bracoid(a, b);
  HopfBracoid ba = tensor_bracoid(b, a);
  CHECK(check_bracoid(ab).passed());
  CHECK(check_bracoid_morphism(ab, ba, symmetry_morphism(a, b)).passed());
  CHECK(tensor_bracoid(a, unit_bracoid()) == a);
  CHECK(tensor_bracoid(unit_bracoid(), a) == a);
  auto idm = tensor_morphism(identity_morphism(a), identity_morphism(b));
  CHECK(check_bracoid_morphism(ab, ab, idm).passed());
  CHECK(tensor_bracoid(a, left_multiplication_bracoid(sweedler_hopf())).h_dim() == 8);
}

TEST_CASE("bracoid morphisms") {
  auto s3 = symmetric_group(3);
  HopfBracoid p = functor_P(left_multiplication_gskb(s3));
  CHECK(check_bracoid_morphism(p, p, identity_morphism(p)).passed());
  BracoidMorphism to_one{linearize_map(IndexMap(6, 0), 1), linearize_map(IndexMap(6, 0), 1)};
  CHECK(check_bracoid_morphism(p, unit_bracoid(), to_one).passed());
  BracoidMorphism bad{id(6), linearize_map(automorphisms(s3)[1], 6)};
  Report r = check_bracoid_morphism(p, p, bad);
  CHECK(!r.passed("morphism equivariance"));
  CHECK(r.passed("carrier map: preserves product"));
}
