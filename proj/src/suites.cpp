#include "bracoid/suites.hpp"

#include <json.hpp>

#include "bracoid/errors.hpp"
#include "bracoid/functors.hpp"

namespace bracoid {
namespace {

Report group_suite(const GroupData& g, Suite suite) {
  Report r = validate_group(g.table, g.unit);
  if (suite == Suite::basic || !r.passed()) return r;
  const HopfAlgebraData h = linearize_group(FiniteGroup(g.table, g.unit));
  r.merge(check_hopf(h), "group algebra: ");
  r.merge(antipode_property_suite(h), "group algebra: ");
  return r;
}

void add_pointed(Report& r, const HopfAlgebraData& h, std::string_view label) {
  bool pointed = false;
  try {
    pointed = basis_grouplikes(h).covers(h.dim());
  } catch (const PreconditionError&) {
  }
  r.add(info(std::string(label) + "basis is group-like", pointed));
}

Report hopf_suite(const HopfAlgebraData& h, Suite suite) {
  Report r = check_hopf(h);
  if (suite == Suite::basic || !r.passed()) return r;
  r.merge(antipode_property_suite(h));
  r.add(info("commutative", is_commutative(h.algebra)));
  r.add(info("cocommutative", is_cocommutative(h.coalgebra)));
  add_pointed(r, h, "");
  return r;
}

Report gskb_suite(const GeneralizedSkewBracoid& b, Suite suite) {
  Report r = check_gskb(b);
  if (!r.passed()) return r;
  r.add(info("transitive", is_transitive(b)));
  if (suite == Suite::basic) return r;
  const HopfBracoid p = functor_P(b);
  r.merge(bracoid_full_suite(p), "P: ");
  CheckResult back{"R(P(b)) equals b", Status::pass, std::nullopt, {}, true};
  if (!(functor_R(p) == b)) {
    back.status = Status::fail;
    back.witness = Witness{{}, {}, "R(P(b))", "b"};
  }
  require_theorem(r, std::move(back));
  r.merge(counit_identity_check(p), "P: ");
  return r;
}

Report bracoid_suite(const HopfBracoid& b, Suite suite) {
  if (suite == Suite::basic) return check_bracoid(b);
  Report r = bracoid_full_suite(b);
  if (!r.passed()) return r;
  add_pointed(r, b.acting(), "H ");
  add_pointed(r, b.carrier(), "B ");
  try {
    r.merge(counit_identity_check(b));
  } catch (const PreconditionError& e) {
    r.add(skipped("P(R(b)) equals b", e.what()));
  }
  return r;
}

Report brace_suite(const HopfBrace& br, Suite suite) {
  Report r = check_hopf_brace(br);
  if (suite == Suite::basic || !r.passed()) return r;
  const HopfBracoid t = functor_T(br);
  const HopfBracoid tp = functor_Tprime(br);
  r.merge(bracoid_full_suite(t), "T: ");
  r.merge(bracoid_full_suite(tp), "T': ");
  const std::size_t n = br.dim();
  require_theorem(r, compare_maps("T': twisted action equals the brace action", phi_cap(tp), brace_twisted_action(br),
                                  {n, n}, {n}));
  r.add(info("T and T' images coincide", t == tp));
  return r;
}

Report cocycle_suite(const Cocycle& c, Suite suite) {
  return suite == Suite::basic ? check_cocycle(c) : cocycle_full_suite(c);
}

Report gskb_morphism_suite(const GskbMorphismData& m, Suite suite) {
  Report r;
  r.merge(check_gskb(m.source), "source: ");
  r.merge(check_gskb(m.target), "target: ");
  if (!r.passed()) return r;
  r.merge(check_gskb_morphism(m.source, m.target, m.map));
  if (suite == Suite::basic || !r.passed()) return r;
  const HopfBracoid ps = functor_P(m.source);
  const HopfBracoid pt = functor_P(m.target);
  const BracoidMorphism pm = functor_P(m.map, m.source, m.target);
  Report image = check_bracoid_morphism(ps, pt, pm);
  for (auto c : image.results()) {
    c.equation = "P: " + c.equation;
    require_theorem(r, std::move(c));
  }
  CheckResult back{"R(P(m)) equals m", Status::pass, std::nullopt, {}, true};
  if (!(functor_R(pm, ps, pt) == m.map)) {
    back.status = Status::fail;
    back.witness = Witness{{}, {}, "R(P(m))", "m"};
  }
  require_theorem(r, std::move(back));
  adjunction_gamma(m.source, pt, pm);
  r.add(CheckResult{"adjunction bijection inverts on P(m)", Status::pass, std::nullopt, {}, true});
  return r;
}

Report bracoid_morphism_suite(const BracoidMorphismData& m, Suite suite) {
  Report r;
  r.merge(check_bracoid(m.source), "source: ");
  r.merge(check_bracoid(m.target), "target: ");
  if (!r.passed()) return r;
  r.merge(check_bracoid_morphism(m.source, m.target, m.map));
  if (suite == Suite::basic || !r.passed()) return r;
  try {
    const GskbMorphism rm = functor_R(m.map, m.source, m.target);
    const GeneralizedSkewBracoid rs = functor_R(m.source);
    const GeneralizedSkewBracoid rt = functor_R(m.target);
    r.merge(check_gskb_morphism(rs, rt, rm), "R: ");
  } catch (const PreconditionError& e) {
    r.add(skipped("R: morphism equivariance", e.what()));
  }
  return r;
}

}  // namespace

Report check_manifest(const Manifest& m, Suite suite) {
  struct Visitor {
    Suite suite;
    Report operator()(const GroupData& g) const { return group_suite(g, suite); }
    Report operator()(const HopfAlgebraData& h) const { return hopf_suite(h, suite); }
    Report operator()(const GeneralizedSkewBracoid& b) const { return gskb_suite(b, suite); }
    Report operator()(const HopfBracoid& b) const { return bracoid_suite(b, suite); }
    Report operator()(const HopfBrace& b) const { return brace_suite(b, suite); }
    Report operator()(const Cocycle& c) const { return cocycle_suite(c, suite); }
    Report operator()(const GskbMorphismData& d) const { return gskb_morphism_suite(d, suite); }
    Report operator()(const BracoidMorphismData& d) const { return bracoid_morphism_suite(d, suite); }
  };
  Report body = std::visit(Visitor{suite}, m.payload);
  std::string subject = std::string(kind_name(m.kind()));
  if (!m.name.empty()) subject += " " + m.name;
  Report r(subject);
  r.merge(body);
  return r;
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace

std::string render_text(const Report& r) {
  std::string out = r.subject() + ": " + (r.passed() ? "PASS" : "FAIL") + "\n";
  for (const auto& c : r.results()) {
    out += "  " + std::string(to_string(c.status)) + "  " + c.equation;
    if (c.status == Status::info) out += " = " + c.detail;
    out += "\n";
    if (c.witness) {
      const Witness& w = *c.witness;
      out += "      witness: input " + join(w.input);
      if (!w.output.empty()) out += " output " + join(w.output);
      if (!w.lhs.empty() || !w.rhs.empty()) out += ": lhs " + w.lhs + ", rhs " + w.rhs;
      out += "\n";
    }
    if (c.status == Status::skipped && !c.detail.empty()) out += "      (" + c.detail + ")\n";
  }
  return out;
}

std::string render_machine(const Report& r) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& c : r.results()) {
    nlohmann::json j{{"equation", c.equation}, {"status", to_string(c.status)}, {"theorem", c.theorem}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (c.witness) {
      j["witness"] = {{"input", c.witness->input}, {"output", c.witness->output}, {"lhs", c.witness->lhs},
                      {"rhs", c.witness->rhs}};
    }
    results.push_back(std::move(j));
  }
  nlohmann::json j{{"subject", r.subject()}, {"verdict", r.passed() ? "pass" : "fail"}, {"results", results}};
  return j.dump() + "\n";
}

}  // namespace bracoid
