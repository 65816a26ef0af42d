#include "bracoid/report.hpp"

#include "bracoid/errors.hpp"

namespace bracoid {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "FAIL";
    case Status::skipped: return "skipped";
    case Status::info: return "info";
  }
  return "?";
}

void Report::merge(const Report& other, std::string_view prefix) {
  for (auto r : other.results_) {
    if (!prefix.empty()) r.equation = std::string(prefix) + r.equation;
    results_.push_back(std::move(r));
  }
}

bool Report::passed() const {
  for (const auto& r : results_)
    if (r.status == Status::fail) return false;
  return true;
}

bool Report::passed(std::string_view equation) const {
  const auto* r = find(equation);
  return r != nullptr && r->status == Status::pass;
}

const CheckResult* Report::find(std::string_view equation) const {
  for (const auto& r : results_)
    if (r.equation == equation) return &r;
  return nullptr;
}

const CheckResult* Report::first_failure() const {
  for (const auto& r : results_)
    if (r.status == Status::fail) return &r;
  return nullptr;
}

CheckResult compare_maps(std::string equation, const LinMap& lhs, const LinMap& rhs,
                         std::vector<std::size_t> dom_legs, std::vector<std::size_t> cod_legs) {
  CheckResult r{std::move(equation), Status::pass, std::nullopt, {}, false};
  auto diff = first_difference(lhs, rhs);
  if (!diff) return r;
  r.status = Status::fail;
  r.witness = Witness{unflatten(diff->col, dom_legs), unflatten(diff->row, cod_legs), diff->lhs.str(), diff->rhs.str()};
  return r;
}

CheckResult skipped(std::string equation, std::string why) {
  return CheckResult{std::move(equation), Status::skipped, std::nullopt, std::move(why), true};
}

CheckResult info(std::string name, bool value) {
  return CheckResult{std::move(name), Status::info, std::nullopt, value ? "true" : "false", false};
}

void require_theorem(Report& report, CheckResult r) {
  r.theorem = true;
  if (r.status == Status::fail) {
    std::string what = report.subject() + ": '" + r.equation + "' failed although its hypotheses hold";
    if (r.witness) {
      what += " (input";
      for (auto i : r.witness->input) what += " " + std::to_string(i);
      what += ")";
    }
    throw KernelBug(what);
  }
  report.add(std::move(r));
}

}  // namespace bracoid
