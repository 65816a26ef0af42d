#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bracoid/linmap.hpp"

namespace bracoid {

/// info marks a recorded property (detail holds its value), not a verdict.
enum class Status { pass, fail, skipped, info };

std::string_view to_string(Status s);

/// Where an identity first fails: the input basis multi-index, the output
/// basis multi-index (empty for set-level checks) and the two sides.
struct Witness {
  std::vector<std::size_t> input;
  std::vector<std::size_t> output;
  std::string lhs;
  std::string rhs;
};

struct CheckResult {
  std::string equation;
  Status status = Status::pass;
  std::optional<Witness> witness;
  /// Free text: why a check was skipped, or what a flag means.
  std::string detail;
  /// Set for identities that are consequences of already-verified axioms.
  bool theorem = false;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  void add(CheckResult r) { results_.push_back(std::move(r)); }
  /// Appends other's results, prefixing each equation name.
  void merge(const Report& other, std::string_view prefix = {});

  [[nodiscard]] bool passed() const;
  /// False if the named equation is absent or did not pass.
  [[nodiscard]] bool passed(std::string_view equation) const;
  [[nodiscard]] const CheckResult* find(std::string_view equation) const;
  [[nodiscard]] const CheckResult* first_failure() const;

  [[nodiscard]] const std::string& subject() const { return subject_; }
  [[nodiscard]] const std::vector<CheckResult>& results() const { return results_; }

 private:
  std::string subject_;
  std::vector<CheckResult> results_;
};

/// Compares two sides of an identity between maps with the given domain and
/// codomain tensor legs; on failure the witness names the first differing
/// basis entry.
CheckResult compare_maps(std::string equation, const LinMap& lhs, const LinMap& rhs,
                         std::vector<std::size_t> dom_legs, std::vector<std::size_t> cod_legs);

CheckResult skipped(std::string equation, std::string why);
CheckResult info(std::string name, bool value);

/// Adds a theorem check to the report; a failure throws KernelBug.
void require_theorem(Report& report, CheckResult r);

}  // namespace bracoid
