#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bracoid {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 63 bits are stored inline;
/// anything larger is promoted to a shared, immutable GMP rational. Results
/// are demoted back to the inline form whenever they fit, so two equal values
/// always have the same representation.
class Scalar {
 public:
  Scalar() noexcept = default;
  Scalar(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Scalar(std::int64_t numerator, std::int64_t denominator);
  explicit Scalar(const mpq_class& value);

  /// Parses "p", "-p" or "p/q". Throws ParseError on malformed text or q = 0.
  static Scalar parse(std::string_view text);

  [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  [[nodiscard]] int sign() const noexcept;

  [[nodiscard]] mpq_class to_mpq() const;
  /// Canonical text: "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string str() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
  Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
  Scalar& operator*=(const Scalar& other) { return *this = *this * other; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  void assign_canonical(const mpq_class& value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace bracoid
