#include "bracoid/scalar.hpp"

#include <limits>

#include "bracoid/errors.hpp"

namespace bracoid {
namespace {

using i128 = __int128;

constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(i128 v) { return v <= kSmallMax && v >= -kSmallMax; }

mpq_class make_mpq(i128 num, i128 den) {
  // Only reached on overflow; go through decimal text to stay portable.
  auto to_string = [](i128 v) {
    if (v == 0) return std::string("0");
    bool neg = v < 0;
    std::string digits;
    while (v != 0) {
      int d = static_cast<int>(v % 10);
      digits.push_back(static_cast<char>('0' + (d < 0 ? -d : d)));
      v /= 10;
    }
    if (neg) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
  };
  mpq_class q(mpz_class(to_string(num)), mpz_class(to_string(den)));
  q.canonicalize();
  return q;
}

}  // namespace

Scalar::Scalar(std::int64_t value) : num_(value) {
  if (value == std::numeric_limits<std::int64_t>::min()) assign_canonical(mpq_class(mpz_class(std::to_string(value))));
}

Scalar::Scalar(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw ShapeError("scalar: zero denominator");
  i128 n = numerator;
  i128 d = denominator;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (fits(n) && fits(d)) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  } else {
    assign_canonical(make_mpq(n, d));
  }
}

Scalar::Scalar(const mpq_class& value) {
  mpq_class q = value;
  q.canonicalize();
  assign_canonical(q);
}

void Scalar::assign_canonical(const mpq_class& value) {
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != std::numeric_limits<long>::min()) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(value);
  }
}

Scalar Scalar::parse(std::string_view text) {
  auto fail = [&] { return ParseError("invalid rational '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();
  auto slash = text.find('/');
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) throw fail();
  std::string num_s(num);
  if (num_s[0] == '+') num_s.erase(0, 1);
  mpz_class d{std::string(den)};
  if (d == 0) throw fail();
  return Scalar(mpq_class(mpz_class(num_s), d));
}

int Scalar::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Scalar::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      i128 s = static_cast<i128>(a.num_) + b.num_;
      if (fits(s)) return Scalar(static_cast<std::int64_t>(s));
    }
    i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    i128 d = static_cast<i128>(a.den_) * b.den_;
    i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Scalar r;
    if (fits(n) && fits(d)) {
      r.num_ = static_cast<std::int64_t>(n);
      r.den_ = static_cast<std::int64_t>(d);
    } else {
      r.assign_canonical(make_mpq(n, d));
    }
    return r;
  }
  Scalar r;
  r.assign_canonical(mpq_class(a.to_mpq() + b.to_mpq()));
  return r;
}

Scalar Scalar::operator-() const {
  if (!big_) {
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Scalar r;
  r.assign_canonical(mpq_class(-*big_));
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      i128 p = static_cast<i128>(a.num_) * b.num_;
      if (fits(p)) return Scalar(static_cast<std::int64_t>(p));
    }
    i128 g1 = gcd128(a.num_, b.den_);
    i128 g2 = gcd128(b.num_, a.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    i128 n = (static_cast<i128>(a.num_) / g1) * (static_cast<i128>(b.num_) / g2);
    i128 d = (static_cast<i128>(a.den_) / g2) * (static_cast<i128>(b.den_) / g1);
    Scalar r;
    if (n == 0) return r;
    if (fits(n) && fits(d)) {
      r.num_ = static_cast<std::int64_t>(n);
      r.den_ = static_cast<std::int64_t>(d);
    } else {
      r.assign_canonical(make_mpq(n, d));
    }
    return r;
  }
  Scalar r;
  r.assign_canonical(mpq_class(a.to_mpq() * b.to_mpq()));
  return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw ShapeError("scalar: division by zero");
  mpq_class q = a.to_mpq() / b.to_mpq();
  return Scalar(q);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical forms differ in representation only when values differ
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) {
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

}  // namespace bracoid
