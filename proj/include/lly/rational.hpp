#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace lly {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

/// "num/den", always with an explicit denominator ("0/1", "-3/2").
std::string to_string(const Rational& q);

/// Accepts "a/b", "a" or a finite decimal such as "0.25". Throws DomainError.
Rational parse_rational(std::string_view text);

Rational make_rational(long long num, long long den = 1);

inline BigInt to_big(long long v) { return BigInt(static_cast<long>(v)); }

double to_double(const Rational& q);

/// Exact quadratic irrational a + b * sqrt(radicand) with a, b rational and
/// a square-free radicand >= 1. A rational value has b == 0 and radicand 1.
class QuadSurd {
public:
  QuadSurd() : a_(0), b_(0), radicand_(1) {}
  QuadSurd(Rational a) : a_(std::move(a)), b_(0), radicand_(1) {}  // NOLINT(google-explicit-constructor)
  /// Normalizes: square factors of `radicand` move into b.
  QuadSurd(Rational a, Rational b, BigInt radicand);

  const Rational& rational_part() const { return a_; }
  const Rational& surd_coefficient() const { return b_; }
  const BigInt& radicand() const { return radicand_; }
  bool is_rational() const { return b_ == 0; }

  double to_double() const;

  /// "a+b*sqrt(D)" with a and b as "num/den"; just "num/den" when rational.
  std::string to_string() const;

  QuadSurd operator-() const;
  friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator*(const QuadSurd& x, const Rational& k);
  friend QuadSurd operator/(const QuadSurd& x, const Rational& k);

  /// Exact sign of the value (-1, 0, 1).
  int sign() const;

  friend bool operator==(const QuadSurd& x, const QuadSurd& y);
  /// Exact comparison; throws DomainError for two distinct radicands.
  friend std::strong_ordering operator<=>(const QuadSurd& x, const QuadSurd& y);

private:
  Rational a_, b_;
  BigInt radicand_;
};

/// Square root of a non-negative rational as a QuadSurd (exact).
QuadSurd sqrt_rational(const Rational& q);

}  // namespace lly
