#include "lly/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "lly/error.hpp"

namespace lly {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  auto bad = [&] { return DomainError("not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  const auto slash = s.find('/');
  const auto dot = s.find('.');
  auto is_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  if (slash != std::string::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') throw bad();
    BigInt d(den);
    if (d == 0) throw bad();
    Rational q(BigInt(strip_plus(num)), d);
    q.canonicalize();
    return q;
  }
  if (dot != std::string::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if (frac.empty() || !is_int(frac) || frac[0] == '-' || frac[0] == '+') throw bad();
    const bool negative = !whole.empty() && whole[0] == '-';
    const std::string w = (whole.empty() || whole == "-" || whole == "+") ? "0" : strip_plus(whole);
    if (!is_int(w)) throw bad();
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    BigInt whole_abs = abs(BigInt(w));
    Rational q(whole_abs * scale + BigInt(frac), scale);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  if (!is_int(s)) throw bad();
  return Rational(BigInt(strip_plus(s)));
}

Rational make_rational(long long num, long long den) {
  Rational q(BigInt(std::to_string(num)), BigInt(std::to_string(den)));
  q.canonicalize();
  return q;
}

double to_double(const Rational& q) { return q.get_d(); }

namespace {

// Largest k with k^2 | r, by trial division (radicands here are small).
void split_square(BigInt r, BigInt& square_root_part, BigInt& free_part) {
  square_root_part = 1;
  free_part = 1;
  for (BigInt p = 2; p * p <= r; ++p) {
    while (r % (p * p) == 0) {
      r /= p * p;
      square_root_part *= p;
    }
    if (r % p == 0) {
      r /= p;
      free_part *= p;
    }
  }
  free_part *= r;
}

}  // namespace

QuadSurd::QuadSurd(Rational a, Rational b, BigInt radicand) : a_(std::move(a)), b_(std::move(b)), radicand_(1) {
  if (radicand < 0) throw DomainError("negative radicand");
  if (radicand == 0 || b_ == 0) {
    b_ = 0;
    return;
  }
  BigInt root, free;
  split_square(radicand, root, free);
  b_ *= root;
  if (free == 1) {
    a_ += b_;
    b_ = 0;
  } else {
    radicand_ = free;
  }
}

double QuadSurd::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(radicand_.get_d());
}

std::string QuadSurd::to_string() const {
  if (is_rational()) return lly::to_string(a_);
  std::string out;
  if (a_ != 0) out = lly::to_string(a_) + (b_ > 0 ? "+" : "");
  return out + lly::to_string(b_) + "*sqrt(" + radicand_.get_str() + ")";
}

QuadSurd QuadSurd::operator-() const {
  QuadSurd r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
  if (x.is_rational()) return QuadSurd(x.a_ + y.a_, y.b_, y.radicand_);
  if (y.is_rational()) return QuadSurd(x.a_ + y.a_, x.b_, x.radicand_);
  if (x.radicand_ != y.radicand_) throw DomainError("adding surds with different radicands");
  return QuadSurd(x.a_ + y.a_, x.b_ + y.b_, x.radicand_);
}

QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return x + (-y); }

QuadSurd operator*(const QuadSurd& x, const Rational& k) { return QuadSurd(x.a_ * k, x.b_ * k, x.radicand_); }

QuadSurd operator/(const QuadSurd& x, const Rational& k) {
  if (k == 0) throw DomainError("division by zero");
  return QuadSurd(x.a_ / k, x.b_ / k, x.radicand_);
}

int QuadSurd::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // a and b*sqrt(r) have opposite signs: compare a^2 with b^2 r.
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * Rational(radicand_);
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

bool operator==(const QuadSurd& x, const QuadSurd& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.radicand_ == y.radicand_);
}

std::strong_ordering operator<=>(const QuadSurd& x, const QuadSurd& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

QuadSurd sqrt_rational(const Rational& q) {
  if (q < 0) throw DomainError("square root of a negative number");
  // sqrt(n/d) = sqrt(n*d)/d
  return QuadSurd(Rational(0), Rational(1, 1) / Rational(q.get_den()), q.get_num() * q.get_den());
}

}  // namespace lly
