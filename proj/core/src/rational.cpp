#include "cabling/rational.hpp"

#include <utility>

#include "cabling/error.hpp"

namespace cabling {

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  Integer r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

std::string to_string(const Integer& a) { return a.str(); }

Slope::Slope(const Integer& lambda, const Integer& mu) {
  if (lambda == 0 && mu == 0) throw ValidationError("slope 0/0 is undefined");
  Integer g = gcd(lambda, mu);
  lambda_ = lambda / g;
  mu_ = mu / g;
  if (mu_ < 0 || (mu_ == 0 && lambda_ < 0)) {
    lambda_ = -lambda_;
    mu_ = -mu_;
  }
}

std::string Slope::to_string() const {
  if (is_infinite()) return "inf";
  return lambda_.str() + "/" + mu_.str();
}

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
  Integer lhs = a.lambda_ * b.mu_;
  Integer rhs = b.lambda_ * a.mu_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Slope normalize(const Integer& lambda, const Integer& mu) { return Slope(lambda, mu); }

bool in_open_interval(const Slope& x, const Slope& lo, const Slope& hi) {
  return lo < x && x < hi;
}

UnreducedSlope::UnreducedSlope(Integer numerator, Integer denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (numerator_ == 0 && denominator_ == 0) throw ValidationError("slope 0/0 is undefined");
}

std::string UnreducedSlope::to_string() const {
  return numerator_.str() + "/" + denominator_.str();
}

UnreducedSlope UnreducedSlope::operator+(const UnreducedSlope& other) const {
  if (denominator_ != other.denominator_) {
    throw ValidationError("unreduced slopes " + to_string() + " and " + other.to_string() +
                          " do not share a denominator");
  }
  return {numerator_ + other.numerator_, denominator_};
}

bool BasisChange::is_unimodular() const {
  Integer det = determinant();
  return det == 1 || det == -1;
}

BasisChange operator*(const BasisChange& lhs, const BasisChange& rhs) {
  return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
          lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
}

Slope apply_basis(const BasisChange& m, const Slope& s) {
  if (!m.is_unimodular()) {
    throw ValidationError("basis change has determinant " + m.determinant().str() +
                          ", expected +-1");
  }
  const Integer& mu = s.denominator();
  const Integer& lambda = s.numerator();
  Integer new_mu = m.a * mu + m.b * lambda;
  Integer new_lambda = m.c * mu + m.d * lambda;
  return Slope(new_lambda, new_mu);
}

bool is_farey_edge(const Slope& s1, const Slope& s2) {
  if (s1 == s2) throw ValidationError("Farey edge test needs two distinct slopes");
  Integer det = s1.numerator() * s2.denominator() - s2.numerator() * s1.denominator();
  return det == 1 || det == -1;
}

Slope mediant(const Slope& s1, const Slope& s2) {
  return Slope(s1.numerator() + s2.numerator(), s1.denominator() + s2.denominator());
}

namespace {

// Returns (g, x, y) with a x + b y = g = gcd(a, b) >= 0.
struct Bezout {
  Integer g, x, y;
};

Bezout extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer quotient = old_r / r;
    old_r = std::exchange(r, old_r - quotient * r);
    old_s = std::exchange(s, old_s - quotient * s);
    old_t = std::exchange(t, old_t - quotient * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

}  // namespace

BasisCompletion complete_basis(const Integer& p, const Integer& q) {
  if (p == 0 && q == 0) throw ValidationError("cannot complete the zero vector to a basis");
  if (gcd(p, q) != 1) {
    throw ValidationError("(" + p.str() + "," + q.str() + ") is not a coprime pair");
  }
  if (p == 0) return {-q, 0};  // q = +-1, -p' q = 1
  if (p == 1 || p == -1) return {0, p};

  // p q' - p' q = 1  =>  -p' q = 1 (mod |p|)  =>  p' = -q^{-1} (mod |p|).
  Integer modulus = abs(p);
  Bezout bz = extended_gcd(q, modulus);  // q x + |p| y = 1
  Integer p_prime = -bz.x % modulus;
  if (p_prime < 0) p_prime += modulus;
  Integer numerator = 1 + p_prime * q;
  if (numerator % p != 0) throw ConsistencyError("basis completion failed to divide");
  return {p_prime, numerator / p};
}

BasisCompletion complete_basis(const Integer& p, const Integer& q, const Integer& shift) {
  BasisCompletion base = complete_basis(p, q);
  return {base.p_prime + shift * p, base.q_prime + shift * q};
}

Integer shell_integer(const Integer& A, const Slope& slope) {
  if (A <= 0) throw DomainError("shell integer needs A > 0, got " + A.str());
  const Slope lower(-1, A);
  const Slope zero(0, 1);
  if (!in_open_interval(slope, lower, zero)) {
    throw DomainError("cabling slope " + slope.to_string() + " is not in (" + lower.to_string() +
                      ", 0)");
  }
  // slope = -|q|/|p| with numerator -|q| and denominator |p|; n = floor(|p|/|q|).
  Integer n = floor_div(slope.denominator(), -slope.numerator());
  const Slope left(-1, n);
  const Slope right(-1, n + 1);
  if (!(lower <= left && left < slope && slope < right)) {
    throw DomainError("no integer n with -1/n < " + slope.to_string() + " < -1/(n+1)");
  }
  return n;
}

}  // namespace cabling
