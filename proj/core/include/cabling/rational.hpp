#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cabling {

using Integer = boost::multiprecision::cpp_int;

Integer gcd(const Integer& a, const Integer& b);
Integer abs(const Integer& a);
// Floor of a / b for b != 0.
Integer floor_div(const Integer& a, const Integer& b);
std::string to_string(const Integer& a);

/// A slope lambda/mu on a torus: lambda longitudes over mu meridians.
///
/// Always stored reduced with mu >= 0 and the sign carried by lambda, so
/// ordinary rational comparison applies. (1, 0) is the infinite slope and
/// compares greater than every finite slope. Also used as a plain extended
/// rational, e.g. for cabling fractions P/q.
class Slope {
 public:
  // Throws ValidationError on (0, 0).
  Slope(const Integer& lambda, const Integer& mu);

  static Slope infinity() { return Slope(1, 0); }

  const Integer& numerator() const { return lambda_; }
  const Integer& denominator() const { return mu_; }
  bool is_infinite() const { return mu_ == 0; }

  // "lambda/mu", or "inf" for the infinite slope.
  std::string to_string() const;

  friend bool operator==(const Slope&, const Slope&) = default;
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);

 private:
  Integer lambda_;
  Integer mu_;
};

Slope normalize(const Integer& lambda, const Integer& mu);

// lo < x < hi
bool in_open_interval(const Slope& x, const Slope& lo, const Slope& hi);

/// A slope kept exactly as given. For an intersection boundary slope a/b,
/// 2 * gcd(|a|, |b|) is the number of dividing curves.
class UnreducedSlope {
 public:
  UnreducedSlope(Integer numerator, Integer denominator);

  const Integer& numerator() const { return numerator_; }
  const Integer& denominator() const { return denominator_; }

  Slope reduce() const { return Slope(numerator_, denominator_); }
  Integer component_gcd() const { return gcd(numerator_, denominator_); }
  std::string to_string() const;

  // Adds numerators over a shared denominator; throws ValidationError if the
  // denominators differ. Edge-rounding sums are always over one denominator.
  UnreducedSlope operator+(const UnreducedSlope& other) const;
  UnreducedSlope operator-() const { return {-numerator_, denominator_}; }

  friend bool operator==(const UnreducedSlope&, const UnreducedSlope&) = default;

 private:
  Integer numerator_;
  Integer denominator_;
};

/// 2x2 integer matrix [[a, b], [c, d]] acting on the column (mu, lambda).
struct BasisChange {
  Integer a{1}, b{0}, c{0}, d{1};

  static BasisChange identity() { return {}; }
  // C' to C on the boundary of a neighborhood of a (P, q) cable:
  // mu = mu' + P q lambda.
  static BasisChange framing_shift(const Integer& pq) { return {1, pq, 0, 1}; }
  // Sends (p, q) to (0, 1) and (p', q') to (-1, 0), given p q' - p' q = 1.
  static BasisChange cabling_frame(const Integer& p, const Integer& q, const Integer& p_prime,
                                   const Integer& q_prime) {
    return {q, -p, q_prime, -p_prime};
  }

  Integer determinant() const { return a * d - b * c; }
  bool is_unimodular() const;

  friend BasisChange operator*(const BasisChange& lhs, const BasisChange& rhs);
  friend bool operator==(const BasisChange&, const BasisChange&) = default;
};

// Throws ValidationError if m is not unimodular.
Slope apply_basis(const BasisChange& m, const Slope& s);

// |lambda1 mu2 - lambda2 mu1| == 1. Throws ValidationError if s1 == s2.
bool is_farey_edge(const Slope& s1, const Slope& s2);

Slope mediant(const Slope& s1, const Slope& s2);

struct BasisCompletion {
  Integer p_prime;
  Integer q_prime;
};

// Canonical solution of p q' - p' q = 1 with 0 <= p' < |p| when |p| > 1.
// Every other solution is (p' + t p, q' + t q).
BasisCompletion complete_basis(const Integer& p, const Integer& q);

// Completion shifted by t copies of (p, q).
BasisCompletion complete_basis(const Integer& p, const Integer& q, const Integer& shift);

// The n with -1/A <= -1/n < slope < -1/(n+1) for a cabling slope q/p in
// (-1/A, 0). Throws DomainError if the slope is outside that interval or the
// inequalities cannot hold strictly.
Integer shell_integer(const Integer& A, const Slope& slope);

}  // namespace cabling
