#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <span>
#include <vector>

namespace jpst {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Natural number extended with +infinity, the value of ord2(0).
/// Infinity compares greater than every finite value and equals only itself.
class ExtendedNat {
public:
  constexpr ExtendedNat() = default;
  constexpr ExtendedNat(unsigned v) : finite_(true), value_(v) {}

  static constexpr ExtendedNat infinity() { return ExtendedNat(infinite_tag{}); }

  constexpr bool is_infinite() const { return !finite_; }
  constexpr bool is_finite() const { return finite_; }

  // Precondition: finite.
  constexpr unsigned value() const { return value_; }

  friend constexpr bool operator==(const ExtendedNat&, const ExtendedNat&) = default;

  friend constexpr std::strong_ordering operator<=>(const ExtendedNat& a, const ExtendedNat& b) {
    if (a.finite_ && b.finite_) return a.value_ <=> b.value_;
    if (a.finite_) return std::strong_ordering::less;       // finite < inf
    if (b.finite_) return std::strong_ordering::greater;    // inf > finite
    return std::strong_ordering::equal;
  }

private:
  struct infinite_tag {};
  constexpr explicit ExtendedNat(infinite_tag) : finite_(false) {}

  bool finite_ = true;
  unsigned value_ = 0;
};

// C(a,b) as an exact big integer. Out-of-range arguments (b < 0, b > a,
// a < 0) evaluate to 0; this convention is what makes the eigenvalue
// summations below come out right when inner indices leave range.
Integer binom(long long a, long long b);

// Exponent of 2 in the factorization of x; ord2(0) = infinity. Sign ignored.
ExtendedNat ord2(const Integer& x);

// Nonnegative gcd of a nonempty sequence; gcd of an all-zero sequence is 0.
// Throws std::invalid_argument("empty input") on an empty span.
Integer gcd_all(std::span<const Integer> xs);
Integer gcd_all(const std::vector<Integer>& xs);

// True iff every base-2 digit of b is <= the corresponding digit of a
// (equivalently b AND a == b). By Lucas, this is exactly "C(a,b) is odd".
// Inputs must be nonnegative.
bool dominates(const Integer& b, const Integer& a);

// C(a,b) mod p computed digitwise in base p (Lucas). p must be prime
// (checked by trial division); throws std::invalid_argument otherwise.
int binom_mod_p(const Integer& a, const Integer& b, int p);

}  // namespace jpst
