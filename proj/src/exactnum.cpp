#include "jpst/exactnum.hpp"

#include <algorithm>
#include <stdexcept>

namespace jpst {

Integer binom(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  Integer res = 1;
  for (long long t = 1; t <= b; ++t) {
    res *= a - b + t;
    res /= t;  // exact: res is a binomial after each step
  }
  return res;
}

ExtendedNat ord2(const Integer& x) {
  if (x == 0) return ExtendedNat::infinity();
  const Integer a = abs(x);
  return ExtendedNat(boost::multiprecision::lsb(a));
}

Integer gcd_all(std::span<const Integer> xs) {
  if (xs.empty()) throw std::invalid_argument("empty input");
  Integer g = 0;
  for (const Integer& x : xs) g = boost::multiprecision::gcd(g, abs(x));
  return g;
}

Integer gcd_all(const std::vector<Integer>& xs) {
  return gcd_all(std::span<const Integer>(xs.data(), xs.size()));
}

bool dominates(const Integer& b, const Integer& a) {
  if (b < 0 || a < 0) throw std::invalid_argument("dominates: negative input");
  return (b & a) == b;
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// C(a,b) mod p for 0 <= b <= a < p: small enough for plain int64.
int small_binom_mod(int a, int b, int p) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  long long num = 1, den = 1;
  for (int t = 1; t <= b; ++t) {
    num = num * ((a - b + t) % p) % p;
    den = den * (t % p) % p;
  }
  // den is invertible mod p (p prime, all factors < p)
  long long inv = 1, base = den, e = p - 2;
  while (e) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(num * inv % p);
}

}  // namespace

int binom_mod_p(const Integer& a, const Integer& b, int p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (a < 0 || b < 0) throw std::invalid_argument("binom_mod_p: negative input");
  if (b > a) return 0;
  Integer ra = a, rb = b;
  long long result = 1;
  while (rb > 0 || ra > 0) {
    const int da = static_cast<int>(ra % p);
    const int db = static_cast<int>(rb % p);
    result = result * small_binom_mod(da, db, p) % p;
    if (result == 0) return 0;
    ra /= p;
    rb /= p;
  }
  return static_cast<int>(result);
}

}  // namespace jpst
