#pragma once

// Exact arithmetic layer: arbitrary-precision rationals, dense univariate
// polynomials over Z and Q, Sturm sequences, real-root isolation and root
// bounds. Everything here is immutable after construction and pure.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eigentree {

using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);
BigInt floor_rat(const Rational& q);
BigInt ceil_rat(const Rational& q);
std::string rat_str(const Rational& q);

class RatPoly;

// Dense polynomial over Z, constant term first. The zero polynomial stores
// no coefficients and has degree -1.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(int k, const BigInt& c = BigInt(1));
  // Coefficients given highest degree first, e.g. {1,0,-2} -> x^2 - 2.
  static IntPoly from_desc(std::vector<BigInt> desc);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;
  const BigInt& coeff(int i) const;
  const BigInt& leading() const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator-() const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const BigInt& c) const;
  bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

  // Quotient and remainder; the divisor must be monic.
  static std::pair<IntPoly, IntPoly> divrem(const IntPoly& a, const IntPoly& b);
  // Division known to be exact in Z[X]; throws internal error otherwise.
  static IntPoly div_exact(const IntPoly& a, const IntPoly& b);

  IntPoly derivative() const;
  IntPoly mirror() const; // p(-X)
  BigInt eval(const BigInt& x) const;
  Rational eval(const Rational& x) const;
  RatPoly to_rat() const;

  std::string str(const std::string& var = "x") const;

private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// Dense polynomial over Q, constant term first.
class RatPoly {
public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);

  static RatPoly constant(const Rational& c);
  static RatPoly monomial(int k, const Rational& c = Rational(1));

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;
  const Rational& coeff(int i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator-() const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator*(const Rational& c) const;
  bool operator==(const RatPoly& o) const { return coeffs_ == o.coeffs_; }

  static std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b);
  static RatPoly div_exact(const RatPoly& a, const RatPoly& b);

  RatPoly derivative() const;
  RatPoly monic() const;
  Rational eval(const Rational& x) const;

  bool is_integral() const; // all denominators 1
  IntPoly to_int() const;   // requires is_integral

  std::string str(const std::string& var = "x") const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Monic gcd over Q by the Euclidean algorithm with positive rescaling.
RatPoly gcd_monic(RatPoly a, RatPoly b);

// p / gcd(p, p'), monic: same distinct roots, all simple.
RatPoly squarefree_part(const RatPoly& p);

struct SturmChain {
  std::vector<RatPoly> seq;
  static SturmChain build(const RatPoly& p);
  int variations_at(const Rational& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;
};

// Number of real roots of a squarefree p in (lo, hi]; nullopt means the
// corresponding infinite endpoint.
int sturm_count(const RatPoly& p, const std::optional<Rational>& lo,
                const std::optional<Rational>& hi);
int sturm_count_all(const RatPoly& p);

// Rational B with every real root of p strictly below B (and above -B):
// Cauchy's bound 1 + max |c_i / c_deg|.
Rational root_upper_bound(const RatPoly& p);

// Half-open isolating interval: the root lies in (lo, hi].
struct RootInterval {
  Rational lo, hi;
};

// One interval per real root, pairwise disjoint, ordered by decreasing root.
std::vector<RootInterval> isolate_real_roots(const RatPoly& p);

// Bisect until hi - lo <= width, keeping exactly one root inside.
RootInterval refine_root_interval(const RatPoly& p, const SturmChain& chain, RootInterval iv,
                                  const Rational& width);

} // namespace eigentree
