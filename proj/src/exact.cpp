#include "exact.hpp"

#include "errors.hpp"

#include <algorithm>
#include <sstream>

namespace eigentree {

const char* errc_name(errc c) {
  switch (c) {
    case errc::ok: return "Ok";
    case errc::parse_error: return "ParseError";
    case errc::not_monic: return "NotMonic";
    case errc::non_integer_coefficients: return "NonIntegerCoefficients";
    case errc::not_squarefree: return "NotSquarefree";
    case errc::not_totally_real: return "NotTotallyReal";
    case errc::bad_degree: return "BadDegree";
    case errc::not_a_tree: return "NotATree";
    case errc::bad_argument: return "BadArgument";
    case errc::too_large: return "TooLarge";
    case errc::search_cap_exceeded: return "SearchCapExceeded";
    case errc::verification_failed: return "VerificationFailed";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::internal: return "InternalError";
  }
  return "Unknown";
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  ET_CHECK(den != 0, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

BigInt floor_rat(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

BigInt ceil_rat(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

std::string rat_str(const Rational& q) { return q.get_str(); }

namespace {

template <typename C> void trim_coeffs(std::vector<C>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Shared polynomial-to-string rendering, highest degree first.
template <typename C>
std::string poly_str(const std::vector<C>& coeffs, const std::string& var,
                     std::string (*cstr)(const C&)) {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    const C& c = coeffs[static_cast<size_t>(i)];
    if (c == 0) continue;
    const bool neg = c < 0;
    C a = neg ? C(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    const bool unit = (a == 1);
    if (i == 0) {
      os << cstr(a);
    } else {
      if (!unit) os << cstr(a);
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) return "0";
  return os.str();
}

std::string int_cstr(const BigInt& z) { return z.get_str(); }
std::string rat_cstr(const Rational& q) { return q.get_str(); }

} // namespace

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() { trim_coeffs(coeffs_); }

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(int k, const BigInt& c) {
  ET_CHECK(k >= 0, "negative monomial degree");
  std::vector<BigInt> v(static_cast<size_t>(k) + 1, BigInt(0));
  v.back() = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::from_desc(std::vector<BigInt> desc) {
  std::reverse(desc.begin(), desc.end());
  return IntPoly(std::move(desc));
}

bool IntPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

const BigInt& IntPoly::coeff(int i) const {
  static const BigInt zero(0);
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[static_cast<size_t>(i)];
}

const BigInt& IntPoly::leading() const {
  ET_CHECK(!coeffs_.empty(), "leading coefficient of zero polynomial");
  return coeffs_.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<BigInt> r(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<BigInt> r(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] -= o.coeffs_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> r(coeffs_);
  for (auto& c : r) c = -c;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<BigInt> r(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const BigInt& c) const {
  std::vector<BigInt> r(coeffs_);
  for (auto& x : r) x *= c;
  return IntPoly(std::move(r));
}

std::pair<IntPoly, IntPoly> IntPoly::divrem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
  ET_CHECK(b.is_monic(), "integer divrem needs a monic divisor");
  std::vector<BigInt> rem(a.coeffs_);
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {IntPoly(), a};
  std::vector<BigInt> quo(static_cast<size_t>(da - db) + 1, BigInt(0));
  for (int i = da; i >= db; --i) {
    BigInt c = rem[static_cast<size_t>(i)];
    if (c == 0) continue;
    quo[static_cast<size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(i - db + j)] -= c * b.coeffs_[static_cast<size_t>(j)];
  }
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

IntPoly IntPoly::div_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
  if (a.is_zero()) return IntPoly();
  const int da = a.degree(), db = b.degree();
  ET_CHECK(da >= db, "inexact polynomial division");
  std::vector<BigInt> rem(a.coeffs_);
  std::vector<BigInt> quo(static_cast<size_t>(da - db) + 1, BigInt(0));
  const BigInt& lb = b.leading();
  for (int i = da; i >= db; --i) {
    BigInt& c = rem[static_cast<size_t>(i)];
    if (c == 0) continue;
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), lb.get_mpz_t());
    ET_CHECK(r == 0, "inexact coefficient division");
    quo[static_cast<size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(i - db + j)] -= q * b.coeffs_[static_cast<size_t>(j)];
  }
  for (const auto& c : rem) ET_CHECK(c == 0, "inexact polynomial division");
  return IntPoly(std::move(quo));
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return IntPoly();
  std::vector<BigInt> r(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * BigInt(static_cast<unsigned long>(i));
  return IntPoly(std::move(r));
}

IntPoly IntPoly::mirror() const {
  std::vector<BigInt> r(coeffs_);
  for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return IntPoly(std::move(r));
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Rational IntPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + Rational(coeffs_[i]);
  return acc;
}

RatPoly IntPoly::to_rat() const {
  std::vector<Rational> r;
  r.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.emplace_back(c);
  return RatPoly(std::move(r));
}

std::string IntPoly::str(const std::string& var) const { return poly_str(coeffs_, var, int_cstr); }

// ---------------------------------------------------------------------------
// RatPoly

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void RatPoly::trim() { trim_coeffs(coeffs_); }

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

RatPoly RatPoly::monomial(int k, const Rational& c) {
  ET_CHECK(k >= 0, "negative monomial degree");
  std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
  v.back() = c;
  return RatPoly(std::move(v));
}

bool RatPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

const Rational& RatPoly::coeff(int i) const {
  static const Rational zero(0);
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[static_cast<size_t>(i)];
}

const Rational& RatPoly::leading() const {
  ET_CHECK(!coeffs_.empty(), "leading coefficient of zero polynomial");
  return coeffs_.back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rational> r(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
  std::vector<Rational> r(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] -= o.coeffs_[i];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-() const {
  std::vector<Rational> r(coeffs_);
  for (auto& c : r) c = -c;
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly();
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const Rational& c) const {
  std::vector<Rational> r(coeffs_);
  for (auto& x : r) x *= c;
  return RatPoly(std::move(r));
}

std::pair<RatPoly, RatPoly> RatPoly::divrem(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
  std::vector<Rational> rem(a.coeffs_);
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {RatPoly(), a};
  std::vector<Rational> quo(static_cast<size_t>(da - db) + 1, Rational(0));
  const Rational& lb = b.leading();
  for (int i = da; i >= db; --i) {
    Rational c = rem[static_cast<size_t>(i)];
    if (c == 0) continue;
    c /= lb;
    quo[static_cast<size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(i - db + j)] -= c * b.coeffs_[static_cast<size_t>(j)];
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::div_exact(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = divrem(a, b);
  ET_CHECK(r.is_zero(), "inexact polynomial division");
  return q;
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return RatPoly();
  std::vector<Rational> r(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i)
    r[i - 1] = coeffs_[i] * Rational(static_cast<unsigned long>(i));
  return RatPoly(std::move(r));
}

RatPoly RatPoly::monic() const {
  ET_CHECK(!is_zero(), "monic of zero polynomial");
  if (is_monic()) return *this;
  Rational inv = 1 / leading();
  return (*this) * inv;
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

bool RatPoly::is_integral() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

IntPoly RatPoly::to_int() const {
  ET_CHECK(is_integral(), "polynomial has non-integer coefficients");
  std::vector<BigInt> r;
  r.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.push_back(c.get_num());
  return IntPoly(std::move(r));
}

std::string RatPoly::str(const std::string& var) const { return poly_str(coeffs_, var, rat_cstr); }

// ---------------------------------------------------------------------------
// gcd, squarefree part, Sturm

RatPoly gcd_monic(RatPoly a, RatPoly b) {
  if (a.is_zero() && b.is_zero()) return RatPoly();
  while (!b.is_zero()) {
    RatPoly r = RatPoly::divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RatPoly squarefree_part(const RatPoly& p) {
  ET_CHECK(!p.is_zero(), "squarefree part of zero polynomial");
  if (p.degree() == 0) return RatPoly::constant(Rational(1));
  RatPoly g = gcd_monic(p, p.derivative());
  return RatPoly::div_exact(p, g).monic();
}

SturmChain SturmChain::build(const RatPoly& p) {
  SturmChain chain;
  if (p.is_zero()) return chain;
  chain.seq.push_back(p);
  RatPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.seq.push_back(d);
  for (;;) {
    const RatPoly& a = chain.seq[chain.seq.size() - 2];
    const RatPoly& b = chain.seq.back();
    RatPoly r = RatPoly::divrem(a, b).second;
    if (r.is_zero()) break;
    r = -r;
    // Rescale by a positive constant; signs along the chain must be preserved.
    Rational lead = r.leading();
    if (lead < 0) lead = -lead;
    chain.seq.push_back(r * (1 / lead));
  }
  return chain;
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int var = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

} // namespace

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& p : seq) signs.push_back(sgn(p.eval(x)));
  return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& p : seq) {
    int s = sgn(p.leading());
    if (p.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& p : seq) signs.push_back(sgn(p.leading()));
  return count_variations(signs);
}

int sturm_count(const RatPoly& p, const std::optional<Rational>& lo,
                const std::optional<Rational>& hi) {
  if (p.is_zero() || p.degree() == 0) return 0;
  SturmChain chain = SturmChain::build(p);
  int vlo = lo ? chain.variations_at(*lo) : chain.variations_at_neg_inf();
  int vhi = hi ? chain.variations_at(*hi) : chain.variations_at_pos_inf();
  return vlo - vhi;
}

int sturm_count_all(const RatPoly& p) { return sturm_count(p, std::nullopt, std::nullopt); }

Rational root_upper_bound(const RatPoly& p) {
  ET_CHECK(!p.is_zero(), "root bound of zero polynomial");
  Rational m(0);
  const Rational& lead = p.leading();
  for (int i = 0; i < p.degree(); ++i) {
    Rational c = p.coeff(i) / lead;
    if (c < 0) c = -c;
    if (c > m) m = c;
  }
  return m + 1;
}

std::vector<RootInterval> isolate_real_roots(const RatPoly& p) {
  std::vector<RootInterval> out;
  if (p.is_zero() || p.degree() == 0) return out;
  SturmChain chain = SturmChain::build(p);
  Rational bound = root_upper_bound(p);

  struct Cell {
    Rational lo, hi;
    int vlo, vhi;
  };
  std::vector<Cell> stack;
  {
    int vlo = chain.variations_at(-bound);
    int vhi = chain.variations_at(bound);
    if (vlo - vhi > 0) stack.push_back({-bound, bound, vlo, vhi});
  }
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    int count = c.vlo - c.vhi;
    if (count == 0) continue;
    if (count == 1) {
      out.push_back({c.lo, c.hi});
      continue;
    }
    Rational mid = (c.lo + c.hi) / 2;
    int vmid = chain.variations_at(mid);
    stack.push_back({c.lo, mid, c.vlo, vmid});
    stack.push_back({mid, c.hi, vmid, c.vhi});
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.hi > b.hi; });
  return out;
}

RootInterval refine_root_interval(const RatPoly& p, const SturmChain& chain, RootInterval iv,
                                  const Rational& width) {
  (void)p;
  while (iv.hi - iv.lo > width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    int vlo = chain.variations_at(iv.lo);
    int vmid = chain.variations_at(mid);
    if (vlo - vmid == 1) {
      iv.hi = mid;
    } else {
      iv.lo = mid;
    }
  }
  return iv;
}

} // namespace eigentree
