#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <utility>

namespace ttg {

/// Exponent of a monomial y^first x^second. Lexicographic order on this pair is
/// exactly the valuation order on the rank-two valuation ring: v(y) = (1,0), v(x) = (0,1).
using Exp = std::pair<int, int>;

inline Exp operator+(Exp a, Exp b) { return {a.first + b.first, a.second + b.second}; }
inline Exp operator-(Exp a, Exp b) { return {a.first - b.first, a.second - b.second}; }

/// p-adic valuation of a nonzero rational.
long vp(const mpq_class& q, unsigned long p);
/// p-adic valuation of a nonzero integer.
long vp(const mpz_class& z, unsigned long p);
bool is_prime(unsigned long p);

/// Sparse Laurent polynomial in y and x with rational coefficients.
class Poly {
public:
  Poly() = default;
  explicit Poly(const mpq_class& c);
  static Poly monomial(const mpq_class& c, int ydeg, int xdeg);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  mpq_class coeff(Exp e) const;
  const std::map<Exp, mpq_class>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }

  /// Lexicographically smallest exponent; the valuation of the polynomial.
  Exp low() const { return t_.begin()->first; }
  const mpq_class& low_coeff() const { return t_.begin()->second; }
  bool y_free() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly& o) const { return t_ == o.t_; }

  Poly times_monomial(const mpq_class& c, Exp e) const;
  /// Drop every term of positive y-degree (terms of negative y-degree are a caller error).
  Poly at_y_zero() const;

  std::string str() const;

private:
  void add_term(Exp e, const mpq_class& c);
  std::map<Exp, mpq_class> t_;
};

/// Element of Q(x, y). Constants are kept on a fast rational path; everything else is a
/// normalized fraction whose denominator has lowest term exactly 1.
class Scalar {
public:
  Scalar() : q_(0) {}
  Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& q) : q_(q) { q_.canonicalize(); }  // NOLINT
  Scalar(const Poly& num, const Poly& den);

  static Scalar x();
  static Scalar y();
  static Scalar monomial(const mpq_class& c, int ydeg, int xdeg);
  /// Accepts "3", "-2/5", "x", "y^2*x", "1+x", "(y)/(x^2+1)".
  static Scalar parse(const std::string& s);

  bool is_zero() const { return rat_ && sgn(q_) == 0; }
  bool is_one() const { return rat_ && q_ == 1; }
  bool is_rational() const { return rat_; }
  const mpq_class& rational() const { return q_; }
  Poly num() const;
  Poly den() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar inverse() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Lexicographic (y, x) valuation; requires nonzero.
  Exp valuation() const;
  bool y_free() const;
  /// Image under y -> 0. Requires y-valuation >= 0.
  Scalar residue() const;

  std::string str() const;

private:
  void normalize();
  bool rat_ = true;
  mpq_class q_;
  Poly n_, d_;
};

}  // namespace ttg
