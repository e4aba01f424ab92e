#include "ttg/arith.hpp"

#include <cctype>
#include <sstream>

#include "ttg/error.hpp"

namespace ttg {

long vp(const mpz_class& z, unsigned long p) {
  if (z == 0) fail("DomainError", "valuation of zero");
  mpz_class t = abs(z);
  long v = 0;
  while (mpz_divisible_ui_p(t.get_mpz_t(), p)) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
    ++v;
  }
  return v;
}

long vp(const mpq_class& q, unsigned long p) {
  return vp(mpz_class(q.get_num()), p) - vp(mpz_class(q.get_den()), p);
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  mpz_class z(p);
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const mpq_class& c) {
  if (sgn(c) != 0) t_[{0, 0}] = c;
}

Poly Poly::monomial(const mpq_class& c, int ydeg, int xdeg) {
  Poly p;
  if (sgn(c) != 0) p.t_[{ydeg, xdeg}] = c;
  return p;
}

bool Poly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first == Exp{0, 0});
}

mpq_class Poly::coeff(Exp e) const {
  auto it = t_.find(e);
  return it == t_.end() ? mpq_class(0) : it->second;
}

bool Poly::y_free() const {
  for (auto& [e, c] : t_)
    if (e.first != 0) return false;
  return true;
}

void Poly::add_term(Exp e, const mpq_class& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = t_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) t_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (auto& [ea, ca] : a.t_)
    for (auto& [eb, cb] : b.t_) r.add_term(ea + eb, ca * cb);
  return r;
}

Poly Poly::times_monomial(const mpq_class& c, Exp e) const {
  Poly r;
  if (sgn(c) == 0) return r;
  for (auto& [f, d] : t_) r.t_.emplace(f + e, d * c);
  return r;
}

Poly Poly::at_y_zero() const {
  Poly r;
  for (auto& [e, c] : t_) {
    if (e.first < 0) fail("DomainError", "residue of an element with negative y-valuation");
    if (e.first == 0) r.t_.emplace(e, c);
  }
  return r;
}

static void put_monomial(std::ostringstream& os, const mpq_class& c, Exp e, bool first) {
  mpq_class a = abs(c);
  bool neg = sgn(c) < 0;
  if (!first) os << (neg ? " - " : " + ");
  else if (neg) os << "-";
  bool unit_coeff = (a == 1);
  bool has_var = e.first != 0 || e.second != 0;
  if (!unit_coeff || !has_var) os << a.get_str();
  bool need_star = !unit_coeff;
  auto var = [&](const char* v, int k) {
    if (k == 0) return;
    if (need_star) os << "*";
    os << v;
    if (k != 1) os << "^" << k;
    need_star = true;
  };
  var("y", e.first);
  var("x", e.second);
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : t_) {
    put_monomial(os, c, e, first);
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(const Poly& num, const Poly& den) : rat_(false), n_(num), d_(den) {
  if (den.is_zero()) fail("DomainError", "zero denominator");
  normalize();
}

Scalar Scalar::x() { return monomial(1, 0, 1); }
Scalar Scalar::y() { return monomial(1, 1, 0); }
Scalar Scalar::monomial(const mpq_class& c, int ydeg, int xdeg) {
  if (ydeg == 0 && xdeg == 0) return Scalar(c);
  return Scalar(Poly::monomial(c, ydeg, xdeg), Poly(1));
}

// TODO: cancel the polynomial gcd of n_ and d_; without it dense valuation SNF past 6x6 swells.
void Scalar::normalize() {
  if (rat_) return;
  if (n_.is_zero()) {
    rat_ = true;
    q_ = 0;
    n_ = Poly();
    d_ = Poly();
    return;
  }
  // Scale so that the denominator's lowest term is exactly 1.
  Exp e = d_.low();
  mpq_class c = d_.low_coeff();
  if (!(e == Exp{0, 0} && c == 1)) {
    mpq_class ic = 1 / c;
    Exp me{-e.first, -e.second};
    n_ = n_.times_monomial(ic, me);
    d_ = d_.times_monomial(ic, me);
  }
  if (d_.size() > 1 && n_.size() == d_.size()) {
    // Proportional numerator and denominator collapse to a constant.
    mpq_class k = n_.low_coeff();
    if (n_.low() == d_.low() && n_ == d_.times_monomial(k, {0, 0})) {
      n_ = Poly(k);
      d_ = Poly(1);
    }
  }
  if (d_.size() == 1 && n_.is_constant()) {
    rat_ = true;
    q_ = n_.coeff({0, 0});
    n_ = Poly();
    d_ = Poly();
  }
}

Poly Scalar::num() const { return rat_ ? Poly(q_) : n_; }
Poly Scalar::den() const { return rat_ ? Poly(1) : d_; }

Scalar Scalar::operator-() const {
  if (rat_) return Scalar(mpq_class(-q_));
  Scalar r = *this;
  r.n_ = -r.n_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (rat_ && o.rat_) {
    q_ += o.q_;
    return *this;
  }
  Poly a = num(), b = den(), c = o.num(), d = o.den();
  Poly nn, dd;
  if (b == d) {
    nn = a + c;
    dd = b;
  } else {
    nn = a * d + c * b;
    dd = b * d;
  }
  *this = Scalar(nn, dd);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (rat_ && o.rat_) {
    q_ *= o.q_;
    return *this;
  }
  if (is_zero() || o.is_zero()) {
    *this = Scalar(0);
    return *this;
  }
  *this = Scalar(num() * o.num(), den() * o.den());
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail("DomainError", "inverse of zero");
  if (rat_) return Scalar(mpq_class(1 / q_));
  return Scalar(d_, n_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (rat_ && o.rat_) return q_ == o.q_;
  if (rat_ != o.rat_) return false;  // normalized: a non-rational is never constant
  if (d_ == o.d_) return n_ == o.n_;
  return n_ * o.d_ == o.n_ * d_;
}

Exp Scalar::valuation() const {
  if (is_zero()) fail("DomainError", "valuation of zero");
  if (rat_) return {0, 0};
  return n_.low() - d_.low();
}

bool Scalar::y_free() const { return rat_ || (n_.y_free() && d_.y_free()); }

Scalar Scalar::residue() const {
  if (rat_) return *this;
  // Denominator has lowest term 1, so every denominator term has y-degree >= 0.
  Poly n = n_.at_y_zero();
  Poly d = d_.at_y_zero();
  if (n.is_zero()) return Scalar(0);
  return Scalar(n, d);
}

std::string Scalar::str() const {
  if (rat_) return q_.get_str();
  if (d_.size() == 1 && d_.is_constant()) return n_.str();
  return "(" + n_.str() + ")/(" + d_.str() + ")";
}

// ---------------------------------------------------------------- parser

namespace {

struct Parser {
  const std::string& s;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void bad() { fail("ParseError", "cannot parse scalar '" + s + "'"); }

  Scalar expr() {
    skip();
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Scalar r = term();
    if (neg) r = -r;
    for (;;) {
      if (eat('+')) r += term();
      else if (eat('-')) r -= term();
      else return r;
    }
  }
  Scalar term() {
    Scalar r = power();
    for (;;) {
      if (eat('*')) r *= power();
      else if (eat('/')) {
        Scalar d = power();
        if (d.is_zero()) bad();
        r /= d;
      } else return r;
    }
  }
  Scalar power() {
    Scalar b = atom();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      skip();
      std::size_t st = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (st == i) bad();
      long k = std::stol(s.substr(st, i - st));
      Scalar r(1);
      for (long j = 0; j < k; ++j) r *= b;
      return neg ? r.inverse() : r;
    }
    return b;
  }
  Scalar atom() {
    skip();
    if (i >= s.size()) bad();
    if (eat('(')) {
      Scalar r = expr();
      if (!eat(')')) bad();
      return r;
    }
    if (s[i] == 'x') {
      ++i;
      return Scalar::x();
    }
    if (s[i] == 'y') {
      ++i;
      return Scalar::y();
    }
    std::size_t st = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (st == i) bad();
    return Scalar(mpq_class(mpz_class(s.substr(st, i - st))));
  }
};

}  // namespace

Scalar Scalar::parse(const std::string& s) {
  Parser p{s};
  Scalar r = p.expr();
  p.skip();
  if (p.i != s.size()) p.bad();
  return r;
}

}  // namespace ttg
