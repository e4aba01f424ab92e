#include "ttg/complex.hpp"

#include <set>
#include <sstream>

#include "ttg/error.hpp"

namespace ttg {

// ---------------------------------------------------------------- Mat

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Mat::is_zero() const {
  for (auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Mat Mat::operator*(const Mat& o) const {
  if (c_ != o.r_) fail("DomainError", "matrix dimension mismatch");
  Mat r(r_, o.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) {
      const Scalar& a = (*this)(i, j);
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < o.c_; ++k)
        if (!o(j, k).is_zero()) r(i, k) += a * o(j, k);
    }
  return r;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& x : r.a_) x = -x;
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) fail("DomainError", "matrix dimension mismatch");
  Mat r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < r_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

Mat compose(const Mat& g, const Mat& f, const Terms& mid, const Terms& out) {
  if (g.cols() != f.rows() || g.rows() != out.size() || mid.size() != f.rows())
    fail("DomainError", "composition dimension mismatch");
  Mat r(g.rows(), f.cols());
  for (std::size_t j = 0; j < f.rows(); ++j)
    for (std::size_t k = 0; k < f.cols(); ++k) {
      if (f(j, k).is_zero()) continue;
      for (std::size_t i = 0; i < g.rows(); ++i) {
        if (g(i, j).is_zero()) continue;
        r(i, k) += g(i, j) * map_scalar(mid[j], out[i], f(j, k));
      }
    }
  return r;
}

// ---------------------------------------------------------------- window

namespace {
int g_lo = -8, g_hi = 8;
const Terms kNoTerms;
}  // namespace

void set_window(int lo, int hi) {
  g_lo = lo;
  g_hi = hi;
}
std::pair<int, int> window() { return {g_lo, g_hi}; }

void check_window(const Complex& C) {
  for (auto& [n, t] : C.terms)
    if (!t.empty() && (n < g_lo || n > g_hi))
      fail("WindowExceeded", "degree " + std::to_string(n) + " outside window [" + std::to_string(g_lo) + ", " +
                                 std::to_string(g_hi) + "]");
}

// ---------------------------------------------------------------- Complex

const Terms& Complex::at(int n) const {
  auto it = terms.find(n);
  return it == terms.end() ? kNoTerms : it->second;
}

Mat Complex::diff(int n) const {
  auto it = d.find(n);
  if (it != d.end()) return it->second;
  return Mat(rank(n - 1), rank(n));
}

void Complex::set_diff(int n, Mat m) {
  if (m.rows() != rank(n - 1) || m.cols() != rank(n)) fail("DomainError", "differential dimension mismatch");
  if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) {
    d.erase(n);
    return;
  }
  d[n] = std::move(m);
}

std::vector<int> Complex::degrees() const {
  std::vector<int> v;
  for (auto& [n, t] : terms)
    if (!t.empty()) v.push_back(n);
  return v;
}

std::optional<World> Complex::single_world() const {
  std::optional<World> w;
  for (auto& [n, t] : terms)
    for (auto& x : t) {
      if (!w) w = x;
      else if (!(*w == x)) return std::nullopt;
    }
  return w;
}

std::size_t Complex::size() const {
  std::size_t s = 0;
  for (auto& [n, t] : terms) s += t.size();
  return s;
}

void Complex::validate() const {
  for (auto& [n, m] : d) {
    if (m.rows() != rank(n - 1) || m.cols() != rank(n)) fail("DomainError", "differential dimension mismatch");
    const Terms& src = at(n);
    const Terms& tgt = at(n - 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const Scalar& e = m(i, j);
        if (e.is_zero()) continue;
        if (!maps_to(src[j], tgt[i]) || !in_carrier(tgt[i], e))
          fail("DomainError", "invalid entry " + e.str() + " for " + src[j].name() + " -> " + tgt[i].name());
      }
  }
  for (auto& [n, m] : d) {
    auto it = d.find(n - 1);
    if (it == d.end()) continue;
    if (!compose(it->second, m, at(n - 1), at(n - 2)).is_zero())
      fail("DomainError", "d^2 != 0 at degree " + std::to_string(n));
  }
}

void Complex::prune() {
  std::map<int, std::vector<std::size_t>> keep;
  for (auto& [n, t] : terms)
    for (std::size_t i = 0; i < t.size(); ++i)
      if (!t[i].is_zero()) keep[n].push_back(i);
  Complex r;
  for (auto& [n, idx] : keep) {
    Terms t;
    for (auto i : idx) t.push_back(terms.at(n)[i]);
    r.terms[n] = t;
  }
  for (auto& [n, m] : d) {
    auto a = keep.find(n), b = keep.find(n - 1);
    if (a == keep.end() || b == keep.end()) continue;
    Mat x(b->second.size(), a->second.size());
    for (std::size_t i = 0; i < b->second.size(); ++i)
      for (std::size_t j = 0; j < a->second.size(); ++j) x(i, j) = m(b->second[i], a->second[j]);
    r.set_diff(n, x);
  }
  *this = std::move(r);
}

std::string Complex::str() const {
  std::ostringstream os;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    os << "C" << it->first << " = [";
    for (std::size_t i = 0; i < it->second.size(); ++i) os << (i ? ", " : "") << it->second[i].name();
    os << "]";
    auto m = d.find(it->first);
    if (m != d.end()) os << "  d = " << m->second.str();
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------- ChainMap

Mat ChainMap::at(int n, const Complex& X, const Complex& Y) const {
  auto it = f.find(n);
  if (it != f.end()) return it->second;
  return Mat(Y.rank(n + degree), X.rank(n));
}

void ChainMap::set(int n, Mat m) {
  if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) {
    f.erase(n);
    return;
  }
  f[n] = std::move(m);
}

Complex single(const World& w, int n) {
  Complex c;
  if (!w.is_zero()) c.terms[n] = {w};
  return c;
}

Complex two_term(const World& w, int n, const Mat& m) {
  Complex c;
  if (m.cols()) c.terms[n] = Terms(m.cols(), w);
  if (m.rows()) c.terms[n - 1] = Terms(m.rows(), w);
  c.set_diff(n, m);
  return c;
}

ChainMap identity_map(const Complex& X) {
  ChainMap f;
  for (auto& [n, t] : X.terms) f.set(n, Mat::identity(t.size()));
  return f;
}

ChainMap zero_map() { return {}; }

static std::set<int> all_degrees(const Complex& X) {
  std::set<int> s;
  for (auto& [n, t] : X.terms)
    if (!t.empty()) s.insert(n);
  return s;
}

ChainMap compose(const ChainMap& g, const ChainMap& f, const Complex& X, const Complex& Y, const Complex& Z) {
  ChainMap r;
  r.degree = f.degree + g.degree;
  for (int n : all_degrees(X)) {
    int m = n + f.degree;
    if (Y.rank(m) == 0 || Z.rank(m + g.degree) == 0) continue;
    r.set(n, compose(g.at(m, Y, Z), f.at(n, X, Y), Y.at(m), Z.at(m + g.degree)));
  }
  return r;
}

ChainMap add(const ChainMap& a, const ChainMap& b, const Complex& X, const Complex& Y) {
  if (a.degree != b.degree) fail("DomainError", "adding maps of different degree");
  ChainMap r;
  r.degree = a.degree;
  for (int n : all_degrees(X)) {
    if (Y.rank(n + a.degree) == 0) continue;
    r.set(n, a.at(n, X, Y) + b.at(n, X, Y));
  }
  return r;
}

ChainMap negate(const ChainMap& a) {
  ChainMap r = a;
  for (auto& [n, m] : r.f) m = -m;
  return r;
}

bool maps_equal(const ChainMap& a, const ChainMap& b, const Complex& X, const Complex& Y) {
  if (a.degree != b.degree) return false;
  for (int n : all_degrees(X))
    if (!(a.at(n, X, Y) == b.at(n, X, Y))) return false;
  return true;
}

bool entries_valid(const Complex& X, const Complex& Y, const ChainMap& f) {
  for (auto& [n, m] : f.f) {
    const Terms& src = X.at(n);
    const Terms& tgt = Y.at(n + f.degree);
    if (m.cols() != src.size() || m.rows() != tgt.size()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero() && (!maps_to(src[j], tgt[i]) || !in_carrier(tgt[i], m(i, j)))) return false;
  }
  return true;
}

bool is_chain_map(const Complex& X, const Complex& Y, const ChainMap& f) {
  if (f.degree != 0 || !entries_valid(X, Y, f)) return false;
  std::set<int> deg = all_degrees(X);
  for (int n : all_degrees(Y)) deg.insert(n + 1);
  for (int n : deg) {
    if (Y.rank(n - 1) == 0 || X.rank(n) == 0) continue;
    Mat lhs = compose(Y.diff(n), f.at(n, X, Y), Y.at(n), Y.at(n - 1));
    Mat rhs = compose(f.at(n - 1, X, Y), X.diff(n), X.at(n - 1), Y.at(n - 1));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool is_homotopy(const Complex& X, const Complex& Y, const ChainMap& H, const ChainMap& target) {
  if (H.degree != 1 || target.degree != 0) return false;
  for (int n : all_degrees(X)) {
    if (Y.rank(n) == 0) continue;
    Mat a = Y.rank(n + 1) ? compose(Y.diff(n + 1), H.at(n, X, Y), Y.at(n + 1), Y.at(n)) : Mat(Y.rank(n), X.rank(n));
    Mat b = X.rank(n - 1) ? compose(H.at(n - 1, X, Y), X.diff(n), X.at(n - 1), Y.at(n)) : Mat(Y.rank(n), X.rank(n));
    if (!(a + b == target.at(n, X, Y))) return false;
  }
  return true;
}

// ---------------------------------------------------------------- shifts, cones, fibres

Complex shift(const Complex& X, int s) {
  Complex r;
  for (auto& [n, t] : X.terms) r.terms[n + s] = t;
  for (auto& [n, m] : X.d) r.d[n + s] = (s % 2) ? -m : m;
  check_window(r);
  return r;
}

ChainMap shift_map(const ChainMap& f, int s) {
  ChainMap r;
  r.degree = f.degree;
  for (auto& [n, m] : f.f) r.f[n + s] = m;
  return r;
}

namespace {

Terms concat(const Terms& a, const Terms& b) {
  Terms r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

// Block matrix [[A, B], [C, D]]; any block may be empty-dimensioned.
Mat blocks(const Mat& A, const Mat& B, const Mat& C, const Mat& D, std::size_t r1, std::size_t r2, std::size_t c1,
           std::size_t c2) {
  Mat m(r1 + r2, c1 + c2);
  auto put = [&](const Mat& x, std::size_t ro, std::size_t co, std::size_t rr, std::size_t cc) {
    if (x.rows() == 0 || x.cols() == 0) return;
    if (x.rows() != rr || x.cols() != cc) fail("DomainError", "block dimension mismatch");
    for (std::size_t i = 0; i < rr; ++i)
      for (std::size_t j = 0; j < cc; ++j) m(ro + i, co + j) = x(i, j);
  };
  put(A, 0, 0, r1, c1);
  put(B, 0, c1, r1, c2);
  put(C, r1, 0, r2, c1);
  put(D, r1, c1, r2, c2);
  return m;
}

std::set<int> cone_degrees(const Complex& X, const Complex& Y) {
  std::set<int> s;
  for (int n : all_degrees(X)) s.insert(n + 1);
  for (int n : all_degrees(Y)) s.insert(n);
  return s;
}

}  // namespace

Complex cone(const Complex& X, const Complex& Y, const ChainMap& f) {
  if (!is_chain_map(X, Y, f)) fail("NotChainMap", "cone of a map that is not a chain map");
  Complex c;
  auto deg = cone_degrees(X, Y);
  for (int n : deg) c.terms[n] = concat(X.at(n - 1), Y.at(n));
  for (int n : deg) {
    if (c.rank(n - 1) == 0) continue;
    std::size_t r1 = X.rank(n - 2), r2 = Y.rank(n - 1), c1 = X.rank(n - 1), c2 = Y.rank(n);
    Mat m = blocks(-X.diff(n - 1), Mat(), f.at(n - 1, X, Y), Y.diff(n), r1, r2, c1, c2);
    c.set_diff(n, m);
  }
  check_window(c);
  return c;
}

ChainMap cone_in(const Complex& X, const Complex& Y) {
  ChainMap r;
  for (int n : all_degrees(Y)) {
    std::size_t a = X.rank(n - 1), b = Y.rank(n);
    Mat m(a + b, b);
    for (std::size_t i = 0; i < b; ++i) m(a + i, i) = 1;
    r.set(n, m);
  }
  return r;
}

ChainMap cone_out(const Complex& X, const Complex& Y) {
  ChainMap r;
  for (int n : all_degrees(X)) {
    std::size_t a = X.rank(n), b = Y.rank(n + 1);
    Mat m(a, a + b);
    for (std::size_t i = 0; i < a; ++i) m(i, i) = 1;
    r.set(n + 1, m);
  }
  return r;
}

Complex fib(const Complex& X, const Complex& Y, const ChainMap& f) { return shift(cone(X, Y, f), -1); }

ChainMap fib_out(const Complex& X, const Complex& Y) {
  ChainMap r;
  for (int n : all_degrees(X)) {
    std::size_t a = X.rank(n), b = Y.rank(n + 1);
    Mat m(a, a + b);
    for (std::size_t i = 0; i < a; ++i) m(i, i) = 1;
    r.set(n, m);
  }
  return r;
}

ChainMap fib_in(const Complex& X, const Complex& Y) {
  ChainMap r;
  for (int n : all_degrees(Y)) {
    std::size_t a = X.rank(n - 1), b = Y.rank(n);
    Mat m(a + b, b);
    for (std::size_t i = 0; i < b; ++i) m(a + i, i) = 1;
    r.set(n - 1, m);
  }
  return r;
}

ChainMap cone_functor(const Complex& X, const Complex& Y, const Complex& X2, const Complex& Y2, const ChainMap& a,
                      const ChainMap& b) {
  ChainMap r;
  std::set<int> deg = cone_degrees(X, Y);
  for (int n : deg) {
    std::size_t r1 = X2.rank(n - 1), r2 = Y2.rank(n), c1 = X.rank(n - 1), c2 = Y.rank(n);
    if (r1 + r2 == 0 || c1 + c2 == 0) continue;
    r.set(n, blocks(a.at(n - 1, X, X2), Mat(), Mat(), b.at(n, Y, Y2), r1, r2, c1, c2));
  }
  return r;
}

ChainMap fib_functor(const Complex& X, const Complex& Y, const Complex& X2, const Complex& Y2, const ChainMap& a,
                     const ChainMap& b) {
  return shift_map(cone_functor(X, Y, X2, Y2, a, b), -1);
}

// ---------------------------------------------------------------- sums

Complex dsum(const Complex& X, const Complex& Y) {
  Complex c;
  std::set<int> deg = all_degrees(X);
  for (int n : all_degrees(Y)) deg.insert(n);
  for (int n : deg) c.terms[n] = concat(X.at(n), Y.at(n));
  for (int n : deg) {
    if (c.rank(n - 1) == 0) continue;
    c.set_diff(n, blocks(X.diff(n), Mat(), Mat(), Y.diff(n), X.rank(n - 1), Y.rank(n - 1), X.rank(n), Y.rank(n)));
  }
  return c;
}

ChainMap dsum_map(const ChainMap& f, const ChainMap& g, const Complex& X1, const Complex& Y1, const Complex& X2,
                  const Complex& Y2) {
  if (f.degree != g.degree) fail("DomainError", "direct sum of maps of different degree");
  ChainMap r;
  r.degree = f.degree;
  std::set<int> deg = all_degrees(X1);
  for (int n : all_degrees(X2)) deg.insert(n);
  for (int n : deg) {
    int m = n + f.degree;
    std::size_t r1 = Y1.rank(m), r2 = Y2.rank(m), c1 = X1.rank(n), c2 = X2.rank(n);
    if (r1 + r2 == 0 || c1 + c2 == 0) continue;
    r.set(n, blocks(f.at(n, X1, Y1), Mat(), Mat(), g.at(n, X2, Y2), r1, r2, c1, c2));
  }
  return r;
}

ChainMap dsum_in1(const Complex& X, const Complex& Y) {
  ChainMap r;
  for (int n : all_degrees(X)) {
    Mat m(X.rank(n) + Y.rank(n), X.rank(n));
    for (std::size_t i = 0; i < X.rank(n); ++i) m(i, i) = 1;
    r.set(n, m);
  }
  return r;
}

ChainMap dsum_in2(const Complex& X, const Complex& Y) {
  ChainMap r;
  for (int n : all_degrees(Y)) {
    std::size_t a = X.rank(n);
    Mat m(a + Y.rank(n), Y.rank(n));
    for (std::size_t i = 0; i < Y.rank(n); ++i) m(a + i, i) = 1;
    r.set(n, m);
  }
  return r;
}

// ---------------------------------------------------------------- tensor and hom

Complex tensor(const Complex& X, const Complex& Y, bool over) {
  struct Key {
    int p, q;
    std::size_t a, b;
    auto operator<=>(const Key&) const = default;
  };
  std::map<int, std::vector<Key>> keys;
  std::map<Key, std::size_t> pos;
  Complex c;
  for (int p : all_degrees(X))
    for (int q : all_degrees(Y)) {
      int n = p + q;
      for (std::size_t a = 0; a < X.rank(p); ++a)
        for (std::size_t b = 0; b < Y.rank(q); ++b) {
          World w = over ? tensor_over(X.at(p)[a], Y.at(q)[b]) : tensor(X.at(p)[a], Y.at(q)[b]);
          if (w.is_zero()) continue;
          Key k{p, q, a, b};
          pos[k] = c.terms[n].size();
          c.terms[n].push_back(w);
          keys[n].push_back(k);
        }
    }
  for (auto& [n, ks] : keys) {
    if (c.rank(n - 1) == 0) continue;
    Mat m(c.rank(n - 1), c.rank(n));
    for (std::size_t col = 0; col < ks.size(); ++col) {
      auto [p, q, a, b] = ks[col];
      auto dx = X.d.find(p);
      if (dx != X.d.end())
        for (std::size_t a2 = 0; a2 < X.rank(p - 1); ++a2) {
          const Scalar& e = dx->second(a2, a);
          if (e.is_zero()) continue;
          auto it = pos.find(Key{p - 1, q, a2, b});
          if (it == pos.end()) continue;
          const World& tw = c.terms[n - 1][it->second];
          m(it->second, col) += map_scalar(X.at(p - 1)[a2], tw, e);
        }
      auto dy = Y.d.find(q);
      if (dy != Y.d.end())
        for (std::size_t b2 = 0; b2 < Y.rank(q - 1); ++b2) {
          const Scalar& e = dy->second(b2, b);
          if (e.is_zero()) continue;
          auto it = pos.find(Key{p, q - 1, a, b2});
          if (it == pos.end()) continue;
          const World& tw = c.terms[n - 1][it->second];
          Scalar v = map_scalar(Y.at(q - 1)[b2], tw, e);
          m(it->second, col) += (p % 2) ? -v : v;
        }
    }
    c.set_diff(n, m);
  }
  check_window(c);
  return c;
}

Complex hom_complex(const Complex& X, const Complex& Y) {
  auto wx = X.single_world(), wy = Y.single_world();
  if (wx && wy && !(*wx == *wy)) fail("IncompatibleWorlds", "hom complex needs a common world");
  struct Key {
    int p;
    std::size_t a, b;  // E_{b,a}: X_p basis a -> Y_{p+n} basis b
    auto operator<=>(const Key&) const = default;
  };
  World w = wx ? *wx : (wy ? *wy : World::zero());
  std::map<int, std::vector<Key>> keys;
  std::map<std::pair<int, Key>, std::size_t> pos;
  Complex c;
  for (int p : all_degrees(X))
    for (int q : all_degrees(Y)) {
      int n = q - p;
      for (std::size_t a = 0; a < X.rank(p); ++a)
        for (std::size_t b = 0; b < Y.rank(q); ++b) {
          Key k{p, a, b};
          pos[{n, k}] = c.terms[n].size();
          c.terms[n].push_back(w);
          keys[n].push_back(k);
        }
    }
  for (auto& [n, ks] : keys) {
    if (c.rank(n - 1) == 0) continue;
    Mat m(c.rank(n - 1), c.rank(n));
    Scalar sgn = (n % 2) ? Scalar(1) : Scalar(-1);  // -(-1)^n
    for (std::size_t col = 0; col < ks.size(); ++col) {
      auto [p, a, b] = ks[col];
      int q = p + n;
      auto dy = Y.d.find(q);
      if (dy != Y.d.end())
        for (std::size_t b2 = 0; b2 < Y.rank(q - 1); ++b2) {
          const Scalar& e = dy->second(b2, b);
          if (e.is_zero()) continue;
          m(pos.at({n - 1, Key{p, a, b2}}), col) += e;
        }
      auto dx = X.d.find(p + 1);
      if (dx != X.d.end())
        for (std::size_t a2 = 0; a2 < X.rank(p + 1); ++a2) {
          const Scalar& e = dx->second(a, a2);
          if (e.is_zero()) continue;
          m(pos.at({n - 1, Key{p + 1, a2, b}}), col) += sgn * e;
        }
    }
    c.set_diff(n, m);
  }
  check_window(c);
  return c;
}

// ---------------------------------------------------------------- termwise functors

Termwise termwise(const Complex& X, const std::function<std::vector<World>(const World&)>& F) {
  Termwise r;
  std::map<int, std::vector<std::vector<World>>> images;
  std::map<int, std::map<std::pair<std::size_t, std::size_t>, std::size_t>> pos;
  for (int n : all_degrees(X)) {
    auto& im = images[n];
    for (std::size_t j = 0; j < X.rank(n); ++j) {
      im.push_back(F(X.at(n)[j]));
      for (std::size_t k = 0; k < im.back().size(); ++k) {
        const World& w = im.back()[k];
        if (w.is_zero()) continue;
        pos[n][{j, k}] = r.out.terms[n].size();
        r.out.terms[n].push_back(w);
        r.origin[n].emplace_back(j, k);
      }
    }
    if (r.out.terms[n].empty()) r.out.terms.erase(n);
  }
  for (auto& [n, m] : X.d) {
    if (r.out.rank(n) == 0 || r.out.rank(n - 1) == 0) continue;
    Mat x(r.out.rank(n - 1), r.out.rank(n));
    for (std::size_t col = 0; col < r.out.rank(n); ++col) {
      auto [j, k] = r.origin[n][col];
      for (std::size_t i = 0; i < X.rank(n - 1); ++i) {
        if (m(i, j).is_zero()) continue;
        auto it = pos[n - 1].find({i, k});
        if (it == pos[n - 1].end()) continue;
        x(it->second, col) = map_scalar(X.at(n - 1)[i], r.out.terms[n - 1][it->second], m(i, j));
      }
    }
    r.out.set_diff(n, x);
  }
  for (auto& [n, orig] : r.origin) {
    Mat u(orig.size(), X.rank(n));
    for (std::size_t row = 0; row < orig.size(); ++row) {
      auto [j, k] = orig[row];
      if (maps_to(X.at(n)[j], r.out.terms[n][row])) u(row, j) = 1;
    }
    r.unit.set(n, u);
  }
  return r;
}

ChainMap termwise_map(const Termwise& A, const Termwise& B, const ChainMap& f, const Complex& X, const Complex& Y) {
  ChainMap r;
  r.degree = f.degree;
  for (auto& [n, origA] : A.origin) {
    int m = n + f.degree;
    auto ob = B.origin.find(m);
    if (ob == B.origin.end()) continue;
    Mat fm = f.at(n, X, Y);
    Mat x(ob->second.size(), origA.size());
    for (std::size_t col = 0; col < origA.size(); ++col)
      for (std::size_t row = 0; row < ob->second.size(); ++row) {
        auto [j, k] = origA[col];
        auto [i, k2] = ob->second[row];
        if (k != k2 || fm(i, j).is_zero()) continue;
        x(row, col) = map_scalar(Y.at(m)[i], B.out.at(m)[row], fm(i, j));
      }
    r.set(n, x);
  }
  return r;
}

Complex base_change(const Complex& X, const std::function<World(const World&)>& F) {
  return termwise(X, [&](const World& w) { return std::vector<World>{F(w)}; }).out;
}

}  // namespace ttg
