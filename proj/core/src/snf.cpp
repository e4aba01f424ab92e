#include "ttg/snf.hpp"

#include <array>

#include "ttg/error.hpp"

namespace ttg {

namespace {

using Key = std::pair<mpz_class, Exp>;

mpz_class s_part(const World& W, const Scalar& a) {
  mpz_class num(abs(a.rational().get_num()));
  if (W.S.cofinite) {
    for (auto p : W.S.listed)
      while (mpz_divisible_ui_p(num.get_mpz_t(), p)) mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), p);
    return num;
  }
  mpz_class r = 1;
  for (auto p : W.S.listed)
    while (mpz_divisible_ui_p(num.get_mpz_t(), p)) {
      mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), p);
      r *= p;
    }
  return r;
}

Key key(const World& W, const Scalar& a) {
  using K = World::Kind;
  switch (W.kind) {
    case K::ZS: return {s_part(W, a), {0, 0}};
    case K::Hat: return {mpz_class(vp(a.rational(), W.p)), {0, 0}};
    case K::Val: {
      if (W.is_field()) return {0, {0, 0}};
      Exp v = a.valuation();
      if (W.level == 2) return {0, {0, v.second}};
      if (W.inv == 1) return {0, {v.first, 0}};
      return {0, v};
    }
    default: return {0, {0, 0}};
  }
}

bool bezout_world(const World& W) { return W.kind == World::Kind::ZS; }

struct Work {
  Mat A, U, Vt;
  const World& W;
  bool track;
  std::size_t m, n;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(A(a, j), A(b, j));
    if (track)
      for (std::size_t i = 0; i < m; ++i) std::swap(U(i, a), U(i, b));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m; ++i) std::swap(A(i, a), A(i, b));
    if (track)
      for (std::size_t j = 0; j < n; ++j) std::swap(Vt(a, j), Vt(b, j));
  }
  // row_i -= q row_t
  void row_sub(std::size_t i, std::size_t t, const Scalar& q) {
    for (std::size_t j = 0; j < n; ++j)
      if (!A(t, j).is_zero()) A(i, j) -= q * A(t, j);
    if (track)
      for (std::size_t r = 0; r < m; ++r)
        if (!U(r, i).is_zero()) U(r, t) += q * U(r, i);
  }
  // col_j -= q col_t
  void col_sub(std::size_t j, std::size_t t, const Scalar& q) {
    for (std::size_t i = 0; i < m; ++i)
      if (!A(i, t).is_zero()) A(i, j) -= q * A(i, t);
    if (track)
      for (std::size_t c = 0; c < n; ++c)
        if (!Vt(j, c).is_zero()) Vt(t, c) += q * Vt(j, c);
  }
  // rows (t, i) <- [[s, u], [-b', a']] (t, i), determinant one
  void row_bezout(std::size_t t, std::size_t i, const Scalar& s, const Scalar& u, const Scalar& bq, const Scalar& aq) {
    for (std::size_t j = 0; j < n; ++j) {
      Scalar x = A(t, j), y = A(i, j);
      A(t, j) = s * x + u * y;
      A(i, j) = -bq * x + aq * y;
    }
    if (track)
      for (std::size_t r = 0; r < m; ++r) {
        Scalar x = U(r, t), y = U(r, i);
        U(r, t) = aq * x + bq * y;
        U(r, i) = -u * x + s * y;
      }
  }
  // cols (t, j) <- (t, j) [[s, -b'], [u, a']]
  void col_bezout(std::size_t t, std::size_t j, const Scalar& s, const Scalar& u, const Scalar& bq, const Scalar& aq) {
    for (std::size_t i = 0; i < m; ++i) {
      Scalar x = A(i, t), y = A(i, j);
      A(i, t) = s * x + u * y;
      A(i, j) = -bq * x + aq * y;
    }
    if (track)
      for (std::size_t c = 0; c < n; ++c) {
        Scalar x = Vt(t, c), y = Vt(j, c);
        Vt(t, c) = aq * x + bq * y;
        Vt(j, c) = -u * x + s * y;
      }
  }

  // s a + u b = g with g the gcd of S-parts; returns (s, u, b/g, a/g).
  std::array<Scalar, 4> bezout(const Scalar& a, const Scalar& b) {
    mpz_class na = s_part(W, a), nb = s_part(W, b), g, s0, t0;
    mpz_gcdext(g.get_mpz_t(), s0.get_mpz_t(), t0.get_mpz_t(), na.get_mpz_t(), nb.get_mpz_t());
    Scalar ua = a / Scalar(mpq_class(na)), ub = b / Scalar(mpq_class(nb));
    Scalar s = Scalar(mpq_class(s0)) / ua, u = Scalar(mpq_class(t0)) / ub;
    Scalar G{mpq_class(g)};
    return {s, u, b / G, a / G};
  }

  void diagonalize(std::size_t t0) {
    for (std::size_t t = t0; t < std::min(m, n); ++t) {
      bool found = false;
      std::size_t pi = 0, pj = 0;
      Key best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (A(i, j).is_zero()) continue;
          Key k = key(W, A(i, j));
          if (!found || k < best) {
            found = true;
            best = k;
            pi = i;
            pj = j;
          }
        }
      if (!found) return;
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool dirty = true;
      while (dirty) {
        dirty = false;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (A(i, t).is_zero()) continue;
          if (divides(W, A(t, t), A(i, t))) {
            row_sub(i, t, A(i, t) / A(t, t));
          } else if (bezout_world(W)) {
            auto [s, u, bq, aq] = bezout(A(t, t), A(i, t));
            row_bezout(t, i, s, u, bq, aq);
            dirty = true;
          } else {
            fail("NotSNFWorld", "no pivot divides in " + W.name());
          }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (A(t, j).is_zero()) continue;
          if (divides(W, A(t, t), A(t, j))) {
            col_sub(j, t, A(t, j) / A(t, t));
          } else if (bezout_world(W)) {
            auto [s, u, bq, aq] = bezout(A(t, t), A(t, j));
            col_bezout(t, j, s, u, bq, aq);
            dirty = true;
          } else {
            fail("NotSNFWorld", "no pivot divides in " + W.name());
          }
        }
        if (!dirty)
          for (std::size_t i = t + 1; i < m; ++i)
            if (!A(i, t).is_zero()) dirty = true;
      }
    }
  }

  void fix_divisibility() {
    std::size_t r = std::min(m, n);
    for (bool again = true; again;) {
      again = false;
      for (std::size_t i = 0; i < r && !again; ++i) {
        if (A(i, i).is_zero()) break;
        for (std::size_t j = i + 1; j < r; ++j) {
          if (A(j, j).is_zero()) break;
          if (divides(W, A(i, i), A(j, j))) continue;
          row_sub(i, j, Scalar(-1));  // row_i += row_j
          diagonalize(i);
          again = true;
          break;
        }
      }
    }
  }

  void canonicalize() {
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
      if (A(t, t).is_zero()) break;
      Scalar c = canonical_associate(W, A(t, t));
      Scalar u = A(t, t) / c;  // unit
      if (u.is_one()) continue;
      Scalar ui = u.inverse();
      for (std::size_t j = 0; j < n; ++j)
        if (!A(t, j).is_zero()) A(t, j) *= ui;
      if (track)
        for (std::size_t r = 0; r < m; ++r)
          if (!U(r, t).is_zero()) U(r, t) *= u;
    }
  }
};

}  // namespace

Scalar canonical_associate(const World& W, const Scalar& a) {
  using K = World::Kind;
  switch (W.kind) {
    case K::ZS: return Scalar(mpq_class(s_part(W, a)));
    case K::Hat: {
      mpz_class pe;
      mpz_ui_pow_ui(pe.get_mpz_t(), W.p, vp(a.rational(), W.p));
      return Scalar(mpq_class(pe));
    }
    case K::Val: {
      if (W.is_field()) return Scalar(1);
      Exp v = a.valuation();
      if (W.level == 2) return Scalar::monomial(1, 0, v.second);
      if (W.inv == 1) return Scalar::monomial(1, v.first, 0);
      return Scalar::monomial(1, v.first, v.second);
    }
    default: return Scalar(1);
  }
}

static SNF run(const Mat& A, const World& W, bool track) {
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (!in_carrier(W, A(i, j))) fail("NotSNFWorld", "entry " + A(i, j).str() + " not in " + W.name());
  Work w{A, track ? Mat::identity(A.rows()) : Mat(), track ? Mat::identity(A.cols()) : Mat(), W, track, A.rows(),
         A.cols()};
  w.diagonalize(0);
  if (bezout_world(W)) w.fix_divisibility();
  w.canonicalize();
  return {w.U, w.A, w.Vt};
}

SNF snf(const Mat& A, const World& W) { return run(A, W, true); }

std::vector<Scalar> elementary_divisors(const Mat& A, const World& W) {
  SNF s = run(A, W, false);
  std::vector<Scalar> r;
  for (std::size_t t = 0; t < std::min(A.rows(), A.cols()); ++t) {
    if (s.D(t, t).is_zero()) break;
    r.push_back(s.D(t, t));
  }
  return r;
}

}  // namespace ttg
