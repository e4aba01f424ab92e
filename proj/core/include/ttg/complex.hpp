#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ttg/world.hpp"

namespace ttg {

/// Dense matrix of scalars.
class Mat {
public:
  Mat() = default;
  Mat(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c) {}
  static Mat identity(std::size_t n);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  bool is_zero() const;
  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  /// Plain product; both operands over the same world.
  Mat operator*(const Mat& o) const;
  Mat operator-() const;
  Mat operator+(const Mat& o) const;
  std::string str() const;

private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

using Terms = std::vector<World>;

/// Product of matrices along worlds: (g f)_ik = sum_j g_ij * phi_{mid_j -> out_i}(f_jk).
Mat compose(const Mat& g, const Mat& f, const Terms& mid, const Terms& out);

/// Bounded complex whose degree-n term is a direct sum of rank-one free modules,
/// one per listed world. d[n] maps degree n to degree n-1 (rows = terms of n-1).
/// An entry from a term over Wj to a term over Wi is a carrier element of Wi acting
/// after the canonical map Wj -> Wi.
struct Complex {
  std::map<int, Terms> terms;
  std::map<int, Mat> d;

  const Terms& at(int n) const;
  std::size_t rank(int n) const { return at(n).size(); }
  Mat diff(int n) const;
  void set_diff(int n, Mat m);
  bool empty() const { return terms.empty(); }
  std::vector<int> degrees() const;
  std::optional<World> single_world() const;
  std::size_t size() const;
  /// Checks entry validity and d^2 = 0; throws DomainError.
  void validate() const;
  /// Drops zero-world terms and empty degrees.
  void prune();
  std::string str() const;
};

/// Degree-preserving (or degree-shifting, for homotopies) map of complexes.
/// f[n] maps X_n to Y_{n+degree}.
struct ChainMap {
  int degree = 0;
  std::map<int, Mat> f;
  Mat at(int n, const Complex& X, const Complex& Y) const;
  void set(int n, Mat m);
};

/// Global degree window; constructors fail with WindowExceeded outside it.
void set_window(int lo, int hi);
std::pair<int, int> window();
void check_window(const Complex& C);

Complex single(const World& w, int n = 0);
/// Two-term complex W^cols (degree n) -> W^rows (degree n-1).
Complex two_term(const World& w, int n, const Mat& m);

ChainMap identity_map(const Complex& X);
ChainMap zero_map();
ChainMap compose(const ChainMap& g, const ChainMap& f, const Complex& X, const Complex& Y, const Complex& Z);
ChainMap add(const ChainMap& a, const ChainMap& b, const Complex& X, const Complex& Y);
ChainMap negate(const ChainMap& a);
bool is_chain_map(const Complex& X, const Complex& Y, const ChainMap& f);
bool maps_equal(const ChainMap& a, const ChainMap& b, const Complex& X, const Complex& Y);
/// d_Y H + H d_X == target (H of degree +1).
bool is_homotopy(const Complex& X, const Complex& Y, const ChainMap& H, const ChainMap& target);
bool entries_valid(const Complex& X, const Complex& Y, const ChainMap& f);

/// Sigma^s: (Sigma^s X)_n = X_{n-s}, differential multiplied by (-1)^s.
Complex shift(const Complex& X, int s);
ChainMap shift_map(const ChainMap& f, int s);

/// cone_n = X_{n-1} + Y_n with d(x, y) = (-dx, f x + dy). Throws NotChainMap.
Complex cone(const Complex& X, const Complex& Y, const ChainMap& f);
ChainMap cone_in(const Complex& X, const Complex& Y);  // Y -> cone
ChainMap cone_out(const Complex& X, const Complex& Y);  // cone -> Sigma X
/// fib = Sigma^{-1} cone; fib_n = X_n + Y_{n+1}.
Complex fib(const Complex& X, const Complex& Y, const ChainMap& f);
ChainMap fib_out(const Complex& X, const Complex& Y);  // fib -> X
ChainMap fib_in(const Complex& X, const Complex& Y);   // Sigma^{-1} Y -> fib
/// Map of cones induced by a strictly commuting square (a on sources, b on targets).
ChainMap cone_functor(const Complex& X, const Complex& Y, const Complex& X2, const Complex& Y2, const ChainMap& a,
                      const ChainMap& b);
ChainMap fib_functor(const Complex& X, const Complex& Y, const Complex& X2, const Complex& Y2, const ChainMap& a,
                     const ChainMap& b);

Complex dsum(const Complex& X, const Complex& Y);
ChainMap dsum_map(const ChainMap& f, const ChainMap& g, const Complex& X1, const Complex& Y1, const Complex& X2,
                  const Complex& Y2);
ChainMap dsum_in1(const Complex& X, const Complex& Y);
ChainMap dsum_in2(const Complex& X, const Complex& Y);

/// Total tensor product with world-level tensor on terms; over=true uses tensor_over.
Complex tensor(const Complex& X, const Complex& Y, bool over = false);
/// Hom complex over a common single world.
Complex hom_complex(const Complex& X, const Complex& Y);

/// Termwise functor: every term W becomes the terms F(W)[0..k-1] (zero worlds dropped);
/// entries pass through the canonical maps and only connect equal factor indices.
struct Termwise {
  Complex out;
  ChainMap unit;  // X -> out, entry 1 on every surviving factor (when W maps to F(W))
  std::map<int, std::vector<std::pair<std::size_t, std::size_t>>> origin;  // (source term, factor)
};
Termwise termwise(const Complex& X, const std::function<std::vector<World>(const World&)>& F);
/// Image of a chain map under a termwise functor (source and target taken through F).
ChainMap termwise_map(const Termwise& A, const Termwise& B, const ChainMap& f, const Complex& X, const Complex& Y);
Complex base_change(const Complex& X, const std::function<World(const World&)>& F);

}  // namespace ttg
