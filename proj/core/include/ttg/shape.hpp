#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ttg/complex.hpp"
#include "ttg/spectrum.hpp"

namespace ttg {

/// Subsets of [d] = {0..d} are bitmasks; d <= 9 keeps labels unambiguous.
using Subset = unsigned;

inline bool has(Subset A, int i) { return (A >> i) & 1u; }
inline Subset with(Subset A, int i) { return A | (1u << i); }
inline Subset without(Subset A, int i) { return A & ~(1u << i); }
inline Subset upto(int k) { return k < 0 ? 0u : (1u << (k + 1)) - 1u; }  // [k]
int min_elem(Subset A);
int max_elem(Subset A);
/// Elements in descending order, e.g. {0,1} -> "10".
std::string subset_label(Subset A);

enum class IndexKind { Cube, Punctured, Iminus, I, Igeq };
/// Value directions: Cube, Oplax and DummyOut arrows carry M(src) -> M(dst);
/// Lax and DummyIn arrows carry M(dst) -> M(src).
enum class ArrowKind { Cube, Oplax, Lax, DummyIn, DummyOut };
bool covariant(ArrowKind k);
std::string arrow_kind_name(ArrowKind k);

struct IndexVertex {
  Subset set = 0;
  int k = -1;  // filtration degree; -1 on cube vertices
  bool dummy = false;
  /// "10^1", "0^(0)", or "10" for cube vertices.
  std::string label() const;
  auto operator<=>(const IndexVertex&) const = default;
};

struct IndexArrow {
  int src = 0, dst = 0;
  ArrowKind kind = ArrowKind::Cube;
};

struct IndexCategory {
  IndexKind kind = IndexKind::Cube;
  int d = 0;
  int lowest = 0;  // Igeq: smallest filtration degree kept
  std::vector<IndexVertex> vertices;
  std::vector<IndexArrow> arrows;

  int find(const IndexVertex& v) const;  // -1 when absent
  int vertex(Subset A, int k = -1, bool dummy = false) const;  // throws ShapeMismatch
  int arrow(int src, int dst) const;  // -1 when absent
  std::size_t plain_count() const;
  std::size_t dummy_count() const;
  /// Generating graph is acyclic, so imposing commutativity leaves at most one
  /// morphism between two objects.
  bool is_thin() const;
};

/// P([d]) including the empty set; arrows A -> A u i.
IndexCategory full_cube(int d);
/// P([d]) without the empty set: 2^{d+1} - 1 vertices.
IndexCategory punctured_cube(int d);
/// Vertices containing j (contains = true) or avoiding j, with the arrows among them.
IndexCategory face(const IndexCategory& cube, int j, bool contains);
IndexCategory build_Iminus(int d);
IndexCategory build_I(int d);
/// Full subcategory of I(d) on filtration degrees >= i (dummies A^(k) with k >= i).
IndexCategory build_Igeq(int d, int i);
IndexCategory restrict_filtration(const IndexCategory& C, int i);
/// 2^d + sum_{k<d} (2^{k+1} - 1).
std::size_t iminus_count_formula(int d);

/// A ring is a finite product of worlds; the empty product is the zero ring.
using Ring = std::vector<World>;
std::string ring_name(const Ring& R);

/// Diagram of complexes on an index category. Arrow values follow the directions of
/// ArrowKind. Dummy squares carry an explicit homotopy H : M(A^{k+1}) -> M(A^k) of
/// degree +1 with dH + Hd = (lax) o (oplax).
struct CubeDiagram {
  IndexCategory index;
  std::vector<Ring> ring;
  std::vector<Complex> value;
  std::map<int, ChainMap> arrow;
  std::map<int, ChainMap> witness;  // keyed by dummy vertex

  static CubeDiagram on(IndexCategory C);
  Complex& at(Subset A, int k = -1, bool dummy = false) { return value[index.vertex(A, k, dummy)]; }
  const Complex& at(Subset A, int k = -1, bool dummy = false) const { return value[index.vertex(A, k, dummy)]; }
  const ChainMap& map(int a) const;  // throws MissingArrow
  const ChainMap& map(int src, int dst) const;
  /// Source and target complexes of the value of arrow a.
  const Complex& from(int a) const;
  const Complex& to(int a) const;
  /// Every arrow carries a chain map with valid entries.
  bool arrows_valid() const;
  /// Strict commutativity of every square of cube arrows.
  bool commutes() const;
};

/// Diagram of the same shape on a restricted index (filtration degrees >= i).
CubeDiagram restrict_filtration(const CubeDiagram& D, int i);

/// Full cube: replace each edge M(A) -> M(A u j) by M(A u j) -> cone.
CubeDiagram cof_direction(const CubeDiagram& D, int j);
/// Full cube: replace each edge N(A) -> N(A u j) by fib -> N(A).
CubeDiagram fib_direction(const CubeDiagram& D, int j);
/// Exact check that fib_direction(cof_direction(D, j), j) is D up to the canonical
/// quasi-isomorphisms m -> (f m, -m, 0), with all squares commuting on the nose.
bool fib_cof_identity(const CubeDiagram& D, int j);

/// Punctured cube on [d] -> diagram on I^{>=d-1}(d): A^d = D(A), A^{d-1} = cone(D(A) -> D(A u d)).
CubeDiagram cof_m(const CubeDiagram& D);
/// Diagram on I^{>=k}(d) -> diagram on I^{>=k-1}(d): adds A^{k-1} = cone(M(A^k) -> M((A u k)^k))
/// with zero dummy A^{(k-1)} and its null homotopy.
CubeDiagram cof_plus(const CubeDiagram& M, int k);
CubeDiagram big_L(const CubeDiagram& D);
/// Diagram on I(d) (or I^{>=d-1}(d)) -> punctured cube: R(A) = M(A^d) for d in A, else
/// fib(M((A u d)^d) -> M(A^{d-1})).
CubeDiagram big_R(const CubeDiagram& M);
/// Layer between degrees k and k-1 (1 <= k <= d-1) is a cofibre sequence witnessed by the
/// stored homotopies, and the dummies are zero.
bool is_cofibre_layer(const CubeDiagram& M, int k);

std::string to_dot(const IndexCategory& C, bool dummies = false);
/// Vertices annotated with their homology when annotate is set.
std::string to_dot(const CubeDiagram& D, bool annotate = true, bool dummies = false);
std::string to_dot(const BalmerPoset& P);

}  // namespace ttg
