#pragma once

#include <map>
#include <string>
#include <vector>

#include "ttg/functors.hpp"
#include "ttg/shape.hpp"

namespace ttg {

/// One factor of an adelic ring: L_{x_n} ... L_{x_1} L_{x_0} Lambda_{x_0} 1 for a tuple of
/// subposet elements with dim x_j = i_j. A coarse assembly can split Lambda_{x_0} into several
/// completions; `part` picks one.
struct AdelicFactor {
  std::vector<int> tuple;  // x_0 .. x_n
  int part = 0;
  World world;
  std::string label(const BalmerPoset& P) const;
};

struct AdelicCube {
  Backend backend;
  AssemblyData assembly;
  int d = 0;
  std::map<Subset, std::vector<AdelicFactor>> factors;  // nonzero factors only

  Ring ring(Subset A) const;
  /// Factor a of A maps to factor b of B (A inside B): the tuple of b restricted to the
  /// dimensions of A is the tuple of a, and the canonical world map exists.
  bool edge(Subset A, std::size_t a, Subset B, std::size_t b) const;
};

AdelicCube adelic_cube(const Backend& B, const AssemblyData& A);
inline AdelicCube adelic_cube(const Backend& B) { return adelic_cube(B, finest(B.poset())); }
Ring adelic_ring(const AdelicCube& C, Subset A);

/// Vertexwise R(A) (x) X with the unit structure maps, on the punctured cube. zint objects
/// must be T-local (TruncationTooSmall otherwise).
CubeDiagram adelic_tensor(const AdelicCube& C, const Complex& X);
inline CubeDiagram adelic_unit(const AdelicCube& C) { return adelic_tensor(C, C.backend.unit()); }

/// Every term lies over a single factor of R.
bool over_ring(const Complex& X, const Ring& R);
/// The R-linear extension R (x) X -> Y of f is a homology isomorphism.
bool extension_is_iso(const Complex& X, const Complex& Y, const ChainMap& f, const Ring& R);
/// Every extended structure map R(B) (x)_{R(A)} D(A) -> D(B) is a homology isomorphism.
/// Terms of each D(A) must lie over a single factor of the ring label.
bool is_adelic_object(const CubeDiagram& D);

struct LimitCertificate {
  Complex limit;
  IsoCertificate cert;
};
/// Homotopy limit of the punctured cube, compared with X.
LimitCertificate reconstruct_limit(const CubeDiagram& D, const Complex& X);

}  // namespace ttg
