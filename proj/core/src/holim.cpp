#include "ttg/holim.hpp"

#include <map>

#include "ttg/error.hpp"

namespace ttg {

namespace {

struct Cube {
  std::map<Subset, Complex> v;
  std::map<std::pair<Subset, int>, ChainMap> e;
};

// F_j(C)(A) = fib(C(A) -> C(A u j)) for A avoiding j.
Cube fibre_along(const Cube& C, int j, Subset remaining) {
  Cube out;
  for (auto& [A, X] : C.v) {
    if (has(A, j)) continue;
    out.v[A] = fib(X, C.v.at(with(A, j)), C.e.at({A, j}));
  }
  for (auto& [A, X] : C.v) {
    if (has(A, j)) continue;
    for (int i = 0; i < 32; ++i) {
      if (!has(remaining, i) || i == j || has(A, i)) continue;
      Subset B = with(A, j), A2 = with(A, i), B2 = with(B, i);
      out.e[{A, i}] = fib_functor(X, C.v.at(B), C.v.at(A2), C.v.at(B2), C.e.at({A, i}), C.e.at({B, i}));
    }
  }
  return out;
}

Cube load(const CubeDiagram& D) {
  Cube C;
  for (std::size_t v = 0; v < D.index.vertices.size(); ++v) C.v[D.index.vertices[v].set] = D.value[v];
  for (std::size_t a = 0; a < D.index.arrows.size(); ++a) {
    const auto& ar = D.index.arrows[a];
    Subset s = D.index.vertices[ar.src].set, t = D.index.vertices[ar.dst].set;
    C.e[{s, min_elem(t & ~s)}] = D.map(static_cast<int>(a));
  }
  return C;
}

Complex collapse(Cube C, int d) {
  Subset remaining = upto(d);
  for (int j = 0; j <= d; ++j) {
    C = fibre_along(C, j, remaining);
    remaining = without(remaining, j);
  }
  return C.v.at(0);
}

}  // namespace

Complex total_fibre(const CubeDiagram& D) {
  if (D.index.kind != IndexKind::Cube) fail("ShapeMismatch", "total fibre needs a full cube");
  return collapse(load(D), D.index.d);
}

Complex holim_punctured(const CubeDiagram& D) {
  if (D.index.kind != IndexKind::Punctured) fail("ShapeMismatch", "homotopy limit needs a punctured cube");
  Cube C = load(D);
  C.v[0] = Complex();
  for (int i = 0; i <= D.index.d; ++i) C.e[{0, i}] = zero_map();
  Complex F = collapse(std::move(C), D.index.d);
  return shift(F, 1);
}

}  // namespace ttg
