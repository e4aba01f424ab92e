#include "ttg/shape.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

#include "ttg/error.hpp"
#include "ttg/homology.hpp"

namespace ttg {

int min_elem(Subset A) { return A ? std::countr_zero(A) : -1; }
int max_elem(Subset A) { return A ? 31 - std::countl_zero(A) : -1; }

std::string subset_label(Subset A) {
  if (!A) return "{}";
  std::string s;
  for (int i = max_elem(A); i >= 0; --i)
    if (has(A, i)) s += std::to_string(i);
  return s;
}

bool covariant(ArrowKind k) { return k == ArrowKind::Cube || k == ArrowKind::Oplax || k == ArrowKind::DummyOut; }

std::string arrow_kind_name(ArrowKind k) {
  switch (k) {
    case ArrowKind::Cube: return "cube";
    case ArrowKind::Oplax: return "oplax";
    case ArrowKind::Lax: return "lax";
    case ArrowKind::DummyIn: return "dummy_in";
    case ArrowKind::DummyOut: return "dummy_out";
  }
  return "?";
}

std::string IndexVertex::label() const {
  if (k < 0) return subset_label(set);
  if (dummy) return subset_label(set) + "^(" + std::to_string(k) + ")";
  return subset_label(set) + "^" + std::to_string(k);
}

// ---------------------------------------------------------------- IndexCategory

int IndexCategory::find(const IndexVertex& v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

int IndexCategory::vertex(Subset A, int k, bool dummy) const {
  int i = find({A, k, dummy});
  if (i < 0) fail("ShapeMismatch", "no vertex " + IndexVertex{A, k, dummy}.label() + " in this index category");
  return i;
}

int IndexCategory::arrow(int src, int dst) const {
  for (std::size_t a = 0; a < arrows.size(); ++a)
    if (arrows[a].src == src && arrows[a].dst == dst) return static_cast<int>(a);
  return -1;
}

std::size_t IndexCategory::plain_count() const {
  return std::count_if(vertices.begin(), vertices.end(), [](const IndexVertex& v) { return !v.dummy; });
}

std::size_t IndexCategory::dummy_count() const { return vertices.size() - plain_count(); }

bool IndexCategory::is_thin() const {
  std::size_t n = vertices.size();
  std::vector<std::vector<int>> out(n);
  for (const auto& a : arrows) {
    if (a.src == a.dst) return false;
    out[a.src].push_back(a.dst);
  }
  std::vector<int> state(n, 0);
  std::function<bool(int)> acyclic_from = [&](int v) {
    state[v] = 1;
    for (int w : out[v]) {
      if (state[w] == 1) return false;
      if (state[w] == 0 && !acyclic_from(w)) return false;
    }
    state[v] = 2;
    return true;
  };
  for (std::size_t v = 0; v < n; ++v)
    if (state[v] == 0 && !acyclic_from(static_cast<int>(v))) return false;
  return true;
}

static void check_d(int d, int lo) {
  if (d < lo || d > 9) fail("RangeError", "cube dimension " + std::to_string(d) + " outside [" + std::to_string(lo) + ", 9]");
}

static IndexCategory cube(int d, bool punctured) {
  check_d(d, 0);
  IndexCategory C;
  C.kind = punctured ? IndexKind::Punctured : IndexKind::Cube;
  C.d = d;
  std::vector<Subset> sets;
  for (Subset A = punctured ? 1 : 0; A <= upto(d); ++A) sets.push_back(A);
  std::stable_sort(sets.begin(), sets.end(), [](Subset a, Subset b) { return std::popcount(a) < std::popcount(b); });
  for (Subset A : sets) C.vertices.push_back({A, -1, false});
  for (Subset A : sets)
    for (int i = 0; i <= d; ++i)
      if (!has(A, i)) C.arrows.push_back({C.vertex(A), C.vertex(with(A, i)), ArrowKind::Cube});
  return C;
}

IndexCategory full_cube(int d) { return cube(d, false); }
IndexCategory punctured_cube(int d) { return cube(d, true); }

IndexCategory face(const IndexCategory& C, int j, bool contains) {
  if (j < 0 || j > C.d) fail("RangeError", "face index " + std::to_string(j) + " outside [0, " + std::to_string(C.d) + "]");
  IndexCategory F;
  F.kind = C.kind;
  F.d = C.d;
  std::vector<int> remap(C.vertices.size(), -1);
  for (std::size_t v = 0; v < C.vertices.size(); ++v)
    if (has(C.vertices[v].set, j) == contains) {
      remap[v] = static_cast<int>(F.vertices.size());
      F.vertices.push_back(C.vertices[v]);
    }
  for (const auto& a : C.arrows)
    if (remap[a.src] >= 0 && remap[a.dst] >= 0) F.arrows.push_back({remap[a.src], remap[a.dst], a.kind});
  return F;
}

// Levels lo..d of I(d); dummies optional.
static IndexCategory layers(int d, int lo, bool dummies) {
  check_d(d, 1);
  if (lo < 0 || lo > d) fail("RangeError", "filtration degree " + std::to_string(lo) + " outside [0, " + std::to_string(d) + "]");
  IndexCategory C;
  C.d = d;
  C.lowest = lo;
  auto level_sets = [&](int k) {
    std::vector<Subset> r;
    if (k == d) {
      for (Subset A = 1; A <= upto(d); ++A)
        if (has(A, d)) r.push_back(A);
    } else {
      for (Subset A = 1; A <= upto(k); ++A) r.push_back(A);
    }
    std::stable_sort(r.begin(), r.end(), [](Subset a, Subset b) { return std::popcount(a) < std::popcount(b); });
    return r;
  };
  for (int k = d; k >= lo; --k)
    for (Subset A : level_sets(k)) C.vertices.push_back({A, k, false});
  if (dummies)
    for (int k = d - 2; k >= lo; --k)
      for (Subset A = 1; A <= upto(k); ++A) C.vertices.push_back({A, k, true});

  for (int k = d; k >= lo; --k)
    for (Subset A : level_sets(k)) {
      int top = k == d ? d - 1 : k;
      for (int i = 0; i <= top; ++i)
        if (!has(A, i)) C.arrows.push_back({C.vertex(A, k), C.vertex(with(A, i), k), ArrowKind::Oplax});
    }
  for (int k = d; k > lo; --k)
    for (Subset A : level_sets(k))
      if (has(A, k) && without(A, k)) C.arrows.push_back({C.vertex(without(A, k), k - 1), C.vertex(A, k), ArrowKind::Lax});
  if (dummies)
    for (const auto& v : std::vector<IndexVertex>(C.vertices))
      if (v.dummy) {
        int s = C.vertex(v.set, v.k, true);
        C.arrows.push_back({s, C.vertex(v.set, v.k + 1), ArrowKind::DummyIn});
        C.arrows.push_back({s, C.vertex(v.set, v.k), ArrowKind::DummyOut});
      }
  return C;
}

IndexCategory build_Iminus(int d) {
  IndexCategory C = layers(d, 0, false);
  C.kind = IndexKind::Iminus;
  return C;
}

IndexCategory build_I(int d) {
  IndexCategory C = layers(d, 0, true);
  C.kind = IndexKind::I;
  return C;
}

IndexCategory build_Igeq(int d, int i) {
  IndexCategory C = layers(d, i, true);
  C.kind = IndexKind::Igeq;
  return C;
}

IndexCategory restrict_filtration(const IndexCategory& C, int i) {
  if (C.kind == IndexKind::Cube || C.kind == IndexKind::Punctured)
    fail("ShapeMismatch", "filtration restriction needs a layered index category");
  IndexCategory R;
  R.kind = C.kind == IndexKind::Iminus ? IndexKind::Iminus : IndexKind::Igeq;
  R.d = C.d;
  R.lowest = std::max(C.lowest, i);
  std::vector<int> remap(C.vertices.size(), -1);
  for (std::size_t v = 0; v < C.vertices.size(); ++v)
    if (C.vertices[v].k >= i) {
      remap[v] = static_cast<int>(R.vertices.size());
      R.vertices.push_back(C.vertices[v]);
    }
  for (const auto& a : C.arrows)
    if (remap[a.src] >= 0 && remap[a.dst] >= 0) R.arrows.push_back({remap[a.src], remap[a.dst], a.kind});
  return R;
}

std::size_t iminus_count_formula(int d) {
  std::size_t n = std::size_t{1} << d;
  for (int k = 0; k < d; ++k) n += (std::size_t{1} << (k + 1)) - 1;
  return n;
}

std::string ring_name(const Ring& R) {
  if (R.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < R.size(); ++i) s += (i ? " x " : "") + R[i].name();
  return s;
}

// ---------------------------------------------------------------- CubeDiagram

CubeDiagram CubeDiagram::on(IndexCategory C) {
  CubeDiagram D;
  D.ring.resize(C.vertices.size());
  D.value.resize(C.vertices.size());
  D.index = std::move(C);
  return D;
}

const ChainMap& CubeDiagram::map(int a) const {
  auto it = arrow.find(a);
  if (it == arrow.end()) {
    const auto& ar = index.arrows.at(a);
    fail("MissingArrow", "no value on arrow " + index.vertices[ar.src].label() + " -> " + index.vertices[ar.dst].label());
  }
  return it->second;
}

const ChainMap& CubeDiagram::map(int src, int dst) const {
  int a = index.arrow(src, dst);
  if (a < 0) fail("ShapeMismatch", "no arrow " + index.vertices[src].label() + " -> " + index.vertices[dst].label());
  return map(a);
}

const Complex& CubeDiagram::from(int a) const {
  const auto& ar = index.arrows.at(a);
  return value[covariant(ar.kind) ? ar.src : ar.dst];
}

const Complex& CubeDiagram::to(int a) const {
  const auto& ar = index.arrows.at(a);
  return value[covariant(ar.kind) ? ar.dst : ar.src];
}

bool CubeDiagram::arrows_valid() const {
  for (std::size_t a = 0; a < index.arrows.size(); ++a) {
    auto it = arrow.find(static_cast<int>(a));
    if (it == arrow.end()) return false;
    if (!is_chain_map(from(static_cast<int>(a)), to(static_cast<int>(a)), it->second)) return false;
  }
  return true;
}

bool CubeDiagram::commutes() const {
  // Two-step paths with the same ends, built from the arrows of one covariant kind
  // (cube or oplax) or from an oplax/lax pair.
  auto val = [&](int a) -> const ChainMap& { return map(a); };
  const auto& V = index.vertices;
  for (std::size_t s = 0; s < V.size(); ++s) {
    if (V[s].dummy) continue;
    for (const auto& a1 : index.arrows) {
      if (a1.src != static_cast<int>(s) || !covariant(a1.kind) || a1.kind == ArrowKind::DummyOut) continue;
      for (const auto& a2 : index.arrows) {
        if (a2.src != static_cast<int>(s) || a2.kind != a1.kind || a2.dst <= a1.dst) continue;
        Subset A = V[s].set, B1 = V[a1.dst].set, B2 = V[a2.dst].set;
        int t = index.find({B1 | B2 | A, V[s].k, false});
        if (t < 0) continue;
        int b1 = index.arrow(a1.dst, t), b2 = index.arrow(a2.dst, t);
        if (b1 < 0 || b2 < 0) continue;
        int i1 = index.arrow(a1.src, a1.dst), i2 = index.arrow(a2.src, a2.dst);
        const Complex &X = value[s], &Y1 = value[a1.dst], &Y2 = value[a2.dst], &Z = value[t];
        if (!maps_equal(compose(val(b1), val(i1), X, Y1, Z), compose(val(b2), val(i2), X, Y2, Z), X, Z)) return false;
      }
    }
  }
  // Lax squares: e^{k-1} r_A = r_{A u i} e^k as maps M(A^k) -> M(((A u i) \ k)^{k-1}).
  for (std::size_t r = 0; r < index.arrows.size(); ++r) {
    const auto& lax = index.arrows[r];
    if (lax.kind != ArrowKind::Lax) continue;
    Subset A = V[lax.dst].set;
    int k = V[lax.dst].k;
    for (int i = 0; i < k; ++i) {
      if (has(A, i)) continue;
      int top = index.find({with(A, i), k, false});
      int low = index.find({without(with(A, i), k), k - 1, false});
      if (top < 0 || low < 0) continue;
      int ek = index.arrow(lax.dst, top), ek1 = index.arrow(lax.src, low), r2 = index.arrow(low, top);
      if (ek < 0 || ek1 < 0 || r2 < 0) continue;
      const Complex &X = value[lax.dst], &P = value[lax.src], &Q = value[top], &Z = value[low];
      if (!maps_equal(compose(val(ek1), val(static_cast<int>(r)), X, P, Z), compose(val(r2), val(ek), X, Q, Z), X, Z))
        return false;
    }
  }
  return true;
}

CubeDiagram restrict_filtration(const CubeDiagram& D, int i) {
  CubeDiagram R = CubeDiagram::on(restrict_filtration(D.index, i));
  for (std::size_t v = 0; v < R.index.vertices.size(); ++v) {
    int o = D.index.find(R.index.vertices[v]);
    R.ring[v] = D.ring[o];
    R.value[v] = D.value[o];
    if (R.index.vertices[v].dummy && D.witness.count(o)) R.witness[static_cast<int>(v)] = D.witness.at(o);
  }
  for (std::size_t a = 0; a < R.index.arrows.size(); ++a) {
    const auto& ar = R.index.arrows[a];
    int o = D.index.arrow(D.index.find(R.index.vertices[ar.src]), D.index.find(R.index.vertices[ar.dst]));
    if (D.arrow.count(o)) R.arrow[static_cast<int>(a)] = D.arrow.at(o);
  }
  return R;
}

// ---------------------------------------------------------------- cofibres along one direction

namespace {

void need_cube(const CubeDiagram& D, int j) {
  if (D.index.kind != IndexKind::Cube) fail("ShapeMismatch", "direction rewrites need a full cube");
  if (j < 0 || j > D.index.d) fail("ShapeMismatch", "direction " + std::to_string(j) + " not in the cube");
}

struct CubeView {
  const CubeDiagram& D;
  int v(Subset A) const { return D.index.vertex(A); }
  const Complex& at(Subset A) const { return D.value[v(A)]; }
  const ChainMap& edge(Subset A, int i) const { return D.map(v(A), v(with(A, i))); }
  int arrow(Subset A, int i) const { return D.index.arrow(v(A), v(with(A, i))); }
};

bool same_complex(const Complex& a, const Complex& b) {
  Complex x = a, y = b;
  x.prune();
  y.prune();
  return x.terms == y.terms && x.d == y.d;
}

}  // namespace

CubeDiagram cof_direction(const CubeDiagram& D, int j) {
  need_cube(D, j);
  CubeView in{D};
  CubeDiagram out = CubeDiagram::on(D.index);
  CubeView o{out};
  int d = D.index.d;
  for (Subset A = 0; A <= upto(d); ++A) {
    if (has(A, j)) continue;
    Subset B = with(A, j);
    const Complex &X = in.at(A), &Y = in.at(B);
    out.value[o.v(A)] = Y;
    out.ring[o.v(A)] = D.ring[in.v(B)];
    out.value[o.v(B)] = cone(X, Y, in.edge(A, j));
    out.ring[o.v(B)] = D.ring[in.v(B)];
    out.arrow[o.arrow(A, j)] = cone_in(X, Y);
  }
  for (Subset A = 0; A <= upto(d); ++A)
    for (int i = 0; i <= d; ++i) {
      if (i == j || has(A, i)) continue;
      if (has(A, j)) {
        Subset B = without(A, j);
        out.arrow[o.arrow(A, i)] = cone_functor(in.at(B), in.at(A), in.at(with(B, i)), in.at(with(A, i)),
                                                in.edge(B, i), in.edge(A, i));
      } else {
        out.arrow[o.arrow(A, i)] = in.edge(with(A, j), i);
      }
    }
  return out;
}

CubeDiagram fib_direction(const CubeDiagram& D, int j) {
  need_cube(D, j);
  CubeView in{D};
  CubeDiagram out = CubeDiagram::on(D.index);
  CubeView o{out};
  int d = D.index.d;
  for (Subset A = 0; A <= upto(d); ++A) {
    if (has(A, j)) continue;
    Subset B = with(A, j);
    const Complex &N = in.at(A), &C = in.at(B);
    out.value[o.v(A)] = fib(N, C, in.edge(A, j));
    out.ring[o.v(A)] = D.ring[in.v(A)];
    out.value[o.v(B)] = N;
    out.ring[o.v(B)] = D.ring[in.v(A)];
    out.arrow[o.arrow(A, j)] = fib_out(N, C);
  }
  for (Subset A = 0; A <= upto(d); ++A)
    for (int i = 0; i <= d; ++i) {
      if (i == j || has(A, i)) continue;
      if (has(A, j)) {
        out.arrow[o.arrow(A, i)] = in.edge(without(A, j), i);
      } else {
        Subset B = with(A, j);
        out.arrow[o.arrow(A, i)] =
            fib_functor(in.at(A), in.at(B), in.at(with(A, i)), in.at(with(B, i)), in.edge(A, i), in.edge(B, i));
      }
    }
  return out;
}

bool fib_cof_identity(const CubeDiagram& D, int j) {
  need_cube(D, j);
  CubeDiagram E = fib_direction(cof_direction(D, j), j);
  CubeView in{D}, e{E};
  int d = D.index.d;
  // kappa_A : D(A) -> E(A) = fib(D(A u j) -> cone), m -> (f m, -m, 0)
  std::map<Subset, ChainMap> kappa;
  for (Subset A = 0; A <= upto(d); ++A) {
    if (has(A, j)) {
      if (!same_complex(in.at(A), e.at(A))) return false;
      kappa[A] = identity_map(in.at(A));
      continue;
    }
    const Complex &X = in.at(A), &Y = in.at(with(A, j));
    const ChainMap& f = in.edge(A, j);
    ChainMap k;
    for (auto& [n, t] : X.terms) {
      if (t.empty()) continue;
      std::size_t a = Y.rank(n), b = X.rank(n), c = Y.rank(n + 1);
      Mat m(a + b + c, b);
      Mat fn = f.at(n, X, Y);
      for (std::size_t r = 0; r < a; ++r)
        for (std::size_t s = 0; s < b; ++s) m(r, s) = fn(r, s);
      for (std::size_t s = 0; s < b; ++s) m(a + s, s) = -1;
      k.set(n, m);
    }
    if (!is_chain_map(X, e.at(A), k) || !quasi_iso(X, e.at(A), k)) return false;
    if (!maps_equal(compose(e.edge(A, j), k, X, e.at(A), Y), f, X, Y)) return false;
    kappa[A] = k;
  }
  for (Subset A = 0; A <= upto(d); ++A)
    for (int i = 0; i <= d; ++i) {
      if (has(A, i) || i == j) continue;
      Subset B = with(A, i);
      const Complex &X = in.at(A), &X2 = in.at(B), &Y = e.at(A), &Y2 = e.at(B);
      if (!maps_equal(compose(e.edge(A, i), kappa[A], X, Y, Y2), compose(kappa[B], in.edge(A, i), X, X2, Y2), X, Y2))
        return false;
    }
  return true;
}

// ---------------------------------------------------------------- layers, L and R

namespace {

// Copies M into a diagram on the larger index C, matching vertices by label.
CubeDiagram enlarge(const CubeDiagram& M, IndexCategory C) {
  CubeDiagram R = CubeDiagram::on(std::move(C));
  for (std::size_t v = 0; v < M.index.vertices.size(); ++v) {
    int n = R.index.vertex(M.index.vertices[v].set, M.index.vertices[v].k, M.index.vertices[v].dummy);
    R.ring[n] = M.ring[v];
    R.value[n] = M.value[v];
    if (M.witness.count(static_cast<int>(v))) R.witness[n] = M.witness.at(static_cast<int>(v));
  }
  for (auto& [a, f] : M.arrow) {
    const auto& ar = M.index.arrows[a];
    int s = R.index.find(M.index.vertices[ar.src]), t = R.index.find(M.index.vertices[ar.dst]);
    R.arrow[R.index.arrow(s, t)] = f;
  }
  return R;
}

void set_arrow(CubeDiagram& D, int src, int dst, ChainMap f) {
  int a = D.index.arrow(src, dst);
  if (a < 0) fail("ShapeMismatch", "missing arrow " + D.index.vertices[src].label() + " -> " + D.index.vertices[dst].label());
  D.arrow[a] = std::move(f);
}

}  // namespace

CubeDiagram cof_m(const CubeDiagram& D) {
  if (D.index.kind != IndexKind::Punctured) fail("ShapeMismatch", "cof_m needs a punctured cube");
  int d = D.index.d;
  if (d < 1) fail("ShapeMismatch", "cof_m needs dimension at least one");
  CubeView in{D};
  CubeDiagram M = CubeDiagram::on(build_Igeq(d, d - 1));
  auto V = [&](Subset A, int k) { return M.index.vertex(A, k); };
  for (Subset A = 1; A <= upto(d); ++A) {
    if (has(A, d)) {
      M.value[V(A, d)] = in.at(A);
      M.ring[V(A, d)] = D.ring[in.v(A)];
    } else {
      M.value[V(A, d - 1)] = cone(in.at(A), in.at(with(A, d)), in.edge(A, d));
      M.ring[V(A, d - 1)] = D.ring[in.v(A)];
    }
  }
  for (Subset A = 1; A <= upto(d); ++A)
    for (int i = 0; i < d; ++i) {
      if (has(A, i)) continue;
      if (has(A, d)) {
        set_arrow(M, V(A, d), V(with(A, i), d), in.edge(A, i));
      } else {
        Subset B = with(A, d);
        set_arrow(M, V(A, d - 1), V(with(A, i), d - 1),
                  cone_functor(in.at(A), in.at(B), in.at(with(A, i)), in.at(with(B, i)), in.edge(A, i), in.edge(B, i)));
      }
    }
  for (Subset A = 1; A <= upto(d - 1); ++A)
    set_arrow(M, V(A, d - 1), V(with(A, d), d), cone_in(in.at(A), in.at(with(A, d))));
  return M;
}

CubeDiagram cof_plus(const CubeDiagram& M, int k) {
  int d = M.index.d;
  if (k < 1 || k > d - 1) fail("ShapeMismatch", "cofibre layer index " + std::to_string(k) + " outside [1, d-1]");
  if (M.index.lowest != k) fail("ShapeMismatch", "cof_plus expects filtration degrees >= " + std::to_string(k));
  CubeDiagram R = enlarge(M, build_Igeq(d, k - 1));
  auto V = [&](Subset A, int kk) { return R.index.vertex(A, kk); };
  auto edge = [&](Subset A, Subset B, int kk) -> const ChainMap& { return R.map(V(A, kk), V(B, kk)); };
  for (Subset A = 1; A <= upto(k - 1); ++A) {
    Subset B = with(A, k);
    const Complex &X = R.value[V(A, k)], &Y = R.value[V(B, k)];
    const ChainMap& f = edge(A, B, k);
    Complex Z = cone(X, Y, f);
    int z = V(A, k - 1);
    R.value[z] = Z;
    R.ring[z] = R.ring[V(A, k)];
    set_arrow(R, z, V(B, k), cone_in(X, Y));
    int dummy = R.index.vertex(A, k - 1, true);
    set_arrow(R, dummy, V(A, k), zero_map());
    set_arrow(R, dummy, z, zero_map());
    ChainMap H;
    H.degree = 1;
    for (auto& [n, t] : X.terms) {
      if (t.empty()) continue;
      Mat h(Z.rank(n + 1), X.rank(n));
      for (std::size_t s = 0; s < X.rank(n); ++s) h(s, s) = 1;
      H.set(n, h);
    }
    R.witness[dummy] = H;
  }
  for (Subset A = 1; A <= upto(k - 1); ++A)
    for (int i = 0; i <= k - 1; ++i) {
      if (has(A, i)) continue;
      Subset B = with(A, k), A2 = with(A, i), B2 = with(B, i);
      set_arrow(R, V(A, k - 1), V(A2, k - 1),
                cone_functor(R.value[V(A, k)], R.value[V(B, k)], R.value[V(A2, k)], R.value[V(B2, k)],
                             edge(A, A2, k), edge(B, B2, k)));
    }
  return R;
}

CubeDiagram big_L(const CubeDiagram& D) {
  CubeDiagram M = cof_m(D);
  for (int k = D.index.d - 1; k >= 1; --k) M = cof_plus(M, k);
  M.index.kind = IndexKind::I;
  return M;
}

CubeDiagram big_R(const CubeDiagram& M) {
  int d = M.index.d;
  if (M.index.kind == IndexKind::Cube || M.index.kind == IndexKind::Punctured || M.index.lowest > d - 1)
    fail("ShapeMismatch", "big_R needs filtration degrees d and d-1");
  CubeDiagram R = CubeDiagram::on(punctured_cube(d));
  auto V = [&](Subset A, int k) { return M.index.vertex(A, k); };
  auto lax = [&](Subset A) -> const ChainMap& { return M.map(V(A, d - 1), V(with(A, d), d)); };
  for (Subset A = 1; A <= upto(d); ++A) {
    int r = R.index.vertex(A);
    if (has(A, d)) {
      R.value[r] = M.value[V(A, d)];
      R.ring[r] = M.ring[V(A, d)];
    } else {
      R.value[r] = fib(M.value[V(with(A, d), d)], M.value[V(A, d - 1)], lax(A));
      R.ring[r] = M.ring[V(A, d - 1)];
    }
  }
  for (Subset A = 1; A <= upto(d); ++A)
    for (int i = 0; i <= d; ++i) {
      if (has(A, i)) continue;
      int s = R.index.vertex(A), t = R.index.vertex(with(A, i));
      if (has(A, d)) {
        set_arrow(R, s, t, M.map(V(A, d), V(with(A, i), d)));
      } else if (i == d) {
        set_arrow(R, s, t, fib_out(M.value[V(with(A, d), d)], M.value[V(A, d - 1)]));
      } else {
        Subset B = with(A, d), A2 = with(A, i), B2 = with(B, i);
        set_arrow(R, s, t,
                  fib_functor(M.value[V(B, d)], M.value[V(A, d - 1)], M.value[V(B2, d)], M.value[V(A2, d - 1)],
                              M.map(V(B, d), V(B2, d)), M.map(V(A, d - 1), V(A2, d - 1))));
      }
    }
  return R;
}

bool is_cofibre_layer(const CubeDiagram& M, int k) {
  int d = M.index.d;
  if (k < 1 || k > d - 1 || M.index.lowest > k - 1) return false;
  for (Subset A = 1; A <= upto(k - 1); ++A) {
    Subset B = with(A, k);
    int x = M.index.find({A, k, false}), y = M.index.find({B, k, false}), z = M.index.find({A, k - 1, false});
    int dummy = M.index.find({A, k - 1, true});
    if (x < 0 || y < 0 || z < 0 || dummy < 0) return false;
    if (M.value[dummy].size() != 0 || !M.witness.count(dummy)) return false;
    int fa = M.index.arrow(x, y), ga = M.index.arrow(z, y);
    if (!M.arrow.count(fa) || !M.arrow.count(ga)) return false;
    const Complex &X = M.value[x], &Y = M.value[y], &Z = M.value[z];
    const ChainMap &f = M.arrow.at(fa), &g = M.arrow.at(ga), &H = M.witness.at(dummy);
    if (!is_chain_map(X, Y, f) || !is_chain_map(Y, Z, g)) return false;
    if (!is_homotopy(X, Z, H, compose(g, f, X, Y, Z))) return false;
    // Phi(x, y) = H x + g y on cone(f)
    Complex C = cone(X, Y, f);
    ChainMap Phi;
    for (auto& [n, t] : C.terms) {
      if (t.empty() || Z.rank(n) == 0) continue;
      Mat h = H.at(n - 1, X, Z), gm = g.at(n, Y, Z);
      Mat m(Z.rank(n), C.rank(n));
      std::size_t off = X.rank(n - 1);
      for (std::size_t r = 0; r < Z.rank(n); ++r) {
        for (std::size_t s = 0; s < off; ++s) m(r, s) = h(r, s);
        for (std::size_t s = 0; s < Y.rank(n); ++s) m(r, off + s) = gm(r, s);
      }
      Phi.set(n, m);
    }
    if (!is_chain_map(C, Z, Phi) || !quasi_iso(C, Z, Phi)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- DOT

namespace {

std::string quote(const std::string& s) {
  std::string r = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') r += '\\';
    r += c;
  }
  return r + "\"";
}

std::string arrow_style(ArrowKind k) {
  switch (k) {
    case ArrowKind::Lax: return " [color=red]";
    case ArrowKind::DummyIn:
    case ArrowKind::DummyOut: return " [color=gray, style=dashed]";
    default: return "";
  }
}

std::string dot(const IndexCategory& C, bool dummies, const std::function<std::string(int)>& label) {
  std::ostringstream os;
  os << "digraph index {\n  node [shape=plaintext];\n";
  for (std::size_t v = 0; v < C.vertices.size(); ++v) {
    if (C.vertices[v].dummy && !dummies) continue;
    os << "  " << quote(C.vertices[v].label());
    std::string l = label(static_cast<int>(v));
    if (!l.empty()) os << " [label=" << quote(l) << "]";
    os << ";\n";
  }
  for (const auto& a : C.arrows) {
    if (!dummies && (C.vertices[a.src].dummy || C.vertices[a.dst].dummy)) continue;
    os << "  " << quote(C.vertices[a.src].label()) << " -> " << quote(C.vertices[a.dst].label()) << arrow_style(a.kind)
       << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string to_dot(const IndexCategory& C, bool dummies) {
  return dot(C, dummies, [](int) { return std::string(); });
}

std::string to_dot(const CubeDiagram& D, bool annotate, bool dummies) {
  return dot(D.index, dummies, [&](int v) {
    if (!annotate) return std::string();
    std::string h;
    try {
      h = str(homology(D.value[v]));
    } catch (const Error& e) {
      h = "(" + e.kind() + ")";
    }
    return D.index.vertices[v].label() + "\\n" + h;
  });
}

std::string to_dot(const BalmerPoset& P) {
  std::ostringstream os;
  os << "digraph spectrum {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < P.size(); ++i)
    os << "  " << quote(P.id(static_cast<int>(i))) << " [label=" << quote(P.id(static_cast<int>(i)) + " (" +
                                                                            std::to_string(P.dim(static_cast<int>(i))) + ")")
       << "];\n";
  for (auto [a, b] : P.covers()) os << "  " << quote(P.id(a)) << " -> " << quote(P.id(b)) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace ttg
