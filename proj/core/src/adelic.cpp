#include "ttg/adelic.hpp"

#include <functional>
#include <optional>

#include "ttg/error.hpp"
#include "ttg/holim.hpp"

namespace ttg {

std::string AdelicFactor::label(const BalmerPoset& P) const {
  std::string s;
  for (auto it = tuple.rbegin(); it != tuple.rend(); ++it) s += "L_" + P.id(*it) + " ";
  s += "Lambda_" + P.id(tuple.front());
  if (part) s += "#" + std::to_string(part);
  return s + " 1";
}

Ring AdelicCube::ring(Subset A) const {
  Ring r;
  auto it = factors.find(A);
  if (it == factors.end()) fail("ShapeMismatch", "no adelic vertex " + subset_label(A));
  for (auto& f : it->second) r.push_back(f.world);
  return r;
}

bool AdelicCube::edge(Subset A, std::size_t a, Subset B, std::size_t b) const {
  if ((A & B) != A || A == B) return false;
  const AdelicFactor& fa = factors.at(A).at(a);
  const AdelicFactor& fb = factors.at(B).at(b);
  std::size_t k = 0, pos = 0;
  for (int i = 0; i <= d; ++i) {
    if (!has(B, i)) continue;
    if (has(A, i) && fb.tuple[pos] != fa.tuple[k++]) return false;
    ++pos;
  }
  if (min_elem(A) == min_elem(B) && fa.part != fb.part) return false;
  return maps_to(fa.world, fb.world);
}

AdelicCube adelic_cube(const Backend& B, const AssemblyData& A) {
  if (A.ambient != B.poset()) fail("IncompatibleWorlds", "assembly data lives on a different poset");
  AdelicCube C;
  C.backend = B;
  C.assembly = A;
  C.d = B.d();
  const BalmerPoset& P = *B.poset();
  for (Subset S = 1; S < (1u << (C.d + 1)); ++S) {
    std::vector<int> dims;
    for (int i = 0; i <= C.d; ++i)
      if (has(S, i)) dims.push_back(i);
    auto& out = C.factors[S];
    std::vector<int> tuple;
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
      if (j == dims.size()) {
        auto parts = B.comp(A.preimage_below(tuple[0]), B.unit_world());
        for (std::size_t k = 0; k < parts.size(); ++k) {
          World w = parts[k];
          for (int x : tuple) w = B.loc(complement(P, A.preimage_above(x)), w).at(0);
          if (!w.is_zero()) out.push_back({tuple, static_cast<int>(k), w});
        }
        return;
      }
      for (int x : A.sub_of_dim(dims[j])) {
        tuple.push_back(x);
        rec(j + 1);
        tuple.pop_back();
      }
    };
    rec(0);
  }
  return C;
}

Ring adelic_ring(const AdelicCube& C, Subset A) { return C.ring(A); }

CubeDiagram adelic_tensor(const AdelicCube& C, const Complex& X) {
  C.backend.check_scope(X);
  Complex N = normalize(X);
  CubeDiagram D = CubeDiagram::on(punctured_cube(C.d));
  std::vector<Termwise> tw;
  for (std::size_t v = 0; v < D.index.vertices.size(); ++v) {
    Ring R = C.ring(D.index.vertices[v].set);
    tw.push_back(termwise(N, [&](const World& w) {
      std::vector<World> r;
      for (auto& f : R) r.push_back(tensor(w, f));
      return r;
    }));
    D.ring[v] = R;
    D.value[v] = tw.back().out;
  }
  for (std::size_t a = 0; a < D.index.arrows.size(); ++a) {
    const auto& ar = D.index.arrows[a];
    Subset A = D.index.vertices[ar.src].set, B = D.index.vertices[ar.dst].set;
    const Termwise &s = tw[ar.src], &t = tw[ar.dst];
    ChainMap f;
    for (auto& [n, orig] : s.origin) {
      auto ot = t.origin.find(n);
      if (ot == t.origin.end()) continue;
      Mat m(ot->second.size(), orig.size());
      for (std::size_t col = 0; col < orig.size(); ++col)
        for (std::size_t row = 0; row < ot->second.size(); ++row) {
          auto [j, ka] = orig[col];
          auto [i, kb] = ot->second[row];
          if (i != j || !C.edge(A, ka, B, kb)) continue;
          if (maps_to(s.out.at(n)[col], t.out.at(n)[row])) m(row, col) = 1;
        }
      f.set(n, m);
    }
    D.arrow[static_cast<int>(a)] = f;
  }
  return D;
}

namespace {

// Index of the ring factor a term lives over, if any.
std::optional<std::size_t> factor_of(const World& w, const Ring& R) {
  for (std::size_t b = 0; b < R.size(); ++b)
    if (tensor_over(w, R[b]) == w) return b;
  return std::nullopt;
}

}  // namespace

bool over_ring(const Complex& X, const Ring& R) {
  for (auto& [n, t] : X.terms)
    for (auto& w : t)
      if (!w.is_zero() && !factor_of(w, R)) return false;
  return true;
}

bool extension_is_iso(const Complex& X, const Complex& Y, const ChainMap& f, const Ring& R) {
  auto ext = termwise(X, [&](const World& w) {
    std::vector<World> r;
    for (auto& t : R) r.push_back(tensor_over(w, t));
    return r;
  });
  ChainMap g;
  for (auto& [n, orig] : ext.origin) {
    if (Y.rank(n) == 0) continue;
    Mat fn = f.at(n, X, Y);
    Mat m(Y.rank(n), orig.size());
    for (std::size_t col = 0; col < orig.size(); ++col) {
      auto [j, b] = orig[col];
      for (std::size_t i = 0; i < Y.rank(n); ++i) {
        if (fn(i, j).is_zero() || factor_of(Y.at(n)[i], R) != b) continue;
        if (!maps_to(ext.out.at(n)[col], Y.at(n)[i])) return false;
        m(i, col) = fn(i, j);
      }
    }
    g.set(n, m);
  }
  return is_chain_map(ext.out, Y, g) && quasi_iso(ext.out, Y, g);
}

bool is_adelic_object(const CubeDiagram& D) {
  if (D.index.kind != IndexKind::Punctured) fail("ShapeMismatch", "adelic objects live on the punctured cube");
  if (!D.arrows_valid()) return false;
  for (std::size_t v = 0; v < D.value.size(); ++v)
    if (!over_ring(D.value[v], D.ring[v])) return false;
  for (std::size_t a = 0; a < D.index.arrows.size(); ++a) {
    const auto& ar = D.index.arrows[a];
    if (!extension_is_iso(D.value[ar.src], D.value[ar.dst], D.map(static_cast<int>(a)), D.ring[ar.dst]))
      return false;
  }
  return true;
}

LimitCertificate reconstruct_limit(const CubeDiagram& D, const Complex& X) {
  LimitCertificate r;
  r.limit = holim_punctured(D);
  r.cert = compare("limit_recovers_object", homology(r.limit), homology(X));
  return r;
}

}  // namespace ttg
