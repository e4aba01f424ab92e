#include "ttg/torsion.hpp"

#include "ttg/error.hpp"
#include "ttg/holim.hpp"

namespace ttg {

TorsionModel tors(const AdelicCube& C, const Complex& X) {
  if (C.d < 1) fail("ShapeMismatch", "torsion models need dimension at least one");
  return {C, big_L(adelic_tensor(C, X))};
}

bool ValidationReport::pass() const {
  for (auto& c : all())
    if (!c.pass) return false;
  return true;
}

std::vector<CheckResult> ValidationReport::all() const {
  std::vector<CheckResult> r = adjoint;
  r.insert(r.end(), torsion.begin(), torsion.end());
  r.insert(r.end(), layers.begin(), layers.end());
  return r;
}

ValidationReport validate(const Backend& B, const CubeDiagram& M) {
  if (M.index.kind != IndexKind::I) fail("ShapeMismatch", "torsion models live on I(d)");
  ValidationReport r;
  const auto& I = M.index;
  for (std::size_t a = 0; a < I.arrows.size(); ++a) {
    const auto& ar = I.arrows[a];
    if (ar.kind != ArrowKind::Oplax) continue;
    std::string where = I.vertices[ar.src].label() + "->" + I.vertices[ar.dst].label();
    bool ok = M.arrow.count(static_cast<int>(a)) && over_ring(M.value[ar.src], M.ring[ar.src]) &&
              extension_is_iso(M.value[ar.src], M.value[ar.dst], M.map(static_cast<int>(a)), M.ring[ar.dst]);
    r.adjoint.push_back({"oplax_extension_is_iso", where, ok});
  }
  for (int i = 0; i <= I.d; ++i) {
    Subset A = 1u << i;
    const Complex& X = M.at(A, i);
    r.torsion.push_back({"vertex_is_torsion", I.vertices[I.vertex(A, i)].label(), acyclic(l_ge(B, i + 1, X))});
  }
  for (int k = 1; k <= I.d - 1; ++k)
    r.layers.push_back({"cofibre_layer", "k=" + std::to_string(k), is_cofibre_layer(M, k)});
  return r;
}

RoundTrip reconstruct(const TorsionModel& T, const Complex& X) {
  if (!validate(T.cube.backend, T.diagram).pass()) fail("ValidateFailed", "diagram is not a torsion model");
  RoundTrip r;
  r.limit = holim_punctured(big_R(T.diagram));
  r.cert = compare("round_trip_recovers_object", homology(r.limit), homology(X));
  return r;
}

std::vector<IsoCertificate> one_tors_vertex(const AdelicCube& C, Subset A, int i) {
  const Backend& B = C.backend;
  TorsionModel T = tors(C, B.unit());
  if (T.diagram.index.find({A, i, false}) < 0)
    fail("ShapeMismatch", subset_label(A) + "^" + std::to_string(i) + " is not a vertex of I(d)");
  Complex ring;
  for (auto& w : C.ring(A)) ring = dsum(ring, single(w));
  const Homology lhs = homology(T.diagram.at(A, i));
  std::string where = subset_label(A) + "^" + std::to_string(i);
  std::vector<IsoCertificate> r;
  r.push_back(compare("unit_vertex_is_shifted_torsion_of_ring " + where, lhs,
                      homology(shift(gamma_le(B, i, ring), C.d - i))));
  if (A == (1u << i))
    r.push_back(compare("unit_vertex_is_shifted_e_tensor_ring " + where, lhs,
                        homology(shift(tensor(e_object(B, i), ring), C.d - i))));
  return r;
}

std::vector<CousinLayer> cousin_report(const Backend& B, const Complex& X) {
  const BalmerPoset& P = *B.poset();
  std::vector<CousinLayer> r;
  bool exact = B.kind() != Backend::Kind::Formal;
  Complex N;
  if (exact) {
    B.check_scope(X);
    N = normalize(X);
  }
  for (int i = 0; i <= P.d(); ++i)
    for (int p : P.of_dim(i)) {
      CousinLayer c;
      c.dim = i;
      c.prime = P.id(p);
      if (exact) c.h = homology(gamma_p(B, p, l_p(B, p, N)));
      else if (B.name() == "chromatic") c.slot = "M_" + std::to_string(P.d() - i);
      r.push_back(std::move(c));
    }
  return r;
}

}  // namespace ttg
