#pragma once

#include <string>
#include <vector>

#include "ttg/adelic.hpp"

namespace ttg {

/// Diagram on I(d) whose vertices M(A^k) are modules over the adelic rings R(A).
struct TorsionModel {
  AdelicCube cube;
  CubeDiagram diagram;
};

TorsionModel tors(const AdelicCube& C, const Complex& X);

struct CheckResult {
  std::string property;
  std::string where;
  bool pass = false;
};

struct ValidationReport {
  std::vector<CheckResult> adjoint;  // oplax arrows: extensions are homology isomorphisms
  std::vector<CheckResult> torsion;  // M(i^i) is Gamma_{<=i}-torsion
  std::vector<CheckResult> layers;   // cofibre layers with their witnesses
  bool pass() const;
  std::vector<CheckResult> all() const;
};

ValidationReport validate(const Backend& B, const CubeDiagram& M);

struct RoundTrip {
  Complex limit;
  IsoCertificate cert;
};
/// big_R followed by the homotopy limit, compared with X. Throws ValidateFailed.
RoundTrip reconstruct(const TorsionModel& T, const Complex& X);

/// 1_tors(A^i) against Sigma^{d-i} Gamma_{<=i} 1_ad(A); for A = {i} also against
/// Sigma^{d-i} e(i) (x) 1_ad(i).
std::vector<IsoCertificate> one_tors_vertex(const AdelicCube& C, Subset A, int i);

struct CousinLayer {
  int dim = 0;
  std::string prime;
  std::string slot;  // chromatic slot M_h on formal chains, else empty
  Homology h;
};
/// Gamma_p L_p X for every p, grouped by dimension. On a formal backend only the slots are
/// listed.
std::vector<CousinLayer> cousin_report(const Backend& B, const Complex& X);

}  // namespace ttg
