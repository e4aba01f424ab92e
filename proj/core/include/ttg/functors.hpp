#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ttg/backend.hpp"
#include "ttg/homology.hpp"

namespace ttg {

enum class FunctorKind { Gamma, Lcomp, Lambda, Delta };
std::string functor_name(FunctorKind k);

/// Region of a functor request: a specialization closed set of the backend poset, or of the
/// subposet of an assembly (then pulled back along alpha).
struct FunctorRequest {
  FunctorKind kind = FunctorKind::Gamma;
  std::set<int> region;
  std::optional<AssemblyData> assembly;
};

/// Output of a functor with its structure map. Gamma and Delta: out -> source;
/// L and Lambda: source -> out. The source is the normalized input.
struct Applied {
  Complex source;
  Complex out;
  ChainMap map;
};

/// Homology comparison of two sides of an equivalence.
struct IsoCertificate {
  std::string property;
  Homology lhs, rhs;
  bool hypothesis = true;
  bool holds = false;
};
IsoCertificate compare(std::string property, Homology lhs, Homology rhs);

Applied gamma(const Backend& B, const std::set<int>& V, const Complex& X);
/// L_{V^c}, the localization away from V.
Applied l_complement(const Backend& B, const std::set<int>& V, const Complex& X);
/// Derived completion, computed termwise on the flat terms.
Applied lambda(const Backend& B, const std::set<int>& V, const Complex& X);
Applied delta(const Backend& B, const std::set<int>& V, const Complex& X);
Applied apply(const Backend& B, const FunctorRequest& req, const Complex& X);

/// Region shorthands: below(p) = closure of p; away(p) = complement of the up-cone of p,
/// so that L_p = L_{away(p)^c}.
std::set<int> below(const Backend& B, int p);
std::set<int> away(const Backend& B, int p);

Complex gamma_p(const Backend& B, int p, const Complex& X);
Complex l_p(const Backend& B, int p, const Complex& X);
Complex lambda_p(const Backend& B, int p, const Complex& X);
/// Gamma_{<=n}, L_{>=n} (away from dimensions below n), Lambda_{<=n}.
Complex gamma_le(const Backend& B, int n, const Complex& X);
Complex l_ge(const Backend& B, int n, const Complex& X);
Complex lambda_le(const Backend& B, int n, const Complex& X);
/// Assembled versions for x in the subposet.
Complex gamma_at(const Backend& B, const AssemblyData& A, int x, const Complex& X);
Complex l_at(const Backend& B, const AssemblyData& A, int x, const Complex& X);
Complex lambda_at(const Backend& B, const AssemblyData& A, int x, const Complex& X);

/// Compact object supported exactly on the closure of p.
Complex koszul(const Backend& B, int p);

/// {p : Gamma_p L_p X has nonzero homology}, detected as K_p (x) L_p X. zint objects must
/// be T-local.
std::set<int> support(const Backend& B, const Complex& X);

/// Gamma_V X against the sum of Gamma_p X over the maximal p in V. Requires
/// supp(X) n V inside max(V); throws HypothesisFailed unless force is set.
IsoCertificate split_gamma(const Backend& B, const std::set<int>& V, const Complex& X, bool force = false);
/// L_{V^c} X against the sum of L_p X over the minimal p in V^c. Requires
/// supp(X) n V^c inside min(V^c).
IsoCertificate split_l(const Backend& B, const std::set<int>& V, const Complex& X, bool force = false);
/// Gamma_V of a finite sum against Gamma_V of the sum of the Gamma_V X_i.
IsoCertificate gamma_product(const Backend& B, const std::set<int>& V, const std::vector<Complex>& family);

/// e(i) = Gamma_{<=i} L_{>=i} 1.
Complex e_object(const Backend& B, int i);
/// e(i) against the sum of Gamma_p L_p 1 over dim p = i, and Gamma_{<=i} of the product of
/// the L_p X over dim p = i against e(i) (x) X.
std::vector<IsoCertificate> epointy(const Backend& B, int i, const Complex& X);

/// H(Lambda Gamma X) = H(Lambda X) and H(Gamma X) = H(Gamma Lambda X).
std::vector<IsoCertificate> mgm_check(const Backend& B, const std::set<int>& V, const Complex& X);
/// cone(Gamma X -> X) against L X, and cone(Delta X -> X) against Lambda X.
std::vector<IsoCertificate> triangles(const Backend& B, const std::set<int>& V, const Complex& X);

}  // namespace ttg
