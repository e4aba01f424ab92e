#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ttg {

/// Finite poset with derived dimension function. Elements are kept in canonical order
/// (dimension, then identifier); indices refer to that order.
class BalmerPoset {
public:
  const std::vector<std::string>& elements() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  int index(const std::string& id) const;  // throws UnknownElement
  const std::string& id(int i) const { return ids_.at(i); }
  /// a <= b, i.e. a lies in the closure of b.
  bool leq(int a, int b) const { return leq_[a][b]; }
  int dim(int a) const { return dim_[a]; }
  int d() const { return d_; }
  std::vector<int> of_dim(int k) const;
  /// Covering relations (a < b with nothing strictly between), canonical order.
  std::vector<std::pair<int, int>> covers() const;

  friend std::shared_ptr<const BalmerPoset> validate_poset(const std::vector<std::string>&,
                                                           const std::vector<std::pair<std::string, std::string>>&,
                                                           const std::optional<std::map<std::string, int>>&);

private:
  std::vector<std::string> ids_;
  std::map<std::string, int> index_;
  std::vector<std::vector<bool>> leq_;
  std::vector<int> dim_;
  int d_ = 0;
};

using Poset = std::shared_ptr<const BalmerPoset>;

/// Builds the transitive closure and derives dimensions. Relation (a, b) means a <= b.
/// Throws CycleError, DimMismatch, UnknownElement.
Poset validate_poset(const std::vector<std::string>& elements,
                     const std::vector<std::pair<std::string, std::string>>& relations,
                     const std::optional<std::map<std::string, int>>& dims = std::nullopt);

/// Downward-closed subset of a poset.
struct SpecClosedSet {
  Poset poset;
  std::set<int> members;
  bool contains(int i) const { return members.count(i) > 0; }
  std::vector<std::string> ids() const;
  bool operator==(const SpecClosedSet& o) const { return members == o.members; }
};

bool is_spec_closed(const BalmerPoset& P, const std::set<int>& S);
SpecClosedSet down_closure(const Poset& P, const std::vector<std::string>& ids);
SpecClosedSet down_closure_idx(const Poset& P, const std::set<int>& S);
std::set<int> up_cone(const BalmerPoset& P, int p);
std::set<int> up_cone(const Poset& P, const std::string& id);
/// Primes of dimension <= n; n = -1 gives the empty set. Throws RangeError outside [-1, d].
SpecClosedSet dim_filtration(const Poset& P, int n);
std::set<int> complement(const BalmerPoset& P, const std::set<int>& S);
/// Minimal / maximal elements of a subset.
std::set<int> minimal(const BalmerPoset& P, const std::set<int>& S);
std::set<int> maximal(const BalmerPoset& P, const std::set<int>& S);

/// Dimension-preserving order-preserving retraction onto a subposet.
struct AssemblyData {
  Poset ambient;
  std::set<int> sub;
  std::vector<int> alpha;  // ambient index -> ambient index of the image (a member of sub)
  std::string scope;       // free-form note on sampling/truncation, empty if exact

  /// alpha^{-1} of the elements of sub below / above x (x in sub).
  std::set<int> preimage_below(int x) const;
  std::set<int> preimage_above(int x) const;
  std::vector<int> sub_of_dim(int k) const;
};

/// Throws NotRetraction, DimensionNotPreserved, NotOrderPreserving, UnknownElement.
AssemblyData validate_assembly(const Poset& P, const std::vector<std::string>& sub,
                               const std::map<std::string, std::string>& alpha);
AssemblyData finest(const Poset& P);
/// One representative per dimension, forming a chain; lexicographically least ids.
AssemblyData coarsest(const Poset& P);
/// alpha^{-1}(V) for V specialization closed in the subposet. Throws NotSpecClosed.
SpecClosedSet preimage_family(const AssemblyData& A, const std::set<int>& V);
SpecClosedSet preimage_family(const AssemblyData& A, const std::vector<std::string>& V);

// ---------------------------------------------------------------- example spectra

Poset chain_poset(int n);  // 0 < 1 < ... < n, ids "0".."n"
Poset fan_poset(int k);    // m < p1..pk < g
Poset single_poset();

struct TorusSample {
  Poset poset;
  AssemblyData conn;
  std::map<std::string, std::vector<std::vector<long>>> annihilator;  // id -> lattice basis rows
};
/// Finite sample of the closed-subgroup poset of a torus of rank 1 or 2 under cotoral
/// inclusion, with the identity-component retraction.
TorusSample torus_poset(int rank, int samples);

}  // namespace ttg
