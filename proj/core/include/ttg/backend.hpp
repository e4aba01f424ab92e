#pragma once

#include <set>
#include <string>
#include <vector>

#include "ttg/complex.hpp"
#include "ttg/spectrum.hpp"

namespace ttg {

/// A category with finite Balmer spectrum realized through coefficient worlds.
///   zint      derived category of Z, spectrum truncated to the closed points in T plus the
///             generic point "g"; objects in the tors/adelic pipeline must be T-local.
///   valrank2  derived category of the rank-two valuation ring V, spectrum m < p < g.
///   formal    poset only (chromatic chain and friends); no homotopy is computed.
class Backend {
public:
  enum class Kind { Zint, Valrank2, Formal };

  static Backend zint(const PrimeSet& T);
  static Backend valrank2();
  static Backend formal(Poset P, std::string label);
  /// Chain 0 < 1 < ... < n; element i has chromatic height n - i.
  static Backend chromatic(int n);

  Kind kind() const { return kind_; }
  const Poset& poset() const { return P_; }
  const PrimeSet& truncation() const { return T_; }
  int d() const { return P_->d(); }
  std::string name() const;
  /// Backend and truncation, embedded in every report.
  std::string scope() const;

  World unit_world() const;
  Complex unit() const;
  /// zint: the rational prime of a closed point (0 for the generic point).
  unsigned long prime(int element) const;
  int element(const std::string& id) const { return P_->index(id); }

  /// L_{V^c} and Lambda_V on a single world, as fixed-length factor lists (zero worlds
  /// mark vanishing factors). V must be specialization closed.
  std::vector<World> loc(const std::set<int>& V, const World& W) const;
  std::vector<World> comp(const std::set<int>& V, const World& W) const;

  /// zint: every term of the normalized complex must be T-local (free terms Z_S with S
  /// inside T, completions at primes of T); throws TruncationTooSmall. valrank2: family check only.
  void check_scope(const Complex& X) const;

  /// Throws UnsupportedRegion on the formal backend.
  void need_exact() const;

private:
  std::set<unsigned long> primes_of(const std::set<int>& V) const;

  Kind kind_ = Kind::Formal;
  Poset P_;
  PrimeSet T_;
  std::string label_;
};

}  // namespace ttg
