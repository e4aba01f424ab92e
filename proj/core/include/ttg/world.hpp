#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ttg/arith.hpp"

namespace ttg {

/// A set of rational primes that is either finite or cofinite.
struct PrimeSet {
  bool cofinite = false;
  std::vector<unsigned long> listed;  // sorted; members if finite, excluded primes if cofinite

  static PrimeSet all() { return {true, {}}; }
  static PrimeSet none() { return {false, {}}; }
  static PrimeSet of(std::vector<unsigned long> ps);
  static PrimeSet all_but(std::vector<unsigned long> ps);

  bool contains(unsigned long p) const;
  bool empty() const { return !cofinite && listed.empty(); }
  bool is_all() const { return cofinite && listed.empty(); }
  PrimeSet intersect(const PrimeSet& o) const;
  PrimeSet unite(const PrimeSet& o) const;
  PrimeSet minus(const PrimeSet& o) const;
  bool subset_of(const PrimeSet& o) const;
  auto operator<=>(const PrimeSet&) const = default;
  bool operator==(const PrimeSet&) const = default;
};

enum class Family { Zero, Z, V };

/// Coefficient world. The integral family is parametrised by a prime set S
/// (the ring Z_S of rationals integral at every prime of S) together with
/// completions at a single prime; the valuation family is a (level, inversion)
/// grid: level 0 = V itself, 1 = y-adically complete, 2 = x-adically complete
/// (and y acting as zero); inversion 0 = none, 1 = x inverted, 2 = y inverted.
struct World {
  enum class Kind { Zero, ZS, Hat, HatRat, Fp, Val };
  Kind kind = Kind::Zero;
  PrimeSet S;
  unsigned long p = 0;
  int level = 0;
  int inv = 0;

  static World zero() { return {}; }
  static World zs(PrimeSet s) { return {Kind::ZS, std::move(s), 0, 0, 0}; }
  static World integers() { return zs(PrimeSet::all()); }
  static World rationals() { return zs(PrimeSet::none()); }
  static World int_loc(unsigned long p) { return zs(PrimeSet::of({p})); }
  static World int_inv(unsigned long p) { return zs(PrimeSet::all_but({p})); }
  static World padic(unsigned long p) { return {Kind::Hat, {}, p, 0, 0}; }
  static World padic_rat(unsigned long p) { return {Kind::HatRat, {}, p, 0, 0}; }
  static World prime_field(unsigned long p) { return {Kind::Fp, {}, p, 0, 0}; }
  static World val(int level, int inv);
  static World V() { return val(0, 0); }
  static World Vp() { return val(0, 1); }
  static World K() { return val(0, 2); }
  static World hat_m() { return val(2, 0); }
  static World hat_m_loc() { return val(2, 1); }
  static World hat_p_int() { return val(1, 0); }
  static World hat_p_loc() { return val(1, 1); }
  static World hat_p_frac() { return val(1, 2); }

  /// Parses catalogue names: Int, Rat, IntLoc(2), IntInv(3), IntLoc(2,3), IntInv(2,5),
  /// Padic(p), PadicRat(p), PrimeField(p), V (alias RankTwoVal), Vp, K (alias FracField),
  /// HatM, HatMLoc, HatPInt, HatPLoc, HatPFrac, Zero.
  static World parse(const std::string& name);
  std::string name() const;

  bool is_zero() const { return kind == Kind::Zero; }
  Family family() const;
  bool is_field() const;
  auto operator<=>(const World&) const = default;
  bool operator==(const World&) const = default;
};

/// Canonical ring map a -> b exists (inclusions, completions, the residue y -> 0,
/// reduction mod p, and anything -> Zero).
bool maps_to(const World& a, const World& b);
/// Image of a carrier element of a under the canonical map a -> b.
Scalar map_scalar(const World& a, const World& b, const Scalar& c);
/// Element of the dense carrier used for matrix entries in w.
bool in_carrier(const World& w, const Scalar& c);
bool is_unit(const World& w, const Scalar& c);
/// b/a lies in the carrier of w (a nonzero).
bool divides(const World& w, const Scalar& a, const Scalar& b);

/// Completion place carried by a world: prime p for the completed integral worlds.
std::optional<unsigned long> place_tag(const World& w);

/// Derived tensor product over the base ring of the family. Throws IncompatibleWorlds
/// for pairs outside the catalogue (e.g. completions at two different primes).
World tensor(const World& a, const World& b);
/// Tensor over a product of completions: distinct completion places are orthogonal.
World tensor_over(const World& a, const World& b);

/// Integral family: invert a set of primes.
World invert_primes(const World& w, const PrimeSet& P);
/// Integral family: derived p-adic completion of a flat world.
World complete_at(const World& w, unsigned long p);
/// Valuation family: invert x / invert y / x-adic completion / y-adic completion.
World invert_x(const World& w);
World invert_y(const World& w);
World complete_m(const World& w);
World complete_pm(const World& w);

}  // namespace ttg
