#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ttg/homology.hpp"

namespace ttg {

/// Residue truncation used by the oracle: Z/p^N, k[x]/x^N (after y -> 0) or k((x))[y]/y^N
/// (after inverting x). At the last place, worlds on which y acts as zero reduce to k((x)).
struct Place {
  enum class Kind { Prime, X, Y };
  Kind kind = Kind::Prime;
  unsigned long p = 2;
  static Place prime(unsigned long p) { return {Kind::Prime, p}; }
  static Place x() { return {Kind::X, 0}; }
  static Place y() { return {Kind::Y, 0}; }
  std::string name() const;
};

/// Length a*N + b, stored as (a, b).
using Affine = std::pair<long, long>;
using LengthProfile = std::map<int, Affine>;  // degree -> length of H_n(C (x)^L R/t^N)

/// Lengths of the homology of C reduced at the place, for one N. Empty when some term is
/// not flat-reducible there (e.g. PrimeField terms, or completions at x on the y-place).
std::optional<std::map<int, long>> truncated_lengths(const Complex& C, Place place, long N);
/// Lengths predicted by a homology classification. Empty when some piece has no reduction.
std::optional<LengthProfile> predicted_profile(const Homology& h, Place place);

struct OracleResult {
  std::string entry;
  std::string place;
  bool applicable = false;
  bool stabilized = false;
  long stable_at = 0;  // N at which two successive doublings agreed
  bool agrees = false;
  LengthProfile observed, predicted;
  bool pass() const { return !applicable || (stabilized && agrees); }
};

/// Doubles N from 16 to 1024 until the (slope, intercept) profile repeats, then compares
/// it with the profile of the claimed homology.
OracleResult oracle_check(const std::string& entry, const Complex& C, const Homology& claimed, Place place);

/// Every fracture rule, every tabulated quotient, and every completion identity, at every
/// place from {2, 3, 5, 7, x, y}.
std::vector<OracleResult> oracle_suite();

}  // namespace ttg
