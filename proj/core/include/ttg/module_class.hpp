#pragma once

#include <map>
#include <string>
#include <vector>

#include "ttg/world.hpp"

namespace ttg {

/// One indecomposable summand of a homology module.
struct Piece {
  enum class Kind { Free, Cyclic, Prufer, Uhat, QuotSym };
  Kind kind = Kind::Free;
  World world;      // Free / Cyclic
  Scalar ann;       // Cyclic: normalized annihilator
  std::string tag;  // Prufer / Uhat: place ("2", "m", "p"); QuotSym: quotient name ("K/V")

  std::string str() const;
  bool operator==(const Piece& o) const { return str() == o.str(); }
};

/// Multiset of pieces in normal form. Cyclic pieces are rewritten to a world-independent
/// representative: prime-power cyclics over Int, V/(y^i x^j) over V, Vp/(y^i) over Vp.
class ModuleClass {
public:
  ModuleClass() = default;
  static ModuleClass free(const World& w, int rank = 1);
  /// W/aW; empty for a unit, Free(W) for a = 0.
  static ModuleClass cyclic(const World& w, const Scalar& a);
  static ModuleClass prufer(const std::string& place);
  static ModuleClass uhat(const std::string& place);
  static ModuleClass quot(const std::string& name);

  ModuleClass& operator+=(const ModuleClass& o);
  friend ModuleClass operator+(ModuleClass a, const ModuleClass& b) { return a += b; }
  bool operator==(const ModuleClass& o) const { return p_ == o.p_; }
  bool operator!=(const ModuleClass& o) const { return !(*this == o); }

  bool is_zero() const { return p_.empty(); }
  const std::vector<Piece>& pieces() const { return p_; }
  /// Number of Free pieces.
  int free_rank() const;
  /// Sorted list of piece names; "0" for the zero module.
  std::string str() const;
  std::vector<std::string> piece_names() const;

private:
  void add(Piece p);
  std::vector<Piece> p_;
};

/// Homology in every degree; degrees with zero homology are omitted.
using Homology = std::map<int, ModuleClass>;

std::string str(const Homology& h);
bool is_zero(const Homology& h);
/// Degreewise equality, ignoring degrees that carry the zero module.
bool same(const Homology& a, const Homology& b);
/// Shift every degree by s.
Homology shifted(const Homology& h, int s);

}  // namespace ttg
