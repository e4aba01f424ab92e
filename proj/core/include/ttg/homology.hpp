#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ttg/complex.hpp"
#include "ttg/module_class.hpp"

namespace ttg {

/// Homology in all degrees. Single-world complexes go through Smith normal form; mixed
/// complexes are reduced by unit cancellation and fracture moves, and the remaining
/// components are read off from the cokernel tables. Throws UnsupportedMixedShape.
Homology homology(const Complex& C);
ModuleClass homology(const Complex& C, int n);
bool acyclic(const Complex& C);
/// The map induces an isomorphism on homology (its cone is acyclic).
bool quasi_iso(const Complex& X, const Complex& Y, const ChainMap& f);

/// Pullback identification W1 x_{W3} W2 for a fracture square with W1 + W2 = W3.
struct FractureRule {
  std::string name;
  World a, b, target, result;
};
std::optional<World> fracture(const World& a, const World& b, const World& target);
/// One representative instance of every rule family in the table.
std::vector<FractureRule> fracture_rules();

/// Class of W2/W1 for an injective catalogue map W1 -> W2, if tabulated.
std::optional<ModuleClass> quotient_class(const World& w1, const World& w2);
/// All tabulated quotient pairs (representatives), for the oracle.
std::vector<std::pair<World, World>> quotient_pairs();

/// Flat two-term (or one-term) complex realizing a single piece in degree n.
Complex piece_model(const Piece& p, int n);
/// Direct sum of piece models.
Complex elementary_model(const Homology& h);
/// Replaces every single-world connected component by the elementary model of its homology.
Complex normalize(const Complex& C);
/// Connected components of the term graph, as subcomplexes.
std::vector<Complex> components(const Complex& C);

}  // namespace ttg
