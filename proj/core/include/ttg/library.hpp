#pragma once

#include <random>
#include <string>
#include <vector>

#include "ttg/backend.hpp"
#include "ttg/shape.hpp"

namespace ttg {

/// Named example object on one backend. `needs` is the smallest truncation set the zint
/// pipeline accepts for it.
struct LibraryObject {
  std::string name;
  std::string backend;  // "zint" or "valrank2"
  std::string description;
  Complex X;
  PrimeSet needs;
};

/// Every example object, zint entries first; order is stable.
const std::vector<LibraryObject>& library();
std::vector<LibraryObject> library(const std::string& backend);
/// Throws UnknownObject.
const LibraryObject& library_object(const std::string& name);

/// Two-term complex W --a--> W in degrees n, n-1.
Complex cyclic_complex(const World& w, const Scalar& a, int n = 1);

/// Finitely generated complex over w in degrees [lo, hi]: a sum of random elementary pieces
/// (free, cyclic, contractible unit pieces) followed by random integral changes of basis.
/// Cyclic annihilators are products of powers of the given primes, or monomials y^i x^j
/// over the valuation family with i <= y_max. Gamma_m needs y_max = 0: it sends V/y to a
/// complex with non-finitely generated homology.
Complex random_complex(std::mt19937& rng, const World& w, const std::vector<unsigned long>& primes, int lo = 0,
                       int hi = 2, int y_max = 2);

/// Random full cube on [d]: every vertex carries a common random complex X plus its own
/// random summand; the edge in direction i is c_i on X and zero on the summands, so all
/// squares commute on the nose.
CubeDiagram random_cube(std::mt19937& rng, int d);

/// Broken variant of an assembly with the error kind validation must raise.
struct AssemblyMutant {
  std::string name;
  std::vector<std::string> sub;
  std::map<std::string, std::string> alpha;
  std::string expected;
};
/// Two dimension-breaking and one order-breaking variant of the identity-component
/// retraction on the rank-2 torus sample (samples >= 2).
std::vector<AssemblyMutant> torus_mutants(const TorusSample& T);

/// Seed for randomized suites: TTG_SEED if set, else a fixed default.
unsigned seed_from_env();

}  // namespace ttg
