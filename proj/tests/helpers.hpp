#pragma once

#include <gtest/gtest.h>

#include <random>

#include "ttg/error.hpp"
#include "ttg/homology.hpp"
#include "ttg/library.hpp"
#include "ttg/module_class.hpp"

namespace ttg::test {

inline ModuleClass cyc(const World& w, const Scalar& a) { return ModuleClass::cyclic(w, a); }
inline ModuleClass fr(const World& w, int r = 1) { return ModuleClass::free(w, r); }

/// Kind of the ttg::Error thrown by f, or "none".
template <class F>
std::string error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "none";
}

inline std::mt19937 rng_for(unsigned salt) { return std::mt19937(seed_from_env() ^ (salt * 0x9E3779B9u)); }

}  // namespace ttg::test
