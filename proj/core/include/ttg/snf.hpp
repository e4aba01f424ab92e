#pragma once

#include <vector>

#include "ttg/complex.hpp"

namespace ttg {

struct SNF {
  Mat U, D, Vt;  // A = U * D * Vt
};

/// Smith normal form over a catalogue world. Pivot rule: minimal norm (valuation for the
/// valuation worlds), ties broken by lowest row then lowest column. Diagonal entries are
/// scaled to canonical representatives (positive S-part, p^v, y^i x^j, 1 over fields).
SNF snf(const Mat& A, const World& W);
/// Nonzero diagonal of the Smith form, without tracking transforms.
std::vector<Scalar> elementary_divisors(const Mat& A, const World& W);
/// Canonical associate of a nonzero carrier element.
Scalar canonical_associate(const World& W, const Scalar& a);

}  // namespace ttg
