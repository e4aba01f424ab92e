#include "ttg/spectrum.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ttg/error.hpp"

namespace ttg {

int BalmerPoset::index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) fail("UnknownElement", "no element '" + id + "'");
  return it->second;
}

std::vector<int> BalmerPoset::of_dim(int k) const {
  std::vector<int> r;
  for (int i = 0; i < static_cast<int>(size()); ++i)
    if (dim_[i] == k) r.push_back(i);
  return r;
}

std::vector<std::pair<int, int>> BalmerPoset::covers() const {
  std::vector<std::pair<int, int>> r;
  int n = static_cast<int>(size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !leq_[a][b]) continue;
      bool direct = true;
      for (int c = 0; c < n && direct; ++c)
        if (c != a && c != b && leq_[a][c] && leq_[c][b]) direct = false;
      if (direct) r.emplace_back(a, b);
    }
  return r;
}

Poset validate_poset(const std::vector<std::string>& elements,
                     const std::vector<std::pair<std::string, std::string>>& relations,
                     const std::optional<std::map<std::string, int>>& dims) {
  std::map<std::string, int> raw;
  for (const auto& e : elements) {
    if (e.empty()) fail("ParseError", "empty element identifier");
    if (!raw.emplace(e, static_cast<int>(raw.size())).second) fail("ParseError", "duplicate element '" + e + "'");
  }
  int n = static_cast<int>(elements.size());
  auto at = [&](const std::string& s) {
    auto it = raw.find(s);
    if (it == raw.end()) fail("UnknownElement", "relation mentions unknown element '" + s + "'");
    return it->second;
  };
  // below[b] lists a with a < b given directly
  std::vector<std::vector<int>> below(n);
  for (const auto& [a, b] : relations) {
    int ia = at(a), ib = at(b);
    if (ia != ib) below[ib].push_back(ia);
  }

  // DFS for cycles and longest descending chains.
  std::vector<int> state(n, 0), height(n, 0);
  std::function<void(int)> visit = [&](int v) {
    state[v] = 1;
    for (int u : below[v]) {
      if (state[u] == 1) fail("CycleError", "relations contain a cycle through '" + elements[u] + "'");
      if (state[u] == 0) visit(u);
      height[v] = std::max(height[v], height[u] + 1);
    }
    state[v] = 2;
  };
  for (int v = 0; v < n; ++v)
    if (state[v] == 0) visit(v);

  if (dims)
    for (const auto& [id, k] : *dims) {
      int i = at(id);
      if (height[i] != k)
        fail("DimMismatch", "element '" + id + "' declared dimension " + std::to_string(k) + " but chain length is " +
                                std::to_string(height[i]));
    }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::tie(height[a], elements[a]) < std::tie(height[b], elements[b]);
  });
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  auto P = std::make_shared<BalmerPoset>();
  P->ids_.resize(n);
  P->dim_.resize(n);
  P->leq_.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    P->ids_[i] = elements[order[i]];
    P->index_[P->ids_[i]] = i;
    P->dim_[i] = height[order[i]];
    P->d_ = std::max(P->d_, P->dim_[i]);
    P->leq_[i][i] = true;
  }
  for (int b = 0; b < n; ++b)
    for (int a : below[b]) P->leq_[pos[a]][pos[b]] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (P->leq_[i][k])
        for (int j = 0; j < n; ++j)
          if (P->leq_[k][j]) P->leq_[i][j] = true;
  return P;
}

std::vector<std::string> SpecClosedSet::ids() const {
  std::vector<std::string> r;
  for (int i : members) r.push_back(poset->id(i));
  return r;
}

bool is_spec_closed(const BalmerPoset& P, const std::set<int>& S) {
  for (int b : S)
    for (int a = 0; a < static_cast<int>(P.size()); ++a)
      if (P.leq(a, b) && !S.count(a)) return false;
  return true;
}

SpecClosedSet down_closure_idx(const Poset& P, const std::set<int>& S) {
  SpecClosedSet r{P, {}};
  for (int b : S)
    for (int a = 0; a < static_cast<int>(P->size()); ++a)
      if (P->leq(a, b)) r.members.insert(a);
  return r;
}

SpecClosedSet down_closure(const Poset& P, const std::vector<std::string>& ids) {
  std::set<int> S;
  for (const auto& s : ids) S.insert(P->index(s));
  return down_closure_idx(P, S);
}

std::set<int> up_cone(const BalmerPoset& P, int p) {
  std::set<int> r;
  for (int q = 0; q < static_cast<int>(P.size()); ++q)
    if (P.leq(p, q)) r.insert(q);
  return r;
}

std::set<int> up_cone(const Poset& P, const std::string& id) { return up_cone(*P, P->index(id)); }

SpecClosedSet dim_filtration(const Poset& P, int n) {
  if (n < -1 || n > P->d())
    fail("RangeError", "filtration index " + std::to_string(n) + " outside [-1, " + std::to_string(P->d()) + "]");
  SpecClosedSet r{P, {}};
  for (int i = 0; i < static_cast<int>(P->size()); ++i)
    if (P->dim(i) <= n) r.members.insert(i);
  return r;
}

std::set<int> complement(const BalmerPoset& P, const std::set<int>& S) {
  std::set<int> r;
  for (int i = 0; i < static_cast<int>(P.size()); ++i)
    if (!S.count(i)) r.insert(i);
  return r;
}

std::set<int> minimal(const BalmerPoset& P, const std::set<int>& S) {
  std::set<int> r;
  for (int a : S) {
    bool m = true;
    for (int b : S)
      if (b != a && P.leq(b, a)) m = false;
    if (m) r.insert(a);
  }
  return r;
}

std::set<int> maximal(const BalmerPoset& P, const std::set<int>& S) {
  std::set<int> r;
  for (int a : S) {
    bool m = true;
    for (int b : S)
      if (b != a && P.leq(a, b)) m = false;
    if (m) r.insert(a);
  }
  return r;
}

// ---------------------------------------------------------------- assembly data

std::set<int> AssemblyData::preimage_below(int x) const {
  std::set<int> r;
  for (int p = 0; p < static_cast<int>(alpha.size()); ++p)
    if (ambient->leq(alpha[p], x)) r.insert(p);
  return r;
}

std::set<int> AssemblyData::preimage_above(int x) const {
  std::set<int> r;
  for (int p = 0; p < static_cast<int>(alpha.size()); ++p)
    if (ambient->leq(x, alpha[p])) r.insert(p);
  return r;
}

std::vector<int> AssemblyData::sub_of_dim(int k) const {
  std::vector<int> r;
  for (int x : sub)
    if (ambient->dim(x) == k) r.push_back(x);
  return r;
}

static AssemblyData check_assembly(const Poset& P, std::set<int> sub, std::vector<int> alpha) {
  const auto& Q = *P;
  int n = static_cast<int>(Q.size());
  for (int p = 0; p < n; ++p)
    if (!sub.count(alpha[p]))
      fail("NotRetraction", "image of '" + Q.id(p) + "' is '" + Q.id(alpha[p]) + "', outside the subposet");
  for (int x : sub)
    if (alpha[x] != x) fail("NotRetraction", "'" + Q.id(x) + "' is in the subposet but not fixed");
  for (int p = 0; p < n; ++p)
    if (Q.dim(alpha[p]) != Q.dim(p))
      fail("DimensionNotPreserved", "'" + Q.id(p) + "' has dimension " + std::to_string(Q.dim(p)) + " but its image '" +
                                        Q.id(alpha[p]) + "' has dimension " + std::to_string(Q.dim(alpha[p])));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (Q.leq(p, q) && !Q.leq(alpha[p], alpha[q]))
        fail("NotOrderPreserving",
             "'" + Q.id(p) + "' <= '" + Q.id(q) + "' but '" + Q.id(alpha[p]) + "' is not below '" + Q.id(alpha[q]) + "'");
  return AssemblyData{P, std::move(sub), std::move(alpha), {}};
}

AssemblyData validate_assembly(const Poset& P, const std::vector<std::string>& sub,
                               const std::map<std::string, std::string>& alpha) {
  std::set<int> S;
  for (const auto& s : sub) S.insert(P->index(s));
  std::vector<int> a(P->size(), -1);
  for (const auto& [k, v] : alpha) a[P->index(k)] = P->index(v);
  for (int p = 0; p < static_cast<int>(a.size()); ++p)
    if (a[p] < 0) {
      if (!S.count(p)) fail("NotRetraction", "no image given for '" + P->id(p) + "'");
      a[p] = p;
    }
  return check_assembly(P, std::move(S), std::move(a));
}

AssemblyData finest(const Poset& P) {
  std::set<int> S;
  std::vector<int> a(P->size());
  for (int i = 0; i < static_cast<int>(P->size()); ++i) {
    S.insert(i);
    a[i] = i;
  }
  return check_assembly(P, std::move(S), std::move(a));
}

AssemblyData coarsest(const Poset& P) {
  const auto& Q = *P;
  std::vector<int> chain;
  // Elements are in (dim, id) order, so the first chain found is lexicographically least.
  std::function<bool(int)> extend = [&](int k) {
    if (k > Q.d()) return true;
    for (int x : Q.of_dim(k)) {
      if (!chain.empty() && !Q.leq(chain.back(), x)) continue;
      chain.push_back(x);
      if (extend(k + 1)) return true;
      chain.pop_back();
    }
    return false;
  };
  if (!extend(0)) fail("NotRetraction", "no chain meets every dimension");
  std::vector<int> a(Q.size());
  for (int i = 0; i < static_cast<int>(Q.size()); ++i) a[i] = chain[Q.dim(i)];
  return check_assembly(P, std::set<int>(chain.begin(), chain.end()), std::move(a));
}

SpecClosedSet preimage_family(const AssemblyData& A, const std::set<int>& V) {
  const auto& Q = *A.ambient;
  for (int v : V) {
    if (!A.sub.count(v)) fail("NotSpecClosed", "'" + Q.id(v) + "' is not in the subposet");
    for (int x : A.sub)
      if (Q.leq(x, v) && !V.count(x))
        fail("NotSpecClosed", "'" + Q.id(x) + "' lies below '" + Q.id(v) + "' but is missing");
  }
  SpecClosedSet r{A.ambient, {}};
  for (int p = 0; p < static_cast<int>(A.alpha.size()); ++p)
    if (V.count(A.alpha[p])) r.members.insert(p);
  return r;
}

SpecClosedSet preimage_family(const AssemblyData& A, const std::vector<std::string>& V) {
  std::set<int> S;
  for (const auto& s : V) S.insert(A.ambient->index(s));
  return preimage_family(A, S);
}

// ---------------------------------------------------------------- examples

Poset chain_poset(int n) {
  if (n < 0) fail("RangeError", "chain length must be nonnegative");
  std::vector<std::string> e;
  std::vector<std::pair<std::string, std::string>> r;
  for (int i = 0; i <= n; ++i) {
    e.push_back(std::to_string(i));
    if (i > 0) r.emplace_back(std::to_string(i - 1), std::to_string(i));
  }
  return validate_poset(e, r);
}

Poset fan_poset(int k) {
  if (k < 1) fail("RangeError", "fan needs at least one middle element");
  std::vector<std::string> e{"m", "g"};
  std::vector<std::pair<std::string, std::string>> r;
  for (int i = 1; i <= k; ++i) {
    std::string p = "p" + std::to_string(i);
    e.push_back(p);
    r.emplace_back("m", p);
    r.emplace_back(p, "g");
  }
  return validate_poset(e, r);
}

Poset single_poset() { return validate_poset({"pt"}, {}); }

namespace {

using Vec = std::vector<long>;
using Lattice = std::vector<Vec>;  // basis rows, independent

// Integer coordinates of v in the basis B, if v lies in the lattice.
std::optional<Vec> coords(const Lattice& B, const Vec& v) {
  bool zero = std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
  if (B.empty()) return zero ? std::optional<Vec>(Vec{}) : std::nullopt;
  std::size_t r = v.size();
  if (B.size() == 1) {
    const Vec& b = B[0];
    std::size_t i = 0;
    while (b[i] == 0) ++i;
    if (v[i] % b[i] != 0) return std::nullopt;
    long t = v[i] / b[i];
    for (std::size_t j = 0; j < r; ++j)
      if (v[j] != t * b[j]) return std::nullopt;
    return Vec{t};
  }
  // two rows in rank two
  long det = B[0][0] * B[1][1] - B[0][1] * B[1][0];
  long c0 = v[0] * B[1][1] - v[1] * B[1][0];
  long c1 = B[0][0] * v[1] - B[0][1] * v[0];
  if (c0 % det != 0 || c1 % det != 0) return std::nullopt;
  return Vec{c0 / det, c1 / det};
}

bool sublattice(const Lattice& small, const Lattice& big) {
  return std::all_of(small.begin(), small.end(), [&](const Vec& v) { return coords(big, v).has_value(); });
}

// big / small is torsion-free, given small inside big.
bool saturated_in(const Lattice& small, const Lattice& big) {
  if (small.empty()) return true;
  if (small.size() == big.size()) return sublattice(big, small);
  Vec c = *coords(big, small[0]);
  long g = 0;
  for (long x : c) g = std::gcd(g, x);
  return std::abs(g) == 1;
}

Lattice saturation(const Lattice& L, std::size_t rank) {
  if (L.empty()) return {};
  if (L.size() == rank) {
    Lattice I(rank, Vec(rank, 0));
    for (std::size_t i = 0; i < rank; ++i) I[i][i] = 1;
    return I;
  }
  Vec w = L[0];
  long g = 0;
  for (long x : w) g = std::gcd(g, x);
  for (long& x : w) x /= g;
  return {w};
}

bool same(const Lattice& a, const Lattice& b) { return sublattice(a, b) && sublattice(b, a); }

std::pair<long, long> ext_gcd(long a, long b) {
  long r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    long q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (r0 < 0) return {-s0, -t0};
  return {s0, t0};
}

}  // namespace

TorusSample torus_poset(int rank, int samples) {
  if (rank < 1 || rank > 2) fail("RangeError", "torus rank must be 1 or 2");
  if (samples < 1) fail("RangeError", "need at least one sample per stratum");
  std::vector<std::pair<std::string, Lattice>> els;
  if (rank == 1) {
    for (long m = 1; m <= samples; ++m) els.push_back({"C" + std::to_string(m), {{m}}});
    els.push_back({"T1", {}});
  } else {
    for (long m = 1; m <= samples; ++m) els.push_back({"C" + std::to_string(m), {{m, 0}, {0, 1}}});
    static const std::vector<std::pair<long, long>> dirs{{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2},
                                                         {2, 1}, {1, -2}, {2, -1}, {1, 3}, {3, 1}};
    if (samples + 1 > static_cast<int>(dirs.size())) fail("RangeError", "too many circle samples requested");
    std::vector<std::pair<std::string, Lattice>> finite;
    for (int i = 0; i <= samples; ++i) {
      auto [a, b] = dirs[i];
      std::string K = "K(" + std::to_string(a) + "," + std::to_string(b) + ")";
      auto [u, v] = ext_gcd(a, b);  // a u + b v = 1
      for (long m = 1; m <= samples; ++m) {
        els.push_back({m == 1 ? K : K + "xC" + std::to_string(m), {{-b * m, a * m}}});
        // finite subgroup of order m cotorally below K x C_m
        Lattice F{{-b * m, a * m}, {-u, -v}};
        bool seen = false;
        for (const auto& e : els)
          if (e.second.size() == 2 && same(e.second, F)) seen = true;
        for (const auto& e : finite)
          if (same(e.second, F)) seen = true;
        if (!seen) finite.push_back({"C" + std::to_string(m) + "[" + std::to_string(a) + "," + std::to_string(b) + "]", F});
      }
    }
    els.insert(els.end(), finite.begin(), finite.end());
    els.push_back({"T2", {}});
  }

  std::vector<std::string> ids;
  std::map<std::string, int> dims;
  TorusSample out;
  for (const auto& [id, L] : els) {
    ids.push_back(id);
    dims[id] = rank - static_cast<int>(L.size());
    out.annihilator[id] = L;
  }
  // H <= H' cotoral: ann(H') inside ann(H) with torsion-free quotient.
  std::vector<std::pair<std::string, std::string>> rel;
  for (const auto& [h, Lh] : els)
    for (const auto& [k, Lk] : els)
      if (h != k && sublattice(Lk, Lh) && saturated_in(Lk, Lh)) rel.emplace_back(h, k);
  out.poset = validate_poset(ids, rel, dims);

  std::map<std::string, std::string> conn;
  std::vector<std::string> sub;
  for (const auto& [h, Lh] : els) {
    Lattice s = saturation(Lh, static_cast<std::size_t>(rank));
    for (const auto& [k, Lk] : els)
      if (same(s, Lk)) {
        conn[h] = k;
        if (h == k) sub.push_back(h);
        break;
      }
  }
  out.conn = validate_assembly(out.poset, sub, conn);
  out.conn.scope = "sampled: rank " + std::to_string(rank) + ", " + std::to_string(samples) + " per stratum";
  return out;
}

}  // namespace ttg
