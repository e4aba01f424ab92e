#include "ttg/oracle.hpp"

#include <algorithm>
#include <set>

#include "ttg/snf.hpp"

namespace ttg {

std::string Place::name() const {
  switch (kind) {
    case Kind::Prime: return "Z/" + std::to_string(p) + "^N";
    case Kind::X: return "k[x]/x^N";
    case Kind::Y: return "k(x)[y]/y^N";
  }
  return "?";
}

namespace {

constexpr long kInf = -1;

// Whether W reduces to a free rank-one module over R/t^N (true), to zero (false), or has no
// flat reduction at the place (nullopt).
std::optional<bool> survives(const World& w, Place pl) {
  using K = World::Kind;
  if (w.is_zero()) return false;
  switch (pl.kind) {
    case Place::Kind::Prime:
      switch (w.kind) {
        case K::ZS: return w.S.contains(pl.p);
        case K::Hat: return w.p == pl.p;
        case K::HatRat: return false;
        default: return std::nullopt;
      }
    case Place::Kind::X:
      if (w.kind != K::Val) return std::nullopt;
      return w.inv == 0;
    case Place::Kind::Y:
      if (w.kind != K::Val) return std::nullopt;
      if (w.inv == 2) return false;
      if (w.level == 2) return std::nullopt;
      return true;
  }
  return std::nullopt;
}

// x-adically complete worlds, where y acts as zero: the reduction at the y-place is the
// residue field k((x)), of length one for every N.
bool residual(const World& w, Place pl) {
  return pl.kind == Place::Kind::Y && w.kind == World::Kind::Val && w.level == 2 && !w.is_zero();
}

// Lengths of a complex built only from residual terms: plain ranks over k((x)).
std::map<int, long> residual_lengths(const Complex& C) {
  std::map<int, long> image;
  for (auto& [n, M] : C.d) {
    Mat R(M.rows(), M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i)
      for (std::size_t j = 0; j < M.cols(); ++j)
        if (!M(i, j).is_zero() && M(i, j).valuation().first == 0) R(i, j) = M(i, j).residue();
    long rk = 0;
    for (auto& s : elementary_divisors(R, World::K())) rk += !s.is_zero();
    image[n] = rk;
  }
  std::map<int, long> r;
  for (auto& [n, t] : C.terms) {
    long len = static_cast<long>(t.size()) - image[n] - image[n + 1];
    if (len) r[n] = len;
  }
  return r;
}

// t-adic valuation of a carrier element at the place; kInf when it reduces to zero.
long valuation_at(const Scalar& c, Place pl) {
  if (c.is_zero()) return kInf;
  switch (pl.kind) {
    case Place::Kind::Prime: return vp(c.rational(), pl.p);
    case Place::Kind::X: {
      if (c.valuation().first > 0) return kInf;
      return c.residue().valuation().second;
    }
    case Place::Kind::Y: return c.valuation().first;
  }
  return kInf;
}

std::vector<long> divisor_valuations(const Mat& M, Place pl) {
  std::vector<long> r;
  switch (pl.kind) {
    case Place::Kind::Prime:
      for (auto& s : elementary_divisors(M, World::int_loc(pl.p))) r.push_back(valuation_at(s, pl));
      break;
    case Place::Kind::X: {
      Mat R(M.rows(), M.cols());
      for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
          if (valuation_at(M(i, j), pl) != kInf) R(i, j) = M(i, j).residue();
      for (auto& s : elementary_divisors(R, World::V())) r.push_back(s.valuation().second);
      break;
    }
    case Place::Kind::Y:
      for (auto& s : elementary_divisors(M, World::Vp())) r.push_back(s.valuation().first);
      break;
  }
  return r;
}

Complex edge(const World& a, const World& b) {
  Complex c;
  c.terms[0] = {a};
  c.terms[-1] = {b};
  Mat m(1, 1);
  m(0, 0) = 1;
  c.set_diff(0, m);
  return c;
}

void add(LengthProfile& p, int n, Affine v) {
  auto& x = p[n];
  x.first += v.first;
  x.second += v.second;
}

void prune(LengthProfile& p) {
  for (auto it = p.begin(); it != p.end();) it = (it->second == Affine{0, 0}) ? p.erase(it) : std::next(it);
}

bool numeric(const std::string& s) { return !s.empty() && std::all_of(s.begin(), s.end(), ::isdigit); }

// Contribution of one piece sitting in degree n.
std::optional<LengthProfile> piece_profile(const Piece& pc, int n, Place pl) {
  using PK = Piece::Kind;
  LengthProfile r;
  bool integral = pl.kind == Place::Kind::Prime;
  switch (pc.kind) {
    case PK::Free: {
      if (residual(pc.world, pl)) {
        add(r, n, {0, 1});
        return r;
      }
      auto s = survives(pc.world, pl);
      if (!s) return std::nullopt;
      if (*s) add(r, n, {1, 0});
      return r;
    }
    case PK::Cyclic: {
      auto s = survives(pc.world, pl);
      if (!s) return std::nullopt;
      if (!*s) return r;
      long e = valuation_at(pc.ann, pl);
      Affine v = e == kInf ? Affine{1, 0} : Affine{0, e};
      add(r, n, v);
      add(r, n + 1, v);
      return r;
    }
    case PK::Prufer:
    case PK::Uhat: {
      if (numeric(pc.tag) != integral) return std::nullopt;
      if (pc.kind == PK::Uhat) return r;
      bool hit = integral ? std::stoul(pc.tag) == pl.p : (pc.tag == "m") == (pl.kind == Place::Kind::X);
      if (hit) add(r, n + 1, {1, 0});
      return r;
    }
    case PK::QuotSym: {
      auto slash = pc.tag.find('/');
      if (slash == std::string::npos) return std::nullopt;
      auto l2 = survives(World::parse(pc.tag.substr(0, slash)), pl);
      auto l1 = survives(World::parse(pc.tag.substr(slash + 1)), pl);
      if (!l1 || !l2) return std::nullopt;
      if (*l1 && !*l2) add(r, n + 1, {1, 0});
      if (*l2 && !*l1) add(r, n, {1, 0});
      return r;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::map<int, long>> truncated_lengths(const Complex& Cin, Place pl, long N) {
  Complex C = Cin;
  C.prune();
  std::size_t terms = 0, res = 0;
  for (auto& [n, t] : C.terms)
    for (auto& w : t) {
      ++terms;
      res += residual(w, pl);
    }
  if (res && res == terms) return residual_lengths(C);
  std::map<int, std::vector<std::size_t>> keep;
  for (auto& [n, t] : C.terms)
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto s = survives(t[i], pl);
      if (!s) return std::nullopt;
      if (*s) keep[n].push_back(i);
    }
  std::map<int, long> image;
  for (auto& [n, M] : C.d) {
    auto a = keep.find(n), b = keep.find(n - 1);
    if (a == keep.end() || b == keep.end()) continue;
    Mat R(b->second.size(), a->second.size());
    for (std::size_t i = 0; i < R.rows(); ++i)
      for (std::size_t j = 0; j < R.cols(); ++j) R(i, j) = M(b->second[i], a->second[j]);
    long im = 0;
    for (long e : divisor_valuations(R, pl))
      if (e != kInf) im += std::max(N - e, 0L);
    image[n] = im;
  }
  std::map<int, long> r;
  for (auto& [n, idx] : keep) {
    long len = static_cast<long>(idx.size()) * N - image[n] - image[n + 1];
    if (len) r[n] = len;
  }
  return r;
}

std::optional<LengthProfile> predicted_profile(const Homology& h, Place pl) {
  LengthProfile r;
  for (auto& [n, m] : h)
    for (auto& pc : m.pieces()) {
      auto p = piece_profile(pc, n, pl);
      if (!p) return std::nullopt;
      for (auto& [k, v] : *p) add(r, k, v);
    }
  prune(r);
  return r;
}

OracleResult oracle_check(const std::string& entry, const Complex& C, const Homology& claimed, Place pl) {
  OracleResult res;
  res.entry = entry;
  res.place = pl.name();
  auto pred = predicted_profile(claimed, pl);
  if (!pred) return res;
  std::vector<long> Ns;
  std::vector<std::map<int, long>> L;
  std::optional<LengthProfile> last;
  for (long N = 16; N <= 1024; N *= 2) {
    auto l = truncated_lengths(C, pl, N);
    if (!l) return res;
    res.applicable = true;
    Ns.push_back(N);
    L.push_back(*l);
    if (L.size() < 2) continue;
    const auto &l1 = L[L.size() - 2], &l2 = L.back();
    long N1 = Ns[Ns.size() - 2], N2 = N;
    LengthProfile prof;
    std::set<int> deg;
    for (auto& [n, v] : l1) deg.insert(n);
    for (auto& [n, v] : l2) deg.insert(n);
    for (int n : deg) {
      long v1 = l1.count(n) ? l1.at(n) : 0, v2 = l2.count(n) ? l2.at(n) : 0;
      long a = (v2 - v1) / (N2 - N1);
      prof[n] = {a, v1 - a * N1};
    }
    prune(prof);
    if (last && *last == prof) {
      res.stabilized = true;
      res.stable_at = N;
      res.observed = prof;
      break;
    }
    last = prof;
  }
  res.predicted = *pred;
  res.agrees = res.stabilized && res.observed == res.predicted;
  return res;
}

std::vector<OracleResult> oracle_suite() {
  std::vector<Place> places{Place::prime(2), Place::prime(3), Place::prime(5), Place::prime(7), Place::x(),
                            Place::y()};
  std::vector<OracleResult> out;
  auto all_places = [&](const std::string& entry, const Complex& C, const Homology& h) {
    for (auto& pl : places) out.push_back(oracle_check(entry, C, h, pl));
  };
  for (auto& r : fracture_rules()) {
    Complex C;
    C.terms[0] = {r.a, r.b};
    C.terms[-1] = {r.target};
    Mat m(1, 2);
    m(0, 0) = 1;
    m(0, 1) = -1;
    C.set_diff(0, m);
    all_places("fracture: " + r.name, C, {{0, ModuleClass::free(r.result)}});
  }
  for (auto& [a, b] : quotient_pairs()) {
    auto q = quotient_class(a, b);
    Homology h;
    if (q && !q->is_zero()) h[-1] = *q;
    all_places("quotient: " + b.name() + "/" + a.name(), edge(a, b), h);
  }
  // A completion map W -> Lambda W is an isomorphism modulo every power of the ideal.
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
    unsigned long q = p == 2 ? 3 : 2;
    for (const World& w : {World::integers(), World::int_loc(p), World::int_inv(p), World::int_inv(q),
                           World::int_loc(q), World::rationals(), World::padic(p), World::padic(q),
                           World::padic_rat(p)})
      out.push_back(oracle_check("completion at " + std::to_string(p) + ": " + w.name() + " -> " +
                                     complete_at(w, p).name(),
                                 edge(w, complete_at(w, p)), {}, Place::prime(p)));
  }
  for (const World& w : {World::V(), World::Vp(), World::K(), World::hat_p_int(), World::hat_p_loc(),
                         World::hat_p_frac(), World::hat_m(), World::hat_m_loc()}) {
    out.push_back(oracle_check("completion at m: " + w.name() + " -> " + complete_m(w).name(),
                               edge(w, complete_m(w)), {}, Place::x()));
    out.push_back(oracle_check("completion at p: " + w.name() + " -> " + complete_pm(w).name(),
                               edge(w, complete_pm(w)), {}, Place::y()));
  }
  return out;
}

}  // namespace ttg
