#include "ttg/homology.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ttg/error.hpp"
#include "ttg/snf.hpp"

namespace ttg {

// ---------------------------------------------------------------- tables

std::optional<World> fracture(const World& a, const World& b, const World& t) {
  using K = World::Kind;
  if (b < a) return fracture(b, a, t);
  // a <= b in kind order
  if (a.kind == K::ZS && b.kind == K::Hat && t.kind == K::HatRat && t.p == b.p && !a.S.contains(b.p))
    return World::zs(a.S.unite(PrimeSet::of({b.p})));
  if (a.kind == K::Val && b.kind == K::Val && t.kind == K::Val) {
    auto is = [](const World& w, const World& v) { return w == v; };
    auto pair = [&](const World& x, const World& y) {
      return (is(a, x) && is(b, y)) || (is(a, y) && is(b, x));
    };
    if (is(t, World::hat_m_loc()) && pair(World::hat_m(), World::hat_p_loc())) return World::hat_p_int();
    if (is(t, World::hat_m_loc()) && pair(World::hat_m(), World::Vp())) return World::V();
    if (is(t, World::hat_p_frac()) && pair(World::hat_p_int(), World::K())) return World::V();
    if (is(t, World::hat_p_frac()) && pair(World::hat_p_loc(), World::K())) return World::Vp();
  }
  return std::nullopt;
}

std::vector<FractureRule> fracture_rules() {
  std::vector<FractureRule> r;
  auto add = [&](const std::string& name, World a, World b, World t) {
    auto res = fracture(a, b, t);
    r.push_back({name, a, b, t, *res});
  };
  add("arithmetic square at 2 over Q", World::rationals(), World::padic(2), World::padic_rat(2));
  add("arithmetic square at 2 over Z[1/2]", World::int_inv(2), World::padic(2), World::padic_rat(2));
  add("arithmetic square at 3 over Z_(2)", World::int_loc(2), World::padic(3), World::padic_rat(3));
  add("x-adic square over the y-complete ring", World::hat_m(), World::hat_p_loc(), World::hat_m_loc());
  add("x-adic square over V", World::hat_m(), World::Vp(), World::hat_m_loc());
  add("y-adic square over V", World::hat_p_int(), World::K(), World::hat_p_frac());
  add("y-adic square over Vp", World::hat_p_loc(), World::K(), World::hat_p_frac());
  return r;
}

namespace {

std::string quot_name(const World& w1, const World& w2) { return w2.name() + "/" + w1.name(); }

ModuleClass prufer_sum(const PrimeSet& D) {
  ModuleClass m;
  for (auto q : D.listed) m += ModuleClass::prufer(std::to_string(q));
  return m;
}

}  // namespace

std::optional<ModuleClass> quotient_class(const World& w1, const World& w2) {
  using K = World::Kind;
  if (w1 == w2) return ModuleClass();
  if (!maps_to(w1, w2)) return std::nullopt;
  if (w1.kind == K::ZS) {
    PrimeSet D;
    ModuleClass extra;
    switch (w2.kind) {
      case K::ZS: D = w1.S.minus(w2.S); break;
      case K::Hat:
        D = w1.S.minus(PrimeSet::of({w2.p}));
        extra = ModuleClass::uhat(std::to_string(w2.p));
        break;
      case K::HatRat:
        D = w1.S;
        extra = ModuleClass::uhat(std::to_string(w2.p));
        break;
      default: return std::nullopt;
    }
    if (D.cofinite) return ModuleClass::quot(quot_name(w1, w2));
    return prufer_sum(D) + extra;
  }
  if (w1.kind == K::Hat && w2.kind == K::HatRat) return ModuleClass::prufer(std::to_string(w1.p));
  if (w1.kind == K::Val && w2.kind == K::Val) {
    if (w1.level == w2.level) {
      if (w1.inv == 0 && w2.inv == 1) return ModuleClass::prufer("m");
      if (w1.level == 2) return std::nullopt;
      if (w1.inv == 1 && w2.inv == 2) return ModuleClass::prufer("p");
      if (w1.inv == 0 && w2.inv == 2) return ModuleClass::quot("K/V");
    }
    if (w1.inv == w2.inv && w1.level == 0 && w2.level == 1) return ModuleClass::uhat("p");
  }
  return std::nullopt;
}

std::vector<std::pair<World, World>> quotient_pairs() {
  return {{World::integers(), World::int_inv(2)},
          {World::int_loc(2), World::rationals()},
          {World::zs(PrimeSet::of({2, 3})), World::rationals()},
          {World::int_loc(2), World::padic(2)},
          {World::int_loc(3), World::padic_rat(2)},
          {World::padic(2), World::padic_rat(2)},
          {World::V(), World::Vp()},
          {World::Vp(), World::K()},
          {World::V(), World::K()},
          {World::hat_m(), World::hat_m_loc()},
          {World::hat_p_int(), World::hat_p_loc()},
          {World::hat_p_loc(), World::hat_p_frac()},
          {World::hat_p_int(), World::hat_p_frac()}};
}

// ---------------------------------------------------------------- piece models

namespace {

unsigned long smallest_prime(const mpz_class& n) {
  for (unsigned long q = 2;; ++q)
    if (mpz_divisible_ui_p(n.get_mpz_t(), q)) return q;
}

bool numeric(const std::string& s) { return !s.empty() && std::all_of(s.begin(), s.end(), ::isdigit); }

Complex edge(const World& a, const World& b, int n) {
  // a in degree n+1 -> b in degree n, entry 1
  Complex c;
  c.terms[n + 1] = {a};
  c.terms[n] = {b};
  Mat m(1, 1);
  m(0, 0) = 1;
  c.set_diff(n + 1, m);
  return c;
}

}  // namespace

Complex piece_model(const Piece& p, int n) {
  using PK = Piece::Kind;
  switch (p.kind) {
    case PK::Free: return single(p.world, n);
    case PK::Cyclic: {
      World w = p.world;
      if (w == World::integers()) w = World::int_loc(smallest_prime(mpz_class(p.ann.rational().get_num())));
      Mat m(1, 1);
      m(0, 0) = p.ann;
      return two_term(w, n + 1, m);
    }
    case PK::Prufer:
      if (numeric(p.tag)) return edge(World::int_loc(std::stoul(p.tag)), World::rationals(), n);
      if (p.tag == "m") return edge(World::V(), World::Vp(), n);
      return edge(World::Vp(), World::K(), n);
    case PK::Uhat:
      if (numeric(p.tag)) {
        unsigned long q = std::stoul(p.tag);
        return edge(World::int_loc(q), World::padic(q), n);
      }
      if (p.tag == "p") return edge(World::Vp(), World::hat_p_loc(), n);
      break;
    case PK::QuotSym: {
      auto slash = p.tag.find('/');
      if (slash == std::string::npos) break;
      return edge(World::parse(p.tag.substr(slash + 1)), World::parse(p.tag.substr(0, slash)), n);
    }
  }
  fail("UnsupportedMixedShape", "no flat model for " + p.str());
}

Complex elementary_model(const Homology& h) {
  Complex c;
  for (auto& [n, m] : h)
    for (auto& p : m.pieces()) c = dsum(c, piece_model(p, n));
  check_window(c);
  return c;
}

// ---------------------------------------------------------------- components

namespace {

struct Node {
  int n;
  std::size_t i;
  auto operator<=>(const Node&) const = default;
};

Complex restrict_to(const Complex& C, const std::map<int, std::vector<std::size_t>>& keep) {
  Complex r;
  for (auto& [n, idx] : keep) {
    Terms t;
    for (auto i : idx) t.push_back(C.at(n)[i]);
    if (!t.empty()) r.terms[n] = t;
  }
  for (auto& [n, m] : C.d) {
    auto a = keep.find(n), b = keep.find(n - 1);
    if (a == keep.end() || b == keep.end()) continue;
    Mat x(b->second.size(), a->second.size());
    for (std::size_t i = 0; i < b->second.size(); ++i)
      for (std::size_t j = 0; j < a->second.size(); ++j) x(i, j) = m(b->second[i], a->second[j]);
    r.set_diff(n, x);
  }
  return r;
}

}  // namespace

std::vector<Complex> components(const Complex& C) {
  std::map<Node, Node> parent;
  std::function<Node(Node)> find = [&](Node x) {
    while (!(parent[x] == x)) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto& [n, t] : C.terms)
    for (std::size_t i = 0; i < t.size(); ++i) parent[{n, i}] = {n, i};
  for (auto& [n, m] : C.d)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero()) {
          Node a = find({n, j}), b = find({n - 1, i});
          if (!(a == b)) parent[a] = b;
        }
  std::map<Node, std::map<int, std::vector<std::size_t>>> groups;
  for (auto& [n, t] : C.terms)
    for (std::size_t i = 0; i < t.size(); ++i) groups[find({n, i})][n].push_back(i);
  // deterministic order: by first node
  std::vector<std::pair<Node, Complex>> out;
  for (auto& [root, keep] : groups) {
    Node first{keep.begin()->first, keep.begin()->second.front()};
    out.emplace_back(first, restrict_to(C, keep));
  }
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.first < b.first; });
  std::vector<Complex> r;
  for (auto& [k, c] : out) r.push_back(std::move(c));
  return r;
}

// ---------------------------------------------------------------- single-world homology

namespace {

Homology single_world_homology(const Complex& C, const World& W) {
  Homology h;
  std::map<int, std::vector<Scalar>> ed;
  for (auto& [n, m] : C.d) ed[n] = elementary_divisors(m, W);
  std::set<int> deg;
  for (auto& [n, t] : C.terms) deg.insert(n);
  for (int n : deg) {
    long c = static_cast<long>(C.rank(n));
    long rn = ed.count(n) ? static_cast<long>(ed[n].size()) : 0;
    long rn1 = ed.count(n + 1) ? static_cast<long>(ed[n + 1].size()) : 0;
    ModuleClass m = ModuleClass::free(W, static_cast<int>(c - rn - rn1));
    if (ed.count(n + 1))
      for (auto& a : ed[n + 1]) m += ModuleClass::cyclic(W, a);
    if (!m.is_zero()) h[n] = m;
  }
  return h;
}

// ---------------------------------------------------------------- mixed reduction

void remove_terms(Complex& C, int n, std::vector<std::size_t> idx) {
  std::sort(idx.begin(), idx.end());
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < C.rank(n); ++i)
    if (!std::binary_search(idx.begin(), idx.end(), i)) keep.push_back(i);
  Mat dn = C.diff(n), dn1 = C.diff(n + 1);
  Terms t;
  for (auto i : keep) t.push_back(C.at(n)[i]);
  Mat a(dn.rows(), keep.size()), b(keep.size(), dn1.cols());
  for (std::size_t r = 0; r < dn.rows(); ++r)
    for (std::size_t k = 0; k < keep.size(); ++k) a(r, k) = dn(r, keep[k]);
  for (std::size_t k = 0; k < keep.size(); ++k)
    for (std::size_t c = 0; c < dn1.cols(); ++c) b(k, c) = dn1(keep[k], c);
  if (t.empty()) C.terms.erase(n);
  else C.terms[n] = t;
  C.d.erase(n);
  C.d.erase(n + 1);
  if (C.rank(n - 1) && !t.empty()) C.set_diff(n, a);
  if (C.rank(n + 1) && !t.empty()) C.set_diff(n + 1, b);
}

bool cancel_unit(Complex& C) {
  for (auto& [n, M] : C.d) {
    const Terms& src = C.at(n);
    const Terms& tgt = C.at(n - 1);
    for (std::size_t i = 0; i < M.rows(); ++i)
      for (std::size_t j = 0; j < M.cols(); ++j) {
        const Scalar& c = M(i, j);
        if (c.is_zero() || !(src[j] == tgt[i]) || !is_unit(tgt[i], c)) continue;
        const World W = src[j];
        Scalar ci = c.inverse();
        Mat X = M;
        for (std::size_t k = 0; k < M.cols(); ++k) {
          if (k == j || M(i, k).is_zero()) continue;
          Scalar q = ci * M(i, k);
          for (std::size_t l = 0; l < M.rows(); ++l) {
            if (l == i || M(l, j).is_zero()) continue;
            X(l, k) -= M(l, j) * map_scalar(W, tgt[l], q);
          }
        }
        int deg = n;
        C.d[deg] = X;
        remove_terms(C, deg, {j});
        remove_terms(C, deg - 1, {i});
        return true;
      }
  }
  return false;
}

bool fracture_move(Complex& C) {
  for (auto& [n, M] : C.d) {
    const Terms src = C.at(n);
    const Terms tgt = C.at(n - 1);
    Mat below = C.diff(n - 1);
    for (std::size_t i = 0; i < M.rows(); ++i) {
      std::vector<std::size_t> nz;
      for (std::size_t j = 0; j < M.cols(); ++j)
        if (!M(i, j).is_zero()) nz.push_back(j);
      if (nz.size() != 2) continue;
      bool col_zero = true;
      for (std::size_t r = 0; r < below.rows(); ++r)
        if (!below(r, i).is_zero()) col_zero = false;
      if (!col_zero) continue;
      std::size_t j1 = nz[0], j2 = nz[1];
      const World &W1 = src[j1], &W2 = src[j2], &W3 = tgt[i];
      auto W0 = fracture(W1, W2, W3);
      if (!W0) continue;
      Scalar c1 = M(i, j1), c2 = M(i, j2);
      if (!is_unit(W3, c1) || !is_unit(W3, c2)) continue;
      Scalar u = -c2 / c1;
      // kernel embedding w -> (e1 * w, e2 * w)
      Scalar e1, e2;
      if (is_unit(W2, u)) {
        e1 = 1;
        e2 = u.inverse();
      } else if (is_unit(W1, u)) {
        e1 = u;
        e2 = 1;
      } else {
        continue;
      }
      // outgoing entries
      std::vector<Scalar> out(M.rows());
      bool ok = true;
      for (std::size_t l = 0; l < M.rows(); ++l) {
        if (l == i) continue;
        Scalar v = M(l, j1) * map_scalar(W1, tgt[l], e1) + M(l, j2) * map_scalar(W2, tgt[l], e2);
        if (!v.is_zero() && (!maps_to(*W0, tgt[l]) || !in_carrier(tgt[l], v))) ok = false;
        out[l] = v;
      }
      // incoming entries
      Mat above = C.diff(n + 1);
      const Terms& up = C.at(n + 1);
      std::vector<Scalar> in(above.cols());
      for (std::size_t k = 0; k < above.cols() && ok; ++k) {
        const Scalar &a = above(j1, k), &b = above(j2, k);
        if (a.is_zero() && b.is_zero()) continue;
        std::optional<Scalar> w;
        for (const Scalar& cand : {a / e1, b / e2}) {
          if (!in_carrier(*W0, cand)) continue;
          if (map_scalar(*W0, W1, cand) * e1 == a && map_scalar(*W0, W2, cand) * e2 == b) {
            w = cand;
            break;
          }
        }
        if (!w || !maps_to(up[k], *W0)) ok = false;
        else in[k] = *w;
      }
      if (!ok) continue;
      // rebuild: new term appended to degree n, old ones removed
      Complex R = C;
      Terms nt = src;
      nt.push_back(*W0);
      R.terms[n] = nt;
      Mat dn(M.rows(), M.cols() + 1), dn1(above.rows() + 1, above.cols());
      for (std::size_t r = 0; r < M.rows(); ++r) {
        for (std::size_t c = 0; c < M.cols(); ++c) dn(r, c) = M(r, c);
        dn(r, M.cols()) = out[r];
      }
      for (std::size_t r = 0; r < above.rows(); ++r)
        for (std::size_t c = 0; c < above.cols(); ++c) dn1(r, c) = above(r, c);
      for (std::size_t c = 0; c < above.cols(); ++c) dn1(above.rows(), c) = in[c];
      R.d.erase(n);
      R.d.erase(n + 1);
      R.set_diff(n, dn);
      if (R.rank(n + 1)) R.set_diff(n + 1, dn1);
      // clear the target row so that removal is clean
      remove_terms(R, n, {j1, j2});
      remove_terms(R, n - 1, {i});
      C = std::move(R);
      return true;
    }
  }
  return false;
}

bool injective_map(const World& a, const World& b) {
  if (b.kind == World::Kind::Fp || b.is_zero()) return false;
  if (a.kind == World::Kind::Val) return a.level == b.level || b.level <= 1;
  return true;
}

Homology classify_component(const Complex& C) {
  if (auto w = C.single_world()) return single_world_homology(C, *w);
  if (C.size() == 2 && C.d.size() == 1) {
    auto& [n, M] = *C.d.begin();
    const World &W1 = C.at(n)[0], &W2 = C.at(n - 1)[0];
    const Scalar& c = M(0, 0);
    if (injective_map(W1, W2)) {
      auto q = quotient_class(W1, W2);
      if (q) {
        ModuleClass m = *q;
        if (W1.family() == Family::Z) {
          m += ModuleClass::cyclic(W2, c);
          return {{n - 1, m}};
        }
        if (is_unit(W2, c)) return {{n - 1, m}};
      }
    }
  }
  fail("UnsupportedMixedShape", "cannot classify mixed component:\n" + C.str());
}

}  // namespace

Homology homology(const Complex& Cin) {
  Complex C = Cin;
  C.prune();
  if (C.empty()) return {};
  if (auto w = C.single_world()) return single_world_homology(C, *w);
  for (bool progress = true; progress;) {
    progress = cancel_unit(C);
    if (!progress) progress = fracture_move(C);
  }
  Homology h;
  for (auto& comp : components(C))
    for (auto& [n, m] : classify_component(comp)) h[n] += m;
  for (auto it = h.begin(); it != h.end();) it = it->second.is_zero() ? h.erase(it) : std::next(it);
  return h;
}

ModuleClass homology(const Complex& C, int n) {
  Homology h = homology(C);
  auto it = h.find(n);
  return it == h.end() ? ModuleClass() : it->second;
}

bool acyclic(const Complex& C) { return is_zero(homology(C)); }

bool quasi_iso(const Complex& X, const Complex& Y, const ChainMap& f) { return acyclic(cone(X, Y, f)); }

Complex normalize(const Complex& Cin) {
  Complex C = Cin;
  C.prune();
  Complex out;
  for (auto& comp : components(C)) {
    if (auto w = comp.single_world()) out = dsum(out, elementary_model(single_world_homology(comp, *w)));
    else out = dsum(out, comp);
  }
  return out;
}

}  // namespace ttg
