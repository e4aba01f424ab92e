#include "ttg/backend.hpp"

#include <algorithm>

#include "ttg/error.hpp"
#include "ttg/homology.hpp"

namespace ttg {

Backend Backend::zint(const PrimeSet& T) {
  if (T.cofinite || T.empty()) fail("DomainError", "the zint truncation must be a finite nonempty prime set");
  std::vector<std::string> e{"g"};
  std::vector<std::pair<std::string, std::string>> r;
  for (auto p : T.listed) {
    if (!is_prime(p)) fail("UnknownPrime", std::to_string(p) + " is not prime");
    std::string id = "(" + std::to_string(p) + ")";
    e.push_back(id);
    r.emplace_back(id, "g");
  }
  Backend b;
  b.kind_ = Kind::Zint;
  b.P_ = validate_poset(e, r);
  b.T_ = T;
  b.label_ = "zint";
  return b;
}

Backend Backend::valrank2() {
  Backend b;
  b.kind_ = Kind::Valrank2;
  b.P_ = validate_poset({"m", "p", "g"}, {{"m", "p"}, {"p", "g"}});
  b.label_ = "valrank2";
  return b;
}

Backend Backend::formal(Poset P, std::string label) {
  Backend b;
  b.kind_ = Kind::Formal;
  b.P_ = std::move(P);
  b.label_ = std::move(label);
  return b;
}

Backend Backend::chromatic(int n) { return formal(chain_poset(n), "chromatic"); }

std::string Backend::name() const { return label_; }

std::string Backend::scope() const {
  std::string s = "backend=" + label_;
  if (kind_ == Kind::Zint) {
    s += " T={";
    for (std::size_t i = 0; i < T_.listed.size(); ++i) s += (i ? "," : "") + std::to_string(T_.listed[i]);
    s += "}";
  }
  return s;
}

void Backend::need_exact() const {
  if (kind_ == Kind::Formal) fail("UnsupportedRegion", "the " + label_ + " backend carries no homotopy");
}

World Backend::unit_world() const {
  need_exact();
  return kind_ == Kind::Zint ? World::zs(T_) : World::V();
}

Complex Backend::unit() const { return single(unit_world(), 0); }

unsigned long Backend::prime(int element) const {
  if (kind_ != Kind::Zint) fail("UnknownPrime", "rational primes only exist on the zint backend");
  const std::string& id = P_->id(element);
  if (id == "g") return 0;
  return std::stoul(id.substr(1, id.size() - 2));
}

std::set<unsigned long> Backend::primes_of(const std::set<int>& V) const {
  std::set<unsigned long> r;
  for (int i : V)
    if (P_->dim(i) == 0) r.insert(prime(i));
  return r;
}

static void need_closed(const BalmerPoset& P, const std::set<int>& V) {
  if (!is_spec_closed(P, V)) fail("NotSpecClosed", "region is not specialization closed");
}

std::vector<World> Backend::loc(const std::set<int>& V, const World& W) const {
  need_exact();
  need_closed(*P_, V);
  if (V.size() == P_->size()) return {World::zero()};
  if (kind_ == Kind::Zint) {
    auto ps = primes_of(V);
    return {invert_primes(W, PrimeSet::of({ps.begin(), ps.end()}))};
  }
  if (V.empty()) return {W};
  if (V.size() == 1) return {invert_x(W)};  // {m}
  return {invert_y(W)};                     // {m, p}
}

std::vector<World> Backend::comp(const std::set<int>& V, const World& W) const {
  need_exact();
  need_closed(*P_, V);
  if (V.size() == P_->size()) return {W};
  if (kind_ == Kind::Zint) {
    std::vector<World> r;
    for (auto p : primes_of(V)) r.push_back(complete_at(W, p));
    return r;
  }
  if (V.empty()) return {};
  if (V.size() == 1) return {complete_m(W)};
  return {complete_pm(W)};
}

void Backend::check_scope(const Complex& Xin) const {
  need_exact();
  Complex X = normalize(Xin);
  for (auto& [n, terms] : X.terms)
    for (const World& w : terms) {
      if (w.is_zero()) continue;
      bool ok = true;
      if (kind_ == Kind::Zint) {
        switch (w.kind) {
          case World::Kind::ZS:
            ok = w.S.subset_of(T_);
            break;
          case World::Kind::Hat:
          case World::Kind::HatRat:
          case World::Kind::Fp:
            ok = T_.contains(w.p);
            break;
          default:
            fail("IncompatibleWorlds", w.name() + " is not an integral-family world");
        }
        if (!ok)
          fail("TruncationTooSmall", "term " + w.name() + " is not local at the truncation; use a T-local object (" +
                                         scope() + ")");
      } else if (w.family() != Family::V) {
        fail("IncompatibleWorlds", w.name() + " is not a valuation-family world");
      }
    }
}

}  // namespace ttg
