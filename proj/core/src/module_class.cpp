#include "ttg/module_class.hpp"

#include <algorithm>
#include <sstream>

#include "ttg/error.hpp"

namespace ttg {

namespace {

std::vector<std::pair<mpz_class, int>> factor(mpz_class n) {
  std::vector<std::pair<mpz_class, int>> out;
  n = abs(n);
  for (mpz_class q = 2; q * q <= n; ++q) {
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t())) {
      n /= q;
      ++e;
    }
    if (e) out.emplace_back(q, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Piece cyc(const World& w, const Scalar& a) {
  Piece p;
  p.kind = Piece::Kind::Cyclic;
  p.world = w;
  p.ann = a;
  return p;
}

}  // namespace

std::string Piece::str() const {
  switch (kind) {
    case Kind::Free: return "Free(" + world.name() + ")";
    case Kind::Cyclic: return "Cyclic(" + world.name() + "," + ann.str() + ")";
    case Kind::Prufer: return "Prufer(" + tag + ")";
    case Kind::Uhat: return "Uhat(" + tag + ")";
    case Kind::QuotSym: return "QuotSym(" + tag + ")";
  }
  return "?";
}

void ModuleClass::add(Piece p) {
  auto key = p.str();
  auto it = std::lower_bound(p_.begin(), p_.end(), key, [](const Piece& a, const std::string& k) { return a.str() < k; });
  p_.insert(it, std::move(p));
}

ModuleClass ModuleClass::free(const World& w, int rank) {
  ModuleClass m;
  if (w.is_zero()) return m;
  for (int i = 0; i < rank; ++i) {
    Piece p;
    p.world = w;
    m.add(p);
  }
  return m;
}

ModuleClass ModuleClass::cyclic(const World& w, const Scalar& a) {
  using K = World::Kind;
  ModuleClass m;
  if (w.is_zero()) return m;
  if (a.is_zero()) return free(w);
  if (is_unit(w, a)) return m;
  if (!in_carrier(w, a)) fail("DomainError", "annihilator " + a.str() + " not in " + w.name());
  switch (w.kind) {
    case K::ZS: {
      const mpq_class& q = a.rational();
      for (auto& [pr, e] : factor(mpz_class(q.get_num()))) {
        if (!w.S.contains(pr.get_ui())) continue;
        mpz_class pe;
        mpz_pow_ui(pe.get_mpz_t(), pr.get_mpz_t(), e);
        m.add(cyc(World::integers(), Scalar(mpq_class(pe))));
      }
      return m;
    }
    case K::Hat: {
      mpz_class pe;
      mpz_ui_pow_ui(pe.get_mpz_t(), w.p, vp(a.rational(), w.p));
      m.add(cyc(World::integers(), Scalar(mpq_class(pe))));
      return m;
    }
    case K::Val: {
      Exp v = a.valuation();
      if (w.inv == 0) {
        if (w.level == 2) v.first = 0;
        m.add(cyc(World::V(), Scalar::monomial(1, v.first, v.second)));
      } else {
        m.add(cyc(World::Vp(), Scalar::monomial(1, v.first, 0)));
      }
      return m;
    }
    default: break;
  }
  fail("DomainError", "non-unit " + a.str() + " in field " + w.name());
}

ModuleClass ModuleClass::prufer(const std::string& place) {
  ModuleClass m;
  Piece p;
  p.kind = Piece::Kind::Prufer;
  p.tag = place;
  m.add(p);
  return m;
}

ModuleClass ModuleClass::uhat(const std::string& place) {
  ModuleClass m;
  Piece p;
  p.kind = Piece::Kind::Uhat;
  p.tag = place;
  m.add(p);
  return m;
}

ModuleClass ModuleClass::quot(const std::string& name) {
  ModuleClass m;
  Piece p;
  p.kind = Piece::Kind::QuotSym;
  p.tag = name;
  m.add(p);
  return m;
}

ModuleClass& ModuleClass::operator+=(const ModuleClass& o) {
  for (auto& p : o.p_) add(p);
  return *this;
}

int ModuleClass::free_rank() const {
  int r = 0;
  for (auto& p : p_) r += p.kind == Piece::Kind::Free;
  return r;
}

std::vector<std::string> ModuleClass::piece_names() const {
  std::vector<std::string> v;
  for (auto& p : p_) v.push_back(p.str());
  return v;
}

std::string ModuleClass::str() const {
  if (p_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < p_.size();) {
    std::size_t j = i;
    while (j < p_.size() && p_[j].str() == p_[i].str()) ++j;
    if (i) os << " + ";
    os << p_[i].str();
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

std::string str(const Homology& h) {
  if (is_zero(h)) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [n, m] : h) {
    if (m.is_zero()) continue;
    if (!first) os << "; ";
    os << "H" << n << " = " << m.str();
    first = false;
  }
  return os.str();
}

bool is_zero(const Homology& h) {
  for (auto& [n, m] : h)
    if (!m.is_zero()) return false;
  return true;
}

bool same(const Homology& a, const Homology& b) {
  auto strip = [](const Homology& h) {
    Homology r;
    for (auto& [n, m] : h)
      if (!m.is_zero()) r[n] = m;
    return r;
  };
  return strip(a) == strip(b);
}

Homology shifted(const Homology& h, int s) {
  Homology r;
  for (auto& [n, m] : h) r[n + s] = m;
  return r;
}

}  // namespace ttg
