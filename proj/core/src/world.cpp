#include "ttg/world.hpp"

#include <algorithm>
#include <sstream>

#include "ttg/error.hpp"

namespace ttg {

// ---------------------------------------------------------------- PrimeSet

static std::vector<unsigned long> sorted_unique(std::vector<unsigned long> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  for (auto p : v)
    if (!is_prime(p)) fail("ParseError", "not a prime: " + std::to_string(p));
  return v;
}

PrimeSet PrimeSet::of(std::vector<unsigned long> ps) { return {false, sorted_unique(std::move(ps))}; }
PrimeSet PrimeSet::all_but(std::vector<unsigned long> ps) { return {true, sorted_unique(std::move(ps))}; }

bool PrimeSet::contains(unsigned long p) const {
  bool listed_p = std::binary_search(listed.begin(), listed.end(), p);
  return cofinite ? !listed_p : listed_p;
}

static std::vector<unsigned long> v_and(const std::vector<unsigned long>& a, const std::vector<unsigned long>& b) {
  std::vector<unsigned long> r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}
static std::vector<unsigned long> v_or(const std::vector<unsigned long>& a, const std::vector<unsigned long>& b) {
  std::vector<unsigned long> r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}
static std::vector<unsigned long> v_minus(const std::vector<unsigned long>& a, const std::vector<unsigned long>& b) {
  std::vector<unsigned long> r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

PrimeSet PrimeSet::intersect(const PrimeSet& o) const {
  if (!cofinite && !o.cofinite) return {false, v_and(listed, o.listed)};
  if (cofinite && o.cofinite) return {true, v_or(listed, o.listed)};
  if (cofinite) return {false, v_minus(o.listed, listed)};
  return {false, v_minus(listed, o.listed)};
}

PrimeSet PrimeSet::unite(const PrimeSet& o) const {
  if (!cofinite && !o.cofinite) return {false, v_or(listed, o.listed)};
  if (cofinite && o.cofinite) return {true, v_and(listed, o.listed)};
  if (cofinite) return {true, v_minus(listed, o.listed)};
  return {true, v_minus(o.listed, listed)};
}

PrimeSet PrimeSet::minus(const PrimeSet& o) const {
  PrimeSet comp{!o.cofinite, o.listed};
  return intersect(comp);
}

bool PrimeSet::subset_of(const PrimeSet& o) const { return intersect(o) == *this; }

// ---------------------------------------------------------------- World basics

World World::val(int level, int inv) {
  if (level == 2 && inv == 2) return zero();
  return {Kind::Val, {}, 0, level, inv};
}

Family World::family() const {
  switch (kind) {
    case Kind::Zero: return Family::Zero;
    case Kind::Val: return Family::V;
    default: return Family::Z;
  }
}

bool World::is_field() const {
  switch (kind) {
    case Kind::ZS: return S.empty();
    case Kind::HatRat:
    case Kind::Fp: return true;
    case Kind::Val: return inv == 2 || (level == 2 && inv == 1);
    default: return false;
  }
}

static std::string list_str(const std::vector<unsigned long>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string World::name() const {
  switch (kind) {
    case Kind::Zero: return "Zero";
    case Kind::ZS:
      if (S.is_all()) return "Int";
      if (S.empty()) return "Rat";
      return (S.cofinite ? "IntInv(" : "IntLoc(") + list_str(S.listed) + ")";
    case Kind::Hat: return "Padic(" + std::to_string(p) + ")";
    case Kind::HatRat: return "PadicRat(" + std::to_string(p) + ")";
    case Kind::Fp: return "PrimeField(" + std::to_string(p) + ")";
    case Kind::Val: {
      static const char* names[3][3] = {{"V", "Vp", "K"},
                                        {"HatPInt", "HatPLoc", "HatPFrac"},
                                        {"HatM", "HatMLoc", "Zero"}};
      return names[level][inv];
    }
  }
  return "?";
}

World World::parse(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (c != ' ') s += c;
  auto open = s.find('(');
  std::string head = s.substr(0, open);
  std::vector<unsigned long> args;
  if (open != std::string::npos) {
    if (s.back() != ')') fail("ParseError", "bad world name '" + raw + "'");
    std::string inner = s.substr(open + 1, s.size() - open - 2);
    std::stringstream ss(inner);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        fail("ParseError", "bad world argument in '" + raw + "'");
      args.push_back(std::stoul(tok));
    }
  }
  auto one = [&]() {
    if (args.size() != 1 || !is_prime(args[0])) fail("ParseError", "expected one prime in '" + raw + "'");
    return args[0];
  };
  if (head == "Zero" && args.empty()) return zero();
  if (head == "Int" && args.empty()) return integers();
  if (head == "Rat" && args.empty()) return rationals();
  if (head == "IntLoc" && !args.empty()) return zs(PrimeSet::of(args));
  if (head == "IntInv" && !args.empty()) return zs(PrimeSet::all_but(args));
  if (head == "Padic") return padic(one());
  if (head == "PadicRat") return padic_rat(one());
  if (head == "PrimeField") return prime_field(one());
  if (!args.empty()) fail("ParseError", "unknown world '" + raw + "'");
  if (head == "V" || head == "RankTwoVal") return V();
  if (head == "Vp") return Vp();
  if (head == "K" || head == "FracField") return K();
  if (head == "HatM") return hat_m();
  if (head == "HatMLoc") return hat_m_loc();
  if (head == "HatPInt") return hat_p_int();
  if (head == "HatPLoc") return hat_p_loc();
  if (head == "HatPFrac") return hat_p_frac();
  fail("ParseError", "unknown world '" + raw + "'");
}

// ---------------------------------------------------------------- maps and carriers

bool maps_to(const World& a, const World& b) {
  using K = World::Kind;
  if (b.is_zero()) return true;
  if (a.is_zero()) return false;
  if (a == b) return true;
  if (a.family() != b.family()) return false;
  if (a.kind == K::Val) return a.level <= b.level && a.inv <= b.inv;
  switch (a.kind) {
    case K::ZS:
      if (b.kind == K::ZS) return b.S.subset_of(a.S);
      if (b.kind == K::Hat || b.kind == K::Fp) return a.S.contains(b.p);
      return b.kind == K::HatRat;
    case K::Hat: return (b.kind == K::HatRat || b.kind == K::Fp) && b.p == a.p;
    default: return false;
  }
}

static Scalar mod_p(const Scalar& c, unsigned long p) {
  if (!c.is_rational()) fail("DomainError", "non-rational entry for PrimeField");
  mpq_class q = c.rational();
  mpz_class m(p), num(q.get_num()), den(q.get_den()), inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
    fail("DomainError", "entry not integral at p for PrimeField");
  mpz_class r = (num * inv) % m;
  if (r < 0) r += m;
  return Scalar(mpq_class(r));
}

Scalar map_scalar(const World& a, const World& b, const Scalar& c) {
  if (b.is_zero() || c.is_zero()) return Scalar(0);
  if (b.kind == World::Kind::Fp) return mod_p(c, b.p);
  if (a.kind == World::Kind::Val && b.kind == World::Kind::Val && b.level == 2 && a.level < 2) return c.residue();
  return c;
}

bool in_carrier(const World& w, const Scalar& c) {
  using K = World::Kind;
  if (c.is_zero()) return true;
  switch (w.kind) {
    case K::Zero: return false;
    case K::ZS: {
      if (!c.is_rational()) return false;
      const mpq_class& q = c.rational();
      if (w.S.cofinite) {
        mpz_class den(q.get_den());
        for (auto p : w.S.listed)
          while (mpz_divisible_ui_p(den.get_mpz_t(), p)) mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), p);
        return den == 1;
      }
      for (auto p : w.S.listed)
        if (vp(q, p) < 0) return false;
      return true;
    }
    case K::Hat: return c.is_rational() && vp(c.rational(), w.p) >= 0;
    case K::HatRat: return c.is_rational();
    case K::Fp: {
      if (!c.is_rational()) return false;
      const mpq_class& q = c.rational();
      return q.get_den() == 1 && q >= 0 && q < mpq_class(w.p);
    }
    case K::Val: {
      Exp v = c.valuation();
      if (w.level == 2) {
        if (!c.y_free()) return false;
        return w.inv == 1 || v.second >= 0;
      }
      if (w.inv == 0) return v >= Exp{0, 0};
      if (w.inv == 1) return v.first >= 0;
      return true;
    }
  }
  return false;
}

bool is_unit(const World& w, const Scalar& c) {
  if (c.is_zero() || !in_carrier(w, c)) return false;
  if (w.kind == World::Kind::Fp) return true;
  return in_carrier(w, c.inverse());
}

bool divides(const World& w, const Scalar& a, const Scalar& b) {
  if (b.is_zero()) return true;
  if (a.is_zero()) return false;
  if (w.kind == World::Kind::Fp) return true;
  return in_carrier(w, b / a);
}

std::optional<unsigned long> place_tag(const World& w) {
  if (w.kind == World::Kind::Hat || w.kind == World::Kind::HatRat) return w.p;
  return std::nullopt;
}

// ---------------------------------------------------------------- tensor and functor tables

World tensor(const World& a, const World& b) {
  using K = World::Kind;
  if (a.is_zero() || b.is_zero()) return World::zero();
  if (a.family() != b.family())
    fail("IncompatibleWorlds", "tensor of " + a.name() + " and " + b.name());
  if (a.kind == K::Val) return World::val(std::max(a.level, b.level), std::max(a.inv, b.inv));
  if (b < a) return tensor(b, a);
  // a <= b in the kind order ZS < Hat < HatRat < Fp
  switch (a.kind) {
    case K::ZS:
      switch (b.kind) {
        case K::ZS: return World::zs(a.S.intersect(b.S));
        case K::Hat: return a.S.contains(b.p) ? b : World::padic_rat(b.p);
        case K::HatRat: return b;
        case K::Fp: return a.S.contains(b.p) ? b : World::zero();
        default: break;
      }
      break;
    case K::Hat:
    case K::HatRat:
      if (b.kind == K::Fp) return (a.kind == K::Hat && a.p == b.p) ? b : World::zero();
      if (a.p != b.p) fail("IncompatibleWorlds", "tensor of completions at different primes");
      return (a.kind == K::Hat && b.kind == K::Hat) ? a : World::padic_rat(a.p);
    case K::Fp: return a.p == b.p ? a : World::zero();
    default: break;
  }
  fail("IncompatibleWorlds", "tensor of " + a.name() + " and " + b.name());
}

World tensor_over(const World& a, const World& b) {
  auto ta = place_tag(a), tb = place_tag(b);
  if (ta && tb && *ta != *tb) return World::zero();
  return tensor(a, b);
}

World invert_primes(const World& w, const PrimeSet& P) {
  using K = World::Kind;
  switch (w.kind) {
    case K::Zero: return w;
    case K::ZS: return World::zs(w.S.minus(P));
    case K::Hat: return P.contains(w.p) ? World::padic_rat(w.p) : w;
    case K::HatRat: return w;
    case K::Fp: return P.contains(w.p) ? World::zero() : w;
    case K::Val: break;
  }
  fail("IncompatibleWorlds", "cannot invert rational primes in " + w.name());
}

World complete_at(const World& w, unsigned long p) {
  using K = World::Kind;
  switch (w.kind) {
    case K::Zero: return w;
    case K::ZS: return w.S.contains(p) ? World::padic(p) : World::zero();
    case K::Hat: return w.p == p ? w : World::zero();
    case K::HatRat: return World::zero();
    case K::Fp: return w.p == p ? w : World::zero();
    case K::Val: break;
  }
  fail("IncompatibleWorlds", "cannot complete " + w.name() + " at a rational prime");
}

static void need_val(const World& w) {
  if (w.kind != World::Kind::Val && !w.is_zero())
    fail("IncompatibleWorlds", w.name() + " is not a valuation-family world");
}

World invert_x(const World& w) {
  need_val(w);
  if (w.is_zero()) return w;
  return World::val(w.level, std::max(w.inv, 1));
}

World invert_y(const World& w) {
  need_val(w);
  if (w.is_zero()) return w;
  return World::val(w.level, 2);
}

World complete_m(const World& w) {
  need_val(w);
  if (w.is_zero() || w.inv >= 1) return World::zero();
  return World::hat_m();
}

World complete_pm(const World& w) {
  need_val(w);
  if (w.is_zero() || w.inv == 2) return World::zero();
  return World::val(std::max(w.level, 1), w.inv);
}

}  // namespace ttg
