#include "ttg/library.hpp"

#include <cstdlib>

#include "ttg/error.hpp"

namespace ttg {

Complex cyclic_complex(const World& w, const Scalar& a, int n) {
  Mat m(1, 1);
  m(0, 0) = a;
  return two_term(w, n, m);
}

const std::vector<LibraryObject>& library() {
  static const std::vector<LibraryObject> lib = [] {
    const World Z = World::integers(), V = World::V();
    auto two = PrimeSet::of({2}), three = PrimeSet::of({3}), both = PrimeSet::of({2, 3});
    return std::vector<LibraryObject>{
        {"zloc2", "zint", "Z localized at 2", single(World::int_loc(2)), two},
        {"q_plus_z8", "zint", "Q + Z/8", dsum(single(World::rationals()), cyclic_complex(Z, 8)), two},
        {"z6", "zint", "Z/6", cyclic_complex(Z, 6), both},
        {"z2_plus_zloc3", "zint", "Z/2 + Z localized at 3", dsum(cyclic_complex(Z, 2), single(World::int_loc(3))),
         both},
        {"rat", "zint", "Q", single(World::rationals()), PrimeSet::none()},
        {"zint_zero", "zint", "zero object", Complex(), PrimeSet::none()},
        {"v_unit", "valrank2", "V", single(V), {}},
        {"v_mod_x", "valrank2", "V/x", cyclic_complex(V, Scalar::x()), {}},
        {"frac_field", "valrank2", "K", single(World::K()), {}},
        {"vp", "valrank2", "V localized at p", single(World::Vp()), {}},
        {"v_plus_v_mod_x", "valrank2", "V + V/x", dsum(single(V), cyclic_complex(V, Scalar::x())), {}},
        {"val_zero", "valrank2", "zero object", Complex(), {}},
    };
  }();
  return lib;
}

std::vector<LibraryObject> library(const std::string& backend) {
  std::vector<LibraryObject> r;
  for (auto& o : library())
    if (o.backend == backend) r.push_back(o);
  return r;
}

const LibraryObject& library_object(const std::string& name) {
  for (auto& o : library())
    if (o.name == name) return o;
  fail("UnknownObject", "no library object named '" + name + "'");
}

namespace {

// Column op on d_n (e'_j = e_j + c e_i in degree n) and the inverse row op on d_{n+1}.
void change_basis(Complex& C, int n, std::size_t i, std::size_t j, long c) {
  if (C.d.count(n)) {
    Mat& M = C.d[n];
    for (std::size_t r = 0; r < M.rows(); ++r) M(r, j) += M(r, i) * c;
  }
  if (C.d.count(n + 1)) {
    Mat& M = C.d[n + 1];
    for (std::size_t k = 0; k < M.cols(); ++k) M(i, k) -= M(j, k) * c;
  }
}

}  // namespace

Complex random_complex(std::mt19937& rng, const World& w, const std::vector<unsigned long>& primes, int lo, int hi,
                       int y_max) {
  auto pick = [&](int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); };
  Complex C;
  int pieces = pick(1, 4);
  for (int k = 0; k < pieces; ++k) {
    int n = pick(lo, hi);
    switch (pick(0, 3)) {
      case 0: C = dsum(C, single(w, n)); break;
      case 1: C = dsum(C, cyclic_complex(w, pick(0, 1) ? 1 : -1, std::min(n + 1, hi))); break;
      default: {
        if (n == lo) ++n;
        if (n > hi) n = hi;
        Scalar a = 1;
        if (w.family() == Family::V) {
          int i = pick(0, y_max), j = pick(i == 0 ? 1 : 0, 2);
          a = Scalar::monomial(1, i, j);
        } else {
          for (unsigned long p : primes)
            for (int e = pick(0, 2); e > 0; --e) a *= Scalar(static_cast<long>(p));
          if (a.is_one() && !primes.empty()) a = static_cast<long>(primes[pick(0, static_cast<int>(primes.size()) - 1)]);
        }
        C = dsum(C, cyclic_complex(w, pick(0, 1) ? a : -a, n));
      }
    }
  }
  for (int k = pick(0, 6); k > 0; --k) {
    auto degs = C.degrees();
    int n = degs[pick(0, static_cast<int>(degs.size()) - 1)];
    int r = static_cast<int>(C.rank(n));
    if (r < 2) continue;
    int i = pick(0, r - 1), j = pick(0, r - 2);
    if (j >= i) ++j;
    change_basis(C, n, i, j, pick(-3, 3));
  }
  C.validate();
  return C;
}

CubeDiagram random_cube(std::mt19937& rng, int d) {
  auto pick = [&](int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); };
  const World Z = World::integers();
  Complex X = random_complex(rng, Z, {2, 3});
  std::vector<long> c(d + 1);
  for (auto& v : c) v = pick(-4, 4);
  CubeDiagram D = CubeDiagram::on(full_cube(d));
  for (std::size_t v = 0; v < D.value.size(); ++v)
    D.value[v] = pick(0, 1) ? dsum(X, random_complex(rng, Z, {2, 3})) : X;
  for (std::size_t a = 0; a < D.index.arrows.size(); ++a) {
    const auto& ar = D.index.arrows[a];
    int i = max_elem(D.index.vertices[ar.dst].set & ~D.index.vertices[ar.src].set);
    const Complex &S = D.value[ar.src], &T = D.value[ar.dst];
    ChainMap f;
    for (int n : X.degrees()) {
      Mat m(T.rank(n), S.rank(n));
      for (std::size_t k = 0; k < X.rank(n); ++k) m(k, k) = c[i];
      f.set(n, m);
    }
    D.arrow[static_cast<int>(a)] = f;
  }
  return D;
}

std::vector<AssemblyMutant> torus_mutants(const TorusSample& T) {
  const auto& P = *T.poset;
  std::vector<std::string> sub;
  for (int x : T.conn.sub) sub.push_back(P.id(x));
  std::map<std::string, std::string> alpha;
  for (int i = 0; i < static_cast<int>(P.size()); ++i) alpha[P.id(i)] = P.id(T.conn.alpha[i]);
  for (const char* id : {"C2", "K(1,0)xC2", "K(0,1)"})
    if (!alpha.count(id)) fail("RangeError", "torus sample too small for the mutants");

  std::vector<AssemblyMutant> r;
  r.push_back({"finite_to_circle", sub, alpha, "DimensionNotPreserved"});
  r.back().alpha["C2"] = "K(0,1)";
  r.push_back({"circle_to_torus", sub, alpha, "DimensionNotPreserved"});
  r.back().alpha["K(1,0)xC2"] = "T2";
  // C2 sits under K(0,1)xC2 but not under its identity component K(0,1).
  r.push_back({"fixed_finite_subgroup", sub, alpha, "NotOrderPreserving"});
  r.back().sub.push_back("C2");
  r.back().alpha["C2"] = "C2";
  return r;
}

unsigned seed_from_env() {
  if (const char* s = std::getenv("TTG_SEED")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(s, &end, 10);
    if (end && *end == '\0' && end != s) return static_cast<unsigned>(v);
  }
  return 20240611u;
}

}  // namespace ttg
