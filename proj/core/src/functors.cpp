#include "ttg/functors.hpp"

#include "ttg/error.hpp"

namespace ttg {

std::string functor_name(FunctorKind k) {
  switch (k) {
    case FunctorKind::Gamma: return "Gamma";
    case FunctorKind::Lcomp: return "L";
    case FunctorKind::Lambda: return "Lambda";
    case FunctorKind::Delta: return "Delta";
  }
  return "?";
}

IsoCertificate compare(std::string property, Homology lhs, Homology rhs) {
  IsoCertificate c;
  c.property = std::move(property);
  c.holds = same(lhs, rhs);
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  return c;
}

namespace {

Applied termwise_out(const Backend& B, const std::set<int>& V, const Complex& X, bool completion) {
  B.need_exact();
  Applied a;
  a.source = normalize(X);
  auto tw = termwise(a.source, [&](const World& w) { return completion ? B.comp(V, w) : B.loc(V, w); });
  a.out = std::move(tw.out);
  a.map = std::move(tw.unit);
  return a;
}

Applied fibre_of(Applied f) {
  Applied a;
  a.out = fib(f.source, f.out, f.map);
  a.map = fib_out(f.source, f.out);
  a.source = std::move(f.source);
  return a;
}

}  // namespace

Applied gamma(const Backend& B, const std::set<int>& V, const Complex& X) {
  return fibre_of(termwise_out(B, V, X, false));
}

Applied l_complement(const Backend& B, const std::set<int>& V, const Complex& X) {
  return termwise_out(B, V, X, false);
}

Applied lambda(const Backend& B, const std::set<int>& V, const Complex& X) { return termwise_out(B, V, X, true); }

Applied delta(const Backend& B, const std::set<int>& V, const Complex& X) {
  return fibre_of(termwise_out(B, V, X, true));
}

Applied apply(const Backend& B, const FunctorRequest& req, const Complex& X) {
  std::set<int> V = req.region;
  if (req.assembly) {
    for (int x : V)
      if (!req.assembly->sub.count(x)) fail("UnknownElement", B.poset()->id(x) + " is not in the assembly subposet");
    V = preimage_family(*req.assembly, V).members;
  }
  switch (req.kind) {
    case FunctorKind::Gamma: return gamma(B, V, X);
    case FunctorKind::Lcomp: return l_complement(B, V, X);
    case FunctorKind::Lambda: return lambda(B, V, X);
    case FunctorKind::Delta: return delta(B, V, X);
  }
  fail("DomainError", "unknown functor");
}

std::set<int> below(const Backend& B, int p) { return down_closure_idx(B.poset(), {p}).members; }

std::set<int> away(const Backend& B, int p) { return complement(*B.poset(), up_cone(*B.poset(), p)); }

Complex gamma_p(const Backend& B, int p, const Complex& X) { return gamma(B, below(B, p), X).out; }
Complex l_p(const Backend& B, int p, const Complex& X) { return l_complement(B, away(B, p), X).out; }
Complex lambda_p(const Backend& B, int p, const Complex& X) { return lambda(B, below(B, p), X).out; }

Complex gamma_le(const Backend& B, int n, const Complex& X) {
  return gamma(B, dim_filtration(B.poset(), n).members, X).out;
}
Complex l_ge(const Backend& B, int n, const Complex& X) {
  return l_complement(B, dim_filtration(B.poset(), n - 1).members, X).out;
}
Complex lambda_le(const Backend& B, int n, const Complex& X) {
  return lambda(B, dim_filtration(B.poset(), n).members, X).out;
}

Complex gamma_at(const Backend& B, const AssemblyData& A, int x, const Complex& X) {
  return gamma(B, A.preimage_below(x), X).out;
}
Complex l_at(const Backend& B, const AssemblyData& A, int x, const Complex& X) {
  return l_complement(B, complement(*B.poset(), A.preimage_above(x)), X).out;
}
Complex lambda_at(const Backend& B, const AssemblyData& A, int x, const Complex& X) {
  return lambda(B, A.preimage_below(x), X).out;
}

Complex koszul(const Backend& B, int p) {
  if (p < 0 || p >= static_cast<int>(B.poset()->size())) fail("UnknownPrime", "no such element");
  const std::string& id = B.poset()->id(p);
  if (id == "g") return B.unit();
  Mat m(1, 1);
  if (B.kind() == Backend::Kind::Zint) {
    m(0, 0) = Scalar(static_cast<long>(B.prime(p)));
    return two_term(B.unit_world(), 1, m);
  }
  if (B.kind() == Backend::Kind::Valrank2) {
    m(0, 0) = id == "m" ? Scalar::x() : Scalar::y();
    return two_term(B.unit_world(), 1, m);
  }
  fail("UnsupportedRegion", "the " + B.name() + " backend has no Koszul objects");
}

std::set<int> support(const Backend& B, const Complex& X) {
  B.check_scope(X);
  Complex N = normalize(X);
  std::set<int> s;
  // Gamma_p Y vanishes exactly when K_p (x) Y does; the Koszul side stays single-world
  // far more often than the fibre.
  for (int p = 0; p < static_cast<int>(B.poset()->size()); ++p)
    if (!acyclic(tensor(koszul(B, p), l_p(B, p, N)))) s.insert(p);
  return s;
}

namespace {

bool subset(const std::set<int>& a, const std::set<int>& b) {
  for (int x : a)
    if (!b.count(x)) return false;
  return true;
}

std::set<int> meet(const std::set<int>& a, const std::set<int>& b) {
  std::set<int> r;
  for (int x : a)
    if (b.count(x)) r.insert(x);
  return r;
}

Complex sum(const std::vector<Complex>& xs) {
  Complex r;
  for (auto& x : xs) r = dsum(r, x);
  return r;
}

void hypothesis(IsoCertificate& c, bool ok, bool force, const std::string& what) {
  c.hypothesis = ok;
  if (!ok && !force) fail("HypothesisFailed", what);
}

}  // namespace

IsoCertificate split_gamma(const Backend& B, const std::set<int>& V, const Complex& X, bool force) {
  const auto& P = *B.poset();
  if (!is_spec_closed(P, V)) fail("NotSpecClosed", "region is not specialization closed");
  auto mx = maximal(P, V);
  bool ok = subset(meet(support(B, X), V), mx);
  std::vector<Complex> parts;
  for (int p : mx) parts.push_back(gamma_p(B, p, X));
  auto c = compare("gamma_splits_over_maximal_primes", homology(sum(parts)), homology(gamma(B, V, X).out));
  hypothesis(c, ok, force, "support meets the region outside its maximal elements");
  return c;
}

IsoCertificate split_l(const Backend& B, const std::set<int>& V, const Complex& X, bool force) {
  const auto& P = *B.poset();
  if (!is_spec_closed(P, V)) fail("NotSpecClosed", "region is not specialization closed");
  auto mn = minimal(P, complement(P, V));
  bool ok = subset(meet(support(B, X), complement(P, V)), mn);
  std::vector<Complex> parts;
  for (int p : mn) parts.push_back(l_p(B, p, X));
  auto c = compare("localization_splits_over_minimal_primes", homology(l_complement(B, V, X).out),
                   homology(sum(parts)));
  hypothesis(c, ok, force, "support meets the complement outside its minimal elements");
  return c;
}

IsoCertificate gamma_product(const Backend& B, const std::set<int>& V, const std::vector<Complex>& family) {
  std::vector<Complex> torsion;
  for (auto& x : family) torsion.push_back(gamma(B, V, x).out);
  return compare("gamma_commutes_with_products", homology(gamma(B, V, sum(torsion)).out),
                 homology(gamma(B, V, sum(family)).out));
}

Complex e_object(const Backend& B, int i) {
  if (i < 0 || i > B.d()) fail("RangeError", "dimension out of range");
  return gamma_le(B, i, l_ge(B, i, B.unit()));
}

std::vector<IsoCertificate> epointy(const Backend& B, int i, const Complex& X) {
  Complex e = e_object(B, i);
  std::vector<Complex> layers, locals;
  for (int p : B.poset()->of_dim(i)) {
    layers.push_back(gamma_p(B, p, l_p(B, p, B.unit())));
    locals.push_back(l_p(B, p, X));
  }
  std::vector<IsoCertificate> r;
  r.push_back(compare("e_is_sum_of_layers", homology(e), homology(sum(layers))));
  r.push_back(compare("e_tensor_is_torsion_of_local_product", homology(gamma_le(B, i, sum(locals))),
                      homology(tensor(e, normalize(X)))));
  return r;
}

std::vector<IsoCertificate> mgm_check(const Backend& B, const std::set<int>& V, const Complex& X) {
  std::vector<IsoCertificate> r;
  r.push_back(compare("completion_ignores_torsion_part", homology(lambda(B, V, gamma(B, V, X).out).out),
                      homology(lambda(B, V, X).out)));
  r.push_back(compare("torsion_ignores_completion", homology(gamma(B, V, X).out),
                      homology(gamma(B, V, lambda(B, V, X).out).out)));
  return r;
}

std::vector<IsoCertificate> triangles(const Backend& B, const std::set<int>& V, const Complex& X) {
  std::vector<IsoCertificate> r;
  auto g = gamma(B, V, X);
  auto l = l_complement(B, V, X);
  r.push_back(compare("torsion_localization_triangle", homology(cone(g.out, g.source, g.map)), homology(l.out)));
  auto dl = delta(B, V, X);
  auto lm = lambda(B, V, X);
  r.push_back(compare("completion_fibre_triangle", homology(cone(dl.out, dl.source, dl.map)), homology(lm.out)));
  return r;
}

}  // namespace ttg
