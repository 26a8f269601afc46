#include "btlat/latticefn.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace btlat {

SplitLattice::SplitLattice(AmbientFrame f, std::vector<long long> k)
    : frame(f), exponents(std::move(k)) {
  if (exponents.size() != frame.m) throw InvalidInput("exponent count must match dimension");
}

SplitLatticeFunction::SplitLatticeFunction(AmbientFrame f, std::vector<Rat> a)
    : frame(f), offsets(std::move(a)) {
  if (offsets.size() != frame.m) throw InvalidInput("offset count must match dimension");
}

LatticeFunctionClass::LatticeFunctionClass(const SplitLatticeFunction& fn)
    : rep_(translate(fn, -fn.offsets[0])) {}

OrderInvariant::OrderInvariant(CyclicVectorClass v) : inner(std::move(v)) {
  for (long long e : inner.entries())
    if (e <= 0) throw InvalidInput("invariant entries must be positive");
}

MonomialElement::MonomialElement(std::vector<std::size_t> p, std::vector<long long> e)
    : perm(std::move(p)), powers(std::move(e)) {
  if (perm.size() != powers.size()) throw InvalidInput("monomial data size mismatch");
  if (perm.empty()) throw InvalidInput("monomial element needs positive dimension");
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t v : perm) {
    if (v >= perm.size() || seen[v]) throw InvalidInput("not a permutation");
    seen[v] = true;
  }
}

MonomialElement MonomialElement::identity(std::size_t m) {
  std::vector<std::size_t> p(m);
  std::iota(p.begin(), p.end(), 0);
  return MonomialElement(std::move(p), std::vector<long long>(m, 0));
}

SplitLattice evaluate(const SplitLatticeFunction& fn, const Rat& t) {
  std::vector<long long> k(fn.frame.m);
  for (std::size_t i = 0; i < fn.frame.m; ++i)
    k[i] = ratCeil(Rat(fn.frame.d) * (t - fn.offsets[i]));
  return SplitLattice(fn.frame, std::move(k));
}

SplitLattice evaluateRightLimit(const SplitLatticeFunction& fn, const Rat& t) {
  std::vector<long long> k(fn.frame.m);
  for (std::size_t i = 0; i < fn.frame.m; ++i)
    k[i] = ratFloor(Rat(fn.frame.d) * (t - fn.offsets[i])) + 1;
  return SplitLattice(fn.frame, std::move(k));
}

SplitLatticeFunction translate(const SplitLatticeFunction& fn, const Rat& s) {
  std::vector<Rat> a = fn.offsets;
  for (Rat& x : a) x += s;
  return SplitLatticeFunction(fn.frame, std::move(a));
}

SplitLatticeFunction affineCombine(const SplitLatticeFunction& fn,
                                   const SplitLatticeFunction& other, const Rat& lambda) {
  if (fn.frame != other.frame) throw FrameMismatch("affine combination needs equal frames");
  if (lambda < Rat(0) || lambda > Rat(1))
    throw InvalidInput("combination weight must lie in [0,1]");
  std::vector<Rat> a(fn.frame.m);
  for (std::size_t i = 0; i < fn.frame.m; ++i)
    a[i] = lambda * fn.offsets[i] + (Rat(1) - lambda) * other.offsets[i];
  return SplitLatticeFunction(fn.frame, std::move(a));
}

SplitLatticeFunction directSum(const SplitLatticeFunction& fn,
                               const SplitLatticeFunction& other) {
  if (fn.frame.d != other.frame.d) throw FrameMismatch("direct sum needs equal index d");
  std::vector<Rat> a = fn.offsets;
  a.insert(a.end(), other.offsets.begin(), other.offsets.end());
  return SplitLatticeFunction(AmbientFrame(fn.frame.m + other.frame.m, fn.frame.d),
                              std::move(a));
}

std::vector<Rat> jumpResiduesOnePeriod(const SplitLatticeFunction& fn) {
  const Rat period(1, fn.frame.d);
  std::vector<Rat> ts;
  for (const Rat& a : fn.offsets) ts.push_back(ratMod(a, period));
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

std::size_t rank(const SplitLatticeFunction& fn) { return jumpResiduesOnePeriod(fn).size(); }

LatticeChainData toChain(const SplitLatticeFunction& fn) {
  LatticeChainData chain;
  for (const Rat& t : jumpResiduesOnePeriod(fn)) chain.lattices.push_back(evaluate(fn, t));
  return chain;
}

OrderInvariant invariant(const SplitLatticeFunction& fn) {
  const Rat period(1, fn.frame.d);
  std::map<Rat, long long> byResidue;
  for (const Rat& a : fn.offsets) ++byResidue[ratMod(a, period)];
  std::vector<long long> mult;
  for (const auto& [residue, count] : byResidue) mult.push_back(count);
  return OrderInvariant(CyclicVectorClass(std::move(mult)));
}

SplitLatticeFunction monomialAct(const MonomialElement& g, const SplitLatticeFunction& fn) {
  if (g.perm.size() != fn.frame.m) throw InvalidInput("monomial element dimension mismatch");
  std::vector<Rat> a(fn.frame.m);
  for (std::size_t i = 0; i < fn.frame.m; ++i)
    a[g.perm[i]] = fn.offsets[i] + Rat(g.powers[i], fn.frame.d);
  return SplitLatticeFunction(fn.frame, std::move(a));
}

MonomialElement compose(const MonomialElement& a, const MonomialElement& b) {
  if (a.perm.size() != b.perm.size()) throw InvalidInput("monomial element dimension mismatch");
  const std::size_t m = a.perm.size();
  std::vector<std::size_t> p(m);
  std::vector<long long> e(m);
  for (std::size_t i = 0; i < m; ++i) {
    p[i] = a.perm[b.perm[i]];
    e[i] = b.powers[i] + a.powers[b.perm[i]];
  }
  return MonomialElement(std::move(p), std::move(e));
}

MonomialElement inverse(const MonomialElement& g) {
  const std::size_t m = g.perm.size();
  std::vector<std::size_t> p(m);
  std::vector<long long> e(m);
  for (std::size_t i = 0; i < m; ++i) {
    p[g.perm[i]] = i;
    e[g.perm[i]] = -g.powers[i];
  }
  return MonomialElement(std::move(p), std::move(e));
}

}  // namespace btlat
