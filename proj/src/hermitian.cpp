#include "btlat/hermitian.hpp"

namespace btlat {

HermitianFrame::HermitianFrame(AmbientFrame a, int eps, InvolutionKind k,
                               std::vector<std::size_t> t, std::vector<Rat> g)
    : ambient(a), epsilon(eps), kind(k), tau(std::move(t)), gramVal(std::move(g)) {
  if (epsilon != 1 && epsilon != -1) throw InvalidInput("epsilon must be +1 or -1");
  if (tau.size() != ambient.m || gramVal.size() != ambient.m)
    throw InvalidInput("pairing data size must match dimension");
  for (std::size_t i = 0; i < ambient.m; ++i) {
    if (tau[i] >= ambient.m || tau[tau[i]] != i)
      throw InvalidInput("tau must be an involutive permutation");
    if (gramVal[tau[i]] != gramVal[i])
      throw InvalidInput("Gram valuations must be tau-symmetric");
    if ((Rat(ambient.d) * gramVal[i]).denominator() != 1)
      throw NotIntegral("Gram valuations must lie in (1/d)Z");
    // A diagonal entry of an alternating form over the base field vanishes.
    if (tau[i] == i && epsilon == -1 && kind == InvolutionKind::FirstKind && ambient.d == 1)
      throw InvalidInput("alternating forms admit no anisotropic index");
  }
}

SplitLatticeFunction dualNorm(const SplitLatticeFunction& fn, const HermitianFrame& H) {
  if (fn.frame != H.ambient) throw FrameMismatch("dual needs the frame of the form");
  std::vector<Rat> a(fn.frame.m);
  for (std::size_t j = 0; j < fn.frame.m; ++j) a[j] = H.gramVal[j] - fn.offsets[H.tau[j]];
  return SplitLatticeFunction(fn.frame, std::move(a));
}

bool isDominated(const SplitLatticeFunction& fn, const HermitianFrame& H) {
  if (fn.frame != H.ambient) throw FrameMismatch("domination needs the frame of the form");
  for (std::size_t i = 0; i < fn.frame.m; ++i)
    if (fn.offsets[i] + fn.offsets[H.tau[i]] > H.gramVal[i]) return false;
  return true;
}

SplitLatticeFunction bary(const SplitLatticeFunction& fn, const HermitianFrame& H) {
  return affineCombine(fn, dualNorm(fn, H), Rat(1, 2));
}

bool isSelfDual(const SplitLatticeFunction& fn, const HermitianFrame& H) {
  if (fn.frame != H.ambient) throw FrameMismatch("self-duality needs the frame of the form");
  for (std::size_t i = 0; i < fn.frame.m; ++i)
    if (fn.offsets[i] + fn.offsets[H.tau[i]] != H.gramVal[i]) return false;
  return true;
}

SelfDualLatticeFunction::SelfDualLatticeFunction(SplitLatticeFunction f,
                                                 const HermitianFrame& H)
    : fn(std::move(f)) {
  if (!isSelfDual(fn, H)) throw InvalidInput("function is not self-dual for this form");
}

ComplementPairing::ComplementPairing(AmbientFrame f, std::vector<Rat> v)
    : frame(f), pairVal(std::move(v)) {
  if (pairVal.size() != frame.m) throw InvalidInput("pairing data size must match dimension");
  for (const Rat& x : pairVal)
    if ((Rat(frame.d) * x).denominator() != 1)
      throw NotIntegral("pairing valuations must lie in (1/d)Z");
}

ComplementPairing reversedPairing(const ComplementPairing& P) {
  std::vector<Rat> v(P.pairVal.rbegin(), P.pairVal.rend());
  return ComplementPairing(P.frame, std::move(v));
}

SplitLatticeFunction dualInComplement(const SplitLatticeFunction& fn,
                                      const ComplementPairing& P) {
  if (fn.frame != P.frame) throw FrameMismatch("complement dual needs the pairing frame");
  const std::size_t k = fn.frame.m;
  std::vector<Rat> b(k);
  for (std::size_t j = 0; j < k; ++j)
    b[j] = P.pairVal[k - 1 - j] - fn.offsets[k - 1 - j];
  return SplitLatticeFunction(fn.frame, std::move(b));
}

HermitianFrame makeHyperbolicFrame(const ComplementPairing& P, int epsilon,
                                   InvolutionKind kind) {
  const std::size_t k = P.frame.m;
  std::vector<std::size_t> tau(2 * k);
  std::vector<Rat> g(2 * k);
  for (std::size_t i = 0; i < 2 * k; ++i) {
    tau[i] = 2 * k - 1 - i;
    g[i] = i < k ? P.pairVal[i] : P.pairVal[2 * k - 1 - i];
  }
  return HermitianFrame(AmbientFrame(2 * k, P.frame.d), epsilon, kind, std::move(tau),
                        std::move(g));
}

SelfDualLatticeFunction hyperbolicExtend(const SplitLatticeFunction& fn,
                                         const HermitianFrame& H) {
  const std::size_t k = fn.frame.m;
  if (H.ambient.m != 2 * k || H.ambient.d != fn.frame.d)
    throw FrameMismatch("hyperbolic extension needs a form of doubled dimension");
  for (std::size_t i = 0; i < 2 * k; ++i)
    if (H.tau[i] != 2 * k - 1 - i)
      throw InvalidInput("form is not hyperbolic in Witt layout");
  ComplementPairing P(fn.frame, std::vector<Rat>(H.gramVal.begin(), H.gramVal.begin() + k));
  return SelfDualLatticeFunction(directSum(fn, dualInComplement(fn, P)), H);
}

MonomialElement dualActionOf(const MonomialElement& g, const HermitianFrame& H) {
  const std::size_t m = H.ambient.m;
  if (g.perm.size() != m) throw InvalidInput("monomial element dimension mismatch");
  std::vector<std::size_t> p(m);
  std::vector<long long> e(m);
  for (std::size_t q = 0; q < m; ++q) {
    const std::size_t piTq = g.perm[H.tau[q]];
    p[q] = H.tau[piTq];
    Rat f = Rat(H.ambient.d) * (H.gramVal[piTq] - H.gramVal[q]) - Rat(g.powers[H.tau[q]]);
    e[q] = f.numerator();  // denominator is 1 by frame validation
  }
  return MonomialElement(std::move(p), std::move(e));
}

}  // namespace btlat
