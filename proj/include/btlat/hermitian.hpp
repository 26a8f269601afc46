#pragma once

#include <cstddef>
#include <vector>

#include "btlat/latticefn.hpp"

namespace btlat {

enum class InvolutionKind { FirstKind, Unitary };

/// Epsilon-hermitian form in Witt shape on the standard frame: the Gram
/// matrix is monomial, pairing v_i with v_{tau(i)}, and only the valuations
/// nu(c_i) of the Gram entries are kept. Valuations must lie in (1/d)Z.
struct HermitianFrame {
  AmbientFrame ambient;
  int epsilon = 1;
  InvolutionKind kind = InvolutionKind::FirstKind;
  std::vector<std::size_t> tau;
  std::vector<Rat> gramVal;

  HermitianFrame(AmbientFrame a, int eps, InvolutionKind k, std::vector<std::size_t> t,
                 std::vector<Rat> g);

  bool operator==(const HermitianFrame&) const = default;
};

SplitLatticeFunction dualNorm(const SplitLatticeFunction& fn, const HermitianFrame& H);

/// a_i + a_{tau(i)} <= nu(c_i) for every i.
bool isDominated(const SplitLatticeFunction& fn, const HermitianFrame& H);

/// Offset-wise midpoint of fn and its dual; always self-dual.
SplitLatticeFunction bary(const SplitLatticeFunction& fn, const HermitianFrame& H);

/// a_i + a_{tau(i)} = nu(c_i) for every i.
bool isSelfDual(const SplitLatticeFunction& fn, const HermitianFrame& H);

/// A lattice function pinned to the fixed-point locus of dualNorm.
struct SelfDualLatticeFunction {
  SplitLatticeFunction fn;

  SelfDualLatticeFunction(SplitLatticeFunction f, const HermitianFrame& H);
};

/// Perfect pairing of a totally isotropic W with a complement W' in Witt
/// layout: basis w_i of W pairs with w'_{k+1-i}, and pairVal[i] is the
/// valuation of that pairing.
struct ComplementPairing {
  AmbientFrame frame;
  std::vector<Rat> pairVal;

  ComplementPairing(AmbientFrame f, std::vector<Rat> v);
};

/// The same pairing read from the W' side.
ComplementPairing reversedPairing(const ComplementPairing& P);

/// Dual of fn (over W) inside the paired complement W'; index order is
/// reversed to match the Witt-basis layout.
SplitLatticeFunction dualInComplement(const SplitLatticeFunction& fn,
                                      const ComplementPairing& P);

/// The hyperbolic frame on W + W' induced by a pairing: tau(i) = 2k-1-i.
HermitianFrame makeHyperbolicFrame(const ComplementPairing& P, int epsilon,
                                   InvolutionKind kind);

/// directSum(fn, dualInComplement(fn)); self-dual for the hyperbolic frame H.
SelfDualLatticeFunction hyperbolicExtend(const SplitLatticeFunction& fn,
                                         const HermitianFrame& H);

/// The monomial element h with dualNorm(g.fn) = h.dualNorm(fn); the
/// adjoint-inverse of g with respect to the form.
MonomialElement dualActionOf(const MonomialElement& g, const HermitianFrame& H);

}  // namespace btlat
