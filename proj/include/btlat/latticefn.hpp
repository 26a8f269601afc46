#pragma once

#include <cstddef>
#include <vector>

#include "btlat/cyclic.hpp"
#include "btlat/errors.hpp"
#include "btlat/rational.hpp"

namespace btlat {

/// Ambient data for split lattice functions over D of index d acting on D^m.
/// Valuations are normalized so nu(pi_F) = 1 and nu(pi_D) = 1/d.
struct AmbientFrame {
  std::size_t m = 1;
  long long d = 1;

  AmbientFrame(std::size_t m_, long long d_) : m(m_), d(d_) {
    if (m < 1) throw InvalidInput("frame dimension must be >= 1");
    if (d < 1) throw InvalidInput("frame index must be >= 1");
  }

  bool operator==(const AmbientFrame&) const = default;
};

/// The lattice  +(i) v_i p_D^{k_i}  for integer exponents k.
struct SplitLattice {
  AmbientFrame frame;
  std::vector<long long> exponents;

  SplitLattice(AmbientFrame f, std::vector<long long> k);

  bool operator==(const SplitLattice&) const = default;
  bool operator<(const SplitLattice& o) const { return exponents < o.exponents; }
};

/// Lattice function split by the standard frame:
///   L(t) = +(i) v_i p_D^{ceil(d(t - a_i))}.
/// It is decreasing, left-continuous, and satisfies L(t + 1/d) = L(t) pi_D.
struct SplitLatticeFunction {
  AmbientFrame frame;
  std::vector<Rat> offsets;

  SplitLatticeFunction(AmbientFrame f, std::vector<Rat> a);

  bool operator==(const SplitLatticeFunction&) const = default;
};

/// A split lattice function up to global translation; the stored
/// representative is shifted so its first offset is zero.
class LatticeFunctionClass {
 public:
  explicit LatticeFunctionClass(const SplitLatticeFunction& fn);

  const SplitLatticeFunction& representative() const { return rep_; }

  bool operator==(const LatticeFunctionClass&) const = default;

 private:
  SplitLatticeFunction rep_;
};

/// One period of the chain of distinct values: lattices[0] > lattices[1] > ...
/// strictly, and the next period continues with lattices[0] pi_D.
struct LatticeChainData {
  std::vector<SplitLattice> lattices;

  std::size_t rank() const { return lattices.size(); }
};

/// Quotient dimensions along one period of the chain, up to cyclic rotation.
struct OrderInvariant {
  CyclicVectorClass inner;

  explicit OrderInvariant(CyclicVectorClass v);

  bool operator==(const OrderInvariant&) const = default;
};

/// Monomial basis change: v_i -> v_{perm[i]} pi_D^{powers[i]}.
struct MonomialElement {
  std::vector<std::size_t> perm;
  std::vector<long long> powers;

  MonomialElement(std::vector<std::size_t> p, std::vector<long long> e);

  static MonomialElement identity(std::size_t m);

  bool operator==(const MonomialElement&) const = default;
};

SplitLattice evaluate(const SplitLatticeFunction& fn, const Rat& t);

/// The value just after t: exponents floor(d(t - a_i)) + 1.
SplitLattice evaluateRightLimit(const SplitLatticeFunction& fn, const Rat& t);

SplitLatticeFunction translate(const SplitLatticeFunction& fn, const Rat& s);

/// Componentwise  lambda*a + (1-lambda)*a'  for lambda in [0,1].
SplitLatticeFunction affineCombine(const SplitLatticeFunction& fn,
                                   const SplitLatticeFunction& other, const Rat& lambda);

SplitLatticeFunction directSum(const SplitLatticeFunction& fn,
                               const SplitLatticeFunction& other);

/// Number of distinct lattices over one period, i.e. distinct residues of
/// d*a_i mod 1.
std::size_t rank(const SplitLatticeFunction& fn);

/// Jump locations of fn within [0, 1/d), sorted ascending.
std::vector<Rat> jumpResiduesOnePeriod(const SplitLatticeFunction& fn);

/// The distinct lattices of one period in decreasing order starting from
/// evaluate(fn, 0).
LatticeChainData toChain(const SplitLatticeFunction& fn);

/// Hereditary-order invariant: successive quotient dimensions of the chain.
OrderInvariant invariant(const SplitLatticeFunction& fn);

/// New offsets a'_{perm[i]} = a_i + powers[i]/d.
SplitLatticeFunction monomialAct(const MonomialElement& g, const SplitLatticeFunction& fn);

/// compose(a, b) acts as: first b, then a.
MonomialElement compose(const MonomialElement& a, const MonomialElement& b);

MonomialElement inverse(const MonomialElement& g);

}  // namespace btlat
