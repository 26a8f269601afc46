#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "btlat/filtration.hpp"
#include "btlat/hermitian.hpp"
#include "btlat/latticefn.hpp"
#include "btlat/rational.hpp"

namespace btlat {

/// Passage to the centralizer of an unramified field of degree f: the index
/// drops from d to d/f while the coordinate dimension stays m.
struct DescentContext {
  AmbientFrame source;
  long long f = 1;
  AmbientFrame target;

  DescentContext(AmbientFrame src, long long f_);
};

/// Centralizer coordinates of an invariant point: same offsets, index d/f.
SplitLatticeFunction jE(const SplitLatticeFunction& fn, long long f);

/// Inverse direction: same offsets, index d*f.
SplitLatticeFunction jEInverse(const SplitLatticeFunction& fn, long long f);

/// One simple factor of the centralizer: a block that is itself a unitary
/// group (Un, over dim indices) or a general linear group sitting inside a
/// hyperbolic block (Plus, over 2*dim indices, W then reversed W').
struct FactorSpec {
  enum class Kind { Un, Plus };
  Kind kind = Kind::Un;
  long long f = 1;
  std::size_t dim = 1;
};

/// Block decomposition of the big frame (sum of factor widths, index d).
struct DescentSpec {
  long long d = 1;
  std::vector<FactorSpec> factors;

  DescentSpec(long long d_, std::vector<FactorSpec> fs);

  std::size_t width(std::size_t i) const;
  std::size_t totalWidth() const;
};

/// Assembles the self-dual image of a product point: Un factors extend by
/// jEInverse, Plus factors by jEInverse followed by the hyperbolic
/// extension, glued as a direct sum in block order.
SelfDualLatticeFunction unitaryDescend(const std::vector<SplitLatticeFunction>& x,
                                       const DescentSpec& spec, const HermitianFrame& H);

/// One invariant line of the ambient space in pearl position: the slot
/// indices with their Frobenius twist exponents, all sharing a degree.
struct PearlColumn {
  long long f = 1;
  std::vector<std::pair<std::size_t, long long>> slots;
};

/// Declared column decomposition of the frame; columns partition the index
/// set. Untwisted block coordinates use singleton columns.
struct ImageSpec {
  std::vector<PearlColumn> columns;
};

/// True iff fn is adapted to the declared columns: within each column the
/// residues of alpha_p - k_p/d modulo f/d agree, and fn is self-dual when a
/// form is supplied.
bool imageCharacterization(const SplitLatticeFunction& fn, const ImageSpec& spec,
                           const HermitianFrame* H = nullptr);

/// Candidate points over the big frame whose filtration restricts to the
/// product point x on every factor. Self-dual candidates on the (1/N)Z grid
/// when H is supplied, otherwise grid points modulo translation. N = 0 picks
/// 2 * d * lcm of the offset denominators of x.
struct ExtensionCandidates {
  std::vector<SplitLatticeFunction> candidates;
  bool unique() const { return candidates.size() == 1; }
};

ExtensionCandidates uniqueExtension(const std::vector<SplitLatticeFunction>& x,
                                    const DescentSpec& spec, const HermitianFrame* H,
                                    long long N = 0);

}  // namespace btlat
