#pragma once

#include <vector>

#include "btlat/hermitian.hpp"
#include "btlat/latticefn.hpp"

namespace btlat {

/// Dual lattice straight from the definition M^# = {x : h(x, M) in p_D},
/// found by scanning candidate exponents instead of a closed formula.
SplitLattice bruteDualLattice(const SplitLattice& L, const HermitianFrame& H);

/// Whether the elementary map v_j -> v_i pi_D^e shifts fn by at least t,
/// probed over a full period of sample points.
bool bruteSquareMembership(const SplitLatticeFunction& fn, std::size_t i, std::size_t j,
                           long long e, const Rat& t);

/// All offset vectors in (1/N)Z^m within [0,1)^m; with modTranslation the
/// first offset is pinned to zero.
std::vector<SplitLatticeFunction> enumerateGridPoints(std::size_t m, long long d, long long N,
                                                      bool modTranslation);

}  // namespace btlat
