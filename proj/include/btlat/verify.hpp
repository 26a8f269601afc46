#pragma once

#include <cstdint>
#include <string>

namespace btlat {

/// Outcome of one verification sweep.
struct SuiteResult {
  std::string suite;
  bool pass = true;
  long long checked = 0;
  double seconds = 0.0;
  std::string counterexample;  // empty unless pass is false
};

/// Optional caps for a sweep; zero keeps the suite's pinned default.
struct VerifyBounds {
  long long f = 0;
  long long r = 0;
  long long m = 0;
  long long d = 0;
  long long denominator = 0;
  std::uint64_t seed = 0;
};

/// The published seven-point example: 12*mu = <3,2,1,0,0,4,2> with f=6, r=2
/// converts to the expected matrix class and back.
SuiteResult verifyWorkedExample();

/// complement(complement(w)) = w for every class with length and total up to
/// the cap (default 8), plus 10^4 random larger classes.
SuiteResult verifyComplementInvolution(const VerifyBounds& b = {});

/// verifyMainTheorem over every embedding datum with f, r, m up to the caps
/// (defaults 5, 3, 7), one representative per matrix class.
SuiteResult verifyMainTheoremSweep(const VerifyBounds& b = {});

/// dualNorm against the definitional lattice-dual scan at every jump of the
/// dual, and double-dual identity, over all Witt-shaped monomial frames with
/// m <= 4, d in {1, 2}, gram valuations in {0, 1/d}, and all offset vectors
/// with denominators up to 6 in [0, 1).
SuiteResult verifyDuality(const VerifyBounds& b = {});

/// Exponent comparison along the descent map: for f | d the coarse square
/// filtration of jE(fn, f) matches ceil(. / f) of the fine one on a full
/// period, exhaustively for small denominators plus random cases.
SuiteResult verifyClf(const VerifyBounds& b = {});

/// recoverDifferences round-trips squareOf exactly outside the split
/// symmetric-plane case (m = 2, epsilon = +1, first kind, d = 1, hyperbolic),
/// where it reports Undetermined.
SuiteResult verifyRecovery(const VerifyBounds& b = {});

/// uniqueExtension finds exactly the unitaryDescend point on a pinned list of
/// descent instances, and at least two points on split symmetric planes.
SuiteResult verifyUniqueness(const VerifyBounds& b = {});

}  // namespace btlat
