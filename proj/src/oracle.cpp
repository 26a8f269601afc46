#include "btlat/oracle.hpp"

#include <cstdlib>
#include <numeric>

namespace btlat {

SplitLattice bruteDualLattice(const SplitLattice& L, const HermitianFrame& H) {
  if (L.frame != H.ambient) throw FrameMismatch("dual needs the frame of the form");
  std::vector<long long> dual(L.frame.m);
  for (std::size_t j = 0; j < L.frame.m; ++j) {
    // x = v_j pi_D^K pairs only with the v_{tau(j)} component of M; the
    // valuation of h(x, v_{tau(j)} pi_D^{k_{tau(j)}}) is (K + k_{tau(j)})/d + nu(c_j),
    // and membership in p_D means that valuation is >= 1/d.
    const long long paired = L.exponents[H.tau[j]];
    const long long grams = (Rat(L.frame.d) * H.gramVal[j]).numerator();
    long long K = -(std::llabs(paired) + std::llabs(grams) + 2);
    while (K + paired + grams < 1) ++K;
    dual[j] = K;
  }
  return SplitLattice(L.frame, std::move(dual));
}

bool bruteSquareMembership(const SplitLatticeFunction& fn, std::size_t i, std::size_t j,
                           long long e, const Rat& t) {
  if (i >= fn.frame.m || j >= fn.frame.m) throw InvalidInput("index out of range");
  const long long d = fn.frame.d;
  long long L = std::lcm(static_cast<long long>(1), t.denominator());
  for (const Rat& a : fn.offsets) L = std::lcm(L, a.denominator());
  // Both step functions s -> k(s) and s -> k(s+t) are constant between
  // consecutive multiples of 1/(dL) and left-continuous, so the grid decides.
  for (long long q = 1; q <= L; ++q) {
    const Rat s(q, d * L);
    const long long kj = evaluate(fn, s).exponents[j];
    const long long ki = evaluate(fn, s + t).exponents[i];
    if (e + kj < ki) return false;
  }
  return true;
}

std::vector<SplitLatticeFunction> enumerateGridPoints(std::size_t m, long long d, long long N,
                                                      bool modTranslation) {
  if (m < 1) throw InvalidInput("grid needs dimension >= 1");
  if (N < d) throw InvalidInput("grid resolution must be at least d");
  std::vector<SplitLatticeFunction> out;
  const std::size_t freeCoords = modTranslation ? m - 1 : m;
  std::vector<long long> idx(freeCoords, 0);
  while (true) {
    std::vector<Rat> a;
    a.reserve(m);
    if (modTranslation) a.emplace_back(0);
    for (long long v : idx) a.emplace_back(v, N);
    out.emplace_back(AmbientFrame(m, d), std::move(a));
    std::size_t c = 0;
    while (c < freeCoords && idx[c] == N - 1) idx[c++] = 0;
    if (c == freeCoords) break;
    ++idx[c];
  }
  return out;
}

}  // namespace btlat
