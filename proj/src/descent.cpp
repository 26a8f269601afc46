#include "btlat/descent.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "btlat/errors.hpp"

namespace btlat {

DescentContext::DescentContext(AmbientFrame src, long long f_) : source(src), f(f_), target(1, 1) {
  if (f < 1) throw InvalidDegree("degree must be >= 1");
  if (src.d % f != 0) throw InvalidDegree("degree must divide the index");
  target = AmbientFrame(src.m, src.d / f);
}

SplitLatticeFunction jE(const SplitLatticeFunction& fn, long long f) {
  const DescentContext ctx(fn.frame, f);
  return SplitLatticeFunction(ctx.target, fn.offsets);
}

SplitLatticeFunction jEInverse(const SplitLatticeFunction& fn, long long f) {
  if (f < 1) throw InvalidDegree("degree must be >= 1");
  return SplitLatticeFunction(AmbientFrame(fn.frame.m, fn.frame.d * f), fn.offsets);
}

DescentSpec::DescentSpec(long long d_, std::vector<FactorSpec> fs)
    : d(d_), factors(std::move(fs)) {
  if (d < 1) throw InvalidInput("frame index must be >= 1");
  if (factors.empty()) throw InvalidInput("decomposition needs at least one factor");
  for (const FactorSpec& fac : factors) {
    if (fac.f < 1) throw InvalidDegree("degree must be >= 1");
    if (d % fac.f != 0) throw InvalidDegree("degree must divide the index");
    if (fac.dim < 1) throw InvalidInput("factor dimension must be >= 1");
  }
}

std::size_t DescentSpec::width(std::size_t i) const {
  const FactorSpec& fac = factors.at(i);
  return fac.kind == FactorSpec::Kind::Plus ? 2 * fac.dim : fac.dim;
}

std::size_t DescentSpec::totalWidth() const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) w += width(i);
  return w;
}

namespace {

/// Restriction of H to the index window [s, s + dim); tau must stay inside.
HermitianFrame blockFrame(const HermitianFrame& H, std::size_t s, std::size_t dim) {
  std::vector<std::size_t> tau(dim);
  std::vector<Rat> g(dim);
  for (std::size_t p = 0; p < dim; ++p) {
    if (H.tau[s + p] < s || H.tau[s + p] >= s + dim)
      throw InvalidInput("involution must preserve the factor block");
    tau[p] = H.tau[s + p] - s;
    g[p] = H.gramVal[s + p];
  }
  return HermitianFrame(AmbientFrame(dim, H.ambient.d), H.epsilon, H.kind, std::move(tau),
                        std::move(g));
}

/// Hyperbolic form on a Plus block [s, s + 2k); tau must mirror the block.
HermitianFrame hyperbolicBlockFrame(const HermitianFrame& H, std::size_t s, std::size_t k) {
  for (std::size_t p = 0; p < 2 * k; ++p)
    if (H.tau[s + p] != s + 2 * k - 1 - p)
      throw InvalidInput("hyperbolic factor block must mirror in Witt layout");
  ComplementPairing P(AmbientFrame(k, H.ambient.d),
                      std::vector<Rat>(H.gramVal.begin() + static_cast<long>(s),
                                       H.gramVal.begin() + static_cast<long>(s + k)));
  return makeHyperbolicFrame(P, H.epsilon, H.kind);
}

}  // namespace

SelfDualLatticeFunction unitaryDescend(const std::vector<SplitLatticeFunction>& x,
                                       const DescentSpec& spec, const HermitianFrame& H) {
  if (x.size() != spec.factors.size())
    throw InvalidInput("one factor point per factor is required");
  if (H.ambient.m != spec.totalWidth() || H.ambient.d != spec.d)
    throw FrameMismatch("form does not match the block decomposition");

  std::vector<SplitLatticeFunction> blocks;
  std::size_t s = 0;
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    const FactorSpec& fac = spec.factors[i];
    const AmbientFrame want(fac.dim, spec.d / fac.f);
    if (!(x[i].frame == want)) throw FrameMismatch("factor point has the wrong frame");
    const SplitLatticeFunction lifted = jEInverse(x[i], fac.f);
    if (fac.kind == FactorSpec::Kind::Un) {
      const HermitianFrame local = blockFrame(H, s, fac.dim);
      if (!isSelfDual(lifted, local))
        throw InvalidInput("unitary factor point must be self-dual");
      blocks.push_back(lifted);
    } else {
      blocks.push_back(hyperbolicExtend(lifted, hyperbolicBlockFrame(H, s, fac.dim)).fn);
    }
    s += spec.width(i);
  }

  SplitLatticeFunction out = blocks[0];
  for (std::size_t i = 1; i < blocks.size(); ++i) out = directSum(out, blocks[i]);
  return SelfDualLatticeFunction(std::move(out), H);
}

bool imageCharacterization(const SplitLatticeFunction& fn, const ImageSpec& spec,
                           const HermitianFrame* H) {
  const std::size_t m = fn.frame.m;
  const long long d = fn.frame.d;
  std::vector<bool> seen(m, false);
  for (const PearlColumn& col : spec.columns) {
    if (col.f < 1) throw InvalidDegree("degree must be >= 1");
    if (d % col.f != 0) throw InvalidDegree("degree must divide the index");
    for (const auto& [p, k] : col.slots) {
      if (p >= m || seen[p]) throw InvalidInput("columns must partition the index set");
      seen[p] = true;
      (void)k;
    }
  }
  for (std::size_t p = 0; p < m; ++p)
    if (!seen[p]) throw InvalidInput("columns must partition the index set");

  for (const PearlColumn& col : spec.columns) {
    const Rat period(col.f, d);
    bool first = true;
    Rat base;
    for (const auto& [p, k] : col.slots) {
      const Rat res = ratMod(fn.offsets[p] - Rat(k, d), period);
      if (first) {
        base = res;
        first = false;
      } else if (res != base) {
        return false;
      }
    }
  }
  if (H) {
    if (!(H->ambient == fn.frame)) throw FrameMismatch("form and function frames differ");
    if (!isSelfDual(fn, *H)) return false;
  }
  return true;
}

namespace {

long long offsetsLcm(const std::vector<SplitLatticeFunction>& x) {
  long long L = 1;
  for (const SplitLatticeFunction& fn : x)
    for (const Rat& a : fn.offsets) L = std::lcm(L, a.denominator());
  return L;
}

Rat maxAbsOffset(const std::vector<SplitLatticeFunction>& x) {
  Rat mx(0);
  for (const SplitLatticeFunction& fn : x)
    for (const Rat& a : fn.offsets) mx = std::max(mx, a < Rat(0) ? -a : a);
  return mx;
}

/// All assignments of grid values in [-B, B) to the free slots, completed by
/// fill and kept when accept passes. Guarded against oversized grids.
template <typename Fill, typename Accept>
std::vector<SplitLatticeFunction> enumerateWindow(std::size_t freeCount, long long N,
                                                  long long B, const Fill& fill,
                                                  const Accept& accept) {
  const long long span = 2 * B * N;
  double total = 1;
  for (std::size_t i = 0; i < freeCount; ++i) total *= static_cast<double>(span);
  if (total > 5e6) throw InvalidGrid("candidate grid is too large");

  std::vector<SplitLatticeFunction> out;
  std::vector<long long> idx(freeCount, 0);
  while (true) {
    std::vector<Rat> vals(freeCount);
    for (std::size_t i = 0; i < freeCount; ++i) vals[i] = Rat(idx[i] - B * N, N);
    if (auto cand = fill(vals); cand && accept(*cand)) out.push_back(*cand);
    std::size_t pos = 0;
    while (pos < freeCount && ++idx[pos] == span) idx[pos++] = 0;
    if (pos == freeCount) break;
  }
  return out;
}

}  // namespace

ExtensionCandidates uniqueExtension(const std::vector<SplitLatticeFunction>& x,
                                    const DescentSpec& spec, const HermitianFrame* H,
                                    long long N) {
  if (x.size() != spec.factors.size())
    throw InvalidInput("one factor point per factor is required");
  std::size_t s0 = 0;
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    const AmbientFrame want(spec.factors[i].dim, spec.d / spec.factors[i].f);
    if (!(x[i].frame == want)) throw FrameMismatch("factor point has the wrong frame");
    s0 += spec.width(i);
  }

  const long long L = offsetsLcm(x);
  if (N == 0) N = 2 * spec.d * L;
  if (N < 1 || N % std::lcm(spec.d, L) != 0)
    throw InvalidGrid("grid must refine the index and the offsets");

  Rat mx = maxAbsOffset(x);
  if (H)
    for (const Rat& g : H->gramVal) mx = std::max(mx, g < Rat(0) ? -g : g);
  const long long B = 1 + ratCeil(Rat(2) * mx);

  if (!H) {
    if (spec.factors.size() != 1)
      throw InvalidInput("extension without a form is a single-factor operation");
    const FactorSpec& fac = spec.factors[0];
    const AmbientFrame big(fac.dim, spec.d);
    // First offset pinned to 0: candidates modulo translation.
    auto fill = [&](const std::vector<Rat>& vals) -> std::optional<SplitLatticeFunction> {
      std::vector<Rat> a(fac.dim, Rat(0));
      for (std::size_t j = 1; j < fac.dim; ++j) a[j] = vals[j - 1];
      return SplitLatticeFunction(big, std::move(a));
    };
    auto accept = [&](const SplitLatticeFunction& y) {
      return clfHoldsDegree(x[0], y, fac.f, nullptr);
    };
    return ExtensionCandidates{enumerateWindow(fac.dim - 1, N, B, fill, accept)};
  }

  if (H->ambient.m != spec.totalWidth() || H->ambient.d != spec.d)
    throw FrameMismatch("form does not match the block decomposition");

  // Per-factor candidate lists; blocks are independent, so the candidate set
  // over the big frame is their direct-sum product.
  std::vector<std::vector<SplitLatticeFunction>> perFactor;
  std::size_t s = 0;
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    const FactorSpec& fac = spec.factors[i];
    const long long d = spec.d;
    if (fac.kind == FactorSpec::Kind::Un) {
      const HermitianFrame local = blockFrame(*H, s, fac.dim);
      std::vector<std::size_t> freeIdx;
      for (std::size_t p = 0; p < fac.dim; ++p)
        if (p < local.tau[p]) freeIdx.push_back(p);
      auto fill = [&](const std::vector<Rat>& vals) -> std::optional<SplitLatticeFunction> {
        std::vector<Rat> a(fac.dim);
        for (std::size_t p = 0; p < fac.dim; ++p) {
          if (local.tau[p] != p) continue;
          a[p] = local.gramVal[p] / Rat(2);
          if ((a[p] * Rat(N)).denominator() != 1) return std::nullopt;  // off grid
        }
        for (std::size_t q = 0; q < freeIdx.size(); ++q) {
          a[freeIdx[q]] = vals[q];
          a[local.tau[freeIdx[q]]] = local.gramVal[freeIdx[q]] - vals[q];
        }
        return SplitLatticeFunction(AmbientFrame(fac.dim, d), std::move(a));
      };
      auto accept = [&](const SplitLatticeFunction& y) {
        return clfHoldsDegree(x[i], y, fac.f, &local);
      };
      perFactor.push_back(enumerateWindow(freeIdx.size(), N, B, fill, accept));
    } else {
      const HermitianFrame hyp = hyperbolicBlockFrame(*H, s, fac.dim);
      auto fill = [&](const std::vector<Rat>& vals) -> std::optional<SplitLatticeFunction> {
        return SplitLatticeFunction(AmbientFrame(fac.dim, d), vals);
      };
      auto accept = [&](const SplitLatticeFunction& yW) {
        return clfHoldsDegree(x[i], yW, fac.f, nullptr);
      };
      std::vector<SplitLatticeFunction> ws = enumerateWindow(fac.dim, N, B, fill, accept);
      std::vector<SplitLatticeFunction> ext;
      ext.reserve(ws.size());
      for (const SplitLatticeFunction& w : ws) ext.push_back(hyperbolicExtend(w, hyp).fn);
      perFactor.push_back(std::move(ext));
    }
    s += spec.width(i);
  }

  std::vector<SplitLatticeFunction> all;
  double total = 1;
  for (const auto& lst : perFactor) total *= static_cast<double>(lst.size());
  if (total > 5e6) throw InvalidGrid("candidate grid is too large");
  if (total > 0) {
    std::vector<std::size_t> pick(perFactor.size(), 0);
    while (true) {
      SplitLatticeFunction cand = perFactor[0][pick[0]];
      for (std::size_t i = 1; i < perFactor.size(); ++i)
        cand = directSum(cand, perFactor[i][pick[i]]);
      all.push_back(std::move(cand));
      std::size_t pos = 0;
      while (pos < pick.size() && ++pick[pos] == perFactor[pos].size()) pick[pos++] = 0;
      if (pos == pick.size()) break;
    }
  }
  return ExtensionCandidates{std::move(all)};
}

}  // namespace btlat
