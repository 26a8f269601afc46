#include "btlat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include "btlat/cyclic.hpp"
#include "btlat/descent.hpp"
#include "btlat/embedding.hpp"
#include "btlat/errors.hpp"
#include "btlat/filtration.hpp"
#include "btlat/hermitian.hpp"
#include "btlat/latticefn.hpp"
#include "btlat/oracle.hpp"

namespace btlat {
namespace {

class Stopwatch {
 public:
  explicit Stopwatch(SuiteResult& res)
      : res_(res), start_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() {
    res_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  SuiteResult& res_;
  std::chrono::steady_clock::time_point start_;
};

std::string vecStr(const std::vector<Rat>& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << ratStr(a[i]);
  os << ']';
  return os.str();
}

std::string wordStr(const std::vector<long long>& w) {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << '>';
  return os.str();
}

std::string frameStr(const HermitianFrame& H) {
  std::ostringstream os;
  os << "m=" << H.ambient.m << " d=" << H.ambient.d << " eps=" << H.epsilon
     << " kind=" << (H.kind == InvolutionKind::FirstKind ? "first" : "unitary") << " tau=[";
  for (std::size_t i = 0; i < H.tau.size(); ++i) os << (i ? "," : "") << H.tau[i];
  os << "] gram=" << vecStr(H.gramVal);
  return os.str();
}

/// Invoke f on every nonnegative word of the given length with sum total.
template <typename F>
void forEachWord(std::size_t pos, long long remaining, std::vector<long long>& w, const F& f) {
  if (pos + 1 == w.size()) {
    w[pos] = remaining;
    f(w);
    return;
  }
  for (long long v = 0; v <= remaining; ++v) {
    w[pos] = v;
    forEachWord(pos + 1, remaining - v, w, f);
  }
}

/// Offsets with denominator up to maxDen in [0, 1), sorted.
std::vector<Rat> fareyValues(long long maxDen) {
  std::vector<Rat> out;
  for (long long q = 1; q <= maxDen; ++q)
    for (long long p = 0; p < q; ++p)
      if (std::gcd(p, q) == 1) out.push_back(Rat(p, q));
  std::sort(out.begin(), out.end());
  return out;
}

/// All Witt-shaped monomial frames on m lines: an ordered mix of hyperbolic
/// pairs and fixed lines, one gram valuation per block, over every valid
/// (epsilon, involution-kind) combination.
std::vector<HermitianFrame> wittFrames(std::size_t m, long long d,
                                       const std::vector<Rat>& gramChoices) {
  std::vector<std::vector<int>> comps;
  std::vector<int> cur;
  const auto rec = [&](auto&& self, std::size_t left) -> void {
    if (left == 0) {
      comps.push_back(cur);
      return;
    }
    for (int part : {1, 2})
      if (static_cast<std::size_t>(part) <= left) {
        cur.push_back(part);
        self(self, left - part);
        cur.pop_back();
      }
  };
  rec(rec, m);

  std::vector<HermitianFrame> out;
  for (const auto& comp : comps) {
    const std::size_t blocks = comp.size();
    std::vector<std::size_t> pick(blocks, 0);
    while (true) {
      std::vector<std::size_t> tau(m);
      std::vector<Rat> gram(m);
      std::size_t at = 0;
      for (std::size_t bidx = 0; bidx < blocks; ++bidx) {
        const Rat g = gramChoices[pick[bidx]];
        if (comp[bidx] == 1) {
          tau[at] = at;
          gram[at] = g;
          ++at;
        } else {
          tau[at] = at + 1;
          tau[at + 1] = at;
          gram[at] = g;
          gram[at + 1] = g;
          at += 2;
        }
      }
      for (int eps : {1, -1})
        for (InvolutionKind kind : {InvolutionKind::FirstKind, InvolutionKind::Unitary}) {
          try {
            out.emplace_back(AmbientFrame(m, d), eps, kind, tau, gram);
          } catch (const Error&) {
          }
        }
      std::size_t carry = 0;
      while (carry < blocks && ++pick[carry] == gramChoices.size()) pick[carry++] = 0;
      if (carry == blocks) break;
    }
  }
  return out;
}

long long ceilDiv(long long num, long long den) {
  const long long q = num / den;
  return q + ((num % den != 0 && (num > 0) == (den > 0)) ? 1 : 0);
}

std::vector<Rat> randomOffsets(std::mt19937_64& rng, std::size_t m, long long maxDen) {
  std::vector<Rat> a(m);
  for (auto& v : a) {
    const long long q = 1 + static_cast<long long>(rng() % static_cast<std::uint64_t>(maxDen));
    const long long p = static_cast<long long>(rng() % (4 * static_cast<std::uint64_t>(q) + 1)) -
                        2 * q;
    v = Rat(p, q);
  }
  return a;
}

}  // namespace

SuiteResult verifyWorkedExample() {
  SuiteResult res{"worked-example"};
  Stopwatch sw(res);
  std::vector<Rat> scaled(7);
  const long long twelfths[] = {3, 2, 1, 0, 0, 4, 2};
  for (std::size_t i = 0; i < 7; ++i) scaled[i] = Rat(twelfths[i], 12);
  const LocalType mu(scaled);
  const CyclicMatrixClass expected(
      std::vector<std::vector<long long>>{{1, 0}, {1, 3}, {0, 0}, {0, 1}, {0, 1}, {0, 0}});

  ++res.checked;
  if (embeddingTypeFromLocalType(mu, 6, 2) != expected) {
    res.pass = false;
    res.counterexample = "forward direction produced a different matrix class";
    return res;
  }
  ++res.checked;
  if (localTypeFromEmbeddingType(expected, 6, 2) != mu) {
    res.pass = false;
    res.counterexample = "inverse direction did not recover 12*mu = <3,2,1,0,0,4,2>";
  }
  return res;
}

SuiteResult verifyComplementInvolution(const VerifyBounds& b) {
  SuiteResult res{"complement-involution"};
  Stopwatch sw(res);
  const long long cap = b.m ? b.m : 8;

  const auto check = [&](const std::vector<long long>& word) {
    const MopRowClass w{CyclicVectorClass(word)};
    const MopRowClass c = complement(w);
    ++res.checked;
    if (c.length() != static_cast<std::size_t>(w.total()) ||
        c.total() != static_cast<long long>(w.length()) || complement(c) != w) {
      res.pass = false;
      res.counterexample = "w = " + wordStr(word);
    }
  };

  for (long long s = 1; s <= cap && res.pass; ++s)
    for (long long t = 1; t <= cap && res.pass; ++t) {
      std::vector<long long> w(static_cast<std::size_t>(s));
      forEachWord(0, t, w, [&](const std::vector<long long>& word) {
        if (!res.pass || CyclicVectorClass(word).entries() != word) return;
        check(word);
      });
    }

  std::mt19937_64 rng(b.seed ^ 0xC001C0DEULL);
  for (int trial = 0; trial < 10000 && res.pass; ++trial) {
    const std::size_t s = 1 + rng() % 24;
    const long long t = 1 + static_cast<long long>(rng() % 24);
    std::vector<long long> w(s, 0);
    for (long long i = 0; i < t; ++i) ++w[rng() % s];
    check(w);
  }
  return res;
}

SuiteResult verifyMainTheoremSweep(const VerifyBounds& b) {
  SuiteResult res{"main-theorem"};
  Stopwatch sw(res);
  const long long fCap = b.f ? b.f : 5;
  const long long rCap = b.r ? b.r : 3;
  const long long mCap = b.m ? b.m : 7;

  for (long long f = 1; f <= fCap && res.pass; ++f)
    for (long long r = 1; r <= rCap && res.pass; ++r)
      for (long long m = 1; m <= mCap && res.pass; ++m) {
        std::vector<long long> w(static_cast<std::size_t>(f * r));
        forEachWord(0, m, w, [&](const std::vector<long long>& word) {
          if (!res.pass || CyclicVectorClass(word).entries() != word) return;
          std::vector<std::vector<long long>> rows(static_cast<std::size_t>(f));
          for (long long k = 0; k < f; ++k)
            rows[static_cast<std::size_t>(k)] =
                std::vector<long long>(word.begin() + k * r, word.begin() + (k + 1) * r);
          const CyclicMatrixClass lambda(rows);
          if (!lambda.isMintMember()) return;
          ++res.checked;
          if (!verifyMainTheorem(EmbeddingSpec(f, lambda))) {
            res.pass = false;
            std::ostringstream os;
            os << "f=" << f << " r=" << r << " lambda row word " << wordStr(word);
            res.counterexample = os.str();
          }
        });
      }
  return res;
}

SuiteResult verifyDuality(const VerifyBounds& b) {
  SuiteResult res{"duality"};
  Stopwatch sw(res);
  const long long mCap = b.m ? b.m : 4;
  const long long dCap = b.d ? b.d : 2;
  const long long den = b.denominator ? b.denominator : 6;
  const std::vector<Rat> values = fareyValues(den);
  long long L = 1;
  for (const Rat& v : values) L = std::lcm(L, v.denominator());

  for (long long d = 1; d <= dCap && res.pass; ++d) {
    const long long M = d * L;
    const std::vector<Rat> gramChoices{Rat(0), Rat(1, d)};
    for (std::size_t m = 1; m <= static_cast<std::size_t>(mCap) && res.pass; ++m) {
      const std::vector<HermitianFrame> frames = wittFrames(m, d, gramChoices);
      std::vector<std::size_t> idx(m, 0);
      while (res.pass) {
        std::vector<Rat> offsets(m);
        for (std::size_t i = 0; i < m; ++i) offsets[i] = values[idx[i]];
        const SplitLatticeFunction fn(AmbientFrame(m, d), offsets);

        // Jumps of any dual sit at the residues of -offsets modulo 1/d (the
        // gram shift is an integer multiple of 1/d), so checking there pins
        // both step functions on a full period.
        std::vector<Rat> probes(m);
        for (std::size_t i = 0; i < m; ++i) probes[i] = ratMod(-offsets[i], Rat(1, d));
        std::sort(probes.begin(), probes.end());
        probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
        std::vector<long long> probeNum(probes.size());
        std::vector<SplitLattice> atMinus;
        atMinus.reserve(probes.size());
        for (std::size_t p = 0; p < probes.size(); ++p) {
          probeNum[p] = probes[p].numerator() * (M / probes[p].denominator());
          atMinus.push_back(evaluateRightLimit(fn, -probes[p]));
        }

        for (const HermitianFrame& H : frames) {
          const SplitLatticeFunction dual = dualNorm(fn, H);
          ++res.checked;
          if (dualNorm(dual, H) != fn) {
            res.pass = false;
            res.counterexample = "(L#)# != L at " + frameStr(H) + " offsets " + vecStr(offsets);
            break;
          }
          std::vector<long long> dualNum(m);
          for (std::size_t i = 0; i < m; ++i)
            dualNum[i] = dual.offsets[i].numerator() * (M / dual.offsets[i].denominator());
          for (std::size_t p = 0; p < probes.size() && res.pass; ++p) {
            const SplitLattice want = bruteDualLattice(atMinus[p], H);
            for (std::size_t i = 0; i < m; ++i) {
              if (ceilDiv(d * (probeNum[p] - dualNum[i]), M) != want.exponents[i]) {
                res.pass = false;
                res.counterexample = "dualNorm != scan at " + frameStr(H) + " offsets " +
                                     vecStr(offsets) + " t=" + ratStr(probes[p]);
                break;
              }
            }
          }
          if (!res.pass) break;
        }

        std::size_t carry = 0;
        while (carry < m && ++idx[carry] == values.size()) idx[carry++] = 0;
        if (carry == m) break;
      }
    }
  }
  return res;
}

SuiteResult verifyClf(const VerifyBounds& b) {
  SuiteResult res{"clf"};
  Stopwatch sw(res);
  const long long dCap = b.d ? b.d : 4;
  const long long mCap = b.m ? b.m : 4;
  const long long exDen = std::min<long long>(b.denominator ? b.denominator : 4, 4);
  const long long rndDen = b.denominator ? b.denominator : 6;
  const std::vector<Rat> values = fareyValues(exDen);

  const auto check = [&](const SplitLatticeFunction& y, long long f) {
    const SplitLatticeFunction x = jE(y, f);
    ++res.checked;
    if (!clfHoldsDegree(x, y, f)) {
      res.pass = false;
      res.counterexample = "d=" + std::to_string(y.frame.d) + " f=" + std::to_string(f) +
                           " offsets " + vecStr(y.offsets);
      return;
    }
    // Entry-level spot checks of the same identity at fine breakpoints.
    const SquareFiltration sy = squareOf(y);
    const SquareFiltration sx = squareOf(x);
    const std::size_t m = y.frame.m;
    for (std::size_t i = 0; i < m && res.pass; ++i)
      for (std::size_t j = 0; j < m && res.pass; ++j)
        for (long long k : {0LL, 1LL, f}) {
          const Rat t = y.offsets[i] - y.offsets[j] + Rat(k, y.frame.d);
          if (sx.entryExponent(i, j, t) != ratCeil(Rat(sy.entryExponent(i, j, t), f))) {
            res.pass = false;
            res.counterexample = "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") at t=" + ratStr(t) + " offsets " + vecStr(y.offsets);
          }
        }
  };

  for (long long d = 1; d <= dCap && res.pass; ++d)
    for (long long f = 1; f <= d && res.pass; ++f) {
      if (d % f != 0) continue;
      for (std::size_t m = 1; m <= static_cast<std::size_t>(mCap) && res.pass; ++m) {
        std::vector<std::size_t> idx(m, 0);
        while (res.pass) {
          std::vector<Rat> offsets(m);
          for (std::size_t i = 0; i < m; ++i) offsets[i] = values[idx[i]];
          check(SplitLatticeFunction(AmbientFrame(m, d), std::move(offsets)), f);
          std::size_t carry = 0;
          while (carry < m && ++idx[carry] == values.size()) idx[carry++] = 0;
          if (carry == m) break;
        }
      }
    }

  std::mt19937_64 rng(b.seed ^ 0x5EEDB00CULL);
  for (int trial = 0; trial < 2000 && res.pass; ++trial) {
    const long long d = 1 + static_cast<long long>(rng() % static_cast<std::uint64_t>(dCap));
    std::vector<long long> divisors;
    for (long long f = 1; f <= d; ++f)
      if (d % f == 0) divisors.push_back(f);
    const long long f = divisors[rng() % divisors.size()];
    const std::size_t m = 1 + rng() % static_cast<std::size_t>(mCap);
    check(SplitLatticeFunction(AmbientFrame(m, d), randomOffsets(rng, m, rndDen)), f);
  }
  return res;
}

SuiteResult verifyRecovery(const VerifyBounds& b) {
  SuiteResult res{"recovery"};
  Stopwatch sw(res);
  const long long mCap = b.m ? b.m : 6;
  std::mt19937_64 rng(b.seed ^ 0x4EC0BE4AULL);

  const auto runFrame = [&](const HermitianFrame& H, bool expectRecovery, int trials) {
    const std::size_t m = H.ambient.m;
    for (int trial = 0; trial < trials && res.pass; ++trial) {
      const SplitLatticeFunction fn(H.ambient, randomOffsets(rng, m, 6));
      const std::optional<SquareFiltration> got = recoverDifferences(skewData(fn, H));
      ++res.checked;
      if (expectRecovery) {
        if (!got || *got != squareOf(fn)) {
          res.pass = false;
          res.counterexample =
              "expected recovery at " + frameStr(H) + " offsets " + vecStr(fn.offsets);
        }
      } else if (got) {
        res.pass = false;
        res.counterexample =
            "expected Undetermined at " + frameStr(H) + " offsets " + vecStr(fn.offsets);
      }
    }
  };

  const std::vector<Rat> gram1{Rat(0)};
  for (long long d : {1LL, 2LL}) {
    const std::vector<Rat> gramChoices{Rat(0), Rat(1, d)};
    // Skew forms: every line is constrained, all sizes recover.
    for (std::size_t m = 2; m <= static_cast<std::size_t>(mCap); m += 2)
      for (const HermitianFrame& H : wittFrames(m, d, gramChoices))
        if (H.epsilon == -1 && H.kind == InvolutionKind::FirstKind && res.pass)
          runFrame(H, true, 12);
  }
  // Symmetric first-kind forms at d = 1: an anisotropic line restores the
  // missing potentials; fully hyperbolic ones need m >= 4.
  for (std::size_t m = 1; m <= static_cast<std::size_t>(mCap) && res.pass; ++m)
    for (const HermitianFrame& H : wittFrames(m, 1, {Rat(0), Rat(1)})) {
      if (H.epsilon != 1 || H.kind != InvolutionKind::FirstKind || !res.pass) continue;
      const bool hyperbolic2 = m == 2 && H.tau[0] == 1;
      bool anyFixed = false;
      for (std::size_t i = 0; i < m; ++i) anyFixed |= H.tau[i] == i;
      if (hyperbolic2)
        runFrame(H, false, 25);  // the split symmetric plane stays undetermined
      else if (anyFixed || m == 4 || m == 6)
        runFrame(H, true, 12);
    }
  // The same plane shape away from d = 1 carries no sigma-fixed pair.
  for (const HermitianFrame& H : wittFrames(2, 2, {Rat(0), Rat(1, 2)}))
    if (H.epsilon == 1 && H.kind == InvolutionKind::FirstKind && H.tau[0] == 1 && res.pass)
      runFrame(H, true, 25);
  return res;
}

SuiteResult verifyUniqueness(const VerifyBounds& b) {
  SuiteResult res{"uniqueness"};
  Stopwatch sw(res);
  (void)b;

  struct Instance {
    const char* name;
    long long d;
    long long f;
    int eps;
    InvolutionKind kind;
    std::vector<std::size_t> tau;
    std::vector<Rat> gram;
    std::vector<Rat> yOffsets;
    std::vector<FactorSpec> factors;
    bool splitPlane = false;  // the excluded split symmetric plane
  };
  const InvolutionKind FK = InvolutionKind::FirstKind;
  const InvolutionKind UK = InvolutionKind::Unitary;
  const auto un = [](long long f, std::size_t dim) {
    return FactorSpec{FactorSpec::Kind::Un, f, dim};
  };

  std::vector<Instance> instances;
  // Anisotropic lines: the self-dual offset nu/2 is pinned.
  instances.push_back({"aniso d1 g0", 1, 1, 1, FK, {0}, {Rat(0)}, {Rat(0)}, {un(1, 1)}});
  instances.push_back({"aniso d1 g2", 1, 1, 1, FK, {0}, {Rat(2)}, {Rat(1)}, {un(1, 1)}});
  instances.push_back({"aniso d2 f2 g0", 2, 2, 1, FK, {0}, {Rat(0)}, {Rat(0)}, {un(2, 1)}});
  instances.push_back(
      {"aniso d2 f2 g1/2", 2, 2, 1, FK, {0}, {Rat(1, 2)}, {Rat(1, 4)}, {un(2, 1)}});
  instances.push_back({"aniso d2 f2 g1", 2, 2, 1, FK, {0}, {Rat(1)}, {Rat(1, 2)}, {un(2, 1)}});
  // Alternating planes: no sigma-fixed pair, the skew line pins everything.
  instances.push_back({"symplectic d1 g0 a1/3", 1, 1, -1, FK, {1, 0}, {Rat(0), Rat(0)},
                       {Rat(1, 3), Rat(-1, 3)}, {un(1, 2)}});
  instances.push_back({"symplectic d1 g0 a1/4", 1, 1, -1, FK, {1, 0}, {Rat(0), Rat(0)},
                       {Rat(1, 4), Rat(-1, 4)}, {un(1, 2)}});
  instances.push_back({"symplectic d1 g1 a1/3", 1, 1, -1, FK, {1, 0}, {Rat(1), Rat(1)},
                       {Rat(1, 3), Rat(2, 3)}, {un(1, 2)}});
  instances.push_back({"symplectic d1 g1 a1/4", 1, 1, -1, FK, {1, 0}, {Rat(1), Rat(1)},
                       {Rat(1, 4), Rat(3, 4)}, {un(1, 2)}});
  instances.push_back({"symplectic d2 f1 g0", 2, 1, -1, FK, {1, 0}, {Rat(0), Rat(0)},
                       {Rat(1, 4), Rat(-1, 4)}, {un(1, 2)}});
  instances.push_back({"symplectic d2 f1 g1/2", 2, 1, -1, FK, {1, 0}, {Rat(1, 2), Rat(1, 2)},
                       {Rat(1, 4), Rat(1, 4)}, {un(1, 2)}});
  instances.push_back({"symplectic d2 f2 g0", 2, 2, -1, FK, {1, 0}, {Rat(0), Rat(0)},
                       {Rat(1, 4), Rat(-1, 4)}, {un(2, 2)}});
  instances.push_back({"symplectic d2 f2 g1/2", 2, 2, -1, FK, {1, 0}, {Rat(1, 2), Rat(1, 2)},
                       {Rat(1, 4), Rat(1, 4)}, {un(2, 2)}});
  // Unitary planes: second-kind involutions carry no sigma-fixed pair either.
  instances.push_back({"unitary d1 g0", 1, 1, 1, UK, {1, 0}, {Rat(0), Rat(0)},
                       {Rat(1, 6), Rat(-1, 6)}, {un(1, 2)}});
  instances.push_back({"unitary d1 g1", 1, 1, 1, UK, {1, 0}, {Rat(1), Rat(1)},
                       {Rat(1, 6), Rat(5, 6)}, {un(1, 2)}});
  instances.push_back({"unitary d2 f1 g1/2", 2, 1, 1, UK, {1, 0}, {Rat(1, 2), Rat(1, 2)},
                       {Rat(1, 4), Rat(1, 4)}, {un(1, 2)}});
  instances.push_back({"unitary d2 f2 g0", 2, 2, 1, UK, {1, 0}, {Rat(0), Rat(0)},
                       {Rat(1, 3), Rat(-1, 3)}, {un(2, 2)}});
  // Symmetric plane away from d = 1: the exclusion does not apply.
  instances.push_back({"symmetric plane d2 f1", 2, 1, 1, FK, {1, 0}, {Rat(0), Rat(0)},
                       {Rat(1, 6), Rat(-1, 6)}, {un(1, 2)}});
  instances.push_back({"symmetric plane d2 f2", 2, 2, 1, FK, {1, 0}, {Rat(0), Rat(0)},
                       {Rat(1, 6), Rat(-1, 6)}, {un(2, 2)}});
  // Sums of anisotropic lines inside one factor.
  instances.push_back({"aniso+aniso d1", 1, 1, 1, FK, {0, 1}, {Rat(0), Rat(2)},
                       {Rat(0), Rat(1)}, {un(1, 2)}});
  instances.push_back({"aniso+aniso d2 f2", 2, 2, 1, FK, {0, 1}, {Rat(0), Rat(1)},
                       {Rat(0), Rat(1, 2)}, {un(2, 2)}});
  // A four-dimensional alternating block.
  instances.push_back({"symplectic dim4", 1, 1, -1, FK, {3, 2, 1, 0},
                       {Rat(0), Rat(0), Rat(0), Rat(0)},
                       {Rat(1, 3), Rat(1, 6), Rat(-1, 6), Rat(-1, 3)}, {un(1, 4)}});
  // Deeper descents.
  instances.push_back({"unitary d4 f4", 4, 4, 1, UK, {1, 0}, {Rat(0), Rat(0)},
                       {Rat(1, 8), Rat(-1, 8)}, {un(4, 2)}});
  instances.push_back({"symplectic d4 f2", 4, 2, -1, FK, {1, 0}, {Rat(0), Rat(0)},
                       {Rat(1, 8), Rat(-1, 8)}, {un(2, 2)}});
  // Two independent alternating factors.
  instances.push_back({"two symplectic planes", 1, 1, -1, FK, {1, 0, 3, 2},
                       {Rat(0), Rat(0), Rat(0), Rat(0)},
                       {Rat(1, 3), Rat(-1, 3), Rat(1, 6), Rat(-1, 6)},
                       {un(1, 2), un(1, 2)}});
  // The excluded split symmetric planes: a whole translation family remains.
  instances.push_back({"split plane g0 a1/4", 1, 1, 1, FK, {1, 0}, {Rat(0), Rat(0)},
                       {Rat(1, 4), Rat(-1, 4)}, {un(1, 2)}, true});
  instances.push_back({"split plane g1 a1/3", 1, 1, 1, FK, {1, 0}, {Rat(1), Rat(1)},
                       {Rat(1, 3), Rat(2, 3)}, {un(1, 2)}, true});
  instances.push_back({"split plane g0 a0", 1, 1, 1, FK, {1, 0}, {Rat(0), Rat(0)},
                       {Rat(0), Rat(0)}, {un(1, 2)}, true});

  long long nonExcluded = 0;
  long long excluded = 0;
  for (const Instance& inst : instances) {
    if (!res.pass) break;
    const std::size_t m = inst.tau.size();
    const HermitianFrame H(AmbientFrame(m, inst.d), inst.eps, inst.kind, inst.tau, inst.gram);
    const SplitLatticeFunction y(AmbientFrame(m, inst.d), inst.yOffsets);
    const DescentSpec spec(inst.d, inst.factors);
    std::vector<SplitLatticeFunction> x;
    std::size_t at = 0;
    for (const FactorSpec& fc : inst.factors) {
      std::vector<Rat> part(y.offsets.begin() + static_cast<long long>(at),
                            y.offsets.begin() + static_cast<long long>(at + fc.dim));
      x.push_back(jE(SplitLatticeFunction(AmbientFrame(fc.dim, inst.d), std::move(part)), fc.f));
      at += fc.dim;
    }
    long long N = inst.d;
    for (const Rat& v : y.offsets) N = std::lcm(N, v.denominator());

    const SelfDualLatticeFunction descended = unitaryDescend(x, spec, H);
    const ExtensionCandidates ext = uniqueExtension(x, spec, &H, N);
    ++res.checked;
    if (descended.fn != y) {
      res.pass = false;
      res.counterexample = std::string(inst.name) + ": descent did not rebuild the source";
      break;
    }
    if (inst.splitPlane) {
      const bool found = std::count(ext.candidates.begin(), ext.candidates.end(), y) == 1;
      bool allSelfDual = true;
      for (const SplitLatticeFunction& c : ext.candidates) allSelfDual &= isSelfDual(c, H);
      if (ext.candidates.size() < 2 || !found || !allSelfDual) {
        res.pass = false;
        res.counterexample =
            std::string(inst.name) + ": expected a non-trivial self-dual family, got " +
            std::to_string(ext.candidates.size()) + " candidate(s)";
      } else {
        ++excluded;
      }
    } else {
      if (!ext.unique() || ext.candidates.front() != y) {
        res.pass = false;
        res.counterexample = std::string(inst.name) + ": expected the single point, got " +
                             std::to_string(ext.candidates.size()) + " candidate(s)";
      } else {
        ++nonExcluded;
      }
    }
  }
  if (res.pass && (nonExcluded < 20 || excluded < 1)) {
    res.pass = false;
    res.counterexample = "instance list too small: " + std::to_string(nonExcluded) +
                         " pinned + " + std::to_string(excluded) + " excluded";
  }
  return res;
}

}  // namespace btlat
