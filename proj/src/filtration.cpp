#include "btlat/filtration.hpp"

#include <cstddef>
#include <numeric>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "btlat/errors.hpp"

namespace btlat {

SquareFiltration::SquareFiltration(AmbientFrame frame, std::vector<std::vector<Rat>> diff,
                                   std::vector<std::vector<bool>> support)
    : frame_(frame), diff_(std::move(diff)), support_(std::move(support)) {
  const std::size_t m = frame_.m;
  if (diff_.size() != m || support_.size() != m)
    throw InvalidInput("difference matrix must be m x m");
  for (std::size_t i = 0; i < m; ++i) {
    if (diff_[i].size() != m || support_[i].size() != m)
      throw InvalidInput("difference matrix must be m x m");
    if (!support_[i][i] || diff_[i][i] != Rat(0))
      throw InvalidInput("diagonal lines must be present with difference 0");
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (support_[i][j] != support_[j][i])
        throw InvalidInput("support must be symmetric");
      if (support_[i][j] && diff_[i][j] != -diff_[j][i])
        throw InvalidInput("differences must be antisymmetric");
    }
  // Cocycle check on supported triangles: (i,j) and (j,k) force (i,k).
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (support_[i][j] && support_[j][k] && support_[i][k] &&
            diff_[i][j] + diff_[j][k] != diff_[i][k])
          throw InvalidInput("differences must satisfy the cocycle relation");
}

long long SquareFiltration::entryExponent(std::size_t i, std::size_t j, const Rat& t) const {
  if (i >= m() || j >= m()) throw InvalidInput("line index out of range");
  if (!support_[i][j]) throw InvalidInput("line not in the support");
  return ratCeil(Rat(frame_.d) * (t - diff_[i][j]));
}

SquareFiltration squareOf(const SplitLatticeFunction& fn) {
  const std::size_t m = fn.frame.m;
  std::vector<std::vector<Rat>> diff(m, std::vector<Rat>(m));
  std::vector<std::vector<bool>> support(m, std::vector<bool>(m, true));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) diff[i][j] = fn.offsets[i] - fn.offsets[j];
  return SquareFiltration(fn.frame, std::move(diff), std::move(support));
}

SquareFiltration intersectBlocks(const SquareFiltration& a, const SquareFiltration& b) {
  if (!(a.frame() == b.frame())) throw FrameMismatch("filtrations live over different frames");
  const std::size_t m = a.m();
  std::vector<std::vector<Rat>> diff(m, std::vector<Rat>(m));
  std::vector<std::vector<bool>> support(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (!(a.support()[i][j] && b.support()[i][j])) continue;
      if (a.diff()[i][j] != b.diff()[i][j])
        throw InvalidInput("blocks disagree on a common line");
      support[i][j] = true;
      diff[i][j] = a.diff()[i][j];
    }
  return SquareFiltration(a.frame(), std::move(diff), std::move(support));
}

bool isSigmaFixedPair(const HermitianFrame& H, std::size_t i, std::size_t j) {
  if (i >= H.tau.size() || j >= H.tau.size()) throw InvalidInput("line index out of range");
  if (H.kind != InvolutionKind::FirstKind || H.epsilon != 1 || H.ambient.d != 1) return false;
  return i != j && j == H.tau[i];
}

SkewFiltrationData skewData(const SplitLatticeFunction& fn, const HermitianFrame& H) {
  if (!(fn.frame == H.ambient)) throw FrameMismatch("function and form live over different frames");
  SkewFiltrationData out{fn.frame, {}};
  const std::size_t m = fn.frame.m;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j || isSigmaFixedPair(H, i, j)) continue;
      out.known[{i, j}] = fn.offsets[i] - fn.offsets[j];
    }
  return out;
}

std::optional<SquareFiltration> recoverDifferences(const SkewFiltrationData& data) {
  const std::size_t m = data.frame.m;
  for (const auto& [line, v] : data.known) {
    const auto [i, j] = line;
    if (i >= m || j >= m) throw InvalidInput("line index out of range");
    if (i == j && v != Rat(0)) throw InconsistentData("diagonal difference must be 0");
    auto rev = data.known.find({j, i});
    if (rev != data.known.end() && rev->second != -v)
      throw InconsistentData("line data violates antisymmetry");
  }

  // Potentials: fix pot[root] = 0 per component and walk the known lines.
  std::vector<std::optional<Rat>> pot(m);
  std::vector<std::vector<std::pair<std::size_t, Rat>>> adj(m);
  for (const auto& [line, v] : data.known) {
    const auto [i, j] = line;
    if (i == j) continue;
    adj[i].push_back({j, v});  // pot[i] - pot[j] = v
    adj[j].push_back({i, -v});
  }
  std::size_t seen = 0;
  for (std::size_t root = 0; root < m; ++root) {
    if (pot[root]) continue;
    if (root > 0) return std::nullopt;  // second component: underdetermined
    pot[root] = Rat(0);
    ++seen;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      const std::size_t i = q.front();
      q.pop();
      for (const auto& [j, v] : adj[i]) {
        const Rat pj = *pot[i] - v;
        if (!pot[j]) {
          pot[j] = pj;
          ++seen;
          q.push(j);
        } else if (*pot[j] != pj) {
          throw InconsistentData("line data has a nonzero cycle sum");
        }
      }
    }
  }
  if (seen != m) return std::nullopt;

  std::vector<std::vector<Rat>> diff(m, std::vector<Rat>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) diff[i][j] = *pot[i] - *pot[j];
  for (const auto& [line, v] : data.known)
    if (diff[line.first][line.second] != v)
      throw InconsistentData("line data has a nonzero cycle sum");
  return SquareFiltration(data.frame, std::move(diff),
                          std::vector<std::vector<bool>>(m, std::vector<bool>(m, true)));
}

bool clfHoldsDegree(const SplitLatticeFunction& x, const SplitLatticeFunction& y,
                    long long f, const HermitianFrame* H) {
  if (f < 1) throw InvalidDegree("degree must be >= 1");
  if (y.frame.m != x.frame.m || y.frame.d != f * x.frame.d)
    throw FrameMismatch("fine frame must refine the coarse frame by the degree");
  if (H && !(H->ambient == y.frame)) throw FrameMismatch("form must live over the fine frame");

  const std::size_t m = x.frame.m;
  const SquareFiltration sx = squareOf(x);
  const SquareFiltration sy = squareOf(y);

  long long L = 1;
  for (const Rat& a : x.offsets) L = std::lcm(L, a.denominator());
  for (const Rat& a : y.offsets) L = std::lcm(L, a.denominator());

  // Every level jump of either side lands on this grid, and both sides are
  // left continuous, so grid agreement over one coarse period is exact.
  for (long long q = 1; q <= f * L; ++q) {
    const Rat t(q, y.frame.d * L);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (H && (i == j || isSigmaFixedPair(*H, i, j))) continue;
        const long long eY = sy.entryExponent(i, j, t);
        const long long eX = sx.entryExponent(i, j, t);
        if (ratCeil(Rat(eY, f)) != eX) return false;
      }
  }
  return true;
}

bool clfHolds(const SplitLatticeFunction& x, const SplitLatticeFunction& y,
              const EmbeddingSpec& spec, const HermitianFrame* H) {
  return clfHoldsDegree(x, y, spec.f, H);
}

}  // namespace btlat
