#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "btlat/embedding.hpp"
#include "btlat/hermitian.hpp"
#include "btlat/latticefn.hpp"
#include "btlat/rational.hpp"

namespace btlat {

/// Endomorphism filtration of a split lattice function in line coordinates.
/// diff[i][j] = alpha_i - alpha_j; line (i,j) sits in the filtration at level
/// t with exponent ceil(d*(t - diff[i][j])). support[i][j] marks lines kept
/// after restriction; the full square has every line set.
class SquareFiltration {
 public:
  SquareFiltration(AmbientFrame frame, std::vector<std::vector<Rat>> diff,
                   std::vector<std::vector<bool>> support);

  const AmbientFrame& frame() const { return frame_; }
  std::size_t m() const { return frame_.m; }
  const std::vector<std::vector<Rat>>& diff() const { return diff_; }
  const std::vector<std::vector<bool>>& support() const { return support_; }

  /// Smallest e with pi_D^e * (line i<-j) inside the level-t piece.
  long long entryExponent(std::size_t i, std::size_t j, const Rat& t) const;

  bool operator==(const SquareFiltration&) const = default;

 private:
  AmbientFrame frame_;
  std::vector<std::vector<Rat>> diff_;
  std::vector<std::vector<bool>> support_;
};

/// Full endomorphism filtration of fn.
SquareFiltration squareOf(const SplitLatticeFunction& fn);

/// Intersection of supports; differences must agree on the common support.
SquareFiltration intersectBlocks(const SquareFiltration& a, const SquareFiltration& b);

/// True iff the sigma-action fixes line (i,j) pointwise, which removes it
/// from the skew part. Happens only for first-kind symmetric forms on a
/// field (epsilon = +1, d = 1) at j = tau(i) with tau(i) != i.
bool isSigmaFixedPair(const HermitianFrame& H, std::size_t i, std::size_t j);

/// Skew filtration in line coordinates: levels of the surviving lines.
struct SkewFiltrationData {
  AmbientFrame frame;
  std::map<std::pair<std::size_t, std::size_t>, Rat> known;
};

/// Lines (i,j), i != j, of the skew part of the self-dual function, with
/// their offset differences.
SkewFiltrationData skewData(const SplitLatticeFunction& fn, const HermitianFrame& H);

/// Rebuilds the full difference matrix from partial line data by propagating
/// potentials along the known-pair graph. Returns nullopt when the graph
/// does not connect all indices; throws InconsistentData when the data
/// violates antisymmetry or a cycle sum is nonzero.
std::optional<SquareFiltration> recoverDifferences(const SkewFiltrationData& data);

/// True iff y (over the fine frame) and x (over the coarse frame, index
/// divided by f) induce compatible filtrations line by line:
/// ceil(entryExponent_y / f) == entryExponent_x at every level. With H the
/// comparison runs over skew lines of y only.
bool clfHoldsDegree(const SplitLatticeFunction& x, const SplitLatticeFunction& y,
                    long long f, const HermitianFrame* H = nullptr);

/// clfHoldsDegree with the degree taken from an embedding datum.
bool clfHolds(const SplitLatticeFunction& x, const SplitLatticeFunction& y,
              const EmbeddingSpec& spec, const HermitianFrame* H = nullptr);

}  // namespace btlat
