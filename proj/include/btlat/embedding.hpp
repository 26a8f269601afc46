#pragma once

#include <cstddef>
#include <vector>

#include "btlat/cyclic.hpp"
#include "btlat/latticefn.hpp"
#include "btlat/rational.hpp"

namespace btlat {

/// Embedding datum: unramified degree f together with a matrix class in
/// Mint(f, r, m). Rows index Frobenius powers, columns index pearl columns.
struct EmbeddingSpec {
  long long f = 1;
  CyclicMatrixClass lambda;

  EmbeddingSpec(long long f_, CyclicMatrixClass l);

  std::size_t r() const { return lambda.cols(); }
  std::size_t m() const { return static_cast<std::size_t>(lambda.total()); }
};

/// Barycentric coordinate vector of a building point: m nonnegative rationals
/// summing to 1, taken up to cyclic rotation.
class LocalType {
 public:
  explicit LocalType(std::vector<Rat> mu);

  const std::vector<Rat>& entries() const { return mu_; }
  std::size_t m() const { return mu_.size(); }

  /// s*mu as an integer cyclic class; throws NotIntegral if any entry is not.
  CyclicVectorClass scaledBy(long long s) const;

  bool operator==(const LocalType&) const = default;

 private:
  std::vector<Rat> mu_;
};

/// The m vertices of a closed chamber around a point, listed along the
/// orientation: consecutive quotients are one-dimensional and the list wraps
/// to the pi_D-shift of the first vertex.
struct OrientedChamberFrame {
  std::vector<SplitLattice> vertices;
};

/// Chamber vertices induced by the offset-residue ordering of the point.
OrientedChamberFrame orientedChamberOf(const SplitLatticeFunction& point);

/// Offsets of the barycenter of the pearl embedding's hereditary order,
/// transported to the standard apartment; frame (m, d = f).
SplitLatticeFunction pearlBarycenterOffsets(const EmbeddingSpec& spec);

/// Oriented barycentric coordinates of the point in its chamber.
LocalType localTypeOf(const SplitLatticeFunction& point);

/// Complement of <f*r*mu>, reshaped to an f x r matrix class.
CyclicMatrixClass embeddingTypeFromLocalType(const LocalType& mu, long long f, long long r);

/// mu = (1/(f*r)) * complement of <row(lambda)>.
LocalType localTypeFromEmbeddingType(const CyclicMatrixClass& lambda, long long f,
                                     long long r);

/// Computes the local type geometrically (pearl barycenter, descent to the
/// centralizer, barycentric coordinates) and combinatorially (complement
/// involution) and compares.
bool verifyMainTheorem(const EmbeddingSpec& spec);

}  // namespace btlat
