#pragma once

#include <cstddef>
#include <vector>

#include "btlat/errors.hpp"

namespace btlat {

/// Start index of the lexicographically least rotation of v.
/// Booth's least-rotation algorithm, O(n); T needs == and <.
template <class T>
std::size_t leastRotationIndex(const std::vector<T>& v) {
  if (v.empty()) throw InvalidInput("empty vector has no rotations");
  const std::size_t n = v.size();
  auto at = [&](std::size_t i) -> const T& { return v[i % n]; };
  std::vector<std::ptrdiff_t> fail(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const T& sj = at(j);
    std::ptrdiff_t i = fail[j - k - 1];
    while (i != -1 && !(sj == at(k + i + 1))) {
      if (sj < at(k + i + 1)) k = j - i - 1;
      i = fail[i];
    }
    if (!(sj == at(k + i + 1))) {
      if (sj < at(k)) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return k % n;
}

template <class T>
std::vector<T> leastRotation(const std::vector<T>& v) {
  const std::size_t k = leastRotationIndex(v);
  std::vector<T> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v[(k + i) % v.size()]);
  return out;
}

/// A nonnegative integer vector up to cyclic rotation. The stored
/// representative is always the lexicographically least rotation, so equality
/// and hashing are plain componentwise comparisons.
class CyclicVectorClass {
 public:
  explicit CyclicVectorClass(std::vector<long long> entries);

  const std::vector<long long>& entries() const { return entries_; }
  std::size_t length() const { return entries_.size(); }
  long long total() const { return total_; }

  bool operator==(const CyclicVectorClass&) const = default;
  bool operator<(const CyclicVectorClass& o) const { return entries_ < o.entries_; }

 private:
  std::vector<long long> entries_;
  long long total_ = 0;
};

CyclicVectorClass canonicalize(const std::vector<long long>& v);

/// Member of MopRow(s, t): length s, nonnegative entries, total t >= 1.
class MopRowClass {
 public:
  explicit MopRowClass(CyclicVectorClass inner);
  explicit MopRowClass(std::vector<long long> entries);

  const CyclicVectorClass& inner() const { return inner_; }
  std::size_t length() const { return inner_.length(); }
  long long total() const { return inner_.total(); }

  bool operator==(const MopRowClass&) const = default;
  bool operator<(const MopRowClass& o) const { return inner_ < o.inner_; }

 private:
  CyclicVectorClass inner_;
};

struct PairEntry {
  long long value = 0;  // a_k, positive
  long long gap = 0;    // b_k, positive
  bool operator==(const PairEntry&) const = default;
  bool operator<(const PairEntry& o) const {
    return value != o.value ? value < o.value : gap < o.gap;
  }
};

/// Cyclic list of (value, gap) pairs; sum of values = t, sum of gaps = s.
/// Stored as its least rotation so equal encodings compare equal.
class PairsForm {
 public:
  explicit PairsForm(std::vector<PairEntry> pairs);

  const std::vector<PairEntry>& entries() const { return pairs_; }
  long long valueTotal() const;  // t
  long long gapTotal() const;    // s

  bool operator==(const PairsForm&) const = default;

 private:
  std::vector<PairEntry> pairs_;
};

/// Reads a class into its pairs encoding: each nonzero entry paired with the
/// cyclic index distance to the next nonzero entry.
PairsForm toPairs(const MopRowClass& w);

/// Inverse of toPairs on classes.
MopRowClass fromPairs(const PairsForm& p);

/// The involution MopRow(s,t) -> MopRow(t,s): pairs (a0,b0),...,(ak,bk)
/// map to (b0,a1),(b1,a2),...,(bk,a0).
MopRowClass complement(const MopRowClass& w);

/// An r x s nonnegative integer matrix up to cyclic rotation of its row-major
/// reading. Stored as the reshape of the canonical reading.
class CyclicMatrixClass {
 public:
  explicit CyclicMatrixClass(const std::vector<std::vector<long long>>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  long long total() const { return flat_.total(); }
  const CyclicVectorClass& flattening() const { return flat_; }

  /// The matrix whose row-major reading is the canonical rotation.
  std::vector<std::vector<long long>> representative() const;

  /// True when some rotation's reshape has a positive entry in every column,
  /// i.e. the class meets Mint(rows, cols, total).
  bool isMintMember() const;

  /// Among rotations whose reshape has every column positive, the one with
  /// the least reading. Throws NoValidMatrix if none exists.
  std::vector<std::vector<long long>> mintRepresentative() const;

  bool operator==(const CyclicMatrixClass&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  CyclicVectorClass flat_;
};

/// Row-major flattening of M as a class in MopRow(rows*cols, total).
MopRowClass rowClass(const CyclicMatrixClass& M);

/// All f x r matrix classes M with <row(M)> = <w> and M in Mint(f,r,total),
/// up to class equality. Throws NoValidMatrix when no rotation reshapes to a
/// matrix with every column positive.
std::vector<CyclicMatrixClass> unflatten(const MopRowClass& w, std::size_t f, std::size_t r);

}  // namespace btlat
