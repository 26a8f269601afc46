#include "btlat/cyclic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace btlat {

CyclicVectorClass::CyclicVectorClass(std::vector<long long> entries) {
  if (entries.empty()) throw InvalidInput("cyclic vector must be nonempty");
  for (long long e : entries)
    if (e < 0) throw InvalidInput("cyclic vector entries must be nonnegative");
  entries_ = leastRotation(entries);
  total_ = std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

CyclicVectorClass canonicalize(const std::vector<long long>& v) {
  return CyclicVectorClass(v);
}

MopRowClass::MopRowClass(CyclicVectorClass inner) : inner_(std::move(inner)) {
  if (inner_.total() < 1) throw NoNonzeroEntry("MopRow requires total >= 1");
}

MopRowClass::MopRowClass(std::vector<long long> entries)
    : MopRowClass(CyclicVectorClass(std::move(entries))) {}

PairsForm::PairsForm(std::vector<PairEntry> pairs) {
  if (pairs.empty()) throw InvalidInput("pairs form must be nonempty");
  for (const PairEntry& p : pairs)
    if (p.value <= 0 || p.gap <= 0)
      throw InvalidInput("pairs form needs positive values and gaps");
  pairs_ = leastRotation(pairs);
}

long long PairsForm::valueTotal() const {
  long long t = 0;
  for (const PairEntry& p : pairs_) t += p.value;
  return t;
}

long long PairsForm::gapTotal() const {
  long long s = 0;
  for (const PairEntry& p : pairs_) s += p.gap;
  return s;
}

PairsForm toPairs(const MopRowClass& w) {
  const std::vector<long long>& v = w.inner().entries();
  const std::size_t s = v.size();
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < s; ++i)
    if (v[i] != 0) nz.push_back(i);
  // total >= 1 is a class invariant, so nz is nonempty
  std::vector<PairEntry> pairs;
  pairs.reserve(nz.size());
  for (std::size_t k = 0; k < nz.size(); ++k) {
    const std::size_t cur = nz[k];
    const std::size_t next = nz[(k + 1) % nz.size()];
    const long long gap =
        k + 1 < nz.size() ? static_cast<long long>(next - cur)
                          : static_cast<long long>(s - cur + next);
    pairs.push_back(PairEntry{v[cur], gap});
  }
  return PairsForm(std::move(pairs));
}

MopRowClass fromPairs(const PairsForm& p) {
  const long long s = p.gapTotal();
  std::vector<long long> v(static_cast<std::size_t>(s), 0);
  std::size_t pos = 0;
  for (const PairEntry& e : p.entries()) {
    v[pos] = e.value;
    pos = static_cast<std::size_t>((pos + e.gap) % s);
  }
  return MopRowClass(std::move(v));
}

MopRowClass complement(const MopRowClass& w) {
  const PairsForm pf = toPairs(w);
  const std::vector<PairEntry>& ps = pf.entries();
  std::vector<PairEntry> out;
  out.reserve(ps.size());
  for (std::size_t k = 0; k < ps.size(); ++k)
    out.push_back(PairEntry{ps[k].gap, ps[(k + 1) % ps.size()].value});
  return fromPairs(PairsForm(std::move(out)));
}

CyclicMatrixClass::CyclicMatrixClass(const std::vector<std::vector<long long>>& entries)
    : rows_(entries.size()),
      cols_(entries.empty() ? 0 : entries[0].size()),
      flat_([&] {
        if (entries.empty() || entries[0].empty())
          throw InvalidInput("matrix shape must be positive");
        std::vector<long long> flat;
        flat.reserve(entries.size() * entries[0].size());
        for (const auto& row : entries) {
          if (row.size() != entries[0].size())
            throw InvalidInput("matrix column count mismatch");
          flat.insert(flat.end(), row.begin(), row.end());
        }
        return CyclicVectorClass(std::move(flat));
      }()) {}

namespace {

std::vector<std::vector<long long>> reshape(const std::vector<long long>& flat,
                                            std::size_t rows, std::size_t cols,
                                            std::size_t offset) {
  std::vector<std::vector<long long>> out(rows, std::vector<long long>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      out[i][j] = flat[(offset + i * cols + j) % flat.size()];
  return out;
}

bool allColumnsPositive(const std::vector<std::vector<long long>>& M) {
  const std::size_t cols = M[0].size();
  for (std::size_t j = 0; j < cols; ++j) {
    bool pos = false;
    for (const auto& row : M) pos = pos || row[j] > 0;
    if (!pos) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<long long>> CyclicMatrixClass::representative() const {
  return reshape(flat_.entries(), rows_, cols_, 0);
}

bool CyclicMatrixClass::isMintMember() const {
  const std::vector<long long>& flat = flat_.entries();
  for (std::size_t off = 0; off < flat.size(); ++off)
    if (allColumnsPositive(reshape(flat, rows_, cols_, off))) return true;
  return false;
}

std::vector<std::vector<long long>> CyclicMatrixClass::mintRepresentative() const {
  const std::vector<long long>& flat = flat_.entries();
  // offset 0 is the least reading; later offsets are lexicographically
  // non-decreasing rotations, so the first valid one wins.
  std::vector<std::size_t> offsets(flat.size());
  std::iota(offsets.begin(), offsets.end(), 0);
  std::stable_sort(offsets.begin(), offsets.end(), [&](std::size_t a, std::size_t b) {
    if (a == b) return false;
    for (std::size_t i = 0; i < flat.size(); ++i) {
      const long long x = flat[(a + i) % flat.size()];
      const long long y = flat[(b + i) % flat.size()];
      if (x != y) return x < y;
    }
    return a < b;
  });
  for (std::size_t off : offsets) {
    auto M = reshape(flat, rows_, cols_, off);
    if (allColumnsPositive(M)) return M;
  }
  throw NoValidMatrix("no rotation satisfies the positive-column condition");
}

MopRowClass rowClass(const CyclicMatrixClass& M) {
  return MopRowClass(M.flattening());
}

std::vector<CyclicMatrixClass> unflatten(const MopRowClass& w, std::size_t f, std::size_t r) {
  if (w.length() != f * r) throw InvalidInput("unflatten: length must equal f*r");
  const std::vector<long long>& flat = w.inner().entries();
  std::vector<CyclicMatrixClass> out;
  for (std::size_t off = 0; off < flat.size(); ++off) {
    auto M = reshape(flat, f, r, off);
    if (!allColumnsPositive(M)) continue;
    CyclicMatrixClass cls(M);
    if (std::find(out.begin(), out.end(), cls) == out.end()) out.push_back(std::move(cls));
  }
  if (out.empty()) throw NoValidMatrix("no rotation satisfies the positive-column condition");
  return out;
}

}  // namespace btlat
