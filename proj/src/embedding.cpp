#include "btlat/embedding.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "btlat/descent.hpp"
#include "btlat/errors.hpp"

namespace btlat {

EmbeddingSpec::EmbeddingSpec(long long f_, CyclicMatrixClass l) : f(f_), lambda(std::move(l)) {
  if (f < 1) throw InvalidDegree("degree must be >= 1");
  if (lambda.rows() != static_cast<std::size_t>(f))
    throw InvalidInput("multiplicity matrix must have one row per Frobenius power");
  if (!lambda.isMintMember())
    throw InvalidInput("multiplicity matrix must have a rotation with all columns positive");
}

LocalType::LocalType(std::vector<Rat> mu) : mu_(std::move(mu)) {
  if (mu_.empty()) throw InvalidInput("local type needs at least one coordinate");
  Rat sum(0);
  for (const Rat& v : mu_) {
    if (v < Rat(0)) throw InvalidInput("local type coordinates must be nonnegative");
    sum += v;
  }
  if (sum != Rat(1)) throw InvalidInput("local type coordinates must sum to 1");
  mu_ = leastRotation(mu_);
}

CyclicVectorClass LocalType::scaledBy(long long s) const {
  if (s < 1) throw InvalidInput("scale must be >= 1");
  std::vector<long long> out(mu_.size());
  for (std::size_t i = 0; i < mu_.size(); ++i) {
    const Rat v = Rat(s) * mu_[i];
    if (v.denominator() != 1) throw NotIntegral("scaled local type is not integral");
    out[i] = v.numerator();
  }
  return CyclicVectorClass(std::move(out));
}

OrientedChamberFrame orientedChamberOf(const SplitLatticeFunction& point) {
  const std::size_t m = point.frame.m;
  const long long d = point.frame.d;
  std::vector<std::pair<Rat, std::size_t>> order(m);
  std::vector<long long> base(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Rat scaled = Rat(d) * point.offsets[i];
    order[i] = {ratMod(scaled, Rat(1)), i};
    base[i] = -ratFloor(scaled);
  }
  std::sort(order.begin(), order.end());

  OrientedChamberFrame out;
  std::vector<long long> e = base;
  for (std::size_t j = 0; j < m; ++j) {
    out.vertices.emplace_back(point.frame, e);
    e[order[j].second] += 1;
  }
  return out;
}

SplitLatticeFunction pearlBarycenterOffsets(const EmbeddingSpec& spec) {
  const std::vector<std::vector<long long>> mint = spec.lambda.mintRepresentative();
  const long long f = spec.f;
  const long long r = static_cast<long long>(spec.r());
  std::vector<Rat> a;
  a.reserve(spec.m());
  for (long long j = 1; j <= r; ++j)
    for (long long k = 0; k < f; ++k)
      for (long long rep = 0; rep < mint[static_cast<std::size_t>(k)][static_cast<std::size_t>(j - 1)]; ++rep)
        a.push_back(Rat(j, r * f) + Rat(k, f));
  const std::size_t m = a.size();
  return SplitLatticeFunction(AmbientFrame(m, f), std::move(a));
}

LocalType localTypeOf(const SplitLatticeFunction& point) {
  const std::size_t m = point.frame.m;
  std::vector<Rat> t(m);
  for (std::size_t i = 0; i < m; ++i)
    t[i] = ratMod(Rat(point.frame.d) * point.offsets[i], Rat(1));
  std::sort(t.begin(), t.end());
  std::vector<Rat> mu(m);
  mu[0] = Rat(1) - t[m - 1] + t[0];
  for (std::size_t j = 1; j < m; ++j) mu[j] = t[j] - t[j - 1];
  return LocalType(std::move(mu));
}

CyclicMatrixClass embeddingTypeFromLocalType(const LocalType& mu, long long f, long long r) {
  if (f < 1 || r < 1) throw InvalidInput("shape must be positive");
  const MopRowClass comp = complement(MopRowClass(mu.scaledBy(f * r)));
  const std::vector<CyclicMatrixClass> found =
      unflatten(comp, static_cast<std::size_t>(f), static_cast<std::size_t>(r));
  return found.front();
}

LocalType localTypeFromEmbeddingType(const CyclicMatrixClass& lambda, long long f,
                                     long long r) {
  if (f < 1 || r < 1) throw InvalidInput("shape must be positive");
  if (lambda.rows() != static_cast<std::size_t>(f) ||
      lambda.cols() != static_cast<std::size_t>(r))
    throw InvalidInput("matrix shape does not match the declared degrees");
  const MopRowClass comp = complement(rowClass(lambda));
  std::vector<Rat> mu(comp.length());
  const std::vector<long long>& c = comp.inner().entries();
  for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = Rat(c[i], f * r);
  return LocalType(std::move(mu));
}

bool verifyMainTheorem(const EmbeddingSpec& spec) {
  const SplitLatticeFunction pearl = pearlBarycenterOffsets(spec);
  const SplitLatticeFunction descended = jE(pearl, spec.f);
  const LocalType mu = localTypeOf(descended);

  const long long r = static_cast<long long>(spec.r());
  const CyclicMatrixClass lambdaFromMu = embeddingTypeFromLocalType(mu, spec.f, r);
  const LocalType muFromLambda = localTypeFromEmbeddingType(spec.lambda, spec.f, r);
  return lambdaFromMu == spec.lambda && muFromLambda == mu;
}

}  // namespace btlat
