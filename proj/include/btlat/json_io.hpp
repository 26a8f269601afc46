#pragma once

#include <string>

#include "json.hpp"

#include "btlat/cyclic.hpp"
#include "btlat/embedding.hpp"
#include "btlat/filtration.hpp"
#include "btlat/hermitian.hpp"
#include "btlat/latticefn.hpp"
#include "btlat/verify.hpp"

namespace btlat {

using Json = nlohmann::json;

Json toJson(const SplitLatticeFunction& fn);
Json toJson(const SplitLattice& L);
Json toJson(const HermitianFrame& H);
Json toJson(const CyclicMatrixClass& M);
Json toJson(const LocalType& mu);
Json toJson(const SquareFiltration& sq);
Json toJson(const OrderInvariant& inv);
Json toJson(const SuiteResult& r);

SplitLatticeFunction splitFunctionFromJson(const Json& j);
HermitianFrame frameFromJson(const Json& j);
CyclicMatrixClass matrixFromJson(const Json& j);
LocalType localTypeFromJson(const Json& j);

/// Compact dump with lexicographically sorted keys and a trailing newline;
/// rationals travel as "p/q" strings in lowest terms (integers as "p").
std::string canonicalText(const Json& j);

}  // namespace btlat
