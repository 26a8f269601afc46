#include "btlat/json_io.hpp"

#include <vector>

#include "btlat/errors.hpp"
#include "btlat/rational.hpp"

namespace btlat {
namespace {

Rat ratField(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return parseRat(j.get<std::string>());
  throw InvalidInput("expected a rational as \"p/q\" or an integer");
}

std::vector<Rat> ratList(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  std::vector<Rat> out;
  out.reserve(j.size());
  for (const Json& e : j) out.push_back(ratField(e));
  return out;
}

long long intField(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw InvalidInput(std::string("missing or non-integer field \"") + key + "\"");
  return j[key].get<long long>();
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j[key];
}

}  // namespace

Json toJson(const SplitLatticeFunction& fn) {
  Json offsets = Json::array();
  for (const Rat& a : fn.offsets) offsets.push_back(ratStr(a));
  return Json{{"d", fn.frame.d}, {"offsets", offsets}};
}

Json toJson(const SplitLattice& L) {
  return Json{{"d", L.frame.d}, {"exponents", L.exponents}};
}

Json toJson(const HermitianFrame& H) {
  Json gram = Json::array();
  for (const Rat& g : H.gramVal) gram.push_back(ratStr(g));
  return Json{{"d", H.ambient.d},
              {"epsilon", H.epsilon},
              {"gram", gram},
              {"kind", H.kind == InvolutionKind::FirstKind ? "first" : "unitary"},
              {"tau", H.tau}};
}

Json toJson(const CyclicMatrixClass& M) {
  return Json{{"cols", M.cols()}, {"entries", M.representative()}, {"rows", M.rows()}};
}

Json toJson(const LocalType& mu) {
  Json entries = Json::array();
  for (const Rat& v : mu.entries()) entries.push_back(ratStr(v));
  return Json{{"mu", entries}};
}

Json toJson(const SquareFiltration& sq) {
  Json diff = Json::array();
  Json support = Json::array();
  for (std::size_t i = 0; i < sq.m(); ++i) {
    Json drow = Json::array();
    Json srow = Json::array();
    for (std::size_t j = 0; j < sq.m(); ++j) {
      drow.push_back(sq.support()[i][j] ? Json(ratStr(sq.diff()[i][j])) : Json());
      srow.push_back(static_cast<bool>(sq.support()[i][j]));
    }
    diff.push_back(drow);
    support.push_back(srow);
  }
  return Json{{"d", sq.frame().d}, {"diff", diff}, {"support", support}};
}

Json toJson(const OrderInvariant& inv) {
  return Json{{"invariant", inv.inner.entries()}};
}

Json toJson(const SuiteResult& r) {
  return Json{{"checked", r.checked},
              {"counterexample", r.counterexample},
              {"pass", r.pass},
              {"suite", r.suite}};
}

SplitLatticeFunction splitFunctionFromJson(const Json& j) {
  const long long d = intField(j, "d");
  std::vector<Rat> offsets = ratList(member(j, "offsets"), "offsets");
  const std::size_t m = offsets.size();
  return SplitLatticeFunction(AmbientFrame(m, d), std::move(offsets));
}

HermitianFrame frameFromJson(const Json& j) {
  const long long d = intField(j, "d");
  const long long eps = intField(j, "epsilon");
  if (eps != 1 && eps != -1) throw InvalidInput("epsilon must be 1 or -1");
  const Json& kindJ = member(j, "kind");
  if (!kindJ.is_string()) throw InvalidInput("kind must be \"first\" or \"unitary\"");
  const std::string kindS = kindJ.get<std::string>();
  InvolutionKind kind;
  if (kindS == "first")
    kind = InvolutionKind::FirstKind;
  else if (kindS == "unitary")
    kind = InvolutionKind::Unitary;
  else
    throw InvalidInput("kind must be \"first\" or \"unitary\"");
  const Json& tauJ = member(j, "tau");
  if (!tauJ.is_array()) throw InvalidInput("tau must be an array");
  std::vector<std::size_t> tau;
  for (const Json& e : tauJ) {
    if (!e.is_number_integer() || e.get<long long>() < 0)
      throw InvalidInput("tau entries must be nonnegative integers");
    tau.push_back(e.get<std::size_t>());
  }
  std::vector<Rat> gram = ratList(member(j, "gram"), "gram");
  const std::size_t m = tau.size();
  return HermitianFrame(AmbientFrame(m, d), static_cast<int>(eps), kind, std::move(tau),
                        std::move(gram));
}

CyclicMatrixClass matrixFromJson(const Json& j) {
  const Json& entries = j.is_array() ? j : member(j, "entries");
  if (!entries.is_array()) throw InvalidInput("matrix entries must be an array of rows");
  std::vector<std::vector<long long>> rows;
  for (const Json& rowJ : entries) {
    if (!rowJ.is_array()) throw InvalidInput("matrix rows must be arrays");
    std::vector<long long> row;
    for (const Json& e : rowJ) {
      if (!e.is_number_integer()) throw InvalidInput("matrix entries must be integers");
      row.push_back(e.get<long long>());
    }
    rows.push_back(std::move(row));
  }
  return CyclicMatrixClass(rows);
}

LocalType localTypeFromJson(const Json& j) {
  const Json& entries = j.is_array() ? j : member(j, "mu");
  return LocalType(ratList(entries, "mu"));
}

std::string canonicalText(const Json& j) { return j.dump() + "\n"; }

}  // namespace btlat
