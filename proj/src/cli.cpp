#include "btlat/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>

#include "CLI11.hpp"

#include "btlat/descent.hpp"
#include "btlat/embedding.hpp"
#include "btlat/errors.hpp"
#include "btlat/filtration.hpp"
#include "btlat/hermitian.hpp"
#include "btlat/json_io.hpp"
#include "btlat/verify.hpp"

namespace btlat {
namespace {

Json readInput(const std::string& path) {
  try {
    if (path.empty() || path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open input file: " + path);
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j[key];
}

long long intField(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer())
    throw InvalidInput(std::string("field \"") + key + "\" must be an integer");
  return v.get<long long>();
}

int cmdEmbeddingType(const std::string& inputPath, std::ostream& out) {
  const Json j = readInput(inputPath);
  const long long f = intField(j, "f");
  const long long r = intField(j, "r");
  const bool hasMu = j.is_object() && j.contains("mu");
  const bool hasLambda = j.is_object() && j.contains("lambda");
  if (hasMu == hasLambda) throw InvalidInput("provide exactly one of \"mu\" or \"lambda\"");
  if (hasMu) {
    const LocalType mu = localTypeFromJson(j["mu"]);
    out << canonicalText(toJson(embeddingTypeFromLocalType(mu, f, r)));
  } else {
    const CyclicMatrixClass lambda = matrixFromJson(j["lambda"]);
    if (lambda.rows() != static_cast<std::size_t>(f) ||
        lambda.cols() != static_cast<std::size_t>(r))
      throw InvalidInput("lambda must be an f x r matrix");
    out << canonicalText(toJson(localTypeFromEmbeddingType(lambda, f, r)));
  }
  return 0;
}

int cmdVerify(const std::string& suite, const VerifyBounds& bounds, std::ostream& out,
              std::ostream& err) {
  SuiteResult r;
  if (suite == "main-theorem")
    r = verifyMainTheoremSweep(bounds);
  else if (suite == "duality")
    r = verifyDuality(bounds);
  else if (suite == "clf")
    r = verifyClf(bounds);
  else if (suite == "recovery")
    r = verifyRecovery(bounds);
  else if (suite == "uniqueness")
    r = verifyUniqueness(bounds);
  else
    throw InvalidInput("unknown suite: " + suite);
  out << canonicalText(toJson(r));
  err << r.suite << ": " << (r.pass ? "pass" : "FAIL") << ", " << r.checked << " checks, "
      << r.seconds << "s\n";
  return r.pass ? 0 : 1;
}

int cmdCompute(const std::string& op, const std::string& inputPath, std::ostream& out) {
  const Json j = readInput(inputPath);
  const auto fn = [&j] { return splitFunctionFromJson(field(j, "fn")); };
  if (op == "dual-norm")
    out << canonicalText(toJson(dualNorm(fn(), frameFromJson(field(j, "frame")))));
  else if (op == "bary")
    out << canonicalText(toJson(bary(fn(), frameFromJson(field(j, "frame")))));
  else if (op == "je")
    out << canonicalText(toJson(jE(fn(), intField(j, "f"))));
  else if (op == "je-inverse")
    out << canonicalText(toJson(jEInverse(fn(), intField(j, "f"))));
  else if (op == "square-of")
    out << canonicalText(toJson(squareOf(fn())));
  else if (op == "invariant")
    out << canonicalText(toJson(invariant(fn())));
  else if (op == "local-type")
    out << canonicalText(toJson(localTypeOf(fn())));
  else
    throw InvalidInput("unknown op: " + op);
  return 0;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the lattice-function model of the building"};
  app.require_subcommand(1);

  std::string embInput;
  CLI::App* emb = app.add_subcommand(
      "embedding-type", "Convert a local type to its embedding-type matrix or back");
  emb->add_option("--input", embInput, "JSON input file, - for stdin");

  std::string suite;
  VerifyBounds bounds;
  CLI::App* ver = app.add_subcommand("verify", "Run a verification sweep");
  ver->add_option("--suite", suite,
                  "one of main-theorem, duality, clf, uniqueness, recovery")
      ->required();
  ver->add_option("--f", bounds.f, "cap on the degree f")->check(CLI::NonNegativeNumber);
  ver->add_option("--r", bounds.r, "cap on the rank r")->check(CLI::NonNegativeNumber);
  ver->add_option("--m", bounds.m, "cap on the dimension m")->check(CLI::NonNegativeNumber);
  ver->add_option("--d", bounds.d, "cap on the ambient index d")->check(CLI::NonNegativeNumber);
  ver->add_option("--denominator", bounds.denominator, "cap on offset denominators")
      ->check(CLI::NonNegativeNumber);

  std::string op;
  std::string compInput;
  CLI::App* comp = app.add_subcommand("compute", "Apply one operation to a JSON input");
  comp->add_option("--op", op,
                   "one of dual-norm, bary, je, je-inverse, square-of, invariant, local-type")
      ->required();
  comp->add_option("--input", compInput, "JSON input file, - for stdin");

  if (const char* seedText = std::getenv("BTLAT_SEED"))
    bounds.seed = std::strtoull(seedText, nullptr, 10);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (emb->parsed()) return cmdEmbeddingType(embInput, out);
    if (ver->parsed()) return cmdVerify(suite, bounds, out, err);
    if (comp->parsed()) return cmdCompute(op, compInput, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace btlat
