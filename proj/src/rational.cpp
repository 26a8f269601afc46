#include "btlat/rational.hpp"

#include <cctype>
#include <numeric>

namespace btlat {

long long ratFloor(const Rat& x) {
  long long q = x.numerator() / x.denominator();
  if (x.numerator() % x.denominator() != 0 && x.numerator() < 0) --q;
  return q;
}

long long ratCeil(const Rat& x) {
  long long q = x.numerator() / x.denominator();
  if (x.numerator() % x.denominator() != 0 && x.numerator() > 0) ++q;
  return q;
}

Rat ratMod1(const Rat& x) { return x - Rat(ratFloor(x)); }

Rat ratMod(const Rat& x, const Rat& period) {
  if (period <= Rat(0)) throw InvalidInput("ratMod: period must be positive");
  Rat q = x / period;
  return x - Rat(ratFloor(q)) * period;
}

Rat parseRat(const std::string& s) {
  if (s.empty()) throw InvalidInput("empty rational literal");
  std::size_t pos = 0;
  bool neg = false;
  if (s[pos] == '-' || s[pos] == '+') {
    neg = s[pos] == '-';
    ++pos;
  }
  auto readInt = [&](const char* what) -> long long {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw InvalidInput(std::string("malformed rational literal: missing ") + what);
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      ++pos;
    }
    return v;
  };
  long long num = readInt("numerator");
  long long den = 1;
  if (pos < s.size()) {
    if (s[pos] != '/') throw InvalidInput("malformed rational literal: " + s);
    ++pos;
    den = readInt("denominator");
    if (den == 0) throw InvalidInput("zero denominator: " + s);
  }
  if (pos != s.size()) throw InvalidInput("malformed rational literal: " + s);
  return Rat(neg ? -num : num, den);
}

std::string ratStr(const Rat& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

long long lcmLL(long long a, long long b) { return std::lcm(a, b); }

long long lcmDenominators(const std::vector<Rat>& xs) {
  long long l = 1;
  for (const Rat& x : xs) l = std::lcm(l, x.denominator());
  return l;
}

}  // namespace btlat
