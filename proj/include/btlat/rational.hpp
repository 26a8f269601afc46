#pragma once

#include <boost/rational.hpp>
#include <string>
#include <vector>

#include "btlat/errors.hpp"

namespace btlat {

/// Exact rational arithmetic. All quantities in this library are small
/// (denominators bounded by lcm of ambient indices and grid sizes), so a
/// 64-bit rational never comes near overflow.
using Rat = boost::rational<long long>;

/// Smallest integer >= x.
long long ratCeil(const Rat& x);

/// Largest integer <= x.
long long ratFloor(const Rat& x);

/// x - floor(x), always in [0, 1).
Rat ratMod1(const Rat& x);

/// Representative of x modulo `period` in [0, period). Requires period > 0.
Rat ratMod(const Rat& x, const Rat& period);

/// Parses "p", "-p", "p/q" or "-p/q". Throws InvalidInput on malformed text.
Rat parseRat(const std::string& s);

/// Lowest-terms text form: integers as "p", everything else as "p/q".
std::string ratStr(const Rat& x);

/// lcm of the denominators of xs (1 for an empty list).
long long lcmDenominators(const std::vector<Rat>& xs);

long long lcmLL(long long a, long long b);

}  // namespace btlat
