#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sympow {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient C(n, k) with no overflow ceiling.
BigInt binomial(long long n, long long k);

}  // namespace sympow
