#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace vnet {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient with C(n, k) = 0 whenever k < 0 or k > n.
BigInt binomial(long long n, long long k);

}  // namespace vnet
