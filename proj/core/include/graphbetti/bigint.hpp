#ifndef GRAPHBETTI_BIGINT_HPP
#define GRAPHBETTI_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace gb {

// Exact signed integer used for all combinatorial values. Zigzag numbers
// and subset sums outgrow 64 bits quickly, so everything numeric in the
// public API is arbitrary precision.
using Int = boost::multiprecision::cpp_int;

}  // namespace gb

#endif
