#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qlab {

// Coefficients of q-series grow superpolynomially; fixed-width integers would
// silently wrap at modest truncation orders.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace qlab
