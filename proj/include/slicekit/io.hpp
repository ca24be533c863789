#pragma once

#include <string>

#include "slicekit/cube.hpp"
#include "slicekit/influence.hpp"
#include "slicekit/polynomial.hpp"
#include "slicekit/slice_function.hpp"

namespace slicekit {

// File formats. Exact values are serialized as 0/1 integers or "p/q" strings,
// never floats, so files round-trip bit-exactly.
//
//   slice function: {"n": int, "k": int, "order": "colex", "values": [...]}
//   cube function:  {"m": int, "order": "binary-lsb", "values": [...]}
//   polynomial:     {"n": int, "terms": [{"vars": [1-based], "coeff": "p/q"}]}
//
// Schema violations raise UsageError naming the offending field/index.

std::string slice_function_to_json(const SliceFunction& f);
SliceFunction slice_function_from_json(const std::string& text);

std::string real_slice_function_to_json(const RealSliceFunction& f);

std::string cube_function_to_json(const CubeFunction& g);
CubeFunction cube_function_from_json(const std::string& text);

std::string polynomial_to_json(const MultilinearPolynomial& p);
MultilinearPolynomial polynomial_from_json(const std::string& text);

std::string univariate_to_json(const UnivariatePolynomial& p);

}  // namespace slicekit
