#pragma once

#include "slicekit/cube.hpp"
#include "slicekit/influence.hpp"
#include "slicekit/univariate.hpp"

namespace slicekit {

// Extract g on {0,1}^L from an L-junta f: g(y) = f(any extension of y off the
// witness). Requires L <= k <= n-L, the condition under which every pattern
// in {0,1}^L is achievable on the slice, so g is total and well defined.
// Asserts cube_degree(g) <= degree(f) on the way out.
CubeFunction slice_to_cube(const SliceFunction& f, const JuntaCertificate& cert);

// Average of P over all permutations of the trailing coordinates
// {head+1,...,n}, computed by pooling coefficients per monomial type
// (head part, tail cardinality) instead of summing (n-head)! permutations.
MultilinearPolynomial symmetrize_trailing(const MultilinearPolynomial& p,
                                          int head);

// A symmetric multilinear polynomial in m variables equals a univariate
// polynomial of the Hamming weight, of no larger degree. Interpolates on
// weights 0..deg and then verifies the remaining weights — the verification
// is the testable content of the classical collapse.
UnivariatePolynomial minsky_papert_collapse(const MultilinearPolynomial& sym,
                                            int m);

// The constructive proof route for slice_to_cube: symmetrize the harmonic
// representation over the trailing coordinates, collapse each head-monomial
// coefficient polynomial to a univariate R of degree <= d - |head|,
// substitute k - x_1 - ... - x_L, and assemble
//     sum_head  prod_{i in head} x_i * R_head(k - x_1 - ... - x_L).
// Returns a polynomial over x_1..x_L (variable t <-> witness[t-1]); asserts
// degree <= degree(f) after expansion and agreement with slice_to_cube on
// every cube point.
MultilinearPolynomial explicit_cube_polynomial(const SliceFunction& f,
                                               const JuntaCertificate& cert);

// Embed g into the slice: f(x) = g(x_1,...,x_L). Requires L <= k <= n-L.
// Within exact capacity, asserts degree(f) <= cube degree and, when g
// depends on all coordinates, that the minimal junta size is exactly L.
SliceFunction cube_to_slice(const CubeFunction& g, int n, int k);

}  // namespace slicekit
