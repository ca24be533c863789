#pragma once

#include <cstdint>
#include <vector>

#include "slicekit/slice_function.hpp"
#include "slicekit/univariate.hpp"

namespace slicekit {

// P_d(s) = sum_{e=0}^{d} (-1)^e C(s,e); takes 0/1 values on
// s = 0 .. 2*ceil((d+1)/2) - 1 (asserted), witnessing the eta lower bound.
UnivariatePolynomial pd_polynomial(int d);

// A 0/1 sequence is realizable by a degree <= d polynomial iff it is shorter
// than d+2 or all its (d+1)-order finite differences vanish.
bool realizable_by_degree(const std::vector<int>& bits, int d);

// eta(d): the longest 0/1 value prefix of any nonconstant degree <= d
// univariate polynomial, found by exhausting sequence space. Realizable
// sequences of length >= d+2 are exactly the forced extensions of their
// (d+1)-prefixes, so exhausting the 2^(d+1) prefixes exhausts all of them;
// the certificate that eta(d)+1 fails is this exhaustion.
struct EtaSearchResult {
    int d = 0;
    int eta = 0;
    std::vector<int> witness;  // lexicographically smallest, length eta
    int lower = 0;             // 2*ceil((d+1)/2)
    int upper = 0;             // 2d
};
EtaSearchResult eta_search(int d);  // 1 <= d <= 14

struct EtaBounds {
    int lower = 0, upper = 0, eta = 0;
};
// Asserts lower <= eta(d) <= upper and that the P_d value sequence is a
// realizable nonconstant witness of the lower bound.
EtaBounds eta_bounds_check(int d);

// f_d(x) = P(x_1 + ... + x_{floor(n/2)}) on C(n,k) for a degree-d polynomial
// P that is 0/1 on the achievable sums; Boolean, degree <= d, and not a
// junta on fewer than floor(n/2) coordinates (all asserted). Requires
// k < eta(d). Uses the explicit P_d when its 0/1 prefix covers the
// achievable sums and the eta search witness otherwise.
SliceFunction fd_construction(int d, int n, int k);

struct GammaResult {
    int d = 0;
    std::uint64_t ns_upper = 0;  // d * 2^(d-1)
    bool bruteforced = false;    // exhaustive certification ran (d <= 2)
    int max_relevant = 0;        // gamma(d) when bruteforced
    int witness_m = 0;
    std::vector<int> witness_table;  // truth table bits of a witness
    bool cap_attained = false;       // max_relevant == ns_upper
};
// gamma(d): most coordinates a Boolean degree-d cube function can depend on.
// ns_upper bounds it; for d <= 2 an exhaustive truth-table sweep certifies
// the exact value.
GammaResult gamma_bounds(int d);

}  // namespace slicekit
