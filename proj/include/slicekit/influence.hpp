#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "slicekit/harmonic.hpp"
#include "slicekit/slice_function.hpp"

namespace slicekit {

// Noise outputs are genuinely real-valued; everything exact stays in
// SliceFunction.
struct RealSliceFunction {
    SliceDomain domain;
    std::vector<double> values;  // indexed by colex rank
};

// Inf_ij[f] = (1/4) Pr[f(x) != f(x^{(i j)})] for Boolean f; the equivalent
// (1/4) E[(f - f^{(i j)})^2] is used for real-valued f. Exact rational.
Rat influence(const SliceFunction& f, int i, int j);

struct InfluenceProfile {
    SliceDomain domain;
    std::vector<std::vector<Rat>> pairwise;  // n x n symmetric, zero diagonal
    Rat total;                               // (1/n) sum_{i<j} Inf_ij
};
InfluenceProfile influence_profile(const SliceFunction& f);

Rat total_influence(const SliceFunction& f);

// Right-hand side of the level formula as printed:
// sum_d [d(n+1-d)/n] ||f^{=d}||_2^2. Kept separate from total_influence on
// purpose; the census measures the ratio of the two instead of assuming one.
Rat level_influence_value(const SliceFunction& f);

// Coordinates partitioned by the relation Inf_ij = 0 (exact zero tests, no
// thresholds). Transitivity of the relation is a lemma, so it is asserted,
// not assumed: a violation aborts.
struct ZeroInfluencePartition {
    SliceDomain domain;
    std::vector<std::vector<int>> classes;  // sorted blocks of 1-based coords
};
ZeroInfluencePartition zero_influence_partition(const SliceFunction& f);

// Witness = complement of a maximum-size zero-influence class (lex-smallest
// witness on ties). The table maps achievable witness patterns (binary-lsb
// over the sorted witness) to values; unachievable patterns are simply
// absent — unconstrained, never invented.
struct JuntaCertificate {
    int size = 0;
    std::vector<int> witness;
    std::map<std::uint64_t, Rat> table;
};
JuntaCertificate minimal_junta(const SliceFunction& f);

// T_rho f = sum_d rho^{d(1-(d-1)/n)} f^{=d}; exact levels, float scalars.
RealSliceFunction noise(const SliceFunction& f, double rho);

struct MonteCarloEstimate {
    double estimate = 0;
    double stderror = 0;
    std::uint64_t samples = 0;
};
// (T_rho f)(x) via its random-walk semantics: apply N ~ Po((n-1)/2 ln(1/rho))
// uniformly random transpositions to x. Reproducible given (seed, samples).
MonteCarloEstimate noise_monte_carlo(const SliceFunction& f, double rho,
                                     std::uint64_t point_rank,
                                     std::uint64_t samples, std::uint64_t seed);

// ||T_rho f||_2 / ||f||_{4/3}; 0 for f == 0.
double hypercontractivity_ratio(const SliceFunction& f, double rho);

}  // namespace slicekit
