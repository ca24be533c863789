#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slicekit/domain.hpp"
#include "slicekit/numeric.hpp"

namespace slicekit {

// Exhaustive or sampled sweeps over Boolean functions on a slice, checking
// every desk-verifiable claim along the way. Exhaustive mode enumerates all
// 2^C(n,k) bit tables and is gated at C(n,k) <= 22; sample mode draws seeded
// i.i.d. uniform truth tables and is gated at C(n,k) <= 2^22.
struct CensusConfig {
    int n = 0, k = 0;
    bool exhaustive = true;
    std::uint64_t sample_count = 0;
    std::uint64_t seed = 0;
    int max_degree_filter = -1;  // < 0: analyze everything
    int workers = 1;
    std::string checkpoint_dir;  // empty: no checkpoints
};

struct CensusReport {
    CensusConfig config;
    std::uint64_t domain_size = 0;
    std::uint64_t enumerated = 0;  // functions visited
    std::uint64_t analyzed = 0;    // functions past the degree filter
    // (degree, minimal junta size) -> count over analyzed functions.
    std::map<std::pair<int, int>, std::uint64_t> counts;
    std::uint64_t degree_le1_count = 0;
    bool degree1_classification_applicable = false;  // 2 <= k <= n-2
    // Every degree <= 1 function is a constant, dictator, or anti-dictator.
    bool degree1_classification_ok = true;
    // Definitional total influence <= degree on every analyzed function.
    bool influence_bound_ok = true;
    // Minimum nonzero Inf_ij per exact-degree class, and overall.
    std::map<int, Rat> min_influence_by_degree;
    std::optional<Rat> min_influence;

    // Timing and layout; excluded from determinism comparisons.
    double elapsed_seconds = 0;
    std::uint64_t shard_size = 0;
    int workers_used = 1;
};

CensusReport run_census(const CensusConfig& cfg);
std::string census_report_to_json(const CensusReport& r);
std::string census_report_to_csv(const CensusReport& r);

// Min nonzero influence among Boolean functions of degree <= d, per degree.
struct DichotomyRow {
    int degree = 0;
    std::optional<Rat> min_at_degree;     // functions of degree exactly d
    std::optional<Rat> min_up_to_degree;  // functions of degree <= d
};
struct DichotomyReport {
    int n = 0, k = 0, max_degree = 0;
    std::vector<DichotomyRow> rows;
};
DichotomyReport run_dichotomy_scan(int n, int k, int d, int workers);
std::string dichotomy_report_to_json(const DichotomyReport& r);

// Ratio of the definitional total influence to the printed level formula on
// pure-level parts of Boolean functions. The two differ by a constant factor;
// the probe measures it instead of assuming either normalization.
struct Eq1DomainSpec {
    int n = 0, k = 0;
    bool exhaustive = false;
    std::uint64_t samples = 0;
};
struct Eq1Evidence {
    int n = 0, k = 0;
    std::string function_bits;  // hex of the packed value table
    int level = 0;
    Rat total, eq1, ratio;
};
struct Eq1Report {
    bool consistent = true;
    Rat constant_c;
    std::vector<Eq1Evidence> rows;
    Rat dictator_total, dictator_eq1;  // C(4,2) dictator reference pair
};
Eq1Report eq1_constant_probe(const std::vector<Eq1DomainSpec>& domains,
                             std::uint64_t seed);
std::string eq1_report_to_json(const Eq1Report& r);

// Max hypercontractivity ratio over sampled Boolean functions at
// rho = (2k(n-k)/(n(n-1)))^e for each exponent e on the grid.
struct HyperScanRow {
    double exponent = 0, rho = 0, max_ratio = 0;
};
struct HyperScanReport {
    int n = 0, k = 0;
    double base = 0;
    std::uint64_t samples = 0, seed = 0;
    std::vector<HyperScanRow> rows;  // ascending exponent
    std::optional<double> smallest_passing_exponent;  // max ratio <= 1+1e-9
};
HyperScanReport run_hyper_scan(int n, int k, std::vector<double> exponents,
                               std::uint64_t samples, std::uint64_t seed);
std::string hyper_scan_report_to_json(const HyperScanReport& r);

// Slice-to-cube pipeline over every function of the exhaustive census whose
// minimal junta size lies in [k, n-k]: extraction, degree transfer, explicit
// polynomial agreement, and the round trip for size == k. Returns the number
// of functions checked; throws ClaimError on any violation.
std::uint64_t transfer_sweep(int n, int k, int workers);

}  // namespace slicekit
