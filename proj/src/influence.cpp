#include "slicekit/influence.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace slicekit {

namespace {

void check_pair(const SliceDomain& dom, int i, int j) {
    if (i == j) throw UsageError("influence needs two distinct coordinates");
    if (i < 1 || i > dom.n() || j < 1 || j > dom.n())
        throw UsageError("influence coordinate out of range");
}

Rat influence_from_values(const SliceFunction& f, int i, int j) {
    // (1/4) E[(f - f^{(i j)})^2]; for 0/1-valued f the summand is the
    // disagreement indicator, so this is also the probability formula.
    const SliceDomain& dom = f.domain();
    Rat s = 0;
    std::uint64_t mask = dom.first_mask();
    for (std::uint64_t r = 0; r < dom.size(); ++r) {
        std::uint64_t m2 = transpose_mask(mask, i, j);
        if (m2 != mask) {
            Rat d = f.at_rank(r) - f.at_rank(dom.rank(m2));
            s += d * d;
        }
        mask = SliceDomain::next_mask(mask);
    }
    return s / (Rat(4) * Rat(static_cast<unsigned long>(dom.size())));
}

double noise_exponent(const SliceDomain& dom, int d) {
    return d * (1.0 - static_cast<double>(d - 1) / dom.n());
}

}  // namespace

Rat influence(const SliceFunction& f, int i, int j) {
    check_pair(f.domain(), i, j);
    return influence_from_values(f, i, j);
}

InfluenceProfile influence_profile(const SliceFunction& f) {
    const int n = f.domain().n();
    InfluenceProfile prof{f.domain(),
                          std::vector<std::vector<Rat>>(
                              n, std::vector<Rat>(n, Rat(0))),
                          Rat(0)};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Rat v = influence_from_values(f, i, j);
            prof.pairwise[i - 1][j - 1] = v;
            prof.pairwise[j - 1][i - 1] = v;
            prof.total += v;
        }
    prof.total /= n;
    return prof;
}

Rat total_influence(const SliceFunction& f) {
    const int n = f.domain().n();
    Rat s = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) s += influence_from_values(f, i, j);
    return s / n;
}

Rat level_influence_value(const SliceFunction& f) {
    HarmonicDecomposition dec = decompose(f);
    const int n = f.domain().n();
    Rat s = 0;
    for (int d = 1; d < static_cast<int>(dec.level_norms2.size()); ++d)
        s += Rat(static_cast<long>(d) * (n + 1 - d), n) * dec.level_norms2[d];
    return s;
}

ZeroInfluencePartition zero_influence_partition(const SliceFunction& f) {
    const int n = f.domain().n();
    // zero[i] = set of j with Inf_{i+1,j+1} = 0, plus i itself.
    std::vector<std::uint64_t> zero(n, 0);
    for (int i = 0; i < n; ++i) zero[i] |= std::uint64_t(1) << i;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (influence_from_values(f, i, j) == 0) {
                zero[i - 1] |= std::uint64_t(1) << (j - 1);
                zero[j - 1] |= std::uint64_t(1) << (i - 1);
            }
    // The relation must be transitive (a lemma about slice functions); verify
    // rather than trust, since everything downstream leans on it.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((zero[i] >> j) & 1)
                if (zero[j] != zero[i])
                    throw ClaimError(
                        "zero-influence relation is not transitive — this "
                        "falsifies a proven lemma and indicates a bug");
    ZeroInfluencePartition part{f.domain(), {}};
    std::uint64_t seen = 0;
    for (int i = 0; i < n; ++i) {
        if ((seen >> i) & 1) continue;
        seen |= zero[i];
        part.classes.push_back(SliceDomain::support(zero[i]));
    }
    return part;
}

JuntaCertificate minimal_junta(const SliceFunction& f) {
    ZeroInfluencePartition part = zero_influence_partition(f);
    const int n = f.domain().n();
    std::size_t max_size = 0;
    for (const auto& cls : part.classes) max_size = std::max(max_size, cls.size());

    std::vector<int> witness;  // lexicographically smallest complement
    for (const auto& cls : part.classes) {
        if (cls.size() != max_size) continue;
        std::uint64_t cls_mask = SliceDomain::mask_from_support(cls, n);
        std::vector<int> cand =
            SliceDomain::support(~cls_mask & ((~std::uint64_t(0)) >> (64 - n)));
        if (witness.empty() || cand < witness) witness = cand;
    }

    JuntaCertificate cert;
    cert.size = static_cast<int>(n - max_size);
    cert.witness = witness;
    const SliceDomain& dom = f.domain();
    std::uint64_t mask = dom.first_mask();
    for (std::uint64_t r = 0; r < dom.size(); ++r) {
        std::uint64_t pattern = 0;
        for (std::size_t t = 0; t < witness.size(); ++t)
            pattern |= ((mask >> (witness[t] - 1)) & 1) << t;
        auto [it, inserted] = cert.table.emplace(pattern, f.at_rank(r));
        if (!inserted && it->second != f.at_rank(r))
            throw ClaimError("junta certificate table is ill-defined — bug");
        mask = SliceDomain::next_mask(mask);
    }
    return cert;
}

RealSliceFunction noise(const SliceFunction& f, double rho) {
    if (!(rho > 0.0 && rho <= 1.0))
        throw UsageError("noise needs rho in (0,1]");
    HarmonicDecomposition dec = decompose(f);
    const SliceDomain& dom = f.domain();
    RealSliceFunction out{dom, std::vector<double>(dom.size(), 0.0)};
    for (int d = 0; d < static_cast<int>(dec.levels.size()); ++d) {
        double scale = std::pow(rho, noise_exponent(dom, d));
        for (std::uint64_t r = 0; r < dom.size(); ++r)
            out.values[r] += scale * rat_to_double(dec.level_values[d][r]);
    }
    return out;
}

MonteCarloEstimate noise_monte_carlo(const SliceFunction& f, double rho,
                                     std::uint64_t point_rank,
                                     std::uint64_t samples, std::uint64_t seed) {
    const SliceDomain& dom = f.domain();
    if (!(rho > 0.0 && rho < 1.0))
        throw UsageError("noise_monte_carlo needs rho in (0,1)");
    if (samples < 1) throw UsageError("noise_monte_carlo needs samples >= 1");
    const std::uint64_t start = dom.unrank(point_rank);
    const double mean_transpositions =
        0.5 * (dom.n() - 1) * std::log(1.0 / rho);

    std::mt19937_64 rng(seed);
    std::poisson_distribution<long> poisson(mean_transpositions);
    std::uniform_int_distribution<int> coord(1, dom.n());
    double sum = 0, sumsq = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        long steps = poisson(rng);
        std::uint64_t mask = start;
        for (long t = 0; t < steps; ++t) {
            int i = coord(rng);
            int j = coord(rng);
            while (j == i) j = coord(rng);
            mask = transpose_mask(mask, i, j);
        }
        double v = rat_to_double(f.at_rank(dom.rank(mask)));
        sum += v;
        sumsq += v * v;
    }
    MonteCarloEstimate est;
    est.samples = samples;
    est.estimate = sum / samples;
    if (samples > 1) {
        double var = (sumsq - sum * sum / samples) / (samples - 1);
        est.stderror = std::sqrt(std::max(0.0, var) / samples);
    }
    return est;
}

double hypercontractivity_ratio(const SliceFunction& f, double rho) {
    if (!(rho > 0.0 && rho <= 1.0))
        throw UsageError("hypercontractivity ratio needs rho in (0,1]");
    if (f.is_zero()) return 0.0;
    HarmonicDecomposition dec = decompose(f);
    double t2 = 0;
    for (int d = 0; d < static_cast<int>(dec.level_norms2.size()); ++d)
        t2 += std::pow(rho, 2.0 * noise_exponent(f.domain(), d)) *
              rat_to_double(dec.level_norms2[d]);
    return std::sqrt(t2) / p_norm(f, 4.0 / 3.0);
}

}  // namespace slicekit
