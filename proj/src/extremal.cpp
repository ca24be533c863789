#include "slicekit/extremal.hpp"

#include <bit>
#include <string>

#include "slicekit/harmonic.hpp"
#include "slicekit/influence.hpp"

namespace slicekit {

namespace {

int eta_lower_bound(int d) { return 2 * ((d + 2) / 2); }  // 2*ceil((d+1)/2)

// Forced continuation of a 0/1 prefix under vanishing (d+1)-order
// differences: s_t = sum_{j=0}^{d} (-1)^{d-j} C(d+1,j) s_{t-d-1+j}.
// Returns the length of the longest all-0/1 run (capped at limit).
int forced_extension_length(std::uint32_t prefix, int d, int limit,
                            std::vector<int>* out_seq) {
    std::vector<std::int64_t> seq(limit);
    for (int t = 0; t <= d; ++t) seq[t] = (prefix >> (d - t)) & 1;  // lex: s_0 first
    int len = d + 1;
    while (len < limit) {
        std::int64_t next = 0;
        for (int j = 0; j <= d; ++j) {
            std::int64_t term =
                static_cast<std::int64_t>(binom64(d + 1, j)) * seq[len - d - 1 + j];
            next += ((d - j) % 2 == 0) ? term : -term;
        }
        if (next != 0 && next != 1) break;
        seq[len++] = next;
    }
    if (out_seq) {
        out_seq->clear();
        for (int t = 0; t < len; ++t)
            out_seq->push_back(static_cast<int>(seq[t]));
    }
    return len;
}

}  // namespace

UnivariatePolynomial pd_polynomial(int d) {
    if (d < 1) throw UsageError("pd_polynomial needs d >= 1");
    UnivariatePolynomial p;
    for (int e = 0; e <= d; ++e) {
        UnivariatePolynomial b = UnivariatePolynomial::binomial_basis(e);
        b *= Rat(e % 2 == 0 ? 1 : -1);
        p += b;
    }
    for (int s = 0; s < eta_lower_bound(d); ++s) {
        Rat v = p.eval(Rat(s));
        if (v != 0 && v != 1)
            throw ClaimError("P_d left {0,1} inside its guaranteed prefix");
    }
    return p;
}

bool realizable_by_degree(const std::vector<int>& bits, int d) {
    if (d < 0) throw UsageError("degree must be nonnegative");
    for (int b : bits)
        if (b != 0 && b != 1) throw UsageError("sequence entries must be 0/1");
    const int m = static_cast<int>(bits.size());
    if (m <= d + 1) return true;
    std::vector<std::int64_t> diff(bits.begin(), bits.end());
    for (int r = 0; r < d + 1; ++r)
        for (std::size_t i = 0; i + 1 < diff.size() - r; ++i)
            diff[i] = diff[i + 1] - diff[i];
    for (int i = 0; i + d + 1 < m; ++i)
        if (diff[i] != 0) return false;
    return true;
}

EtaSearchResult eta_search(int d) {
    if (d < 1 || d > 14)
        throw UsageError("eta search supports 1 <= d <= 14");
    const int limit = 2 * d + 2;  // the 2d upper bound leaves headroom of one
    EtaSearchResult res;
    res.d = d;
    res.lower = eta_lower_bound(d);
    res.upper = 2 * d;
    res.eta = 0;

    const std::uint32_t prefixes = std::uint32_t(1) << (d + 1);
    for (std::uint32_t p = 0; p < prefixes; ++p) {
        if (p == 0 || p == prefixes - 1) continue;  // constant polynomial
        std::vector<int> seq;
        int len = forced_extension_length(p, d, limit, &seq);
        if (len > res.eta) {
            res.eta = len;
            res.witness = seq;
        }
    }
    if (res.eta >= limit)
        throw ClaimError("eta search exceeded the 2d upper bound");
    res.witness.resize(res.eta);
    return res;
}

EtaBounds eta_bounds_check(int d) {
    EtaSearchResult res = eta_search(d);
    if (!(res.lower <= res.eta && res.eta <= res.upper))
        throw ClaimError("eta(" + std::to_string(d) + ") = " +
                         std::to_string(res.eta) +
                         " violates the proven bounds [" +
                         std::to_string(res.lower) + "," +
                         std::to_string(res.upper) + "]");
    UnivariatePolynomial pd = pd_polynomial(d);
    std::vector<int> pd_values;
    for (int s = 0; s < res.lower; ++s)
        pd_values.push_back(pd.eval(Rat(s)) == 1 ? 1 : 0);
    bool nonconstant = false;
    for (int b : pd_values) nonconstant |= (b != pd_values[0]);
    if (!nonconstant || !realizable_by_degree(pd_values, d))
        throw ClaimError("P_d value sequence fails the realizability test");
    return EtaBounds{res.lower, res.upper, res.eta};
}

SliceFunction fd_construction(int d, int n, int k) {
    EtaSearchResult eta = eta_search(d);
    if (k >= eta.eta)
        throw UsageError("fd_construction needs k < eta(d) = " +
                         std::to_string(eta.eta) + ", got k = " +
                         std::to_string(k));
    SliceDomain dom(n, k);
    if (dom.size() > 4096)
        throw CapacityError("fd_construction is gated at C(n,k) <= 4096");
    const int half = n / 2;
    const int sum_max = std::min(k, half);

    // Value sequence on the achievable sums: the explicit P_d where its
    // guaranteed prefix covers them, the eta witness otherwise.
    std::vector<int> w(sum_max + 1);
    if (sum_max < eta_lower_bound(d)) {
        UnivariatePolynomial pd = pd_polynomial(d);
        for (int s = 0; s <= sum_max; ++s) w[s] = pd.eval(Rat(s)) == 1 ? 1 : 0;
    } else {
        for (int s = 0; s <= sum_max; ++s) w[s] = eta.witness[s];
    }

    const std::uint64_t half_mask =
        half == 0 ? 0 : (~std::uint64_t(0)) >> (64 - half);
    std::vector<Rat> vals(dom.size());
    std::uint64_t mask = dom.first_mask();
    for (std::uint64_t r = 0; r < dom.size(); ++r) {
        vals[r] = w[std::popcount(mask & half_mask)];
        mask = SliceDomain::next_mask(mask);
    }
    SliceFunction f(dom, std::move(vals));

    if (degree(f) > d)
        throw ClaimError("f_d has degree above d — falsifies the construction");
    const int sum_min = std::max(0, k - (n - half));
    bool nonconstant = false;
    for (int s = sum_min; s <= sum_max; ++s) nonconstant |= (w[s] != w[sum_min]);
    if (nonconstant) {
        ZeroInfluencePartition part = zero_influence_partition(f);
        bool classes_ok = part.classes.size() == 2 &&
                          part.classes[0] == SliceDomain::support(half_mask);
        if (!classes_ok || minimal_junta(f).size != half)
            throw ClaimError("f_d zero-influence structure is not the two "
                             "halves — falsifies the construction");
    }
    return f;
}

GammaResult gamma_bounds(int d) {
    if (d < 1) throw UsageError("gamma_bounds needs d >= 1");
    GammaResult res;
    res.d = d;
    res.ns_upper = static_cast<std::uint64_t>(d) << (d - 1);
    if (d > 2) return res;  // brute force is reserved for d <= 2

    res.bruteforced = true;
    const int m_cap = static_cast<int>(res.ns_upper);  // 1 or 4
    for (int m = m_cap; m >= 1 && res.max_relevant == 0; --m) {
        const std::uint64_t tables = std::uint64_t(1) << (std::uint64_t(1) << m);
        const int size = 1 << m;
        std::vector<std::int32_t> mob(size);
        for (std::uint64_t t = 0; t < tables; ++t) {
            for (int i = 0; i < size; ++i) mob[i] = (t >> i) & 1;
            for (int b = 0; b < m; ++b)
                for (int i = 0; i < size; ++i)
                    if (i & (1 << b)) mob[i] -= mob[i ^ (1 << b)];
            int deg = 0, rel = 0;
            for (int i = 0; i < size; ++i)
                if (mob[i] != 0) {
                    deg = std::max(deg, std::popcount(unsigned(i)));
                    rel |= i;
                }
            if (deg <= d && std::popcount(unsigned(rel)) == m) {
                res.max_relevant = m;
                res.witness_m = m;
                res.witness_table.assign(size, 0);
                for (int i = 0; i < size; ++i) res.witness_table[i] = (t >> i) & 1;
                break;
            }
        }
    }
    res.cap_attained =
        static_cast<std::uint64_t>(res.max_relevant) == res.ns_upper;
    return res;
}

}  // namespace slicekit
