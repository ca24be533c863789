#include "slicekit/domain.hpp"

#include <bit>
#include <string>

#include "slicekit/numeric.hpp"

namespace slicekit {

SliceDomain::SliceDomain(int n, int k) : n_(n), k_(k) {
    if (n < 1 || n > kMaxVars)
        throw CapacityError("slice domain needs 1 <= n <= 64, got n=" +
                            std::to_string(n));
    if (k < 0 || k > n)
        throw UsageError("slice domain needs 0 <= k <= n, got k=" +
                         std::to_string(k) + ", n=" + std::to_string(n));
    size_ = binom64(n, k);
    max_degree_ = std::min(k, n - k);
}

std::uint64_t SliceDomain::rank(std::uint64_t mask) const {
    if (std::popcount(mask) != k_ || (mask >> n_) != 0)
        throw UsageError("point does not belong to the slice (wrong weight)");
    std::uint64_t r = 0;
    int j = 0;
    std::uint64_t m = mask;
    while (m) {
        int pos = std::countr_zero(m);  // s_{j+1} = pos + 1
        ++j;
        r += binom64(pos, j);           // C(s_j - 1, j)
        m &= m - 1;
    }
    return r;
}

std::uint64_t SliceDomain::unrank(std::uint64_t r) const {
    if (r >= size_)
        throw UsageError("rank " + std::to_string(r) + " out of range for C(" +
                         std::to_string(n_) + "," + std::to_string(k_) + ")");
    std::uint64_t mask = 0;
    std::uint64_t rem = r;
    for (int j = k_; j >= 1; --j) {
        // Largest c with C(c, j) <= rem; then s_j = c + 1.
        int c = j - 1;  // C(j-1, j) = 0 <= rem always
        while (c + 1 < n_ && binom64(c + 1, j) <= rem) ++c;
        mask |= std::uint64_t(1) << c;
        rem -= binom64(c, j);
    }
    return mask;
}

std::uint64_t SliceDomain::first_mask() const {
    return k_ == 0 ? 0 : (~std::uint64_t(0) >> (64 - k_));
}

std::uint64_t SliceDomain::next_mask(std::uint64_t mask) {
    // Gosper's hack: next larger integer with the same popcount.
    std::uint64_t u = mask & (~mask + 1);
    std::uint64_t v = mask + u;
    return v | (((mask ^ v) / u) >> 2);
}

std::vector<int> SliceDomain::support(std::uint64_t mask) {
    std::vector<int> s;
    while (mask) {
        s.push_back(std::countr_zero(mask) + 1);
        mask &= mask - 1;
    }
    return s;
}

std::uint64_t SliceDomain::mask_from_support(const std::vector<int>& support,
                                             int n) {
    std::uint64_t mask = 0;
    for (int c : support) {
        if (c < 1 || c > n)
            throw UsageError("coordinate " + std::to_string(c) +
                             " outside [1," + std::to_string(n) + "]");
        std::uint64_t bit = std::uint64_t(1) << (c - 1);
        if (mask & bit) throw UsageError("repeated coordinate in support");
        mask |= bit;
    }
    return mask;
}

std::uint64_t transpose_mask(std::uint64_t mask, int i, int j) {
    std::uint64_t bi = (mask >> (i - 1)) & 1;
    std::uint64_t bj = (mask >> (j - 1)) & 1;
    if (bi == bj) return mask;
    return mask ^ (std::uint64_t(1) << (i - 1)) ^ (std::uint64_t(1) << (j - 1));
}

std::uint64_t delete_coordinate(std::uint64_t mask, int i) {
    std::uint64_t low = mask & ((std::uint64_t(1) << (i - 1)) - 1);
    std::uint64_t high = mask >> i;
    return low | (high << (i - 1));
}

std::uint64_t insert_coordinate(std::uint64_t mask, int i, int bit) {
    std::uint64_t low = mask & ((std::uint64_t(1) << (i - 1)) - 1);
    std::uint64_t high = mask >> (i - 1);
    return low | (std::uint64_t(bit ? 1 : 0) << (i - 1)) | (high << i);
}

}  // namespace slicekit
