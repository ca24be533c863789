#pragma once

#include <cstdint>
#include <vector>

#include "slicekit/errors.hpp"

namespace slicekit {

// Points live in bit masks: bit i-1 of the mask holds x_i. Coordinates are
// 1-based in every interface. Masks cap the ambient dimension at 64, which
// covers every supported workload (the exact path stops at C(n,k) <= 4096
// and the census path at C(n,k) <= 2^22 long before n matters).
inline constexpr int kMaxVars = 64;

// The slice: all weight-k 0/1 vectors of length n, ordered colexicographically
// on the support set. The colex rank of a support s_1 < ... < s_k (1-based) is
//     rank = sum_{j=1..k} C(s_j - 1, j),
// the combinatorial number system. Colex order on supports coincides with
// plain numeric order on masks, so iteration is a Gosper walk.
class SliceDomain {
public:
    SliceDomain(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    std::uint64_t size() const { return size_; }
    // min(k, n-k): the maximum possible degree of any function on the domain.
    int max_degree() const { return max_degree_; }

    std::uint64_t rank(std::uint64_t mask) const;
    std::uint64_t unrank(std::uint64_t r) const;

    std::uint64_t first_mask() const;
    // Next mask in colex (= numeric) order; valid for size()-1 steps.
    static std::uint64_t next_mask(std::uint64_t mask);

    // 1-based support of a mask, ascending.
    static std::vector<int> support(std::uint64_t mask);
    static std::uint64_t mask_from_support(const std::vector<int>& support, int n);

    bool operator==(const SliceDomain&) const = default;

private:
    int n_ = 0, k_ = 0, max_degree_ = 0;
    std::uint64_t size_ = 0;
};

// x with coordinates i and j (1-based) swapped.
std::uint64_t transpose_mask(std::uint64_t mask, int i, int j);

// Mask over n-1 coordinates obtained by deleting coordinate i (order
// preserving): coordinates above i shift down by one.
std::uint64_t delete_coordinate(std::uint64_t mask, int i);

// Inverse of delete_coordinate: reinsert coordinate i with value bit.
std::uint64_t insert_coordinate(std::uint64_t mask, int i, int bit);

}  // namespace slicekit
