#pragma once

#include <cstdint>
#include <vector>

#include "slicekit/domain.hpp"
#include "slicekit/numeric.hpp"

namespace slicekit {

// Exact-valued function on a slice; values indexed by colex rank. Immutable
// after construction and safe to share across threads.
class SliceFunction {
public:
    SliceFunction(SliceDomain domain, std::vector<Rat> values);

    static SliceFunction constant(const SliceDomain& dom, const Rat& c);
    // f(x) = x_i, coordinate 1-based.
    static SliceFunction dictator(const SliceDomain& dom, int coord);
    // Boolean function from a bit-packed table (bit r = value at rank r).
    static SliceFunction from_packed_bits(const SliceDomain& dom,
                                          const std::vector<std::uint64_t>& words);

    const SliceDomain& domain() const { return domain_; }
    const std::vector<Rat>& values() const { return values_; }
    const Rat& at_rank(std::uint64_t r) const { return values_[r]; }
    const Rat& operator()(std::uint64_t mask) const {
        return values_[domain_.rank(mask)];
    }
    bool boolean() const { return boolean_; }
    bool is_zero() const;
    bool is_symmetric() const;

    // f^{(i j)}(x) = f(x^{(i j)}); involution, preserves Booleanness.
    SliceFunction transposed(int i, int j) const;

    // Restriction to x_i = bit, on C(n-1, k-bit); coordinates above i shift
    // down by one (order preserving).
    SliceFunction restricted(int coord, int bit) const;

    // Bit-packed values; only valid for Boolean functions.
    std::vector<std::uint64_t> packed_bits() const;

private:
    SliceDomain domain_;
    std::vector<Rat> values_;
    bool boolean_ = false;
};

Rat inner_product(const SliceFunction& f, const SliceFunction& g);  // E[fg]
Rat norm2_squared(const SliceFunction& f);                          // E[f^2]
double p_norm(const SliceFunction& f, double p);  // E[|f|^p]^{1/p}, p >= 1

}  // namespace slicekit
