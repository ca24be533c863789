#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "slicekit/polynomial.hpp"

namespace slicekit {

// Function on the hypercube {0,1}^m as a truth table; index bit i-1 holds
// x_i (the same packing as slice masks). m = 0 is the one-point cube.
class CubeFunction {
public:
    CubeFunction(int m, std::vector<Rat> values);

    static CubeFunction constant(int m, const Rat& c);
    static CubeFunction from_packed_bits(int m, std::uint64_t bits);

    int m() const { return m_; }
    std::uint64_t size() const { return values_.size(); }
    const std::vector<Rat>& values() const { return values_; }
    const Rat& at(std::uint64_t index) const { return values_[index]; }
    bool boolean() const { return boolean_; }

    // Unique multilinear (Moebius) expansion; exact, computed once and cached.
    const MultilinearPolynomial& expansion() const;
    int degree() const { return expansion().degree(); }
    // 1-based coordinates appearing in the expansion; equivalently the
    // coordinates whose flip changes the function somewhere.
    std::vector<int> relevant() const;

    bool operator==(const CubeFunction& o) const {
        return m_ == o.m_ && values_ == o.values_;
    }

private:
    int m_ = 0;
    std::vector<Rat> values_;
    bool boolean_ = false;
    struct ExpansionCache {
        std::once_flag once;
        std::unique_ptr<MultilinearPolynomial> poly;
    };
    std::shared_ptr<ExpansionCache> cache_;
};

}  // namespace slicekit
