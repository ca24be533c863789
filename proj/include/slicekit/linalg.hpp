#pragma once

#include <cstddef>
#include <vector>

#include "slicekit/numeric.hpp"

namespace slicekit {

struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    Int& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

struct RatMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Rat> a;

    RatMatrix() = default;
    RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    Rat& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
    std::vector<Rat> mul(const std::vector<Rat>& v) const;
};

// Fraction-free (Bareiss) LU factorization of a nonsingular integer matrix.
// The elimination runs once; each solve replays it on the right-hand side in
// O(N^2) exact operations. Pivoting picks the first nonzero row, so the
// factorization — and hence every solve — is deterministic.
class FractionFreeLU {
public:
    explicit FractionFreeLU(IntMatrix m);  // throws ClaimError if singular

    std::size_t size() const { return n_; }
    std::vector<Rat> solve(const std::vector<Rat>& rhs) const;

private:
    std::size_t n_ = 0;
    IntMatrix m_;                 // U above the diagonal, multipliers below
    std::vector<Int> pivots_;     // stage pivots p_0..p_{n-1}
    std::vector<std::size_t> perm_;  // row r of m_ is original row perm_[r]
};

}  // namespace slicekit
