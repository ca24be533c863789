#include "slicekit/linalg.hpp"

#include <utility>

#include "slicekit/errors.hpp"

namespace slicekit {

std::vector<Rat> RatMatrix::mul(const std::vector<Rat>& v) const {
    if (v.size() != cols) throw UsageError("matrix-vector size mismatch");
    std::vector<Rat> out(rows, Rat(0));
    for (std::size_t r = 0; r < rows; ++r) {
        Rat s = 0;
        const Rat* row = &a[r * cols];
        for (std::size_t c = 0; c < cols; ++c)
            if (v[c] != 0 && row[c] != 0) s += row[c] * v[c];
        out[r] = std::move(s);
    }
    return out;
}

FractionFreeLU::FractionFreeLU(IntMatrix m) : n_(m.rows), m_(std::move(m)) {
    if (m_.rows != m_.cols) throw UsageError("fraction-free LU needs a square matrix");
    pivots_.resize(n_);
    perm_.resize(n_);
    for (std::size_t r = 0; r < n_; ++r) perm_[r] = r;

    Int prev = 1;
    for (std::size_t k = 0; k < n_; ++k) {
        std::size_t piv = k;
        while (piv < n_ && m_.at(piv, k) == 0) ++piv;
        if (piv == n_)
            throw ClaimError("singular system in exact elimination");
        if (piv != k) {
            for (std::size_t c = 0; c < n_; ++c)
                std::swap(m_.at(k, c), m_.at(piv, c));
            std::swap(perm_[k], perm_[piv]);
        }
        const Int& pk = m_.at(k, k);
        for (std::size_t i = k + 1; i < n_; ++i) {
            const Int& mik = m_.at(i, k);
            for (std::size_t j = k + 1; j < n_; ++j) {
                Int num = pk * m_.at(i, j) - mik * m_.at(k, j);
                m_.at(i, j) = divexact(num, prev);
            }
            // column k keeps the stage-k multiplier for solve-time replay
        }
        pivots_[k] = pk;
        prev = pk;
    }
}

std::vector<Rat> FractionFreeLU::solve(const std::vector<Rat>& rhs) const {
    if (rhs.size() != n_) throw UsageError("rhs size mismatch");
    std::vector<Rat> b(n_);
    for (std::size_t r = 0; r < n_; ++r) b[r] = rhs[perm_[r]];

    // Forward replay of the fraction-free elimination.
    Rat prev = 1;
    for (std::size_t k = 0; k < n_; ++k) {
        Rat pk(pivots_[k]);
        for (std::size_t i = k + 1; i < n_; ++i) {
            if (m_.at(i, k) == 0 && b[i] == 0) continue;
            b[i] = (pk * b[i] - Rat(m_.at(i, k)) * b[k]) / prev;
        }
        prev = pk;
    }
    // Back substitution against the integer upper triangle.
    std::vector<Rat> x(n_, Rat(0));
    for (std::size_t k = n_; k-- > 0;) {
        Rat s = b[k];
        for (std::size_t j = k + 1; j < n_; ++j)
            if (x[j] != 0 && m_.at(k, j) != 0) s -= Rat(m_.at(k, j)) * x[j];
        x[k] = s / Rat(pivots_[k]);
    }
    return x;
}

}  // namespace slicekit
