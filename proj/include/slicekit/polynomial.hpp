#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "slicekit/numeric.hpp"
#include "slicekit/slice_function.hpp"

namespace slicekit {

// Multilinear polynomial over x_1..x_n with exact coefficients. Monomials are
// variable masks (bit i-1 <-> x_i); the map keeps them in numeric (= colex)
// order, so iteration is deterministic. Products reduce with x^2 = x, the
// functional identity on 0/1 points.
class MultilinearPolynomial {
public:
    explicit MultilinearPolynomial(int n);

    int n() const { return n_; }
    const std::map<std::uint64_t, Rat>& terms() const { return terms_; }

    void set_term(std::uint64_t mono, Rat c);          // erases when c == 0
    void add_term(std::uint64_t mono, const Rat& c);
    Rat coeff(std::uint64_t mono) const;               // 0 when absent

    bool is_zero() const { return terms_.empty(); }
    // Degree of the zero polynomial is 0 by convention.
    int degree() const;

    Rat eval_mask(std::uint64_t point_mask) const;
    SliceFunction eval_on(const SliceDomain& dom) const;

    MultilinearPolynomial homogeneous_part(int d) const;
    // sum_i dP/dx_i as a polynomial; identically zero iff P is harmonic.
    MultilinearPolynomial divergence() const;
    bool is_harmonic() const { return divergence().is_zero(); }

    // Relabel variables: new variable perm[i] takes the role of old variable
    // i+1 (perm is 1-based values, length n).
    MultilinearPolynomial relabeled(const std::vector<int>& perm) const;

    MultilinearPolynomial& operator+=(const MultilinearPolynomial& o);
    MultilinearPolynomial& operator-=(const MultilinearPolynomial& o);
    MultilinearPolynomial& operator*=(const Rat& c);
    friend MultilinearPolynomial operator+(MultilinearPolynomial a,
                                           const MultilinearPolynomial& b) {
        a += b;
        return a;
    }
    friend MultilinearPolynomial operator-(MultilinearPolynomial a,
                                           const MultilinearPolynomial& b) {
        a -= b;
        return a;
    }
    // Product with multilinear reduction x_i^2 = x_i.
    friend MultilinearPolynomial operator*(const MultilinearPolynomial& a,
                                           const MultilinearPolynomial& b);
    bool operator==(const MultilinearPolynomial& o) const = default;

private:
    int n_ = 0;
    std::map<std::uint64_t, Rat> terms_;
};

}  // namespace slicekit
