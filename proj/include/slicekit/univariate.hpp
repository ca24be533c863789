#pragma once

#include <vector>

#include "slicekit/numeric.hpp"

namespace slicekit {

// Dense univariate polynomial with exact coefficients, ascending order,
// normalized (no trailing zero coefficients).
class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;
    explicit UnivariatePolynomial(std::vector<Rat> coeffs);

    static UnivariatePolynomial zero() { return UnivariatePolynomial(); }
    static UnivariatePolynomial constant(const Rat& c);
    // Binomial coefficient C(x, e) as a polynomial in x (degree e).
    static UnivariatePolynomial binomial_basis(int e);
    // Unique degree < values.size() polynomial with P(i) = values[i] for
    // i = 0,1,2,...; Newton forward differences on the integer nodes, exact.
    static UnivariatePolynomial interpolate_at_integers(
        const std::vector<Rat>& values);

    const std::vector<Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    int degree() const;  // 0 for the zero polynomial
    Rat eval(const Rat& x) const;

    UnivariatePolynomial& operator+=(const UnivariatePolynomial& o);
    UnivariatePolynomial& operator*=(const Rat& c);
    friend UnivariatePolynomial operator*(const UnivariatePolynomial& a,
                                          const UnivariatePolynomial& b);
    bool operator==(const UnivariatePolynomial& o) const = default;

private:
    void normalize();
    std::vector<Rat> coeffs_;
};

}  // namespace slicekit
