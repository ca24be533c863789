#include "slicekit/univariate.hpp"

#include "slicekit/errors.hpp"

namespace slicekit {

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rat> coeffs)
    : coeffs_(std::move(coeffs)) {
    normalize();
}

void UnivariatePolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UnivariatePolynomial UnivariatePolynomial::constant(const Rat& c) {
    return UnivariatePolynomial(std::vector<Rat>{c});
}

UnivariatePolynomial UnivariatePolynomial::binomial_basis(int e) {
    // C(x,e) = x(x-1)...(x-e+1)/e!
    UnivariatePolynomial p = constant(1);
    Rat fact = 1;
    for (int t = 0; t < e; ++t) {
        UnivariatePolynomial lin(std::vector<Rat>{Rat(-t), Rat(1)});
        p = p * lin;
        fact *= t + 1;
    }
    p *= Rat(1) / fact;
    return p;
}

UnivariatePolynomial UnivariatePolynomial::interpolate_at_integers(
    const std::vector<Rat>& values) {
    if (values.empty()) throw UsageError("interpolation needs at least one value");
    // Newton: P(x) = sum_e Delta^e P(0) * C(x, e).
    std::vector<Rat> diffs = values;
    UnivariatePolynomial p = zero();
    for (std::size_t e = 0; e < values.size(); ++e) {
        if (diffs[0] != 0) {
            UnivariatePolynomial b = binomial_basis(static_cast<int>(e));
            b *= diffs[0];
            p += b;
        }
        for (std::size_t i = 0; i + 1 < diffs.size(); ++i)
            diffs[i] = diffs[i + 1] - diffs[i];
        diffs.pop_back();
    }
    return p;
}

int UnivariatePolynomial::degree() const {
    return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1;
}

Rat UnivariatePolynomial::eval(const Rat& x) const {
    Rat s = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) s = s * x + *it;
    return s;
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(
    const UnivariatePolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator*=(const Rat& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (Rat& a : coeffs_) a *= c;
    return *this;
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a,
                               const UnivariatePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return UnivariatePolynomial::zero();
    std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UnivariatePolynomial(std::move(c));
}

}  // namespace slicekit
