#include "slicekit/polynomial.hpp"

#include <bit>
#include <string>

namespace slicekit {

MultilinearPolynomial::MultilinearPolynomial(int n) : n_(n) {
    // n = 0 is allowed: the constants (needed for 0-variable cube functions).
    if (n < 0 || n > kMaxVars)
        throw CapacityError("polynomial needs 0 <= n <= 64 variables");
}

void MultilinearPolynomial::set_term(std::uint64_t mono, Rat c) {
    if ((mono >> n_) != 0)
        throw UsageError("monomial uses a variable beyond x_" + std::to_string(n_));
    if (c == 0)
        terms_.erase(mono);
    else
        terms_[mono] = std::move(c);
}

void MultilinearPolynomial::add_term(std::uint64_t mono, const Rat& c) {
    if (c == 0) return;
    if ((mono >> n_) != 0)
        throw UsageError("monomial uses a variable beyond x_" + std::to_string(n_));
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat MultilinearPolynomial::coeff(std::uint64_t mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rat(0) : it->second;
}

int MultilinearPolynomial::degree() const {
    int d = 0;
    for (const auto& [mono, c] : terms_) d = std::max(d, std::popcount(mono));
    return d;
}

Rat MultilinearPolynomial::eval_mask(std::uint64_t point_mask) const {
    Rat s = 0;
    for (const auto& [mono, c] : terms_)
        if ((mono & point_mask) == mono) s += c;
    return s;
}

SliceFunction MultilinearPolynomial::eval_on(const SliceDomain& dom) const {
    if (dom.n() != n_)
        throw UsageError("polynomial/domain variable count mismatch");
    std::vector<Rat> vals(dom.size());
    std::uint64_t mask = dom.first_mask();
    for (std::uint64_t r = 0; r < dom.size(); ++r) {
        vals[r] = eval_mask(mask);
        mask = SliceDomain::next_mask(mask);
    }
    return SliceFunction(dom, std::move(vals));
}

MultilinearPolynomial MultilinearPolynomial::homogeneous_part(int d) const {
    MultilinearPolynomial p(n_);
    for (const auto& [mono, c] : terms_)
        if (std::popcount(mono) == d) p.terms_[mono] = c;
    return p;
}

MultilinearPolynomial MultilinearPolynomial::divergence() const {
    MultilinearPolynomial p(n_);
    for (const auto& [mono, c] : terms_) {
        std::uint64_t m = mono;
        while (m) {
            std::uint64_t bit = m & (~m + 1);
            p.add_term(mono ^ bit, c);
            m &= m - 1;
        }
    }
    return p;
}

MultilinearPolynomial MultilinearPolynomial::relabeled(
    const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw UsageError("relabeling permutation has wrong length");
    MultilinearPolynomial p(n_);
    for (const auto& [mono, c] : terms_) {
        std::uint64_t m = mono, out = 0;
        while (m) {
            int pos = std::countr_zero(m);
            out |= std::uint64_t(1) << (perm[pos] - 1);
            m &= m - 1;
        }
        p.add_term(out, c);
    }
    return p;
}

MultilinearPolynomial& MultilinearPolynomial::operator+=(
    const MultilinearPolynomial& o) {
    if (o.n_ != n_) throw UsageError("polynomial variable count mismatch");
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

MultilinearPolynomial& MultilinearPolynomial::operator-=(
    const MultilinearPolynomial& o) {
    if (o.n_ != n_) throw UsageError("polynomial variable count mismatch");
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

MultilinearPolynomial& MultilinearPolynomial::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, coef] : terms_) coef *= c;
    return *this;
}

MultilinearPolynomial operator*(const MultilinearPolynomial& a,
                                const MultilinearPolynomial& b) {
    if (a.n_ != b.n_) throw UsageError("polynomial variable count mismatch");
    MultilinearPolynomial p(a.n_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) p.add_term(ma | mb, ca * cb);
    return p;
}

}  // namespace slicekit
