#include "slicekit/slice_function.hpp"

#include <cmath>
#include <string>

namespace slicekit {

namespace {

bool all_zero_one(const std::vector<Rat>& vals) {
    for (const Rat& v : vals)
        if (v != 0 && v != 1) return false;
    return true;
}

}  // namespace

SliceFunction::SliceFunction(SliceDomain domain, std::vector<Rat> values)
    : domain_(domain), values_(std::move(values)) {
    if (values_.size() != domain_.size())
        throw UsageError("slice function needs " + std::to_string(domain_.size()) +
                         " values, got " + std::to_string(values_.size()));
    boolean_ = all_zero_one(values_);
}

SliceFunction SliceFunction::constant(const SliceDomain& dom, const Rat& c) {
    return SliceFunction(dom, std::vector<Rat>(dom.size(), c));
}

SliceFunction SliceFunction::dictator(const SliceDomain& dom, int coord) {
    if (coord < 1 || coord > dom.n())
        throw UsageError("dictator coordinate out of range");
    std::vector<Rat> vals(dom.size());
    std::uint64_t mask = dom.first_mask();
    for (std::uint64_t r = 0; r < dom.size(); ++r) {
        vals[r] = (mask >> (coord - 1)) & 1;
        mask = SliceDomain::next_mask(mask);
    }
    return SliceFunction(dom, std::move(vals));
}

SliceFunction SliceFunction::from_packed_bits(
    const SliceDomain& dom, const std::vector<std::uint64_t>& words) {
    if (words.size() * 64 < dom.size())
        throw UsageError("packed table too short for domain");
    std::vector<Rat> vals(dom.size());
    for (std::uint64_t r = 0; r < dom.size(); ++r)
        vals[r] = (words[r >> 6] >> (r & 63)) & 1;
    return SliceFunction(dom, std::move(vals));
}

bool SliceFunction::is_zero() const {
    for (const Rat& v : values_)
        if (v != 0) return false;
    return true;
}

bool SliceFunction::is_symmetric() const {
    // Invariant under all adjacent transpositions (they generate S_n).
    for (int i = 1; i < domain_.n(); ++i) {
        std::uint64_t mask = domain_.first_mask();
        for (std::uint64_t r = 0; r < domain_.size(); ++r) {
            std::uint64_t m2 = transpose_mask(mask, i, i + 1);
            if (m2 != mask && values_[r] != values_[domain_.rank(m2)]) return false;
            mask = SliceDomain::next_mask(mask);
        }
    }
    return true;
}

SliceFunction SliceFunction::transposed(int i, int j) const {
    if (i == j) throw UsageError("transposition needs distinct coordinates");
    if (i < 1 || i > domain_.n() || j < 1 || j > domain_.n())
        throw UsageError("transposition coordinate out of range");
    std::vector<Rat> vals(domain_.size());
    std::uint64_t mask = domain_.first_mask();
    for (std::uint64_t r = 0; r < domain_.size(); ++r) {
        vals[r] = values_[domain_.rank(transpose_mask(mask, i, j))];
        mask = SliceDomain::next_mask(mask);
    }
    return SliceFunction(domain_, std::move(vals));
}

SliceFunction SliceFunction::restricted(int coord, int bit) const {
    if (coord < 1 || coord > domain_.n())
        throw UsageError("restriction coordinate out of range");
    if (bit != 0 && bit != 1) throw UsageError("restriction bit must be 0 or 1");
    int n2 = domain_.n() - 1, k2 = domain_.k() - bit;
    if (n2 < 1 || k2 < 0 || k2 > n2)
        throw UsageError("restriction target slice C(" + std::to_string(n2) +
                         "," + std::to_string(k2) + ") is degenerate");
    SliceDomain sub(n2, k2);
    std::vector<Rat> vals(sub.size());
    std::uint64_t mask = sub.first_mask();
    for (std::uint64_t r = 0; r < sub.size(); ++r) {
        vals[r] = values_[domain_.rank(insert_coordinate(mask, coord, bit))];
        mask = SliceDomain::next_mask(mask);
    }
    return SliceFunction(sub, std::move(vals));
}

std::vector<std::uint64_t> SliceFunction::packed_bits() const {
    if (!boolean_) throw UsageError("packed_bits needs a Boolean function");
    std::vector<std::uint64_t> words((domain_.size() + 63) / 64, 0);
    for (std::uint64_t r = 0; r < domain_.size(); ++r)
        if (values_[r] == 1) words[r >> 6] |= std::uint64_t(1) << (r & 63);
    return words;
}

Rat inner_product(const SliceFunction& f, const SliceFunction& g) {
    if (!(f.domain() == g.domain()))
        throw UsageError("inner product needs functions on the same slice");
    Rat s = 0;
    for (std::uint64_t r = 0; r < f.domain().size(); ++r)
        s += f.at_rank(r) * g.at_rank(r);
    return s / Rat(static_cast<unsigned long>(f.domain().size()));
}

Rat norm2_squared(const SliceFunction& f) { return inner_product(f, f); }

double p_norm(const SliceFunction& f, double p) {
    if (p < 1) throw UsageError("p-norm needs p >= 1");
    double s = 0;
    for (const Rat& v : f.values())
        s += std::pow(std::abs(rat_to_double(v)), p);
    s /= static_cast<double>(f.domain().size());
    return std::pow(s, 1.0 / p);
}

}  // namespace slicekit
