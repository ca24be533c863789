#include "slicekit/cube.hpp"

#include <bit>
#include <string>

namespace slicekit {

CubeFunction::CubeFunction(int m, std::vector<Rat> values)
    : m_(m), values_(std::move(values)), cache_(std::make_shared<ExpansionCache>()) {
    if (m < 0 || m > 24)
        throw CapacityError("cube functions are gated at 0 <= m <= 24 variables");
    if (values_.size() != (std::uint64_t(1) << m))
        throw UsageError("cube function needs 2^m = " +
                         std::to_string(std::uint64_t(1) << m) + " values, got " +
                         std::to_string(values_.size()));
    boolean_ = true;
    for (const Rat& v : values_)
        if (v != 0 && v != 1) {
            boolean_ = false;
            break;
        }
}

CubeFunction CubeFunction::constant(int m, const Rat& c) {
    return CubeFunction(m, std::vector<Rat>(std::uint64_t(1) << m, c));
}

CubeFunction CubeFunction::from_packed_bits(int m, std::uint64_t bits) {
    if (m > 6) throw UsageError("from_packed_bits holds at most 2^6 values");
    std::vector<Rat> vals(std::uint64_t(1) << m);
    for (std::uint64_t i = 0; i < vals.size(); ++i) vals[i] = (bits >> i) & 1;
    return CubeFunction(m, std::move(vals));
}

const MultilinearPolynomial& CubeFunction::expansion() const {
    std::call_once(cache_->once, [this] {
        // Moebius transform: c_T = sum_{S subseteq T} (-1)^{|T|-|S|} f(S).
        std::vector<Rat> work = values_;
        for (int b = 0; b < m_; ++b) {
            const std::uint64_t bit = std::uint64_t(1) << b;
            for (std::uint64_t i = 0; i < work.size(); ++i)
                if (i & bit) work[i] -= work[i ^ bit];
        }
        auto poly = std::make_unique<MultilinearPolynomial>(m_);
        for (std::uint64_t i = 0; i < work.size(); ++i)
            poly->set_term(i, std::move(work[i]));
        cache_->poly = std::move(poly);
    });
    return *cache_->poly;
}

std::vector<int> CubeFunction::relevant() const {
    std::uint64_t mask = 0;
    for (const auto& [mono, c] : expansion().terms()) mask |= mono;
    return SliceDomain::support(mask);
}

}  // namespace slicekit
