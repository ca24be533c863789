#include "slicekit/harmonic.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <string>
#include <utility>

namespace slicekit {

namespace {

std::vector<std::uint64_t> monomials_up_to(int n, int max_deg) {
    std::vector<std::uint64_t> out;
    out.push_back(0);
    for (int d = 1; d <= max_deg; ++d) {
        std::uint64_t mask = (~std::uint64_t(0)) >> (64 - d);
        std::uint64_t count = binom64(n, d);
        for (std::uint64_t i = 0; i < count; ++i) {
            out.push_back(mask);
            mask = SliceDomain::next_mask(mask);
        }
    }
    return out;
}

// Rows: evaluation constraints on all points (rank order), then one
// harmonicity constraint per monomial of degree < max_degree. The system is
// square: C(n,D) = C(n,k) for D = min(k,n-k).
struct HarmonicSystem {
    std::vector<std::uint64_t> basis;
    std::map<std::uint64_t, std::size_t> index;
    IntMatrix m;
};

HarmonicSystem assemble_system(const SliceDomain& dom) {
    HarmonicSystem sys;
    sys.basis = monomials_up_to(dom.n(), dom.max_degree());
    for (std::size_t i = 0; i < sys.basis.size(); ++i) sys.index[sys.basis[i]] = i;

    const std::size_t cols = sys.basis.size();
    std::size_t harm_rows = 0;
    for (std::uint64_t mono : sys.basis)
        if (std::popcount(mono) < dom.max_degree()) ++harm_rows;
    if (dom.size() + harm_rows != cols)
        throw ClaimError("harmonic system is not square — dimension bug");

    sys.m = IntMatrix(cols, cols);
    std::uint64_t mask = dom.first_mask();
    for (std::uint64_t r = 0; r < dom.size(); ++r) {
        for (std::size_t c = 0; c < cols; ++c)
            if ((sys.basis[c] & mask) == sys.basis[c]) sys.m.at(r, c) = 1;
        mask = SliceDomain::next_mask(mask);
    }
    std::size_t row = dom.size();
    for (std::uint64_t mono : sys.basis) {
        if (std::popcount(mono) >= dom.max_degree()) continue;
        for (int i = 1; i <= dom.n(); ++i) {
            std::uint64_t bit = std::uint64_t(1) << (i - 1);
            if (mono & bit) continue;
            sys.m.at(row, sys.index.at(mono | bit)) += 1;
        }
        ++row;
    }
    return sys;
}

std::vector<Rat> rhs_for(const SliceFunction& f, std::size_t rows) {
    std::vector<Rat> rhs(rows, Rat(0));
    for (std::uint64_t r = 0; r < f.domain().size(); ++r) rhs[r] = f.at_rank(r);
    return rhs;
}

MultilinearPolynomial poly_from_solution(int n,
                                         const std::vector<std::uint64_t>& basis,
                                         const std::vector<Rat>& x) {
    MultilinearPolynomial p(n);
    for (std::size_t i = 0; i < basis.size(); ++i) p.set_term(basis[i], x[i]);
    return p;
}

void check_exact_capacity(const SliceDomain& dom) {
    if (dom.size() > 4096)
        throw CapacityError("exact harmonic path is gated at C(n,k) <= 4096, got " +
                            std::to_string(dom.size()));
}

IntMatrix johnson_adjacency(const SliceDomain& dom) {
    const std::uint64_t c = dom.size();
    IntMatrix a(c, c);
    std::uint64_t mask = dom.first_mask();
    for (std::uint64_t r = 0; r < c; ++r) {
        for (int i = 1; i <= dom.n(); ++i) {
            if (!((mask >> (i - 1)) & 1)) continue;
            for (int j = 1; j <= dom.n(); ++j) {
                if ((mask >> (j - 1)) & 1) continue;
                a.at(r, dom.rank(transpose_mask(mask, i, j))) = 1;
            }
        }
        mask = SliceDomain::next_mask(mask);
    }
    return a;
}

// numerators[d] = prod_{e != d} (A - lambda_e I); integer matrices.
std::vector<IntMatrix> projector_numerators(const SliceDomain& dom) {
    const std::uint64_t c = dom.size();
    const int levels = dom.max_degree() + 1;
    IntMatrix a = johnson_adjacency(dom);
    std::vector<IntMatrix> out;
    for (int d = 0; d < levels; ++d) {
        IntMatrix m(c, c);
        for (std::uint64_t r = 0; r < c; ++r) m.at(r, r) = 1;
        for (int e = 0; e < levels; ++e) {
            if (e == d) continue;
            const Int lambda(HarmonicContext::adjacency_eigenvalue(dom, e));
            // m <- (A - lambda I) m
            IntMatrix next(c, c);
            for (std::uint64_t r = 0; r < c; ++r)
                for (std::uint64_t cc = 0; cc < c; ++cc) {
                    Int s = -lambda * m.at(r, cc);
                    for (std::uint64_t t = 0; t < c; ++t)
                        if (a.at(r, t) != 0) s += m.at(t, cc);
                    next.at(r, cc) = std::move(s);
                }
            m = std::move(next);
        }
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace

int HarmonicDecomposition::degree() const {
    for (int d = static_cast<int>(levels.size()) - 1; d >= 1; --d)
        if (!levels[d].is_zero()) return d;
    return 0;
}

long HarmonicContext::adjacency_eigenvalue(const SliceDomain& dom, int d) {
    return static_cast<long>(dom.k() - d) * (dom.n() - dom.k() - d) - d;
}

HarmonicContext::HarmonicContext(const SliceDomain& dom) : domain_(dom) {
    check_exact_capacity(dom);
    HarmonicSystem sys = assemble_system(dom);
    basis_ = std::move(sys.basis);
    lu_ = std::make_unique<FractionFreeLU>(std::move(sys.m));

    // Rational level projectors; the dense spectral route is kept small.
    if (dom.size() <= 128) {
        std::vector<IntMatrix> nums = projector_numerators(dom);
        for (int d = 0; d <= dom.max_degree(); ++d) {
            Int denom = 1;
            for (int e = 0; e <= dom.max_degree(); ++e)
                if (e != d)
                    denom *= Int(adjacency_eigenvalue(dom, d) -
                                 adjacency_eigenvalue(dom, e));
            RatMatrix p(dom.size(), dom.size());
            for (std::size_t i = 0; i < p.a.size(); ++i) {
                p.a[i] = Rat(nums[d].a[i]) / Rat(denom);
                p.a[i].canonicalize();
            }
            projectors_.push_back(std::move(p));
        }
    }
}

const HarmonicContext& HarmonicContext::get(const SliceDomain& dom) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<HarmonicContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(dom.n(), dom.k());
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<HarmonicContext>(
                                    new HarmonicContext(dom)))
                 .first;
    return *it->second;
}

MultilinearPolynomial HarmonicContext::representation(
    const SliceFunction& f) const {
    if (!(f.domain() == domain_))
        throw UsageError("function does not live on this context's domain");
    std::vector<Rat> x = lu_->solve(rhs_for(f, basis_.size()));
    return poly_from_solution(domain_.n(), basis_, x);
}

const RatMatrix& HarmonicContext::level_projector(int d) const {
    if (projectors_.empty())
        throw CapacityError("dense level projectors are gated at C(n,k) <= 128");
    if (d < 0 || d > domain_.max_degree())
        throw UsageError("level out of range");
    return projectors_[d];
}

MultilinearPolynomial harmonic_representation_ordered(
    const SliceFunction& f, const std::vector<std::size_t>& row_order) {
    check_exact_capacity(f.domain());
    HarmonicSystem sys = assemble_system(f.domain());
    std::vector<Rat> rhs = rhs_for(f, sys.basis.size());
    IntMatrix m = sys.m;
    std::vector<Rat> b = rhs;
    if (!row_order.empty()) {
        if (row_order.size() != sys.basis.size())
            throw UsageError("row order has wrong length");
        for (std::size_t r = 0; r < row_order.size(); ++r) {
            for (std::size_t c = 0; c < m.cols; ++c)
                m.at(r, c) = sys.m.at(row_order[r], c);
            b[r] = rhs[row_order[r]];
        }
    }
    std::vector<Rat> x = FractionFreeLU(std::move(m)).solve(b);
    return poly_from_solution(f.domain().n(), sys.basis, x);
}

MultilinearPolynomial harmonic_representation(const SliceFunction& f) {
    return HarmonicContext::get(f.domain()).representation(f);
}

HarmonicDecomposition decompose(const SliceFunction& f) {
    const SliceDomain& dom = f.domain();
    MultilinearPolynomial p = harmonic_representation(f);
    HarmonicDecomposition dec{dom, {}, {}, {}};
    for (int d = 0; d <= dom.max_degree(); ++d) {
        MultilinearPolynomial level = p.homogeneous_part(d);
        std::vector<Rat> vals(dom.size());
        std::uint64_t mask = dom.first_mask();
        for (std::uint64_t r = 0; r < dom.size(); ++r) {
            vals[r] = level.eval_mask(mask);
            mask = SliceDomain::next_mask(mask);
        }
        Rat n2 = 0;
        for (const Rat& v : vals) n2 += v * v;
        n2 /= Rat(static_cast<unsigned long>(dom.size()));
        dec.levels.push_back(std::move(level));
        dec.level_values.push_back(std::move(vals));
        dec.level_norms2.push_back(std::move(n2));
    }
    return dec;
}

int degree(const SliceFunction& f) { return harmonic_representation(f).degree(); }

const IntegerLevelProjectors& integer_level_projectors(const SliceDomain& dom) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<IntegerLevelProjectors>>
        cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(dom.n(), dom.k());
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    if (dom.size() > 512)
        throw CapacityError("integer level projectors are gated at C(n,k) <= 512");
    std::vector<IntMatrix> nums = projector_numerators(dom);
    std::unique_ptr<IntegerLevelProjectors> out(
        new IntegerLevelProjectors{dom, {}});
    const std::uint64_t c = dom.size();
    for (IntMatrix& nm : nums) {
        // Row abs-sums must fit int64: census loops add whole columns into a
        // running vector whose entries are sums of row slices.
        for (std::uint64_t r = 0; r < c; ++r) {
            Int s = 0;
            for (std::uint64_t cc = 0; cc < c; ++cc) s += abs(nm.at(r, cc));
            if (!fits_int64(s))
                throw CapacityError("integer projector entries overflow int64");
        }
        std::vector<std::int64_t> zm(c * c);
        for (std::uint64_t cc = 0; cc < c; ++cc)
            for (std::uint64_t r = 0; r < c; ++r)
                zm[cc * c + r] = to_int64(nm.at(r, cc));
        out->z.push_back(std::move(zm));
    }
    it = cache.emplace(key, std::move(out)).first;
    return *it->second;
}

int degree_of_packed_boolean(const SliceDomain& dom,
                             const std::vector<std::uint64_t>& bits) {
    if (dom.size() > (std::uint64_t(1) << 22))
        throw CapacityError("census path is gated at C(n,k) <= 2^22");
    const std::uint64_t c = dom.size();
    const int levels = dom.max_degree() + 1;

    if (dom.size() <= 512) {
        const IntegerLevelProjectors& proj = integer_level_projectors(dom);
        for (int d = levels - 1; d >= 1; --d) {
            const std::vector<std::int64_t>& z = proj.z[d];
            std::vector<std::int64_t> v(c, 0);
            for (std::uint64_t col = 0; col < c; ++col) {
                if (!((bits[col >> 6] >> (col & 63)) & 1)) continue;
                const std::int64_t* zc = &z[col * c];
                for (std::uint64_t r = 0; r < c; ++r) v[r] += zc[r];
            }
            for (std::uint64_t r = 0; r < c; ++r)
                if (v[r] != 0) return d;
        }
        return 0;
    }

    // Sparse route: neighbors are enumerated on the fly; values stay integral.
    std::vector<std::uint64_t> masks(c);
    std::uint64_t mask = dom.first_mask();
    for (std::uint64_t r = 0; r < c; ++r) {
        masks[r] = mask;
        mask = SliceDomain::next_mask(mask);
    }
    auto apply_factor = [&](const std::vector<Int>& v, long lambda) {
        std::vector<Int> out(c);
        for (std::uint64_t r = 0; r < c; ++r) {
            Int s = -Int(lambda) * v[r];
            std::uint64_t m = masks[r];
            for (int i = 1; i <= dom.n(); ++i) {
                if (!((m >> (i - 1)) & 1)) continue;
                for (int j = 1; j <= dom.n(); ++j) {
                    if ((m >> (j - 1)) & 1) continue;
                    s += v[dom.rank(transpose_mask(m, i, j))];
                }
            }
            out[r] = std::move(s);
        }
        return out;
    };
    for (int d = levels - 1; d >= 1; --d) {
        std::vector<Int> v(c);
        for (std::uint64_t r = 0; r < c; ++r)
            v[r] = (bits[r >> 6] >> (r & 63)) & 1;
        for (int e = 0; e < levels; ++e) {
            if (e == d) continue;
            v = apply_factor(v, HarmonicContext::adjacency_eigenvalue(dom, e));
        }
        for (std::uint64_t r = 0; r < c; ++r)
            if (v[r] != 0) return d;
    }
    return 0;
}

}  // namespace slicekit
