#include "slicekit/transfer.hpp"

#include <bit>
#include <string>

namespace slicekit {

namespace {

void check_junta_window(int L, int k, int n) {
    if (!(L <= k && k <= n - L))
        throw UsageError("junta size L must satisfy L <= k <= n-L (got L=" +
                         std::to_string(L) + ", k=" + std::to_string(k) +
                         ", n=" + std::to_string(n) +
                         "); outside it some cube patterns have no slice point");
}

// Pattern of x on the witness coordinates, binary-lsb over the sorted witness.
std::uint64_t witness_pattern(std::uint64_t mask, const std::vector<int>& witness) {
    std::uint64_t p = 0;
    for (std::size_t t = 0; t < witness.size(); ++t)
        p |= ((mask >> (witness[t] - 1)) & 1) << t;
    return p;
}

}  // namespace

CubeFunction slice_to_cube(const SliceFunction& f, const JuntaCertificate& cert) {
    const SliceDomain& dom = f.domain();
    const int L = static_cast<int>(cert.witness.size());
    check_junta_window(L, dom.k(), dom.n());

    std::vector<Rat> table(std::uint64_t(1) << L);
    std::vector<bool> seen(table.size(), false);
    std::uint64_t mask = dom.first_mask();
    for (std::uint64_t r = 0; r < dom.size(); ++r) {
        std::uint64_t p = witness_pattern(mask, cert.witness);
        if (!seen[p]) {
            seen[p] = true;
            table[p] = f.at_rank(r);
        } else if (table[p] != f.at_rank(r)) {
            throw UsageError("junta certificate invalid: f is not determined "
                             "by the witness coordinates");
        }
        mask = SliceDomain::next_mask(mask);
    }
    for (std::uint64_t p = 0; p < table.size(); ++p)
        if (!seen[p])
            throw ClaimError("unreached cube pattern despite L <= k <= n-L");

    CubeFunction g(L, std::move(table));
    if (g.degree() > degree(f))
        throw ClaimError("extracted cube degree exceeds slice degree — "
                         "falsifies the slice-to-cube lemma");
    return g;
}

MultilinearPolynomial symmetrize_trailing(const MultilinearPolynomial& p,
                                          int head) {
    const int n = p.n();
    if (head < 0 || head > n) throw UsageError("head size out of range");
    const int tail = n - head;
    const std::uint64_t head_mask =
        head == 0 ? 0 : (~std::uint64_t(0)) >> (64 - head);

    // Pool coefficients by (head part, tail cardinality), then spread each
    // pool uniformly over its orbit.
    std::map<std::pair<std::uint64_t, int>, Rat> pools;
    for (const auto& [mono, c] : p.terms()) {
        std::uint64_t h = mono & head_mask;
        int t = std::popcount(mono & ~head_mask);
        pools[{h, t}] += c;
    }
    MultilinearPolynomial q(n);
    for (const auto& [key, sum] : pools) {
        auto [h, t] = key;
        Rat share = sum / Rat(binom64(tail, t));
        if (t == 0) {
            q.add_term(h, share);
            continue;
        }
        std::uint64_t sub = (~std::uint64_t(0)) >> (64 - t);
        for (std::uint64_t i = 0; i < binom64(tail, t); ++i) {
            q.add_term(h | (sub << head), share);
            sub = SliceDomain::next_mask(sub);
        }
    }
    return q;
}

UnivariatePolynomial minsky_papert_collapse(const MultilinearPolynomial& sym,
                                            int m) {
    if (sym.n() != m) throw UsageError("variable count mismatch");
    // Symmetric multilinear <=> coefficient depends only on the monomial size.
    std::vector<Rat> by_size(m + 1, Rat(0));
    std::vector<bool> size_seen(m + 1, false);
    for (const auto& [mono, c] : sym.terms()) {
        int t = std::popcount(mono);
        if (!size_seen[t]) {
            size_seen[t] = true;
            by_size[t] = c;
        } else if (by_size[t] != c) {
            throw UsageError("polynomial is not symmetric");
        }
    }
    // Each size class must be fully present (equal coefficients, checked
    // above) or fully absent; a partially filled class is asymmetric.
    std::vector<std::uint64_t> class_count(m + 1, 0);
    for (const auto& [mono, c] : sym.terms()) ++class_count[std::popcount(mono)];
    for (int t = 0; t <= m; ++t)
        if (class_count[t] != 0 && class_count[t] != binom64(m, t))
            throw UsageError("polynomial is not symmetric");

    // Value at any weight-w point: sum_t c_t C(w,t).
    auto value_at_weight = [&](int w) {
        Rat s = 0;
        for (int t = 0; t <= std::min(w, m); ++t)
            if (size_seen[t]) s += by_size[t] * Rat(binom64(w, t));
        return s;
    };
    const int e = sym.degree();
    std::vector<Rat> nodes(e + 1);
    for (int w = 0; w <= e; ++w) nodes[w] = value_at_weight(w);
    UnivariatePolynomial r = UnivariatePolynomial::interpolate_at_integers(nodes);
    for (int w = e + 1; w <= m; ++w)
        if (r.eval(Rat(w)) != value_at_weight(w))
            throw ClaimError("univariate collapse failed verification at weight " +
                             std::to_string(w));
    return r;
}

MultilinearPolynomial explicit_cube_polynomial(const SliceFunction& f,
                                               const JuntaCertificate& cert) {
    const SliceDomain& dom = f.domain();
    const int n = dom.n(), k = dom.k();
    const int L = static_cast<int>(cert.witness.size());
    check_junta_window(L, k, n);
    const int d = degree(f);

    // Relabel so the witness occupies coordinates 1..L (order preserving on
    // both the witness and its complement).
    std::vector<int> perm(n, 0);
    int next_head = 1, next_tail = L + 1;
    std::uint64_t wmask = SliceDomain::mask_from_support(cert.witness, n);
    for (int v = 1; v <= n; ++v)
        perm[v - 1] = ((wmask >> (v - 1)) & 1) ? next_head++ : next_tail++;
    MultilinearPolynomial p = harmonic_representation(f).relabeled(perm);
    MultilinearPolynomial q = symmetrize_trailing(p, L);

    const std::uint64_t head_mask =
        L == 0 ? 0 : (~std::uint64_t(0)) >> (64 - L);
    const int tail = n - L;

    // k - x_1 - ... - x_L over the head variables.
    MultilinearPolynomial depleted(L);
    depleted.set_term(0, Rat(k));
    for (int i = 0; i < L; ++i) depleted.set_term(std::uint64_t(1) << i, Rat(-1));

    MultilinearPolynomial out(L);
    for (std::uint64_t h = 0;; ++h) {
        if (std::popcount(h) <= d) {
            // Coefficient polynomial of the head monomial, in the tail vars.
            MultilinearPolynomial qh(tail);
            for (const auto& [mono, c] : q.terms())
                if ((mono & head_mask) == h) qh.add_term(mono >> L, c);
            if (!qh.is_zero()) {
                UnivariatePolynomial r = minsky_papert_collapse(qh, tail);
                if (r.degree() > d - std::popcount(h) && !r.is_zero())
                    throw ClaimError("collapsed tail polynomial exceeds degree "
                                     "d - |head| — falsifies the lemma");
                // Horner in (k - sum of head vars), multilinear reduction.
                MultilinearPolynomial s(L);
                const auto& coeffs = r.coeffs();
                for (std::size_t j = coeffs.size(); j-- > 0;) {
                    s = s * depleted;
                    s.add_term(0, coeffs[j]);
                }
                MultilinearPolynomial head_mono(L);
                head_mono.set_term(h, Rat(1));
                out += head_mono * s;
            }
        }
        if (h == head_mask) break;
    }

    if (out.degree() > d)
        throw ClaimError("explicit cube polynomial exceeds the slice degree");
    CubeFunction g = slice_to_cube(f, cert);
    for (std::uint64_t y = 0; y < g.size(); ++y)
        if (out.eval_mask(y) != g.at(y))
            throw ClaimError("explicit cube polynomial disagrees with the "
                             "extracted cube function");
    return out;
}

SliceFunction cube_to_slice(const CubeFunction& g, int n, int k) {
    const int L = g.m();
    check_junta_window(L, k, n);
    SliceDomain dom(n, k);
    const std::uint64_t head_mask =
        L == 0 ? 0 : (~std::uint64_t(0)) >> (64 - L);
    std::vector<Rat> vals(dom.size());
    std::uint64_t mask = dom.first_mask();
    for (std::uint64_t r = 0; r < dom.size(); ++r) {
        vals[r] = g.at(mask & head_mask);
        mask = SliceDomain::next_mask(mask);
    }
    SliceFunction f(dom, std::move(vals));

    if (dom.size() <= 4096) {
        if (degree(f) > g.degree())
            throw ClaimError("embedded slice degree exceeds cube degree");
        if (static_cast<int>(g.relevant().size()) == L &&
            minimal_junta(f).size != L)
            throw ClaimError("embedding of an all-relevant cube function is "
                             "not a minimal L-junta — falsifies the "
                             "cube-to-slice lemma");
    }
    return f;
}

}  // namespace slicekit
