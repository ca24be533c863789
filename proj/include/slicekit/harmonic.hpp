#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "slicekit/linalg.hpp"
#include "slicekit/polynomial.hpp"
#include "slicekit/slice_function.hpp"

namespace slicekit {

// The harmonic multilinear representation of functions on a slice: the unique
// multilinear P of degree <= min(k,n-k) with sum_i dP/dx_i = 0 agreeing with
// f on every point. Levels f^{=d} are the homogeneous parts of P.
struct HarmonicDecomposition {
    SliceDomain domain;
    std::vector<MultilinearPolynomial> levels;       // d = 0..max_degree
    std::vector<std::vector<Rat>> level_values;      // per level, on the slice
    std::vector<Rat> level_norms2;                   // ||f^{=d}||_2^2

    // Top nonzero level; 0 for constants (including f == 0, by convention).
    int degree() const;
};

// Per-domain machinery, built once and cached for the process lifetime:
// the monomial basis, the fraction-free factorization of the defining linear
// system, and spectral level projectors. Read-only after construction.
// The exact path is gated at C(n,k) <= 4096.
class HarmonicContext {
public:
    static const HarmonicContext& get(const SliceDomain& dom);

    const SliceDomain& domain() const { return domain_; }
    // Monomials of degree <= max_degree, degree-major, numeric within degree.
    const std::vector<std::uint64_t>& basis() const { return basis_; }

    MultilinearPolynomial representation(const SliceFunction& f) const;

    // Projection matrix onto level d acting on value vectors. Built from the
    // Johnson adjacency operator by Lagrange interpolation on its eigenvalues
    // — an independent route from the linear solve, used to cross-check it.
    const RatMatrix& level_projector(int d) const;

    // Eigenvalue of the adjacency operator (swap one 1 with one 0) on level d.
    static long adjacency_eigenvalue(const SliceDomain& dom, int d);

    HarmonicContext(const HarmonicContext&) = delete;
    HarmonicContext& operator=(const HarmonicContext&) = delete;

private:
    explicit HarmonicContext(const SliceDomain& dom);

    SliceDomain domain_;
    std::vector<std::uint64_t> basis_;
    std::unique_ptr<FractionFreeLU> lu_;
    std::vector<RatMatrix> projectors_;  // filled at construction
};

// The defining operation: assemble evaluation rows (all points, rank order)
// followed by harmonicity rows (one per monomial of degree < max_degree) and
// solve fraction-free. row_order, when nonempty, permutes the equations; the
// solution provably does not depend on it.
MultilinearPolynomial harmonic_representation_ordered(
    const SliceFunction& f, const std::vector<std::size_t>& row_order);

MultilinearPolynomial harmonic_representation(const SliceFunction& f);
HarmonicDecomposition decompose(const SliceFunction& f);
int degree(const SliceFunction& f);

// Integer level projectors for census inner loops:
// Z_d = prod_{e != d} (A - lambda_e I) has Z_d f = s_d f^{=d} with s_d != 0,
// so nonzero-ness of levels needs no rationals. Entries certified so that any
// column sum over the domain stays inside int64. Column-major.
struct IntegerLevelProjectors {
    SliceDomain domain;
    std::vector<std::vector<std::int64_t>> z;  // z[d][col * size + row]
};
const IntegerLevelProjectors& integer_level_projectors(const SliceDomain& dom);

// Degree of a Boolean function given as packed bits, for domains too large
// for dense matrices: top-down sparse application of the Lagrange factors.
int degree_of_packed_boolean(const SliceDomain& dom,
                             const std::vector<std::uint64_t>& bits);

}  // namespace slicekit
