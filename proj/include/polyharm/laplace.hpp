#pragma once

#include <memory>
#include <optional>

#include "polyharm/cayley.hpp"
#include "polyharm/group.hpp"
#include "polyharm/linalg.hpp"
#include "polyharm/polyfun.hpp"

namespace polyharm {

// L^S f = sum over s in S of (shift(f, s) - f), iterated `order` times.
// Multiplicities in S count; the zero generator contributes nothing.
PolyTorsionFunction apply_laplacian(const AbelianGroup& g, const GeneratingSet& s,
                                    const PolyTorsionFunction& f, int order = 1);

struct LinearMap {
    MonomialBasis domain;
    MonomialBasis codomain;
    RationalMatrix entries;  // codomain x domain, column j = image of basis element j
};

// Matrix of the order-th Laplacian power on degree <= k functions. For a
// torsion-free group the codomain is the degree k - 2*order space (the zero
// space when that is negative); with torsion present the map does not lower
// the slice-wise degree uniformly, so the codomain stays the full space.
// Every image is checked to land in the declared codomain.
LinearMap assemble_laplacian_matrix(const AbelianGroup& g, const GeneratingSet& s, int degree,
                                    int order = 1);

struct KernelBasis {
    std::int64_t dimension = 0;
    RationalMatrix coefficient_rows;  // reduced row-echelon over the domain basis
    std::vector<PolyTorsionFunction> functions;
};

// Canonical exact nullspace; every basis function is re-checked to be
// annihilated by the matrix.
KernelBasis kernel_basis(const LinearMap& map);

std::int64_t map_rank(const LinearMap& map);

struct DimensionReport {
    int degree = 0;
    int order = 1;
    std::int64_t computed_dim = 0;
    std::int64_t expected_dim = 0;
    bool torsion_constant = false;
    std::optional<bool> surjective;  // torsion-free groups only
    KernelBasis kernel;
};

// Kernel dimension of L^{order,S} on degree <= floor(growth_order) functions,
// with the closed-form expectation for comparison. A mismatch is reported in
// the result, never silently dropped.
DimensionReport harmonic_space_dimension(const AbelianGroup& g, const GeneratingSet& s,
                                         double growth_order, int order = 1);

// Rank of f -> f(x + e_1) - f(x) restricted to the span of `kernel`, computed
// inside the degree-1-lower polynomial space.
std::int64_t difference_image_rank(const AbelianGroup& g, const KernelBasis& kernel, int degree);

// Tabulates a polynomial on every vertex of a ball.
BallFunction sample_on_ball(std::shared_ptr<const Ball> ball, const PolyTorsionFunction& f,
                            BallFunction::Mode mode);

// Exact value of L|grad f|^2 at x for f defined on B_2(x) and harmonic on the
// closed unit ball around x (verified; a violation raises validation_error).
Rational bochner_check(const BallFunction& f, const GroupElement& x);

struct BochnerValue {
    double value;
    double scale;  // max(1, |grad f|^2 over the closed unit ball at x)
};
BochnerValue bochner_check_real(const BallFunction& f, const GroupElement& x,
                                double harmonic_tolerance = 1e-9);

}  // namespace polyharm
