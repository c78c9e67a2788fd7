#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "polyharm/group.hpp"
#include "polyharm/rational.hpp"

namespace polyharm {

using MultiIndex = std::vector<std::int32_t>;

int total_degree(const MultiIndex& alpha);

// Basis label: the monomial x^alpha on the torsion slice t.
struct Monomial {
    MultiIndex alpha;
    std::vector<std::int64_t> torsion;
    bool operator==(const Monomial&) const = default;
};

// Total order: degree ascending, then lexicographically descending on alpha
// (so x^2, xy, y^2 within one degree), then ascending on the torsion element.
// Fixed once so matrices and kernel bases reproduce byte for byte.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

std::vector<std::vector<std::int64_t>> all_torsion_elements(const std::vector<std::int64_t>& orders);

class MonomialBasis {
public:
    // max_degree = -1 yields the zero space.
    static MonomialBasis enumerate(int free_rank, int max_degree,
                                   std::vector<std::int64_t> torsion_orders,
                                   std::size_t budget = 2'000'000);

    int free_rank() const { return free_rank_; }
    int max_degree() const { return max_degree_; }
    const std::vector<std::int64_t>& torsion_orders() const { return torsion_orders_; }
    const std::vector<Monomial>& items() const { return items_; }
    std::int64_t dimension() const { return static_cast<std::int64_t>(items_.size()); }
    std::optional<int> index_of(const Monomial& m) const;

private:
    int free_rank_ = 0;
    int max_degree_ = -1;
    std::vector<std::int64_t> torsion_orders_;
    std::vector<Monomial> items_;
    std::map<Monomial, std::int32_t, MonomialOrder> index_;
};

// Polynomial in the free coordinates with one exact-rational coefficient
// slice per torsion element; zero coefficients are never stored.
class PolyTorsionFunction {
public:
    PolyTorsionFunction(int free_rank, std::vector<std::int64_t> torsion_orders);

    static PolyTorsionFunction zero(const AbelianGroup& g);
    static PolyTorsionFunction monomial(const AbelianGroup& g, MultiIndex alpha,
                                        std::vector<std::int64_t> torsion_slice,
                                        Rational coefficient = Rational(1));

    int free_rank() const { return free_rank_; }
    const std::vector<std::int64_t>& torsion_orders() const { return torsion_orders_; }
    const std::map<Monomial, Rational, MonomialOrder>& coefficients() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const;  // -1 for the zero function
    Rational coefficient(const Monomial& m) const;
    void add_term(Monomial m, const Rational& c);

    Rational evaluate(const GroupElement& x) const;

    PolyTorsionFunction& operator+=(const PolyTorsionFunction& other);
    PolyTorsionFunction& operator-=(const PolyTorsionFunction& other);
    PolyTorsionFunction& operator*=(const Rational& c);
    friend PolyTorsionFunction operator+(PolyTorsionFunction a, const PolyTorsionFunction& b) { return a += b; }
    friend PolyTorsionFunction operator-(PolyTorsionFunction a, const PolyTorsionFunction& b) { return a -= b; }
    friend PolyTorsionFunction operator*(PolyTorsionFunction a, const Rational& c) { return a *= c; }
    bool operator==(const PolyTorsionFunction&) const = default;

private:
    int free_rank_ = 0;
    std::vector<std::int64_t> torsion_orders_;
    std::map<Monomial, Rational, MonomialOrder> coeffs_;
};

// (shift f)(x) = f(x + s): binomial expansion in the free part, slice
// permutation t -> t - s_torsion in the torsion part.
PolyTorsionFunction shift(const PolyTorsionFunction& f, const GroupElement& s);

// delta_s f = shift(f, s) - f.
PolyTorsionFunction partial_difference(const PolyTorsionFunction& f, const GroupElement& s);

// True when every torsion slice carries identical coefficients.
bool is_torsion_constant(const PolyTorsionFunction& f);

// dim P^k_m and dim of harmonic polynomials of degree <= k on R^m.
std::int64_t dim_poly_space(int m, int k);
std::int64_t dim_harmonic_poly(int m, int k);

struct DimPair {
    std::int64_t dim_poly;
    std::int64_t dim_harmonic;
};
DimPair dim_reference(int m, int k);

// Expected kernel dimension of the n-th Laplacian power on degree-k
// polynomials over Z^m (constants only when m = 0).
std::int64_t expected_polyharmonic_dim(int m, int k, int n);

// Exact recursion identities for the dimension formulas over the rectangle
// m <= max_rank, k <= max_degree.
bool check_dim_recursions(int max_rank, int max_degree);

}  // namespace polyharm
