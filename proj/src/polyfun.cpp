#include "polyharm/polyfun.hpp"

#include <algorithm>
#include <numeric>

#include "polyharm/errors.hpp"

namespace polyharm {

int total_degree(const MultiIndex& alpha) {
    return std::accumulate(alpha.begin(), alpha.end(), 0);
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const int da = total_degree(a.alpha);
    const int db = total_degree(b.alpha);
    if (da != db) return da < db;
    if (a.alpha != b.alpha) return a.alpha > b.alpha;
    return a.torsion < b.torsion;
}

std::vector<std::vector<std::int64_t>> all_torsion_elements(const std::vector<std::int64_t>& orders) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> current(orders.size(), 0);
    while (true) {
        out.push_back(current);
        int pos = static_cast<int>(orders.size()) - 1;
        while (pos >= 0) {
            if (++current[pos] < orders[pos]) break;
            current[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

namespace {

void enumerate_degree(int rank, int degree, MultiIndex& prefix, std::vector<MultiIndex>& out) {
    if (rank == 0) {
        if (degree == 0) out.push_back(prefix);
        return;
    }
    if (rank == 1) {
        prefix.push_back(degree);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int head = degree; head >= 0; --head) {
        prefix.push_back(head);
        enumerate_degree(rank - 1, degree - head, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

MonomialBasis MonomialBasis::enumerate(int free_rank, int max_degree,
                                       std::vector<std::int64_t> torsion_orders,
                                       std::size_t budget) {
    if (free_rank < 0) throw validation_error("basis with negative free rank");
    MonomialBasis basis;
    basis.free_rank_ = free_rank;
    basis.max_degree_ = max_degree;
    basis.torsion_orders_ = std::move(torsion_orders);
    if (max_degree < 0) return basis;

    auto slices = all_torsion_elements(basis.torsion_orders_);
    std::vector<MultiIndex> alphas;
    MultiIndex prefix;
    for (int d = 0; d <= max_degree; ++d) {
        if (free_rank == 0 && d > 0) break;
        enumerate_degree(free_rank, d, prefix, alphas);
    }
    if (alphas.size() * slices.size() > budget) {
        throw budget_error("monomial basis of size " + std::to_string(alphas.size() * slices.size()) +
                           " exceeds the budget of " + std::to_string(budget));
    }
    for (const auto& alpha : alphas) {
        for (const auto& t : slices) basis.items_.push_back(Monomial{alpha, t});
    }
    for (std::size_t i = 0; i < basis.items_.size(); ++i) {
        basis.index_.emplace(basis.items_[i], static_cast<std::int32_t>(i));
    }
    return basis;
}

std::optional<int> MonomialBasis::index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

PolyTorsionFunction::PolyTorsionFunction(int free_rank, std::vector<std::int64_t> torsion_orders)
    : free_rank_(free_rank), torsion_orders_(std::move(torsion_orders)) {}

PolyTorsionFunction PolyTorsionFunction::zero(const AbelianGroup& g) {
    return PolyTorsionFunction(g.free_rank, g.torsion_orders);
}

PolyTorsionFunction PolyTorsionFunction::monomial(const AbelianGroup& g, MultiIndex alpha,
                                                  std::vector<std::int64_t> torsion_slice,
                                                  Rational coefficient) {
    if (static_cast<int>(alpha.size()) != g.free_rank ||
        torsion_slice.size() != g.torsion_orders.size()) {
        throw validation_error("monomial shape does not match the group");
    }
    PolyTorsionFunction f(g.free_rank, g.torsion_orders);
    f.add_term(Monomial{std::move(alpha), std::move(torsion_slice)}, coefficient);
    return f;
}

int PolyTorsionFunction::degree() const {
    int deg = -1;
    for (const auto& [mono, c] : coeffs_) deg = std::max(deg, total_degree(mono.alpha));
    return deg;
}

Rational PolyTorsionFunction::coefficient(const Monomial& m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void PolyTorsionFunction::add_term(Monomial m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

Rational PolyTorsionFunction::evaluate(const GroupElement& x) const {
    if (static_cast<int>(x.free.size()) != free_rank_ || x.torsion.size() != torsion_orders_.size())
        throw validation_error("evaluate: element shape does not match the function");
    Rational acc(0);
    for (const auto& [mono, c] : coeffs_) {
        if (mono.torsion != x.torsion) continue;
        Int value(1);
        for (std::size_t i = 0; i < mono.alpha.size(); ++i) {
            if (mono.alpha[i] != 0) value *= int_pow(Int(x.free[i]), static_cast<unsigned>(mono.alpha[i]));
        }
        acc += c * Rational(value);
    }
    return acc;
}

PolyTorsionFunction& PolyTorsionFunction::operator+=(const PolyTorsionFunction& other) {
    for (const auto& [mono, c] : other.coeffs_) add_term(mono, c);
    return *this;
}

PolyTorsionFunction& PolyTorsionFunction::operator-=(const PolyTorsionFunction& other) {
    for (const auto& [mono, c] : other.coeffs_) add_term(mono, -c);
    return *this;
}

PolyTorsionFunction& PolyTorsionFunction::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [mono, value] : coeffs_) value *= c;
    return *this;
}

PolyTorsionFunction shift(const PolyTorsionFunction& f, const GroupElement& s) {
    if (static_cast<int>(s.free.size()) != f.free_rank() ||
        s.torsion.size() != f.torsion_orders().size())
        throw validation_error("shift: element shape does not match the function");
    const auto& orders = f.torsion_orders();
    PolyTorsionFunction out(f.free_rank(), orders);
    for (const auto& [mono, c] : f.coefficients()) {
        std::vector<std::int64_t> slice(mono.torsion.size());
        for (std::size_t i = 0; i < slice.size(); ++i) {
            std::int64_t v = (mono.torsion[i] - s.torsion[i]) % orders[i];
            slice[i] = v < 0 ? v + orders[i] : v;
        }
        // Expand prod_i (x_i + a_i)^{alpha_i} over all beta <= alpha.
        MultiIndex beta(mono.alpha.size(), 0);
        while (true) {
            Int mult(1);
            for (std::size_t i = 0; i < beta.size(); ++i) {
                const int drop = mono.alpha[i] - beta[i];
                if (drop > 0) {
                    mult *= binomial_int(static_cast<unsigned long>(mono.alpha[i]),
                                         static_cast<unsigned long>(beta[i]));
                    mult *= int_pow(Int(s.free[i]), static_cast<unsigned>(drop));
                }
            }
            if (mult != 0) out.add_term(Monomial{beta, slice}, c * Rational(mult));
            int pos = static_cast<int>(beta.size()) - 1;
            while (pos >= 0) {
                if (++beta[pos] <= mono.alpha[pos]) break;
                beta[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return out;
}

PolyTorsionFunction partial_difference(const PolyTorsionFunction& f, const GroupElement& s) {
    PolyTorsionFunction out = shift(f, s);
    out -= f;
    return out;
}

bool is_torsion_constant(const PolyTorsionFunction& f) {
    if (f.torsion_orders().empty()) return true;
    auto slices = all_torsion_elements(f.torsion_orders());
    std::map<MultiIndex, std::map<std::vector<std::int64_t>, Rational>> by_alpha;
    for (const auto& [mono, c] : f.coefficients()) by_alpha[mono.alpha][mono.torsion] = c;
    for (const auto& [alpha, values] : by_alpha) {
        Rational reference(0);
        auto first = values.find(slices.front());
        if (first != values.end()) reference = first->second;
        for (const auto& t : slices) {
            auto it = values.find(t);
            Rational v = it == values.end() ? Rational(0) : it->second;
            if (v != reference) return false;
        }
    }
    return true;
}

std::int64_t dim_poly_space(int m, int k) {
    if (k < 0) return 0;
    if (m == 0) return 1;
    std::int64_t total = 0;
    for (int i = 0; i <= k; ++i) total += binomial(m + i - 1, i);
    return total;
}

std::int64_t dim_harmonic_poly(int m, int k) {
    if (k < 0) return 0;
    if (m == 0) return 1;
    if (k == 0) return 1;
    return binomial(m + k - 1, k) + binomial(m + k - 2, k - 1);
}

DimPair dim_reference(int m, int k) {
    if (m < 1) throw validation_error("dim_reference needs free rank >= 1");
    if (k < 0) throw validation_error("dim_reference needs degree >= 0");
    return DimPair{dim_poly_space(m, k), dim_harmonic_poly(m, k)};
}

std::int64_t expected_polyharmonic_dim(int m, int k, int n) {
    if (m == 0) return 1;
    const int lo = std::max(k - 2 * n + 1, 0);
    std::int64_t total = 0;
    for (int i = lo; i <= k; ++i) total += binomial(m + i - 1, i);
    return total;
}

bool check_dim_recursions(int max_rank, int max_degree) {
    for (int m = 2; m <= max_rank; ++m) {
        for (int k = 1; k <= max_degree; ++k) {
            if (dim_harmonic_poly(m, k) != dim_harmonic_poly(m - 1, k) + dim_harmonic_poly(m, k - 1))
                return false;
        }
    }
    for (int m = 1; m <= max_rank; ++m) {
        for (int k = 2; k <= max_degree; ++k) {
            if (dim_poly_space(m, k) != dim_harmonic_poly(m, k) + dim_poly_space(m, k - 2))
                return false;
        }
    }
    return true;
}

}  // namespace polyharm
