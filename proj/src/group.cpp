#include "polyharm/group.hpp"

#include <algorithm>
#include <sstream>

#include "polyharm/errors.hpp"
#include "polyharm/snf.hpp"

namespace polyharm {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t q) {
    std::int64_t r = v % q;
    return r < 0 ? r + q : r;
}

void check_shape(const AbelianGroup& g, const GroupElement& e, const char* what) {
    if (static_cast<int>(e.free.size()) != g.free_rank ||
        static_cast<int>(e.torsion.size()) != g.torsion_rank()) {
        throw validation_error(std::string(what) + ": element shape does not match the group");
    }
}

}  // namespace

bool GroupElement::is_zero() const {
    return std::all_of(free.begin(), free.end(), [](std::int64_t v) { return v == 0; }) &&
           std::all_of(torsion.begin(), torsion.end(), [](std::int64_t v) { return v == 0; });
}

AbelianGroup make_group(int free_rank, std::vector<std::int64_t> torsion_orders) {
    if (free_rank < 0) throw validation_error("free rank must be nonnegative");
    for (std::int64_t q : torsion_orders) {
        if (q < 2) throw validation_error("torsion order " + std::to_string(q) + " is < 2");
    }
    if (free_rank == 0 && torsion_orders.empty()) throw validation_error("trivial group");
    return AbelianGroup{free_rank, std::move(torsion_orders)};
}

AbelianGroup free_part(const AbelianGroup& g) { return AbelianGroup{g.free_rank, {}}; }

GroupElement zero_element(const AbelianGroup& g) {
    return GroupElement{std::vector<std::int64_t>(g.free_rank, 0),
                        std::vector<std::int64_t>(g.torsion_rank(), 0)};
}

GroupElement make_element(const AbelianGroup& g, std::vector<std::int64_t> free,
                          std::vector<std::int64_t> torsion) {
    GroupElement e{std::move(free), std::move(torsion)};
    check_shape(g, e, "make_element");
    for (int i = 0; i < g.torsion_rank(); ++i) e.torsion[i] = mod_reduce(e.torsion[i], g.torsion_orders[i]);
    return e;
}

GroupElement add(const AbelianGroup& g, const GroupElement& a, const GroupElement& b) {
    check_shape(g, a, "add");
    check_shape(g, b, "add");
    GroupElement out = a;
    for (int i = 0; i < g.free_rank; ++i) out.free[i] += b.free[i];
    for (int i = 0; i < g.torsion_rank(); ++i)
        out.torsion[i] = mod_reduce(out.torsion[i] + b.torsion[i], g.torsion_orders[i]);
    return out;
}

GroupElement negate(const AbelianGroup& g, const GroupElement& a) {
    check_shape(g, a, "negate");
    GroupElement out = a;
    for (auto& v : out.free) v = -v;
    for (int i = 0; i < g.torsion_rank(); ++i) out.torsion[i] = mod_reduce(-out.torsion[i], g.torsion_orders[i]);
    return out;
}

GroupElement subtract(const AbelianGroup& g, const GroupElement& a, const GroupElement& b) {
    return add(g, a, negate(g, b));
}

GeneratingSet GeneratingSet::from_paired(const AbelianGroup& g, std::vector<GroupElement> elements) {
    if (elements.empty()) throw validation_error("generating set is empty");
    if (elements.size() % 2 != 0) throw validation_error("generating set has odd cardinality");
    const std::size_t h = elements.size() / 2;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        check_shape(g, elements[i], "generating set");
        for (int j = 0; j < g.torsion_rank(); ++j)
            elements[i].torsion[j] = mod_reduce(elements[i].torsion[j], g.torsion_orders[j]);
    }
    for (std::size_t i = 0; i < h; ++i) {
        if (elements[i + h] != negate(g, elements[i])) {
            throw validation_error("entry " + std::to_string(i + h) +
                                   " is not the inverse of entry " + std::to_string(i));
        }
    }
    GeneratingSet s;
    s.elements_ = std::move(elements);
    return s;
}

GeneratingSet GeneratingSet::symmetrized(const AbelianGroup& g, std::vector<GroupElement> elements) {
    if (elements.empty()) throw validation_error("generating set is empty");
    for (auto& e : elements) {
        check_shape(g, e, "generating set");
        for (int j = 0; j < g.torsion_rank(); ++j)
            e.torsion[j] = mod_reduce(e.torsion[j], g.torsion_orders[j]);
    }
    std::sort(elements.begin(), elements.end());
    std::vector<GroupElement> firsts;
    std::vector<GroupElement> seconds;
    std::vector<GroupElement> pool = std::move(elements);
    while (!pool.empty()) {
        GroupElement s = pool.front();
        pool.erase(pool.begin());
        GroupElement ns = negate(g, s);
        auto it = std::find(pool.begin(), pool.end(), ns);
        if (it != pool.end()) pool.erase(it);
        firsts.push_back(std::move(s));
        seconds.push_back(std::move(ns));
    }
    std::vector<GroupElement> paired = std::move(firsts);
    paired.insert(paired.end(), seconds.begin(), seconds.end());
    return from_paired(g, std::move(paired));
}

std::size_t GeneratingSet::zero_multiplicity() const {
    return static_cast<std::size_t>(
        std::count_if(elements_.begin(), elements_.end(), [](const GroupElement& e) { return e.is_zero(); }));
}

GeneratingSet standard_generating_set(const AbelianGroup& g) {
    if (g.is_trivial()) throw validation_error("trivial group has no standard generating set");
    std::vector<GroupElement> firsts;
    for (int i = 0; i < g.free_rank; ++i) {
        GroupElement e = zero_element(g);
        e.free[i] = 1;
        firsts.push_back(std::move(e));
    }
    for (int i = 0; i < g.torsion_rank(); ++i) {
        GroupElement w = zero_element(g);
        w.torsion[i] = 1 % g.torsion_orders[i];
        firsts.push_back(std::move(w));
    }
    std::vector<GroupElement> paired = firsts;
    for (const auto& e : firsts) paired.push_back(negate(g, e));
    return GeneratingSet::from_paired(g, std::move(paired));
}

ValidationReport validate_generating_set(const AbelianGroup& g, const GeneratingSet& s) {
    ValidationReport report;

    std::vector<GroupElement> sorted = s.elements();
    std::vector<GroupElement> negated;
    negated.reserve(sorted.size());
    for (const auto& e : sorted) negated.push_back(negate(g, e));
    std::sort(sorted.begin(), sorted.end());
    std::sort(negated.begin(), negated.end());
    report.symmetric = sorted == negated;

    // Lift to Z^{m+l}: columns are the generators plus the torsion relations
    // q_i * f_i. S generates G iff that lattice is all of Z^{m+l}.
    const int m = g.free_rank;
    const int l = g.torsion_rank();
    const int dim = m + l;
    if (dim == 0) {
        report.generates = true;
        return report;
    }
    std::vector<std::vector<Int>> matrix(dim);
    for (int i = 0; i < dim; ++i) matrix[i].assign(s.size() + l, Int(0));
    for (std::size_t j = 0; j < s.size(); ++j) {
        const GroupElement& e = s.elements()[j];
        for (int i = 0; i < m; ++i) matrix[i][j] = Int(e.free[i]);
        for (int i = 0; i < l; ++i) matrix[m + i][j] = Int(e.torsion[i]);
    }
    for (int i = 0; i < l; ++i) matrix[m + i][s.size() + i] = Int(g.torsion_orders[i]);

    std::vector<Int> divisors = smith_normal_form(std::move(matrix));
    report.generates = static_cast<int>(divisors.size()) == dim &&
                       std::all_of(divisors.begin(), divisors.end(), [](const Int& d) { return d == 1; });
    return report;
}

GeneratingSet project_to_free_part(const AbelianGroup& g, const GeneratingSet& s) {
    AbelianGroup target = free_part(g);
    std::vector<GroupElement> projected;
    projected.reserve(s.size());
    for (const auto& e : s.elements()) projected.push_back(GroupElement{e.free, {}});
    return GeneratingSet::from_paired(target, std::move(projected));
}

std::string encode_element(const AbelianGroup& g, const GroupElement& e) {
    std::ostringstream out;
    for (int i = 0; i < g.free_rank; ++i) {
        if (i > 0) out << ',';
        out << e.free[i];
    }
    if (g.torsion_rank() > 0) {
        out << '|';
        for (int i = 0; i < g.torsion_rank(); ++i) {
            if (i > 0) out << ',';
            out << e.torsion[i];
        }
    }
    return out.str();
}

namespace {

std::vector<std::int64_t> parse_coords(const std::string& text, std::size_t expected, const char* what) {
    std::vector<std::int64_t> out;
    if (!text.empty()) {
        std::istringstream in(text);
        std::string token;
        while (std::getline(in, token, ',')) {
            try {
                std::size_t used = 0;
                out.push_back(std::stoll(token, &used));
                if (used != token.size()) throw std::invalid_argument(token);
            } catch (const std::exception&) {
                throw validation_error(std::string(what) + ": bad coordinate \"" + token + "\"");
            }
        }
    }
    if (out.size() != expected) {
        throw validation_error(std::string(what) + ": expected " + std::to_string(expected) +
                               " coordinates, got " + std::to_string(out.size()));
    }
    return out;
}

}  // namespace

GroupElement parse_element(const AbelianGroup& g, const std::string& text) {
    const auto bar = text.find('|');
    std::string free_text = bar == std::string::npos ? text : text.substr(0, bar);
    std::string torsion_text = bar == std::string::npos ? std::string() : text.substr(bar + 1);
    if (bar == std::string::npos && g.torsion_rank() > 0)
        throw validation_error("element \"" + text + "\": missing torsion coordinates");
    auto free = parse_coords(free_text, static_cast<std::size_t>(g.free_rank), "element");
    auto torsion = parse_coords(torsion_text, static_cast<std::size_t>(g.torsion_rank()), "element");
    return make_element(g, std::move(free), std::move(torsion));
}

}  // namespace polyharm
