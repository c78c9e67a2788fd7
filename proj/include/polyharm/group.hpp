#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace polyharm {

// Finitely generated abelian group in fundamental-theorem normal form:
// Z^m + Z_{q_1} + ... + Z_{q_l}, every q_i >= 2.
struct AbelianGroup {
    int free_rank = 0;
    std::vector<std::int64_t> torsion_orders;

    int torsion_rank() const { return static_cast<int>(torsion_orders.size()); }
    bool is_trivial() const { return free_rank == 0 && torsion_orders.empty(); }
    bool operator==(const AbelianGroup&) const = default;
};

// Coordinates of a group element. Torsion entries are always stored reduced
// into [0, q_i).
struct GroupElement {
    std::vector<std::int64_t> free;
    std::vector<std::int64_t> torsion;

    bool is_zero() const;
    auto operator<=>(const GroupElement&) const = default;
};

// Validated factory: rejects torsion orders < 2 and the trivial group.
AbelianGroup make_group(int free_rank, std::vector<std::int64_t> torsion_orders);

// The torsion-free quotient Z^m; trivial when m = 0 (legal as a projection
// target even though make_group refuses to build it directly).
AbelianGroup free_part(const AbelianGroup& g);

GroupElement zero_element(const AbelianGroup& g);
GroupElement make_element(const AbelianGroup& g, std::vector<std::int64_t> free,
                          std::vector<std::int64_t> torsion);
GroupElement add(const AbelianGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement negate(const AbelianGroup& g, const GroupElement& a);
GroupElement subtract(const AbelianGroup& g, const GroupElement& a, const GroupElement& b);

// Symmetric multiset of generators in paired order: element(i) is the inverse
// of element(i + half()) for 0 <= i < half(). Duplicates and zero allowed.
class GeneratingSet {
public:
    // Requires the pairing order; throws validation_error with the index of
    // the first offending entry otherwise.
    static GeneratingSet from_paired(const AbelianGroup& g, std::vector<GroupElement> elements);

    // Pairs up an arbitrary multiset, inserting missing inverses.
    static GeneratingSet symmetrized(const AbelianGroup& g, std::vector<GroupElement> elements);

    const std::vector<GroupElement>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    std::size_t half() const { return elements_.size() / 2; }
    std::size_t zero_multiplicity() const;
    bool operator==(const GeneratingSet&) const = default;

private:
    GeneratingSet() = default;
    std::vector<GroupElement> elements_;
};

// S^0: plus/minus unit vectors in the free part, plus/minus unit shifts in
// each torsion factor.
GeneratingSet standard_generating_set(const AbelianGroup& g);

struct ValidationReport {
    bool symmetric = false;
    bool generates = false;
    bool ok() const { return symmetric && generates; }
};

// Symmetry is checked as multiset equality with the negated multiset;
// generation by Smith normal form of the presentation matrix.
ValidationReport validate_generating_set(const AbelianGroup& g, const GeneratingSet& s);

// Image of S under the projection onto Z^m, duplicates kept.
GeneratingSet project_to_free_part(const AbelianGroup& g, const GeneratingSet& s);

// Text encoding "f1,...,fm|t1,...,tl"; the bar is present iff l > 0.
std::string encode_element(const AbelianGroup& g, const GroupElement& e);
GroupElement parse_element(const AbelianGroup& g, const std::string& text);

}  // namespace polyharm
