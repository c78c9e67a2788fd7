#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "polyharm/group.hpp"
#include "polyharm/rational.hpp"

namespace polyharm {

inline constexpr std::size_t kDefaultVertexBudget = 1'000'000;

// Closed word-metric ball with its exterior vertex boundary. Members are in
// BFS order (distance ascending, lexicographic within a layer), so balls are
// reproducible across runs.
class Ball {
public:
    const AbelianGroup& group() const { return group_; }
    const GeneratingSet& gens() const { return gens_; }
    const GroupElement& center() const { return center_; }
    int radius() const { return radius_; }

    const std::vector<GroupElement>& members() const { return members_; }
    const std::vector<int>& member_distances() const { return member_distances_; }
    const std::vector<GroupElement>& boundary() const { return boundary_; }

    std::int64_t volume() const { return static_cast<std::int64_t>(members_.size()); }
    std::size_t vertex_count() const { return members_.size() + boundary_.size(); }
    // ids < members().size() are interior, the rest index into boundary().
    const GroupElement& vertex(std::int32_t id) const;
    std::optional<std::int32_t> index_of(const GroupElement& e) const;

    friend Ball make_ball(const AbelianGroup&, const GeneratingSet&, const GroupElement&, int,
                          std::size_t);

private:
    Ball(AbelianGroup group, GeneratingSet gens, GroupElement center, int radius)
        : group_(std::move(group)), gens_(std::move(gens)), center_(std::move(center)), radius_(radius) {}

    AbelianGroup group_;
    GeneratingSet gens_;
    GroupElement center_;
    int radius_ = 0;
    std::vector<GroupElement> members_;
    std::vector<int> member_distances_;
    std::vector<GroupElement> boundary_;
    std::map<GroupElement, std::int32_t> index_;
};

Ball make_ball(const AbelianGroup& g, const GeneratingSet& s, const GroupElement& center,
               int radius, std::size_t vertex_budget = kDefaultVertexBudget);

int word_distance(const AbelianGroup& g, const GeneratingSet& s, const GroupElement& x,
                  const GroupElement& y, std::size_t vertex_budget = kDefaultVertexBudget);

std::int64_t ball_volume(const AbelianGroup& g, const GeneratingSet& s, int radius,
                         std::size_t vertex_budget = kDefaultVertexBudget);

struct VolumeRow {
    int radius;
    std::int64_t volume;
    std::int64_t doubled_volume;
    Rational doubling_ratio;     // |B_2r| / |B_r|
    Rational normalized_volume;  // |B_r| / r^m
};
std::vector<VolumeRow> measure_volume_doubling(const AbelianGroup& g, const GeneratingSet& s,
                                               const std::vector<int>& radii,
                                               std::size_t vertex_budget = kDefaultVertexBudget);

struct MetricComparison {
    Rational low;
    Rational high;
};

// Empirical bi-Lipschitz constants at scale r: extremes of
// d^{S2}(0,y) / d^{S1}(0,y) over y in B_r^{S1}(0) minus the origin.
MetricComparison compare_word_metrics(const AbelianGroup& g, const GeneratingSet& s1,
                                      const GeneratingSet& s2, int radius,
                                      std::size_t vertex_budget = kDefaultVertexBudget);

// Same extremes over an explicit sample set.
MetricComparison compare_word_metrics_over(const AbelianGroup& g, const GeneratingSet& s1,
                                           const GeneratingSet& s2,
                                           const std::vector<GroupElement>& samples,
                                           std::size_t vertex_budget = kDefaultVertexBudget);

// Multiedge-aware neighbor lists for the members of a ball. Neighbor ids
// refer to the ball's combined member+boundary indexing; self-loops are
// dropped (they never contribute to the Laplacian or the gradient).
struct BallGraph {
    int interior = 0;
    int degree = 0;
    std::vector<std::vector<std::int32_t>> neighbors;
};
BallGraph build_ball_graph(const Ball& ball);

// Values on every vertex of a ball (members and boundary), exact or floating.
class BallFunction {
public:
    enum class Mode { exact, real };

    BallFunction(std::shared_ptr<const Ball> domain, Mode mode);

    Mode mode() const { return mode_; }
    const Ball& domain() const { return *domain_; }
    const std::shared_ptr<const Ball>& domain_ptr() const { return domain_; }

    Rational& exact_at(std::int32_t id) { return exact_[id]; }
    const Rational& exact_at(std::int32_t id) const { return exact_[id]; }
    double& real_at(std::int32_t id) { return real_[id]; }
    double real_at(std::int32_t id) const { return real_[id]; }

    const Rational& exact_value(const GroupElement& e) const;
    double real_value(const GroupElement& e) const;

private:
    std::shared_ptr<const Ball> domain_;
    Mode mode_;
    std::vector<Rational> exact_;
    std::vector<double> real_;
};

}  // namespace polyharm
