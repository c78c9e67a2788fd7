#include "polyharm/cayley.hpp"

#include <algorithm>
#include <set>

#include "polyharm/errors.hpp"

namespace polyharm {

namespace {

// Distinct nonzero steps; multiplicity matters for edges, not membership.
std::vector<GroupElement> distinct_steps(const GeneratingSet& s) {
    std::vector<GroupElement> steps;
    for (const auto& e : s.elements()) {
        if (!e.is_zero()) steps.push_back(e);
    }
    std::sort(steps.begin(), steps.end());
    steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
    return steps;
}

}  // namespace

const GroupElement& Ball::vertex(std::int32_t id) const {
    const auto n = static_cast<std::int32_t>(members_.size());
    return id < n ? members_[id] : boundary_[id - n];
}

std::optional<std::int32_t> Ball::index_of(const GroupElement& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Ball make_ball(const AbelianGroup& g, const GeneratingSet& s, const GroupElement& center,
               int radius, std::size_t vertex_budget) {
    if (radius < 0) throw validation_error("ball radius must be nonnegative");
    Ball ball(g, s, center, radius);
    const auto steps = distinct_steps(s);

    std::map<GroupElement, int> distance;
    distance.emplace(center, 0);
    std::vector<GroupElement> layer{center};
    ball.members_.push_back(center);
    ball.member_distances_.push_back(0);

    for (int d = 0; d < radius && !layer.empty(); ++d) {
        std::vector<GroupElement> next;
        for (const auto& x : layer) {
            for (const auto& step : steps) {
                GroupElement y = add(g, x, step);
                if (distance.emplace(y, d + 1).second) next.push_back(std::move(y));
            }
        }
        std::sort(next.begin(), next.end());
        if (ball.members_.size() + next.size() > vertex_budget) {
            throw budget_error("ball exceeds the vertex budget of " + std::to_string(vertex_budget));
        }
        for (const auto& y : next) {
            ball.members_.push_back(y);
            ball.member_distances_.push_back(d + 1);
        }
        layer = std::move(next);
    }

    // Exterior boundary: unseen neighbors of the outermost layer.
    std::set<GroupElement> boundary;
    for (const auto& x : layer) {
        for (const auto& step : steps) {
            GroupElement y = add(g, x, step);
            if (!distance.count(y)) boundary.insert(std::move(y));
        }
    }
    if (ball.members_.size() + boundary.size() > vertex_budget) {
        throw budget_error("ball boundary exceeds the vertex budget of " + std::to_string(vertex_budget));
    }
    ball.boundary_.assign(boundary.begin(), boundary.end());

    std::int32_t id = 0;
    for (const auto& e : ball.members_) ball.index_.emplace(e, id++);
    for (const auto& e : ball.boundary_) ball.index_.emplace(e, id++);
    return ball;
}

namespace {

// BFS distances from the origin until every target is labelled.
std::map<GroupElement, int> multi_target_distances(const AbelianGroup& g, const GeneratingSet& s,
                                                   const std::set<GroupElement>& targets,
                                                   std::size_t vertex_budget) {
    const auto steps = distinct_steps(s);
    const GroupElement origin = zero_element(g);
    std::map<GroupElement, int> distance;
    distance.emplace(origin, 0);
    std::size_t remaining = targets.size() - targets.count(origin);
    std::vector<GroupElement> layer{origin};
    int d = 0;
    while (remaining > 0) {
        if (layer.empty()) {
            throw budget_error("targets are unreachable; is the generating set valid?");
        }
        std::vector<GroupElement> next;
        for (const auto& x : layer) {
            for (const auto& step : steps) {
                GroupElement y = add(g, x, step);
                if (distance.emplace(y, d + 1).second) {
                    if (targets.count(y)) --remaining;
                    next.push_back(std::move(y));
                }
            }
        }
        if (distance.size() > vertex_budget) {
            throw budget_error("distance search exceeds the vertex budget of " +
                               std::to_string(vertex_budget));
        }
        layer = std::move(next);
        ++d;
    }
    return distance;
}

}  // namespace

int word_distance(const AbelianGroup& g, const GeneratingSet& s, const GroupElement& x,
                  const GroupElement& y, std::size_t vertex_budget) {
    // Translation invariance: d(x, y) = d(0, y - x).
    GroupElement target = subtract(g, y, x);
    if (target.is_zero()) return 0;
    auto distances = multi_target_distances(g, s, {target}, vertex_budget);
    return distances.at(target);
}

std::int64_t ball_volume(const AbelianGroup& g, const GeneratingSet& s, int radius,
                         std::size_t vertex_budget) {
    return make_ball(g, s, zero_element(g), radius, vertex_budget).volume();
}

std::vector<VolumeRow> measure_volume_doubling(const AbelianGroup& g, const GeneratingSet& s,
                                               const std::vector<int>& radii,
                                               std::size_t vertex_budget) {
    std::vector<VolumeRow> rows;
    for (int r : radii) {
        if (r < 1) throw validation_error("volume sweep radii must be >= 1");
        VolumeRow row;
        row.radius = r;
        row.volume = ball_volume(g, s, r, vertex_budget);
        row.doubled_volume = ball_volume(g, s, 2 * r, vertex_budget);
        row.doubling_ratio = make_rational(Int(row.doubled_volume), Int(row.volume));
        Int rm = int_pow(Int(r), static_cast<unsigned>(g.free_rank));
        row.normalized_volume = make_rational(Int(row.volume), rm);
        rows.push_back(std::move(row));
    }
    return rows;
}

MetricComparison compare_word_metrics_over(const AbelianGroup& g, const GeneratingSet& s1,
                                           const GeneratingSet& s2,
                                           const std::vector<GroupElement>& samples,
                                           std::size_t vertex_budget) {
    std::set<GroupElement> targets;
    for (const auto& y : samples) {
        if (!y.is_zero()) targets.insert(y);
    }
    if (targets.empty()) throw validation_error("metric comparison needs a nonzero sample");
    auto d1 = multi_target_distances(g, s1, targets, vertex_budget);
    auto d2 = multi_target_distances(g, s2, targets, vertex_budget);
    MetricComparison out;
    bool first = true;
    for (const auto& y : targets) {
        Rational ratio = make_rational(Int(d2.at(y)), Int(d1.at(y)));
        if (first || ratio < out.low) out.low = ratio;
        if (first || ratio > out.high) out.high = ratio;
        first = false;
    }
    return out;
}

MetricComparison compare_word_metrics(const AbelianGroup& g, const GeneratingSet& s1,
                                      const GeneratingSet& s2, int radius,
                                      std::size_t vertex_budget) {
    if (radius < 1) throw validation_error("metric comparison radius must be >= 1");
    Ball b = make_ball(g, s1, zero_element(g), radius, vertex_budget);
    return compare_word_metrics_over(g, s1, s2, b.members(), vertex_budget);
}

BallGraph build_ball_graph(const Ball& ball) {
    BallGraph graph;
    graph.interior = static_cast<int>(ball.members().size());
    graph.degree = static_cast<int>(ball.gens().size() - ball.gens().zero_multiplicity());
    graph.neighbors.resize(ball.members().size());
    const AbelianGroup& g = ball.group();
    for (std::size_t i = 0; i < ball.members().size(); ++i) {
        auto& list = graph.neighbors[i];
        list.reserve(graph.degree);
        for (const auto& step : ball.gens().elements()) {
            if (step.is_zero()) continue;
            auto id = ball.index_of(add(g, ball.members()[i], step));
            if (!id) throw consistency_error("ball is missing a neighbor of one of its members");
            list.push_back(*id);
        }
    }
    return graph;
}

BallFunction::BallFunction(std::shared_ptr<const Ball> domain, Mode mode)
    : domain_(std::move(domain)), mode_(mode) {
    const std::size_t n = domain_->vertex_count();
    if (mode_ == Mode::exact) {
        exact_.assign(n, Rational(0));
    } else {
        real_.assign(n, 0.0);
    }
}

const Rational& BallFunction::exact_value(const GroupElement& e) const {
    auto id = domain_->index_of(e);
    if (!id) throw validation_error("function is not defined at the requested vertex");
    return exact_[*id];
}

double BallFunction::real_value(const GroupElement& e) const {
    auto id = domain_->index_of(e);
    if (!id) throw validation_error("function is not defined at the requested vertex");
    return real_[*id];
}

}  // namespace polyharm
