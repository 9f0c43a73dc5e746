#include "brickwall/joints.hpp"

#include <algorithm>
#include <set>

namespace brickwall {

namespace {

struct interval {
    std::int64_t lo;
    std::int64_t hi;
};

// Sorts and merges touching or overlapping intervals in place.
void merge(std::vector<interval>& v)
{
    std::sort(v.begin(), v.end(), [](const interval& a, const interval& b) { return a.lo < b.lo; });
    std::size_t out = 0;
    for (const auto& iv : v) {
        if (out > 0 && iv.lo <= v[out - 1].hi)
            v[out - 1].hi = std::max(v[out - 1].hi, iv.hi);
        else
            v[out++] = iv;
    }
    v.resize(out);
}

std::vector<interval> intersect(const std::vector<interval>& a, const std::vector<interval>& b)
{
    std::vector<interval> out;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        const std::int64_t lo = std::max(a[i].lo, b[j].lo);
        const std::int64_t hi = std::min(a[i].hi, b[j].hi);
        if (lo < hi)
            out.push_back({lo, hi});
        (a[i].hi < b[j].hi) ? ++i : ++j;
    }
    return out;
}

}

joint_report vertical_joints(const pattern& p, joint_mode mode)
{
    // Per abscissa: edges with the brick on their right (left edges) and on
    // their left (right edges).
    std::map<std::int64_t, std::pair<std::vector<interval>, std::vector<interval>>> edges;
    for (const auto& b : p.bricks) {
        const auto& t = p.type_of(b);
        edges[b.x].first.push_back({b.y, b.y + t.height});
        edges[b.x + t.width].second.push_back({b.y, b.y + t.height});
    }

    joint_report report;
    report.rule_name = p.rule_name;
    report.level = p.level;
    report.seed_type = p.seed_type;
    report.rng_seed = p.rng_seed;
    report.brick_count = p.bricks.size();

    for (auto& [x, sides] : edges) {
        auto& [right_of, left_of] = sides;
        merge(right_of);
        merge(left_of);
        std::vector<interval> segments;
        if (mode == joint_mode::interior) {
            // Non-overlap means a point on an edge is covered on its other side
            // only by a brick whose edge is also at x.
            segments = intersect(right_of, left_of);
            merge(segments);
        }
        else {
            segments = right_of;
            segments.insert(segments.end(), left_of.begin(), left_of.end());
            merge(segments);
        }
        for (const auto& s : segments) {
            report.joints.push_back({x, s.lo, s.hi});
            report.v_max = std::max(report.v_max, s.hi - s.lo);
        }
    }
    return report;
}

std::int64_t v_max_at(const substitution_rule& rule, std::string_view seed_type, int n,
                      std::optional<std::uint64_t> rng_seed)
{
    return vertical_joints(generate(rule, seed_type, n, rng_seed)).v_max;
}

bool option_has_crossing(const substitution_rule& rule, std::size_t type, std::size_t option)
{
    if (rule.engine != engine_kind::geometric)
        throw error("crossings are defined for geometric rules only");
    pattern image;
    image.types = rule.types;
    for (const auto& pl : rule.images.at(type).at(option).placements)
        image.bricks.push_back({pl.type, pl.dx, pl.dy});
    sort_bricks(image);

    std::set<std::pair<std::int64_t, std::int64_t>> cells;
    for (const auto& b : image.bricks) {
        const auto& t = image.type_of(b);
        for (std::int64_t i = 0; i < t.width; ++i)
            for (std::int64_t j = 0; j < t.height; ++j)
                cells.insert({b.x + i, b.y + j});
    }
    auto covered = [&](std::int64_t cx, std::int64_t cy) { return cells.count({cx, cy}) > 0; };

    for (const auto& j : vertical_joints(image, joint_mode::interior).joints) {
        const bool exits_below = !covered(j.x - 1, j.y0 - 1) && !covered(j.x, j.y0 - 1);
        const bool exits_above = !covered(j.x - 1, j.y1) && !covered(j.x, j.y1);
        if (exits_below && exits_above)
            return true;
    }
    return false;
}

std::vector<bool> crossings_by_option(const substitution_rule& rule, std::string_view type_id)
{
    const std::size_t t = rule.type_index(type_id);
    std::vector<bool> out;
    for (std::size_t k = 0; k < rule.images.at(t).size(); ++k)
        out.push_back(option_has_crossing(rule, t, k));
    return out;
}

bool has_crossing(const substitution_rule& rule, std::string_view type_id)
{
    auto v = crossings_by_option(rule, type_id);
    return std::any_of(v.begin(), v.end(), [](bool b) { return b; });
}

std::int64_t prop2_bound(const substitution_rule& rule)
{
    std::int64_t j_star = 0;
    for (const auto& t : rule.types)
        j_star = std::max(j_star, t.height);
    return 2 * j_star * (rule.lambda2 - 1);
}

prop2_verdict check_prop2(const substitution_rule& rule, int n_max, std::optional<std::string> seed_type)
{
    if (!rule.deterministic())
        throw error("check_prop2 needs a deterministic rule; '" + rule.name + "' is random");
    prop2_verdict v;
    v.bound = prop2_bound(rule);
    if (rule.engine == engine_kind::geometric) {
        bool holds = true;
        for (const auto& t : rule.types) {
            const bool c = has_crossing(rule, t.id);
            v.crossing[t.id] = c;
            holds = holds && !c;
        }
        v.hypothesis_holds = holds;
    }

    std::vector<std::string> seeds;
    if (seed_type)
        seeds.push_back(*seed_type);
    else
        for (const auto& t : rule.types)
            seeds.push_back(t.id);
    for (const auto& s : seeds)
        for (int n = 1; n <= n_max; ++n)
            v.measured_max = std::max(v.measured_max, v_max_at(rule, s, n));

    v.bound_respected = !v.hypothesis_holds.value_or(false) || v.measured_max <= v.bound;
    return v;
}

std::vector<rational> empirical_frequencies(const pattern& p)
{
    if (p.bricks.empty())
        throw error("frequencies of an empty pattern are undefined");
    std::vector<std::size_t> counts(p.types.size(), 0);
    for (const auto& b : p.bricks)
        ++counts[b.type];
    std::vector<rational> out;
    for (auto c : counts) {
        rational q(static_cast<unsigned long>(c), static_cast<unsigned long>(p.bricks.size()));
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

}
