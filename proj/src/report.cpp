#include "brickwall/report.hpp"

namespace brickwall {

using nlohmann::json;

json joint_report_json(const joint_report& report, const substitution_rule& rule)
{
    json out;
    out["v_max"] = report.v_max;
    out["joints"] = json::array();
    for (const auto& j : report.joints)
        out["joints"].push_back({{"x", j.x}, {"y0", j.y0}, {"y1", j.y1}});
    json crossings = json::object();
    if (rule.engine == engine_kind::geometric) {
        for (std::size_t t = 0; t < rule.types.size(); ++t) {
            const auto& options = rule.images[t];
            if (options.size() == 1) {
                crossings[rule.types[t].id] = option_has_crossing(rule, t, 0);
                continue;
            }
            for (std::size_t k = 0; k < options.size(); ++k)
                crossings[rule.types[t].id + "[" + std::to_string(k) + "]"] = option_has_crossing(rule, t, k);
        }
    }
    out["crossings"] = crossings;
    out["rule"] = report.rule_name;
    out["n"] = report.level;
    out["seed_brick"] = report.seed_type;
    out["rng_seed"] = report.rng_seed ? json(*report.rng_seed) : json(nullptr);
    out["bricks"] = report.brick_count;
    return out;
}

json prop2_json(const prop2_verdict& verdict)
{
    json out;
    out["hypothesis_holds"] = verdict.hypothesis_holds ? json(*verdict.hypothesis_holds) : json(nullptr);
    out["bound"] = verdict.bound;
    out["measured_max"] = verdict.measured_max;
    out["bound_respected"] = verdict.bound_respected;
    return out;
}

json spectrum_json(const substitution_rule& rule)
{
    const auto m = matrix(rule);
    json out;
    out["pf_eigenvalue"] = pf_eigenvalue(m);
    out["expected"] = static_cast<double>(rule.expansion());
    json freq = json::object();
    const auto f = brick_frequencies(m);
    for (std::size_t i = 0; i < f.size(); ++i)
        freq[m.order[i]] = f[i];
    out["frequencies"] = freq;
    json rows = json::array();
    for (const auto& row : m.entries) {
        json r = json::array();
        for (const auto& q : row)
            r.push_back(fraction_string(q));
        rows.push_back(r);
    }
    out["matrix"] = rows;
    out["order"] = m.order;
    out["area_identity"] = area_eigen_identity(m);
    return out;
}

json stats_json(const vmax_stats& stats)
{
    json out;
    out["p"] = stats.p ? json(fraction_string(*stats.p)) : json(nullptr);
    out["n"] = stats.n;
    out["trials"] = stats.trials;
    out["min"] = stats.min;
    out["max"] = stats.max;
    out["mean"] = stats.mean;
    json hist = json::object();
    for (const auto& [value, count] : stats.histogram)
        hist[std::to_string(value)] = count;
    out["histogram"] = hist;
    out["base_seed"] = stats.base_seed;
    return out;
}

}
