#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "brickwall/engine.hpp"
#include "brickwall/joints.hpp"
#include "brickwall/render.hpp"
#include "brickwall/report.hpp"
#include "brickwall/rule.hpp"
#include "brickwall/spectral.hpp"
#include "brickwall/stats.hpp"

namespace brickwall {

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct options {
    std::string rule;
    std::string seed_brick;
    int n = 0;
    std::optional<std::uint64_t> rng_seed;
    std::optional<std::string> p;
    std::string out;
    bool json = false;
    bool interior = false;
    int trials = default_trials;
    unsigned threads = 0;
    double cell_size = 20;
};

std::optional<rational> parameter(const options& o)
{
    if (!o.p)
        return std::nullopt;
    try {
        return parse_rational(*o.p);
    }
    catch (const error& e) {
        throw usage_error(std::string("-p: ") + e.what());
    }
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw usage_error("unknown rule '" + path + "' (not a builtin and not a readable file)");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string rule_source(const std::string& name)
{
    if (is_builtin(name))
        return std::string(builtin_source(name));
    return read_file(name);
}

// Parameter binding problems are usage errors; anything the rule itself gets
// wrong is a diagnostic.
substitution_rule load_rule(const options& o)
{
    const std::string src = rule_source(o.rule);
    const auto p = parameter(o);
    substitution_rule rule;
    try {
        rule = parse_rule_unchecked(src, p);
    }
    catch (const parse_error&) {
        throw;
    }
    catch (const error& e) {
        throw usage_error(e.what());
    }
    auto diagnostics = validate_rule(rule);
    if (!diagnostics.empty())
        throw rule_error(std::move(diagnostics));
    return rule;
}

void require_brick(const substitution_rule& rule, const std::string& id)
{
    if (!rule.find_type(id))
        throw usage_error("unknown brick '" + id + "' in rule '" + rule.name + "'");
}

bool ends_with(const std::string& s, const std::string& suffix)
{
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int cmd_generate(const options& o, std::ostream& out)
{
    const bool svg = ends_with(o.out, ".svg");
    if (!svg && !ends_with(o.out, ".txt"))
        throw usage_error("--out must end in .svg or .txt");
    auto rule = load_rule(o);
    require_brick(rule, o.seed_brick);
    auto p = generate(rule, o.seed_brick, o.n, o.rng_seed);
    render_style style;
    style.cell_size = o.cell_size;
    const std::string doc = svg ? to_svg(p, style) : to_text(p);

    std::ofstream file(o.out, std::ios::binary);
    if (!file || !(file << doc))
        throw error("cannot write " + o.out);
    out << "wrote " << p.size() << " bricks to " << o.out << "\n";
    return 0;
}

int cmd_analyze(const options& o, std::ostream& out)
{
    auto rule = load_rule(o);
    require_brick(rule, o.seed_brick);
    auto p = generate(rule, o.seed_brick, o.n, o.rng_seed);
    auto report = vertical_joints(p, o.interior ? joint_mode::interior : joint_mode::all_edges);
    auto doc = joint_report_json(report, rule);
    if (rule.deterministic())
        doc["prop2"] = prop2_json(check_prop2(rule, o.n, o.seed_brick));

    if (o.json) {
        out << doc.dump(2) << "\n";
        return 0;
    }
    out << "rule " << rule.name << ", seed " << o.seed_brick << ", n = " << o.n << ": " << p.size() << " bricks\n";
    out << "v_max = " << report.v_max << " (" << report.joints.size() << " joints)\n";
    for (auto& [key, value] : doc["crossings"].items())
        out << "crossing " << key << ": " << (value.get<bool>() ? "yes" : "no") << "\n";
    if (doc.contains("prop2")) {
        const auto& v = doc["prop2"];
        out << "bound 2 j* (l2 - 1) = " << v["bound"] << ", measured max over n <= " << o.n << " = "
            << v["measured_max"] << ", hypothesis " << (v["hypothesis_holds"].is_null() ? "n/a" : v["hypothesis_holds"].dump())
            << ", respected " << v["bound_respected"] << "\n";
    }
    return 0;
}

int cmd_validate(const options& o, std::ostream& out)
{
    const std::string src = rule_source(o.rule);
    substitution_rule rule;
    try {
        rule = parse_rule_unchecked(src, parameter(o));
    }
    catch (const parse_error& e) {
        out << e.what() << "\n";
        return 1;
    }
    catch (const usage_error&) {
        throw;
    }
    catch (const error& e) {
        throw usage_error(e.what());
    }
    auto diagnostics = validate_rule(rule);
    for (const auto& d : diagnostics)
        out << d << "\n";
    if (!diagnostics.empty())
        return 1;
    out << rule.name << ": ok\n";
    return 0;
}

int cmd_spectrum(const options& o, std::ostream& out)
{
    auto rule = load_rule(o);
    out << spectrum_json(rule).dump(2) << "\n";
    return 0;
}

int cmd_count(const options& o, std::ostream& out)
{
    auto rule = load_rule(o);
    require_brick(rule, o.seed_brick);
    if (o.n < 0)
        throw usage_error("-n must be non-negative");
    const auto n = static_cast<unsigned>(o.n);
    nlohmann::json doc;
    doc["rule"] = rule.name;
    doc["seed_brick"] = o.seed_brick;
    doc["n"] = o.n;
    doc["bricks"] = to_string(count_bricks(rule, o.seed_brick, n));
    doc["realizations"] = to_string(count_realizations(rule, o.seed_brick, n));
    out << doc.dump(2) << "\n";
    return 0;
}

int cmd_sample(const options& o, std::ostream& out)
{
    auto rule = load_rule(o);
    require_brick(rule, o.seed_brick);
    if (o.trials < 1)
        throw usage_error("--trials must be at least 1");
    auto stats = sample_vmax(rule, o.seed_brick, o.n, o.trials, o.rng_seed.value_or(0), o.threads);
    out << stats_json(stats).dump(2) << "\n";
    return 0;
}

}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Polymetric brick wall patterns from two-dimensional substitutions"};
    app.require_subcommand(1);
    options o;

    auto add_rule = [&](CLI::App* sub) {
        sub->add_option("--rule", o.rule, "builtin rule name or rule file")->required();
        sub->add_option("-p", o.p, "value of the parameter p as num/den");
    };
    auto add_seed = [&](CLI::App* sub) {
        sub->add_option("--seed-brick", o.seed_brick, "brick type to start from")->required();
        sub->add_option("-n", o.n, "number of substitution steps")->required()->check(CLI::NonNegativeNumber);
    };

    auto* gen = app.add_subcommand("generate", "write a pattern as SVG or text");
    add_rule(gen);
    add_seed(gen);
    gen->add_option("--rng-seed", o.rng_seed, "seed for random rules");
    gen->add_option("--out", o.out, "output file (.svg or .txt)")->required();
    gen->add_option("--cell-size", o.cell_size, "SVG units per lattice cell")->check(CLI::PositiveNumber);

    auto* analyze = app.add_subcommand("analyze", "vertical joints, v_max and crossings");
    add_rule(analyze);
    add_seed(analyze);
    analyze->add_option("--rng-seed", o.rng_seed, "seed for random rules");
    analyze->add_flag("--json", o.json, "print the report as JSON");
    analyze->add_flag("--interior", o.interior, "count only joints with bricks on both sides");

    auto* validate = app.add_subcommand("validate", "check a rule file");
    add_rule(validate);

    auto* spectrum = app.add_subcommand("spectrum", "substitution matrix, eigenvalue and frequencies");
    add_rule(spectrum);

    auto* count = app.add_subcommand("count", "exact brick and realization counts");
    add_rule(count);
    add_seed(count);

    auto* sample = app.add_subcommand("sample", "Monte-Carlo sample of v_max");
    add_rule(sample);
    add_seed(sample);
    sample->add_option("--trials", o.trials, "number of trials")->check(CLI::PositiveNumber);
    sample->add_option("--rng-seed", o.rng_seed, "base seed")->required();
    sample->add_option("--threads", o.threads, "worker threads (0: hardware concurrency)");

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen)
            return cmd_generate(o, out);
        if (*analyze)
            return cmd_analyze(o, out);
        if (*validate)
            return cmd_validate(o, out);
        if (*spectrum)
            return cmd_spectrum(o, out);
        if (*count)
            return cmd_count(o, out);
        if (*sample)
            return cmd_sample(o, out);
    }
    catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}
