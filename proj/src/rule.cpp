#include "brickwall/rule.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace brickwall {

bool substitution_rule::deterministic() const
{
    if (engine == engine_kind::block)
        return true;
    return std::all_of(images.begin(), images.end(), [](const auto& options) { return options.size() == 1; });
}

std::optional<std::size_t> substitution_rule::find_type(std::string_view id) const
{
    for (std::size_t i = 0; i < types.size(); ++i)
        if (types[i].id == id)
            return i;
    return std::nullopt;
}

std::size_t substitution_rule::type_index(std::string_view id) const
{
    if (auto i = find_type(id))
        return *i;
    throw error("unknown brick type '" + std::string(id) + "' in rule '" + name + "'");
}

parse_error::parse_error(const std::string& message, int line, int column)
    : error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message)
    , line_(line)
    , column_(column)
{
}

namespace {

std::string join_lines(const std::vector<std::string>& lines)
{
    std::string out;
    for (const auto& l : lines) {
        if (!out.empty())
            out += "; ";
        out += l;
    }
    return out;
}

bool open_overlap(std::int64_t ax, std::int64_t ay, const brick_type& a,
                  std::int64_t bx, std::int64_t by, const brick_type& b)
{
    return ax < bx + b.width && bx < ax + a.width && ay < by + b.height && by < ay + a.height;
}

void validate_geometric(const substitution_rule& rule, std::vector<std::string>& out)
{
    if (rule.images.size() != rule.types.size()) {
        out.push_back("image table does not match the brick alphabet");
        return;
    }
    for (std::size_t t = 0; t < rule.types.size(); ++t) {
        const auto& type = rule.types[t];
        const auto& options = rule.images[t];
        if (options.empty()) {
            out.push_back("type " + type.id + ": no image");
            continue;
        }
        rational total = 0;
        for (std::size_t k = 0; k < options.size(); ++k) {
            const auto& opt = options[k];
            std::string where = "type " + type.id + (options.size() > 1 ? " option " + std::to_string(k) : "");
            if (opt.prob.value < 0 || opt.prob.value > 1)
                out.push_back(where + ": probability " + short_string(opt.prob.value) + " outside [0,1]");
            total += opt.prob.value;

            bool indices_ok = true;
            std::int64_t area = 0;
            for (const auto& pl : opt.placements) {
                if (pl.type >= rule.types.size()) {
                    out.push_back(where + ": placement refers to unknown type index " + std::to_string(pl.type));
                    indices_ok = false;
                    continue;
                }
                area += rule.types[pl.type].area();
            }
            if (!indices_ok)
                continue;
            const std::int64_t expected = rule.expansion() * type.area();
            if (area != expected)
                out.push_back(where + ": area " + std::to_string(area) + " ≠ " + std::to_string(expected));

            for (std::size_t i = 0; i < opt.placements.size(); ++i) {
                for (std::size_t j = i + 1; j < opt.placements.size(); ++j) {
                    const auto& a = opt.placements[i];
                    const auto& b = opt.placements[j];
                    if (open_overlap(a.dx, a.dy, rule.types[a.type], b.dx, b.dy, rule.types[b.type])) {
                        std::ostringstream s;
                        s << where << ": " << rule.types[a.type].id << "@(" << a.dx << "," << a.dy << ") overlaps "
                          << rule.types[b.type].id << "@(" << b.dx << "," << b.dy << ")";
                        out.push_back(s.str());
                    }
                }
            }
        }
        if (total != 1)
            out.push_back("type " + type.id + ": probabilities sum to " + short_string(total));
    }
}

void validate_block(const substitution_rule& rule, std::vector<std::string>& out)
{
    if (rule.blocks.size() != rule.types.size()) {
        out.push_back("block table does not match the letter alphabet");
        return;
    }
    for (std::size_t t = 0; t < rule.types.size(); ++t) {
        const auto& type = rule.types[t];
        if (type.height != 1)
            out.push_back("letter " + type.id + ": block engine needs height 1, got " + std::to_string(type.height));
        const auto& rows = rule.blocks[t].rows;
        if (static_cast<std::int64_t>(rows.size()) != rule.lambda2)
            out.push_back("letter " + type.id + ": " + std::to_string(rows.size()) + " rows, expected " +
                          std::to_string(rule.lambda2));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<std::int64_t>(rows[r].size()) != rule.lambda1)
                out.push_back("letter " + type.id + " row " + std::to_string(r) + ": " + std::to_string(rows[r].size()) +
                              " letters, expected " + std::to_string(rule.lambda1));
            for (auto letter : rows[r])
                if (letter >= rule.types.size())
                    out.push_back("letter " + type.id + " row " + std::to_string(r) + ": unknown letter index");
        }
    }
}

}

rule_error::rule_error(std::vector<std::string> diagnostics)
    : error(join_lines(diagnostics))
    , diagnostics_(std::move(diagnostics))
{
}

std::vector<std::string> validate_rule(const substitution_rule& rule)
{
    std::vector<std::string> out;
    if (rule.lambda1 < 1 || rule.lambda2 < 1)
        out.push_back("expansion factors must be positive");
    if (rule.types.empty())
        out.push_back("rule has no brick types");

    std::set<std::string> seen;
    for (const auto& t : rule.types) {
        if (!seen.insert(t.id).second)
            out.push_back("duplicate type id " + t.id);
        if (t.width < 1 || t.height < 1)
            out.push_back("type " + t.id + ": non-positive dimension");
    }
    if (rule.parametric && !rule.parameter)
        out.push_back("parametric rule has no bound value of p");
    if (!out.empty())
        return out;

    if (rule.engine == engine_kind::geometric)
        validate_geometric(rule, out);
    else
        validate_block(rule, out);
    return out;
}

substitution_rule bind_parameter(substitution_rule rule, const rational& p)
{
    if (!rule.parametric)
        throw error("rule '" + rule.name + "' has no parameter p");
    if (p < 0 || p > 1)
        throw error("p = " + short_string(p) + " is outside [0,1]");
    for (auto& options : rule.images) {
        for (auto& opt : options) {
            if (opt.prob.form == prob_form::param)
                opt.prob.value = p;
            else if (opt.prob.form == prob_form::one_minus_param)
                opt.prob.value = 1 - p;
        }
    }
    rule.parameter = p;
    return rule;
}

const std::vector<std::string>& default_palette()
{
    // Warm brick tones.
    static const std::vector<std::string> palette{
        "#ff9900", "#cc6633", "#c67339", "#ff6600", "#a0522d", "#d2691e", "#8b4513", "#e9967a",
    };
    return palette;
}

}
