#include "brickwall/engine.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace brickwall {

namespace {

__extension__ typedef unsigned __int128 u128;

// Cumulative option thresholds scaled to 2^64: draw u picks the first option k
// with u < ceil(c_k * 2^64), i.e. u / 2^64 < c_k.
std::vector<std::vector<u128>> option_thresholds(const substitution_rule& rule)
{
    const mpz_class two64 = mpz_class(1) << 64;
    std::vector<std::vector<u128>> out(rule.images.size());
    for (std::size_t t = 0; t < rule.images.size(); ++t) {
        rational cumulative = 0;
        for (const auto& opt : rule.images[t]) {
            cumulative += opt.prob.value;
            mpz_class scaled = cumulative.get_num() * two64;
            mpz_class q;
            mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), cumulative.get_den().get_mpz_t());
            if (q > two64)
                q = two64;
            mpz_class hi = q >> 64;
            mpz_class lo = q - (hi << 64);
            out[t].push_back((static_cast<u128>(hi.get_ui()) << 64) | static_cast<u128>(lo.get_ui()));
        }
    }
    return out;
}

bool brick_less(const brick& a, const brick& b)
{
    if (a.y != b.y)
        return a.y < b.y;
    if (a.x != b.x)
        return a.x < b.x;
    return a.type < b.type;
}

void check_depth(int n, int max_depth)
{
    if (n < 0)
        throw generation_error("depth must be non-negative, got " + std::to_string(n));
    if (n > max_depth)
        throw generation_error("depth " + std::to_string(n) + " exceeds the cap of " + std::to_string(max_depth));
}

pattern substitute_with(const substitution_rule& rule, const pattern& in, splitmix64* rng,
                        const std::vector<std::vector<u128>>& thresholds)
{
    if (rule.engine != engine_kind::geometric)
        throw generation_error("rule '" + rule.name + "' uses the block engine");

    const pattern* src = &in;
    pattern sorted;
    if (!std::is_sorted(in.bricks.begin(), in.bricks.end(), brick_less)) {
        sorted = in;
        sort_bricks(sorted);
        src = &sorted;
    }

    pattern out;
    out.rule_name = in.rule_name;
    out.types = rule.types;
    out.level = in.level + 1;
    out.seed_type = in.seed_type;
    out.rng_seed = in.rng_seed;

    for (const auto& b : src->bricks) {
        if (b.type >= rule.images.size())
            throw generation_error("brick type index " + std::to_string(b.type) + " is not in rule '" + rule.name + "'");
        const auto& options = rule.images[b.type];
        std::size_t choice = 0;
        if (options.size() > 1) {
            if (rng == nullptr)
                throw generation_error("rule '" + rule.name + "' is random; an rng seed is required");
            const u128 draw = (*rng)();
            const auto& cut = thresholds[b.type];
            while (choice + 1 < cut.size() && draw >= cut[choice])
                ++choice;
        }
        const std::int64_t ax = rule.lambda1 * b.x;
        const std::int64_t ay = rule.lambda2 * b.y;
        for (const auto& pl : options[choice].placements)
            out.bricks.push_back({pl.type, ax + pl.dx, ay + pl.dy});
    }
    sort_bricks(out);
    if (auto clash = find_overlap(out)) {
        const auto& a = out.bricks[clash->first];
        const auto& b = out.bricks[clash->second];
        std::ostringstream s;
        s << "overlap at level " << out.level << ": " << out.types[a.type].id << "@(" << a.x << "," << a.y << ") and "
          << out.types[b.type].id << "@(" << b.x << "," << b.y << ")";
        throw generation_error(s.str());
    }
    return out;
}

}

std::int64_t pattern::area() const
{
    std::int64_t total = 0;
    for (const auto& b : bricks)
        total += types[b.type].area();
    return total;
}

bool operator==(const pattern& a, const pattern& b)
{
    if (a.rule_name != b.rule_name || a.level != b.level || a.seed_type != b.seed_type || a.rng_seed != b.rng_seed ||
        a.bricks.size() != b.bricks.size())
        return false;
    for (std::size_t i = 0; i < a.bricks.size(); ++i) {
        const auto& p = a.bricks[i];
        const auto& q = b.bricks[i];
        const auto& tp = a.types[p.type];
        const auto& tq = b.types[q.type];
        if (p.x != q.x || p.y != q.y || tp.id != tq.id || tp.width != tq.width || tp.height != tq.height)
            return false;
    }
    return true;
}

void sort_bricks(pattern& p)
{
    std::sort(p.bricks.begin(), p.bricks.end(), brick_less);
}

std::optional<std::pair<std::size_t, std::size_t>> find_overlap(const pattern& p)
{
    struct span {
        std::int64_t row;
        std::int64_t x0;
        std::int64_t x1;
        std::size_t index;
    };
    std::vector<span> spans;
    for (std::size_t i = 0; i < p.bricks.size(); ++i) {
        const auto& b = p.bricks[i];
        const auto& t = p.types[b.type];
        for (std::int64_t r = 0; r < t.height; ++r)
            spans.push_back({b.y + r, b.x, b.x + t.width, i});
    }
    std::sort(spans.begin(), spans.end(), [](const span& a, const span& b) {
        return a.row != b.row ? a.row < b.row : a.x0 < b.x0;
    });
    for (std::size_t i = 1; i < spans.size(); ++i) {
        // Sorted by left edge, a row is disjoint iff no span starts before its
        // predecessor ends.
        const auto& prev = spans[i - 1];
        const auto& cur = spans[i];
        if (prev.row == cur.row && cur.x0 < prev.x1)
            return std::pair{prev.index, cur.index};
    }
    return std::nullopt;
}

pattern seed_pattern(const substitution_rule& rule, std::string_view seed_type)
{
    pattern p;
    p.rule_name = rule.name;
    p.types = rule.types;
    p.seed_type = std::string(seed_type);
    p.bricks.push_back({rule.type_index(seed_type), 0, 0});
    return p;
}

pattern substitute_once(const substitution_rule& rule, const pattern& in, splitmix64* rng)
{
    return substitute_with(rule, in, rng, option_thresholds(rule));
}

pattern iterate(const substitution_rule& rule, std::string_view seed_type, int n, std::optional<std::uint64_t> rng_seed,
                int max_depth)
{
    if (rule.engine != engine_kind::geometric)
        throw generation_error("rule '" + rule.name + "' uses the block engine; use iterate_block");
    check_depth(n, max_depth);
    const bool random = !rule.deterministic();
    if (random && !rng_seed)
        throw generation_error("rule '" + rule.name + "' is random; an rng seed is required");

    pattern p = seed_pattern(rule, seed_type);
    if (random)
        p.rng_seed = rng_seed;
    splitmix64 rng(rng_seed.value_or(0));
    const auto thresholds = option_thresholds(rule);
    for (int level = 0; level < n; ++level)
        p = substitute_with(rule, p, random ? &rng : nullptr, thresholds);
    return p;
}

letter_grid iterate_block(const substitution_rule& rule, std::string_view seed_letter, int n, int max_depth)
{
    if (rule.engine != engine_kind::block)
        throw generation_error("rule '" + rule.name + "' is not a block rule");
    check_depth(n, max_depth);
    letter_grid grid;
    grid.rows = {{static_cast<std::uint32_t>(rule.type_index(seed_letter))}};
    const auto l1 = static_cast<std::size_t>(rule.lambda1);
    const auto l2 = static_cast<std::size_t>(rule.lambda2);
    for (int level = 0; level < n; ++level) {
        const std::size_t cols = grid.columns();
        std::vector<std::vector<std::uint32_t>> next(grid.rows.size() * l2, std::vector<std::uint32_t>(cols * l1));
        for (std::size_t r = 0; r < grid.rows.size(); ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                const auto& image = rule.blocks[grid.rows[r][c]].rows;
                for (std::size_t i = 0; i < l2; ++i)
                    for (std::size_t j = 0; j < l1; ++j)
                        next[r * l2 + i][c * l1 + j] = static_cast<std::uint32_t>(image[i][j]);
            }
        }
        grid.rows = std::move(next);
        grid.level = level + 1;
    }
    return grid;
}

pattern render_grid(const substitution_rule& rule, const letter_grid& grid)
{
    pattern p;
    p.rule_name = rule.name;
    p.types = rule.types;
    p.level = grid.level;
    for (std::size_t r = 0; r < grid.rows.size(); ++r) {
        const auto row = static_cast<std::int64_t>(r);
        std::int64_t x = rule.skew * row;
        for (auto letter : grid.rows[r]) {
            p.bricks.push_back({letter, x, row});
            x += rule.types[letter].width;
        }
    }
    return p;
}

pattern generate(const substitution_rule& rule, std::string_view seed_type, int n, std::optional<std::uint64_t> rng_seed,
                 int max_depth)
{
    if (rule.engine == engine_kind::geometric)
        return iterate(rule, seed_type, n, rng_seed, max_depth);
    pattern p = render_grid(rule, iterate_block(rule, seed_type, n, max_depth));
    p.seed_type = std::string(seed_type);
    return p;
}

int ptm_oracle(std::uint64_t column, std::uint64_t row)
{
    return (std::popcount(column) + std::popcount(row)) % 2;
}

std::string to_text(const pattern& p)
{
    pattern sorted = p;
    sort_bricks(sorted);
    std::ostringstream out;
    out << "# rule=" << p.rule_name << " n=" << p.level << " seed=";
    if (p.rng_seed)
        out << *p.rng_seed;
    else
        out << "-";
    out << " seed_brick=" << (p.seed_type.empty() ? "-" : p.seed_type) << "\n";
    for (const auto& b : sorted.bricks) {
        const auto& t = p.types[b.type];
        out << t.id << " " << b.x << " " << b.y << " " << t.width << " " << t.height << "\n";
    }
    return out.str();
}

namespace {

template <typename T>
T parse_number(std::string_view s, int line)
{
    T v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw error("pattern line " + std::to_string(line) + ": bad number '" + std::string(s) + "'");
    return v;
}

}

pattern parse_pattern_text(std::string_view text)
{
    pattern p;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        std::istringstream fields(line);
        if (line[0] == '#') {
            if (header_seen)
                continue;
            header_seen = true;
            std::string token;
            fields >> token; // '#'
            while (fields >> token) {
                auto eq = token.find('=');
                if (eq == std::string::npos)
                    continue;
                std::string key = token.substr(0, eq);
                std::string value = token.substr(eq + 1);
                if (key == "rule")
                    p.rule_name = value;
                else if (key == "n")
                    p.level = parse_number<int>(value, line_no);
                else if (key == "seed" && value != "-")
                    p.rng_seed = parse_number<std::uint64_t>(value, line_no);
                else if (key == "seed_brick" && value != "-")
                    p.seed_type = value;
            }
            continue;
        }
        std::string id, xs, ys, ws, hs, extra;
        if (!(fields >> id >> xs >> ys >> ws >> hs) || (fields >> extra))
            throw error("pattern line " + std::to_string(line_no) + ": expected 'type_id x y width height'");
        brick_type t{id, parse_number<std::int64_t>(ws, line_no), parse_number<std::int64_t>(hs, line_no), ""};
        if (t.width < 1 || t.height < 1)
            throw error("pattern line " + std::to_string(line_no) + ": non-positive dimension");
        auto it = std::find_if(p.types.begin(), p.types.end(), [&](const brick_type& bt) { return bt.id == id; });
        std::size_t index = static_cast<std::size_t>(it - p.types.begin());
        if (it == p.types.end()) {
            p.types.push_back(t);
        }
        else if (it->width != t.width || it->height != t.height) {
            throw error("pattern line " + std::to_string(line_no) + ": type '" + id + "' changes size");
        }
        p.bricks.push_back({index, parse_number<std::int64_t>(xs, line_no), parse_number<std::int64_t>(ys, line_no)});
    }
    sort_bricks(p);
    return p;
}

}
