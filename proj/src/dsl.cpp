// Line-oriented rule language:
//
//   rule <name>
//   engine geometric | engine block skew <int>
//   expansion <l1> <l2>
//   brick <id> <width> <height> [color #rrggbb]
//   image <id> [prob <num>/<den> | prob p | prob 1-p] { <id> @ <dx> <dy> ; ... }
//   block <id> { row: <id> ... ; row: ... }
//   end
//
// '#' starts a comment except directly after the `color` keyword. Newlines end
// statements; inside braces they are plain whitespace.

#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "brickwall/rule.hpp"

namespace brickwall {

namespace {

enum class tok { word, lbrace, rbrace, semi, at, newline, eof };

struct token {
    tok kind;
    std::string text;
    int line;
    int column;
};

bool is_word_char(char c)
{
    return !std::isspace(static_cast<unsigned char>(c)) && c != '{' && c != '}' && c != ';' && c != '@' && c != '#';
}

std::vector<token> lex(std::string_view src)
{
    std::vector<token> out;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            }
            else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '\n') {
            out.push_back({tok::newline, "\n", line, col});
            advance(1);
        }
        else if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
        }
        else if (c == '#') {
            if (!out.empty() && out.back().kind == tok::word && out.back().text == "color") {
                std::size_t j = i + 1;
                while (j < src.size() && std::isxdigit(static_cast<unsigned char>(src[j])))
                    ++j;
                out.push_back({tok::word, std::string(src.substr(i, j - i)), line, col});
                advance(j - i);
            }
            else {
                while (i < src.size() && src[i] != '\n')
                    advance(1);
            }
        }
        else if (c == '{' || c == '}' || c == ';' || c == '@') {
            tok k = c == '{' ? tok::lbrace : c == '}' ? tok::rbrace : c == ';' ? tok::semi : tok::at;
            out.push_back({k, std::string(1, c), line, col});
            advance(1);
        }
        else {
            std::size_t j = i;
            while (j < src.size() && is_word_char(src[j]))
                ++j;
            out.push_back({tok::word, std::string(src.substr(i, j - i)), line, col});
            advance(j - i);
        }
    }
    out.push_back({tok::eof, "", line, col});
    return out;
}

std::string describe(const token& t)
{
    switch (t.kind) {
    case tok::newline:
        return "end of line";
    case tok::eof:
        return "end of input";
    default:
        return "'" + t.text + "'";
    }
}

// A reference to a type id, resolved once the whole rule has been read.
struct ref {
    std::string id;
    int line;
    int column;
};

struct raw_placement {
    ref type;
    std::int64_t dx;
    std::int64_t dy;
};

struct raw_option {
    std::optional<probability> prob;
    std::vector<raw_placement> placements;
    int line;
    int column;
};

class parser {
public:
    parser(std::string_view src, std::optional<rational> p)
        : tokens_(lex(src))
        , p_(std::move(p))
    {
    }

    substitution_rule run()
    {
        skip_newlines();
        expect_keyword("rule");
        rule_.name = word("rule name").text;
        end_statement();

        bool ended = false;
        while (!ended) {
            skip_newlines();
            const token& t = peek();
            if (t.kind == tok::eof)
                fail("missing 'end'", t);
            if (t.kind != tok::word)
                fail("expected a statement, got " + describe(t), t);
            std::string kw = t.text;
            ++pos_;
            if (kw == "engine")
                engine_statement(t);
            else if (kw == "expansion")
                expansion_statement();
            else if (kw == "brick")
                brick_statement();
            else if (kw == "image")
                image_statement(t);
            else if (kw == "block")
                block_statement(t);
            else if (kw == "end")
                ended = true;
            else
                fail("unknown statement '" + kw + "'", t);
            end_statement();
        }
        skip_newlines();
        if (peek().kind != tok::eof)
            fail("unexpected " + describe(peek()) + " after 'end'", peek());
        return finish();
    }

private:
    const token& peek() const { return tokens_[pos_]; }

    const token& next()
    {
        const token& t = tokens_[pos_];
        if (t.kind != tok::eof)
            ++pos_;
        return t;
    }

    [[noreturn]] void fail(const std::string& msg, const token& t) const { throw parse_error(msg, t.line, t.column); }

    void skip_newlines()
    {
        while (peek().kind == tok::newline)
            ++pos_;
    }

    // Inside braces newlines are insignificant.
    const token& next_in_braces()
    {
        skip_newlines();
        return next();
    }

    void end_statement()
    {
        const token& t = peek();
        if (t.kind != tok::newline && t.kind != tok::eof)
            fail("expected end of line, got " + describe(t), t);
    }

    const token& word(const char* what)
    {
        const token& t = next();
        if (t.kind != tok::word)
            fail(std::string("expected ") + what + ", got " + describe(t), t);
        return t;
    }

    void expect_keyword(const char* kw)
    {
        const token& t = next();
        if (t.kind != tok::word || t.text != kw)
            fail(std::string("expected '") + kw + "', got " + describe(t), t);
    }

    void expect(tok kind, const char* what, bool in_braces)
    {
        const token& t = in_braces ? next_in_braces() : next();
        if (t.kind != kind)
            fail(std::string("expected ") + what + ", got " + describe(t), t);
    }

    std::int64_t integer(const token& t, const char* what)
    {
        std::int64_t v = 0;
        const char* first = t.text.data();
        const char* last = first + t.text.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (t.kind != tok::word || ec != std::errc{} || ptr != last)
            fail(std::string("expected ") + what + ", got " + describe(t), t);
        return v;
    }

    std::int64_t integer(const char* what) { return integer(next(), what); }

    std::int64_t positive(const char* what)
    {
        const token& t = next();
        std::int64_t v = integer(t, what);
        if (v < 1)
            fail(std::string("non-positive ") + what + " " + t.text, t);
        return v;
    }

    void engine_statement(const token& at)
    {
        if (engine_seen_)
            fail("duplicate 'engine' statement", at);
        engine_seen_ = true;
        const token& kind = word("engine kind");
        if (kind.text == "geometric") {
            rule_.engine = engine_kind::geometric;
        }
        else if (kind.text == "block") {
            rule_.engine = engine_kind::block;
            if (peek().kind == tok::word) {
                expect_keyword("skew");
                rule_.skew = integer("skew");
            }
        }
        else {
            fail("unknown engine '" + kind.text + "'", kind);
        }
    }

    void expansion_statement()
    {
        rule_.lambda1 = positive("expansion");
        rule_.lambda2 = positive("expansion");
        expansion_seen_ = true;
    }

    void brick_statement()
    {
        const token& id = word("brick id");
        brick_type bt;
        bt.id = id.text;
        bt.width = positive("width");
        bt.height = positive("height");
        if (peek().kind == tok::word) {
            expect_keyword("color");
            const token& c = word("color");
            bool ok = c.text.size() == 7 && c.text[0] == '#';
            if (!ok)
                fail("malformed color " + describe(c) + ", expected #rrggbb", c);
            bt.color = c.text;
        }
        if (rule_.find_type(bt.id))
            fail("duplicate type id '" + bt.id + "'", id);
        if (bt.color.empty())
            bt.color = default_palette()[rule_.types.size() % default_palette().size()];
        rule_.types.push_back(std::move(bt));
    }

    probability prob_expr()
    {
        const token& t = word("probability");
        if (t.text == "p" || t.text == "1-p") {
            rule_.parametric = true;
            return {t.text == "p" ? prob_form::param : prob_form::one_minus_param, 0};
        }
        try {
            return {prob_form::literal, parse_rational(t.text)};
        }
        catch (const error&) {
            fail("malformed probability " + describe(t), t);
        }
    }

    void image_statement(const token& at)
    {
        const token& id = word("brick id");
        raw_option opt{std::nullopt, {}, at.line, at.column};
        if (peek().kind == tok::word) {
            expect_keyword("prob");
            opt.prob = prob_expr();
        }
        expect(tok::lbrace, "'{'", false);
        for (;;) {
            const token& t = next_in_braces();
            if (t.kind == tok::rbrace)
                break;
            if (t.kind == tok::semi)
                continue;
            if (t.kind != tok::word)
                fail("expected a placement, got " + describe(t), t);
            raw_placement pl{{t.text, t.line, t.column}, 0, 0};
            expect(tok::at, "'@'", true);
            skip_newlines();
            pl.dx = integer("x offset");
            skip_newlines();
            pl.dy = integer("y offset");
            opt.placements.push_back(std::move(pl));
            const token& sep = peek();
            if (sep.kind != tok::semi && sep.kind != tok::rbrace && sep.kind != tok::newline)
                fail("expected ';' or '}', got " + describe(sep), sep);
        }
        images_[id.text].push_back(std::move(opt));
        image_refs_.push_back({id.text, id.line, id.column});
    }

    void block_statement(const token& at)
    {
        const token& id = word("letter id");
        if (blocks_.count(id.text))
            fail("duplicate block for '" + id.text + "'", id);
        image_refs_.push_back({id.text, id.line, id.column});
        auto& rows = blocks_[id.text];
        expect(tok::lbrace, "'{'", false);
        for (;;) {
            const token& t = next_in_braces();
            if (t.kind == tok::rbrace)
                break;
            if (t.kind == tok::semi)
                continue;
            if (t.kind != tok::word || t.text != "row:")
                fail("expected 'row:', got " + describe(t), t);
            std::vector<ref> row;
            while (peek().kind == tok::word || peek().kind == tok::newline) {
                if (peek().kind == tok::newline) {
                    ++pos_;
                    continue;
                }
                if (peek().text == "row:")
                    fail("missing ';' before 'row:'", peek());
                const token& letter = next();
                row.push_back({letter.text, letter.line, letter.column});
            }
            rows.push_back(std::move(row));
        }
        (void)at;
    }

    std::size_t resolve(const ref& r)
    {
        if (auto i = rule_.find_type(r.id))
            return *i;
        throw parse_error("unknown type '" + r.id + "'", r.line, r.column);
    }

    substitution_rule finish()
    {
        if (!expansion_seen_)
            throw parse_error("missing 'expansion' statement", tokens_.back().line, tokens_.back().column);
        for (const auto& r : image_refs_)
            resolve(r);

        if (rule_.engine == engine_kind::geometric) {
            if (!blocks_.empty())
                throw parse_error("'block' statement in a geometric rule", image_refs_.front().line,
                                  image_refs_.front().column);
            rule_.images.resize(rule_.types.size());
            for (auto& [id, options] : images_) {
                auto t = *rule_.find_type(id);
                std::size_t explicit_probs = 0;
                for (const auto& o : options)
                    explicit_probs += o.prob.has_value();
                if (explicit_probs != 0 && explicit_probs != options.size())
                    throw parse_error("type '" + id + "': either every option or none must carry 'prob'",
                                      options.front().line, options.front().column);
                for (auto& o : options) {
                    image_option opt;
                    opt.prob = o.prob.value_or(probability{prob_form::literal, rational(1, options.size())});
                    opt.prob.value.canonicalize();
                    for (const auto& pl : o.placements)
                        opt.placements.push_back({resolve(pl.type), pl.dx, pl.dy});
                    rule_.images[t].push_back(std::move(opt));
                }
            }
        }
        else {
            if (!images_.empty())
                throw parse_error("'image' statement in a block rule", image_refs_.front().line,
                                  image_refs_.front().column);
            rule_.blocks.resize(rule_.types.size());
            for (auto& [id, rows] : blocks_) {
                auto t = *rule_.find_type(id);
                for (const auto& row : rows) {
                    std::vector<std::size_t> letters;
                    for (const auto& r : row)
                        letters.push_back(resolve(r));
                    rule_.blocks[t].rows.push_back(std::move(letters));
                }
            }
        }

        if (rule_.parametric && !p_)
            throw error("rule '" + rule_.name + "' uses the parameter p; a value must be supplied");
        if (!rule_.parametric && p_)
            throw error("rule '" + rule_.name + "' has no parameter p");
        if (rule_.parametric)
            return bind_parameter(std::move(rule_), *p_);
        return std::move(rule_);
    }

    std::vector<token> tokens_;
    std::size_t pos_ = 0;
    std::optional<rational> p_;
    substitution_rule rule_;
    bool engine_seen_ = false;
    bool expansion_seen_ = false;
    std::map<std::string, std::vector<raw_option>> images_;
    std::map<std::string, std::vector<std::vector<ref>>> blocks_;
    std::vector<ref> image_refs_;
};

}

substitution_rule parse_rule_unchecked(std::string_view text, std::optional<rational> p)
{
    return parser(text, std::move(p)).run();
}

substitution_rule parse_rule(std::string_view text, std::optional<rational> p)
{
    auto rule = parse_rule_unchecked(text, std::move(p));
    auto diagnostics = validate_rule(rule);
    if (!diagnostics.empty())
        throw rule_error(std::move(diagnostics));
    return rule;
}

std::string to_dsl(const substitution_rule& rule)
{
    std::ostringstream out;
    out << "rule " << rule.name << "\n";
    if (rule.engine == engine_kind::geometric)
        out << "engine geometric\n";
    else
        out << "engine block skew " << rule.skew << "\n";
    out << "expansion " << rule.lambda1 << " " << rule.lambda2 << "\n";
    for (const auto& t : rule.types) {
        out << "brick " << t.id << " " << t.width << " " << t.height;
        if (!t.color.empty())
            out << " color " << t.color;
        out << "\n";
    }
    if (rule.engine == engine_kind::geometric) {
        for (std::size_t t = 0; t < rule.images.size(); ++t) {
            const auto& options = rule.images[t];
            for (const auto& opt : options) {
                out << "image " << rule.types[t].id;
                if (options.size() > 1 || opt.prob.form != prob_form::literal || opt.prob.value != 1) {
                    out << " prob ";
                    switch (opt.prob.form) {
                    case prob_form::param:
                        out << "p";
                        break;
                    case prob_form::one_minus_param:
                        out << "1-p";
                        break;
                    case prob_form::literal:
                        out << fraction_string(opt.prob.value);
                        break;
                    }
                }
                out << " {";
                for (std::size_t i = 0; i < opt.placements.size(); ++i) {
                    const auto& pl = opt.placements[i];
                    out << (i ? " ; " : " ") << rule.types[pl.type].id << " @ " << pl.dx << " " << pl.dy;
                }
                out << " }\n";
            }
        }
    }
    else {
        for (std::size_t t = 0; t < rule.blocks.size(); ++t) {
            out << "block " << rule.types[t].id << " {";
            const auto& rows = rule.blocks[t].rows;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                out << (r ? " ; row:" : " row:");
                for (auto letter : rows[r])
                    out << " " << rule.types[letter].id;
            }
            out << " }\n";
        }
    }
    out << "end\n";
    return out.str();
}

}
