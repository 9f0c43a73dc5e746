#include <doctest.h>

#include <set>
#include <tuple>

#include "brickwall/engine.hpp"
#include "oracles.hpp"

using namespace brickwall;

namespace {

using placed = std::tuple<std::string, std::int64_t, std::int64_t>;

std::set<placed> as_set(const pattern& p)
{
    std::set<placed> out;
    for (const auto& b : p.bricks)
        out.insert({p.type_of(b).id, b.x, b.y});
    return out;
}

std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>> rects(const pattern& p)
{
    std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>> out;
    for (const auto& b : p.bricks)
        out.insert({p.type_of(b).width, p.type_of(b).height, b.x, b.y});
    return out;
}

std::int64_t ipow(std::int64_t b, int e)
{
    std::int64_t r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

}

TEST_CASE("one step of sigma3 from B22 gives the nine listed bricks")
{
    auto p = iterate(builtin("sigma3"), "B22", 1);
    CHECK(as_set(p) == std::set<placed>{{"B21", -1, 0}, {"B22", 1, 0}, {"B11", 0, 1}, {"B11", 3, 1}, {"B21", -1, 2},
                                        {"B11", 1, 2}, {"B11", 2, 2}, {"B21", 0, 3}, {"B21", 2, 3}});
    CHECK(p.level == 1);
    CHECK(p.size() == 9);
}

TEST_CASE("zero iterations return the seed")
{
    auto p = iterate(builtin("sigma3"), "B11", 0);
    CHECK(as_set(p) == std::set<placed>{{"B11", 0, 0}});
}

TEST_CASE("substitute_once")
{
    auto sigma3 = builtin("sigma3");
    auto seed = seed_pattern(sigma3, "B21");
    CHECK(as_set(substitute_once(sigma3, seed, nullptr)) ==
          std::set<placed>{{"B21", -1, 0}, {"B22", 1, 0}, {"B11", 0, 1}, {"B11", 3, 1}});

    pattern empty = seed;
    empty.bricks.clear();
    CHECK(substitute_once(sigma3, empty, nullptr).bricks.empty());

    auto pp = builtin("random_pp", rational(1));
    splitmix64 rng(99);
    CHECK(as_set(substitute_once(pp, seed_pattern(pp, "B12"), &rng)) == std::set<placed>{{"B22", -1, 0}, {"B22", 0, 2}});
}

TEST_CASE("random_self_similar brick counts do not depend on the seed")
{
    auto r = builtin("random_self_similar");
    for (std::uint64_t seed : {1ULL, 2ULL, 77ULL, 0xdeadbeefULL}) {
        for (int n = 1; n <= 5; ++n) {
            CAPTURE(seed);
            CAPTURE(n);
            CHECK(static_cast<std::int64_t>(iterate(r, "B22", n, seed).size()) == 6 * ipow(4, n - 1));
        }
    }
}

TEST_CASE("generation errors")
{
    auto sigma3 = builtin("sigma3");
    CHECK_THROWS_AS(iterate(sigma3, "B33", 1), error);
    CHECK_THROWS_AS(iterate(builtin("random_self_similar"), "B22", 1), generation_error);
    CHECK_THROWS_AS(iterate(sigma3, "B11", default_max_depth + 1), generation_error);
    CHECK_THROWS_AS(iterate(sigma3, "B11", -1), generation_error);
    CHECK_THROWS_AS(iterate(builtin("ptm"), "0", 1), generation_error);
    CHECK_THROWS_AS(iterate_block(sigma3, "B11", 1), generation_error);

    // Each image is valid, but the second step stacks two bricks on (2, 2).
    auto bad = parse_rule("rule bad\nexpansion 2 2\nbrick A 1 1\nimage A { A @ 0 0 ; A @ 2 0 ; A @ 0 1 ; A @ 1 1 }\nend\n");
    CHECK_NOTHROW(iterate(bad, "A", 1));
    CHECK_THROWS_WITH_AS(iterate(bad, "A", 2), doctest::Contains("overlap"), generation_error);
}

TEST_CASE("deterministic rules ignore the rng seed")
{
    auto sigma3 = builtin("sigma3");
    CHECK(iterate(sigma3, "B22", 3, 5) == iterate(sigma3, "B22", 3));
}

TEST_CASE("block engine")
{
    auto ptm = builtin("ptm");
    SUBCASE("one step")
    {
        auto g = iterate_block(ptm, "0", 1);
        REQUIRE(g.rows.size() == 2);
        CHECK(g.rows[0] == std::vector<std::uint32_t>{0, 1});
        CHECK(g.rows[1] == std::vector<std::uint32_t>{1, 0});
    }
    SUBCASE("zero steps")
    {
        auto g = iterate_block(ptm, "0", 0);
        CHECK(g.rows == std::vector<std::vector<std::uint32_t>>{{0}});
    }
    SUBCASE("agrees with the digit-sum parity oracle")
    {
        for (int n = 0; n <= 6; ++n) {
            auto g = iterate_block(ptm, "0", n);
            REQUIRE(g.rows.size() == (1U << n));
            REQUIRE(g.columns() == (1U << n));
            for (std::size_t j = 0; j < g.rows.size(); ++j)
                for (std::size_t i = 0; i < g.columns(); ++i)
                    REQUIRE(static_cast<int>(g.rows[j][i]) == (oracle::thue_morse(i) ^ oracle::thue_morse(j)));
        }
    }
}

TEST_CASE("render_grid")
{
    SUBCASE("skewed")
    {
        auto tau = builtin("ptm_skewed");
        auto p = render_grid(tau, iterate_block(tau, "0", 1));
        CHECK(rects(p) == std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>>{
                              {2, 1, 0, 0}, {3, 1, 2, 0}, {3, 1, 1, 1}, {2, 1, 4, 1}});
        auto q = render_grid(tau, iterate_block(tau, "1", 1));
        CHECK(rects(q) == std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>>{
                              {3, 1, 0, 0}, {2, 1, 3, 0}, {2, 1, 1, 1}, {3, 1, 3, 1}});
    }
    SUBCASE("unskewed")
    {
        auto ptm = builtin("ptm");
        auto p = render_grid(ptm, iterate_block(ptm, "0", 1));
        CHECK(rects(p) == std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>>{
                              {2, 1, 0, 0}, {3, 1, 2, 0}, {3, 1, 0, 1}, {2, 1, 3, 1}});
    }
    SUBCASE("single cell")
    {
        auto ptm = builtin("ptm");
        auto p = render_grid(ptm, iterate_block(ptm, "0", 0));
        CHECK(rects(p) == std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>>{{2, 1, 0, 0}});
    }
}

TEST_CASE("ptm_oracle")
{
    CHECK(ptm_oracle(0, 0) == 0);
    CHECK(ptm_oracle(1, 0) == 1);
    CHECK(ptm_oracle(3, 5) == 0);
    const int sequence[] = {0, 1, 1, 0, 1, 0, 0, 1};
    for (std::uint64_t i = 0; i < 8; ++i)
        CHECK(ptm_oracle(i, 0) == sequence[i]);
}

TEST_CASE("composition: level n + 1 is one more step on level n with the continued stream")
{
    for (const char* name : {"sigma3", "rows23", "random_self_similar", "random_pp"}) {
        auto r = std::string(name) == "random_pp" ? builtin(name, rational(1, 3)) : builtin(name);
        for (const auto& t : r.types) {
            for (std::uint64_t seed : {3ULL, 11ULL}) {
                CAPTURE(name);
                CAPTURE(t.id);
                std::optional<std::uint64_t> s;
                if (!r.deterministic())
                    s = seed;
                splitmix64 rng(seed);
                pattern p = seed_pattern(r, t.id);
                p.rng_seed = s;
                for (int n = 0; n < 4; ++n) {
                    p = substitute_once(r, p, r.deterministic() ? nullptr : &rng);
                    REQUIRE(p == iterate(r, t.id, n + 1, s));
                }
            }
        }
    }
}

TEST_CASE("find_overlap")
{
    pattern p;
    p.types = {{"A", 2, 1, ""}, {"B", 1, 3, ""}};
    p.bricks = {{0, 0, 0}, {0, 2, 0}, {1, 4, 0}};
    CHECK_FALSE(find_overlap(p));
    p.bricks.push_back({1, 3, 2});
    CHECK_FALSE(find_overlap(p));
    p.bricks.push_back({0, 3, 1});
    CHECK(find_overlap(p));
}

TEST_CASE("pattern text round trip")
{
    auto p = iterate(builtin("random_pp", rational(1, 2)), "B22", 3, 42);
    auto text = to_text(p);
    CHECK(text.rfind("# rule=random_pp n=3 seed=42 seed_brick=B22\n", 0) == 0);
    CHECK(parse_pattern_text(text) == p);

    auto q = generate(builtin("ptm_skewed"), "1", 3);
    CHECK(parse_pattern_text(to_text(q)) == q);

    CHECK_THROWS(parse_pattern_text("A 0 0 1\n"));
    CHECK_THROWS(parse_pattern_text("A 0 0 1 1\nA 2 0 2 1\n"));
}
