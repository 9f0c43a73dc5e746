#include <doctest.h>

#include <cmath>

#include "brickwall/engine.hpp"
#include "brickwall/spectral.hpp"
#include "oracles.hpp"

using namespace brickwall;

namespace {

rational_matrix ints(std::initializer_list<std::initializer_list<long>> rows)
{
    rational_matrix m;
    for (auto r : rows) {
        std::vector<rational> row;
        for (long v : r)
            row.emplace_back(v);
        m.push_back(row);
    }
    return m;
}

std::vector<substitution_rule> all_builtins()
{
    std::vector<substitution_rule> out;
    for (const auto& name : builtin_names()) {
        if (name == "random_pp") {
            for (const rational& p : {rational(0), rational(1, 3), rational(1, 2), rational(1)})
                out.push_back(builtin(name, p));
        }
        else {
            out.push_back(builtin(name));
        }
    }
    return out;
}

}

TEST_CASE("substitution matrices")
{
    auto s = matrix(builtin("sigma3"));
    CHECK(s.order == std::vector<std::string>{"B11", "B21", "B22"});
    CHECK(s.entries == ints({{0, 2, 0}, {2, 1, 1}, {4, 4, 1}}));

    auto r = matrix(builtin("random_self_similar"));
    CHECK(r.entries == ints({{2, 1}, {4, 2}}));

    auto unit = parse_rule("rule unit\nexpansion 2 2\nbrick A 1 1\nimage A { A @ 0 0 ; A @ 1 0 ; A @ 0 1 ; A @ 1 1 }\nend\n");
    CHECK(matrix(unit).entries == ints({{4}}));

    auto pp = matrix(builtin("random_pp", rational(1, 4)));
    CHECK(pp.entries[0][0] == 3);            // (3/4) * 4 B12
    CHECK(pp.entries[0][1] == rational(1, 2)); // (1/4) * 2 B22
    CHECK(pp.entries[1][0] == 6);
    CHECK(pp.entries[1][1] == 1);

    CHECK(matrix(builtin("ptm")).entries == ints({{2, 2}, {2, 2}}));
}

TEST_CASE("the area vector is an exact right eigenvector")
{
    for (const auto& rule : all_builtins()) {
        CAPTURE(rule.name);
        CHECK(area_eigen_identity(matrix(rule)));
    }
    CHECK_THROWS(area_eigen_identity(make_matrix(ints({{4}}))));
}

TEST_CASE("Perron-Frobenius eigenvalue")
{
    CHECK(std::abs(pf_eigenvalue(matrix(builtin("sigma3"))) - 4.0) <= 1e-9);
    CHECK(std::abs(pf_eigenvalue(matrix(builtin("rows23"))) - 6.0) <= 1e-9);
    CHECK(pf_eigenvalue(make_matrix(ints({{4}}))) == 4.0);
    for (const auto& rule : all_builtins()) {
        CAPTURE(rule.name);
        CHECK(std::abs(pf_eigenvalue(matrix(rule)) - static_cast<double>(rule.expansion())) <= 1e-9);
    }
}

TEST_CASE("power iteration reports non-convergence")
{
    // Period-two matrix: the normalized iterate oscillates.
    CHECK_THROWS_AS(pf_eigenvalue(make_matrix(ints({{0, 1}, {2, 0}})), {1e-9, 1000}), spectral_error);
}

TEST_CASE("brick frequencies")
{
    auto sigma3 = matrix(builtin("sigma3"));
    auto exact = oracle::left_eigenvector(sigma3.entries, 4);
    CHECK(exact == std::vector<rational>{rational(5, 13), rational(6, 13), rational(2, 13)});
    auto f = brick_frequencies(sigma3);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(std::abs(f[i] - exact[i].get_d()) <= 1e-6);

    auto rss = brick_frequencies(matrix(builtin("random_self_similar")));
    CHECK(std::abs(rss[0] - 2.0 / 3) <= 1e-6);
    CHECK(std::abs(rss[1] - 1.0 / 3) <= 1e-6);

    CHECK(brick_frequencies(make_matrix(ints({{4}}))) == std::vector<double>{1.0});
}

TEST_CASE("frequencies match generated patterns")
{
    for (const char* name : {"sigma3", "rows23"}) {
        auto rule = builtin(name);
        auto f = brick_frequencies(matrix(rule));
        for (const auto& t : rule.types) {
            CAPTURE(name);
            CAPTURE(t.id);
            auto counted = empirical_frequencies(iterate(rule, t.id, 6));
            for (std::size_t i = 0; i < f.size(); ++i)
                CHECK(std::abs(counted[i].get_d() - f[i]) <= 0.02);
        }
    }
}

TEST_CASE("matrix powers")
{
    auto m = matrix(builtin("random_self_similar")).entries;
    CHECK(matrix_power(m, 2) == ints({{8, 4}, {16, 8}}));
    CHECK(matrix_power(m, 5) == ints({{512, 256}, {1024, 512}}));
    CHECK(matrix_power(m, 0) == identity_matrix(2));
    CHECK(matrix_power(matrix(builtin("sigma3")).entries, 0) == identity_matrix(3));

    for (const auto& rule : all_builtins())
        for (unsigned n = 0; n <= 8; ++n)
            CHECK(matrix_power(matrix(rule).entries, n) == oracle::repeated_product(matrix(rule).entries, n));

    // Large exact entries.
    auto big = matrix_power(m, 40);
    mpz_class four39;
    mpz_ui_pow_ui(four39.get_mpz_t(), 4, 39);
    CHECK(big[0][1] == rational(four39));
}

TEST_CASE("brick counts")
{
    CHECK(count_bricks(builtin("random_self_similar"), "B22", 3) == 96);
    CHECK(count_bricks(builtin("sigma3"), "B22", 1) == 9);
    CHECK(count_bricks(builtin("sigma3"), "B22", 0) == 1);
    CHECK(count_bricks(builtin("ptm"), "0", 3) == 64);
    CHECK_THROWS_AS(count_bricks(builtin("random_pp", rational(1, 2)), "B22", 2), spectral_error);

    for (const auto& rule : all_builtins()) {
        if (!count_invariant(rule))
            continue;
        for (const auto& t : rule.types)
            for (unsigned n = 0; n <= 5; ++n)
                for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
                    CAPTURE(rule.name);
                    CHECK(count_bricks(rule, t.id, n) == generate(rule, t.id, static_cast<int>(n), seed).size());
                }
    }
}

TEST_CASE("realization counts")
{
    auto rss = builtin("random_self_similar");
    mpz_class two127 = mpz_class(1) << 127;
    CHECK(count_realizations(rss, "B22", 4) == two127);
    CHECK(to_string(count_realizations(rss, "B22", 4)) == "170141183460469231731687303715884105728");
    CHECK(count_realizations(rss, "B22", 1) == 2);
    CHECK(count_realizations(rss, "B22", 0) == 1);
    CHECK(count_realizations(builtin("sigma3"), "B22", 5) == 1);
    CHECK(count_realizations(builtin("random_pp", rational(1)), "B22", 4) == 1);
    CHECK_THROWS_AS(count_realizations(builtin("random_pp", rational(1, 3)), "B22", 2), spectral_error);

    // Closed form 2^(2 * 4^n - 1) for the (n + 1)-th image.
    for (unsigned n = 1; n <= 6; ++n) {
        mpz_class expected = mpz_class(1) << (2 * (1UL << (2 * n)) - 1);
        CHECK(count_realizations(rss, "B22", n + 1) == expected);
    }
}
