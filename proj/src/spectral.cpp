#include "brickwall/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace brickwall {

namespace {

std::vector<rational> option_counts(const substitution_rule& rule, const image_option& opt)
{
    std::vector<rational> row(rule.types.size(), 0);
    for (const auto& pl : opt.placements)
        row[pl.type] += 1;
    return row;
}

void require_square(const rational_matrix& m)
{
    for (const auto& row : m)
        if (row.size() != m.size())
            throw spectral_error("matrix is not square");
}

std::vector<std::vector<double>> to_double(const rational_matrix& m)
{
    std::vector<std::vector<double>> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (const auto& q : m[i])
            out[i].push_back(q.get_d());
    return out;
}

// Power iteration on a non-negative matrix: returns (eigenvalue, eigenvector
// normalized to max entry 1).
std::pair<double, std::vector<double>> power_iterate(const std::vector<std::vector<double>>& a,
                                                     const power_iteration_options& opts)
{
    const std::size_t n = a.size();
    if (n == 0)
        throw spectral_error("empty matrix");
    std::vector<double> x(n, 1.0);
    std::vector<double> y(n);
    for (int it = 0; it < opts.max_iterations; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0;
            for (std::size_t j = 0; j < n; ++j)
                s += a[i][j] * x[j];
            y[i] = s;
        }
        const double norm = *std::max_element(y.begin(), y.end());
        if (!(norm > 0))
            return {0.0, x};
        double change = 0;
        for (std::size_t i = 0; i < n; ++i) {
            y[i] /= norm;
            change = std::max(change, std::abs(y[i] - x[i]));
        }
        x.swap(y);
        if (change < opts.tolerance)
            return {norm, x};
    }
    throw spectral_error("power iteration did not converge within " + std::to_string(opts.max_iterations) +
                         " iterations");
}

}

substitution_matrix make_matrix(rational_matrix entries)
{
    require_square(entries);
    substitution_matrix m;
    m.entries = std::move(entries);
    for (std::size_t i = 0; i < m.entries.size(); ++i)
        m.order.push_back(std::to_string(i));
    return m;
}

substitution_matrix matrix(const substitution_rule& rule)
{
    substitution_matrix m;
    const std::size_t n = rule.types.size();
    m.entries.assign(n, std::vector<rational>(n, 0));
    m.expansion = rule.expansion();
    for (std::size_t t = 0; t < n; ++t) {
        m.order.push_back(rule.types[t].id);
        if (rule.engine == engine_kind::geometric) {
            m.cell_area.emplace_back(static_cast<long>(rule.types[t].area()));
            for (const auto& opt : rule.images.at(t)) {
                auto row = option_counts(rule, opt);
                for (std::size_t u = 0; u < n; ++u)
                    m.entries[t][u] += opt.prob.value * row[u];
            }
        }
        else {
            m.cell_area.emplace_back(1);
            for (const auto& r : rule.blocks.at(t).rows)
                for (auto letter : r)
                    m.entries[t][letter] += 1;
        }
    }
    return m;
}

bool area_eigen_identity(const substitution_matrix& m)
{
    if (m.cell_area.size() != m.size())
        throw spectral_error("matrix carries no area vector");
    for (std::size_t i = 0; i < m.size(); ++i) {
        rational s = 0;
        for (std::size_t j = 0; j < m.size(); ++j)
            s += m.entries[i][j] * m.cell_area[j];
        if (s != m.expansion * m.cell_area[i])
            return false;
    }
    return true;
}

double pf_eigenvalue(const substitution_matrix& m, power_iteration_options opts)
{
    require_square(m.entries);
    if (!m.cell_area.empty() && !area_eigen_identity(m))
        throw spectral_error("area vector is not a right eigenvector for the expansion " + short_string(m.expansion));
    return power_iterate(to_double(m.entries), opts).first;
}

std::vector<double> brick_frequencies(const substitution_matrix& m, power_iteration_options opts)
{
    require_square(m.entries);
    const std::size_t n = m.size();
    std::vector<std::vector<double>> t(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            t[j][i] = m.entries[i][j].get_d();
    auto v = power_iterate(t, opts).second;
    double sum = 0;
    for (double e : v)
        sum += e;
    for (double& e : v)
        e /= sum;
    return v;
}

rational_matrix identity_matrix(std::size_t n)
{
    rational_matrix out(n, std::vector<rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        out[i][i] = 1;
    return out;
}

rational_matrix multiply(const rational_matrix& a, const rational_matrix& b)
{
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    const std::size_t m = k ? b.front().size() : 0;
    rational_matrix out(n, std::vector<rational>(m, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != k)
            throw spectral_error("matrix dimensions do not agree");
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0)
                continue;
            for (std::size_t j = 0; j < m; ++j)
                out[i][j] += a[i][l] * b[l][j];
        }
    }
    return out;
}

rational_matrix matrix_power(const rational_matrix& m, unsigned n)
{
    require_square(m);
    rational_matrix result = identity_matrix(m.size());
    rational_matrix base = m;
    while (n > 0) {
        if (n & 1U)
            result = multiply(result, base);
        n >>= 1U;
        if (n > 0)
            base = multiply(base, base);
    }
    return result;
}

bool count_invariant(const substitution_rule& rule)
{
    if (rule.engine == engine_kind::block)
        return true;
    for (const auto& options : rule.images) {
        std::optional<std::vector<rational>> first;
        for (const auto& opt : options) {
            if (opt.prob.value == 0)
                continue;
            auto row = option_counts(rule, opt);
            if (!first)
                first = row;
            else if (row != *first)
                return false;
        }
    }
    return true;
}

namespace {

// Count vectors N_0 .. N_n of a count-invariant rule.
std::vector<std::vector<big_count>> level_counts(const substitution_rule& rule, std::string_view seed_type, unsigned n)
{
    if (!count_invariant(rule))
        throw spectral_error("rule '" + rule.name + "' has option-dependent brick counts; counts are random");
    const std::size_t types = rule.types.size();
    // For a count-invariant rule the expected counts are integers.
    std::vector<std::vector<big_count>> step(types, std::vector<big_count>(types, 0));
    auto m = matrix(rule);
    for (std::size_t t = 0; t < types; ++t)
        for (std::size_t u = 0; u < types; ++u)
            step[t][u] = m.entries[t][u].get_num() / m.entries[t][u].get_den();

    std::vector<std::vector<big_count>> levels;
    std::vector<big_count> current(types, 0);
    current[rule.type_index(seed_type)] = 1;
    for (unsigned level = 0; level <= n; ++level) {
        levels.push_back(current);
        std::vector<big_count> next(types, 0);
        for (std::size_t t = 0; t < types; ++t)
            if (current[t] != 0)
                for (std::size_t u = 0; u < types; ++u)
                    next[u] += current[t] * step[t][u];
        current.swap(next);
    }
    return levels;
}

}

big_count count_bricks(const substitution_rule& rule, std::string_view seed_type, unsigned n)
{
    auto levels = level_counts(rule, seed_type, n);
    big_count total = 0;
    for (const auto& c : levels.at(n))
        total += c;
    return total;
}

big_count count_realizations(const substitution_rule& rule, std::string_view seed_type, unsigned n)
{
    auto levels = level_counts(rule, seed_type, n);
    big_count result = 1;
    if (rule.engine == engine_kind::block)
        return result;
    for (unsigned level = 0; level < n; ++level) {
        for (std::size_t t = 0; t < rule.types.size(); ++t) {
            const auto k = static_cast<unsigned long>(std::count_if(
                rule.images[t].begin(), rule.images[t].end(), [](const image_option& o) { return o.prob.value > 0; }));
            if (k <= 1 || levels[level][t] == 0)
                continue;
            if (!levels[level][t].fits_ulong_p())
                throw spectral_error("realization exponent does not fit in a machine word");
            big_count factor;
            mpz_pow_ui(factor.get_mpz_t(), big_count(k).get_mpz_t(), levels[level][t].get_ui());
            result *= factor;
        }
    }
    return result;
}

}
