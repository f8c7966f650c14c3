#include "polylab/ehrhart.hpp"

#include <stdexcept>

namespace polylab {

namespace {

long top_index(std::span<const Int> w)
{
    for (std::size_t i = w.size(); i-- > 0;)
        if (w[i] != 0)
            return static_cast<long>(i);
    return -1;
}

// Finite differences of a counting function f(0..d) against (1-t)^{d+1}.
IntVector finite_differences(const IntVector& counts)
{
    const long d = static_cast<long>(counts.size()) - 1;
    IntVector delta(counts.size());
    for (long k = 0; k <= d; ++k) {
        Int s = 0;
        for (long m = 0; m <= k; ++m) {
            Int term = binomial(d + 1, m) * counts[static_cast<std::size_t>(k - m)];
            if (m % 2 == 0)
                s += term;
            else
                s -= term;
        }
        delta[static_cast<std::size_t>(k)] = s;
    }
    return delta;
}

}  // namespace

DeltaReport make_report(IntVector window)
{
    if (window.empty())
        throw std::invalid_argument("make_report: empty window");
    DeltaReport r;
    r.dim = static_cast<long>(window.size()) - 1;
    r.degree = std::max(top_index(window), 0L);
    r.codegree = r.dim + 1 - r.degree;
    r.unimodal = is_unimodal(window);
    r.symmetric = is_symmetric(window, r.dim);
    r.alternatingly_increasing = is_alternatingly_increasing(window, r.degree);
    r.chain_top = (r.degree + 1) / 2;
    r.delta = std::move(window);
    return r;
}

DeltaReport delta_vector(const LatticePolytope& p)
{
    const long d = p.dim();
    IntVector counts;
    for (long n = 0; n <= d; ++n)
        counts.push_back(count_lattice_points(p, static_cast<unsigned long>(n)));
    return make_report(finite_differences(counts));
}

IntPoly eulerian(long n)
{
    if (n < 0)
        throw std::invalid_argument("eulerian: Eul(" + std::to_string(n) +
                                    ", t) has no polynomial form (n must be >= 0)");
    IntVector c(static_cast<std::size_t>(n + 1));
    for (long i = 0; i <= n; ++i) {
        Int s = 0;
        for (long j = 0; j <= i; ++j) {
            Int term = binomial(n + 2, j) * power(Int(i + 1 - j), static_cast<unsigned long>(n + 1));
            if (j % 2 == 0)
                s += term;
            else
                s -= term;
        }
        c[static_cast<std::size_t>(i)] = s;
    }
    return IntPoly(std::move(c));
}

IntPoly eulerian_times_t(long n)
{
    if (n < -1)
        throw std::invalid_argument("eulerian_times_t: n must be >= -1");
    if (n == -1)
        return IntPoly{1};
    return eulerian(n).shifted(1);
}

APoly a_poly(long i, long j)
{
    if (i < 0)
        throw std::invalid_argument("a_poly: i must be >= 0");
    if (j < -1 || j > i)
        throw std::invalid_argument("a_poly: j must lie in [-1, i]");
    const std::size_t len = static_cast<std::size_t>(i + 2);
    IntVector series(len);
    for (std::size_t n = 0; n < len; ++n)
        series[n] = power(Int(static_cast<unsigned long>(n)), static_cast<unsigned long>(j + 1)) *
                    power(Int(static_cast<unsigned long>(n + 1)), static_cast<unsigned long>(i - j));
    const IntPoly full = IntPoly(series) * IntPoly::one_minus_t_pow(len);
    IntVector c(len);
    for (std::size_t k = 0; k < len; ++k)
        c[k] = full.coeff(k);
    return APoly{i, j, IntPoly(std::move(c))};
}

IntVector product_with_segment(std::span<const Int> h, long d)
{
    if (d < 0 || h.size() != static_cast<std::size_t>(d + 1))
        throw std::invalid_argument("product_with_segment: window length must be d + 1");
    IntVector out(static_cast<std::size_t>(d + 2));
    for (long i = 0; i <= d + 1; ++i) {
        Int v = 0;
        if (i <= d)
            v += Int(i + 1) * h[static_cast<std::size_t>(i)];
        if (i >= 1)
            v += Int(d + 1 - i) * h[static_cast<std::size_t>(i - 1)];
        out[static_cast<std::size_t>(i)] = v;
    }
    return out;
}

DeltaReport delta_simplex_product(long k, long i)
{
    if (k < 0 || i < 0)
        throw std::invalid_argument("delta_simplex_product: k and i must be >= 0");
    const long d = 2 * k + i;
    IntVector counts;
    for (long n = 0; n <= d; ++n) {
        Int tri = Int((n + 1) * (n + 2) / 2);
        counts.push_back(power(tri, static_cast<unsigned long>(k)) *
                         power(Int(n + 1), static_cast<unsigned long>(i)));
    }
    return make_report(finite_differences(counts));
}

bool is_unimodal(std::span<const Int> w)
{
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i] <= w[i + 1])
        ++i;
    while (i + 1 < w.size() && w[i] >= w[i + 1])
        ++i;
    return i + 1 >= w.size();
}

bool is_symmetric(std::span<const Int> w, long d)
{
    if (d < 0)
        return w.empty();
    auto at = [&](long i) { return static_cast<std::size_t>(i) < w.size() ? w[i] : Int(0); };
    for (std::size_t i = static_cast<std::size_t>(d + 1); i < w.size(); ++i)
        if (w[i] != 0)
            return false;
    for (long i = 0; i <= d; ++i)
        if (at(i) != at(d - i))
            return false;
    return true;
}

bool is_alternatingly_increasing(std::span<const Int> w, long s)
{
    if (s < 0)
        return true;
    auto at = [&](long i) { return static_cast<std::size_t>(i) < w.size() ? w[i] : Int(0); };
    std::vector<Int> chain;
    for (long i = 0; 2 * i <= s - 1; ++i) {
        chain.push_back(at(i));
        chain.push_back(at(s - i));
    }
    if (s % 2 == 0)
        chain.push_back(at(s / 2));
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (chain[i] > chain[i + 1])
            return false;
    return true;
}

ChainCheck check_interior_chain(const DeltaReport& report)
{
    const long d = report.dim;
    ChainCheck c;
    if (d < 3 || report.delta[static_cast<std::size_t>(d)] == 0)
        return c;
    c.applicable = true;
    const auto& w = report.delta;
    const std::size_t n = static_cast<std::size_t>(d);
    c.holds = w[0] <= w[n] && w[n] <= w[1] && w[1] <= w[n - 1] && w[n - 1] <= w[2];
    return c;
}

bool is_translate_of_reflexive(const LatticePolytope& p)
{
    if (!p.full_dimensional())
        return false;
    return delta_vector(p).symmetric;
}

}  // namespace polylab
