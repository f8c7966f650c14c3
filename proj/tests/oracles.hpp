#pragma once

// Brute-force reference implementations used only by the tests. They rely on
// nothing but determinants and exact rational solves, so they exercise
// independent code paths from the library's hull, scan and SNF machinery.

#include "polylab/integer.hpp"
#include "polylab/matrix.hpp"
#include "polylab/poly.hpp"
#include "polylab/polytope.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using polylab::Int;
using polylab::IntMatrix;
using polylab::IntPoly;
using polylab::IntVector;
using polylab::Rat;
using polylab::RatVector;

struct Halfspace {
    IntVector normal;
    Int offset;
    auto operator<=>(const Halfspace& o) const
    {
        if (auto c = normal <=> o.normal; c != 0)
            return c;
        return offset < o.offset ? std::weak_ordering::less
                                 : (offset > o.offset ? std::weak_ordering::greater : std::weak_ordering::equivalent);
    }
    bool operator==(const Halfspace& o) const = default;
};

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f)
{
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    if (k > n)
        return;
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

/// Facets of a full-dimensional point set by trying every m-subset as a hyperplane.
inline std::vector<Halfspace> brute_facets(const std::vector<IntVector>& pts)
{
    const std::size_t m = pts.front().size();
    std::set<Halfspace> out;
    for_each_subset(pts.size(), m, [&](const std::vector<std::size_t>& s) {
        // Normal by cofactor expansion of the (m-1) x m difference matrix.
        IntVector normal(m);
        for (std::size_t c = 0; c < m; ++c) {
            IntMatrix minor(m - 1, m - 1);
            for (std::size_t r = 1; r < m; ++r) {
                std::size_t cc = 0;
                for (std::size_t k = 0; k < m; ++k)
                    if (k != c)
                        minor(r - 1, cc++) = pts[s[r]][k] - pts[s[0]][k];
            }
            normal[c] = (m == 1 ? Int(1) : polylab::det(minor)) * ((c % 2 == 0) ? 1 : -1);
        }
        if (std::all_of(normal.begin(), normal.end(), [](const Int& x) { return x == 0; }))
            return;
        polylab::make_primitive(normal);
        auto dot = [&](const IntVector& p) {
            Int v = 0;
            for (std::size_t k = 0; k < m; ++k)
                v += normal[k] * p[k];
            return v;
        };
        const Int b = dot(pts[s[0]]);
        bool le = true, ge = true;
        for (const auto& p : pts) {
            const Int v = dot(p);
            le = le && v <= b;
            ge = ge && v >= b;
        }
        if (ge && !le) {
            for (auto& x : normal)
                x = -x;
            out.insert({normal, -b});
        } else if (le && !ge) {
            out.insert({normal, b});
        }
    });
    return {out.begin(), out.end()};
}

inline bool inside(const std::vector<Halfspace>& hs, const IntVector& x, const Int& n)
{
    for (const auto& h : hs) {
        Int v = 0;
        for (std::size_t k = 0; k < x.size(); ++k)
            v += h.normal[k] * x[k];
        if (v > h.offset * n)
            return false;
    }
    return true;
}

inline void for_each_box_point(const IntVector& lo, const IntVector& hi, const std::function<void(const IntVector&)>& f)
{
    IntVector x = lo;
    for (std::size_t k = 0; k < lo.size(); ++k)
        if (lo[k] > hi[k])
            return;
    while (true) {
        f(x);
        std::size_t k = x.size();
        while (k > 0) {
            --k;
            if (x[k] < hi[k]) {
                ++x[k];
                break;
            }
            x[k] = lo[k];
            if (k == 0)
                return;
        }
        if (x.empty())
            return;
    }
}

/// #(nP) for a full-dimensional P by scanning the whole bounding box.
inline Int brute_count(const std::vector<IntVector>& pts, unsigned long n)
{
    const auto hs = brute_facets(pts);
    const std::size_t m = pts.front().size();
    IntVector lo(m), hi(m);
    for (std::size_t k = 0; k < m; ++k) {
        lo[k] = hi[k] = pts[0][k];
        for (const auto& p : pts) {
            lo[k] = std::min(lo[k], p[k]);
            hi[k] = std::max(hi[k], p[k]);
        }
        lo[k] *= static_cast<long>(n);
        hi[k] *= static_cast<long>(n);
    }
    Int count = 0;
    for_each_box_point(lo, hi, [&](const IntVector& x) {
        if (inside(hs, x, Int(static_cast<long>(n))))
            ++count;
    });
    return count;
}

/// Interior lattice points of nP for a full-dimensional P by bounding-box scan.
inline Int brute_interior_count(const std::vector<IntVector>& pts, unsigned long n)
{
    const auto hs = brute_facets(pts);
    const std::size_t m = pts.front().size();
    IntVector lo(m), hi(m);
    for (std::size_t k = 0; k < m; ++k) {
        lo[k] = hi[k] = pts[0][k];
        for (const auto& p : pts) {
            lo[k] = std::min(lo[k], p[k]);
            hi[k] = std::max(hi[k], p[k]);
        }
        lo[k] *= static_cast<long>(n);
        hi[k] *= static_cast<long>(n);
    }
    Int count = 0;
    for_each_box_point(lo, hi, [&](const IntVector& x) {
        for (const auto& h : hs) {
            Int v = 0;
            for (std::size_t k = 0; k < m; ++k)
                v += h.normal[k] * x[k];
            if (v >= h.offset * static_cast<long>(n))
                return;
        }
        ++count;
    });
    return count;
}

/// Lattice points sum lambda_i v_i with lambda in (0,1) (open) or [0,1), by
/// scanning the bounding box and solving for lambda.
inline std::vector<IntVector> box_points(const std::vector<IntVector>& gens, bool open)
{
    const std::size_t m = gens.front().size();
    const std::size_t k = gens.size();
    IntMatrix cols(m, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t r = 0; r < m; ++r)
            cols(r, i) = gens[i][r];
    IntVector lo(m, Int(0)), hi(m, Int(0));
    for (const auto& g : gens)
        for (std::size_t r = 0; r < m; ++r)
            (g[r] < 0 ? lo[r] : hi[r]) += g[r];
    std::vector<IntVector> out;
    for_each_box_point(lo, hi, [&](const IntVector& x) {
        const RatVector rx = polylab::to_rational(x);
        auto sol = polylab::solve_rational(cols, rx);
        if (!sol)
            return;
        for (const auto& l : *sol) {
            if (open ? (l <= 0 || l >= 1) : (l < 0 || l >= 1))
                return;
        }
        out.push_back(x);
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// Eul(n, t) from the explicit alternating sum.
inline IntPoly eulerian(long n)
{
    IntVector c;
    for (long i = 0; i <= n; ++i) {
        Int s = 0;
        for (long j = 0; j <= i; ++j) {
            Int term = polylab::binomial(n + 2, j) * polylab::power(Int(i + 1 - j), static_cast<unsigned long>(n + 1));
            s += (j % 2 == 0) ? term : Int(-term);
        }
        c.push_back(s);
    }
    return IntPoly(c);
}

/// A(i, j, t) = sum_k t (1-t)^{i-j-k} C(i-j, k) Eul(j+k, t), with t Eul(-1, t) = 1.
inline IntPoly a_poly_heart(long i, long j)
{
    IntPoly sum;
    for (long k = 0; k <= i - j; ++k) {
        const IntPoly t_eul = j + k == -1 ? IntPoly{1} : eulerian(j + k).shifted(1);
        sum += IntPoly::one_minus_t_pow(static_cast<std::size_t>(i - j - k)) * t_eul * polylab::binomial(i - j, k);
    }
    return sum;
}

inline std::vector<IntVector> random_independent(std::mt19937& rng, std::size_t count, std::size_t dim, long lo, long hi)
{
    std::uniform_int_distribution<long> dist(lo, hi);
    while (true) {
        std::vector<IntVector> g(count, IntVector(dim));
        for (auto& v : g)
            for (auto& x : v)
                x = dist(rng);
        if (polylab::rank(IntMatrix::from_rows(g)) == count)
            return g;
    }
}

/// Random full-dimensional point set in [lo, hi]^dim.
inline std::vector<IntVector> random_full_dim_points(std::mt19937& rng, std::size_t count, std::size_t dim, long lo,
                                                     long hi)
{
    std::uniform_int_distribution<long> dist(lo, hi);
    while (true) {
        std::vector<IntVector> pts(count, IntVector(dim));
        for (auto& v : pts)
            for (auto& x : v)
                x = dist(rng);
        std::vector<IntVector> diffs;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            IntVector d(dim);
            for (std::size_t k = 0; k < dim; ++k)
                d[k] = pts[i][k] - pts[0][k];
            diffs.push_back(d);
        }
        if (!diffs.empty() && polylab::rank(IntMatrix::from_rows(diffs)) == dim)
            return pts;
    }
}

/// Subset sums of the generators (the vertices of the closed parallelepiped).
inline std::vector<IntVector> subset_sums(const std::vector<IntVector>& gens)
{
    std::vector<IntVector> out;
    for (unsigned mask = 0; mask < (1u << gens.size()); ++mask) {
        IntVector s(gens.front().size(), Int(0));
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (mask & (1u << i))
                for (std::size_t k = 0; k < s.size(); ++k)
                    s[k] += gens[i][k];
        out.push_back(s);
    }
    return out;
}

inline IntVector ints(std::initializer_list<long> xs)
{
    IntVector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

inline std::vector<IntVector> points(std::initializer_list<std::initializer_list<long>> rows)
{
    std::vector<IntVector> out;
    for (const auto& r : rows) {
        IntVector v;
        for (long x : r)
            v.emplace_back(x);
        out.push_back(v);
    }
    return out;
}

}  // namespace oracle
