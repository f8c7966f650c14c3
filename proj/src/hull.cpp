#include "polylab/hull.hpp"

#include "polylab/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace polylab {

namespace {

class Bitset {
public:
    explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    Bitset operator&(const Bitset& o) const
    {
        Bitset r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i)
            r.words_[i] &= o.words_[i];
        return r;
    }
    bool contains(const Bitset& o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((o.words_[i] & ~words_[i]) != 0)
                return false;
        return true;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct Ray {
    IntVector z;
    Bitset tight;
};

Int dot(std::span<const Int> a, std::span<const Int> b)
{
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

}  // namespace

long affine_dimension(std::span<const IntVector> points)
{
    if (points.empty())
        return -1;
    IntMatrix diffs(points.size() - 1, points.front().size());
    for (std::size_t i = 1; i < points.size(); ++i)
        for (std::size_t j = 0; j < points.front().size(); ++j)
            diffs(i - 1, j) = points[i][j] - points[0][j];
    return static_cast<long>(rank(diffs));
}

std::vector<Facet> full_dimensional_facets(std::span<const IntVector> points)
{
    if (points.empty())
        throw std::invalid_argument("full_dimensional_facets: no points");
    const std::size_t k = points.front().size();
    const std::size_t dim = k + 1;
    const std::size_t n = points.size();

    std::vector<IntVector> rows(n, IntVector(dim));
    for (std::size_t i = 0; i < n; ++i) {
        if (points[i].size() != k)
            throw std::invalid_argument("full_dimensional_facets: mixed point lengths");
        std::copy(points[i].begin(), points[i].end(), rows[i].begin());
        rows[i][k] = 1;
    }

    // Greedy choice of `dim` linearly independent rows for the initial cone.
    std::vector<std::size_t> basis_rows;
    std::vector<IntVector> chosen;
    for (std::size_t i = 0; i < n && basis_rows.size() < dim; ++i) {
        chosen.push_back(rows[i]);
        if (rank(IntMatrix::from_rows(chosen)) == chosen.size())
            basis_rows.push_back(i);
        else
            chosen.pop_back();
    }
    if (basis_rows.size() < dim)
        throw std::invalid_argument("full_dimensional_facets: points are not full-dimensional");

    // Rays of {z : A0 z >= 0} are the columns of A0^{-1}.
    const IntMatrix a0 = IntMatrix::from_rows(chosen);
    const LinearSolver solver(a0);
    std::vector<bool> processed(n, false);
    for (auto i : basis_rows)
        processed[i] = true;

    std::vector<Ray> rays;
    for (std::size_t j = 0; j < dim; ++j) {
        RatVector e(dim, Rat(0));
        e[j] = 1;
        RatVector col = *solver.solve(e);
        Int l = 1;
        for (const auto& q : col)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        IntVector z(dim);
        for (std::size_t t = 0; t < dim; ++t) {
            Rat s = col[t] * l;
            z[t] = s.get_num();
        }
        make_primitive(z);
        Ray r{std::move(z), Bitset(n)};
        for (auto i : basis_rows)
            if (dot(rows[i], r.z) == 0)
                r.tight.set(i);
        rays.push_back(std::move(r));
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (processed[i])
            continue;
        processed[i] = true;
        std::vector<Int> vals(rays.size());
        std::vector<std::size_t> pos, zero, neg;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            vals[r] = dot(rows[i], rays[r].z);
            int s = sgn(vals[r]);
            (s > 0 ? pos : s < 0 ? neg : zero).push_back(r);
        }
        if (neg.empty()) {
            for (auto r : zero)
                rays[r].tight.set(i);
            continue;
        }
        std::vector<Ray> next;
        for (auto r : pos)
            next.push_back(rays[r]);
        for (auto r : zero) {
            next.push_back(rays[r]);
            next.back().tight.set(i);
        }
        for (auto p : pos) {
            for (auto q : neg) {
                Bitset common = rays[p].tight & rays[q].tight;
                if (common.count() + 2 < dim)
                    continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != q && rays[r].tight.contains(common))
                        adjacent = false;
                if (!adjacent)
                    continue;
                IntVector z(dim);
                for (std::size_t t = 0; t < dim; ++t)
                    z[t] = vals[p] * rays[q].z[t] - vals[q] * rays[p].z[t];
                make_primitive(z);
                common.set(i);
                next.push_back(Ray{std::move(z), std::move(common)});
            }
        }
        rays = std::move(next);
    }

    std::vector<Facet> facets;
    facets.reserve(rays.size());
    for (auto& r : rays) {
        Facet f;
        f.normal.assign(r.z.begin(), r.z.begin() + static_cast<long>(k));
        for (auto& x : f.normal)
            x = -x;
        f.offset = r.z[k];
        Int g = gcd_of(f.normal);
        if (g == 0)
            continue;  // the trivial inequality 0 <= c is never a facet of a bounded set
        if (g != 1) {
            for (auto& x : f.normal)
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(f.offset.get_mpz_t(), f.offset.get_mpz_t(), g.get_mpz_t());
        }
        facets.push_back(std::move(f));
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    return facets;
}

}  // namespace polylab
