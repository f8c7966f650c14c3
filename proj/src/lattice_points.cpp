#include "polylab/polytope.hpp"

#include <algorithm>
#include <functional>

namespace polylab {

namespace {

/**
 * Integer points of { y : A y <= c } inside a bounding box, in chart
 * coordinates. Each coordinate range is tightened from the facets by relaxing
 * the not-yet-fixed coordinates to their box; at the last coordinate that
 * interval is exact, so rows can be counted without visiting their points.
 */
class Scanner {
public:
    Scanner(const LatticePolytope& p, unsigned long n, bool strict)
        : dim_(static_cast<std::size_t>(p.dim()))
    {
        const Int dil(n);
        for (const auto& f : p.chart_facets()) {
            rows_.push_back(f.normal);
            rhs_.push_back(f.offset * dil - (strict ? 1 : 0));
        }
        lo_.assign(dim_, Int(0));
        hi_.assign(dim_, Int(0));
        const auto& coords = p.chart().coords();
        for (std::size_t c = 0; c < dim_; ++c) {
            bool first = true;
            for (const auto& v : p.vertices()) {
                const Int& x = v[coords[c]];
                if (first || x < lo_[c])
                    lo_[c] = x;
                if (first || x > hi_[c])
                    hi_[c] = x;
                first = false;
            }
            lo_[c] *= dil;
            hi_[c] *= dil;
        }
        Int candidates = 1;
        for (std::size_t c = 0; c < dim_; ++c)
            candidates *= hi_[c] - lo_[c] + 1;
        if (candidates > scan_budget())
            throw ScaleGuardError("lattice point scan needs " + to_string(candidates) +
                                  " candidates, above the scale guard " + to_string(scan_budget()));
        partial_.assign(rows_.size(), Int(0));
        // tail_[k][f] = minimum of sum_{i >= k} a_fi y_i over the box.
        tail_.assign(dim_ + 1, IntVector(rows_.size(), Int(0)));
        for (std::size_t k = dim_; k-- > 0;)
            for (std::size_t f = 0; f < rows_.size(); ++f) {
                const Int& a = rows_[f][k];
                tail_[k][f] = tail_[k + 1][f] + (a >= 0 ? a * lo_[k] : a * hi_[k]);
            }
    }

    Int count()
    {
        Int total = 0;
        if (dim_ == 0)
            return feasible_point() ? Int(1) : Int(0);
        LatticePoint y(dim_);
        count_rec(0, y, total);
        return total;
    }

    void enumerate(const std::function<void(const LatticePoint&)>& visit)
    {
        LatticePoint y(dim_);
        if (dim_ == 0) {
            if (feasible_point())
                visit(y);
            return;
        }
        enumerate_rec(0, y, visit);
    }

private:
    bool feasible_point() const
    {
        for (const auto& c : rhs_)
            if (c < 0)
                return false;
        return true;
    }

    // Range of y_k given y_0..y_{k-1}; false when empty.
    bool range(std::size_t k, Int& lo, Int& hi) const
    {
        lo = lo_[k];
        hi = hi_[k];
        for (std::size_t f = 0; f < rows_.size(); ++f) {
            const Int& a = rows_[f][k];
            Int slack = rhs_[f] - partial_[f] - tail_[k + 1][f];
            if (a > 0) {
                Int b = floor_div(slack, a);
                if (b < hi)
                    hi = b;
            } else if (a < 0) {
                Int b = ceil_div(slack, a);
                if (b > lo)
                    lo = b;
            } else if (slack < 0) {
                return false;
            }
            if (lo > hi)
                return false;
        }
        return true;
    }

    void push(std::size_t k, const Int& value)
    {
        for (std::size_t f = 0; f < rows_.size(); ++f)
            if (rows_[f][k] != 0)
                partial_[f] += rows_[f][k] * value;
    }
    void pop(std::size_t k, const Int& value)
    {
        for (std::size_t f = 0; f < rows_.size(); ++f)
            if (rows_[f][k] != 0)
                partial_[f] -= rows_[f][k] * value;
    }

    void count_rec(std::size_t k, LatticePoint& y, Int& total)
    {
        Int lo, hi;
        if (!range(k, lo, hi))
            return;
        if (k + 1 == dim_) {
            total += hi - lo + 1;
            return;
        }
        for (y[k] = lo; y[k] <= hi; ++y[k]) {
            push(k, y[k]);
            count_rec(k + 1, y, total);
            pop(k, y[k]);
        }
    }

    void enumerate_rec(std::size_t k, LatticePoint& y,
                       const std::function<void(const LatticePoint&)>& visit)
    {
        Int lo, hi;
        if (!range(k, lo, hi))
            return;
        for (y[k] = lo; y[k] <= hi; ++y[k]) {
            if (k + 1 == dim_) {
                visit(y);
                continue;
            }
            push(k, y[k]);
            enumerate_rec(k + 1, y, visit);
            pop(k, y[k]);
        }
    }

    std::size_t dim_;
    std::vector<IntVector> rows_;
    IntVector rhs_;
    IntVector lo_, hi_;
    IntVector partial_;
    std::vector<IntVector> tail_;
};

LatticePoint dilate(const LatticePoint& v, unsigned long n)
{
    LatticePoint out = v;
    for (auto& x : out)
        x *= n;
    return out;
}

std::vector<LatticePoint> scan_points(const LatticePolytope& p, unsigned long n, bool strict)
{
    std::vector<LatticePoint> out;
    if (p.dim() == 0) {
        if (!strict)
            out.push_back(dilate(p.vertices().front(), n));
        return out;
    }
    Scanner scanner(p, n, strict);
    if (p.full_dimensional()) {
        scanner.enumerate([&](const LatticePoint& y) { out.push_back(y); });
        return out;
    }
    const Int dil(n);
    scanner.enumerate([&](const LatticePoint& y) {
        RatVector x = p.chart().lift(y, dil);
        LatticePoint q(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i].get_den() != 1)
                return;
            q[i] = x[i].get_num();
        }
        out.push_back(std::move(q));
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<LatticePoint> lattice_points(const LatticePolytope& p, unsigned long n)
{
    return scan_points(p, n, false);
}

Int count_lattice_points(const LatticePolytope& p, unsigned long n)
{
    if (p.dim() == 0)
        return 1;
    if (!p.full_dimensional())
        return Int(static_cast<unsigned long>(lattice_points(p, n).size()));
    return Scanner(p, n, false).count();
}

Int interior_count(const LatticePolytope& p, unsigned long n)
{
    if (!p.full_dimensional())
        throw std::invalid_argument("interior_count: polytope is not full-dimensional");
    if (p.dim() == 0)
        return 1;
    return Scanner(p, n, true).count();
}

std::vector<LatticePoint> interior_points(const LatticePolytope& p, unsigned long n)
{
    if (!p.full_dimensional())
        throw std::invalid_argument("interior_points: polytope is not full-dimensional");
    return scan_points(p, n, true);
}

std::vector<LatticePoint> boundary_points(const LatticePolytope& p)
{
    std::vector<LatticePoint> all = lattice_points(p, 1);
    if (p.dim() == 0)
        return all;
    std::vector<LatticePoint> out;
    for (auto& x : all) {
        LatticePoint y = p.chart().project(x);
        bool tight = false;
        for (const auto& f : p.chart_facets()) {
            Int s = 0;
            for (std::size_t i = 0; i < y.size(); ++i)
                s += f.normal[i] * y[i];
            if (s == f.offset) {
                tight = true;
                break;
            }
        }
        if (tight)
            out.push_back(std::move(x));
    }
    return out;
}

}  // namespace polylab
