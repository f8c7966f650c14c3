#include "polylab/polytope.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace polylab {

AffineChart::AffineChart(std::span<const LatticePoint> points)
{
    if (points.empty())
        throw std::invalid_argument("AffineChart: empty point set");
    ambient_ = points.front().size();
    for (const auto& p : points)
        if (p.size() != ambient_)
            throw std::invalid_argument("AffineChart: points have different lengths");

    IntMatrix diffs(points.size() - 1, ambient_);
    for (std::size_t i = 1; i < points.size(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j)
            diffs(i - 1, j) = points[i][j] - points[0][j];
    coords_ = pivot_columns(diffs);
    for (std::size_t j = 0; j < ambient_; ++j)
        if (!std::binary_search(coords_.begin(), coords_.end(), j))
            other_.push_back(j);

    if (other_.empty())
        return;

    // (a, b) with <a, p> - b = 0 for every point.
    IntMatrix hom(points.size(), ambient_ + 1);
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < ambient_; ++j)
            hom(i, j) = points[i][j];
        hom(i, ambient_) = -1;
    }
    for (auto& v : integer_kernel(hom)) {
        Facet e;
        e.normal.assign(v.begin(), v.begin() + static_cast<long>(ambient_));
        e.offset = v[ambient_];
        equations_.push_back(std::move(e));
    }
    IntMatrix restricted(equations_.size(), other_.size());
    for (std::size_t i = 0; i < equations_.size(); ++i)
        for (std::size_t j = 0; j < other_.size(); ++j)
            restricted(i, j) = equations_[i].normal[other_[j]];
    other_solver_.emplace(restricted);
}

LatticePoint AffineChart::project(std::span<const Int> x) const
{
    LatticePoint y(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i)
        y[i] = x[coords_[i]];
    return y;
}

RatVector AffineChart::lift(std::span<const Int> y, const Int& dilation) const
{
    RatVector x(ambient_);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        x[coords_[i]] = y[i];
    if (other_.empty())
        return x;
    RatVector rhs(equations_.size());
    for (std::size_t i = 0; i < equations_.size(); ++i) {
        Int s = equations_[i].offset * dilation;
        for (std::size_t c = 0; c < coords_.size(); ++c)
            s -= equations_[i].normal[coords_[c]] * y[c];
        rhs[i] = s;
    }
    auto rest = other_solver_->solve(rhs);
    if (!rest)
        throw std::logic_error("AffineChart::lift: inconsistent affine hull equations");
    for (std::size_t j = 0; j < other_.size(); ++j)
        x[other_[j]] = (*rest)[j];
    return x;
}

namespace {

Int dot(std::span<const Int> a, std::span<const Int> b)
{
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

}  // namespace

std::vector<std::vector<std::size_t>> relative_facet_points(std::span<const LatticePoint> points)
{
    AffineChart chart(points);
    if (chart.dim() <= 0)
        return {};
    std::vector<LatticePoint> projected;
    projected.reserve(points.size());
    for (const auto& p : points)
        projected.push_back(chart.project(p));
    std::vector<std::vector<std::size_t>> out;
    for (const auto& f : full_dimensional_facets(projected)) {
        std::vector<std::size_t> on;
        for (std::size_t i = 0; i < projected.size(); ++i)
            if (dot(f.normal, projected[i]) == f.offset)
                on.push_back(i);
        out.push_back(std::move(on));
    }
    return out;
}

Int scan_budget()
{
    if (const char* env = std::getenv("POLYLAB_SCALE_GUARD"); env != nullptr && *env != '\0') {
        Int v;
        if (v.set_str(env, 10) == 0 && v > 0)
            return v;
        throw std::invalid_argument("POLYLAB_SCALE_GUARD must be a positive integer");
    }
    return Int(100000000);
}

LatticePolytope LatticePolytope::from_points(std::vector<LatticePoint> points)
{
    if (points.empty())
        throw std::invalid_argument("from_points: empty point list");
    std::vector<LatticePoint> unique;
    {
        std::set<LatticePoint> seen;
        for (auto& p : points)
            if (seen.insert(p).second)
                unique.push_back(std::move(p));
    }

    LatticePolytope poly;
    poly.chart_ = AffineChart(unique);
    const long d = poly.chart_.dim();
    if (d == 0) {
        poly.vertices_ = unique;
        return poly;
    }

    std::vector<LatticePoint> projected;
    for (const auto& p : unique)
        projected.push_back(poly.chart_.project(p));
    std::vector<Facet> chart_facets = full_dimensional_facets(projected);

    // A point is a vertex iff the normals of the facets through it have rank d.
    std::vector<bool> is_vertex(unique.size(), false);
    for (std::size_t i = 0; i < unique.size(); ++i) {
        std::vector<IntVector> tight;
        for (const auto& f : chart_facets)
            if (dot(f.normal, projected[i]) == f.offset)
                tight.push_back(f.normal);
        if (static_cast<long>(tight.size()) >= d &&
            static_cast<long>(rank(IntMatrix::from_rows(tight))) == d)
            is_vertex[i] = true;
    }
    std::vector<std::size_t> vertex_rows;
    for (std::size_t i = 0; i < unique.size(); ++i) {
        if (is_vertex[i]) {
            vertex_rows.push_back(i);
            poly.vertices_.push_back(unique[i]);
        } else {
            poly.others_.push_back(unique[i]);
        }
    }

    const auto& coords = poly.chart_.coords();
    for (const auto& f : chart_facets) {
        Facet ambient;
        ambient.normal.assign(poly.chart_.ambient_dim(), Int(0));
        for (std::size_t c = 0; c < coords.size(); ++c)
            ambient.normal[coords[c]] = f.normal[c];
        ambient.offset = f.offset;
        std::vector<std::size_t> on;
        for (std::size_t v = 0; v < vertex_rows.size(); ++v)
            if (dot(f.normal, projected[vertex_rows[v]]) == f.offset)
                on.push_back(v);
        poly.rep_.facets.push_back(std::move(ambient));
        poly.incidence_.push_back(std::move(on));
    }
    poly.chart_facets_ = std::move(chart_facets);
    poly.rep_.equations = poly.chart_.equations();
    return poly;
}

const HalfspaceRep& facets(const LatticePolytope& p)
{
    if (p.dim() < 1)
        throw std::invalid_argument("facets: polytope has dimension 0");
    return p.halfspaces();
}

bool contains(const LatticePolytope& p, std::span<const Rat> x, Membership mode)
{
    if (x.size() != p.ambient_dim())
        throw std::invalid_argument("contains: point has wrong length");
    if (mode == Membership::Interior && !p.full_dimensional())
        return false;
    auto value = [&](const Facet& f) {
        Rat s = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (f.normal[i] != 0)
                s += Rat(f.normal[i]) * x[i];
        return s;
    };
    if (p.dim() == 0) {
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != p.vertices().front()[i])
                return false;
        return true;
    }
    for (const auto& e : p.halfspaces().equations)
        if (value(e) != e.offset)
            return false;
    for (const auto& f : p.halfspaces().facets) {
        Rat v = value(f);
        if (mode == Membership::Closed ? v > f.offset : v >= f.offset)
            return false;
    }
    return true;
}

bool contains(const LatticePolytope& p, std::span<const Int> x, Membership mode)
{
    RatVector rx = to_rational(x);
    return contains(p, rx, mode);
}

bool is_reflexive(const LatticePolytope& p)
{
    if (!p.full_dimensional() || p.dim() < 1)
        return false;
    for (const auto& f : p.halfspaces().facets)
        if (f.offset != 1)
            return false;
    return true;
}

std::optional<LatticePoint> find_non_representable(const LatticePolytope& p,
                                                    std::optional<unsigned long> max_degree)
{
    const unsigned long bound =
        max_degree.value_or(p.dim() >= 2 ? static_cast<unsigned long>(p.dim() - 1) : 1UL);
    const std::vector<LatticePoint> base = lattice_points(p, 1);
    std::set<LatticePoint> sums(base.begin(), base.end());
    for (unsigned long n = 2; n <= bound; ++n) {
        std::set<LatticePoint> next;
        for (const auto& s : sums)
            for (const auto& b : base) {
                LatticePoint v(s.size());
                for (std::size_t i = 0; i < v.size(); ++i)
                    v[i] = s[i] + b[i];
                next.insert(std::move(v));
            }
        sums = std::move(next);
        if (Int(static_cast<unsigned long>(sums.size())) != count_lattice_points(p, n)) {
            for (auto& q : lattice_points(p, n))
                if (!sums.contains(q))
                    return q;
        }
    }
    return std::nullopt;
}

bool is_integrally_closed(const LatticePolytope& p, std::optional<unsigned long> max_degree)
{
    return !find_non_representable(p, max_degree).has_value();
}

LatticePolytope prism(const LatticePolytope& p)
{
    std::vector<LatticePoint> pts;
    for (const auto& v : p.vertices())
        for (int h = 0; h <= 1; ++h) {
            LatticePoint q = v;
            q.emplace_back(h);
            pts.push_back(std::move(q));
        }
    return LatticePolytope::from_points(std::move(pts));
}

}  // namespace polylab
