#include "polylab/lp.hpp"
#include "polylab/matrix.hpp"
#include "polylab/triangulation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace polylab {

namespace {

// w(point) - sum_i lambda_i w(cell_i) >= s
struct Fold {
    std::size_t point;
    Cell cell;
    RatVector lambda;
    std::string label;
};

std::optional<RatVector> affine_coords(const std::vector<LatticePoint>& pts, const Cell& cell,
                                       const LatticePoint& x)
{
    const std::size_t m = x.size();
    IntMatrix a(m + 1, cell.size());
    for (std::size_t j = 0; j < cell.size(); ++j) {
        for (std::size_t i = 0; i < m; ++i)
            a(i, j) = pts[cell[j]][i];
        a(m, j) = 1;
    }
    IntVector rhs(x.begin(), x.end());
    rhs.emplace_back(1);
    return LinearSolver(a).solve(std::span<const Int>(rhs));
}

std::string describe(const Cell& c)
{
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i)
        s += (i ? "," : "") + std::to_string(c[i]);
    return s + "]";
}

}  // namespace

RegularityCertificate is_regular(const Triangulation& t, Scope scope, RegularityConstraints mode)
{
    std::vector<LatticePoint> pts = t.config().points();
    std::vector<Cell> cells = t.cells();
    if (cells.empty())
        throw std::invalid_argument("is_regular: triangulation has no cells");

    if (scope == Scope::Boundary) {
        // Cone from an interior apex: the origin when it is interior, else the
        // vertex sum with every point scaled by the vertex count.
        const LatticePolytope p = LatticePolytope::from_points(pts);
        if (!p.full_dimensional())
            throw std::invalid_argument("is_regular: boundary configuration is not full-dimensional");
        const LatticePoint origin(p.ambient_dim(), Int(0));
        LatticePoint apex = origin;
        if (!contains(p, origin, Membership::Interior)) {
            const Int k(static_cast<unsigned long>(p.vertices().size()));
            for (const auto& v : p.vertices())
                for (std::size_t i = 0; i < apex.size(); ++i)
                    apex[i] += v[i];
            for (auto& q : pts)
                for (auto& x : q)
                    x *= k;
        }
        const std::size_t a = pts.size();
        pts.push_back(std::move(apex));
        for (auto& c : cells)
            c.push_back(a);
    }

    const std::size_t n = pts.size();
    std::vector<Fold> folds;
    std::vector<bool> used(n, false);
    for (const auto& c : cells)
        for (auto i : c)
            used[i] = true;

    if (mode == RegularityConstraints::AllPairs) {
        for (std::size_t ci = 0; ci < cells.size(); ++ci)
            for (std::size_t q = 0; q < n; ++q) {
                if (std::find(cells[ci].begin(), cells[ci].end(), q) != cells[ci].end())
                    continue;
                auto lambda = affine_coords(pts, cells[ci], pts[q]);
                if (!lambda)
                    throw std::invalid_argument("is_regular: cells do not span the configuration");
                folds.push_back({q, cells[ci], std::move(*lambda),
                                 "point " + std::to_string(q) + " above cell " + std::to_string(ci)});
            }
    } else {
        std::map<Cell, std::vector<std::pair<std::size_t, std::size_t>>> ridges;  // -> (cell, opposite)
        for (std::size_t ci = 0; ci < cells.size(); ++ci) {
            Cell sorted = cells[ci];
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t k = 0; k < sorted.size(); ++k) {
                Cell r = sorted;
                r.erase(r.begin() + static_cast<long>(k));
                ridges[r].emplace_back(ci, sorted[k]);
            }
        }
        for (const auto& [ridge, owners] : ridges)
            for (std::size_t x = 0; x < owners.size(); ++x)
                for (std::size_t y = x + 1; y < owners.size(); ++y) {
                    const auto [ca, va] = owners[x];
                    const auto [cb, vb] = owners[y];
                    auto lambda = affine_coords(pts, cells[ca], pts[vb]);
                    if (!lambda)
                        throw std::invalid_argument("is_regular: adjacent cells are not in a common space");
                    folds.push_back({vb, cells[ca], std::move(*lambda),
                                     "fold between cells " + std::to_string(ca) + " and " +
                                         std::to_string(cb) + " across " + describe(ridge)});
                }
        for (std::size_t q = 0; q < n; ++q) {
            if (used[q])
                continue;
            for (std::size_t ci = 0; ci < cells.size(); ++ci) {
                auto lambda = affine_coords(pts, cells[ci], pts[q]);
                if (!lambda ||
                    std::any_of(lambda->begin(), lambda->end(), [](const Rat& v) { return v < 0; }))
                    continue;
                folds.push_back({q, cells[ci], std::move(*lambda),
                                 "unused point " + std::to_string(q) + " above cell " + std::to_string(ci)});
                break;
            }
        }
    }

    // Variables: w_0..w_{n-1}, s. maximize s; w_i <= 1, s <= 1, folds >= s.
    LinearProgram lp;
    lp.variables = n + 1;
    lp.objective.assign(n + 1, Rat(0));
    lp.objective[n] = 1;
    for (std::size_t i = 0; i <= n; ++i) {
        LinearConstraint c{RatVector(n + 1, Rat(0)), Sense::LessEqual, Rat(1)};
        c.coeffs[i] = 1;
        lp.constraints.push_back(std::move(c));
    }
    for (const auto& f : folds) {
        LinearConstraint c{RatVector(n + 1, Rat(0)), Sense::GreaterEqual, Rat(0)};
        c.coeffs[f.point] += 1;
        for (std::size_t j = 0; j < f.cell.size(); ++j)
            c.coeffs[f.cell[j]] -= f.lambda[j];
        c.coeffs[n] = -1;
        lp.constraints.push_back(std::move(c));
    }
    const LpResult res = solve_lp(lp);
    if (res.status != LpStatus::Optimal)
        throw std::logic_error("is_regular: height LP did not reach an optimum");

    RegularityCertificate cert;
    cert.slack = res.x[n];
    cert.heights.assign(res.x.begin(), res.x.begin() + static_cast<long>(n));
    cert.regular = cert.slack > 0;
    for (const auto& f : folds) {
        Rat v = cert.heights[f.point];
        for (std::size_t j = 0; j < f.cell.size(); ++j)
            v -= f.lambda[j] * cert.heights[f.cell[j]];
        if (cert.regular && v <= 0)
            throw std::logic_error("is_regular: returned heights fail " + f.label);
        if (!cert.regular && v <= cert.slack)
            cert.violated.push_back(f.label);
    }
    if (!cert.regular)
        cert.heights.clear();
    return cert;
}

}  // namespace polylab
