#include "polylab/triangulation.hpp"

#include "polylab/ehrhart.hpp"
#include "polylab/hull.hpp"
#include "polylab/lp.hpp"
#include "polylab/matrix.hpp"
#include "polylab/parallelepiped.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace polylab {

namespace {

std::string cell_string(const Cell& c)
{
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i > 0)
            s += ",";
        s += std::to_string(c[i]);
    }
    return s + "]";
}

// Solver for affine (barycentric) coordinates with respect to a simplex:
// columns (v_i, 1), so solve((x, 1)) gives lambda with sum lambda_i = 1.
LinearSolver barycentric_solver(std::span<const LatticePoint> simplex)
{
    const std::size_t m = simplex.front().size();
    IntMatrix a(m + 1, simplex.size());
    for (std::size_t j = 0; j < simplex.size(); ++j) {
        for (std::size_t i = 0; i < m; ++i)
            a(i, j) = simplex[j][i];
        a(m, j) = 1;
    }
    return LinearSolver(a);
}

std::optional<RatVector> barycentric(const LinearSolver& solver, std::span<const Int> x)
{
    IntVector rhs(x.begin(), x.end());
    rhs.emplace_back(1);
    return solver.solve(std::span<const Int>(rhs));
}

Cell merged(const Cell& c, std::size_t extra)
{
    Cell out = c;
    out.insert(std::lower_bound(out.begin(), out.end(), extra), extra);
    return out;
}

bool is_subset(const Cell& small, const Cell& big)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

PointConfiguration::PointConfiguration(std::vector<LatticePoint> points) : points_(std::move(points))
{
    std::set<LatticePoint> seen;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i].size() != points_.front().size())
            throw std::invalid_argument("configuration point " + std::to_string(i) +
                                        " has a different length");
        if (!seen.insert(points_[i]).second)
            throw std::invalid_argument("configuration point " + std::to_string(i) + " is a duplicate");
    }
}

Triangulation::Triangulation(PointConfiguration config, std::vector<Cell> cells)
    : config_(std::move(config)), cells_(std::move(cells))
{
    for (std::size_t c = 0; c < cells_.size(); ++c) {
        Cell& cell = cells_[c];
        if (cell.empty())
            throw std::invalid_argument("cell " + std::to_string(c) + " is empty");
        for (auto i : cell)
            if (i >= config_.size())
                throw std::invalid_argument("cell " + std::to_string(c) + " refers to point " +
                                            std::to_string(i) + " but there are only " +
                                            std::to_string(config_.size()) + " points");
        std::sort(cell.begin(), cell.end());
        if (std::adjacent_find(cell.begin(), cell.end()) != cell.end())
            throw std::invalid_argument("cell " + std::to_string(c) + " repeats a point");
        if (cell.size() != cells_.front().size())
            throw std::invalid_argument("cell " + std::to_string(c) + " has " +
                                        std::to_string(cell.size()) + " points, cell 0 has " +
                                        std::to_string(cells_.front().size()));
        const auto pts = cell_points(cell);
        if (affine_dimension(pts) != static_cast<long>(cell.size()) - 1)
            throw std::invalid_argument("cell " + std::to_string(c) + " is affinely dependent");
    }
    std::set<Cell> faces;
    for (const auto& cell : cells_) {
        const std::size_t k = cell.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            Cell f;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (std::size_t{1} << i))
                    f.push_back(cell[i]);
            faces.insert(std::move(f));
        }
    }
    if (cells_.empty())
        faces.insert(Cell{});
    faces_.assign(faces.begin(), faces.end());
}

bool Triangulation::is_face(const Cell& f) const
{
    Cell sorted = f;
    std::sort(sorted.begin(), sorted.end());
    return std::binary_search(faces_.begin(), faces_.end(), sorted);
}

std::vector<LatticePoint> Triangulation::cell_points(const Cell& c) const
{
    std::vector<LatticePoint> out;
    out.reserve(c.size());
    for (auto i : c)
        out.push_back(config_[i]);
    return out;
}

Int normalized_volume(std::span<const LatticePoint> simplex)
{
    if (simplex.size() <= 1)
        return 1;
    const std::size_t m = simplex.front().size();
    IntMatrix edges(simplex.size() - 1, m);
    for (std::size_t i = 1; i < simplex.size(); ++i)
        for (std::size_t j = 0; j < m; ++j)
            edges(i - 1, j) = simplex[i][j] - simplex[0][j];
    if (rank(edges) != edges.rows())
        return 0;
    return lattice_index(edges);
}

namespace {

/// Recursive pulling on index subsets of a point list, memoized per subset so
/// that shared faces are triangulated identically.
class Puller {
public:
    Puller(const std::vector<LatticePoint>& points, std::vector<std::size_t> rank)
        : points_(points), rank_(std::move(rank))
    {
    }

    const std::vector<Cell>& pull(const Cell& subset)
    {
        if (auto it = memo_.find(subset); it != memo_.end())
            return it->second;
        std::vector<LatticePoint> sub;
        for (auto i : subset)
            sub.push_back(points_[i]);
        const long k = affine_dimension(sub);
        std::vector<Cell> cells;
        if (static_cast<long>(subset.size()) == k + 1) {
            cells.push_back(subset);
        } else {
            std::size_t first = 0;
            for (std::size_t i = 1; i < subset.size(); ++i)
                if (rank_[subset[i]] < rank_[subset[first]])
                    first = i;
            const std::size_t apex = subset[first];
            for (const auto& facet : relative_facet_points(sub)) {
                if (std::find(facet.begin(), facet.end(), first) != facet.end())
                    continue;
                Cell face;
                for (auto i : facet)
                    face.push_back(subset[i]);
                for (const auto& c : pull(face))
                    cells.push_back(merged(c, apex));
            }
        }
        return memo_.emplace(subset, std::move(cells)).first->second;
    }

private:
    const std::vector<LatticePoint>& points_;
    std::vector<std::size_t> rank_;
    std::map<Cell, std::vector<Cell>> memo_;
};

// Stellar subdivision at every point not used by any cell, in pulling order.
void insert_unused(const std::vector<LatticePoint>& points, const std::vector<std::size_t>& order,
                   std::vector<Cell>& cells)
{
    std::vector<bool> used(points.size(), false);
    for (const auto& c : cells)
        for (auto i : c)
            used[i] = true;
    for (auto q : order) {
        if (used[q])
            continue;
        std::optional<Cell> carrier;
        for (const auto& c : cells) {
            std::vector<LatticePoint> pts;
            for (auto i : c)
                pts.push_back(points[i]);
            auto lambda = barycentric(barycentric_solver(pts), points[q]);
            if (!lambda)
                continue;
            if (std::any_of(lambda->begin(), lambda->end(), [](const Rat& x) { return x < 0; }))
                continue;
            Cell support;
            for (std::size_t i = 0; i < c.size(); ++i)
                if ((*lambda)[i] != 0)
                    support.push_back(c[i]);
            carrier = std::move(support);
            break;
        }
        if (!carrier)
            continue;  // outside the triangulated region
        std::vector<Cell> next;
        for (const auto& c : cells) {
            if (!is_subset(*carrier, c)) {
                next.push_back(c);
                continue;
            }
            for (auto v : *carrier) {
                Cell nc;
                for (auto i : c)
                    if (i != v)
                        nc.push_back(i);
                next.push_back(merged(nc, q));
            }
        }
        cells = std::move(next);
        used[q] = true;
    }
}

std::vector<std::size_t> checked_order(std::size_t n, const std::optional<std::vector<std::size_t>>& order)
{
    std::vector<std::size_t> out(n);
    std::iota(out.begin(), out.end(), 0);
    if (!order)
        return out;
    std::vector<std::size_t> sorted = *order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != out)
        throw std::invalid_argument("pulling order must be a permutation of 0.." + std::to_string(n - 1));
    return *order;
}

bool on_facet(const Facet& f, std::span<const Int> x)
{
    Int s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += f.normal[i] * x[i];
    return s == f.offset;
}

}  // namespace

Triangulation pulling_triangulation(const PointConfiguration& config, Scope scope,
                                    std::optional<std::vector<std::size_t>> order)
{
    if (config.size() == 0)
        throw std::invalid_argument("pulling_triangulation: empty configuration");
    std::vector<std::size_t> ord = checked_order(config.size(), order);

    if (scope == Scope::Full) {
        std::vector<std::size_t> rank(config.size());
        for (std::size_t i = 0; i < ord.size(); ++i)
            rank[ord[i]] = i;
        Puller puller(config.points(), rank);
        Cell all(config.size());
        std::iota(all.begin(), all.end(), 0);
        std::vector<Cell> cells = puller.pull(all);
        insert_unused(config.points(), ord, cells);
        return Triangulation(config, std::move(cells));
    }

    const LatticePolytope p = LatticePolytope::from_points(config.points());
    if (!p.full_dimensional())
        throw std::invalid_argument("boundary triangulation needs a full-dimensional configuration");
    if (p.dim() < 1)
        throw std::invalid_argument("boundary triangulation needs dimension >= 1");
    const auto& facets = p.halfspaces().facets;

    // Keep boundary points only, in the original index order.
    std::vector<std::size_t> old_to_new(config.size(), config.size());
    std::vector<LatticePoint> boundary;
    for (std::size_t i = 0; i < config.size(); ++i)
        for (const auto& f : facets)
            if (on_facet(f, config[i])) {
                old_to_new[i] = boundary.size();
                boundary.push_back(config[i]);
                break;
            }
    std::vector<std::size_t> new_order;
    for (auto i : ord)
        if (old_to_new[i] != config.size())
            new_order.push_back(old_to_new[i]);
    std::vector<std::size_t> rank(boundary.size());
    for (std::size_t i = 0; i < new_order.size(); ++i)
        rank[new_order[i]] = i;

    Puller puller(boundary, rank);
    std::set<Cell> unique;
    for (const auto& f : facets) {
        Cell on;
        for (std::size_t i = 0; i < boundary.size(); ++i)
            if (on_facet(f, boundary[i]))
                on.push_back(i);
        for (const auto& c : puller.pull(on))
            unique.insert(c);
    }
    std::vector<Cell> cells(unique.begin(), unique.end());
    insert_unused(boundary, new_order, cells);
    return Triangulation(PointConfiguration(std::move(boundary)), std::move(cells));
}

Int normalized_volume(const LatticePolytope& p)
{
    if (p.dim() <= 0)
        return 1;
    const PointConfiguration config(p.vertices());
    Int total = 0;
    const Triangulation t = pulling_triangulation(config, Scope::Full);
    for (const auto& c : t.cells())
        total += normalized_volume(t.cell_points(c));
    return total;
}

namespace {

// True when conv(a) and conv(b) meet exactly in conv(a & b).
bool proper_intersection(const Triangulation& t, const Cell& a, const Cell& b, const LinearSolver& solver_a)
{
    Cell common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    const auto& pts = t.config().points();

    // Quick accept: a facet hyperplane of a (inside aff a) with b on its far
    // side, touching b only in common vertices.
    std::vector<RatVector> coords;
    bool in_hull = true;
    for (auto u : b) {
        auto lambda = barycentric(solver_a, pts[u]);
        if (!lambda) {
            in_hull = false;
            break;
        }
        coords.push_back(std::move(*lambda));
    }
    if (in_hull) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            bool separates = true;
            for (std::size_t j = 0; j < b.size() && separates; ++j) {
                const Rat& l = coords[j][i];
                if (l > 0 || (l == 0 && !std::binary_search(common.begin(), common.end(), b[j])))
                    separates = false;
            }
            if (separates)
                return true;
        }
    }

    // maximize the weight on non-common vertices of a over conv(a) cap conv(b).
    const std::size_t na = a.size(), nb = b.size();
    const std::size_t m = t.config().ambient_dim();
    LinearProgram lp;
    lp.variables = na + nb;
    lp.objective.assign(lp.variables, Rat(0));
    for (std::size_t i = 0; i < na; ++i)
        if (!std::binary_search(common.begin(), common.end(), a[i]))
            lp.objective[i] = 1;
    LinearConstraint sum_a{RatVector(lp.variables, Rat(0)), Sense::Equal, Rat(1)};
    LinearConstraint sum_b{RatVector(lp.variables, Rat(0)), Sense::Equal, Rat(1)};
    for (std::size_t i = 0; i < na; ++i)
        sum_a.coeffs[i] = 1;
    for (std::size_t j = 0; j < nb; ++j)
        sum_b.coeffs[na + j] = 1;
    lp.constraints.push_back(std::move(sum_a));
    lp.constraints.push_back(std::move(sum_b));
    for (std::size_t c = 0; c < m; ++c) {
        LinearConstraint eq{RatVector(lp.variables, Rat(0)), Sense::Equal, Rat(0)};
        for (std::size_t i = 0; i < na; ++i)
            eq.coeffs[i] = pts[a[i]][c];
        for (std::size_t j = 0; j < nb; ++j)
            eq.coeffs[na + j] = -pts[b[j]][c];
        lp.constraints.push_back(std::move(eq));
    }
    const LpResult res = solve_lp(lp);
    if (res.status == LpStatus::Infeasible)
        return true;
    return res.status == LpStatus::Optimal && res.value == 0;
}

ValidationResult fail(std::string reason)
{
    ValidationResult r;
    r.valid = false;
    r.reason = std::move(reason);
    return r;
}

}  // namespace

ValidationResult validate(const Triangulation& t, const LatticePolytope& target, Scope scope)
{
    const auto& cells = t.cells();
    if (cells.empty())
        return fail("triangulation has no cells");
    if (t.config().ambient_dim() != target.ambient_dim())
        return fail("configuration and polytope have different ambient dimensions");
    {
        std::set<Cell> seen;
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (!seen.insert(cells[c]).second)
                return fail("cell " + std::to_string(c) + " " + cell_string(cells[c]) + " is listed twice");
    }

    if (scope == Scope::Full) {
        if (t.cell_dim() != target.dim())
            return fail("cells have dimension " + std::to_string(t.cell_dim()) +
                        " but the polytope has dimension " + std::to_string(target.dim()));
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (auto i : cells[c])
                if (!contains(target, t.config()[i], Membership::Closed))
                    return fail("cell " + std::to_string(c) + " uses point " + std::to_string(i) +
                                " outside the polytope");
        Int total = 0;
        for (const auto& c : cells)
            total += normalized_volume(t.cell_points(c));
        const Int expected = normalized_volume(target);
        if (total != expected)
            return fail("cell volumes sum to " + to_string(total) + " but the polytope has volume " +
                        to_string(expected));
    } else {
        if (!target.full_dimensional())
            return fail("boundary scope needs a full-dimensional polytope");
        if (t.cell_dim() != target.dim() - 1)
            return fail("boundary cells must have dimension " + std::to_string(target.dim() - 1));
        const auto& facets = target.halfspaces().facets;
        std::vector<Int> volume(facets.size(), Int(0));
        for (std::size_t c = 0; c < cells.size(); ++c) {
            std::size_t home = facets.size();
            for (std::size_t f = 0; f < facets.size() && home == facets.size(); ++f) {
                bool all = true;
                for (auto i : cells[c])
                    if (!on_facet(facets[f], t.config()[i]) ||
                        !contains(target, t.config()[i], Membership::Closed)) {
                        all = false;
                        break;
                    }
                if (all)
                    home = f;
            }
            if (home == facets.size())
                return fail("cell " + std::to_string(c) + " " + cell_string(cells[c]) +
                            " does not lie in a facet of the polytope");
            volume[home] += normalized_volume(t.cell_points(cells[c]));
        }
        for (std::size_t f = 0; f < facets.size(); ++f) {
            std::vector<LatticePoint> verts;
            for (auto v : target.facet_vertices()[f])
                verts.push_back(target.vertices()[v]);
            const Int expected = normalized_volume(LatticePolytope::from_points(verts));
            if (volume[f] != expected)
                return fail("cells in facet " + std::to_string(f) + " have volume " + to_string(volume[f]) +
                            " but the facet has volume " + to_string(expected));
        }
    }

    for (std::size_t a = 0; a < cells.size(); ++a) {
        const auto pts = t.cell_points(cells[a]);
        const LinearSolver solver = barycentric_solver(pts);
        for (std::size_t b = 0; b < cells.size(); ++b) {
            if (a == b)
                continue;
            if (!proper_intersection(t, cells[a], cells[b], solver)) {
                ValidationResult r = fail("cells " + std::to_string(std::min(a, b)) + " and " +
                                          std::to_string(std::max(a, b)) +
                                          " do not intersect in a common face");
                r.pair = std::make_pair(std::min(a, b), std::max(a, b));
                return r;
            }
        }
    }
    return {};
}

bool is_fine(const Triangulation& t)
{
    const auto& pts = t.config().points();
    std::vector<bool> used(pts.size(), false);
    for (const auto& c : t.cells())
        for (auto i : c)
            used[i] = true;
    if (std::find(used.begin(), used.end(), false) != used.end())
        return false;
    for (const auto& c : t.cells()) {
        const LinearSolver solver = barycentric_solver(t.cell_points(c));
        for (std::size_t q = 0; q < pts.size(); ++q) {
            if (std::binary_search(c.begin(), c.end(), q))
                continue;
            auto lambda = barycentric(solver, pts[q]);
            if (lambda && std::all_of(lambda->begin(), lambda->end(), [](const Rat& x) { return x >= 0; }))
                return false;
        }
    }
    return true;
}

IntPoly link_h(const Triangulation& t, const Cell& face)
{
    Cell f = face;
    std::sort(f.begin(), f.end());
    if (!t.is_face(f))
        throw std::invalid_argument("link_h: " + cell_string(f) + " is not a face of the triangulation");
    const std::size_t d = t.cells().empty() ? 0 : t.cells().front().size();
    IntPoly h;
    for (const auto& g : t.faces())
        if (g.size() >= f.size() && is_subset(f, g))
            h += IntPoly::one_minus_t_pow(d - g.size()).shifted(g.size() - f.size());
    return h;
}

IntPoly box_poly(std::span<const LatticePoint> simplex)
{
    if (simplex.empty())
        return IntPoly{1};
    if (affine_dimension(simplex) != static_cast<long>(simplex.size()) - 1)
        throw std::invalid_argument("box_poly: simplex vertices are affinely dependent");
    std::vector<IntVector> lifted;
    for (const auto& v : simplex) {
        IntVector w = v;
        w.emplace_back(1);
        lifted.push_back(std::move(w));
    }
    IntVector hist(simplex.size() + 1, Int(0));
    for (const auto& bp : box_points(lifted, BoxMode::Open)) {
        const Int& height = bp.point.back();
        hist[height.get_ui()] += 1;
    }
    return IntPoly(std::move(hist));
}

IntVector mp_delta(const LatticePolytope& p, const Triangulation& t)
{
    if (!is_reflexive(p))
        throw std::invalid_argument("mp_delta: the polytope is not reflexive");
    if (t.cell_dim() != p.dim() - 1)
        throw std::invalid_argument("mp_delta: the triangulation is not a boundary triangulation");
    IntPoly total;
    for (const auto& f : t.faces()) {
        const IntPoly b = box_poly(t.cell_points(f));
        if (b.is_zero())
            continue;
        total += b * link_h(t, f);
    }
    return total.window(static_cast<std::size_t>(p.dim() + 1));
}

BoxUnimodalReport is_box_unimodal(const Triangulation& t, Scope scope)
{
    BoxUnimodalReport report;
    report.regular = is_regular(t, scope).regular;
    bool all = true;
    for (const auto& f : t.faces()) {
        if (f.size() < 2)
            continue;
        IntPoly b = box_poly(t.cell_points(f));
        if (b.is_zero())
            continue;
        IntVector inner;
        for (std::size_t i = 1; i < f.size(); ++i)
            inner.push_back(b.coeff(i));
        FaceBoxReport fr{f, std::move(b), is_unimodal(inner)};
        all = all && fr.unimodal;
        report.faces.push_back(std::move(fr));
    }
    report.box_unimodal = report.regular && all;
    return report;
}

SimplexCensus simplex_census(const LatticePolytope& p)
{
    const std::vector<LatticePoint> pts = lattice_points(p, 1);
    SimplexCensus census = simplex_census(pts, p.dim());
    census.lattice_points_are_vertices = pts.size() == p.vertices().size();
    return census;
}

SimplexCensus simplex_census(std::span<const LatticePoint> pts, long dim)
{
    SimplexCensus census;
    census.lattice_points = pts.size();
    const std::size_t k = static_cast<std::size_t>(dim) + 1;
    if (Int(binomial(static_cast<long>(pts.size()), static_cast<long>(k))) > scan_budget())
        throw ScaleGuardError("simplex census over " + std::to_string(pts.size()) +
                              " points exceeds the scale guard");
    if (pts.size() < k)
        return census;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<LatticePoint> simplex(k);
    for (;;) {
        for (std::size_t i = 0; i < k; ++i)
            simplex[i] = pts[idx[i]];
        const Int vol = normalized_volume(simplex);
        if (vol != 0) {
            ++census.simplices;
            if (vol != 1)
                ++census.non_unimodal;
            ++census.by_volume[vol];
            ++census.box_by_volume[vol][vol == 1 ? IntPoly{} : box_poly(simplex)];
        }
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == pts.size() - k + (i - 1))
            --i;
        if (i == 0)
            break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return census;
}

}  // namespace polylab
