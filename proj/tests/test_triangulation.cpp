#include "oracles.hpp"

#include "polylab/ehrhart.hpp"
#include "polylab/polytope.hpp"
#include "polylab/triangulation.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace polylab;
using oracle::ints;
using oracle::points;

namespace {

LatticePolytope poly(std::initializer_list<std::initializer_list<long>> pts) { return LatticePolytope::from_points(points(pts)); }

Triangulation tri(std::initializer_list<std::initializer_list<long>> pts, std::vector<Cell> cells)
{
    return Triangulation(PointConfiguration(points(pts)), std::move(cells));
}

std::vector<LatticePoint> remark_points()
{
    return points({{0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0},
                   {-1, -1, -1, -1, 3}, {0, 0, 0, 0, 1}});
}

std::vector<LatticePoint> cross(std::size_t d)
{
    std::vector<LatticePoint> out;
    for (std::size_t i = 0; i < d; ++i)
        for (long s : {1L, -1L}) {
            LatticePoint e(d, Int(0));
            e[i] = s;
            out.push_back(e);
        }
    return out;
}

std::vector<LatticePoint> cube_pm(std::size_t d)
{
    std::vector<LatticePoint> out;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        LatticePoint v(d);
        for (std::size_t i = 0; i < d; ++i)
            v[i] = (mask & (1u << i)) ? 1 : -1;
        out.push_back(v);
    }
    return out;
}

std::vector<LatticePoint> reflexive_simplex(std::size_t d)
{
    std::vector<LatticePoint> out;
    for (std::size_t i = 0; i < d; ++i) {
        LatticePoint e(d, Int(0));
        e[i] = 1;
        out.push_back(e);
    }
    out.push_back(LatticePoint(d, Int(-1)));
    return out;
}

// The whirl: two nested triangles joined by a twisted ring of triangles.
Triangulation whirl()
{
    return tri({{0, 0}, {12, 0}, {6, 12}, {3, 2}, {9, 2}, {6, 8}},
               {{3, 4, 5}, {1, 3, 4}, {0, 1, 3}, {2, 4, 5}, {1, 2, 4}, {0, 3, 5}, {0, 2, 5}});
}

std::vector<LatticePoint> all_lattice_points(const std::vector<LatticePoint>& verts)
{
    return lattice_points(LatticePolytope::from_points(verts), 1);
}

}  // namespace

TEST(Construction, RejectsBadCells)
{
    EXPECT_THROW(tri({{0, 0}, {1, 0}, {0, 1}}, {{0, 1, 3}}), std::invalid_argument);
    EXPECT_THROW(tri({{0, 0}, {1, 0}, {2, 0}}, {{0, 1, 2}}), std::invalid_argument);
    EXPECT_THROW(tri({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {{0, 1, 2}, {1, 3}}), std::invalid_argument);
    EXPECT_THROW(tri({{0, 0}, {1, 0}, {0, 1}}, {{0, 0, 1}}), std::invalid_argument);
    EXPECT_THROW(PointConfiguration(points({{0, 0}, {0, 0}})), std::invalid_argument);
}

TEST(Construction, FacesIncludeEmptySet)
{
    const Triangulation t = tri({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {{0, 1, 2}, {1, 2, 3}});
    ASSERT_FALSE(t.faces().empty());
    EXPECT_TRUE(t.faces().front().empty());
    // empty + 4 vertices + 5 edges + 2 triangles
    EXPECT_EQ(t.faces().size(), 12u);
    EXPECT_TRUE(t.is_face({1, 2}));
    EXPECT_FALSE(t.is_face({0, 3}));
}

TEST(Volume, NormalizedVolumes)
{
    EXPECT_EQ(normalized_volume(points({{0, 0}, {1, 0}, {0, 1}})), 1);
    EXPECT_EQ(normalized_volume(points({{0, 0}, {2, 0}, {0, 3}})), 6);
    EXPECT_EQ(normalized_volume(points({{0, 0}, {1, 0}, {2, 0}})), 0);
    // A segment of lattice length 2 in R^3.
    EXPECT_EQ(normalized_volume(points({{0, 0, 0}, {2, 2, 0}})), 2);
    EXPECT_EQ(normalized_volume(poly({{-1, -1}, {1, -1}, {-1, 1}, {1, 1}})), 8);
}

TEST(Validate, RemarkTriangulations)
{
    const auto target = LatticePolytope::from_points(remark_points());
    const Triangulation two(PointConfiguration(remark_points()), {{0, 1, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 6}});
    EXPECT_TRUE(validate(two, target, Scope::Full).valid);
    const Triangulation five(PointConfiguration(remark_points()),
                             {{0, 1, 2, 3, 4, 6}, {0, 1, 2, 3, 5, 6}, {0, 1, 2, 4, 5, 6}, {0, 1, 3, 4, 5, 6},
                              {0, 2, 3, 4, 5, 6}});
    EXPECT_TRUE(validate(five, target, Scope::Full).valid);
    for (const auto& c : five.cells())
        EXPECT_EQ(normalized_volume(five.cell_points(c)), 1);
}

TEST(Validate, OverlappingCellsAreInvalid)
{
    const auto square = poly({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    const Triangulation bad = tri({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {{0, 1, 2}, {0, 1, 3}});
    const ValidationResult r = validate(bad, square, Scope::Full);
    EXPECT_FALSE(r.valid);
    ASSERT_TRUE(r.pair);
    EXPECT_EQ(*r.pair, std::make_pair(std::size_t{0}, std::size_t{1}));
    // Right total volume, but the long diagonal of one cell meets two edges
    // of the others in a T-junction at (1,1).
    const auto big = poly({{0, 0}, {2, 0}, {0, 2}, {2, 2}});
    const Triangulation junction = tri({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}}, {{0, 1, 3}, {0, 2, 4}, {2, 3, 4}});
    EXPECT_FALSE(validate(junction, big, Scope::Full).valid);
}

TEST(Validate, VolumeAndContainmentFailures)
{
    const auto square = poly({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    EXPECT_FALSE(validate(tri({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {{0, 1, 2}}), square, Scope::Full).valid);
    EXPECT_FALSE(validate(tri({{0, 0}, {1, 0}, {0, 1}, {2, 2}}, {{0, 1, 2}, {1, 2, 3}}), square, Scope::Full).valid);
    // A full-scope triangulation checked as a boundary one.
    EXPECT_FALSE(validate(tri({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {{0, 1, 2}, {1, 2, 3}}), square, Scope::Boundary).valid);
}

TEST(Validate, BoundaryOfCrossPolygon)
{
    const auto target = LatticePolytope::from_points(cross(2));
    const Triangulation t = tri({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    EXPECT_TRUE(validate(t, target, Scope::Boundary).valid);
    const Triangulation missing = tri({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}});
    EXPECT_FALSE(validate(missing, target, Scope::Boundary).valid);
    const Triangulation diagonal = tri({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 2}});
    EXPECT_FALSE(validate(diagonal, target, Scope::Boundary).valid);
}

TEST(LinkH, Examples)
{
    const Triangulation t = tri({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    EXPECT_EQ(link_h(t, {}), IntPoly({1, 2, 1}));
    EXPECT_EQ(link_h(t, {0}), IntPoly({1, 1}));
    EXPECT_EQ(link_h(t, {0, 1}), IntPoly({1}));
    EXPECT_THROW(link_h(t, {0, 2}), std::invalid_argument);
    const Triangulation s = pulling_triangulation(PointConfiguration(reflexive_simplex(3)), Scope::Boundary);
    EXPECT_EQ(s.cells().size(), 4u);
    EXPECT_EQ(link_h(s, {}), IntPoly({1, 1, 1, 1}));
}

TEST(LinkH, SymmetricOnBoundaryTriangulations)
{
    for (const auto& verts : {cross(3), cube_pm(3), reflexive_simplex(4), cross(4)}) {
        const Triangulation t = pulling_triangulation(PointConfiguration(all_lattice_points(verts)), Scope::Boundary);
        const long d = t.cell_dim() + 1;
        const bool regular = is_regular(t, Scope::Boundary).regular;
        EXPECT_TRUE(regular);
        for (const auto& f : t.faces()) {
            const IntPoly h = link_h(t, f);
            const long dprime = d - static_cast<long>(f.size());
            const IntVector w = h.window(static_cast<std::size_t>(dprime + 1));
            EXPECT_TRUE(is_symmetric(w, dprime));
            if (regular) {
                EXPECT_EQ(w[0], 1);
                for (long i = 0; i + 1 <= dprime / 2; ++i)
                    EXPECT_LE(w[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i + 1)]);
            }
        }
    }
}

TEST(BoxPoly, Examples)
{
    EXPECT_EQ(box_poly(points({{0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0},
                               {2, 2, 2, 2, 3}})),
              IntPoly({0, 0, 1, 0, 1}));
    const auto r = remark_points();
    EXPECT_EQ(box_poly(std::vector<LatticePoint>(r.begin(), r.begin() + 6)), IntPoly({0, 0, 1, 0, 1}));
    EXPECT_EQ(box_poly(points({{0, 0}, {1, 0}, {0, 1}})), IntPoly{});
    EXPECT_EQ(box_poly(std::vector<LatticePoint>{}), IntPoly({1}));
    EXPECT_EQ(box_poly(points({{-1, -1}, {1, -1}})), IntPoly({0, 1}));
    EXPECT_THROW(box_poly(points({{0, 0}, {1, 1}, {2, 2}})), std::invalid_argument);
}

TEST(BoxPoly, SymmetricOnRandomSimplices)
{
    std::mt19937 rng(303);
    int nonzero = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t dim = 1 + trial % 5;
        const auto pts = oracle::random_full_dim_points(rng, dim + 1, dim, -2, 2);
        const IntPoly b = box_poly(pts);
        const long r = static_cast<long>(dim);
        const IntVector w = b.window(static_cast<std::size_t>(r + 2));
        EXPECT_EQ(w[0], 0);
        for (long i = 1; i <= r; ++i)
            EXPECT_EQ(w[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(r + 1 - i)]);
        if (normalized_volume(pts) == 1)
            EXPECT_TRUE(b.is_zero());
        nonzero += !b.is_zero();
    }
    EXPECT_GT(nonzero, 0);
}

TEST(MpDelta, Examples)
{
    const auto c2 = LatticePolytope::from_points(cross(2));
    const Triangulation t = tri({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    EXPECT_EQ(mp_delta(c2, t), ints({1, 2, 1}));
    const auto sq = LatticePolytope::from_points(cube_pm(2));
    const Triangulation coarse = tri({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    EXPECT_TRUE(validate(coarse, sq, Scope::Boundary).valid);
    EXPECT_EQ(mp_delta(sq, coarse), ints({1, 6, 1}));
    const auto s2 = LatticePolytope::from_points(reflexive_simplex(2));
    const Triangulation edges = tri({{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_EQ(mp_delta(s2, edges), ints({1, 1, 1}));
    EXPECT_THROW(mp_delta(poly({{0, 0}, {1, 0}, {0, 1}}), edges), std::invalid_argument);
}

TEST(MpDelta, MatchesCountingOnReflexivePolytopes)
{
    const std::vector<std::vector<LatticePoint>> suite = {
        cross(2), cross(3), cross(4), reflexive_simplex(2), reflexive_simplex(3), reflexive_simplex(4), cube_pm(2),
        cube_pm(3), points({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}})};
    for (const auto& verts : suite) {
        const auto p = LatticePolytope::from_points(verts);
        ASSERT_TRUE(is_reflexive(p));
        const IntVector expected = delta_vector(p).delta;
        for (bool fine : {false, true}) {
            const auto cfg = fine ? all_lattice_points(verts) : verts;
            const Triangulation t = pulling_triangulation(PointConfiguration(cfg), Scope::Boundary);
            ASSERT_TRUE(validate(t, p, Scope::Boundary).valid);
            EXPECT_EQ(mp_delta(p, t), expected);
            const BoxUnimodalReport b = is_box_unimodal(t, Scope::Boundary);
            EXPECT_TRUE(b.regular);
            if (b.box_unimodal)
                EXPECT_TRUE(is_unimodal(expected));
        }
    }
}

TEST(MpDelta, ReversedPullingOrderStillMatches)
{
    const auto verts = all_lattice_points(cube_pm(3));
    std::vector<std::size_t> order(verts.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = order.size() - 1 - i;
    const auto p = LatticePolytope::from_points(cube_pm(3));
    const Triangulation t = pulling_triangulation(PointConfiguration(verts), Scope::Boundary, order);
    EXPECT_TRUE(validate(t, p, Scope::Boundary).valid);
    EXPECT_EQ(mp_delta(p, t), ints({1, 23, 23, 1}));
}

TEST(Pulling, Examples)
{
    const Triangulation b = pulling_triangulation(PointConfiguration(all_lattice_points(cross(2))), Scope::Boundary);
    EXPECT_EQ(b.config().size(), 4u);
    EXPECT_EQ(b.cells().size(), 4u);
    const Triangulation sq = pulling_triangulation(PointConfiguration(points({{0, 0}, {1, 0}, {0, 1}, {1, 1}})), Scope::Full);
    EXPECT_EQ(sq.cells().size(), 2u);
    EXPECT_THROW(pulling_triangulation(PointConfiguration(points({{0, 0}, {1, 0}})), Scope::Full, std::vector<std::size_t>{0, 0}),
                 std::invalid_argument);
}

TEST(Pulling, FineRegularAndBoxUnimodalInLowDimension)
{
    std::mt19937 rng(616);
    for (int trial = 0; trial < 24; ++trial) {
        const std::size_t dim = 2 + trial % 2;
        const auto verts = oracle::random_full_dim_points(rng, dim + 2, dim, -2, 2);
        const auto p = LatticePolytope::from_points(verts);
        const Triangulation t = pulling_triangulation(PointConfiguration(lattice_points(p, 1)), Scope::Full);
        ASSERT_TRUE(validate(t, p, Scope::Full).valid);
        EXPECT_TRUE(is_fine(t));
        const BoxUnimodalReport r = is_box_unimodal(t, Scope::Full);
        EXPECT_TRUE(r.regular);
        EXPECT_TRUE(r.box_unimodal);
        Int vol = 0;
        for (const auto& c : t.cells())
            vol += normalized_volume(t.cell_points(c));
        EXPECT_EQ(vol, normalized_volume(p));
    }
}

TEST(Fine, DetectsUnusedPoints)
{
    EXPECT_FALSE(is_fine(tri({{0, 0}, {2, 0}, {0, 2}, {1, 0}}, {{0, 1, 2}})));
    EXPECT_TRUE(is_fine(tri({{0, 0}, {1, 0}, {0, 1}}, {{0, 1, 2}})));
}

TEST(Regular, WhirlIsNotRegular)
{
    const Triangulation t = whirl();
    const auto outer = poly({{0, 0}, {12, 0}, {6, 12}});
    ASSERT_TRUE(validate(t, outer, Scope::Full).valid);
    const RegularityCertificate local = is_regular(t, Scope::Full, RegularityConstraints::Local);
    const RegularityCertificate all = is_regular(t, Scope::Full, RegularityConstraints::AllPairs);
    EXPECT_FALSE(local.regular);
    EXPECT_FALSE(all.regular);
    EXPECT_FALSE(local.violated.empty());
}

TEST(Regular, WhirlRefutedByRandomHeights)
{
    // Any height function induces a regular subdivision; none of many random
    // rational heights reproduces the whirl's cells as its lower faces.
    const Triangulation t = whirl();
    std::mt19937 rng(1);
    std::uniform_int_distribution<long> num(0, 1000);
    for (int trial = 0; trial < 2000; ++trial) {
        RatVector h(6);
        for (auto& x : h)
            x = Rat(num(rng), 1000);
        bool all_folds_convex = true;
        for (const auto& cell : t.cells()) {
            // Affine function through the lifted cell vertices, evaluated at every other point.
            IntMatrix m(3, 3);
            for (std::size_t r = 0; r < 3; ++r) {
                m(r, 0) = t.config()[cell[r]][0];
                m(r, 1) = t.config()[cell[r]][1];
                m(r, 2) = 1;
            }
            RatVector rhs{h[cell[0]], h[cell[1]], h[cell[2]]};
            const auto coef = solve_rational(m, rhs);
            ASSERT_TRUE(coef);
            for (std::size_t p = 0; p < 6; ++p) {
                if (std::find(cell.begin(), cell.end(), p) != cell.end())
                    continue;
                const Rat at = (*coef)[0] * Rat(t.config()[p][0]) + (*coef)[1] * Rat(t.config()[p][1]) + (*coef)[2];
                if (h[p] <= at)
                    all_folds_convex = false;
            }
        }
        EXPECT_FALSE(all_folds_convex);
    }
}

TEST(Regular, SimpleCases)
{
    const Triangulation single = tri({{0, 0}, {1, 0}, {0, 1}}, {{0, 1, 2}});
    EXPECT_TRUE(is_regular(single, Scope::Full).regular);
    const Triangulation sq = tri({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {{0, 1, 2}, {1, 2, 3}});
    const RegularityCertificate c = is_regular(sq, Scope::Full);
    EXPECT_TRUE(c.regular);
    EXPECT_GT(c.slack, 0);
    EXPECT_EQ(c.heights.size(), 4u);
    // Unused interior point must lift strictly above the cells.
    const Triangulation coarse = tri({{0, 0}, {2, 0}, {0, 2}, {1, 1}}, {{0, 1, 2}});
    EXPECT_TRUE(is_regular(coarse, Scope::Full).regular);
}

TEST(Regular, LocalAndAllPairsAgree)
{
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 20; ++trial) {
        const auto verts = oracle::random_full_dim_points(rng, 5, 2, -2, 2);
        const auto p = LatticePolytope::from_points(verts);
        auto cfg = lattice_points(p, 1);
        std::shuffle(cfg.begin(), cfg.end(), rng);
        const Triangulation t = pulling_triangulation(PointConfiguration(cfg), Scope::Full);
        EXPECT_EQ(is_regular(t, Scope::Full, RegularityConstraints::Local).regular,
                  is_regular(t, Scope::Full, RegularityConstraints::AllPairs).regular);
    }
    const Triangulation w = whirl();
    EXPECT_EQ(is_regular(w, Scope::Full, RegularityConstraints::Local).regular,
              is_regular(w, Scope::Full, RegularityConstraints::AllPairs).regular);
}

TEST(Regular, HeightsCertifyLifting)
{
    const Triangulation t = pulling_triangulation(PointConfiguration(all_lattice_points(cube_pm(2))), Scope::Full);
    const RegularityCertificate c = is_regular(t, Scope::Full, RegularityConstraints::AllPairs);
    ASSERT_TRUE(c.regular);
    for (const auto& cell : t.cells()) {
        IntMatrix m(3, 3);
        for (std::size_t r = 0; r < 3; ++r) {
            m(r, 0) = t.config()[cell[r]][0];
            m(r, 1) = t.config()[cell[r]][1];
            m(r, 2) = 1;
        }
        const auto coef = solve_rational(m, RatVector{c.heights[cell[0]], c.heights[cell[1]], c.heights[cell[2]]});
        ASSERT_TRUE(coef);
        for (std::size_t p = 0; p < t.config().size(); ++p) {
            if (std::find(cell.begin(), cell.end(), p) != cell.end())
                continue;
            const Rat at = (*coef)[0] * Rat(t.config()[p][0]) + (*coef)[1] * Rat(t.config()[p][1]) + (*coef)[2];
            EXPECT_GT(c.heights[p], at);
        }
    }
}

TEST(BoxUnimodal, RemarkTriangulations)
{
    const Triangulation two(PointConfiguration(remark_points()), {{0, 1, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 6}});
    const BoxUnimodalReport r2 = is_box_unimodal(two, Scope::Full);
    EXPECT_TRUE(r2.regular);
    EXPECT_FALSE(r2.box_unimodal);
    bool found = false;
    for (const auto& f : r2.faces)
        if (f.face == Cell{0, 1, 2, 3, 4, 5}) {
            found = true;
            EXPECT_EQ(f.box, IntPoly({0, 0, 1, 0, 1}));
            EXPECT_FALSE(f.unimodal);
        }
    EXPECT_TRUE(found);
    const Triangulation five(PointConfiguration(remark_points()),
                             {{0, 1, 2, 3, 4, 6}, {0, 1, 2, 3, 5, 6}, {0, 1, 2, 4, 5, 6}, {0, 1, 3, 4, 5, 6},
                              {0, 2, 3, 4, 5, 6}});
    const BoxUnimodalReport r5 = is_box_unimodal(five, Scope::Full);
    EXPECT_TRUE(r5.box_unimodal);
    EXPECT_TRUE(r5.faces.empty());
}

TEST(BoxUnimodal, NonRegularIsNotBoxUnimodal)
{
    const BoxUnimodalReport r = is_box_unimodal(whirl(), Scope::Full);
    EXPECT_FALSE(r.regular);
    EXPECT_FALSE(r.box_unimodal);
}

TEST(Census, UnitSquare)
{
    const SimplexCensus c = simplex_census(poly({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    EXPECT_EQ(c.lattice_points, 4u);
    EXPECT_TRUE(c.lattice_points_are_vertices);
    EXPECT_EQ(c.simplices, 4u);
    EXPECT_EQ(c.non_unimodal, 0u);
    EXPECT_EQ(c.by_volume.at(Int(1)), 4u);
}

TEST(Census, BrunsGubeladze)
{
    const auto p = poly({{0, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1},
                         {1, 0, 2, 1, 1}, {1, 2, 0, 2, 1}, {1, 1, 2, 0, 2}, {1, 1, 1, 2, 0}, {1, 2, 1, 1, 2}});
    const SimplexCensus c = simplex_census(p);
    EXPECT_TRUE(c.lattice_points_are_vertices);
    EXPECT_EQ(c.non_unimodal, 65u);
    EXPECT_EQ(c.by_volume.at(Int(2)), 60u);
    EXPECT_EQ(c.by_volume.at(Int(3)), 5u);
    ASSERT_EQ(c.box_by_volume.at(Int(3)).size(), 1u);
    EXPECT_EQ(c.box_by_volume.at(Int(3)).begin()->first, IntPoly({0, 0, 0, 2}));
    const SimplexCensus v = simplex_census(p.vertices(), 5);
    EXPECT_EQ(v.non_unimodal, 65u);
}
