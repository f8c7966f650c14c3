#include "oracles.hpp"

#include "polylab/ehrhart.hpp"
#include "polylab/hull.hpp"
#include "polylab/polytope.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

using namespace polylab;
using oracle::ints;
using oracle::points;

namespace {

LatticePolytope poly(std::initializer_list<std::initializer_list<long>> pts) { return LatticePolytope::from_points(points(pts)); }

LatticePolytope cross2() { return poly({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}); }
LatticePolytope unit_square() { return poly({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }
LatticePolytope triangle() { return poly({{0, 0}, {1, 0}, {0, 1}}); }

std::vector<oracle::Halfspace> as_halfspaces(const HalfspaceRep& rep)
{
    std::vector<oracle::Halfspace> out;
    for (const auto& f : rep.facets)
        out.push_back({f.normal, f.offset});
    std::sort(out.begin(), out.end());
    return out;
}

RatVector rats(std::initializer_list<Rat> xs) { return RatVector(xs); }

}  // namespace

TEST(FromPoints, RemovesNonVertices)
{
    const auto p = poly({{0, 0}, {2, 0}, {1, 0}, {0, 2}});
    EXPECT_EQ(p.dim(), 2);
    EXPECT_EQ(p.vertices().size(), 3u);
    EXPECT_EQ(p.non_vertex_points(), points({{1, 0}}));
}

TEST(FromPoints, SinglePointAndDuplicates)
{
    const auto p = poly({{3, 4, 5}, {3, 4, 5}});
    EXPECT_EQ(p.dim(), 0);
    EXPECT_EQ(p.vertices().size(), 1u);
    EXPECT_EQ(count_lattice_points(p, 7), 1);
    EXPECT_THROW(facets(p), std::invalid_argument);
    EXPECT_THROW(LatticePolytope::from_points({}), std::invalid_argument);
}

TEST(FromPoints, BrunsGubeladzeVerticesAreAllExtreme)
{
    const auto p = poly({{0, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1},
                         {1, 0, 2, 1, 1}, {1, 2, 0, 2, 1}, {1, 1, 2, 0, 2}, {1, 1, 1, 2, 0}, {1, 2, 1, 1, 2}});
    EXPECT_EQ(p.dim(), 5);
    EXPECT_EQ(p.vertices().size(), 10u);
    EXPECT_TRUE(p.non_vertex_points().empty());
    EXPECT_EQ(count_lattice_points(p, 1), 10);
}

TEST(Facets, Examples)
{
    const auto c = as_halfspaces(facets(cross2()));
    EXPECT_EQ(c.size(), 4u);
    for (const auto& h : c) {
        EXPECT_EQ(h.offset, 1);
        EXPECT_EQ(abs(h.normal[0]), 1);
        EXPECT_EQ(abs(h.normal[1]), 1);
    }
    const auto s = as_halfspaces(facets(unit_square()));
    ASSERT_EQ(s.size(), 4u);
    std::vector<Int> offsets;
    for (const auto& h : s)
        offsets.push_back(h.offset);
    std::sort(offsets.begin(), offsets.end());
    EXPECT_EQ(offsets, ints({0, 0, 1, 1}));
    EXPECT_EQ(as_halfspaces(facets(triangle())),
              (std::vector<oracle::Halfspace>{{ints({-1, 0}), Int(0)}, {ints({0, -1}), Int(0)}, {ints({1, 1}), Int(1)}}));
}

TEST(Facets, LowerDimensionalPolytopeHasEquations)
{
    // A triangle in the plane x + y + z = 1.
    const auto p = poly({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    EXPECT_EQ(p.dim(), 2);
    const auto& rep = facets(p);
    EXPECT_EQ(rep.facets.size(), 3u);
    ASSERT_EQ(rep.equations.size(), 1u);
    for (const auto& v : p.vertices()) {
        Int s = 0;
        for (std::size_t k = 0; k < 3; ++k)
            s += rep.equations[0].normal[k] * v[k];
        EXPECT_EQ(s, rep.equations[0].offset);
    }
    EXPECT_EQ(count_lattice_points(p, 2), 6);
    EXPECT_EQ(lattice_points(p, 1), points({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
}

TEST(Facets, AgreeWithBruteForceOnRandomPolytopes)
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t dim = 2 + trial % 3;
        const auto pts = oracle::random_full_dim_points(rng, dim + 2 + trial % 5, dim, -3, 3);
        const auto p = LatticePolytope::from_points(pts);
        ASSERT_EQ(as_halfspaces(facets(p)), oracle::brute_facets(pts));
    }
}

TEST(Facets, RoundTripIncidence)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t dim = 2 + trial % 3;
        const auto p = LatticePolytope::from_points(oracle::random_full_dim_points(rng, dim + 4, dim, -4, 4));
        const auto& rep = facets(p);
        for (std::size_t f = 0; f < rep.facets.size(); ++f) {
            const auto& vs = p.facet_vertices()[f];
            std::vector<IntVector> on;
            for (auto i : vs)
                on.push_back(p.vertices()[i]);
            EXPECT_EQ(affine_dimension(on), static_cast<long>(dim) - 1);
            EXPECT_EQ(gcd_of(rep.facets[f].normal), 1);
        }
        for (std::size_t v = 0; v < p.vertices().size(); ++v) {
            std::size_t tight = 0;
            for (const auto& vs : p.facet_vertices())
                tight += std::count(vs.begin(), vs.end(), v);
            EXPECT_GE(tight, dim);
        }
    }
}

TEST(Contains, Examples)
{
    const auto sq = unit_square();
    EXPECT_TRUE(contains(sq, rats({Rat(1, 2), Rat(1, 2)}), Membership::Interior));
    EXPECT_FALSE(contains(sq, rats({0, Rat(1, 2)}), Membership::Interior));
    EXPECT_TRUE(contains(sq, rats({0, Rat(1, 2)}), Membership::Closed));
    EXPECT_FALSE(contains(sq, rats({Rat(3, 2), 0}), Membership::Closed));
    EXPECT_TRUE(contains(cross2(), ints({0, 0}), Membership::Interior));
    const auto flat = poly({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
    EXPECT_TRUE(contains(flat, rats({Rat(1, 4), Rat(1, 4), 0}), Membership::Closed));
    EXPECT_FALSE(contains(flat, rats({Rat(1, 4), Rat(1, 4), 0}), Membership::Interior));
    EXPECT_FALSE(contains(flat, rats({Rat(1, 4), Rat(1, 4), Rat(1, 2)}), Membership::Closed));
}

TEST(LatticePoints, Examples)
{
    EXPECT_EQ(count_lattice_points(unit_square(), 2), 9);
    EXPECT_EQ(count_lattice_points(cross2(), 1), 5);
    const auto ppd = LatticePolytope::from_points(oracle::subset_sums(points({{0, 0, 1}, {3, 0, 1}, {0, 1, 1}})));
    EXPECT_EQ(count_lattice_points(ppd, 1), 12);
    EXPECT_EQ(lattice_points(unit_square(), 0), points({{0, 0}}));
    EXPECT_EQ(lattice_points(triangle(), 1), points({{0, 0}, {0, 1}, {1, 0}}));
}

TEST(LatticePoints, AgreeWithBruteForce)
{
    std::mt19937 rng(55);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t dim = 2 + trial % 3;
        const auto pts = oracle::random_full_dim_points(rng, dim + 3, dim, -3, 3);
        const auto p = LatticePolytope::from_points(pts);
        for (unsigned long n = 0; n <= 2; ++n) {
            ASSERT_EQ(count_lattice_points(p, n), oracle::brute_count(pts, n));
            ASSERT_EQ(interior_count(p, n == 0 ? 1 : n), oracle::brute_interior_count(pts, n == 0 ? 1 : n));
        }
        const auto listed = lattice_points(p, 1);
        EXPECT_TRUE(std::is_sorted(listed.begin(), listed.end()));
        EXPECT_EQ(Int(static_cast<long>(listed.size())), count_lattice_points(p, 1));
    }
}

TEST(LatticePoints, MonotoneInDilation)
{
    std::mt19937 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = LatticePolytope::from_points(oracle::random_full_dim_points(rng, 5, 3, -2, 2));
        Int prev = 0;
        for (unsigned long n = 0; n <= 4; ++n) {
            const Int c = count_lattice_points(p, n);
            EXPECT_GE(c, prev);
            prev = c;
        }
    }
}

TEST(LatticePoints, EhrhartReciprocity)
{
    // #interior(nP) = (-1)^d L_P(-n), with L_P(x) = sum_i delta_i C(x + d - i, d).
    std::mt19937 rng(31);
    auto binom_poly = [](const Int& x, long d) {
        // C(x, d) for any integer x as a falling factorial.
        Int num = 1, den = 1;
        for (long k = 0; k < d; ++k) {
            num *= x - k;
            den *= k + 1;
        }
        return Int(num / den);
    };
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t dim = 2 + trial % 2;
        const auto p = LatticePolytope::from_points(oracle::random_full_dim_points(rng, dim + 2, dim, -2, 2));
        const auto d = static_cast<long>(dim);
        const DeltaReport r = delta_vector(p);
        for (long n = 1; n <= d; ++n) {
            Int l = 0;
            for (long i = 0; i <= d; ++i)
                l += r.delta[static_cast<std::size_t>(i)] * binom_poly(Int(-n + d - i), d);
            EXPECT_EQ(interior_count(p, static_cast<unsigned long>(n)), (d % 2 == 0 ? l : Int(-l)));
        }
    }
}

TEST(LatticePoints, InteriorCounts)
{
    EXPECT_EQ(interior_count(unit_square(), 1), 0);
    EXPECT_EQ(interior_count(unit_square(), 2), 1);
    EXPECT_EQ(interior_count(cross2(), 1), 1);
    EXPECT_EQ(interior_count(triangle(), 3), 1);
    EXPECT_EQ(interior_count(triangle(), 2), 0);
    EXPECT_THROW(interior_count(poly({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}), 1), std::invalid_argument);
    EXPECT_EQ(boundary_points(cross2()), points({{-1, 0}, {0, -1}, {0, 1}, {1, 0}}));
}

TEST(ScaleGuard, RefusesHugeScans)
{
    const auto big = poly({{0, 0, 0}, {1000, 0, 0}, {0, 1000, 0}, {0, 0, 1000}});
    ::setenv("POLYLAB_SCALE_GUARD", "1000", 1);
    EXPECT_THROW(count_lattice_points(big, 1), ScaleGuardError);
    ::setenv("POLYLAB_SCALE_GUARD", "junk", 1);
    EXPECT_THROW(scan_budget(), std::invalid_argument);
    ::unsetenv("POLYLAB_SCALE_GUARD");
    EXPECT_EQ(scan_budget(), Int(100000000));
    EXPECT_EQ(count_lattice_points(poly({{0, 0}, {100, 0}, {0, 100}}), 1), 5151);
}

TEST(Reflexive, Examples)
{
    EXPECT_TRUE(is_reflexive(cross2()));
    EXPECT_FALSE(is_reflexive(unit_square()));
    EXPECT_TRUE(is_reflexive(poly({{1, 0}, {0, 1}, {-1, -1}})));
    EXPECT_TRUE(is_reflexive(poly({{-1, -1}, {1, -1}, {-1, 1}, {1, 1}})));
    EXPECT_FALSE(is_reflexive(poly({{-2, 0}, {2, 0}, {0, 2}, {0, -2}})));
    EXPECT_FALSE(is_reflexive(poly({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}})));
}

TEST(Reflexive, ImpliesSymmetricDelta)
{
    for (const auto& p : {cross2(), poly({{1, 0}, {0, 1}, {-1, -1}}),
                          poly({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}),
                          poly({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}),
                          poly({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}})}) {
        ASSERT_TRUE(is_reflexive(p));
        EXPECT_TRUE(is_translate_of_reflexive(p));
    }
    // A translate of a reflexive polytope is not reflexive but has symmetric delta.
    EXPECT_TRUE(is_translate_of_reflexive(poly({{0, 0}, {2, 0}, {0, 2}, {2, 2}})));
    EXPECT_FALSE(is_reflexive(poly({{0, 0}, {2, 0}, {0, 2}, {2, 2}})));
    EXPECT_FALSE(is_translate_of_reflexive(triangle()));
}

TEST(IntegrallyClosed, Examples)
{
    EXPECT_TRUE(is_integrally_closed(triangle()));
    EXPECT_TRUE(is_integrally_closed(LatticePolytope::from_points(
        oracle::subset_sums(points({{0, 0, 1}, {3, 0, 1}, {0, 1, 1}})))));
    // Reeve-type tetrahedron of height 2: empty and not integrally closed.
    const auto reeve = poly({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}});
    EXPECT_FALSE(is_integrally_closed(reeve));
    const auto witness = find_non_representable(reeve);
    ASSERT_TRUE(witness);
    EXPECT_TRUE(contains(reeve, RatVector{Rat((*witness)[0], 2), Rat((*witness)[1], 2), Rat((*witness)[2], 2)},
                         Membership::Closed));
}

TEST(IntegrallyClosed, MustataPayneSimplex)
{
    const auto s = poly({{0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0},
                         {2, 2, 2, 2, 3}});
    EXPECT_EQ(count_lattice_points(s, 1), 6);
    EXPECT_FALSE(is_integrally_closed(s));
}

TEST(IntegrallyClosed, DefaultBoundAgreesWithHigherDegrees)
{
    std::mt19937 rng(13);
    int accepted = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t dim = 2 + trial % 2;
        const auto p = LatticePolytope::from_points(oracle::random_full_dim_points(rng, dim + 1, dim, -2, 2));
        if (!is_integrally_closed(p))
            continue;
        ++accepted;
        EXPECT_TRUE(is_integrally_closed(p, dim + 2));
    }
    EXPECT_GT(accepted, 0);
}

TEST(Prism, DoublesCountsAlongSegment)
{
    const auto p = prism(triangle());
    EXPECT_EQ(p.dim(), 3);
    for (unsigned long n = 0; n <= 3; ++n)
        EXPECT_EQ(count_lattice_points(p, n), count_lattice_points(triangle(), n) * Int(static_cast<long>(n + 1)));
}
