#pragma once

#include "polylab/integer.hpp"
#include "polylab/poly.hpp"
#include "polylab/polytope.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polylab {

/// Ordered, duplicate-free list of lattice points; the order drives pulling.
class PointConfiguration {
public:
    PointConfiguration() = default;
    explicit PointConfiguration(std::vector<LatticePoint> points);

    const std::vector<LatticePoint>& points() const { return points_; }
    const LatticePoint& operator[](std::size_t i) const { return points_[i]; }
    std::size_t size() const { return points_.size(); }
    std::size_t ambient_dim() const { return points_.empty() ? 0 : points_.front().size(); }

private:
    std::vector<LatticePoint> points_;
};

/// Sorted indices into a configuration.
using Cell = std::vector<std::size_t>;

enum class Scope { Full, Boundary };

/**
 * A pure simplicial complex on a configuration: every cell is an affinely
 * independent index set and all cells have the same size. Faces are the
 * downward closure of the cells, the empty face included.
 */
class Triangulation {
public:
    Triangulation(PointConfiguration config, std::vector<Cell> cells);

    const PointConfiguration& config() const { return config_; }
    const std::vector<Cell>& cells() const { return cells_; }
    /// Dimension of the cells.
    long cell_dim() const { return cells_.empty() ? -1 : static_cast<long>(cells_.front().size()) - 1; }
    /// All faces, sorted, starting with the empty face.
    const std::vector<Cell>& faces() const { return faces_; }
    bool is_face(const Cell& f) const;
    std::vector<LatticePoint> cell_points(const Cell& c) const;

private:
    PointConfiguration config_;
    std::vector<Cell> cells_;
    std::vector<Cell> faces_;
};

/// Normalized volume of a simplex relative to the lattice in its affine hull
/// (0 when the points are affinely dependent).
Int normalized_volume(std::span<const LatticePoint> simplex);

/// Normalized volume of P relative to the lattice in its affine hull.
Int normalized_volume(const LatticePolytope& p);

struct ValidationResult {
    bool valid = true;
    std::string reason;
    /// The first offending pair of cells, when the failure is an improper intersection.
    std::optional<std::pair<std::size_t, std::size_t>> pair;
};

/**
 * Checks that T triangulates P (Full) or the boundary of a full-dimensional P
 * (Boundary): cells lie in the target, volumes add up (per facet for the
 * boundary) and every two cells meet in a common face.
 */
ValidationResult validate(const Triangulation& t, const LatticePolytope& target, Scope scope);

/// Every configuration point of any cell's hull is a vertex of that cell.
bool is_fine(const Triangulation& t);

/// h_F(t) = sum over faces G containing F of t^{|G|-|F|} (1-t)^{d-|G|}, d = cell size.
IntPoly link_h(const Triangulation& t, const Cell& face);

/// B_S(t): lattice points of the open box over S x {1}, counted by height. B_empty = 1.
IntPoly box_poly(std::span<const LatticePoint> simplex);

/// sum over faces F of B_F(t) h_F(t) as a window of length d + 1. Requires a reflexive P.
IntVector mp_delta(const LatticePolytope& p, const Triangulation& t);

/**
 * Pulling triangulation in the given order (default: configuration order),
 * followed by stellar insertion of the points pulling leaves unused, so the
 * result uses every configuration point. Boundary scope triangulates each
 * facet of conv(config) with the same global order; interior points of the
 * configuration are dropped there.
 */
Triangulation pulling_triangulation(const PointConfiguration& config, Scope scope,
                                    std::optional<std::vector<std::size_t>> order = {});

enum class RegularityConstraints {
    /// One folding condition per interior ridge plus one per unused point.
    Local,
    /// Every configuration point above every cell's affine lift.
    AllPairs,
};

struct RegularityCertificate {
    bool regular = false;
    /// Heights per configuration point (plus the apex last, for boundary scope).
    RatVector heights;
    /// Optimal minimum slack of the strict lifting conditions.
    Rat slack;
    /// Constraints that are tight at the optimum when the triangulation is not regular.
    std::vector<std::string> violated;
};

/**
 * Exact LP: maximize the minimum slack s of the lifting conditions with
 * heights in [0, 1]; regular iff s > 0. Boundary triangulations are coned
 * from an interior apex first.
 */
RegularityCertificate is_regular(const Triangulation& t, Scope scope,
                                 RegularityConstraints mode = RegularityConstraints::Local);

struct FaceBoxReport {
    Cell face;
    IntPoly box;
    bool unimodal = true;
};

struct BoxUnimodalReport {
    bool regular = false;
    bool box_unimodal = false;
    /// Faces with a nonzero box polynomial, in face order.
    std::vector<FaceBoxReport> faces;
};

/// Regular, and b_1..b_{dim S} unimodal for every face S.
BoxUnimodalReport is_box_unimodal(const Triangulation& t, Scope scope);

struct SimplexCensus {
    std::size_t lattice_points = 0;
    bool lattice_points_are_vertices = false;
    std::size_t simplices = 0;
    std::size_t non_unimodal = 0;
    /// normalized volume -> number of full-dimensional simplices
    std::map<Int, std::size_t> by_volume;
    /// normalized volume -> box polynomial -> count
    std::map<Int, std::map<IntPoly, std::size_t>> box_by_volume;
};

/// All simplices of dimension dim spanned by the given points.
SimplexCensus simplex_census(std::span<const LatticePoint> points, long dim);

/// All full-dimensional simplices spanned by lattice points of P.
SimplexCensus simplex_census(const LatticePolytope& p);

}  // namespace polylab
