#pragma once

// JSON file formats:
//   polytope       {"vertices": [[int,...],...], "points": [[int,...],...]?}
//   generators     {"generators": [[int,...],...]}
//   triangulation  {"points": [[int,...],...], "cells": [[index,...],...]}

#include "polylab/integer.hpp"
#include "polylab/parallelepiped.hpp"
#include "polylab/poly.hpp"
#include "polylab/polytope.hpp"
#include "polylab/triangulation.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

namespace polylab {

using Json = nlohmann::ordered_json;

/// Malformed input; `pointer` is the JSON pointer of the offending value.
class InputError : public std::runtime_error {
public:
    InputError(std::string pointer, const std::string& message);
    const std::string& pointer() const { return pointer_; }

private:
    std::string pointer_;
};

struct PolytopeInput {
    std::vector<LatticePoint> vertices;
    std::vector<LatticePoint> points;  // extra configuration points
    LatticePolytope polytope;

    /// Vertices followed by the extra points, without duplicates.
    PointConfiguration configuration() const;
};

Json read_json_file(const std::filesystem::path& path);

PolytopeInput parse_polytope(const Json& doc);
ParallelepipedSpec parse_generators(const Json& doc);
Triangulation parse_triangulation(const Json& doc);
/// A bare point list under `key`, e.g. the simplex vertices of a polytope file.
std::vector<LatticePoint> parse_point_list(const Json& doc, const std::string& key);

PolytopeInput load_polytope(const std::filesystem::path& path);
ParallelepipedSpec load_generators(const std::filesystem::path& path);
Triangulation load_triangulation(const std::filesystem::path& path);

/// Integers become JSON numbers when they fit in 64 bits and strings otherwise.
Json to_json(const Int& v);
Json to_json(std::span<const Int> v);
Json to_json(const IntPoly& p);
Json to_json(const std::vector<LatticePoint>& pts);
Json to_json(const Cell& c);
Json to_json(const Rat& r);

Json triangulation_json(const Triangulation& t);

}  // namespace polylab
