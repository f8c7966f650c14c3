#include "polylab/io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

namespace polylab {

namespace {

constexpr long long kFileIntLimit = 9007199254740992LL;  // 2^53

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

Int parse_int(const Json& v, const std::string& ptr)
{
    if (!v.is_number_integer())
        throw InputError(ptr, "expected an integer");
    long long x = v.is_number_unsigned() ? static_cast<long long>(std::min<std::uint64_t>(
                                                 v.get<std::uint64_t>(), kFileIntLimit))
                                         : v.get<long long>();
    if (x >= kFileIntLimit || x <= -kFileIntLimit)
        throw InputError(ptr, "integer magnitude must be below 2^53");
    return Int(static_cast<long>(x));
}

const Json& member(const Json& doc, const std::string& key, const std::string& ptr)
{
    if (!doc.is_object())
        throw InputError(ptr.empty() ? "" : ptr, "expected a JSON object");
    auto it = doc.find(key);
    if (it == doc.end())
        throw InputError(child(ptr, key), "missing required key \"" + key + "\"");
    return *it;
}

std::vector<LatticePoint> parse_points(const Json& arr, const std::string& ptr, bool allow_empty,
                                        std::size_t expected_len = 0)
{
    if (!arr.is_array())
        throw InputError(ptr, "expected an array of points");
    if (arr.empty() && !allow_empty)
        throw InputError(ptr, "expected at least one point");
    std::vector<LatticePoint> out;
    std::size_t len = expected_len;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string p = child(ptr, i);
        if (!arr[i].is_array())
            throw InputError(p, "expected an array of integers");
        if (len == 0)
            len = arr[i].size();
        if (arr[i].size() != len)
            throw InputError(p, "expected " + std::to_string(len) + " coordinates, found " +
                                    std::to_string(arr[i].size()));
        LatticePoint q;
        for (std::size_t j = 0; j < arr[i].size(); ++j)
            q.push_back(parse_int(arr[i][j], child(p, j)));
        out.push_back(std::move(q));
    }
    if (!out.empty() && len == 0)
        throw InputError(child(ptr, 0), "points need at least one coordinate");
    return out;
}

void reject_unknown_keys(const Json& doc, std::initializer_list<const char*> allowed)
{
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed)
            ok = ok || it.key() == a;
        if (!ok)
            throw InputError("/" + it.key(), "unknown key \"" + it.key() + "\"");
    }
}

}  // namespace

InputError::InputError(std::string pointer, const std::string& message)
    : std::runtime_error((pointer.empty() ? std::string("(root)") : pointer) + ": " + message),
      pointer_(std::move(pointer))
{
}

PointConfiguration PolytopeInput::configuration() const
{
    std::vector<LatticePoint> pts;
    std::set<LatticePoint> seen;
    for (const auto* list : {&vertices, &points})
        for (const auto& p : *list)
            if (seen.insert(p).second)
                pts.push_back(p);
    return PointConfiguration(std::move(pts));
}

Json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("", "cannot open file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw InputError("", path.string() + " is not valid JSON: " + e.what());
    }
}

PolytopeInput parse_polytope(const Json& doc)
{
    PolytopeInput in;
    in.vertices = parse_points(member(doc, "vertices", ""), "/vertices", false);
    reject_unknown_keys(doc, {"vertices", "points", "name", "note"});
    if (auto it = doc.find("points"); it != doc.end())
        in.points = parse_points(*it, "/points", true, in.vertices.front().size());
    std::vector<LatticePoint> all = in.vertices;
    all.insert(all.end(), in.points.begin(), in.points.end());
    in.polytope = LatticePolytope::from_points(std::move(all));
    return in;
}

ParallelepipedSpec parse_generators(const Json& doc)
{
    auto gens = parse_points(member(doc, "generators", ""), "/generators", false);
    reject_unknown_keys(doc, {"generators", "name", "note"});
    if (gens.size() > gens.front().size())
        throw InputError("/generators", std::to_string(gens.size()) + " generators in dimension " +
                                            std::to_string(gens.front().size()) +
                                            " cannot be linearly independent");
    try {
        return ParallelepipedSpec(std::move(gens));
    } catch (const std::invalid_argument& e) {
        throw InputError("/generators", e.what());
    }
}

Triangulation parse_triangulation(const Json& doc)
{
    auto pts = parse_points(member(doc, "points", ""), "/points", false);
    const Json& cells = member(doc, "cells", "");
    reject_unknown_keys(doc, {"points", "cells", "name", "note"});
    if (!cells.is_array() || cells.empty())
        throw InputError("/cells", "expected a nonempty array of cells");
    {
        std::set<LatticePoint> seen;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (!seen.insert(pts[i]).second)
                throw InputError(child("/points", i), "duplicate point");
    }
    std::vector<Cell> out;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const std::string p = child("/cells", c);
        if (!cells[c].is_array() || cells[c].empty())
            throw InputError(p, "expected a nonempty array of point indices");
        Cell cell;
        for (std::size_t k = 0; k < cells[c].size(); ++k) {
            const Json& v = cells[c][k];
            if (!v.is_number_integer() || v.get<long long>() < 0)
                throw InputError(child(p, k), "expected a nonnegative point index");
            const auto idx = v.get<unsigned long long>();
            if (idx >= pts.size())
                throw InputError(child(p, k), "cell " + std::to_string(c) + " refers to point " +
                                                  std::to_string(idx) + " but there are only " +
                                                  std::to_string(pts.size()) + " points");
            cell.push_back(static_cast<std::size_t>(idx));
        }
        out.push_back(std::move(cell));
    }
    try {
        return Triangulation(PointConfiguration(std::move(pts)), std::move(out));
    } catch (const std::invalid_argument& e) {
        throw InputError("/cells", e.what());
    }
}

std::vector<LatticePoint> parse_point_list(const Json& doc, const std::string& key)
{
    return parse_points(member(doc, key, ""), "/" + key, false);
}

PolytopeInput load_polytope(const std::filesystem::path& path) { return parse_polytope(read_json_file(path)); }
ParallelepipedSpec load_generators(const std::filesystem::path& path)
{
    return parse_generators(read_json_file(path));
}
Triangulation load_triangulation(const std::filesystem::path& path)
{
    return parse_triangulation(read_json_file(path));
}

Json to_json(const Int& v)
{
    if (fits_int64(v))
        return Json(to_int64(v));
    return Json(to_string(v));
}

Json to_json(std::span<const Int> v)
{
    Json arr = Json::array();
    for (const auto& x : v)
        arr.push_back(to_json(x));
    return arr;
}

Json to_json(const IntPoly& p) { return to_json(std::span<const Int>(p.coeffs())); }

Json to_json(const std::vector<LatticePoint>& pts)
{
    Json arr = Json::array();
    for (const auto& p : pts)
        arr.push_back(to_json(std::span<const Int>(p)));
    return arr;
}

Json to_json(const Cell& c)
{
    Json arr = Json::array();
    for (auto i : c)
        arr.push_back(i);
    return arr;
}

Json to_json(const Rat& r)
{
    if (r.get_den() == 1)
        return to_json(Int(r.get_num()));
    return Json(to_string(r));
}

Json triangulation_json(const Triangulation& t)
{
    Json doc;
    doc["points"] = to_json(t.config().points());
    Json cells = Json::array();
    for (const auto& c : t.cells())
        cells.push_back(to_json(c));
    doc["cells"] = std::move(cells);
    return doc;
}

}  // namespace polylab
