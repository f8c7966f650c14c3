#include "polylab/corpus.hpp"

#include "polylab/ehrhart.hpp"
#include "polylab/parallelepiped.hpp"
#include "polylab/triangulation.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>

namespace polylab {

namespace {

struct Context {
    std::filesystem::path base;
    const Json& check;
    const Json& entry;

    std::filesystem::path file(const char* key) const
    {
        if (auto it = check.find(key); it != check.end())
            return base / it->get<std::string>();
        if (auto it = entry.find(key); it != entry.end())
            return base / it->get<std::string>();
        throw InputError(std::string("/") + key, std::string("check needs a \"") + key + "\" file");
    }
    long integer(const char* key) const
    {
        auto it = check.find(key);
        if (it == check.end() || !it->is_number_integer())
            throw InputError(std::string("/") + key, std::string("check needs an integer \"") + key + "\"");
        return it->get<long>();
    }
    Scope scope() const
    {
        auto it = check.find("scope");
        if (it == check.end() || *it == "full")
            return Scope::Full;
        if (*it == "boundary")
            return Scope::Boundary;
        throw InputError("/scope", "scope must be \"full\" or \"boundary\"");
    }
    Triangulation triangulation() const
    {
        auto it = check.find("triangulation");
        if (it != check.end() && *it == "pulling")
            return pulling_triangulation(load_polytope(file("input")).configuration(), scope());
        return load_triangulation(file("triangulation"));
    }
};

Json flags_json(const DeltaReport& r)
{
    Json j;
    j["unimodal"] = r.unimodal;
    j["symmetric"] = r.symmetric;
    j["alternatingly_increasing"] = r.alternatingly_increasing;
    return j;
}

// A flags expectation only constrains the keys it lists.
bool subset_match(const Json& expected, const Json& actual)
{
    if (!expected.is_object())
        return expected == actual;
    for (auto it = expected.begin(); it != expected.end(); ++it)
        if (!actual.contains(it.key()) || !subset_match(it.value(), actual[it.key()]))
            return false;
    return true;
}

Json census_json(const SimplexCensus& c)
{
    Json j;
    j["lattice_points"] = c.lattice_points;
    j["lattice_points_are_vertices"] = c.lattice_points_are_vertices;
    j["simplices"] = c.simplices;
    j["non_unimodal"] = c.non_unimodal;
    Json vols = Json::object();
    for (const auto& [v, n] : c.by_volume)
        vols[to_string(v)] = n;
    j["volumes"] = vols;
    Json boxes = Json::object();
    for (const auto& [v, polys] : c.box_by_volume) {
        Json list = Json::array();
        for (const auto& [p, n] : polys) {
            Json e;
            e["box"] = to_json(p);
            e["count"] = n;
            list.push_back(e);
        }
        boxes[to_string(v)] = list;
    }
    j["boxes"] = boxes;
    return j;
}

using Runner = std::function<Json(const Context&)>;

const std::map<std::string, Runner>& runners()
{
    static const std::map<std::string, Runner> table = {
        {"apoly", [](const Context& c) { return to_json(a_poly(c.integer("i"), c.integer("j")).poly); }},
        {"eulerian", [](const Context& c) { return to_json(eulerian(c.integer("n"))); }},
        {"ppd-delta",
         [](const Context& c) {
             return to_json(std::span<const Int>(parallelepiped_delta(load_generators(c.file("input"))).delta));
         }},
        {"ppd-delta-count",
         [](const Context& c) {
             return to_json(std::span<const Int>(delta_vector(load_generators(c.file("input")).polytope()).delta));
         }},
        {"ppd-flags",
         [](const Context& c) { return flags_json(parallelepiped_delta(load_generators(c.file("input")))); }},
        {"ppd-reflexive",
         [](const Context& c) { return Json(parallelepiped_is_reflexive_translate(load_generators(c.file("input")))); }},
        {"delta",
         [](const Context& c) {
             return to_json(std::span<const Int>(delta_vector(load_polytope(c.file("input")).polytope).delta));
         }},
        {"delta-flags",
         [](const Context& c) { return flags_json(delta_vector(load_polytope(c.file("input")).polytope)); }},
        {"count",
         [](const Context& c) {
             return to_json(count_lattice_points(load_polytope(c.file("input")).polytope,
                                                 static_cast<unsigned long>(c.integer("dilation"))));
         }},
        {"vertex-count",
         [](const Context& c) { return Json(load_polytope(c.file("input")).polytope.vertices().size()); }},
        {"dim", [](const Context& c) { return Json(load_polytope(c.file("input")).polytope.dim()); }},
        {"reflexive",
         [](const Context& c) { return Json(is_reflexive(load_polytope(c.file("input")).polytope)); }},
        {"integrally-closed",
         [](const Context& c) { return Json(is_integrally_closed(load_polytope(c.file("input")).polytope)); }},
        {"box",
         [](const Context& c) { return to_json(box_poly(load_polytope(c.file("input")).vertices)); }},
        {"box-points",
         [](const Context& c) {
             std::vector<IntVector> lifted;
             for (auto v : load_polytope(c.file("input")).vertices) {
                 v.emplace_back(1);
                 lifted.push_back(std::move(v));
             }
             std::vector<LatticePoint> pts;
             for (auto& bp : box_points(lifted, BoxMode::Open))
                 pts.push_back(std::move(bp.point));
             return to_json(pts);
         }},
        {"tri-valid",
         [](const Context& c) {
             return Json(validate(c.triangulation(), load_polytope(c.file("input")).polytope, c.scope()).valid);
         }},
        {"tri-regular", [](const Context& c) { return Json(is_regular(c.triangulation(), c.scope()).regular); }},
        {"tri-fine", [](const Context& c) { return Json(is_fine(c.triangulation())); }},
        {"tri-box-unimodal",
         [](const Context& c) { return Json(is_box_unimodal(c.triangulation(), c.scope()).box_unimodal); }},
        {"tri-cells-unimodular",
         [](const Context& c) {
             const Triangulation t = c.triangulation();
             return Json(std::all_of(t.cells().begin(), t.cells().end(), [&](const Cell& cell) {
                 return normalized_volume(t.cell_points(cell)) == 1;
             }));
         }},
        {"cell-box",
         [](const Context& c) {
             const Triangulation t = c.triangulation();
             const long idx = c.integer("cell");
             if (idx < 0 || static_cast<std::size_t>(idx) >= t.cells().size())
                 throw InputError("/cell", "cell index out of range");
             return to_json(box_poly(t.cell_points(t.cells()[static_cast<std::size_t>(idx)])));
         }},
        {"mp-delta",
         [](const Context& c) {
             const PolytopeInput in = load_polytope(c.file("input"));
             const IntVector mp = mp_delta(in.polytope, c.triangulation());
             const DeltaReport counted = delta_vector(in.polytope);
             if (mp != counted.delta)
                 throw std::runtime_error("face sum " + to_json(std::span<const Int>(mp)).dump() +
                                          " differs from the counted delta-vector " +
                                          to_json(std::span<const Int>(counted.delta)).dump());
             return to_json(std::span<const Int>(mp));
         }},
        {"census",
         [](const Context& c) {
             const PolytopeInput in = load_polytope(c.file("input"));
             return census_json(simplex_census(in.polytope));
         }},
        {"census-vertices",
         [](const Context& c) {
             const PolytopeInput in = load_polytope(c.file("input"));
             return census_json(simplex_census(in.polytope.vertices(), in.polytope.dim()));
         }},
    };
    return table;
}

}  // namespace

std::filesystem::path default_corpus_dir()
{
    if (const char* env = std::getenv("POLYLAB_CORPUS_DIR"); env != nullptr && *env != '\0')
        return env;
#ifdef POLYLAB_CORPUS_DIR
    return POLYLAB_CORPUS_DIR;
#else
    return "corpus";
#endif
}

std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir)
{
    std::vector<std::filesystem::path> out;
    if (!std::filesystem::is_directory(dir))
        throw InputError("", "corpus directory " + dir.string() + " does not exist");
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json")
            out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

EntryOutcome verify_entry(const std::filesystem::path& file)
{
    const Json entry = read_json_file(file);
    EntryOutcome out;
    out.name = entry.value("name", file.stem().string());
    out.citation = entry.value("citation", "");
    const auto it = entry.find("checks");
    if (it == entry.end() || !it->is_array() || it->empty())
        throw InputError("/checks", file.string() + " has no checks");
    out.pass = true;
    for (const auto& check : *it) {
        CheckOutcome co;
        co.check = check.value("check", "");
        co.expected = check.value("expect", Json());
        const auto r = runners().find(co.check);
        try {
            if (r == runners().end())
                throw InputError("/check", "unknown check \"" + co.check + "\"");
            co.actual = r->second(Context{file.parent_path(), check, entry});
            co.pass = subset_match(co.expected, co.actual);
        } catch (const std::exception& e) {
            co.error = e.what();
            co.pass = false;
        }
        out.pass = out.pass && co.pass;
        out.checks.push_back(std::move(co));
    }
    return out;
}

Json outcome_json(const EntryOutcome& e)
{
    Json j;
    j["name"] = e.name;
    j["status"] = e.pass ? "PASS" : "FAIL";
    j["citation"] = e.citation;
    Json checks = Json::array();
    for (const auto& c : e.checks) {
        Json cj;
        cj["check"] = c.check;
        cj["status"] = c.pass ? "PASS" : "FAIL";
        if (!c.pass) {
            cj["expected"] = c.expected;
            cj["actual"] = c.actual;
            if (!c.error.empty())
                cj["error"] = c.error;
        }
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    return j;
}

}  // namespace polylab
