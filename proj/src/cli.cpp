#include "polylab/cli.hpp"

#include "polylab/corpus.hpp"
#include "polylab/ehrhart.hpp"
#include "polylab/io.hpp"
#include "polylab/parallelepiped.hpp"
#include "polylab/triangulation.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

namespace polylab {

namespace {

/// A check that ran and returned false: reported on stdout, exit code 1.
struct Outcome {
    Json result;
    Json meta = Json::object();
    bool ok = true;
};

Json window_json(const IntVector& w) { return to_json(std::span<const Int>(w)); }

Json report_meta(const DeltaReport& r)
{
    Json m;
    m["dim"] = r.dim;
    m["degree"] = r.degree;
    m["codegree"] = r.codegree;
    m["unimodal"] = r.unimodal;
    m["symmetric"] = r.symmetric;
    m["alternatingly_increasing"] = r.alternatingly_increasing;
    return m;
}

Json subset_json(Subset g, std::size_t n)
{
    Json arr = Json::array();
    for (std::size_t i = 0; i < n; ++i)
        if (g & (Subset{1} << i))
            arr.push_back(i);
    return arr;
}

std::optional<std::vector<std::size_t>> parse_order(const std::string& text)
{
    if (text.empty())
        return std::nullopt;
    std::vector<std::size_t> order;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw InputError("", "--order expects comma-separated point indices, got \"" + text + "\"");
        order.push_back(std::stoul(item));
    }
    return order;
}

Scope parse_scope(const std::string& s)
{
    if (s == "full")
        return Scope::Full;
    if (s == "boundary")
        return Scope::Boundary;
    throw InputError("", "--scope must be full or boundary");
}

const char* scope_name(Scope s) { return s == Scope::Full ? "full" : "boundary"; }

Json delta_source(const std::string& file, DeltaReport& report, std::optional<LatticePolytope>& poly)
{
    const Json doc = read_json_file(file);
    if (doc.is_object() && doc.contains("generators")) {
        const ParallelepipedSpec spec = parse_generators(doc);
        report = parallelepiped_delta(spec);
        poly = spec.polytope();
        return "generators";
    }
    poly = parse_polytope(doc).polytope;
    report = delta_vector(*poly);
    return "polytope";
}

Outcome cmd_check(const std::string& file, std::vector<std::string> flags)
{
    DeltaReport report;
    std::optional<LatticePolytope> poly;
    Json source = delta_source(file, report, poly);
    if (flags.empty())
        flags = {"unimodal", "symmetric", "altinc", "reflexive", "integrally-closed", "interior-chain"};
    Outcome o;
    o.result = Json::object();
    for (const auto& f : flags) {
        bool v = true;
        if (f == "unimodal") {
            v = report.unimodal;
        } else if (f == "symmetric") {
            v = report.symmetric;
        } else if (f == "altinc") {
            v = report.alternatingly_increasing;
        } else if (f == "reflexive") {
            v = is_reflexive(*poly);
        } else if (f == "integrally-closed") {
            v = is_integrally_closed(*poly);
        } else if (f == "interior-chain") {
            const ChainCheck c = check_interior_chain(report);
            v = c.holds;
            o.meta["interior_chain_applicable"] = c.applicable;
        }
        o.result[f] = v;
        o.ok = o.ok && v;
    }
    o.meta["source"] = source;
    o.meta["delta"] = window_json(report.delta);
    return o;
}

Outcome cmd_tri_check(const std::string& trifile, const std::string& against, const std::string& scope_text,
                      bool regular, bool box_unimodal)
{
    const Triangulation t = load_triangulation(trifile);
    const LatticePolytope p = load_polytope(against).polytope;
    Scope scope = Scope::Full;
    if (!scope_text.empty())
        scope = parse_scope(scope_text);
    else if (p.full_dimensional() && t.cell_dim() == p.dim() - 1)
        scope = Scope::Boundary;
    Outcome o;
    o.result = Json::object();
    const ValidationResult v = validate(t, p, scope);
    o.result["valid"] = v.valid;
    if (!v.valid)
        o.meta["reason"] = v.reason;
    o.ok = v.valid;
    if (regular && v.valid) {
        const RegularityCertificate cert = is_regular(t, scope);
        o.result["regular"] = cert.regular;
        if (cert.regular) {
            Json h = Json::array();
            for (const auto& x : cert.heights)
                h.push_back(to_json(x));
            o.meta["heights"] = h;
        } else {
            o.meta["violated"] = cert.violated;
        }
        o.ok = o.ok && cert.regular;
    }
    if (box_unimodal && v.valid) {
        const BoxUnimodalReport r = is_box_unimodal(t, scope);
        o.result["box_unimodal"] = r.box_unimodal;
        Json faces = Json::array();
        for (const auto& f : r.faces) {
            Json fj;
            fj["face"] = to_json(f.face);
            fj["box"] = to_json(f.box);
            fj["unimodal"] = f.unimodal;
            faces.push_back(fj);
        }
        o.meta["nonzero_box_faces"] = faces;
        o.meta["regular"] = r.regular;
        o.ok = o.ok && r.box_unimodal;
    }
    o.meta["scope"] = scope_name(scope);
    o.meta["cells"] = t.cells().size();
    return o;
}

void write_envelope(std::ostream& out, const Outcome& o) {
    Json env;
    env["result"] = o.result;
    env["meta"] = o.meta;
    out << env.dump() << "\n";
}

int corpus_verify(std::ostream& out, const std::string& filter, const std::string& dir)
{
    const auto files = corpus_files(dir.empty() ? default_corpus_dir() : std::filesystem::path(dir));
    std::vector<std::string> lines;
    std::size_t passed = 0, total = 0;
    for (const auto& f : files) {
        EntryOutcome e = verify_entry(f);
        if (!filter.empty() && e.name.find(filter) == std::string::npos)
            continue;
        ++total;
        if (e.pass)
            ++passed;
        lines.push_back(outcome_json(e).dump());
    }
    if (!filter.empty() && total == 0)
        throw InputError("", "no corpus entry matches \"" + filter + "\"");
    Json meta;
    meta["entries"] = total;
    meta["passed"] = passed;
    meta["failed"] = total - passed;
    out << "{\"result\":[\n";
    for (std::size_t i = 0; i < lines.size(); ++i)
        out << lines[i] << (i + 1 < lines.size() ? ",\n" : "\n");
    out << "],\"meta\":" << meta.dump() << "}\n";
    return passed == total ? kExitOk : kExitCheckFailed;
}

void write_error(std::ostream& err, const std::string& message, const std::string* pointer = nullptr)
{
    Json e;
    e["message"] = message;
    if (pointer)
        e["pointer"] = *pointer;
    Json env;
    env["error"] = e;
    err << env.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Ehrhart delta-vectors, parallelepipeds and triangulations of lattice polytopes",
                 "polylab"};
    app.require_subcommand(1);
    std::function<Outcome()> action;
    std::function<int()> raw_action;

    std::string file, file2, scope_text, order_text, filter, corpus_dir;
    long dilation = 1, ai = 0, aj = 0, en = 0;
    bool all_points = false, want_regular = false, want_box = false;
    std::vector<std::string> flag_names;

    auto* count = app.add_subcommand("count", "Number of lattice points of a dilate nP");
    count->add_option("FILE", file, "polytope file")->required();
    count->add_option("--dilation", dilation, "dilation factor n >= 0")->required()->check(CLI::NonNegativeNumber);
    count->callback([&] {
        action = [&] {
            const PolytopeInput in = load_polytope(file);
            Outcome o;
            o.result = to_json(count_lattice_points(in.polytope, static_cast<unsigned long>(dilation)));
            o.meta["dilation"] = dilation;
            o.meta["dim"] = in.polytope.dim();
            return o;
        };
    });

    auto* delta = app.add_subcommand("delta", "delta-vector by lattice point counting");
    delta->add_option("FILE", file, "polytope file")->required();
    delta->callback([&] {
        action = [&] {
            const DeltaReport r = delta_vector(load_polytope(file).polytope);
            return Outcome{window_json(r.delta), report_meta(r), true};
        };
    });

    auto* ppd = app.add_subcommand("ppd", "Lattice parallelepipeds given by generators");
    ppd->require_subcommand(1);
    auto* ppd_delta = ppd->add_subcommand("delta", "delta-vector from the box census");
    ppd_delta->add_option("FILE", file, "generators file")->required();
    ppd_delta->callback([&] {
        action = [&] {
            const DeltaReport r = parallelepiped_delta(load_generators(file));
            return Outcome{window_json(r.delta), report_meta(r), true};
        };
    });
    auto* ppd_census = ppd->add_subcommand("census", "Open-box lattice points b(G) of every generator subset");
    ppd_census->add_option("FILE", file, "generators file")->required();
    ppd_census->callback([&] {
        action = [&] {
            const ParallelepipedSpec spec = load_generators(file);
            const BoxCensus c = box_census(spec);
            Outcome o;
            o.result = Json::array();
            for (Subset g = 0; g < c.b.size(); ++g) {
                if (c.b[g] == 0)
                    continue;
                Json e;
                e["subset"] = subset_json(g, c.generators);
                e["b"] = to_json(c.b[g]);
                e["half_open"] = to_json(c.half_open[g]);
                e["points"] = to_json(c.open_points[g]);
                o.result.push_back(e);
            }
            o.meta["generators"] = c.generators;
            o.meta["half_open_total"] = to_json(c.half_open[c.full()]);
            return o;
        };
    });
    auto* ppd_refl = ppd->add_subcommand("reflexive", "Is the parallelepiped a translate of a reflexive polytope");
    ppd_refl->add_option("FILE", file, "generators file")->required();
    ppd_refl->callback([&] {
        action = [&] {
            const BoxCensus c = box_census(load_generators(file));
            Outcome o;
            const bool v = parallelepiped_is_reflexive_translate(c);
            o.result = v;
            o.meta["b_full"] = to_json(c.b[c.full()]);
            o.ok = v;
            return o;
        };
    });

    auto* apoly = app.add_subcommand("apoly", "Coefficients of A(i, j, t)");
    apoly->add_option("I", ai, "i >= 0")->required();
    apoly->add_option("J", aj, "-1 <= j <= i")->required();
    apoly->callback([&] {
        action = [&] {
            Outcome o;
            o.result = to_json(a_poly(ai, aj).poly);
            o.meta["i"] = ai;
            o.meta["j"] = aj;
            return o;
        };
    });

    auto* eul = app.add_subcommand("eulerian", "Coefficients of the Eulerian polynomial Eul(n, t)");
    eul->add_option("N", en, "n >= -1")->required();
    eul->callback([&] {
        action = [&] {
            Outcome o;
            o.meta["n"] = en;
            if (en == -1) {
                // Eul(-1, t) = 1/t: report t * Eul(-1, t) and the shift.
                o.result = to_json(eulerian_times_t(-1));
                o.meta["shift"] = -1;
            } else {
                o.result = to_json(eulerian(en));
            }
            return o;
        };
    });

    auto* box = app.add_subcommand("box", "Box polynomial of the simplex spanned by the file's vertices");
    box->add_option("FILE", file, "polytope file listing the simplex vertices")->required();
    box->callback([&] {
        action = [&] {
            const Json doc = read_json_file(file);
            const std::vector<LatticePoint> simplex = parse_point_list(doc, "vertices");
            Outcome o;
            o.result = to_json(box_poly(simplex));
            std::vector<IntVector> lifted;
            for (auto v : simplex) {
                v.emplace_back(1);
                lifted.push_back(std::move(v));
            }
            std::vector<LatticePoint> pts;
            for (auto& bp : box_points(lifted, BoxMode::Open))
                pts.push_back(std::move(bp.point));
            o.meta["box_points"] = to_json(pts);
            o.meta["normalized_volume"] = to_json(normalized_volume(simplex));
            return o;
        };
    });

    auto* check = app.add_subcommand("check", "Shape predicates of the delta-vector and the polytope");
    check->add_option("FILE", file, "polytope or generators file")->required();
    for (const char* name : {"unimodal", "symmetric", "altinc", "reflexive", "integrally-closed", "interior-chain"})
        check->add_flag_callback(std::string("--") + name, [&flag_names, name] { flag_names.push_back(name); });
    check->callback([&] { action = [&] { return cmd_check(file, flag_names); }; });

    auto* tri = app.add_subcommand("triangulate", "Pulling triangulation of a polytope or its boundary");
    tri->add_option("FILE", file, "polytope file; vertices and points form the configuration")->required();
    tri->add_option("--scope", scope_text, "full or boundary")->check(CLI::IsMember({"full", "boundary"}));
    tri->add_option("--order", order_text, "pulling order as comma-separated configuration indices");
    tri->add_flag("--all-lattice-points", all_points, "use every lattice point of the polytope as configuration");
    tri->callback([&] {
        action = [&] {
            const PolytopeInput in = load_polytope(file);
            const Scope scope = scope_text.empty() ? Scope::Full : parse_scope(scope_text);
            const PointConfiguration config =
                all_points ? PointConfiguration(lattice_points(in.polytope, 1)) : in.configuration();
            const Triangulation t = pulling_triangulation(config, scope, parse_order(order_text));
            Outcome o;
            o.result = triangulation_json(t);
            o.meta["scope"] = scope_name(scope);
            o.meta["cells"] = t.cells().size();
            o.meta["fine"] = is_fine(t);
            return o;
        };
    });

    auto* trigroup = app.add_subcommand("tri", "Triangulation checks");
    trigroup->require_subcommand(1);
    auto* tricheck = trigroup->add_subcommand("check", "Validate a triangulation against a polytope");
    tricheck->add_option("TRIFILE", file, "triangulation file")->required();
    tricheck->add_option("--against", file2, "polytope file")->required();
    tricheck->add_option("--scope", scope_text, "full or boundary (default: inferred from cell dimension)")
        ->check(CLI::IsMember({"full", "boundary"}));
    tricheck->add_flag("--regular", want_regular, "also decide regularity");
    tricheck->add_flag("--box-unimodal", want_box, "also decide box unimodality");
    tricheck->callback([&] {
        action = [&] { return cmd_tri_check(file, file2, scope_text, want_regular, want_box); };
    });

    auto* mp = app.add_subcommand("mp-delta", "delta-vector of a reflexive polytope from a boundary triangulation");
    mp->add_option("FILE", file, "polytope file")->required();
    mp->add_option("TRIFILE", file2, "boundary triangulation file")->required();
    mp->callback([&] {
        action = [&] {
            const LatticePolytope p = load_polytope(file).polytope;
            const Triangulation t = load_triangulation(file2);
            const ValidationResult v = validate(t, p, Scope::Boundary);
            if (!v.valid)
                throw InputError("", "not a triangulation of the boundary: " + v.reason);
            const IntVector w = mp_delta(p, t);
            const DeltaReport counted = delta_vector(p);
            Outcome o;
            o.result = window_json(w);
            o.meta["counted"] = window_json(counted.delta);
            o.meta["agrees"] = w == counted.delta;
            o.ok = w == counted.delta;
            return o;
        };
    });

    auto* census = app.add_subcommand("census", "Full-dimensional simplices spanned by the lattice points");
    census->add_option("FILE", file, "polytope file")->required();
    census->callback([&] {
        action = [&] {
            const PolytopeInput in = load_polytope(file);
            const SimplexCensus c = simplex_census(in.polytope);
            Outcome o;
            Json vols = Json::object();
            for (const auto& [v, n] : c.by_volume)
                vols[to_string(v)] = n;
            o.result = Json::object();
            o.result["simplices"] = c.simplices;
            o.result["non_unimodal"] = c.non_unimodal;
            o.result["volumes"] = vols;
            Json boxes = Json::object();
            for (const auto& [v, polys] : c.box_by_volume) {
                Json list = Json::array();
                for (const auto& [poly, n] : polys)
                    list.push_back(Json{{"box", to_json(poly)}, {"count", n}});
                boxes[to_string(v)] = list;
            }
            o.result["boxes"] = boxes;
            o.meta["lattice_points"] = c.lattice_points;
            o.meta["lattice_points_are_vertices"] = c.lattice_points_are_vertices;
            return o;
        };
    });

    auto* corpus = app.add_subcommand("corpus", "Worked-example corpus");
    corpus->require_subcommand(1);
    auto* verify = corpus->add_subcommand("verify", "Check every corpus entry");
    verify->add_option("--filter", filter, "only entries whose name contains this text");
    verify->add_option("--dir", corpus_dir, "corpus directory");
    verify->callback([&] { raw_action = [&] { return corpus_verify(out, filter, corpus_dir); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        write_error(err, e.what());
        return kExitBadInput;
    }

    try {
        if (raw_action)
            return raw_action();
        if (!action) {
            write_error(err, "no command given");
            return kExitBadInput;
        }
        const Outcome o = action();
        write_envelope(out, o);
        return o.ok ? kExitOk : kExitCheckFailed;
    } catch (const InputError& e) {
        write_error(err, e.what(), &e.pointer());
        return kExitBadInput;
    } catch (const ScaleGuardError& e) {
        write_error(err, e.what());
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        write_error(err, e.what());
        return kExitBadInput;
    } catch (const std::exception& e) {
        write_error(err, std::string("internal error: ") + e.what());
        return kExitBadInput;
    }
}

}  // namespace polylab
