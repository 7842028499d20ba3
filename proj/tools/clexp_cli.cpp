// Batch interface: read surface/arc/loop JSON, run expansions, enumerations
// and verifications, print canonical polynomials and JSON reports.

#include "clexp/angles.hpp"
#include "clexp/bipartite.hpp"
#include "clexp/expand.hpp"
#include "clexp/json_io.hpp"
#include "clexp/oracle.hpp"
#include "clexp/qp.hpp"
#include "clexp/snake.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace clexp;
using nlohmann::json;

namespace {

struct CommonOpts {
    std::string surface_path;
    std::string arc_path;
    std::string loop_path;
    std::string backend = "angles";
    bool coefficient_free = false;
    bool json_out = false;
    bool dump_polygon = false;
    bool dump_dot = false;
    std::string two_notched = "product";
    int depth = 12;
};

Backend backend_from(const std::string& name) {
    if (name == "angles") return Backend::angles;
    if (name == "snake") return Backend::snake;
    if (name == "bipartite") return Backend::bipartite;
    if (name == "qp") return Backend::qp;
    throw CLI::ValidationError("--backend", "unknown backend '" + name + "'");
}

TwoNotchedBranch branch_from(const std::string& name) {
    if (name == "product") return TwoNotchedBranch::notched_product;
    if (name == "printed") return TwoNotchedBranch::printed_principal;
    if (name == "plus-one") return TwoNotchedBranch::printed_plus_one;
    throw CLI::ValidationError("--two-notched-branch", "unknown branch '" + name + "'");
}

TPolygon polygon_of(const Triangulation& t, const ArcSpec& d) {
    return d.kind == ArcSpec::Kind::plain ? build_plain(t, d) : build_notched(t, d);
}

int cmd_expand(const CommonOpts& o) {
    Triangulation t = surface_from_file(o.surface_path);
    ArcSpec d = arc_from_file(o.arc_path);
    ExpandOptions opt;
    opt.coefficient_free = o.coefficient_free;
    opt.branch = branch_from(o.two_notched);

    json report;
    report["surface"] = o.surface_path;
    report["coefficient_free"] = o.coefficient_free;

    std::vector<Backend> backends;
    if (o.backend == "all")
        backends = {Backend::angles, Backend::snake, Backend::bipartite, Backend::qp};
    else
        backends = {backend_from(o.backend)};

    std::string value;
    bool agree = true;
    for (Backend b : backends) {
        opt.backend = b;
        Expansion e = cluster_variable(t, d, opt);
        json jb;
        jb["backend"] = b == Backend::angles      ? "angles"
                        : b == Backend::snake     ? "snake"
                        : b == Backend::bipartite ? "bipartite"
                                                  : "qp";
        jb["objects"] = e.object_count;
        jb["value"] = e.value.str();
        jb["denominator"] = LPoly::monomial(e.denominator).str();
        report["backends"].push_back(jb);
        if (value.empty())
            value = e.value.str();
        else
            agree = agree && value == e.value.str();
    }
    report["value"] = value;
    report["backend_agreement"] = agree;

    if (o.dump_polygon && !d.underlying_in_triangulation()) {
        NormalizedInput ni = normalize_tags(t, d);
        report["polygon"] = json::parse(polygon_to_json(polygon_of(ni.triangulation, ni.arc)));
    }
    if (o.json_out)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << value << "\n";
    return agree ? 0 : 1;
}

int cmd_enumerate(const CommonOpts& o) {
    if (o.arc_path.empty() && o.loop_path.empty()) {
        std::cerr << "usage error: enumerate needs --arc or --loop\n";
        return 2;
    }
    Triangulation t = surface_from_file(o.surface_path);
    json report;
    std::vector<std::string> lines;
    if (!o.loop_path.empty()) {
        LoopSpec z = loop_from_file(o.loop_path);
        TPolygon tz = build_annulus(t, z);
        if (o.backend == "band" || o.backend == "snake") {
            AnnulusContext ctx = annulus_context(t, z);
            BandGraph b = build_band(ctx.cut);
            for (const auto& gm : band_good_pms(b)) {
                std::ostringstream os;
                os << "band";
                for (int e : gm.completion) os << " " << e;
                os << " | " << LPoly::monomial(gm.weight).str();
                lines.push_back(os.str());
            }
        } else {
            AnnulusContext ctx = annulus_context(t, z);
            for (const auto& a : good_enumerate(tz)) {
                std::ostringstream os;
                os << "angles";
                for (const Angle& x : a) os << " " << x.id();
                os << " | " << LPoly::monomial(weight_xy(tz, a, ctx.minimal)).str();
                lines.push_back(os.str());
            }
        }
        report["shape"] = "annulus";
    } else {
        ArcSpec d = arc_from_file(o.arc_path);
        if (d.underlying_in_triangulation()) {
            std::cerr << "usage error: enumerate needs an arc whose underlying plain arc "
                         "is not in the triangulation\n";
            return 2;
        }
        NormalizedInput ni = normalize_tags(t, d);
        TPolygon tp = polygon_of(ni.triangulation, ni.arc);
        AngleMatching amin = minimal_matching(tp);
        Backend b = backend_from(o.backend == "all" ? "angles" : o.backend);
        if (b == Backend::angles) {
            for (const auto& a : enumerate_matchings(tp)) {
                std::ostringstream os;
                for (const Angle& x : a) os << (os.str().empty() ? "" : " ") << x.id();
                os << " | " << LPoly::monomial(weight_xy(tp, a, amin)).str();
                lines.push_back(os.str());
            }
        } else if (b == Backend::bipartite) {
            BipartiteGraph bg = build_bipartite(tp);
            PerfectMatching emin = bipartite_minimal(bg, amin);
            for (const auto& e : enumerate_bipartite_pm(bg)) {
                std::ostringstream os;
                for (int x : e) os << (os.str().empty() ? "" : " ") << x;
                Monomial m(tp.nvars);
                for (int x : e)
                    if (bg.edges[x].label > 0) m.xexp[bg.edges[x].label - 1] += 1;
                for (int sq : squares_of(bg, e, emin)) {
                    int label = tp.edge(sq).label;
                    if (label > 0) m.yexp[label - 1] += 1;
                }
                os << " | " << LPoly::monomial(m).str();
                lines.push_back(os.str());
            }
        } else if (b == Backend::qp) {
            QuiverPotential qp = build_qp(tp);
            if (o.dump_dot) std::cout << quiver_to_dot(qp, tp);
            for (const Cut& c : minimal_cuts(qp)) {
                std::ostringstream os;
                for (int a : c) os << (os.str().empty() ? "" : " ") << a;
                os << " | "
                   << LPoly::monomial(weight_xy(tp, rho_inv(qp, c), amin)).str();
                lines.push_back(os.str());
            }
        } else {
            if (o.dump_dot && d.kind == ArcSpec::Kind::plain)
                std::cout << snake_to_dot(build_snake(tp));
            int count = 0;
            LPoly sum = backend_sum(ni.triangulation, ni.arc, Backend::snake, &count);
            for (const auto& [m, c] : sum.terms()) {
                Int k = c;
                while (k > 0) {
                    lines.push_back("snake | " + LPoly::monomial(m).str());
                    k -= 1;
                }
            }
        }
        if (o.dump_polygon) report["polygon"] = json::parse(polygon_to_json(tp));
    }
    std::sort(lines.begin(), lines.end());
    report["count"] = lines.size();
    report["objects"] = lines;
    if (o.json_out)
        std::cout << report.dump(2) << "\n";
    else {
        for (const auto& l : lines) std::cout << l << "\n";
        std::cout << "total " << lines.size() << "\n";
    }
    return 0;
}

int cmd_verify(const CommonOpts& o) {
    Triangulation t = surface_from_file(o.surface_path);
    ArcSpec d = arc_from_file(o.arc_path);
    ExpandOptions opt;
    opt.branch = branch_from(o.two_notched);
    std::string value;
    int objects = -1;
    bool ok = true;
    for (Backend b : {Backend::angles, Backend::snake, Backend::bipartite, Backend::qp}) {
        opt.backend = b;
        Expansion e = cluster_variable(t, d, opt);
        if (value.empty()) {
            value = e.value.str();
            objects = e.object_count;
        } else {
            ok = ok && value == e.value.str() && objects == e.object_count;
        }
    }
    std::cout << "4 backends, " << objects << " objects each, "
              << (ok ? "all weights equal" : "MISMATCH") << "\n";
    std::cout << value << "\n";
    return ok ? 0 : 1;
}

int cmd_fvector(const CommonOpts& o) {
    Triangulation t = surface_from_file(o.surface_path);
    ArcSpec d = arc_from_file(o.arc_path);
    FVectorReport r = f_vector(t, d);
    json report;
    report["from_expansion"] = r.from_expansion;
    if (r.from_fan_product) report["from_fan_product"] = *r.from_fan_product;
    report["combinatorial"] = r.combinatorial;
    std::vector<int> ints;
    for (int i = 1; i <= t.num_arcs(); ++i) ints.push_back(intersection_number(t, d, i));
    report["intersection_numbers"] = ints;
    bool ok = r.combinatorial == r.from_expansion && ints == r.from_expansion &&
              (!r.from_fan_product || *r.from_fan_product == r.from_expansion);
    report["agree"] = ok;
    if (o.json_out)
        std::cout << report.dump(2) << "\n";
    else {
        std::cout << "f-vector:";
        for (int f : r.from_expansion) std::cout << " " << f;
        std::cout << (ok ? "  (all routes agree)" : "  (ROUTES DISAGREE)") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_oracle_closure(const CommonOpts& o) {
    Triangulation t = surface_from_file(o.surface_path);
    Closure cl = mutation_closure(Seed::initial(t.exchange_matrix()), o.depth);
    std::cout << "cluster variables: " << cl.variables.size()
              << (cl.complete ? "" : " (depth bound reached; partial)") << "\n";
    for (const auto& v : cl.variables) std::cout << v << "\n";
    return 0;
}

int cmd_oracle_verify(const CommonOpts& o) {
    Triangulation t = surface_from_file(o.surface_path);
    ArcSpec d = arc_from_file(o.arc_path);
    VerifyResult vr = verify_against_formula(t, {{o.arc_path, d}}, o.depth);
    for (const auto& item : vr.items)
        std::cout << item.name << ": " << (item.in_closure ? "in closure" : "NOT in closure")
                  << " (closure size " << vr.closure_size
                  << (vr.closure_complete ? "" : ", partial") << ")\n";
    return vr.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cluster expansions from triangulated surfaces"};
    app.require_subcommand(1);
    CommonOpts o;

    auto add_common = [&](CLI::App* cmd, int needs_arc) {
        cmd->add_option("--surface", o.surface_path, "surface JSON file")->required();
        if (needs_arc) {
            auto* opt = cmd->add_option("--arc", o.arc_path, "tagged arc JSON file");
            if (needs_arc == 2) opt->required();
        }
        cmd->add_option("--backend", o.backend, "angles|snake|bipartite|qp|all");
        cmd->add_flag("--coefficient-free", o.coefficient_free, "specialise all y to 1");
        cmd->add_flag("--json-out", o.json_out, "emit a JSON report");
        cmd->add_flag("--dump-polygon", o.dump_polygon, "include the glued polygon");
        cmd->add_flag("--dump-dot", o.dump_dot, "print a graphviz dump of the backend graph");
        cmd->add_option("--two-notched-branch", o.two_notched, "product|printed|plus-one");
        cmd->add_option("--depth", o.depth, "mutation search depth");
    };

    auto* expand = app.add_subcommand("expand", "expand a tagged arc");
    add_common(expand, 2);
    auto* enumerate = app.add_subcommand("enumerate", "list the matchings or cuts");
    add_common(enumerate, 1);
    enumerate->add_option("--loop", o.loop_path, "essential loop JSON file");
    auto* verify = app.add_subcommand("verify", "compare all four backends");
    add_common(verify, 2);
    auto* fvector = app.add_subcommand("fvector", "f-vector by three routes");
    add_common(fvector, 2);
    auto* oracle = app.add_subcommand("oracle", "seed mutation oracle");
    oracle->require_subcommand(1);
    auto* closure = oracle->add_subcommand("closure", "breadth-first mutation closure");
    add_common(closure, 0);
    auto* overify = oracle->add_subcommand("verify", "membership of an expansion in the closure");
    add_common(overify, 2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (expand->parsed()) return cmd_expand(o);
        if (enumerate->parsed()) return cmd_enumerate(o);
        if (verify->parsed()) return cmd_verify(o);
        if (fvector->parsed()) return cmd_fvector(o);
        if (closure->parsed()) return cmd_oracle_closure(o);
        if (overify->parsed()) return cmd_oracle_verify(o);
    } catch (const SurfaceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return std::string(e.what()).find("cannot read") != std::string::npos ? 3 : 1;
    } catch (const LPolyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "json error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
