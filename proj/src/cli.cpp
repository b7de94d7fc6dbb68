#include "teichtet/cli.hpp"

#include "teichtet/develop.hpp"
#include "teichtet/errors.hpp"
#include "teichtet/explore.hpp"
#include "teichtet/metrics.hpp"
#include "teichtet/pattern.hpp"
#include "teichtet/teich.hpp"
#include "teichtet/topology.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace teichtet {

namespace {

constexpr double kPi = std::numbers::pi;

std::string g17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string g6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

struct InputOptions {
    std::string path;
    std::string builtin_name;
};

GluingPattern load_pattern(const InputOptions& in) {
    if (!in.builtin_name.empty() && !in.path.empty())
        throw UsageError("give either a file or --builtin, not both");
    if (!in.builtin_name.empty()) return builtin(in.builtin_name);
    if (in.path.empty()) throw UsageError("no input: give a triangulation file or --builtin NAME");
    std::ifstream f(in.path, std::ios::binary);
    if (!f) throw UsageError("cannot open '" + in.path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_pattern(buf.str());
}

void add_input(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("input", in.path, "triangulation file");
    cmd->add_option("--builtin", in.builtin_name, "built-in pattern name (see 'examples')");
}

std::vector<double> parse_params(const std::string& csv, int dim) {
    std::vector<double> out;
    if (!csv.empty()) {
        std::stringstream ss(csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                out.push_back(std::stod(item, &used));
                if (used != item.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw UsageError("bad parameter value '" + item + "'");
            }
        }
    }
    if (static_cast<int>(out.size()) != dim)
        throw UsageError("expected " + std::to_string(dim) + " parameters, got " +
                         std::to_string(out.size()));
    return out;
}

SweepSpec parse_grid(const std::string& text, int dim) {
    SweepSpec spec;
    if (!text.empty()) {
        std::stringstream ss(text);
        std::string axis;
        while (std::getline(ss, axis, ',')) {
            GridAxis a;
            if (std::sscanf(axis.c_str(), "%lf:%lf:%d", &a.min, &a.max, &a.steps) != 3)
                throw UsageError("bad grid axis '" + axis + "' (want min:max:steps)");
            spec.grid.push_back(a);
        }
    }
    if (static_cast<int>(spec.grid.size()) != dim)
        throw UsageError("grid has " + std::to_string(spec.grid.size()) + " axes but the chart has " +
                         std::to_string(dim) + " parameters");
    return spec;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << content;
}

void cmd_info(const GluingPattern& p, std::ostream& out) {
    const Topology topo = analyze(p);
    out << "tetrahedra: " << p.tet_count() << "\n";
    out << "closed: " << (p.is_closed() ? "yes" : "no") << "\n";
    const OrientationResult ori = check_orientable(p);
    out << "orientable: " << (ori.orientable ? "yes" : "no") << "\n";
    out << "faces: " << topo.face_classes << "\n";
    out << "edges: " << topo.edges.size() << "\n";
    for (const EdgeClass& e : topo.edges) {
        out << "  e" << e.id << ": " << e.wedges.size() << " wedges, "
            << (e.closed ? "closed" : "open") << ", ends on cusps "
            << topo.link_vertices[static_cast<std::size_t>(e.ends[0])].cusp << "/"
            << topo.link_vertices[static_cast<std::size_t>(e.ends[1])].cusp << "\n";
    }
    out << "cusps: " << topo.vertices.size() << "\n";
    for (const LinkSurface& ls : topo.links) {
        out << "  cusp " << ls.cusp << ": " << ls.triangles.size() << " triangles, " << ls.sides.size()
            << " sides (" << ls.boundary_sides.size() << " boundary), " << ls.link_vertices.size()
            << " vertices, chi " << ls.euler_char;
        if (ls.genus) out << ", genus " << *ls.genus;
        if (!ls.orientable) out << ", non-orientable";
        out << "\n";
    }
}

void cmd_links(const GluingPattern& p, std::ostream& out) {
    const Topology topo = analyze(p);
    for (const LinkSurface& ls : topo.links) {
        out << "cusp " << ls.cusp << ": chi " << ls.euler_char << ", "
            << (ls.closed ? "closed" : "bounded") << ", "
            << (ls.orientable ? "orientable" : "non-orientable");
        if (ls.genus) out << ", genus " << *ls.genus;
        out << "\n";
        out << "  triangles:";
        for (const CornerSlot& c : ls.triangles) out << " (" << c.tet << "," << c.vertex << ")";
        out << "\n";
        for (int lvid : ls.link_vertices) {
            const LinkVertexClass& lv = topo.link_vertices[static_cast<std::size_t>(lvid)];
            out << "  vertex v" << lv.id << " = " << (lv.end_index == 0 ? "tail" : "head") << " of e"
                << lv.edge_class << (lv.boundary ? " (boundary)" : "") << ", corners:";
            for (const EndSlot& e : lv.corners)
                out << " (" << e.tet << "," << e.vertex << "," << e.other << ")";
            out << "\n";
        }
    }
}

void cmd_dim(const GluingPattern& p, std::ostream& out) {
    const Topology topo = analyze(p);
    const int ev = dimension_formula(topo);
    const SkeletonReport sk = dimension_skeleton(topo);
    const SimilaritySystem sys = build_similarity_system(topo);
    const KernelChart chart = kernel_chart(topo, sys);
    out << "E-V: " << ev << ", skeleton: " << sk.dim << ", kernel: " << chart.dim << "\n";
    out << "quantity,value\n";
    out << "e_minus_v," << ev << "\n";
    out << "d0," << sk.d0 << "\n";
    for (std::size_t i = 0; i < sk.r.size(); ++i) out << "r_cusp" << i << "," << sk.r[i] << "\n";
    out << "skeleton," << sk.dim << "\n";
    out << "nullity," << chart.kernel_basis.size() << "\n";
    out << "cusps," << topo.vertices.size() << "\n";
    out << "kernel," << chart.dim << "\n";
}

void cmd_relations(const GluingPattern& p, std::ostream& out) {
    const Topology topo = analyze(p);
    const AngleRelationSystem sys = angle_relation_system(topo);
    out << "angle relations: " << sys.matrix.rows() << " cusps x " << sys.matrix.cols()
        << " edges, rank " << rank(sys.matrix) << "\n";
    for (std::size_t i = 0; i < sys.matrix.rows(); ++i) {
        out << "cusp " << sys.cusp_ids[i] << ":";
        bool first = true;
        for (std::size_t e = 0; e < sys.matrix.cols(); ++e) {
            if (sys.matrix.at(i, e) == 0) continue;
            out << (first ? " " : " + ") << sys.matrix.at(i, e) << " phi_e" << e;
            first = false;
        }
        out << " = " << sys.rhs_pi[i] << " pi\n";
    }
    if (!p.is_closed()) return;
    const BasisEdges be = basis_edges(topo);
    out << "basis edges:";
    for (int b : be.basis) out << " e" << b;
    out << "\n";
    for (const AngleExpression& ex : be.expressions) {
        out << "theta_e" << ex.edge << " =";
        bool printed = false;
        if (ex.const_pi != 0) {
            out << " " << ex.const_pi << " pi";
            printed = true;
        }
        for (const auto& [b, c] : ex.terms) {
            const Rational mag = c < 0 ? Rational(-c) : c;
            out << (printed ? (c < 0 ? " - " : " + ") : (c < 0 ? " -" : " "));
            out << mag << " theta_e" << b;
            printed = true;
        }
        if (!printed) out << " 0";
        out << "\n";
    }
}

void cmd_realize(const GluingPattern& p, const std::string& params_csv, double tol, std::ostream& out) {
    const Topology topo = analyze(p);
    const SimilaritySystem sys = build_similarity_system(topo);
    const KernelChart chart = kernel_chart(topo, sys);
    const std::vector<double> params = parse_params(params_csv, chart.dim);
    const RealizedStructure rs = realize(topo, chart, params);

    out << "params:";
    for (double x : params) out << " " << g17(x);
    out << "\n";
    out << "side lengths:\n";
    for (const SideClass& sc : topo.sides)
        out << "  s" << sc.id << " (cusp " << sc.cusp << (sc.boundary ? ", boundary" : "")
            << "): " << g17(rs.lengths[static_cast<std::size_t>(sc.id)]) << "\n";
    out << "tet shapes (alpha beta gamma):\n";
    for (int t = 0; t < p.tet_count(); ++t) {
        const TetShape& s = rs.tet_shapes[static_cast<std::size_t>(t)];
        out << "  tet " << t << ": " << g17(s.alpha()) << " " << g17(s.beta()) << " " << g17(s.gamma())
            << "\n";
    }
    out << "edges:\n";
    for (const EdgeReportRow& row : edge_report(rs, tol)) {
        out << "  e" << row.edge << ": theta " << g17(row.theta) << " (theta/pi " << g6(row.theta / kPi)
            << "), " << (row.kind == EdgeKind::regular ? "regular" : "singular") << "\n";
    }
    out << "mostow residual: " << g17(mostow_residual(rs)) << "\n";
    out << "gauss-bonnet residuals:\n";
    for (const CuspReport& cr : rs.cusp_reports)
        out << "  cusp " << cr.cusp << " (chi " << cr.euler_char << "): " << g17(cr.gauss_bonnet_residual)
            << "\n";
    out << "shift coordinates:\n";
    for (const EdgeClass& e : topo.edges) {
        out << "  e" << e.id << ":";
        for (double s : rs.shifts.by_edge[static_cast<std::size_t>(e.id)]) out << " " << g17(s);
        out << " (cycle sum " << g17(rs.shifts.cycle_sum(e.id)) << ")\n";
    }
}

void cmd_complete(const GluingPattern& p, const std::string& start_csv, std::ostream& out) {
    const Topology topo = analyze(p);
    const SimilaritySystem sys = build_similarity_system(topo);
    const KernelChart chart = kernel_chart(topo, sys);
    std::vector<double> start;
    if (!start_csv.empty()) start = parse_params(start_csv, chart.dim);
    const CompleteResult res = find_complete(topo, chart, start);
    out << "converged: " << (res.converged ? "yes" : "no") << "\n";
    out << "params:";
    for (double x : res.params) out << " " << g17(x);
    out << "\n";
    out << "mostow residual: " << g17(res.residual) << "\n";
    out << "iterations: " << res.iterations << "\n";
    out << "jacobian check: " << (res.jacobian_check_ok ? "ok" : "degraded") << "\n";
    out << "message: " << res.message << "\n";
    if (res.converged) {
        const RealizedStructure rs = realize(topo, chart, res.params);
        out << "tet shapes (alpha beta gamma):\n";
        for (int t = 0; t < p.tet_count(); ++t) {
            const TetShape& s = rs.tet_shapes[static_cast<std::size_t>(t)];
            out << "  tet " << t << ": " << g17(s.alpha()) << " " << g17(s.beta()) << " "
                << g17(s.gamma()) << "\n";
        }
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"generalized deformation spaces of glued ideal tetrahedra"};
    app.require_subcommand(1);

    InputOptions in;
    std::string params_csv, grid_csv, start_csv, out_path, columns_csv;
    double tol = kSingularTol;
    int cusp = 0;

    CLI::App* c_info = app.add_subcommand("info", "combinatorial summary of a pattern");
    add_input(c_info, in);
    CLI::App* c_links = app.add_subcommand("links", "cusp link surfaces in detail");
    add_input(c_links, in);
    CLI::App* c_dim = app.add_subcommand("dim", "dimension, three ways");
    add_input(c_dim, in);
    CLI::App* c_rel = app.add_subcommand("relations", "angle relation system and basis edges");
    add_input(c_rel, in);

    CLI::App* c_real = app.add_subcommand("realize", "realize a structure at chart parameters");
    add_input(c_real, in);
    c_real->add_option("--params", params_csv, "comma-separated chart parameters");
    c_real->add_option("--tol", tol, "singular/regular tolerance");

    CLI::App* c_sweep = app.add_subcommand("sweep", "edge angles over a parameter grid, as CSV");
    add_input(c_sweep, in);
    c_sweep->add_option("--grid", grid_csv, "axes min:max:steps, comma separated");
    c_sweep->add_option("--columns", columns_csv,
                        "extra column groups: residuals, shifts (comma separated)");
    c_sweep->add_option("-o,--output", out_path, "output CSV path")->required();

    CLI::App* c_comp = app.add_subcommand("complete", "Newton search for the complete structure");
    add_input(c_comp, in);
    c_comp->add_option("--start", start_csv, "comma-separated start parameters");

    CLI::App* c_dev = app.add_subcommand("develop", "SVG development of one cusp link");
    add_input(c_dev, in);
    c_dev->add_option("--cusp", cusp, "cusp index");
    c_dev->add_option("--params", params_csv, "comma-separated chart parameters");
    c_dev->add_option("--tol", tol, "singular marker tolerance");
    c_dev->add_option("-o,--output", out_path, "output SVG path")->required();

    CLI::App* c_ex = app.add_subcommand("examples", "list built-in patterns");

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    try {
        if (c_ex->parsed()) {
            for (const BuiltinInfo& b : builtin_catalog()) out << b.name << ": " << b.description << "\n";
            return 0;
        }
        const GluingPattern p = load_pattern(in);
        if (c_info->parsed()) {
            cmd_info(p, out);
        } else if (c_links->parsed()) {
            cmd_links(p, out);
        } else if (c_dim->parsed()) {
            cmd_dim(p, out);
        } else if (c_rel->parsed()) {
            cmd_relations(p, out);
        } else if (c_real->parsed()) {
            cmd_realize(p, params_csv, tol, out);
        } else if (c_sweep->parsed()) {
            const Topology topo = analyze(p);
            const KernelChart chart = kernel_chart(topo, build_similarity_system(topo));
            SweepSpec spec = parse_grid(grid_csv, chart.dim);
            if (!columns_csv.empty()) {
                std::stringstream ss(columns_csv);
                std::string group;
                while (std::getline(ss, group, ',')) {
                    if (group == "residuals")
                        spec.with_residuals = true;
                    else if (group == "shifts")
                        spec.with_shifts = true;
                    else
                        throw UsageError("unknown column group '" + group + "'");
                }
            }
            write_file(out_path, sweep_csv(topo, chart, spec));
            out << "wrote " << out_path << "\n";
        } else if (c_comp->parsed()) {
            cmd_complete(p, start_csv, out);
        } else if (c_dev->parsed()) {
            const Topology topo = analyze(p);
            const KernelChart chart = kernel_chart(topo, build_similarity_system(topo));
            const RealizedStructure rs = realize(topo, chart, parse_params(params_csv, chart.dim));
            write_file(out_path, development_svg(develop_link(rs, cusp, tol)));
            out << "wrote " << out_path << "\n";
        }
        return 0;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace teichtet
