#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "syzcurve/curve.hpp"
#include "syzcurve/errors.hpp"
#include "syzcurve/parse.hpp"
#include "syzcurve/reproduce.hpp"
#include "syzcurve/unexpected.hpp"

using nlohmann::ordered_json;
using namespace syz;

namespace {

struct RunConfig {
    std::string config;  // "b3" or "dfn"
    int n = 3;
    std::string points_file;
    int k = 1;
    int d = 1;
    std::string line;  // "a,b,c"
    int syzygy_index = 0;
    uint64_t seed = 0;
    int samples = 2;
    std::string format = "text";
    std::string out_path;
    std::string curve_file;
    std::string point;  // "a,b,c"
    std::string filter;
};

uint64_t default_seed() {
    if (const char* env = std::getenv("SYZCURVE_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

PointConfig resolve_config(const RunConfig& rc) {
    int sources = (!rc.config.empty() ? 1 : 0) + (!rc.points_file.empty() ? 1 : 0);
    if (sources != 1) throw CLI::ValidationError("exactly one of --config / --points-file is required");
    if (!rc.points_file.empty()) {
        std::ifstream in(rc.points_file);
        if (!in) throw CLI::ValidationError("cannot open points file " + rc.points_file);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        return config_from_json(text);
    }
    if (rc.config == "b3") return b3();
    if (rc.config == "dfn") return fermat_dual(rc.n);
    throw CLI::ValidationError("unknown configuration '" + rc.config + "' (use b3 or dfn)");
}

ProjPoint parse_triple(const std::string& text, int order) {
    std::array<std::string, 3> parts;
    size_t start = 0;
    for (int i = 0; i < 3; ++i) {
        size_t comma = i < 2 ? text.find(',', start) : std::string::npos;
        if (i < 2 && comma == std::string::npos) throw math_error("expected three comma-separated scalars");
        parts[i] = text.substr(start, comma - start);
        start = comma + 1;
    }
    return {parse_scalar(parts[0], order), parse_scalar(parts[1], order), parse_scalar(parts[2], order)};
}

GenericLine resolve_line(const RunConfig& rc, const Arrangement& arr) {
    if (rc.line.empty()) return make_generic_line(arr, rc.seed, 50);
    return line_from_dual_point(arr, parse_triple(rc.line, arr.config.order));
}

void emit(const RunConfig& rc, const std::string& text, const ordered_json& j) {
    std::string payload = rc.format == "json" ? j.dump(2) + "\n" : text;
    if (rc.out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(rc.out_path);
        out << payload;
    }
}

std::string point_str(const ProjPoint& p) {
    return "(" + p[0].str() + ", " + p[1].str() + ", " + p[2].str() + ")";
}

ordered_json splitting_json(const SplittingType& st) {
    return ordered_json{{"k", st.k},
                        {"exponents", st.exponents},
                        {"base", st.base},
                        {"eps", st.eps},
                        {"mult", st.mult},
                        {"chern_consistent", st.chern_consistent}};
}

ordered_json report_json(const CurveReport& r, const PointConfig& z) {
    ordered_json mults = ordered_json::array();
    for (size_t i = 0; i < r.multiplicities_at_z.size(); ++i)
        mults.push_back(ordered_json{{"point", point_str(z.points[i])}, {"mult", r.multiplicities_at_z[i]}});
    ordered_json lines = ordered_json::array();
    for (const Poly3& l : r.line_components) lines.push_back(l.str(xyz_names()));
    return ordered_json{{"curve", r.curve.str(xyz_names())},
                        {"degree", r.degree},
                        {"k", r.k},
                        {"d", r.d},
                        {"degree_drop", r.degree_drop},
                        {"general_point", point_str(r.general_point)},
                        {"mult_at_general_point", r.mult_at_p},
                        {"multiplicities", mults},
                        {"line_components", lines}};
}

std::string report_text(const CurveReport& r, const PointConfig& z) {
    std::ostringstream out;
    out << "curve (degree " << r.degree << ", k=" << r.k << ", d=" << r.d << "):\n  "
        << r.curve.str(xyz_names()) << "\n";
    if (r.degree_drop > 0) out << "degree drop from gcd reduction: " << r.degree_drop << "\n";
    out << "multiplicity " << r.mult_at_p << " at general point " << point_str(r.general_point) << "\n";
    for (size_t i = 0; i < r.multiplicities_at_z.size(); ++i)
        out << "  mult " << r.multiplicities_at_z[i] << " at " << point_str(z.points[i]) << "\n";
    for (const Poly3& l : r.line_components) out << "line component: " << l.str(xyz_names()) << "\n";
    return out.str();
}

int cmd_dimtable(const RunConfig& rc) {
    PointConfig z = resolve_config(rc);
    DimTable t = dim_table(z, rc.k, rc.seed, rc.samples);
    std::ostringstream text;
    ordered_json rows = ordered_json::array();
    text << "j\tdim\tdelta\n";
    for (size_t j = 0; j < t.entries.size(); ++j) {
        text << j << "\t" << t.entries[j] << "\t" << t.delta((int)j) << "\n";
        rows.push_back(ordered_json{{"j", j}, {"dim", t.entries[j]}, {"delta", t.delta((int)j)}});
    }
    text << (t.converged ? "converged\n" : "not converged\n");
    emit(rc, text.str(), ordered_json{{"k", rc.k}, {"entries", rows}, {"converged", t.converged}});
    return 0;
}

int cmd_splitting(const RunConfig& rc) {
    PointConfig z = resolve_config(rc);
    SplittingType st = splitting_type(z, rc.k, rc.seed, rc.samples);
    std::ostringstream text;
    text << "exponents: ";
    for (size_t i = 0; i < st.exponents.size(); ++i) text << (i ? "," : "") << st.exponents[i];
    text << "\nbase " << st.base << ", eps ";
    for (size_t i = 0; i < st.eps.size(); ++i) text << (i ? "," : "") << st.eps[i];
    text << ", mult ";
    for (size_t i = 0; i < st.mult.size(); ++i) text << (i ? "," : "") << st.mult[i];
    text << "\nchern sum " << (st.chern_consistent ? "consistent" : "INCONSISTENT") << "\n";
    emit(rc, text.str(), splitting_json(st));
    return 0;
}

int cmd_table(const RunConfig& rc) {
    PointConfig z = resolve_config(rc);
    std::ostringstream text;
    ordered_json rows = ordered_json::array();
    text << "k\texponents\teps\tmult\tunexpected types\n";
    int shown_out_of_range = 0;
    for (int k = 1; shown_out_of_range < 2; ++k) {
        if (!in_validity_range(k, (int)z.size())) {
            text << k << "\tnon-convergent (outside validity range)\n";
            rows.push_back(ordered_json{{"k", k}, {"status", "non-convergent (outside validity range)"}});
            ++shown_out_of_range;
            continue;
        }
        SplittingType st = splitting_type(z, k, rc.seed, rc.samples);
        auto types = unexpected_types(z, st, rc.seed, rc.samples);
        std::string col;
        ordered_json jtypes = ordered_json::array();
        for (const UnexpectedType& t : types) {
            col += (col.empty() ? "" : ", ") + ("(" + std::to_string(t.degree) + "," + std::to_string(t.d) +
                                                ")" + (t.starred ? "*" : ""));
            jtypes.push_back(ordered_json{{"degree", t.degree}, {"d", t.d}, {"starred", t.starred}});
        }
        if (col.empty()) col = "---";
        text << k << "\t";
        for (size_t i = 0; i < st.exponents.size(); ++i) text << (i ? "," : "") << st.exponents[i];
        text << "\t";
        for (size_t i = 0; i < st.eps.size(); ++i) text << (i ? "," : "") << st.eps[i];
        text << "\t";
        for (size_t i = 0; i < st.mult.size(); ++i) text << (i ? "," : "") << st.mult[i];
        text << "\t" << col << "\n";
        ordered_json row = splitting_json(st);
        row["unexpected_types"] = jtypes;
        rows.push_back(row);
    }
    emit(rc, text.str(), ordered_json{{"size", z.size()}, {"rows", rows}});
    return 0;
}

int cmd_syzygies(const RunConfig& rc) {
    PointConfig z = resolve_config(rc);
    Arrangement arr = build_arrangement(z);
    GenericLine line = resolve_line(rc, arr);
    auto basis = restricted_syzygies(arr, line, rc.k, rc.d);
    std::ostringstream text;
    ordered_json jbasis = ordered_json::array();
    text << basis.size() << " restricted syzygies of degree " << rc.d << " on line through "
         << point_str(line.dual_point) << "\n";
    auto indices = monomial_exponents<3>(rc.k);
    for (size_t i = 0; i < basis.size(); ++i) {
        text << "[" << i << "]" << (basis[i].reduced ? " (reduced)" : " (non-reduced)") << "\n";
        ordered_json comps = ordered_json::array();
        for (size_t a = 0; a < basis[i].restricted.size(); ++a) {
            std::string idx = std::to_string(indices[a][0]) + std::to_string(indices[a][1]) +
                              std::to_string(indices[a][2]);
            text << "  g_" << idx << " = " << basis[i].restricted[a].str(lm_names()) << "\n";
            comps.push_back(basis[i].restricted[a].str(lm_names()));
        }
        jbasis.push_back(ordered_json{{"reduced", basis[i].reduced}, {"components", comps}});
    }
    emit(rc, text.str(),
         ordered_json{{"k", rc.k}, {"d", rc.d}, {"line", point_str(line.dual_point)}, {"basis", jbasis}});
    return 0;
}

int cmd_construct(const RunConfig& rc) {
    PointConfig z = resolve_config(rc);
    Arrangement arr = build_arrangement(z);
    GenericLine line = resolve_line(rc, arr);
    auto basis = restricted_syzygies(arr, line, rc.k, rc.d);
    if (rc.syzygy_index < 0 || rc.syzygy_index >= (int)basis.size())
        throw math_error("syzygy index " + std::to_string(rc.syzygy_index) + " out of range (basis size " +
                         std::to_string(basis.size()) + ")");
    CurveReport r = construct_curve(basis[rc.syzygy_index], arr, line);
    emit(rc, report_text(r, z), report_json(r, z));
    return 0;
}

int cmd_verify(const RunConfig& rc) {
    PointConfig z = resolve_config(rc);
    std::ifstream in(rc.curve_file);
    if (!in) throw CLI::ValidationError("cannot open curve file " + rc.curve_file);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    Poly3 curve = parse_poly<3>(text, xyz_names(), z.order);
    ProjPoint p = parse_triple(rc.point, z.order);
    CurveReport r = verify_curve(curve, z, p, rc.d);
    emit(rc, report_text(r, z), report_json(r, z));
    return 0;
}

int cmd_unexpected(const RunConfig& rc) {
    PointConfig z = resolve_config(rc);
    ordered_json j{{"d", rc.d}, {"k", rc.k}};
    std::ostringstream text;
    UnexpectednessVerdict v;
    if (in_validity_range(rc.k, (int)z.size())) {
        SplittingType st = splitting_type(z, rc.k, rc.seed, rc.samples);
        v = analyze(z, st, rc.d, rc.k, rc.seed, rc.samples);
        j["splitting"] = splitting_json(st);
    } else {
        v = is_unexpected_direct(z, rc.d, rc.k, rc.seed, rc.samples);
    }
    j["actual_dim"] = v.actual_dim;
    j["expected_dim"] = v.expected_dim;
    j["independent"] = v.independent;
    j["verdict_direct"] = v.verdict_direct;
    if (v.verdict_simple) j["verdict_simple"] = *v.verdict_simple;
    if (v.verdict_epsilon) j["verdict_epsilon"] = *v.verdict_epsilon;
    j["starred"] = v.starred;
    text << "type (" << rc.d + rc.k << "," << rc.d << "): actual " << v.actual_dim << ", expected "
         << v.expected_dim << ", " << (v.verdict_direct ? "unexpected" : "not unexpected")
         << (v.starred ? " (dependent conditions)" : "") << "\n";
    if (v.verdict_simple) text << "simple splitting criterion: " << (*v.verdict_simple ? "yes" : "no") << "\n";
    if (v.verdict_epsilon) text << "gap criterion: " << (*v.verdict_epsilon ? "yes" : "no") << "\n";
    emit(rc, text.str(), j);
    return 0;
}

int cmd_reproduce(const RunConfig& rc) {
    auto results = run_reproduction(rc.filter);
    bool all = true;
    std::ostringstream text;
    ordered_json rows = ordered_json::array();
    for (const CheckResult& r : results) {
        all = all && r.pass;
        text << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
        rows.push_back(ordered_json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    text << (all ? "all checks passed\n" : "SOME CHECKS FAILED\n");
    emit(rc, text.str(), ordered_json{{"checks", rows}, {"all_passed", all}});
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact construction and certification of unexpected plane curves from line arrangements"};
    app.require_subcommand(1);
    RunConfig rc;
    rc.seed = default_seed();

    auto add_common = [&](CLI::App* cmd, bool with_config = true) {
        if (with_config) {
            cmd->add_option("--config", rc.config, "builtin configuration: b3 or dfn");
            cmd->add_option("--n", rc.n, "order n for the dfn configuration");
            cmd->add_option("--points-file", rc.points_file, "JSON point configuration");
        }
        cmd->add_option("--seed", rc.seed, "random seed");
        cmd->add_option("--samples", rc.samples, "generic samples for agreement certificates");
        cmd->add_option("--format", rc.format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--out", rc.out_path, "write output to a file");
    };

    auto* tbl = app.add_subcommand("table", "splitting table with unexpected-type column");
    add_common(tbl);
    auto* dim = app.add_subcommand("dimtable", "fat-point dimension table");
    add_common(dim);
    dim->add_option("--k", rc.k, "twist offset")->required();
    auto* spl = app.add_subcommand("splitting", "splitting type of the restricted syzygy bundle");
    add_common(spl);
    spl->add_option("--k", rc.k, "twist offset")->required();
    auto* syzc = app.add_subcommand("syzygies", "restricted syzygy basis");
    add_common(syzc);
    syzc->add_option("--k", rc.k)->required();
    syzc->add_option("--d", rc.d)->required();
    syzc->add_option("--line", rc.line, "dual point of the line, e.g. \"-12,10,7\"");
    auto* con = app.add_subcommand("construct", "construct a curve from a syzygy");
    add_common(con);
    con->add_option("--k", rc.k)->required();
    con->add_option("--d", rc.d)->required();
    con->add_option("--line", rc.line);
    con->add_option("--syzygy-index", rc.syzygy_index, "index into the deterministic basis");
    auto* ver = app.add_subcommand("verify", "multiplicity profile of a supplied curve");
    add_common(ver);
    ver->add_option("--curve-file", rc.curve_file)->required();
    ver->add_option("--point", rc.point, "general point, e.g. \"1,2,3\"")->required();
    ver->add_option("--d", rc.d)->required();
    auto* unx = app.add_subcommand("unexpected", "unexpectedness verdict for a type (d+k, d)");
    add_common(unx);
    unx->add_option("--k", rc.k)->required();
    unx->add_option("--d", rc.d)->required();
    auto* rep = app.add_subcommand("reproduce", "run the full reproduction suite");
    add_common(rep, false);
    rep->add_option("--filter", rc.filter, "run only checks whose name contains this substring");

    try {
        app.parse(argc, argv);
        if (tbl->parsed()) return cmd_table(rc);
        if (dim->parsed()) return cmd_dimtable(rc);
        if (spl->parsed()) return cmd_splitting(rc);
        if (syzc->parsed()) return cmd_syzygies(rc);
        if (con->parsed()) return cmd_construct(rc);
        if (ver->parsed()) return cmd_verify(rc);
        if (unx->parsed()) return cmd_unexpected(rc);
        if (rep->parsed()) return cmd_reproduce(rc);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const genericity_error& e) {
        std::cerr << "genericity failure: " << e.what() << "\n";
        return 4;
    } catch (const math_error& e) {
        std::cerr << "mathematical inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
