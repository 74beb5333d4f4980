// Command-line front end: loads graphs, points and codes, runs the
// experiments and emits CSV/JSON reports.
//
// Exit codes: 0 success, 2 validation error, 3 cap exceeded, 4 undefined
// measure (empty heteroclinic set).

#include <CLI11.hpp>

#include <sft/io.hpp>
#include <sft/periodic.hpp>
#include <sft/report.hpp>
#include <sft/resolving.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace sft;

namespace {

struct Output {
    std::string format = "csv";
    std::string path; // empty = stdout
};

void add_output_options(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "Report format (csv|json)")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", out.path, "Write the report to a file instead of stdout");
}

void write_report(const Table& table, const Output& out) {
    const std::string text =
        emit_report(table, out.format == "csv" ? ReportFormat::csv : ReportFormat::json);
    if (out.path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out.path, std::ios::binary);
        if (!f) throw validation_error("cannot open output file: " + out.path);
        f << text;
    }
}

std::uint64_t default_cap() {
    if (const char* env = std::getenv("SMALE_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw validation_error("SMALE_CAP must be a positive integer");
    }
    return 1000000;
}

std::vector<std::string> split_word(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : csv) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string format_opt(const std::optional<double>& v) {
    return v ? format_double(*v) : "NA";
}

std::string cylinder_label(const Graph& g, const CenteredCylinder& e) {
    return g.word_string(e.word, '.');
}

// A periodic base point whose 0/1 junction sits at the given vertex.
ShiftPoint point_through_vertex(const Graph& g, VertexIndex v) {
    const auto ens = enumerate_periodic(g, g.vertex_count(), 1u << 20);
    for (const auto& pt : ens.points) {
        const ShiftPoint z{pt.word, {}, pt.word, 0};
        for (std::int64_t s = 0; s < static_cast<std::int64_t>(pt.word.size()); ++s) {
            const ShiftPoint shifted = shift_point(z, s);
            if (g.target(coordinate(shifted, 0)) == v) return shifted;
        }
    }
    throw validation_error("no periodic point through vertex " + g.vertex_id(v));
}

HeteroFamily load_family(const Graph& g, const std::vector<std::string>& x_paths,
                         const std::vector<std::int64_t>& ns,
                         const std::vector<std::string>& y_paths,
                         const std::vector<std::int64_t>& ms) {
    if (x_paths.size() != ns.size() || y_paths.size() != ms.size())
        throw validation_error("each --x needs a matching -n, each --y a matching -m");
    std::vector<RayCylinder> unstable, stable;
    for (std::size_t i = 0; i < x_paths.size(); ++i)
        unstable.push_back(make_ray_cylinder(g, RaySide::unstable,
                                             load_point_json(g, x_paths[i]), ns[i]));
    for (std::size_t j = 0; j < y_paths.size(); ++j)
        stable.push_back(
            make_ray_cylinder(g, RaySide::stable, load_point_json(g, y_paths[j]), ms[j]));
    return make_hetero_family(g, std::move(unstable), std::move(stable));
}

int run(int argc, char** argv) {
    CLI::App app{"Bowen/Parry measures of shifts of finite type from heteroclinic points"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Validate a graph and report its structure");
    std::string an_graph;
    Output an_out;
    analyze->add_option("--graph", an_graph, "Graph JSON file")->required();
    add_output_options(analyze, an_out);
    analyze->callback([&] {
        const Graph g = load_graph_json(an_graph);
        const auto d = structure_analysis(g);
        Table t;
        t.name = "analyze";
        t.meta = {{"graph", an_graph},
                  {"vertices", std::to_string(g.vertex_count())},
                  {"edges", std::to_string(g.edge_count())},
                  {"irreducible", d.irreducible ? "true" : "false"},
                  {"period", std::to_string(d.period)}};
        t.columns = {"vertex", "class", "in_degree", "out_degree"};
        for (int v = 0; v < g.vertex_count(); ++v)
            t.rows.push_back({g.vertex_id(v),
                              d.irreducible ? std::to_string(d.class_of[v]) : "NA",
                              std::to_string(g.in_edges(v).size()),
                              std::to_string(g.out_edges(v).size())});
        write_report(t, an_out);
    });

    // perron
    auto* perron_cmd = app.add_subcommand("perron", "Perron eigendata and entropy");
    std::string pe_graph;
    Output pe_out;
    perron_cmd->add_option("--graph", pe_graph, "Graph JSON file")->required();
    add_output_options(perron_cmd, pe_out);
    perron_cmd->callback([&] {
        const Graph g = load_graph_json(pe_graph);
        const PerronData pd = compute_perron(g);
        Table t;
        t.name = "perron";
        t.meta = {{"graph", pe_graph},
                  {"lambda", format_double(pd.lambda)},
                  {"entropy", format_double(std::log(pd.lambda))}};
        t.columns = {"vertex", "u_r", "u_l"};
        for (int v = 0; v < g.vertex_count(); ++v)
            t.rows.push_back(
                {g.vertex_id(v), format_double(pd.u_r[v]), format_double(pd.u_l[v])});
        write_report(t, pe_out);
    });

    // parry
    auto* parry_cmd = app.add_subcommand("parry", "Parry masses of cylinders and rays");
    std::string pa_graph, pa_word, pa_side, pa_point;
    std::int64_t pa_param = 0;
    Output pa_out;
    parry_cmd->add_option("--graph", pa_graph, "Graph JSON file")->required();
    parry_cmd->add_option("--word", pa_word, "Centered cylinder word, comma-joined edge ids");
    parry_cmd->add_option("--side", pa_side, "Ray side (unstable|stable)")
        ->check(CLI::IsMember({"unstable", "stable"}));
    parry_cmd->add_option("--point", pa_point, "Ray base point JSON file");
    parry_cmd->add_option("--param", pa_param, "Ray parameter (n or m)");
    add_output_options(parry_cmd, pa_out);
    parry_cmd->callback([&] {
        const Graph g = load_graph_json(pa_graph);
        const PerronData pd = compute_perron(g);
        Table t;
        t.name = "parry";
        t.meta = {{"graph", pa_graph},
                  {"word", pa_word},
                  {"side", pa_side},
                  {"point", pa_point},
                  {"param", std::to_string(pa_param)},
                  {"lambda", format_double(pd.lambda)}};
        t.columns = {"object", "mass"};
        if (!pa_word.empty()) {
            const auto e = make_centered_cylinder(g, split_word(pa_word));
            t.rows.push_back({"cylinder " + cylinder_label(g, e),
                              format_double(centered_cylinder_mass(g, pd, e).value)});
        }
        if (!pa_point.empty()) {
            if (pa_side.empty())
                throw validation_error("--point requires --side unstable|stable");
            const auto side = pa_side == "unstable" ? RaySide::unstable : RaySide::stable;
            const auto r =
                make_ray_cylinder(g, side, load_point_json(g, pa_point), pa_param);
            t.rows.push_back({pa_side + " ray param " + std::to_string(pa_param) +
                                  " anchor " + g.vertex_id(r.anchor),
                              format_double(ray_cylinder_mass(g, pd, r).value)});
        }
        if (t.rows.empty())
            throw validation_error("parry needs --word and/or --point");
        write_report(t, pa_out);
    });

    // hetero-count
    auto* hc = app.add_subcommand("hetero-count", "Exact heteroclinic counts #h^k");
    std::string hc_graph, hc_x, hc_y;
    std::int64_t hc_n = 0, hc_m = 0, hc_k = 1;
    bool hc_list = false;
    Output hc_out;
    hc->add_option("--graph", hc_graph)->required();
    hc->add_option("--x", hc_x, "Unstable base point JSON")->required();
    hc->add_option("--y", hc_y, "Stable base point JSON")->required();
    hc->add_option("-n", hc_n, "Unstable ray parameter");
    hc->add_option("-m", hc_m, "Stable ray parameter");
    hc->add_option("-k", hc_k, "Time parameter")->required();
    hc->add_flag("--list", hc_list, "List the middle paths (cap applies)");
    add_output_options(hc, hc_out);
    hc->callback([&] {
        const Graph g = load_graph_json(hc_graph);
        const HeteroSpec spec = make_hetero_spec(g, load_point_json(g, hc_x),
                                                 load_point_json(g, hc_y), hc_n, hc_m);
        Table t;
        t.name = "hetero-count";
        t.meta = {{"graph", hc_graph},
                  {"x", hc_x},
                  {"y", hc_y},
                  {"n", std::to_string(hc_n)},
                  {"m", std::to_string(hc_m)},
                  {"k", std::to_string(hc_k)},
                  {"anchor_i", g.vertex_id(spec.anchor_i)},
                  {"anchor_j", g.vertex_id(spec.anchor_j)}};
        if (hc_list) {
            const auto en = hetero_enumerate(g, spec, hc_k, default_cap());
            t.meta.emplace_back("count", en.count.get_str());
            t.columns = {"index", "middle_path"};
            for (std::size_t i = 0; i < en.middle_paths.size(); ++i)
                t.rows.push_back({std::to_string(i),
                                  g.word_string(en.middle_paths[i], '.')});
        } else {
            t.columns = {"k", "count"};
            t.rows.push_back({std::to_string(hc_k), hetero_count(g, spec, hc_k).get_str()});
        }
        write_report(t, hc_out);
    });

    // hetero-series
    auto* hs = app.add_subcommand("hetero-series",
                                  "Scaled-count and entropy convergence series");
    std::string hs_graph, hs_x, hs_y;
    std::int64_t hs_n = 0, hs_m = 0, hs_kmax = 1;
    Output hs_out;
    hs->add_option("--graph", hs_graph)->required();
    hs->add_option("--x", hs_x)->required();
    hs->add_option("--y", hs_y)->required();
    hs->add_option("-n", hs_n);
    hs->add_option("-m", hs_m);
    hs->add_option("--k-max", hs_kmax)->required();
    add_output_options(hs, hs_out);
    hs->callback([&] {
        const Graph g = load_graph_json(hs_graph);
        const PerronData pd = compute_perron(g);
        const HeteroSpec spec = make_hetero_spec(g, load_point_json(g, hs_x),
                                                 load_point_json(g, hs_y), hs_n, hs_m);
        const auto series = ratio_and_entropy_series(g, pd, spec, hs_kmax);
        bool any_nonzero = false;
        for (const auto& row : series.rows) any_nonzero |= row.count > 0;
        if (!any_nonzero)
            throw undefined_measure("h^k is empty for every k <= " + std::to_string(hs_kmax));
        Table t;
        t.name = "hetero-series";
        t.meta = {{"graph", hs_graph},       {"x", hs_x},
                  {"y", hs_y},               {"n", std::to_string(hs_n)},
                  {"m", std::to_string(hs_m)}, {"k_max", std::to_string(hs_kmax)},
                  {"lambda", format_double(pd.lambda)},
                  {"target", format_double(series.target)},
                  {"entropy", format_double(series.entropy)}};
        t.columns = {"k", "count", "scaled", "target", "abs_err", "entropy_est"};
        for (const auto& row : series.rows)
            t.rows.push_back({std::to_string(row.k), row.count.get_str(),
                              format_double(row.scaled), format_double(row.target),
                              format_double(row.abs_err), format_opt(row.entropy_est)});
        write_report(t, hs_out);
    });

    // weak-star
    auto* ws = app.add_subcommand(
        "weak-star", "Empirical vs Parry masses over all centered cylinders");
    std::string ws_graph;
    std::vector<std::string> ws_x, ws_y;
    std::vector<std::int64_t> ws_n, ws_m;
    std::int64_t ws_k = 1;
    int ws_lmax = 1;
    Output ws_out;
    ws->add_option("--graph", ws_graph)->required();
    ws->add_option("--x", ws_x, "Unstable base point JSON (repeatable for unions)")
        ->required();
    ws->add_option("--y", ws_y, "Stable base point JSON (repeatable for unions)")->required();
    ws->add_option("-n", ws_n, "Unstable parameters, one per --x");
    ws->add_option("-m", ws_m, "Stable parameters, one per --y");
    ws->add_option("-k", ws_k)->required();
    ws->add_option("--l-max", ws_lmax)->required();
    add_output_options(ws, ws_out);
    ws->callback([&] {
        const Graph g = load_graph_json(ws_graph);
        const PerronData pd = compute_perron(g);
        if (ws_n.empty()) ws_n.assign(ws_x.size(), 0);
        if (ws_m.empty()) ws_m.assign(ws_y.size(), 0);
        const auto fam = load_family(g, ws_x, ws_n, ws_y, ws_m);
        const auto rep = weak_star_report(g, pd, fam, ws_k, ws_lmax);
        Table t;
        t.name = "weak-star";
        t.meta = {{"graph", ws_graph},
                  {"k", std::to_string(ws_k)},
                  {"l_max", std::to_string(ws_lmax)},
                  {"x", CLI::detail::join(ws_x)},
                  {"n", CLI::detail::join(ws_n)},
                  {"y", CLI::detail::join(ws_y)},
                  {"m", CLI::detail::join(ws_m)},
                  {"pieces_unstable", std::to_string(fam.unstable.size())},
                  {"pieces_stable", std::to_string(fam.stable.size())},
                  {"count", rep.count.get_str()},
                  {"sup_dev", format_double(rep.sup_dev)}};
        t.columns = {"cylinder", "empirical", "parry", "abs_err"};
        for (const auto& row : rep.rows)
            t.rows.push_back({cylinder_label(g, row.cylinder), rat_to_string(row.empirical),
                              format_double(row.parry), format_double(row.abs_err)});
        write_report(t, ws_out);
    });

    // irreducible-series
    auto* is = app.add_subcommand("irreducible-series",
                                  "Period-aware scaled-count series with both targets");
    std::string is_graph, is_x, is_y;
    std::int64_t is_n = 0, is_m = 0, is_kmax = 1;
    Output is_out;
    is->add_option("--graph", is_graph)->required();
    is->add_option("--x", is_x)->required();
    is->add_option("--y", is_y)->required();
    is->add_option("-n", is_n);
    is->add_option("-m", is_m);
    is->add_option("--k-max", is_kmax)->required();
    add_output_options(is, is_out);
    is->callback([&] {
        const Graph g = load_graph_json(is_graph);
        const PerronData pd = compute_perron(g);
        const auto decomp = structure_analysis(g);
        const HeteroSpec spec = make_hetero_spec(g, load_point_json(g, is_x),
                                                 load_point_json(g, is_y), is_n, is_m);
        const auto series = irreducible_ratio_series(g, pd, spec, is_kmax, decomp);
        bool any_nonzero = false;
        for (const auto& row : series.rows) any_nonzero |= row.total > 0;
        if (!any_nonzero)
            throw undefined_measure("h^k is empty for every k <= " + std::to_string(is_kmax));
        Table t;
        t.name = "irreducible-series";
        t.meta = {{"graph", is_graph},
                  {"x", is_x},
                  {"y", is_y},
                  {"period", std::to_string(series.period)},
                  {"n", std::to_string(is_n)},
                  {"m", std::to_string(is_m)},
                  {"k_max", std::to_string(is_kmax)},
                  {"target_component", format_double(series.target_component)},
                  {"target_xlevel", format_double(series.target_xlevel)},
                  {"piece_weight", "1/" + std::to_string(series.period)}};
        t.columns = {"k",       "count",   "scaled",       "target",
                     "abs_err", "entropy_est", "target_xlevel"};
        for (const auto& row : series.rows)
            t.rows.push_back({std::to_string(row.k), row.total.get_str(),
                              format_double(row.scaled), format_double(row.target_component),
                              format_double(row.abs_err), format_opt(row.entropy_est),
                              format_double(row.target_xlevel)});
        write_report(t, is_out);
    });

    // periodic
    auto* pe = app.add_subcommand("periodic", "Periodic-point ensembles and their measure");
    std::string per_graph;
    std::int64_t per_n = 1;
    int per_lmax = 0;
    Output per_out;
    pe->add_option("--graph", per_graph)->required();
    pe->add_option("-n", per_n, "Period bound")->required();
    pe->add_option("--l-max", per_lmax,
                   "Also compare ensemble masses with the Parry measure up to this halfwidth");
    add_output_options(pe, per_out);
    pe->callback([&] {
        const Graph g = load_graph_json(per_graph);
        const auto ens = enumerate_periodic(g, per_n, default_cap());
        Table t;
        t.name = "periodic";
        t.meta = {{"graph", per_graph},
                  {"n", std::to_string(per_n)},
                  {"l_max", std::to_string(per_lmax)},
                  {"total", ens.total.get_str()},
                  {"mobius_trace_total", mobius_trace_total(g, per_n).get_str()}};
        if (per_lmax > 0) {
            const PerronData pd = compute_perron(g);
            double sup = 0.0;
            t.columns = {"cylinder", "mu_n", "parry", "abs_err"};
            for (int l = 1; l <= per_lmax; ++l)
                for (const auto& e : all_cylinders(g, l)) {
                    const BigRat mass = periodic_measure_mass(ens, e);
                    const double parry = centered_cylinder_mass(g, pd, e).value;
                    const double dev = std::abs(mass.get_d() - parry);
                    sup = std::max(sup, dev);
                    t.rows.push_back({cylinder_label(g, e), rat_to_string(mass),
                                      format_double(parry), format_double(dev)});
                }
            t.meta.emplace_back("sup_dev", format_double(sup));
        } else {
            t.columns = {"p", "least_period_points", "s_p"};
            BigInt cumulative = 0;
            for (std::int64_t p = 1; p <= per_n; ++p) {
                cumulative += ens.least_period_counts[p];
                t.rows.push_back({std::to_string(p), ens.least_period_counts[p].get_str(),
                                  cumulative.get_str()});
            }
        }
        write_report(t, per_out);
    });

    // compare
    auto* cmp = app.add_subcommand(
        "compare", "Periodic, heteroclinic and Parry measures side by side");
    std::string cmp_graph, cmp_x, cmp_y;
    std::int64_t cmp_n = 0, cmp_m = 0, cmp_k = 1, cmp_pn = 1;
    int cmp_lmax = 1;
    Output cmp_out;
    cmp->add_option("--graph", cmp_graph)->required();
    cmp->add_option("--x", cmp_x)->required();
    cmp->add_option("--y", cmp_y)->required();
    cmp->add_option("-n", cmp_n);
    cmp->add_option("-m", cmp_m);
    cmp->add_option("-k", cmp_k)->required();
    cmp->add_option("--periodic-n", cmp_pn, "Period bound for the ensemble")->required();
    cmp->add_option("--l-max", cmp_lmax)->required();
    add_output_options(cmp, cmp_out);
    cmp->callback([&] {
        const Graph g = load_graph_json(cmp_graph);
        const PerronData pd = compute_perron(g);
        const HeteroSpec spec = make_hetero_spec(g, load_point_json(g, cmp_x),
                                                 load_point_json(g, cmp_y), cmp_n, cmp_m);
        const auto ens = enumerate_periodic(g, cmp_pn, default_cap());
        const auto rep = compare_constructions(g, pd, spec, cmp_k, ens, cmp_lmax);
        Table t;
        t.name = "compare";
        t.meta = {{"graph", cmp_graph},
                  {"x", cmp_x},
                  {"y", cmp_y},
                  {"n", std::to_string(cmp_n)},
                  {"m", std::to_string(cmp_m)},
                  {"k", std::to_string(cmp_k)},
                  {"l_max", std::to_string(cmp_lmax)},
                  {"periodic_n", std::to_string(cmp_pn)},
                  {"ensemble_total", ens.total.get_str()},
                  {"sup_periodic_vs_parry", format_double(rep.sup_periodic_vs_parry)},
                  {"sup_hetero_vs_parry", format_double(rep.sup_hetero_vs_parry)},
                  {"sup_periodic_vs_hetero", format_double(rep.sup_periodic_vs_hetero)}};
        t.columns = {"cylinder", "mu_periodic", "mu_hetero", "parry"};
        for (const auto& row : rep.rows)
            t.rows.push_back({cylinder_label(g, row.cylinder), rat_to_string(row.mu_periodic),
                              rat_to_string(row.mu_hetero), format_double(row.parry)});
        write_report(t, cmp_out);
    });

    // code-check
    auto* cc = app.add_subcommand("code-check",
                                  "Validate a one-block code and probe its fibers");
    std::string cc_code;
    std::int64_t cc_period = 8;
    Output cc_out;
    cc->add_option("--code", cc_code, "Code JSON file")->required();
    cc->add_option("--period-bound", cc_period, "Probe periodic points up to this period");
    add_output_options(cc, cc_out);
    cc->callback([&] {
        const OneBlockCode code = load_code_json(cc_code);
        const auto rt = resolving_type(code);
        const auto probe = almost_one_to_one_probe(code, cc_period, default_cap());
        Table t;
        t.name = "code-check";
        t.meta = {{"code", cc_code},
                  {"period_bound", std::to_string(cc_period)},
                  {"left_resolving", rt.left_resolving ? "true" : "false"},
                  {"right_resolving", rt.right_resolving ? "true" : "false"},
                  {"points_checked", std::to_string(probe.points_checked)},
                  {"min_fiber", probe.min_fiber < 0 ? "infinite"
                                                    : std::to_string(probe.min_fiber)},
                  {"almost_one_to_one_evidence",
                   probe.almost_one_to_one_evidence ? "true" : "false"},
                  {"note", "evidence over periodic points of period <= " +
                               std::to_string(cc_period) + " only, not a proof"}};
        t.columns = {"fiber_size", "points"};
        for (const auto& [size, count] : probe.histogram)
            t.rows.push_back(
                {size < 0 ? "infinite" : std::to_string(size), std::to_string(count)});
        write_report(t, cc_out);
    });

    // pushforward
    auto* pf = app.add_subcommand(
        "pushforward", "Measure transfer across a code: cylinders, stable sums, unstable lifts");
    std::string pf_code;
    int pf_lmax = 2;
    std::int64_t pf_param = 0;
    Output pf_out;
    pf->add_option("--code", pf_code)->required();
    pf->add_option("--l-max", pf_lmax, "Cylinder halfwidth bound");
    pf->add_option("--ray-param", pf_param, "Parameter for the ray transfer checks");
    add_output_options(pf, pf_out);
    pf->callback([&] {
        const OneBlockCode code = load_code_json(pf_code);
        const PerronData pdd = compute_perron(code.domain);
        const PerronData pdc = compute_perron(code.codomain);
        const auto rt = resolving_type(code);
        Table t;
        t.name = "pushforward";
        t.meta = {{"code", pf_code},
                  {"l_max", std::to_string(pf_lmax)},
                  {"ray_param", std::to_string(pf_param)},
                  {"scale", format_double(code_scale(code, pdd, pdc))},
                  {"right_resolving", rt.right_resolving ? "true" : "false"},
                  {"note", "ray masses are calibrated by the per-code scale constant; "
                           "almost-one-to-one is evidence from code-check, not a proof"}};
        t.columns = {"kind", "object", "codomain_mass", "domain_mass", "abs_err"};
        for (int l = 1; l <= pf_lmax; ++l)
            for (const auto& e : all_cylinders(code.codomain, l)) {
                const auto row = pushforward_check(code, pdd, pdc, e);
                t.rows.push_back({"cylinder", row.cylinder, format_double(row.codomain_mass),
                                  format_double(row.domain_mass_sum),
                                  format_double(row.abs_err)});
            }
        if (rt.right_resolving) {
            for (int v = 0; v < code.codomain.vertex_count(); ++v) {
                const ShiftPoint base = point_through_vertex(code.codomain, v);
                const auto c =
                    make_ray_cylinder(code.codomain, RaySide::stable, base, pf_param);
                const auto srow = pushforward_stable_sum(code, pdd, pdc, c);
                t.rows.push_back({"stable_sum",
                                  "anchor " + code.codomain.vertex_id(c.anchor) + " m=" +
                                      std::to_string(pf_param),
                                  format_double(srow.codomain_mass),
                                  format_double(srow.domain_calibrated),
                                  format_double(srow.abs_err)});
                const auto b =
                    make_ray_cylinder(code.codomain, RaySide::unstable, base, pf_param);
                const auto urow = pushforward_unstable_lift(code, pdd, pdc, b);
                t.rows.push_back({"unstable_lift",
                                  "anchor " + code.codomain.vertex_id(b.anchor) + " n=" +
                                      std::to_string(pf_param),
                                  format_double(urow.codomain_mass),
                                  format_double(urow.domain_calibrated),
                                  format_double(urow.abs_err)});
            }
        }
        write_report(t, pf_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const cap_exceeded& e) {
        std::cerr << "error: " << e.what() << " (exact count " << e.count() << ")\n";
        return 3;
    } catch (const undefined_measure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
