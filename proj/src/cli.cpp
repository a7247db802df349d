#include "ctn/cli.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "ctn/aux_graph.hpp"
#include "ctn/cycles.hpp"
#include "ctn/extremal.hpp"
#include "ctn/parallel.hpp"
#include "ctn/stats.hpp"

namespace ctn::cli {

namespace {

/// Bad flags or out-of-range parameters; maps to exit code 2.
struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& message)
{
    if (!ok)
        throw UsageError(message);
}

std::string effective_format(const RunConfig& c)
{
    if (!c.format.empty())
        return c.format;
    auto ends_with = [&](const char* suffix) {
        const std::string s(suffix);
        return c.out.size() >= s.size() && c.out.compare(c.out.size() - s.size(), s.size(), s) == 0;
    };
    if (ends_with(".csv"))
        return "csv";
    if (ends_with(".json"))
        return "json";
    return (c.command == "chi" || c.command == "bounds") ? "csv" : "json";
}

Json header(const RunConfig& c)
{
    Json j;
    j["tool"] = kVersion;
    j["config"] = config_to_json(c);
    return j;
}

std::string csv_preamble(const RunConfig& c)
{
    return std::string("# ") + kVersion + "\n# config: " + config_to_json(c).dump() + "\n";
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out)
{
    if (c.out.empty()) {
        out << text;
        return;
    }
    write_text_file(c.out, text);
}

void emit(const RunConfig& c, const Json& doc, std::ostream& out) { emit(c, doc.dump(2) + "\n", out); }

Json rational_json(const Rational& r) { return ctn::to_string(r); }

SubgraphMask load_mask_or_full(const RunConfig& c, const TranspositionGraph& g)
{
    if (c.mask_path.empty())
        return SubgraphMask::full(g);
    const auto doc = read_json_file(c.mask_path);
    // Search reports embed the subgraph under "subgraph".
    const Json& sub = doc.contains("subgraph") ? doc["subgraph"] : doc;
    return subgraph_from_json(g, sub);
}

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(std::stoi(item));
    return out;
}

std::pair<int, int> parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw UsageError("cannot parse range '" + text + "' (expected L or A..B)");
    }
}

// ---- commands -------------------------------------------------------------

int cmd_build(const RunConfig& c, std::ostream& out)
{
    require(c.n >= 3 && c.n <= 8, "build: n must lie in [3, 8]");
    const TranspositionGraph g(c.n);
    const auto full = SubgraphMask::full(g);
    const auto deg = degree_sequence(g, full);
    bool regular = true;
    for (int d : deg)
        regular = regular && d == g.degree();
    std::uint64_t enumerated_edges = 0;
    bool bipartite = true;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (int t = 0; t < g.degree(); ++t) {
            const VertexId w = g.neighbor(v, t);
            bipartite = bipartite && g.bipart_class(v) != g.bipart_class(w);
            if (v < w)
                ++enumerated_edges;
        }
    const std::uint64_t expected_v = factorial(c.n);
    const std::uint64_t expected_e = expected_v / 2 * static_cast<std::uint64_t>(c.n * (c.n - 1) / 2);

    Json j = header(c);
    j["n"] = c.n;
    j["vertex_count"] = g.vertex_count();
    j["edge_count"] = enumerated_edges;
    j["expected_vertex_count"] = expected_v;
    j["expected_edge_count"] = expected_e;
    j["degree"] = g.degree();
    j["regular"] = regular;
    j["bipartite"] = bipartite;
    Json ts = Json::array();
    for (const auto& t : g.transpositions())
        ts.push_back(t.to_string());
    j["transpositions"] = ts;
    const bool ok = regular && bipartite && g.vertex_count() == expected_v && enumerated_edges == expected_e;
    j["status"] = ok ? "pass" : "fail";

    if (!c.graph_out.empty())
        write_text_file(c.graph_out, subgraph_to_json(g, full).dump() + "\n");
    if (!c.degrees_out.empty())
        write_text_file(c.degrees_out, degree_csv(g, full));
    emit(c, j, out);
    return ok ? exit_ok : exit_verification_failed;
}

Json census_json(const FourCycleCensus& cen)
{
    Json j;
    j["total"] = cen.total;
    j["closed_form_total"] = rational_json(cen.closed_form_total);
    j["total_mismatch"] = cen.total_mismatch;
    Json pe;
    pe["constant"] = cen.per_edge_constant;
    pe["measured"] = cen.measured_per_edge;
    pe["closed_form"] = cen.closed_form_per_edge;
    pe["closed_form_expression"] = "(n-2)(n+1)/2";
    pe["mismatch"] = cen.per_edge_mismatch;
    pe["observed_fit_expression"] = "(n-2)(n+5)/2";
    pe["observed_fit"] = cen.fitted_per_edge;
    j["per_edge"] = pe;
    // The closed form undercounts shared-support 2-paths; a constant census that
    // matches the observed fit is the known discrepancy, anything else fails.
    std::string status = "pass";
    if (!cen.per_edge_constant)
        status = "fail";
    else if (cen.per_edge_mismatch)
        status = static_cast<std::int64_t>(cen.measured_per_edge) == cen.fitted_per_edge ? "documented-mismatch"
                                                                                       : "fail";
    j["status"] = status;
    return j;
}

int cmd_census(const RunConfig& c, std::ostream& out)
{
    require(c.n >= 3 && c.n <= 5, "census: n must lie in [3, 5] (exhaustive enumeration cap)");
    const TranspositionGraph g(c.n);
    const auto cen = four_cycle_census(g);
    Json j = header(c);
    j["n"] = c.n;
    j["edge_count"] = g.edge_count();
    const Json cj = census_json(cen);
    for (const auto& [k, v] : cj.items())
        j[k] = v;
    j["per_edge_counts"] = cen.per_edge_counts;
    emit(c, j, out);
    return j["status"] == "fail" ? exit_verification_failed : exit_ok;
}

Json identity_json(int id, const char* name, const IdentityCheck& chk)
{
    Json j;
    j["id"] = id;
    j["name"] = name;
    j["relation"] = chk.equality ? "==" : ">=";
    j["lhs"] = chk.lhs;
    j["rhs"] = chk.rhs;
    j["status"] = chk.holds() ? "pass" : "fail";
    return j;
}

int cmd_verify(const RunConfig& c, std::ostream& out)
{
    require(c.n >= 3 && c.n <= 5, "verify: n must lie in [3, 5] (aux graph sweep cap)");
    require(c.suite.empty() || c.suite == "lemmas", "verify: unknown suite '" + c.suite + "' (expected lemmas)");
    const TranspositionGraph g(c.n);
    const auto mask = load_mask_or_full(c, g);
    Json j = header(c);
    j["n"] = c.n;
    j["mask_edges"] = mask.edge_count();
    Json checks = Json::array();
    bool failed = false;
    auto add = [&](Json chk) {
        failed = failed || chk["status"] == "fail";
        checks.push_back(std::move(chk));
    };

    if (c.suite == "lemmas") {
        const auto tp = survey_two_paths(g);
        Json chk;
        chk["name"] = "two_path_four_cycles";
        chk["disjoint_support_paths"] = tp.disjoint_paths;
        chk["shared_support_paths"] = tp.shared_paths;
        chk["exceptions"] = tp.exceptions;
        chk["status"] = tp.exceptions == 0 ? "pass" : "fail";
        add(chk);

        const int max_len = c.n == 3 ? 6 : (c.n == 4 ? 12 : 8);
        Json lens = Json::array();
        std::uint64_t violations = 0;
        for (int len = 4; len <= max_len; len += 2) {
            const auto s = survey_cycle_supports(g, SubgraphMask::full(g), len);
            Json row;
            row["length"] = len;
            row["cycles"] = s.cycles;
            row["max_support"] = s.max_support;
            lens.push_back(row);
            violations += s.violations;
        }
        Json sup;
        sup["name"] = "cycle_support_bound";
        sup["lengths"] = lens;
        sup["violations"] = violations;
        sup["status"] = violations == 0 ? "pass" : "fail";
        add(sup);

        const auto gi = girth(g, SubgraphMask::full(g));
        Json gj;
        gj["name"] = "girth";
        gj["value"] = gi ? Json(*gi) : Json("acyclic");
        gj["status"] = gi && *gi == 4 ? "pass" : "fail";
        add(gj);

        Json cj = census_json(four_cycle_census(g));
        Json named;
        named["name"] = "four_cycle_census";
        for (const auto& [k, v] : cj.items())
            named[k] = v;
        add(named);
    }

    const auto ids = c.suite == "lemmas" && c.identities == "1,2,8" ? std::vector<int>{1, 2}
                                                                    : parse_int_list(c.identities);
    if (!ids.empty()) {
        const auto rep = verify_identities(g, mask);
        for (int id : ids) {
            switch (id) {
            case 1: add(identity_json(1, "aux_vertex_count", rep.eq1)); break;
            case 2: add(identity_json(2, "aux_edges_cover_two_paths", rep.eq2)); break;
            case 8: add(identity_json(8, "h_aux_edges_plus_dense_four_cycles_cover_two_paths", rep.eq8)); break;
            default: throw UsageError("verify: unknown identity id " + std::to_string(id) + " (expected 1, 2, 8)");
            }
        }
    }
    j["checks"] = checks;
    j["status"] = failed ? "fail" : "pass";
    emit(c, j, out);
    return failed ? exit_verification_failed : exit_ok;
}

Json search_json(const RunConfig& c, const TranspositionGraph& g, const SearchReport& r)
{
    Json j = header(c);
    Json res;
    res["n"] = r.n;
    res["forbidden_length"] = r.forbidden_length;
    res["method"] = to_string(r.method);
    res["seed"] = r.seed;
    res["iterations"] = r.iterations;
    res["greedy_edges"] = r.greedy_edges;
    res["edges"] = r.edges;
    res["edge_total"] = g.edge_count();
    res["pi"] = rational_json(r.pi);
    res["verified"] = r.verified;
    res["optimal"] = r.method == SearchMethod::exact;
    j["result"] = res;
    const auto b = bound_envelope(r.n, r.forbidden_length / 2);
    Json bj;
    bj["kind"] = to_string(b.kind);
    bj["value"] = b.text;
    j["upper_bound"] = bj;
    j["subgraph"] = subgraph_to_json(g, r.mask);
    return j;
}

int cmd_search(const RunConfig& c, std::ostream& out)
{
    require(c.forbid % 2 == 0 && c.forbid >= 4, "search: --forbid must be an even length >= 4");
    const auto method = [&] {
        try {
            return parse_search_method(c.method);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    if (method == SearchMethod::exact)
        require(c.n == 3, "search: exact method is capped at n = 3");
    else
        require(c.n >= 3 && c.n <= 5 && c.forbid <= 10, "search: local/greedy caps are n <= 5 and forbid <= 10");
    require(c.restarts >= 1, "search: --restarts must be >= 1");

    const TranspositionGraph g(c.n);
    SearchReport r;
    if (method == SearchMethod::exact) {
        r = exact_max_cycle_free(g, c.forbid);
    } else if (method == SearchMethod::greedy) {
        r = local_search_max(g, c.forbid, c.seed, 0, SearchMethod::greedy);
    } else {
        std::vector<std::uint64_t> seeds;
        for (int k = 0; k < c.restarts; ++k)
            seeds.push_back(c.seed + static_cast<std::uint64_t>(k));
        r = best_local_search(g, c.forbid, seeds, c.budget);
    }
    emit(c, search_json(c, g, r), out);
    return r.verified ? exit_ok : exit_verification_failed;
}

int cmd_ramsey(const RunConfig& c, std::ostream& out)
{
    require(c.n >= 3 && c.n <= 5, "ramsey: n must lie in [3, 5]");
    require(c.colors >= 1, "ramsey: --colors must be >= 1");
    require(c.forbid % 2 == 0 && c.forbid >= 4 && c.forbid <= 14, "ramsey: --forbid must be even in [4, 14]");
    const TranspositionGraph g(c.n);
    std::vector<int> coloring;
    const std::vector<int>* given = nullptr;
    if (!c.coloring_path.empty()) {
        const auto doc = read_json_file(c.coloring_path);
        const Json& arr = doc.contains("coloring") ? doc["coloring"] : doc;
        coloring = arr.get<std::vector<int>>();
        given = &coloring;
    }
    const auto r = ramsey_experiment(g, c.colors, c.forbid, c.seed, given);
    Json j = header(c);
    Json res;
    res["colors"] = r.colors;
    std::vector<std::size_t> sizes(static_cast<std::size_t>(r.colors), 0);
    for (int col : r.coloring)
        ++sizes[static_cast<std::size_t>(col)];
    res["class_sizes"] = sizes;
    res["class_free"] = r.class_free;
    if (r.monochromatic) {
        Json m;
        m["color"] = r.monochromatic->color;
        m["cycle"] = vertices_to_json(g, r.monochromatic->witness.vertices);
        res["monochromatic"] = m;
    } else {
        res["monochromatic"] = nullptr;
    }
    j["result"] = res;
    j["coloring"] = r.coloring;
    emit(c, j, out);
    return exit_ok;
}

int cmd_chi(const RunConfig& c, std::ostream& out)
{
    require(c.n >= 3 && c.n <= 5, "chi: n must lie in [3, 5] (4-cycle enumeration cap)");
    const TranspositionGraph g(c.n);
    const auto mask = load_mask_or_full(c, g);
    const auto chi = chi_vector(g, mask);
    const auto g5 = graph5_claim_check(g, mask);
    const bool residuals_zero = chi.residual_sum == Rational(0) && chi.residual_weight == Rational(0)
                                && chi.incidences_by_class == chi.incidences_by_census;

    if (effective_format(c) == "csv") {
        std::ostringstream os;
        os << csv_preamble(c) << "# chi2_adj <- two_adjacent, chi2_opp <- two_opposite\n";
        os << "chi0,chi1,chi2_adj,chi2_opp,chi3,chi4,pi,n4,residual_sum,residual_weight,max_completed_per_edge\n";
        os << ctn::to_string(chi.chi0) << ',' << ctn::to_string(chi.chi1) << ',' << ctn::to_string(chi.chi2_adj)
           << ',' << ctn::to_string(chi.chi2_opp) << ',' << ctn::to_string(chi.chi3) << ','
           << ctn::to_string(chi.chi4) << ',' << ctn::to_string(chi.pi) << ',' << chi.n4 << ','
           << ctn::to_string(chi.residual_sum) << ',' << ctn::to_string(chi.residual_weight) << ',' << g5.max_per_edge
           << '\n';
        emit(c, os.str(), out);
    } else {
        Json j = header(c);
        Json mapping;
        mapping["chi2_1"] = "two_adjacent";
        mapping["chi2_2"] = "two_opposite";
        j["chi2_mapping"] = mapping;
        Json v;
        v["chi0"] = rational_json(chi.chi0);
        v["chi1"] = rational_json(chi.chi1);
        v["chi2_adj"] = rational_json(chi.chi2_adj);
        v["chi2_opp"] = rational_json(chi.chi2_opp);
        v["chi3"] = rational_json(chi.chi3);
        v["chi4"] = rational_json(chi.chi4);
        v["pi"] = rational_json(chi.pi);
        v["n4"] = chi.n4;
        v["counts"] = chi.counts;
        v["residual_sum"] = rational_json(chi.residual_sum);
        v["residual_weight"] = rational_json(chi.residual_weight);
        j["chi"] = v;
        Json g5j;
        g5j["max_per_edge"] = g5.max_per_edge;
        g5j["edges_over_two"] = g5.witness_edges.size();
        j["completed_four_cycles"] = g5j;
        j["status"] = residuals_zero ? "pass" : "fail";
        emit(c, j, out);
    }
    return residuals_zero ? exit_ok : exit_verification_failed;
}

int cmd_bounds(const RunConfig& c, std::ostream& out)
{
    const auto [lo, hi] = parse_range(c.l_range);
    require(lo >= 2 && hi >= lo, "bounds: need 2 <= l_min <= l_max");
    std::vector<BoundReport> rows;
    for (int l = lo; l <= hi; ++l)
        rows.push_back(bound_envelope(c.n, l));
    if (effective_format(c) == "csv") {
        std::ostringstream os;
        os << csv_preamble(c) << "l, kind, value\n";
        for (const auto& b : rows)
            os << b.l << ", " << to_string(b.kind) << ", " << b.text << '\n';
        emit(c, os.str(), out);
    } else {
        Json j = header(c);
        Json arr = Json::array();
        for (const auto& b : rows) {
            Json r;
            r["l"] = b.l;
            r["cycle_length"] = 2 * b.l;
            r["part"] = to_string(b.part);
            r["kind"] = to_string(b.kind);
            r["value"] = b.text;
            r["asserted_at_finite_n"] = b.kind == BoundKind::exact_ratio;
            arr.push_back(r);
        }
        j["bounds"] = arr;
        emit(c, j, out);
    }
    return exit_ok;
}

int cmd_lift_demo(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    require(c.n >= 3 && c.n <= 5, "lift-demo: n must lie in [3, 5]");
    require(c.family >= 0 && c.family <= c.n, "lift-demo: --i must lie in [0, n]");
    require(c.aux_length >= 3, "lift-demo: --l must be >= 3");
    const TranspositionGraph g(c.n);
    const auto mask = load_mask_or_full(c, g);
    Permutation x(c.n);
    try {
        x = Permutation::parse(c.x, c.n);
    } catch (const std::exception& e) {
        throw UsageError(std::string("lift-demo: ") + e.what());
    }
    const auto aux = build_aux(g, mask, x, c.family, AuxKind::g_aux);
    Json j = header(c);
    Json aj;
    aj["x"] = x.one_line();
    aj["i"] = c.family;
    aj["vertices"] = vertices_to_json(g, aux.vertices());
    Json edges = Json::array();
    for (const auto& e : aux.edges()) {
        Json ej;
        ej["ends"] = Json::array({g.vertex(aux.vertex(e.a)).one_line(), g.vertex(aux.vertex(e.b)).one_line()});
        ej["connectors"] = vertices_to_json(g, e.connectors);
        edges.push_back(ej);
    }
    aj["edges"] = edges;
    j["aux"] = aj;
    const auto cyc = aux.find_cycle(c.aux_length);
    if (!cyc) {
        j["aux_cycle"] = nullptr;
        j["lifted"] = nullptr;
        err << "no " << c.aux_length << "-cycle in this aux graph\n";
        emit(c, j, out);
        return exit_ok;
    }
    std::vector<VertexId> cyc_vertices;
    for (int k : *cyc)
        cyc_vertices.push_back(aux.vertex(k));
    j["aux_cycle"] = vertices_to_json(g, cyc_vertices);
    const auto lifted = lift_cycle(g, mask, aux, *cyc);
    j["lifted"] = vertices_to_json(g, lifted.vertices);
    j["lifted_length"] = lifted.length();
    j["valid"] = is_cycle(g, lifted.vertices, &mask);
    emit(c, j, out);
    return j["valid"].get<bool>() ? exit_ok : exit_verification_failed;
}

void write_sidecar_log(const RunConfig& c, std::chrono::steady_clock::duration elapsed, int code)
{
    if (c.out.empty())
        return;
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::ostringstream os;
    os << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ") << ' ' << c.command << " exit=" << code
       << " elapsed_ms=" << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()
       << " threads=" << thread_count() << '\n';
    try {
        write_text_file(c.out + ".log", os.str());
    } catch (const std::exception&) {
    }
}

} // namespace

Json config_to_json(const RunConfig& c)
{
    Json j;
    j["command"] = c.command;
    const auto& cmd = c.command;
    if (cmd != "bounds")
        j["n"] = c.n;
    if (cmd == "search" || cmd == "ramsey")
        j["forbid"] = c.forbid;
    if (cmd == "search") {
        j["method"] = c.method;
        j["seed"] = c.seed;
        j["budget"] = c.budget;
        j["restarts"] = c.restarts;
    }
    if (cmd == "ramsey") {
        j["colors"] = c.colors;
        j["seed"] = c.seed;
        j["coloring"] = c.coloring_path;
    }
    if (cmd == "verify" || cmd == "chi" || cmd == "lift-demo")
        j["mask"] = c.mask_path;
    if (cmd == "verify") {
        j["suite"] = c.suite;
        j["identities"] = c.identities;
    }
    if (cmd == "bounds")
        j["l"] = c.l_range;
    if (cmd == "lift-demo") {
        j["x"] = c.x;
        j["i"] = c.family;
        j["l"] = c.aux_length;
    }
    j["format"] = effective_format(c);
    return j;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const auto started = std::chrono::steady_clock::now();
    int code = exit_ok;
    try {
        if (config.threads > 0)
            set_thread_count(config.threads);
        const auto fmt = effective_format(config);
        require(fmt == "json" || fmt == "csv", "unknown format '" + fmt + "' (expected json or csv)");
        const auto& cmd = config.command;
        if (cmd == "build")
            code = cmd_build(config, out);
        else if (cmd == "census")
            code = cmd_census(config, out);
        else if (cmd == "verify")
            code = cmd_verify(config, out);
        else if (cmd == "search")
            code = cmd_search(config, out);
        else if (cmd == "ramsey")
            code = cmd_ramsey(config, out);
        else if (cmd == "chi")
            code = cmd_chi(config, out);
        else if (cmd == "bounds")
            code = cmd_bounds(config, out);
        else if (cmd == "lift-demo")
            code = cmd_lift_demo(config, out, err);
        else
            throw UsageError("unknown command '" + cmd + "'");
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        code = exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        code = exit_usage;
    } catch (const std::exception& e) {
        err << "verification error: " << e.what() << '\n';
        code = exit_verification_failed;
    }
    write_sidecar_log(config, std::chrono::steady_clock::now() - started, code);
    return code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Complete transposition graph toolkit", "ctn"};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", kVersion);
    RunConfig c;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", c.out, "Report path (stdout when omitted)");
        sub->add_option("--format", c.format, "json or csv");
        sub->add_option("--threads", c.threads, "Worker threads (overrides CTN_THREADS)");
    };

    auto* build = app.add_subcommand("build", "Construct CT_n and check its basic structure");
    build->add_option("--n", c.n, "Degree")->required();
    build->add_option("--emit-graph", c.graph_out, "Write CT_n in subgraph JSON format");
    build->add_option("--degrees", c.degrees_out, "Write the degree sequence as CSV");
    add_common(build);

    auto* census = app.add_subcommand("census", "Exhaustive 4-cycle census of CT_n");
    census->add_option("--n", c.n, "Degree")->required();
    add_common(census);

    auto* verify = app.add_subcommand("verify", "Check structural lemmas and counting identities");
    verify->add_option("--n", c.n, "Degree")->required();
    verify->add_option("--mask", c.mask_path, "Subgraph JSON (full CT_n when omitted)");
    verify->add_option("--identities", c.identities, "Comma list of identity ids: 1, 2, 8");
    verify->add_option("--suite", c.suite, "Named suite: lemmas");
    add_common(verify);

    auto* search = app.add_subcommand("search", "Search for dense C_2l-free subgraphs");
    search->add_option("--n", c.n, "Degree")->required();
    search->add_option("--forbid", c.forbid, "Forbidden cycle length 2l")->required();
    search->add_option("--method", c.method, "exact, greedy or local");
    search->add_option("--seed", c.seed, "RNG seed");
    search->add_option("--budget", c.budget, "Local-move budget");
    search->add_option("--restarts", c.restarts, "Independent seeds seed..seed+k-1");
    add_common(search);

    auto* ramsey = app.add_subcommand("ramsey", "Colour edges and look for a monochromatic C_2l");
    ramsey->add_option("--n", c.n, "Degree")->required();
    ramsey->add_option("--colors", c.colors, "Number of colours")->required();
    ramsey->add_option("--forbid", c.forbid, "Cycle length 2l")->required();
    ramsey->add_option("--seed", c.seed, "RNG seed");
    ramsey->add_option("--coloring", c.coloring_path, "JSON array of colours by edge id");
    add_common(ramsey);

    auto* chi = app.add_subcommand("chi", "Intersection-class ratios over all 4-cycles");
    chi->add_option("--n", c.n, "Degree")->required();
    chi->add_option("--mask", c.mask_path, "Subgraph JSON (full CT_n when omitted)");
    add_common(chi);

    auto* bounds = app.add_subcommand("bounds", "Upper-bound envelope for ex(CT_n, C_2l)");
    bounds->add_option("--l", c.l_range, "l or l_min..l_max");
    bounds->add_option("--n", c.n, "Degree (reported only)");
    add_common(bounds);

    auto* lift = app.add_subcommand("lift-demo", "Lift an aux-graph cycle to a cycle of G");
    lift->add_option("--n", c.n, "Degree")->required();
    lift->add_option("--x", c.x, "Base vertex (one-line or cycle notation)");
    lift->add_option("--i", c.family, "Family index 0..n");
    lift->add_option("--l", c.aux_length, "Aux cycle length (>= 3)");
    lift->add_option("--mask", c.mask_path, "Subgraph JSON (full CT_n when omitted)");
    add_common(lift);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    c.command = app.get_subcommands().front()->get_name();
    return run(c, out, err);
}

} // namespace ctn::cli
