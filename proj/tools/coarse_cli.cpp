// coarse: command line front end for the coarse-decomposition library.
// Exit codes: 0 success, 1 failed check or violated invariant, 2 usage or
// input error. Reports are JSON envelopes {"payload": ..., "wall_time_ms":}
// where the payload is deterministic for identical inputs and flags.

#include <chrono>
#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coarse/budget.hpp"
#include "coarse/builders.hpp"
#include "coarse/cover.hpp"
#include "coarse/decomposition.hpp"
#include "coarse/distance_graph.hpp"
#include "coarse/generators.hpp"
#include "coarse/graph.hpp"
#include "coarse/io.hpp"
#include "coarse/separator.hpp"
#include "coarse/transforms.hpp"
#include "coarse/treewidth.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace coarse;

ordered_json rat_json(const Rat& x) {
    if (x.is_integer()) return ordered_json(x.num());
    return ordered_json(x.str());
}

ordered_json balls_json(const std::vector<Ball>& balls) {
    ordered_json out = ordered_json::array();
    for (const Ball& b : balls) {
        ordered_json jb;
        jb["center"] = b.center;
        jb["radius"] = rat_json(b.radius);
        out.push_back(std::move(jb));
    }
    return out;
}

ordered_json violations_json(const std::vector<Violation>& vs) {
    ordered_json out = ordered_json::array();
    for (const Violation& v : vs) {
        ordered_json jv;
        jv["rule"] = v.rule;
        jv["detail"] = v.detail;
        out.push_back(std::move(jv));
    }
    return out;
}

ordered_json pair_witness_json(const PairWitness& w) {
    ordered_json j;
    j["u"] = w.u;
    j["v"] = w.v;
    j["dist_g"] = rat_json(w.dist_g);
    j["dist_h"] = rat_json(w.dist_h);
    j["slack"] = rat_json(w.slack);
    return j;
}

ordered_json cover_stats_json(const CoverStats& stats) {
    ordered_json j;
    ordered_json per = ordered_json::array();
    for (const BagCoverStats& bs : stats.per_bag) {
        ordered_json jb;
        jb["node"] = bs.node;
        jb["from_attached"] = bs.from_attached;
        jb["found"] = bs.found;
        jb["size"] = bs.size;
        jb["max_radius"] = rat_json(bs.max_radius);
        jb["round"] = bs.round;
        if (bs.round) jb["potential"] = bs.potential;
        per.push_back(std::move(jb));
    }
    j["per_bag"] = std::move(per);
    j["max_size"] = stats.max_size;
    if (stats.max_potential) j["max_potential"] = *stats.max_potential;
    j["all_round"] = stats.all_round;
    j["all_found"] = stats.all_found;
    return j;
}

// Bound table for a decomposition built with (k, r): claimed vs observed.
// simple: cover sizes <= k*(ceil(log2 n) + 2).
// round: sizes <= gamma + 2k, potential <= 4k*(ceil(log2 n) + 1),
// max radius <= r*log2(12*k*log2 n) (checked as 2^(rad/r) <= 12*k*log2 n
// with 1e-9 slack; needs n >= 2).
ordered_json bound_table(const std::string& algo, const Graph& g, const CoverStats& stats,
                         int k, int r, long long gamma_cap, bool& all_ok) {
    ordered_json table = ordered_json::array();
    long long n = g.num_vertices();
    auto add_row = [&table, &all_ok](const std::string& name, ordered_json claimed,
                                     ordered_json observed, bool ok) {
        ordered_json row;
        row["bound"] = name;
        row["claimed"] = std::move(claimed);
        row["observed"] = std::move(observed);
        row["ok"] = ok;
        table.push_back(std::move(row));
        all_ok = all_ok && ok;
    };
    if (!stats.all_found) {
        add_row("covers_found", true, false, false);
        return table;
    }
    if (algo == "simple") {
        long long claimed = static_cast<long long>(k) * (ceil_log2(std::max(n, 1LL)) + 2);
        add_row("cover_size", claimed, stats.max_size, stats.max_size <= claimed);
    } else {
        long long size_claim = gamma_cap + 2LL * k;
        add_row("cover_size", size_claim, stats.max_size, stats.max_size <= size_claim);
        unsigned long long phi_claim =
            4ULL * static_cast<unsigned long long>(k) *
            (static_cast<unsigned long long>(ceil_log2(std::max(n, 1LL))) + 1);
        unsigned long long phi_obs = stats.max_potential ? *stats.max_potential : 0;
        add_row("potential", phi_claim, phi_obs, stats.all_round && phi_obs <= phi_claim);
        if (n >= 2) {
            Rat max_rad(0);
            for (const BagCoverStats& bs : stats.per_bag)
                if (bs.max_radius > max_rad) max_rad = bs.max_radius;
            double budget = 12.0 * k * std::log2(static_cast<double>(n));
            double lhs = std::pow(2.0, max_rad.to_double() / r);
            double claimed = r * std::log2(budget);
            add_row("max_radius", claimed, rat_json(max_rad), lhs <= budget + 1e-9);
        }
    }
    return table;
}

struct Report {
    ordered_json payload;
    int exit_code{0};
};

// ---- gen ----

struct GenArgs {
    std::string family;
    int n{0}, rows{0}, cols{0}, side{0}, threshold{0};
    std::uint64_t seed{0};
    std::string prob{"1/2"};
    std::string out;
    std::string format{"json"};
};

Report run_gen(const GenArgs& a) {
    FamilySpec spec;
    spec.family = a.family;
    spec.n = a.n;
    spec.rows = a.rows;
    spec.cols = a.cols;
    spec.side = a.side;
    spec.threshold = a.threshold;
    spec.seed = a.seed;
    spec.prob = Rat::parse(a.prob);
    Graph g = generate(spec);
    std::string text = a.format == "text" ? io::graph_to_text(g) : io::graph_to_json(g);
    io::write_file(a.out, text);

    Report rep;
    rep.payload["command"] = "gen";
    rep.payload["family"] = a.family;
    ordered_json params;
    if (a.n) params["n"] = a.n;
    if (a.rows) params["rows"] = a.rows;
    if (a.cols) params["cols"] = a.cols;
    if (a.side) params["side"] = a.side;
    if (a.family == "random_geometric") params["threshold"] = a.threshold;
    if (a.family == "random_geometric" || a.family == "gnp") params["seed"] = a.seed;
    if (a.family == "gnp") params["prob"] = a.prob;
    rep.payload["params"] = std::move(params);
    rep.payload["n"] = g.num_vertices();
    rep.payload["m"] = g.num_edges();
    rep.payload["output_digest"] = io::fnv1a64_hex(text);
    return rep;
}

// ---- separator ----

struct SeparatorArgs {
    std::string graph;
    int k{1}, r{1};
    std::string mu{"uniform"};
    std::string oracle{"exact"};
    bool bsn{false};
    std::string out;
};

Report run_separator(const SeparatorArgs& a) {
    Budgets budgets = Budgets::from_env();
    std::string gtext = io::read_file(a.graph);
    Graph g = io::load_graph(a.graph);

    Report rep;
    rep.payload["command"] = "separator";
    rep.payload["input_digest"] = io::fnv1a64_hex(gtext);
    rep.payload["n"] = g.num_vertices();
    rep.payload["k"] = a.k;
    rep.payload["r"] = a.r;
    rep.payload["oracle"] = a.oracle;

    if (a.bsn) {
        auto b = bsn_over_indicators(g, a.r, a.k, budgets);
        rep.payload["bsn"] = b ? ordered_json(*b) : ordered_json(nullptr);
        return rep;
    }

    WeightFn mu = io::parse_mu_spec(a.mu, g.num_vertices());
    rep.payload["mu"] = a.mu;
    auto witness = find_separator(g, mu, a.k, a.r, search_mode_from_name(a.oracle), budgets);
    rep.payload["found"] = static_cast<bool>(witness);
    if (witness) {
        rep.payload["balls"] = balls_json(witness->balls);
        rep.payload["union"] = witness->union_set;
        rep.payload["balanced"] = is_balanced_separator(g, mu, witness->union_set);
        if (!a.out.empty()) {
            ordered_json w;
            w["balls"] = balls_json(witness->balls);
            w["union"] = witness->union_set;
            std::string text = w.dump();
            io::write_file(a.out, text);
            rep.payload["output_digest"] = io::fnv1a64_hex(text);
        }
    }
    return rep;
}

// ---- decompose ----

struct DecomposeArgs {
    std::string graph;
    std::string algo{"simple"};
    int k{1}, r{1};
    long long gamma_cap{-1};
    std::string oracle{"exact"};
    std::string out, dot, stats_out;
};

Report run_decompose(const DecomposeArgs& a) {
    std::string gtext = io::read_file(a.graph);
    Graph g = io::load_graph(a.graph);
    BuilderParams params = make_builder_params(a.k, a.r, search_mode_from_name(a.oracle));
    params.budgets = Budgets::from_env();
    if (a.gamma_cap >= 0) params.gamma_cap = a.gamma_cap;

    TreeDecomposition td =
        a.algo == "round" ? decompose_round(g, params) : decompose_simple(g, params);
    auto violations = validate_tree_decomposition(g, td);
    CoverStats stats = coverability_stats(g, td, a.r, a.k, params.oracle_mode, params.budgets);
    bool ok = violations.empty();
    ordered_json bounds = bound_table(a.algo, g, stats, a.k, a.r, params.gamma_cap, ok);

    Report rep;
    rep.payload["command"] = "decompose";
    rep.payload["algo"] = a.algo;
    rep.payload["input_digest"] = io::fnv1a64_hex(gtext);
    rep.payload["k"] = a.k;
    rep.payload["r"] = a.r;
    rep.payload["oracle"] = a.oracle;
    if (a.algo == "round") rep.payload["gamma_cap"] = params.gamma_cap;
    rep.payload["nodes"] = static_cast<int>(td.nodes.size());
    rep.payload["width"] = td.width();
    rep.payload["violations"] = violations_json(violations);
    rep.payload["stats"] = cover_stats_json(stats);
    rep.payload["bounds"] = bounds;
    rep.payload["ok"] = ok;
    rep.exit_code = ok ? 0 : 1;

    if (!a.out.empty()) {
        std::string text = io::tree_decomposition_to_json(td);
        io::write_file(a.out, text);
        rep.payload["output_digest"] = io::fnv1a64_hex(text);
    }
    if (!a.dot.empty()) io::write_file(a.dot, io::tree_decomposition_to_dot(td));
    if (!a.stats_out.empty()) {
        ordered_json side;
        side["stats"] = rep.payload["stats"];
        side["bounds"] = rep.payload["bounds"];
        io::write_file(a.stats_out, side.dump(2));
    }
    return rep;
}

// ---- distgraph ----

struct DistGraphArgs {
    std::string graph;
    int r{1};
    int sigma{0}; // 0: default for the variant
    bool unweighted{false};
    std::string out;
};

ordered_json degree_report_json(const DegreeBoundReport& dr) {
    ordered_json j;
    j["delta_h"] = dr.delta_h;
    j["rho"] = dr.rho;
    j["m_estimate"] = dr.m_estimate;
    if (dr.bound_overflow)
        j["bound"] = "overflow";
    else
        j["bound"] = dr.bound;
    j["pass"] = dr.pass;
    return j;
}

ordered_json qi_cert_json(const QuasiIsometryCert& cert) {
    ordered_json j;
    j["alpha"] = rat_json(cert.alpha);
    j["beta"] = rat_json(cert.beta);
    j["pairs_checked"] = cert.pairs_checked;
    j["worst_lower"] = pair_witness_json(cert.worst_lower);
    j["worst_upper"] = pair_witness_json(cert.worst_upper);
    j["density"] = rat_json(cert.density);
    return j;
}

Report run_distgraph(const DistGraphArgs& a) {
    std::string gtext = io::read_file(a.graph);
    Graph g = io::load_graph(a.graph);
    bool weighted = !a.unweighted;
    int sigma = a.sigma > 0 ? a.sigma : (weighted ? 3 : 4);
    auto [dg, phi] = build_distance_graph(g, a.r, sigma, weighted);
    QuasiIsometryCert cert = check_quasi_isometry(g, dg, phi);
    int m_hat = estimate_doubling_dimension(g, std::max(1, sigma * a.r));
    DegreeBoundReport dr = check_degree_bound(dg, m_hat);

    Report rep;
    rep.payload["command"] = "distgraph";
    rep.payload["input_digest"] = io::fnv1a64_hex(gtext);
    rep.payload["r"] = a.r;
    rep.payload["sigma"] = sigma;
    rep.payload["weighted"] = weighted;
    rep.payload["members"] = static_cast<int>(dg.members.size());
    rep.payload["h_edges"] = dg.h.num_edges();
    rep.payload["quasi_isometry"] = qi_cert_json(cert);
    rep.payload["degree_bound"] = degree_report_json(dr);
    rep.payload["ok"] = dr.pass;
    rep.exit_code = dr.pass ? 0 : 1;

    if (!a.out.empty()) {
        std::string text = io::distance_graph_to_json(dg, phi);
        io::write_file(a.out, text);
        rep.payload["output_digest"] = io::fnv1a64_hex(text);
    }
    return rep;
}

// ---- transfer ----

struct TransferArgs {
    std::string variant{"weighted"};
    std::string graph, dg_path, mu{"uniform"};
    int k{1};
    std::string oracle{"exact"};
    std::string out;
};

Report run_transfer(const TransferArgs& a) {
    Budgets budgets = Budgets::from_env();
    std::string gtext = io::read_file(a.graph);
    Graph g = io::load_graph(a.graph);
    std::string dgtext = io::read_file(a.dg_path);
    auto [dg, phi] = io::distance_graph_from_json(dgtext);
    WeightFn mu_h = io::parse_mu_spec(a.mu, dg.h.num_vertices());
    SearchMode mode = search_mode_from_name(a.oracle);

    Report rep;
    rep.payload["command"] = "transfer";
    rep.payload["variant"] = a.variant;
    rep.payload["input_digest"] = io::fnv1a64_hex(gtext);
    rep.payload["dg_digest"] = io::fnv1a64_hex(dgtext);
    rep.payload["k"] = a.k;
    rep.payload["mu"] = a.mu;

    ordered_json result;
    if (a.variant == "weighted") {
        int m_hat = estimate_doubling_dimension(g, std::max(1, dg.sigma * dg.r));
        WeightedTransfer t = separator_transfer_weighted(g, dg, mu_h, a.k, m_hat, mode, budgets);
        result["x_h"] = t.x_h;
        ordered_json members = ordered_json::array();
        for (int i : t.x_h) members.push_back(dg.member_at(i));
        result["x_h_members"] = std::move(members);
        result["reps"] = t.reps;
        result["source_balls"] = balls_json(t.source_balls);
        result["m_hat"] = t.m_hat;
        if (t.bound_overflow)
            result["size_bound"] = "overflow";
        else
            result["size_bound"] = t.size_bound;
        result["size"] = static_cast<int>(t.x_h.size());
        result["balanced"] = true; // asserted inside the transfer
    } else if (a.variant == "unweighted") {
        UnweightedTransfer t =
            separator_transfer_unweighted(g, dg, phi, mu_h, a.k, mode, budgets);
        result["y"] = t.y;
        result["balls"] = balls_json(t.witness_h.balls);
        result["union"] = t.witness_h.union_set;
        result["source_balls"] = balls_json(t.source_balls);
        result["balanced"] = true; // asserted inside the transfer
    } else {
        throw InputError("variant must be weighted or unweighted");
    }
    rep.payload["result"] = result;
    if (!a.out.empty()) {
        std::string text = result.dump();
        io::write_file(a.out, text);
        rep.payload["output_digest"] = io::fnv1a64_hex(text);
    }
    return rep;
}

// ---- coarsen ----

struct CoarsenArgs {
    std::string graph, host, phi_path, tp_path;
    std::string alpha{"3"}, beta{"3"}, gamma{"3"};
    int r{1};
    std::string out, dot;
};

Report run_coarsen(const CoarsenArgs& a) {
    std::string gtext = io::read_file(a.graph);
    Graph g = io::load_graph(a.graph);
    std::string htext = io::read_file(a.host);
    WeightedGraph h = io::load_weighted_graph(a.host);
    std::string phitext = io::read_file(a.phi_path);
    ordered_json jphi = ordered_json::parse(phitext, nullptr, false);
    if (jphi.is_discarded() || !jphi.contains("phi"))
        throw InputError("phi file must be {\"phi\": [...]} JSON");
    std::vector<int> phi = jphi["phi"].get<std::vector<int>>();
    std::string tptext = io::read_file(a.tp_path);
    TreePartition tp_h = io::tree_partition_from_json(tptext);

    CoarseningParams params;
    params.alpha = Rat::parse(a.alpha);
    params.beta = Rat::parse(a.beta);
    params.gamma = Rat::parse(a.gamma);
    params.r = a.r;

    CoarsenResult res = coarsen_tree_partition(g, h, phi, tp_h, params);

    Report rep;
    rep.payload["command"] = "coarsen";
    rep.payload["input_digest"] = io::fnv1a64_hex(gtext);
    rep.payload["host_digest"] = io::fnv1a64_hex(htext);
    rep.payload["tp_digest"] = io::fnv1a64_hex(tptext);
    rep.payload["alpha"] = a.alpha;
    rep.payload["beta"] = a.beta;
    rep.payload["gamma"] = a.gamma;
    rep.payload["r"] = a.r;
    ordered_json jr;
    jr["p"] = res.report.p;
    jr["delta_h"] = res.report.delta_h;
    jr["width_h"] = res.report.width_h;
    jr["branch_bound"] = res.report.branch_bound;
    jr["bounds_apply"] = res.report.bounds_apply;
    jr["cluster_bound"] = res.report.cluster_bound;
    jr["degree_bound"] = res.report.degree_bound;
    jr["max_cluster"] = res.report.max_cluster;
    jr["coarse_max_degree"] = res.report.coarse_max_degree;
    rep.payload["report"] = std::move(jr);
    rep.payload["nodes"] = static_cast<int>(res.tp.nodes.size());
    rep.payload["width"] = res.tp.width();
    rep.payload["spread"] = res.tp.spread;

    if (!a.out.empty()) {
        std::string text = io::tree_partition_to_json(res.tp);
        io::write_file(a.out, text);
        rep.payload["output_digest"] = io::fnv1a64_hex(text);
    }
    if (!a.dot.empty()) io::write_file(a.dot, io::tree_partition_to_dot(res.tp));
    return rep;
}

// ---- lift ----

struct LiftArgs {
    std::string graph, dg_path, td_path, out;
};

Report run_lift(const LiftArgs& a) {
    std::string gtext = io::read_file(a.graph);
    Graph g = io::load_graph(a.graph);
    std::string dgtext = io::read_file(a.dg_path);
    auto [dg, phi] = io::distance_graph_from_json(dgtext);
    std::string tdtext = io::read_file(a.td_path);
    TreeDecomposition td_h = io::tree_decomposition_from_json(tdtext);

    TreeDecomposition td = lift_decomposition(g, dg, phi, td_h);

    Rat s(0);
    for (const TreeNode& node : td_h.nodes)
        if (node.cover)
            for (const Ball& b : *node.cover)
                if (b.radius > s) s = b.radius;

    Report rep;
    rep.payload["command"] = "lift";
    rep.payload["input_digest"] = io::fnv1a64_hex(gtext);
    rep.payload["dg_digest"] = io::fnv1a64_hex(dgtext);
    rep.payload["td_digest"] = io::fnv1a64_hex(tdtext);
    rep.payload["s"] = rat_json(s);
    rep.payload["lifted_radius"] = rat_json((Rat(4) * s + Rat(1)) * Rat(dg.r));
    rep.payload["nodes"] = static_cast<int>(td.nodes.size());
    rep.payload["width"] = td.width();
    rep.payload["ok"] = true; // lift validates its output

    if (!a.out.empty()) {
        std::string text = io::tree_decomposition_to_json(td);
        io::write_file(a.out, text);
        rep.payload["output_digest"] = io::fnv1a64_hex(text);
    }
    return rep;
}

// ---- check ----

struct CheckArgs {
    std::string graph, td_path, tp_path;
    std::string bound; // "", simple, round
    int k{1}, r{1};
    long long gamma_cap{-1};
    std::string oracle{"exact"};
};

Report run_check(const CheckArgs& a) {
    Budgets budgets = Budgets::from_env();
    std::string gtext = io::read_file(a.graph);
    Graph g = io::load_graph(a.graph);
    if (a.td_path.empty() == a.tp_path.empty())
        throw InputError("exactly one of --td and --tp is required");

    Report rep;
    rep.payload["command"] = "check";
    rep.payload["graph_digest"] = io::fnv1a64_hex(gtext);

    if (!a.tp_path.empty()) {
        std::string text = io::read_file(a.tp_path);
        TreePartition tp = io::tree_partition_from_json(text);
        auto violations = validate_tree_partition(g, tp);
        rep.payload["target"] = "tree_partition";
        rep.payload["input_digest"] = io::fnv1a64_hex(text);
        rep.payload["spread"] = tp.spread;
        rep.payload["width"] = tp.width();
        rep.payload["violations"] = violations_json(violations);
        rep.payload["ok"] = violations.empty();
        rep.exit_code = violations.empty() ? 0 : 1;
        return rep;
    }

    std::string text = io::read_file(a.td_path);
    TreeDecomposition td = io::tree_decomposition_from_json(text);
    auto violations = validate_tree_decomposition(g, td);
    bool ok = violations.empty();
    rep.payload["target"] = "tree_decomposition";
    rep.payload["input_digest"] = io::fnv1a64_hex(text);
    rep.payload["width"] = td.width();
    rep.payload["violations"] = violations_json(violations);
    if (!a.bound.empty()) {
        CoverStats stats =
            coverability_stats(g, td, a.r, a.k, search_mode_from_name(a.oracle), budgets);
        long long gamma = a.gamma_cap >= 0 ? a.gamma_cap : default_gamma_cap(a.k);
        rep.payload["stats"] = cover_stats_json(stats);
        rep.payload["bounds"] = bound_table(a.bound, g, stats, a.k, a.r, gamma, ok);
    }
    rep.payload["ok"] = ok;
    rep.exit_code = ok ? 0 : 1;
    return rep;
}

// ---- pipeline ----

struct PipelineArgs {
    std::string kind{"distround"};
    std::string family{"path"};
    int n{0}, rows{0}, cols{0}, side{0}, threshold{0};
    std::uint64_t seed{0};
    std::string prob{"1/2"};
    int k{2}, r{1};
    std::string mu{"uniform"};
    std::string oracle{"exact"};
};

Report run_pipeline(const PipelineArgs& a) {
    Budgets budgets = Budgets::from_env();
    FamilySpec spec;
    spec.family = a.family;
    spec.n = a.n;
    spec.rows = a.rows;
    spec.cols = a.cols;
    spec.side = a.side;
    spec.threshold = a.threshold;
    spec.seed = a.seed;
    spec.prob = Rat::parse(a.prob);
    Graph g = generate(spec);

    Report rep;
    rep.payload["command"] = "pipeline";
    rep.payload["kind"] = a.kind;
    rep.payload["family"] = a.family;
    rep.payload["graph_digest"] = io::fnv1a64_hex(io::graph_to_json(g));
    rep.payload["n"] = g.num_vertices();
    rep.payload["k"] = a.k;
    rep.payload["r"] = a.r;

    if (a.kind == "sinkcheck") {
        BuilderParams params = make_builder_params(a.k, a.r, search_mode_from_name(a.oracle));
        params.budgets = budgets;
        TreeDecomposition td = decompose_simple(g, params);
        WeightFn mu = io::parse_mu_spec(a.mu, g.num_vertices());
        int sink = balanced_bag(g, td, mu); // asserts balance
        rep.payload["nodes"] = static_cast<int>(td.nodes.size());
        rep.payload["sink"] = sink;
        rep.payload["sink_bag"] = td.nodes[static_cast<size_t>(sink)].bag;
        rep.payload["balanced"] = true;
        return rep;
    }
    if (a.kind != "distround") throw InputError("kind must be distround or sinkcheck");

    // Certify both distance-graph variants, then round-decompose the host.
    auto [dgw, phiw] = build_distance_graph(g, a.r, 3, true);
    QuasiIsometryCert certw = check_quasi_isometry(g, dgw, phiw);
    auto [dgu, phiu] = build_distance_graph(g, a.r, 4, false);
    QuasiIsometryCert certu = check_quasi_isometry(g, dgu, phiu);
    rep.payload["weighted_qi"] = qi_cert_json(certw);
    rep.payload["unweighted_qi"] = qi_cert_json(certu);

    BuilderParams params = make_builder_params(a.k, a.r, search_mode_from_name(a.oracle));
    params.budgets = budgets;
    TreeDecomposition td = decompose_round(g, params);
    auto violations = validate_tree_decomposition(g, td);
    CoverStats stats = coverability_stats(g, td, a.r, a.k, params.oracle_mode, budgets);
    bool ok = violations.empty();
    rep.payload["nodes"] = static_cast<int>(td.nodes.size());
    rep.payload["width"] = td.width();
    rep.payload["violations"] = violations_json(violations);
    rep.payload["stats"] = cover_stats_json(stats);
    rep.payload["bounds"] = bound_table("round", g, stats, a.k, a.r, params.gamma_cap, ok);
    rep.payload["ok"] = ok;
    rep.exit_code = ok ? 0 : 1;
    return rep;
}

int emit(Report rep, std::chrono::steady_clock::time_point start) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    ordered_json env;
    env["payload"] = std::move(rep.payload);
    env["wall_time_ms"] = ms;
    std::cout << env.dump(2) << "\n";
    return rep.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    auto start = std::chrono::steady_clock::now();
    CLI::App app{"coarse tree decompositions, distance graphs and transfers"};
    app.require_subcommand(1);

    GenArgs gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a graph family");
    gen_cmd->add_option("--family", gen.family, "family name")->required();
    gen_cmd->add_option("--n", gen.n, "vertex count");
    gen_cmd->add_option("--rows", gen.rows, "grid rows");
    gen_cmd->add_option("--cols", gen.cols, "grid columns");
    gen_cmd->add_option("--side", gen.side, "geometric grid side");
    gen_cmd->add_option("--threshold", gen.threshold, "geometric L1 threshold");
    gen_cmd->add_option("--seed", gen.seed, "random seed");
    gen_cmd->add_option("--prob", gen.prob, "gnp edge probability (num/den)");
    gen_cmd->add_option("-o,--out", gen.out, "output path")->required();
    gen_cmd->add_option("--format", gen.format, "output encoding")
        ->check(CLI::IsMember({"json", "text"}));

    SeparatorArgs sep;
    CLI::App* sep_cmd = app.add_subcommand("separator", "search for a ball separator");
    sep_cmd->add_option("graph", sep.graph, "graph file")->required();
    sep_cmd->add_option("-k", sep.k, "ball budget")->required();
    sep_cmd->add_option("-r", sep.r, "ball radius")->required();
    sep_cmd->add_option("--mu", sep.mu, "weights: uniform | indicator:<list> | file:<path>");
    sep_cmd->add_option("--oracle", sep.oracle, "search mode")
        ->check(CLI::IsMember({"exact", "greedy"}));
    sep_cmd->add_flag("--bsn", sep.bsn, "sweep all indicator weights, -k is the cap");
    sep_cmd->add_option("-o,--out", sep.out, "witness output path");

    DecomposeArgs dec;
    CLI::App* dec_cmd = app.add_subcommand("decompose", "build a tree decomposition");
    dec_cmd->add_option("graph", dec.graph, "graph file")->required();
    dec_cmd->add_option("--algo", dec.algo, "builder")
        ->check(CLI::IsMember({"simple", "round"}));
    dec_cmd->add_option("-k", dec.k, "separator ball budget")->required();
    dec_cmd->add_option("-r", dec.r, "base radius")->required();
    dec_cmd->add_option("--gamma-cap", dec.gamma_cap, "working cover cap override");
    dec_cmd->add_option("--oracle", dec.oracle, "search mode")
        ->check(CLI::IsMember({"exact", "greedy"}));
    dec_cmd->add_option("-o,--out", dec.out, "decomposition output path");
    dec_cmd->add_option("--dot", dec.dot, "DOT output path");
    dec_cmd->add_option("--stats", dec.stats_out, "stats sidecar path");

    DistGraphArgs dgargs;
    CLI::App* dg_cmd = app.add_subcommand("distgraph", "build and certify a distance graph");
    dg_cmd->add_option("graph", dgargs.graph, "graph file")->required();
    dg_cmd->add_option("-r", dgargs.r, "independence radius")->required();
    dg_cmd->add_option("--sigma", dgargs.sigma, "adjacency scale (default 3/4)");
    dg_cmd->add_flag("--unweighted", dgargs.unweighted, "unweighted variant");
    dg_cmd->add_option("-o,--out", dgargs.out, "distance graph output path");

    TransferArgs tr;
    CLI::App* tr_cmd = app.add_subcommand("transfer", "push a separator into H");
    tr_cmd->add_option("graph", tr.graph, "graph file")->required();
    tr_cmd->add_option("--variant", tr.variant, "weighted | unweighted")
        ->check(CLI::IsMember({"weighted", "unweighted"}));
    tr_cmd->add_option("--dg", tr.dg_path, "distance graph file")->required();
    tr_cmd->add_option("--mu", tr.mu, "weights on H");
    tr_cmd->add_option("-k", tr.k, "ball budget (d for unweighted)")->required();
    tr_cmd->add_option("--oracle", tr.oracle, "search mode")
        ->check(CLI::IsMember({"exact", "greedy"}));
    tr_cmd->add_option("-o,--out", tr.out, "result output path");

    CoarsenArgs co;
    CLI::App* co_cmd = app.add_subcommand("coarsen", "pull a tree partition back through phi");
    co_cmd->add_option("graph", co.graph, "graph file")->required();
    co_cmd->add_option("--host", co.host, "weighted host graph file")->required();
    co_cmd->add_option("--phi", co.phi_path, "phi JSON file")->required();
    co_cmd->add_option("--tp", co.tp_path, "host tree partition file")->required();
    co_cmd->add_option("--alpha", co.alpha, "multiplicative distortion");
    co_cmd->add_option("--beta", co.beta, "additive distortion factor");
    co_cmd->add_option("--gamma", co.gamma, "edge weight factor");
    co_cmd->add_option("-r", co.r, "spread radius")->required();
    co_cmd->add_option("-o,--out", co.out, "partition output path");
    co_cmd->add_option("--dot", co.dot, "DOT output path");

    LiftArgs li;
    CLI::App* li_cmd = app.add_subcommand("lift", "pull a decomposition of H back to G");
    li_cmd->add_option("graph", li.graph, "graph file")->required();
    li_cmd->add_option("--dg", li.dg_path, "distance graph file")->required();
    li_cmd->add_option("--td", li.td_path, "decomposition of H (with covers)")->required();
    li_cmd->add_option("-o,--out", li.out, "decomposition output path");

    CheckArgs ch;
    CLI::App* ch_cmd = app.add_subcommand("check", "validate a decomposition or partition");
    ch_cmd->add_option("--graph", ch.graph, "graph file")->required();
    ch_cmd->add_option("--td", ch.td_path, "tree decomposition file");
    ch_cmd->add_option("--tp", ch.tp_path, "tree partition file");
    ch_cmd->add_option("--bound", ch.bound, "bound table: simple | round")
        ->check(CLI::IsMember({"simple", "round"}));
    ch_cmd->add_option("-k", ch.k, "ball budget for bounds");
    ch_cmd->add_option("-r", ch.r, "base radius for bounds");
    ch_cmd->add_option("--gamma-cap", ch.gamma_cap, "round size cap override");
    ch_cmd->add_option("--oracle", ch.oracle, "search mode")
        ->check(CLI::IsMember({"exact", "greedy"}));

    PipelineArgs pi;
    CLI::App* pi_cmd = app.add_subcommand("pipeline", "chained end-to-end runs");
    pi_cmd->add_option("--kind", pi.kind, "distround | sinkcheck")
        ->check(CLI::IsMember({"distround", "sinkcheck"}));
    pi_cmd->add_option("--family", pi.family, "graph family")->required();
    pi_cmd->add_option("--n", pi.n, "vertex count");
    pi_cmd->add_option("--rows", pi.rows, "grid rows");
    pi_cmd->add_option("--cols", pi.cols, "grid columns");
    pi_cmd->add_option("--side", pi.side, "geometric grid side");
    pi_cmd->add_option("--threshold", pi.threshold, "geometric L1 threshold");
    pi_cmd->add_option("--seed", pi.seed, "random seed");
    pi_cmd->add_option("--prob", pi.prob, "gnp edge probability");
    pi_cmd->add_option("-k", pi.k, "separator ball budget");
    pi_cmd->add_option("-r", pi.r, "base radius");
    pi_cmd->add_option("--mu", pi.mu, "weights for sinkcheck");
    pi_cmd->add_option("--oracle", pi.oracle, "search mode")
        ->check(CLI::IsMember({"exact", "greedy"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Report rep;
        if (app.got_subcommand(gen_cmd)) rep = run_gen(gen);
        else if (app.got_subcommand(sep_cmd)) rep = run_separator(sep);
        else if (app.got_subcommand(dec_cmd)) rep = run_decompose(dec);
        else if (app.got_subcommand(dg_cmd)) rep = run_distgraph(dgargs);
        else if (app.got_subcommand(tr_cmd)) rep = run_transfer(tr);
        else if (app.got_subcommand(co_cmd)) rep = run_coarsen(co);
        else if (app.got_subcommand(li_cmd)) rep = run_lift(li);
        else if (app.got_subcommand(ch_cmd)) rep = run_check(ch);
        else if (app.got_subcommand(pi_cmd)) rep = run_pipeline(pi);
        return emit(std::move(rep), start);
    } catch (const InputError& e) {
        Report rep;
        rep.payload["error"] = "input";
        rep.payload["message"] = e.what();
        rep.exit_code = 2;
        return emit(std::move(rep), start);
    } catch (const BudgetError& e) {
        Report rep;
        rep.payload["error"] = "budget";
        rep.payload["message"] = e.what();
        rep.exit_code = 2;
        return emit(std::move(rep), start);
    } catch (const Error& e) {
        Report rep;
        rep.payload["error"] = "invariant";
        rep.payload["message"] = e.what();
        rep.exit_code = 1;
        return emit(std::move(rep), start);
    } catch (const std::exception& e) {
        Report rep;
        rep.payload["error"] = "internal";
        rep.payload["message"] = e.what();
        rep.exit_code = 1;
        return emit(std::move(rep), start);
    }
}
