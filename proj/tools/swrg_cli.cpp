// swrg: command-line driver. Every subcommand prints one JSON report (or CSV rows with --csv).
// Exit codes: 0 verified/realized, 1 usage error, 2 refuted/empty, 3 undecided.

#include "swrg/classify/search.hpp"
#include "swrg/classify/tables.hpp"
#include "swrg/code/gray.hpp"
#include "swrg/code/linear_code.hpp"
#include "swrg/code/matrix_io.hpp"
#include "swrg/families/kerdock.hpp"
#include "swrg/families/teichmuller.hpp"
#include "swrg/families/trace_code.hpp"
#include "swrg/graph/cayley.hpp"
#include "swrg/graph/ssum.hpp"
#include "swrg/graph/walks.hpp"
#include "swrg/kernels/kernels.hpp"
#include "swrg/spectral/conditions.hpp"
#include "swrg/spectral/macwilliams.hpp"
#include "swrg/spectral/three_weight.hpp"
#include "swrg/spectral/weight_distribution.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace swrg;
using nlohmann::json;

namespace {

constexpr const char* kToolVersion = "0.1.0";
constexpr const char* kSchema = "swrg-report/1";

enum Exit : int { kOk = 0, kUsage = 1, kRefuted = 2, kUndecided = 3 };

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// Shared option storage; each subcommand binds the subset it uses.
struct Options {
    std::string ring = "z4";
    std::string matrix;
    std::uint64_t b = 0;
    unsigned s = 3;
    unsigned threads = 0;
    std::uint64_t budget_nodes = std::uint64_t{1} << 32;
    std::string out;
    bool csv = false;
    bool ambient = false;
    bool include_zero = false;
    bool emit_matrix = false;
    // feasible / scans
    std::uint64_t n = 0;
    std::uint64_t sum_exactly = 0;
    bool sum_at_least = false;
    int cls_min = 1, cls_max = 0;
    bool parity_lemmas = false;
    std::uint64_t n_max = 50;
    // families
    int kerdock_s = 3;
    int p = 3, m = 2;
    std::uint64_t q = 2;
    unsigned k = 3;
    int teich_s = -1;
    // classify
    std::string shape = "2,1";
    std::string weights;
    std::string mode = "decide";
    bool no_prune = false;
    std::string table = "T2";
    std::size_t table_n_max = 8;
};

struct Report {
    std::string command;
    json inputs = json::object();
    std::string verdict = "computed";
    json result = json::object();
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    double elapsed_ms = 0;
    int exit_code = kOk;
};

std::string dist_key(const WeightDistribution& wd) { return wd.to_string(); }

json wd_json(const WeightDistribution& wd) {
    json j = json::object();
    for (const auto& [w, a] : wd.entries) j[std::to_string(w)] = a;
    return j;
}

void wd_csv(Report& r, const WeightDistribution& wd) {
    r.csv_header = {"weight", "frequency"};
    for (const auto& [w, a] : wd.entries) r.csv_rows.push_back({std::to_string(w), std::to_string(a)});
}

std::string read_matrix_text(const std::string& arg) {
    if (arg.empty()) throw CLI::ValidationError("--matrix", "a matrix file or inline ';'-separated rows is required");
    if (arg.find(';') == std::string::npos && std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    if (arg.find(';') == std::string::npos && arg.find(' ') == std::string::npos)
        throw InvalidArgument("matrix file " + arg + " does not exist");
    return arg;
}

struct Loaded {
    Ring R;
    Matrix M;
    std::string text;
};

Loaded load(const Options& o, Report& r) {
    Loaded l{Ring::parse_name(o.ring), {}, read_matrix_text(o.matrix)};
    l.M = parse_matrix(l.R, l.text);
    r.inputs["ring"] = l.R.name();
    r.inputs["matrix"] = format_matrix(l.R, l.M);
    return l;
}

std::array<std::uint64_t, 3> parse_triple(const std::string& s) {
    std::array<std::uint64_t, 3> w{};
    std::stringstream ss(s);
    std::string tok;
    std::size_t i = 0;
    while (std::getline(ss, tok, ',')) {
        if (i == 3) throw InvalidArgument("expected three comma-separated weights, got " + s);
        w[i++] = std::stoull(tok);
    }
    if (i != 3) throw InvalidArgument("expected three comma-separated weights, got " + s);
    return w;
}

std::pair<int, int> parse_shape(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw InvalidArgument("shape must be k1,k2, got " + s);
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
}

json spectrum_json(const std::vector<std::pair<BigInt, std::uint64_t>>& sp) {
    json j = json::array();
    for (const auto& [theta, mult] : sp) j.push_back({{"eigenvalue", theta.str()}, {"multiplicity", mult}});
    return j;
}

json triple_json(const std::uint64_t* w) { return json::array({w[0], w[1], w[2]}); }

// ---- subcommands -------------------------------------------------------------------------

void cmd_weights(const Options& o, Report& r) {
    const auto l = load(o, r);
    const auto C = LinearCode::from_rows(l.R, l.M);
    const auto wd = weight_distribution(C);
    const auto [k1, k2] = l.R.depth() == 2 ? C.shape2() : std::make_pair(-1, -1);
    r.result = {{"n", C.length()}, {"size", C.size().str()}, {"distribution", wd_json(wd)}, {"display", dist_key(wd)},
                {"nonzero_weights", wd.nonzero_weights()}, {"three_weight", wd.three_weight()},
                {"regular", is_regular(C)}, {"projective", is_projective(C)}};
    if (k1 >= 0) r.result["shape"] = {k1, k2};
    wd_csv(r, wd);
}

void cmd_dual(const Options& o, Report& r) {
    const auto l = load(o, r);
    const auto C = LinearCode::from_rows(l.R, l.M);
    const auto D = dual_code(C);
    const auto wd = weight_distribution(D);
    r.result = {{"n", D.length()}, {"size", D.size().str()}, {"generator", format_matrix(l.R, D.rows())},
                {"distribution", wd_json(wd)}, {"display", dist_key(wd)}, {"minimum_weight", dual_minimum_weight(C)}};
    if (!o.out.empty()) write_matrix_file(l.R, D.rows(), o.out);
    wd_csv(r, wd);
}

void cmd_macwilliams(const Options& o, Report& r) {
    const auto l = load(o, r);
    const auto C = LinearCode::from_rows(l.R, l.M);
    const auto wd = weight_distribution(C);
    const auto transform = macwilliams_hom(wd);
    const auto direct = weight_distribution(dual_code(C));
    const bool agree = transform == direct;
    r.result = {{"distribution", wd_json(wd)}, {"transform", wd_json(transform)}, {"enumerated_dual", wd_json(direct)},
                {"agree", agree}};
    if (l.R.depth() == 2) {
        const auto [k1, k2] = C.shape2();
        const auto pm = power_moments(wd, k1, k2);
        r.result["power_moments"] = {{"B1", to_string(pm.B1)}, {"B2", to_string(pm.B2)}, {"B3", to_string(pm.B3)},
                                     {"consistent", pm.consistent}, {"note", pm.note}};
    }
    r.verdict = agree ? "verified" : "refuted";
    r.exit_code = agree ? kOk : kRefuted;
    wd_csv(r, transform);
}

void cmd_feasible(const Options& o, Report& r) {
    if (o.n == 0) throw CLI::ValidationError("--n", "must be positive");
    r.inputs = {{"n", o.n}, {"sum_exactly", o.sum_exactly}, {"sum_at_least_3n", o.sum_at_least},
                {"cls_min", o.cls_min}, {"cls_max", o.cls_max}, {"parity_lemmas", o.parity_lemmas}};
    FeasibilityOptions fo;
    fo.cls_min = o.cls_min;
    fo.cls_max = o.cls_max;
    fo.parity_lemmas = o.parity_lemmas;
    r.csv_header = {"w1", "w2", "w3", "classes"};
    json rows = json::array();
    if (o.sum_exactly) {
        // arithmetic candidates with the classes (if any) where the frequencies are integral
        fo.filter = SumFilter::Exactly;
        fo.sum = o.sum_exactly;
        const auto feasible = feasible_triples(o.n, fo);
        for (const auto& t : candidate_triples(o.n, o.sum_exactly)) {
            json cls = json::array();
            std::string cs;
            for (const auto& f : feasible)
                if (f.w[0] == t[0] && f.w[1] == t[1] && f.w[2] == t[2]) {
                    cls.push_back(f.cls);
                    cs += (cs.empty() ? "" : " ") + std::to_string(f.cls);
                }
            rows.push_back({{"w", t}, {"admissible_classes", cls}});
            r.csv_rows.push_back({std::to_string(t[0]), std::to_string(t[1]), std::to_string(t[2]), cs});
        }
    } else {
        if (o.sum_at_least) fo.filter = SumFilter::AtLeast3nMod3;
        for (const auto& t : feasible_triples(o.n, fo)) {
            json row = {{"w", triple_json(t.w)}, {"class", t.cls}, {"S", t.S},
                        {"A", {to_string(t.prediction.A[0]), to_string(t.prediction.A[1]), to_string(t.prediction.A[2])}},
                        {"B3", to_string(t.prediction.B3)}};
            if (t.b) row["b"] = t.b->str();
            rows.push_back(row);
            r.csv_rows.push_back({std::to_string(t.w[0]), std::to_string(t.w[1]), std::to_string(t.w[2]), std::to_string(t.cls)});
        }
    }
    r.result = {{"triples", rows}, {"count", rows.size()}};
    r.exit_code = rows.empty() ? kRefuted : kOk;
    r.verdict = rows.empty() ? "empty" : "computed";
}

void cmd_scan_exceptional(const Options& o, Report& r) {
    r.inputs = {{"n_max", o.n_max}};
    json rows = json::array();
    r.csv_header = {"n", "w1", "w2", "w3", "printed_y", "A1", "A2", "A3", "B3", "class", "macwilliams_nonnegative"};
    for (const auto& e : exceptional_scan(o.n_max)) {
        rows.push_back({{"n", e.n}, {"w", triple_json(e.w)}, {"class", e.cls}, {"y", e.y.str()},
                        {"printed_y", e.printed_y.str()}, {"A", {e.A[0].str(), e.A[1].str(), e.A[2].str()}},
                        {"B3", e.B3.str()}, {"macwilliams_nonnegative", e.macwilliams_nonnegative}});
        r.csv_rows.push_back({std::to_string(e.n), std::to_string(e.w[0]), std::to_string(e.w[1]), std::to_string(e.w[2]),
                              e.printed_y.str(), e.A[0].str(), e.A[1].str(), e.A[2].str(), e.B3.str(),
                              std::to_string(e.cls), e.macwilliams_nonnegative ? "yes" : "no"});
    }
    r.result = {{"tuples", rows}};
}

CayleyGraph build_graph(const Options& o, Report& r, Loaded& l) {
    l = load(o, r);
    r.inputs["b"] = o.b;
    r.inputs["ambient"] = o.ambient;
    SyndromeGraphOptions go;
    go.b = o.b;
    go.ambient = o.ambient;
    return syndrome_graph(l.R, l.M, go);
}

json graph_json(const CayleyGraph& G) {
    return {{"vertices", G.vertex_count()}, {"degree", G.degree()}, {"loops", G.loops()}, {"dimension", G.dimension()},
            {"connected", G.connected()}, {"columns_regular", G.columns_regular()},
            {"columns_projective", G.columns_projective()}};
}

void cmd_graph(const Options& o, Report& r) {
    Loaded l{Ring::zpm(2, 2), {}, {}};
    const auto G = build_graph(o, r, l);
    r.result = graph_json(G);
    r.csv_header = {"vertices", "degree", "loops", "connected"};
    r.csv_rows.push_back({std::to_string(G.vertex_count()), std::to_string(G.degree()), std::to_string(G.loops()),
                          G.connected() ? "yes" : "no"});
}

void cmd_swrg(const Options& o, Report& r) {
    Loaded l{Ring::zpm(2, 2), {}, {}};
    const auto G = build_graph(o, r, l);
    r.inputs["s"] = o.s;
    const auto c = is_swrg(G, o.s);
    json cert = {{"s", c.s}, {"holds", c.holds}, {"lambda", c.lambda.str()}, {"nu", c.nu.str()}, {"connected", c.connected}};
    cert["mu"] = c.mu ? json(c.mu->str()) : json(nullptr);
    if (c.witness) cert["witness"] = {c.witness->first, c.witness->second};
    if (c.srg) cert["srg"] = {{"v", c.srg->v}, {"k", c.srg->k}, {"lambda", c.srg->lambda.str()}, {"mu", c.srg->mu.str()}};
    r.result = {{"graph", graph_json(G)}, {"certificate", cert}};
    r.verdict = c.holds ? "verified" : "refuted";
    r.exit_code = c.holds ? kOk : kRefuted;
    r.csv_header = {"s", "holds", "lambda", "mu", "nu"};
    r.csv_rows.push_back({std::to_string(c.s), c.holds ? "yes" : "no", c.lambda.str(), c.mu ? c.mu->str() : "", c.nu.str()});
}

void cmd_ssum(const Options& o, Report& r) {
    const auto l = load(o, r);
    r.inputs["s"] = o.s;
    r.inputs["b"] = o.b;
    r.inputs["include_zero"] = o.include_zero;
    const auto omega = omega_from_columns(l.R, l.M);
    const auto res = o.b ? ssum_set_check_loops(l.R, l.M.size(), omega, o.s, o.b)
                         : ssum_set_check(l.R, l.M.size(), omega, o.s, o.include_zero);
    r.result = {{"omega_size", omega.size()}, {"holds", res.holds}, {"loops", res.loops}};
    if (res.sigma0) r.result["sigma0"] = res.sigma0->str();
    if (res.sigma1) r.result["sigma1"] = res.sigma1->str();
    if (res.witness) r.result["witness"] = {format_matrix(l.R, {res.witness->first}), format_matrix(l.R, {res.witness->second})};
    r.verdict = res.holds ? "verified" : "refuted";
    r.exit_code = res.holds ? kOk : kRefuted;
    r.csv_header = {"s", "holds", "sigma0", "sigma1"};
    r.csv_rows.push_back({std::to_string(o.s), res.holds ? "yes" : "no", res.sigma0 ? res.sigma0->str() : "",
                          res.sigma1 ? res.sigma1->str() : ""});
}

void cmd_spectrum(const Options& o, Report& r) {
    Loaded l{Ring::zpm(2, 2), {}, {}};
    const auto G = build_graph(o, r, l);
    const auto C = LinearCode::from_rows(l.R, l.M);
    const WeightScale sc{l.R.q(), static_cast<unsigned>(l.R.depth())};
    const auto sp = predicted_spectrum(weight_distribution(C), sc, o.b);
    const auto cert = verify_spectrum(G, sp);
    json traces = json::array();
    for (const auto& t : cert.traces) traces.push_back(t.str());
    r.result = {{"predicted", spectrum_json(sp)}, {"annihilator_zero", cert.annihilator_zero},
                {"trace_moments", traces}, {"multiplicities_match", cert.multiplicities_match}};
    r.verdict = cert.verified() ? "verified" : "refuted";
    r.exit_code = cert.verified() ? kOk : kRefuted;
    r.csv_header = {"eigenvalue", "multiplicity"};
    for (const auto& [t, m] : sp) r.csv_rows.push_back({t.str(), std::to_string(m)});
}

void cmd_kerdock(const Options& o, Report& r) {
    r.inputs = {{"s", o.kerdock_s}, {"b", o.b}};
    const auto K = kerdock(o.kerdock_s);
    const Ring z4 = Ring::parse_name("z4");
    r.result = {{"length", K.k_minus.length()}, {"distribution", wd_json(K.wd_minus)},
                {"full_length", K.k_full.length()}, {"full_distribution", wd_json(K.wd_full)}};
    if (o.emit_matrix) r.result["matrix"] = format_matrix(z4, K.k_minus.rows());
    if (!o.out.empty()) write_matrix_file(z4, K.k_minus.rows(), o.out);
    if (o.b) {
        SyndromeGraphOptions go;
        go.b = o.b;
        const auto G = syndrome_graph(z4, K.k_minus.rows(), go);
        const auto c = is_swrg(G, o.s);
        r.result["graph"] = graph_json(G);
        r.result["swrg"] = {{"s", o.s}, {"holds", c.holds}};
        r.verdict = c.holds ? "verified" : "refuted";
        r.exit_code = c.holds ? kOk : kRefuted;
    }
    if (o.kerdock_s == 3) {
        const auto scan = is_binary_linear(gray_image(K.k_minus).images);
        r.result["gray"] = {{"linear", scan.linear}, {"pairs_checked", scan.pairs_checked}, {"failing_pairs", scan.failing_pairs}};
    }
    wd_csv(r, K.wd_minus);
}

void cmd_trace(const Options& o, Report& r) {
    r.inputs = {{"p", o.p}, {"m", o.m}};
    const auto t = trace_code(o.p, o.m);
    const Ring R = t.C.ring();
    json cf = json::array();
    for (const auto& w : t.closed_form_weights) cf.push_back(w.str());
    r.result = {{"length_C", t.C.length()}, {"length_P", t.replication.reduced.length()},
                {"replication_factor", t.replication.factor}, {"distribution_C", wd_json(t.wd_C)},
                {"distribution_P", wd_json(t.wd_P)}, {"closed_form_weights", cf},
                {"P_projective", t.P_projective}, {"P_three_weight", t.P_three_weight},
                {"sum_P", t.sum_P.str()}, {"sum_target", to_string(t.sum_target)}, {"sum_relation", t.sum_relation},
                {"tss", t.tss.holds}, {"implied_loops", to_string(t.implied_loops)}};
    if (t.tss_with_loops) r.result["tss_with_implied_loops"] = t.tss_with_loops->holds;
    if (o.emit_matrix) r.result["matrix"] = format_matrix(R, t.C.rows());
    if (!o.out.empty()) write_matrix_file(R, t.C.rows(), o.out);
    const bool ok = t.P_projective && t.P_three_weight && t.tss.holds && t.sum_relation;
    r.verdict = ok ? "verified" : "refuted";
    r.exit_code = ok ? kOk : kRefuted;
    wd_csv(r, t.wd_P);
}

void cmd_teichmuller(const Options& o, Report& r) {
    r.inputs = {{"q", o.q}, {"k", o.k}, {"s", o.teich_s}};
    std::vector<unsigned> ss;
    if (o.teich_s >= 0) ss.push_back(static_cast<unsigned>(o.teich_s));
    else ss = teichmuller_legal_s(o.q, o.k);
    json rows = json::array();
    bool all = true;
    r.csv_header = {"q", "k", "s", "n", "w1", "w2", "w3", "A1", "A2", "A3", "b", "identity"};
    for (unsigned s : ss) {
        const auto t = teichmuller_params(o.q, o.k, s);
        all = all && t.identity_holds;
        rows.push_back({{"s", s}, {"r", t.r}, {"n", t.n.str()}, {"w", {t.w[0].str(), t.w[1].str(), t.w[2].str()}},
                        {"weight_scale", to_string(t.weight_scale)}, {"A", {t.A[0].str(), t.A[1].str(), t.A[2].str()}},
                        {"b", t.b.str()}, {"S", to_string(t.S)}, {"S_identity", to_string(t.S_identity)},
                        {"identity_holds", t.identity_holds}, {"degenerate", t.degenerate}});
        r.csv_rows.push_back({std::to_string(o.q), std::to_string(o.k), std::to_string(s), t.n.str(), t.w[0].str(),
                              t.w[1].str(), t.w[2].str(), t.A[0].str(), t.A[1].str(), t.A[2].str(), t.b.str(),
                              t.identity_holds ? "yes" : "no"});
    }
    r.result = {{"instances", rows}};
    r.verdict = all ? "verified" : "refuted";
    r.exit_code = all ? kOk : kRefuted;
}

void cmd_classify(const Options& o, Report& r) {
    SearchSpec spec;
    spec.ring = Ring::parse_name(o.ring);
    spec.n = o.n;
    std::tie(spec.k1, spec.k2) = parse_shape(o.shape);
    spec.weights = parse_triple(o.weights);
    if (o.mode == "decide") spec.mode = SearchMode::Decide;
    else if (o.mode == "exhaust") spec.mode = SearchMode::Exhaust;
    else throw CLI::ValidationError("--mode", "expected decide or exhaust");
    spec.budget_nodes = o.budget_nodes;
    spec.threads = o.threads;
    spec.checkpoint = o.out;
    spec.prune = !o.no_prune;
    r.inputs = {{"ring", spec.ring.name()}, {"n", spec.n}, {"shape", {spec.k1, spec.k2}}, {"weights", spec.weights},
                {"mode", to_string(spec.mode)}, {"budget_nodes", spec.budget_nodes}, {"prune", spec.prune}};
    const auto rec = search(spec);
    json wit = json::array();
    for (const auto& W : rec.witnesses) wit.push_back(format_matrix(spec.ring, W));
    r.result = {{"status", to_string(rec.status)}, {"witnesses", wit}, {"solutions", rec.solutions},
                {"nodes", rec.nodes}, {"pruned", rec.pruned}, {"subtrees", rec.subtrees},
                {"subtrees_resumed", rec.subtrees_resumed}, {"points", rec.point_count}};
    r.verdict = to_string(rec.status);
    r.exit_code = rec.status == SearchStatus::Realized ? kOk : rec.status == SearchStatus::Empty ? kRefuted : kUndecided;
    r.csv_header = {"status", "witnesses", "nodes", "pruned"};
    r.csv_rows.push_back({to_string(rec.status), std::to_string(rec.witnesses.size()), std::to_string(rec.nodes),
                          std::to_string(rec.pruned)});
}

void cmd_reproduce_table(const Options& o, Report& r) {
    TableRunOptions opt;
    opt.n_max = o.table_n_max;
    opt.budget_nodes = o.budget_nodes;
    opt.threads = o.threads;
    const auto id = parse_table_id(o.table);
    r.inputs = {{"table", to_string(id)}, {"n_max", opt.n_max}, {"budget_nodes", opt.budget_nodes}};
    const auto rep = run_table(id, opt);
    json rows = json::array();
    r.csv_header = {"label", "n", "class", "w1", "w2", "w3", "k1", "k2", "expected", "got", "match", "nodes"};
    for (const auto& c : rep.checks) {
        rows.push_back({{"label", c.label}, {"n", c.n}, {"class", c.cls}, {"w", c.w}, {"shape", {c.shape.first, c.shape.second}},
                        {"expected", c.expected}, {"got", c.got}, {"match", c.match}, {"undecided", c.undecided},
                        {"nodes", c.nodes}, {"ms", c.ms}, {"detail", c.detail}});
        r.csv_rows.push_back({c.label, std::to_string(c.n), std::to_string(c.cls), std::to_string(c.w[0]),
                              std::to_string(c.w[1]), std::to_string(c.w[2]), std::to_string(c.shape.first),
                              std::to_string(c.shape.second), c.expected, c.got, c.match ? "yes" : "no",
                              std::to_string(c.nodes)});
    }
    r.result = {{"checks", rows}, {"mismatches", rep.mismatches()}, {"undecided", rep.undecided()}};
    if (rep.mismatches()) {
        r.verdict = "refuted";
        r.exit_code = kRefuted;
    } else if (rep.undecided()) {
        r.verdict = "undecided";
        r.exit_code = kUndecided;
    } else {
        r.verdict = "verified";
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

void emit(const Report& r, bool csv, const std::string& copy_to) {
    if (csv) {
        auto line = [](const std::vector<std::string>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + csv_field(v[i]);
            return s;
        };
        std::cout << line(r.csv_header) << '\n';
        for (const auto& row : r.csv_rows) std::cout << line(row) << '\n';
        return;
    }
    const json j = {{"schema", kSchema},
                    {"tool_version", kToolVersion},
                    {"command", r.command},
                    {"inputs", r.inputs},
                    {"input_hash", "fnv1a64:" + hex64(fnv1a(r.command + "\n" + r.inputs.dump()))},
                    {"kernels", kernels::active().name},
                    {"verdict", r.verdict},
                    {"result", r.result},
                    {"timings", {{"elapsed_ms", r.elapsed_ms}}}};
    std::cout << j.dump(2) << '\n';
    if (!copy_to.empty()) {
        std::ofstream out(copy_to);
        out << j.dump(2) << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Three-weight codes over chain rings and strongly walk-regular graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);
    Options o;

    auto common = [&](CLI::App* c) { c->add_flag("--csv", o.csv, "CSV rows instead of JSON"); };
    auto code_opts = [&](CLI::App* c) {
        common(c);
        c->add_option("--ring", o.ring, "z4, f2u, zpm:p,m, fqu:p[,f], gr4:r")->capture_default_str();
        c->add_option("--matrix", o.matrix, "matrix file, or inline rows separated by ';'")->required();
    };
    auto graph_opts = [&](CLI::App* c) {
        code_opts(c);
        c->add_option("--b", o.b, "loops per vertex")->capture_default_str();
        c->add_flag("--ambient", o.ambient, "vertex set R^l instead of the span of the columns");
    };

    std::map<CLI::App*, std::function<void(const Options&, Report&)>> handlers;
    auto sub = [&](const std::string& name, const std::string& help, auto fn, CLI::App* parent = nullptr) {
        CLI::App* c = (parent ? parent : &app)->add_subcommand(name, help);
        handlers[c] = fn;
        return c;
    };

    auto* weights = sub("weights", "homogeneous weight distribution", cmd_weights);
    code_opts(weights);
    auto* dual = sub("dual", "dual code and its weight distribution", cmd_dual);
    code_opts(dual);
    dual->add_option("--out", o.out, "write the dual generator matrix here");
    auto* mw = sub("macwilliams", "transform versus enumerated dual, power moments", cmd_macwilliams);
    code_opts(mw);

    auto* feas = sub("feasible", "admissible weight triples for a length", cmd_feasible);
    common(feas);
    feas->add_option("--n", o.n, "code length")->required();
    feas->add_option("--sum-exactly", o.sum_exactly, "list all triples with this weight sum");
    feas->add_flag("--sum-at-least-3n", o.sum_at_least, "restrict to S >= 3n and 3 | S");
    feas->add_option("--cls-min", o.cls_min);
    feas->add_option("--cls-max", o.cls_max, "0: Delsarte bound");
    feas->add_flag("--parity-lemmas", o.parity_lemmas, "apply the odd-weight restrictions");

    auto* scan = sub("scan-exceptional", "S = 3n triples with w2 != n", cmd_scan_exceptional);
    common(scan);
    scan->add_option("--n-max", o.n_max)->capture_default_str();

    auto* graph = sub("graph", "syndrome Cayley graph summary", cmd_graph);
    graph_opts(graph);
    auto* swrg = sub("swrg", "strongly walk-regular certificate by exact walk counting", cmd_swrg);
    graph_opts(swrg);
    swrg->add_option("--s", o.s)->capture_default_str();
    auto* ssum = sub("ssum", "s-sum set check by convolution", cmd_ssum);
    code_opts(ssum);
    ssum->add_option("--s", o.s)->capture_default_str();
    ssum->add_option("--b", o.b, "multiplicity of 0 as a summand");
    ssum->add_flag("--include-zero", o.include_zero, "count 0 once among the summands");
    auto* spec = sub("spectrum", "predicted spectrum with annihilator and trace certificate", cmd_spectrum);
    graph_opts(spec);

    auto family_cmds = [&](CLI::App* parent) {
        auto* kd = sub("kerdock", "punctured Kerdock code over Z4", cmd_kerdock, parent);
        common(kd);
        kd->add_option("--s", o.kerdock_s, "odd degree 3..7")->capture_default_str();
        kd->add_option("--b", o.b, "if nonzero, also certify the graph with this many loops");
        kd->add_option("--walk", o.s, "walk length for the certificate")->capture_default_str();
        kd->add_flag("--emit-matrix", o.emit_matrix, "include the generator matrix in the report");
        kd->add_option("--out", o.out, "write the generator matrix here");
        auto* tr = sub("trace", "trace code over F_p+uF_p", cmd_trace, parent);
        common(tr);
        tr->add_option("--p", o.p)->capture_default_str();
        tr->add_option("--m", o.m)->capture_default_str();
        tr->add_flag("--emit-matrix", o.emit_matrix);
        tr->add_option("--out", o.out, "write the generator matrix here");
        auto* te = sub("teichmuller", "Teichmuller-type parameter identity", cmd_teichmuller, parent);
        common(te);
        te->add_option("--q", o.q)->capture_default_str();
        te->add_option("--k", o.k)->capture_default_str();
        te->add_option("--s", o.teich_s, "omit for every legal s");
    };
    family_cmds(nullptr);
    auto* families = app.add_subcommand("families", "family constructions (kerdock | trace | teichmuller)");
    families->require_subcommand(1);
    family_cmds(families);

    auto* cls = sub("classify", "backtracking search for a regular projective three-weight code", cmd_classify);
    common(cls);
    cls->add_option("--ring", o.ring)->capture_default_str();
    cls->add_option("--n", o.n)->required();
    cls->add_option("--shape", o.shape, "k1,k2")->capture_default_str();
    cls->add_option("--weights", o.weights, "w1,w2,w3")->required();
    cls->add_option("--mode", o.mode, "decide or exhaust")->capture_default_str();
    cls->add_option("--budget-nodes", o.budget_nodes, "node budget per subtree")->capture_default_str();
    cls->add_option("--threads", o.threads, "0: hardware concurrency");
    cls->add_option("--out", o.out, "JSONL checkpoint (resumes if present)");
    cls->add_flag("--no-prune", o.no_prune, "disable window pruning");

    auto* tab = sub("reproduce-table", "re-derive a published table", cmd_reproduce_table);
    common(tab);
    tab->add_option("--table", o.table, "T1..T5")->capture_default_str();
    tab->add_option("--n-max", o.table_n_max)->capture_default_str();
    tab->add_option("--budget-nodes", o.budget_nodes)->capture_default_str();
    tab->add_option("--threads", o.threads);
    tab->add_option("--out", o.out, "also write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    CLI::App* chosen = nullptr;
    for (auto& [c, fn] : handlers)
        if (c->parsed()) chosen = c;
    if (!chosen) return kUsage;

    Report r;
    r.command = chosen->get_parent() == families ? "families " + chosen->get_name() : chosen->get_name();
    const auto t0 = std::chrono::steady_clock::now();
    try {
        handlers[chosen](o, r);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const BudgetExceeded& e) {
        r.verdict = "undecided";
        r.result = {{"error", e.what()}};
        r.exit_code = kUndecided;
    } catch (const Inconsistent& e) {
        r.verdict = "refuted";
        r.result = {{"error", e.what()}};
        r.exit_code = kRefuted;
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    emit(r, o.csv, r.command == "reproduce-table" ? o.out : std::string());
    return r.exit_code;
}
