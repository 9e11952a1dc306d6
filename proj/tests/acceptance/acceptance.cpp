// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.

#include "../support/oracles.hpp"

#include "swrg/classify/search.hpp"
#include "swrg/classify/tables.hpp"
#include "swrg/code/gray.hpp"
#include "swrg/code/matrix_io.hpp"
#include "swrg/families/kerdock.hpp"
#include "swrg/families/teichmuller.hpp"
#include "swrg/families/trace_code.hpp"
#include "swrg/graph/cayley.hpp"
#include "swrg/graph/ssum.hpp"
#include "swrg/graph/walks.hpp"
#include "swrg/spectral/conditions.hpp"
#include "swrg/spectral/macwilliams.hpp"
#include "swrg/spectral/three_weight.hpp"
#include "swrg/spectral/weight_distribution.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace swrg;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > limit_s) {
        o.detail += " [runtime " + std::to_string(s) + " s exceeds " + std::to_string(limit_s) + " s]";
        o.pass = false;
    }
    if (!o.pass) ++failures;
    std::printf("CRITERION %2d %s %s (%.2f s): %s\n", id, o.pass ? "PASS" : "FAIL", name, s, o.detail.c_str());
    std::fflush(stdout);
}

LinearCode code_of(const PublishedMatrix& m) {
    const Ring R = Ring::parse_name(m.ring);
    return LinearCode::from_rows(R, parse_matrix(R, m.rows));
}

std::string spectrum_str(const std::vector<std::pair<BigInt, std::uint64_t>>& sp) {
    std::string s = "{";
    for (std::size_t i = 0; i < sp.size(); ++i) s += (i ? ", " : "") + sp[i].first.str() + "^" + std::to_string(sp[i].second);
    return s + "}";
}

}  // namespace

int main() {
    const WeightScale z4scale{2, 2};

    criterion(1, "table-1-matrices", 12.0, [] {
        Outcome o{true, ""};
        double worst = 0;
        for (const auto& m : table1_matrices()) {
            const auto t0 = std::chrono::steady_clock::now();
            const auto c = verify_published_matrix(m);
            const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            worst = std::max(worst, s);
            if (!c.match || s >= 1.0) {
                o.pass = false;
                o.detail += m.name + " " + c.detail + "; ";
            }
        }
        o.detail += std::to_string(table1_matrices().size()) + " matrices, slowest " + std::to_string(worst) + " s";
        return o;
    });

    criterion(2, "example-1-candidates", 1.0, [] {
        std::set<std::array<std::uint64_t, 3>> got;
        for (auto t : candidate_triples(4, 12)) got.insert(t);
        const std::set<std::array<std::uint64_t, 3>> want{{3, 4, 5}, {2, 4, 6}, {1, 5, 6}, {2, 3, 7}, {1, 4, 7}, {1, 3, 8}};
        std::string d;
        for (auto t : got) d += std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]) + " ";
        return Outcome{got == want, d};
    });

    criterion(3, "example-4-five-sum", 1.0, [&] {
        std::set<std::array<std::uint64_t, 3>> got, want;
        for (std::uint64_t w1 = 1; w1 <= 24; ++w1)
            for (std::uint64_t w2 = w1 + 1; w2 <= 24; ++w2)
                for (std::uint64_t w3 = w2 + 1; w3 <= 24; ++w3)
                    if (ssum_condition(12, z4scale, 0, 5, {w1, w2, w3})) got.insert({w1, w2, w3});
        for (std::uint64_t i = 0; i <= 10; ++i) want.insert({11 - i, 12, 13 + i});
        return Outcome{got == want, std::to_string(got.size()) + " triples satisfy the s=5 condition"};
    });

    criterion(4, "exceptional-scan", 10.0, [] {
        struct Want {
            std::uint64_t n, w1, w2, w3, y, A1, A2, A3, B3;
        };
        const std::vector<Want> want{{29, 24, 31, 32, 64, 76, 128, 51, 164},
                                     {33, 29, 32, 38, 64, 64, 111, 80, 157},
                                     {34, 30, 32, 40, 128, 64, 299, 148, 36},
                                     {50, 46, 48, 56, 64, 32, 145, 78, 580}};
        const auto got = exceptional_scan(50);
        bool ok = got.size() == want.size();
        std::string d;
        for (std::size_t i = 0; i < got.size(); ++i) {
            const auto& e = got[i];
            d += "(" + std::to_string(e.n) + "," + std::to_string(e.w[0]) + "," + std::to_string(e.w[1]) + "," +
                 std::to_string(e.w[2]) + "," + e.printed_y.str() + "," + e.A[0].str() + "," + e.A[1].str() + "," +
                 e.A[2].str() + "," + e.B3.str() + (e.macwilliams_nonnegative ? ",mw+" : ",mw-") + ") ";
            if (i < want.size()) {
                const auto& w = want[i];
                ok = ok && e.n == w.n && e.w[0] == w.w1 && e.w[1] == w.w2 && e.w[2] == w.w3 && e.printed_y == w.y &&
                     e.A[0] == w.A1 && e.A[1] == w.A2 && e.A[2] == w.A3 && e.B3 == w.B3;
            }
        }
        return Outcome{ok, d};
    });

    criterion(5, "swrg-G1_6_2", 5.0, [&] {
        const auto& m = table1_matrices()[1];
        const auto C = code_of(m);
        const auto G = syndrome_graph(C.ring(), C.rows(), {});
        const auto sp = predicted_spectrum(weight_distribution(C), z4scale, 0);
        const auto cert = verify_spectrum(G, sp);
        const std::vector<std::pair<BigInt, std::uint64_t>> want{{12, 1}, {4, 18}, {0, 24}, {-4, 21}};
        bool ok = G.vertex_count() == 64 && sp == want && cert.verified();
        std::string d = "V=" + std::to_string(G.vertex_count()) + " spectrum " + spectrum_str(sp) +
                        (cert.annihilator_zero ? " annihilator=0" : " annihilator!=0") +
                        (cert.multiplicities_match ? " traces ok" : " traces mismatch");
        for (unsigned s : {3u, 5u, 7u}) {
            const auto c = is_swrg(G, s);
            ok = ok && c.holds;
            d += " s=" + std::to_string(s) + (c.holds ? ":(" + c.lambda.str() + "," + c.mu.value_or(-1).str() + "," +
                                                          c.nu.str() + ")"
                                                    : ":refuted");
        }
        return Outcome{ok, d};
    });

    criterion(6, "kerdock", 120.0, [] {
        bool ok = true;
        std::string d;
        {
            const auto K = kerdock(3);
            const auto want = WeightDistribution::from_pairs(7, {{6, 42}, {8, 7}, {10, 14}});
            ok = ok && K.wd_minus == want;
            const auto G = syndrome_graph(K.k_minus.ring(), K.k_minus.rows(), {2});
            const auto c = is_swrg(G, 3);
            const auto img = gray_image(K.k_minus);
            const auto scan = is_binary_linear(img.images);
            bool witness_ok = false;
            if (scan.witness) {
                // re-encode: xor of the two images must not be an image of any codeword
                const auto [i, j] = *scan.witness;
                BitVec x(img.images[i].size());
                for (std::size_t t = 0; t < x.size(); ++t) x[t] = img.images[i][t] ^ img.images[j][t];
                witness_ok = std::none_of(img.codewords.begin(), img.codewords.end(),
                                          [&](const Vec& w) { return gray_map(K.k_minus.ring(), w) == x; });
            }
            ok = ok && G.vertex_count() == 64 && c.holds && !scan.linear && scan.pairs_checked == 4096 && witness_ok;
            d += "s=3: WD " + K.wd_minus.to_string() + ", V=" + std::to_string(G.vertex_count()) +
                 (c.holds ? " 3-SWRG" : " not 3-SWRG") + ", Gray pairs " + std::to_string(scan.pairs_checked) +
                 " failing " + std::to_string(scan.failing_pairs) + (witness_ok ? " witness ok" : " no witness");
        }
        {
            const auto K = kerdock(5);
            const auto ws = K.wd_minus.nonzero_weights();
            const auto G = syndrome_graph(K.k_minus.ring(), K.k_minus.rows(), {2});
            const auto c = is_swrg(G, 3);
            ok = ok && ws == std::vector<std::uint64_t>{28, 32, 36} && G.vertex_count() == 1024 && c.holds;
            d += "; s=5: WD " + K.wd_minus.to_string() + ", V=" + std::to_string(G.vertex_count()) +
                 (c.holds ? " 3-SWRG" : " not 3-SWRG");
        }
        return Outcome{ok, d};
    });

    criterion(7, "uniqueness-6-8-10-b2", 1.0, [&] {
        bool ok = true;
        std::string d;
        for (unsigned s : {2u, 3u, 4u, 5u, 6u, 7u}) {
            const bool holds = ssum_condition(7, z4scale, 2, s, {6, 8, 10});
            ok = ok && holds == (s == 3);
            d += "s=" + std::to_string(s) + (holds ? ":holds " : ":fails ");
        }
        const auto t1 = eigenvalue(7, z4scale, 2, 6), t2 = eigenvalue(7, z4scale, 2, 8), t3 = eigenvalue(7, z4scale, 2, 10);
        d += "theta=(" + t1.str() + "," + t2.str() + "," + t3.str() + ")";
        if (odd_s_family_check(7, z4scale, {6, 8, 10}, 2)) d += " odd-s family with b=2";
        return Outcome{ok, d};
    });

    criterion(8, "macwilliams-vs-brute-force", 30.0, [] {
        bool ok = true;
        std::size_t count = 0;
        std::string d;
        auto run = [&](const std::vector<PublishedMatrix>& mats) {
            for (const auto& m : mats) {
                const auto C = code_of(m);
                const auto dual = macwilliams_hom(weight_distribution(C));
                const auto brute = oracle::distribution(C.ring(), oracle::dual_words(C.ring(), C.rows()));
                const auto got = oracle::as_map(dual.entries);
                const bool b12 = !got.count(1) && !got.count(2);
                if (got != brute || !b12) {
                    ok = false;
                    d += m.name + " mismatch; ";
                }
                ++count;
            }
        };
        run(table1_matrices());
        run(table5_matrices());
        d += std::to_string(count) + " codes";
        return Outcome{ok, d};
    });

    criterion(9, "classification-tables-2-4", 1800.0, [] {
        bool ok = true;
        std::string d;
        for (auto id : {TableId::T2, TableId::T3, TableId::T4}) {
            TableRunOptions opt;
            opt.n_max = 8;
            const auto rep = run_table(id, opt);
            ok = ok && rep.ok() && rep.undecided() == 0;
            d += to_string(id) + ": " + std::to_string(rep.checks.size()) + " checks, " +
                 std::to_string(rep.mismatches()) + " mismatches, " + std::to_string(rep.undecided()) + " undecided; ";
            for (const auto& c : rep.checks)
                if (!c.match) d += "[" + c.label + " expected " + c.expected + " got " + c.got + "] ";
        }
        return Outcome{ok, d};
    });

    criterion(10, "trace-code-p3-m2", 60.0, [] {
        const auto t = trace_code(3, 2);
        std::string d = "n_C=" + std::to_string(t.C.length()) + " n_P=" + std::to_string(t.replication.reduced.length()) +
                        " t=" + std::to_string(t.replication.factor) + " WD_C=" + t.wd_C.to_string() +
                        " WD_P=" + t.wd_P.to_string() + " closed-form=(";
        for (std::size_t i = 0; i < t.closed_form_weights.size(); ++i) d += (i ? "," : "") + t.closed_form_weights[i].str();
        d += ") S_P=" + t.sum_P.str() + " target=" + to_string(t.sum_target);
        d += std::string(" projective=") + (t.P_projective ? "yes" : "no") + " three-weight=" +
             (t.P_three_weight ? "yes" : "no") + " TSS=" + (t.tss.holds ? "yes" : "no") +
             " sum-relation=" + (t.sum_relation ? "yes" : "no");
        if (t.tss_with_loops) d += " b=" + to_string(t.implied_loops) + (t.tss_with_loops->holds ? " 3-sum with loops" : " fails with loops");
        const bool ok = t.C.length() == 36 && t.replication.reduced.length() == 18 && t.replication.factor == 2 &&
                        t.P_projective && t.P_three_weight && t.tss.holds && t.sum_relation;
        return Outcome{ok, d};
    });

    criterion(11, "teichmuller-identity", 1.0, [] {
        bool ok = true;
        std::size_t count = 0;
        for (std::uint64_t q : {2, 4, 8})
            for (unsigned k = 2; k <= 4; ++k)
                for (unsigned s : teichmuller_legal_s(q, k)) {
                    ok = ok && teichmuller_params(q, k, s).identity_holds;
                    ++count;
                }
        const auto t = teichmuller_params(2, 3, 0);
        ok = ok && t.A[0] == 42 && t.A[1] == 7 && t.A[2] == 14;
        return Outcome{ok, std::to_string(count) + " legal (q,k,s); (2,3,0) A=(" + t.A[0].str() + "," + t.A[1].str() +
                               "," + t.A[2].str() + ")"};
    });

    criterion(12, "oracle-equivalence", 300.0, [] {
        bool ok = true;
        std::uint64_t graphs = 0, duals = 0, searches = 0;
        std::string d;
        for (const char* ring : {"z4", "f2u"}) {
            const Ring R = Ring::parse_name(ring);
            // (a) SWRG on the ambient Cayley graph vs convolution s-sum, (b) dual via transform vs enumeration
            for (std::size_t l = 1; l <= 2; ++l)
                for (std::size_t n = 1; n <= 4; ++n) {
                    const std::uint64_t total = oracle::pow_u(4, l * n);
                    for (std::uint64_t t = 0; t < total; ++t) {
                        Matrix H(l, Vec(n));
                        const Vec flat = oracle::unrank(R, t, l * n);
                        for (std::size_t i = 0; i < l; ++i)
                            for (std::size_t j = 0; j < n; ++j) H[i][j] = flat[i * n + j];
                        bool zero_col = false;
                        for (std::size_t j = 0; j < n && !zero_col; ++j) {
                            bool z = true;
                            for (std::size_t i = 0; i < l; ++i) z = z && H[i][j] == 0;
                            zero_col = z;
                        }
                        if (zero_col) continue;
                        const auto C = LinearCode::from_rows(R, H);
                        const auto dual = macwilliams_hom(weight_distribution(C));
                        const auto brute = oracle::distribution(R, oracle::dual_words(R, H));
                        if (oracle::as_map(dual.entries) != brute) {
                            ok = false;
                            d += "dual mismatch; ";
                        }
                        ++duals;
                        const auto omega = omega_from_columns(R, H);
                        SyndromeGraphOptions go;
                        go.ambient = true;
                        const auto G = CayleyGraph::from_connection_set(R, l, omega, go);
                        for (unsigned s = 2; s <= 5; ++s) {
                            const bool g = is_swrg(G, s).holds;
                            const bool c = ssum_set_check(R, l, omega, s, false).holds;
                            if (g != c) {
                                ok = false;
                                d += "equiv mismatch; ";
                            }
                            ++graphs;
                        }
                    }
                }
            // (c) pruned search vs unpruned search vs generator-matrix brute force
            for (std::size_t n = 1; n <= 4; ++n)
                for (int k1 = 1; k1 <= 2; ++k1)
                    for (int k2 = 0; k1 + k2 <= 2; ++k2) {
                        const std::size_t l = static_cast<std::size_t>(k1 + k2);
                        // realized weight sets of regular projective codes of this shape
                        std::set<std::vector<std::uint64_t>> realized;
                        const std::uint64_t total = oracle::pow_u(4, l * n);
                        for (std::uint64_t t = 0; t < total; ++t) {
                            Matrix H(l, Vec(n));
                            const Vec flat = oracle::unrank(R, t, l * n);
                            for (std::size_t i = 0; i < l; ++i)
                                for (std::size_t j = 0; j < n; ++j) H[i][j] = flat[i * n + j];
                            try {
                                const auto C = LinearCode::from_rows(R, H);
                                if (C.shape2() != std::make_pair(k1, k2) || !is_regular(C) || !is_projective(C)) continue;
                                std::vector<std::uint64_t> ws;
                                for (const auto& [w, a] : oracle::distribution(R, oracle::span(R, H)))
                                    if (w) ws.push_back(w);
                                realized.insert(ws);
                            } catch (const InvalidArgument&) {
                            }
                        }
                        for (std::uint64_t w1 = 1; w1 <= 2 * n; ++w1)
                            for (std::uint64_t w2 = w1 + 1; w2 <= 2 * n; ++w2)
                                for (std::uint64_t w3 = w2 + 1; w3 <= 2 * n; ++w3) {
                                    bool exists = false;
                                    for (const auto& ws : realized)
                                        exists = exists || std::all_of(ws.begin(), ws.end(), [&](auto w) {
                                                     return w == w1 || w == w2 || w == w3;
                                                 });
                                    SearchSpec spec;
                                    spec.ring = R;
                                    spec.n = n;
                                    spec.k1 = k1;
                                    spec.k2 = k2;
                                    spec.weights = {w1, w2, w3};
                                    spec.threads = 1;
                                    const auto pruned = search(spec).status;
                                    spec.prune = false;
                                    const auto plain = search(spec).status;
                                    const auto want = exists ? SearchStatus::Realized : SearchStatus::Empty;
                                    if (pruned != want || plain != want) {
                                        ok = false;
                                        d += std::string(ring) + " n=" + std::to_string(n) + " search mismatch; ";
                                    }
                                    ++searches;
                                }
                    }
        }
        d += std::to_string(graphs) + " graph/convolution pairs, " + std::to_string(duals) + " duals, " +
             std::to_string(searches) + " searches";
        return Outcome{ok, d};
    });

    std::printf("SUMMARY %d failing criteria\n", failures);
    return failures;
}
