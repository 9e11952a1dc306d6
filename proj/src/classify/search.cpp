#include "swrg/classify/search.hpp"

#include "swrg/classify/invariant.hpp"
#include "swrg/classify/points.hpp"
#include "swrg/kernels/kernels.hpp"
#include "swrg/spectral/weight_distribution.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace swrg {

std::string to_string(SearchMode m) { return m == SearchMode::Decide ? "DECIDE" : "EXHAUST"; }

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Realized: return "REALIZED";
        case SearchStatus::Empty: return "EMPTY";
        case SearchStatus::Undecided: return "UNDECIDED";
    }
    return "?";
}

Matrix witness_matrix(const std::vector<Vec>& points, const std::vector<std::uint32_t>& chosen) {
    if (chosen.empty()) throw InvalidArgument("empty witness");
    const std::size_t ell = points[chosen[0]].size();
    Matrix rows(ell, Vec(chosen.size()));
    for (std::size_t j = 0; j < chosen.size(); ++j)
        for (std::size_t i = 0; i < ell; ++i) rows[i][j] = points[chosen[j]][i];
    return rows;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct SubtreeResult {
    bool done = false;       // ran to completion or to its first witness
    bool cancelled = false;  // abandoned because a lower subtree found a witness
    bool over_budget = false;
    std::uint64_t nodes = 0, pruned = 0;
    std::vector<std::vector<std::uint32_t>> solutions;
};

struct Problem {
    std::size_t P = 0, M = 0, n = 0, k1 = 0;
    std::vector<std::uint8_t> contrib;               // P x M
    std::vector<std::uint8_t> suf_lo, suf_hi;        // (P+1) x M
    std::vector<std::uint16_t> targets;
    std::vector<std::uint16_t> base_acc;             // after the fixed unit-vector prefix
    const kernels::KernelTable* ker = nullptr;
    bool prune = true;
    SearchMode mode = SearchMode::Decide;
    std::uint64_t budget = 0;

    const std::uint8_t* row(std::size_t p) const { return contrib.data() + p * M; }
    bool window(const std::uint16_t* acc, std::size_t next, std::size_t r) const {
        return ker->window_ok(acc, suf_lo.data() + next * M, suf_hi.data() + next * M, M, static_cast<std::uint32_t>(r),
                              targets.data(), targets.size());
    }
};

class Walker {
public:
    Walker(const Problem& pb, std::size_t subtree, const std::atomic<std::size_t>& best)
        : pb_(pb), subtree_(subtree), best_(best), acc_(pb.base_acc) {}

    SubtreeResult run() {
        const std::size_t r0 = pb_.n - pb_.k1;
        if (r0 == 0) {
            ++res_.nodes;
            if (pb_.window(acc_.data(), pb_.P, 0)) res_.solutions.push_back(chosen_);
            res_.done = true;
            return res_;
        }
        const std::size_t j = pb_.k1 + subtree_;
        stop_ = false;
        descend(j, r0);
        res_.done = !res_.cancelled && !res_.over_budget;
        return res_;
    }

private:
    // place point j with r points still to place (including j)
    void descend(std::size_t j, std::size_t r) {
        if (stop_) return;
        if (++res_.nodes > pb_.budget) {
            res_.over_budget = true;
            stop_ = true;
            return;
        }
        if ((res_.nodes & 0xFFF) == 0 && best_.load(std::memory_order_relaxed) < subtree_) {
            res_.cancelled = true;
            stop_ = true;
            return;
        }
        pb_.ker->accumulate_u16(acc_.data(), pb_.row(j), pb_.M);
        chosen_.push_back(static_cast<std::uint32_t>(j));
        const std::size_t rem = r - 1;
        if (rem == 0 || !pb_.prune ? true : pb_.window(acc_.data(), j + 1, rem)) {
            if (rem == 0) {
                if (pb_.window(acc_.data(), pb_.P, 0)) {
                    res_.solutions.push_back(chosen_);
                    if (pb_.mode == SearchMode::Decide) stop_ = true;
                }
            } else {
                for (std::size_t k = j + 1; k + rem <= pb_.P && !stop_; ++k) descend(k, rem);
            }
        } else {
            ++res_.pruned;
        }
        chosen_.pop_back();
        pb_.ker->retract_u16(acc_.data(), pb_.row(j), pb_.M);
    }

    const Problem& pb_;
    std::size_t subtree_;
    const std::atomic<std::size_t>& best_;
    std::vector<std::uint16_t> acc_;
    std::vector<std::uint32_t> chosen_;
    SubtreeResult res_;
    bool stop_ = false;
};

std::string spec_key(const SearchSpec& s) {
    return s.ring.name() + "|" + std::to_string(s.n) + "|" + std::to_string(s.k1) + "," + std::to_string(s.k2) + "|" +
           std::to_string(s.weights[0]) + "," + std::to_string(s.weights[1]) + "," + std::to_string(s.weights[2]) + "|" +
           to_string(s.mode) + "|" + std::to_string(s.budget_nodes) + "|" + (s.prune ? "prune" : "plain");
}

std::map<std::size_t, SubtreeResult> load_checkpoint(const std::string& path, const std::string& key) {
    std::map<std::size_t, SubtreeResult> out;
    if (path.empty()) return out;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || j.value("key", "") != key) continue;
        SubtreeResult r;
        r.done = true;
        r.nodes = j.value("nodes", std::uint64_t{0});
        r.pruned = j.value("pruned", std::uint64_t{0});
        r.over_budget = j.value("over_budget", false);
        r.done = !r.over_budget;
        for (const auto& s : j.value("solutions", nlohmann::json::array()))
            r.solutions.push_back(s.get<std::vector<std::uint32_t>>());
        out[j.at("subtree").get<std::size_t>()] = std::move(r);
    }
    return out;
}

void append_checkpoint(const std::string& path, const std::string& key, std::size_t subtree, const SubtreeResult& r) {
    nlohmann::json j{{"key", key},           {"subtree", subtree},    {"nodes", r.nodes},
                     {"pruned", r.pruned},   {"over_budget", r.over_budget}, {"solutions", r.solutions}};
    std::ofstream out(path, std::ios::app);
    out << j.dump() << '\n';
}

void verify_witness(const SearchSpec& spec, const Matrix& rows) {
    const auto C = LinearCode::from_rows(spec.ring, rows);
    if (C.shape2() != std::make_pair(spec.k1, spec.k2)) throw Inconsistent("search witness has the wrong shape");
    if (!is_regular(C) || !is_projective(C)) throw Inconsistent("search witness is not regular and projective");
    for (auto w : weight_distribution(C).nonzero_weights())
        if (std::find(spec.weights.begin(), spec.weights.end(), w) == spec.weights.end())
            throw Inconsistent("search witness has weight " + std::to_string(w) + " outside the target");
}

}  // namespace

ClassificationRecord search(const SearchSpec& spec) {
    const auto t0 = std::chrono::steady_clock::now();
    const Ring& R = spec.ring;
    if (R.size() != 4 || R.depth() != 2) throw InvalidArgument("search: ring must be Z4 or F2+uF2");
    if (!(spec.weights[0] < spec.weights[1] && spec.weights[1] < spec.weights[2]))
        throw InvalidArgument("search: weights must be strictly increasing");
    if (spec.weights[2] > 2 * spec.n) throw InvalidArgument("search: weights exceed 2n");
    if (spec.n == 0 || spec.n > 64) throw InvalidArgument("search: need 1 <= n <= 64");
    if (2 * spec.k1 + spec.k2 > 12) throw BudgetExceeded("search: 2k1 + k2 > 12");

    ClassificationRecord rec;
    rec.spec = spec;
    const auto pts = shape_points(R, spec.k1, spec.k2);
    const auto msgs = shape_messages(R, spec.k1, spec.k2);
    rec.point_count = pts.size();

    Problem pb;
    pb.P = pts.size();
    pb.M = msgs.size() - 1;
    pb.n = spec.n;
    pb.k1 = static_cast<std::size_t>(spec.k1);
    pb.ker = &kernels::active();
    pb.prune = spec.prune;
    pb.mode = spec.mode;
    pb.budget = spec.budget_nodes;
    for (auto w : spec.weights) pb.targets.push_back(static_cast<std::uint16_t>(w));

    if (spec.n < static_cast<std::size_t>(spec.k1 + spec.k2) || spec.n > pb.P) {
        rec.status = SearchStatus::Empty;
        rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return rec;
    }

    pb.contrib.resize(pb.P * pb.M);
    for (std::size_t p = 0; p < pb.P; ++p)
        for (std::size_t m = 1; m <= pb.M; ++m) {
            Ring::Elem c = 0;
            for (std::size_t i = 0; i < pts[p].size(); ++i) c = R.add(c, R.mul(msgs[m][i], pts[p][i]));
            pb.contrib[p * pb.M + m - 1] = static_cast<std::uint8_t>(R.hom_weight(c));
        }
    pb.suf_lo.assign((pb.P + 1) * pb.M, 0);
    pb.suf_hi.assign((pb.P + 1) * pb.M, 0);
    for (std::size_t p = pb.P; p-- > 0;)
        for (std::size_t m = 0; m < pb.M; ++m) {
            const std::uint8_t c = pb.contrib[p * pb.M + m];
            const bool last = p + 1 == pb.P;
            pb.suf_lo[p * pb.M + m] = last ? c : std::min(c, pb.suf_lo[(p + 1) * pb.M + m]);
            pb.suf_hi[p * pb.M + m] = last ? c : std::max(c, pb.suf_hi[(p + 1) * pb.M + m]);
        }
    pb.base_acc.assign(pb.M, 0);
    for (std::size_t p = 0; p < pb.k1; ++p) pb.ker->accumulate_u16(pb.base_acc.data(), pb.row(p), pb.M);

    const std::size_t r0 = spec.n - pb.k1;
    const std::size_t nsub = r0 == 0 ? 1 : pb.P - pb.k1 - r0 + 1;
    rec.subtrees = nsub;
    const std::string key = spec_key(spec);
    auto resumed = load_checkpoint(spec.checkpoint, key);

    std::vector<SubtreeResult> results(nsub);
    std::atomic<std::size_t> best{kNone};
    for (auto& [idx, r] : resumed)
        if (idx < nsub) {
            results[idx] = r;
            ++rec.subtrees_resumed;
            if (spec.mode == SearchMode::Decide && !r.solutions.empty()) {
                std::size_t cur = best.load();
                while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
                }
            }
        }
    const bool root_ok = r0 == 0 || !spec.prune || pb.window(pb.base_acc.data(), pb.k1, r0);
    std::atomic<std::size_t> next{0};
    std::mutex io;
    auto worker = [&] {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= nsub) return;
            if (resumed.count(idx)) continue;
            if (spec.mode == SearchMode::Decide && best.load() < idx) {
                results[idx].cancelled = true;
                continue;
            }
            SubtreeResult r;
            if (root_ok) {
                Walker w(pb, idx, best);
                r = w.run();
            } else {
                r.done = true;
                r.pruned = 1;
            }
            if (spec.mode == SearchMode::Decide && !r.solutions.empty()) {
                std::size_t cur = best.load();
                while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
                }
            }
            if (!spec.checkpoint.empty() && !r.cancelled) {
                std::lock_guard<std::mutex> lock(io);
                append_checkpoint(spec.checkpoint, key, idx, r);
            }
            results[idx] = std::move(r);
        }
    };
    unsigned nthreads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
    nthreads = static_cast<unsigned>(std::min<std::size_t>(nthreads, nsub));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    // deterministic merge: in Decide mode only subtrees up to the first witness count
    const std::size_t limit = spec.mode == SearchMode::Decide && best.load() != kNone ? best.load() + 1 : nsub;
    bool over_budget = false;
    std::vector<std::vector<std::uint32_t>> found;
    for (std::size_t i = 0; i < limit; ++i) {
        const auto& r = results[i];
        rec.nodes += r.nodes;
        rec.pruned += r.pruned;
        over_budget |= r.over_budget;
        for (const auto& s : r.solutions) found.push_back(s);
    }
    rec.solutions = found.size();
    if (!found.empty()) {
        rec.status = SearchStatus::Realized;
        std::set<std::string> seen;
        for (const auto& s : found) {
            std::vector<std::uint32_t> full;
            for (std::size_t p = 0; p < pb.k1; ++p) full.push_back(static_cast<std::uint32_t>(p));
            full.insert(full.end(), s.begin(), s.end());
            Matrix rows = witness_matrix(pts, full);
            if (spec.mode == SearchMode::Exhaust &&
                !seen.insert(canonical_invariant(LinearCode::from_rows(R, rows))).second)
                continue;
            verify_witness(spec, rows);
            rec.witnesses.push_back(std::move(rows));
            if (spec.mode == SearchMode::Decide) break;
        }
    } else {
        rec.status = over_budget ? SearchStatus::Undecided : SearchStatus::Empty;
    }
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

}  // namespace swrg
