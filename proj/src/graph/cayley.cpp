#include "swrg/graph/cayley.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace swrg {

namespace {

Vec add_vec(const Ring& R, const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = R.add(a[i], b[i]);
    return out;
}

}  // namespace

std::uint64_t CayleyGraph::key(const Vec& v) const {
    std::uint64_t k = 0;
    for (std::size_t i = v.size(); i-- > 0;) k = k * ring_.size() + v[i];
    return k;
}

std::uint32_t CayleyGraph::index_of(const Vec& v) const {
    if (v.size() != ell_) throw InvalidArgument("vector has wrong dimension");
    auto it = index_.find(key(v));
    if (it == index_.end()) throw InvalidArgument("vector is not a vertex of the graph");
    return it->second;
}

bool CayleyGraph::adjacent(std::uint32_t u, std::uint32_t v) const {
    const std::size_t V = vertices_.size();
    for (std::size_t k = 0; k < connection_.size(); ++k)
        if (nbr_[k * V + u] == v) return true;
    return false;
}

std::vector<std::vector<std::uint8_t>> CayleyGraph::adjacency_matrix() const {
    const std::size_t V = vertices_.size();
    if (V > 4096) throw BudgetExceeded("dense adjacency limited to 4096 vertices");
    std::vector<std::vector<std::uint8_t>> A(V, std::vector<std::uint8_t>(V, 0));
    for (std::size_t k = 0; k < connection_.size(); ++k)
        for (std::size_t v = 0; v < V; ++v) A[v][nbr_[k * V + v]] = 1;
    return A;
}

CayleyGraph CayleyGraph::from_connection_set(const Ring& R, std::size_t ell, std::vector<Vec> S,
                                             const SyndromeGraphOptions& opt) {
    if (ell == 0) throw InvalidArgument("graph dimension must be positive");
    if (static_cast<double>(ell) * std::log2(static_cast<double>(R.size())) >= 63.0)
        throw BudgetExceeded("R^l too large to index");
    CayleyGraph G;
    G.ring_ = R;
    G.ell_ = ell;
    G.b_ = opt.b;
    std::set<Vec> sset;
    for (auto& s : S) {
        if (s.size() != ell) throw InvalidArgument("connection vector has wrong dimension");
        if (std::all_of(s.begin(), s.end(), [](auto x) { return x == 0; }))
            throw InvalidArgument("connection set contains 0");
        sset.insert(s);
    }
    for (const auto& s : sset) {
        Vec m(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) m[i] = R.neg(s[i]);
        if (!sset.count(m)) throw InvalidArgument("connection set is not symmetric");
    }
    G.connection_.assign(sset.begin(), sset.end());

    const Vec zero(ell, 0);
    auto add_vertex = [&](const Vec& v) {
        if (G.vertices_.size() >= opt.vertex_budget)
            throw BudgetExceeded("vertex budget " + std::to_string(opt.vertex_budget) + " exceeded");
        const auto idx = static_cast<std::uint32_t>(G.vertices_.size());
        G.index_.emplace(G.key(v), idx);
        G.vertices_.push_back(v);
        return idx;
    };
    // breadth-first closure of 0 under translations by S
    std::size_t reached = 0;
    if (opt.ambient) {
        const std::uint64_t total = ipow(R.size(), static_cast<unsigned>(ell));
        if (total > opt.vertex_budget)
            throw BudgetExceeded("vertex budget " + std::to_string(opt.vertex_budget) + " exceeded");
        Vec v(ell, 0);
        for (std::uint64_t t = 0; t < total; ++t) {
            std::uint64_t x = t;
            for (std::size_t i = 0; i < ell; ++i, x /= R.size()) v[i] = static_cast<Ring::Elem>(x % R.size());
            add_vertex(v);
        }
        std::vector<char> seen(total, 0);
        std::deque<Vec> queue{zero};
        seen[G.key(zero)] = 1;
        while (!queue.empty()) {
            Vec v0 = std::move(queue.front());
            queue.pop_front();
            ++reached;
            for (const auto& s : G.connection_) {
                Vec w = add_vec(R, v0, s);
                auto kk = G.key(w);
                if (!seen[kk]) seen[kk] = 1, queue.push_back(std::move(w));
            }
        }
        G.connected_ = reached == total;
    } else {
        add_vertex(zero);
        for (std::size_t head = 0; head < G.vertices_.size(); ++head)
            for (const auto& s : G.connection_) {
                Vec w = add_vec(R, G.vertices_[head], s);
                if (!G.index_.count(G.key(w))) add_vertex(w);
            }
    }
    G.zero_ = G.index_.at(G.key(zero));

    const std::size_t V = G.vertices_.size();
    G.nbr_.resize(G.connection_.size() * V);
    for (std::size_t k = 0; k < G.connection_.size(); ++k)
        for (std::size_t v = 0; v < V; ++v)
            G.nbr_[k * V + v] = G.index_.at(G.key(add_vec(R, G.vertices_[v], G.connection_[k])));
    return G;
}

std::vector<Vec> omega_from_columns(const Ring& R, const Matrix& H) {
    if (H.empty() || H[0].empty()) throw InvalidArgument("check matrix is empty");
    std::set<Vec> out;
    const auto units = R.units();
    for (std::size_t j = 0; j < H[0].size(); ++j) {
        Vec col(H.size());
        for (std::size_t i = 0; i < H.size(); ++i) col[i] = H[i][j];
        for (auto u : units) {
            Vec m(col.size());
            for (std::size_t i = 0; i < col.size(); ++i) m[i] = R.mul(u, col[i]);
            if (std::any_of(m.begin(), m.end(), [](auto x) { return x != 0; })) out.insert(m);
        }
    }
    return {out.begin(), out.end()};
}

CayleyGraph syndrome_graph(const Ring& R, const Matrix& H, const SyndromeGraphOptions& opt) {
    CayleyGraph G = CayleyGraph::from_connection_set(R, H.size(), omega_from_columns(R, H), opt);
    const std::size_t n = H[0].size();
    std::set<Vec> classes;
    for (std::size_t j = 0; j < n; ++j) {
        Vec col(H.size());
        for (std::size_t i = 0; i < H.size(); ++i) col[i] = H[i][j];
        if (std::none_of(col.begin(), col.end(), [&](auto x) { return R.is_unit(x); })) G.regular_ = false;
        if (!classes.insert(associate_canonical(R, col)).second) G.projective_ = false;
        if (std::all_of(col.begin(), col.end(), [](auto x) { return x == 0; })) G.projective_ = false;
    }
    return G;
}

}  // namespace swrg
