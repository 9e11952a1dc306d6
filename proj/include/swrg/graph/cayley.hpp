#pragma once

#include "swrg/code/linear_code.hpp"
#include "swrg/common.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace swrg {

inline constexpr std::uint64_t kDefaultVertexBudget = std::uint64_t{1} << 16;

struct SyndromeGraphOptions {
    std::uint64_t b = 0;  // loops per vertex
    /// Use all of R^l as vertex set instead of the column span (disconnected if the span is smaller).
    bool ambient = false;
    std::uint64_t vertex_budget = kDefaultVertexBudget;
};

/// Cayley graph on an additive subgroup of R^l with connection set S = -S, 0 not in S.
/// Neighbours are stored as a translation table: nbr[k*V + v] = index(vertex v + S_k).
class CayleyGraph {
public:
    const Ring& ring() const { return ring_; }
    std::size_t dimension() const { return ell_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t degree() const { return connection_.size(); }
    std::uint64_t loops() const { return b_; }
    const std::vector<Vec>& vertices() const { return vertices_; }
    const std::vector<Vec>& connection_set() const { return connection_; }
    const std::vector<std::uint32_t>& translations() const { return nbr_; }
    /// index of vertex v; throws if v is not a vertex
    std::uint32_t index_of(const Vec& v) const;
    bool adjacent(std::uint32_t u, std::uint32_t v) const;
    std::uint32_t zero_index() const { return zero_; }

    bool columns_regular() const { return regular_; }
    bool columns_projective() const { return projective_; }
    /// Every vertex is reachable from 0 through S.
    bool connected() const { return connected_; }

    /// Dense 0/1 adjacency matrix (loops not included); throws above 4096 vertices.
    std::vector<std::vector<std::uint8_t>> adjacency_matrix() const;

    /// Cay(group, S) for an explicit symmetric connection set inside R^l.
    static CayleyGraph from_connection_set(const Ring& R, std::size_t ell, std::vector<Vec> S,
                                           const SyndromeGraphOptions& opt = {});

private:
    friend CayleyGraph syndrome_graph(const Ring& R, const Matrix& H, const SyndromeGraphOptions& opt);
    std::uint64_t key(const Vec& v) const;

    Ring ring_;
    std::size_t ell_ = 0;
    std::uint64_t b_ = 0;
    std::vector<Vec> vertices_;
    std::vector<Vec> connection_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
    std::vector<std::uint32_t> nbr_;
    std::uint32_t zero_ = 0;
    bool regular_ = true, projective_ = true, connected_ = true;
};

/// Unit multiples of the columns of H, deduplicated, zero removed, sorted.
std::vector<Vec> omega_from_columns(const Ring& R, const Matrix& H);

/// Coset graph of the code with check matrix H: vertices {Hx}, x ~ y iff x - y = u*h_i.
CayleyGraph syndrome_graph(const Ring& R, const Matrix& H, const SyndromeGraphOptions& opt = {});

}  // namespace swrg
