#include "swrg/code/linear_code.hpp"

#include "swrg/kernels/kernels.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

namespace swrg {

namespace {

// sum_{j<v} tau_j gamma^j for the residue-digit expansion c = sum_j tau_j gamma^j.
Ring::Elem reduce_mod_gamma_pow(const Ring& R, Ring::Elem c, int v) {
    Ring::Elem out = 0, rest = c;
    for (int j = 0; j < v; ++j) {
        const Ring::Elem tau = R.lift_residue(R.reduce(rest));
        out = R.add(out, R.mul(tau, R.gamma_pow(j)));
        rest = R.div_exact(R.sub(rest, tau), R.gamma());
    }
    return out;
}

void axpy_row(const Ring& R, Vec& dst, Ring::Elem f, const Vec& src) {
    for (std::size_t j = 0; j < dst.size(); ++j) dst[j] = R.sub(dst[j], R.mul(f, src[j]));
}

std::string bytes_of(const Vec& v) { return std::string(v.begin(), v.end()); }

}  // namespace

StandardForm standard_form(const Ring& R, const Matrix& rows) {
    if (rows.empty() || rows[0].empty()) throw InvalidArgument("standard_form: empty matrix");
    const std::size_t k = rows.size(), n = rows[0].size();
    Matrix M = rows;
    StandardForm sf;
    sf.perm.resize(n);
    std::iota(sf.perm.begin(), sf.perm.end(), std::size_t{0});
    sf.shape.assign(static_cast<std::size_t>(R.depth()), 0);
    std::size_t t = 0;
    for (int v = 0; v < R.depth() && t < k && t < n; ++v) {
        while (t < k && t < n) {
            std::size_t pi = k, pj = n;
            for (std::size_t i = t; i < k && pi == k; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (R.valuation(M[i][j]) == v) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == k) break;
            std::swap(M[pi], M[t]);
            if (pj != t) {
                for (auto& row : M) std::swap(row[pj], row[t]);
                std::swap(sf.perm[pj], sf.perm[t]);
            }
            const Ring::Elem u = R.unit_inverse(R.unit_part(M[t][t]));
            for (auto& x : M[t]) x = R.mul(u, x);
            const Ring::Elem pivot = M[t][t];
            for (std::size_t i = 0; i < k; ++i) {
                if (i == t || M[i][t] == 0) continue;
                const Ring::Elem c = M[i][t];
                const Ring::Elem keep = R.valuation(c) >= v ? 0 : reduce_mod_gamma_pow(R, c, v);
                axpy_row(R, M[i], R.div_exact(R.sub(c, keep), pivot), M[t]);
            }
            sf.valuations.push_back(v);
            ++sf.shape[static_cast<std::size_t>(v)];
            ++t;
        }
    }
    M.resize(t);
    sf.permuted = M;
    sf.rows.assign(t, Vec(n, 0));
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < n; ++j) sf.rows[i][sf.perm[j]] = M[i][j];
    return sf;
}

LinearCode LinearCode::from_rows(const Ring& R, Matrix rows, bool allow_zero_columns) {
    if (rows.empty() || rows[0].empty()) throw InvalidArgument("generator matrix is empty");
    if (R.size() > 256) throw InvalidArgument("codes are limited to rings with at most 256 elements");
    const std::size_t n = rows[0].size();
    for (const auto& row : rows) {
        if (row.size() != n) throw InvalidArgument("generator matrix rows have different lengths");
        for (auto x : row)
            if (x >= R.size()) throw InvalidArgument("generator matrix entry outside " + R.name());
    }
    LinearCode C;
    C.ring_ = R;
    C.rows_ = std::move(rows);
    C.length_ = n;
    if (!allow_zero_columns && C.has_zero_column())
        throw InvalidArgument("generator matrix has an all-zero column");
    C.sf_ = standard_form(R, C.rows_);

    BigInt product = 1;
    for (std::size_t i = 0; i < C.sf_.rows.size(); ++i) {
        for (const auto& [beta, order] : R.additive_basis()) {
            Vec g(n);
            std::uint32_t ord = 1;
            for (std::size_t j = 0; j < n; ++j) {
                g[j] = R.mul(beta, C.sf_.rows[i][j]);
                ord = std::max(ord, R.additive_order(g[j]));
            }
            if (ord == 1) continue;
            C.basis_.generators.push_back(std::move(g));
            C.basis_.orders.push_back(ord);
            product *= ord;
        }
    }
    if (product != C.size()) throw Inconsistent("additive generators do not match the code size");
    return C;
}

std::pair<int, int> LinearCode::shape2() const {
    if (ring_.depth() == 1) return {sf_.shape[0], 0};
    if (ring_.depth() != 2) throw InvalidArgument("shape2: ring depth is not 2");
    return {sf_.shape[0], sf_.shape[1]};
}

int LinearCode::log_size() const {
    int s = 0;
    for (int v : sf_.valuations) s += ring_.depth() - v;
    return s;
}

BigInt LinearCode::size() const { return bigpow(BigInt(ring_.q()), static_cast<unsigned>(log_size())); }

std::uint64_t LinearCode::size_u64() const {
    const BigInt s = size();
    if (s > (BigInt(1) << 62)) throw BudgetExceeded("code too large to count in 64 bits");
    return static_cast<std::uint64_t>(s);
}

Vec LinearCode::column(std::size_t j) const {
    Vec c;
    for (const auto& row : rows_) c.push_back(row.at(j));
    return c;
}

Vec LinearCode::encode(const Vec& message) const {
    if (message.size() != rows_.size()) throw InvalidArgument("encode: message length mismatch");
    Vec out(length_, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < length_; ++j) out[j] = ring_.add(out[j], ring_.mul(message[i], rows_[i][j]));
    return out;
}

bool LinearCode::has_zero_column() const {
    for (std::size_t j = 0; j < length_; ++j) {
        bool zero = true;
        for (const auto& row : rows_) zero = zero && row[j] == 0;
        if (zero) return true;
    }
    return false;
}

void LinearCode::for_each_codeword(const std::function<void(const std::uint8_t*)>& fn, std::uint64_t budget) const {
    if (size() > budget) throw BudgetExceeded("code has " + to_string(size()) + " words, budget is " + std::to_string(budget));
    const auto& K = kernels::active();
    const kernels::AddSpec spec = kernels::AddSpec::for_ring(ring_);
    const std::size_t g = basis_.generators.size();
    std::vector<std::vector<std::uint8_t>> gens(g);
    for (std::size_t i = 0; i < g; ++i) gens[i].assign(basis_.generators[i].begin(), basis_.generators[i].end());
    std::vector<std::uint8_t> word(length_, 0);
    std::vector<std::uint32_t> digit(g, 0);
    fn(word.data());
    for (;;) {
        std::size_t j = 0;
        for (; j < g; ++j) {
            K.add_rows(word.data(), gens[j].data(), length_, spec);
            if (++digit[j] < basis_.orders[j]) break;
            digit[j] = 0;  // order * v_j = 0: the word is back to its value before this digit moved
        }
        if (j == g) return;
        fn(word.data());
    }
}

std::vector<Vec> LinearCode::codewords(std::uint64_t budget) const {
    std::vector<Vec> out;
    for_each_codeword([&](const std::uint8_t* w) { out.emplace_back(w, w + length_); }, budget);
    return out;
}

LinearCode dual_code(const LinearCode& C) {
    const Ring& R = C.ring();
    const StandardForm& sf = C.standard();
    const std::size_t n = C.length(), k = sf.permuted.size();
    Matrix M = sf.permuted;
    Matrix Q(n, Vec(n, 0));  // columns are tracked transforms
    for (std::size_t j = 0; j < n; ++j) Q[j][j] = 1;
    for (std::size_t t = k; t-- > 0;) {
        const Ring::Elem pivot = M[t][t];
        for (std::size_t j = 0; j < n; ++j) {
            if (j == t || M[t][j] == 0) continue;
            const Ring::Elem f = R.div_exact(M[t][j], pivot);
            for (std::size_t i = 0; i < k; ++i) M[i][j] = R.sub(M[i][j], R.mul(f, M[i][t]));
            for (std::size_t i = 0; i < n; ++i) Q[i][j] = R.sub(Q[i][j], R.mul(f, Q[i][t]));
        }
    }
    Matrix gens;
    for (std::size_t c = 0; c < n; ++c) {
        const Ring::Elem scale = c < k ? R.gamma_pow(R.depth() - sf.valuations[c]) : R.one();
        if (scale == 0) continue;
        Vec x(n, 0);
        for (std::size_t j = 0; j < n; ++j) x[sf.perm[j]] = R.mul(scale, Q[j][c]);
        gens.push_back(std::move(x));
    }
    if (gens.empty()) gens.push_back(Vec(n, 0));
    return LinearCode::from_rows(R, std::move(gens), true);
}

bool is_regular(const LinearCode& C) {
    for (std::size_t j = 0; j < C.length(); ++j) {
        bool unit = false;
        for (const auto& row : C.rows()) unit = unit || C.ring().is_unit(row[j]);
        if (!unit) return false;
    }
    return true;
}

Vec scalar_canonical(const Ring& R, const Vec& v, const std::vector<Ring::Elem>& scalars) {
    Vec best = v;
    for (auto lambda : scalars) {
        Vec w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) w[i] = R.mul(lambda, v[i]);
        if (w < best) best = std::move(w);
    }
    return best;
}

Vec associate_canonical(const Ring& R, const Vec& v) { return scalar_canonical(R, v, R.units()); }

bool is_projective(const LinearCode& C) {
    std::set<Vec> seen;
    for (std::size_t j = 0; j < C.length(); ++j)
        if (!seen.insert(associate_canonical(C.ring(), C.column(j))).second) return false;
    return true;
}

bool is_proper(const LinearCode& C, std::uint64_t budget) {
    bool proper = true;
    const Ring& R = C.ring();
    C.for_each_codeword(
        [&](const std::uint8_t* w) {
            std::uint64_t wt = 0;
            bool nonzero = false;
            for (std::size_t i = 0; i < C.length(); ++i) {
                wt += R.hom_weight(w[i]);
                nonzero = nonzero || w[i] != 0;
            }
            if (nonzero && wt == 0) proper = false;
        },
        budget);
    return proper;
}

std::uint64_t dual_minimum_weight(const LinearCode& C, std::uint64_t budget) {
    const LinearCode D = dual_code(C);
    const Ring& R = C.ring();
    std::uint64_t best = 0;
    D.for_each_codeword(
        [&](const std::uint8_t* w) {
            std::uint64_t wt = 0;
            for (std::size_t i = 0; i < D.length(); ++i) wt += R.hom_weight(w[i]);
            if (wt > 0 && (best == 0 || wt < best)) best = wt;
        },
        budget);
    return best;
}

bool dual_distance_at_least(const LinearCode& C, std::uint64_t d, std::uint64_t budget) {
    const std::uint64_t m = dual_minimum_weight(C, budget);
    return m == 0 || m >= d;
}

std::uint64_t projective_dual_threshold(const Ring& R) {
    if (R.depth() == 1) return 3;
    return (2 * std::uint64_t{R.q()} - 1) * ipow(R.q(), static_cast<unsigned>(R.depth() - 2));
}

LinearCode punctured(const LinearCode& C, std::size_t coordinate) {
    if (coordinate >= C.length()) throw InvalidArgument("punctured: coordinate out of range");
    if (C.length() == 1) throw InvalidArgument("punctured: cannot puncture a length-1 code");
    Matrix rows = C.rows();
    for (auto& row : rows) row.erase(row.begin() + static_cast<std::ptrdiff_t>(coordinate));
    return LinearCode::from_rows(C.ring(), std::move(rows), true);
}

LinearCode even_weight_subcode(const LinearCode& C, std::uint64_t budget) {
    const Ring& R = C.ring();
    const std::size_t n = C.length();
    std::vector<Vec> even;
    C.for_each_codeword(
        [&](const std::uint8_t* w) {
            std::uint64_t wt = 0;
            for (std::size_t i = 0; i < n; ++i) wt += R.hom_weight(w[i]);
            if (wt % 2 == 0) even.emplace_back(w, w + n);
        },
        budget);
    std::unordered_set<std::string> span{bytes_of(Vec(n, 0))};
    std::vector<Vec> span_list{Vec(n, 0)};
    Matrix rows;
    for (const auto& w : even) {
        if (span.count(bytes_of(w))) continue;
        rows.push_back(w);
        std::vector<Vec> grown;
        for (const auto& s : span_list)
            for (Ring::Elem r = 0; r < R.size(); ++r) {
                Vec x(n);
                for (std::size_t i = 0; i < n; ++i) x[i] = R.add(s[i], R.mul(r, w[i]));
                if (span.insert(bytes_of(x)).second) grown.push_back(std::move(x));
            }
        span_list.insert(span_list.end(), grown.begin(), grown.end());
    }
    if (span.size() != even.size()) throw Inconsistent("even-weight words do not form a subcode");
    if (rows.empty()) rows.push_back(Vec(n, 0));
    return LinearCode::from_rows(R, std::move(rows), true);
}

Replication replication_factor(const LinearCode& C, ReplicationGrouping grouping) {
    const Ring& R = C.ring();
    std::vector<Ring::Elem> scalars{R.one()};
    if (grouping == ReplicationGrouping::PrimeScalars)
        for (int i = 2; i < R.characteristic_prime(); ++i) scalars.push_back(R.lift_residue(static_cast<Field::Elem>(i)));
    else if (grouping == ReplicationGrouping::Associates)
        scalars = R.units();

    std::map<Vec, std::size_t> class_of;
    std::vector<std::size_t> first_column;
    std::vector<std::uint64_t> mult;
    for (std::size_t j = 0; j < C.length(); ++j) {
        auto [it, fresh] = class_of.emplace(scalar_canonical(R, C.column(j), scalars), first_column.size());
        if (fresh) {
            first_column.push_back(j);
            mult.push_back(0);
        }
        ++mult[it->second];
    }
    std::uint64_t t = 0;
    for (auto m : mult) t = std::gcd(t, m);
    Matrix rows(C.rows().size());
    for (std::size_t c = 0; c < first_column.size(); ++c)
        for (std::uint64_t rep = 0; rep < mult[c] / t; ++rep)
            for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(C.rows()[i][first_column[c]]);
    return Replication{t, mult, LinearCode::from_rows(R, std::move(rows), C.has_zero_column())};
}

}  // namespace swrg
