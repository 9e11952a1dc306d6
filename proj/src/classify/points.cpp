#include "swrg/classify/points.hpp"

#include <algorithm>

namespace swrg {

namespace {

bool unit_normalized(const Ring& R, const Vec& v) {
    for (auto x : v)
        if (R.is_unit(x)) return x == R.one();
    return false;
}

}  // namespace

std::vector<Vec> projective_points(const Ring& R, std::size_t ell) {
    if (ell == 0 || ell > 5) throw InvalidArgument("projective_points: need 1 <= l <= 5");
    const std::uint64_t total = ipow(R.size(), static_cast<unsigned>(ell));
    if (total > (std::uint64_t{1} << 24)) throw BudgetExceeded("projective_points: R^l too large");
    std::vector<Vec> out;
    Vec v(ell);
    for (std::uint64_t t = 0; t < total; ++t) {
        std::uint64_t x = t;
        for (std::size_t i = 0; i < ell; ++i, x /= R.size()) v[i] = static_cast<Ring::Elem>(x % R.size());
        if (unit_normalized(R, v)) out.push_back(v);
    }
    return out;
}

std::vector<Vec> shape_points(const Ring& R, int k1, int k2) {
    if (R.depth() != 2) throw InvalidArgument("shape_points: ring must have depth 2");
    if (k1 < 1 || k2 < 0 || k1 + k2 > 8) throw InvalidArgument("shape_points: need k1 >= 1, k2 >= 0, k1 + k2 <= 8");
    const std::uint64_t top = ipow(R.size(), static_cast<unsigned>(k1));
    std::vector<Vec> out;
    Vec v(static_cast<std::size_t>(k1 + k2));
    for (std::uint64_t t = 0; t < top; ++t) {
        std::uint64_t x = t;
        for (int i = 0; i < k1; ++i, x /= R.size()) v[i] = static_cast<Ring::Elem>(x % R.size());
        Vec a(v.begin(), v.begin() + k1);
        if (!unit_normalized(R, a)) continue;
        for (std::uint64_t bmask = 0; bmask < (std::uint64_t{1} << k2); ++bmask) {
            for (int j = 0; j < k2; ++j) v[k1 + j] = (bmask >> j) & 1 ? R.gamma() : 0;
            out.push_back(v);
        }
    }
    // unit vectors first, rest in enumeration order
    std::vector<Vec> head;
    for (int i = 0; i < k1; ++i) {
        Vec e(static_cast<std::size_t>(k1 + k2), 0);
        e[i] = R.one();
        head.push_back(e);
    }
    std::vector<Vec> rest;
    for (auto& p : out)
        if (std::find(head.begin(), head.end(), p) == head.end()) rest.push_back(std::move(p));
    head.insert(head.end(), rest.begin(), rest.end());
    return head;
}

std::vector<Vec> shape_messages(const Ring& R, int k1, int k2) {
    const std::uint64_t top = ipow(R.size(), static_cast<unsigned>(k1));
    std::vector<Vec> out;
    Vec m(static_cast<std::size_t>(k1 + k2));
    for (std::uint64_t bmask = 0; bmask < (std::uint64_t{1} << k2); ++bmask)
        for (std::uint64_t t = 0; t < top; ++t) {
            std::uint64_t x = t;
            for (int i = 0; i < k1; ++i, x /= R.size()) m[i] = static_cast<Ring::Elem>(x % R.size());
            for (int j = 0; j < k2; ++j) m[k1 + j] = (bmask >> j) & 1 ? R.one() : 0;
            out.push_back(m);
        }
    return out;
}

}  // namespace swrg
