#include "swrg/algebra/polynomial.hpp"

#include "swrg/common.hpp"

#include <algorithm>
#include <sstream>

namespace swrg::poly {

namespace {

int mod(long long v, int m) {
    long long r = v % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

int degree(const Coeffs& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

Coeffs normalize(Coeffs a, int modulus) {
    for (auto& c : a) c = mod(c, modulus);
    a.resize(static_cast<std::size_t>(degree(a) + 1));
    return a;
}

Coeffs add(const Coeffs& a, const Coeffs& b, int modulus) {
    Coeffs r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return normalize(std::move(r), modulus);
}

Coeffs sub(const Coeffs& a, const Coeffs& b, int modulus) {
    Coeffs r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return normalize(std::move(r), modulus);
}

Coeffs mul(const Coeffs& a, const Coeffs& b, int modulus) {
    if (a.empty() || b.empty()) return {};
    std::vector<long long> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += static_cast<long long>(a[i]) * b[j];
    Coeffs out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = mod(r[i], modulus);
    return normalize(std::move(out), modulus);
}

Coeffs scale(const Coeffs& a, int c, int modulus) {
    Coeffs r(a);
    for (auto& x : r) x = mod(static_cast<long long>(x) * c, modulus);
    return normalize(std::move(r), modulus);
}

Coeffs rem_monic(const Coeffs& a, const Coeffs& monic, int modulus) {
    const int dm = degree(monic);
    if (dm < 0 || mod(monic[dm], modulus) != 1) throw InvalidArgument("rem_monic: divisor is not monic");
    Coeffs r = normalize(a, modulus);
    for (int d = degree(r); d >= dm; d = degree(r)) {
        const int c = r[d];
        for (int i = 0; i <= dm; ++i) r[d - dm + i] = mod(r[d - dm + i] - static_cast<long long>(c) * monic[i], modulus);
        r = normalize(std::move(r), modulus);
    }
    return r;
}

Coeffs negate_variable(const Coeffs& a, int modulus) {
    Coeffs r(a);
    for (std::size_t i = 1; i < r.size(); i += 2) r[i] = mod(-r[i], modulus);
    return normalize(std::move(r), modulus);
}

Coeffs square_variable(const Coeffs& a) {
    if (a.empty()) return {};
    Coeffs r(2 * a.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[2 * i] = a[i];
    return r;
}

bool is_primitive(const Coeffs& f_in, int p) {
    const Coeffs f = normalize(f_in, p);
    const int d = degree(f);
    if (d < 1 || f[d] != 1 || f[0] == 0) return false;
    const std::uint64_t order = ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(d)) - 1;
    const Coeffs x = rem_monic({0, 1}, f, p);
    Coeffs power = x;
    for (std::uint64_t k = 1; k <= order; ++k) {
        if (power == Coeffs{1}) return k == order;
        power = rem_monic(mul(power, x, p), f, p);
    }
    return false;
}

std::string to_string(const Coeffs& a, char var) {
    std::ostringstream os;
    bool first = true;
    for (int i = degree(a); i >= 0; --i) {
        if (a[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << a[i];
        } else {
            if (a[i] != 1) os << a[i];
            os << var;
            if (i > 1) os << '^' << i;
        }
    }
    if (first) os << '0';
    return os.str();
}

}  // namespace swrg::poly
