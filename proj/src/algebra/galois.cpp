#include "swrg/algebra/galois.hpp"

#include "swrg/common.hpp"

namespace swrg {

poly::Coeffs hensel_lift(const poly::Coeffs& f_in) {
    const poly::Coeffs f = poly::normalize(f_in, 2);
    const int d = poly::degree(f);
    if (d < 1 || !poly::is_primitive(f, 2)) throw InvalidArgument("hensel_lift: " + poly::to_string(f) + " is not primitive over F_2");
    poly::Coeffs even, odd;
    for (int i = 0; i <= d; ++i) (i % 2 == 0 ? even : odd).push_back(f[i]);
    poly::Coeffs h = poly::sub(poly::mul(even, even, 4), poly::mul({0, 1}, poly::mul(odd, odd, 4), 4), 4);
    if (d % 2 == 1) h = poly::scale(h, -1, 4);
    if (poly::degree(h) != d || h[d] != 1) throw Inconsistent("hensel_lift: lifted polynomial is not monic");
    return h;
}

bool graeffe_identity(const poly::Coeffs& f_in, const poly::Coeffs& h) {
    const poly::Coeffs f = poly::normalize(f_in, 2);
    const poly::Coeffs lhs = poly::normalize(poly::square_variable(h), 4);
    const poly::Coeffs rhs = poly::mul(f, poly::negate_variable(f, 4), 4);
    return lhs == rhs || lhs == poly::scale(rhs, -1, 4);
}

bool is_basic_primitive(const poly::Coeffs& h_in) {
    const poly::Coeffs h = poly::normalize(h_in, 4);
    const int r = poly::degree(h);
    if (r < 1 || h[r] != 1) return false;
    if (!poly::is_primitive(poly::normalize(h, 2), 2)) return false;
    // x^{2^r - 1} == 1 modulo (h, 4)
    std::uint64_t e = (std::uint64_t{1} << r) - 1;
    poly::Coeffs base = poly::rem_monic({0, 1}, h, 4), acc{1};
    while (e) {
        if (e & 1) acc = poly::rem_monic(poly::mul(acc, base, 4), h, 4);
        base = poly::rem_monic(poly::mul(base, base, 4), h, 4);
        e >>= 1;
    }
    return acc == poly::Coeffs{1};
}

namespace {

void require_gr4(const Ring& R) {
    if (R.family() != RingFamily::GR4) throw InvalidArgument("expected a Galois ring GR(4,r)");
}

// Z4 coefficients of x in the basis xi^i.
std::vector<std::uint32_t> gr4_coeffs(const Ring& R, Ring::Elem x) {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(R.params().r));
    for (auto& v : c) {
        v = x & 3u;
        x >>= 2;
    }
    return c;
}

}  // namespace

Ring::Elem gr4_xi(const Ring& R) {
    require_gr4(R);
    const poly::Coeffs x = poly::rem_monic({0, 1}, R.gr4_modulus(), 4);
    Ring::Elem code = 0;
    for (int i = static_cast<int>(x.size()) - 1; i >= 0; --i) code = code * 4 + static_cast<Ring::Elem>(x[i]);
    return code;
}

Ring::Elem gr4_frobenius(const Ring& R, Ring::Elem x) {
    require_gr4(R);
    const Ring::Elem xi2 = R.mul(gr4_xi(R), gr4_xi(R));
    Ring::Elem out = 0, power = R.one();
    for (std::uint32_t c : gr4_coeffs(R, x)) {
        for (std::uint32_t k = 0; k < c; ++k) out = R.add(out, power);
        power = R.mul(power, xi2);
    }
    return out;
}

std::uint32_t gr4_trace(const Ring& R, Ring::Elem x) {
    require_gr4(R);
    Ring::Elem acc = 0, conj = x;
    for (int i = 0; i < R.params().r; ++i) {
        acc = R.add(acc, conj);
        conj = gr4_frobenius(R, conj);
    }
    if (acc > 3) throw Inconsistent("gr4_trace: result outside Z4");
    return acc;
}

std::vector<Ring::Elem> teichmuller_set(const Ring& R) {
    require_gr4(R);
    std::vector<Ring::Elem> out{0};
    const Ring::Elem xi = gr4_xi(R);
    Ring::Elem power = R.one();
    for (std::uint32_t j = 0; j + 1 < R.q(); ++j) {
        out.push_back(power);
        power = R.mul(power, xi);
    }
    return out;
}

Field::Elem field_trace(const Field& F, Field::Elem x) { return F.trace(x); }

Ring::Elem fqu_trace(const Ring& big, const Ring& small, Ring::Elem x) {
    if (big.family() != RingFamily::FqU || small.family() != RingFamily::FqU || small.q() != static_cast<std::uint32_t>(big.characteristic_prime()) ||
        big.characteristic_prime() != small.characteristic_prime())
        throw InvalidArgument("fqu_trace: expected F_{p^f}+uF_{p^f} and F_p+uF_p");
    const Field& F = big.residue_field();
    const Field::Elem a = x % big.q(), b = x / big.q();
    return F.trace(a) + small.q() * F.trace(b);
}

}  // namespace swrg
