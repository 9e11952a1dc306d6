#include "swrg/algebra/ring.hpp"

#include "swrg/algebra/galois.hpp"
#include "swrg/common.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace swrg {

namespace {

constexpr std::uint32_t kMaxRingSize = 1u << 20;
constexpr std::uint32_t kTableSize = 256;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::uint32_t parse_uint(const std::string& s, const std::string& what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidArgument("malformed " + what + " '" + s + "'");
    return static_cast<std::uint32_t>(std::stoul(s));
}

}  // namespace

Ring Ring::zpm(int p, int m) {
    if (!is_prime(p)) throw InvalidArgument("Z_{p^m}: p=" + std::to_string(p) + " is not prime");
    if (m < 1) throw InvalidArgument("Z_{p^m}: m must be >= 1");
    const std::uint64_t size = ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(m));
    if (size > kMaxRingSize) throw InvalidArgument("Z_{p^m}: ring too large");
    Ring R;
    R.impl_ = std::make_shared<Impl>();
    auto& I = *R.impl_;
    I.params.family = RingFamily::Zpm;
    I.params.p = p;
    I.params.m = m;
    I.size = static_cast<std::uint32_t>(size);
    I.q = static_cast<std::uint32_t>(p);
    I.depth = m;
    I.gamma = static_cast<Elem>(p % size);
    I.residue = Field::make(p, 1);
    I.add_basis = {{1, I.size}};
    R.finish();
    return R;
}

Ring Ring::fqu(int p, int f) {
    const Field F = Field::make(p, f);  // validates p
    const std::uint64_t size = static_cast<std::uint64_t>(F.size()) * F.size();
    if (size > kMaxRingSize) throw InvalidArgument("F_q+uF_q: ring too large");
    Ring R;
    R.impl_ = std::make_shared<Impl>();
    auto& I = *R.impl_;
    I.params.family = RingFamily::FqU;
    I.params.p = p;
    I.params.f = f;
    I.size = static_cast<std::uint32_t>(size);
    I.q = F.size();
    I.depth = 2;
    I.gamma = I.q;
    I.residue = F;
    for (int i = 0; i < f; ++i) I.add_basis.push_back({static_cast<Elem>(ipow(p, i)), static_cast<std::uint32_t>(p)});
    for (int i = 0; i < f; ++i) I.add_basis.push_back({static_cast<Elem>(I.q * ipow(p, i)), static_cast<std::uint32_t>(p)});
    R.finish();
    return R;
}

Ring Ring::gr4(int r, const poly::Coeffs& h_in) {
    if (r < 1 || r > 10) throw InvalidArgument("GR(4,r): r must be in 1..10");
    poly::Coeffs h = h_in.empty() ? hensel_lift(default_field_spec(2, r).modulus) : poly::normalize(h_in, 4);
    if (poly::degree(h) != r) throw InvalidArgument("GR(4,r): modulus must have degree r");
    if (!is_basic_primitive(h))
        throw InvalidArgument("GR(4,r): " + poly::to_string(h) + " fails the Hensel identity (not basic primitive)");
    Ring R;
    R.impl_ = std::make_shared<Impl>();
    auto& I = *R.impl_;
    I.params.family = RingFamily::GR4;
    I.params.p = 2;
    I.params.r = r;
    I.params.h = h;
    I.q = 1u << r;
    I.size = I.q * I.q;
    I.depth = 2;
    I.gamma = 2;
    I.residue = Field::make(FieldSpec{2, r, poly::normalize(h, 2)});
    for (int i = 0; i < r; ++i) I.add_basis.push_back({static_cast<Elem>(ipow(4, i)), 4u});
    R.finish();
    return R;
}

Ring Ring::make(const RingParams& prm) {
    switch (prm.family) {
        case RingFamily::Zpm: return zpm(prm.p, prm.m);
        case RingFamily::FqU: return fqu(prm.p, prm.f);
        case RingFamily::GR4: return gr4(prm.r, prm.h);
    }
    throw InvalidArgument("unknown ring family");
}

Ring Ring::parse_name(const std::string& text_in) {
    std::string text;
    for (char c : text_in) text += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    text = trim(text);
    auto args = [&](std::size_t from) {
        std::vector<int> out;
        std::stringstream ss(text.substr(from));
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(static_cast<int>(parse_uint(trim(item), "ring parameter")));
        return out;
    };
    if (text == "f2u" || text == "f2+uf2") return fqu(2, 1);
    if (text.rfind("zpm:", 0) == 0) {
        auto a = args(4);
        if (a.size() != 2) throw InvalidArgument("expected zpm:p,m");
        return zpm(a[0], a[1]);
    }
    if (text.rfind("fqu:", 0) == 0) {
        auto a = args(4);
        if (a.empty() || a.size() > 2) throw InvalidArgument("expected fqu:p[,f]");
        return fqu(a[0], a.size() == 2 ? a[1] : 1);
    }
    if (text.rfind("gr4:", 0) == 0) {
        auto a = args(4);
        if (a.size() != 1) throw InvalidArgument("expected gr4:r");
        return gr4(a[0]);
    }
    if (text.size() > 1 && text[0] == 'z') {
        const std::uint32_t n = parse_uint(text.substr(1), "ring size");
        for (int p = 2; p <= static_cast<int>(n); ++p) {
            if (n % p) continue;
            int m = 0;
            std::uint32_t rest = n;
            while (rest % p == 0) {
                rest /= p;
                ++m;
            }
            if (rest != 1) break;
            return zpm(p, m);
        }
        throw InvalidArgument("Z" + std::to_string(n) + " is not a chain ring Z_{p^m}");
    }
    if (text.size() > 2 && text[0] == 'f' && text.back() == 'u') {
        const std::uint32_t q = parse_uint(text.substr(1, text.size() - 2), "residue size");
        for (int p = 2; p <= static_cast<int>(q); ++p) {
            if (q % p) continue;
            int f = 0;
            std::uint32_t rest = q;
            while (rest % p == 0) {
                rest /= p;
                ++f;
            }
            if (rest == 1) return fqu(p, f);
            break;
        }
        throw InvalidArgument("F" + std::to_string(q) + " is not a prime power");
    }
    throw InvalidArgument("unsupported ring '" + text_in + "'");
}

void Ring::finish() {
    auto& I = *impl_;
    const std::uint32_t n = I.size;
    I.neg_table.resize(n);
    I.val_table.resize(n);
    I.weight_table.resize(n);
    for (Elem a = 0; a < n; ++a) {
        I.neg_table[a] = neg_slow(a);
        I.val_table[a] = valuation_slow(a);
        I.weight_table[a] = hom_weight_slow(a);
    }
    if (n <= kTableSize) {
        I.add_table.resize(std::size_t{n} * n);
        I.mul_table.resize(std::size_t{n} * n);
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) {
                I.add_table[a * n + b] = add_slow(a, b);
                I.mul_table[a * n + b] = mul_slow(a, b);
            }
        I.add_table_u8.assign(I.add_table.begin(), I.add_table.end());
    }
    if (I.params.family == RingFamily::Zpm && n <= 128)
        I.add_kind = AddKind::Cyclic;
    else if (I.params.p == 2 && I.params.family == RingFamily::FqU && n <= kTableSize)
        I.add_kind = AddKind::Xor;
    else if (n <= 16)
        I.add_kind = AddKind::Table;
    else
        I.add_kind = AddKind::Generic;

    I.reps.clear();
    for (Field::Elem x = 0; x < I.q; ++x) I.reps.push_back(lift_residue(x));
}

Ring::Elem Ring::add_slow(Elem a, Elem b) const {
    const auto& I = *impl_;
    switch (I.params.family) {
        case RingFamily::Zpm: return (a + b) % I.size;
        case RingFamily::FqU:
            return I.residue.add(a % I.q, b % I.q) + I.q * I.residue.add(a / I.q, b / I.q);
        case RingFamily::GR4: {
            Elem out = 0;
            for (int i = 0; i < I.params.r; ++i) out |= ((((a >> (2 * i)) & 3u) + ((b >> (2 * i)) & 3u)) & 3u) << (2 * i);
            return out;
        }
    }
    return 0;
}

Ring::Elem Ring::neg_slow(Elem a) const {
    const auto& I = *impl_;
    switch (I.params.family) {
        case RingFamily::Zpm: return (I.size - a) % I.size;
        case RingFamily::FqU: return I.residue.neg(a % I.q) + I.q * I.residue.neg(a / I.q);
        case RingFamily::GR4: {
            Elem out = 0;
            for (int i = 0; i < I.params.r; ++i) out |= ((4u - ((a >> (2 * i)) & 3u)) & 3u) << (2 * i);
            return out;
        }
    }
    return 0;
}

Ring::Elem Ring::mul_slow(Elem a, Elem b) const {
    const auto& I = *impl_;
    switch (I.params.family) {
        case RingFamily::Zpm: return static_cast<Elem>((std::uint64_t{a} * b) % I.size);
        case RingFamily::FqU: {
            const Field& F = I.residue;
            const Elem a0 = a % I.q, a1 = a / I.q, b0 = b % I.q, b1 = b / I.q;
            return F.mul(a0, b0) + I.q * F.add(F.mul(a0, b1), F.mul(a1, b0));
        }
        case RingFamily::GR4: {
            const int r = I.params.r;
            poly::Coeffs pa(r), pb(r);
            for (int i = 0; i < r; ++i) {
                pa[i] = static_cast<int>((a >> (2 * i)) & 3u);
                pb[i] = static_cast<int>((b >> (2 * i)) & 3u);
            }
            const poly::Coeffs prod = poly::rem_monic(poly::mul(pa, pb, 4), I.params.h, 4);
            Elem out = 0;
            for (int i = static_cast<int>(prod.size()) - 1; i >= 0; --i) out = out * 4 + static_cast<Elem>(prod[i]);
            return out;
        }
    }
    return 0;
}

int Ring::valuation_slow(Elem a) const {
    const auto& I = *impl_;
    if (a == 0) return I.depth;
    switch (I.params.family) {
        case RingFamily::Zpm: {
            int v = 0;
            while (a % I.params.p == 0) {
                a /= I.params.p;
                ++v;
            }
            return v;
        }
        case RingFamily::FqU: return a % I.q != 0 ? 0 : 1;
        case RingFamily::GR4: {
            for (int i = 0; i < I.params.r; ++i)
                if ((a >> (2 * i)) & 1u) return 0;
            return 1;
        }
    }
    return 0;
}

std::uint32_t Ring::hom_weight_slow(Elem a) const {
    const auto& I = *impl_;
    if (a == 0) return 0;
    if (I.depth == 1) return 1;
    const int v = valuation_slow(a);
    if (v == I.depth - 1) return static_cast<std::uint32_t>(ipow(I.q, I.depth - 1));
    return static_cast<std::uint32_t>((I.q - 1) * ipow(I.q, I.depth - 2));
}

std::uint32_t Ring::max_weight() const {
    return depth() == 1 ? 1u : static_cast<std::uint32_t>(ipow(q(), depth() - 1));
}

Ring::Elem Ring::gamma_pow(int j) const {
    if (j < 0) throw InvalidArgument("gamma_pow: negative exponent");
    return j >= depth() ? 0 : pow(gamma(), static_cast<std::uint64_t>(j));
}

Ring::Elem Ring::pow(Elem a, std::uint64_t e) const {
    Elem acc = one(), base = a;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

Ring::Elem Ring::unit_inverse(Elem u) const {
    if (!is_unit(u)) throw InvalidArgument("unit_inverse: " + format(u) + " is not a unit");
    return pow(u, unit_count() - 1);
}

Ring::Elem Ring::unit_part(Elem a) const {
    const auto& I = *impl_;
    if (a == 0) return one();
    const int v = valuation(a);
    if (v == 0) return a;
    switch (I.params.family) {
        case RingFamily::Zpm: return static_cast<Elem>(a / ipow(I.params.p, v));
        case RingFamily::FqU: return a / I.q;
        case RingFamily::GR4: {
            Elem out = 0;
            for (int i = 0; i < I.params.r; ++i) out |= (((a >> (2 * i)) & 3u) >> 1) << (2 * i);
            return out;
        }
    }
    return one();
}

Ring::Elem Ring::div_exact(Elem b, Elem a) const {
    if (b == 0) return 0;
    const int va = valuation(a), vb = valuation(b);
    if (vb < va) throw InvalidArgument("div_exact: " + format(b) + " is not a multiple of " + format(a));
    return mul(mul(unit_inverse(unit_part(a)), unit_part(b)), gamma_pow(vb - va));
}

std::vector<Ring::Elem> Ring::elements() const {
    std::vector<Elem> out(size());
    std::iota(out.begin(), out.end(), Elem{0});
    return out;
}

std::vector<Ring::Elem> Ring::units() const {
    std::vector<Elem> out;
    for (Elem a = 0; a < size(); ++a)
        if (is_unit(a)) out.push_back(a);
    return out;
}

std::uint32_t Ring::additive_order(Elem a) const {
    const auto& I = *impl_;
    if (a == 0) return 1;
    switch (I.params.family) {
        case RingFamily::Zpm: return I.size / std::gcd(a, I.size);
        case RingFamily::FqU: return static_cast<std::uint32_t>(I.params.p);
        case RingFamily::GR4: return valuation(a) == 0 ? 4u : 2u;
    }
    return 1;
}

Ring::Elem Ring::lift_residue(Field::Elem x) const {
    const auto& I = *impl_;
    if (x >= I.q) throw InvalidArgument("lift_residue: not a residue field element");
    if (I.params.family != RingFamily::GR4 || x == 0) return x;
    return pow(gr4_xi(*this), I.residue.log(x));
}

Field::Elem Ring::reduce(Elem a) const {
    const auto& I = *impl_;
    switch (I.params.family) {
        case RingFamily::Zpm: return a % static_cast<Elem>(I.params.p);
        case RingFamily::FqU: return a % I.q;
        case RingFamily::GR4: {
            Field::Elem out = 0;
            for (int i = 0; i < I.params.r; ++i) out |= ((a >> (2 * i)) & 1u) << i;
            return out;
        }
    }
    return 0;
}

std::string Ring::format(Elem a) const {
    const auto& I = *impl_;
    if (a >= I.size) throw InvalidArgument("format: element out of range");
    switch (I.params.family) {
        case RingFamily::Zpm: return std::to_string(a);
        case RingFamily::FqU: {
            const Elem lo = a % I.q, hi = a / I.q;
            if (hi == 0) return std::to_string(lo);
            std::string s = hi == 1 ? "X" : std::to_string(hi) + "X";
            if (lo != 0) s += "+" + std::to_string(lo);
            return s;
        }
        case RingFamily::GR4: {
            std::string s;
            for (int i = 0; i < I.params.r; ++i) {
                if (i) s += ',';
                s += std::to_string((a >> (2 * i)) & 3u);
            }
            return s;
        }
    }
    return "";
}

Ring::Elem Ring::parse(const std::string& token_in) const {
    const auto& I = *impl_;
    const std::string token = trim(token_in);
    if (token.empty()) throw InvalidArgument("empty ring element");
    switch (I.params.family) {
        case RingFamily::Zpm: {
            const std::uint32_t v = parse_uint(token, "element of " + name());
            if (v >= I.size) throw InvalidArgument("element " + token + " out of range for " + name());
            return v;
        }
        case RingFamily::FqU: {
            Elem lo = 0, hi = 0;
            bool seen_lo = false, seen_hi = false;
            std::stringstream ss(token);
            std::string term;
            while (std::getline(ss, term, '+')) {
                term = trim(term);
                if (term.empty()) throw InvalidArgument("malformed element '" + token + "'");
                if (term.back() == 'X' || term.back() == 'x' || term.back() == 'u') {
                    const std::string c = trim(term.substr(0, term.size() - 1));
                    if (seen_hi) throw InvalidArgument("malformed element '" + token + "'");
                    hi = c.empty() ? 1 : parse_uint(c, "coefficient");
                    seen_hi = true;
                } else {
                    if (seen_lo) throw InvalidArgument("malformed element '" + token + "'");
                    lo = parse_uint(term, "coefficient");
                    seen_lo = true;
                }
            }
            if (lo >= I.q || hi >= I.q) throw InvalidArgument("element '" + token + "' out of range for " + name());
            return lo + I.q * hi;
        }
        case RingFamily::GR4: {
            std::stringstream ss(token);
            std::string item;
            Elem out = 0;
            int i = 0;
            while (std::getline(ss, item, ',')) {
                const std::uint32_t c = parse_uint(trim(item), "Z4 coefficient");
                if (c > 3 || i >= I.params.r) throw InvalidArgument("element '" + token + "' out of range for " + name());
                out |= c << (2 * i++);
            }
            return out;
        }
    }
    return 0;
}

std::string Ring::name() const {
    const auto& I = *impl_;
    switch (I.params.family) {
        case RingFamily::Zpm: return "Z" + std::to_string(I.size);
        case RingFamily::FqU: return "F" + std::to_string(I.q) + "+uF" + std::to_string(I.q);
        case RingFamily::GR4: return "GR(4," + std::to_string(I.params.r) + ")";
    }
    return "";
}

}  // namespace swrg
