#include "swrg/algebra/field.hpp"

#include "swrg/common.hpp"

#include <map>
#include <utility>

namespace swrg {

namespace {

// Primitive polynomials, lowest coefficient first (standard tables).
const std::map<std::pair<int, int>, poly::Coeffs>& primitive_table() {
    static const std::map<std::pair<int, int>, poly::Coeffs> table = {
        {{2, 1}, {1, 1}},
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {{2, 9}, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
        {{2, 10}, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {{3, 1}, {1, 1}},
        {{3, 2}, {2, 1, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 1, 0, 0, 1}},
        {{3, 5}, {1, 2, 0, 0, 0, 1}},
        {{3, 6}, {2, 1, 0, 0, 0, 0, 1}},
        {{5, 1}, {3, 1}},
        {{5, 2}, {2, 1, 1}},
        {{5, 3}, {2, 3, 0, 1}},
        {{5, 4}, {2, 2, 1, 0, 1}},
        {{7, 1}, {4, 1}},
        {{7, 2}, {3, 1, 1}},
        {{7, 3}, {2, 3, 0, 1}},
    };
    return table;
}

// Lexicographically first primitive monic polynomial; used for (p, f) outside the table.
poly::Coeffs search_primitive(int p, int f) {
    const std::uint64_t count = ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(f));
    for (std::uint64_t code = 1; code < count; ++code) {
        poly::Coeffs c(static_cast<std::size_t>(f) + 1, 0);
        std::uint64_t rest = code;
        for (int i = 0; i < f; ++i) {
            c[i] = static_cast<int>(rest % p);
            rest /= p;
        }
        c[f] = 1;
        if (poly::is_primitive(c, p)) return c;
    }
    throw InvalidArgument("no primitive polynomial found");
}

}  // namespace

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

FieldSpec default_field_spec(int p, int f) {
    if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
    if (f < 1) throw InvalidArgument("field extension degree must be >= 1");
    const auto& table = primitive_table();
    auto it = table.find({p, f});
    return FieldSpec{p, f, it != table.end() ? it->second : search_primitive(p, f)};
}

Field Field::make(int p, int f) { return make(default_field_spec(p, f)); }

Field Field::make(const FieldSpec& spec) {
    if (!is_prime(spec.p)) throw InvalidArgument("field characteristic " + std::to_string(spec.p) + " is not prime");
    if (spec.f < 1 || poly::degree(spec.modulus) != spec.f)
        throw InvalidArgument("field modulus must have degree f");
    const std::uint64_t size = ipow(static_cast<std::uint64_t>(spec.p), static_cast<unsigned>(spec.f));
    if (size > (1u << 20)) throw InvalidArgument("field too large");
    if (!poly::is_primitive(spec.modulus, spec.p))
        throw InvalidArgument("field modulus " + poly::to_string(spec.modulus) + " is not primitive over F_" +
                              std::to_string(spec.p));

    auto impl = std::make_shared<Impl>();
    impl->spec = spec;
    impl->size = static_cast<std::uint32_t>(size);
    impl->exp.resize(size - 1);
    impl->log.assign(size, 0);

    // Walk the powers of x in F_p[x]/(modulus), encoding each residue by its base-p digits.
    poly::Coeffs power{1};
    const poly::Coeffs x = poly::rem_monic({0, 1}, spec.modulus, spec.p);
    for (std::uint64_t k = 0; k + 1 < size; ++k) {
        Elem code = 0;
        for (int i = spec.f - 1; i >= 0; --i)
            code = code * spec.p + static_cast<Elem>(i < static_cast<int>(power.size()) ? power[i] : 0);
        impl->exp[k] = code;
        impl->log[code] = static_cast<std::uint32_t>(k);
        power = poly::rem_monic(poly::mul(power, x, spec.p), spec.modulus, spec.p);
    }
    Field out;
    out.impl_ = std::move(impl);
    return out;
}

std::vector<int> Field::digits(Elem a) const {
    std::vector<int> d(static_cast<std::size_t>(degree()));
    for (auto& x : d) {
        x = static_cast<int>(a % p());
        a /= p();
    }
    return d;
}

Field::Elem Field::from_digits(const std::vector<int>& d) const {
    Elem code = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) code = code * p() + static_cast<Elem>(d[i]);
    return code;
}

Field::Elem Field::add(Elem a, Elem b) const {
    const Elem pp = static_cast<Elem>(p());
    Elem out = 0, place = 1;
    for (int i = 0; i < degree(); ++i) {
        out += ((a % pp + b % pp) % pp) * place;
        a /= pp;
        b /= pp;
        place *= pp;
    }
    return out;
}

Field::Elem Field::neg(Elem a) const {
    const Elem pp = static_cast<Elem>(p());
    Elem out = 0, place = 1;
    for (int i = 0; i < degree(); ++i) {
        out += ((pp - a % pp) % pp) * place;
        a /= pp;
        place *= pp;
    }
    return out;
}

Field::Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Field::Elem Field::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return impl_->exp[(impl_->log[a] + impl_->log[b]) % (size() - 1)];
}

Field::Elem Field::inv(Elem a) const {
    if (a == 0) throw InvalidArgument("inverse of zero");
    return impl_->exp[(size() - 1 - impl_->log[a]) % (size() - 1)];
}

Field::Elem Field::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return impl_->exp[(static_cast<std::uint64_t>(impl_->log[a]) * e) % (size() - 1)];
}

Field::Elem Field::trace(Elem a) const {
    Elem acc = 0, conj = a;
    for (int i = 0; i < degree(); ++i) {
        acc = add(acc, conj);
        conj = pow(conj, static_cast<std::uint64_t>(p()));
    }
    return acc;  // lies in the prime field, i.e. acc < p
}

bool Field::is_square(Elem a) const {
    if (a == 0) return true;
    if (p() == 2) return true;
    return log(a) % 2 == 0;
}

}  // namespace swrg
