#pragma once

#include "swrg/algebra/field.hpp"
#include "swrg/algebra/polynomial.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace swrg {

enum class RingFamily { Zpm, FqU, GR4 };

/// Construction parameters. Zpm uses (p, m); FqU uses (p, f) for F_{p^f}+uF_{p^f};
/// GR4 uses r and an optional basic primitive polynomial h over Z4 (Hensel lift of the
/// default binary primitive polynomial when empty).
struct RingParams {
    RingFamily family = RingFamily::Zpm;
    int p = 2;
    int m = 2;
    int f = 1;
    int r = 1;
    poly::Coeffs h;
};

/// How addition of encoded elements can be vectorised.
enum class AddKind {
    Cyclic,  // Z_M with M <= 128: a + b mod M
    Xor,     // characteristic-2 vector spaces: a ^ b
    Table,   // arbitrary table, |R| <= 16
    Generic  // no byte-lane shortcut
};

/// Finite chain ring. Elements are dense integers 0..size-1:
///   Zpm: the residue itself;  FqU: a + q*b for a+ub;  GR4: sum c_i 4^i over the basis xi^i.
/// Immutable and cheap to copy.
class Ring {
public:
    using Elem = std::uint32_t;

    static Ring zpm(int p, int m);
    static Ring fqu(int p, int f = 1);
    static Ring gr4(int r, const poly::Coeffs& h = {});
    static Ring make(const RingParams& params);
    /// Parses "z4", "f2u", "zpm:p,m", "fqu:p[,f]", "gr4:r".
    static Ring parse_name(const std::string& text);

    RingFamily family() const { return impl_->params.family; }
    const RingParams& params() const { return impl_->params; }
    std::uint32_t size() const { return impl_->size; }
    std::uint32_t q() const { return impl_->q; }
    int depth() const { return impl_->depth; }
    int characteristic_prime() const { return impl_->params.p; }
    std::uint32_t unit_count() const { return impl_->size - impl_->size / impl_->q; }
    /// Residue field of the ring (F_q).
    const Field& residue_field() const { return impl_->residue; }
    /// The modulus h for GR4 (empty otherwise).
    const poly::Coeffs& gr4_modulus() const { return impl_->params.h; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem gamma() const { return impl_->gamma; }
    Elem gamma_pow(int j) const;

    Elem add(Elem a, Elem b) const {
        return impl_->add_table.empty() ? add_slow(a, b) : impl_->add_table[a * impl_->size + b];
    }
    Elem mul(Elem a, Elem b) const {
        return impl_->mul_table.empty() ? mul_slow(a, b) : impl_->mul_table[a * impl_->size + b];
    }
    Elem neg(Elem a) const { return impl_->neg_table.empty() ? neg_slow(a) : impl_->neg_table[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    /// Largest j with a in (gamma^j); depth() for zero.
    int valuation(Elem a) const { return impl_->val_table.empty() ? valuation_slow(a) : impl_->val_table[a]; }
    bool is_unit(Elem a) const { return valuation(a) == 0; }
    Elem unit_inverse(Elem u) const;
    /// a = unit * gamma^valuation(a); returns that unit (one() for zero).
    Elem unit_part(Elem a) const;
    /// Some t with t*a == b; throws InvalidArgument when valuation(b) < valuation(a).
    Elem div_exact(Elem b, Elem a) const;

    /// Homogeneous weight: 0, q^{e-1} on the socle, (q-1)q^{e-2} elsewhere; Hamming weight on fields.
    std::uint32_t hom_weight(Elem a) const {
        return impl_->weight_table.empty() ? hom_weight_slow(a) : impl_->weight_table[a];
    }
    std::uint32_t max_weight() const;

    std::vector<Elem> elements() const;
    std::vector<Elem> units() const;
    /// q elements mapping bijectively onto the residue field (zero first).
    const std::vector<Elem>& residue_reps() const { return impl_->reps; }
    /// Additive group basis: elements with their additive orders, R = direct sum of cyclic <g_i>.
    const std::vector<std::pair<Elem, std::uint32_t>>& additive_basis() const { return impl_->add_basis; }
    std::uint32_t additive_order(Elem a) const;

    /// Embedding of the residue field F_q into R as residue representatives (FqU, GR4 Teichmüller).
    Elem lift_residue(Field::Elem x) const;
    Field::Elem reduce(Elem a) const;

    std::string format(Elem a) const;
    Elem parse(const std::string& token) const;
    std::string name() const;

    AddKind add_kind() const { return impl_->add_kind; }
    const std::vector<std::uint8_t>& add_table_u8() const { return impl_->add_table_u8; }

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.impl_ == b.impl_ || (a.impl_->params.family == b.impl_->params.family && a.name() == b.name() &&
                                      a.impl_->params.h == b.impl_->params.h);
    }

private:
    struct Impl {
        RingParams params;
        std::uint32_t size = 0, q = 0;
        int depth = 0;
        Elem gamma = 0;
        Field residue;
        std::vector<Elem> add_table, mul_table, neg_table;
        std::vector<int> val_table;
        std::vector<std::uint32_t> weight_table;
        std::vector<Elem> reps;
        std::vector<std::pair<Elem, std::uint32_t>> add_basis;
        AddKind add_kind = AddKind::Generic;
        std::vector<std::uint8_t> add_table_u8;
    };

    Elem add_slow(Elem a, Elem b) const;
    Elem mul_slow(Elem a, Elem b) const;
    Elem neg_slow(Elem a) const;
    int valuation_slow(Elem a) const;
    std::uint32_t hom_weight_slow(Elem a) const;
    void finish();

    std::shared_ptr<Impl> impl_;
};

}  // namespace swrg
