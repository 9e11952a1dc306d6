#pragma once

#include "swrg/algebra/polynomial.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace swrg {

/// Parameters of a finite field F_{p^f} together with its defining primitive polynomial.
struct FieldSpec {
    int p = 2;
    int f = 1;
    poly::Coeffs modulus;  // monic, degree f, lowest coefficient first

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Fixed primitive modulus for (p, f). Throws InvalidArgument when p is not prime
/// or no tabulated polynomial exists.
FieldSpec default_field_spec(int p, int f);

bool is_prime(int p);

/// Finite field F_{p^f}. Elements are the integers 0..p^f-1; the base-p digits of an
/// element are its coefficients in the power basis 1, x, ..., x^{f-1}. Immutable and cheap to copy.
class Field {
public:
    using Elem = std::uint32_t;

    static Field make(int p, int f);
    static Field make(const FieldSpec& spec);

    const FieldSpec& spec() const { return impl_->spec; }
    int p() const { return impl_->spec.p; }
    int degree() const { return impl_->spec.f; }
    std::uint32_t size() const { return impl_->size; }

    /// Residue of the polynomial variable; a generator of the multiplicative group.
    Elem generator() const { return impl_->exp[1]; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const;
    /// Discrete log to the base generator(); a must be nonzero.
    std::uint32_t log(Elem a) const { return impl_->log[a]; }
    Elem exp(std::uint64_t k) const { return impl_->exp[k % (impl_->size - 1)]; }

    /// Absolute trace onto the prime field; the result is an element 0..p-1.
    Elem trace(Elem a) const;
    bool is_square(Elem a) const;

    std::vector<int> digits(Elem a) const;
    Elem from_digits(const std::vector<int>& d) const;

    friend bool operator==(const Field& a, const Field& b) { return a.spec() == b.spec(); }

private:
    struct Impl {
        FieldSpec spec;
        std::uint32_t size = 0;
        std::vector<Elem> exp;
        std::vector<std::uint32_t> log;
    };
    std::shared_ptr<const Impl> impl_;
};

}  // namespace swrg
