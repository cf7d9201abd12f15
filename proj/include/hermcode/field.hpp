#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace hermcode {

// Element of F_q as a dense table index in [0, q).
using Felt = std::uint16_t;

struct FieldBudget {
    // Full q x q add/mul tables are built, so memory grows quadratically.
    std::uint32_t max_q = 4096;
};

// F_q with q = t^2, t = p^a, presented as F_t[alpha]/(m) for the first
// irreducible monic quadratic m over F_t.  Index layout: element y + alpha*z
// with y, z in F_t has index y + t*z, so the subfield F_t occupies indices
// [0, t) and is closed under the main tables; alpha itself is index t, the
// first index outside the subfield.
class FieldSpec {
public:
    FieldSpec(unsigned p, unsigned a, const FieldBudget& budget);

    FieldSpec(const FieldSpec&) = delete;
    FieldSpec& operator=(const FieldSpec&) = delete;

    unsigned characteristic() const { return p_; }
    unsigned extension_exponent() const { return a_; }
    std::uint32_t subfield_order() const { return t_; }
    std::uint32_t order() const { return q_; }

    Felt zero() const { return 0; }
    Felt one() const { return 1; }
    Felt alpha() const { return static_cast<Felt>(t_); }

    Felt add(Felt x, Felt y) const { return add_[std::size_t(x) * q_ + y]; }
    Felt mul(Felt x, Felt y) const { return mul_[std::size_t(x) * q_ + y]; }
    Felt neg(Felt x) const { return neg_[x]; }
    Felt sub(Felt x, Felt y) const { return add(x, neg(y)); }
    Felt inv(Felt x) const;
    Felt div(Felt x, Felt y) const { return mul(x, inv(y)); }
    Felt pow(Felt x, std::uint64_t e) const;

    // Frobenius x -> x^t; involutive automorphism fixing exactly F_t.
    Felt conj(Felt x) const { return conj_[x]; }
    // x -> x^{t+1} = x * conj(x); always lands in the subfield.
    Felt norm(Felt x) const { return norm_[x]; }

    bool in_subfield(Felt x) const { return x < t_; }
    // x = y + alpha*z with y, z subfield indices.
    std::pair<Felt, Felt> decompose(Felt x) const {
        return {static_cast<Felt>(x % t_), static_cast<Felt>(x / t_)};
    }
    Felt recompose(Felt y, Felt z) const {
        return static_cast<Felt>(y + t_ * std::uint32_t(z));
    }

    // (c1, c2, c3) with x^{t+1} = c1*y^2 + c2*y*z + c3*z^2 for x = y + alpha*z;
    // c1 = 1, c2 = alpha + conj(alpha), c3 = alpha * conj(alpha), all in F_t.
    std::array<Felt, 3> hermitian_quadratic_coeffs() const { return herm_coeffs_; }

    // Monic modulus of F_t over F_p, coefficients ascending in [0, p).
    const std::vector<unsigned>& subfield_modulus() const { return mod_t_; }
    // Monic modulus of F_q over F_t, coefficients ascending as subfield indices.
    const std::vector<Felt>& extension_modulus() const { return mod_q_; }

    // k mod p, embedded via repeated addition of 1 (prime-subfield literal).
    Felt from_int(std::uint64_t k) const { return static_cast<Felt>(k % p_); }

    // Human-readable name: sum of digit * a^i * b^j atoms ('a' the extension
    // generator, 'b' the F_t generator when t is not prime).  Parseable by the
    // form-string grammar.
    std::string element_name(Felt x) const;

    // Direct table access for hot loops.
    const Felt* add_table() const { return add_.data(); }
    const Felt* mul_table() const { return mul_.data(); }

private:
    unsigned p_ = 0;
    unsigned a_ = 0;
    std::uint32_t t_ = 0;
    std::uint32_t q_ = 0;
    std::vector<unsigned> mod_t_;
    std::vector<Felt> mod_q_;
    std::array<Felt, 3> herm_coeffs_{};
    std::vector<Felt> add_, mul_, neg_, inv_, conj_, norm_;

    void self_check() const;
};

std::shared_ptr<const FieldSpec> make_field(unsigned p, unsigned a,
                                            const FieldBudget& budget = {});

// Convenience wrapper tying an index to its field; boundary/test ergonomics.
struct FieldElement {
    Felt index = 0;
    const FieldSpec* field = nullptr;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

}  // namespace hermcode
