#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hermcode/field.hpp"
#include "hermcode/projective.hpp"

namespace hermcode {

// Monomials of total degree h in n+1 variables, ordered with exponent
// vectors lexicographically descending: x0^h first, xn^h last.
class MonomialBasis {
public:
    MonomialBasis(int n, int h);

    int dim() const { return n_; }
    int degree() const { return h_; }
    std::size_t size() const { return count_; }
    std::size_t arity() const { return static_cast<std::size_t>(n_) + 1; }

    std::span<const std::uint8_t> exponents(std::size_t i) const {
        return {flat_.data() + i * arity(), arity()};
    }
    std::size_t index_of(std::span<const std::uint8_t> exps) const;

    static std::uint64_t count(int n, int h);  // binomial(n+h, h)

private:
    int n_, h_;
    std::size_t count_;
    std::vector<std::uint8_t> flat_;
};

// Homogeneous form of degree h in n+1 variables: coefficient per monomial.
struct Form {
    int n = 0;
    int h = 0;
    std::vector<Felt> coeffs;

    friend bool operator==(const Form&, const Form&) = default;
};

// Value at an affine coordinate vector.  Projective evaluation of a canonical
// representative is this applied to its coordinates (the leading 1 absorbs
// the usual x^h normalization).
Felt evaluate(const Form& f, std::span<const Felt> coords, const FieldSpec& field,
              const MonomialBasis& basis);
Felt evaluate(const Form& f, std::span<const Felt> coords, const FieldSpec& field);

// Scalar classes of nonzero forms: coefficient vectors with first nonzero
// entry 1, ordered lexicographically.  Classes are randomly addressable so
// work splits deterministically across any worker count.
class FormClassIndexer {
public:
    FormClassIndexer(int n, int h, std::uint32_t q);

    std::uint64_t count() const { return count_; }
    std::size_t coeff_len() const { return dim_; }

    // Decompose a class index into (leading position, suffix digits).
    struct Decomposed {
        std::size_t lead;
        std::uint64_t suffix;  // base-q, most significant digit right after lead
    };
    Decomposed decompose(std::uint64_t k) const;
    Form form_at(std::uint64_t k, int n, int h) const;

    std::uint64_t block_base(std::size_t lead) const { return base_[lead]; }
    std::uint64_t block_size(std::size_t lead) const { return size_[lead]; }

private:
    std::size_t dim_;
    std::uint32_t q_;
    std::uint64_t count_;
    std::vector<std::uint64_t> base_, size_;
};

// Monomial values over a fixed list of points, plus every scalar multiple of
// each row, so form evaluation reduces to add-table lookups.
class EvalTable {
public:
    EvalTable(const MonomialBasis& basis, const PointList& space,
              std::span<const std::uint32_t> points);

    std::size_t length() const { return len_; }
    std::size_t rows() const { return nrows_; }
    const FieldSpec& field() const { return *field_; }

    const Felt* row(std::size_t m) const { return scaled_.data() + (m * q_ + 1) * len_; }
    // Row m multiplied by the scalar c (c = 0 row is all zeros).
    const Felt* scaled(std::size_t m, Felt c) const {
        return scaled_.data() + (m * q_ + c) * len_;
    }

    // values[i] += c * row(m)[i], via tables.
    void accumulate(std::size_t m, Felt c, Felt* values) const;

private:
    std::shared_ptr<const FieldSpec> field_;
    std::size_t len_, nrows_;
    std::uint32_t q_;
    std::vector<Felt> scaled_;
};

// Degree-1 form with the given dual coefficients.
Form linear_form(std::span<const Felt> dual);

Form product_of_linear_forms(std::span<const Form> linears, const FieldSpec& field);

// Products of h distinct hyperplanes chosen from the pencil through the
// codimension-2 space H0 meet H1; all C(q+1, h) of them, in subset order.
std::vector<Form> pencil_products(const PointList& space, std::uint32_t h0,
                                  std::uint32_t h1, int h);

}  // namespace hermcode
