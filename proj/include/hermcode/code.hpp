#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "hermcode/forms.hpp"
#include "hermcode/varieties.hpp"

namespace hermcode {

// Evaluation code of the degree-h forms on the rational points of X: a
// codeword is the value vector of a form over the fixed point order.  Holds
// the monomial/point value table and the rank of the evaluation map.
class FunctionalCode {
public:
    FunctionalCode(std::shared_ptr<const HermitianVariety> X, int h);

    const HermitianVariety& variety() const { return *X_; }
    const FieldSpec& field() const { return *X_->field; }
    int degree() const { return h_; }
    std::size_t length() const { return table_.length(); }
    // Monomial count C(n+h, h); equals the code dimension iff injective.
    std::size_t full_dimension() const { return basis_.size(); }
    std::size_t rank() const { return rank_; }
    std::size_t kernel_dim() const { return basis_.size() - rank_; }
    bool injective() const { return rank_ == basis_.size(); }

    const MonomialBasis& basis() const { return basis_; }
    const EvalTable& table() const { return table_; }

    // Codeword weight of one form: length minus zeros on X.
    std::uint32_t weight_of(const Form& f) const;

private:
    std::shared_ptr<const HermitianVariety> X_;
    int h_;
    MonomialBasis basis_;
    EvalTable table_;
    std::size_t rank_;
};

struct WeightSpectrum {
    // exact: A_w = number of codewords of weight w, w > 0, complete.
    // sampled: raw tallies over the drawn scalar classes (weight 0 possible
    // when the evaluation map has a kernel).
    std::map<std::uint32_t, std::uint64_t> counts;
    // Up to kWitnessCap global scalar-class indices per weight: ascending for
    // exact spectra, in draw order for sampled ones.
    std::map<std::uint32_t, std::vector<std::uint64_t>> witnesses;
    std::uint64_t classes = 0;  // scalar classes enumerated or sampled
    std::size_t kernel_dim = 0;
    bool exact = true;

    static constexpr std::size_t kWitnessCap = 32;

    std::uint32_t min_weight() const;
    std::uint64_t total() const;
};

// Every scalar class once; class tallies are converted to codeword counts by
// the factor (q-1)/q^{kernel_dim}, and the zero codeword is not reported.
// Throws BudgetError when the class count exceeds max_classes.
WeightSpectrum full_spectrum(const FunctionalCode& code, unsigned threads = 1,
                             std::uint64_t max_classes = 450'000'000);

// Scalar classes drawn by a counter-based generator: draw i depends only on
// (seed, i), so the histogram is identical for any thread count.
WeightSpectrum sampled_spectrum(const FunctionalCode& code, std::uint64_t samples,
                                std::uint64_t seed, unsigned threads = 1);

}  // namespace hermcode
