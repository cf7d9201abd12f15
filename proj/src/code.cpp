#include "hermcode/code.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "hermcode/enumerate.hpp"
#include "hermcode/errors.hpp"

namespace hermcode {

namespace {

// Rank of the monomial-row value matrix, by elimination over a working copy.
std::size_t table_rank(const EvalTable& table, const FieldSpec& f) {
    const std::size_t rows = table.rows(), cols = table.length();
    std::vector<Felt> m(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        std::copy_n(table.row(r), cols, m.data() + r * cols);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot * cols + col] == 0) ++pivot;
        if (pivot == rows) continue;
        for (std::size_t j = 0; j < cols; ++j)
            std::swap(m[rank * cols + j], m[pivot * cols + j]);
        const Felt scale = f.inv(m[rank * cols + col]);
        for (std::size_t j = col; j < cols; ++j)
            m[rank * cols + j] = f.mul(scale, m[rank * cols + j]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            const Felt c = m[r * cols + col];
            if (c == 0) continue;
            for (std::size_t j = col; j < cols; ++j)
                m[r * cols + j] = f.sub(m[r * cols + j], f.mul(c, m[rank * cols + j]));
        }
        ++rank;
    }
    return rank;
}

struct Partial {
    std::map<std::uint32_t, std::uint64_t> counts;
    std::map<std::uint32_t, std::vector<std::uint64_t>> witnesses;

    void record(std::uint32_t w, std::uint64_t k) {
        ++counts[w];
        auto& wit = witnesses[w];
        if (wit.size() < WeightSpectrum::kWitnessCap) wit.push_back(k);
    }
};

// Worker partials carry ascending indices, so merging in worker order keeps
// the global witness lists ascending for any worker count.
void merge_partials(WeightSpectrum& out, std::vector<Partial>& parts) {
    for (auto& p : parts) {
        for (auto& [w, c] : p.counts) out.counts[w] += c;
        for (auto& [w, wit] : p.witnesses) {
            auto& dst = out.witnesses[w];
            for (std::uint64_t k : wit) {
                if (dst.size() >= WeightSpectrum::kWitnessCap) break;
                dst.push_back(k);
            }
        }
    }
}

}  // namespace

FunctionalCode::FunctionalCode(std::shared_ptr<const HermitianVariety> X, int h)
    : X_(std::move(X)),
      h_(h),
      basis_(static_cast<int>(X_->n), h),
      table_(basis_, *X_->space, X_->points.members()),
      rank_(table_rank(table_, *X_->field)) {}

std::uint32_t FunctionalCode::weight_of(const Form& f) const {
    if (f.n != static_cast<int>(X_->n) || f.h != h_ ||
        f.coeffs.size() != basis_.size())
        throw std::invalid_argument("form does not match the code parameters");
    std::vector<Felt> values(table_.length(), 0);
    for (std::size_t m = 0; m < basis_.size(); ++m)
        table_.accumulate(m, f.coeffs[m], values.data());
    std::uint32_t zeros = 0;
    for (Felt v : values) zeros += v == 0;
    return static_cast<std::uint32_t>(table_.length()) - zeros;
}

std::uint32_t WeightSpectrum::min_weight() const {
    for (const auto& [w, c] : counts)
        if (w > 0 && c > 0) return w;
    throw std::logic_error("empty spectrum has no minimum weight");
}

std::uint64_t WeightSpectrum::total() const {
    std::uint64_t s = 0;
    for (const auto& [w, c] : counts) s += c;
    return s;
}

WeightSpectrum full_spectrum(const FunctionalCode& code, unsigned threads,
                             std::uint64_t max_classes) {
    const FieldSpec& field = code.field();
    const std::uint32_t q = field.order();
    FormClassIndexer indexer(static_cast<int>(code.variety().n), code.degree(), q);
    if (indexer.count() > max_classes)
        throw BudgetError("scalar class count " + std::to_string(indexer.count()) +
                          " exceeds the enumeration budget " + std::to_string(max_classes));

    const std::size_t len = code.length();
    const auto ranges = split_ranges(indexer.count(), std::max(1u, threads));
    std::vector<Partial> partial(ranges.size());
    auto work = [&](std::size_t wk) {
        Partial& p = partial[wk];
        for_each_class(indexer, code.table(), ranges[wk].first, ranges[wk].second,
                       [&](std::uint64_t k, const Felt* values) {
                           std::uint32_t zeros = 0;
                           for (std::size_t i = 0; i < len; ++i) zeros += values[i] == 0;
                           p.record(static_cast<std::uint32_t>(len) - zeros, k);
                       });
    };
    if (ranges.size() == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < ranges.size(); ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }

    WeightSpectrum spec;
    spec.classes = indexer.count();
    spec.kernel_dim = code.kernel_dim();
    spec.exact = true;
    merge_partials(spec, partial);

    // Scalar classes to codewords: each class is q-1 forms with one zero set,
    // and q^{kernel_dim} forms share each nonzero codeword.
    std::uint64_t divisor = 1;
    for (std::size_t i = 0; i < spec.kernel_dim; ++i) divisor *= q;
    const std::uint64_t zero_classes = (divisor - 1) / (q - 1);
    if (auto it = spec.counts.find(0); it != spec.counts.end()) {
        if (it->second != zero_classes)
            throw std::logic_error("kernel class count disagrees with the rank");
        spec.counts.erase(it);
        spec.witnesses.erase(0);
    } else if (zero_classes != 0) {
        throw std::logic_error("kernel classes missing from the enumeration");
    }
    std::uint64_t check = 0;
    for (auto& [w, c] : spec.counts) {
        const std::uint64_t forms = c * (q - 1);
        if (forms % divisor != 0)
            throw std::logic_error("weight class count not divisible by the fiber size");
        c = forms / divisor;
        check += c;
    }
    std::uint64_t codewords = 1;
    for (std::size_t i = 0; i < code.rank(); ++i) codewords *= q;
    if (check != codewords - 1)
        throw std::logic_error("spectrum does not sum to q^rank - 1");
    return spec;
}

WeightSpectrum sampled_spectrum(const FunctionalCode& code, std::uint64_t samples,
                                std::uint64_t seed, unsigned threads) {
    const FieldSpec& field = code.field();
    const std::uint32_t q = field.order();
    const int n = static_cast<int>(code.variety().n);
    FormClassIndexer indexer(n, code.degree(), q);
    const std::uint64_t count = indexer.count();
    const std::size_t len = code.length();

    const auto ranges = split_ranges(samples, std::max(1u, threads));
    std::vector<Partial> partial(ranges.size());
    auto work = [&](std::size_t wk) {
        Partial& p = partial[wk];
        std::vector<Felt> values(len);
        for (std::uint64_t i = ranges[wk].first; i < ranges[wk].second; ++i) {
            const std::uint64_t r = mix64(seed + i * 0x9E3779B97F4A7C15ULL);
            const std::uint64_t k = bounded(r, count);
            const Form f = indexer.form_at(k, n, code.degree());
            std::fill(values.begin(), values.end(), 0);
            for (std::size_t m = 0; m < f.coeffs.size(); ++m)
                code.table().accumulate(m, f.coeffs[m], values.data());
            std::uint32_t zeros = 0;
            for (Felt v : values) zeros += v == 0;
            p.record(static_cast<std::uint32_t>(len) - zeros, k);
        }
    };
    if (ranges.size() == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < ranges.size(); ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }

    WeightSpectrum spec;
    spec.classes = samples;
    spec.kernel_dim = code.kernel_dim();
    spec.exact = false;
    merge_partials(spec, partial);
    return spec;
}

}  // namespace hermcode
