#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "hermcode/forms.hpp"

namespace hermcode {

// Visits every scalar class with index in [lo, hi) in global order, passing
// (class index, value vector over the table's points) to the visitor.
//
// Classes are walked as an odometer over the coefficient digits after the
// leading 1, keeping one partial-sum row per digit position; a step reuses
// every prefix left of the rightmost digit that moved, so the amortized cost
// per class is about two table passes over the point list.
template <typename Visitor>
void for_each_class(const FormClassIndexer& idx, const EvalTable& table,
                    std::uint64_t lo, std::uint64_t hi, Visitor&& visit) {
    const std::size_t D = idx.coeff_len();
    const std::size_t L = table.length();
    const std::uint32_t q = table.field().order();
    if (hi > idx.count() || lo > hi) throw std::invalid_argument("class range out of bounds");

    std::vector<Felt> levels(D * L);
    std::vector<Felt> digits(D, 0);
    auto level = [&](std::size_t j) { return levels.data() + j * L; };

    std::uint64_t k = lo;
    while (k < hi) {
        auto [lead, suffix] = idx.decompose(k);
        const std::uint64_t block_end =
            std::min(hi, idx.block_base(lead) + idx.block_size(lead));

        for (std::size_t i = D; i-- > lead + 1;) {
            digits[i] = static_cast<Felt>(suffix % q);
            suffix /= q;
        }
        std::copy_n(table.row(lead), L, level(lead));
        for (std::size_t j = lead + 1; j < D; ++j) {
            std::copy_n(level(j - 1), L, level(j));
            table.accumulate(j, digits[j], level(j));
        }

        while (true) {
            visit(k, static_cast<const Felt*>(level(D - 1)));
            if (++k >= block_end) break;
            std::size_t j = D - 1;
            while (digits[j] == q - 1) digits[j--] = 0;
            ++digits[j];
            for (std::size_t pos = j; pos < D; ++pos) {
                std::copy_n(level(pos - 1), L, level(pos));
                table.accumulate(pos, digits[pos], level(pos));
            }
        }
    }
}

// Finalizer of the splitmix stream at state x; drives counter-based sampling
// where draw i depends only on (seed, i).
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Maps a uniform 64-bit draw onto [0, n) by fixed-point multiplication.
inline std::uint64_t bounded(std::uint64_t r, std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * n) >> 64);
}

// Contiguous near-equal split of [0, total) for deterministic parallel merges.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> split_ranges(
    std::uint64_t total, unsigned parts) {
    if (parts == 0) parts = 1;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    const std::uint64_t base = total / parts, extra = total % parts;
    std::uint64_t lo = 0;
    for (unsigned i = 0; i < parts; ++i) {
        std::uint64_t hi = lo + base + (i < extra ? 1 : 0);
        out.emplace_back(lo, hi);
        lo = hi;
    }
    return out;
}

}  // namespace hermcode
