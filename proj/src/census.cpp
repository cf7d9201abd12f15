#include "hermcode/census.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "hermcode/enumerate.hpp"
#include "hermcode/errors.hpp"
#include "hermcode/projective.hpp"

namespace hermcode {

HyperplaneProfiles hyperplane_profiles(const HermitianVariety& X) {
    const PointList& space = *X.space;
    const auto members = X.points.members();
    HyperplaneProfiles prof;
    prof.words = (members.size() + 63) / 64;
    prof.section.assign(space.size(), 0);
    prof.tangent.assign(space.size(), false);
    prof.bits.assign(space.size() * prof.words, 0);
    for (std::size_t h = 0; h < space.size(); ++h) {
        std::uint64_t* row = prof.bits.data() + h * prof.words;
        std::uint32_t s = 0;
        for (std::size_t m = 0; m < members.size(); ++m)
            if (incident(space, members[m], h)) {
                row[m / 64] |= std::uint64_t(1) << (m % 64);
                ++s;
            }
        prof.section[h] = s;
        prof.tangent[h] = is_tangent_hyperplane(X, static_cast<std::uint32_t>(h));
    }
    return prof;
}

namespace {

using CellKey = std::pair<unsigned, std::uint64_t>;  // (tangent count, axis section)

struct CellAccum {
    std::map<CellKey, std::pair<std::uint64_t, std::uint32_t>> cells;  // forms, weight

    void add(unsigned tc, std::uint64_t axis, std::uint32_t weight, std::uint64_t forms) {
        auto [it, fresh] = cells.emplace(CellKey{tc, axis}, std::make_pair(forms, weight));
        if (!fresh) {
            if (it->second.second != weight)
                throw std::logic_error("two weights in one union census cell");
            it->second.first += forms;
        }
    }
};

std::uint64_t binom(std::uint64_t m, std::uint64_t k) {
    if (k > m) return 0;
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (m - k + i) / i;
    return static_cast<std::uint64_t>(r);
}

// Pair index k in the i<j enumeration ordered by i then j; first index found
// by binary search on the triangular row bases.
std::pair<std::uint32_t, std::uint32_t> pair_at(std::uint64_t k, std::uint64_t m) {
    auto base = [m](std::uint64_t i) { return i * (2 * m - i - 1) / 2; };
    std::uint64_t lo = 0, hi = m - 1;
    while (lo + 1 < hi) {
        const std::uint64_t mid = (lo + hi) / 2;
        (base(mid) <= k ? lo : hi) = mid;
    }
    const std::uint64_t i = base(hi) <= k ? hi : lo;
    return {static_cast<std::uint32_t>(i),
            static_cast<std::uint32_t>(i + 1 + (k - base(i)))};
}

Form union_form(const PointList& space, std::span<const std::uint32_t> hyperplanes) {
    std::vector<Form> factors;
    for (std::uint32_t h : hyperplanes) factors.push_back(linear_form(space.coords(h)));
    return product_of_linear_forms(factors, space.field());
}

}  // namespace

std::map<std::uint32_t, std::uint64_t> UnionCensus::classes_by_weight() const {
    std::map<std::uint32_t, std::uint64_t> out;
    for (const auto& c : cells) out[c.weight] += c.forms;
    return out;
}

std::map<std::uint32_t, std::uint64_t> UnionCensus::codewords_by_weight() const {
    auto out = classes_by_weight();
    for (auto& [w, c] : out) c *= q - 1;
    return out;
}

std::vector<std::uint32_t> UnionCensus::distinct_weights() const {
    std::vector<std::uint32_t> out;
    for (const auto& [w, c] : classes_by_weight())
        if (c > 0) out.push_back(w);
    return out;
}

const UnionCell& UnionCensus::min_weight_cell() const {
    if (cells.empty()) throw std::logic_error("empty census has no cells");
    return cells.front();
}

UnionCensus union_census(const FunctionalCode& code, unsigned threads,
                         std::uint64_t max_forms) {
    const HermitianVariety& X = code.variety();
    const PointList& space = *X.space;
    const std::uint32_t q = code.field().order();
    const int h = code.degree();
    const std::uint32_t lenX = static_cast<std::uint32_t>(X.size());
    if (h < 2) throw std::invalid_argument("union census needs degree >= 2");
    if (h != 2 && X.n != 3)
        throw std::invalid_argument("unions of 3+ hyperplanes are implemented for P^3 only");

    const HyperplaneProfiles prof = hyperplane_profiles(X);
    const std::size_t words = prof.words;

    // Stride of forms re-checked by expanding the product and evaluating it.
    auto stride_for = [](std::uint64_t total) {
        return std::max<std::uint64_t>(1, total / 65536);
    };

    std::vector<CellAccum> partial;
    std::uint64_t expected = 0;

    if (h == 2) {
        const std::uint64_t m = space.size();
        expected = m * (m - 1) / 2;
        if (expected > max_forms)
            throw BudgetError("pair count " + std::to_string(expected) +
                              " exceeds the census budget " + std::to_string(max_forms));
        const std::uint64_t stride = stride_for(expected);
        const auto ranges = split_ranges(expected, std::max(1u, threads));
        partial.resize(ranges.size());
        auto work = [&](std::size_t wk) {
            CellAccum& acc = partial[wk];
            for (std::uint64_t k = ranges[wk].first; k < ranges[wk].second; ++k) {
                const auto [i, j] = pair_at(k, m);
                std::uint64_t axis = 0;
                const std::uint64_t* bi = prof.row(i);
                const std::uint64_t* bj = prof.row(j);
                for (std::size_t w = 0; w < words; ++w)
                    axis += std::popcount(bi[w] & bj[w]);
                const std::uint64_t section = prof.section[i] + prof.section[j] - axis;
                const std::uint32_t weight = lenX - static_cast<std::uint32_t>(section);
                const unsigned tc = unsigned(prof.tangent[i]) + unsigned(prof.tangent[j]);
                acc.add(tc, axis, weight, 1);
                if (k % stride == 0) {
                    const std::uint32_t hp[2] = {i, j};
                    if (code.weight_of(union_form(space, hp)) != weight)
                        throw std::logic_error("pair weight disagrees with the product form");
                }
            }
        };
        if (ranges.size() == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (std::size_t w = 0; w < ranges.size(); ++w) pool.emplace_back(work, w);
            for (auto& th : pool) th.join();
        }
    } else {
        LineSet lines(space);
        const std::uint64_t per_line = binom(q + 1, h);
        expected = lines.size() * per_line;
        if (expected > max_forms)
            throw BudgetError("union form count " + std::to_string(expected) +
                              " exceeds the census budget " + std::to_string(max_forms));
        const std::uint64_t stride = stride_for(expected);
        const auto ranges = split_ranges(lines.size(), std::max(1u, threads));
        partial.resize(ranges.size());
        auto work = [&](std::size_t wk) {
            CellAccum& acc = partial[wk];
            std::vector<std::uint32_t> pick(h);
            std::vector<std::uint32_t> chosen(h);
            for (std::size_t l = ranges[wk].first; l < ranges[wk].second; ++l) {
                std::uint32_t axis = 0;
                for (std::uint32_t p : lines.points_on(l)) axis += X.points.contains(p);
                const LineRef ref = lines.spanning(l);
                const auto planes = planes_through_line(space, ref.a, ref.b);
                for (int i = 0; i < h; ++i) pick[i] = static_cast<std::uint32_t>(i);
                std::uint64_t local = 0;
                while (true) {
                    std::uint64_t section = 0;
                    unsigned tc = 0;
                    for (int i = 0; i < h; ++i) {
                        chosen[i] = planes[pick[i]];
                        section += prof.section[chosen[i]];
                        tc += prof.tangent[chosen[i]];
                    }
                    section -= std::uint64_t(h - 1) * axis;
                    const std::uint32_t weight = lenX - static_cast<std::uint32_t>(section);
                    acc.add(tc, axis, weight, 1);
                    if ((l * per_line + local) % stride == 0) {
                        if (code.weight_of(union_form(space, chosen)) != weight)
                            throw std::logic_error(
                                "union weight disagrees with the product form");
                    }
                    ++local;
                    int i = h - 1;
                    while (i >= 0 && pick[i] == planes.size() - h + i) --i;
                    if (i < 0) break;
                    ++pick[i];
                    for (int j2 = i + 1; j2 < h; ++j2) pick[j2] = pick[j2 - 1] + 1;
                }
                if (local != per_line) throw std::logic_error("subset walk miscounted");
            }
        };
        if (ranges.size() == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (std::size_t w = 0; w < ranges.size(); ++w) pool.emplace_back(work, w);
            for (auto& th : pool) th.join();
        }
    }

    CellAccum merged;
    for (const auto& p : partial)
        for (const auto& [key, val] : p.cells)
            merged.add(key.first, key.second, val.second, val.first);

    UnionCensus out;
    out.n = X.n;
    out.h = h;
    out.q = q;
    for (const auto& [key, val] : merged.cells)
        out.cells.push_back({key.first, key.second, val.first, val.second});
    std::sort(out.cells.begin(), out.cells.end(), [](const UnionCell& a, const UnionCell& b) {
        return std::tie(a.weight, a.tangent_count, a.axis_section) <
               std::tie(b.weight, b.tangent_count, b.axis_section);
    });
    for (const auto& c : out.cells) out.total_forms += c.forms;
    if (out.total_forms != expected)
        throw std::logic_error("union census lost hyperplane sets");
    return out;
}

bool FourthFifthReport::any_mismatch() const {
    return !(fourth.weight_in_census && fourth.closed_form_matches &&
             fourth.factor_product_matches && fifth.weight_in_census &&
             fifth.closed_form_matches && fifth.factor_product_matches);
}

FourthFifthReport verify_fourth_fifth(const UnionCensus& census, std::uint32_t t) {
    if (census.n != 3 || census.h != 2)
        throw std::invalid_argument("fourth/fifth verification needs the P^3 pair census");
    const std::uint64_t q = std::uint64_t(t) * t;
    const std::uint64_t t2 = q, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t, t6 = t5 * t;
    const LineCensus lines = line_census_expected(t);
    const auto codewords = census.codewords_by_weight();

    auto fill = [&](CountComparison& c) {
        auto it = codewords.find(c.weight);
        c.weight_in_census = it != codewords.end();
        c.census_codewords = c.weight_in_census ? it->second : 0;
        c.closed_form_matches = c.weight_in_census && c.closed_form == c.census_codewords;
        c.factor_product_matches =
            c.weight_in_census && c.factor_product == c.census_codewords;
    };

    FourthFifthReport rep;
    rep.fourth.weight = static_cast<std::uint32_t>(t5 - t3 + t2);
    rep.fourth.closed_form = (t - 1) * t3 * (t4 - 1) * (t4 - 1) / 2;
    rep.fourth.factor_product = (t2 - 1) * lines.tangent * (q * (q - 1) / 2);
    fill(rep.fourth);

    rep.fifth.weight = static_cast<std::uint32_t>(t5 - t3 + t2 + t);
    rep.fifth.closed_form = (t - 1) * (t3 + 1) * (t2 + 1) * (t2 + 1) * t6 / 2;
    rep.fifth.factor_product = (t2 - 1) * lines.secant * (q * (q + 1) / 2);
    fill(rep.fifth);
    return rep;
}

TssCheck tss_check(const Form& f, const PointList& space) {
    const FieldSpec& field = space.field();
    const std::uint32_t q = field.order();
    const int n = space.dim();
    if (f.n != n) throw std::invalid_argument("form arity does not match the space");
    if (static_cast<std::uint32_t>(f.h) > q)
        throw std::invalid_argument("bound needs h <= q");
    MonomialBasis basis(f.n, f.h);
    TssCheck out;
    for (std::size_t i = 0; i < space.size(); ++i)
        out.zeros += evaluate(f, space.coords(i), field, basis) == 0;
    std::uint64_t qn1 = 1;
    for (int i = 0; i + 1 < n; ++i) qn1 *= q;
    out.bound = std::uint64_t(f.h) * qn1 + (n >= 2 ? PointList::count(n - 2, q) : 0);
    out.holds = out.zeros <= out.bound;
    out.attained = out.zeros == out.bound;
    return out;
}

ConjectureReport conjecture_check(const FunctionalCode& code,
                                  const WeightSpectrum* spectrum, unsigned threads,
                                  std::uint64_t max_forms) {
    ConjectureReport rep;
    rep.n = code.variety().n;
    rep.h = code.degree();
    rep.t = code.field().subfield_order();
    rep.exhaustive = spectrum != nullptr && spectrum->exact;
    rep.census = union_census(code, threads, max_forms);
    rep.expected_axis_section =
        rep.n >= 2 ? hermitian_point_count(rep.n - 2, rep.t) : 0;

    const auto union_weights = rep.census.distinct_weights();
    const std::uint32_t min_w = union_weights.front();
    const unsigned expected_tangent = (rep.n % 2 == 1) ? unsigned(rep.h) : 0;
    rep.min_cell_shape_ok = true;
    for (const auto& c : rep.census.cells) {
        if (c.weight != min_w) continue;
        if (c.tangent_count != expected_tangent ||
            c.axis_section != rep.expected_axis_section)
            rep.min_cell_shape_ok = false;
    }

    const std::size_t want = 2 * static_cast<std::size_t>(rep.h) + 1;
    if (rep.exhaustive) {
        for (const auto& [w, c] : spectrum->counts) {
            if (w == 0 || c == 0) continue;
            rep.spectrum_head.push_back(w);
            if (rep.spectrum_head.size() == want) break;
        }
        rep.part1 = std::all_of(rep.spectrum_head.begin(), rep.spectrum_head.end(),
                                [&](std::uint32_t w) {
                                    return std::binary_search(union_weights.begin(),
                                                              union_weights.end(), w);
                                });
        // Count agreement at the minimum turns "witnesses look right" into
        // "every minimum-weight codeword is such a union".
        const auto codewords = rep.census.codewords_by_weight();
        const auto spec_min = spectrum->counts.begin();
        rep.part2 = min_w == spec_min->first &&
                    codewords.at(min_w) == spec_min->second && rep.min_cell_shape_ok;
        rep.part3 = std::all_of(union_weights.begin(), union_weights.end(),
                                [&](std::uint32_t w) {
                                    return std::find(rep.spectrum_head.begin(),
                                                     rep.spectrum_head.end(),
                                                     w) != rep.spectrum_head.end();
                                });
    } else {
        rep.part1 = union_weights.size() == want;
        rep.part2 = rep.min_cell_shape_ok;
        rep.part3 = union_weights.size() <= want;
    }
    return rep;
}

}  // namespace hermcode
