#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "doctest.h"

#include "hermcode/field.hpp"
#include "hermcode/projective.hpp"

using namespace hermcode;

TEST_CASE("projective point counts match the geometric series") {
    auto f4 = make_field(2, 1);
    auto f9 = make_field(3, 1);
    CHECK(PointList(2, f4).size() == 21);
    CHECK(PointList(3, f4).size() == 85);
    CHECK(PointList(4, f4).size() == 341);
    CHECK(PointList(3, f9).size() == 820);
    CHECK(PointList(4, f9).size() == 7381);
    CHECK(PointList::count(3, 4) == 85);
    CHECK(PointList::count(4, 9) == 7381);
}

TEST_CASE("enumeration is canonical, grouped, and invertible") {
    auto field = make_field(2, 1);
    const PointList space(3, field);
    const std::uint32_t q = field->order();
    std::map<int, std::size_t> group_sizes;
    int last_w = 0;
    for (std::size_t i = 0; i < space.size(); ++i) {
        const auto c = space.coords(i);
        const int w = space.w_index(i);
        // First nonzero coordinate is 1 at position w.
        for (int j = 0; j < w; ++j) CHECK(c[j] == 0);
        CHECK(c[w] == 1);
        CHECK(w >= last_w);
        last_w = w;
        group_sizes[w] += 1;
        CHECK(space.index_of(c) == i);
    }
    // Group w holds q^{n-w} points.
    CHECK(group_sizes[0] == q * q * q);
    CHECK(group_sizes[1] == q * q);
    CHECK(group_sizes[2] == q);
    CHECK(group_sizes[3] == 1);
}

TEST_CASE("canonical index is scale invariant") {
    auto field = make_field(3, 1);
    const PointList space(2, field);
    for (std::size_t i = 0; i < space.size(); ++i) {
        const auto c = space.coords(i);
        for (Felt s = 1; s < field->order(); ++s) {
            std::vector<Felt> scaled(c.begin(), c.end());
            for (auto& x : scaled) x = field->mul(x, s);
            CHECK(space.canonical_index(scaled) == i);
        }
    }
}

TEST_CASE("line set partitions point pairs") {
    auto field = make_field(2, 1);
    const PointList space(3, field);
    const LineSet lines(space);
    CHECK(lines.size() == 357);
    CHECK(LineSet::count(4) == 357);
    CHECK(LineSet::count(9) == 7462);

    std::set<std::pair<std::uint32_t, std::uint32_t>> covered;
    for (std::size_t l = 0; l < lines.size(); ++l) {
        const auto pts = lines.points_on(l);
        CHECK(pts.size() == 5);
        CHECK(std::is_sorted(pts.begin(), pts.end()));
        const LineRef ref = lines.spanning(l);
        CHECK(ref.a == pts[0]);
        CHECK(ref.b == pts[1]);
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                covered.insert({pts[i], pts[j]});
    }
    // Every unordered pair of distinct points lies on exactly one line:
    // 357 lines x C(5,2) pairs = C(85,2) with no repeats.
    CHECK(covered.size() == 85 * 84 / 2);
}

TEST_CASE("larger line set has the expected size") {
    auto field = make_field(3, 1);
    const PointList space(3, field);
    const LineSet lines(space);
    CHECK(lines.size() == 7462);
    for (std::size_t l : {std::size_t(0), lines.size() / 2, lines.size() - 1})
        CHECK(lines.points_on(l).size() == 10);
}

TEST_CASE("incidence matches a direct dot product") {
    auto field = make_field(2, 1);
    const PointList space(3, field);
    // Hyperplane x0 = 0 is the dual of the first enumerated point (1,0,0,0);
    // its points form a plane with 21 points.
    const std::size_t h = 0;
    REQUIRE(space.coords(h)[0] == 1);
    std::size_t on = 0;
    for (std::size_t i = 0; i < space.size(); ++i) {
        Felt dot = 0;
        const auto pc = space.coords(i);
        const auto hc = space.coords(h);
        for (std::size_t j = 0; j < pc.size(); ++j)
            dot = field->add(dot, field->mul(pc[j], hc[j]));
        CHECK(incident(space, i, h) == (dot == 0));
        on += incident(space, i, h);
    }
    CHECK(on == 21);
}

TEST_CASE("pencil through a line lists q+1 incident hyperplanes") {
    auto field = make_field(2, 1);
    const PointList space(3, field);
    const LineSet lines(space);
    for (std::size_t l : {std::size_t(3), std::size_t(100), std::size_t(356)}) {
        const LineRef ref = lines.spanning(l);
        const auto planes = planes_through_line(space, ref.a, ref.b);
        CHECK(planes.size() == 5);
        CHECK(std::is_sorted(planes.begin(), planes.end()));
        for (const std::uint32_t h : planes)
            for (const std::uint32_t pt : lines.points_on(l))
                CHECK(incident(space, pt, h));
    }
}

TEST_CASE("codimension-2 intersection of two hyperplanes") {
    auto field = make_field(2, 1);
    const PointList space(3, field);
    const auto pts = codim2_points(space, 0, 84);
    CHECK(pts.size() == 5);  // a line of P^3
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    for (const std::uint32_t p : pts) {
        CHECK(incident(space, p, 0));
        CHECK(incident(space, p, 84));
    }
}
