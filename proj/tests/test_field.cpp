#include <set>
#include <vector>

#include "doctest.h"

#include "hermcode/errors.hpp"
#include "hermcode/field.hpp"

using namespace hermcode;

TEST_CASE("order four field structure") {
    auto f = make_field(2, 1);
    CHECK(f->characteristic() == 2);
    CHECK(f->subfield_order() == 2);
    CHECK(f->order() == 4);
    // First irreducible monic quadratic over F_2 is x^2 + x + 1.
    CHECK(f->extension_modulus() == std::vector<Felt>{1, 1, 1});
    const Felt a = f->alpha();
    CHECK(a == 2);
    CHECK(f->mul(a, a) == f->add(a, 1));     // a^2 = a + 1
    CHECK(f->conj(a) == f->add(a, 1));       // a^t = a^2
    CHECK(f->add(a, f->conj(a)) == 1);       // trace 1
    CHECK(f->mul(a, f->conj(a)) == 1);       // norm 1
    CHECK(f->hermitian_quadratic_coeffs() == std::array<Felt, 3>{1, 1, 1});
}

TEST_CASE("order nine field structure") {
    auto f = make_field(3, 1);
    CHECK(f->order() == 9);
    CHECK(f->subfield_order() == 3);
    // First irreducible monic quadratic over F_3 is x^2 + 1.
    CHECK(f->extension_modulus() == std::vector<Felt>{1, 0, 1});
    const Felt a = f->alpha();
    CHECK(f->mul(a, a) == 2);            // a^2 = -1
    CHECK(f->conj(a) == f->neg(a));      // a^3 = -a
    CHECK(f->add(a, f->conj(a)) == 0);   // trace 0
    CHECK(f->mul(a, f->conj(a)) == 1);   // norm 1
    CHECK(f->hermitian_quadratic_coeffs() == std::array<Felt, 3>{1, 0, 1});
}

TEST_CASE("order sixteen field over the quartic subfield") {
    auto f = make_field(2, 2);
    CHECK(f->order() == 16);
    CHECK(f->subfield_order() == 4);
    // Subfield digits follow x^2 + x + 1; the extension uses x^2 + x + b.
    CHECK(f->subfield_modulus() == std::vector<unsigned>{1, 1, 1});
    CHECK(f->extension_modulus() == std::vector<Felt>{2, 1, 1});
    const Felt a = f->alpha();
    const Felt b = 2;  // generator of the subfield
    CHECK(a == 4);
    CHECK(f->mul(a, a) == f->add(a, b));   // a^2 = a + b
    CHECK(f->conj(a) == f->add(a, 1));     // a^4 = a + 1
    CHECK(f->mul(a, f->conj(a)) == b);     // norm b
    CHECK(f->hermitian_quadratic_coeffs() == std::array<Felt, 3>{1, 1, b});
}

TEST_CASE("field axioms hold on every element") {
    for (auto [p, a] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {2, 2}}) {
        auto f = make_field(p, a);
        const std::uint32_t q = f->order();
        for (Felt x = 0; x < q; ++x) {
            CHECK(f->add(x, 0) == x);
            CHECK(f->mul(x, 1) == x);
            CHECK(f->add(x, f->neg(x)) == 0);
            if (x != 0) {
                CHECK(f->mul(x, f->inv(x)) == 1);
                CHECK(f->pow(x, q - 1) == 1);
            }
            for (Felt y = 0; y < q; ++y) {
                CHECK(f->add(x, y) == f->add(y, x));
                CHECK(f->mul(x, y) == f->mul(y, x));
                for (Felt z = 0; z < q; ++z) {
                    CHECK(f->add(f->add(x, y), z) == f->add(x, f->add(y, z)));
                    CHECK(f->mul(f->mul(x, y), z) == f->mul(x, f->mul(y, z)));
                    CHECK(f->mul(x, f->add(y, z)) == f->add(f->mul(x, y), f->mul(x, z)));
                }
            }
        }
    }
}

TEST_CASE("conjugation is the involution fixing exactly the subfield") {
    for (auto [p, a] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {2, 2}}) {
        auto f = make_field(p, a);
        const std::uint32_t t = f->subfield_order();
        for (Felt x = 0; x < f->order(); ++x) {
            CHECK(f->conj(x) == f->pow(x, t));
            CHECK(f->conj(f->conj(x)) == x);
            CHECK((f->conj(x) == x) == f->in_subfield(x));
            // Conjugation is a ring homomorphism.
            for (Felt y = 0; y < f->order(); ++y) {
                CHECK(f->conj(f->add(x, y)) == f->add(f->conj(x), f->conj(y)));
                CHECK(f->conj(f->mul(x, y)) == f->mul(f->conj(x), f->conj(y)));
            }
        }
    }
}

TEST_CASE("norm maps onto the subfield with fibers of size t+1") {
    for (auto [p, a] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {2, 2}}) {
        auto f = make_field(p, a);
        const std::uint32_t t = f->subfield_order();
        std::vector<std::uint32_t> fiber(t, 0);
        for (Felt x = 0; x < f->order(); ++x) {
            CHECK(f->norm(x) == f->mul(x, f->conj(x)));
            CHECK(f->in_subfield(f->norm(x)));
            fiber[f->norm(x)] += 1;
        }
        CHECK(fiber[0] == 1);
        for (Felt v = 1; v < t; ++v) CHECK(fiber[v] == t + 1);
    }
}

TEST_CASE("decompose and recompose are inverse") {
    auto f = make_field(3, 1);
    for (Felt x = 0; x < f->order(); ++x) {
        const auto [y, z] = f->decompose(x);
        CHECK(f->in_subfield(y));
        CHECK(f->in_subfield(z));
        CHECK(f->recompose(y, z) == x);
        // x = y + alpha z as elements.
        CHECK(f->add(y, f->mul(f->alpha(), z)) == x);
    }
}

TEST_CASE("hermitian quadratic expresses the norm over the subfield") {
    for (auto [p, a] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {2, 2}}) {
        auto f = make_field(p, a);
        const auto [c1, c2, c3] = f->hermitian_quadratic_coeffs();
        CHECK(f->in_subfield(c2));
        CHECK(f->in_subfield(c3));
        for (Felt x = 0; x < f->order(); ++x) {
            const auto [y, z] = f->decompose(x);
            const Felt via_coeffs =
                f->add(f->add(f->mul(c1, f->mul(y, y)), f->mul(c2, f->mul(y, z))),
                       f->mul(c3, f->mul(z, z)));
            CHECK(via_coeffs == f->norm(x));
        }
    }
}

TEST_CASE("element names are distinct and follow the digit grammar") {
    auto f4 = make_field(2, 1);
    CHECK(f4->element_name(0) == "0");
    CHECK(f4->element_name(1) == "1");
    CHECK(f4->element_name(2) == "a");
    CHECK(f4->element_name(3) == "1+a");

    auto f9 = make_field(3, 1);
    CHECK(f9->element_name(2) == "2");
    CHECK(f9->element_name(3) == "a");
    CHECK(f9->element_name(6) == "2*a");
    CHECK(f9->element_name(7) == "1+2*a");

    auto f16 = make_field(2, 2);
    CHECK(f16->element_name(2) == "b");
    CHECK(f16->element_name(3) == "1+b");
    CHECK(f16->element_name(4) == "a");
    CHECK(f16->element_name(10) == "b+a*b");
    for (auto& f : {f4, f9, f16}) {
        std::set<std::string> seen;
        for (Felt x = 0; x < f->order(); ++x) seen.insert(f->element_name(x));
        CHECK(seen.size() == f->order());
    }
}

TEST_CASE("prime subfield literals reduce modulo p") {
    auto f = make_field(3, 1);
    CHECK(f->from_int(0) == 0);
    CHECK(f->from_int(4) == 1);
    CHECK(f->from_int(11) == 2);
}

TEST_CASE("table budget rejects oversized fields") {
    CHECK_THROWS_AS(make_field(2, 7), BudgetError);   // q = 2^14 > 4096
    CHECK_NOTHROW(make_field(2, 2));
    FieldBudget tight;
    tight.max_q = 8;
    CHECK_THROWS_AS(make_field(2, 2, tight), BudgetError);
}
