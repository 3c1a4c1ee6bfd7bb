#include <algorithm>
#include <set>

#include "doctest.h"
#include "satake/lie.hpp"

using namespace satake;

namespace {

long long binom_count(const std::string& label) {
    return static_cast<long long>(positive_roots(CartanDatum::of_label(label)).size());
}

} // namespace

TEST_CASE("classical Cartan matrices and symmetrizers") {
    CartanDatum a2 = CartanDatum::of_type('A', 2);
    CHECK(a2.cartan == std::vector<std::vector<long long>>{{2, -1}, {-1, 2}});
    CHECK(a2.sym == std::vector<long long>{1, 1});

    CartanDatum g2 = CartanDatum::of_type('G', 2);
    CHECK(g2.rank() == 2);
    // d_i A_ij must be symmetric with minimal positive d_i
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(g2.sym[i] * g2.cartan[i][j] == g2.sym[j] * g2.cartan[j][i]);
    CHECK(*std::min_element(g2.sym.begin(), g2.sym.end()) == 1);
    CHECK(*std::max_element(g2.sym.begin(), g2.sym.end()) == 3);

    CartanDatum b3 = CartanDatum::of_type('B', 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(b3.sym[i] * b3.cartan[i][j] == b3.sym[j] * b3.cartan[j][i]);

    CHECK(CartanDatum::of_label("F4").rank() == 4);
    CHECK_THROWS_AS(CartanDatum::of_type('E', 9), std::invalid_argument);
    CHECK_THROWS_AS(CartanDatum::of_label("Q3"), std::invalid_argument);
}

TEST_CASE("from_cartan validates and rejects non-finite matrices") {
    CartanDatum d = CartanDatum::from_cartan({{2, -1}, {-1, 2}});
    CHECK(d.rank() == 2);
    // affine matrix: positive semidefinite with a kernel, not finite type
    CHECK_THROWS_AS(CartanDatum::from_cartan({{2, -2}, {-2, 2}}), std::invalid_argument);
    // not a generalized Cartan matrix
    CHECK_THROWS_AS(CartanDatum::from_cartan({{2, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(CartanDatum::from_cartan({{2, -1}, {0, 2}}), std::invalid_argument);
}

TEST_CASE("positive root counts and closure under reflections") {
    CHECK(binom_count("A2") == 3);
    CHECK(binom_count("A3") == 6);
    CHECK(binom_count("B2") == 4);
    CHECK(binom_count("C3") == 9);
    CHECK(binom_count("D4") == 12);
    CHECK(binom_count("G2") == 6);
    CHECK(binom_count("F4") == 24);

    for (const char* label : {"A2", "B2", "G2", "C3"}) {
        CartanDatum d = CartanDatum::of_label(label);
        auto roots = positive_roots(d);
        std::set<std::vector<long long>> set;
        for (const auto& r : roots) set.insert(r.coords);
        CHECK(set.size() == roots.size());
        // sorted by height, highest root last
        for (size_t i = 1; i < roots.size(); ++i)
            CHECK(roots[i - 1].height() <= roots[i].height());
        // closed under simple reflections: s_i(r) = r - <r, a_i^vee> a_i
        for (const auto& r : roots) {
            Weight rw = root_to_weight(d, r);
            for (int i = 0; i < d.rank(); ++i) {
                RootVector s = r;
                s.coords[i] -= rw[i];
                bool neg_simple = true;
                for (int j = 0; j < d.rank(); ++j)
                    if (s.coords[j] != (j == i ? -r.coords[j] : 0)) neg_simple = false;
                if (!neg_simple) CHECK(set.count(s.coords) == 1);
            }
            // root lengths: squared length is 2, 4 or 6
            long long len2 = ip_root_root(d, r, r);
            CHECK((len2 == 2 || len2 == 4 || len2 == 6));
        }
    }

    // highest root of G2 has height 5
    CHECK(positive_roots(CartanDatum::of_label("G2")).back().height() == 5);
}

TEST_CASE("Weyl group enumeration") {
    CHECK(weyl_group_elements(CartanDatum::of_label("A1")).size() == 2);
    CHECK(weyl_group_elements(CartanDatum::of_label("A2")).size() == 6);
    CHECK(weyl_group_elements(CartanDatum::of_label("B2")).size() == 8);
    CHECK(weyl_group_elements(CartanDatum::of_label("G2")).size() == 12);
    CHECK(weyl_group_elements(CartanDatum::of_label("A3")).size() == 24);

    CartanDatum d = CartanDatum::of_label("B2");
    auto elems = weyl_group_elements(d);
    CHECK(elems.front().length == 0);
    // lengths are consistent with word sizes and signs alternate accordingly
    for (const auto& w : elems) {
        CHECK(static_cast<int>(w.letters.size()) == w.length);
        CHECK(w.sign() == (w.length % 2 ? -1 : 1));
    }
    // longest element of B2 has length 4
    CHECK(std::max_element(elems.begin(), elems.end(), [](const auto& a, const auto& b) {
              return a.length < b.length;
          })->length == 4);
}

TEST_CASE("orbits, dominance pushes and the dot action") {
    CartanDatum d = CartanDatum::of_label("G2");
    Weight r = rho(d);
    auto orbit = weyl_orbit(d, r);
    CHECK(orbit.size() == 12); // regular weight: orbit size = |W|
    for (const auto& mu : orbit) CHECK(to_dominant(d, mu) == r);

    // the dot action of a reduced word matches repeated simple reflections
    for (const auto& w : weyl_group_elements(d)) {
        Weight lambda{2, 1};
        Weight expect = add(lambda, r);
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
            expect = simple_reflection(d, *it, expect);
        expect = sub(expect, r);
        CHECK(dot_action(d, w, lambda) == expect);
    }

    // orbit sizes divide the group order (stabilizers are subgroups)
    CartanDatum b2 = CartanDatum::of_label("B2");
    for (Weight mu : {Weight{1, 0}, Weight{0, 1}, Weight{1, 1}, Weight{0, 0}})
        CHECK(8 % weyl_orbit(b2, mu).size() == 0);

    // signed push: wall weights report sign 0
    auto [dom, sign] = to_dominant_signed(b2, Weight{-1, 2});
    CHECK(sign == 0); // mu + rho = (0, 3) sits on a wall
    auto [dom2, sign2] = to_dominant_signed(b2, Weight{1, 1});
    CHECK(sign2 == 1);
    CHECK(dom2 == Weight{1, 1});
    (void)dom;
}

TEST_CASE("root coordinates round-trip and rho pairing") {
    for (const char* label : {"A2", "B2", "G2", "C3"}) {
        CartanDatum d = CartanDatum::of_label(label);
        // deterministic pseudo-random root vectors round-trip exactly
        unsigned long long seed = 12345;
        for (int trial = 0; trial < 20; ++trial) {
            RootVector c{std::vector<long long>(d.rank(), 0)};
            for (int i = 0; i < d.rank(); ++i) {
                seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
                c.coords[i] = static_cast<long long>(seed % 11) - 5;
            }
            RootCoords back = weight_to_root_coords(d, root_to_weight(d, c));
            REQUIRE(back.integral);
            CHECK(back.int_coords == c.coords);
        }
        // rho pairs to the height against every positive root's coroot:
        // equivalently mu(2 rho^vee) = 2 sum of root coordinates
        for (const auto& r : positive_roots(d))
            CHECK(pairing_two_rho_check(d, root_to_weight(d, r)) == 2 * r.height());
    }

    // B2 weight lattice has index 2 over the root lattice: exactly one
    // fundamental weight lies outside and must be rejected
    CartanDatum b2 = CartanDatum::of_label("B2");
    int rejected = 0;
    for (Weight mu : {Weight{1, 0}, Weight{0, 1}}) {
        try {
            pairing_two_rho_check(b2, mu);
        } catch (const std::invalid_argument&) {
            ++rejected;
        }
    }
    CHECK(rejected == 1);
}

TEST_CASE("Weyl dimension formula") {
    CartanDatum a2 = CartanDatum::of_label("A2");
    CHECK(weyl_dimension(a2, {0, 0}) == 1);
    CHECK(weyl_dimension(a2, {1, 0}) == 3);
    CHECK(weyl_dimension(a2, {1, 1}) == 8);
    CHECK(weyl_dimension(a2, {3, 0}) == 10);

    CartanDatum b2 = CartanDatum::of_label("B2");
    std::set<long long> fund{weyl_dimension(b2, {1, 0}), weyl_dimension(b2, {0, 1})};
    CHECK(fund == std::set<long long>{4, 5}); // vector and spin representations

    CartanDatum g2 = CartanDatum::of_label("G2");
    std::set<long long> fund_g2{weyl_dimension(g2, {1, 0}), weyl_dimension(g2, {0, 1})};
    CHECK(fund_g2 == std::set<long long>{7, 14});

    // dimension of the adjoint representation equals rank + number of roots
    for (const char* label : {"A2", "B2", "G2", "C3", "D4"}) {
        CartanDatum d = CartanDatum::of_label(label);
        auto roots = positive_roots(d);
        Weight theta = root_to_weight(d, roots.back());
        CHECK(weyl_dimension(d, theta) ==
              d.rank() + 2 * static_cast<long long>(roots.size()));
    }
}
