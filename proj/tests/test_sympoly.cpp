#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "cohalab/expanded_poly.hpp"
#include "cohalab/sympoly.hpp"

using namespace cohalab;

TEST_CASE("monomial basis enumeration", "[sympoly]") {
    // d = (1), degree 0 -> [1]
    auto b = monomial_basis(DimVector({1}), 0);
    REQUIRE(b.size() == 1);
    CHECK(b[0] == SymPoly::one(DimVector({1})));

    // d = (2), degree 2 -> [m_{(1,0)}]
    b = monomial_basis(DimVector({2}), 2);
    REQUIRE(b.size() == 1);
    CHECK(b[0] == SymPoly::orbit(DimVector({2}), {{1, 0}}));

    // d = (2), degree 4 -> [m_{(2,0)}, m_{(1,1)}]
    b = monomial_basis(DimVector({2}), 4);
    REQUIRE(b.size() == 2);
    std::vector<SymPoly> expect = {SymPoly::orbit(DimVector({2}), {{1, 1}}),
                                   SymPoly::orbit(DimVector({2}), {{2, 0}})};
    CHECK((b[0] == expect[0] || b[0] == expect[1]));
    CHECK((b[1] == expect[0] || b[1] == expect[1]));
    CHECK(b[0] != b[1]);

    // odd or negative degrees have no basis
    CHECK(monomial_basis(DimVector({2}), 3).empty());
    CHECK(monomial_basis(DimVector({2}), -2).empty());

    // two-vertex split
    b = monomial_basis(DimVector({1, 1}), 2);
    REQUIRE(b.size() == 2);
}

TEST_CASE("basis counts match the partition generating function", "[sympoly]") {
    // #basis(Lambda_n at degree 2m) = #partitions of m into <= n parts
    auto partitions = [](int m, int maxlen) {
        std::function<int(int, int, int)> rec = [&](int rem, int maxpart, int len) -> int {
            if (rem == 0) return 1;
            if (len == 0) return 0;
            int s = 0;
            for (int p = std::min(rem, maxpart); p >= 1; --p) s += rec(rem - p, p, len - 1);
            return s;
        };
        return rec(m, m == 0 ? 1 : m, maxlen);
    };
    for (int n = 1; n <= 4; ++n)
        for (int m = 0; m <= 6; ++m)
            CHECK(static_cast<int>(monomial_basis(DimVector({n}), 2 * m).size()) ==
                  partitions(m, n));
}

TEST_CASE("frame ideal generators", "[sympoly]") {
    // w = 0: generators are the monomial basis itself
    DimVector d({2});
    auto gens = frame_ideal_generators(DimVector({0}), d, 4);
    CHECK(gens == monomial_basis(d, 4));

    // one vertex, w = (1), d = (1), poly degree 2 -> [x] = [m_{(1)}]
    gens = frame_ideal_generators(DimVector({1}), DimVector({1}), 2);
    REQUIRE(gens.size() == 1);
    CHECK(gens[0] == SymPoly::orbit(DimVector({1}), {{1}}));

    // one vertex, w = (1), d = (2), poly degree 4 -> [x1 x2] = [m_{(1,1)}]
    gens = frame_ideal_generators(DimVector({1}), DimVector({2}), 4);
    REQUIRE(gens.size() == 1);
    CHECK(gens[0] == SymPoly::orbit(DimVector({2}), {{1, 1}}));

    // infeasible degree -> empty
    CHECK(frame_ideal_generators(DimVector({1}), DimVector({2}), 2).empty());
}

TEST_CASE("expansion and collection round-trip", "[sympoly]") {
    DimVector d({2, 1});
    for (const auto& b : monomial_basis(d, 6)) {
        MultiPoly e = expand_sympoly(b);
        CHECK(collect_sympoly(e, d) == b);
    }
    // m_{(1,0)} expands to x1 + x2
    MultiPoly e = expand_sympoly(SymPoly::orbit(DimVector({2}), {{1, 0}}));
    CHECK(e.terms().size() == 2);
}

TEST_CASE("orbit keys are canonical and render deterministically", "[sympoly]") {
    SymPoly p = SymPoly::orbit(DimVector({2, 1}), {{0, 2}, {1}});
    OrbitKey expect{{2, 0}, {1}};
    CHECK(p.terms().begin()->first == expect);
    CHECK(p.render() == "m[(2,0);(1)]");
    SymPoly z = SymPoly::zero(DimVector({1}));
    CHECK(z.render() == "0");
}

TEST_CASE("multipoly exact division", "[sympoly]") {
    // (z0 - z1)(z0 + z1) / (z0 - z1) = z0 + z1
    MultiPoly diff = MultiPoly::difference(2, 0, 1);
    MultiPoly sum = MultiPoly::variable(2, 0) + MultiPoly::variable(2, 1);
    MultiPoly prod = diff * sum;
    CHECK(prod.divided_by_difference(0, 1) == sum);
    CHECK_THROWS_AS(sum.divided_by_difference(0, 1), std::logic_error);
}
