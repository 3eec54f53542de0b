#include <catch2/catch_amalgamated.hpp>

#include "cohalab/cross_check.hpp"
#include "cohalab/module_dims.hpp"

using namespace cohalab;

TEST_CASE("module dims trivial cases", "[module]") {
    Quiver q = Quiver::one_vertex(2);
    // d = 0: dimension 1 at degree 0
    ModuleDims m0 = module_dims(q, DimVector({1}), DimVector({0}), -2, 2);
    CHECK(m0.dims == std::map<std::pair<DimVector, int>, int>{{{DimVector({0}), 0}, 1}});

    // w = 0, d > 0: the ideal is everything, all dimensions vanish
    for (int n = 1; n <= 3; ++n) {
        DimVector d({n});
        int chi = q.euler_self(d);
        ModuleDims m = module_dims(q, DimVector({0}), d, chi, chi + 12);
        CHECK(m.dims.empty());
    }
}

TEST_CASE("Catalan dimensions of the framed module", "[module]") {
    Quiver q = Quiver::one_vertex(2);
    DimVector w({1});
    int catalan[] = {1, 1, 2, 5, 14};
    for (int n = 1; n <= 4; ++n) {
        DimVector d({n});
        int chi = q.euler_self(d);
        // degrees k = p + chi with p the polynomial degree, p <= 2*binom(n,2)+margin
        ModuleDims m = module_dims(q, w, d, chi, chi + 2 * n * (n - 1) + 4);
        INFO("n = " << n);
        CHECK(m.total(d) == catalan[n]);
    }
}

TEST_CASE("module dims against dual framed span gradings", "[module]") {
    // dictionary: dim M_{w,d}^k = dim Q_{w,d} at twice-weight k
    Quiver q = Quiver::one_vertex(2);
    DimVector w({1});
    for (int n = 1; n <= 3; ++n) {
        DimVector d({n});
        SpanResult span = span_framed(q, w, d, WeightWindow{0});
        REQUIRE(span.saturated);
        int chi = q.euler_self(d);
        ModuleDims m = module_dims(q, w, d, chi, 0);
        std::map<int, int> mdims;
        for (const auto& [key, dim] : m.dims) mdims[key.second] = dim;
        CHECK(mdims == span.dims);
    }
}

TEST_CASE("module dims grow with the framing", "[module]") {
    Quiver q = Quiver::one_vertex(2);
    for (int n = 1; n <= 3; ++n) {
        DimVector d({n});
        int chi = q.euler_self(d);
        ModuleDims m1 = module_dims(q, DimVector({1}), d, chi, chi + 12);
        ModuleDims m2 = module_dims(q, DimVector({2}), d, chi, chi + 12);
        for (const auto& [key, dim] : m1.dims) {
            auto it = m2.dims.find(key);
            CHECK(it != m2.dims.end());
            if (it != m2.dims.end()) CHECK(it->second >= dim);
        }
    }
}

TEST_CASE("cross check at w = 0 is the point", "[cross]") {
    Quiver q = Quiver::one_vertex(2);
    CrossReport rep = cross_check(q, DimVector({0}), DimVector({0}), WeightWindow{8}, -4, 4);
    CHECK(rep.all_agree);
    CHECK(rep.saturated);
    REQUIRE(rep.cells.count(0) == 1);
    CHECK(rep.cells.at(0).dim_fock == 1);
    CHECK(rep.cells.at(0).dim_quotient == 1);
    CHECK(rep.cells.at(0).dim_character == 1);

    for (int n = 1; n <= 2; ++n) {
        CrossReport r = cross_check(q, DimVector({0}), DimVector({n}), WeightWindow{8},
                                    q.euler_self(DimVector({n})), 4);
        CHECK(r.all_agree);
        for (const auto& [k, cell] : r.cells) CHECK(cell.dim_fock == 0);
    }
}

TEST_CASE("three-way agreement for the Catalan configuration", "[cross]") {
    Quiver q = Quiver::one_vertex(2);
    DimVector w({1});
    for (int n = 1; n <= 4; ++n) {
        DimVector d({n});
        int chi = q.euler_self(d);
        CrossReport rep = cross_check(q, w, d, WeightWindow{0}, chi, 0);
        INFO("n = " << n << " q-polynomial " << rep.q_polynomial);
        CHECK(rep.saturated);
        CHECK(rep.all_agree);
    }
}

TEST_CASE("three-way agreement for the two-vertex configuration", "[cross]") {
    Quiver q(2, {{2, 1}, {1, 2}});
    DimVector w({1, 1});
    DimVector cap({2, 2});
    for (const auto& d : enumerate_dimvectors(2, 4, &cap)) {
        if (d.is_zero()) continue;
        int chi = q.euler_self(d);
        CrossReport rep = cross_check(q, w, d, WeightWindow{0}, chi, 0);
        INFO("d = " << d.render());
        CHECK(rep.saturated);
        CHECK(rep.all_agree);
    }
}

TEST_CASE("three-way agreement persists for a larger framing", "[cross]") {
    Quiver q = Quiver::one_vertex(2);
    DimVector w({2});
    for (int n = 1; n <= 3; ++n) {
        DimVector d({n});
        CrossReport rep = cross_check(q, w, d, WeightWindow{2 * n}, q.euler_self(d), 2 * n);
        INFO("n = " << n << " q-polynomial " << rep.q_polynomial);
        CHECK(rep.saturated);
        CHECK(rep.all_agree);
    }
}

TEST_CASE("parking function note at d = (1,1)", "[cross]") {
    Quiver q(2, {{2, 1}, {1, 2}});
    CrossReport rep = cross_check(q, DimVector({1, 1}), DimVector({1, 1}), WeightWindow{0}, -4, 0);
    REQUIRE(rep.note.has_value());
    CHECK(rep.note->find("3") != std::string::npos);
    CHECK(rep.note->find("matches") != std::string::npos);
}

TEST_CASE("symmetry identities hold for the test quivers", "[cross]") {
    std::vector<Quiver> quivers = {Quiver::one_vertex(0), Quiver::one_vertex(1),
                                   Quiver::one_vertex(2), Quiver(2, {{2, 1}, {1, 2}})};
    for (const auto& q : quivers) {
        SymmetryReport rep = symmetry_identity_check(q, 3, 16);
        INFO(q.render() << ": " << rep.message);
        CHECK(rep.ok);
    }
    // smallest case: one vertex, no arrows, dmax = 1
    SymmetryReport rep = symmetry_identity_check(Quiver::one_vertex(0), 1, 8);
    CHECK(rep.ok);
}
