// Copyright (c) latop contributors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "fixtures.hpp"
#include "latop/generators.hpp"
#include "latop/operators.hpp"

using namespace latop;

namespace {

/// Same size and an order-preserving-and-reflecting bijection exists.
bool isomorphic(const lattice& L, const lattice& M) {
    if (L.size() != M.size())
        return false;
    std::vector<std::size_t> perm(L.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (element x : L.elements())
            for (element y : L.elements())
                ok = ok && L.leq(x, y) == M.leq(element_at(perm[index(x)]), element_at(perm[index(y)]));
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace

TEST_CASE("chains") {
    const auto C2 = gen::chain(2);
    CHECK(C2.name() == "C2");
    CHECK(std::vector<std::string>(C2.tokens().begin(), C2.tokens().end()) == std::vector<std::string>{"c0", "c1"});
    CHECK(gen::chain(3).covers().size() == 2);
    CHECK(gen::chain(1).size() == 1);
    CHECK_LATTICE_ERROR(gen::chain(0), error_kind::bad_parameter);
    CHECK_LATTICE_ERROR(gen::chain(gen::max_generated_size + 1), error_kind::too_large);
}

TEST_CASE("boolean lattices and diamonds") {
    const auto B2 = gen::boolean_lattice(2);
    CHECK(B2.name() == "B2");
    CHECK(std::vector<std::string>(B2.tokens().begin(), B2.tokens().end()) ==
          std::vector<std::string>{"0", "a", "b", "ab"});
    CHECK(isomorphic(B2, gen::diamond(2)));
    CHECK(gen::diamond(3).size() == 5);
    const auto B3 = gen::boolean_lattice(3);
    CHECK(B3.size() == 8);
    CHECK(B3.covers().size() == 12);
    CHECK_LATTICE_ERROR(gen::boolean_lattice(13), error_kind::too_large);
    CHECK(gen::diamond(27).token(element_at(27)) == "a26");
}

TEST_CASE("products") {
    const auto C2 = gen::chain(2);
    const auto P = gen::product(C2, C2);
    CHECK(isomorphic(P, gen::boolean_lattice(2)));
    const auto Q = gen::product(gen::chain(3), C2);
    CHECK(Q.size() == 6);
    CHECK(Q.token(Q.bottom()) == "(c0,c0)");
    CHECK(Q.token(Q.top()) == "(c2,c1)");
    for (element x : Q.elements())
        for (element y : Q.elements())
            CHECK(Q.leq(x, y) == (index(x) / 2 <= index(y) / 2 && index(x) % 2 <= index(y) % 2));
}

TEST_CASE("interval grids") {
    const auto I1 = gen::interval_grid(1);
    CHECK(I1.size() == 3);
    CHECK(isomorphic(I1, gen::chain(3)));
    const auto I2 = gen::interval_grid(2);
    CHECK(I2.size() == 6);
    CHECK(I2.meet(I2.at("[0,1]"), I2.at("[1/2,1/2]")) == I2.at("[0,1/2]"));
    CHECK(gen::grid_label(2, 4) == "1/2");
    CHECK(gen::grid_label(0, 4) == "0");
    CHECK(gen::grid_label(4, 4) == "1");

    // componentwise meet and join of endpoints
    for (std::size_t k = 1; k <= 4; ++k) {
        const auto G = gen::interval_grid(k);
        auto endpoints = [&](element e) {
            const auto& t = G.token(e);
            const auto comma = t.find(',');
            return std::pair{t.substr(1, comma - 1), t.substr(comma + 1, t.size() - comma - 2)};
        };
        auto value = [&](const std::string& label) {
            for (std::size_t i = 0; i <= k; ++i)
                if (gen::grid_label(i, k) == label)
                    return i;
            FAIL("bad label " << label);
            return std::size_t{0};
        };
        for (element x : G.elements()) {
            for (element y : G.elements()) {
                const auto [a, b] = endpoints(x);
                const auto [c, d] = endpoints(y);
                const auto [m1, m2] = endpoints(G.meet(x, y));
                const auto [j1, j2] = endpoints(G.join(x, y));
                CHECK(value(m1) == std::min(value(a), value(c)));
                CHECK(value(m2) == std::min(value(b), value(d)));
                CHECK(value(j1) == std::max(value(a), value(c)));
                CHECK(value(j2) == std::max(value(b), value(d)));
            }
        }
    }
}

TEST_CASE("diamond meet is a negative quasi-overlap fixture") {
    for (std::size_t k = 3; k <= 5; ++k)
        CHECK_FALSE(ops::validate_quasi_overlap(meet_table(gen::diamond(k))).find("OL2")->result.pass);
}

TEST_CASE("search catalog") {
    auto names = [](std::size_t k) {
        std::vector<std::string> out;
        for (const auto& L : gen::search_catalog(k))
            out.push_back(L.name());
        return out;
    };
    CHECK(names(3) == std::vector<std::string>{"C2", "C3"});
    CHECK(names(4) == std::vector<std::string>{"C2", "C3", "C4", "B2"});
    CHECK(names(5) == std::vector<std::string>{"C2", "C3", "C4", "C5", "B2", "M3"});
}
