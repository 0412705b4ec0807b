// Copyright (c) latop contributors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "fixtures.hpp"
#include "latop/galois.hpp"
#include "latop/generators.hpp"
#include "latop/operators.hpp"

using namespace latop;
using fixture::els;

namespace {

template <class F>
void for_each_monotone_map(const lattice& L, const lattice& M, F&& fn) {
    std::vector<element> values(L.size(), element_at(0));
    for (;;) {
        unary_map f(L, M, values);
        if (is_monotone(f))
            fn(f);
        std::size_t i = 0;
        while (i < values.size() && index(values[i]) == M.size() - 1)
            values[i++] = element_at(0);
        if (i == values.size())
            return;
        values[i] = element_at(index(values[i]) + 1);
    }
}

std::vector<lattice> upto_four() {
    return {fixture::singleton(), gen::chain(2), fixture::c3(), gen::chain(4), gen::boolean_lattice(2)};
}

/// Reference residual: max {x | f(x) <= y} by scanning the order.
std::optional<std::vector<element>> brute_residual(const unary_map& f) {
    const auto& L = f.domain();
    const auto& M = f.codomain();
    std::vector<element> g;
    for (element y : M.elements()) {
        std::optional<element> best;
        for (element x : L.elements()) {
            if (!M.leq(f(x), y))
                continue;
            bool greatest = true;
            for (element w : L.elements())
                if (M.leq(f(w), y) && !L.leq(w, x))
                    greatest = false;
            if (greatest)
                best = x;
        }
        if (!best)
            return std::nullopt;
        g.push_back(*best);
    }
    return g;
}

} // namespace

TEST_CASE("residuals of simple maps") {
    const auto B2 = gen::boolean_lattice(2);
    auto r = galois::residual_of(identity_map(B2));
    REQUIRE(r);
    CHECK(r.pair->residual == identity_map(B2));

    r = galois::residual_of(constant_map(B2, B2, B2.bottom()));
    REQUIRE(r);
    CHECK(r.pair->residual == constant_map(B2, B2, B2.top()));

    const unary_map collapse(B2, els(B2, {"0", "ab", "ab", "ab"}));
    r = galois::residual_of(collapse);
    REQUIRE(r);
    CHECK(r.pair->residual == unary_map(B2, els(B2, {"0", "0", "0", "ab"})));
    CHECK(galois::is_residuated_via_ideals(collapse));
    CHECK(galois::is_residuated_via_ideals(identity_map(B2)));
}

TEST_CASE("maps that are not residuated") {
    const auto C3 = fixture::c3();
    const unary_map flip(C3, els(C3, {"1", "m", "0"}));
    auto r = galois::residual_of(flip);
    CHECK_FALSE(r);
    REQUIRE(r.failure);
    CHECK(r.failure->kind == galois::failure_kind::not_monotone);

    // f(0) != 0: nothing maps below 0, so the preimage of ↓0 is empty
    const unary_map lifted(C3, els(C3, {"m", "m", "1"}));
    r = galois::residual_of(lifted);
    CHECK_FALSE(r);
    REQUIRE(r.failure);
    CHECK(r.failure->kind == galois::failure_kind::no_maximum);
    CHECK(fixture::tokens(C3, r.failure->witness) == std::vector<std::string>{"0"});
    CHECK_FALSE(galois::is_residuated_via_ideals(lifted));
}

TEST_CASE("atom-fixing map on the diamond") {
    const auto M3 = gen::diamond(3);
    const unary_map f(M3, els(M3, {"0", "a", "b", "c", "1"}));
    CHECK(galois::is_residuated_via_ideals(f));
    CHECK(galois::residual_of(f));
}

TEST_CASE("Galois connection test") {
    const auto C3 = fixture::c3();
    CHECK(galois::is_galois_connection(identity_map(C3), identity_map(C3)));
    CHECK_LATTICE_ERROR(galois::is_galois_connection(unary_map(C3, els(C3, {"1", "m", "0"})), identity_map(C3)),
                        error_kind::not_monotone);
    CHECK_LATTICE_ERROR(galois::is_galois_connection(identity_map(C3), identity_map(gen::chain(2))),
                        error_kind::lattice_mismatch);
}

TEST_CASE("perturbed residual fails every characterization") {
    const auto B2 = gen::boolean_lattice(2);
    const unary_map collapse(B2, els(B2, {"0", "ab", "ab", "ab"}));
    const unary_map wrong(B2, els(B2, {"0", "a", "0", "ab"}));
    const auto rep = galois::characterization_agrees(collapse, wrong);
    CHECK_FALSE(rep.unit_counit);
    CHECK_FALSE(rep.biconditional);
    CHECK_FALSE(rep.max_form);
    CHECK_FALSE(rep.min_form);
    CHECK(rep.all_agree());

    const auto id = galois::characterization_agrees(identity_map(B2), identity_map(B2));
    CHECK(id.unit_counit);
    CHECK(id.biconditional);
    CHECK(id.max_form);
    CHECK(id.min_form);
}

TEST_CASE("residual theory over every monotone map of small lattices") {
    const auto all = upto_four();
    for (const auto& L : all) {
        for (const auto& M : all) {
            for_each_monotone_map(L, M, [&](const unary_map& f) {
                const auto r = galois::residual_of(f);
                const auto expected = brute_residual(f);
                CHECK(static_cast<bool>(r) == expected.has_value());
                CHECK(static_cast<bool>(r) == static_cast<bool>(galois::is_residuated_via_ideals(f)));
                if (!r)
                    return;
                CHECK(std::vector<element>(r.pair->residual.values().begin(), r.pair->residual.values().end()) ==
                      *expected);
                CHECK(galois::is_galois_connection(f, r.pair->residual));
                const auto rep = galois::characterization_agrees(f, r.pair->residual);
                CHECK(rep.unit_counit);
                CHECK(rep.all_agree());
                CHECK(galois::preserves_all_joins(f));

                // uniqueness: no other monotone g forms a connection with f
                std::size_t partners = 0;
                for_each_monotone_map(M, L, [&](const unary_map& g) {
                    if (galois::is_galois_connection(f, g)) {
                        ++partners;
                        CHECK(g == r.pair->residual);
                    }
                    CHECK(galois::characterization_agrees(f, g).all_agree());
                });
                CHECK(partners == 1);
            });
        }
    }
}

TEST_CASE("sections of residuated quasi-overlaps") {
    for (const auto& L : {fixture::c3(), gen::chain(4)}) {
        for (const auto& O : ops::enumerate_quasi_overlaps(L)) {
            const auto I = ops::induced_implication(O);
            for (element x : L.elements()) {
                const auto forward = unary_map::tabulate(L, L, [&](element t) { return O(x, t); });
                const auto backward = unary_map::tabulate(L, L, [&](element y) { return I(x, y); });
                CHECK(galois::is_galois_connection(forward, backward));
            }
        }
    }
}
