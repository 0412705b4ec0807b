// Copyright (c) latop contributors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "fixtures.hpp"
#include "latop/automorphism.hpp"
#include "latop/generators.hpp"
#include "latop/operators.hpp"

using namespace latop;
using fixture::els;

namespace {

std::vector<lattice> upto_five() {
    return {gen::chain(2), fixture::c3(), gen::chain(4), gen::chain(5), gen::boolean_lattice(2), gen::diamond(3)};
}

aut::automorphism swap_b2(const lattice& B2) { return aut::automorphism(B2, els(B2, {"0", "b", "a", "ab"})); }

} // namespace

TEST_CASE("automorphism groups match permutation brute force") {
    for (const auto& L : upto_five()) {
        CAPTURE(L.name());
        const auto group = aut::enumerate_automorphisms(L);
        const auto expected = oracle::automorphisms(fixture::poset_of(L));
        REQUIRE(group.size() == expected.size());
        CHECK(group.front() == aut::identity(L));
        for (std::size_t i = 0; i < group.size(); ++i) {
            std::vector<int> image;
            for (element e : group[i].image())
                image.push_back(static_cast<int>(index(e)));
            CHECK(image == expected[i]);
        }
    }
    CHECK(aut::enumerate_automorphisms(gen::chain(5)).size() == 1);
    CHECK(aut::enumerate_automorphisms(gen::boolean_lattice(2)).size() == 2);
    CHECK(aut::enumerate_automorphisms(gen::diamond(3)).size() == 6);
    CHECK_LATTICE_ERROR(aut::enumerate_automorphisms(gen::chain(11)), error_kind::too_large);
}

TEST_CASE("invalid automorphisms") {
    const auto C3 = fixture::c3();
    CHECK_LATTICE_ERROR(aut::automorphism(C3, els(C3, {"1", "m", "0"})), error_kind::not_automorphism);
    CHECK_LATTICE_ERROR(aut::automorphism(C3, els(C3, {"0", "0", "1"})), error_kind::not_automorphism);
    CHECK_LATTICE_ERROR(aut::automorphism(C3, els(C3, {"0", "m"})), error_kind::not_automorphism);
}

TEST_CASE("group operations") {
    const auto B2 = gen::boolean_lattice(2);
    const auto swap = swap_b2(B2);
    CHECK(aut::compose(swap, swap) == aut::identity(B2));
    CHECK(aut::inverse(aut::identity(B2)) == aut::identity(B2));
    CHECK(aut::inverse(swap) == swap);

    const auto M3 = gen::diamond(3);
    const auto group = aut::enumerate_automorphisms(M3);
    for (const auto& r1 : group) {
        for (const auto& r2 : group) {
            const auto c = aut::compose(r1, r2);
            CHECK(std::find(group.begin(), group.end(), c) != group.end());
            for (element x : M3.elements())
                CHECK(c(x) == r1(r2(x)));
        }
        CHECK(aut::compose(r1, aut::inverse(r1)) == aut::identity(M3));
    }
}

TEST_CASE("automorphisms preserve bounds and lattice operations") {
    for (const auto& L : upto_five()) {
        for (const auto& rho : aut::enumerate_automorphisms(L)) {
            CHECK(rho(L.bottom()) == L.bottom());
            CHECK(rho(L.top()) == L.top());
            for (element x : L.elements()) {
                CHECK(rho.inverse_at(rho(x)) == x);
                for (element y : L.elements()) {
                    CHECK(rho(L.meet(x, y)) == L.meet(rho(x), rho(y)));
                    CHECK(rho(L.join(x, y)) == L.join(rho(x), rho(y)));
                }
            }
        }
    }
}

TEST_CASE("conjugation of operators") {
    const auto B2 = gen::boolean_lattice(2);
    const auto swap = swap_b2(B2);
    const auto meet = meet_table(B2);
    CHECK(aut::conjugate(meet, aut::identity(B2)) == meet);
    CHECK(aut::conjugate(meet, swap) == meet);
    CHECK_LATTICE_ERROR(aut::conjugate_op(meet, swap), error_kind::not_quasi_overlap);

    // the two quasi-overlaps on B2 are exchanged by the swap
    const auto qs = ops::enumerate_quasi_overlaps(B2);
    REQUIRE(qs.size() == 2);
    CHECK(qs[0](B2.at("a"), B2.at("a")) == qs[0](B2.at("b"), B2.at("b")));
    CHECK(aut::conjugate_op(qs[0], swap) == qs[1]);
    CHECK(aut::conjugate_op(qs[1], swap) == qs[0]);
}

TEST_CASE("conjugation of implications") {
    const auto B2 = gen::boolean_lattice(2);
    const auto swap = swap_b2(B2);
    const auto I = ops::residuum(meet_table(B2));
    CHECK(aut::conjugate_implication(I, aut::identity(B2)) == I);
    const auto J = aut::conjugate_implication(I, swap);
    for (element x : B2.elements())
        for (element y : B2.elements())
            CHECK(J(swap(x), swap(y)) == swap(I(x, y)));
    CHECK(aut::conjugate_implication(J, aut::inverse(swap)) == I);
}

TEST_CASE("conjugation is a group action preserving every axiom verdict") {
    for (const auto& L : upto_five()) {
        const auto group = aut::enumerate_automorphisms(L);
        for (const auto& O : ops::enumerate_quasi_overlaps(L)) {
            CHECK(aut::conjugate_op(O, aut::identity(L)) == O);
            for (const auto& r1 : group) {
                const auto O1 = aut::conjugate_op(O, r1);
                CHECK(ops::is_quasi_overlap(O1));
                CHECK(aut::check_coincide(O, r1));
                CHECK(static_cast<bool>(ops::max_attained(O)) == static_cast<bool>(ops::max_attained(O1)));
                const auto a = ops::validate_quasi_overlap(O);
                const auto b = ops::validate_quasi_overlap(O1);
                REQUIRE(a.verdicts.size() == b.verdicts.size());
                for (std::size_t i = 0; i < a.verdicts.size(); ++i)
                    CHECK(a.verdicts[i].result.pass == b.verdicts[i].result.pass);
                for (const auto& r2 : group)
                    CHECK(aut::conjugate_op(O1, r2) == aut::conjugate_op(O, aut::compose(r1, r2)));
            }
        }
    }
}

TEST_CASE("closure maps of meet on a chain") {
    const auto C3 = fixture::c3();
    const auto meet = meet_table(C3);
    const auto id = aut::identity(C3);
    const auto phi_m = aut::closure_phi(meet, id, C3.at("m"));
    CHECK(phi_m == unary_map(C3, els(C3, {"1", "1", "m"})));
    CHECK(aut::closure_psi(meet, id, C3.at("m")) == phi_m);

    const auto report = aut::check_closed_operator(phi_m);
    CHECK_FALSE(report.monotone);
    CHECK(report.inflationary == false); // φ_m(1) = m < 1
    CHECK(report.idempotent == false);   // φ_m(φ_m(1)) = φ_m(m) = 1 ≠ m

    CHECK(aut::closure_phi(meet, id, C3.top()) == constant_map(C3, C3, C3.top()));

    const auto top = aut::check_psi_phi_adjunction(meet, id, C3.top());
    CHECK(top.antitone_galois);
    CHECK(top.psi.closed());
    CHECK(top.phi.closed());
    CHECK(top.psi_after_phi.closed());
    CHECK(top.phi_after_psi.closed());

    for (element z : C3.elements()) {
        const auto r = aut::check_psi_phi_adjunction(meet, id, z);
        CHECK(r.antitone_galois);
        CHECK(r.psi_after_phi.closed());
        CHECK(r.phi_after_psi.closed());
    }
}

TEST_CASE("closed operator checks") {
    const auto B2 = gen::boolean_lattice(2);
    CHECK(aut::check_closed_operator(identity_map(B2)).closed());
    CHECK(aut::check_closed_operator(constant_map(B2, B2, B2.top())).closed());
    const auto r = aut::check_closed_operator(constant_map(B2, B2, B2.bottom()));
    CHECK(r.monotone);
    CHECK(r.idempotent);
    CHECK_FALSE(r.inflationary);
}

TEST_CASE("closure maps require attained maxima") {
    const auto B2 = gen::boolean_lattice(2);
    for (const auto& O : ops::enumerate_quasi_overlaps(B2)) {
        CHECK_LATTICE_ERROR(aut::closure_phi(O, aut::identity(B2), B2.at("a")), error_kind::not_residuated);
        CHECK_LATTICE_ERROR(aut::closure_psi(O, swap_b2(B2), B2.at("a")), error_kind::not_residuated);
    }
}

TEST_CASE("adjunction sweep over residuated chain operators") {
    for (std::size_t k = 2; k <= 5; ++k) {
        const auto L = gen::chain(k);
        const auto id = aut::identity(L);
        for (const auto& O : ops::enumerate_quasi_overlaps(L)) {
            for (element z : L.elements()) {
                CHECK(aut::closure_phi(O, id, z) == aut::closure_psi(O, id, z));
                const auto r = aut::check_psi_phi_adjunction(O, id, z);
                CHECK(r.antitone_galois);
                CHECK(r.psi_after_phi.closed());
                CHECK(r.phi_after_psi.closed());
            }
        }
    }
}
