// Copyright (c) latop contributors.
// SPDX-License-Identifier: Apache-2.0

#include "latop/galois.hpp"

#include <cstdint>

namespace latop::galois {

namespace {

// Maximum of S under the order of L, not the token order.
std::optional<element> maximum(const lattice& L, const subset& S) {
    for (auto m = S.find_first(); m != subset::npos; m = S.find_next(m))
        if (S.is_subset_of(L.down_set(element_at(m))))
            return element_at(m);
    return std::nullopt;
}

std::optional<element> minimum(const lattice& L, const subset& S) {
    for (auto m = S.find_first(); m != subset::npos; m = S.find_next(m))
        if (S.is_subset_of(L.up_set(element_at(m))))
            return element_at(m);
    return std::nullopt;
}

std::optional<element_set> monotonicity_violation(const unary_map& f) {
    const auto& M = f.codomain();
    for (auto [x1, x2] : f.domain().covers())
        if (!M.leq(f(x1), f(x2)))
            return element_set{x1, x2};
    return std::nullopt;
}

subset lower_preimage(const unary_map& f, element y) {
    const auto& L = f.domain();
    subset pre(L.size());
    for (element x : L.elements())
        if (f.codomain().leq(f(x), y))
            pre.set(index(x));
    return pre;
}

bool same_direction(const unary_map& f, const unary_map& g) {
    return f.codomain() == g.domain() && g.codomain() == f.domain();
}

} // namespace

residual_result residual_of(const unary_map& f) {
    if (auto bad = monotonicity_violation(f))
        return {std::nullopt, not_residuated{failure_kind::not_monotone, *bad}};

    const auto& M = f.codomain();
    std::vector<element> values;
    values.reserve(M.size());
    for (element y : M.elements()) {
        auto top = maximum(f.domain(), lower_preimage(f, y));
        if (!top)
            return {std::nullopt, not_residuated{failure_kind::no_maximum, {y}}};
        values.push_back(*top);
    }
    return {residuated_pair{f, unary_map(M, f.domain(), std::move(values))}, std::nullopt};
}

check_result is_residuated_via_ideals(const unary_map& f) {
    const auto& L = f.domain();
    for (element w : f.codomain().elements()) {
        const subset pre = lower_preimage(f, w);
        // Principal ideal: nonempty, down-closed and equal to ↓max.
        auto top = maximum(L, pre);
        if (!top || pre != L.down_set(*top))
            return check_result::fail({w});
    }
    return check_result::ok();
}

check_result is_galois_connection(const unary_map& f, const unary_map& g) {
    if (!same_direction(f, g))
        throw lattice_error(error_kind::lattice_mismatch, "g must map f's codomain back to f's domain");
    if (!is_monotone(f) || !is_monotone(g))
        throw lattice_error(error_kind::not_monotone, "a Galois connection needs monotone maps");
    const auto& L = f.domain();
    const auto& M = f.codomain();
    for (element x : L.elements())
        for (element y : M.elements())
            if (M.leq(f(x), y) != L.leq(x, g(y)))
                return check_result::fail({x, y});
    return check_result::ok();
}

characterization_report characterization_agrees(const unary_map& f, const unary_map& g) {
    if (!same_direction(f, g))
        throw lattice_error(error_kind::lattice_mismatch, "g must map f's codomain back to f's domain");
    const auto& L = f.domain();
    const auto& M = f.codomain();
    const bool f_monotone = is_monotone(f);
    const bool g_monotone = is_monotone(g);
    characterization_report r;

    r.unit_counit = f_monotone && g_monotone;
    for (element x : L.elements())
        r.unit_counit = r.unit_counit && L.leq(x, g(f(x)));
    for (element y : M.elements())
        r.unit_counit = r.unit_counit && M.leq(f(g(y)), y);

    r.biconditional = true;
    for (element x : L.elements())
        for (element y : M.elements())
            r.biconditional = r.biconditional && (M.leq(f(x), y) == L.leq(x, g(y)));

    r.max_form = f_monotone;
    for (element y : M.elements()) {
        auto top = maximum(L, lower_preimage(f, y));
        r.max_form = r.max_form && top && *top == g(y);
    }

    r.min_form = g_monotone;
    for (element x : L.elements()) {
        subset above(M.size());
        for (element y : M.elements())
            if (L.leq(x, g(y)))
                above.set(index(y));
        auto least = minimum(M, above);
        r.min_form = r.min_form && least && *least == f(x);
    }
    return r;
}

check_result preserves_all_joins(const unary_map& f) {
    const auto& L = f.domain();
    const auto& M = f.codomain();
    const std::size_t n = L.size();
    if (n > 16)
        throw lattice_error(error_kind::too_large, "join-preservation scan limited to 16 elements");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        element_set members, image;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1U) {
                members.push_back(element_at(i));
                image.push_back(f(element_at(i)));
            }
        }
        if (f(sup_set(L, members)) != sup_set(M, image))
            return check_result::fail(std::move(members));
    }
    return check_result::ok();
}

} // namespace latop::galois
