// Copyright (c) latop contributors.
// SPDX-License-Identifier: Apache-2.0

#include "latop/scott.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace latop::scott {

namespace {

subset mask_to_subset(std::uint64_t mask, std::size_t n) {
    subset s(n);
    for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1U)
            s.set(i);
    return s;
}

void require_scan_size(std::size_t n) {
    if (n > max_directed_scan_size)
        throw lattice_error(error_kind::too_large, "directed-set scan limited to " +
                                                       std::to_string(max_directed_scan_size) + " elements");
}

// Whether every pair of members has an upper bound among the members, with
// `upper(i)` returning the up-set of member i as a mask over the carrier.
template <class Upper>
bool mask_is_directed(std::uint64_t mask, Upper upper) {
    if (mask == 0)
        return false;
    for (std::uint64_t a = mask; a; a &= a - 1) {
        const int i = std::countr_zero(a);
        for (std::uint64_t b = a & (a - 1); b; b &= b - 1) {
            const int j = std::countr_zero(b);
            if ((upper(i) & upper(j) & mask) == 0)
                return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> up_masks(const lattice& L) {
    std::vector<std::uint64_t> up(L.size(), 0);
    for (element x : L.elements())
        for (element y : L.elements())
            if (L.leq(x, y))
                up[index(x)] |= std::uint64_t{1} << index(y);
    return up;
}

} // namespace

void for_each_directed_subset(const lattice& L, const std::function<void(const subset&)>& fn) {
    const std::size_t n = L.size();
    require_scan_size(n);
    const auto up = up_masks(L);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
        if (mask_is_directed(mask, [&](int i) { return up[i]; }))
            fn(mask_to_subset(mask, n));
}

bool is_upper_set(const lattice& L, const subset& A) {
    if (A.size() != L.size())
        throw lattice_error(error_kind::unknown_element, "subset does not match the lattice size");
    for (auto x = A.find_first(); x != subset::npos; x = A.find_next(x))
        if (!L.up_set(element_at(x)).is_subset_of(A))
            return false;
    return true;
}

bool is_scott_open(const lattice& L, const subset& A) {
    if (!is_upper_set(L, A))
        return false;
    // A directed subset of a finite lattice holds its own supremum, so the
    // second condition is automatic; it is still scanned where affordable.
    if (L.size() > max_directed_scan_size)
        return true;
    bool inaccessible = true;
    for_each_directed_subset(L, [&](const subset& D) {
        if (A.test(index(sup_set(L, to_elements(D)))) && !D.intersects(A))
            inaccessible = false;
    });
    return inaccessible;
}

bool is_scott_open(const lattice& L, std::span<const element> A) { return is_scott_open(L, to_subset(L, A)); }

open_family enumerate_scott_opens(const lattice& L) {
    const std::size_t n = L.size();
    if (n > max_enumeration_size)
        throw lattice_error(error_kind::too_large,
                            "Scott open enumeration limited to " + std::to_string(max_enumeration_size) + " elements");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> covers;
    for (auto [x, y] : L.covers())
        covers.emplace_back(std::uint32_t{1} << index(x), std::uint32_t{1} << index(y));

    open_family family{L, {}};
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        const auto mask = static_cast<std::uint32_t>(m);
        const bool upper =
            std::ranges::all_of(covers, [mask](auto c) { return !(mask & c.first) || (mask & c.second); });
        if (upper)
            family.opens.push_back(mask_to_subset(m, n));
    }
    return family;
}

bool is_topology(const open_family& family) {
    const std::size_t n = family.carrier.size();
    const auto& opens = family.opens;
    auto contains = [&](const subset& s) { return std::ranges::find(opens, s) != opens.end(); };
    subset empty(n), full(n);
    full.set();
    if (!contains(empty) || !contains(full))
        return false;
    // Finite families: pairwise closure gives closure under every union.
    for (std::size_t i = 0; i < opens.size(); ++i)
        for (std::size_t j = i + 1; j < opens.size(); ++j)
            if (!contains(opens[i] | opens[j]) || !contains(opens[i] & opens[j]))
                return false;
    return true;
}

bool is_scott_continuous_unary(const unary_map& f) {
    const bool monotone = is_monotone(f);
    const auto& L = f.domain();
    const auto& M = f.codomain();
    if (L.size() > max_directed_scan_size)
        return monotone;

    bool preserves = true;
    for_each_directed_subset(L, [&](const subset& D) {
        if (!preserves)
            return;
        element_set image;
        for (element d : to_elements(D))
            image.push_back(f(d));
        if (f(sup_set(L, to_elements(D))) != sup_set(M, image))
            preserves = false;
    });
    if (preserves != monotone)
        throw std::logic_error("directed-sup preservation and monotonicity disagree on a finite lattice");
    return monotone && preserves;
}

bool is_topologically_continuous(const unary_map& f) {
    const auto& L = f.domain();
    for (const subset& open : enumerate_scott_opens(f.codomain()).opens) {
        subset preimage(L.size());
        for (element x : L.elements())
            if (open.test(index(f(x))))
                preimage.set(index(x));
        if (!is_scott_open(L, preimage))
            return false;
    }
    return true;
}

namespace {

bool binary_monotone(const op_table& T) {
    const auto& L = T.carrier();
    for (auto [lo, hi] : L.covers()) {
        for (element y : L.elements()) {
            if (!L.leq(T(lo, y), T(hi, y)) || !L.leq(T(y, lo), T(y, hi)))
                return false;
        }
    }
    return true;
}

// Directed subsets of L×L under the product order, each checked for
// T(sup D) = sup T(D).
bool product_directed_preserved(const op_table& T) {
    const auto& L = T.carrier();
    const std::size_t n = L.size();
    const std::size_t cells = n * n;
    std::vector<std::uint64_t> up(cells, 0);
    for (std::size_t p = 0; p < cells; ++p)
        for (std::size_t q = 0; q < cells; ++q)
            if (L.leq(element_at(p / n), element_at(q / n)) && L.leq(element_at(p % n), element_at(q % n)))
                up[p] |= std::uint64_t{1} << q;

    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cells); ++mask) {
        if (!mask_is_directed(mask, [&](int i) { return up[i]; }))
            continue;
        element sx = L.bottom(), sy = L.bottom(), image = L.bottom();
        for (std::uint64_t m = mask; m; m &= m - 1) {
            const auto p = static_cast<std::size_t>(std::countr_zero(m));
            sx = L.join(sx, element_at(p / n));
            sy = L.join(sy, element_at(p % n));
            image = L.join(image, T(element_at(p / n), element_at(p % n)));
        }
        if (T(sx, sy) != image)
            return false;
    }
    return true;
}

} // namespace

bool is_scott_continuous_binary(const op_table& T) {
    const auto& L = T.carrier();
    bool sections = binary_monotone(T);
    for (element a : L.elements()) {
        if (!sections)
            break;
        auto row = unary_map::tabulate(L, L, [&](element x) { return T(a, x); });
        auto column = unary_map::tabulate(L, L, [&](element x) { return T(x, a); });
        sections = is_scott_continuous_unary(row) && is_scott_continuous_unary(column);
    }
    if (L.size() * L.size() <= 16) {
        const bool product = product_directed_preserved(T);
        if (product != sections)
            throw std::logic_error("section-wise and product-order continuity disagree on a finite lattice");
    }
    return sections;
}

bool is_topologically_dense(const lattice& L, std::span<const element> S) {
    const subset members = to_subset(L, S);
    if (L.size() <= max_enumeration_size) {
        for (const subset& open : enumerate_scott_opens(L).opens)
            if (open.any() && !open.intersects(members))
                return false;
        return true;
    }
    // Every nonempty upper set contains some principal filter.
    for (element x : L.elements())
        if (!L.up_set(x).intersects(members))
            return false;
    return true;
}

bool is_order_dense_subset(const lattice& L, std::span<const element> S) {
    const subset members = to_subset(L, S);
    for (element x : L.elements()) {
        for (element y : L.elements()) {
            if (!L.lt(x, y))
                continue;
            auto strictly_between = L.up_set(x) & L.down_set(y) & members;
            strictly_between.reset(index(x));
            strictly_between.reset(index(y));
            if (strictly_between.none())
                return false;
        }
    }
    return true;
}

density_report check_density_equivalence(const lattice& L, std::span<const element> S) {
    density_report r;
    r.order_dense = is_order_dense_subset(L, S);
    r.topologically_dense = is_topologically_dense(L, S);
    r.equivalent = r.order_dense == r.topologically_dense;
    return r;
}

} // namespace latop::scott
