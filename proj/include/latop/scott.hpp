// Copyright (c) latop contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "latop/check.hpp"
#include "latop/lattice.hpp"
#include "latop/tables.hpp"

namespace latop::scott {

/// Upper bound on n for `enumerate_scott_opens`.
inline constexpr std::size_t max_enumeration_size = 20;
/// Upper bound on the size of a carrier whose directed subsets are scanned
/// one by one. Larger carriers use the order-theoretic shortcut only.
inline constexpr std::size_t max_directed_scan_size = 12;

/// σ(L): every Scott open set, sorted by ascending bit mask.
struct open_family {
    lattice carrier;
    std::vector<subset> opens;
};

/// Calls `fn` on every directed subset of `L` (as a mask). Throws `too_large`
/// when n > max_directed_scan_size.
void for_each_directed_subset(const lattice& L, const std::function<void(const subset&)>& fn);

bool is_upper_set(const lattice& L, const subset& A);

/// Upper set, and every directed D with sup D in A meets A. Both conditions
/// are evaluated; the directed scan runs when n <= max_directed_scan_size.
bool is_scott_open(const lattice& L, const subset& A);
bool is_scott_open(const lattice& L, std::span<const element> A);

open_family enumerate_scott_opens(const lattice& L);

/// Contains ∅ and the carrier, closed under pairwise union and intersection.
bool is_topology(const open_family& family);

/** Order preservation plus f(sup D) = sup f(D) for every directed D.

    On a finite lattice both reduce to monotonicity; the monotone route and
    the directed-set route are computed independently and must agree. */
bool is_scott_continuous_unary(const unary_map& f);

/// Preimage of every Scott open of the codomain is Scott open in the domain.
bool is_topologically_continuous(const unary_map& f);

/** Monotone in each argument with Scott-continuous sections. When n*n <= 16
    the directed subsets of the product order on L×L are scanned as well. */
bool is_scott_continuous_binary(const op_table& T);

/// Every nonempty Scott open meets S.
bool is_topologically_dense(const lattice& L, std::span<const element> S);

/// For every x < y in L some z in S has x < z < y.
bool is_order_dense_subset(const lattice& L, std::span<const element> S);

struct density_report {
    bool order_dense = false;
    bool topologically_dense = false;
    bool equivalent = false;
};

density_report check_density_equivalence(const lattice& L, std::span<const element> S);

} // namespace latop::scott
