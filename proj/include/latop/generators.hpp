// Copyright (c) latop contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "latop/lattice.hpp"

namespace latop::gen {

/// Largest lattice any generator will build.
inline constexpr std::size_t max_generated_size = 4096;

/// c0 < c1 < ... < c(k-1), named "C<k>".
lattice chain(std::size_t k);

/** Subsets of {a, b, c, ...} (k <= 12, larger k trips the size guard) ordered by inclusion, named "B<k>".
    Tokens spell the members ("0" for the empty set, "ab", ...); elements are
    listed by ascending bit mask with atom i as bit i. */
lattice boolean_lattice(std::size_t k);

/// 0, k pairwise incomparable atoms, 1; named "M<k>". Atoms are a, b, c, ...
/// up to 26, then a26, a27, ...
lattice diamond(std::size_t k);

/// Componentwise order on pairs, tokens "(x,y)", row-major element order.
lattice product(const lattice& first, const lattice& second);

/// Grid subintervals [a,b], a <= b, of {0, 1/k, ..., 1}, ordered
/// componentwise; tokens "[p/q,r/s]" in reduced form, named "I<k>".
lattice interval_grid(std::size_t k);

/// Rendering of i/k used for interval_grid tokens.
std::string grid_label(std::size_t i, std::size_t k);

/// Lattices of size 2..max_size used by the residuation search:
/// chain(2..max_size), boolean_lattice(2) when max_size >= 4 and
/// diamond(3) when max_size >= 5.
std::vector<lattice> search_catalog(std::size_t max_size);

} // namespace latop::gen
