// Copyright (c) latop contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "latop/check.hpp"
#include "latop/lattice.hpp"
#include "latop/tables.hpp"

namespace latop::ops {

/// Upper bound on n for `for_each_quasi_overlap`.
inline constexpr std::size_t max_enumeration_size = 6;

/** Checks the quasi-overlap axioms exhaustively.

    OL1  commutativity             witness (x,y)
    OL2  O(x,y)=0 iff x=0 or y=0    witness (x,y)
    OL3  O(x,y)=1 iff x=y=1         witness (x,y)
    OL4  monotone in each argument  witness (x1,y1,x2,y2), (x1,y1) <= (x2,y2)

    Throws `degenerate_lattice` when bottom = top. */
axiom_report validate_quasi_overlap(const op_table& T);
bool is_quasi_overlap(const op_table& T);

/** Visits every quasi-overlap on `L` once, lexicographically by the flattened
    table (row-major, cells compared by element index). Throws `too_large`
    when n > max_enumeration_size and `degenerate_lattice` when n = 1. */
void for_each_quasi_overlap(const lattice& L, const std::function<void(const op_table&)>& fn);
std::vector<op_table> enumerate_quasi_overlaps(const lattice& L);

/// R(x,y) = {t | T(x,t) <= y}.
subset residual_set(const op_table& T, element x, element y);

/// I(x,y) = sup R(x,y) for an arbitrary table; no axioms are required.
implication_table residuum(const op_table& T);

/// The implication induced by a quasi-overlap. Throws `not_quasi_overlap`.
implication_table induced_implication(const op_table& O);

/// O(x,z) <= y <=> z <= I(x,y) for all triples; witness (x,y,z).
check_result check_residuation(const op_table& O, const implication_table& I);

/// sup R(x,y) lies in R(x,y) for all pairs; witness (x,y).
check_result max_attained(const op_table& O);

/** Implication axioms: antitone in the first argument (witness (x1,x2,y)),
    monotone in the second (witness (x,y1,y2)) and the four boundary values. */
axiom_report validate_implication(const implication_table& I);

/// I(1,y) = y; witness (y).
check_result check_np(const implication_table& I);
/// I(x,x) = 1; witness (x).
check_result check_ip(const implication_table& I);
/// x <= y <=> I(x,y) = 1; witness (x,y).
check_result check_op(const implication_table& I);
/// I(x,I(y,z)) = I(y,I(x,z)); witness (x,y,z).
check_result check_ep(const implication_table& I);

/// O(1,x) = O(x,1) = x; witness (x).
check_result has_neutral_one(const op_table& O);
/// O(x,1) <= x; witness (x).
check_result is_deflationary(const op_table& O);
/// O(x,O(y,z)) = O(O(x,y),z); witness (x,y,z).
check_result is_associative(const op_table& O);
/// O(x,O(y,z)) = O(y,O(x,z)); witness (x,y,z).
check_result satisfies_exchange(const op_table& O);
/// O(x,O(y,z)) and O(y,O(x,z)) comparable for all triples; witness (x,y,z).
check_result exchange_comparable(const op_table& O);

/// Upper bound on n for `sections_preserve_joins`.
inline constexpr std::size_t max_join_scan_size = 16;

/** O(x, sup S) = sup {O(x,s) | s in S} for every x and every subset S,
    including S = ∅. Witness (x, members of S...). */
check_result sections_preserve_joins(const op_table& O);

/// A quasi-overlap whose induced implication misses its maximum somewhere.
struct residuation_failure {
    op_table op;
    element x;
    element y;
};

/// First failure in enumeration order, or nullopt when every quasi-overlap on
/// `L` attains its maxima.
std::optional<residuation_failure> find_residuation_failure(const lattice& L);

} // namespace latop::ops
