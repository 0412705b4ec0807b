// Copyright (c) latop contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "latop/check.hpp"
#include "latop/lattice.hpp"
#include "latop/tables.hpp"

namespace latop::galois {

/// (f, g) with g ∘ f >= id on the domain and f ∘ g <= id on the codomain.
struct residuated_pair {
    unary_map forward;
    unary_map residual;
};

enum class failure_kind { not_monotone, no_maximum };

/** Why `residual_of` gave up. For `not_monotone` the witness is (x1, x2)
    with x1 <= x2 in the domain and f(x1) not <= f(x2); for `no_maximum` it is
    the codomain element y whose preimage {x | f(x) <= y} has no maximum. */
struct not_residuated {
    failure_kind kind;
    element_set witness;
};

struct residual_result {
    std::optional<residuated_pair> pair;
    std::optional<not_residuated> failure;

    explicit operator bool() const noexcept { return pair.has_value(); }
};

/// g(y) = max {x | f(x) <= y}, when f is monotone and every maximum exists.
residual_result residual_of(const unary_map& f);

/// For every w, f⁻¹(↓w) is a principal ideal; witness (w).
check_result is_residuated_via_ideals(const unary_map& f);

/** f(x) <= y <=> x <= g(y) for every pair; witness (x, y) with x in the
    domain of f and y in its codomain. Throws `not_monotone` unless both maps
    are monotone and `lattice_mismatch` unless g runs back from f's codomain. */
check_result is_galois_connection(const unary_map& f, const unary_map& g);

/// The four equivalent characterizations of "f is residuated with residual g".
struct characterization_report {
    bool unit_counit = false;   ///< f, g monotone, g∘f >= id, f∘g <= id
    bool biconditional = false; ///< f(x) <= y <=> x <= g(y)
    bool max_form = false;      ///< f monotone, g(y) = max {x | f(x) <= y}
    bool min_form = false;      ///< g monotone, f(x) = min {y | x <= g(y)}

    bool all_agree() const noexcept {
        return unit_counit == biconditional && biconditional == max_form && max_form == min_form;
    }
};

characterization_report characterization_agrees(const unary_map& f, const unary_map& g);

/// f(sup S) = sup f(S) for every subset S of the domain (n <= 16); witness S.
check_result preserves_all_joins(const unary_map& f);

} // namespace latop::galois
