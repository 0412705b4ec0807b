// Copyright (c) latop contributors.
// SPDX-License-Identifier: Apache-2.0

#include "latop/check.hpp"
#include "latop/tables.hpp"

namespace latop {

unary_map compose(const unary_map& g, const unary_map& f) {
    if (!(f.codomain() == g.domain()))
        throw lattice_error(error_kind::lattice_mismatch, "cannot compose: codomain and domain differ");
    return unary_map::tabulate(f.domain(), g.codomain(), [&](element x) { return g(f(x)); });
}

bool is_monotone(const unary_map& f) {
    const auto& L = f.domain();
    const auto& M = f.codomain();
    for (auto [x, y] : L.covers())
        if (!M.leq(f(x), f(y)))
            return false;
    return true;
}

std::string format_witness(const lattice& L, const element_set& witness) {
    std::string out = "(";
    for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i)
            out += ',';
        out += L.token(witness[i]);
    }
    out += ')';
    return out;
}

} // namespace latop
