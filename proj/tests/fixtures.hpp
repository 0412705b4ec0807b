// Copyright (c) latop contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "latop/lattice.hpp"
#include "latop/tables.hpp"
#include "oracles.hpp"

namespace fixture {

using namespace latop;

/// 0 < m < 1.
inline lattice c3() {
    const std::pair<std::string, std::string> covers[] = {{"0", "m"}, {"m", "1"}};
    return build_lattice("C3", {"0", "m", "1"}, covers);
}

inline lattice singleton() { return build_lattice("S", {"s"}, std::span<const std::pair<std::size_t, std::size_t>>{}); }

inline element_set els(const lattice& L, std::initializer_list<const char*> tokens) {
    element_set out;
    for (const char* t : tokens)
        out.push_back(L.at(t));
    return out;
}

/// Row-major cells by token.
template <class Table>
Table table_of(const lattice& L, std::initializer_list<const char*> cells) {
    return Table(L, els(L, cells));
}

/// Witness rendered as tokens, for readable assertions.
inline std::vector<std::string> tokens(const lattice& L, const element_set& w) {
    std::vector<std::string> out;
    for (element e : w)
        out.push_back(L.token(e));
    return out;
}

/// Reference order built only from the cover list.
inline oracle::poset poset_of(const lattice& L) {
    std::vector<std::pair<int, int>> covers;
    for (auto [x, y] : L.covers())
        covers.emplace_back(static_cast<int>(index(x)), static_cast<int>(index(y)));
    return oracle::poset(static_cast<int>(L.size()), covers);
}

template <class Table>
oracle::table cells_of(const Table& T) {
    oracle::table out;
    for (element e : T.cells())
        out.push_back(static_cast<int>(index(e)));
    return out;
}

} // namespace fixture

#define CHECK_LATTICE_ERROR(expr, expected_kind)                                                                       \
    do {                                                                                                               \
        bool thrown_ = false;                                                                                          \
        try {                                                                                                          \
            (void)(expr);                                                                                              \
        } catch (const ::latop::lattice_error& e_) {                                                                   \
            thrown_ = true;                                                                                            \
            CHECK(e_.kind() == (expected_kind));                                                                       \
        }                                                                                                              \
        CHECK_MESSAGE(thrown_, "expected a lattice_error");                                                            \
    } while (false)
