// Copyright (c) latop contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <vector>

#include "latop/lattice.hpp"

namespace latop {

struct op_tag {};
struct implication_tag {};

/** A total binary operation on a lattice, stored row-major: row = first
    argument, column = second argument, both in `elements` order. The tag keeps
    operators and implications apart at the type level. */
template <class Tag>
class basic_table {
  public:
    basic_table(lattice L, std::vector<element> cells) : lattice_(std::move(L)), cells_(std::move(cells)) {
        const std::size_t n = lattice_.size();
        if (cells_.size() != n * n)
            throw lattice_error(error_kind::not_total, "table has " + std::to_string(cells_.size()) + " cells, expected " +
                                                           std::to_string(n * n));
        for (element v : cells_)
            if (index(v) >= n)
                throw lattice_error(error_kind::not_total, "table entry outside the lattice");
    }

    template <class F>
    static basic_table tabulate(const lattice& L, F&& f) {
        std::vector<element> cells;
        cells.reserve(L.size() * L.size());
        for (element x : L.elements())
            for (element y : L.elements())
                cells.push_back(f(x, y));
        return basic_table(L, std::move(cells));
    }

    const lattice& carrier() const noexcept { return lattice_; }
    std::size_t size() const noexcept { return lattice_.size(); }
    std::span<const element> cells() const noexcept { return cells_; }

    element operator()(element x, element y) const {
        lattice_.require(x);
        lattice_.require(y);
        return cells_[index(x) * size() + index(y)];
    }

    friend bool operator==(const basic_table& a, const basic_table& b) {
        return a.cells_ == b.cells_ && a.lattice_ == b.lattice_;
    }

  private:
    lattice lattice_;
    std::vector<element> cells_;
};

using op_table = basic_table<op_tag>;
using implication_table = basic_table<implication_tag>;

inline op_table meet_table(const lattice& L) {
    return op_table::tabulate(L, [&](element x, element y) { return L.meet(x, y); });
}

inline op_table join_table(const lattice& L) {
    return op_table::tabulate(L, [&](element x, element y) { return L.join(x, y); });
}

/// A total map between two lattices. Monotonicity is checked, not assumed.
class unary_map {
  public:
    unary_map(lattice domain, lattice codomain, std::vector<element> values)
        : domain_(std::move(domain)), codomain_(std::move(codomain)), values_(std::move(values)) {
        if (values_.size() != domain_.size())
            throw lattice_error(error_kind::not_total, "map has " + std::to_string(values_.size()) + " values, expected " +
                                                           std::to_string(domain_.size()));
        for (element v : values_)
            if (index(v) >= codomain_.size())
                throw lattice_error(error_kind::not_total, "map value outside the codomain");
    }

    /// Endomap on `L`.
    unary_map(const lattice& L, std::vector<element> values) : unary_map(L, L, std::move(values)) {}

    template <class F>
    static unary_map tabulate(const lattice& domain, const lattice& codomain, F&& f) {
        std::vector<element> values;
        values.reserve(domain.size());
        for (element x : domain.elements())
            values.push_back(f(x));
        return unary_map(domain, codomain, std::move(values));
    }

    const lattice& domain() const noexcept { return domain_; }
    const lattice& codomain() const noexcept { return codomain_; }
    std::span<const element> values() const noexcept { return values_; }

    element operator()(element x) const {
        domain_.require(x);
        return values_[index(x)];
    }

    friend bool operator==(const unary_map& a, const unary_map& b) {
        return a.values_ == b.values_ && a.domain_ == b.domain_ && a.codomain_ == b.codomain_;
    }

  private:
    lattice domain_;
    lattice codomain_;
    std::vector<element> values_;
};

inline unary_map identity_map(const lattice& L) {
    return unary_map::tabulate(L, L, [](element x) { return x; });
}

inline unary_map constant_map(const lattice& domain, const lattice& codomain, element c) {
    codomain.require(c);
    return unary_map::tabulate(domain, codomain, [c](element) { return c; });
}

/// g ∘ f; requires f's codomain to be g's domain.
unary_map compose(const unary_map& g, const unary_map& f);

bool is_monotone(const unary_map& f);

} // namespace latop
