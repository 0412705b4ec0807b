// Copyright (c) latop contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "latop/error.hpp"

namespace latop {

/// Position of an element in the `elements` list of its lattice.
enum class element : std::uint32_t {};

constexpr std::size_t index(element e) noexcept { return static_cast<std::size_t>(e); }
constexpr element element_at(std::size_t i) noexcept { return static_cast<element>(i); }

using element_set = std::vector<element>;
/// Bit i set <=> element i is a member.
using subset = boost::dynamic_bitset<>;

/// Largest carrier accepted by `build_lattice`; derived tables are n x n.
inline constexpr std::size_t max_lattice_size = 4096;

/** A finite bounded lattice given by its cover relation.

    The order, meet and join tables are derived once at construction and the
    value is immutable afterwards. Copies share the derived data, so passing a
    lattice by value is cheap and safe across threads.

    Two lattices compare equal iff they have the same token list in the same
    order and the same cover set; no isomorphism quotient is taken. */
class lattice {
  public:
    const std::string& name() const noexcept;
    std::size_t size() const noexcept;

    std::span<const std::string> tokens() const noexcept;
    const std::string& token(element e) const;
    std::optional<element> find(std::string_view token) const;
    /// Like `find`, but throws `unknown_element`.
    element at(std::string_view token) const;

    /// Covers sorted by (lower index, upper index).
    std::span<const std::pair<element, element>> covers() const noexcept;

    element bottom() const noexcept;
    element top() const noexcept;

    bool leq(element x, element y) const;
    bool lt(element x, element y) const { return x != y && leq(x, y); }
    element meet(element x, element y) const;
    element join(element x, element y) const;

    /// ↑x and ↓x as bit masks over element indices.
    const subset& up_set(element x) const;
    const subset& down_set(element x) const;

    /// All elements in `elements` order.
    auto elements() const {
        return std::views::iota(std::size_t{0}, size()) | std::views::transform(element_at);
    }

    /// Throws `unknown_element` unless `x` indexes an element.
    void require(element x) const;

    friend bool operator==(const lattice& a, const lattice& b);

  private:
    struct data;
    explicit lattice(std::shared_ptr<const data> d) : d_(std::move(d)) {}
    std::shared_ptr<const data> d_;

    friend lattice build_lattice(std::string name, std::vector<std::string> tokens,
                                 std::span<const std::pair<std::size_t, std::size_t>> covers);
};

/** Validates and closes a cover relation given by element positions.
    Throws `lattice_error` with kind `duplicate_token`, `unknown_element`,
    `cycle`, `redundant_cover`, `no_bound`, `not_a_lattice` or `too_large`. */
lattice build_lattice(std::string name, std::vector<std::string> tokens,
                      std::span<const std::pair<std::size_t, std::size_t>> covers);

/// Same, with covers named by token.
lattice build_lattice(std::string name, std::vector<std::string> tokens,
                      std::span<const std::pair<std::string, std::string>> covers);

subset to_subset(const lattice& L, std::span<const element> S);
element_set to_elements(const subset& mask);

/// sup ∅ = bottom.
element sup_set(const lattice& L, std::span<const element> S);
/// inf ∅ = top.
element inf_set(const lattice& L, std::span<const element> S);

bool is_directed(const lattice& L, std::span<const element> S);
bool is_filtered(const lattice& L, std::span<const element> S);

element_set principal_ideal(const lattice& L, element x);
element_set principal_filter(const lattice& L, element x);

/// Every strict pair has a strict intermediate; vacuous without strict pairs.
bool is_order_dense(const lattice& L);

/// A net indexed by the finite chain {1, ..., k}, k >= 1.
class finite_net {
  public:
    finite_net(const lattice& L, std::vector<element> values);

    std::size_t index_count() const noexcept { return values_.size(); }
    std::span<const element> values() const noexcept { return values_; }

  private:
    std::vector<element> values_;
};

/// sup over i of inf over j >= i.
element liminf_net(const lattice& L, const finite_net& net);
/// inf over i of sup over j >= i.
element limsup_net(const lattice& L, const finite_net& net);

} // namespace latop
