// Copyright (c) latop contributors.
// SPDX-License-Identifier: Apache-2.0

#include "latop/generators.hpp"

#include <cstdint>
#include <numeric>

namespace latop::gen {

namespace {

using cover_list = std::vector<std::pair<std::size_t, std::size_t>>;

void require(bool ok, const std::string& what) {
    if (!ok)
        throw lattice_error(error_kind::bad_parameter, what);
}

void guard_size(std::size_t n) {
    if (n > max_generated_size)
        throw lattice_error(error_kind::too_large, "generated lattice would have " + std::to_string(n) +
                                                       " elements, limit is " + std::to_string(max_generated_size));
}

std::string atom_name(std::size_t i) {
    if (i < 26)
        return std::string(1, static_cast<char>('a' + i));
    return "a" + std::to_string(i);
}

} // namespace

lattice chain(std::size_t k) {
    require(k >= 1, "chain needs k >= 1");
    guard_size(k);
    std::vector<std::string> tokens;
    cover_list covers;
    for (std::size_t i = 0; i < k; ++i) {
        tokens.push_back("c" + std::to_string(i));
        if (i > 0)
            covers.emplace_back(i - 1, i);
    }
    return build_lattice("C" + std::to_string(k), std::move(tokens), covers);
}

lattice boolean_lattice(std::size_t k) {
    require(k >= 1, "boolean lattice needs k >= 1");
    guard_size(k < 63 ? std::size_t{1} << k : SIZE_MAX);
    const std::size_t n = std::size_t{1} << k;
    std::vector<std::string> tokens;
    cover_list covers;
    for (std::size_t mask = 0; mask < n; ++mask) {
        std::string t;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1U)
                t += atom_name(i);
        tokens.push_back(t.empty() ? "0" : t);
        for (std::size_t i = 0; i < k; ++i)
            if (!(mask >> i & 1U))
                covers.emplace_back(mask, mask | (std::size_t{1} << i));
    }
    return build_lattice("B" + std::to_string(k), std::move(tokens), covers);
}

lattice diamond(std::size_t k) {
    require(k >= 1, "diamond needs k >= 1 atoms");
    guard_size(k + 2);
    std::vector<std::string> tokens{"0"};
    cover_list covers;
    for (std::size_t i = 0; i < k; ++i) {
        tokens.push_back(atom_name(i));
        covers.emplace_back(0, i + 1);
        covers.emplace_back(i + 1, k + 1);
    }
    tokens.push_back("1");
    return build_lattice("M" + std::to_string(k), std::move(tokens), covers);
}

lattice product(const lattice& first, const lattice& second) {
    const std::size_t n1 = first.size(), n2 = second.size();
    guard_size(n1 * n2);
    std::vector<std::string> tokens;
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j)
            tokens.push_back("(" + first.tokens()[i] + "," + second.tokens()[j] + ")");
    // (a,b) is covered by (a',b) for a ⋖ a' and by (a,b') for b ⋖ b'.
    cover_list covers;
    for (auto [lo, hi] : first.covers())
        for (std::size_t j = 0; j < n2; ++j)
            covers.emplace_back(index(lo) * n2 + j, index(hi) * n2 + j);
    for (auto [lo, hi] : second.covers())
        for (std::size_t i = 0; i < n1; ++i)
            covers.emplace_back(i * n2 + index(lo), i * n2 + index(hi));
    return build_lattice(first.name() + "x" + second.name(), std::move(tokens), covers);
}

std::string grid_label(std::size_t i, std::size_t k) {
    const std::size_t g = std::gcd(i, k);
    if (i == 0)
        return "0";
    if (i == k)
        return "1";
    return std::to_string(i / g) + "/" + std::to_string(k / g);
}

lattice interval_grid(std::size_t k) {
    require(k >= 1, "interval grid needs k >= 1");
    guard_size((k + 1) * (k + 2) / 2);
    std::vector<std::string> tokens;
    std::vector<std::vector<std::size_t>> position(k + 1, std::vector<std::size_t>(k + 1, 0));
    for (std::size_t a = 0; a <= k; ++a) {
        for (std::size_t b = a; b <= k; ++b) {
            position[a][b] = tokens.size();
            tokens.push_back("[" + grid_label(a, k) + "," + grid_label(b, k) + "]");
        }
    }
    // [a,b] is covered by [a+1,b] (when a < b) and by [a,b+1].
    cover_list covers;
    for (std::size_t a = 0; a <= k; ++a) {
        for (std::size_t b = a; b <= k; ++b) {
            if (a < b)
                covers.emplace_back(position[a][b], position[a + 1][b]);
            if (b < k)
                covers.emplace_back(position[a][b], position[a][b + 1]);
        }
    }
    return build_lattice("I" + std::to_string(k), std::move(tokens), covers);
}

std::vector<lattice> search_catalog(std::size_t max_size) {
    std::vector<lattice> out;
    for (std::size_t k = 2; k <= max_size; ++k)
        out.push_back(chain(k));
    if (max_size >= 4)
        out.push_back(boolean_lattice(2));
    if (max_size >= 5)
        out.push_back(diamond(3));
    return out;
}

} // namespace latop::gen
