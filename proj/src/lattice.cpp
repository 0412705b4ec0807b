// Copyright (c) latop contributors.
// SPDX-License-Identifier: Apache-2.0

#include "latop/lattice.hpp"

#include <algorithm>
#include <unordered_map>

namespace latop {

std::string_view to_string(error_kind kind) noexcept {
    switch (kind) {
    case error_kind::bad_parameter: return "BadParameter";
    case error_kind::duplicate_token: return "DuplicateToken";
    case error_kind::unknown_element: return "UnknownElement";
    case error_kind::cycle: return "CycleError";
    case error_kind::redundant_cover: return "RedundantCover";
    case error_kind::no_bound: return "NoBound";
    case error_kind::not_a_lattice: return "NotALattice";
    case error_kind::empty_net: return "EmptyNet";
    case error_kind::too_large: return "TooLarge";
    case error_kind::not_total: return "NotTotal";
    case error_kind::degenerate_lattice: return "DegenerateLattice";
    case error_kind::not_quasi_overlap: return "NotQuasiOverlap";
    case error_kind::not_residuated: return "NotResiduated";
    case error_kind::not_monotone: return "NotMonotone";
    case error_kind::not_automorphism: return "NotAutomorphism";
    case error_kind::lattice_mismatch: return "LatticeMismatch";
    case error_kind::parse: return "ParseError";
    }
    return "Unknown";
}

struct lattice::data {
    std::string name;
    std::vector<std::string> tokens;
    std::unordered_map<std::string, element> lookup;
    std::vector<std::pair<element, element>> covers;
    std::vector<subset> up;
    std::vector<subset> down;
    // Row-major n x n tables; n <= max_lattice_size fits in 16 bits.
    std::vector<std::uint16_t> meet;
    std::vector<std::uint16_t> join;
    element bottom{};
    element top{};
};

namespace {

bool valid_token(std::string_view t) {
    if (t.empty())
        return false;
    return std::ranges::none_of(t, [](char c) { return c == '#' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; });
}

} // namespace

lattice build_lattice(std::string name, std::vector<std::string> tokens,
                      std::span<const std::pair<std::size_t, std::size_t>> covers) {
    const std::size_t n = tokens.size();
    if (n == 0)
        throw lattice_error(error_kind::bad_parameter, "a lattice needs at least one element");
    if (n > max_lattice_size)
        throw lattice_error(error_kind::too_large,
                            "lattice has " + std::to_string(n) + " elements, limit is " + std::to_string(max_lattice_size));

    auto d = std::make_shared<lattice::data>();
    d->name = std::move(name);
    for (std::size_t i = 0; i < n; ++i) {
        if (!valid_token(tokens[i]))
            throw lattice_error(error_kind::bad_parameter, "invalid element token '" + tokens[i] + "'", {tokens[i]});
        if (!d->lookup.emplace(tokens[i], element_at(i)).second)
            throw lattice_error(error_kind::duplicate_token, "duplicate element token '" + tokens[i] + "'", {tokens[i]});
    }
    d->tokens = std::move(tokens);
    const auto& tok = d->tokens;

    std::vector<std::vector<std::size_t>> upper(n);
    std::vector<std::size_t> indegree(n, 0);
    for (auto [x, y] : covers) {
        if (x >= n || y >= n)
            throw lattice_error(error_kind::unknown_element, "cover references an unknown element");
        if (x == y)
            throw lattice_error(error_kind::cycle, "element '" + tok[x] + "' covers itself", {tok[x]});
        d->covers.emplace_back(element_at(x), element_at(y));
    }
    std::ranges::sort(d->covers);
    if (auto dup = std::ranges::adjacent_find(d->covers); dup != d->covers.end())
        throw lattice_error(error_kind::redundant_cover, "cover listed twice",
                            {tok[index(dup->first)], tok[index(dup->second)]});
    for (auto [x, y] : d->covers) {
        upper[index(x)].push_back(index(y));
        ++indegree[index(y)];
    }

    // Kahn's algorithm; leftover vertices lie on or above a cycle.
    std::vector<std::size_t> topo;
    topo.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        if (indegree[i] == 0)
            topo.push_back(i);
    for (std::size_t head = 0; head < topo.size(); ++head)
        for (std::size_t y : upper[topo[head]])
            if (--indegree[y] == 0)
                topo.push_back(y);
    if (topo.size() != n) {
        std::size_t stuck = 0;
        while (indegree[stuck] == 0)
            ++stuck;
        throw lattice_error(error_kind::cycle, "cover graph has a cycle through '" + tok[stuck] + "'", {tok[stuck]});
    }

    // Up-sets are accumulated in reverse topological order, down-sets by transposition.
    d->up.assign(n, subset(n));
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        auto& u = d->up[*it];
        u.set(*it);
        for (std::size_t y : upper[*it])
            u |= d->up[y];
    }
    d->down.assign(n, subset(n));
    for (std::size_t x = 0; x < n; ++x)
        for (auto y = d->up[x].find_first(); y != subset::npos; y = d->up[x].find_next(y))
            d->down[y].set(x);

    for (auto [x, y] : d->covers) {
        auto between = d->up[index(x)] & d->down[index(y)];
        between.reset(index(x));
        between.reset(index(y));
        if (auto z = between.find_first(); z != subset::npos)
            throw lattice_error(error_kind::redundant_cover,
                                "cover (" + tok[index(x)] + ", " + tok[index(y)] + ") is implied through '" + tok[z] + "'",
                                {tok[index(x)], tok[index(y)], tok[z]});
    }

    std::optional<std::size_t> bottom, top;
    for (std::size_t x = 0; x < n; ++x) {
        if (d->up[x].count() == n)
            bottom = x;
        if (d->down[x].count() == n)
            top = x;
    }
    if (!bottom)
        throw lattice_error(error_kind::no_bound, "no least element");
    if (!top)
        throw lattice_error(error_kind::no_bound, "no greatest element");
    d->bottom = element_at(*bottom);
    d->top = element_at(*top);

    // The least common upper bound is searched in topological order: the first
    // common upper bound met is minimal, and it is the join iff its up-set is
    // the whole common up-set.
    std::vector<std::size_t> position(n);
    for (std::size_t p = 0; p < n; ++p)
        position[topo[p]] = p;
    std::vector<subset> up_topo(n, subset(n)), down_rtopo(n, subset(n));
    for (std::size_t x = 0; x < n; ++x) {
        for (auto y = d->up[x].find_first(); y != subset::npos; y = d->up[x].find_next(y))
            up_topo[x].set(position[y]);
        for (auto y = d->down[x].find_first(); y != subset::npos; y = d->down[x].find_next(y))
            down_rtopo[x].set(n - 1 - position[y]);
    }

    d->meet.assign(n * n, 0);
    d->join.assign(n * n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x; y < n; ++y) {
            auto common_up = up_topo[x] & up_topo[y];
            std::size_t j = topo[common_up.find_first()];
            if (up_topo[j] != common_up)
                throw lattice_error(error_kind::not_a_lattice,
                                    "'" + tok[x] + "' and '" + tok[y] + "' have no least upper bound", {tok[x], tok[y]});
            auto common_down = down_rtopo[x] & down_rtopo[y];
            std::size_t m = topo[n - 1 - common_down.find_first()];
            if (down_rtopo[m] != common_down)
                throw lattice_error(error_kind::not_a_lattice,
                                    "'" + tok[x] + "' and '" + tok[y] + "' have no greatest lower bound", {tok[x], tok[y]});
            d->join[x * n + y] = d->join[y * n + x] = static_cast<std::uint16_t>(j);
            d->meet[x * n + y] = d->meet[y * n + x] = static_cast<std::uint16_t>(m);
        }
    }
    return lattice(std::move(d));
}

lattice build_lattice(std::string name, std::vector<std::string> tokens,
                      std::span<const std::pair<std::string, std::string>> covers) {
    std::unordered_map<std::string_view, std::size_t> lookup;
    for (std::size_t i = 0; i < tokens.size(); ++i)
        lookup.emplace(tokens[i], i);
    std::vector<std::pair<std::size_t, std::size_t>> indexed;
    indexed.reserve(covers.size());
    for (const auto& [x, y] : covers) {
        auto ix = lookup.find(x), iy = lookup.find(y);
        if (ix == lookup.end() || iy == lookup.end()) {
            const auto& bad = ix == lookup.end() ? x : y;
            throw lattice_error(error_kind::unknown_element, "cover references unknown element '" + bad + "'", {bad});
        }
        indexed.emplace_back(ix->second, iy->second);
    }
    return build_lattice(std::move(name), std::move(tokens), indexed);
}

const std::string& lattice::name() const noexcept { return d_->name; }
std::size_t lattice::size() const noexcept { return d_->tokens.size(); }
std::span<const std::string> lattice::tokens() const noexcept { return d_->tokens; }

const std::string& lattice::token(element e) const {
    require(e);
    return d_->tokens[index(e)];
}

std::optional<element> lattice::find(std::string_view token) const {
    if (auto it = d_->lookup.find(std::string(token)); it != d_->lookup.end())
        return it->second;
    return std::nullopt;
}

element lattice::at(std::string_view token) const {
    if (auto e = find(token))
        return *e;
    throw lattice_error(error_kind::unknown_element, "unknown element '" + std::string(token) + "'",
                        {std::string(token)});
}

std::span<const std::pair<element, element>> lattice::covers() const noexcept { return d_->covers; }
element lattice::bottom() const noexcept { return d_->bottom; }
element lattice::top() const noexcept { return d_->top; }

void lattice::require(element x) const {
    if (index(x) >= size())
        throw lattice_error(error_kind::unknown_element,
                            "element index " + std::to_string(index(x)) + " is not in lattice '" + name() + "'");
}

bool lattice::leq(element x, element y) const {
    require(x);
    require(y);
    return d_->up[index(x)].test(index(y));
}

element lattice::meet(element x, element y) const {
    require(x);
    require(y);
    return element_at(d_->meet[index(x) * size() + index(y)]);
}

element lattice::join(element x, element y) const {
    require(x);
    require(y);
    return element_at(d_->join[index(x) * size() + index(y)]);
}

const subset& lattice::up_set(element x) const {
    require(x);
    return d_->up[index(x)];
}

const subset& lattice::down_set(element x) const {
    require(x);
    return d_->down[index(x)];
}

bool operator==(const lattice& a, const lattice& b) {
    return a.d_ == b.d_ || (a.d_->tokens == b.d_->tokens && a.d_->covers == b.d_->covers);
}

subset to_subset(const lattice& L, std::span<const element> S) {
    subset mask(L.size());
    for (element x : S) {
        L.require(x);
        mask.set(index(x));
    }
    return mask;
}

element_set to_elements(const subset& mask) {
    element_set out;
    for (auto i = mask.find_first(); i != subset::npos; i = mask.find_next(i))
        out.push_back(element_at(i));
    return out;
}

element sup_set(const lattice& L, std::span<const element> S) {
    element acc = L.bottom();
    for (element x : S)
        acc = L.join(acc, x);
    return acc;
}

element inf_set(const lattice& L, std::span<const element> S) {
    element acc = L.top();
    for (element x : S)
        acc = L.meet(acc, x);
    return acc;
}

namespace {

template <class Bounds>
bool pairwise_bounded_within(const lattice& L, std::span<const element> S, Bounds bounds) {
    if (S.empty())
        return false;
    const subset members = to_subset(L, S);
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j)
            if (!(bounds(S[i]) & bounds(S[j]) & members).any())
                return false;
    return true;
}

} // namespace

bool is_directed(const lattice& L, std::span<const element> S) {
    return pairwise_bounded_within(L, S, [&](element x) -> const subset& { return L.up_set(x); });
}

bool is_filtered(const lattice& L, std::span<const element> S) {
    return pairwise_bounded_within(L, S, [&](element x) -> const subset& { return L.down_set(x); });
}

element_set principal_ideal(const lattice& L, element x) { return to_elements(L.down_set(x)); }
element_set principal_filter(const lattice& L, element x) { return to_elements(L.up_set(x)); }

bool is_order_dense(const lattice& L) {
    for (element x : L.elements()) {
        for (element y : L.elements()) {
            if (!L.lt(x, y))
                continue;
            auto between = L.up_set(x) & L.down_set(y);
            if (between.count() == 2)
                return false;
        }
    }
    return true;
}

finite_net::finite_net(const lattice& L, std::vector<element> values) : values_(std::move(values)) {
    if (values_.empty())
        throw lattice_error(error_kind::empty_net, "a net needs at least one index");
    for (element x : values_)
        L.require(x);
}

element liminf_net(const lattice& L, const finite_net& net) {
    auto v = net.values();
    element result = L.bottom();
    for (std::size_t i = 0; i < v.size(); ++i)
        result = L.join(result, inf_set(L, v.subspan(i)));
    return result;
}

element limsup_net(const lattice& L, const finite_net& net) {
    auto v = net.values();
    element result = L.top();
    for (std::size_t i = 0; i < v.size(); ++i)
        result = L.meet(result, sup_set(L, v.subspan(i)));
    return result;
}

} // namespace latop
