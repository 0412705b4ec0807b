// Copyright (c) latop contributors.
// SPDX-License-Identifier: Apache-2.0

#include "latop/operators.hpp"

#include <cstdint>
#include <stdexcept>

namespace latop::ops {

namespace {

void require_nondegenerate(const lattice& L) {
    if (L.bottom() == L.top())
        throw lattice_error(error_kind::degenerate_lattice,
                            "lattice '" + L.name() + "' has bottom = top; OL2 and OL3 cannot both hold");
}

class quasi_overlap_search {
  public:
    quasi_overlap_search(const lattice& L, const std::function<bool(const op_table&)>& visit)
        : L_(L), n_(L.size()), visit_(visit), cells_(n_ * n_), assigned_(n_ * n_, false) {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i; j < n_; ++j)
                order_.emplace_back(i, j);
    }

    void run() { descend(0); }

  private:
    std::vector<element> candidates(std::size_t i, std::size_t j) const {
        const element x = element_at(i), y = element_at(j);
        if (x == L_.bottom() || y == L_.bottom())
            return {L_.bottom()};
        if (x == L_.top() && y == L_.top())
            return {L_.top()};
        std::vector<element> out;
        for (element v : L_.elements())
            if (v != L_.bottom() && v != L_.top())
                out.push_back(v);
        return out;
    }

    // Monotonicity of cell (i,j) = v against every cell assigned so far.
    bool consistent(std::size_t i, std::size_t j, element v) const {
        const element x = element_at(i), y = element_at(j);
        for (std::size_t k = 0; k < n_; ++k) {
            for (std::size_t l = 0; l < n_; ++l) {
                if (!assigned_[k * n_ + l])
                    continue;
                const element a = element_at(k), b = element_at(l);
                const element w = cells_[k * n_ + l];
                if (L_.leq(a, x) && L_.leq(b, y) && !L_.leq(w, v))
                    return false;
                if (L_.leq(x, a) && L_.leq(y, b) && !L_.leq(v, w))
                    return false;
            }
        }
        return true;
    }

    bool descend(std::size_t step) {
        if (step == order_.size()) {
            op_table table(L_, cells_);
            if (!validate_quasi_overlap(table).all_pass())
                throw std::logic_error("quasi-overlap search produced a table that fails validation");
            return visit_(table);
        }
        const auto [i, j] = order_[step];
        for (element v : candidates(i, j)) {
            if (!consistent(i, j, v))
                continue;
            cells_[i * n_ + j] = cells_[j * n_ + i] = v;
            assigned_[i * n_ + j] = assigned_[j * n_ + i] = true;
            const bool more = descend(step + 1);
            assigned_[i * n_ + j] = assigned_[j * n_ + i] = false;
            if (!more)
                return false;
        }
        return true;
    }

    const lattice& L_;
    std::size_t n_;
    const std::function<bool(const op_table&)>& visit_;
    std::vector<std::pair<std::size_t, std::size_t>> order_;
    std::vector<element> cells_;
    std::vector<bool> assigned_;
};

void search_quasi_overlaps(const lattice& L, const std::function<bool(const op_table&)>& visit) {
    require_nondegenerate(L);
    if (L.size() > max_enumeration_size)
        throw lattice_error(error_kind::too_large, "quasi-overlap enumeration limited to " +
                                                       std::to_string(max_enumeration_size) + " elements");
    quasi_overlap_search(L, visit).run();
}

template <class Pred>
check_result for_all_elements(const lattice& L, Pred pred) {
    for (element x : L.elements())
        if (!pred(x))
            return check_result::fail({x});
    return check_result::ok();
}

template <class Pred>
check_result for_all_pairs(const lattice& L, Pred pred) {
    for (element x : L.elements())
        for (element y : L.elements())
            if (!pred(x, y))
                return check_result::fail({x, y});
    return check_result::ok();
}

template <class Pred>
check_result for_all_triples(const lattice& L, Pred pred) {
    for (element x : L.elements())
        for (element y : L.elements())
            for (element z : L.elements())
                if (!pred(x, y, z))
                    return check_result::fail({x, y, z});
    return check_result::ok();
}

} // namespace

axiom_report validate_quasi_overlap(const op_table& T) {
    const auto& L = T.carrier();
    require_nondegenerate(L);
    const element zero = L.bottom(), one = L.top();

    axiom_report report;
    report.verdicts.push_back({"OL1", for_all_pairs(L, [&](element x, element y) { return T(x, y) == T(y, x); })});
    report.verdicts.push_back({"OL2", for_all_pairs(L, [&](element x, element y) {
                                   return (T(x, y) == zero) == (x == zero || y == zero);
                               })});
    report.verdicts.push_back({"OL3", for_all_pairs(L, [&](element x, element y) {
                                   return (T(x, y) == one) == (x == one && y == one);
                               })});

    check_result monotone;
    for (auto [lo, hi] : L.covers()) {
        for (element y : L.elements()) {
            if (!L.leq(T(lo, y), T(hi, y))) {
                monotone = check_result::fail({lo, y, hi, y});
                break;
            }
            if (!L.leq(T(y, lo), T(y, hi))) {
                monotone = check_result::fail({y, lo, y, hi});
                break;
            }
        }
        if (!monotone)
            break;
    }
    report.verdicts.push_back({"OL4", monotone});
    return report;
}

bool is_quasi_overlap(const op_table& T) { return validate_quasi_overlap(T).all_pass(); }

void for_each_quasi_overlap(const lattice& L, const std::function<void(const op_table&)>& fn) {
    search_quasi_overlaps(L, [&](const op_table& t) {
        fn(t);
        return true;
    });
}

std::vector<op_table> enumerate_quasi_overlaps(const lattice& L) {
    std::vector<op_table> out;
    for_each_quasi_overlap(L, [&](const op_table& t) { out.push_back(t); });
    return out;
}

subset residual_set(const op_table& T, element x, element y) {
    const auto& L = T.carrier();
    subset r(L.size());
    for (element t : L.elements())
        if (L.leq(T(x, t), y))
            r.set(index(t));
    return r;
}

implication_table residuum(const op_table& T) {
    const auto& L = T.carrier();
    return implication_table::tabulate(L, [&](element x, element y) {
        return sup_set(L, to_elements(residual_set(T, x, y)));
    });
}

implication_table induced_implication(const op_table& O) {
    const auto report = validate_quasi_overlap(O);
    for (const auto& v : report.verdicts)
        if (!v.result)
            throw lattice_error(error_kind::not_quasi_overlap, "operator fails " + v.axiom);
    return residuum(O);
}

check_result check_residuation(const op_table& O, const implication_table& I) {
    const auto& L = O.carrier();
    if (!(I.carrier() == L))
        throw lattice_error(error_kind::lattice_mismatch, "operator and implication live on different lattices");
    return for_all_triples(L, [&](element x, element y, element z) {
        return L.leq(O(x, z), y) == L.leq(z, I(x, y));
    });
}

check_result max_attained(const op_table& O) {
    const auto& L = O.carrier();
    return for_all_pairs(L, [&](element x, element y) {
        const subset r = residual_set(O, x, y);
        return r.test(index(sup_set(L, to_elements(r))));
    });
}

axiom_report validate_implication(const implication_table& I) {
    const auto& L = I.carrier();
    const element zero = L.bottom(), one = L.top();

    check_result antitone, monotone;
    for (auto [lo, hi] : L.covers()) {
        for (element y : L.elements()) {
            if (antitone && !L.leq(I(hi, y), I(lo, y)))
                antitone = check_result::fail({lo, hi, y});
            if (monotone && !L.leq(I(y, lo), I(y, hi)))
                monotone = check_result::fail({y, lo, hi});
        }
    }

    auto boundary = [&](element x, element y, element expected) {
        return I(x, y) == expected ? check_result::ok() : check_result::fail({x, y});
    };
    axiom_report report;
    report.verdicts.push_back({"antitone-first", antitone});
    report.verdicts.push_back({"monotone-second", monotone});
    report.verdicts.push_back({"I(0,0)=1", boundary(zero, zero, one)});
    report.verdicts.push_back({"I(0,1)=1", boundary(zero, one, one)});
    report.verdicts.push_back({"I(1,1)=1", boundary(one, one, one)});
    report.verdicts.push_back({"I(1,0)=0", boundary(one, zero, zero)});
    return report;
}

check_result check_np(const implication_table& I) {
    const auto& L = I.carrier();
    return for_all_elements(L, [&](element y) { return I(L.top(), y) == y; });
}

check_result check_ip(const implication_table& I) {
    const auto& L = I.carrier();
    return for_all_elements(L, [&](element x) { return I(x, x) == L.top(); });
}

check_result check_op(const implication_table& I) {
    const auto& L = I.carrier();
    return for_all_pairs(L, [&](element x, element y) { return L.leq(x, y) == (I(x, y) == L.top()); });
}

check_result check_ep(const implication_table& I) {
    return for_all_triples(I.carrier(),
                           [&](element x, element y, element z) { return I(x, I(y, z)) == I(y, I(x, z)); });
}

check_result has_neutral_one(const op_table& O) {
    const auto& L = O.carrier();
    return for_all_elements(L, [&](element x) { return O(L.top(), x) == x && O(x, L.top()) == x; });
}

check_result is_deflationary(const op_table& O) {
    const auto& L = O.carrier();
    return for_all_elements(L, [&](element x) { return L.leq(O(x, L.top()), x); });
}

check_result is_associative(const op_table& O) {
    return for_all_triples(O.carrier(),
                           [&](element x, element y, element z) { return O(x, O(y, z)) == O(O(x, y), z); });
}

check_result satisfies_exchange(const op_table& O) {
    return for_all_triples(O.carrier(),
                           [&](element x, element y, element z) { return O(x, O(y, z)) == O(y, O(x, z)); });
}

check_result exchange_comparable(const op_table& O) {
    const auto& L = O.carrier();
    return for_all_triples(L, [&](element x, element y, element z) {
        const element a = O(x, O(y, z)), b = O(y, O(x, z));
        return L.leq(a, b) || L.leq(b, a);
    });
}

check_result sections_preserve_joins(const op_table& O) {
    const auto& L = O.carrier();
    const std::size_t n = L.size();
    if (n > max_join_scan_size)
        throw lattice_error(error_kind::too_large,
                            "join-preservation scan limited to " + std::to_string(max_join_scan_size) + " elements");
    for (element x : L.elements()) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            element_set members;
            element_set image;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask >> i & 1U) {
                    members.push_back(element_at(i));
                    image.push_back(O(x, element_at(i)));
                }
            }
            if (O(x, sup_set(L, members)) != sup_set(L, image)) {
                members.insert(members.begin(), x);
                return check_result::fail(std::move(members));
            }
        }
    }
    return check_result::ok();
}

std::optional<residuation_failure> find_residuation_failure(const lattice& L) {
    std::optional<residuation_failure> found;
    search_quasi_overlaps(L, [&](const op_table& O) {
        if (auto r = max_attained(O); !r) {
            found = residuation_failure{O, r.witness[0], r.witness[1]};
            return false;
        }
        return true;
    });
    return found;
}

} // namespace latop::ops
