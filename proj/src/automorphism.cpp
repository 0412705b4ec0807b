// Copyright (c) latop contributors.
// SPDX-License-Identifier: Apache-2.0

#include "latop/automorphism.hpp"

#include <stdexcept>

#include "latop/galois.hpp"
#include "latop/operators.hpp"

namespace latop::aut {

automorphism::automorphism(lattice L, std::vector<element> image)
    : lattice_(std::move(L)), image_(std::move(image)), preimage_(lattice_.size()) {
    const std::size_t n = lattice_.size();
    if (image_.size() != n)
        throw lattice_error(error_kind::not_automorphism, "permutation length does not match the lattice");
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        const auto v = index(image_[i]);
        if (v >= n || hit[v])
            throw lattice_error(error_kind::not_automorphism, "map is not a bijection");
        hit[v] = true;
        preimage_[v] = element_at(i);
    }
    for (element x : lattice_.elements())
        for (element y : lattice_.elements())
            if (lattice_.leq(x, y) != lattice_.leq(image_[index(x)], image_[index(y)]))
                throw lattice_error(error_kind::not_automorphism, "map does not preserve and reflect the order",
                                    {lattice_.token(x), lattice_.token(y)});
}

namespace {

void extend(const lattice& L, std::vector<element>& image, std::vector<bool>& used, std::vector<automorphism>& out) {
    const std::size_t i = image.size();
    const std::size_t n = L.size();
    if (i == n) {
        out.emplace_back(L, image);
        return;
    }
    const element x = element_at(i);
    for (element v : L.elements()) {
        if (used[index(v)])
            continue;
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) {
            const element w = element_at(j);
            ok = L.leq(w, x) == L.leq(image[j], v) && L.leq(x, w) == L.leq(v, image[j]);
        }
        if (!ok)
            continue;
        used[index(v)] = true;
        image.push_back(v);
        extend(L, image, used, out);
        image.pop_back();
        used[index(v)] = false;
    }
}

void require_same(const lattice& a, const lattice& b) {
    if (!(a == b))
        throw lattice_error(error_kind::lattice_mismatch, "automorphisms of different lattices");
}

op_table residuated_conjugate(const op_table& O, const automorphism& rho) {
    op_table conj = conjugate_op(O, rho);
    if (auto r = ops::max_attained(conj); !r) {
        const auto& L = O.carrier();
        throw lattice_error(error_kind::not_residuated, "conjugated operator does not attain its residual maxima",
                            {L.token(r.witness[0]), L.token(r.witness[1])});
    }
    return conj;
}

template <class Section>
unary_map residual_column(const lattice& L, element z, Section section) {
    L.require(z);
    return unary_map::tabulate(L, L, [&](element a) {
        auto res = galois::residual_of(section(a));
        if (!res)
            throw lattice_error(error_kind::not_residuated, "section is not residuated", {L.token(a)});
        return res.pair->residual(z);
    });
}

} // namespace

std::vector<automorphism> enumerate_automorphisms(const lattice& L) {
    if (L.size() > max_enumeration_size)
        throw lattice_error(error_kind::too_large,
                            "automorphism enumeration limited to " + std::to_string(max_enumeration_size) + " elements");
    std::vector<automorphism> out;
    std::vector<element> image;
    std::vector<bool> used(L.size(), false);
    extend(L, image, used, out);
    return out;
}

automorphism identity(const lattice& L) {
    std::vector<element> image;
    for (element x : L.elements())
        image.push_back(x);
    return automorphism(L, std::move(image));
}

automorphism inverse(const automorphism& rho) {
    const auto& L = rho.carrier();
    std::vector<element> image;
    for (element x : L.elements())
        image.push_back(rho.inverse_at(x));
    return automorphism(L, std::move(image));
}

automorphism compose(const automorphism& a, const automorphism& b) {
    require_same(a.carrier(), b.carrier());
    const auto& L = a.carrier();
    std::vector<element> image;
    for (element x : L.elements())
        image.push_back(a(b(x)));
    return automorphism(L, std::move(image));
}

op_table conjugate_op(const op_table& O, const automorphism& rho) {
    require_same(O.carrier(), rho.carrier());
    if (!ops::is_quasi_overlap(O))
        throw lattice_error(error_kind::not_quasi_overlap, "only quasi-overlaps are conjugated");
    return conjugate(O, rho);
}

implication_table conjugate_implication(const implication_table& I, const automorphism& rho) {
    return conjugate(I, rho);
}

check_result check_coincide(const op_table& O, const automorphism& rho) {
    const auto lhs = conjugate_implication(ops::induced_implication(O), rho);
    const auto rhs = ops::induced_implication(conjugate_op(O, rho));
    const auto& L = O.carrier();
    for (element x : L.elements())
        for (element y : L.elements())
            if (lhs(x, y) != rhs(x, y))
                return check_result::fail({x, y});
    return check_result::ok();
}

unary_map closure_phi(const op_table& O, const automorphism& rho, element z) {
    const op_table conj = residuated_conjugate(O, rho);
    const auto& L = conj.carrier();
    return residual_column(L, z, [&](element x) {
        return unary_map::tabulate(L, L, [&](element t) { return conj(x, t); });
    });
}

unary_map closure_psi(const op_table& O, const automorphism& rho, element z) {
    const op_table conj = residuated_conjugate(O, rho);
    const auto& L = conj.carrier();
    return residual_column(L, z, [&](element y) {
        return unary_map::tabulate(L, L, [&](element t) { return conj(t, y); });
    });
}

closure_report check_closed_operator(const unary_map& f) {
    if (!(f.domain() == f.codomain()))
        throw lattice_error(error_kind::lattice_mismatch, "closure operators are endomaps");
    const auto& L = f.domain();
    closure_report r;
    r.monotone = is_monotone(f);
    r.idempotent = true;
    r.inflationary = true;
    for (element x : L.elements()) {
        r.idempotent = r.idempotent && f(f(x)) == f(x);
        r.inflationary = r.inflationary && L.leq(x, f(x));
    }
    return r;
}

adjunction_report check_psi_phi_adjunction(const op_table& O, const automorphism& rho, element z) {
    const unary_map phi = closure_phi(O, rho, z);
    const unary_map psi = closure_psi(O, rho, z);
    // OL1 makes the two sections of O^ρ coincide.
    if (!(phi == psi))
        throw std::logic_error("ψ_z and φ_z differ for a commutative operator");

    const auto& L = O.carrier();
    adjunction_report r;
    for (element x : L.elements()) {
        for (element y : L.elements()) {
            if (L.leq(x, psi(y)) != L.leq(y, phi(x))) {
                r.antitone_galois = check_result::fail({x, y});
                break;
            }
        }
        if (!r.antitone_galois)
            break;
    }
    r.psi_after_phi = check_closed_operator(latop::compose(psi, phi));
    r.phi_after_psi = check_closed_operator(latop::compose(phi, psi));
    r.psi = check_closed_operator(psi);
    r.phi = check_closed_operator(phi);
    return r;
}

} // namespace latop::aut
