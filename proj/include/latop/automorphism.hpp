// Copyright (c) latop contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "latop/check.hpp"
#include "latop/lattice.hpp"
#include "latop/tables.hpp"

namespace latop::aut {

/// Upper bound on n for `enumerate_automorphisms`.
inline constexpr std::size_t max_enumeration_size = 10;

/** An order automorphism ρ of a finite lattice.

    On a finite lattice every order isomorphism is Scott-continuous in both
    directions, so order preservation is the only condition checked. */
class automorphism {
  public:
    /// Throws `not_automorphism` unless `image` is a bijection with
    /// x <= y <=> image[x] <= image[y].
    automorphism(lattice L, std::vector<element> image);

    const lattice& carrier() const noexcept { return lattice_; }
    std::span<const element> image() const noexcept { return image_; }

    element operator()(element x) const {
        lattice_.require(x);
        return image_[index(x)];
    }
    element inverse_at(element x) const {
        lattice_.require(x);
        return preimage_[index(x)];
    }

    unary_map as_map() const { return unary_map(lattice_, image_); }

    friend bool operator==(const automorphism& a, const automorphism& b) {
        return a.image_ == b.image_ && a.lattice_ == b.lattice_;
    }

  private:
    lattice lattice_;
    std::vector<element> image_;
    std::vector<element> preimage_;
};

/// Identity first, then lexicographic by image vector.
std::vector<automorphism> enumerate_automorphisms(const lattice& L);

automorphism identity(const lattice& L);
automorphism inverse(const automorphism& rho);
/// (a ∘ b)(x) = a(b(x)). Throws `lattice_mismatch`.
automorphism compose(const automorphism& a, const automorphism& b);

/// T^ρ(x,y) = ρ⁻¹(T(ρ(x), ρ(y))) for any table.
template <class Tag>
basic_table<Tag> conjugate(const basic_table<Tag>& T, const automorphism& rho) {
    if (!(T.carrier() == rho.carrier()))
        throw lattice_error(error_kind::lattice_mismatch, "table and automorphism live on different lattices");
    return basic_table<Tag>::tabulate(T.carrier(),
                                      [&](element x, element y) { return rho.inverse_at(T(rho(x), rho(y))); });
}

/// O^ρ for a quasi-overlap O. Throws `not_quasi_overlap`, `lattice_mismatch`.
op_table conjugate_op(const op_table& O, const automorphism& rho);
implication_table conjugate_implication(const implication_table& I, const automorphism& rho);

/// (I_O)^ρ = I_(O^ρ) cellwise; witness (x,y).
check_result check_coincide(const op_table& O, const automorphism& rho);

/// φ_z(x) = residual of t ↦ O^ρ(x,t) evaluated at z. Throws `not_residuated`
/// unless O^ρ attains every maximum.
unary_map closure_phi(const op_table& O, const automorphism& rho, element z);
/// ψ_z(y) = residual of t ↦ O^ρ(t,y) evaluated at z.
unary_map closure_psi(const op_table& O, const automorphism& rho, element z);

struct closure_report {
    bool monotone = false;
    bool idempotent = false;
    bool inflationary = false;

    bool closed() const noexcept { return monotone && idempotent && inflationary; }
};

closure_report check_closed_operator(const unary_map& f);

struct adjunction_report {
    /// x <= ψ_z(y) <=> y <= φ_z(x); witness (x,y).
    check_result antitone_galois;
    closure_report psi_after_phi;
    closure_report phi_after_psi;
    /// The maps themselves, measured rather than asserted.
    closure_report psi;
    closure_report phi;
};

adjunction_report check_psi_phi_adjunction(const op_table& O, const automorphism& rho, element z);

} // namespace latop::aut
