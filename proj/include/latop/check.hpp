// Copyright (c) latop contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "latop/lattice.hpp"

namespace latop {

/// Verdict of an exhaustive check. A failed check always carries the
/// violating tuple; its meaning is documented on the check itself.
struct check_result {
    bool pass = true;
    element_set witness;

    explicit operator bool() const noexcept { return pass; }

    static check_result ok() { return {}; }
    static check_result fail(element_set witness) { return {false, std::move(witness)}; }
};

struct axiom_verdict {
    std::string axiom;
    check_result result;
};

struct axiom_report {
    std::vector<axiom_verdict> verdicts;

    bool all_pass() const noexcept {
        for (const auto& v : verdicts)
            if (!v.result.pass)
                return false;
        return true;
    }

    /// nullptr when no verdict has that name.
    const axiom_verdict* find(std::string_view axiom) const noexcept {
        for (const auto& v : verdicts)
            if (v.axiom == axiom)
                return &v;
        return nullptr;
    }
};

/// Renders a witness as "(t1,t2,...)" using element tokens.
std::string format_witness(const lattice& L, const element_set& witness);

} // namespace latop
