// Copyright (c) latop contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace latop {

enum class error_kind {
    bad_parameter,
    duplicate_token,
    unknown_element,
    cycle,
    redundant_cover,
    no_bound,
    not_a_lattice,
    empty_net,
    too_large,
    not_total,
    degenerate_lattice,
    not_quasi_overlap,
    not_residuated,
    not_monotone,
    not_automorphism,
    lattice_mismatch,
    parse,
};

std::string_view to_string(error_kind kind) noexcept;

/// Raised by every validating entry point of the library. The witness holds
/// element tokens (never indices) so that it can be printed and re-checked.
class lattice_error : public std::runtime_error {
  public:
    lattice_error(error_kind kind, const std::string& what, std::vector<std::string> witness = {})
        : std::runtime_error(what), kind_(kind), witness_(std::move(witness)) {}

    error_kind kind() const noexcept { return kind_; }
    const std::vector<std::string>& witness() const noexcept { return witness_; }

  private:
    error_kind kind_;
    std::vector<std::string> witness_;
};

class parse_error : public lattice_error {
  public:
    parse_error(std::size_t line, std::size_t column, const std::string& what)
        : lattice_error(error_kind::parse,
                        "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace latop
