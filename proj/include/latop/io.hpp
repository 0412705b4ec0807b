// Copyright (c) latop contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "latop/lattice.hpp"
#include "latop/tables.hpp"

namespace latop::io {

/** Reads a `.lat` document:

        lattice <name>
        elements <t1> ... <tn>
        cover <x> <y>          (zero or more)
        end

    `#` starts a comment. Syntax problems raise `parse_error`; a document that
    parses but is not a bounded lattice raises the corresponding
    `lattice_error` from `build_lattice`. */
lattice read_lattice(std::istream& in);
lattice read_lattice_file(const std::string& path);

/// Covers are written in canonical (index) order.
void write_lattice(std::ostream& out, const lattice& L);
std::string to_string(const lattice& L);

enum class table_kind { op, imp, map };

struct table_document {
    table_kind kind;
    std::string name;
    std::string lattice_name;
    /// op_table for `op`, implication_table for `imp`, unary_map for `map`.
    std::variant<op_table, implication_table, unary_map> table;
};

/** Reads an `.op` document against `L`:

        op|imp|map <name> on <lattice-name>
        row <x> : <v1> ... <vn>     (one per element, in elements order)
        end

    `map` rows carry a single value. */
table_document read_table(std::istream& in, const lattice& L);
table_document read_table_file(const std::string& path, const lattice& L);

void write_op(std::ostream& out, const std::string& name, const op_table& T);
void write_implication(std::ostream& out, const std::string& name, const implication_table& I);
void write_map(std::ostream& out, const std::string& name, const unary_map& f);

} // namespace latop::io
