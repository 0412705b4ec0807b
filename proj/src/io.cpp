// Copyright (c) latop contributors.
// SPDX-License-Identifier: Apache-2.0

#include "latop/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace latop::io {

namespace {

struct word {
    std::string text;
    std::size_t column;
};

struct line {
    std::size_t number;
    std::vector<word> words;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

/// Significant lines only: comments stripped, blank lines dropped.
class line_reader {
  public:
    explicit line_reader(std::istream& in) : in_(in) {}

    std::optional<line> next() {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++number_;
            if (auto hash = raw.find('#'); hash != std::string::npos)
                raw.erase(hash);
            line l{number_, {}};
            std::size_t i = 0;
            while (i < raw.size()) {
                while (i < raw.size() && is_space(raw[i]))
                    ++i;
                const std::size_t start = i;
                while (i < raw.size() && !is_space(raw[i]))
                    ++i;
                if (i > start)
                    l.words.push_back({raw.substr(start, i - start), start + 1});
            }
            if (!l.words.empty())
                return l;
        }
        return std::nullopt;
    }

    std::size_t last_line() const noexcept { return number_; }

  private:
    std::istream& in_;
    std::size_t number_ = 0;
};

line expect_line(line_reader& reader, const std::string& keyword) {
    auto l = reader.next();
    if (!l)
        throw parse_error(reader.last_line() + 1, 1, "unexpected end of input, expected '" + keyword + "'");
    if (l->words.front().text != keyword)
        throw parse_error(l->number, l->words.front().column,
                          "expected '" + keyword + "', found '" + l->words.front().text + "'");
    return *l;
}

void expect_arity(const line& l, std::size_t count, const std::string& what) {
    if (l.words.size() != count) {
        const std::size_t column = l.words.size() > count ? l.words[count].column : l.words.back().column;
        throw parse_error(l.number, column, what);
    }
}

void expect_end(line_reader& reader) {
    expect_arity(expect_line(reader, "end"), 1, "'end' takes no arguments");
    if (auto extra = reader.next())
        throw parse_error(extra->number, extra->words.front().column, "content after 'end'");
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error(0, 0, "cannot open '" + path + "'");
    return in;
}

element lookup(const lattice& L, const line& l, const word& w) {
    if (auto e = L.find(w.text))
        return *e;
    throw parse_error(l.number, w.column, "unknown element '" + w.text + "'");
}

} // namespace

lattice read_lattice(std::istream& in) {
    line_reader reader(in);
    const line header = expect_line(reader, "lattice");
    expect_arity(header, 2, "expected 'lattice <name>'");

    const line elements = expect_line(reader, "elements");
    if (elements.words.size() < 2)
        throw parse_error(elements.number, elements.words.front().column, "a lattice needs at least one element");
    std::vector<std::string> tokens;
    for (std::size_t i = 1; i < elements.words.size(); ++i)
        tokens.push_back(elements.words[i].text);

    std::vector<std::pair<std::string, std::string>> covers;
    for (;;) {
        auto l = reader.next();
        if (!l)
            throw parse_error(reader.last_line() + 1, 1, "unexpected end of input, expected 'end'");
        const auto& head = l->words.front();
        if (head.text == "end") {
            expect_arity(*l, 1, "'end' takes no arguments");
            if (auto extra = reader.next())
                throw parse_error(extra->number, extra->words.front().column, "content after 'end'");
            break;
        }
        if (head.text != "cover")
            throw parse_error(l->number, head.column, "expected 'cover' or 'end', found '" + head.text + "'");
        expect_arity(*l, 3, "expected 'cover <x> <y>'");
        for (std::size_t i = 1; i <= 2; ++i) {
            const auto& w = l->words[i];
            if (std::find(tokens.begin(), tokens.end(), w.text) == tokens.end())
                throw parse_error(l->number, w.column, "unknown element '" + w.text + "'");
        }
        covers.emplace_back(l->words[1].text, l->words[2].text);
    }
    return build_lattice(header.words[1].text, std::move(tokens), covers);
}

lattice read_lattice_file(const std::string& path) {
    auto in = open(path);
    return read_lattice(in);
}

void write_lattice(std::ostream& out, const lattice& L) {
    out << "lattice " << L.name() << '\n' << "elements";
    for (const auto& t : L.tokens())
        out << ' ' << t;
    out << '\n';
    for (auto [x, y] : L.covers())
        out << "cover " << L.token(x) << ' ' << L.token(y) << '\n';
    out << "end\n";
}

std::string to_string(const lattice& L) {
    std::ostringstream out;
    write_lattice(out, L);
    return out.str();
}

table_document read_table(std::istream& in, const lattice& L) {
    line_reader reader(in);
    auto header = reader.next();
    if (!header)
        throw parse_error(1, 1, "empty operator document");
    const auto& kind_word = header->words.front();
    table_kind kind;
    if (kind_word.text == "op")
        kind = table_kind::op;
    else if (kind_word.text == "imp")
        kind = table_kind::imp;
    else if (kind_word.text == "map")
        kind = table_kind::map;
    else
        throw parse_error(header->number, kind_word.column, "expected 'op', 'imp' or 'map'");
    expect_arity(*header, 4, "expected '" + kind_word.text + " <name> on <lattice-name>'");
    if (header->words[2].text != "on")
        throw parse_error(header->number, header->words[2].column, "expected 'on'");
    if (header->words[3].text != L.name())
        throw parse_error(header->number, header->words[3].column,
                          "document is for lattice '" + header->words[3].text + "', not '" + L.name() + "'");

    const std::size_t n = L.size();
    const std::size_t width = kind == table_kind::map ? 1 : n;
    std::vector<element> cells;
    cells.reserve(n * width);
    for (element x : L.elements()) {
        const line row = expect_line(reader, "row");
        if (row.words.size() < 3 || row.words[2].text != ":")
            throw parse_error(row.number, row.words.back().column, "expected 'row <x> : <values>'");
        if (row.words[1].text != L.token(x))
            throw parse_error(row.number, row.words[1].column,
                              "expected row '" + L.token(x) + "', found '" + row.words[1].text + "'");
        if (row.words.size() != 3 + width)
            throw parse_error(row.number, row.words.size() > 3 + width ? row.words[3 + width].column : row.words.back().column,
                              "row needs " + std::to_string(width) + " value(s)");
        for (std::size_t j = 0; j < width; ++j)
            cells.push_back(lookup(L, row, row.words[3 + j]));
    }
    expect_end(reader);

    auto table = [&]() -> std::variant<op_table, implication_table, unary_map> {
        switch (kind) {
        case table_kind::op: return op_table(L, std::move(cells));
        case table_kind::imp: return implication_table(L, std::move(cells));
        case table_kind::map: break;
        }
        return unary_map(L, std::move(cells));
    };
    return {kind, header->words[1].text, header->words[3].text, table()};
}

table_document read_table_file(const std::string& path, const lattice& L) {
    auto in = open(path);
    return read_table(in, L);
}

namespace {

template <class Table>
void write_binary(std::ostream& out, const char* keyword, const std::string& name, const Table& T) {
    const auto& L = T.carrier();
    out << keyword << ' ' << name << " on " << L.name() << '\n';
    for (element x : L.elements()) {
        out << "row " << L.token(x) << " :";
        for (element y : L.elements())
            out << ' ' << L.token(T(x, y));
        out << '\n';
    }
    out << "end\n";
}

} // namespace

void write_op(std::ostream& out, const std::string& name, const op_table& T) { write_binary(out, "op", name, T); }

void write_implication(std::ostream& out, const std::string& name, const implication_table& I) {
    write_binary(out, "imp", name, I);
}

void write_map(std::ostream& out, const std::string& name, const unary_map& f) {
    const auto& L = f.domain();
    if (!(L == f.codomain()))
        throw lattice_error(error_kind::lattice_mismatch, "only endomaps have a text form");
    out << "map " << name << " on " << L.name() << '\n';
    for (element x : L.elements())
        out << "row " << L.token(x) << " : " << L.token(f(x)) << '\n';
    out << "end\n";
}

} // namespace latop::io
