// Copyright (c) latop contributors.
// SPDX-License-Identifier: Apache-2.0

#include "latop/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "latop/automorphism.hpp"
#include "latop/generators.hpp"
#include "latop/io.hpp"
#include "latop/operators.hpp"
#include "latop/scott.hpp"

namespace latop::cli {

void report::pass(std::string check, std::string detail) {
    lines_.push_back({std::move(check), verdict::pass, {}, std::move(detail)});
}

void report::fail(std::string check, std::string witness, std::string detail) {
    lines_.push_back({std::move(check), verdict::fail, std::move(witness), std::move(detail)});
}

void report::info(std::string check, std::string detail) {
    lines_.push_back({std::move(check), verdict::info, {}, std::move(detail)});
}

void report::add(std::string check, const check_result& r, const lattice& L) {
    if (r)
        pass(std::move(check));
    else
        fail(std::move(check), format_witness(L, r.witness));
}

void report::add(std::string check, bool ok) {
    if (ok)
        pass(std::move(check));
    else
        fail(std::move(check));
}

std::size_t report::passed() const noexcept {
    return static_cast<std::size_t>(std::ranges::count(lines_, verdict::pass, &report_line::outcome));
}

std::size_t report::failed() const noexcept {
    return static_cast<std::size_t>(std::ranges::count(lines_, verdict::fail, &report_line::outcome));
}

namespace {

std::string_view label(verdict v) {
    switch (v) {
    case verdict::pass: return "PASS";
    case verdict::fail: return "FAIL";
    case verdict::info: return "INFO";
    }
    return "INFO";
}

} // namespace

void report::render(std::ostream& out, output_format format, bool quiet) const {
    if (!quiet) {
        if (format == output_format::human) {
            out << "latop " << command_ << '\n';
            for (const auto& l : lines_) {
                out << label(l.outcome) << ' ' << l.check;
                if (!l.witness.empty())
                    out << " witness=" << l.witness;
                if (!l.detail.empty())
                    out << ' ' << l.detail;
                out << '\n';
            }
        } else {
            for (const auto& l : lines_) {
                out << "check=" << l.check << " verdict=" << label(l.outcome);
                if (!l.witness.empty())
                    out << " witness=" << l.witness;
                if (!l.detail.empty())
                    out << " detail=" << l.detail;
                out << '\n';
            }
        }
        for (const auto& t : trailers_)
            out << t << '\n';
    }
    out << "summary pass=" << passed() << " fail=" << failed() << '\n';
}

namespace {

/// Raised for command-line misuse that CLI11 cannot see.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct common_options {
    std::string format = "human";
    bool quiet = false;
};

std::string tokens_of(const std::vector<std::string>& witness) {
    std::string out = "(";
    for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i)
            out += ',';
        out += witness[i];
    }
    return out + ")";
}

std::string flatten(const op_table& O) {
    const auto& L = O.carrier();
    std::string out = "cells=";
    for (std::size_t i = 0; i < O.cells().size(); ++i) {
        if (i)
            out += ',';
        out += L.token(O.cells()[i]);
    }
    return out;
}

std::string image_of(const aut::automorphism& rho) {
    const auto& L = rho.carrier();
    std::string out = "map=";
    for (element x : L.elements()) {
        if (index(x))
            out += ',';
        out += L.token(x) + "->" + L.token(rho(x));
    }
    return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// Loads a lattice; a document that parses but is not a bounded lattice is
/// recorded as a failed `lattice` check and yields nullopt.
std::optional<lattice> load_lattice(const std::string& path, report& r) {
    try {
        lattice L = io::read_lattice_file(path);
        r.pass("lattice", "size=" + std::to_string(L.size()));
        return L;
    } catch (const parse_error&) {
        throw;
    } catch (const lattice_error& e) {
        if (e.kind() == error_kind::too_large)
            throw;
        r.fail("lattice", e.witness().empty() ? std::string{} : tokens_of(e.witness()), std::string(to_string(e.kind())));
        return std::nullopt;
    }
}

void add_axioms(report& r, const axiom_report& axioms, const lattice& L) {
    for (const auto& v : axioms.verdicts)
        r.add(v.axiom, v.result, L);
}

/// Quasi-overlap axioms, or a single failure line on a degenerate lattice.
bool add_quasi_overlap_axioms(report& r, const op_table& O) {
    try {
        const auto axioms = ops::validate_quasi_overlap(O);
        add_axioms(r, axioms, O.carrier());
        return axioms.all_pass();
    } catch (const lattice_error& e) {
        if (e.kind() != error_kind::degenerate_lattice)
            throw;
        r.fail("quasi-overlap", {}, std::string(to_string(e.kind())));
        return false;
    }
}

void run_validate(report& r, const std::string& lattice_path, const std::string& table_path) {
    auto L = load_lattice(lattice_path, r);
    if (!L || table_path.empty())
        return;
    auto doc = io::read_table_file(table_path, *L);
    switch (doc.kind) {
    case io::table_kind::op: add_quasi_overlap_axioms(r, std::get<op_table>(doc.table)); break;
    case io::table_kind::imp: add_axioms(r, ops::validate_implication(std::get<implication_table>(doc.table)), *L); break;
    case io::table_kind::map: r.add("monotone", is_monotone(std::get<unary_map>(doc.table))); break;
    }
}

op_table require_op(const io::table_document& doc, const std::string& path) {
    if (doc.kind != io::table_kind::op)
        throw usage_error("'" + path + "' is not an 'op' document");
    return std::get<op_table>(doc.table);
}

void run_derive(report& r, const std::string& lattice_path, const std::string& op_path, const std::string& out_path) {
    auto L = load_lattice(lattice_path, r);
    if (!L)
        return;
    auto doc = io::read_table_file(op_path, *L);
    const op_table O = require_op(doc, op_path);
    if (!add_quasi_overlap_axioms(r, O))
        return;

    const auto I = ops::induced_implication(O);
    add_axioms(r, ops::validate_implication(I), *L);

    std::ofstream out(out_path);
    if (!out)
        throw usage_error("cannot write '" + out_path + "'");
    io::write_implication(out, "I_" + doc.name, I);

    const auto attained = ops::max_attained(O);
    const auto residuation = ops::check_residuation(O, I);
    r.info("max_attained", yes_no(attained.pass) + (attained ? "" : "@" + format_witness(*L, attained.witness)));
    r.info("residuation", yes_no(residuation.pass) + (residuation ? "" : "@" + format_witness(*L, residuation.witness)));
    r.info("written", out_path);
}

struct check_flags {
    bool np = false, ip = false, op = false, ep = false;
    bool assoc = false, residuation = false, continuity = false, all = false;

    bool any() const { return np || ip || op || ep || assoc || residuation || continuity || all; }
    bool op_only() const { return assoc || residuation || continuity; }
};

void implication_checks(report& r, const implication_table& I, const check_flags& f) {
    const auto& L = I.carrier();
    if (f.all)
        add_axioms(r, ops::validate_implication(I), L);
    if (f.np || f.all)
        r.add("NP", ops::check_np(I), L);
    if (f.ip || f.all)
        r.add("IP", ops::check_ip(I), L);
    if (f.op || f.all)
        r.add("OP", ops::check_op(I), L);
    if (f.ep || f.all)
        r.add("EP", ops::check_ep(I), L);
}

/// The biconditionals that hold for residuated quasi-overlaps at finite scale.
void cross_checks(report& r, const op_table& O, const implication_table& I) {
    const bool residuated = ops::check_residuation(O, I).pass;
    const bool attained = ops::max_attained(O).pass;
    r.add("residuation<->max_attained", residuated == attained);
    if (residuated)
        r.add("residuation->continuity", scott::is_scott_continuous_binary(O));

    const bool assoc = ops::is_associative(O).pass;
    r.add("associative<->exchange", assoc == ops::satisfies_exchange(O).pass);
    if (!residuated) {
        r.info("residuated-equivalences", "skipped:not-residuated");
        return;
    }
    const bool neutral = ops::has_neutral_one(O).pass;
    r.add("NP<->neutral_one", ops::check_np(I).pass == neutral);
    r.add("IP<->deflationary", ops::check_ip(I).pass == ops::is_deflationary(O).pass);
    r.add("OP<->neutral_one", ops::check_op(I).pass == neutral);
    r.add("associative->EP", !assoc || ops::check_ep(I).pass);
}

void run_check(report& r, const std::string& lattice_path, const std::string& table_path, check_flags flags) {
    auto L = load_lattice(lattice_path, r);
    if (!L)
        return;
    if (!flags.any())
        flags.all = true;
    auto doc = io::read_table_file(table_path, *L);

    if (doc.kind == io::table_kind::imp) {
        if (flags.op_only())
            throw usage_error("--assoc, --residuation and --continuity need an 'op' document");
        implication_checks(r, std::get<implication_table>(doc.table), flags);
        return;
    }
    const op_table O = require_op(doc, table_path);
    if (!add_quasi_overlap_axioms(r, O))
        return;
    const auto I = ops::induced_implication(O);
    implication_checks(r, I, flags);
    if (flags.assoc || flags.all)
        r.add("associative", ops::is_associative(O), *L);
    if (flags.all) {
        r.add("exchange", ops::satisfies_exchange(O), *L);
        r.add("max_attained", ops::max_attained(O), *L);
    }
    if (flags.residuation || flags.all)
        r.add("residuation", ops::check_residuation(O, I), *L);
    if (flags.continuity || flags.all)
        r.add("continuity", scott::is_scott_continuous_binary(O));
    if (flags.all)
        cross_checks(r, O, I);
}

struct automorphism_flags {
    bool conjugate = false, coincide = false, closures = false;
};

void run_automorphisms(report& r, const std::string& lattice_path, const std::string& op_path,
                       automorphism_flags flags) {
    auto L = load_lattice(lattice_path, r);
    if (!L)
        return;
    const auto group = aut::enumerate_automorphisms(*L);
    for (std::size_t i = 0; i < group.size(); ++i)
        r.info("rho" + std::to_string(i), image_of(group[i]));
    r.info("automorphisms", "count=" + std::to_string(group.size()));
    if (op_path.empty())
        return;

    const op_table O = require_op(io::read_table_file(op_path, *L), op_path);
    if (!add_quasi_overlap_axioms(r, O))
        return;
    if (!flags.conjugate && !flags.coincide && !flags.closures)
        flags = {true, true, true};

    for (std::size_t i = 0; i < group.size(); ++i) {
        const auto& rho = group[i];
        const std::string tag = "[rho" + std::to_string(i) + "]";
        if (flags.conjugate)
            r.add("conjugate" + tag, ops::is_quasi_overlap(aut::conjugate_op(O, rho)));
        if (flags.coincide)
            r.add("coincide" + tag, aut::check_coincide(O, rho), *L);
        if (!flags.closures)
            continue;
        if (!ops::max_attained(aut::conjugate_op(O, rho))) {
            r.info("closures" + tag, "skipped:not-residuated");
            continue;
        }
        for (element z : L->elements()) {
            const std::string at = "[rho" + std::to_string(i) + ",z=" + L->token(z) + "]";
            const auto adj = aut::check_psi_phi_adjunction(O, rho, z);
            r.add("adjunction" + at, adj.antitone_galois, *L);
            r.add("closed(psi.phi)" + at, adj.psi_after_phi.closed());
            r.add("closed(phi.psi)" + at, adj.phi_after_psi.closed());
            r.info("closed(phi)" + at, "monotone=" + yes_no(adj.phi.monotone) + ",idempotent=" +
                                           yes_no(adj.phi.idempotent) + ",inflationary=" + yes_no(adj.phi.inflationary));
            r.info("closed(psi)" + at, "monotone=" + yes_no(adj.psi.monotone) + ",idempotent=" +
                                           yes_no(adj.psi.idempotent) + ",inflationary=" + yes_no(adj.psi.inflationary));
        }
    }
}

inline constexpr std::size_t max_search_size = 5;

void run_search(report& r, std::size_t max_size, const std::string& goal) {
    if (goal != "residuation-failure")
        throw usage_error("unknown search goal '" + goal + "'");
    if (max_size > max_search_size)
        throw lattice_error(error_kind::too_large, "search limited to lattices of size " + std::to_string(max_search_size));
    std::size_t found = 0;
    for (const lattice& L : gen::search_catalog(max_size)) {
        std::size_t count = 0;
        ops::for_each_quasi_overlap(L, [&](const op_table&) { ++count; });
        r.info("quasi_overlaps[" + L.name() + "]", "count=" + std::to_string(count));
        if (auto failure = ops::find_residuation_failure(L)) {
            ++found;
            r.fail("max_attained[" + L.name() + "]", format_witness(L, {failure->x, failure->y}), flatten(failure->op));
        } else {
            r.pass("max_attained[" + L.name() + "]");
        }
    }
    r.trailer(found ? "FOUND " + std::to_string(found) : "NONE FOUND");
}

void add_common(CLI::App* sub, common_options& common) {
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"human", "records"}));
    sub->add_flag("--quiet", common.quiet, "Print only the summary line");
}

std::string join_args(std::span<const std::string> args) {
    std::string out;
    for (const auto& a : args) {
        if (!out.empty())
            out += ' ';
        out += a;
    }
    return out;
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quasi-overlaps, induced implications and Scott-topological checks on finite lattices", "latop"};
    app.require_subcommand(1);
    common_options common;

    std::string lattice_path, table_path, out_path;
    check_flags cflags;
    automorphism_flags aflags;
    std::size_t max_size = 0;
    std::string goal = "residuation-failure";

    auto* validate = app.add_subcommand("validate", "Validate a lattice and optionally an operator document");
    validate->add_option("lattice", lattice_path)->required();
    validate->add_option("table", table_path);
    add_common(validate, common);

    auto* derive = app.add_subcommand("derive", "Derive the induced implication of a quasi-overlap");
    derive->add_option("lattice", lattice_path)->required();
    derive->add_option("op", table_path)->required();
    derive->add_option("output", out_path)->required();
    add_common(derive, common);

    auto* check = app.add_subcommand("check", "Check implication properties and residuation");
    check->add_option("lattice", lattice_path)->required();
    check->add_option("table", table_path)->required();
    check->add_flag("--np", cflags.np);
    check->add_flag("--ip", cflags.ip);
    check->add_flag("--op", cflags.op);
    check->add_flag("--ep", cflags.ep);
    check->add_flag("--assoc", cflags.assoc);
    check->add_flag("--residuation", cflags.residuation);
    check->add_flag("--continuity", cflags.continuity);
    check->add_flag("--all", cflags.all);
    add_common(check, common);

    auto* automorphisms = app.add_subcommand("automorphisms", "List automorphisms and sweep conjugations");
    automorphisms->add_option("lattice", lattice_path)->required();
    automorphisms->add_option("op", table_path);
    automorphisms->add_flag("--conjugate", aflags.conjugate);
    automorphisms->add_flag("--coincide", aflags.coincide);
    automorphisms->add_flag("--closures", aflags.closures);
    add_common(automorphisms, common);

    auto* search = app.add_subcommand("search", "Search the lattice catalog for residuation failures");
    search->add_option("--max-size", max_size)->required();
    search->add_option("--goal", goal);
    add_common(search, common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return all_pass;
    } catch (const CLI::ParseError& e) {
        err << "latop: " << e.what() << '\n';
        return parse_failed;
    }

    report r(join_args(args));
    try {
        if (validate->parsed())
            run_validate(r, lattice_path, table_path);
        else if (derive->parsed())
            run_derive(r, lattice_path, table_path, out_path);
        else if (check->parsed())
            run_check(r, lattice_path, table_path, cflags);
        else if (automorphisms->parsed())
            run_automorphisms(r, lattice_path, table_path, aflags);
        else
            run_search(r, max_size, goal);
    } catch (const parse_error& e) {
        err << "latop: parse error: " << e.what() << '\n';
        return parse_failed;
    } catch (const usage_error& e) {
        err << "latop: " << e.what() << '\n';
        return parse_failed;
    } catch (const lattice_error& e) {
        err << "latop: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return e.kind() == error_kind::too_large ? resource_guard : check_failed;
    }

    r.render(out, common.format == "records" ? output_format::records : output_format::human, common.quiet);
    return r.exit_code();
}

} // namespace latop::cli
