// Copyright (c) latop contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "latop/check.hpp"
#include "latop/lattice.hpp"

namespace latop::cli {

enum exit_status : int {
    all_pass = 0,
    check_failed = 1,
    parse_failed = 2,
    resource_guard = 3,
};

enum class output_format { human, records };

enum class verdict { pass, fail, info };

struct report_line {
    std::string check;
    verdict outcome = verdict::info;
    std::string witness; ///< "(t1,t2,...)" or empty
    std::string detail;  ///< free text without spaces, or empty
};

/// Ordered list of verdicts for one command. INFO lines are recorded but do
/// not count towards the pass/fail summary.
class report {
  public:
    explicit report(std::string command) : command_(std::move(command)) {}

    void pass(std::string check, std::string detail = {});
    void fail(std::string check, std::string witness = {}, std::string detail = {});
    void info(std::string check, std::string detail = {});
    /// PASS or FAIL depending on `r`, with the witness rendered through `L`.
    void add(std::string check, const check_result& r, const lattice& L);
    void add(std::string check, bool ok);
    /// Free line printed after the verdicts and before the summary.
    void trailer(std::string text) { trailers_.push_back(std::move(text)); }

    std::size_t passed() const noexcept;
    std::size_t failed() const noexcept;
    const std::vector<report_line>& lines() const noexcept { return lines_; }
    int exit_code() const noexcept { return failed() == 0 ? all_pass : check_failed; }

    void render(std::ostream& out, output_format format, bool quiet) const;

  private:
    std::string command_;
    std::vector<report_line> lines_;
    std::vector<std::string> trailers_;
};

/** Entry point shared by the `latop` binary and the tests. `args` excludes
    the program name. Returns the process exit status:
    0 all checks pass, 1 a check failed, 2 parse or usage error,
    3 a resource guard tripped. */
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace latop::cli
