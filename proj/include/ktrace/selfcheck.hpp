#pragma once

// Cross-route verification suites and the published-value ledger.  These back
// the `check` and `examples` subcommands and the acceptance runner.

#include <string>
#include <vector>

#include "ktrace/shim.hpp"

namespace ktrace {

struct SuiteResult {
    std::string name;
    long long checked = 0;
    std::vector<std::string> failures;
    double seconds = 0.0;

    bool ok() const { return failures.empty(); }
};

// Non-crossing path formula against the full determinantal sum, for every
// h*t = n <= max_n and every 0 <= s <= n.
SuiteResult suite_speh_vs_determinantal(long long max_n);

// trace_standard against the monomial-truncation oracle on every segment
// list drawn from the determinantal terms of those Speh data, both modes.
SuiteResult suite_standard_vs_monomial(long long max_n);

// Vanishing matches the divisibility criterion on 0 < s < n.  The boundary
// signatures are excluded: there the compact trace is the plain trace
// (1 for h = 1 and 0 otherwise) while m = 1 makes the criterion vacuous.
SuiteResult suite_vanishing(long long max_n);

// Strict and dual branches agree at h = t (n <= max_n a square).
SuiteResult suite_self_dual(long long max_n);

// s = 0 and s = n reduce to plain traces; star/empty segment conventions.
SuiteResult suite_degenerate(long long max_n);

// w0 existence matches the divisibility criterion, its defining properties
// hold, and (for small lists) it is the unique such pairing.  n <= max_n.
SuiteResult suite_pairing(long long max_n);

// Dimension formula against trivial-trace orders, and the order bound over
// enumerated rigid data.  n <= max_n (meant for max_n = 8).
SuiteResult suite_order_dimension(long long max_n);

// The suites behind `ktrace check`.
std::vector<SuiteResult> run_check_suites(long long max_n);

struct ExampleRow {
    std::string name;
    QPoly published;
    QPoly computed;
    bool flagged = false;  // computed differs from the published value
};

// Recomputes the published example values and flags every disagreement.
std::vector<ExampleRow> published_example_rows();

}  // namespace ktrace
