#pragma once

#include <radokit/coloring.hpp>
#include <radokit/common.hpp>
#include <radokit/equation.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace radokit {

enum class SearchOutcome { witness, exhausted, budget_exceeded };

auto to_string(SearchOutcome o) -> std::string;

struct SearchOptions {
    Budget budget;
    /// Parallel mode shards the top of the tree; exhausted answers are
    /// unaffected, witness identity is only guaranteed with one thread.
    unsigned threads = 1;
    /// Only count solutions with pairwise distinct values. Certificates record
    /// the flag; such results do not certify regularity.
    bool distinct = false;
    /// Colors of 1..m to start from. Used as a hint: if no witness extends it
    /// the search restarts from the empty assignment.
    std::optional<std::vector<int>> seed;
};

struct SearchCertificate {
    LinearEquation equation;
    int num_colors = 1;
    std::int64_t bound = 1;
    SearchOutcome outcome = SearchOutcome::budget_exceeded;
    std::optional<Coloring> witness;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
    bool distinct = false;
    bool seeded = false;
};

/// Backtracking over the colors of 1, 2, ..., N. Color t may only be used once
/// colors 0..t-1 have appeared. Assigning m checks the solutions whose largest
/// value is m. In sequential mode the witness is the lexicographically least
/// avoiding coloring in this order.
auto search_avoiding(const LinearEquation & eq, int num_colors, std::int64_t bound, const SearchOptions & options = {})
    -> SearchCertificate;

struct RadoResult {
    enum class Status { found, unknown, budget_exceeded };

    Status status = Status::budget_exceeded;
    /// Least N with no avoiding coloring of [1, N] (status found).
    std::int64_t value = 0;
    /// Largest N that was shown to have an avoiding coloring, and that coloring.
    std::int64_t witness_bound = 0;
    std::optional<Coloring> witness;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

auto to_string(RadoResult::Status s) -> std::string;

/// Increases N from 1, seeding each search with the previous witness, until
/// no avoiding coloring exists or max_n is passed.
auto rado_number(const LinearEquation & eq, int num_colors, std::int64_t max_n, const SearchOptions & options = {})
    -> RadoResult;

struct DorRow {
    enum class Status { regular, not_regular_evidence, implied_by_criterion, implied_by_witness, budget_exceeded };

    int num_colors = 1;
    Status status = Status::budget_exceeded;
    std::optional<std::int64_t> rado_number;
    std::int64_t witness_bound = 0;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

auto to_string(DorRow::Status s) -> std::string;

struct DorReport {
    LinearEquation equation;
    bool regular = false;
    std::vector<std::size_t> zero_subset;
    /// Largest r with a finite Rado number found (the equation is r-regular).
    std::optional<int> certified_lower;
    /// (smallest r whose avoiding coloring survived to the evidence bound) - 1.
    std::optional<int> evidence_upper;
    std::int64_t evidence_bound = 0;
    std::vector<DorRow> rows;
};

auto dor_report(const LinearEquation & eq, int r_max, std::int64_t evidence_bound, const SearchOptions & options = {})
    -> DorReport;

}
