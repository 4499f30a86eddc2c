#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "homtest/errors.hpp"

namespace homtest {

// Validated r x s table of nonnegative integer counts with cached margins.
// Columns are the fixed-total groups; transpose on parse (or transposed())
// when the data is stored the other way around.
//
// Immutable after construction; safe to share across threads.
class ContingencyTable {
public:
    // counts is row-major with rows*cols entries. Labels are optional and
    // carry no meaning for any computation; empty vectors mean "unlabeled".
    ContingencyTable(std::size_t rows, std::size_t cols,
                     std::vector<std::int64_t> counts,
                     std::vector<std::string> row_labels = {},
                     std::vector<std::string> col_labels = {});

    static ContingencyTable from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                                      std::vector<std::string> row_labels = {},
                                      std::vector<std::string> col_labels = {});

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::int64_t at(std::size_t j, std::size_t k) const { return counts_[j * cols_ + k]; }
    std::span<const std::int64_t> counts() const { return counts_; }

    std::int64_t row_total(std::size_t j) const { return row_totals_[j]; }
    std::int64_t col_total(std::size_t k) const { return col_totals_[k]; }
    std::span<const std::int64_t> row_totals() const { return row_totals_; }
    std::span<const std::int64_t> col_totals() const { return col_totals_; }
    std::int64_t total() const { return total_; }

    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }

    ContingencyTable transposed() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::int64_t> counts_; // row-major
    std::vector<std::int64_t> row_totals_;
    std::vector<std::int64_t> col_totals_;
    std::int64_t total_ = 0;
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
};

// CSV layout is stated by the caller, never auto-detected.
struct ParseOptions {
    bool has_header = true;     // first row holds column labels
    bool has_row_labels = true; // first cell of each data row is a label
    bool transpose = false;     // swap rows and columns before validation
};

// Parses a UTF-8 comma-separated document of nonnegative integers.
// Throws ParseError naming the offending cell (1-based row/column within the
// data grid) for malformed cells or ragged rows, ValidationError for tables
// that violate ContingencyTable invariants.
ContingencyTable parse_table(std::string_view text, const ParseOptions& options = {});

// Expected counts under homogeneity of proportions: row_total * col_total / n,
// together with the shared row proportions p_j = row_total_j / n.
struct HomogeneityModel {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> expected;  // row-major
    std::vector<double> row_props; // sums to 1

    double at(std::size_t j, std::size_t k) const { return expected[j * cols + k]; }
};

HomogeneityModel homogeneity_model(const ContingencyTable& t);

// Differences observed - expected, and the same divided by sqrt(expected).
// The standardized entry is 0 where expected is 0 (the observed count is
// forced to 0 there as well).
struct ResidualReport {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> differences;  // row-major, count units
    std::vector<double> standardized; // row-major, dimensionless

    double difference(std::size_t j, std::size_t k) const { return differences[j * cols + k]; }
    double standardized_at(std::size_t j, std::size_t k) const { return standardized[j * cols + k]; }
};

// m must be derived from t.
ResidualReport residuals(const ContingencyTable& t, const HomogeneityModel& m);

} // namespace homtest
