#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "homtest/table.hpp"

namespace homtest {

enum class StatisticFamily : std::uint8_t {
    chi_square,           // sum (n - e)^2 / e
    log_likelihood_ratio, // 2 sum n ln(n / e)
    freeman_tukey,        // 4 sum (sqrt n - sqrt e)^2
    frobenius,            // sum (n - e)^2
    neg_log_likelihood,   // -ln prod_k MultinomialPMF(column k; col total, p-hat)
    power_divergence,     // Cressie-Read family with parameter lambda
};

// A discrepancy measure. lambda is meaningful only for power_divergence;
// lambda = 1, 0, -1/2 coincide with chi_square, log_likelihood_ratio and
// freeman_tukey respectively.
struct StatisticKind {
    StatisticFamily family = StatisticFamily::chi_square;
    double lambda = 0.0;

    static StatisticKind chi_square() { return {StatisticFamily::chi_square, 0.0}; }
    static StatisticKind log_likelihood_ratio() { return {StatisticFamily::log_likelihood_ratio, 0.0}; }
    static StatisticKind freeman_tukey() { return {StatisticFamily::freeman_tukey, 0.0}; }
    static StatisticKind frobenius() { return {StatisticFamily::frobenius, 0.0}; }
    static StatisticKind neg_log_likelihood() { return {StatisticFamily::neg_log_likelihood, 0.0}; }
    static StatisticKind power_divergence(double lambda); // throws ValidationError on non-finite lambda

    friend bool operator==(const StatisticKind&, const StatisticKind&) = default;
    friend auto operator<=>(const StatisticKind&, const StatisticKind&) = default;
};

// The five named statistics, in presentation order.
std::vector<StatisticKind> all_statistic_kinds();

// Short token: chi2, g2, ft, frobenius, nll, cr:<lambda>.
std::string to_token(const StatisticKind& kind);
// Human-readable name used in text reports.
std::string display_name(const StatisticKind& kind);
// Parses a token as produced by to_token (plus the CLI alias "all" handled by
// the caller). Throws ParseError on unknown tokens.
StatisticKind kind_from_token(std::string_view token);

struct StatisticValue {
    StatisticKind kind;
    double value = 0.0;
};

// All statistics treat empty cells by continuous extension: 0/0 := 0 in
// chi_square, 0 ln 0 := 0 elsewhere. A whole row of zeros is legal (reachable
// in simulated tables) and contributes nothing.
StatisticValue chi_square(const ContingencyTable& t, const HomogeneityModel& m);
StatisticValue log_likelihood_ratio(const ContingencyTable& t, const HomogeneityModel& m);
StatisticValue freeman_tukey(const ContingencyTable& t, const HomogeneityModel& m);
StatisticValue frobenius(const ContingencyTable& t, const HomogeneityModel& m);

// Negative log of the probability of the whole table: one multinomial per
// column, evaluated at the table's own row proportions. include_coefficient
// keeps the multinomial coefficient inside the PMF (the default convention;
// the alternative drops it and reduces to -sum n ln p-hat).
StatisticValue neg_log_likelihood(const ContingencyTable& t, bool include_coefficient = true);

// (2 / (lambda (lambda+1))) sum n ((n/e)^lambda - 1), with the continuous
// limits at lambda = 0 (log_likelihood_ratio) and lambda = -1
// (2 sum e ln(e/n)). For lambda < -1 a zero count with positive expectation
// makes the statistic +infinity.
StatisticValue power_divergence(const ContingencyTable& t, const HomogeneityModel& m, double lambda);

// Applies each requested statistic in a single pass over the cells.
std::map<StatisticKind, StatisticValue> compute_all(const ContingencyTable& t,
                                                    const HomogeneityModel& m,
                                                    const std::vector<StatisticKind>& kinds,
                                                    bool nll_include_coefficient = true);

// Evaluates a fixed set of statistics for tables that share one vector of
// column totals (the simulation hot path). Logs of integer counts and
// log-factorials come from tables precomputed at construction; accumulation
// is compensated and row-major, so a statistic's value does not depend on
// how simulations are partitioned across threads.
class StatisticEvaluator {
public:
    StatisticEvaluator(std::size_t rows, std::span<const std::int64_t> col_totals,
                       std::vector<StatisticKind> kinds,
                       bool nll_include_coefficient = true);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::int64_t total() const { return total_; }
    const std::vector<StatisticKind>& kinds() const { return kinds_; }

    // counts: row-major rows x cols, column sums equal to the construction
    // col_totals; row_totals: per-row sums of counts; out: one slot per kind.
    void compute(std::span<const std::int64_t> counts,
                 std::span<const std::int64_t> row_totals,
                 std::span<double> out) const;

    // Convenience for whole tables (shape and column totals must match).
    std::vector<double> compute(const ContingencyTable& t) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::int64_t> col_totals_;
    std::int64_t total_ = 0;
    std::vector<StatisticKind> kinds_;
    bool nll_coefficient_;

    bool need_chi2_ = false;
    bool need_g2_ = false;
    bool need_h2_ = false;
    bool need_f2_ = false;
    bool need_nll_ = false;
    std::vector<double> lambdas_; // requested power-divergence parameters

    std::vector<double> log_int_;  // ln k, k = 0..total (entry 0 unused)
    std::vector<double> log_fact_; // ln k!, k = 0..total
    std::vector<double> log_col_;  // ln col_total_k
    double log_total_ = 0.0;
    double nll_coef_const_ = 0.0;  // sum_k ln(col_total_k!)

    void write_out(std::span<double> out, double chi2, double g2, double h2, double f2,
                   double nll, std::span<const double> pd) const;
};

} // namespace homtest
