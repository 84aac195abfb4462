#ifndef INVFLOW_REPORT_HPP_
#define INVFLOW_REPORT_HPP_

#include <filesystem>
#include <string>
#include <vector>

namespace invflow {

struct RunRow {
  std::string model;
  std::uint64_t seed = 0;
  double test_nll = 0.0;
  std::string run;  // directory name

  bool operator==(const RunRow&) const = default;
};

struct SummaryRow {
  std::string model;
  std::size_t runs = 0;
  double mean = 0.0;
  double stddev = 0.0;  // sample (n - 1) estimator; 0 for a single run
  std::string note;
};

struct Report {
  std::vector<RunRow> runs;
  std::vector<SummaryRow> summary;
  // Model kinds without any completed run, and run directories that have no
  // result.json.
  std::vector<std::string> missing;
};

SummaryRow summarize(const std::string& model, const std::vector<double>& test_nlls);

// Reads every <run_dir>/<run>/result.json.
Report build_report(const std::filesystem::path& run_dir);

std::string format_results_csv(const std::vector<RunRow>& runs);
std::vector<RunRow> parse_results_csv(const std::string& text);
std::string format_summary_csv(const std::vector<SummaryRow>& summary);
std::string format_summary_table(const Report& report);

// results.csv and summary.csv into dir.
void write_report(const Report& report, const std::filesystem::path& dir);

}  // namespace invflow

#endif  // INVFLOW_REPORT_HPP_
