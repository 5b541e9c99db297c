#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rcsp::bench {

/// exp(mean(ln(v + shift))) - shift. Throws std::invalid_argument on an empty
/// list, a negative value or a non-positive shift.
double shifted_geomean(std::span<const double> values, double shift);

/// One (instance, config) cell. `cost` is the decimal optimum or "infeasible".
struct ReportRow {
  std::string instance;
  std::string config;
  unsigned threads = 1;
  double runtime_s = 0;
  std::string cost;
  std::size_t labels = 0;
};

/// instance,config,threads,runtime_s,cost,labels
std::string write_report_csv(const std::vector<ReportRow>& rows);
std::vector<ReportRow> read_report_csv(std::string_view text);

/// Instance-name prefix before the first '/', or the whole name.
std::string group_of(std::string_view instance);

struct GroupStats {
  std::string group;
  std::size_t instances = 0;
  std::map<std::string, double> runtime;     // shifted geomean per config
  std::map<std::string, double> normalized;  // runtime / runtime of `all_config`
  std::map<std::string, double> speedup;     // runtime of `base_config` / runtime
};

struct AggregateOptions {
  double shift = 10;
  /// Keep only instances whose base runtime is at least this many seconds.
  std::optional<double> hard_threshold;
  std::string base_config = "base";
  std::string all_config = "all";
};

/// Per-group statistics over every config present. Throws std::invalid_argument
/// when an (instance, config) cell is missing.
std::vector<GroupStats> aggregate(const std::vector<ReportRow>& rows, const AggregateOptions& options);

struct ProfilePoint {
  std::string config;
  double tau = 1;
  double fraction = 0;
};

/// Performance profile: for each config and each ratio tau occurring in the
/// data, the fraction of instances solved within tau times the best runtime.
std::vector<ProfilePoint> perf_profile(const std::vector<ReportRow>& rows);
/// config,tau,fraction
std::string write_profile_csv(const std::vector<ProfilePoint>& points);

/// Instances whose configs report different costs.
std::vector<std::string> cost_disagreements(const std::vector<ReportRow>& rows);

/// Fixed-width text table of runtime, normalized and speedup rows.
std::string format_table(const std::vector<GroupStats>& groups, const std::vector<std::string>& configs);

}  // namespace rcsp::bench
