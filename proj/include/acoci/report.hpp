#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"

#include "acoci/types.hpp"

namespace acoci::report {

// Fixed output schemas. CSV carries 6 significant digits; JSON carries full
// round-trip precision for downstream tooling.

inline std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

/// One aggregate row: a problem name, the replicate count, and its stats.
struct StatsRow {
  std::string problem;
  int replicates = 0;
  StatsSummary stats;
};

inline constexpr const char* kStatsCsvHeader =
    "problem,replicates,mean,std,best,worst,avg_iterations,avg_evaluations,avg_time_s";

inline std::string stats_csv_row(const StatsRow& row) {
  std::string out = row.problem + ',' + std::to_string(row.replicates);
  for (double v : {row.stats.mean, row.stats.std_dev, row.stats.best, row.stats.worst,
                   row.stats.avg_iterations, row.stats.avg_evaluations, row.stats.avg_time_s})
    out += ',' + format_number(v);
  return out;
}

inline std::string stats_csv(const std::vector<StatsRow>& rows) {
  std::string out = std::string(kStatsCsvHeader) + '\n';
  for (const auto& row : rows) out += stats_csv_row(row) + '\n';
  return out;
}

inline constexpr const char* kTraceCsvHeader =
    "iteration,f_best,f_worst,mean_interval_width,tau_best,evaluations";

inline std::string trace_csv(const std::vector<IterationRecord>& trace) {
  std::string out = std::string(kTraceCsvHeader) + '\n';
  for (const auto& rec : trace) {
    out += std::to_string(rec.iteration);
    for (double v : {rec.f_best, rec.f_worst, rec.mean_interval_width, rec.tau_best})
      out += ',' + format_number(v);
    out += ',' + std::to_string(rec.evaluations_so_far) + '\n';
  }
  return out;
}

inline nlohmann::json stats_json(const StatsRow& row) {
  return nlohmann::json{{"problem", row.problem},
                        {"replicates", row.replicates},
                        {"mean", row.stats.mean},
                        {"std", row.stats.std_dev},
                        {"best", row.stats.best},
                        {"worst", row.stats.worst},
                        {"avg_iterations", row.stats.avg_iterations},
                        {"avg_evaluations", row.stats.avg_evaluations},
                        {"avg_time_s", row.stats.avg_time_s}};
}

inline nlohmann::json stats_json(const std::vector<StatsRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows) arr.push_back(stats_json(row));
  return arr;
}

inline StatsRow stats_from_json(const nlohmann::json& j) {
  StatsRow row;
  row.problem = j.at("problem").get<std::string>();
  row.replicates = j.at("replicates").get<int>();
  row.stats.mean = j.at("mean").get<double>();
  row.stats.std_dev = j.at("std").get<double>();
  row.stats.best = j.at("best").get<double>();
  row.stats.worst = j.at("worst").get<double>();
  row.stats.avg_iterations = j.at("avg_iterations").get<double>();
  row.stats.avg_evaluations = j.at("avg_evaluations").get<double>();
  row.stats.avg_time_s = j.at("avg_time_s").get<double>();
  return row;
}

}  // namespace acoci::report
