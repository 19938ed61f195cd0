#pragma once

// Command implementations behind the drprim executable. Each returns the
// process exit code: 0 ok, 1 certification failure, 2 input error,
// 3 search bound exhausted.

#include "drprim/io.hpp"

#include <iosfwd>

namespace drprim {

struct CliOptions {
  double tolerance = 1e-9;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t max_invariant_subsets = 8;
  std::size_t sigma_bound_retries = 4;
};

int exit_code_for(ErrorCode code);

Json analysis_report(const FiniteSystem& sys, const CliOptions& options);
Json graph_report(const Graph& g, const std::vector<EvPath>& representatives);
Json battery_report_json(const BatteryReport& report);

int cmd_validate(const std::string& file, const CliOptions& options, std::ostream& out, std::ostream& err);
int cmd_analyze(const std::string& file, const CliOptions& options, std::ostream& out, std::ostream& err);
int cmd_classify(const std::string& file, const std::string& point, const std::string& angle,
                 const CliOptions& options, std::ostream& out, std::ostream& err);
int cmd_equiv(const std::string& file, const std::string& first, const std::string& second,
              const CliOptions& options, std::ostream& out, std::ostream& err);
int cmd_witness(const std::string& file, const std::string& first, const std::string& second,
                const CliOptions& options, std::ostream& out, std::ostream& err);
int cmd_battery(const std::string& file, const CliOptions& options, std::ostream& out, std::ostream& err);
int cmd_graph(const std::string& file, const std::vector<std::string>& representatives, std::ostream& out,
              std::ostream& err);

}  // namespace drprim
