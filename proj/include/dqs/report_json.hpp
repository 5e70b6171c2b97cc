#pragma once

#include <string>
#include <vector>

#include "dqs/verifier.hpp"

namespace dqs {

inline constexpr const char* kArtifactVersion = "dqs 0.1.0";

using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

// Canonical machine report: sorted keys, numeric residuals/budgets as
// decimal strings, so parse + re-serialize is byte-identical.
std::string render_report_json(const std::vector<CheckReport>& checks, const ConfigEcho& config);

std::string render_report_csv(const std::vector<CheckReport>& checks);

// Aligned fixed-width table for humans; never meant to be parsed.
std::string render_report_table(const std::vector<CheckReport>& checks);

std::string double_str(double v);

}  // namespace dqs
