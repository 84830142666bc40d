#pragma once

#include "tridesign/feasibility.hpp"

#include <string>

namespace tridesign {

std::string version_string();

struct ReportMetadata {
  int n_min = 0;
  int n_max = 0;
  /// Empty: current UTC time. Ignored when include_timestamp is false.
  std::string timestamp;
  bool include_timestamp = true;
};

/// One record as a single-line JSON object. detailed adds the cubic, the note
/// and the reasons of skipped derived reports.
std::string candidate_json(const CandidateReport& report, bool detailed = false);

/// Metadata plus records, pretty-printed with a trailing newline.
std::string scan_report_json(const ScanResult& result, const ReportMetadata& metadata);

/// Header row plus one row per record; list fields are ';'-separated.
std::string scan_report_csv(const ScanResult& result);

/// Multi-line human-readable account of every pipeline stage.
std::string analysis_text(const CandidateReport& report);

}  // namespace tridesign
