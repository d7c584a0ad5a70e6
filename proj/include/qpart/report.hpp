#pragma once

// Serialisation of partitions, series, tables, round-trip checks and
// verification reports to JSON, CSV, markdown and JUnit XML.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qpart/bijections.hpp"
#include "qpart/counters.hpp"
#include "qpart/verifier.hpp"

namespace qpart {

using nlohmann::json;

enum class Format { Json, Csv, Markdown };

std::optional<Format> parse_format(std::string_view name);

// Timestamps and wall times are omitted when `timing` is false so that
// repeated runs are byte-identical.
struct OutputOptions {
  bool timing = true;
};

json to_json(const Partition& p);
json to_json(const AnchoredPartition& p);
json to_json(const Member& m);
json to_json(const TruncatedSeries& s);
json to_json(const CountTable& t);
json to_json(const RoundTripReport& r);
json to_json(const VerificationReport& r, const OutputOptions& opt);
json to_json(const CCountComparison& c);

// {"pass": ..., "tasks": [...]} plus a timestamp when timing is on.
json reports_json(const std::vector<VerificationReport>& reports, const OutputOptions& opt);

std::string to_csv(const std::vector<CountTable>& tables);
std::string to_markdown(const std::vector<CountTable>& tables);

// Columns side by side, one per (heading, members) pair.
std::string enumeration_markdown(const std::vector<std::pair<std::string, std::vector<Member>>>& columns);

std::string to_markdown(const TruncatedSeries& s, const std::string& heading);
std::string to_markdown(const RoundTripReport& r);
std::string reports_markdown(const std::vector<VerificationReport>& reports, const OutputOptions& opt);
std::string reports_junit(const std::vector<VerificationReport>& reports, const OutputOptions& opt);

bool all_pass(const std::vector<VerificationReport>& reports);

}  // namespace qpart
