#include "qpart/report.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <set>
#include <sstream>

namespace qpart {

namespace {

std::string utc_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (const char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string md_cell(std::string s) {
  std::string out;
  for (const char ch : s) {
    if (ch == '|') out += "\\";
    out += ch;
  }
  return out;
}

std::string fixed3(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << v;
  return os.str();
}

std::string parity_name(Parity p) { return p == Parity::Even ? "e" : "o"; }

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "markdown" || name == "md") return Format::Markdown;
  return std::nullopt;
}

json to_json(const Partition& p) { return json(std::vector<int>(p.parts().begin(), p.parts().end())); }

json to_json(const AnchoredPartition& p) {
  return json{{"anchor", p.anchor}, {"parts", to_json(p.partition)}};
}

json to_json(const Member& m) {
  return std::visit([](const auto& v) { return to_json(v); }, m);
}

json to_json(const TruncatedSeries& s) {
  return json{{"order", s.order()},
              {"coeffs", std::vector<std::int64_t>(s.coeffs().begin(), s.coeffs().end())}};
}

json to_json(const CountTable& t) {
  json values = json::array();
  for (const auto& [n, v] : t.values) values.push_back({{"n", n}, {"count", v}});
  json out{{"class", std::string(class_name(t.spec.id))},
           {"method", std::string(method_name(t.method))},
           {"values", values}};
  if (t.spec.k) out["k"] = *t.spec.k;
  return out;
}

json to_json(const RoundTripReport& r) {
  json out{{"map", std::string(bijection_name(r.map))},
           {"n", r.n},
           {"strategy", std::string(strategy_name(r.strategy))},
           {"checked", r.checked},
           {"target_size", r.target_size},
           {"distinct_images", r.distinct_images},
           {"failure_count", r.failure_count},
           {"failures", r.failures},
           {"pass", r.ok()}};
  if (r.k) out["k"] = *r.k;
  if (r.parity) out["parity"] = parity_name(*r.parity);
  if (!r.samples.empty()) out["trace"] = r.samples;
  return out;
}

json to_json(const VerificationReport& r, const OutputOptions& opt) {
  json params = json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  json out{{"task", std::string(task_name(r.id))},
           {"statement", r.statement},
           {"method", r.method},
           {"parameters", params},
           {"status", r.pass ? "pass" : "fail"},
           {"checked_cells", r.checked_cells},
           {"informational_cells", r.informational_cells},
           {"notes", r.notes}};
  if (r.witness) {
    const auto& w = *r.witness;
    out["witness"] = {{"cell", w.cell},
                      {"lhs", {{"label", w.lhs_label}, {"value", w.lhs}}},
                      {"rhs", {{"label", w.rhs_label}, {"value", w.rhs}}},
                      {"replay", w.replay}};
  }
  if (r.error) out["error"] = *r.error;
  if (opt.timing) out["wall_time_s"] = r.wall_time_s;
  return out;
}

json to_json(const CCountComparison& c) {
  json amb = json::array();
  for (const auto& a : c.ambiguous) {
    json decs = json::array();
    for (const auto& d : a.decompositions) decs.push_back(to_json(d));
    amb.push_back({{"parts", to_json(a.multiset)}, {"decompositions", decs}});
  }
  return json{{"k", c.k},
              {"n", c.n},
              {"anchored", {{"even", c.anchored_even}, {"odd", c.anchored_odd}}},
              {"raw", {{"even", c.raw_even}, {"odd", c.raw_odd}}},
              {"ambiguous", amb},
              {"diverges", c.diverges()}};
}

bool all_pass(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

json reports_json(const std::vector<VerificationReport>& reports, const OutputOptions& opt) {
  json tasks = json::array();
  for (const auto& r : reports) tasks.push_back(to_json(r, opt));
  json out{{"pass", all_pass(reports)}, {"tasks", tasks}};
  if (opt.timing) out["timestamp"] = utc_now();
  return out;
}

std::string to_csv(const std::vector<CountTable>& tables) {
  std::ostringstream os;
  if (tables.size() == 1) {
    os << "n,count\n";
    for (const auto& [n, v] : tables.front().values) os << n << ',' << v << '\n';
    return os.str();
  }
  os << "class,n,count\n";
  for (const auto& t : tables) {
    for (const auto& [n, v] : t.values) os << t.spec.label() << ',' << n << ',' << v << '\n';
  }
  return os.str();
}

std::string to_markdown(const std::vector<CountTable>& tables) {
  std::ostringstream os;
  std::set<int> ns;
  for (const auto& t : tables) {
    for (const auto& [n, v] : t.values) ns.insert(n);
  }
  os << "| n |";
  for (const auto& t : tables) os << ' ' << md_cell(t.spec.label()) << " |";
  os << "\n|---|";
  for (std::size_t i = 0; i < tables.size(); ++i) os << "---|";
  os << '\n';
  for (const int n : ns) {
    os << "| " << n << " |";
    for (const auto& t : tables) {
      const auto it = t.values.find(n);
      os << ' ' << (it == t.values.end() ? std::string() : std::to_string(it->second)) << " |";
    }
    os << '\n';
  }
  return os.str();
}

std::string enumeration_markdown(const std::vector<std::pair<std::string, std::vector<Member>>>& columns) {
  std::ostringstream os;
  std::size_t rows = 0;
  os << '|';
  for (const auto& [h, ms] : columns) {
    os << ' ' << md_cell(h) << " |";
    rows = std::max(rows, ms.size());
  }
  os << "\n|";
  for (std::size_t i = 0; i < columns.size(); ++i) os << "---|";
  os << '\n';
  for (std::size_t r = 0; r < rows; ++r) {
    os << '|';
    for (const auto& [h, ms] : columns) {
      os << ' ' << (r < ms.size() ? md_cell(to_string(ms[r])) : std::string()) << " |";
    }
    os << '\n';
  }
  os << '|';
  for (const auto& [h, ms] : columns) os << " **" << ms.size() << "** |";
  os << '\n';
  return os.str();
}

std::string to_markdown(const TruncatedSeries& s, const std::string& heading) {
  std::ostringstream os;
  os << "| n | " << md_cell(heading) << " |\n|---|---|\n";
  for (int i = 0; i <= s.order(); ++i) os << "| " << i << " | " << s[i] << " |\n";
  return os.str();
}

std::string to_markdown(const RoundTripReport& r) {
  std::ostringstream os;
  os << "### " << bijection_name(r.map);
  if (r.k) os << " k=" << *r.k;
  if (r.parity) os << " parity=" << parity_name(*r.parity);
  os << " n=" << r.n;
  if (r.map == BijectionName::BaseBc || r.map == BijectionName::Bkck) {
    os << " strategy=" << strategy_name(r.strategy);
  }
  os << "\n\n";
  os << "| checked | codomain size | distinct images | failures | result |\n|---|---|---|---|---|\n";
  os << "| " << r.checked << " | " << r.target_size << " | " << r.distinct_images << " | " << r.failure_count
     << " | " << (r.ok() ? "pass" : "FAIL") << " |\n";
  if (!r.samples.empty()) {
    os << "\n";
    for (const auto& s : r.samples) os << "- " << s << '\n';
  }
  if (!r.failures.empty()) {
    os << "\nFailures:\n\n";
    for (const auto& f : r.failures) os << "- " << f << '\n';
  }
  return os.str();
}

std::string reports_markdown(const std::vector<VerificationReport>& reports, const OutputOptions& opt) {
  std::ostringstream os;
  os << "| task | status | method | checked | informational |";
  if (opt.timing) os << " time (s) |";
  os << "\n|---|---|---|---|---|";
  if (opt.timing) os << "---|";
  os << '\n';
  for (const auto& r : reports) {
    os << "| " << task_name(r.id) << " | " << (r.pass ? "pass" : "FAIL") << " | " << r.method << " | "
       << r.checked_cells << " | " << r.informational_cells << " |";
    if (opt.timing) os << ' ' << fixed3(r.wall_time_s) << " |";
    os << '\n';
  }
  for (const auto& r : reports) {
    os << "\n### " << task_name(r.id) << ": " << md_cell(r.statement) << "\n\n";
    for (const auto& [k, v] : r.parameters) os << "- " << k << ": " << v << '\n';
    for (const auto& n : r.notes) os << "- note: " << n << '\n';
    if (r.error) os << "- error: " << *r.error << '\n';
    if (r.witness) {
      const auto& w = *r.witness;
      os << "- first mismatch at " << w.cell << ": " << w.lhs_label << " = " << w.lhs << ", " << w.rhs_label
         << " = " << w.rhs << '\n';
      for (const auto& c : w.replay) os << "  - replay: `" << c << "`\n";
    }
  }
  return os.str();
}

std::string reports_junit(const std::vector<VerificationReport>& reports, const OutputOptions& opt) {
  std::ostringstream os;
  const auto failures = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.pass; });
  double total = 0;
  for (const auto& r : reports) total += r.wall_time_s;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<testsuite name=\"qpart-verify\" tests=\"" << reports.size() << "\" failures=\"" << failures << "\"";
  if (opt.timing) os << " time=\"" << fixed3(total) << "\" timestamp=\"" << utc_now() << "\"";
  os << ">\n";
  for (const auto& r : reports) {
    os << "  <testcase classname=\"verify\" name=\"" << task_name(r.id) << "\"";
    if (opt.timing) os << " time=\"" << fixed3(r.wall_time_s) << "\"";
    if (r.pass) {
      os << "/>\n";
      continue;
    }
    os << ">\n    <failure message=\"";
    if (r.witness) {
      const auto& w = *r.witness;
      os << xml_escape(w.cell + ": " + w.lhs_label + " = " + std::to_string(w.lhs) + ", " + w.rhs_label +
                       " = " + std::to_string(w.rhs));
    } else if (r.error) {
      os << xml_escape(*r.error);
    }
    os << "\">";
    if (r.witness) {
      for (const auto& c : r.witness->replay) os << xml_escape(c) << '\n';
    }
    os << "</failure>\n  </testcase>\n";
  }
  os << "</testsuite>\n";
  return os.str();
}

}  // namespace qpart
