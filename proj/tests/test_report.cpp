#include <doctest.h>

#include "qpart/report.hpp"

using namespace qpart;

TEST_CASE("partition and series JSON") {
  CHECK(to_json(Partition({4, 2, 2, 1})) == json::parse("[4,2,2,1]"));
  CHECK(to_json(AnchoredPartition(2, Partition({4, 2, 2, 1}))) == json::parse(R"({"anchor":2,"parts":[4,2,2,1]})"));
  CHECK(to_json(pochhammer_finite(Sign::Minus, 1, 1, 2, 3)) == json::parse(R"({"order":3,"coeffs":[1,-1,-1,1]})"));
}

TEST_CASE("count table JSON and CSV") {
  const auto t = count_table(ClassSpec::make(ClassId::Dk, 2), 6, 7, CountMethod::Series);
  const auto j = to_json(t);
  CHECK(j["class"] == "Dk");
  CHECK(j["k"] == 2);
  CHECK(j["method"] == "series");
  CHECK(j["values"][1] == json::parse(R"({"n":7,"count":8})"));
  CHECK(to_csv({t}) == "n,count\n6,6\n7,8\n");
  const auto md = to_markdown(std::vector<CountTable>{t});
  CHECK(md.find("| 7 | 8 |") != std::string::npos);
}

TEST_CASE("verification report shapes") {
  TaskOverrides o;
  o.nmax = 12;
  const auto reports = std::vector<VerificationReport>{run_task(TaskId::T1, o)};
  const auto j = reports_json(reports, {});
  CHECK(j["pass"] == true);
  CHECK(j.contains("timestamp"));
  const auto& t = j["tasks"][0];
  CHECK(t["task"] == "T1");
  CHECK(t["status"] == "pass");
  CHECK(t.contains("wall_time_s"));
  CHECK(t["parameters"].is_object());
  CHECK_FALSE(reports_json(reports, OutputOptions{false}).contains("timestamp"));
}

TEST_CASE("failing report carries the witness in every format") {
  TaskOverrides o;
  o.kmin = 2;
  o.kmax = 2;
  o.nmin = 0;
  o.nmax = 10;
  const std::vector<VerificationReport> reports{run_task(TaskId::T3, o)};
  const auto j = reports_json(reports, OutputOptions{false});
  CHECK(j["pass"] == false);
  CHECK(j["tasks"][0]["witness"]["cell"] == "k=2 n=0");
  CHECK(j["tasks"][0]["witness"]["replay"].size() == 3);
  const auto xml = reports_junit(reports, OutputOptions{false});
  CHECK(xml.find("failures=\"1\"") != std::string::npos);
  CHECK(xml.find("<failure message=\"k=2 n=0") != std::string::npos);
  const auto md = reports_markdown(reports, OutputOptions{false});
  CHECK(md.find("| T3 | FAIL |") != std::string::npos);
  CHECK(md.find("replay: `qpart count") != std::string::npos);
}

TEST_CASE("output without timing is byte-identical across runs") {
  TaskOverrides o;
  o.nmax = 15;
  o.kmax = 2;
  o.order = 50;
  o.big_n_max = 3;
  const OutputOptions opt{false};
  const auto a = run_all(o);
  const auto b = run_all(o);
  CHECK(reports_json(a, opt).dump() == reports_json(b, opt).dump());
  CHECK(reports_junit(a, opt) == reports_junit(b, opt));
  CHECK(reports_markdown(a, opt) == reports_markdown(b, opt));
}

TEST_CASE("C-count comparison JSON") {
  const auto j = to_json(compare_c_counts(2, 6));
  CHECK(j["diverges"] == true);
  CHECK(j["ambiguous"][0]["parts"] == json::parse("[4,2]"));
  CHECK(j["ambiguous"][0]["decompositions"].size() == 2);
}

TEST_CASE("enumeration markdown ends with the counts") {
  const auto md = enumeration_markdown({{"Bk_o[k=2] (8)", enumerate(ClassSpec::make(ClassId::Bk_o, 2), 8)},
                                        {"Ck_o[k=2] (9)", enumerate(ClassSpec::make(ClassId::Ck_o, 2), 9)}});
  CHECK(md.find("| 4+1+1+1+1 | [2] 4+2+2+1 |") != std::string::npos);
  CHECK(md.find("| **1** | **1** |") != std::string::npos);
}

TEST_CASE("formats parse") {
  CHECK(parse_format("json") == Format::Json);
  CHECK(parse_format("md") == Format::Markdown);
  CHECK_FALSE(parse_format("xml").has_value());
}
