// qpart: counts, enumerations, generating functions, bijections and
// identity checks for the partition classes of the library.
//
// Exit status: 0 success, 1 verification mismatch, 2 usage or limit error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "qpart/bijections.hpp"
#include "qpart/counters.hpp"
#include "qpart/report.hpp"
#include "qpart/verifier.hpp"

namespace {

using namespace qpart;

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

int default_order() {
  if (const char* env = std::getenv("QPART_ORDER")) {
    try {
      const int v = std::stoi(env);
      if (v >= 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("QPART_ORDER must be a non-negative integer");
  }
  return kDefaultOrder;
}

ClassSpec make_spec(const std::string& name, std::optional<int> k) {
  const auto id = parse_class_id(name);
  if (!id) throw UsageError("unknown class '" + name + "'");
  if (!requires_k(*id)) k.reset();
  return ClassSpec::make(*id, k);
}

Format format_of(const std::string& name) {
  const auto f = parse_format(name);
  if (!f) throw UsageError("unknown format '" + name + "'");
  return *f;
}

Parity parity_of_name(const std::string& s) {
  if (s == "e" || s == "even") return Parity::Even;
  if (s == "o" || s == "odd") return Parity::Odd;
  throw UsageError("parity must be e or o");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

struct CountArgs {
  std::string cls;
  std::optional<int> k, n, nmin, nmax;
  std::string method = "series";
  std::string format = "markdown";
};

int run_count(const CountArgs& a) {
  const auto spec = make_spec(a.cls, a.k);
  int lo = 0;
  int hi = 0;
  if (a.n) {
    lo = hi = *a.n;
  } else if (a.nmax) {
    lo = a.nmin.value_or(0);
    hi = *a.nmax;
  } else {
    throw UsageError("count needs --n or --nmax");
  }
  std::vector<CountTable> tables;
  if (a.method == "both") {
    tables.push_back(count_table(spec, lo, hi, CountMethod::Enumeration));
    tables.push_back(count_table(spec, lo, hi, CountMethod::Series));
  } else if (a.method == "enumeration" || a.method == "series") {
    tables.push_back(
        count_table(spec, lo, hi, a.method == "series" ? CountMethod::Series : CountMethod::Enumeration));
  } else {
    throw UsageError("method must be enumeration, series or both");
  }
  const bool agree = tables.size() == 1 || tables[0].values == tables[1].values;
  const auto fmt = format_of(a.format);
  if (fmt == Format::Json) {
    json out = json::array();
    for (const auto& t : tables) out.push_back(to_json(t));
    std::cout << dump(tables.size() == 1 ? out[0] : json{{"tables", out}, {"agree", agree}});
  } else if (fmt == Format::Csv) {
    std::cout << to_csv(tables);
  } else if (a.n && tables.size() == 1) {
    std::cout << tables[0].values.at(*a.n) << '\n';
  } else {
    std::cout << to_markdown(tables);
  }
  if (!agree) {
    std::cerr << "enumeration and series disagree\n";
    return kExitMismatch;
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------

struct EnumerateArgs {
  std::vector<std::string> classes;
  std::optional<int> k;
  std::vector<int> ns;
  std::string format = "markdown";
};

int run_enumerate(const EnumerateArgs& a) {
  if (a.ns.empty()) throw UsageError("enumerate needs --n");
  if (a.ns.size() != 1 && a.ns.size() != a.classes.size()) {
    throw UsageError("give one --n, or one --n per --class");
  }
  std::vector<std::pair<std::string, std::vector<Member>>> cols;
  json out = json::array();
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    const auto spec = make_spec(a.classes[i], a.k);
    const int n = a.ns.size() == 1 ? a.ns[0] : a.ns[i];
    auto members = enumerate(spec, n);
    json list = json::array();
    for (const auto& m : members) list.push_back(to_json(m));
    json col{{"class", std::string(class_name(spec.id))}, {"n", n}, {"count", members.size()}, {"members", list}};
    if (spec.k) col["k"] = *spec.k;
    out.push_back(col);
    cols.emplace_back(spec.label() + "(" + std::to_string(n) + ")", std::move(members));
  }
  const auto fmt = format_of(a.format);
  if (fmt == Format::Json) {
    std::cout << dump(out.size() == 1 ? out[0] : out);
  } else if (fmt == Format::Csv) {
    std::cout << "class,n,member\n";
    for (const auto& [h, ms] : cols) {
      for (const auto& m : ms) std::cout << '"' << h << "\",\"" << to_string(m) << "\"\n";
    }
  } else {
    std::cout << enumeration_markdown(cols);
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------

struct SeriesArgs {
  std::string cls;
  std::optional<int> k, order;
  std::string format = "markdown";
};

int run_series(const SeriesArgs& a) {
  const auto spec = make_spec(a.cls, a.k);
  const auto s = generating_function(spec, a.order.value_or(default_order()));
  const auto fmt = format_of(a.format);
  if (fmt == Format::Json) {
    auto j = to_json(s);
    j["class"] = std::string(class_name(spec.id));
    if (spec.k) j["k"] = *spec.k;
    std::cout << dump(j);
  } else if (fmt == Format::Csv) {
    std::cout << "n,coeff\n";
    for (int i = 0; i <= s.order(); ++i) std::cout << i << ',' << s[i] << '\n';
  } else {
    std::cout << to_markdown(s, "gf " + spec.label());
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------

struct BijectionArgs {
  std::string name;
  std::optional<int> k, n, nmin, nmax, anchor, copy;
  std::string parity;
  std::string strategy = "rank";
  std::string input;
  std::string target;
  std::string source = "dk";
  std::string direction;
  bool inverse = false;
  bool roundtrip = false;
  bool trace = false;
  std::string format = "markdown";
};

json outcome_json(const BijectionOutcome& o) {
  json j{{"image", to_json(o.image)}, {"target", o.target.label()}, {"case", o.case_tag}};
  if (!o.trace.empty()) j["trace"] = o.trace;
  if (o.copy != 0) j["copy"] = o.copy;
  return j;
}

std::string outcome_text(const Member& input, const BijectionOutcome& o) {
  std::string s = to_string(input) + " -> " + to_string(o.image) + " in " + o.target.label() + " [" +
                  o.case_tag + "]";
  if (o.copy != 0) s += " copy " + std::to_string(o.copy);
  s += "\n";
  for (const auto& t : o.trace) s += "  " + t + "\n";
  return s;
}

int apply_single(const BijectionArgs& a, BijectionName name, BaseStrategy strategy) {
  const auto p = parse_partition(a.input);
  const auto fmt = format_of(a.format);
  auto print = [&](const Member& in, const BijectionOutcome& o) {
    if (fmt == Format::Json) {
      auto j = outcome_json(o);
      j["input"] = to_json(in);
      std::cout << dump(j);
    } else {
      std::cout << outcome_text(in, o);
    }
  };
  auto need_k = [&] {
    if (!a.k) throw UsageError("this map needs --k");
    return *a.k;
  };
  auto need_anchor = [&] {
    if (!a.anchor) throw UsageError("an anchored input needs --anchor");
    return AnchoredPartition(*a.anchor, p);
  };
  const auto raw = [](const Partition& q, ClassSpec spec, std::string tag) {
    return BijectionOutcome{Member(q), std::move(spec), std::move(tag), {}, 0};
  };
  switch (name) {
    case BijectionName::Glaisher:
      if (a.inverse) {
        print(p, raw(glaisher_split(p), ClassSpec::make(ClassId::B), "split"));
      } else {
        print(p, raw(glaisher_merge(p), ClassSpec::make(ClassId::A), "merge"));
      }
      return kExitPass;
    case BijectionName::Akdk: {
      const int k = need_k();
      if (!a.inverse) {
        print(p, akdk_map(k, p));
        return kExitPass;
      }
      const auto target = parse_class_id(a.target);
      if (!target) throw UsageError("akdk inverse needs --target P1, P2, Pprime or Pdprime");
      print(p, raw(akdk_inverse(k, *target, p), ClassSpec::make(ClassId::Dk, k), "inverse"));
      return kExitPass;
    }
    case BijectionName::DkRecurrence: {
      const int k = need_k();
      if (!a.inverse) {
        if (a.source != "dk" && a.source != "dk-1") throw UsageError("--source must be dk or dk-1");
        print(p, dk_recurrence_map(k, a.source == "dk" ? DkSource::Dk : DkSource::DkMinus1, p));
        return kExitPass;
      }
      BijectionOutcome img{Member(p), ClassSpec::make(ClassId::Dk, k - 1), "", {}, 0};
      if (a.target == "A") {
        img.target = ClassSpec::make(ClassId::A);
        img.copy = a.copy.value_or(0);
      } else if (!a.target.empty() && a.target != "Dk") {
        throw UsageError("dk-recurrence inverse --target must be Dk or A");
      }
      const auto back = dk_recurrence_inverse(k, img);
      const int mult = back.source == DkSource::Dk ? k : k - 1;
      print(p, raw(back.partition, ClassSpec::make(ClassId::Dk, mult),
                   back.source == DkSource::Dk ? "source D_k" : "source D_{k-1}"));
      return kExitPass;
    }
    case BijectionName::BaseBc:
      if (a.inverse) {
        const auto c = need_anchor();
        print(c, raw(base_bc_inverse(c, strategy), ClassSpec::make(ClassId::B), "inverse"));
      } else {
        print(p, BijectionOutcome{Member(base_bc_map(p, strategy)), ClassSpec::make(ClassId::C),
                                  std::string(strategy_name(strategy)), {}, 0});
      }
      return kExitPass;
    case BijectionName::Bkck: {
      const int k = need_k();
      if (a.parity.empty()) throw UsageError("bkck needs --parity");
      const auto par = parity_of_name(a.parity);
      if (a.inverse) {
        const auto c = need_anchor();
        print(c, bkck_inverse(k, par, c, strategy));
      } else {
        print(p, bkck_map(k, par, p, strategy));
      }
      return kExitPass;
    }
    case BijectionName::EfF:
    case BijectionName::EfE: {
      const bool f = name == BijectionName::EfF;
      const auto dir = a.inverse ? (f ? EfDirection::FtoB : EfDirection::EtoB)
                                 : (f ? EfDirection::BtoF : EfDirection::BtoE);
      const auto target = a.inverse ? ClassId::B : (f ? ClassId::F : ClassId::E);
      print(p, raw(ef_shift(dir, p), ClassSpec::make(target), std::string(direction_name(dir))));
      return kExitPass;
    }
  }
  return kExitUsage;
}

int run_bijection(const BijectionArgs& a) {
  const auto name = parse_bijection(a.name);
  if (!name) throw UsageError("unknown map '" + a.name + "'");
  const auto strategy = parse_strategy(a.strategy);
  if (!strategy) throw UsageError("strategy must be rank or aky-sketch");
  if (!a.input.empty()) return apply_single(a, *name, *strategy);

  if (bijection_requires_k(*name) && !a.k) throw UsageError("this map needs --k");
  std::optional<Parity> parity;
  if (!a.parity.empty()) parity = parity_of_name(a.parity);
  if (bijection_requires_parity(*name) && !parity) throw UsageError("this map needs --parity");
  int lo = 0;
  int hi = 0;
  if (a.n) {
    lo = hi = *a.n;
  } else if (a.nmax) {
    lo = a.nmin.value_or(0);
    hi = *a.nmax;
  } else {
    throw UsageError("give --input, --n or --nmax");
  }
  const std::size_t samples = a.trace || !a.roundtrip ? std::size_t{1} << 20 : 0;
  std::vector<RoundTripReport> reports;
  for (int n = lo; n <= hi; ++n) reports.push_back(check_roundtrip(*name, a.k, parity, n, *strategy, samples));
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.ok(); });
  if (format_of(a.format) == Format::Json) {
    json out = json::array();
    for (const auto& r : reports) out.push_back(to_json(r));
    std::cout << dump(json{{"pass", ok}, {"reports", out}});
  } else {
    for (const auto& r : reports) std::cout << to_markdown(r) << '\n';
  }
  if (!a.roundtrip) return kExitPass;
  return ok ? kExitPass : kExitMismatch;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> tasks;
  bool all = false;
  TaskOverrides o;
  std::string method;
  std::string format = "markdown";
  std::string junit;
  std::string output;
  bool no_timestamp = false;
  bool serial = false;
  // report only
  bool c_divergence = false;
  std::optional<int> k, nmax;
};

int finish_reports(const std::vector<VerificationReport>& reports, const VerifyArgs& a) {
  const OutputOptions opt{!a.no_timestamp};
  const auto fmt = format_of(a.format);
  if (fmt == Format::Json) {
    emit(dump(reports_json(reports, opt)), a.output);
  } else if (fmt == Format::Markdown) {
    emit(reports_markdown(reports, opt), a.output);
  } else {
    throw UsageError("verification reports support json and markdown");
  }
  if (!a.junit.empty()) emit(reports_junit(reports, opt), a.junit);
  return all_pass(reports) ? kExitPass : kExitMismatch;
}

TaskOverrides overrides_of(const VerifyArgs& a) {
  auto o = a.o;
  if (!a.method.empty()) {
    o.method = parse_verify_method(a.method);
    if (!o.method) throw UsageError("method must be enumeration, series or both");
  }
  return o;
}

int run_verify(const VerifyArgs& a) {
  const auto o = overrides_of(a);
  std::vector<VerificationReport> reports;
  if (a.all) return finish_reports(run_all(o, !a.serial), a);
  if (a.tasks.empty()) throw UsageError("verify needs --task or --all");
  for (const auto& t : a.tasks) {
    const auto id = parse_task_id(t);
    if (!id) throw UsageError("unknown task '" + t + "'");
    reports.push_back(run_task(*id, o));
  }
  return finish_reports(reports, a);
}

int run_c_divergence(const VerifyArgs& a) {
  const int k = a.k.value_or(2);
  const int hi = a.nmax.value_or(12);
  json out = json::array();
  std::string md = "| n | anchored e | anchored o | raw e | raw o | ambiguous |\n|---|---|---|---|---|---|\n";
  bool any = false;
  for (int n = 0; n <= hi; ++n) {
    const auto c = compare_c_counts(k, n);
    any = any || c.diverges();
    out.push_back(to_json(c));
    std::string amb;
    for (const auto& x : c.ambiguous) {
      amb += (amb.empty() ? "" : "; ") + to_string(x.multiset) + " (";
      for (std::size_t i = 0; i < x.decompositions.size(); ++i) {
        amb += (i ? ", " : "") + std::string("anchor ") + std::to_string(x.decompositions[i].anchor);
      }
      amb += ")";
    }
    md += "| " + std::to_string(n) + " | " + std::to_string(c.anchored_even) + " | " +
          std::to_string(c.anchored_odd) + " | " + std::to_string(c.raw_even) + " | " +
          std::to_string(c.raw_odd) + " | " + amb + " |\n";
  }
  if (format_of(a.format) == Format::Json) {
    emit(dump(json{{"k", k}, {"rows", out}, {"diverges", any}}), a.output);
  } else {
    emit("C_" + std::to_string(k) + " counts, anchored vs raw multisets\n\n" + md, a.output);
  }
  return kExitPass;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const OverflowError& e) {
    std::cerr << "overflow: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition classes: counts, generating functions, bijections and identity checks"};
  app.require_subcommand(1);
  int status = kExitPass;

  CountArgs ca;
  auto* count = app.add_subcommand("count", "Count the members of a class");
  count->add_option("--class", ca.cls, "Class id, e.g. Dk or Bk_e")->required();
  count->add_option("--k", ca.k, "Class parameter");
  count->add_option("--n", ca.n, "Weight");
  count->add_option("--nmin", ca.nmin, "First weight of a table");
  count->add_option("--nmax", ca.nmax, "Last weight of a table");
  count->add_option("--method", ca.method, "enumeration, series or both")->capture_default_str();
  count->add_option("--format", ca.format, "json, csv or markdown")->capture_default_str();
  count->callback([&] { status = guarded([&] { return run_count(ca); }); });

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "List the members of one or more classes");
  en->add_option("--class", ea.classes, "Class id (repeatable, one table column each)")->required();
  en->add_option("--k", ea.k, "Class parameter");
  en->add_option("--n", ea.ns, "Weight (one, or one per class)");
  en->add_option("--format", ea.format, "json, csv or markdown")->capture_default_str();
  en->callback([&] { status = guarded([&] { return run_enumerate(ea); }); });

  SeriesArgs sa;
  auto* se = app.add_subcommand("series", "Print a generating function");
  se->add_option("--class", sa.cls, "Class id")->required();
  se->add_option("--k", sa.k, "Class parameter");
  se->add_option("--order", sa.order, "Truncation order (default $QPART_ORDER or 200)");
  se->add_option("--format", sa.format, "json, csv or markdown")->capture_default_str();
  se->callback([&] { status = guarded([&] { return run_series(sa); }); });

  BijectionArgs ba;
  auto* bi = app.add_subcommand("bijection", "Apply or check a bijection");
  bi->add_option("--name", ba.name, "glaisher, akdk, dk-recurrence, base-bc, bkck, ef-f or ef-e")->required();
  bi->add_option("--k", ba.k, "Parameter k");
  bi->add_option("--parity", ba.parity, "e or o (bkck)");
  bi->add_option("--n", ba.n, "Weight of the domain");
  bi->add_option("--nmin", ba.nmin, "First weight");
  bi->add_option("--nmax", ba.nmax, "Last weight");
  bi->add_option("--strategy", ba.strategy, "rank or aky-sketch")->capture_default_str();
  bi->add_option("--input", ba.input, "Apply the map to one partition, e.g. 8+6+4+4");
  bi->add_option("--anchor", ba.anchor, "Anchor of an anchored input");
  bi->add_option("--target", ba.target, "Image class for inverses that need it");
  bi->add_option("--copy", ba.copy, "Copy of A(n) for the dk-recurrence inverse");
  bi->add_option("--source", ba.source, "dk or dk-1 (dk-recurrence)")->capture_default_str();
  bi->add_flag("--inverse", ba.inverse, "Apply the inverse map to --input");
  bi->add_flag("--roundtrip", ba.roundtrip, "Exit 1 unless every member round-trips");
  bi->add_flag("--trace", ba.trace, "List every image with its case tags");
  bi->add_option("--format", ba.format, "json or markdown")->capture_default_str();
  bi->callback([&] { status = guarded([&] { return run_bijection(ba); }); });

  VerifyArgs va;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", va.format, "json or markdown")->capture_default_str();
    sub->add_option("--junit", va.junit, "Also write JUnit XML to this file");
    sub->add_option("--output", va.output, "Write the report to this file");
    sub->add_flag("--no-timestamp", va.no_timestamp, "Omit timestamps and wall times");
    sub->add_option("--method", va.method, "enumeration, series or both");
    sub->add_option("--kmin", va.o.kmin, "Override the k range");
    sub->add_option("--kmax", va.o.kmax, "Override the k range");
    sub->add_option("--nmin", va.o.nmin, "Override the n range (cells from nmin are asserted)");
    sub->add_option("--order", va.o.order, "Override the series order");
    sub->add_option("--big-n-max", va.o.big_n_max, "Override the N range of T8");
    sub->add_option("--enum-limit", va.o.enumeration_limit, "Largest weight enumerated in both mode");
  };
  auto* ve = app.add_subcommand("verify", "Check registered identities");
  ve->add_option("--task", va.tasks, "Task id, e.g. T1 (repeatable)");
  ve->add_flag("--all", va.all, "Run every task");
  ve->add_option("--nmax", va.o.nmax, "Override the n range");
  ve->add_flag("--serial", va.serial, "Run tasks one after another");
  add_common(ve);
  ve->callback([&] { status = guarded([&] { return run_verify(va); }); });

  auto* re = app.add_subcommand("report", "Aggregate report over all tasks, or the C-count divergence table");
  re->add_flag("--all", va.all, "Run every registered task");
  re->add_flag("--c-divergence", va.c_divergence, "Anchored vs raw C_k counts");
  re->add_option("--k", va.k, "k for --c-divergence (default 2)");
  re->add_option("--nmax", va.nmax, "Last weight (--c-divergence) or n override");
  re->add_flag("--serial", va.serial, "Run tasks one after another");
  add_common(re);
  re->callback([&] {
    status = guarded([&] {
      if (va.c_divergence) return run_c_divergence(va);
      if (!va.all) throw UsageError("report needs --all or --c-divergence");
      va.o.nmax = va.nmax;
      return run_verify(va);
    });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  return status;
}
