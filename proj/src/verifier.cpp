#include "qpart/verifier.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <future>
#include <map>
#include <stdexcept>

#include "qpart/counters.hpp"
#include "qpart/series.hpp"

namespace qpart {

namespace {

constexpr std::array kTasks{
    TaskInfo{TaskId::T1, "T1", "A(n) = B(n) = C(n+1) = D_2(n+1)/2"},
    TaskInfo{TaskId::T2, "T2", "B_k^e(n) = C_k^e(n+1) and B_k^o(n) = C_k^o(n+1)"},
    TaskInfo{TaskId::T3, "T3",
             "B_k^e(n) - B_k^o(n) = C_k^e(n+1) - C_k^o(n+1) = D_2k(n+1)/2 for n >= 2^(k-1) k (2k-1)"},
    TaskInfo{TaskId::T3x, "T3x",
             "D_2k + (q;q)_{2k-1} = 2 gf(C_k^e - C_k^o) + 2 (q^2;q^2)_{k-1} as series"},
    TaskInfo{TaskId::T4, "T4", "2 A_k(n) = P_1 + P'_{k-1} + P_2 + P''_{k-1} = D_k(n+1)"},
    TaskInfo{TaskId::T5, "T5",
             "A_2k(n) = B_k^e - B_k^o = C_k^e - C_k^o (n+1) = D_2k(n+1)/2 = D_2k^e(n+1) = D_2k^o(n+1)"},
    TaskInfo{TaskId::T6, "T6", "A(n) = E(n+2) = F(n+1)"},
    TaskInfo{TaskId::T7, "T7", "D_k^e(n) - D_k^o(n): pentagonal / bounded distinct-part difference / 0"},
    TaskInfo{TaskId::T7c, "T7c", "D_k^e(n) = D_k^o(n) and D_k(n) even for n > k(k-1)/2"},
    TaskInfo{TaskId::T8, "T8",
             "sum_{j<=N} q^{kj} (-q^{j+1};q)_inf = finite closed form; k=1 is the Andrews identity"},
    TaskInfo{TaskId::T9, "T9",
             "gf(D_k) = 2 (-q;q)_inf sum_j (-1)^j (q^{k-j};q)_j + (-1)^k (q;q)_{k-1}"},
    TaskInfo{TaskId::T10, "T10", "D_k(n) + D_{k-1}(n) = D_{k-1}(n-k+1) + 2 A(n) for n > k-1"},
    TaskInfo{TaskId::T11, "T11", "D_3(n) = 2A(n-3) - 2A(n-1) + 2A(n) for n >= 4; derived D_k relations"},
    TaskInfo{TaskId::T12, "T12", "Euler's identity and sum_n q^{nk} (q^{n+1};q)_inf = (q;q)_{k-1}"},
};

// Thrown to end a task once its first mismatch is recorded.
struct StopTask {};

std::string cmd_method(VerifyMethod m) { return std::string(verify_method_name(m)); }

std::string label(const ClassSpec& s, int n) { return s.label() + "(" + std::to_string(n) + ")"; }

std::string range(int lo, int hi) { return std::to_string(lo) + ".." + std::to_string(hi); }

class Context {
public:
  Context(VerificationReport& r, VerifyMethod method, int enumeration_limit)
      : r_(r), method_(method), enum_limit_(enumeration_limit) {}

  VerifyMethod method() const { return method_; }
  void plan_order(int order) { planned_ = std::max(planned_, order); }

  std::string count_cmd(const ClassSpec& s, int n) const {
    std::string c = "qpart count --class " + std::string(class_name(s.id));
    if (s.k) c += " --k " + std::to_string(*s.k);
    return c + " --n " + std::to_string(n) + " --method " + cmd_method(method_);
  }

  std::int64_t count(const ClassSpec& s, int n) {
    if (n < 0) return 0;
    cell_ = label(s, n);
    std::optional<std::int64_t> by_series;
    std::optional<std::int64_t> by_enum;
    if (method_ != VerifyMethod::Enumeration) by_series = series_coefficient(s, n);
    if (method_ == VerifyMethod::Enumeration || (method_ == VerifyMethod::Both && n <= enum_limit_)) {
      by_enum = enumerated(s, n);
    } else if (method_ == VerifyMethod::Both) {
      skipped_enumeration_ = true;
    }
    if (by_series && by_enum) {
      ++path_comparisons_;
      if (*by_series != *by_enum) {
        fail({label(s, n), label(s, n) + " by enumeration", *by_enum, label(s, n) + " by series",
              *by_series,
              {replace_method(count_cmd(s, n), "enumeration"), replace_method(count_cmd(s, n), "series")}});
      }
    }
    return by_series ? *by_series : *by_enum;
  }

  void expect(const std::string& cell, const std::string& lhs_label, std::int64_t lhs,
              const std::string& rhs_label, std::int64_t rhs, std::vector<std::string> replay) {
    ++r_.checked_cells;
    if (lhs != rhs) fail({cell, lhs_label, lhs, rhs_label, rhs, std::move(replay)});
  }

  void expect_series(const std::string& cell, const TruncatedSeries& lhs, const std::string& lhs_name,
                     const TruncatedSeries& rhs, const std::string& rhs_name,
                     std::vector<std::string> replay) {
    r_.checked_cells += lhs.order() + 1;
    const auto out = series_equal_report(lhs, rhs);
    if (!out.equal) {
      const auto& mm = *out.mismatch;
      const std::string at = "[q^" + std::to_string(mm.index) + "]";
      fail({cell + " q^" + std::to_string(mm.index), at + " " + lhs_name, mm.lhs, at + " " + rhs_name,
            mm.rhs, std::move(replay)});
    }
  }

  void informational(std::int64_t cells = 1) { r_.informational_cells += cells; }
  void note(std::string s) { r_.notes.push_back(std::move(s)); }
  void set_cell(std::string c) { cell_ = std::move(c); }
  const std::string& cell() const { return cell_; }

  void finish() {
    if (path_comparisons_ > 0) {
      note("enumeration and series agreed on " + std::to_string(path_comparisons_) + " counts");
    }
    if (skipped_enumeration_) {
      note("enumeration cross-check limited to n <= " + std::to_string(enum_limit_) +
           "; larger weights use the series path only");
    }
  }

private:
  static std::string replace_method(std::string cmd, const std::string& m) {
    const auto pos = cmd.rfind("--method ");
    return cmd.substr(0, pos) + "--method " + m;
  }

  [[noreturn]] void fail(Witness w) {
    r_.pass = false;
    r_.witness = std::move(w);
    throw StopTask{};
  }

  std::int64_t series_coefficient(const ClassSpec& s, int n) {
    const auto key = s.label();
    auto it = series_.find(key);
    if (it == series_.end() || it->second.order() < n) {
      const int order = std::max(n, planned_);
      it = series_.insert_or_assign(key, generating_function(s, order)).first;
    }
    return it->second[n];
  }

  std::int64_t enumerated(const ClassSpec& s, int n) {
    const auto key = std::make_pair(s.label(), n);
    if (auto it = enum_.find(key); it != enum_.end()) return it->second;
    const auto v = count_by_enumeration(s, n);
    enum_.emplace(key, v);
    return v;
  }

  VerificationReport& r_;
  VerifyMethod method_;
  int enum_limit_;
  int planned_ = 0;
  std::string cell_;
  std::map<std::string, TruncatedSeries> series_;
  std::map<std::pair<std::string, int>, std::int64_t> enum_;
  std::int64_t path_comparisons_ = 0;
  bool skipped_enumeration_ = false;
};

ClassSpec cs(ClassId id, std::optional<int> k = std::nullopt) { return ClassSpec::make(id, k); }

struct Grid {
  int kmin, kmax, nmin, nmax;
};

Grid grid(const TaskOverrides& o, int kmin, int kmax, int nmin, int nmax) {
  return {o.kmin.value_or(kmin), o.kmax.value_or(kmax), o.nmin.value_or(nmin), o.nmax.value_or(nmax)};
}

std::string kn(int k, int n) { return "k=" + std::to_string(k) + " n=" + std::to_string(n); }

// --------------------------------------------------------------------------

void task_t1(Context& c, VerificationReport& r, const TaskOverrides& o) {
  const auto g = grid(o, 0, 0, 1, 60);
  r.parameters = {{"n", range(g.nmin, g.nmax)}};
  c.plan_order(g.nmax + 1);
  for (int n = g.nmin; n <= g.nmax; ++n) {
    const auto a = c.count(cs(ClassId::A), n);
    const auto b = c.count(cs(ClassId::B), n);
    const auto cc = c.count(cs(ClassId::C), n + 1);
    const auto d = c.count(cs(ClassId::Dk, 2), n + 1);
    const auto cell = "n=" + std::to_string(n);
    c.expect(cell, label(cs(ClassId::A), n), a, label(cs(ClassId::B), n), b,
             {c.count_cmd(cs(ClassId::A), n), c.count_cmd(cs(ClassId::B), n)});
    c.expect(cell, label(cs(ClassId::B), n), b, label(cs(ClassId::C), n + 1), cc,
             {c.count_cmd(cs(ClassId::B), n), c.count_cmd(cs(ClassId::C), n + 1)});
    c.expect(cell, "2*" + label(cs(ClassId::A), n), 2 * a, label(cs(ClassId::Dk, 2), n + 1), d,
             {c.count_cmd(cs(ClassId::A), n), c.count_cmd(cs(ClassId::Dk, 2), n + 1)});
  }
}

void task_t2(Context& c, VerificationReport& r, const TaskOverrides& o) {
  const auto g = grid(o, 1, 5, 1, 60);
  r.parameters = {{"k", range(g.kmin, g.kmax)}, {"n", range(g.nmin, g.nmax)}};
  c.plan_order(g.nmax + 1);
  for (int k = g.kmin; k <= g.kmax; ++k) {
    for (int n = g.nmin; n <= g.nmax; ++n) {
      for (const auto& [bid, cid] : {std::pair{ClassId::Bk_e, ClassId::Ck_e}, std::pair{ClassId::Bk_o, ClassId::Ck_o}}) {
        const auto bs = cs(bid, k);
        const auto ccs = cs(cid, k);
        c.expect(kn(k, n), label(bs, n), c.count(bs, n), label(ccs, n + 1), c.count(ccs, n + 1),
                 {c.count_cmd(bs, n), c.count_cmd(ccs, n + 1)});
      }
    }
  }
}

// Range of the threshold tasks for one k. An explicit nmin is asserted as given.
std::pair<int, int> chain_range(const TaskOverrides& o, int k) {
  const int lo = o.nmin.value_or(chain_threshold(k));
  const int hi = o.nmax.value_or(lo + 60);
  return {lo, hi};
}

void note_range(Context& c, const TaskOverrides& o, int k, int lo) {
  if (o.nmin && lo < chain_threshold(k)) {
    c.note("k=" + std::to_string(k) + ": cells from n=" + std::to_string(lo) +
           " asserted on request; the stated threshold is " + std::to_string(chain_threshold(k)));
  }
}

void task_t3(Context& c, VerificationReport& r, const TaskOverrides& o) {
  const auto g = grid(o, 1, 4, 0, 0);
  r.parameters = {{"k", range(g.kmin, g.kmax)}};
  for (int k = g.kmin; k <= g.kmax; ++k) {
    const auto [lo, hi] = chain_range(o, k);
    r.parameters.emplace_back("n[k=" + std::to_string(k) + "]", range(lo, hi));
    note_range(c, o, k, lo);
    const int order = hi + 1;
    c.set_cell("k=" + std::to_string(k) + " series order " + std::to_string(order));
    const auto bd = parity_pair(ParityFamily::Bk, k, order).difference;
    const auto cd = parity_pair(ParityFamily::Ck, k, order).difference;
    const auto d = dk_series(2 * k, order);
    const auto be = cs(ClassId::Bk_e, k), bo = cs(ClassId::Bk_o, k);
    const auto ce = cs(ClassId::Ck_e, k), co = cs(ClassId::Ck_o, k);
    const auto dd = cs(ClassId::Dk, 2 * k);
    const auto holds = [&](int n) { return bd[n] == cd[n + 1] && 2 * bd[n] == d[n + 1]; };
    for (int n = lo; n <= hi; ++n) {
      const std::string bl = label(be, n) + " - " + label(bo, n);
      const std::vector<std::string> breplay{c.count_cmd(be, n), c.count_cmd(bo, n)};
      c.expect(kn(k, n), bl, bd[n], label(ce, n + 1) + " - " + label(co, n + 1), cd[n + 1],
               {breplay[0], breplay[1], c.count_cmd(ce, n + 1), c.count_cmd(co, n + 1)});
      c.expect(kn(k, n), "2*(" + bl + ")", 2 * bd[n], label(dd, n + 1), d[n + 1],
               {breplay[0], breplay[1], c.count_cmd(dd, n + 1)});
    }
    // Informational: smallest n from which the chain holds through hi.
    int onset = hi + 1;
    for (int n = hi; n >= 0 && holds(n); --n) onset = n;
    c.informational(hi + 1);
    c.note("k=" + std::to_string(k) + ": chain holds for every n in [" + std::to_string(onset) + ", " +
           std::to_string(hi) + "] (scanned from 0; stated threshold " +
           std::to_string(chain_threshold(k)) + ")");
  }
}

void task_t3x(Context& c, VerificationReport& r, const TaskOverrides& o) {
  const auto g = grid(o, 1, 4, 0, 0);
  const int order = o.order.value_or(200);
  r.parameters = {{"k", range(g.kmin, g.kmax)}, {"order", std::to_string(order)}};
  for (int k = g.kmin; k <= g.kmax; ++k) {
    c.set_cell("k=" + std::to_string(k));
    const auto lhs = dk_series(2 * k, order) + pochhammer_finite(Sign::Minus, 1, 1, 2 * k - 1, order);
    const auto rhs = 2 * parity_pair(ParityFamily::Ck, k, order).difference +
                     2 * pochhammer_finite(Sign::Minus, 2, 2, k - 1, order);
    c.expect_series("k=" + std::to_string(k), lhs, "D_2k + (q;q)_{2k-1}", rhs,
                    "2 gf(C_k^e - C_k^o) + 2 (q^2;q^2)_{k-1}",
                    {"qpart verify --task T3x --kmin " + std::to_string(k) + " --kmax " +
                     std::to_string(k) + " --order " + std::to_string(order)});
  }
}

std::int64_t ak_doubled(Context& c, int k, int n) {
  return c.count(cs(ClassId::P1), n) + c.count(cs(ClassId::Pprime, k), n) + c.count(cs(ClassId::P2), n) +
         c.count(cs(ClassId::Pdprime, k), n);
}

std::vector<std::string> ak_replay(Context& c, int k, int n) {
  return {c.count_cmd(cs(ClassId::P1), n), c.count_cmd(cs(ClassId::Pprime, k), n),
          c.count_cmd(cs(ClassId::P2), n), c.count_cmd(cs(ClassId::Pdprime, k), n)};
}

void task_t4(Context& c, VerificationReport& r, const TaskOverrides& o) {
  const auto g = grid(o, 1, 5, 1, 60);
  r.parameters = {{"k", range(g.kmin, g.kmax)}, {"n", range(g.nmin, g.nmax)}};
  c.plan_order(g.nmax + 1);
  std::vector<std::string> odd;
  for (int k = g.kmin; k <= g.kmax; ++k) {
    for (int n = g.nmin; n <= g.nmax; ++n) {
      const auto two_a = ak_doubled(c, k, n);
      const auto d = cs(ClassId::Dk, k);
      auto replay = ak_replay(c, k, n);
      replay.push_back(c.count_cmd(d, n + 1));
      const std::string al = "2*A_" + std::to_string(k) + "(" + std::to_string(n) + ")";
      if (two_a % 2 != 0) {
        c.informational();
        odd.push_back(kn(k, n));
      }
      c.expect(kn(k, n), al, two_a, label(d, n + 1), c.count(d, n + 1), replay);
    }
  }
  if (!odd.empty()) {
    std::string list;
    for (const auto& s : odd) list += (list.empty() ? "" : ", ") + s;
    c.note("2*A_k(n) is odd (A_k(n) not an integer) at " + list);
  }
}

void task_t5(Context& c, VerificationReport& r, const TaskOverrides& o) {
  const auto g = grid(o, 1, 4, 0, 0);
  r.parameters = {{"k", range(g.kmin, g.kmax)}};
  Context series_ctx(r, VerifyMethod::Series, 0);
  for (int k = g.kmin; k <= g.kmax; ++k) {
    const auto [lo, hi] = chain_range(o, k);
    r.parameters.emplace_back("n[k=" + std::to_string(k) + "]", range(lo, hi));
    note_range(c, o, k, lo);
    const int order = hi + 1;
    series_ctx.plan_order(order);
    c.set_cell("k=" + std::to_string(k) + " series order " + std::to_string(order));
    const auto bd = parity_pair(ParityFamily::Bk, k, order).difference;
    const auto cd = parity_pair(ParityFamily::Ck, k, order).difference;
    const auto be = cs(ClassId::Bk_e, k), bo = cs(ClassId::Bk_o, k);
    const auto d = cs(ClassId::Dk, 2 * k), de = cs(ClassId::Dk_e, 2 * k), dobj = cs(ClassId::Dk_o, 2 * k);
    for (int n = lo; n <= hi; ++n) {
      const std::string bl = label(be, n) + " - " + label(bo, n);
      const std::vector<std::string> br{series_ctx.count_cmd(be, n), series_ctx.count_cmd(bo, n)};
      auto with = [&](std::vector<std::string> extra) {
        extra.insert(extra.begin(), br.begin(), br.end());
        return extra;
      };
      const std::string cell = kn(k, n);
      c.expect(cell, "2*A_" + std::to_string(2 * k) + "(" + std::to_string(n) + ")",
               ak_doubled(series_ctx, 2 * k, n), "2*(" + bl + ")", 2 * bd[n],
               with(ak_replay(series_ctx, 2 * k, n)));
      c.expect(cell, bl, bd[n], "C_k^e(n+1) - C_k^o(n+1)", cd[n + 1],
               with({series_ctx.count_cmd(cs(ClassId::Ck_e, k), n + 1),
                     series_ctx.count_cmd(cs(ClassId::Ck_o, k), n + 1)}));
      c.expect(cell, "2*(" + bl + ")", 2 * bd[n], label(d, n + 1), series_ctx.count(d, n + 1),
               with({series_ctx.count_cmd(d, n + 1)}));
      c.expect(cell, bl, bd[n], label(de, n + 1), series_ctx.count(de, n + 1),
               with({series_ctx.count_cmd(de, n + 1)}));
      c.expect(cell, bl, bd[n], label(dobj, n + 1), series_ctx.count(dobj, n + 1),
               with({series_ctx.count_cmd(dobj, n + 1)}));
    }
  }
}

void task_t6(Context& c, VerificationReport& r, const TaskOverrides& o) {
  const auto g = grid(o, 0, 0, 1, 60);
  r.parameters = {{"n", range(g.nmin, g.nmax)}};
  c.plan_order(g.nmax + 2);
  for (int n = g.nmin; n <= g.nmax; ++n) {
    const auto a = c.count(cs(ClassId::A), n);
    const auto cell = "n=" + std::to_string(n);
    c.expect(cell, label(cs(ClassId::A), n), a, label(cs(ClassId::E), n + 2), c.count(cs(ClassId::E), n + 2),
             {c.count_cmd(cs(ClassId::A), n), c.count_cmd(cs(ClassId::E), n + 2)});
    c.expect(cell, label(cs(ClassId::A), n), a, label(cs(ClassId::F), n + 1), c.count(cs(ClassId::F), n + 1),
             {c.count_cmd(cs(ClassId::A), n), c.count_cmd(cs(ClassId::F), n + 1)});
  }
}

// (-1)^m when n = m(3m +- 1)/2 for some m >= 1, else 0.
int pentagonal_sign(int n) {
  for (int m = 1; m * (3 * m - 1) / 2 <= n; ++m) {
    if (m * (3 * m - 1) / 2 == n || m * (3 * m + 1) / 2 == n) return m % 2 == 0 ? 1 : -1;
  }
  return 0;
}

void task_t7(Context& c, VerificationReport& r, const TaskOverrides& o) {
  const auto g = grid(o, 1, 8, 1, 60);
  r.parameters = {{"k", range(g.kmin, g.kmax)}, {"n", range(g.nmin, g.nmax)}};
  c.plan_order(g.nmax);
  int zero_value = 0;
  for (int k = g.kmin; k <= g.kmax; ++k) {
    const auto de = cs(ClassId::Dk_e, k), dobj = cs(ClassId::Dk_o, k);
    const auto pe = cs(ClassId::Pe_bounded, k), po = cs(ClassId::Po_bounded, k);
    const auto poly = pochhammer_finite(Sign::Minus, 1, 1, k - 1, std::max(g.nmax, 0));
    const int tri = k * (k - 1) / 2;
    zero_value = static_cast<int>(c.count(de, 0) - c.count(dobj, 0));
    c.informational();
    for (int n = std::max(g.nmin, 1); n <= g.nmax; ++n) {
      const auto diff = c.count(de, n) - c.count(dobj, n);
      const std::string dl = label(de, n) + " - " + label(dobj, n);
      std::vector<std::string> replay{c.count_cmd(de, n), c.count_cmd(dobj, n)};
      std::int64_t want = 0;
      std::string branch;
      if (n <= k - 1) {
        want = pentagonal_sign(n);
        branch = "pentagonal sign";
      } else if (n <= tri) {
        want = c.count(pe, n) - c.count(po, n);
        branch = label(pe, n) + " - " + label(po, n);
        replay.push_back(c.count_cmd(pe, n));
        replay.push_back(c.count_cmd(po, n));
      } else {
        branch = "0";
      }
      c.expect(kn(k, n), dl, diff, branch, want, replay);
      c.expect(kn(k, n), dl, diff, "[q^" + std::to_string(n) + "] (q;q)_{k-1}", poly[n], replay);
    }
  }
  c.note("boundary cells n=k-1 and n=k(k-1)/2 belong to the first and second branch");
  c.note("n=0 not asserted: D_k^e(0) - D_k^o(0) = " + std::to_string(zero_value) +
         " under D_k(0)=1, while the statement's last branch gives 0");
}

void task_t7c(Context& c, VerificationReport& r, const TaskOverrides& o) {
  const auto g = grid(o, 1, 8, 1, 60);
  r.parameters = {{"k", range(g.kmin, g.kmax)}, {"n", "max(nmin, k(k-1)/2+1).." + std::to_string(g.nmax)}};
  c.plan_order(g.nmax);
  for (int k = g.kmin; k <= g.kmax; ++k) {
    const auto de = cs(ClassId::Dk_e, k), dobj = cs(ClassId::Dk_o, k), d = cs(ClassId::Dk, k);
    for (int n = std::max(g.nmin, k * (k - 1) / 2 + 1); n <= g.nmax; ++n) {
      c.expect(kn(k, n), label(de, n), c.count(de, n), label(dobj, n), c.count(dobj, n),
               {c.count_cmd(de, n), c.count_cmd(dobj, n)});
      c.expect(kn(k, n), label(d, n) + " mod 2", c.count(d, n) % 2, "0", 0, {c.count_cmd(d, n)});
    }
  }
}

void task_t8(Context& c, VerificationReport& r, const TaskOverrides& o) {
  const auto g = grid(o, 1, 6, 0, 0);
  const int nmax = o.big_n_max.value_or(30);
  const int order = o.order.value_or(120);
  r.parameters = {{"k", range(g.kmin, g.kmax)}, {"N", range(0, nmax)}, {"order", std::to_string(order)}};
  const auto distinct_all = pochhammer_infinite(Sign::Plus, 1, 1, order);
  const auto two = TruncatedSeries::monomial(0, 2, order);
  if (g.kmin <= 1 && 1 <= g.kmax) {
    r.notes.push_back("k=1: every N also checked termwise against Andrews' identity "
                      "sum_{j<=N} q^j/(-q;q)_j = 2 - 1/(-q;q)_N");
  }
  for (int k = g.kmin; k <= g.kmax; ++k) {
    auto lhs = TruncatedSeries::zero(order);
    for (int big_n = 0; big_n <= nmax; ++big_n) {
      c.set_cell("k=" + std::to_string(k) + " N=" + std::to_string(big_n));
      // Left side built term by term.
      lhs = lhs + series_shift(pochhammer_infinite(Sign::Plus, big_n + 1, 1, order), k * big_n);
      const auto inv_n = series_reciprocal(pochhammer_finite(Sign::Plus, 1, 1, big_n, order));
      auto sum = TruncatedSeries::zero(order);
      for (int j = 0; j <= k - 1; ++j) {
        const auto factor = pochhammer_finite(Sign::Minus, j + 1, 1, k - j - 1, order);
        const long long shift = static_cast<long long>(big_n + 1) * j;
        const auto tail = shift > order ? TruncatedSeries::zero(order)
                                        : series_shift(inv_n, static_cast<int>(shift));
        auto term = factor * (two - tail);
        sum = (j + k - 1) % 2 == 0 ? sum + term : sum - term;
      }
      const auto rhs = distinct_all * sum;
      const std::string cell = "k=" + std::to_string(k) + " N=" + std::to_string(big_n);
      const std::vector<std::string> replay{
          "qpart verify --task T8 --kmin " + std::to_string(k) + " --kmax " + std::to_string(k) +
          " --big-n-max " + std::to_string(big_n) + " --order " + std::to_string(order)};
      c.expect_series(cell, lhs, "sum_{j<=N} q^{kj}(-q^{j+1};q)_inf", rhs, "closed form", replay);
      if (k == 1) {
        // Andrews: sum_{j<=N} q^j/(-q;q)_j = 2 - 1/(-q;q)_N, term by term.
        auto left = TruncatedSeries::zero(order);
        for (int j = 0; j <= big_n; ++j) {
          left = left + series_shift(series_reciprocal(pochhammer_finite(Sign::Plus, 1, 1, j, order)), j);
        }
        c.expect_series(cell + " (Andrews)", left, "sum_{j<=N} q^j/(-q;q)_j", two - inv_n,
                        "2 - 1/(-q;q)_N", replay);
      }
    }
  }
}

void task_t9(Context& c, VerificationReport& r, const TaskOverrides& o) {
  const auto g = grid(o, 1, 8, 0, 0);
  const int order = o.order.value_or(120);
  r.parameters = {{"k", range(g.kmin, g.kmax)}, {"order", std::to_string(order)}};
  const auto distinct_all = pochhammer_infinite(Sign::Plus, 1, 1, order);
  for (int k = g.kmin; k <= g.kmax; ++k) {
    c.set_cell("k=" + std::to_string(k));
    auto poly = TruncatedSeries::zero(order);
    for (int j = 0; j < k; ++j) {
      const auto t = pochhammer_finite(Sign::Minus, k - j, 1, j, order);
      poly = j % 2 == 0 ? poly + t : poly - t;
    }
    auto rhs = 2 * (distinct_all * poly);
    const auto corr = pochhammer_finite(Sign::Minus, 1, 1, k - 1, order);
    rhs = k % 2 == 0 ? rhs + corr : rhs - corr;
    c.expect_series("k=" + std::to_string(k), generating_function(cs(ClassId::Dk, k), order), "gf(D_k)",
                    rhs, "closed form",
                    {"qpart series --class Dk --k " + std::to_string(k) + " --order " + std::to_string(order)});
  }
}

void task_t10(Context& c, VerificationReport& r, const TaskOverrides& o) {
  const auto g = grid(o, 2, 5, 1, 60);
  r.parameters = {{"k", range(std::max(g.kmin, 2), g.kmax)}, {"n", "max(nmin, k).." + std::to_string(g.nmax)}};
  c.plan_order(g.nmax);
  for (int k = std::max(g.kmin, 2); k <= g.kmax; ++k) {
    const auto dk = cs(ClassId::Dk, k), dk1 = cs(ClassId::Dk, k - 1), a = cs(ClassId::A);
    for (int n = std::max(g.nmin, k); n <= g.nmax; ++n) {
      const auto lhs = c.count(dk, n) + c.count(dk1, n);
      const auto rhs = c.count(dk1, n - k + 1) + 2 * c.count(a, n);
      c.expect(kn(k, n), label(dk, n) + " + " + label(dk1, n), lhs,
               label(dk1, n - k + 1) + " + 2*" + label(a, n), rhs,
               {c.count_cmd(dk, n), c.count_cmd(dk1, n), c.count_cmd(dk1, n - k + 1), c.count_cmd(a, n)});
    }
  }
}

void task_t11(Context& c, VerificationReport& r, const TaskOverrides& o) {
  const auto g = grid(o, 1, 6, 4, 80);
  r.parameters = {{"n (D_3)", range(std::max(g.nmin, 4), g.nmax)},
                  {"k (relation)", range(g.kmin, g.kmax)},
                  {"n (relation)", "t+1.." + std::to_string(g.nmax)}};
  c.plan_order(g.nmax);
  const auto a = cs(ClassId::A), d3 = cs(ClassId::Dk, 3);
  for (int n = std::max(g.nmin, 4); n <= g.nmax; ++n) {
    const auto rhs = 2 * c.count(a, n - 3) - 2 * c.count(a, n - 1) + 2 * c.count(a, n);
    c.expect("n=" + std::to_string(n), label(d3, n), c.count(d3, n),
             "2A(n-3) - 2A(n-1) + 2A(n)", rhs,
             {c.count_cmd(d3, n), c.count_cmd(a, n - 3), c.count_cmd(a, n - 1), c.count_cmd(a, n)});
  }
  const auto rel3 = derive_dk_relation(3);
  const std::vector<std::int64_t> expect3{1, -1, 0, 1};
  c.expect("k=3 coefficients", "derived relation length", static_cast<std::int64_t>(rel3.coefficients.size()),
           "length of 1 - q + q^3", 4, {"qpart verify --task T11"});
  for (std::size_t i = 0; i < expect3.size(); ++i) {
    c.expect("k=3 coefficient " + std::to_string(i), "derived", rel3.coefficients[i], "stated", expect3[i],
             {"qpart verify --task T11"});
  }
  std::vector<std::int64_t> avals;
  for (int n = 0; n <= g.nmax; ++n) avals.push_back(c.count(a, n));
  for (int k = g.kmin; k <= g.kmax; ++k) {
    const auto rel = derive_dk_relation(k);
    const auto dk = cs(ClassId::Dk, k);
    for (int n = rel.threshold + 1; n <= g.nmax; ++n) {
      c.expect(kn(k, n), label(dk, n), c.count(dk, n), "derived relation", apply_dk_relation(rel, avals, n),
               {c.count_cmd(dk, n)});
    }
  }
}

void task_t12(Context& c, VerificationReport& r, const TaskOverrides& o) {
  const auto g = grid(o, 1, 8, 0, 0);
  const int euler_order = o.order.value_or(40);
  const int collapse_order = o.order.value_or(60);
  r.parameters = {{"c (Euler)", "1..3"},
                  {"order (Euler)", std::to_string(euler_order)},
                  {"k (collapse)", range(g.kmin, g.kmax)},
                  {"order (collapse)", std::to_string(collapse_order)}};
  for (int cexp = 1; cexp <= 3; ++cexp) {
    c.set_cell("Euler c=" + std::to_string(cexp));
    const auto lhs = series_reciprocal(pochhammer_infinite(Sign::Minus, cexp, 1, euler_order));
    auto rhs = TruncatedSeries::zero(euler_order);
    auto inv = TruncatedSeries::one(euler_order);  // 1/(q;q)_m
    for (int m = 0; static_cast<long long>(cexp) * m <= euler_order; ++m) {
      if (m >= 1) inv = div_binomial(inv, Sign::Minus, m);
      rhs = rhs + series_shift(inv, cexp * m);
    }
    c.expect_series("Euler c=" + std::to_string(cexp), lhs, "1/(q^c;q)_inf", rhs, "sum_m q^{cm}/(q;q)_m",
                    {"qpart verify --task T12"});
  }
  for (int k = g.kmin; k <= g.kmax; ++k) {
    c.set_cell("collapse k=" + std::to_string(k));
    auto lhs = TruncatedSeries::zero(collapse_order);
    for (int n = 0; static_cast<long long>(n) * k <= collapse_order; ++n) {
      lhs = lhs + series_shift(pochhammer_infinite(Sign::Minus, n + 1, 1, collapse_order), n * k);
    }
    c.expect_series("collapse k=" + std::to_string(k), lhs, "sum_n q^{nk}(q^{n+1};q)_inf",
                    pochhammer_finite(Sign::Minus, 1, 1, k - 1, collapse_order), "(q;q)_{k-1}",
                    {"qpart verify --task T12"});
  }
  // Reciprocal round trips on the unit series used above.
  for (int order : {euler_order, collapse_order}) {
    for (const auto& s : {pochhammer_infinite(Sign::Plus, 1, 1, order), pochhammer_infinite(Sign::Minus, 1, 1, order),
                          pochhammer_infinite(Sign::Minus, 1, 2, order)}) {
      c.set_cell("reciprocal order " + std::to_string(order));
      c.expect_series("reciprocal order " + std::to_string(order), s * series_reciprocal(s), "S * (1/S)",
                      TruncatedSeries::one(order), "1", {"qpart verify --task T12"});
    }
  }
}

VerifyMethod default_method(TaskId id) {
  switch (id) {
    case TaskId::T3:
    case TaskId::T3x:
    case TaskId::T5:
    case TaskId::T8:
    case TaskId::T9:
    case TaskId::T12:
      return VerifyMethod::Series;
    default:
      return VerifyMethod::Both;
  }
}

}  // namespace

std::span<const TaskInfo> all_tasks() { return kTasks; }

std::string_view task_name(TaskId id) {
  for (const auto& t : kTasks) {
    if (t.id == id) return t.name;
  }
  return "?";
}

std::optional<TaskId> parse_task_id(std::string_view name) {
  for (const auto& t : kTasks) {
    if (t.name == name) return t.id;
  }
  return std::nullopt;
}

std::string_view verify_method_name(VerifyMethod m) {
  switch (m) {
    case VerifyMethod::Enumeration: return "enumeration";
    case VerifyMethod::Series: return "series";
    case VerifyMethod::Both: return "both";
  }
  return "?";
}

std::optional<VerifyMethod> parse_verify_method(std::string_view name) {
  for (auto m : {VerifyMethod::Enumeration, VerifyMethod::Series, VerifyMethod::Both}) {
    if (name == verify_method_name(m)) return m;
  }
  return std::nullopt;
}

int chain_threshold(int k) {
  if (k < 1 || k > 20) throw std::invalid_argument("k out of range for the chain threshold");
  return (1 << (k - 1)) * k * (2 * k - 1);
}

VerificationReport run_task(TaskId id, const TaskOverrides& overrides) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.id = id;
  for (const auto& t : kTasks) {
    if (t.id == id) r.statement = std::string(t.statement);
  }
  // Identity-only tasks have no counting path to choose.
  VerifyMethod method = default_method(id);
  if (overrides.method && method != VerifyMethod::Series) method = *overrides.method;
  r.method = std::string(verify_method_name(method));
  Context ctx(r, method, overrides.enumeration_limit.value_or(100));
  try {
    switch (id) {
      case TaskId::T1: task_t1(ctx, r, overrides); break;
      case TaskId::T2: task_t2(ctx, r, overrides); break;
      case TaskId::T3: task_t3(ctx, r, overrides); break;
      case TaskId::T3x: task_t3x(ctx, r, overrides); break;
      case TaskId::T4: task_t4(ctx, r, overrides); break;
      case TaskId::T5: task_t5(ctx, r, overrides); break;
      case TaskId::T6: task_t6(ctx, r, overrides); break;
      case TaskId::T7: task_t7(ctx, r, overrides); break;
      case TaskId::T7c: task_t7c(ctx, r, overrides); break;
      case TaskId::T8: task_t8(ctx, r, overrides); break;
      case TaskId::T9: task_t9(ctx, r, overrides); break;
      case TaskId::T10: task_t10(ctx, r, overrides); break;
      case TaskId::T11: task_t11(ctx, r, overrides); break;
      case TaskId::T12: task_t12(ctx, r, overrides); break;
    }
    ctx.finish();
  } catch (const StopTask&) {
    ctx.finish();
  } catch (const std::exception& e) {
    r.pass = false;
    r.error = "at " + ctx.cell() + ": " + e.what();
  }
  if (!r.error && r.checked_cells == 0) {
    r.pass = false;
    r.error = "no cells checked: the parameter grid is empty";
  }
  r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<VerificationReport> run_all(const TaskOverrides& overrides, bool parallel) {
  std::vector<VerificationReport> out;
  if (!parallel) {
    for (const auto& t : kTasks) out.push_back(run_task(t.id, overrides));
    return out;
  }
  std::vector<std::future<VerificationReport>> jobs;
  for (const auto& t : kTasks) {
    jobs.push_back(std::async(std::launch::async, [id = t.id, &overrides] { return run_task(id, overrides); }));
  }
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace qpart
