#include "qpart/bijections.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "qpart/counters.hpp"

namespace qpart {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw BijectionError(what);
}

void require_member(const ClassSpec& spec, const Member& m) {
  require(is_member(spec, m), to_string(m) + " is not in " + spec.label());
}

std::vector<int> to_vec(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

Partition append_zeros(const Partition& p, int count) {
  auto v = to_vec(p);
  v.insert(v.end(), static_cast<std::size_t>(count), 0);
  return Partition(std::move(v));
}

// Replaces one copy of `from` by `to`.
Partition replace_one(const Partition& p, int from, int to) {
  return p.without_part(from).with_part(to);
}

int odd_core(int m, int& power) {
  power = 1;
  while (m % 2 == 0) {
    m /= 2;
    power *= 2;
  }
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// Glaisher

Partition glaisher_merge(const Partition& p) {
  std::vector<int> out;
  const auto parts = p.parts();
  for (std::size_t i = 0; i < parts.size();) {
    const int a = parts[i];
    require(a > 0 && a % 2 == 1, "glaisher_merge needs odd parts, got " + to_string(p));
    std::size_t j = i;
    while (j < parts.size() && parts[j] == a) ++j;
    const int f = static_cast<int>(j - i);
    for (int bit = 0; (f >> bit) != 0; ++bit) {
      if ((f >> bit) & 1) out.push_back(checked_mul(a, 1 << bit));
    }
    i = j;
  }
  return Partition::from_unsorted(std::move(out));
}

Partition glaisher_split(const Partition& p) {
  require(p.all_distinct(), "glaisher_split needs distinct parts, got " + to_string(p));
  std::vector<int> out;
  for (const int m : p.parts()) {
    require(m > 0, "glaisher_split needs positive parts, got " + to_string(p));
    int power = 1;
    const int a = odd_core(m, power);
    out.insert(out.end(), static_cast<std::size_t>(power), a);
  }
  return Partition::from_unsorted(std::move(out));
}

// ---------------------------------------------------------------------------
// akdk

BijectionOutcome akdk_map(int k, const Partition& p) {
  require(k >= 1, "k must be positive");
  require_member(ClassSpec::make(ClassId::Dk, k), p);
  require(p.weight() >= 2, "akdk_map needs weight at least 2");

  if (p.has_zero()) {
    // Case 1: k zeros, positive parts distinct.
    const auto q = p.without_zeros();
    const int s = q.smallest();
    if (s > 1) {
      return {replace_one(q, s, s - 1), ClassSpec::make(ClassId::P2), "case1:smallest>1", {}, 0};
    }
    return {q.without_part(1), ClassSpec::make(ClassId::P1), "case1:smallest=1", {}, 0};
  }
  // Case 2: positive smallest part s repeated k times.
  const int s = p.smallest();
  if (s > 1) {
    return {replace_one(p, s, s - 1), ClassSpec::make(ClassId::Pdprime, k), "case2:smallest>1", {},
            0};
  }
  return {p.without_part(1), ClassSpec::make(ClassId::Pprime, k), "case2:smallest=1", {}, 0};
}

Partition akdk_inverse(int k, ClassId target, const Partition& image) {
  require(k >= 1, "k must be positive");
  switch (target) {
    case ClassId::P2: {
      require_member(ClassSpec::make(ClassId::P2), image);
      const int s = image.smallest();
      return append_zeros(replace_one(image, s, s + 1), k);
    }
    case ClassId::P1:
      require_member(ClassSpec::make(ClassId::P1), image);
      return append_zeros(image.with_part(1), k);
    case ClassId::Pdprime: {
      require_member(ClassSpec::make(ClassId::Pdprime, k), image);
      const int s = image.smallest();
      return replace_one(image, s, s + 1);
    }
    case ClassId::Pprime:
      require_member(ClassSpec::make(ClassId::Pprime, k), image);
      return image.with_part(1);
    default:
      throw BijectionError("akdk_inverse target must be P2, P1, Pdprime or Pprime");
  }
}

// ---------------------------------------------------------------------------
// D_k + D_{k-1} recurrence

BijectionOutcome dk_recurrence_map(int k, DkSource source, const Partition& p) {
  require(k >= 2, "dk_recurrence_map needs k >= 2");
  const int mult = source == DkSource::Dk ? k : k - 1;
  require_member(ClassSpec::make(ClassId::Dk, mult), p);
  require(p.weight() > k - 1, "dk_recurrence_map needs n > k-1");
  const std::string from = source == DkSource::Dk ? "D_k" : "D_{k-1}";

  const int s = p.smallest();
  if (s == 0) {
    const int copy = source == DkSource::Dk ? 1 : 2;
    return {p.without_zeros(), ClassSpec::make(ClassId::A),
            "from " + from + ":smallest=0 -> A copy " + std::to_string(copy), {}, copy};
  }
  // Subtract 1 from k-1 copies of the smallest part.
  auto v = to_vec(p);
  for (int i = 0; i < k - 1; ++i) v[v.size() - 1 - static_cast<std::size_t>(i)] -= 1;
  Partition image = Partition::from_unsorted(std::move(v));
  std::string tag = "from " + from + (s == 1 ? ":smallest=1" : ":smallest>1");
  tag += source == DkSource::Dk ? ":gap=1" : ":gap>=2";
  return {std::move(image), ClassSpec::make(ClassId::Dk, k - 1), tag, {}, 0};
}

TaggedPartition dk_recurrence_inverse(int k, const BijectionOutcome& outcome) {
  require(k >= 2, "dk_recurrence_inverse needs k >= 2");
  const auto* img = std::get_if<Partition>(&outcome.image);
  require(img != nullptr, "dk_recurrence_inverse needs a raw partition");
  if (outcome.target.id == ClassId::A) {
    require_member(ClassSpec::make(ClassId::A), *img);
    require(!img->empty(), "A image must be non-empty");
    if (outcome.copy == 1) return {DkSource::Dk, append_zeros(*img, k)};
    if (outcome.copy == 2) return {DkSource::DkMinus1, append_zeros(*img, k - 1)};
    throw BijectionError("A image needs copy 1 or 2");
  }
  require(outcome.target == ClassSpec::make(ClassId::Dk, k - 1),
          "dk_recurrence_inverse target must be D_{k-1}");
  require_member(outcome.target, *img);
  const int t = img->smallest();
  auto v = to_vec(*img);
  for (int i = 0; i < k - 1; ++i) v[v.size() - 1 - static_cast<std::size_t>(i)] += 1;
  Partition pre = Partition::from_unsorted(std::move(v));
  const bool consecutive = img->size() > static_cast<std::size_t>(k - 1) &&
                           img->parts()[img->size() - static_cast<std::size_t>(k)] == t + 1;
  return {consecutive ? DkSource::Dk : DkSource::DkMinus1, std::move(pre)};
}

// ---------------------------------------------------------------------------
// B(n) -> C(n+1)

std::string_view strategy_name(BaseStrategy s) {
  return s == BaseStrategy::Rank ? "rank" : "aky-sketch";
}

std::optional<BaseStrategy> parse_strategy(std::string_view name) {
  if (name == "rank") return BaseStrategy::Rank;
  if (name == "aky-sketch") return BaseStrategy::AkySketch;
  return std::nullopt;
}

namespace {

struct RankTables {
  std::vector<Partition> b;
  std::vector<AnchoredPartition> c;
  std::map<Partition, std::size_t> b_index;
  std::map<AnchoredPartition, std::size_t> c_index;
};

std::shared_ptr<const RankTables> rank_tables(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const RankTables>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto t = std::make_shared<RankTables>();
  for (auto& m : enumerate(ClassSpec::make(ClassId::B), n)) t->b.push_back(std::get<Partition>(m));
  for (auto& m : enumerate(ClassSpec::make(ClassId::C), n + 1)) {
    t->c.push_back(std::get<AnchoredPartition>(m));
  }
  if (t->b.size() != t->c.size()) {
    throw StrategyError("rank strategy: |B(" + std::to_string(n) + ")| != |C(" +
                        std::to_string(n + 1) + ")|");
  }
  for (std::size_t i = 0; i < t->b.size(); ++i) {
    t->b_index.emplace(t->b[i], i);
    t->c_index.emplace(t->c[i], i);
  }
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(t)).first->second;
}

AnchoredPartition sketch_forward(const Partition& p) {
  const int top = p.largest();
  const int l = (top + 1) / 2;
  std::vector<int> kept{top + 1};
  std::vector<int> low;
  bool anchor_taken = false;
  for (const int v : p.parts()) {
    if (v == top && !anchor_taken) {
      anchor_taken = true;
    } else if (v > l) {
      kept.push_back(v);
    } else {
      low.push_back(v);
    }
  }
  const auto merged = glaisher_merge(Partition::from_unsorted(std::move(low)));
  kept.insert(kept.end(), merged.parts().begin(), merged.parts().end());
  auto image = Partition::from_unsorted(std::move(kept));
  if (image.largest() != top + 1) {
    throw StrategyError("aky-sketch: merging parts of " + to_string(p) + " overshoots the anchor " +
                        std::to_string(top + 1));
  }
  AnchoredPartition out(top + 1, std::move(image));
  if (!is_member(ClassSpec::make(ClassId::C), out)) {
    throw StrategyError("aky-sketch: image of " + to_string(p) + " is not in C");
  }
  return out;
}

Partition sketch_inverse(const AnchoredPartition& c) {
  const int l = c.half();
  std::vector<int> kept{c.anchor - 1};
  std::vector<int> rest;
  bool anchor_taken = false;
  for (const int v : c.partition.parts()) {
    if (v == c.anchor && !anchor_taken) {
      anchor_taken = true;
    } else if (v > l && v % 2 == 1) {
      kept.push_back(v);
    } else {
      rest.push_back(v);
    }
  }
  const auto split = glaisher_split(Partition::from_unsorted(std::move(rest)));
  kept.insert(kept.end(), split.parts().begin(), split.parts().end());
  auto out = Partition::from_unsorted(std::move(kept));
  if (out.largest() != c.anchor - 1) {
    throw StrategyError("aky-sketch: inverse of " + to_string(c) + " does not keep the largest part");
  }
  return out;
}

}  // namespace

AnchoredPartition base_bc_map(const Partition& p, BaseStrategy strategy) {
  require_member(ClassSpec::make(ClassId::B), p);
  if (strategy == BaseStrategy::AkySketch) return sketch_forward(p);
  const auto t = rank_tables(p.weight());
  return t->c[t->b_index.at(p)];
}

Partition base_bc_inverse(const AnchoredPartition& c, BaseStrategy strategy) {
  require_member(ClassSpec::make(ClassId::C), c);
  if (strategy == BaseStrategy::AkySketch) return sketch_inverse(c);
  const auto t = rank_tables(c.partition.weight() - 1);
  return t->b[t->c_index.at(c)];
}

SketchCoverage sketch_coverage(int n) {
  SketchCoverage cov;
  cov.n = n;
  std::map<AnchoredPartition, Partition> seen;
  for (const auto& m : enumerate(ClassSpec::make(ClassId::B), n)) {
    const auto& p = std::get<Partition>(m);
    ++cov.total;
    try {
      const auto img = sketch_forward(p);
      const auto back = sketch_inverse(img);
      if (back != p) {
        cov.roundtrip_failures.push_back(to_string(p) + " -> " + to_string(img) + " -> " +
                                         to_string(back));
        continue;
      }
      if (auto [it, fresh] = seen.emplace(img, p); !fresh) {
        cov.collisions.push_back(to_string(it->second) + " and " + to_string(p) + " -> " +
                                 to_string(img));
        continue;
      }
      ++cov.valid;
    } catch (const StrategyError& e) {
      cov.membership_failures.push_back(e.what());
    }
  }
  return cov;
}

// ---------------------------------------------------------------------------
// B_k <-> C_k

namespace {

std::string parity_letter(Parity p) { return p == Parity::Even ? "e" : "o"; }

// Window parts of a B_k member: the even parts. Throws unless p is in
// B_k^{parity}.
void require_bk(int k, Parity parity, const Partition& p) {
  require(k >= 1, "k must be positive");
  require_member(ClassSpec::make(parity == Parity::Even ? ClassId::Bk_e : ClassId::Bk_o, k), p);
}

}  // namespace

BijectionOutcome bkck_map(int k, Parity parity, const Partition& p, BaseStrategy strategy) {
  require_bk(k, parity, p);
  std::vector<std::string> trace;
  std::vector<int> stripped;
  Partition core = p;
  int level = k;
  Parity par = parity;
  // Peel the largest window part at each level; the parity flips with it.
  while (true) {
    const auto parts = core.parts();
    const auto even = std::find_if(parts.begin(), parts.end(), [](int v) { return v % 2 == 0; });
    if (even == parts.end()) break;
    const int m = *even;
    trace.push_back("k=" + std::to_string(level) + " " + parity_letter(par) + ": strip " +
                    std::to_string(m));
    stripped.push_back(m);
    core = core.without_part(m);
    --level;
    par = flip(par);
  }
  trace.push_back("k=" + std::to_string(level) + " " + parity_letter(par) + ": base " +
                  std::string(strategy_name(strategy)) + " " + to_string(core));
  const auto base = base_bc_map(core, strategy);
  Partition image = base.partition;
  for (const int m : stripped) image = image.with_part(m);
  AnchoredPartition out(base.anchor, std::move(image));
  const auto target =
      ClassSpec::make(parity == Parity::Even ? ClassId::Ck_e : ClassId::Ck_o, k);
  if (!is_member(target, out)) {
    throw StrategyError("bkck_map: image " + to_string(out) + " of " + to_string(p) +
                        " is not in " + target.label());
  }
  std::string tag = "depth " + std::to_string(stripped.size());
  for (const int m : stripped) tag += " m=" + std::to_string(m);
  return {Member(std::move(out)), target, tag, std::move(trace), 0};
}

BijectionOutcome bkck_inverse(int k, Parity parity, const AnchoredPartition& c,
                              BaseStrategy strategy) {
  require(k >= 1, "k must be positive");
  require_member(ClassSpec::make(parity == Parity::Even ? ClassId::Ck_e : ClassId::Ck_o, k), c);
  std::vector<std::string> trace;
  const auto extras = c.extras();
  Partition core = c.partition;
  int level = k;
  Parity par = parity;
  for (const int m : extras) {
    trace.push_back("k=" + std::to_string(level) + " " + parity_letter(par) + ": strip " +
                    std::to_string(m));
    core = core.without_part(m);
    --level;
    par = flip(par);
  }
  AnchoredPartition core_c(c.anchor, core);
  trace.push_back("k=" + std::to_string(level) + " " + parity_letter(par) + ": base " +
                  std::string(strategy_name(strategy)) + " " + to_string(core_c));
  Partition image = base_bc_inverse(core_c, strategy);
  for (const int m : extras) image = image.with_part(m);
  const auto target =
      ClassSpec::make(parity == Parity::Even ? ClassId::Bk_e : ClassId::Bk_o, k);
  if (!is_member(target, image)) {
    throw StrategyError("bkck_inverse: image " + to_string(image) + " of " + to_string(c) +
                        " is not in " + target.label());
  }
  std::string tag = "depth " + std::to_string(extras.size());
  for (const int m : extras) tag += " m=" + std::to_string(m);
  return {Member(std::move(image)), target, tag, std::move(trace), 0};
}

// ---------------------------------------------------------------------------
// E / F shifts

std::string_view direction_name(EfDirection d) {
  switch (d) {
    case EfDirection::BtoF: return "B->F";
    case EfDirection::FtoB: return "F->B";
    case EfDirection::BtoE: return "B->E";
    case EfDirection::EtoB: return "E->B";
  }
  return "?";
}

std::optional<EfDirection> parse_direction(std::string_view name) {
  for (auto d : {EfDirection::BtoF, EfDirection::FtoB, EfDirection::BtoE, EfDirection::EtoB}) {
    if (name == direction_name(d)) return d;
  }
  return std::nullopt;
}

Partition ef_shift(EfDirection direction, const Partition& p) {
  switch (direction) {
    case EfDirection::BtoF:
      require_member(ClassSpec::make(ClassId::B), p);
      return replace_one(p, p.largest(), p.largest() + 1);
    case EfDirection::BtoE:
      require_member(ClassSpec::make(ClassId::B), p);
      return replace_one(p, p.largest(), p.largest() + 2);
    case EfDirection::FtoB:
      require_member(ClassSpec::make(ClassId::F), p);
      return replace_one(p, p.largest(), p.largest() - 1);
    case EfDirection::EtoB:
      require_member(ClassSpec::make(ClassId::E), p);
      require(p.largest() >= 3, "E->B needs a largest part of at least 3");
      return replace_one(p, p.largest(), p.largest() - 2);
  }
  throw BijectionError("unknown direction");
}

// ---------------------------------------------------------------------------
// Exhaustive round trips

std::string_view bijection_name(BijectionName b) {
  switch (b) {
    case BijectionName::Glaisher: return "glaisher";
    case BijectionName::Akdk: return "akdk";
    case BijectionName::DkRecurrence: return "dk-recurrence";
    case BijectionName::BaseBc: return "base-bc";
    case BijectionName::Bkck: return "bkck";
    case BijectionName::EfF: return "ef-f";
    case BijectionName::EfE: return "ef-e";
  }
  return "?";
}

std::optional<BijectionName> parse_bijection(std::string_view name) {
  for (auto b : {BijectionName::Glaisher, BijectionName::Akdk, BijectionName::DkRecurrence,
                 BijectionName::BaseBc, BijectionName::Bkck, BijectionName::EfF,
                 BijectionName::EfE}) {
    if (name == bijection_name(b)) return b;
  }
  return std::nullopt;
}

bool bijection_requires_k(BijectionName b) {
  return b == BijectionName::Akdk || b == BijectionName::DkRecurrence || b == BijectionName::Bkck;
}

bool bijection_requires_parity(BijectionName b) { return b == BijectionName::Bkck; }

namespace {

class Checker {
public:
  Checker(RoundTripReport& r, std::size_t max_samples) : r_(r), max_samples_(max_samples) {}

  void fail(const std::string& what) {
    ++r_.failure_count;
    if (r_.failures.size() < 10) r_.failures.push_back(what);
  }

  void sample(const std::string& line) {
    if (r_.samples.size() < max_samples_) r_.samples.push_back(line);
  }

  // Runs one domain element; any exception counts as a failure.
  template <typename F>
  void run(const std::string& input, F&& body) {
    ++r_.checked;
    try {
      body();
    } catch (const std::exception& e) {
      fail(input + ": " + e.what());
    }
  }

  void image(const std::string& key) {
    if (images_.insert(key).second) {
      ++r_.distinct_images;
    } else {
      fail("image " + key + " hit twice");
    }
  }

private:
  RoundTripReport& r_;
  std::size_t max_samples_;
  std::set<std::string> images_;
};

std::int64_t class_size(const ClassSpec& s, int n) { return n < 0 ? 0 : count_by_enumeration(s, n); }

}  // namespace

RoundTripReport check_roundtrip(BijectionName map, std::optional<int> k, std::optional<Parity> parity,
                                int n, BaseStrategy strategy, std::size_t max_samples) {
  if (n < 0) throw std::invalid_argument("weight must be non-negative");
  if (bijection_requires_k(map) && !k) throw std::invalid_argument("this map needs k");
  if (bijection_requires_parity(map) && !parity) throw std::invalid_argument("this map needs a parity");
  RoundTripReport r;
  r.map = map;
  r.k = bijection_requires_k(map) ? k : std::nullopt;
  r.parity = bijection_requires_parity(map) ? parity : std::nullopt;
  r.strategy = strategy;
  r.n = n;
  Checker ck(r, max_samples);

  const auto spec = [](ClassId id, std::optional<int> kk = std::nullopt) {
    return ClassSpec::make(id, kk);
  };

  switch (map) {
    case BijectionName::Glaisher: {
      // distinct -> odd and odd -> distinct, each a bijection of weight n
      for (const auto& m : enumerate(spec(ClassId::A), n)) {
        const auto& p = std::get<Partition>(m);
        ck.run(to_string(p), [&] {
          const auto img = glaisher_split(p);
          if (img.weight() != p.weight()) ck.fail(to_string(p) + ": weight changed");
          if (!img.empty() && !is_member(spec(ClassId::B), img)) ck.fail(to_string(img) + " not odd");
          if (glaisher_merge(img) != p) ck.fail(to_string(p) + ": merge(split) differs");
          ck.image("split " + to_string(img));
          ck.sample(to_string(p) + " -> " + to_string(img) + " [split]");
        });
      }
      const auto odd = n == 0 ? std::vector<Member>{Member(Partition())} : enumerate(spec(ClassId::B), n);
      for (const auto& m : odd) {
        const auto& p = std::get<Partition>(m);
        ck.run(to_string(p), [&] {
          const auto img = glaisher_merge(p);
          if (img.weight() != p.weight()) ck.fail(to_string(p) + ": weight changed");
          if (!is_member(spec(ClassId::A), img)) ck.fail(to_string(img) + " not distinct");
          if (glaisher_split(img) != p) ck.fail(to_string(p) + ": split(merge) differs");
          ck.image("merge " + to_string(img));
          ck.sample(to_string(p) + " -> " + to_string(img) + " [merge]");
        });
      }
      r.target_size = 2 * class_size(spec(ClassId::A), n);
      break;
    }
    case BijectionName::Akdk: {
      const int kk = *k;
      if (n >= 2) {
        for (const auto& m : enumerate(spec(ClassId::Dk, kk), n)) {
          const auto& p = std::get<Partition>(m);
          ck.run(to_string(p), [&] {
            const auto out = akdk_map(kk, p);
            const auto& img = std::get<Partition>(out.image);
            if (img.weight() != n - 1) ck.fail(to_string(p) + ": weight not n-1");
            if (!is_member(out.target, img)) ck.fail(to_string(img) + " not in " + out.target.label());
            if (akdk_inverse(kk, out.target.id, img) != p) ck.fail(to_string(p) + ": inverse differs");
            ck.image(out.target.label() + " " + to_string(img));
            ck.sample(to_string(p) + " -> " + to_string(img) + " in " + out.target.label() + " [" +
                      out.case_tag + "]");
          });
        }
        r.target_size = count_Ak_doubled(kk, n - 1);
      }
      break;
    }
    case BijectionName::DkRecurrence: {
      const int kk = *k;
      if (kk >= 2 && n > kk - 1) {
        for (auto src : {DkSource::Dk, DkSource::DkMinus1}) {
          const int mult = src == DkSource::Dk ? kk : kk - 1;
          const std::string src_label = src == DkSource::Dk ? "D_k" : "D_{k-1}";
          for (const auto& m : enumerate(spec(ClassId::Dk, mult), n)) {
            const auto& p = std::get<Partition>(m);
            ck.run(src_label + " " + to_string(p), [&] {
              const auto out = dk_recurrence_map(kk, src, p);
              const auto& img = std::get<Partition>(out.image);
              const int want = out.target.id == ClassId::A ? n : n - kk + 1;
              if (img.weight() != want) ck.fail(to_string(p) + ": wrong image weight");
              if (!is_member(out.target, img)) ck.fail(to_string(img) + " not in " + out.target.label());
              const auto back = dk_recurrence_inverse(kk, out);
              if (back.source != src || back.partition != p) ck.fail(to_string(p) + ": inverse differs");
              ck.image(out.target.label() + "#" + std::to_string(out.copy) + " " + to_string(img));
              ck.sample(src_label + " " + to_string(p) + " -> " + to_string(img) + " in " +
                        out.target.label() + " [" + out.case_tag + "]");
            });
          }
        }
        r.target_size = class_size(spec(ClassId::Dk, kk - 1), n - kk + 1) +
                        2 * class_size(spec(ClassId::A), n);
      }
      break;
    }
    case BijectionName::BaseBc: {
      for (const auto& m : enumerate(spec(ClassId::B), n)) {
        const auto& p = std::get<Partition>(m);
        ck.run(to_string(p), [&] {
          const auto img = base_bc_map(p, strategy);
          if (img.partition.weight() != n + 1) ck.fail(to_string(p) + ": weight not n+1");
          if (!is_member(spec(ClassId::C), img)) ck.fail(to_string(img) + " not in C");
          if (base_bc_inverse(img, strategy) != p) ck.fail(to_string(p) + ": inverse differs");
          ck.image(to_string(img));
          ck.sample(to_string(p) + " -> " + to_string(img));
        });
      }
      r.target_size = class_size(spec(ClassId::C), n + 1);
      break;
    }
    case BijectionName::Bkck: {
      const int kk = *k;
      const Parity par = *parity;
      const auto bid = par == Parity::Even ? ClassId::Bk_e : ClassId::Bk_o;
      const auto cid = par == Parity::Even ? ClassId::Ck_e : ClassId::Ck_o;
      for (const auto& m : enumerate(spec(bid, kk), n)) {
        const auto& p = std::get<Partition>(m);
        ck.run(to_string(p), [&] {
          const auto out = bkck_map(kk, par, p, strategy);
          const auto& img = std::get<AnchoredPartition>(out.image);
          if (img.partition.weight() != n + 1) ck.fail(to_string(p) + ": weight not n+1");
          if (!is_member(out.target, img)) ck.fail(to_string(img) + " not in " + out.target.label());
          const auto back = bkck_inverse(kk, par, img, strategy);
          if (std::get<Partition>(back.image) != p) ck.fail(to_string(p) + ": inverse differs");
          ck.image(to_string(img));
          std::string line = to_string(p) + " -> " + to_string(img) + " [" + out.case_tag + "]";
          for (const auto& t : out.trace) line += " | " + t;
          ck.sample(line);
        });
      }
      r.target_size = class_size(spec(cid, kk), n + 1);
      break;
    }
    case BijectionName::EfF:
    case BijectionName::EfE: {
      const bool to_f = map == BijectionName::EfF;
      const auto fwd = to_f ? EfDirection::BtoF : EfDirection::BtoE;
      const auto back = to_f ? EfDirection::FtoB : EfDirection::EtoB;
      const int shift = to_f ? 1 : 2;
      const auto target = spec(to_f ? ClassId::F : ClassId::E);
      for (const auto& m : enumerate(spec(ClassId::B), n)) {
        const auto& p = std::get<Partition>(m);
        ck.run(to_string(p), [&] {
          const auto img = ef_shift(fwd, p);
          if (img.weight() != n + shift) ck.fail(to_string(p) + ": wrong weight shift");
          if (!is_member(target, img)) ck.fail(to_string(img) + " not in " + target.label());
          if (ef_shift(back, img) != p) ck.fail(to_string(p) + ": inverse differs");
          ck.image(to_string(img));
          ck.sample(to_string(p) + " -> " + to_string(img) + " [" +
                    std::string(direction_name(fwd)) + "]");
        });
      }
      r.target_size = class_size(target, n + shift);
      break;
    }
  }
  return r;
}

}  // namespace qpart
