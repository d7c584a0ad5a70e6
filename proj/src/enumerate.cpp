// Recursive-descent enumeration of every partition class. Window classes
// (B_k, C_k) fix the largest odd part or the anchor and the window extras
// first, then fill the remainder; all other classes fill directly.

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "qpart/counters.hpp"

namespace qpart {

namespace {

using RawSink = std::function<void(std::span<const int> parts, int anchor)>;

constexpr int kUnlimited = -1;

// Emits every multiset of parts drawn from [1, top] with per-value
// multiplicity caps (0 = forbidden, kUnlimited = no cap) summing to rem.
class Filler {
public:
  explicit Filler(std::vector<int> max_mult) : mult_(std::move(max_mult)), cap_(mult_.size(), 0) {
    constexpr long long inf = std::numeric_limits<long long>::max() / 4;
    for (std::size_t v = 1; v < mult_.size(); ++v) {
      long long add = 0;
      if (mult_[v] == kUnlimited) {
        add = inf;
      } else {
        add = static_cast<long long>(mult_[v]) * static_cast<long long>(v);
      }
      cap_[v] = std::min(inf, cap_[v - 1] + add);
    }
  }

  static Filler distinct(int lo, int hi) {
    std::vector<int> m(static_cast<std::size_t>(std::max(hi, 0)) + 1, 0);
    for (int v = std::max(lo, 1); v <= hi; ++v) m[static_cast<std::size_t>(v)] = 1;
    return Filler(std::move(m));
  }

  static Filler odd_unlimited(int hi) {
    std::vector<int> m(static_cast<std::size_t>(std::max(hi, 0)) + 1, 0);
    for (int v = 1; v <= hi; v += 2) m[static_cast<std::size_t>(v)] = kUnlimited;
    return Filler(std::move(m));
  }

  // Parts <= anchor/2 distinct, parts in (anchor/2, anchor] unrestricted.
  static Filler anchored_core(int anchor) {
    std::vector<int> m(static_cast<std::size_t>(anchor) + 1, 0);
    const int half = anchor / 2;
    for (int v = 1; v <= anchor; ++v) m[static_cast<std::size_t>(v)] = v <= half ? 1 : kUnlimited;
    return Filler(std::move(m));
  }

  void run(int rem, std::vector<int>& buf, std::span<const int> tail, int anchor,
           const RawSink& sink) const {
    if (rem < 0) return;
    rec(static_cast<int>(mult_.size()) - 1, rem, buf, tail, anchor, sink);
  }

private:
  void rec(int v, int rem, std::vector<int>& buf, std::span<const int> tail, int anchor,
           const RawSink& sink) const {
    if (rem == 0) {
      const std::size_t mark = buf.size();
      buf.insert(buf.end(), tail.begin(), tail.end());
      sink(buf, anchor);
      buf.resize(mark);
      return;
    }
    if (v <= 0 || rem > cap_[static_cast<std::size_t>(v)]) return;
    const int m = mult_[static_cast<std::size_t>(v)];
    int most = rem / v;
    if (m != kUnlimited) most = std::min(most, m);
    const std::size_t mark = buf.size();
    for (int c = most; c >= 0; --c) {
      buf.resize(mark);
      buf.insert(buf.end(), static_cast<std::size_t>(c), v);
      rec(v - 1, rem - c * v, buf, tail, anchor, sink);
    }
    buf.resize(mark);
  }

  std::vector<int> mult_;
  std::vector<long long> cap_;
};

const std::vector<int> kNoTail;

void gen_distinct(int n, int lo, const RawSink& sink) {
  std::vector<int> buf;
  Filler::distinct(lo, n).run(n, buf, kNoTail, 0, sink);
}

// Smallest part s repeated k times (s = 0 allowed), larger parts distinct.
void gen_dk(int k, int n, bool allow_zero, const RawSink& sink) {
  std::vector<int> buf;
  if (allow_zero) {
    const std::vector<int> zeros(static_cast<std::size_t>(k), 0);
    Filler::distinct(1, n).run(n, buf, zeros, 0, sink);
  }
  for (int s = 1; static_cast<long long>(k) * s <= n; ++s) {
    const std::vector<int> tail(static_cast<std::size_t>(k), s);
    const int rem = n - k * s;
    buf.clear();
    Filler::distinct(s + 1, rem).run(rem, buf, tail, 0, sink);
  }
}

// Calls f(extras) for every subset of the window {base+2, ..., base+2k-2}
// (as a descending list) with the given parity and total <= budget.
template <typename F>
void for_each_window_subset(int base, int k, Parity parity, int budget, F&& f) {
  const int width = k - 1;
  std::vector<int> extras;
  for (unsigned mask = 0; mask < (1u << width); ++mask) {
    if (parity_of(static_cast<std::size_t>(__builtin_popcount(mask))) != parity) continue;
    extras.clear();
    int sum = 0;
    for (int i = width; i >= 1; --i) {
      if (mask & (1u << (i - 1))) {
        extras.push_back(base + 2 * i);
        sum += base + 2 * i;
      }
    }
    if (sum <= budget) f(extras, sum);
  }
}

void gen_bk(int k, Parity parity, int n, const RawSink& sink) {
  std::vector<int> buf;
  for (int top = 1; top <= n; top += 2) {
    const int l = (top + 1) / 2;
    const Filler fill = Filler::odd_unlimited(top);
    for_each_window_subset(2 * l, k, parity, n - top, [&](const std::vector<int>& extras, int sum) {
      buf = extras;
      buf.push_back(top);
      fill.run(n - top - sum, buf, kNoTail, 0, sink);
    });
  }
}

void gen_ck(int k, Parity parity, int n, const RawSink& sink) {
  std::vector<int> buf;
  for (int anchor = 2; anchor <= n; anchor += 2) {
    const Filler fill = Filler::anchored_core(anchor);
    for_each_window_subset(anchor, k, parity, n - anchor,
                           [&](const std::vector<int>& extras, int sum) {
                             buf = extras;
                             buf.push_back(anchor);
                             fill.run(n - anchor - sum, buf, kNoTail, anchor, sink);
                           });
  }
}

void gen_raw(const ClassSpec& spec, int n, const RawSink& sink) {
  if (n < 0) throw std::invalid_argument("weight must be non-negative");
  std::vector<int> buf;
  auto with_parity = [&](Parity want, auto&& count_of) {
    return [&sink, want, count_of](std::span<const int> parts, int anchor) {
      if (parity_of(count_of(parts)) == want) sink(parts, anchor);
    };
  };
  const auto size_of = [](std::span<const int> p) { return p.size(); };

  switch (spec.id) {
    case ClassId::A:
      gen_distinct(n, 1, sink);
      return;
    case ClassId::B:
      if (n >= 1) Filler::odd_unlimited(n).run(n, buf, kNoTail, 0, sink);
      return;
    case ClassId::C:
      gen_ck(1, Parity::Even, n, sink);
      return;
    case ClassId::Ck_e:
      gen_ck(spec.param(), Parity::Even, n, sink);
      return;
    case ClassId::Ck_o:
      gen_ck(spec.param(), Parity::Odd, n, sink);
      return;
    case ClassId::Bk_e:
      gen_bk(spec.param(), Parity::Even, n, sink);
      return;
    case ClassId::Bk_o:
      gen_bk(spec.param(), Parity::Odd, n, sink);
      return;
    case ClassId::Dk:
      gen_dk(spec.param(), n, true, sink);
      return;
    case ClassId::SptKd:
      gen_dk(spec.param(), n, false, sink);
      return;
    case ClassId::Dk_e:
    case ClassId::Dk_o: {
      const int k = spec.param();
      const Parity want = spec.id == ClassId::Dk_e ? Parity::Even : Parity::Odd;
      gen_dk(k, n, true, with_parity(want, [k](std::span<const int> p) {
               return p.size() - static_cast<std::size_t>(k);
             }));
      return;
    }
    case ClassId::E:
      for (int top = 1; top <= n; top += 2) {
        buf.assign(1, top);
        Filler::odd_unlimited(top - 2).run(n - top, buf, kNoTail, 0, sink);
      }
      return;
    case ClassId::F:
      for (int top = 2; top <= n; top += 2) {
        buf.assign(1, top);
        Filler::odd_unlimited(top - 1).run(n - top, buf, kNoTail, 0, sink);
      }
      return;
    case ClassId::P1:
      if (n >= 1) gen_distinct(n, 2, sink);
      return;
    case ClassId::Pprime: {
      const int k = spec.param();
      if (k == 1) {
        if (n >= 1) gen_distinct(n, 2, sink);
        return;
      }
      const int rem = n - (k - 1);
      if (rem < 0) return;
      const std::vector<int> ones(static_cast<std::size_t>(k - 1), 1);
      Filler::distinct(2, rem).run(rem, buf, ones, 0, sink);
      return;
    }
    case ClassId::P2:
    case ClassId::Pdprime: {
      const int k = spec.id == ClassId::P2 ? 1 : spec.param();
      for (int s = 1;; ++s) {
        const long long base = s + static_cast<long long>(s + 1) * (k - 1);
        if (base > n) break;
        std::vector<int> tail(static_cast<std::size_t>(k - 1), s + 1);
        tail.push_back(s);
        const int rem = n - static_cast<int>(base);
        buf.clear();
        Filler::distinct(s + 2, rem).run(rem, buf, tail, 0, sink);
      }
      return;
    }
    case ClassId::Pe_d:
      gen_distinct(n, 1, with_parity(Parity::Even, size_of));
      return;
    case ClassId::Po_d:
      gen_distinct(n, 1, with_parity(Parity::Odd, size_of));
      return;
    case ClassId::Pe_bounded:
    case ClassId::Po_bounded: {
      const Parity want = spec.id == ClassId::Pe_bounded ? Parity::Even : Parity::Odd;
      const int hi = std::min(n, spec.param() - 1);
      Filler::distinct(1, hi).run(n, buf, kNoTail, 0, with_parity(want, size_of));
      return;
    }
  }
  throw std::logic_error("unhandled class in enumeration");
}

bool member_less(const Member& a, const Member& b) {
  const auto key = [](const Member& m) -> std::pair<const Partition*, int> {
    if (const auto* ap = std::get_if<AnchoredPartition>(&m)) return {&ap->partition, ap->anchor};
    return {&std::get<Partition>(m), 0};
  };
  const auto [pa, aa] = key(a);
  const auto [pb, ab] = key(b);
  if (*pa != *pb) return *pa < *pb;
  return aa < ab;
}

}  // namespace

std::string_view method_name(CountMethod m) {
  return m == CountMethod::Enumeration ? "enumeration" : "series";
}

void for_each_member(const ClassSpec& spec, int n, const std::function<void(const Member&)>& visit) {
  gen_raw(spec, n, [&](std::span<const int> parts, int anchor) {
    Partition p(std::vector<int>(parts.begin(), parts.end()));
    if (anchor > 0) {
      visit(Member(AnchoredPartition(anchor, std::move(p))));
    } else {
      visit(Member(std::move(p)));
    }
  });
}

std::vector<Member> enumerate(const ClassSpec& spec, int n) {
  std::vector<Member> out;
  for_each_member(spec, n, [&](const Member& m) { out.push_back(m); });
  std::sort(out.begin(), out.end(), member_less);
  return out;
}

std::int64_t count_by_enumeration(const ClassSpec& spec, int n) {
  std::int64_t total = 0;
  gen_raw(spec, n, [&](std::span<const int>, int) { ++total; });
  return total;
}

}  // namespace qpart
