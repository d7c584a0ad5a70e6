#pragma once

// Reference implementations used only by the tests. Nothing here calls the
// library: partitions are generated by brute force, class membership is
// re-stated from the definitions, and series are plain vectors.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;  // non-increasing, positive
using Poly = std::vector<std::int64_t>;

inline void partitions_rec(int rem, int cap, Parts& cur, std::vector<Parts>& out) {
  if (rem == 0) {
    out.push_back(cur);
    return;
  }
  for (int v = std::min(rem, cap); v >= 1; --v) {
    cur.push_back(v);
    partitions_rec(rem - v, v, cur, out);
    cur.pop_back();
  }
}

// Every partition of n into positive parts; n = 0 gives the empty partition.
inline std::vector<Parts> partitions(int n) {
  std::vector<Parts> out;
  Parts cur;
  partitions_rec(n, n, cur, out);
  return out;
}

inline int mult(const Parts& p, int v) { return static_cast<int>(std::count(p.begin(), p.end(), v)); }

inline bool distinct(const Parts& p) { return std::adjacent_find(p.begin(), p.end()) == p.end(); }

inline bool all_odd(const Parts& p) {
  return std::all_of(p.begin(), p.end(), [](int v) { return v % 2 == 1; });
}

inline int largest_odd(const Parts& p) {
  for (int v : p) {
    if (v % 2 == 1) return v;
  }
  return 0;
}

// B_k with x-marked window parts: odd parts, largest odd 2l-1, plus distinct
// even parts in [2l+2, 2l+2k-2]. Returns the number of window parts, or -1.
inline int bk_window(int k, const Parts& p) {
  const int top = largest_odd(p);
  if (top == 0) return -1;
  const int l = (top + 1) / 2;
  int evens = 0;
  std::set<int> seen;
  for (int v : p) {
    if (v % 2 == 1) continue;
    if (v < 2 * l + 2 || v > 2 * l + 2 * k - 2 || !seen.insert(v).second) return -1;
    ++evens;
  }
  return evens;
}

// Anchored C_k: for each even part 2l, parts <= l distinct, parts in (l, 2l]
// free, parts above 2l distinct evens in [2l+2, 2l+2k-2]. Calls f(extras)
// once per valid anchor.
inline void ck_anchors(int k, const Parts& p, const std::function<void(int anchor, int extras)>& f) {
  std::set<int> evens;
  for (int v : p) {
    if (v % 2 == 0) evens.insert(v);
  }
  for (int a : evens) {
    const int l = a / 2;
    bool ok = true;
    int extras = 0;
    std::set<int> above;
    for (int v : p) {
      if (v <= l && mult(p, v) > 1) ok = false;
      if (v > a) {
        if (v % 2 != 0 || v > a + 2 * k - 2 || !above.insert(v).second) ok = false;
        ++extras;
      }
    }
    if (ok) f(a, extras);
  }
}

// Counts by definition. parity: 0 even, 1 odd, -1 ignore.
inline std::int64_t count_bk(int k, int parity, int n) {
  std::int64_t c = 0;
  for (const auto& p : partitions(n)) {
    const int w = bk_window(k, p);
    if (w >= 0 && (parity < 0 || w % 2 == parity)) ++c;
  }
  return c;
}

inline std::int64_t count_ck(int k, int parity, int n) {
  std::int64_t c = 0;
  for (const auto& p : partitions(n)) {
    ck_anchors(k, p, [&](int, int extras) {
      if (parity < 0 || extras % 2 == parity) ++c;
    });
  }
  return c;
}

// D_k: smallest part (possibly 0) exactly k times, others distinct. parity
// filters on the number of parts above the smallest.
inline std::int64_t count_dk(int k, int parity, int n) {
  std::int64_t c = 0;
  for (const auto& p : partitions(n)) {
    // with k zeros appended: positive parts must be distinct
    if (distinct(p) && (parity < 0 || static_cast<int>(p.size()) % 2 == parity)) ++c;
    if (p.empty()) continue;
    const int s = p.back();
    if (mult(p, s) != k) continue;
    Parts rest(p.begin(), p.end() - k);
    if (distinct(rest) && (parity < 0 || static_cast<int>(rest.size()) % 2 == parity)) ++c;
  }
  return c;
}

template <typename Pred>
std::int64_t count_if(int n, Pred pred) {
  std::int64_t c = 0;
  for (const auto& p : partitions(n)) {
    if (pred(p)) ++c;
  }
  return c;
}

inline std::int64_t count_named(const std::string& name, int k, int n) {
  if (name == "A") return count_if(n, [](const Parts& p) { return distinct(p); });
  if (name == "B") return count_if(n, [](const Parts& p) { return !p.empty() && all_odd(p); });
  if (name == "C") return count_ck(1, -1, n);
  if (name == "Dk") return count_dk(k, -1, n);
  if (name == "Dk_e") return count_dk(k, 0, n);
  if (name == "Dk_o") return count_dk(k, 1, n);
  if (name == "SptKd") {
    return count_if(n, [&](const Parts& p) {
      if (p.empty() || mult(p, p.back()) != k) return false;
      return distinct(Parts(p.begin(), p.end() - k));
    });
  }
  if (name == "Bk_e") return count_bk(k, 0, n);
  if (name == "Bk_o") return count_bk(k, 1, n);
  if (name == "Ck_e") return count_ck(k, 0, n);
  if (name == "Ck_o") return count_ck(k, 1, n);
  if (name == "E") {
    return count_if(n, [](const Parts& p) { return !p.empty() && all_odd(p) && mult(p, p.front()) == 1; });
  }
  if (name == "F") {
    return count_if(n, [](const Parts& p) {
      return !p.empty() && p.front() % 2 == 0 && mult(p, p.front()) == 1 &&
             all_odd(Parts(p.begin() + 1, p.end()));
    });
  }
  if (name == "P1") return count_if(n, [](const Parts& p) { return !p.empty() && distinct(p) && p.back() > 1; });
  if (name == "P2") {
    return count_if(n, [](const Parts& p) {
      return !p.empty() && distinct(p) && (p.size() == 1 || p[p.size() - 2] - p.back() >= 2);
    });
  }
  if (name == "Pprime") {
    // 1 exactly k-1 times, other parts distinct and >= 2; for k = 1 just P_1
    return count_if(n, [&](const Parts& p) {
      if (p.empty() || mult(p, 1) != k - 1) return false;
      Parts rest(p.begin(), p.end() - (k - 1));
      return distinct(rest) && (rest.empty() || rest.back() >= 2) && !(k == 1 && rest.empty());
    });
  }
  if (name == "Pdprime") {
    // smallest s once, s+1 exactly k-1 times, the rest distinct and >= s+2
    return count_if(n, [&](const Parts& p) {
      if (p.empty()) return false;
      const int s = p.back();
      if (mult(p, s) != 1 || mult(p, s + 1) != k - 1) return false;
      Parts rest;
      for (int v : p) {
        if (v >= s + 2) rest.push_back(v);
      }
      return distinct(rest) && static_cast<int>(rest.size()) + k == static_cast<int>(p.size());
    });
  }
  if (name == "Pe_d") return count_if(n, [](const Parts& p) { return distinct(p) && p.size() % 2 == 0; });
  if (name == "Po_d") return count_if(n, [](const Parts& p) { return distinct(p) && p.size() % 2 == 1; });
  if (name == "Pe_bounded" || name == "Po_bounded") {
    const std::size_t par = name == "Pe_bounded" ? 0 : 1;
    return count_if(n, [&](const Parts& p) {
      return distinct(p) && p.size() % 2 == par && (p.empty() || p.front() <= k - 1);
    });
  }
  throw std::invalid_argument("oracle: unknown class " + name);
}

// ---------------------------------------------------------------------------
// Plain polynomial arithmetic truncated at order N.

inline Poly one(int order) {
  Poly p(static_cast<std::size_t>(order) + 1, 0);
  p[0] = 1;
  return p;
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// prod_{i in exps} (1 + sign q^i)
inline Poly product(int sign, const std::vector<int>& exps, int order) {
  Poly r = one(order);
  for (int e : exps) {
    Poly f = one(order);
    if (e <= order) f[static_cast<std::size_t>(e)] += sign;
    r = mul(r, f);
  }
  return r;
}

// Coefficients of (q;q)_inf from the pentagonal number theorem.
inline Poly euler_pentagonal(int order) {
  Poly r(static_cast<std::size_t>(order) + 1, 0);
  r[0] = 1;
  for (int m = 1;; ++m) {
    const int a = m * (3 * m - 1) / 2;
    const int b = m * (3 * m + 1) / 2;
    if (a > order) break;
    const int s = m % 2 == 0 ? 1 : -1;
    r[static_cast<std::size_t>(a)] += s;
    if (b <= order) r[static_cast<std::size_t>(b)] += s;
  }
  return r;
}

}  // namespace oracle
