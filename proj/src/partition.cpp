#include "qpart/partition.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qpart {

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be non-negative");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be non-increasing");
    }
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::largest() const {
  if (parts_.empty()) throw std::invalid_argument("empty partition has no largest part");
  return parts_.front();
}

int Partition::smallest() const {
  if (parts_.empty()) throw std::invalid_argument("empty partition has no smallest part");
  return parts_.back();
}

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

bool Partition::all_distinct() const {
  return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

Partition Partition::with_part(int value) const {
  std::vector<int> p(parts_);
  p.insert(std::upper_bound(p.begin(), p.end(), value, std::greater<>()), value);
  return Partition(std::move(p));
}

Partition Partition::without_part(int value) const {
  std::vector<int> p(parts_);
  auto it = std::find(p.begin(), p.end(), value);
  if (it == p.end()) {
    throw std::invalid_argument("part " + std::to_string(value) + " not present in " +
                                to_string(*this));
  }
  p.erase(it);
  return Partition(std::move(p));
}

Partition Partition::without_zeros() const {
  std::vector<int> p(parts_);
  p.erase(std::remove(p.begin(), p.end(), 0), p.end());
  return Partition(std::move(p));
}

// ---------------------------------------------------------------------------
// AnchoredPartition

AnchoredPartition::AnchoredPartition(int a, Partition p) : anchor(a), partition(std::move(p)) {
  if (anchor <= 0 || anchor % 2 != 0) {
    throw std::invalid_argument("anchor must be a positive even integer, got " +
                                std::to_string(anchor));
  }
  if (partition.multiplicity(anchor) == 0) {
    throw std::invalid_argument("anchor " + std::to_string(anchor) + " is not a part of " +
                                to_string(partition));
  }
}

std::vector<int> AnchoredPartition::extras() const {
  std::vector<int> out;
  for (int v : partition.parts()) {
    if (v > anchor) out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Class identifiers

namespace {

struct ClassInfo {
  ClassId id;
  std::string_view name;
  bool needs_k;
};

constexpr std::array<ClassInfo, 21> kClasses{{
    {ClassId::A, "A", false},
    {ClassId::B, "B", false},
    {ClassId::C, "C", false},
    {ClassId::Dk, "Dk", true},
    {ClassId::Dk_e, "Dk_e", true},
    {ClassId::Dk_o, "Dk_o", true},
    {ClassId::Bk_e, "Bk_e", true},
    {ClassId::Bk_o, "Bk_o", true},
    {ClassId::Ck_e, "Ck_e", true},
    {ClassId::Ck_o, "Ck_o", true},
    {ClassId::E, "E", false},
    {ClassId::F, "F", false},
    {ClassId::P1, "P1", false},
    {ClassId::P2, "P2", false},
    {ClassId::Pprime, "Pprime", true},
    {ClassId::Pdprime, "Pdprime", true},
    {ClassId::Pe_d, "Pe_d", false},
    {ClassId::Po_d, "Po_d", false},
    {ClassId::Pe_bounded, "Pe_bounded", true},
    {ClassId::Po_bounded, "Po_bounded", true},
    {ClassId::SptKd, "SptKd", true},
}};

constexpr std::array<ClassId, 21> kIds = [] {
  std::array<ClassId, 21> ids{};
  for (std::size_t i = 0; i < kClasses.size(); ++i) ids[i] = kClasses[i].id;
  return ids;
}();

const ClassInfo& info(ClassId id) {
  for (const auto& c : kClasses) {
    if (c.id == id) return c;
  }
  throw std::logic_error("unknown class id");
}

}  // namespace

std::string_view class_name(ClassId id) { return info(id).name; }

std::optional<ClassId> parse_class_id(std::string_view name) {
  for (const auto& c : kClasses) {
    if (c.name == name) return c.id;
  }
  return std::nullopt;
}

bool requires_k(ClassId id) { return info(id).needs_k; }

bool is_anchored_class(ClassId id) {
  return id == ClassId::C || id == ClassId::Ck_e || id == ClassId::Ck_o;
}

std::span<const ClassId> all_class_ids() { return kIds; }

ClassSpec ClassSpec::make(ClassId id, std::optional<int> k) {
  if (requires_k(id)) {
    if (!k) throw std::invalid_argument("class " + std::string(class_name(id)) + " requires k");
    if (*k < 1) throw std::invalid_argument("k must be a positive integer");
  } else if (k) {
    throw std::invalid_argument("class " + std::string(class_name(id)) + " takes no k");
  }
  return ClassSpec{id, k};
}

int ClassSpec::param() const {
  if (!k) throw std::invalid_argument("class " + std::string(class_name(id)) + " requires k");
  return *k;
}

std::string ClassSpec::label() const {
  std::string s(class_name(id));
  if (k) s += "[k=" + std::to_string(*k) + "]";
  return s;
}

// ---------------------------------------------------------------------------
// Membership

SmallestPartProfile smallest_part_profile(const Partition& p) {
  if (p.empty()) throw std::invalid_argument("smallest part profile of an empty partition");
  const int s = p.smallest();
  const int mult = p.multiplicity(s);
  const auto parts = p.parts();
  const auto larger = parts.first(parts.size() - static_cast<std::size_t>(mult));
  const bool distinct = std::adjacent_find(larger.begin(), larger.end()) == larger.end();
  return {s, mult, distinct};
}

namespace {

bool all_odd(const Partition& p) {
  return std::all_of(p.parts().begin(), p.parts().end(), [](int v) { return v % 2 != 0; });
}

bool positive_distinct(const Partition& p) { return !p.has_zero() && p.all_distinct(); }

bool in_dk(int k, const Partition& p) {
  if (p.empty()) return false;
  const auto prof = smallest_part_profile(p);
  return prof.multiplicity == k && prof.rest_distinct;
}

std::size_t parts_above_smallest(const Partition& p) {
  const int s = p.smallest();
  return p.size() - static_cast<std::size_t>(p.multiplicity(s));
}

bool in_bk(int k, Parity parity, const Partition& p) {
  if (p.empty() || p.has_zero()) return false;
  int largest_odd = 0;
  for (int v : p.parts()) {
    if (v % 2 != 0) {
      largest_odd = v;
      break;
    }
  }
  if (largest_odd == 0) return false;
  const int l = (largest_odd + 1) / 2;
  std::vector<int> evens;
  for (int v : p.parts()) {
    if (v % 2 == 0) evens.push_back(v);
  }
  if (std::adjacent_find(evens.begin(), evens.end()) != evens.end()) return false;
  for (int v : evens) {
    if (v < 2 * l + 2 || v > 2 * l + 2 * k - 2) return false;
  }
  return parity_of(evens.size()) == parity;
}

// Anchored C_k conditions, ignoring the parity of the extras.
bool anchored_ck_shape(int k, const AnchoredPartition& ap) {
  const Partition& p = ap.partition;
  if (p.has_zero()) return false;
  const int a = ap.anchor;
  const int l = a / 2;
  int prev_small = 0;
  int prev_extra = 0;
  for (int v : p.parts()) {
    if (v <= l) {
      if (v == prev_small) return false;
      prev_small = v;
    } else if (v > a) {
      if (v % 2 != 0 || v == prev_extra || v > a + 2 * k - 2) return false;
      prev_extra = v;
    }
  }
  return true;
}

bool in_ck(int k, Parity parity, const AnchoredPartition& ap) {
  return anchored_ck_shape(k, ap) && parity_of(ap.extras().size()) == parity;
}

bool in_c(const Partition& p) {
  if (p.empty() || p.has_zero()) return false;
  const int top = p.largest();
  if (top % 2 != 0) return false;
  return anchored_ck_shape(1, AnchoredPartition(top, p));
}

bool in_pdprime(int k, const Partition& p) {
  if (p.empty() || p.has_zero()) return false;
  if (k == 1) {
    // P''_0 coincides with P_2: smallest part once, everything else >= s+2.
    if (!p.all_distinct()) return false;
    return p.size() == 1 || p.parts()[p.size() - 2] - p.smallest() >= 2;
  }
  const int s = p.smallest();
  if (p.multiplicity(s) != 1 || p.multiplicity(s + 1) != k - 1) return false;
  std::vector<int> rest;
  for (int v : p.parts()) {
    if (v > s + 1) rest.push_back(v);
  }
  return std::adjacent_find(rest.begin(), rest.end()) == rest.end();
}

bool in_pprime(int k, const Partition& p) {
  if (p.empty() || p.has_zero()) return false;
  if (k == 1) return p.all_distinct() && p.smallest() >= 2;
  if (p.multiplicity(1) != k - 1) return false;
  std::vector<int> rest;
  for (int v : p.parts()) {
    if (v > 1) rest.push_back(v);
  }
  return std::adjacent_find(rest.begin(), rest.end()) == rest.end();
}

bool raw_member(const ClassSpec& spec, const Partition& p) {
  switch (spec.id) {
    case ClassId::A:
      return positive_distinct(p);
    case ClassId::B:
      return !p.empty() && !p.has_zero() && all_odd(p);
    case ClassId::C:
      return in_c(p);
    case ClassId::Dk:
      return in_dk(spec.param(), p);
    case ClassId::Dk_e:
      return in_dk(spec.param(), p) && parity_of(parts_above_smallest(p)) == Parity::Even;
    case ClassId::Dk_o:
      return in_dk(spec.param(), p) && parity_of(parts_above_smallest(p)) == Parity::Odd;
    case ClassId::SptKd:
      return in_dk(spec.param(), p) && p.smallest() > 0;
    case ClassId::Bk_e:
      return in_bk(spec.param(), Parity::Even, p);
    case ClassId::Bk_o:
      return in_bk(spec.param(), Parity::Odd, p);
    case ClassId::E:
      return !p.empty() && !p.has_zero() && all_odd(p) && p.multiplicity(p.largest()) == 1;
    case ClassId::F: {
      if (p.empty() || p.has_zero()) return false;
      const int top = p.largest();
      if (top % 2 != 0 || p.multiplicity(top) != 1) return false;
      return std::all_of(p.parts().begin() + 1, p.parts().end(),
                         [](int v) { return v % 2 != 0; });
    }
    case ClassId::P1:
      return !p.empty() && positive_distinct(p) && p.smallest() > 1;
    case ClassId::P2:
      return in_pdprime(1, p);
    case ClassId::Pprime:
      return in_pprime(spec.param(), p);
    case ClassId::Pdprime:
      return in_pdprime(spec.param(), p);
    case ClassId::Pe_d:
      return positive_distinct(p) && parity_of(p.size()) == Parity::Even;
    case ClassId::Po_d:
      return positive_distinct(p) && parity_of(p.size()) == Parity::Odd;
    case ClassId::Pe_bounded:
    case ClassId::Po_bounded: {
      if (!positive_distinct(p)) return false;
      if (!p.empty() && p.largest() > spec.param() - 1) return false;
      const Parity want = spec.id == ClassId::Pe_bounded ? Parity::Even : Parity::Odd;
      return parity_of(p.size()) == want;
    }
    case ClassId::Ck_e:
    case ClassId::Ck_o:
      break;
  }
  throw std::invalid_argument("class " + spec.label() +
                              " is counted over anchored partitions; pass an AnchoredPartition");
}

}  // namespace

bool is_member(const ClassSpec& spec, const Member& m) {
  if (const auto* ap = std::get_if<AnchoredPartition>(&m)) {
    switch (spec.id) {
      case ClassId::C:
        return ap->anchor == ap->partition.largest() && in_c(ap->partition);
      case ClassId::Ck_e:
        return in_ck(spec.param(), Parity::Even, *ap);
      case ClassId::Ck_o:
        return in_ck(spec.param(), Parity::Odd, *ap);
      default:
        throw std::invalid_argument("anchored partition supplied for non-anchored class " +
                                    spec.label());
    }
  }
  return raw_member(spec, std::get<Partition>(m));
}

std::vector<AnchoredPartition> anchor_decompositions(int k, const Partition& p) {
  if (k < 1) throw std::invalid_argument("k must be a positive integer");
  std::vector<AnchoredPartition> out;
  if (p.has_zero()) return out;
  int last = -1;
  for (int v : p.parts()) {
    if (v % 2 != 0 || v == last) continue;
    last = v;
    AnchoredPartition ap(v, p);
    if (anchored_ck_shape(k, ap)) out.push_back(std::move(ap));
  }
  return out;
}

bool is_raw_c_member(int k, Parity parity, const Partition& p) {
  for (const auto& ap : anchor_decompositions(k, p)) {
    if (parity_of(ap.extras().size()) == parity) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Text

std::string to_string(const Partition& p) {
  if (p.empty()) return "()";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += "+";
    s += std::to_string(p.parts()[i]);
  }
  return s;
}

std::string to_string(const AnchoredPartition& p) {
  return "[" + std::to_string(p.anchor) + "] " + to_string(p.partition);
}

std::string to_string(const Member& m) {
  return std::visit([](const auto& v) { return to_string(v); }, m);
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '+' || c == ',' || c == ' ' || c == '(' || c == ')') {
      ++i;
      continue;
    }
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{}) {
      throw std::invalid_argument("cannot parse partition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return Partition::from_unsorted(std::move(parts));
}

}  // namespace qpart
