#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qpart {

// A multiset of non-negative parts stored in non-increasing order.
// Zero parts are representable because the D_k family stores its
// smallest-part-zero members with the k zeros written out (0+0+7).
class Partition {
public:
  Partition() = default;
  // Throws std::invalid_argument unless parts are non-negative and
  // non-increasing.
  explicit Partition(std::vector<int> parts);
  static Partition from_unsorted(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int weight() const { return weight_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  int largest() const;
  int smallest() const;
  int multiplicity(int value) const;
  bool has_zero() const { return !parts_.empty() && parts_.back() == 0; }
  bool all_distinct() const;

  // Copies with one part added/removed or zero parts stripped. The result
  // is re-sorted.
  Partition with_part(int value) const;
  Partition without_part(int value) const;  // removes one copy; throws if absent
  Partition without_zeros() const;

  auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }

private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// A C-family member: the partition together with the even part 2l that
// was chosen as its anchor.
struct AnchoredPartition {
  AnchoredPartition(int anchor, Partition partition);

  int anchor;
  Partition partition;

  int half() const { return anchor / 2; }
  // Parts strictly larger than the anchor, in non-increasing order.
  std::vector<int> extras() const;

  auto operator<=>(const AnchoredPartition&) const = default;
  bool operator==(const AnchoredPartition&) const = default;
};

using Member = std::variant<Partition, AnchoredPartition>;

enum class Parity { Even, Odd };

inline Parity parity_of(std::size_t count) { return count % 2 == 0 ? Parity::Even : Parity::Odd; }
inline Parity flip(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }

enum class ClassId {
  A,           // distinct parts
  B,           // odd parts
  C,           // largest part even, parts <= half of it distinct
  Dk,          // smallest part (possibly 0) exactly k times, rest distinct
  Dk_e,        // ... with an even number of parts above the smallest
  Dk_o,
  Bk_e,        // odd parts plus an even number of window evens
  Bk_o,
  Ck_e,        // anchored C with an even number of window extras
  Ck_o,
  E,           // odd parts, unique largest part
  F,           // unique largest part even, all others odd
  P1,          // distinct, smallest part > 1
  P2,          // distinct, two smallest parts differ by >= 2
  Pprime,      // P'_{k-1}: 1 repeated k-1 times, rest distinct
  Pdprime,     // P''_{k-1}: smallest s once, s+1 repeated k-1 times, rest distinct
  Pe_d,        // distinct, even number of parts
  Po_d,
  Pe_bounded,  // distinct parts <= k-1, even number of parts
  Po_bounded,
  SptKd,       // D_k members with positive smallest part
};

std::string_view class_name(ClassId id);
std::optional<ClassId> parse_class_id(std::string_view name);
bool requires_k(ClassId id);
// C, Ck_e and Ck_o are counted over anchored partitions.
bool is_anchored_class(ClassId id);
std::span<const ClassId> all_class_ids();

struct ClassSpec {
  ClassId id;
  std::optional<int> k;

  // Validates that k is present (and >= 1) exactly when the class needs it.
  static ClassSpec make(ClassId id, std::optional<int> k = std::nullopt);

  int param() const;  // k, throws if absent
  std::string label() const;  // "Bk_e[k=2]"

  bool operator==(const ClassSpec&) const = default;
};

// Throws std::invalid_argument for a representation mismatch: an anchored
// value for a raw class, or a raw value for Ck_e/Ck_o (use
// is_raw_c_member for the multiset reading). Class C accepts both; an
// anchored C value must be anchored at its largest part.
bool is_member(const ClassSpec& spec, const Member& m);

struct SmallestPartProfile {
  int smallest;
  int multiplicity;
  bool rest_distinct;
  bool operator==(const SmallestPartProfile&) const = default;
};

// Throws std::invalid_argument on an empty partition.
SmallestPartProfile smallest_part_profile(const Partition& p);

// Every anchor 2l under which p is a C_k configuration: 2l is a part, parts
// <= l are distinct, parts > 2l are distinct evens in [2l+2, 2l+2k-2].
// Ordered by decreasing anchor.
std::vector<AnchoredPartition> anchor_decompositions(int k, const Partition& p);

// Raw multiset reading of C_k^{e/o}: some anchored decomposition of p has
// the requested parity of extras.
bool is_raw_c_member(int k, Parity parity, const Partition& p);

std::string to_string(const Partition& p);          // "4+2+2+1"; "()" when empty
std::string to_string(const AnchoredPartition& p);  // "[2] 4+2+2+1"
std::string to_string(const Member& m);

// Accepts "4+2+2+1", "4,2,2,1" or "4 2 2 1" in any order.
Partition parse_partition(std::string_view text);

}  // namespace qpart
