#pragma once

// Invertible maps between partition classes. Every forward map checks its
// input's class membership and throws BijectionError when it does not hold.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpart/partition.hpp"

namespace qpart {

struct BijectionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A base-map strategy could not produce a valid image.
struct StrategyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BijectionOutcome {
  Member image;
  ClassSpec target;
  std::string case_tag;
  // One entry per recursion level, outermost first.
  std::vector<std::string> trace;
  // Which copy of a doubled target the image lives in (1 or 2); 0 otherwise.
  int copy = 0;
};

// ---------------------------------------------------------------------------
// Glaisher

// Odd parts to distinct parts: a with multiplicity sum 2^e_i becomes the
// parts a*2^e_i.
Partition glaisher_merge(const Partition& p);
// Each part 2^e*a (a odd) becomes 2^e copies of a.
Partition glaisher_split(const Partition& p);

// ---------------------------------------------------------------------------
// D_k(n) -> P_2 / P_1 / P''_{k-1} / P'_{k-1} at weight n-1

BijectionOutcome akdk_map(int k, const Partition& p);
// target must be one of P2, P1, Pdprime, Pprime.
Partition akdk_inverse(int k, ClassId target, const Partition& image);

// ---------------------------------------------------------------------------
// D_k(n) + D_{k-1}(n) -> D_{k-1}(n-k+1) + two copies of A(n)

enum class DkSource { Dk, DkMinus1 };

struct TaggedPartition {
  DkSource source;
  Partition partition;
  bool operator==(const TaggedPartition&) const = default;
};

BijectionOutcome dk_recurrence_map(int k, DkSource source, const Partition& p);
TaggedPartition dk_recurrence_inverse(int k, const BijectionOutcome& outcome);

// ---------------------------------------------------------------------------
// B(n) -> C(n+1)

enum class BaseStrategy {
  // i-th member of B(n) in lexicographic order to the i-th member of C(n+1).
  Rank,
  // Largest part 2l-1 becomes the anchor 2l, parts above l are kept and the
  // parts up to l are Glaisher-merged. Fails on some inputs.
  AkySketch,
};

std::string_view strategy_name(BaseStrategy s);
std::optional<BaseStrategy> parse_strategy(std::string_view name);

AnchoredPartition base_bc_map(const Partition& p, BaseStrategy strategy = BaseStrategy::Rank);
Partition base_bc_inverse(const AnchoredPartition& c, BaseStrategy strategy = BaseStrategy::Rank);

// Runs the sketch on every member of B(n) and records what went wrong.
struct SketchCoverage {
  int n = 0;
  std::int64_t total = 0;
  std::int64_t valid = 0;
  std::vector<std::string> membership_failures;
  std::vector<std::string> roundtrip_failures;
  std::vector<std::string> collisions;  // two inputs with the same image
};

SketchCoverage sketch_coverage(int n);

// ---------------------------------------------------------------------------
// B_k^{e/o}(n) -> C_k^{e/o}(n+1)

BijectionOutcome bkck_map(int k, Parity parity, const Partition& p,
                          BaseStrategy strategy = BaseStrategy::Rank);
BijectionOutcome bkck_inverse(int k, Parity parity, const AnchoredPartition& c,
                              BaseStrategy strategy = BaseStrategy::Rank);

// ---------------------------------------------------------------------------
// B <-> F (weight +-1) and B <-> E (weight +-2)

enum class EfDirection { BtoF, FtoB, BtoE, EtoB };

std::string_view direction_name(EfDirection d);
std::optional<EfDirection> parse_direction(std::string_view name);

Partition ef_shift(EfDirection direction, const Partition& p);

// ---------------------------------------------------------------------------
// Exhaustive checks over one weight class

enum class BijectionName { Glaisher, Akdk, DkRecurrence, BaseBc, Bkck, EfF, EfE };

std::string_view bijection_name(BijectionName b);
std::optional<BijectionName> parse_bijection(std::string_view name);
bool bijection_requires_k(BijectionName b);
bool bijection_requires_parity(BijectionName b);

struct RoundTripReport {
  BijectionName map;
  std::optional<int> k;
  std::optional<Parity> parity;
  BaseStrategy strategy = BaseStrategy::Rank;
  int n = 0;
  std::int64_t checked = 0;        // domain members processed
  std::int64_t target_size = 0;    // size of the declared codomain
  std::int64_t distinct_images = 0;
  std::int64_t failure_count = 0;
  std::vector<std::string> failures;  // first few, human readable
  std::vector<std::string> samples;   // "input -> image [case]" lines

  bool ok() const { return failure_count == 0 && distinct_images == target_size; }
};

// Maps every member of the domain at weight n, checks weight, target
// membership, inverse identity and that the images fill the codomain.
// Glaisher checks both directions (domain A(n) and B(n)).
RoundTripReport check_roundtrip(BijectionName map, std::optional<int> k, std::optional<Parity> parity,
                                int n, BaseStrategy strategy = BaseStrategy::Rank,
                                std::size_t max_samples = 0);

}  // namespace qpart
