#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace corelattice {

/// An integer partition stored as weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws ValidationError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  bool empty() const { return parts_.empty(); }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// A box of the Young diagram (0-based row/column) with its hook data.
struct Cell {
  int row = 0;
  int col = 0;
  int arm = 0;
  int leg = 0;
  int hook = 0;
};

/// One cell per box, rows in order, columns left to right.
std::vector<Cell> hook_lengths(const Partition& p);

/// True iff no cell has hook length equal to a.
bool is_core(const Partition& p, int a);

/// Bit h-1 is set iff some cell has hook length h; hooks above 64 are dropped.
std::uint64_t hook_mask(const Partition& p);

Partition conjugate(const Partition& p);

/// Electrons and positrons of a Maya state, each energy stored as 2*energy
/// (a positive odd integer). Positron energies are stored as absolute values.
struct MayaState {
  std::set<std::int64_t> electrons;
  std::set<std::int64_t> positrons;

  std::int64_t charge() const {
    return static_cast<std::int64_t>(positrons.size()) -
           static_cast<std::int64_t>(electrons.size());
  }
  /// Twice the total energy.
  std::int64_t doubled_energy() const;

  bool operator==(const MayaState&) const = default;
};

/// Charge-zero state of p, read off the boundary path.
MayaState to_maya(const Partition& p);

/// Inverse of to_maya on charge-0 states; charged states are translated first.
std::pair<Partition, std::int64_t> from_maya(const MayaState& m);

struct SkewLength {
  std::int64_t skew = 0;
  std::int64_t co_skew = 0;
};

/// Row indices (0-based) of the a-parts: in each residue class of
/// lambda_i - i mod a, the first (largest) part.
std::vector<int> a_part_rows(const Partition& p, int a);

/// Partition-level skew length: cells in a rows of a-parts with hook < b.
/// Throws ValidationError unless gcd(a,b) = 1 and p is an (a,b)-core.
SkewLength skew_length(const Partition& p, int a, int b);

/// Calls visit for every partition of every n in [0, max_size], in order of
/// size and reverse-lexicographically within a size.
void for_each_partition(int max_size, const std::function<void(const Partition&)>& visit);

std::vector<Partition> partitions_of(int n);

}  // namespace corelattice
