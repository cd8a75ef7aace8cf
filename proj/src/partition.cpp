#include "corelattice/partition.hpp"

#include <algorithm>
#include <numeric>

#include "corelattice/common.hpp"

namespace corelattice {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw ValidationError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw ValidationError("partition parts must be weakly decreasing");
    }
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> cols(static_cast<std::size_t>(p[0]), 0);
  for (int part : p.parts()) {
    for (int c = 0; c < part; ++c) ++cols[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(cols));
}

std::vector<Cell> hook_lengths(const Partition& p) {
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(p.size()));
  const Partition t = conjugate(p);
  for (int r = 0; r < p.length(); ++r) {
    for (int c = 0; c < p[r]; ++c) {
      Cell cell;
      cell.row = r;
      cell.col = c;
      cell.arm = p[r] - c - 1;
      cell.leg = t[c] - r - 1;
      cell.hook = cell.arm + cell.leg + 1;
      cells.push_back(cell);
    }
  }
  return cells;
}

bool is_core(const Partition& p, int a) {
  if (a < 1) throw ValidationError("core order must be positive");
  const Partition t = conjugate(p);
  for (int r = 0; r < p.length(); ++r) {
    for (int c = 0; c < p[r]; ++c) {
      if (p[r] - c + t[c] - r - 1 == a) return false;
    }
  }
  return true;
}

std::uint64_t hook_mask(const Partition& p) {
  std::uint64_t mask = 0;
  const Partition t = conjugate(p);
  for (int r = 0; r < p.length(); ++r) {
    for (int c = 0; c < p[r]; ++c) {
      const int h = p[r] - c + t[c] - r - 1;
      if (h <= 64) mask |= std::uint64_t{1} << (h - 1);
    }
  }
  return mask;
}

std::int64_t MayaState::doubled_energy() const {
  std::int64_t e = 0;
  for (auto v : electrons) e += v;
  for (auto v : positrons) e += v;
  return e;
}

MayaState to_maya(const Partition& p) {
  // Filled levels are lambda_i - i + 1/2 (i >= 1); doubled: 2 lambda_i - 2i + 1.
  MayaState m;
  const int len = p.length();
  std::set<std::int64_t> filled_negative;
  for (int i = 1; i <= len; ++i) {
    const std::int64_t level = 2 * static_cast<std::int64_t>(p[i - 1]) - 2 * i + 1;
    if (level > 0) {
      m.electrons.insert(level);
    } else {
      filled_negative.insert(level);
    }
  }
  // Levels -1, -3, ..., -(2 len - 1) are the only negative ones that can be empty.
  for (std::int64_t level = -1; level >= -(2 * static_cast<std::int64_t>(len) - 1); level -= 2) {
    if (!filled_negative.contains(level)) m.positrons.insert(-level);
  }
  return m;
}

std::pair<Partition, std::int64_t> from_maya(const MayaState& m) {
  for (auto v : m.electrons) {
    if (v <= 0 || v % 2 == 0) throw ValidationError("electron energies must be positive half-integers");
  }
  for (auto v : m.positrons) {
    if (v <= 0 || v % 2 == 0) throw ValidationError("positron energies must be positive half-integers");
  }
  const std::int64_t charge = m.charge();
  std::int64_t deepest = 1;
  if (!m.positrons.empty()) deepest = std::max(deepest, *m.positrons.rbegin());
  if (!m.electrons.empty()) deepest = std::max(deepest, *m.electrons.rbegin());
  const std::int64_t floor_level =
      -(deepest + 2 * (charge < 0 ? -charge : charge) +
        2 * static_cast<std::int64_t>(m.electrons.size() + m.positrons.size()) + 4);

  // Translate by the charge so that the shifted state has charge zero.
  std::vector<std::int64_t> levels;
  for (auto v : m.electrons) levels.push_back(v + 2 * charge);
  for (std::int64_t level = -1; level >= floor_level; level -= 2) {
    if (!m.positrons.contains(-level)) levels.push_back(level + 2 * charge);
  }
  std::sort(levels.begin(), levels.end(), std::greater<>());

  std::vector<int> parts;
  for (std::size_t j = 1; j <= levels.size(); ++j) {
    const std::int64_t twice_part = levels[j - 1] + 2 * static_cast<std::int64_t>(j) - 1;
    if (twice_part <= 0) break;
    parts.push_back(static_cast<int>(twice_part / 2));
  }
  return {Partition(std::move(parts)), charge};
}

std::vector<int> a_part_rows(const Partition& p, int a) {
  std::vector<int> first(static_cast<std::size_t>(a), -1);
  for (int i = 0; i < p.length(); ++i) {
    const auto cls = static_cast<std::size_t>(mod(p[i] - (i + 1), a));
    if (first[cls] < 0) first[cls] = i;
  }
  std::vector<int> rows;
  for (int r : first) {
    if (r >= 0) rows.push_back(r);
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

SkewLength skew_length(const Partition& p, int a, int b) {
  if (a < 1 || b < 1 || !coprime(a, b)) {
    throw ValidationError("skew length requires coprime a, b");
  }
  if (!is_core(p, a) || !is_core(p, b)) {
    throw ValidationError("skew length is only defined on (a,b)-cores");
  }
  const Partition t = conjugate(p);
  std::int64_t count = 0;
  for (int r : a_part_rows(p, a)) {
    for (int c = 0; c < p[r]; ++c) {
      if (p[r] - c + t[c] - r - 1 < b) ++count;
    }
  }
  SkewLength s;
  s.skew = count;
  s.co_skew = static_cast<std::int64_t>(a - 1) * (b - 1) / 2 - count;
  return s;
}

void for_each_partition(int max_size, const std::function<void(const Partition&)>& visit) {
  std::vector<int> buf;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      visit(Partition(buf));
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      buf.push_back(part);
      rec(remaining - part, part);
      buf.pop_back();
    }
  };
  for (int n = 0; n <= max_size; ++n) rec(n, n);
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> buf;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(buf);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      buf.push_back(part);
      rec(remaining - part, part);
      buf.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace corelattice
