#include "affschur/partition.hpp"

namespace affschur {

static void genPartitions(long remaining, long cap, std::vector<long>& acc,
                          std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (long p = std::min(remaining, cap); p >= 1; --p) {
    acc.push_back(p);
    genPartitions(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

std::vector<Partition> partitionsOf(long d, long maxPart) {
  std::vector<Partition> out;
  if (d < 0) return out;
  std::vector<long> acc;
  genPartitions(d, maxPart > 0 ? maxPart : d, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitionsUpTo(long maxSize, long maxPart) {
  std::vector<Partition> out;
  for (long d = 0; d <= maxSize; ++d) {
    auto part = partitionsOf(d, maxPart);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace affschur
