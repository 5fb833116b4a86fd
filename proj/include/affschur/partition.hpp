#pragma once
// Integer partitions: weakly decreasing positive parts.  The canonical total
// order used for every table in this project is (size, then lexicographic
// ascending on the parts vector), e.g. 1111 < 211 < 22 < 31 < 4.

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "affschur/error.hpp"
#include "affschur/rational.hpp"

namespace affschur {

class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    normalize();
  }
  static Partition single(long r) { return r == 0 ? Partition() : Partition({r}); }

  const std::vector<long>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  long size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }
  long length() const { return static_cast<long>(parts_.size()); }
  long part(long i) const {  // 1-based; 0 beyond the last row
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
  }
  long maxPart() const { return parts_.empty() ? 0 : parts_.front(); }

  Partition conjugate() const {
    std::vector<long> c;
    for (long j = 1; j <= maxPart(); ++j) {
      long cnt = 0;
      for (long p : parts_)
        if (p >= j) ++cnt;
      c.push_back(cnt);
    }
    return Partition(std::move(c));
  }

  // Multiset union of parts (product of monomial-type bases).
  Partition unionWith(const Partition& o) const {
    std::vector<long> p = parts_;
    p.insert(p.end(), o.parts_.begin(), o.parts_.end());
    return Partition(std::move(p));
  }

  bool contains(const Partition& o) const {  // containment of diagrams
    for (long i = 1; i <= o.length(); ++i)
      if (part(i) < o.part(i)) return false;
    return true;
  }

  // Dominance order on partitions of equal size: *this dominated by o.
  bool dominatedBy(const Partition& o) const {
    if (size() != o.size()) return false;
    long s1 = 0, s2 = 0, n = std::max(length(), o.length());
    for (long i = 1; i <= n; ++i) {
      s1 += part(i);
      s2 += o.part(i);
      if (s1 > s2) return false;
    }
    return true;
  }

  // Whether the parts of *this can be grouped to sum to the parts of coarse.
  bool refines(const Partition& coarse) const;

  // z_lambda = prod_i i^{m_i} m_i!  (order of the centralizer of a permutation
  // of this cycle type).
  Rational zee() const {
    Rational z(1);
    long run = 0;
    for (size_t i = 0; i < parts_.size(); ++i) {
      ++run;
      z *= Rational(parts_[i]);
      if (i + 1 == parts_.size() || parts_[i + 1] != parts_[i]) {
        z *= factorial(run);
        run = 0;
      }
    }
    return z;
  }

  // prod_i m_i(lambda)! over part multiplicities.
  Rational multFactorial() const {
    Rational z(1);
    long run = 0;
    for (size_t i = 0; i < parts_.size(); ++i) {
      ++run;
      if (i + 1 == parts_.size() || parts_[i + 1] != parts_[i]) {
        z *= factorial(run);
        run = 0;
      }
    }
    return z;
  }

  long hookLength(long r, long c) const {  // 1-based cell (r, c)
    return part(r) - c + conjugate().part(c) - r + 1;
  }

  // Canonical order: by size, then lexicographic ascending on parts.
  static int cmp(const Partition& x, const Partition& y) {
    long sx = x.size(), sy = y.size();
    if (sx != sy) return sx < sy ? -1 : 1;
    if (x.parts_ < y.parts_) return -1;
    if (y.parts_ < x.parts_) return 1;
    return 0;
  }
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator<(const Partition& o) const { return cmp(*this, o) < 0; }

  // "-" for the empty partition; otherwise digits concatenated when all parts
  // are single-digit ("211"), else comma-separated ("12,3").
  std::string label() const {
    if (parts_.empty()) return "-";
    std::string s;
    bool wide = maxPart() > 9;
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (wide && i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  // Accepts "", "-", "2,1,1" or single-digit concatenation "211".
  static Partition parse(const std::string& s);

private:
  void normalize() {
    std::sort(parts_.begin(), parts_.end(), std::greater<long>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (long p : parts_)
      if (p < 0) fail(Errc::usage, "partition parts must be nonnegative");
  }

  std::vector<long> parts_;
};

inline bool Partition::refines(const Partition& coarse) const {
  if (size() != coarse.size()) return false;
  // Backtracking: assign each part of *this to a bucket of `coarse`.
  std::vector<long> room = coarse.parts_;
  std::vector<long> mine = parts_;  // decreasing; place large parts first
  std::function<bool(size_t)> place = [&](size_t i) -> bool {
    if (i == mine.size()) return true;
    for (size_t b = 0; b < room.size(); ++b) {
      if (room[b] < mine[i]) continue;
      if (b > 0 && room[b] == room[b - 1]) continue;  // symmetry break
      room[b] -= mine[i];
      if (place(i + 1)) { room[b] += mine[i]; return true; }
      room[b] += mine[i];
    }
    return false;
  };
  return place(0);
}

inline Partition Partition::parse(const std::string& s) {
  if (s.empty() || s == "-") return Partition();
  std::vector<long> parts;
  if (s.find(',') != std::string::npos) {
    size_t pos = 0;
    while (pos < s.size()) {
      size_t e = s.find(',', pos);
      if (e == std::string::npos) e = s.size();
      try {
        parts.push_back(std::stol(s.substr(pos, e - pos)));
      } catch (const std::exception&) {
        fail(Errc::parse, "bad partition: '" + s + "'");
      }
      pos = e + 1;
    }
  } else {
    for (char c : s) {
      if (c < '0' || c > '9') fail(Errc::parse, "bad partition: '" + s + "'");
      parts.push_back(c - '0');
    }
  }
  return Partition(std::move(parts));
}

/*=========================== enumeration ==============================*/

// All partitions of exactly d (maxPart bounds the largest part; 0 = no bound),
// returned in canonical order.
std::vector<Partition> partitionsOf(long d, long maxPart = 0);

// All partitions with size <= maxSize (and part bound), canonical order.
std::vector<Partition> partitionsUpTo(long maxSize, long maxPart = 0);

}  // namespace affschur
