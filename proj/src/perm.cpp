#include "affschur/perm.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace affschur {

/*============================= FinitePermZ ============================*/

FinitePermZ FinitePermZ::transposition(long i, long j) {
  if (i == j) fail(Errc::usage, "transposition needs distinct points");
  FinitePermZ w;
  w.img_[i] = j;
  w.img_[j] = i;
  return w;
}

FinitePermZ FinitePermZ::fromWord(const std::vector<long>& word) {
  FinitePermZ w;
  for (long i : word) w = w.mul(simple(i));
  return w;
}

long FinitePermZ::apply(long i) const {
  auto it = img_.find(i);
  return it == img_.end() ? i : it->second;
}

FinitePermZ FinitePermZ::mul(const FinitePermZ& o) const {
  FinitePermZ r;
  std::set<long> keys;
  for (const auto& [i, v] : img_) keys.insert(i);
  for (const auto& [i, v] : o.img_) keys.insert(i);
  for (long i : keys) r.setImage(i, apply(o.apply(i)));
  return r;
}

FinitePermZ FinitePermZ::inverse() const {
  FinitePermZ r;
  for (const auto& [i, v] : img_) r.img_[v] = i;
  return r;
}

bool FinitePermZ::supportRange(long& lo, long& hi) const {
  if (img_.empty()) return false;
  lo = img_.begin()->first;
  hi = img_.rbegin()->first;
  return true;
}

long FinitePermZ::length() const {
  long lo, hi;
  if (!supportRange(lo, hi)) return 0;
  long count = 0;
  for (long i = lo; i <= hi; ++i)
    for (long j = i + 1; j <= hi; ++j)
      if (apply(i) > apply(j)) ++count;
  return count;
}

std::vector<long> FinitePermZ::rightDescents() const {
  std::vector<long> d;
  long lo, hi;
  if (!supportRange(lo, hi)) return d;
  for (long i = lo - 1; i <= hi; ++i)
    if (apply(i) > apply(i + 1)) d.push_back(i);
  return d;
}

std::vector<long> FinitePermZ::reducedWord() const {
  std::vector<long> letters;
  FinitePermZ w = *this;
  while (!w.isIdentity()) {
    long i = w.rightDescents().front();
    letters.push_back(i);
    w = w.mul(simple(i));
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

std::string FinitePermZ::str() const {
  if (isIdentity()) return "e";
  std::ostringstream out;
  bool first = true;
  for (long i : reducedWord()) {
    if (!first) out << " ";
    out << "s" << i;
    first = false;
  }
  return out.str();
}

/*============================= AffinePerm =============================*/

AffinePerm::AffinePerm(int n, std::vector<long> window) : n_(n), win_(std::move(window)) {
  if (n < 2) fail(Errc::usage, "affine permutation needs period >= 2");
  if (static_cast<int>(win_.size()) != n)
    fail(Errc::usage, "affine window must have exactly n entries");
  std::vector<bool> seen(n, false);
  long sum = 0;
  for (long v : win_) {
    long r = modPos(v - 1, n);
    if (seen[r]) fail(Errc::usage, "affine window entries must be distinct mod n");
    seen[r] = true;
    sum += v;
  }
  if (sum != static_cast<long>(n) * (n + 1) / 2)
    fail(Errc::usage, "affine window must sum to n(n+1)/2");
}

AffinePerm AffinePerm::identity(int n) {
  std::vector<long> w(n);
  std::iota(w.begin(), w.end(), 1);
  return AffinePerm(n, std::move(w));
}

AffinePerm AffinePerm::simple(int n, long i) {
  long r = modPos(i, n);
  std::vector<long> w(n);
  std::iota(w.begin(), w.end(), 1);
  if (r == 0) {
    w[0] = 0;
    w[n - 1] = n + 1;
  } else {
    std::swap(w[r - 1], w[r]);
  }
  return AffinePerm(n, std::move(w));
}

AffinePerm AffinePerm::fromWord(int n, const std::vector<long>& word) {
  AffinePerm w = identity(n);
  for (long i : word) w = w.mul(simple(n, i));
  return w;
}

AffinePerm AffinePerm::translation(int n, const std::vector<long>& nu) {
  if (static_cast<int>(nu.size()) != n)
    fail(Errc::usage, "translation vector must have n entries");
  if (std::accumulate(nu.begin(), nu.end(), 0L) != 0)
    fail(Errc::usage, "translation vector must sum to zero");
  std::vector<long> w(n);
  for (int i = 0; i < n; ++i) w[i] = (i + 1) + nu[i] * n;
  return AffinePerm(n, std::move(w));
}

AffinePerm AffinePerm::reflection(int n, long i, long j) {
  if (modPos(i - j, n) == 0) fail(Errc::usage, "reflection needs i != j mod n");
  long d = j - i;
  std::vector<long> w(n);
  for (long p = 1; p <= n; ++p) {
    if (modPos(p - i, n) == 0) w[p - 1] = p + d;
    else if (modPos(p - j, n) == 0) w[p - 1] = p - d;
    else w[p - 1] = p;
  }
  return AffinePerm(n, std::move(w));
}

long AffinePerm::apply(long i) const {
  long r = modPos(i - 1, n_);
  long k = floorDiv(i - 1 - r, n_);
  return win_[r] + k * n_;
}

AffinePerm AffinePerm::mul(const AffinePerm& o) const {
  if (n_ != o.n_) fail(Errc::group_mismatch, "affine permutations have different periods");
  std::vector<long> w(n_);
  for (int i = 0; i < n_; ++i) w[i] = apply(o.win_[i]);
  return AffinePerm(n_, std::move(w));
}

AffinePerm AffinePerm::inverse() const {
  std::vector<long> w(n_);
  for (long i = 1; i <= n_; ++i) {
    long j = win_[i - 1];
    long r = modPos(j - 1, n_);  // j = (r+1) + k n
    w[r] = i - (j - (r + 1));
  }
  return AffinePerm(n_, std::move(w));
}

bool AffinePerm::isIdentity() const {
  for (int i = 0; i < n_; ++i)
    if (win_[i] != i + 1) return false;
  return true;
}

long AffinePerm::length() const {
  long len = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      len += std::abs(floorDiv(win_[j] - win_[i], n_));
  return len;
}

std::vector<long> AffinePerm::rightDescents() const {
  std::vector<long> d;
  if (win_[n_ - 1] - n_ > win_[0]) d.push_back(0);
  for (int i = 1; i < n_; ++i)
    if (win_[i - 1] > win_[i]) d.push_back(i);
  return d;
}

std::vector<long> AffinePerm::reducedWord() const {
  std::vector<long> letters;
  AffinePerm w = *this;
  while (!w.isIdentity()) {
    long i = w.rightDescents().front();
    letters.push_back(i);
    w = w.mul(simple(n_, i));
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

bool AffinePerm::isGrassmannian() const {
  return std::is_sorted(win_.begin(), win_.end());
}

AffinePerm AffinePerm::grassmannianize() const {
  std::vector<long> w = win_;
  std::sort(w.begin(), w.end());
  return AffinePerm(n_, std::move(w));
}

std::vector<long> AffinePerm::translationCoset() const {
  std::vector<long> nu(n_, 0);
  for (long v : win_) {
    long r = modPos(v - 1, n_);
    nu[r] = (v - (r + 1)) / n_;
  }
  return nu;
}

std::string AffinePerm::str() const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < n_; ++i) out << (i ? "," : "") << win_[i];
  out << "]";
  return out.str();
}

std::string AffinePerm::wordStr() const {
  if (isIdentity()) return "e";
  std::ostringstream out;
  bool first = true;
  for (long i : reducedWord()) {
    if (!first) out << " ";
    out << "s" << i;
    first = false;
  }
  return out.str();
}

/*========================= Bruhat order ===============================*/

namespace {

template <class P, class MakeSimple>
bool bruhatLeqRec(const P& v, const P& w, long lv, long lw, const MakeSimple& simple,
                  std::map<std::pair<P, P>, bool>& memo) {
  if (v == w) return true;
  if (lv >= lw) return false;
  auto key = std::make_pair(v, w);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  long i = w.rightDescents().front();
  P ws = w.mul(simple(i));
  P vs = v.mul(simple(i));
  long lvs = vs.length();
  bool ans = lvs < lv ? bruhatLeqRec(vs, ws, lvs, lw - 1, simple, memo)
                      : bruhatLeqRec(v, ws, lv, lw - 1, simple, memo);
  memo.emplace(key, ans);
  return ans;
}

}  // namespace

bool bruhatLeq(const FinitePermZ& v, const FinitePermZ& w) {
  static std::map<std::pair<FinitePermZ, FinitePermZ>, bool> memo;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  return bruhatLeqRec(v, w, v.length(), w.length(),
                      [](long i) { return FinitePermZ::simple(i); }, memo);
}

bool bruhatLeq(const AffinePerm& v, const AffinePerm& w) {
  if (v.n() != w.n()) fail(Errc::group_mismatch, "Bruhat comparison across periods");
  static std::map<std::pair<AffinePerm, AffinePerm>, bool> memo;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  int n = v.n();
  return bruhatLeqRec(v, w, v.length(), w.length(),
                      [n](long i) { return AffinePerm::simple(n, i); }, memo);
}

namespace {

template <class P, class MakeSimple>
bool subwordSearch(const P& v, const P& w, const P& id, const MakeSimple& simple) {
  std::vector<long> rw = w.reducedWord();
  if (rw.size() > 20) fail(Errc::usage, "subword oracle limited to length <= 20");
  size_t total = size_t(1) << rw.size();
  long lv = v.length();
  for (size_t mask = 0; mask < total; ++mask) {
    if (static_cast<long>(__builtin_popcountll(mask)) != lv) continue;
    P p = id;
    for (size_t k = 0; k < rw.size(); ++k)
      if (mask & (size_t(1) << k)) p = p.mul(simple(rw[k]));
    if (p == v) return true;
  }
  return false;
}

}  // namespace

bool bruhatLeqBySubword(const FinitePermZ& v, const FinitePermZ& w) {
  return subwordSearch(v, w, FinitePermZ::identity(),
                       [](long i) { return FinitePermZ::simple(i); });
}

bool bruhatLeqBySubword(const AffinePerm& v, const AffinePerm& w) {
  if (v.n() != w.n()) fail(Errc::group_mismatch, "Bruhat comparison across periods");
  int n = v.n();
  return subwordSearch(v, w, AffinePerm::identity(n),
                       [n](long i) { return AffinePerm::simple(n, i); });
}

/*==================== Grassmannian dictionaries =======================*/

static std::vector<long> partitionWord(const Partition& la) {
  std::vector<long> word;
  for (long k = la.length(); k >= 1; --k)
    for (long v = la.part(k) - k; v >= 1 - k; --v) word.push_back(v);
  return word;
}

FinitePermZ partitionToWInf(const Partition& la) {
  return FinitePermZ::fromWord(partitionWord(la));
}

bool isGrassmannianInf(const FinitePermZ& w) {
  for (long d : w.rightDescents())
    if (d != 0) return false;
  return true;
}

Partition wToPartitionInf(const FinitePermZ& w) {
  if (!isGrassmannianInf(w))
    fail(Errc::not_grassmannian, "element has a descent away from position 0");
  std::vector<long> parts;
  for (long i = 1;; ++i) {
    long li = w.apply(1 - i) + i - 1;
    if (li == 0) break;
    if (li < 0 || (!parts.empty() && li > parts.back()))
      fail(Errc::internal, "pivot extraction produced a non-partition");
    parts.push_back(li);
  }
  return Partition(std::move(parts));
}

AffinePerm partitionToWAff(int n, const Partition& la) {
  if (la.maxPart() > n - 1)
    fail(Errc::part_too_large, "partition must have parts <= n-1, got " + la.label());
  return AffinePerm::fromWord(n, partitionWord(la));
}

Partition coreOf(const AffinePerm& w) {
  int n = w.n();
  // Pivot set I = { w(i) : i > 0 } = union of win_r + n Z_{>=0}.
  std::vector<long> cur = w.window();
  std::vector<long> colParts;
  long maxWin = *std::max_element(cur.begin(), cur.end());
  for (long j = 1;; ++j) {
    auto it = std::min_element(cur.begin(), cur.end());
    long ij = *it;
    *it += n;
    long lj = j - ij;
    if (lj == 0) break;
    if (lj < 0 || (!colParts.empty() && lj > colParts.back()) || ij > maxWin + n)
      fail(Errc::internal, "core extraction produced a non-partition");
    colParts.push_back(lj);
  }
  return Partition(std::move(colParts)).conjugate();
}

bool isCore(int n, const Partition& la) {
  Partition conj = la.conjugate();
  for (long r = 1; r <= la.length(); ++r)
    for (long c = 1; c <= la.part(r); ++c) {
      long hook = la.part(r) - c + conj.part(c) - r + 1;
      if (hook % n == 0) return false;
    }
  return true;
}

AffinePerm coreToAffine(int n, const Partition& core) {
  if (!isCore(n, core))
    fail(Errc::not_a_core, core.label() + " has a hook length divisible by " + std::to_string(n));
  Partition conj = core.conjugate();
  std::vector<bool> seen(n, false);
  std::vector<long> mins;
  for (long j = 1; static_cast<int>(mins.size()) < n; ++j) {
    long v = j - conj.part(j);
    long r = modPos(v, n);
    if (!seen[r]) {
      seen[r] = true;
      mins.push_back(v);
    }
  }
  std::sort(mins.begin(), mins.end());
  return AffinePerm(n, std::move(mins));
}

/*===================== enumeration helpers ============================*/

std::vector<AffinePerm> affineBallOfLength(int n, long maxLen) {
  std::vector<AffinePerm> out;
  std::set<AffinePerm> level{AffinePerm::identity(n)};
  for (long len = 0; len <= maxLen; ++len) {
    out.insert(out.end(), level.begin(), level.end());
    if (len == maxLen) break;
    std::set<AffinePerm> next;
    for (const AffinePerm& w : level)
      for (int i = 0; i < n; ++i) {
        AffinePerm ws = w.mul(AffinePerm::simple(n, i));
        if (ws.length() == len + 1) next.insert(ws);
      }
    level = std::move(next);
  }
  return out;
}

std::vector<FinitePermZ> finiteBallOfLength(long loLetter, long hiLetter, long maxLen) {
  std::vector<FinitePermZ> out;
  std::set<FinitePermZ> level{FinitePermZ::identity()};
  for (long len = 0; len <= maxLen; ++len) {
    out.insert(out.end(), level.begin(), level.end());
    if (len == maxLen) break;
    std::set<FinitePermZ> next;
    for (const FinitePermZ& w : level)
      for (long i = loLetter; i <= hiLetter; ++i) {
        FinitePermZ ws = w.mul(FinitePermZ::simple(i));
        if (ws.length() == len + 1) next.insert(ws);
      }
    level = std::move(next);
  }
  return out;
}

/*=============== level-zero action & divided differences ==============*/

Poly actPerm(const FinitePermZ& w, const Poly& f) {
  if (f.mode().isCyclic())
    fail(Errc::mode_mismatch, "finite permutations act on infinite-mode polynomials");
  return f.mapIndices([&w](long m) { return 1 - w.apply(1 - m); });
}

Poly actPerm(const AffinePerm& w, const Poly& f) {
  if (!f.mode().isCyclic() || f.mode().n != w.n())
    fail(Errc::mode_mismatch, "affine permutation and polynomial periods differ");
  return f.mapIndices([&w](long m) { return 1 - w.apply(1 - m); });
}

Poly simpleRootInf(long i) {
  RingMode m = RingMode::infinite();
  return Poly::var(m, -i) - Poly::var(m, 1 - i);
}

Poly simpleRootAff(int n, long i) {
  RingMode m = RingMode::cyclic(n);
  return Poly::var(m, m.canonIndex(-i)) - Poly::var(m, m.canonIndex(1 - i));
}

Poly rootOfTransposition(long i, long j) {
  RingMode m = RingMode::infinite();
  return Poly::var(m, 1 - j) - Poly::var(m, 1 - i);
}

Poly dividedDiff(int i, const Poly& f) {
  if (!f.mode().isCyclic())
    fail(Errc::bad_mode, "divided differences are defined in cyclic mode");
  int n = f.mode().n;
  Poly num = actPerm(AffinePerm::simple(n, i), f) - f;
  return num.divExact(simpleRootAff(n, i));
}

/*========================== text parsing ==============================*/

std::vector<long> parseWord(const std::string& s) {
  std::vector<long> letters;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    std::string body = (tok[0] == 's' || tok[0] == 'S') ? tok.substr(1) : tok;
    try {
      letters.push_back(std::stol(body));
    } catch (const std::exception&) {
      fail(Errc::parse, "bad word token: '" + tok + "'");
    }
  }
  return letters;
}

std::vector<long> parseIntList(const std::string& s) {
  std::vector<long> vals;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t e = s.find(',', pos);
    if (e == std::string::npos) e = s.size();
    try {
      vals.push_back(std::stol(s.substr(pos, e - pos)));
    } catch (const std::exception&) {
      fail(Errc::parse, "bad integer list: '" + s + "'");
    }
    pos = e + 1;
  }
  return vals;
}

AffinePerm parseAffinePerm(int n, const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return AffinePerm::identity(n);
  if (s[b] == '[') {
    size_t e = s.find(']', b);
    if (e == std::string::npos) fail(Errc::parse, "unterminated window: '" + s + "'");
    return AffinePerm(n, parseIntList(s.substr(b + 1, e - b - 1)));
  }
  return AffinePerm::fromWord(n, parseWord(s));
}

}  // namespace affschur
