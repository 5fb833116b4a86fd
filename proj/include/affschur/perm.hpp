#pragma once
// Permutation groups acting on the index alphabet:
//   - FinitePermZ: finitely supported permutations of Z, generated by the
//     simple transpositions s_i = (i, i+1), i in Z.
//   - AffinePerm:  period-n affine permutations (w(i+n) = w(i)+n, window sum
//     normalized), generated by s_0, ..., s_{n-1}.
// Plus: Bruhat order, Grassmannian elements and their partition/core
// dictionaries, translations, and the level-zero action on polynomials.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "affschur/partition.hpp"
#include "affschur/poly.hpp"

namespace affschur {

inline long floorDiv(long a, long b) {  // b > 0
  long q = a / b, r = a % b;
  return (r != 0 && r < 0) ? q - 1 : q;
}

/*============================= FinitePermZ ============================*/

class FinitePermZ {
public:
  FinitePermZ() = default;

  static FinitePermZ identity() { return FinitePermZ(); }
  static FinitePermZ simple(long i) { return transposition(i, i + 1); }
  static FinitePermZ transposition(long i, long j);
  // Product s_{i_1} * ... * s_{i_k} (letters are arbitrary integers).
  static FinitePermZ fromWord(const std::vector<long>& word);

  long apply(long i) const;
  FinitePermZ mul(const FinitePermZ& o) const;  // (this o other)(i) = this(other(i))
  FinitePermZ inverse() const;
  bool isIdentity() const { return img_.empty(); }

  long length() const;
  // Finite set {i : w(i) > w(i+1)}, ascending.
  std::vector<long> rightDescents() const;
  // Canonical reduced word via the leftmost-descent rule.
  std::vector<long> reducedWord() const;

  // Support interval [lo, hi] (false when identity).
  bool supportRange(long& lo, long& hi) const;
  const std::map<long, long>& moved() const { return img_; }

  bool operator==(const FinitePermZ& o) const { return img_ == o.img_; }
  bool operator<(const FinitePermZ& o) const { return img_ < o.img_; }

  std::string str() const;  // "e" or "s-1 s1 s0"

private:
  std::map<long, long> img_;  // i -> w(i), only entries with w(i) != i
  void setImage(long i, long v) {
    if (i == v) img_.erase(i); else img_[i] = v;
  }
};

/*============================= AffinePerm =============================*/

class AffinePerm {
public:
  // Window = images of 1..n; must be distinct mod n with sum n(n+1)/2.
  AffinePerm(int n, std::vector<long> window);

  static AffinePerm identity(int n);
  static AffinePerm simple(int n, long i);  // i taken mod n
  static AffinePerm fromWord(int n, const std::vector<long>& word);
  // Translation by nu in the root lattice (sum nu_i = 0): i -> i + nu_i * n.
  static AffinePerm translation(int n, const std::vector<long>& nu);
  // Periodic transposition swapping i + mn <-> j + mn for all m (i != j mod n).
  static AffinePerm reflection(int n, long i, long j);

  int n() const { return n_; }
  const std::vector<long>& window() const { return win_; }

  long apply(long i) const;
  AffinePerm mul(const AffinePerm& o) const;
  AffinePerm inverse() const;
  bool isIdentity() const;

  long length() const;
  std::vector<long> rightDescents() const;  // subset of {0, ..., n-1}
  std::vector<long> reducedWord() const;

  // Minimal length in the coset w * S_n, i.e. strictly increasing window.
  bool isGrassmannian() const;
  // Minimal representative of w * S_n (sorts the window).
  AffinePerm grassmannianize() const;
  // nu with w * S_n = t_nu * S_n.
  std::vector<long> translationCoset() const;

  bool operator==(const AffinePerm& o) const { return n_ == o.n_ && win_ == o.win_; }
  bool operator<(const AffinePerm& o) const {
    return n_ != o.n_ ? n_ < o.n_ : win_ < o.win_;
  }

  std::string str() const;        // "[0,3]"
  std::string wordStr() const;    // "e" or "s0 s1"

private:
  int n_ = 2;
  std::vector<long> win_;
};

/*========================= Bruhat order ===============================*/

// Reflection-recursion Bruhat comparison (thread-safe memo cache inside).
bool bruhatLeq(const FinitePermZ& v, const FinitePermZ& w);
bool bruhatLeq(const AffinePerm& v, const AffinePerm& w);

// Brute-force subword characterization; intended for small lengths (tests).
bool bruhatLeqBySubword(const FinitePermZ& v, const FinitePermZ& w);
bool bruhatLeqBySubword(const AffinePerm& v, const AffinePerm& w);

/*==================== Grassmannian dictionaries =======================*/

// Grassmannian element of S_Z attached to a partition (canonical word built
// row by row).
FinitePermZ partitionToWInf(const Partition& la);
// Inverse of partitionToWInf; raises not_grassmannian.
Partition wToPartitionInf(const FinitePermZ& w);
// Grassmannian for S_Z: no right descent at i != 0.
bool isGrassmannianInf(const FinitePermZ& w);

// Same word reduced mod n; requires la_1 <= n-1 (part_too_large).
AffinePerm partitionToWAff(int n, const Partition& la);

// n-core attached to w via the pivot set w . Z_{>0} (coset invariant).
Partition coreOf(const AffinePerm& w);
// Grassmannian affine permutation with the given n-core (not_a_core).
AffinePerm coreToAffine(int n, const Partition& core);
bool isCore(int n, const Partition& la);

/*===================== enumeration helpers ============================*/

// All elements of S~_n with length <= maxLen, sorted by (length, window).
std::vector<AffinePerm> affineBallOfLength(int n, long maxLen);

// All elements of the parabolic <s_i : loLetter <= i <= hiLetter> in S_Z with
// length <= maxLen, sorted by (length, representation).
std::vector<FinitePermZ> finiteBallOfLength(long loLetter, long hiLetter, long maxLen);

/*=============== level-zero action & divided differences ==============*/

// w . a_m = a_{1 - w(1 - m)} extended as a ring map (infinite mode).
Poly actPerm(const FinitePermZ& w, const Poly& f);
// Same rule mod n (cyclic mode, matching period).
Poly actPerm(const AffinePerm& w, const Poly& f);

// Simple roots: alpha_i = a_{-i} - a_{1-i} (index arithmetic mod n in the
// cyclic case; e.g. n=2: alpha_1 = a_1 - a_2, alpha_0 = a_2 - a_1).
Poly simpleRootInf(long i);
Poly simpleRootAff(int n, long i);
// Root of the finite transposition (i j), i < j: a_{1-j} - a_{1-i}.
Poly rootOfTransposition(long i, long j);

// A_i f = (s_i . f - f) / alpha_i, exact (cyclic mode only).
Poly dividedDiff(int i, const Poly& f);

/*========================== text parsing ==============================*/

// "s0 s1 s-1" or "e" -> letters.
std::vector<long> parseWord(const std::string& s);
// "[0,3]" window or "s0 s1" word -> affine permutation.
AffinePerm parseAffinePerm(int n, const std::string& s);
// "1,-1" -> translation vector (must sum to zero when used).
std::vector<long> parseIntList(const std::string& s);

}  // namespace affschur
