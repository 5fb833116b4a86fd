#pragma once
// Multivariate polynomials with exact rational coefficients in the alphabet
// a_i.  Two ring modes share one representation:
//   - Infinite:  indices range over all of Z            (ring Q[a_i : i in Z])
//   - Cyclic(n): indices are the residues 1..n          (ring Q[a_1,...,a_n])
// In cyclic mode every index is stored canonically in 1..n (so a_0 == a_n).
// Values are immutable in spirit: all operations return new objects.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "affschur/error.hpp"
#include "affschur/rational.hpp"

namespace affschur {

inline long modPos(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

/*============================== RingMode ==============================*/

struct RingMode {
  int n = 0;  // 0 = infinite; n >= 2 = cyclic with period n

  static RingMode infinite() { return RingMode{0}; }
  static RingMode cyclic(int n) {
    if (n < 2) fail(Errc::usage, "cyclic ring mode needs period >= 2");
    return RingMode{n};
  }

  bool isCyclic() const { return n != 0; }
  bool operator==(const RingMode&) const = default;

  // Canonical representative of a variable index (1..n in cyclic mode).
  long canonIndex(long i) const { return isCyclic() ? modPos(i - 1, n) + 1 : i; }

  std::string str() const { return isCyclic() ? "cyclic(" + std::to_string(n) + ")" : "infinite"; }
};

inline void requireSameMode(const RingMode& a, const RingMode& b, const char* op) {
  if (!(a == b))
    fail(Errc::mode_mismatch,
         std::string(op) + ": ring modes differ (" + a.str() + " vs " + b.str() + ")");
}

/*============================== Monomial ==============================*/

// Product of variables a_i^e, stored as (index, exponent) pairs with
// strictly increasing indices and positive exponents.
class Monomial {
public:
  using Factors = std::vector<std::pair<long, unsigned>>;

  Monomial() = default;
  explicit Monomial(Factors f);  // sorts, merges, drops zero exponents

  static Monomial one() { return Monomial(); }
  static Monomial var(long index, unsigned exp = 1);

  const Factors& factors() const { return f_; }
  bool isOne() const { return f_.empty(); }
  long degree() const;
  unsigned exponentOf(long index) const;

  Monomial times(const Monomial& o) const;

  // Canonical order: graded by total degree; ties broken lexicographically
  // with the *lower* variable index dominating (a_{-1} > a_0 > a_1 > ...)
  // and, at equal index, the higher exponent dominating.
  // Returns <0, 0, >0 in the sense "this < / == / > other".
  static int cmp(const Monomial& x, const Monomial& y);

  bool operator==(const Monomial& o) const { return f_ == o.f_; }

private:
  Factors f_;
};

struct MonomialDescending {
  bool operator()(const Monomial& x, const Monomial& y) const { return Monomial::cmp(x, y) > 0; }
};

/*================================ Poly ================================*/

class Poly {
public:
  using TermMap = std::map<Monomial, Rational, MonomialDescending>;

  explicit Poly(RingMode mode = RingMode::infinite()) : mode_(mode) {}

  static Poly zero(RingMode mode) { return Poly(mode); }
  static Poly constant(RingMode mode, const Rational& c);
  static Poly var(RingMode mode, long index, unsigned exp = 1);

  const RingMode& mode() const { return mode_; }
  const TermMap& terms() const { return terms_; }

  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  // Total degree; -1 for the zero polynomial.
  long degree() const;
  bool isHomogeneous(long* degreeOut = nullptr) const;
  Rational coeff(const Monomial& m) const;
  Rational constantTerm() const { return coeff(Monomial::one()); }
  // Degree-d homogeneous component.
  Poly homogeneousPart(long d) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly times(const Rational& c) const;
  Poly pow(unsigned e) const;
  bool operator==(const Poly& o) const { return mode_ == o.mode_ && terms_ == o.terms_; }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  // a_i -> a_{f(i)} on every variable occurrence (result re-canonicalized).
  Poly mapIndices(const std::function<long(long)>& f) const;
  // a_i -> image(i), an arbitrary polynomial substitution.
  Poly substitute(RingMode outMode, const std::function<Poly(long)>& image) const;

  // Infinite -> Cyclic(n) reduction a_{i+kn} -> a_i.
  Poly forgetTo(int n) const;
  // All variables to zero: the constant term as a polynomial of the same mode.
  Poly specializeZero() const;

  // Exact division; raises not_divisible (message carries the remainder) or
  // divide_by_zero.
  Poly divExact(const Poly& divisor) const;

  // Smallest / largest variable index appearing (nullopt-style: returns
  // false when the poly is constant).
  bool indexRange(long& lo, long& hi) const;

  std::string str() const;                      // canonical text form
  nlohmann::json toJson() const;
  static Poly fromJson(const nlohmann::json& j);

private:
  void addTerm(const Monomial& m, const Rational& c);
  Poly canonicalized(RingMode mode) const;  // re-reduce indices into mode

  RingMode mode_;
  TermMap terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p.times(c); }

/*=========================== small utilities ==========================*/

// Elementary symmetric polynomial e_k of an explicit list of polynomials.
Poly elemSym(const std::vector<Poly>& xs, long k, RingMode mode);
// Complete homogeneous symmetric polynomial h_k of an explicit list.
Poly complSym(const std::vector<Poly>& xs, long k, RingMode mode);

// Text form "a_3", "a_-2^4" used by Poly::str and the table printers.
std::string varStr(long index, unsigned exp);

}  // namespace affschur
