#pragma once

// Double symmetric functions: the Hopf algebra of symmetric functions in x
// with deformation parameters a_i, its completed dual ring in variables y,
// the bases of both rings, transition matrices between them, the pairing,
// and the level-n quotient ring.
//
// Internal representation: primal elements are stored in the formal Schur
// basis of the difference alphabet (SchurVec with Q[a] coefficients); dual
// elements are stored in the plain Schur basis of y with an explicit degree
// cutoff.

#include <map>
#include <string>
#include <utility>

#include "affschur/symfunc.hpp"

namespace affschur {

/*============================ domain types ============================*/

// Element of the primal ring. The wrapped SchurVec holds coordinates in the
// canonical internal basis (formal Schur functions of the difference
// alphabet); all named bases are reached through conversions.
struct SymFuncPrimal {
  SchurVec v;

  explicit SymFuncPrimal(RingMode mode = RingMode::infinite()) : v(mode) {}
  explicit SymFuncPrimal(SchurVec sv) : v(std::move(sv)) {}

  RingMode mode() const { return v.mode(); }
  bool isZero() const { return v.isZero(); }
  long degree() const { return v.topDegree(); }

  SymFuncPrimal operator+(const SymFuncPrimal& o) const { return SymFuncPrimal(v + o.v); }
  SymFuncPrimal operator-(const SymFuncPrimal& o) const { return SymFuncPrimal(v - o.v); }
  SymFuncPrimal operator-() const { return SymFuncPrimal(-v); }
  SymFuncPrimal operator*(const SymFuncPrimal& o) const { return SymFuncPrimal(v * o.v); }
  SymFuncPrimal scale(const Poly& f) const { return SymFuncPrimal(v.scale(f)); }
  SymFuncPrimal scale(const Rational& x) const { return SymFuncPrimal(v.scale(x)); }
  bool operator==(const SymFuncPrimal& o) const { return v == o.v; }
  bool operator!=(const SymFuncPrimal& o) const { return !(*this == o); }
};

// Element of the completed dual ring, truncated beyond total degree
// `cutoff`. Binary operations propagate the minimum cutoff of the operands.
struct SymFuncDual {
  long cutoff = 0;
  SchurVec v;

  explicit SymFuncDual(long D, RingMode mode = RingMode::infinite())
      : cutoff(D), v(mode) {}
  SymFuncDual(long D, SchurVec sv) : cutoff(D), v(std::move(sv)) {
    v = v.truncate(cutoff);
  }

  RingMode mode() const { return v.mode(); }
  bool isZero() const { return v.isZero(); }

  SymFuncDual operator+(const SymFuncDual& o) const;
  SymFuncDual operator-(const SymFuncDual& o) const;
  SymFuncDual operator*(const SymFuncDual& o) const;
  SymFuncDual scale(const Poly& f) const { return SymFuncDual(cutoff, v.scale(f)); }
  bool operator==(const SymFuncDual& o) const {
    return cutoff == o.cutoff && v == o.v;
  }
};

// Rectangular family of expansion coefficients: rows of `rowBasis` expanded
// over `colBasis`, entries indexed by (row partition, column partition).
// Absent entries are zero.
struct TransitionMatrix {
  std::string rowBasis, colBasis;
  long degreeBound = 0;
  RingMode mode = RingMode::infinite();
  std::map<std::pair<Partition, Partition>, Poly> entries;

  Poly entry(const Partition& row, const Partition& col) const {
    auto it = entries.find({row, col});
    return it == entries.end() ? Poly::zero(mode) : it->second;
  }
};

/*========================== building blocks ==========================*/

// Shifted complete homogeneous function of the difference alphabet: the
// image of h_m under the k-th power of the parameter-shift automorphism,
// expanded in the internal basis. k may be negative. h with m < 0 is zero,
// m == 0 gives 1.
SchurVec hShiftedX(long m, long k);

// Power of the shift automorphism on a primal-ring element: parameter
// indices move up by k and the generators transform accordingly. k may be
// negative; tauPrimal(tauPrimal(f, k), -k) == f.
SchurVec tauPrimal(const SchurVec& f, long k);

// Row element of the dual h-family with all parameter indices shifted up by
// `shift`, expanded in the plain Schur basis of y through degree D.
SchurVec hHatShifted(long k, long shift, long D);

/*============================ named bases ============================*/

enum class PrimalBasis {
  pX,       // products of the primitive power sums of the difference alphabet
  sX,       // formal Schur functions of the difference alphabet
  hDouble,  // double complete homogeneous functions (products of rows)
  sDouble,  // double Schur functions (determinantal formula)
  mTilde,   // deformed power sum family (products of rows)
  mDouble,  // double monomial functions (dual to the dual h-family)
  mX,       // classical monomial functions of the difference alphabet
};

enum class DualBasis {
  hHat,  // dual h-family (products of rows)
  sHat,  // dual Schur family (determinantal formula)
  hY,    // plain complete homogeneous functions of y
  pY,    // plain power sums of y
};

SymFuncPrimal basisElement(PrimalBasis basis, const Partition& la);

// Requires D >= |la| (CutoffTooSmall otherwise).
SymFuncDual dualBasisElement(DualBasis basis, const Partition& la, long D);

/*========================= pairing, coproduct =========================*/

// Q[a]-bilinear pairing between the primal and dual rings; diagonal on the
// two internal Schur bases. Requires deg(f) <= g.cutoff.
Poly pairing(const SymFuncPrimal& f, const SymFuncDual& g);

// Coproduct of a primal element, computed through the primitive power-sum
// generators. Keys are (left tensor factor, right tensor factor) in the
// internal basis; values are Q[a] coefficients.
std::map<std::pair<Partition, Partition>, Poly> coproductPrimal(const SymFuncPrimal& f);

/*========================= transition matrices ========================*/

// Expansion of the double monomial functions over the classical monomial
// functions of the difference alphabet, for all row/column partitions of
// size <= maxSize. Unitriangular: diagonal 1, entries vanish unless
// |col| <= |row|. Cached; returned by value for thread safety.
TransitionMatrix matrixM(long maxSize);

// Coordinates of f in the double monomial basis (exact and finite).
// Requires D >= deg(f).
std::map<Partition, Poly> monomialExpand(const SymFuncPrimal& f, long D);

// Expansion of every double Schur function of size <= maxSize over the
// double monomial basis.
TransitionMatrix equivariantKostka(long maxSize);

// Survey of support/vanishing patterns of matrixM(maxSize) against the
// expected containment pattern; returns a human-readable report and never
// throws on pattern violations.
std::string mConjectureReport(long maxSize);

/*========================== level-n quotient ==========================*/

// Image of f in the level-n quotient ring: double monomial coordinates
// restricted to partitions with all parts < n, coefficients pushed to the
// cyclic parameter ring.
std::map<Partition, Poly> quotientProject(const SymFuncPrimal& f, long n);

// Structure constant of the dual-ring coproduct on the one-row h-family in
// the level-n setting: the coefficient of the one-row double monomial m_(i)
// in the product m_(r) * m_(l). Requires n >= 2 and 0 <= i, r, l <= n-1.
// The result involves only parameters a_{2-n}, ..., a_0, a_1.
Poly productCoeffC(long i, long r, long l, long n);

}  // namespace affschur
