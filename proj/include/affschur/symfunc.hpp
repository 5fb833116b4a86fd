#pragma once
// Classical symmetric function engine over an exact coefficient ring.
//
// Elements are stored in the Schur basis as maps Partition -> Poly; all
// transition matrices (characters, Kostka and inverses) are computed once per
// degree with exact rational arithmetic and cached behind a mutex.

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "affschur/partition.hpp"
#include "affschur/poly.hpp"

namespace affschur {

/*=========================== transition data ==========================*/

using RatMatrix = std::vector<std::vector<Rational>>;

// Exact Gaussian-elimination inverse; raises inconsistent if singular.
RatMatrix matInverse(const RatMatrix& m);

class SymTables {
public:
  static SymTables& inst();

  // Partitions of d in canonical order + index lookup.
  const std::vector<Partition>& parts(long d);
  long indexOf(const Partition& la);  // within parts(|la|)

  // chi(d)[i][j] = irreducible character chi^{la_i}(rho_j).
  const RatMatrix& charTable(long d);
  // kostka(d)[i][j]: s_{la_i} = sum_j K[i][j] m_{mu_j}; equivalently
  // h_{mu_j} = sum_i K[i][j] s_{la_i}.
  const RatMatrix& kostka(long d);
  const RatMatrix& kostkaInv(long d);

  // Horizontal-strip (Pieri) expansion of s_la * h_r.
  std::vector<Partition> pieriH(const Partition& la, long r);

private:
  struct DegreeData {
    std::vector<Partition> parts;
    std::map<Partition, long> index;
    RatMatrix chi, kostka, kostkaInv;
  };
  const DegreeData& degree(long d);
  std::mutex mtx_;
  std::map<long, DegreeData> cache_;
  std::map<std::pair<Partition, Partition>, Rational> chiMemo_;
  Rational chiRec(const Partition& la, const Partition& rho);
};

/*============================== SchurVec ==============================*/

// Finite Q[a]-linear combination of Schur basis elements.  The same type
// serves the primal alphabet (coefficients in the infinite ring) and the
// dual y-alphabet (any mode); products are classical Littlewood-Richardson.
class SchurVec {
public:
  explicit SchurVec(RingMode mode = RingMode::infinite()) : mode_(mode) {}
  static SchurVec zero(RingMode mode) { return SchurVec(mode); }
  static SchurVec unit(RingMode mode) { return basisElt(mode, Partition()); }
  static SchurVec basisElt(RingMode mode, const Partition& la, const Poly& c);
  static SchurVec basisElt(RingMode mode, const Partition& la);

  const RingMode& mode() const { return mode_; }
  const std::map<Partition, Poly>& coeffs() const { return c_; }
  Poly coeff(const Partition& la) const;
  bool isZero() const { return c_.empty(); }
  // Largest |la| in the support (-1 if zero).
  long topDegree() const;

  SchurVec operator+(const SchurVec& o) const;
  SchurVec operator-(const SchurVec& o) const;
  SchurVec operator-() const;
  SchurVec scale(const Poly& f) const;
  SchurVec scale(const Rational& r) const;
  // Littlewood-Richardson product (via the complete-homogeneous route).
  SchurVec operator*(const SchurVec& o) const;
  SchurVec& operator+=(const SchurVec& o) { return *this = *this + o; }
  SchurVec& operator-=(const SchurVec& o) { return *this = *this - o; }
  bool operator==(const SchurVec& o) const { return mode_ == o.mode_ && c_ == o.c_; }

  // Drop all components with |la| > maxSize.
  SchurVec truncate(long maxSize) const;
  // Apply a map to every coefficient (e.g. forget, index shifts).
  SchurVec mapCoeffs(RingMode outMode, const std::function<Poly(const Poly&)>& f) const;

  // Coordinates in other classical bases (exact, per-degree transforms).
  std::map<Partition, Poly> toM() const;    // monomial coordinates
  std::map<Partition, Poly> toP() const;    // power-sum coordinates
  std::map<Partition, Poly> toH() const;    // complete homogeneous coordinates
  static SchurVec fromM(RingMode mode, const std::map<Partition, Poly>& coords);
  static SchurVec fromP(RingMode mode, const std::map<Partition, Poly>& coords);
  static SchurVec fromH(RingMode mode, const std::map<Partition, Poly>& coords);

  void add(const Partition& la, const Poly& f);  // in-place accumulate

private:
  RingMode mode_;
  std::map<Partition, Poly> c_;
};

// <s_la , s_mu> = delta: diagonal pairing of two Schur expansions.
Poly schurPairing(const SchurVec& f, const SchurVec& g);

// Coproduct with both legs in the Schur basis (classical Hopf structure,
// computed through the power-sum primitives).
std::map<std::pair<Partition, Partition>, Poly> schurCoproduct(const SchurVec& f);

}  // namespace affschur
