#pragma once
// Localization of double symmetric functions at permutation-labeled points,
// the divisibility conditions those localized value tables must satisfy,
// the double monomial expansions attached to arbitrary affine permutations
// together with their dual family, and branching between periods.
//
// Everything here composes the two computational engines: the symmetric
// function rings (doublesym) supply values, and the centralizer basis
// (peterson) supplies coefficients; the cross-checks between the two sides
// are what the test suites exercise.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "affschur/doublesym.hpp"
#include "affschur/nilhecke.hpp"
#include "affschur/partition.hpp"
#include "affschur/perm.hpp"
#include "affschur/peterson.hpp"
#include "affschur/poly.hpp"

namespace affschur {

// Push a polynomial into the period-n parameter ring by canonicalizing all
// variable indices modulo n.  Plain polynomials and any cyclic period that
// n divides are accepted; other periods raise mode_mismatch.
Poly foldToCyclic(const Poly& p, int n);

/*========================= localization maps =========================*/

// Value of f at w: each power sum of the difference alphabet evaluates to
// the finite multiset difference the permutation produces on the negative
// half-line,
//   p_r |-> sum_{m in wZ_{<=0} \ Z_{<=0}} a_{1-m}^r
//          - sum_{m in Z_{<=0} \ wZ_{<=0}} a_{1-m}^r,
// extended as a ring homomorphism through the p-basis expansion of f.
// Requires plain (non-cyclic) coefficients.
Poly epsilonInf(const SymFuncPrimal& f, const FinitePermZ& w);

// Period-n localization at an affine permutation.  Computed through the
// translation representative t_nu of the coset wS_n:
//   p_r |-> sum_{i=1}^n nu_i a_{1-i}^r
// with indices folded into the period; coefficients of f are folded the
// same way (cyclic coefficients must already have period n).  The value is
// constant on cosets wS_n by construction.
Poly epsilonGr(const SymFuncPrimal& f, const AffinePerm& w);

/*======================== localized functions ========================*/

enum class LocDomain { SZ, AffineN };

// A finite table of localized values.  In AffineN mode the `grassmannian`
// flag asserts that the underlying function is constant on cosets wS_n;
// lookups (and the checker) then identify points modulo the coset.
struct LocalizedFunction {
  LocDomain domainTag = LocDomain::SZ;
  int n = 0;  // period, AffineN mode only
  bool grassmannian = false;
  std::map<FinitePermZ, Poly> valuesInf;
  std::map<AffinePerm, Poly> valuesAff;
  std::string sourceDescription;
};

// Tabulate epsilonInf(f, .) / epsilonGr(f, .) over an explicit window.
LocalizedFunction tabulateInf(const SymFuncPrimal& f,
                              const std::vector<FinitePermZ>& window,
                              const std::string& description);
LocalizedFunction tabulateGr(const SymFuncPrimal& f,
                             const std::vector<AffinePerm>& window,
                             const std::string& description);

// Tabulate w |-> coefficient of A_v in the group-element expansion of w.
// This is the Schubert-basis localization attached to v; it is constant on
// cosets exactly when v is Grassmannian, and the flag is set accordingly.
LocalizedFunction tabulateXi(const AffinePerm& v,
                             const std::vector<AffinePerm>& window,
                             const std::string& description);

/*=========================== graph checks ===========================*/

struct GkmOptions {
  // Exponent bound d for the translation-difference divisibility checks in
  // AffineN mode (the conditions quantify over all d > 0; the checker stops
  // at the bound and reports it).
  long dBound = 3;
  // Also check the reflection-difference variant
  //   f((1 - t)^{d-1}(1 - s_{ij}) w) divisible by alpha_{ij}^d,
  // which is the form that applies to tables without coset invariance.
  bool flagsVariant = false;
};

struct GkmWitness {
  std::string condition;  // which condition failed
  std::string where;      // point and indices, human-readable
  Poly value;             // the combination that was tested
  Poly modulus;           // the required divisor
};

struct GkmReport {
  bool pass = true;
  long checked = 0;  // conditions evaluated
  long skipped = 0;  // conditions whose points fell outside the table
  long dBound = 0;
  std::string window;  // description of the table the check ran on
  std::vector<GkmWitness> witnesses;
  nlohmann::json toJson() const;
};

// Verify the divisibility and coset conditions on every point combination
// available inside the table.  SZ mode: g(s_{ij}w) - g(w) divisible by
// a_{1-j} - a_{1-i} for key pairs related by a left transposition, and
// equality on key pairs related by a sign-preserving right factor.
// AffineN mode: alternating binomial sums over translation chains
// t_{q alpha^vee_{ij}} w divisible by alpha_{ij}^d, the optional reflection
// variant, and value agreement on coset-equal keys.  Raises
// insufficient_data when not a single condition could be evaluated.
GkmReport gkmCheck(const LocalizedFunction& f, const GkmOptions& opts = {});

/*===================== double monomial expansions =====================*/

// Expansion of the symmetric function attached to an affine permutation w
// over the double monomial basis: the coefficient of m_mu(x||a) is the
// A_w-coefficient of the product j_{mu_1} j_{mu_2} ....  All coefficients
// are homogeneous of degree l(w) - |mu|, so the expansion is finite; for
// Grassmannian w it is row lambda(w) of the transition matrix and is
// unitriangular against lambda(w).
struct StanleyExpansion {
  int n = 0;
  AffinePerm w;
  std::map<Partition, Poly> coords;  // partitions with parts < n
  long lengthCutoff = 0;             // cutoff used for the factors
  long degreeCutoff = 0;             // |mu| bound actually enumerated
};

// L <= 0 picks the smallest cutoff that stabilizes the one-row factors;
// D < 0 enumerates the complete expansion (|mu| <= l(w)).
StanleyExpansion affineDoubleStanley(const AffinePerm& w, long L = 0, long D = -1);

// The expansion as a ring element with period-folded coefficients.
SymFuncPrimal stanleyAsPrimal(const StanleyExpansion& e);

/*=========================== dual family ===========================*/

// Coordinates of the dual basis element attached to lambda (parts < n) over
// the dual h-family: the unique solution of
//   sum_nu K[rho, nu] coords[nu] = delta_{rho, lambda}
// over partitions of size <= degreeCutoff with parts < n, where K is the
// equivariant transition matrix of period n.  The true object is an
// infinite series; truncation is exact degree by degree because rows of a
// given size never involve columns of larger size.
struct DualExpansion {
  int n = 0;
  Partition lambda;
  long degreeCutoff = 0;
  std::map<Partition, Poly> coords;
};

// Requires |lambda| <= D (cutoff_too_small) and lambda_1 < n
// (part_too_large).  L <= 0 picks the default factor cutoff.
DualExpansion kDoubleSchur(int n, const Partition& lambda, long D, long L = 0);

// The truncated series as an element of the completed dual ring.
SymFuncDual kDoubleSchurAsDual(const DualExpansion& e);

/*============================ branching ============================*/

// Branching data from period m (0 = the inverse limit) down to period n.
// `reduced` is the source transition matrix with coefficients folded into
// period n and columns restricted to partitions with parts < n.  The two
// coefficient matrices express each source row nu over two different row
// families, both by exact unitriangular back-substitution with a full-row
// reproduction certificate:
//   - coeffs:      over the reduced matrix's own rows with parts < n
//                  (rows with nu_1 < n come out as identity rows);
//   - basisCoeffs: over the rows of the period-n transition matrix, i.e.
//                  the coordinates of the projected source function in the
//                  period-n expansion basis.
struct BranchMatrix {
  int n = 0;
  int m = 0;  // 0 encodes the inverse limit
  long maxSize = 0;
  TransitionMatrix reduced;
  TransitionMatrix coeffs;
  TransitionMatrix basisCoeffs;
  std::string note;
};

// Requires m == 0 or m a multiple of n with m/n >= 2 (usage otherwise).
// L <= 0 picks the default factor cutoff for the finite-period matrices.
BranchMatrix branchingCoeffs(int n, int m, long maxSize, long L = 0);

/*============================ pullbacks ============================*/

// Coefficients of the expansion of the function attached to x over the
// Grassmannian family: the lambda-coefficient is the A_x-coefficient of
// the centralizer basis element at lambda.  D < 0 enumerates all lambda
// with |lambda| <= l(x); L <= 0 picks a stabilizing cutoff per element.
std::map<Partition, Poly> pullbackExpansion(const AffinePerm& x, long L = 0,
                                            long D = -1);

}  // namespace affschur
