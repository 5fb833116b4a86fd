#pragma once
// The centralizer of the scalar polynomials inside the affine nilHecke
// algebra.  It is a free module over the scalars with one distinguished
// basis element j_w per Grassmannian affine permutation w, pinned down by
// three conditions: coefficient 1 at A_w, coefficient 0 at every other
// Grassmannian A_x, and commutation with every a_m.  This module computes
// those basis elements degreewise by exact linear solving, expands products
// of the one-row ("special") elements back over the basis, assembles the
// resulting transition matrix, and extracts the structure constants of the
// coproduct on the special elements.

#include <map>
#include <utility>

#include "affschur/doublesym.hpp"
#include "affschur/nilhecke.hpp"
#include "affschur/partition.hpp"
#include "affschur/perm.hpp"
#include "affschur/poly.hpp"

namespace affschur {

/*============================== JElement ==============================*/

// Centralizer basis element attached to a Grassmannian w, computed up to
// A-support length `lengthCutoff`.  Invariants (tested, not re-checked on
// every access): coeff(A_w) == 1, coeff(A_x) == 0 for other Grassmannian x,
// each coeff(A_x) homogeneous of degree l(x) - l(w), and the commutator with
// every a_m vanishes on all lengths below the cutoff.
struct JElement {
  AffinePerm w;
  NilHeckeElt elt;
  long lengthCutoff = 0;
  // True when two consecutive lengths beyond the support solved to all-zero
  // coefficients, i.e. the element is complete rather than truncated.
  bool stabilized = false;
};

// Solve for j_w degreewise up to length L.  Raises not_grassmannian / usage
// on bad inputs, cutoff_too_small when nonzero coefficients persist at
// length L, inconsistent when some level admits no solution, and internal
// when a level is underdetermined.  Stabilized results are cached.
JElement computeJ(const AffinePerm& w, long L);

// j at the one-row Grassmannian element s_{r-1} ... s_1 s_0 (1 <= r <= n-1).
JElement jSpecial(long r, int n, long L);

/*========================= products & expansion =======================*/

// Product j_{mu_1} j_{mu_2} ... of special elements (empty mu gives the
// identity).  Every factor must stabilize below L (cutoff_too_small
// otherwise), which makes the product itself complete; results are cached.
// With maxLen >= 0 the A-support is truncated to lengths <= maxLen after
// each factor.  This is exact for the returned levels: a term at length l
// of the right-hand accumulation only feeds lengths >= l when the next
// (short) factor is commuted across from the left.
NilHeckeElt jProduct(int n, const Partition& mu, long L, long maxLen = -1);

// Product j_{mu_1} j_{mu_2} ... together with its expansion over the basis:
// product == sum over lambda of coeffs[lambda] * j_lambda, where lambda runs
// over partitions with parts < n and j_lambda means j at the Grassmannian
// element of lambda.  The expansion is obtained by repeatedly peeling the
// minimal (length, window) Grassmannian term of the residual.
struct JProductExpansion {
  NilHeckeElt product;
  std::map<Partition, Poly> coeffs;
};
JProductExpansion jProductExpand(int n, const Partition& mu, long L);

// Transition matrix (rows lambda, columns mu) with entry the coefficient of
// j_lambda in j_{mu_1} j_{mu_2} ..., over all partitions with parts < n and
// size <= maxSize.  Same-size blocks are integer unitriangular; an entry is
// homogeneous of degree |lambda| - |mu|.  Because the product lies in the
// centralizer span, the entry is simply the product's coefficient at the
// Grassmannian element of lambda, so L only needs to stabilize the one-row
// factors (2(n-1) + 2 suffices), not cover the whole product support.
TransitionMatrix kostkaMatrixAff(int n, long maxSize, long L);

/*========================= coproduct constants ========================*/

// Expansion of the coproduct of a special element over pairs of special
// elements: Delta(j_i) = sum over (r, l) of coeffs[(r, l)] * j_r (x) j_l,
// with j_0 the identity.  `specialClosure` records that the expansion over
// special pairs left no residual; `symmetric` that coeffs[(r, l)] ==
// coeffs[(l, r)] throughout.  Only pairs with r, l <= maxIdx are returned
// in `coeffs` (zero coefficients are omitted).
struct CoproductConstants {
  std::map<std::pair<long, long>, Poly> coeffs;
  bool specialClosure = false;
  bool symmetric = false;
};
CoproductConstants coproductConstants(long i, int n, long maxIdx, long L);

}  // namespace affschur
