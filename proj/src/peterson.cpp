// Centralizer basis elements j_w: degreewise exact linear solving, products
// and their basis expansions, the transition matrix, and the coproduct
// structure constants on the one-row elements.
//
// The solve exploits one structural fact throughout: for linear f the
// element A_y f = (y.f) A_y + (lower) has *constant* coefficients on the
// lower (length l(y)-1) part, because a coefficient at A_z carries degree
// l(z) - l(y) + deg f = 0.  Commutation with the generators a_1..a_n
// therefore couples consecutive length levels of j_w through a rational
// matrix, and each level is one exact Gaussian elimination over Q, applied
// simultaneously to every monomial of the right-hand side.

#include "affschur/peterson.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace affschur {

namespace {

/*-------------------------- exact linear algebra --------------------------*/

// Solve M x = B (B holds several right-hand sides as columns) by one
// elimination pass.  The defining conditions of j_w make the solution
// unique, so every column must carry a pivot; a free column is reported as
// `internal` and a contradictory row as `inconsistent`.
std::vector<std::vector<Rational>> solveUnique(std::vector<std::vector<Rational>> M,
                                               std::vector<std::vector<Rational>> B,
                                               std::size_t cols, const char* what) {
  const std::size_t rows = M.size();
  const std::size_t nrhs = rows == 0 ? 0 : B[0].size();
  std::size_t pivRow = 0;
  std::vector<std::size_t> rowOfCol(cols, 0);
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t r = pivRow;
    while (r < rows && M[r][col] == 0) ++r;
    if (r == rows)
      fail(Errc::internal, std::string(what) + ": level system is underdetermined");
    std::swap(M[r], M[pivRow]);
    std::swap(B[r], B[pivRow]);
    const Rational piv = M[pivRow][col];
    for (std::size_t j = col; j < cols; ++j) M[pivRow][j] /= piv;
    for (std::size_t j = 0; j < nrhs; ++j) B[pivRow][j] /= piv;
    for (std::size_t rr = 0; rr < rows; ++rr) {
      if (rr == pivRow || M[rr][col] == 0) continue;
      const Rational f = M[rr][col];
      for (std::size_t j = col; j < cols; ++j) M[rr][j] -= f * M[pivRow][j];
      for (std::size_t j = 0; j < nrhs; ++j) B[rr][j] -= f * B[pivRow][j];
    }
    rowOfCol[col] = pivRow;
    ++pivRow;
  }
  for (std::size_t r = pivRow; r < rows; ++r)
    for (std::size_t j = 0; j < nrhs; ++j)
      if (B[r][j] != 0)
        fail(Errc::inconsistent, std::string(what) + ": level system has no solution");
  std::vector<std::vector<Rational>> X(cols);
  for (std::size_t col = 0; col < cols; ++col) X[col] = B[rowOfCol[col]];
  return X;
}

Poly monomialPoly(const RingMode& mode, const Monomial& m, const Rational& c) {
  Poly p = Poly::constant(mode, c);
  for (const auto& [idx, e] : m.factors()) p = p * Poly::var(mode, idx, e);
  return p;
}

long maxSupportLength(const NilHeckeElt& e) {
  long m = 0;
  for (const auto& [x, c] : e.terms()) m = std::max(m, x.length());
  return m;
}

NilHeckeElt truncateSupport(const NilHeckeElt& e, long maxLen) {
  NilHeckeElt out(e.n());
  for (const auto& [x, c] : e.terms())
    if (x.length() <= maxLen) out.add(x, c);
  return out;
}

/*------------------------------ result cache ------------------------------*/

// Stabilized elements are complete objects independent of the cutoff that
// produced them, so they are shared across calls (and threads).
using CacheKey = std::pair<int, std::vector<long>>;

std::map<CacheKey, JElement>& jCache() {
  static std::map<CacheKey, JElement> cache;
  return cache;
}

std::mutex& jCacheMutex() {
  static std::mutex m;
  return m;
}

// Products of special elements are complete whenever their factors are, so
// they are cached under the same regime as the basis elements themselves.
// The key carries the truncation length (-1 for the full product).
using ProductKey = std::tuple<int, std::vector<long>, long>;

std::map<ProductKey, NilHeckeElt>& jProductCache() {
  static std::map<ProductKey, NilHeckeElt> cache;
  return cache;
}

std::mutex& jProductCacheMutex() {
  static std::mutex m;
  return m;
}

}  // namespace

/*=============================== computeJ ===============================*/

JElement computeJ(const AffinePerm& w, long L) {
  const int n = w.n();
  if (!w.isGrassmannian())
    fail(Errc::not_grassmannian, "computeJ: " + w.str() + " is not Grassmannian");
  if (L < w.length())
    fail(Errc::usage, "computeJ: cutoff " + std::to_string(L) + " below the length of " + w.str());

  const CacheKey key{n, w.window()};
  {
    std::lock_guard<std::mutex> lock(jCacheMutex());
    auto it = jCache().find(key);
    if (it != jCache().end()) {
      // Mirror a fresh solve exactly.  Above l(w) the support has no level
      // gaps, so a fresh run errors out whenever nonzero coefficients sit at
      // L itself and stabilizes once two zero levels fit under the cutoff.
      const long maxLen = maxSupportLength(it->second.elt);
      bool partnersAtLead = false;
      for (const auto& [x, c] : it->second.elt.terms())
        if (x.length() == w.length() && !(x == w)) partnersAtLead = true;
      if (L == w.length() && !partnersAtLead)
        return JElement{w, NilHeckeElt::basis(w), L, false};
      if (L <= maxLen)
        fail(Errc::cutoff_too_small, "computeJ: nonzero coefficients at the cutoff length " +
                                         std::to_string(L));
      JElement out = it->second;
      out.lengthCutoff = L;
      out.stabilized = L >= maxLen + 2;
      return out;
    }
  }

  const RingMode mode = RingMode::cyclic(n);
  std::vector<std::vector<AffinePerm>> level(static_cast<std::size_t>(L) + 1);
  for (const AffinePerm& x : affineBallOfLength(n, L))
    level[static_cast<std::size_t>(x.length())].push_back(x);

  std::vector<Poly> gens;
  for (int m = 1; m <= n; ++m) gens.push_back(Poly::var(mode, m));

  std::map<AffinePerm, Poly> coeffOf;
  coeffOf.emplace(w, Poly::constant(mode, 1));

  long zeroStreak = 0;
  bool stabilized = false;
  bool topLevelNonzero = false;

  // The support starts at length l(w): the same-length terms (constant
  // coefficients) are unknowns of the very first level, with the pinned
  // leading coefficient feeding the right-hand side.
  for (long p = std::max<long>(1, w.length()); p <= L; ++p) {
    // Unknowns: the non-Grassmannian elements of length p (the Grassmannian
    // coefficients other than the leading one are pinned to zero).
    std::vector<AffinePerm> ys;
    for (const AffinePerm& y : level[static_cast<std::size_t>(p)])
      if (!y.isGrassmannian()) ys.push_back(y);

    // One equation per (element z of length p-1, generator a_m): comparing
    // coefficients of A_z in [j, a_m] = 0 gives
    //   sum_y Q[z][y] c_y = c_z (a_m - z.a_m)
    // with Q[z][y] the constant coefficient of A_z in A_y a_m.
    const std::vector<AffinePerm>& zs = level[static_cast<std::size_t>(p - 1)];
    std::map<AffinePerm, std::size_t> zIdx;
    for (std::size_t i = 0; i < zs.size(); ++i) zIdx.emplace(zs[i], i);
    const std::size_t rows = zs.size() * static_cast<std::size_t>(n);

    std::vector<std::vector<Rational>> M(rows, std::vector<Rational>(ys.size(), Rational(0)));
    for (std::size_t col = 0; col < ys.size(); ++col)
      for (int m = 1; m <= n; ++m) {
        NilHeckeElt sc = scalarCommute(ys[col], gens[static_cast<std::size_t>(m - 1)]);
        for (const auto& [z, e] : sc.terms()) {
          if (z.length() != p - 1) continue;
          if (!e.isConstant())
            fail(Errc::internal, "computeJ: non-constant down-coefficient");
          M[zIdx.at(z) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(m - 1)][col] = e.constantTerm();
        }
      }

    std::vector<Poly> rhs(rows, Poly::zero(mode));
    for (const auto& [z, cz] : coeffOf) {
      if (z.length() != p - 1) continue;
      for (int m = 1; m <= n; ++m) {
        const Poly& am = gens[static_cast<std::size_t>(m - 1)];
        rhs[zIdx.at(z) * static_cast<std::size_t>(n) + static_cast<std::size_t>(m - 1)] =
            cz * (am - actPerm(z, am));
      }
    }
    if (p == w.length()) {
      // The pinned coefficient 1 at A_w sits on this level: move its
      // down-contributions across.
      for (int m = 1; m <= n; ++m) {
        NilHeckeElt sc = scalarCommute(w, gens[static_cast<std::size_t>(m - 1)]);
        for (const auto& [z, e] : sc.terms()) {
          if (z.length() != p - 1) continue;
          std::size_t row = zIdx.at(z) * static_cast<std::size_t>(n) + static_cast<std::size_t>(m - 1);
          rhs[row] -= e;
        }
      }
    }

    // One elimination serves every monomial of the right-hand side at once.
    std::set<Monomial, MonomialDescending> monoSet;
    for (const Poly& r : rhs)
      for (const auto& [mono, c] : r.terms()) monoSet.insert(mono);
    const std::vector<Monomial> monos(monoSet.begin(), monoSet.end());

    std::vector<std::vector<Rational>> B(rows, std::vector<Rational>(monos.size(), Rational(0)));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t k = 0; k < monos.size(); ++k) B[r][k] = rhs[r].coeff(monos[k]);

    const std::vector<std::vector<Rational>> X = solveUnique(std::move(M), std::move(B),
                                                             ys.size(), "computeJ");

    bool anyNonzero = false;
    for (std::size_t col = 0; col < ys.size(); ++col) {
      Poly val = Poly::zero(mode);
      for (std::size_t k = 0; k < monos.size(); ++k)
        if (X[col][k] != 0) val += monomialPoly(mode, monos[k], X[col][k]);
      if (!val.isZero()) {
        coeffOf.emplace(ys[col], std::move(val));
        anyNonzero = true;
      }
    }

    // Once a whole level solves to zero every later one does too (its
    // right-hand side vanishes and the solution is unique); stopping after
    // two such levels matches the recorded stabilization contract.
    zeroStreak = anyNonzero ? 0 : zeroStreak + 1;
    if (p == L) topLevelNonzero = anyNonzero;
    if (zeroStreak >= 2) {
      stabilized = true;
      break;
    }
  }

  if (!stabilized && topLevelNonzero)
    fail(Errc::cutoff_too_small,
         "computeJ: nonzero coefficients at the cutoff length " + std::to_string(L));

  NilHeckeElt elt(n);
  for (const auto& [x, c] : coeffOf) elt.add(x, c);
  JElement result{w, elt, L, stabilized};

  if (stabilized) {
    std::lock_guard<std::mutex> lock(jCacheMutex());
    jCache().emplace(key, result);
  }
  return result;
}

JElement jSpecial(long r, int n, long L) {
  if (r < 1 || r > n - 1)
    fail(Errc::usage, "jSpecial: index must satisfy 1 <= r <= n-1");
  std::vector<long> word;
  for (long i = r - 1; i >= 0; --i) word.push_back(i);
  return computeJ(AffinePerm::fromWord(n, word), L);
}

/*========================= products & expansion =========================*/

NilHeckeElt jProduct(int n, const Partition& mu, long L, long maxLen) {
  if (mu.maxPart() >= n)
    fail(Errc::part_too_large, "jProduct: parts must be < " + std::to_string(n));
  if (maxLen < 0) maxLen = -1;

  const ProductKey key{n, mu.parts(), maxLen};
  {
    std::lock_guard<std::mutex> lock(jProductCacheMutex());
    auto it = jProductCache().find(key);
    if (it != jProductCache().end()) return it->second;
    // A full product serves any truncation of itself.
    it = jProductCache().find(ProductKey{n, mu.parts(), -1});
    if (it != jProductCache().end()) {
      NilHeckeElt cut = truncateSupport(it->second, maxLen);
      jProductCache().emplace(key, cut);
      return cut;
    }
  }

  // Factors commute (the centralizer is a commutative algebra), so the
  // one-row factor goes on the left: commuting its scalars across short
  // words is far cheaper than commuting across the accumulated product,
  // and it is what makes the level-wise truncation exact.
  NilHeckeElt prod = NilHeckeElt::basis(AffinePerm::identity(n));
  for (long r : mu.parts()) {
    JElement jr = jSpecial(r, n, L);
    if (!jr.stabilized)
      fail(Errc::cutoff_too_small, "jProduct: factor did not stabilize below the cutoff");
    prod = multiply(jr.elt, prod);
    if (maxLen >= 0) prod = truncateSupport(prod, maxLen);
  }

  {
    std::lock_guard<std::mutex> lock(jProductCacheMutex());
    jProductCache().emplace(key, prod);
  }
  return prod;
}

JProductExpansion jProductExpand(int n, const Partition& mu, long L) {
  NilHeckeElt prod = jProduct(n, mu, L);

  // Every Grassmannian element in the support corresponds to a partition
  // with parts < n; the dictionary inverts that correspondence.
  std::map<AffinePerm, Partition> lambdaOf;
  for (const Partition& lam : partitionsUpTo(maxSupportLength(prod), n - 1))
    lambdaOf.emplace(partitionToWAff(n, lam), lam);

  // Peel the minimal (length, window) Grassmannian term; subtracting its
  // j-element removes it for good (j has no other Grassmannian support), so
  // the Grassmannian support strictly shrinks and the loop terminates.
  NilHeckeElt residual = prod;
  std::map<Partition, Poly> coeffs;
  while (true) {
    const AffinePerm* best = nullptr;
    for (const auto& [x, cx] : residual.terms()) {
      if (!x.isGrassmannian()) continue;
      if (!best || x.length() < best->length() ||
          (x.length() == best->length() && x.window() < best->window()))
        best = &x;
    }
    if (!best) break;
    const AffinePerm x0 = *best;
    const Poly c0 = residual.coeff(x0);
    auto it = lambdaOf.find(x0);
    if (it == lambdaOf.end())
      fail(Errc::internal, "jProductExpand: Grassmannian term outside the dictionary");
    JElement jl = computeJ(x0, L);
    if (!jl.stabilized)
      fail(Errc::cutoff_too_small, "jProductExpand: basis element did not stabilize below the cutoff");
    residual = residual - jl.elt.scale(c0);
    coeffs.emplace(it->second, c0);
  }
  if (!residual.isZero())
    fail(Errc::internal, "jProductExpand: nonzero residual after peeling");
  return JProductExpansion{prod, std::move(coeffs)};
}

TransitionMatrix kostkaMatrixAff(int n, long maxSize, long L) {
  if (maxSize < 1) fail(Errc::usage, "kostkaMatrixAff: maxSize must be >= 1");
  TransitionMatrix K;
  K.rowBasis = "jBasis";
  K.colBasis = "jProduct";
  K.degreeBound = maxSize;
  K.mode = RingMode::cyclic(n);
  // The product lies in the span of the basis elements, each of which has
  // coefficient 1 at its own Grassmannian element and 0 at every other one,
  // so the expansion coefficients can be read off the product directly.
  const std::vector<Partition> lambdas = partitionsUpTo(maxSize, n - 1);
  for (const Partition& mu : lambdas) {
    const NilHeckeElt prod = jProduct(n, mu, L, maxSize);
    for (const Partition& lam : lambdas) {
      Poly c = prod.coeff(partitionToWAff(n, lam));
      if (!c.isZero()) K.entries.emplace(std::make_pair(lam, mu), std::move(c));
    }
  }
  return K;
}

/*========================= coproduct constants =========================*/

CoproductConstants coproductConstants(long i, int n, long maxIdx, long L) {
  if (i < 1 || i > n - 1)
    fail(Errc::usage, "coproductConstants: index must satisfy 1 <= i <= n-1");
  if (maxIdx < 0 || maxIdx > n - 1)
    fail(Errc::usage, "coproductConstants: maxIdx must satisfy 0 <= maxIdx <= n-1");
  const RingMode mode = RingMode::cyclic(n);

  // The one-row elements j_0 = 1, j_1, ..., j_{n-1}.
  std::vector<AffinePerm> rho;
  std::vector<NilHeckeElt> js;
  rho.push_back(AffinePerm::identity(n));
  js.push_back(NilHeckeElt::basis(rho[0]));
  for (long r = 1; r <= n - 1; ++r) {
    JElement jr = jSpecial(r, n, L);
    if (!jr.stabilized)
      fail(Errc::cutoff_too_small, "coproductConstants: j did not stabilize below the cutoff");
    rho.push_back(jr.w);
    js.push_back(jr.elt);
  }

  NilHeckeTensor delta = coproduct(js[static_cast<std::size_t>(i)]);

  // In the canonical form of j_r (x) j_l the only Grassmannian-Grassmannian
  // slot is (rho_r, rho_l) with coefficient 1: the sole Grassmannian term of
  // the right factor has constant coefficient 1, and constants do not spread
  // support when slid to the left slot.  So the constants can be read off
  // directly, and the residual certifies the expansion.
  std::vector<std::vector<Poly>> ctab(static_cast<std::size_t>(n),
                                      std::vector<Poly>(static_cast<std::size_t>(n), Poly::zero(mode)));
  NilHeckeTensor residual = delta;
  for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r)
    for (std::size_t l = 0; l < static_cast<std::size_t>(n); ++l) {
      Poly crl = delta.coeff(rho[r], rho[l]);
      ctab[r][l] = crl;
      if (!crl.isZero()) residual = residual - tensorOf(js[r], js[l]).scale(crl);
    }

  CoproductConstants out;
  out.specialClosure = residual.isZero();
  out.symmetric = true;
  for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r)
    for (std::size_t l = 0; l < static_cast<std::size_t>(n); ++l)
      if (!(ctab[r][l] == ctab[l][r])) out.symmetric = false;
  for (long r = 0; r <= maxIdx; ++r)
    for (long l = 0; l <= maxIdx; ++l) {
      const Poly& c = ctab[static_cast<std::size_t>(r)][static_cast<std::size_t>(l)];
      if (!c.isZero()) out.coeffs.emplace(std::make_pair(r, l), c);
    }
  return out;
}

}  // namespace affschur
