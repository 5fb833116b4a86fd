#include "affschur/doublesym.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <vector>

namespace affschur {

namespace {

const RingMode kInf = RingMode::infinite();

Poly onePoly() { return Poly::constant(kInf, 1); }

SchurVec unitVec() { return SchurVec::basisElt(kInf, Partition()); }

// Parameter variables a_start, a_{start-1}, ..., a_{start-count+1}.
std::vector<Poly> paramRun(long start, long count) {
  std::vector<Poly> vars;
  vars.reserve(count);
  for (long t = 0; t < count; ++t) vars.push_back(Poly::var(kInf, start - t));
  return vars;
}

void addCoord(std::map<Partition, Poly>& m, const Partition& key, const Poly& val) {
  if (val.isZero()) return;
  auto [it, fresh] = m.try_emplace(key, val);
  if (!fresh) {
    it->second = it->second + val;
    if (it->second.isZero()) m.erase(it);
  }
}

// Signed sum over permutations of the rows of a square matrix of ring
// elements (Leibniz determinant). Entries known to be zero are nullptr.
SchurVec leibnizDet(const std::vector<std::vector<const SchurVec*>>& mat, long truncAt) {
  long L = static_cast<long>(mat.size());
  SchurVec det(kInf);
  std::vector<long> perm(L);
  for (long i = 0; i < L; ++i) perm[i] = i;
  do {
    bool zero = false;
    for (long i = 0; i < L && !zero; ++i)
      if (mat[i][perm[i]] == nullptr) zero = true;
    if (zero) continue;
    long inv = 0;
    for (long i = 0; i < L; ++i)
      for (long j = i + 1; j < L; ++j)
        if (perm[i] > perm[j]) ++inv;
    SchurVec term = *mat[0][perm[0]];
    for (long i = 1; i < L; ++i) {
      term = term * *mat[i][perm[i]];
      if (truncAt >= 0) term = term.truncate(truncAt);
    }
    det = (inv % 2 == 0) ? det + term : det - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

/*========================== building blocks ==========================*/

SchurVec hShiftedX(long m, long k) {
  if (m < 0) return SchurVec(kInf);
  if (m == 0) return unitVec();
  std::map<Partition, Poly> hCoords;
  if (k >= 0) {
    std::vector<Poly> vars = paramRun(k, k);  // a_k, ..., a_1
    for (long j = 0; j <= m; ++j) {
      Poly c = complSym(vars, j, kInf);
      addCoord(hCoords, m - j > 0 ? Partition({m - j}) : Partition(), c);
    }
  } else {
    long t = -k;
    std::vector<Poly> vars = paramRun(0, t);  // a_0, ..., a_{1-t}
    for (long j = 0; j <= std::min(m, t); ++j) {
      Poly c = elemSym(vars, j, kInf);
      if (j % 2 == 1) c = -c;
      addCoord(hCoords, m - j > 0 ? Partition({m - j}) : Partition(), c);
    }
  }
  return SchurVec::fromH(kInf, hCoords);
}

SchurVec tauPrimal(const SchurVec& f, long k) {
  RingMode mode = f.mode();
  std::map<Partition, Poly> out;
  for (const auto& [rho, c] : f.toP()) {
    // Shift the parameter indices of the coefficient itself.
    Poly carried = c.mapIndices([k](long i) { return i + k; });
    // Each power-sum generator p_r picks up the constant sum of r-th powers
    // of the parameters swept over by the shift.
    std::map<Partition, Poly> acc{{Partition(), carried}};
    for (long r : rho.parts()) {
      Poly cr = Poly::zero(mode);
      if (k >= 0)
        for (long t = 1; t <= k; ++t) cr = cr + Poly::var(mode, t).pow(static_cast<unsigned>(r));
      else
        for (long t = 1 + k; t <= 0; ++t) cr = cr - Poly::var(mode, t).pow(static_cast<unsigned>(r));
      std::map<Partition, Poly> next;
      for (const auto& [kappa, w] : acc) {
        std::vector<long> plus = kappa.parts();
        plus.push_back(r);
        addCoord(next, Partition(plus), w);
        if (!cr.isZero()) addCoord(next, kappa, w * cr);
      }
      acc = std::move(next);
    }
    for (const auto& [kappa, w] : acc) addCoord(out, kappa, w);
  }
  return SchurVec::fromP(mode, out);
}

SchurVec hHatShifted(long k, long shift, long D) {
  if (k < 0) return SchurVec(kInf);
  if (k == 0) return unitVec();
  SchurVec out(kInf);
  std::vector<Poly> vars = paramRun(shift, k);  // a_shift, ..., a_{1-k+shift}
  Poly ma1 = -Poly::var(kInf, 1 + shift);
  Poly qpow = onePoly();
  for (long q = 0; k + q <= D; ++q) {
    for (long p = 0; k + p + q <= D; ++p) {
      Poly hp = complSym(vars, p, kInf);
      if (hp.isZero()) continue;
      std::vector<long> parts{k + p};
      for (long t = 0; t < q; ++t) parts.push_back(1);
      out.add(Partition(parts), qpow * hp);
    }
    qpow = qpow * ma1;
  }
  return out;
}

/*============================ named bases ============================*/

namespace {

SchurVec mTildeRow(long r) {
  if (r == 0) return unitVec();
  std::vector<Poly> vars = paramRun(1, r);  // a_1, a_0, ..., a_{2-r}
  std::map<Partition, Poly> pCoords;
  for (long j = 1; j <= r; ++j) {
    Poly c = elemSym(vars, r - j, kInf);
    if ((r - j) % 2 == 1) c = -c;
    addCoord(pCoords, Partition({j}), c);
  }
  return SchurVec::fromP(kInf, pCoords);
}

SchurVec sDoubleVec(const Partition& la) {
  long L = la.length();
  if (L == 0) return unitVec();
  std::vector<std::vector<SchurVec>> store(L);
  std::vector<std::vector<const SchurVec*>> mat(L, std::vector<const SchurVec*>(L, nullptr));
  for (long i = 0; i < L; ++i) {
    store[i].reserve(L);
    for (long j = 0; j < L; ++j) {
      long m = la.part(i + 1) - (i + 1) + (j + 1);
      store[i].push_back(hShiftedX(m, (j + 1) - m));
      if (m >= 0) mat[i][j] = &store[i][j];
    }
  }
  return leibnizDet(mat, -1);
}

}  // namespace

SymFuncPrimal basisElement(PrimalBasis basis, const Partition& la) {
  switch (basis) {
    case PrimalBasis::pX:
      return SymFuncPrimal(SchurVec::fromP(kInf, {{la, onePoly()}}));
    case PrimalBasis::sX:
      return SymFuncPrimal(SchurVec::basisElt(kInf, la));
    case PrimalBasis::mX:
      return SymFuncPrimal(SchurVec::fromM(kInf, {{la, onePoly()}}));
    case PrimalBasis::hDouble: {
      SchurVec acc = unitVec();
      for (long r : la.parts()) acc = acc * hShiftedX(r, 1 - r);
      return SymFuncPrimal(acc);
    }
    case PrimalBasis::sDouble:
      return SymFuncPrimal(sDoubleVec(la));
    case PrimalBasis::mTilde: {
      SchurVec acc = unitVec();
      for (long r : la.parts()) acc = acc * mTildeRow(r);
      return SymFuncPrimal(acc);
    }
    case PrimalBasis::mDouble: {
      if (la.empty()) return SymFuncPrimal(unitVec());
      TransitionMatrix M = matrixM(la.size());
      std::map<Partition, Poly> mCoords;
      for (const auto& [key, c] : M.entries)
        if (key.first == la) addCoord(mCoords, key.second, c);
      return SymFuncPrimal(SchurVec::fromM(kInf, mCoords));
    }
  }
  fail(Errc::internal, "basisElement: unknown basis");
}

SymFuncDual dualBasisElement(DualBasis basis, const Partition& la, long D) {
  if (D < la.size())
    fail(Errc::cutoff_too_small, "dualBasisElement: cutoff " + std::to_string(D) +
                                     " < degree " + std::to_string(la.size()));
  switch (basis) {
    case DualBasis::hY:
      return SymFuncDual(D, SchurVec::fromH(kInf, {{la, onePoly()}}));
    case DualBasis::pY:
      return SymFuncDual(D, SchurVec::fromP(kInf, {{la, onePoly()}}));
    case DualBasis::hHat: {
      SchurVec acc = unitVec();
      for (long r : la.parts()) acc = (acc * hHatShifted(r, 0, D)).truncate(D);
      return SymFuncDual(D, acc);
    }
    case DualBasis::sHat: {
      long L = la.length();
      if (L == 0) return SymFuncDual(D, unitVec());
      std::vector<std::vector<SchurVec>> store(L);
      std::vector<std::vector<const SchurVec*>> mat(L, std::vector<const SchurVec*>(L, nullptr));
      for (long i = 0; i < L; ++i) {
        store[i].reserve(L);
        for (long j = 0; j < L; ++j) {
          long m = la.part(i + 1) - (i + 1) + (j + 1);
          store[i].push_back(hHatShifted(m, j, D));
          if (m >= 0) mat[i][j] = &store[i][j];
        }
      }
      return SymFuncDual(D, leibnizDet(mat, D));
    }
  }
  fail(Errc::internal, "dualBasisElement: unknown basis");
}

/*========================= pairing, coproduct =========================*/

Poly pairing(const SymFuncPrimal& f, const SymFuncDual& g) {
  if (!f.isZero() && f.degree() > g.cutoff)
    fail(Errc::cutoff_too_small, "pairing: primal degree " + std::to_string(f.degree()) +
                                     " exceeds dual cutoff " + std::to_string(g.cutoff));
  return schurPairing(f.v, g.v);
}

std::map<std::pair<Partition, Partition>, Poly> coproductPrimal(const SymFuncPrimal& f) {
  return schurCoproduct(f.v);
}

SymFuncDual SymFuncDual::operator+(const SymFuncDual& o) const {
  long D = std::min(cutoff, o.cutoff);
  return SymFuncDual(D, v.truncate(D) + o.v.truncate(D));
}

SymFuncDual SymFuncDual::operator-(const SymFuncDual& o) const {
  long D = std::min(cutoff, o.cutoff);
  return SymFuncDual(D, v.truncate(D) - o.v.truncate(D));
}

SymFuncDual SymFuncDual::operator*(const SymFuncDual& o) const {
  long D = std::min(cutoff, o.cutoff);
  return SymFuncDual(D, (v * o.v).truncate(D));
}

/*========================= transition matrices ========================*/

namespace {

using PolyMatrix = std::vector<std::vector<Poly>>;

PolyMatrix polyMatMul(const PolyMatrix& A, const PolyMatrix& B) {
  size_t N = A.size();
  PolyMatrix C(N, std::vector<Poly>(N, Poly::zero(kInf)));
  for (size_t i = 0; i < N; ++i)
    for (size_t k = 0; k < N; ++k) {
      if (A[i][k].isZero()) continue;
      for (size_t j = 0; j < N; ++j)
        if (!B[k][j].isZero()) C[i][j] = C[i][j] + A[i][k] * B[k][j];
    }
  return C;
}

bool polyMatIsZero(const PolyMatrix& A) {
  for (const auto& row : A)
    for (const Poly& e : row)
      if (!e.isZero()) return false;
  return true;
}

TransitionMatrix computeMatrixM(long maxSize) {
  std::vector<Partition> P = partitionsUpTo(maxSize);
  size_t N = P.size();
  std::map<Partition, size_t> idx;
  for (size_t i = 0; i < N; ++i) idx[P[i]] = i;

  // T expresses each dual h-family element over the plain h-basis of y;
  // it is block-triangular by degree with identity diagonal blocks.
  PolyMatrix T(N, std::vector<Poly>(N, Poly::zero(kInf)));
  for (size_t nu = 0; nu < N; ++nu) {
    SymFuncDual hh = dualBasisElement(DualBasis::hHat, P[nu], maxSize);
    for (const auto& [kappa, c] : hh.v.toH()) T[idx.at(kappa)][nu] = c;
  }

  // Invert by the geometric series of the strictly degree-raising part.
  PolyMatrix Nm = T;
  for (size_t i = 0; i < N; ++i) Nm[i][i] = Nm[i][i] - onePoly();
  PolyMatrix Minv(N, std::vector<Poly>(N, Poly::zero(kInf)));
  for (size_t i = 0; i < N; ++i) Minv[i][i] = onePoly();
  PolyMatrix term = Minv;
  for (long s = 1; s <= maxSize + 1; ++s) {
    term = polyMatMul(term, Nm);
    if (polyMatIsZero(term)) break;
    for (size_t i = 0; i < N; ++i)
      for (size_t j = 0; j < N; ++j)
        Minv[i][j] = (s % 2 == 0) ? Minv[i][j] + term[i][j] : Minv[i][j] - term[i][j];
  }

  TransitionMatrix M;
  M.rowBasis = "mDouble";
  M.colBasis = "mX";
  M.degreeBound = maxSize;
  M.mode = kInf;
  for (size_t la = 0; la < N; ++la)
    for (size_t mu = 0; mu < N; ++mu) {
      const Poly& e = Minv[la][mu];
      if (la == mu && e != onePoly()) fail(Errc::internal, "matrixM: diagonal not 1");
      if (P[mu].size() > P[la].size() && !e.isZero())
        fail(Errc::internal, "matrixM: degree triangularity violated");
      if (!e.isZero()) M.entries.emplace(std::make_pair(P[la], P[mu]), e);
    }
  return M;
}

}  // namespace

TransitionMatrix matrixM(long maxSize) {
  if (maxSize < 1) fail(Errc::usage, "matrixM: maxSize must be >= 1");
  static std::mutex mtx;
  static std::map<long, TransitionMatrix> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(maxSize);
  if (it == cache.end()) it = cache.emplace(maxSize, computeMatrixM(maxSize)).first;
  return it->second;
}

std::map<Partition, Poly> monomialExpand(const SymFuncPrimal& f, long D) {
  std::map<Partition, Poly> out;
  if (f.isZero()) return out;
  long d = f.degree();
  if (D < d)
    fail(Errc::cutoff_too_small, "monomialExpand: cutoff " + std::to_string(D) +
                                     " < degree " + std::to_string(d));
  for (const Partition& la : partitionsUpTo(d)) {
    SymFuncDual hh = dualBasisElement(DualBasis::hHat, la, d);
    Poly c = schurPairing(f.v, hh.v);
    if (!c.isZero()) out.emplace(la, c);
  }
  return out;
}

TransitionMatrix equivariantKostka(long maxSize) {
  TransitionMatrix K;
  K.rowBasis = "sDouble";
  K.colBasis = "mDouble";
  K.degreeBound = maxSize;
  K.mode = kInf;
  for (const Partition& la : partitionsUpTo(maxSize)) {
    for (auto& [mu, c] : monomialExpand(basisElement(PrimalBasis::sDouble, la), maxSize))
      K.entries.emplace(std::make_pair(la, mu), c);
  }
  return K;
}

std::string mConjectureReport(long maxSize) {
  TransitionMatrix M = matrixM(maxSize);
  long nonzeroOutside = 0, zeroInside = 0, checked = 0;
  std::vector<Partition> P = partitionsUpTo(maxSize);
  for (const Partition& la : P)
    for (const Partition& mu : P) {
      ++checked;
      Poly e = M.entry(la, mu);
      bool contained = la.contains(mu);
      if (!e.isZero() && !contained) ++nonzeroOutside;
      if (e.isZero() && contained && !mu.empty()) ++zeroInside;
    }
  std::ostringstream os;
  os << "double monomial transition support survey through degree " << maxSize
     << ": entries checked " << checked << ", nonzero outside containment "
     << nonzeroOutside << ", vanishing at contained nonempty columns " << zeroInside
     << (nonzeroOutside == 0 && zeroInside == 0 ? "; pattern holds" : "; pattern FAILS");
  return os.str();
}

/*========================== level-n quotient ==========================*/

std::map<Partition, Poly> quotientProject(const SymFuncPrimal& f, long n) {
  if (n < 2) fail(Errc::usage, "quotientProject: need n >= 2");
  std::map<Partition, Poly> out;
  if (f.isZero()) return out;
  for (const auto& [mu, c] : monomialExpand(f, f.degree())) {
    if (mu.maxPart() >= n) continue;
    Poly proj = c.forgetTo(static_cast<int>(n));
    if (!proj.isZero()) out.emplace(mu, proj);
  }
  return out;
}

Poly productCoeffC(long i, long r, long l, long n) {
  if (n < 2) fail(Errc::usage, "productCoeffC: need n >= 2");
  for (long v : {i, r, l})
    if (v < 0 || v > n - 1)
      fail(Errc::usage, "productCoeffC: indices must lie in [0, n-1]");
  SymFuncPrimal prod(mTildeRow(r) * mTildeRow(l));
  if (prod.isZero()) return Poly::zero(kInf);
  auto coords = monomialExpand(prod, prod.degree());
  Partition target = i == 0 ? Partition() : Partition(std::vector<long>{i});
  auto it = coords.find(target);
  return it == coords.end() ? Poly::zero(kInf) : it->second;
}

}  // namespace affschur
