// Localization maps, divisibility checks on localized value tables, double
// monomial expansions of affine permutations, the dual family, branching
// between periods, and pullback coefficients.
//
// Two structural facts carry the whole file: localized values of power sums
// reduce to finite index sets (multiset differences on the negative
// half-line, or translation coset vectors), and every linear solve here is
// against a matrix that is unitriangular in the canonical partition order,
// so forward/back substitution is exact and division-free.

#include "affschur/schubert.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace affschur {

namespace {

void checkSamePeriod(long a, long b, const char* what) {
  if (a != b) fail(Errc::group_mismatch, std::string(what) + ": period mismatch");
}

}  // namespace

Poly foldToCyclic(const Poly& p, int n) {
  const RingMode out = RingMode::cyclic(n);
  if (p.mode() == out) return p;
  if (p.mode().isCyclic() && p.mode().n % n != 0)
    fail(Errc::mode_mismatch,
         "foldToCyclic: source period is not a multiple of the target period");
  return p.substitute(out, [&](long i) { return Poly::var(out, i); });
}

namespace {

Poly foldTo(const Poly& p, int n) { return foldToCyclic(p, n); }

bool dividesExactly(const Poly& divisor, const Poly& p) {
  if (p.isZero()) return true;
  try {
    (void)p.divExact(divisor);
    return true;
  } catch (const Error& e) {
    if (e.code() == Errc::not_divisible) return false;
    throw;
  }
}

// alpha_{ij} = a_{1-j} - a_{1-i} folded into the period.
Poly rootAffIJ(int n, long i, long j) {
  const RingMode mode = RingMode::cyclic(n);
  return Poly::var(mode, 1 - j) - Poly::var(mode, 1 - i);
}

// t_{q alpha^vee_{ij}} as an affine permutation (1 <= i != j <= n).
AffinePerm translationQ(int n, long i, long j, long q) {
  std::vector<long> nu(static_cast<std::size_t>(n), 0);
  nu[static_cast<std::size_t>(i - 1)] = q;
  nu[static_cast<std::size_t>(j - 1)] = -q;
  return AffinePerm::translation(n, nu);
}

}  // namespace

/*========================= localization maps =========================*/

Poly epsilonInf(const SymFuncPrimal& f, const FinitePermZ& w) {
  const RingMode mode = RingMode::infinite();
  requireSameMode(mode, f.mode(), "epsilonInf");

  // The two finite difference sets; unmoved indices contribute to neither.
  std::vector<long> plus, minus;  // values m with a_{1-m} gained / lost
  for (const auto& [k, wk] : w.moved()) {
    if (k <= 0 && wk > 0) plus.push_back(wk);
    if (k > 0 && wk <= 0) minus.push_back(wk);
  }

  auto powerValue = [&](long r) {
    Poly s = Poly::zero(mode);
    for (long m : plus) s += Poly::var(mode, 1 - m, static_cast<unsigned>(r));
    for (long m : minus) s -= Poly::var(mode, 1 - m, static_cast<unsigned>(r));
    return s;
  };

  Poly result = Poly::zero(mode);
  const std::map<Partition, Poly> pc = f.v.toP();
  for (const auto& [la, c] : pc) {
    Poly term = c;
    for (long part : la.parts()) term = term * powerValue(part);
    result += term;
  }
  return result;
}

Poly epsilonGr(const SymFuncPrimal& f, const AffinePerm& w) {
  const int n = static_cast<int>(w.n());
  const RingMode out = RingMode::cyclic(n);
  const std::vector<long> nu = w.translationCoset();

  auto powerValue = [&](long r) {
    Poly s = Poly::zero(out);
    for (int i = 1; i <= n; ++i)
      if (nu[static_cast<std::size_t>(i - 1)] != 0)
        s += Poly::var(out, 1 - i, static_cast<unsigned>(r))
                 .times(nu[static_cast<std::size_t>(i - 1)]);
    return s;
  };

  Poly result = Poly::zero(out);
  const std::map<Partition, Poly> pc = f.v.toP();
  for (const auto& [la, c] : pc) {
    Poly term = foldTo(c, n);
    for (long part : la.parts()) term = term * powerValue(part);
    result += term;
  }
  return result;
}

/*======================== localized functions ========================*/

LocalizedFunction tabulateInf(const SymFuncPrimal& f,
                              const std::vector<FinitePermZ>& window,
                              const std::string& description) {
  LocalizedFunction out;
  out.domainTag = LocDomain::SZ;
  out.sourceDescription = description;
  for (const FinitePermZ& w : window) out.valuesInf.emplace(w, epsilonInf(f, w));
  return out;
}

LocalizedFunction tabulateGr(const SymFuncPrimal& f,
                             const std::vector<AffinePerm>& window,
                             const std::string& description) {
  LocalizedFunction out;
  out.domainTag = LocDomain::AffineN;
  out.grassmannian = true;
  out.sourceDescription = description;
  for (const AffinePerm& w : window) {
    if (out.n == 0) out.n = static_cast<int>(w.n());
    checkSamePeriod(out.n, w.n(), "tabulateGr");
    out.valuesAff.emplace(w, epsilonGr(f, w));
  }
  return out;
}

LocalizedFunction tabulateXi(const AffinePerm& v,
                             const std::vector<AffinePerm>& window,
                             const std::string& description) {
  LocalizedFunction out;
  out.domainTag = LocDomain::AffineN;
  out.n = static_cast<int>(v.n());
  out.grassmannian = v.isGrassmannian();
  out.sourceDescription = description;
  for (const AffinePerm& w : window) {
    checkSamePeriod(out.n, w.n(), "tabulateXi");
    const NilHeckeElt ex = expandGroupElt(w);
    out.valuesAff.emplace(w, ex.coeff(v));
  }
  return out;
}

/*=========================== graph checks ===========================*/

namespace {

void addWitness(GkmReport& rep, std::string condition, std::string where,
                Poly value, Poly modulus) {
  rep.pass = false;
  rep.witnesses.push_back(GkmWitness{std::move(condition), std::move(where),
                                     std::move(value), std::move(modulus)});
}

void gkmCheckSZ(const LocalizedFunction& f, GkmReport& rep) {
  const auto& V = f.valuesInf;
  for (auto itW = V.begin(); itW != V.end(); ++itW)
    for (auto itV = std::next(itW); itV != V.end(); ++itV) {
      const FinitePermZ& w = itW->first;
      const FinitePermZ& v = itV->first;

      // Left transposition relation: v = s_{ij} w.
      const FinitePermZ left = v.mul(w.inverse());
      const auto& lm = left.moved();
      if (lm.size() == 2) {
        const long i = lm.begin()->first;
        const long j = std::next(lm.begin())->first;
        const Poly diff = itV->second - itW->second;
        const Poly alpha = rootOfTransposition(i, j);
        ++rep.checked;
        if (!dividesExactly(alpha, diff))
          addWitness(rep, "transposition divisibility",
                     "w = " + w.str() + ", i = " + std::to_string(i) +
                         ", j = " + std::to_string(j),
                     diff, alpha);
      }

      // Sign-preserving right factor: v = w u with u fixing the half-lines.
      const FinitePermZ right = w.inverse().mul(v);
      bool signPreserving = !right.isIdentity();
      for (const auto& [k, uk] : right.moved())
        if ((k <= 0) != (uk <= 0)) signPreserving = false;
      if (signPreserving) {
        ++rep.checked;
        if (!(itV->second == itW->second))
          addWitness(rep, "half-line coset equality",
                     "w = " + w.str() + ", wu = " + v.str(),
                     itV->second - itW->second, Poly::zero(RingMode::infinite()));
      }
    }
}

void gkmCheckAff(const LocalizedFunction& f, const GkmOptions& opts,
                 GkmReport& rep) {
  const int n = f.n;
  const auto& V = f.valuesAff;
  const RingMode mode = RingMode::cyclic(n);

  // Coset-canonical lookup table; conflicting values inside one coset are
  // themselves a failed condition.
  std::map<AffinePerm, Poly> canon;
  if (f.grassmannian) {
    for (const auto& [w, val] : V) {
      const AffinePerm g = w.grassmannianize();
      auto [it, inserted] = canon.emplace(g, val);
      if (!inserted) {
        ++rep.checked;
        if (!(it->second == val))
          addWitness(rep, "coset constancy",
                     "w = " + w.str() + ", representative " + g.str(),
                     val - it->second, Poly::zero(mode));
      }
    }
  }

  auto lookup = [&](const AffinePerm& x) -> const Poly* {
    auto it = V.find(x);
    if (it != V.end()) return &it->second;
    if (f.grassmannian) {
      auto ic = canon.find(x.grassmannianize());
      if (ic != canon.end()) return &ic->second;
    }
    return nullptr;
  };

  for (const auto& [w, val0] : V)
    for (long i = 1; i <= n; ++i)
      for (long j = 1; j <= n; ++j) {
        if (i == j) continue;
        const Poly alpha = rootAffIJ(n, i, j);
        for (long d = 1; d <= opts.dBound; ++d) {
          const auto where = [&] {
            return "w = " + w.str() + ", i = " + std::to_string(i) +
                   ", j = " + std::to_string(j) + ", d = " + std::to_string(d);
          };

          // Alternating sum over the translation chain.
          {
            Poly sum = Poly::zero(mode);
            bool complete = true;
            for (long q = 0; q <= d && complete; ++q) {
              const Poly* pv =
                  q == 0 ? &val0 : lookup(translationQ(n, i, j, q).mul(w));
              if (!pv) complete = false;
              else sum += pv->times(binomial(d, q) * (q % 2 == 0 ? 1 : -1));
            }
            if (!complete) {
              ++rep.skipped;
            } else {
              ++rep.checked;
              const Poly ad = alpha.pow(static_cast<unsigned>(d));
              if (!dividesExactly(ad, sum))
                addWitness(rep, "translation-chain divisibility", where(), sum, ad);
            }
          }

          // Reflection variant used for tables without coset constancy.
          if (opts.flagsVariant) {
            const AffinePerm sw = AffinePerm::reflection(n, i, j).mul(w);
            Poly sum = Poly::zero(mode);
            bool complete = true;
            for (long q = 0; q <= d - 1 && complete; ++q) {
              const AffinePerm tq = translationQ(n, i, j, q);
              const Poly* pa = q == 0 ? &val0 : lookup(tq.mul(w));
              const Poly* pb = lookup(tq.mul(sw));
              if (!pa || !pb) complete = false;
              else sum += (*pa - *pb).times(binomial(d - 1, q) * (q % 2 == 0 ? 1 : -1));
            }
            if (!complete) {
              ++rep.skipped;
            } else {
              ++rep.checked;
              const Poly ad = alpha.pow(static_cast<unsigned>(d));
              if (!dividesExactly(ad, sum))
                addWitness(rep, "reflection-chain divisibility", where(), sum, ad);
            }
          }
        }
      }
}

}  // namespace

GkmReport gkmCheck(const LocalizedFunction& f, const GkmOptions& opts) {
  if (opts.dBound < 1) fail(Errc::usage, "gkmCheck: dBound must be >= 1");
  GkmReport rep;
  rep.dBound = opts.dBound;
  rep.window = f.sourceDescription;
  if (f.domainTag == LocDomain::SZ) gkmCheckSZ(f, rep);
  else gkmCheckAff(f, opts, rep);
  if (rep.checked == 0)
    fail(Errc::insufficient_data,
         "gkmCheck: no condition could be evaluated on the provided window");
  return rep;
}

nlohmann::json GkmReport::toJson() const {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& wit : witnesses)
    w.push_back({{"condition", wit.condition},
                 {"where", wit.where},
                 {"value", wit.value.toJson()},
                 {"modulus", wit.modulus.toJson()}});
  return {{"check", "gkm"},     {"window", window},   {"pass", pass},
          {"checked", checked}, {"skipped", skipped}, {"dBound", dBound},
          {"witnesses", w}};
}

/*===================== double monomial expansions =====================*/

StanleyExpansion affineDoubleStanley(const AffinePerm& w, long L, long D) {
  const int n = static_cast<int>(w.n());
  if (L <= 0) L = 2 * (n - 1) + 2;
  const long lw = w.length();
  const long bound = D < 0 ? lw : std::min(D, lw);

  std::map<Partition, Poly> coords;
  for (const Partition& mu : partitionsUpTo(bound, n - 1)) {
    Poly c = jProduct(n, mu, L, lw).coeff(w);
    if (!c.isZero()) coords.emplace(mu, std::move(c));
  }
  return StanleyExpansion{n, w, std::move(coords), L, bound};
}

SymFuncPrimal stanleyAsPrimal(const StanleyExpansion& e) {
  const RingMode mode = RingMode::cyclic(e.n);
  SymFuncPrimal acc(mode);
  for (const auto& [mu, c] : e.coords) {
    SymFuncPrimal base = basisElement(PrimalBasis::mDouble, mu);
    SymFuncPrimal folded(mode);
    folded.v = base.v.mapCoeffs(mode, [&](const Poly& p) { return foldTo(p, e.n); });
    acc = acc + folded.scale(c);
  }
  return acc;
}

/*=========================== dual family ===========================*/

DualExpansion kDoubleSchur(int n, const Partition& lambda, long D, long L) {
  if (n < 2) fail(Errc::usage, "kDoubleSchur: period must be >= 2");
  if (lambda.maxPart() >= n)
    fail(Errc::part_too_large, "kDoubleSchur: parts must be < " + std::to_string(n));
  if (D < lambda.size())
    fail(Errc::cutoff_too_small, "kDoubleSchur: degree cutoff below the size of lambda");
  if (L <= 0) L = 2 * (n - 1) + 2;

  const RingMode mode = RingMode::cyclic(n);
  const Poly one = Poly::constant(mode, 1);
  const TransitionMatrix K = kostkaMatrixAff(n, D, L);

  // Forward substitution in the canonical order: row rho of the system
  // determines the rho-coordinate once all smaller ones are known.
  std::map<Partition, Poly> solved;
  for (const Partition& rho : partitionsUpTo(D, n - 1)) {
    if (!(K.entry(rho, rho) == one))
      fail(Errc::internal, "kDoubleSchur: transition diagonal is not 1");
    Poly val = rho == lambda ? one : Poly::zero(mode);
    for (const auto& [nu, dv] : solved) {
      const Poly e = K.entry(rho, nu);
      if (!e.isZero() && !dv.isZero()) val = val - e * dv;
    }
    solved.emplace(rho, std::move(val));
  }

  DualExpansion out;
  out.n = n;
  out.lambda = lambda;
  out.degreeCutoff = D;
  for (auto& [nu, c] : solved)
    if (!c.isZero()) out.coords.emplace(nu, std::move(c));
  return out;
}

SymFuncDual kDoubleSchurAsDual(const DualExpansion& e) {
  const RingMode mode = RingMode::cyclic(e.n);
  SymFuncDual acc(e.degreeCutoff, mode);
  for (const auto& [nu, c] : e.coords) {
    SymFuncDual base = dualBasisElement(DualBasis::hHat, nu, e.degreeCutoff);
    SymFuncDual folded(e.degreeCutoff, mode);
    folded.v = base.v.mapCoeffs(mode, [&](const Poly& p) { return foldTo(p, e.n); });
    acc = acc + folded.scale(c);
  }
  return acc;
}

/*============================ branching ============================*/

namespace {

// Express the row vector r (over the column set `basis`) as an S-linear
// combination of the rows M(lambda, .), lambda in `basis`, where M is
// lower-unitriangular in the canonical order.  Back-substitution from the
// top; afterwards the whole row is reproduced as a certificate.
std::map<Partition, Poly> expressOverRows(
    const std::vector<Partition>& basis,
    const std::function<Poly(const Partition&, const Partition&)>& M,
    const std::function<Poly(const Partition&)>& r, const RingMode& mode,
    const char* what) {
  std::map<Partition, Poly> b;
  for (auto it = basis.rbegin(); it != basis.rend(); ++it) {
    const Partition& lam = *it;
    Poly val = r(lam);
    for (const auto& [above, c] : b) {
      const Poly e = M(above, lam);
      if (!e.isZero() && !c.isZero()) val = val - c * e;
    }
    if (!val.isZero()) b.emplace(lam, std::move(val));
  }
  for (const Partition& mu : basis) {
    Poly acc = Poly::zero(mode);
    for (const auto& [lam, c] : b) {
      const Poly e = M(lam, mu);
      if (!e.isZero()) acc += c * e;
    }
    if (!(acc == r(mu)))
      fail(Errc::check_failed,
           std::string(what) + ": row is not reproduced by the solved combination");
  }
  return b;
}

}  // namespace

BranchMatrix branchingCoeffs(int n, int m, long maxSize, long L) {
  if (n < 2) fail(Errc::usage, "branchingCoeffs: period must be >= 2");
  if (m != 0 && (m % n != 0 || m / n < 2))
    fail(Errc::usage,
         "branchingCoeffs: source period must be a proper multiple of the target "
         "(or 0 for the inverse limit)");
  if (maxSize < 1) fail(Errc::usage, "branchingCoeffs: maxSize must be >= 1");

  const RingMode mode = RingMode::cyclic(n);
  const long Ln = L > 0 ? L : 2 * (n - 1) + 2;
  const long Lm = L > 0 ? L : (m == 0 ? 0 : 2 * (m - 1) + 2);

  const std::vector<Partition> cols = partitionsUpTo(maxSize, n - 1);
  const std::vector<Partition> rows =
      m == 0 ? partitionsUpTo(maxSize) : partitionsUpTo(maxSize, m - 1);

  // Source matrix, folded into the target period, columns with parts < n.
  const TransitionMatrix src =
      m == 0 ? equivariantKostka(maxSize) : kostkaMatrixAff(m, maxSize, Lm);

  BranchMatrix out;
  out.n = n;
  out.m = m;
  out.maxSize = maxSize;
  out.reduced.rowBasis = "sourceRows";
  out.reduced.colBasis = "mDouble";
  out.reduced.degreeBound = maxSize;
  out.reduced.mode = mode;
  for (const Partition& nu : rows)
    for (const Partition& mu : cols) {
      const Poly e = src.entry(nu, mu);
      if (e.isZero()) continue;
      Poly folded = foldTo(e, n);
      if (!folded.isZero()) out.reduced.entries.emplace(std::make_pair(nu, mu), std::move(folded));
    }

  const TransitionMatrix target = kostkaMatrixAff(n, maxSize, Ln);

  out.coeffs.rowBasis = "sourceRows";
  out.coeffs.colBasis = "reducedRows";
  out.coeffs.degreeBound = maxSize;
  out.coeffs.mode = mode;
  out.basisCoeffs.rowBasis = "sourceRows";
  out.basisCoeffs.colBasis = "targetRows";
  out.basisCoeffs.degreeBound = maxSize;
  out.basisCoeffs.mode = mode;

  for (const Partition& nu : rows) {
    const auto rowVec = [&](const Partition& mu) { return out.reduced.entry(nu, mu); };
    std::map<Partition, Poly> overReduced = expressOverRows(
        cols, [&](const Partition& lam, const Partition& mu) { return out.reduced.entry(lam, mu); },
        rowVec, mode, "branchingCoeffs[reduced rows]");
    std::map<Partition, Poly> overTarget = expressOverRows(
        cols, [&](const Partition& lam, const Partition& mu) { return target.entry(lam, mu); },
        rowVec, mode, "branchingCoeffs[target rows]");
    for (auto& [lam, c] : overReduced)
      out.coeffs.entries.emplace(std::make_pair(nu, lam), std::move(c));
    for (auto& [lam, c] : overTarget)
      out.basisCoeffs.entries.emplace(std::make_pair(nu, lam), std::move(c));
  }

  out.note =
      "coeffs: rows over the reduced matrix's own small rows (identity on rows "
      "with parts < n); basisCoeffs: rows over the period-n expansion rows.";
  return out;
}

/*============================ pullbacks ============================*/

std::map<Partition, Poly> pullbackExpansion(const AffinePerm& x, long L, long D) {
  const int n = static_cast<int>(x.n());
  const long lx = x.length();
  const long bound = D < 0 ? lx : std::min(D, lx);

  std::map<Partition, Poly> out;
  for (const Partition& lam : partitionsUpTo(bound, n - 1)) {
    const AffinePerm wl = partitionToWAff(n, lam);
    const long cutoff = L > 0 ? L : wl.length() + 2 * n + 2;
    JElement j = computeJ(wl, cutoff);
    if (!j.stabilized)
      fail(Errc::cutoff_too_small,
           "pullbackExpansion: basis element did not stabilize below the cutoff");
    Poly c = j.elt.coeff(x);
    if (!c.isZero()) out.emplace(lam, std::move(c));
  }
  return out;
}

}  // namespace affschur
