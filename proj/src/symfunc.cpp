#include "affschur/symfunc.hpp"

#include <algorithm>

namespace affschur {

/*=========================== linear algebra ===========================*/

RatMatrix matInverse(const RatMatrix& m) {
  size_t n = m.size();
  RatMatrix a = m, inv(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) fail(Errc::internal, "matInverse: not square");
    inv[i][i] = 1;
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) fail(Errc::inconsistent, "matInverse: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = a[col][col];
    for (size_t j = 0; j < n; ++j) { a[col][j] /= d; inv[col][j] /= d; }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

/*============================= SymTables ==============================*/

SymTables& SymTables::inst() {
  static SymTables t;
  return t;
}

// Character value by the beta-set form of the border-strip recursion.
Rational SymTables::chiRec(const Partition& la, const Partition& rho) {
  if (rho.empty()) return Rational(la.empty() ? 1 : 0);
  auto key = std::make_pair(la, rho);
  auto it = chiMemo_.find(key);
  if (it != chiMemo_.end()) return it->second;

  long r = rho.part(1);
  Partition rest(std::vector<long>(rho.parts().begin() + 1, rho.parts().end()));
  long L = la.length();
  std::vector<long> beta(L);
  for (long i = 0; i < L; ++i) beta[i] = la.part(i + 1) + (L - 1 - i);

  Rational sum(0);
  for (long i = 0; i < L; ++i) {
    long b = beta[i] - r;
    if (b < 0) continue;
    if (std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
    long cnt = 0;
    for (long j = 0; j < L; ++j)
      if (j != i && beta[j] > b && beta[j] < beta[i]) ++cnt;
    std::vector<long> nb = beta;
    nb[i] = b;
    std::sort(nb.begin(), nb.end(), std::greater<long>());
    std::vector<long> parts(L);
    for (long k = 0; k < L; ++k) parts[k] = nb[k] - (L - 1 - k);
    Rational term = chiRec(Partition(std::move(parts)), rest);
    sum += (cnt % 2 == 0) ? term : -term;
  }
  chiMemo_.emplace(key, sum);
  return sum;
}

std::vector<Partition> SymTables::pieriH(const Partition& la, long r) {
  std::vector<Partition> out;
  long L = la.length();
  std::vector<long> mu(L + 1);
  std::function<void(long, long)> rec = [&](long row, long remaining) {
    if (row == L + 1) {
      // last (new) row: 0 <= x <= la_L
      long cap = L == 0 ? remaining : la.part(L);
      if (remaining <= cap) {
        mu[L] = remaining;
        std::vector<long> parts(mu.begin(), mu.begin() + L + 1);
        out.emplace_back(std::move(parts));
      }
      return;
    }
    long base = la.part(row);
    long cap = row == 1 ? remaining : la.part(row - 1) - base;
    for (long x = 0; x <= std::min(cap, remaining); ++x) {
      mu[row - 1] = base + x;
      rec(row + 1, remaining - x);
    }
  };
  rec(1, r);
  // dedupe (the new-row-0 case can coincide across branches only via the
  // normalization dropping zeros, so sort/unique for safety)
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const SymTables::DegreeData& SymTables::degree(long d) {
  auto it = cache_.find(d);
  if (it != cache_.end()) return it->second;
  DegreeData data;
  data.parts = partitionsOf(d);
  long N = static_cast<long>(data.parts.size());
  for (long i = 0; i < N; ++i) data.index[data.parts[i]] = i;

  data.chi.assign(N, std::vector<Rational>(N, Rational(0)));
  for (long i = 0; i < N; ++i)
    for (long j = 0; j < N; ++j) data.chi[i][j] = chiRec(data.parts[i], data.parts[j]);

  data.kostka.assign(N, std::vector<Rational>(N, Rational(0)));
  for (long j = 0; j < N; ++j) {
    // s-expansion of h_{mu_j} by iterated Pieri
    std::map<Partition, Rational> cur{{Partition(), Rational(1)}};
    for (long part : data.parts[j].parts()) {
      std::map<Partition, Rational> next;
      for (const auto& [la, c] : cur)
        for (const Partition& nu : pieriH(la, part)) next[nu] += c;
      cur = std::move(next);
    }
    for (const auto& [la, c] : cur) data.kostka[data.index.at(la)][j] = c;
  }
  data.kostkaInv = matInverse(data.kostka);
  return cache_.emplace(d, std::move(data)).first->second;
}

const std::vector<Partition>& SymTables::parts(long d) {
  std::lock_guard<std::mutex> lock(mtx_);
  return degree(d).parts;
}

long SymTables::indexOf(const Partition& la) {
  std::lock_guard<std::mutex> lock(mtx_);
  return degree(la.size()).index.at(la);
}

const RatMatrix& SymTables::charTable(long d) {
  std::lock_guard<std::mutex> lock(mtx_);
  return degree(d).chi;
}

const RatMatrix& SymTables::kostka(long d) {
  std::lock_guard<std::mutex> lock(mtx_);
  return degree(d).kostka;
}

const RatMatrix& SymTables::kostkaInv(long d) {
  std::lock_guard<std::mutex> lock(mtx_);
  return degree(d).kostkaInv;
}

/*============================== SchurVec ==============================*/

SchurVec SchurVec::basisElt(RingMode mode, const Partition& la, const Poly& c) {
  SchurVec v(mode);
  v.add(la, c);
  return v;
}

SchurVec SchurVec::basisElt(RingMode mode, const Partition& la) {
  return basisElt(mode, la, Poly::constant(mode, 1));
}

void SchurVec::add(const Partition& la, const Poly& f) {
  if (f.isZero()) return;
  requireSameMode(mode_, f.mode(), "SchurVec add");
  auto [it, fresh] = c_.try_emplace(la, f);
  if (!fresh) {
    it->second = it->second + f;
    if (it->second.isZero()) c_.erase(it);
  }
}

Poly SchurVec::coeff(const Partition& la) const {
  auto it = c_.find(la);
  return it == c_.end() ? Poly::zero(mode_) : it->second;
}

long SchurVec::topDegree() const {
  long d = -1;
  for (const auto& [la, f] : c_) d = std::max(d, la.size());
  return d;
}

SchurVec SchurVec::operator+(const SchurVec& o) const {
  requireSameMode(mode_, o.mode_, "SchurVec add");
  SchurVec r = *this;
  for (const auto& [la, f] : o.c_) r.add(la, f);
  return r;
}

SchurVec SchurVec::operator-(const SchurVec& o) const { return *this + (-o); }

SchurVec SchurVec::operator-() const {
  SchurVec r(mode_);
  for (const auto& [la, f] : c_) r.c_.emplace(la, -f);
  return r;
}

SchurVec SchurVec::scale(const Poly& f) const {
  SchurVec r(mode_);
  if (f.isZero()) return r;
  for (const auto& [la, g] : c_) r.add(la, g * f);
  return r;
}

SchurVec SchurVec::scale(const Rational& x) const {
  return scale(Poly::constant(mode_, x));
}

SchurVec SchurVec::truncate(long maxSize) const {
  SchurVec r(mode_);
  for (const auto& [la, f] : c_)
    if (la.size() <= maxSize) r.c_.emplace(la, f);
  return r;
}

SchurVec SchurVec::mapCoeffs(RingMode outMode,
                             const std::function<Poly(const Poly&)>& f) const {
  SchurVec r(outMode);
  for (const auto& [la, g] : c_) r.add(la, f(g));
  return r;
}

/*------------------------- basis conversions -------------------------*/

namespace {

// Split a Schur-coordinate map by degree into dense vectors.
std::map<long, std::vector<Poly>> byDegree(const std::map<Partition, Poly>& c, RingMode mode) {
  std::map<long, std::vector<Poly>> out;
  SymTables& T = SymTables::inst();
  for (const auto& [la, f] : c) {
    long d = la.size();
    auto& vec = out[d];
    const auto& parts = T.parts(d);
    if (vec.empty()) vec.assign(parts.size(), Poly::zero(mode));
    vec[T.indexOf(la)] = f;
  }
  return out;
}

}  // namespace

std::map<Partition, Poly> SchurVec::toM() const {
  SymTables& T = SymTables::inst();
  std::map<Partition, Poly> out;
  for (auto& [d, vec] : byDegree(c_, mode_)) {
    const RatMatrix& K = T.kostka(d);
    size_t N = vec.size();
    for (size_t mu = 0; mu < N; ++mu) {
      Poly acc = Poly::zero(mode_);
      for (size_t la = 0; la < N; ++la)
        if (!vec[la].isZero() && K[la][mu] != 0) acc = acc + vec[la].times(K[la][mu]);
      if (!acc.isZero()) out[T.parts(d)[mu]] = acc;
    }
  }
  return out;
}

SchurVec SchurVec::fromM(RingMode mode, const std::map<Partition, Poly>& coords) {
  SymTables& T = SymTables::inst();
  SchurVec r(mode);
  for (auto& [d, vec] : byDegree(coords, mode)) {
    const RatMatrix& Ki = T.kostkaInv(d);
    size_t N = vec.size();
    for (size_t la = 0; la < N; ++la) {
      Poly acc = Poly::zero(mode);
      for (size_t mu = 0; mu < N; ++mu)
        if (!vec[mu].isZero() && Ki[mu][la] != 0) acc = acc + vec[mu].times(Ki[mu][la]);
      r.add(T.parts(d)[la], acc);
    }
  }
  return r;
}

std::map<Partition, Poly> SchurVec::toP() const {
  SymTables& T = SymTables::inst();
  std::map<Partition, Poly> out;
  for (auto& [d, vec] : byDegree(c_, mode_)) {
    const RatMatrix& X = T.charTable(d);
    const auto& parts = T.parts(d);
    size_t N = vec.size();
    for (size_t rho = 0; rho < N; ++rho) {
      Poly acc = Poly::zero(mode_);
      for (size_t la = 0; la < N; ++la)
        if (!vec[la].isZero() && X[la][rho] != 0) acc = acc + vec[la].times(X[la][rho]);
      if (!acc.isZero()) out[parts[rho]] = acc.times(Rational(1) / parts[rho].zee());
    }
  }
  return out;
}

SchurVec SchurVec::fromP(RingMode mode, const std::map<Partition, Poly>& coords) {
  SymTables& T = SymTables::inst();
  SchurVec r(mode);
  for (auto& [d, vec] : byDegree(coords, mode)) {
    const RatMatrix& X = T.charTable(d);
    size_t N = vec.size();
    for (size_t la = 0; la < N; ++la) {
      Poly acc = Poly::zero(mode);
      for (size_t rho = 0; rho < N; ++rho)
        if (!vec[rho].isZero() && X[la][rho] != 0) acc = acc + vec[rho].times(X[la][rho]);
      r.add(T.parts(d)[la], acc);
    }
  }
  return r;
}

std::map<Partition, Poly> SchurVec::toH() const {
  SymTables& T = SymTables::inst();
  std::map<Partition, Poly> out;
  for (auto& [d, vec] : byDegree(c_, mode_)) {
    const RatMatrix& Ki = T.kostkaInv(d);
    size_t N = vec.size();
    // eta = K^{-1} c
    for (size_t mu = 0; mu < N; ++mu) {
      Poly acc = Poly::zero(mode_);
      for (size_t la = 0; la < N; ++la)
        if (!vec[la].isZero() && Ki[mu][la] != 0) acc = acc + vec[la].times(Ki[mu][la]);
      if (!acc.isZero()) out[T.parts(d)[mu]] = acc;
    }
  }
  return out;
}

SchurVec SchurVec::fromH(RingMode mode, const std::map<Partition, Poly>& coords) {
  SymTables& T = SymTables::inst();
  SchurVec r(mode);
  for (auto& [d, vec] : byDegree(coords, mode)) {
    const RatMatrix& K = T.kostka(d);
    size_t N = vec.size();
    for (size_t la = 0; la < N; ++la) {
      Poly acc = Poly::zero(mode);
      for (size_t mu = 0; mu < N; ++mu)
        if (!vec[mu].isZero() && K[la][mu] != 0) acc = acc + vec[mu].times(K[la][mu]);
      r.add(T.parts(d)[la], acc);
    }
  }
  return r;
}

SchurVec SchurVec::operator*(const SchurVec& o) const {
  requireSameMode(mode_, o.mode_, "SchurVec mul");
  std::map<Partition, Poly> hf = toH(), hg = o.toH();
  std::map<Partition, Poly> prod;
  for (const auto& [al, f] : hf)
    for (const auto& [be, g] : hg) {
      Partition cat = al.unionWith(be);
      auto [it, fresh] = prod.try_emplace(cat, f * g);
      if (!fresh) it->second = it->second + f * g;
    }
  for (auto it = prod.begin(); it != prod.end();)
    it = it->second.isZero() ? prod.erase(it) : std::next(it);
  return fromH(mode_, prod);
}

Poly schurPairing(const SchurVec& f, const SchurVec& g) {
  requireSameMode(f.mode(), g.mode(), "schurPairing");
  Poly acc = Poly::zero(f.mode());
  for (const auto& [la, cf] : f.coeffs()) {
    Poly cg = g.coeff(la);
    if (!cg.isZero()) acc = acc + cf * cg;
  }
  return acc;
}

std::map<std::pair<Partition, Partition>, Poly> schurCoproduct(const SchurVec& f) {
  RingMode mode = f.mode();
  std::map<std::pair<Partition, Partition>, Poly> out;
  for (const auto& [rho, coeff] : f.toP()) {
    // Multiplicity list of rho: pairs (part value, count).
    std::vector<std::pair<long, long>> mult;
    for (long p : rho.parts()) {
      if (!mult.empty() && mult.back().first == p) ++mult.back().second;
      else mult.emplace_back(p, 1);
    }
    // Choose a sub-multiset per distinct part.
    std::vector<long> take(mult.size(), 0);
    std::function<void(size_t, Rational)> rec = [&](size_t i, Rational ways) {
      if (i == mult.size()) {
        std::vector<long> alpha, betaParts;
        for (size_t k = 0; k < mult.size(); ++k) {
          for (long t = 0; t < take[k]; ++t) alpha.push_back(mult[k].first);
          for (long t = take[k]; t < mult[k].second; ++t) betaParts.push_back(mult[k].first);
        }
        Partition A(alpha), B(betaParts);
        // convert both legs p_alpha, p_beta to the Schur basis
        SchurVec left = SchurVec::fromP(mode, {{A, Poly::constant(mode, 1)}});
        SchurVec right = SchurVec::fromP(mode, {{B, Poly::constant(mode, 1)}});
        Poly w = coeff.times(ways);
        for (const auto& [la, cl] : left.coeffs())
          for (const auto& [mu, cr] : right.coeffs()) {
            Poly term = w * cl * cr;
            auto key = std::make_pair(la, mu);
            auto [it, fresh] = out.try_emplace(key, term);
            if (!fresh) it->second = it->second + term;
          }
        return;
      }
      for (long k = 0; k <= mult[i].second; ++k) {
        take[i] = k;
        rec(i + 1, ways * binomial(mult[i].second, k));
      }
    };
    rec(0, Rational(1));
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.isZero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace affschur
