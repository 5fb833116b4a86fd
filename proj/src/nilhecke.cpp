#include "affschur/nilhecke.hpp"

namespace affschur {

namespace {

void checkSameN(long a, long b, const char* what) {
  if (a != b) fail(Errc::group_mismatch, std::string(what) + ": period mismatch");
}

}  // namespace

/*============================ NilHeckeElt ============================*/

NilHeckeElt NilHeckeElt::basis(const AffinePerm& w) {
  return basis(w, Poly::constant(RingMode::cyclic(static_cast<int>(w.n())), 1));
}

NilHeckeElt NilHeckeElt::basis(const AffinePerm& w, const Poly& c) {
  NilHeckeElt e(w.n());
  e.add(w, c);
  return e;
}

Poly NilHeckeElt::coeff(const AffinePerm& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Poly::zero(mode()) : it->second;
}

void NilHeckeElt::add(const AffinePerm& w, const Poly& c) {
  if (c.isZero()) return;
  checkSameN(n_, w.n(), "NilHeckeElt::add");
  requireSameMode(mode(), c.mode(), "NilHeckeElt::add");
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

NilHeckeElt NilHeckeElt::operator+(const NilHeckeElt& o) const {
  checkSameN(n_, o.n_, "NilHeckeElt::add");
  NilHeckeElt r = *this;
  for (const auto& [w, c] : o.terms_) r.add(w, c);
  return r;
}

NilHeckeElt NilHeckeElt::operator-(const NilHeckeElt& o) const { return *this + (-o); }

NilHeckeElt NilHeckeElt::operator-() const {
  NilHeckeElt r(n_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

NilHeckeElt NilHeckeElt::scale(const Poly& f) const {
  NilHeckeElt r(n_);
  if (f.isZero()) return r;
  for (const auto& [w, c] : terms_) r.add(w, f * c);
  return r;
}

bool NilHeckeElt::isHomogeneous(long* degOut) const {
  bool first = true;
  long deg = 0;
  for (const auto& [w, c] : terms_) {
    long cd = 0;
    if (!c.isHomogeneous(&cd)) return false;
    long d = w.length() - cd;
    if (first) {
      deg = d;
      first = false;
    } else if (d != deg) {
      return false;
    }
  }
  if (degOut) *degOut = deg;
  return true;
}

/*======================== products and scalars ========================*/

NilHeckeElt applyA(long i, const NilHeckeElt& x) {
  long n = x.n();
  AffinePerm si = AffinePerm::simple(n, i);
  NilHeckeElt out(n);
  for (const auto& [w, c] : x.terms()) {
    Poly d = dividedDiff(i, c);
    if (!d.isZero()) out.add(w, d);
    AffinePerm sw = si.mul(w);
    if (sw.length() == w.length() + 1) out.add(sw, actPerm(si, c));
  }
  return out;
}

NilHeckeElt scalarCommute(const AffinePerm& w, const Poly& f) {
  long n = w.n();
  requireSameMode(RingMode::cyclic(static_cast<int>(n)), f.mode(), "scalarCommute");
  NilHeckeElt acc = NilHeckeElt::basis(AffinePerm::identity(n), f);
  std::vector<long> word = w.reducedWord();
  for (auto it = word.rbegin(); it != word.rend(); ++it) acc = applyA(*it, acc);
  return acc;
}

NilHeckeElt multiply(const NilHeckeElt& x, const NilHeckeElt& y) {
  checkSameN(x.n(), y.n(), "multiply");
  NilHeckeElt out(x.n());
  for (const auto& [w, c] : x.terms())
    for (const auto& [v, d] : y.terms()) {
      if (d.isConstant()) {  // constants commute with every A_w
        AffinePerm wv = w.mul(v);
        if (wv.length() == w.length() + v.length()) out.add(wv, c * d);
        continue;
      }
      NilHeckeElt sc = scalarCommute(w, d);  // A_w d = sum_u e_u A_u
      for (const auto& [u, e] : sc.terms()) {
        AffinePerm uv = u.mul(v);
        if (uv.length() == u.length() + v.length()) out.add(uv, c * e);
      }
    }
  return out;
}

NilHeckeElt expandGroupElt(const AffinePerm& w) {
  long n = w.n();
  RingMode mode = RingMode::cyclic(static_cast<int>(n));
  NilHeckeElt acc = NilHeckeElt::basis(AffinePerm::identity(n));
  for (long i : w.reducedWord()) {
    NilHeckeElt si(n);
    si.add(AffinePerm::identity(n), Poly::constant(mode, 1));
    si.add(AffinePerm::simple(n, i), simpleRootAff(static_cast<int>(n), i));
    acc = multiply(acc, si);
  }
  return acc;
}

Poly diagonalLocalization(const AffinePerm& w) {
  long n = w.n();
  RingMode mode = RingMode::cyclic(static_cast<int>(n));
  // Reflections r with r w < w correspond to inversion pairs (i, j) of the
  // inverse: i < j with w^{-1}(i) > w^{-1}(j); the level-zero part of the
  // attached root is a_{1-j} - a_{1-i} (indices read mod n).
  AffinePerm u = w.inverse();
  Poly prod = Poly::constant(mode, 1);
  for (long i = 1; i <= n; ++i) {
    for (long r = 1; r <= n; ++r) {
      long j = i + ((r - i) % n + n) % n;  // least j > i (or = i) with j = r mod n
      if (j == i) continue;                // same residue class never inverts
      // every period adds n to the value; count descents u(i) > u(j+kn)
      for (long k = 0;; ++k) {
        long jj = j + k * n;
        if (u.apply(jj) >= u.apply(i)) break;
        prod = prod * (Poly::var(mode, 1 - jj) - Poly::var(mode, 1 - i));
      }
    }
  }
  return prod;
}

/*=========================== NilHeckeTensor ===========================*/

Poly NilHeckeTensor::coeff(const AffinePerm& u, const AffinePerm& v) const {
  auto it = terms_.find({u, v});
  return it == terms_.end() ? Poly::zero(mode()) : it->second;
}

void NilHeckeTensor::add(const AffinePerm& u, const AffinePerm& v, const Poly& c) {
  if (c.isZero()) return;
  checkSameN(n_, u.n(), "NilHeckeTensor::add");
  checkSameN(n_, v.n(), "NilHeckeTensor::add");
  requireSameMode(mode(), c.mode(), "NilHeckeTensor::add");
  auto key = std::make_pair(u, v);
  auto [it, fresh] = terms_.try_emplace(key, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

NilHeckeTensor NilHeckeTensor::operator+(const NilHeckeTensor& o) const {
  checkSameN(n_, o.n_, "NilHeckeTensor::add");
  NilHeckeTensor r = *this;
  for (const auto& [k, c] : o.terms_) r.add(k.first, k.second, c);
  return r;
}

NilHeckeTensor NilHeckeTensor::operator-(const NilHeckeTensor& o) const {
  checkSameN(n_, o.n_, "NilHeckeTensor::sub");
  NilHeckeTensor r = *this;
  for (const auto& [k, c] : o.terms_) r.add(k.first, k.second, -c);
  return r;
}

NilHeckeTensor NilHeckeTensor::scale(const Poly& f) const {
  NilHeckeTensor r(n_);
  if (f.isZero()) return r;
  for (const auto& [k, c] : terms_) r.add(k.first, k.second, f * c);
  return r;
}

NilHeckeTensor tensorMultiply(const NilHeckeTensor& a, const NilHeckeTensor& b) {
  checkSameN(a.n(), b.n(), "tensorMultiply");
  NilHeckeTensor out(a.n());
  for (const auto& [ka, c] : a.terms())
    for (const auto& [kb, d] : b.terms()) {
      // right slots multiply in the nilCoxeter ring (scalar-free)
      AffinePerm w2 = ka.second.mul(kb.second);
      if (w2.length() != ka.second.length() + kb.second.length()) continue;
      // left slots: push the right factor's scalar through A_{u1}
      NilHeckeElt sc = scalarCommute(ka.first, d);
      for (const auto& [x, e] : sc.terms()) {
        AffinePerm w1 = x.mul(kb.first);
        if (w1.length() == x.length() + kb.first.length()) out.add(w1, w2, c * e);
      }
    }
  return out;
}

NilHeckeTensor tensorOf(const NilHeckeElt& a, const NilHeckeElt& b) {
  checkSameN(a.n(), b.n(), "tensorOf");
  NilHeckeTensor out(a.n());
  for (const auto& [x, c] : a.terms())
    for (const auto& [y, d] : b.terms()) {
      // Slide the scalar d leftward across the bar: x (x) d*y == (A_x d) (x) y.
      NilHeckeElt sc = scalarCommute(x, d);
      for (const auto& [z, e] : sc.terms()) out.add(z, y, c * e);
    }
  return out;
}

NilHeckeTensor coproduct(const NilHeckeElt& x) {
  long n = x.n();
  RingMode mode = RingMode::cyclic(static_cast<int>(n));
  AffinePerm id = AffinePerm::identity(n);
  NilHeckeTensor out(n);
  for (const auto& [w, c] : x.terms()) {
    NilHeckeTensor acc(n);
    acc.add(id, id, Poly::constant(mode, 1));
    for (long i : w.reducedWord()) {
      AffinePerm si = AffinePerm::simple(n, i);
      NilHeckeTensor dai(n);
      dai.add(si, id, Poly::constant(mode, 1));
      dai.add(id, si, Poly::constant(mode, 1));
      dai.add(si, si, simpleRootAff(static_cast<int>(n), i));
      acc = tensorMultiply(acc, dai);
    }
    out = out + acc.scale(c);
  }
  return out;
}

}  // namespace affschur
