#include "affschur/poly.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace affschur {

/*============================== Monomial ==============================*/

Monomial::Monomial(Factors f) {
  std::sort(f.begin(), f.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [idx, exp] : f) {
    if (exp == 0) continue;
    if (!f_.empty() && f_.back().first == idx)
      f_.back().second += exp;
    else
      f_.emplace_back(idx, exp);
  }
}

Monomial Monomial::var(long index, unsigned exp) {
  Monomial m;
  if (exp > 0) m.f_.emplace_back(index, exp);
  return m;
}

long Monomial::degree() const {
  long d = 0;
  for (const auto& [idx, exp] : f_) d += exp;
  return d;
}

unsigned Monomial::exponentOf(long index) const {
  for (const auto& [idx, exp] : f_)
    if (idx == index) return exp;
  return 0;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r;
  auto a = f_.begin(), b = o.f_.begin();
  while (a != f_.end() || b != o.f_.end()) {
    if (b == o.f_.end() || (a != f_.end() && a->first < b->first))
      r.f_.push_back(*a++);
    else if (a == f_.end() || b->first < a->first)
      r.f_.push_back(*b++);
    else {
      r.f_.emplace_back(a->first, a->second + b->second);
      ++a, ++b;
    }
  }
  return r;
}

int Monomial::cmp(const Monomial& x, const Monomial& y) {
  long dx = x.degree(), dy = y.degree();
  if (dx != dy) return dx < dy ? -1 : 1;
  size_t i = 0, j = 0;
  while (i < x.f_.size() && j < y.f_.size()) {
    if (x.f_[i].first != y.f_[j].first)
      return x.f_[i].first < y.f_[j].first ? 1 : -1;  // lower index dominates
    if (x.f_[i].second != y.f_[j].second)
      return x.f_[i].second > y.f_[j].second ? 1 : -1;
    ++i, ++j;
  }
  if (i < x.f_.size()) return 1;  // defensive; unreachable at equal degree
  if (j < y.f_.size()) return -1;
  return 0;
}

// Componentwise divisibility test; on success writes x / y.
static bool monomialTryDivide(const Monomial& x, const Monomial& y, Monomial& out) {
  Monomial::Factors f;
  auto a = x.factors().begin();
  for (const auto& [idx, exp] : y.factors()) {
    while (a != x.factors().end() && a->first < idx) f.push_back(*a++);
    if (a == x.factors().end() || a->first != idx || a->second < exp) return false;
    if (a->second > exp) f.emplace_back(idx, a->second - exp);
    ++a;
  }
  while (a != x.factors().end()) f.push_back(*a++);
  out = Monomial(std::move(f));
  return true;
}

/*================================ Poly ================================*/

void Poly::addTerm(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::constant(RingMode mode, const Rational& c) {
  Poly p(mode);
  p.addTerm(Monomial::one(), c);
  return p;
}

Poly Poly::var(RingMode mode, long index, unsigned exp) {
  Poly p(mode);
  p.addTerm(Monomial::var(mode.canonIndex(index), exp), Rational(1));
  return p;
}

bool Poly::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.isOne());
}

long Poly::degree() const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Poly::isHomogeneous(long* degreeOut) const {
  long d = -1;
  for (const auto& [m, c] : terms_) {
    if (d < 0) d = m.degree();
    else if (m.degree() != d) return false;
  }
  if (degreeOut) *degreeOut = d;
  return true;
}

Rational Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Poly Poly::homogeneousPart(long d) const {
  Poly r(mode_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) r.addTerm(m, c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  requireSameMode(mode_, o.mode_, "poly add");
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.addTerm(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  requireSameMode(mode_, o.mode_, "poly sub");
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.addTerm(m, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(mode_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  requireSameMode(mode_, o.mode_, "poly mul");
  Poly r(mode_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.addTerm(m1.times(m2), c1 * c2);
  return r;
}

Poly Poly::times(const Rational& c) const {
  Poly r(mode_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r = Poly::constant(mode_, 1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

Poly Poly::mapIndices(const std::function<long(long)>& f) const {
  Poly r(mode_);
  for (const auto& [m, c] : terms_) {
    Monomial::Factors nf;
    for (const auto& [idx, exp] : m.factors())
      nf.emplace_back(mode_.canonIndex(f(idx)), exp);
    r.addTerm(Monomial(std::move(nf)), c);
  }
  return r;
}

Poly Poly::substitute(RingMode outMode, const std::function<Poly(long)>& image) const {
  Poly r(outMode);
  for (const auto& [m, c] : terms_) {
    Poly t = Poly::constant(outMode, c);
    for (const auto& [idx, exp] : m.factors()) t = t * image(idx).pow(exp);
    r = r + t;
  }
  return r;
}

Poly Poly::forgetTo(int n) const {
  if (mode_.isCyclic()) fail(Errc::bad_mode, "forget: input is already cyclic");
  RingMode out = RingMode::cyclic(n);
  Poly r(out);
  for (const auto& [m, c] : terms_) {
    Monomial::Factors nf;
    for (const auto& [idx, exp] : m.factors()) nf.emplace_back(out.canonIndex(idx), exp);
    r.addTerm(Monomial(std::move(nf)), c);
  }
  return r;
}

Poly Poly::specializeZero() const {
  return Poly::constant(mode_, constantTerm());
}

Poly Poly::divExact(const Poly& divisor) const {
  requireSameMode(mode_, divisor.mode_, "poly divExact");
  if (divisor.isZero()) fail(Errc::divide_by_zero, "divExact: divisor is zero");
  Poly q(mode_), rem = *this;
  const auto& ld = *divisor.terms_.begin();  // leading term (descending map)
  while (!rem.isZero()) {
    const auto& lr = *rem.terms_.begin();
    Monomial t;
    if (!monomialTryDivide(lr.first, ld.first, t))
      fail(Errc::not_divisible, "divExact: not divisible; remainder = " + rem.str());
    Rational c = lr.second / ld.second;
    Poly piece(mode_);
    piece.addTerm(t, c);
    q = q + piece;
    rem = rem - piece * divisor;
  }
  return q;
}

bool Poly::indexRange(long& lo, long& hi) const {
  bool any = false;
  for (const auto& [m, c] : terms_)
    for (const auto& [idx, exp] : m.factors()) {
      if (!any) { lo = hi = idx; any = true; }
      lo = std::min(lo, idx);
      hi = std::max(hi, idx);
    }
  return any;
}

/*=============================== text I/O =============================*/

std::string varStr(long index, unsigned exp) {
  std::string s = "a_" + std::to_string(index);
  if (exp > 1) s += "^" + std::to_string(exp);
  return s;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational ac = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool coeffShown = !(ac == 1) || m.isOne();
    if (coeffShown) out << ratStr(ac);
    bool needStar = coeffShown;
    for (const auto& [idx, exp] : m.factors()) {
      if (needStar) out << "*";
      out << varStr(idx, exp);
      needStar = true;
    }
  }
  return out.str();
}

nlohmann::json Poly::toJson() const {
  nlohmann::json j;
  if (mode_.isCyclic())
    j["mode"] = nlohmann::json{{"cyclic", mode_.n}};
  else
    j["mode"] = "infinite";
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::json mono = nlohmann::json::array();
    for (const auto& [idx, exp] : m.factors()) mono.push_back({idx, exp});
    terms.push_back({{"coeff", ratStr(c)}, {"monomial", mono}});
  }
  j["terms"] = terms;
  return j;
}

Poly Poly::fromJson(const nlohmann::json& j) {
  try {
    RingMode mode = RingMode::infinite();
    const auto& jm = j.at("mode");
    if (jm.is_string()) {
      if (jm.get<std::string>() != "infinite") fail(Errc::parse, "poly JSON: bad mode string");
    } else {
      mode = RingMode::cyclic(jm.at("cyclic").get<int>());
    }
    Poly p(mode);
    for (const auto& t : j.at("terms")) {
      Rational c = ratParse(t.at("coeff").get<std::string>());
      Monomial::Factors f;
      for (const auto& pr : t.at("monomial"))
        f.emplace_back(mode.canonIndex(pr.at(0).get<long>()), pr.at(1).get<unsigned>());
      p.addTerm(Monomial(std::move(f)), c);
    }
    return p;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(Errc::parse, std::string("poly JSON: ") + e.what());
  }
}

/*=========================== small utilities ==========================*/

Poly elemSym(const std::vector<Poly>& xs, long k, RingMode mode) {
  if (k < 0) return Poly::zero(mode);
  std::vector<Poly> e(k + 1, Poly::zero(mode));
  e[0] = Poly::constant(mode, 1);
  for (const Poly& x : xs)
    for (long j = k; j >= 1; --j) e[j] = e[j] + x * e[j - 1];
  return e[k];
}

Poly complSym(const std::vector<Poly>& xs, long k, RingMode mode) {
  if (k < 0) return Poly::zero(mode);
  std::vector<Poly> h(k + 1, Poly::zero(mode));
  h[0] = Poly::constant(mode, 1);
  for (const Poly& x : xs)
    for (long j = 1; j <= k; ++j) h[j] = h[j] + x * h[j - 1];
  return h[k];
}

}  // namespace affschur
