#include "doctest.h"

#include <map>
#include <tuple>
#include <vector>

#include "affschur/nilhecke.hpp"
#include "test_util.hpp"

using namespace affschur;
namespace tu = affschur::testutil;

namespace {

Poly cvar(int n, long i) { return Poly::var(RingMode::cyclic(n), i); }
Poly cone(int n) { return Poly::constant(RingMode::cyclic(n), 1); }

// Fold f A_id under the letters of `word` right-to-left: computes A_word * f
// without going through the canonical reduced word.
NilHeckeElt commuteAlongWord(long n, const std::vector<long>& word, const Poly& f) {
  NilHeckeElt acc = NilHeckeElt::basis(AffinePerm::identity(static_cast<int>(n)), f);
  for (auto it = word.rbegin(); it != word.rend(); ++it) acc = applyA(*it, acc);
  return acc;
}

// Coproduct of A_word evaluated along the given (reduced) word.
NilHeckeTensor coproductAlongWord(long n, const std::vector<long>& word) {
  int ni = static_cast<int>(n);
  AffinePerm id = AffinePerm::identity(ni);
  NilHeckeTensor acc(n);
  acc.add(id, id, cone(ni));
  for (long i : word) {
    AffinePerm si = AffinePerm::simple(ni, i);
    NilHeckeTensor dai(n);
    dai.add(si, id, cone(ni));
    dai.add(id, si, cone(ni));
    dai.add(si, si, simpleRootAff(ni, i));
    acc = tensorMultiply(acc, dai);
  }
  return acc;
}

// A linear functional on the algebra, encoded by its values on the A-basis.
using DualFn = std::map<AffinePerm, Poly>;

Poly evalFn(const DualFn& f, const NilHeckeElt& x) {
  Poly r = Poly::zero(x.mode());
  for (const auto& [w, c] : x.terms()) {
    auto it = f.find(w);
    if (it != f.end()) r = r + c * it->second;
  }
  return r;
}

// Product of functionals induced by the coproduct: (f g)(A_x) pairs f x g
// slotwise against the canonical form of the coproduct of A_x.
Poly inducedProductAt(long n, const DualFn& f, const DualFn& g, const AffinePerm& x) {
  Poly r = Poly::zero(RingMode::cyclic(static_cast<int>(n)));
  NilHeckeTensor d = coproduct(NilHeckeElt::basis(x));
  for (const auto& [k, c] : d.terms()) {
    auto fu = f.find(k.first);
    auto gv = g.find(k.second);
    if (fu != f.end() && gv != g.end()) r = r + c * fu->second * gv->second;
  }
  return r;
}

DualFn inducedProduct(long n, const DualFn& f, const DualFn& g, long maxLen) {
  DualFn out;
  for (const AffinePerm& x : affineBallOfLength(static_cast<int>(n), maxLen)) {
    Poly v = inducedProductAt(n, f, g, x);
    if (!v.isZero()) out.emplace(x, v);
  }
  return out;
}

// Value of the functional on the group element w (through the A-expansion).
Poly evalAtGroup(const DualFn& f, const AffinePerm& w) {
  return evalFn(f, expandGroupElt(w));
}

}  // namespace

TEST_SUITE("nilhecke") {

TEST_CASE("generator past a scalar: A_1 a_1 at n=2") {
  AffinePerm s1 = AffinePerm::simple(2, 1);
  NilHeckeElt r = scalarCommute(s1, cvar(2, 1));
  CHECK(r.terms().size() == 2);
  CHECK(r.coeff(AffinePerm::identity(2)) == -cone(2));
  CHECK(r.coeff(s1) == cvar(2, 2));
  // constants pass straight through
  NilHeckeElt c = scalarCommute(s1, Poly::constant(RingMode::cyclic(2), Rational(5)));
  CHECK(c.terms().size() == 1);
  CHECK(c.coeff(s1) == Poly::constant(RingMode::cyclic(2), Rational(5)));
  // commuting past the identity is a no-op
  Poly f = cvar(2, 1) * cvar(2, 2) + cvar(2, 1);
  NilHeckeElt idc = scalarCommute(AffinePerm::identity(2), f);
  CHECK(idc == NilHeckeElt::basis(AffinePerm::identity(2), f));
}

TEST_CASE("scalar commutation: top coefficient and Bruhat support") {
  for (int n : {2, 3}) {
    auto rng = tu::makeRng(70 + n);
    for (const AffinePerm& w : affineBallOfLength(n, 4)) {
      Poly f = tu::randPoly(rng, RingMode::cyclic(n), 1, n, 2, 3);
      NilHeckeElt r = scalarCommute(w, f);
      CHECK(r.coeff(w) == actPerm(w, f));
      for (const auto& [x, c] : r.terms()) {
        CHECK(bruhatLeq(x, w));
        (void)c;
      }
    }
  }
}

TEST_CASE("scalar commutation is word independent") {
  // braid pair inside the n=3 affine group
  Poly f3 = cvar(3, 1) * cvar(3, 1) + cvar(3, 2) * cvar(3, 3);
  CHECK(AffinePerm::fromWord(3, {0, 1, 0}) == AffinePerm::fromWord(3, {1, 0, 1}));
  CHECK(commuteAlongWord(3, {0, 1, 0}, f3) == commuteAlongWord(3, {1, 0, 1}, f3));
  // commuting pair at n=4
  Poly f4 = cvar(4, 2) * cvar(4, 4);
  CHECK(commuteAlongWord(4, {0, 2}, f4) == commuteAlongWord(4, {2, 0}, f4));
  // canonical-word entry point agrees with explicit words
  CHECK(scalarCommute(AffinePerm::fromWord(3, {0, 1, 0}), f3) ==
        commuteAlongWord(3, {1, 0, 1}, f3));
}

TEST_CASE("products of basis elements") {
  AffinePerm s0 = AffinePerm::simple(2, 0);
  AffinePerm s1 = AffinePerm::simple(2, 1);
  // nil relation
  CHECK(multiply(NilHeckeElt::basis(s0), NilHeckeElt::basis(s0)).isZero());
  // reduced composition
  CHECK(multiply(NilHeckeElt::basis(s0), NilHeckeElt::basis(s1)) ==
        NilHeckeElt::basis(s0.mul(s1)));
  // scalar on the left just rides along
  NilHeckeElt a1id = NilHeckeElt::basis(AffinePerm::identity(2), cvar(2, 1));
  CHECK(multiply(a1id, NilHeckeElt::basis(s1)) == NilHeckeElt::basis(s1, cvar(2, 1)));
  // scalar on the right gets commuted through
  NilHeckeElt r = multiply(NilHeckeElt::basis(s1), a1id);
  CHECK(r.coeff(AffinePerm::identity(2)) == -cone(2));
  CHECK(r.coeff(s1) == cvar(2, 2));
  // identity element
  NilHeckeElt one = NilHeckeElt::basis(AffinePerm::identity(2));
  NilHeckeElt x = NilHeckeElt::basis(s0, cvar(2, 2)) + NilHeckeElt::basis(s1);
  CHECK(multiply(one, x) == x);
  CHECK(multiply(x, one) == x);
}

TEST_CASE("product is associative on random elements") {
  for (int n : {2, 3}) {
    auto rng = tu::makeRng(100 + n);
    for (int t = 0; t < 6; ++t) {
      NilHeckeElt a(n), b(n), c(n);
      for (int k = 0; k < 2; ++k) {
        a.add(AffinePerm::fromWord(n, tu::randWord(rng, 0, n - 1, 2)),
              tu::randPoly(rng, RingMode::cyclic(n), 1, n, 2, 2));
        b.add(AffinePerm::fromWord(n, tu::randWord(rng, 0, n - 1, 2)),
              tu::randPoly(rng, RingMode::cyclic(n), 1, n, 2, 2));
        c.add(AffinePerm::fromWord(n, tu::randWord(rng, 0, n - 1, 2)),
              tu::randPoly(rng, RingMode::cyclic(n), 1, n, 2, 2));
      }
      CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
  }
}

TEST_CASE("grading") {
  // basis elements are homogeneous of their length
  for (int n : {2, 3})
    for (const AffinePerm& w : affineBallOfLength(n, 4)) {
      long d = -1;
      CHECK(NilHeckeElt::basis(w).isHomogeneous(&d));
      CHECK(d == w.length());
    }
  // scalars lower the degree
  long d = 99;
  CHECK(NilHeckeElt::basis(AffinePerm::simple(2, 0), cvar(2, 1) * cvar(2, 1))
            .isHomogeneous(&d));
  CHECK(d == -1);
  // mixed-degree combinations are flagged
  NilHeckeElt mixed = NilHeckeElt::basis(AffinePerm::simple(2, 0)) +
                      NilHeckeElt::basis(AffinePerm::identity(2));
  CHECK_FALSE(mixed.isHomogeneous());
  // commuting a homogeneous scalar preserves the total degree
  Poly f = cvar(3, 1) * cvar(3, 2);
  for (const AffinePerm& w : affineBallOfLength(3, 3)) {
    NilHeckeElt r = scalarCommute(w, f);
    long rd = 0;
    CHECK(r.isHomogeneous(&rd));
    CHECK(rd == w.length() - 2);
  }
  // products add degrees
  NilHeckeElt x = NilHeckeElt::basis(AffinePerm::simple(3, 0), cvar(3, 1));
  NilHeckeElt y = NilHeckeElt::basis(AffinePerm::fromWord(3, {1, 2}));
  long pd = 0;
  CHECK(multiply(x, y).isHomogeneous(&pd));
  CHECK(pd == 0 + 2);
}

TEST_CASE("group elements expand with localization coefficients") {
  // s_i = A_id + alpha_i A_{s_i}
  for (int n : {2, 3})
    for (long i = 0; i < n; ++i) {
      AffinePerm si = AffinePerm::simple(n, i);
      NilHeckeElt e = expandGroupElt(si);
      CHECK(e.terms().size() == 2);
      CHECK(e.coeff(AffinePerm::identity(n)) == cone(n));
      CHECK(e.coeff(si) == simpleRootAff(n, i));
    }
  // identity expands to A_id
  CHECK(expandGroupElt(AffinePerm::identity(2)) ==
        NilHeckeElt::basis(AffinePerm::identity(2)));
  // expansion respects the group product (both sides expand w v)
  AffinePerm u = AffinePerm::fromWord(3, {0, 1});
  AffinePerm v = AffinePerm::fromWord(3, {2, 0});
  CHECK(multiply(expandGroupElt(u), expandGroupElt(v)) ==
        expandGroupElt(u.mul(v)));
}

TEST_CASE("localization table properties over small balls") {
  for (int n : {2, 3}) {
    for (const AffinePerm& w : affineBallOfLength(n, 5)) {
      NilHeckeElt e = expandGroupElt(w);
      // group elements sit in degree zero
      long d = 1;
      CHECK(e.isHomogeneous(&d));
      CHECK(d == 0);
      // support is the lower Bruhat interval, every coefficient homogeneous
      for (const auto& [v, c] : e.terms()) {
        CHECK(bruhatLeq(v, w));
        long cd = -1;
        CHECK(c.isHomogeneous(&cd));
        CHECK(cd == v.length());
      }
      // the class at the identity always localizes to 1
      CHECK(e.coeff(AffinePerm::identity(n)) == cone(n));
      // diagonal coefficient matches the inversion-root product
      CHECK(e.coeff(w) == diagonalLocalization(w));
    }
  }
}

TEST_CASE("diagonal localization closed cases") {
  // simple reflections give their simple root
  for (int n : {2, 3})
    for (long i = 0; i < n; ++i)
      CHECK(diagonalLocalization(AffinePerm::simple(n, i)) == simpleRootAff(n, i));
  CHECK(diagonalLocalization(AffinePerm::identity(2)) == cone(2));
  // n=2: both left inversion roots of s_1 s_0 project to alpha_1
  Poly alpha0 = simpleRootAff(2, 0);
  Poly alpha1 = simpleRootAff(2, 1);
  CHECK(diagonalLocalization(AffinePerm::fromWord(2, {1, 0})) == alpha1 * alpha1);
  CHECK(diagonalLocalization(AffinePerm::fromWord(2, {0, 1})) == alpha0 * alpha0);
  // degree equals the length
  for (const AffinePerm& w : affineBallOfLength(3, 4)) {
    long d = -1;
    CHECK(diagonalLocalization(w).isHomogeneous(&d));
    CHECK(d == w.length());
  }
}

TEST_CASE("coproduct of generators and the identity") {
  AffinePerm id2 = AffinePerm::identity(2);
  AffinePerm s0 = AffinePerm::simple(2, 0);
  NilHeckeTensor d0 = coproduct(NilHeckeElt::basis(s0));
  CHECK(d0.terms().size() == 3);
  CHECK(d0.coeff(s0, id2) == cone(2));
  CHECK(d0.coeff(id2, s0) == cone(2));
  CHECK(d0.coeff(s0, s0) == simpleRootAff(2, 0));
  CHECK(coproduct(NilHeckeElt::basis(id2)).coeff(id2, id2) == cone(2));
  CHECK(coproduct(NilHeckeElt::basis(id2)).terms().size() == 1);
  // left linearity over scalars
  NilHeckeTensor ds = coproduct(NilHeckeElt::basis(s0, cvar(2, 1)));
  CHECK(ds == d0.scale(cvar(2, 1)));
}

TEST_CASE("coproduct is word independent and multiplicative") {
  CHECK(coproductAlongWord(3, {0, 1, 0}) == coproductAlongWord(3, {1, 0, 1}));
  CHECK(coproductAlongWord(4, {0, 2}) == coproductAlongWord(4, {2, 0}));
  CHECK(coproduct(NilHeckeElt::basis(AffinePerm::fromWord(3, {0, 1, 0}))) ==
        coproductAlongWord(3, {1, 0, 1}));
  // algebra map: coproduct of a product equals the product of coproducts
  for (int n : {2, 3}) {
    auto rng = tu::makeRng(40 + n);
    for (int t = 0; t < 4; ++t) {
      NilHeckeElt a = NilHeckeElt::basis(
          AffinePerm::fromWord(n, tu::randWord(rng, 0, n - 1, 2)),
          tu::randPoly(rng, RingMode::cyclic(n), 1, n, 1, 2));
      NilHeckeElt b = NilHeckeElt::basis(
          AffinePerm::fromWord(n, tu::randWord(rng, 0, n - 1, 2)),
          tu::randPoly(rng, RingMode::cyclic(n), 1, n, 1, 2));
      CHECK(coproduct(multiply(a, b)) == tensorMultiply(coproduct(a), coproduct(b)));
    }
  }
}

TEST_CASE("coproduct dualizes pointwise multiplication of functionals") {
  // The product of functionals induced by the coproduct must agree with the
  // pointwise product of their values on group elements.
  for (int n : {2, 3}) {
    auto rng = tu::makeRng(700 + n);
    DualFn f, g;
    for (const AffinePerm& v : affineBallOfLength(n, 2)) {
      f[v] = tu::randPoly(rng, RingMode::cyclic(n), 1, n, 1, 2);
      g[v] = tu::randPoly(rng, RingMode::cyclic(n), 1, n, 1, 2);
    }
    DualFn fg = inducedProduct(n, f, g, 4);
    for (const AffinePerm& w : affineBallOfLength(n, 4))
      CHECK(evalAtGroup(fg, w) == evalAtGroup(f, w) * evalAtGroup(g, w));
  }
}

TEST_CASE("coproduct: the induced dual product is associative (coassociativity)") {
  for (int n : {2, 3}) {
    auto rng = tu::makeRng(800 + n);
    DualFn f, g, h;
    for (const AffinePerm& v : affineBallOfLength(n, 2)) {
      f[v] = tu::randPoly(rng, RingMode::cyclic(n), 1, n, 1, 2);
      g[v] = tu::randPoly(rng, RingMode::cyclic(n), 1, n, 1, 2);
      h[v] = tu::randPoly(rng, RingMode::cyclic(n), 1, n, 1, 2);
    }
    DualFn fg = inducedProduct(n, f, g, 4);
    DualFn gh = inducedProduct(n, g, h, 4);
    for (const AffinePerm& x : affineBallOfLength(n, 3))
      CHECK(inducedProductAt(n, fg, h, x) == inducedProductAt(n, f, gh, x));
  }
}

TEST_CASE("counit picks out the identity slot") {
  for (int n : {2, 3})
    for (const AffinePerm& w : affineBallOfLength(n, 3)) {
      AffinePerm id = AffinePerm::identity(n);
      NilHeckeElt x = NilHeckeElt::basis(w, cvar(n, 1) + cvar(n, n));
      NilHeckeTensor d = coproduct(x);
      // (counit x id): keep terms whose left slot is the identity
      NilHeckeElt left(n), right(n);
      for (const auto& [k, c] : d.terms()) {
        if (k.first == id) left.add(k.second, c);
        if (k.second == id) right.add(k.first, c);
      }
      CHECK(left == x);
      CHECK(right == x);
    }
}

}  // TEST_SUITE
