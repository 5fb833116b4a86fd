#pragma once

// The small-torus affine nilHecke algebra for a fixed period n: finite
// S-linear combinations of divided-difference basis elements A_w indexed by
// affine permutations, with S the cyclic parameter ring. Provides the
// product (through the scalar commutation relation), the expansion of group
// elements over the A-basis (whose coefficients are the Schubert
// localizations), and the coproduct into the S-tensor square.

#include <map>
#include <utility>

#include "affschur/perm.hpp"
#include "affschur/poly.hpp"

namespace affschur {

class NilHeckeElt {
 public:
  explicit NilHeckeElt(long n) : n_(n) {
    if (n < 2) fail(Errc::usage, "NilHeckeElt: period must be >= 2");
  }

  static NilHeckeElt basis(const AffinePerm& w);
  static NilHeckeElt basis(const AffinePerm& w, const Poly& c);

  long n() const { return n_; }
  RingMode mode() const { return RingMode::cyclic(static_cast<int>(n_)); }
  const std::map<AffinePerm, Poly>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  Poly coeff(const AffinePerm& w) const;

  // Accumulate c at A_w, dropping the term if it cancels.
  void add(const AffinePerm& w, const Poly& c);

  NilHeckeElt operator+(const NilHeckeElt& o) const;
  NilHeckeElt operator-(const NilHeckeElt& o) const;
  NilHeckeElt operator-() const;
  NilHeckeElt scale(const Poly& f) const;  // left multiplication by a scalar
  bool operator==(const NilHeckeElt& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }
  bool operator!=(const NilHeckeElt& o) const { return !(*this == o); }

  // True when every term satisfies length(w) - deg(coefficient) == d for a
  // common d (coefficients themselves homogeneous); reports d.
  bool isHomogeneous(long* degOut = nullptr) const;

 private:
  long n_;
  std::map<AffinePerm, Poly> terms_;
};

// The element A_w * f rewritten with all scalars on the left: an S-linear
// combination supported on {x <= w} whose top term is (w.f) A_w.
NilHeckeElt scalarCommute(const AffinePerm& w, const Poly& f);

// Left multiplication of an element by the single generator A_i.
NilHeckeElt applyA(long i, const NilHeckeElt& x);

// Associative algebra product.
NilHeckeElt multiply(const NilHeckeElt& x, const NilHeckeElt& y);

// Expansion of the group element w over the A-basis; the coefficient of A_v
// is the localization of the v-th Schubert class at w. Independent of the
// reduced word used.
NilHeckeElt expandGroupElt(const AffinePerm& w);

// The localization of the w-th Schubert class at w itself: the product of
// the level-zero parts of the inversion roots of w.
Poly diagonalLocalization(const AffinePerm& w);

// Element of the S-tensor square, kept in canonical form with every scalar
// slid into the left slot; right-slot basis elements carry no scalars.
class NilHeckeTensor {
 public:
  explicit NilHeckeTensor(long n) : n_(n) {
    if (n < 2) fail(Errc::usage, "NilHeckeTensor: period must be >= 2");
  }

  long n() const { return n_; }
  RingMode mode() const { return RingMode::cyclic(static_cast<int>(n_)); }
  const std::map<std::pair<AffinePerm, AffinePerm>, Poly>& terms() const {
    return terms_;
  }
  bool isZero() const { return terms_.empty(); }
  Poly coeff(const AffinePerm& u, const AffinePerm& v) const;
  void add(const AffinePerm& u, const AffinePerm& v, const Poly& c);

  NilHeckeTensor operator+(const NilHeckeTensor& o) const;
  NilHeckeTensor operator-(const NilHeckeTensor& o) const;
  NilHeckeTensor scale(const Poly& f) const;  // scalar into the left slot
  bool operator==(const NilHeckeTensor& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }
  bool operator!=(const NilHeckeTensor& o) const { return !(*this == o); }

 private:
  long n_;
  std::map<std::pair<AffinePerm, AffinePerm>, Poly> terms_;
};

// Componentwise product of tensors. Only well defined when the factors lie
// in the image of the coproduct; callers outside the coproduct pipeline are
// responsible for that containment.
NilHeckeTensor tensorMultiply(const NilHeckeTensor& a, const NilHeckeTensor& b);

// Coproduct: A_i maps to A_i x 1 + 1 x A_i + alpha_i A_i x A_i, extended
// along reduced words multiplicatively and left S-linearly. Independent of
// the chosen reduced words.
NilHeckeTensor coproduct(const NilHeckeElt& x);

// Canonical form of the simple tensor a (x) b: scalars of the right factor
// are slid across the bar into the left slot.
NilHeckeTensor tensorOf(const NilHeckeElt& a, const NilHeckeElt& b);

}  // namespace affschur
