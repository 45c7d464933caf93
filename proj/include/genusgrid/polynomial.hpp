#pragma once

#include "genusgrid/bigint.hpp"
#include "genusgrid/error.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <utility>
#include <vector>

namespace genusgrid {

/// Sparse univariate polynomial with nonnegative exponents of type E and
/// coefficients of type C. Terms are kept sorted by exponent, without zero
/// coefficients.
template <class E = BigInt, class C = BigInt>
class SparsePolynomial {
 public:
  using Term = std::pair<E, C>;

  SparsePolynomial() = default;
  SparsePolynomial(int constant) {  // NOLINT: integral literals act as constants
    if (constant != 0) terms_.emplace_back(E(0), C(constant));
  }
  static SparsePolynomial monomial(const E& exponent, const C& coefficient) {
    SparsePolynomial p;
    if (coefficient != 0) p.terms_.emplace_back(exponent, coefficient);
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& lowest() const { return terms_.front(); }
  const Term& highest() const { return terms_.back(); }

  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

  SparsePolynomial operator-() const {
    SparsePolynomial r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend SparsePolynomial operator+(const SparsePolynomial& a, const SparsePolynomial& b) { return merge(a, b, false); }
  friend SparsePolynomial operator-(const SparsePolynomial& a, const SparsePolynomial& b) { return merge(a, b, true); }
  SparsePolynomial& operator+=(const SparsePolynomial& b) { return *this = merge(*this, b, false); }
  SparsePolynomial& operator-=(const SparsePolynomial& b) { return *this = merge(*this, b, true); }

  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    SparsePolynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    r.terms_.reserve(a.size() * b.size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.terms_.emplace_back(ea + eb, ca * cb);
    r.normalize();
    return r;
  }
  SparsePolynomial& operator*=(const SparsePolynomial& b) { return *this = *this * b; }

  /// Exact quotient; throws NotExact when b does not divide a.
  friend SparsePolynomial operator/(const SparsePolynomial& a, const SparsePolynomial& b) {
    if (b.is_zero()) throw Error(ErrorKind::NotExact, "division by the zero polynomial");
    SparsePolynomial quotient, rest = a;
    const auto& [eb, cb] = b.highest();
    while (!rest.is_zero()) {
      const auto& [er, cr] = rest.highest();
      if (er < eb || cr % cb != 0) throw Error(ErrorKind::NotExact, "polynomial division leaves a remainder");
      SparsePolynomial step = monomial(E(er - eb), C(cr / cb));
      quotient.terms_.insert(quotient.terms_.begin(), step.terms_.front());
      rest -= step * b;
    }
    return quotient;
  }

 private:
  static SparsePolynomial merge(const SparsePolynomial& a, const SparsePolynomial& b, bool subtract) {
    SparsePolynomial r;
    r.terms_.reserve(a.size() + b.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
        r.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->first < i->first) {
        r.terms_.emplace_back(j->first, subtract ? C(-j->second) : j->second);
        ++j;
      } else {
        C c = subtract ? C(i->second - j->second) : C(i->second + j->second);
        if (c != 0) r.terms_.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
      E e = terms_[i].first;
      C c = 0;
      for (; i < terms_.size() && terms_[i].first == e; ++i) c += terms_[i].second;
      if (c != 0) terms_[out++] = Term(std::move(e), std::move(c));
    }
    terms_.resize(out);
  }

  std::vector<Term> terms_;
};

}  // namespace genusgrid

namespace Eigen {

template <class E, class C>
struct NumTraits<genusgrid::SparsePolynomial<E, C>> : GenericNumTraits<genusgrid::SparsePolynomial<E, C>> {
  using Real = genusgrid::SparsePolynomial<E, C>;
  using NonInteger = genusgrid::SparsePolynomial<E, C>;
  using Nested = genusgrid::SparsePolynomial<E, C>;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 64,
  };
};

}  // namespace Eigen
