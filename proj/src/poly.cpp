#include "wigner/poly.hpp"

#include <algorithm>
#include <cmath>

namespace wigner {

mpz_class falling(int n, int k) {
  if (k > n) return 0;
  mpz_class r = 1;
  for (int i = 0; i < k; ++i) r *= (n - i);
  return r;
}

mpz_class binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

namespace {

void accumulate(PolySymbol::Terms& terms, Exponents e, const CRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

}  // namespace

PolySymbol::PolySymbol(Terms terms) {
  for (auto& [e, c] : terms)
    if (!c.is_zero()) terms_.emplace(e, std::move(c));
}

PolySymbol::PolySymbol(const CRat& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{0, 0}, c);
}

PolySymbol PolySymbol::x() { return monomial(1, 0); }
PolySymbol PolySymbol::p() { return monomial(0, 1); }

PolySymbol PolySymbol::monomial(int a, int b, const CRat& c) {
  PolySymbol r;
  if (!c.is_zero()) r.terms_.emplace(Exponents{a, b}, c);
  return r;
}

bool PolySymbol::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
}

int PolySymbol::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.x + e.p);
  return d;
}

CRat PolySymbol::coeff(int a, int b) const {
  auto it = terms_.find(Exponents{a, b});
  return it == terms_.end() ? CRat() : it->second;
}

PolySymbol PolySymbol::conj() const {
  PolySymbol r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.conj());
  return r;
}

PolySymbol PolySymbol::dx(int order) const {
  PolySymbol r;
  for (const auto& [e, c] : terms_) {
    if (e.x < order) continue;
    r.terms_.emplace(Exponents{e.x - order, e.p}, c * CRat(Rational(falling(e.x, order))));
  }
  return r;
}

PolySymbol PolySymbol::dp(int order) const {
  PolySymbol r;
  for (const auto& [e, c] : terms_) {
    if (e.p < order) continue;
    r.terms_.emplace(Exponents{e.x, e.p - order}, c * CRat(Rational(falling(e.p, order))));
  }
  return r;
}

std::complex<double> PolySymbol::evaluate(double x, double p) const {
  std::complex<double> s = 0.0;
  for (const auto& [e, c] : terms_) s += c.to_complex() * std::pow(x, e.x) * std::pow(p, e.p);
  return s;
}

PolySymbol PolySymbol::operator-() const {
  PolySymbol r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

PolySymbol& PolySymbol::operator+=(const PolySymbol& o) {
  for (const auto& [e, c] : o.terms_) accumulate(terms_, e, c);
  return *this;
}

PolySymbol& PolySymbol::operator-=(const PolySymbol& o) {
  for (const auto& [e, c] : o.terms_) accumulate(terms_, e, -c);
  return *this;
}

PolySymbol& PolySymbol::operator*=(const CRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

PolySymbol operator*(const PolySymbol& a, const PolySymbol& b) {
  PolySymbol::Terms t;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) accumulate(t, Exponents{ea.x + eb.x, ea.p + eb.p}, ca * cb);
  return PolySymbol(std::move(t));
}

}  // namespace wigner
