#include "ccr/polynomial.hpp"

#include <stdexcept>

namespace ccr {

int Monomial::degree() const {
  int d = 0;
  for (unsigned e : exps) d += static_cast<int>(e);
  return d;
}

bool Monomial::operator<(const Monomial& other) const {
  int da = degree(), db = other.degree();
  if (da != db) return da < db;
  // Within a degree class a higher power on an earlier coordinate sorts
  // first, which keeps printed polynomials in the familiar x0-major order.
  return exps > other.exps;
}

Polynomial::Polynomial(int coord_count) : coord_count_(coord_count) {
  if (coord_count < 1 || coord_count > 16)
    throw std::invalid_argument("polynomial coordinate count out of range");
}

Polynomial Polynomial::constant(int coord_count, Rational value) {
  Polynomial p(coord_count);
  p.accumulate(Monomial{std::vector<unsigned>(static_cast<std::size_t>(coord_count), 0u)},
               value);
  return p;
}

Polynomial Polynomial::variable(int coord_count, int slot) {
  if (slot < 0 || slot >= coord_count)
    throw std::out_of_range("coordinate slot out of range");
  Monomial m{std::vector<unsigned>(static_cast<std::size_t>(coord_count), 0u)};
  m.exps[static_cast<std::size_t>(slot)] = 1;
  Polynomial p(coord_count);
  p.accumulate(std::move(m), Rational(1));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void Polynomial::accumulate(Monomial m, const Rational& c) {
  if (c == 0) return;
  if (m.exps.size() != static_cast<std::size_t>(coord_count_))
    throw std::invalid_argument("monomial has wrong coordinate count");
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::derivative(int slot) const {
  if (slot < 0 || slot >= coord_count_)
    throw std::out_of_range("coordinate slot out of range");
  Polynomial out(coord_count_);
  for (const auto& [m, c] : terms_) {
    unsigned e = m.exps[static_cast<std::size_t>(slot)];
    if (e == 0) continue;
    Monomial dm = m;
    dm.exps[static_cast<std::size_t>(slot)] = e - 1;
    out.accumulate(std::move(dm), c * Rational(e));
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != static_cast<std::size_t>(coord_count_))
    throw std::invalid_argument("evaluation point has wrong coordinate count");
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < m.exps.size(); ++i)
      for (unsigned k = 0; k < m.exps[i]; ++k) term *= point[i];
    total += term;
  }
  return total;
}

double Polynomial::evaluate(std::span<const double> point) const {
  if (point.size() != static_cast<std::size_t>(coord_count_))
    throw std::invalid_argument("evaluation point has wrong coordinate count");
  double total = 0.0;
  for (const auto& [m, c] : terms_) {
    double term = to_double(c);
    for (std::size_t i = 0; i < m.exps.size(); ++i)
      for (unsigned k = 0; k < m.exps[i]; ++k) term *= point[i];
    total += term;
  }
  return total;
}

namespace {
void require_same_coords(const Polynomial& a, const Polynomial& b) {
  if (a.coord_count() != b.coord_count())
    throw std::invalid_argument("polynomial coordinate counts differ");
}
}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_coords(a, b);
  Polynomial result(a.coord_count());
  for (const auto& [m, c] : a.terms()) result.accumulate(m, c);
  for (const auto& [m, c] : b.terms()) result.accumulate(m, c);
  return result;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out(a.coord_count());
  for (const auto& [m, c] : a.terms()) out.accumulate(m, -c);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_coords(a, b);
  Polynomial out(a.coord_count());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m = ma;
      for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] += mb.exps[i];
      out.accumulate(std::move(m), ca * cb);
    }
  }
  return out;
}

Polynomial operator*(const Polynomial& a, const Rational& s) {
  Polynomial out(a.coord_count());
  for (const auto& [m, c] : a.terms()) out.accumulate(m, c * s);
  return out;
}

Polynomial operator*(const Rational& s, const Polynomial& a) { return a * s; }

}  // namespace ccr
