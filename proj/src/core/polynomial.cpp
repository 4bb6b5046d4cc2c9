#include "rrclosure/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "rrclosure/error.hpp"

namespace rrc {

Ring::Ring(Field field, std::vector<std::string> variables, TermOrder order)
    : field_(field), vars_(std::move(variables)), order_(order) {
  if (vars_.empty()) throw Error(ErrorCode::InvalidArgument, "a ring needs at least one variable");
  if (vars_.size() > kMaxVariables)
    throw Error(ErrorCode::InvalidArgument,
                "at most " + std::to_string(kMaxVariables) + " variables are supported");
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j])
        throw Error(ErrorCode::InvalidArgument, "duplicate variable '" + vars_[i] + "'");
}

int Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

RingPtr make_ring(Field field, std::vector<std::string> variables, TermOrder order) {
  return std::make_shared<const Ring>(field, std::move(variables), order);
}

Polynomial::Polynomial(RingPtr ring, const Scalar& c) : ring_(std::move(ring)) {
  if (!c.is_zero()) terms_.push_back({Monomial(ring_->nvars()), c});
}

Polynomial::Polynomial(RingPtr ring, const Monomial& m, const Scalar& c) : ring_(std::move(ring)) {
  if (m.size() != ring_->nvars())
    throw Error(ErrorCode::RingMismatch, "monomial has the wrong number of variables");
  if (!c.is_zero()) terms_.push_back({m, c});
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.monomial.size() != ring_->nvars())
      throw Error(ErrorCode::RingMismatch, "monomial has the wrong number of variables");
  normalize();
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  auto n = ring->nvars();
  return Polynomial(std::move(ring), Monomial::variable(n, index), Scalar(1));
}

void Polynomial::normalize() {
  const auto& ord = ring_->order();
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return ord.compare(a.monomial, b.monomial) > 0;
  });
  const auto& K = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient = K.add(out.back().coefficient, t.coefficient);
    } else {
      if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
  terms_ = std::move(out);
}

void Polynomial::check_same_ring(const Polynomial& g) const {
  if (ring_ != g.ring_ && !(ring_ && g.ring_ && *ring_ == *g.ring_))
    throw Error(ErrorCode::RingMismatch, "polynomials belong to different rings");
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no leading term");
  return terms_.front();
}

std::int64_t Polynomial::total_degree() const {
  std::int64_t d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coefficient = ring_->field().neg(t.coefficient);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  check_same_ring(g);
  const auto& ord = ring_->order();
  const auto& K = ring_->field();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < g.terms_.size()) {
    int c = ord.compare(terms_[i].monomial, g.terms_[j].monomial);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(g.terms_[j++]);
    } else {
      Scalar s = K.add(terms_[i].coefficient, g.terms_[j].coefficient);
      if (!s.is_zero()) r.terms_.push_back({terms_[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < g.terms_.size(); ++j) r.terms_.push_back(g.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::sub_mul(const Scalar& c, const Monomial& m, const Polynomial& g) const {
  check_same_ring(g);
  const auto& ord = ring_->order();
  const auto& K = ring_->field();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  // multiplication by a monomial preserves the order of g's terms
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
      continue;
    }
    Monomial gm = g.terms_[j].monomial * m;
    int cmp = i == terms_.size() ? -1 : ord.compare(terms_[i].monomial, gm);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back({gm, K.neg(K.mul(c, g.terms_[j].coefficient))});
      ++j;
    } else {
      Scalar s = K.sub(terms_[i].coefficient, K.mul(c, g.terms_[j].coefficient));
      if (!s.is_zero()) r.terms_.push_back({gm, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  check_same_ring(g);
  if (is_zero() || g.is_zero()) return Polynomial(ring_);
  const auto& K = ring_->field();
  std::vector<Term> prods;
  prods.reserve(terms_.size() * g.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : g.terms_)
      prods.push_back({a.monomial * b.monomial, K.mul(a.coefficient, b.coefficient)});
  return Polynomial(ring_, std::move(prods));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coefficient = ring_->field().mul(t.coefficient, c);
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r(*this);
  for (auto& t : r.terms_) {
    t.monomial = t.monomial * m;
    t.coefficient = ring_->field().mul(t.coefficient, c);
  }
  return r;
}

Polynomial Polynomial::pow(std::int64_t n) const {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative polynomial power");
  if (is_monomial())
    return Polynomial(ring_, terms_[0].monomial.pow(n),
                      ring_->field().pow(terms_[0].coefficient, static_cast<unsigned long>(n)));
  Polynomial result(ring_, ring_->field().one());
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(leading_coefficient()));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
        !(a.terms_[i].coefficient == b.terms_[i].coefficient))
      return false;
  return true;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += names[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    mpq_class c = t.coefficient.value();
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (i == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.monomial.is_one()) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += monomial_to_string(t.monomial, ring_->variables());
    }
  }
  return out;
}

Term leading_term(const Polynomial& f, const TermOrder& order) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no leading term");
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (order.compare(t.monomial, best->monomial) > 0) best = &t;
  return *best;
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  const auto& ring = f.ring();
  const auto& K = ring->field();
  const Term& lt = g.leading_term();
  Polynomial rest = f;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const Term& t = rest.leading_term();
    if (!lt.monomial.divides(t.monomial))
      throw Error(ErrorCode::InvalidArgument, "polynomial division is not exact");
    Monomial q = t.monomial / lt.monomial;
    Scalar c = K.div(t.coefficient, lt.coefficient);
    quotient.push_back({q, c});
    rest = rest.sub_mul(c, q, g);
  }
  return Polynomial(ring, std::move(quotient));
}

}  // namespace rrc
