#include "rrclosure/ideal.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "rrclosure/error.hpp"
#include "rrclosure/linalg.hpp"

namespace rrc {

namespace detail {

struct IdealState {
  RingPtr ring;
  std::vector<Polynomial> gens;

  std::mutex mu;
  std::optional<ReducedBasis> basis;
  std::optional<monomial_ideal::Gens> lead;
  std::optional<Colength> colength;
  std::optional<std::string> witness;
};

}  // namespace detail

namespace {

using monomial_ideal::Gens;

template <typename T, typename F>
const T& cached(detail::IdealState& s, std::optional<T>& slot, F compute) {
  {
    std::lock_guard lock(s.mu);
    if (slot) return *slot;
  }
  T value = compute();
  std::lock_guard lock(s.mu);
  if (!slot) slot = std::move(value);
  return *slot;
}

bool all_monomial(std::span<const Polynomial> polys) {
  return std::all_of(polys.begin(), polys.end(),
                     [](const Polynomial& p) { return p.is_monomial(); });
}

Gens monomials_of(std::span<const Polynomial> polys) {
  Gens out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(p.leading_monomial());
  return out;
}

void check_same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring() && !(*a.ring() == *b.ring()))
    throw Error(ErrorCode::RingMismatch, "ideals belong to different rings");
}

Polynomial pow_mod(const Polynomial& base, std::uint64_t e, const ReducedBasis& basis) {
  Polynomial result(base.ring(), base.ring()->field().one());
  Polynomial b = basis.normal_form(base);
  while (e > 0) {
    if (e & 1) result = basis.normal_form(result * b);
    e >>= 1;
    if (e > 0) b = basis.normal_form(b * b);
  }
  return result;
}

Polynomial to_polynomial(const RingPtr& ring, const linalg::SparseVector& v,
                         const std::vector<Monomial>& columns) {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& [col, val] : v) terms.push_back({columns[col], val});
  return Polynomial(ring, std::move(terms));
}

Ideal colon_monomial(const Ideal& a, std::span<const Polynomial> b) {
  return Ideal::from_monomials(a.ring(), monomial_ideal::colon(a.leading_ideal(), monomials_of(b)));
}

Ideal colon_kernel(const Ideal& a, std::span<const Polynomial> b, const Ideal& c) {
  const RingPtr& ring = a.ring();
  const Field& K = ring->field();
  std::vector<Monomial> columns = c.standard_monomials();
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> column_of;
  for (std::uint32_t i = 0; i < columns.size(); ++i) column_of.emplace(columns[i], i);

  // one equation per (element of B, monomial of R/A)
  std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> row_of(b.size());
  std::vector<linalg::SparseVector> rows;
  const ReducedBasis& abasis = a.basis();
  for (std::uint32_t col = 0; col < columns.size(); ++col) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      Polynomial w = abasis.normal_form(b[j].mul_term(columns[col], K.one()));
      for (const auto& t : w.terms()) {
        auto [it, inserted] = row_of[j].try_emplace(t.monomial, rows.size());
        if (inserted) rows.emplace_back();
        rows[it->second].emplace_back(col, t.coefficient);
      }
    }
  }
  linalg::Echelon ech(K, columns.size());
  for (const auto& row : rows) {
    ech.add_row(row);
    if (ech.full_rank()) break;
  }
  if (ech.full_rank()) return c;

  std::vector<linalg::SparseVector> kernel = ech.kernel();
  std::unordered_map<Monomial, std::size_t, MonomialHash> kernel_of;
  Gens lead = c.leading_ideal();
  for (std::size_t k = 0; k < kernel.size(); ++k) {
    const Monomial& m = columns[kernel[k].back().first];
    kernel_of.emplace(m, k);
    lead.push_back(m);
  }
  lead = monomial_ideal::minimalize(std::move(lead));

  std::vector<Polynomial> elems;
  const ReducedBasis& cbasis = c.basis();
  for (const auto& m : lead) {
    if (auto it = kernel_of.find(m); it != kernel_of.end()) {
      elems.push_back(to_polynomial(ring, kernel[it->second], columns));
      continue;
    }
    Polynomial rest = cbasis.normal_form(Polynomial(ring, m, K.one()));
    Polynomial correction(ring);
    for (const auto& t : rest.terms()) {
      auto it = kernel_of.find(t.monomial);
      if (it != kernel_of.end())
        correction = correction + to_polynomial(ring, kernel[it->second], columns).scaled(t.coefficient);
    }
    elems.push_back(Polynomial(ring, m, K.one()) - (rest - correction));
  }
  return Ideal::from_basis(ReducedBasis(ring, std::move(elems)));
}

RingPtr tagged_ring(const RingPtr& ring) {
  std::vector<std::string> names{"@t"};
  names.insert(names.end(), ring->variables().begin(), ring->variables().end());
  return make_ring(ring->field(), std::move(names), TermOrder::elimination(1));
}

Polynomial lift(const RingPtr& tagged, const Polynomial& f) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) terms.push_back({t.monomial.extend_front(1), t.coefficient});
  return Polynomial(tagged, std::move(terms));
}

Polynomial drop(const RingPtr& ring, const Polynomial& f) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) terms.push_back({t.monomial.drop_front(1), t.coefficient});
  return Polynomial(ring, std::move(terms));
}

Ideal colon_elimination(const Ideal& a, std::span<const Polynomial> b) {
  const RingPtr& ring = a.ring();
  std::optional<Ideal> result;
  for (const auto& g : b) {
    if (g.is_zero()) continue;
    Ideal meet = ideal_intersection(a, Ideal(ring, {g}));
    std::vector<Polynomial> quotients;
    for (const auto& h : meet.basis().elements()) quotients.push_back(divide_exact(h, g));
    Ideal part(ring, std::move(quotients));
    result = result ? ideal_intersection(*result, part) : part;
  }
  return result ? *result : Ideal::unit(ring);
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : state_(std::make_shared<detail::IdealState>()) {
  for (const auto& g : generators)
    if (g.ring() != ring && !(*g.ring() == *ring))
      throw Error(ErrorCode::RingMismatch, "generator belongs to a different ring");
  std::erase_if(generators, [](const Polynomial& g) { return g.is_zero(); });
  state_->ring = std::move(ring);
  state_->gens = std::move(generators);
}

Ideal Ideal::from_monomials(RingPtr ring, const Gens& gens) {
  std::vector<Polynomial> polys;
  polys.reserve(gens.size());
  for (const auto& m : monomial_ideal::minimalize(gens))
    polys.emplace_back(ring, m, ring->field().one());
  Ideal I(ring, polys);
  I.state_->basis = ReducedBasis(ring, std::move(polys));
  return I;
}

Ideal Ideal::from_basis(ReducedBasis basis) {
  Ideal I(basis.ring(), basis.elements());
  I.state_->basis = std::move(basis);
  return I;
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = ring->field().one();
  return Ideal(ring, {Polynomial(ring, one)});
}

Ideal Ideal::maximal(RingPtr ring) {
  Gens gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i) gens.push_back(Monomial::variable(ring->nvars(), i));
  return from_monomials(std::move(ring), gens);
}

const RingPtr& Ideal::ring() const { return state_->ring; }
const std::vector<Polynomial>& Ideal::generators() const { return state_->gens; }

const ReducedBasis& Ideal::basis() const {
  return cached(*state_, state_->basis,
                [this] { return groebner_basis(state_->ring, state_->gens); });
}

const Gens& Ideal::leading_ideal() const {
  return cached(*state_, state_->lead, [this] { return basis().leading_monomials(); });
}

Colength Ideal::colength() const {
  return cached(*state_, state_->colength, [this] {
    if (is_zero()) return Colength{};
    return monomial_ideal::colength(leading_ideal(), state_->ring->nvars());
  });
}

std::vector<Monomial> Ideal::standard_monomials() const {
  if (!colength()) throw Error(ErrorCode::NotMPrimary, "ideal has infinite colength");
  std::vector<Monomial> out;
  monomial_ideal::for_each_standard(leading_ideal(), state_->ring->nvars(),
                                    [&](const Monomial& m) { out.push_back(m); });
  const auto& ord = state_->ring->order();
  std::sort(out.begin(), out.end(),
            [&](const Monomial& x, const Monomial& y) { return ord.compare(x, y) < 0; });
  return out;
}

std::string Ideal::m_primary_witness() const {
  return cached(*state_, state_->witness, [this]() -> std::string {
    const auto& ring = state_->ring;
    if (is_zero()) return "the zero ideal is not m-primary";
    if (is_unit()) return "the ideal contains 1";
    Colength D = colength();
    if (!D) {
      auto v = monomial_ideal::missing_pure_power(leading_ideal(), ring->nvars());
      return "no power of " + ring->variables()[v.value_or(0)] +
             " is a leading monomial (infinite colength)";
    }
    if (is_monomial()) return {};
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      Polynomial r = pow_mod(Polynomial::variable(ring, i), *D, basis());
      if (!r.is_zero())
        return ring->variables()[i] + "^" + std::to_string(*D) + " is not in the ideal";
    }
    return {};
  });
}

bool Ideal::is_m_primary() const { return m_primary_witness().empty(); }

void Ideal::require_m_primary(const std::string& context) const {
  std::string w = m_primary_witness();
  if (!w.empty()) throw Error(ErrorCode::NotMPrimary, context + ": ideal is not m-primary (" + w + ")");
}

bool Ideal::contains(const Ideal& other) const {
  check_same_ring(*this, other);
  if (is_monomial() && other.is_monomial())
    return monomial_ideal::is_subset(other.leading_ideal(), leading_ideal());
  for (const auto& g : other.basis().elements())
    if (!contains(g)) return false;
  return true;
}

bool operator==(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  return a.basis() == b.basis();
}

std::vector<Polynomial> Ideal::minimal_generators() const {
  const auto& ring = state_->ring;
  if (is_unit()) throw Error(ErrorCode::InvalidArgument, "the unit ideal is not contained in m");
  if (is_monomial()) return basis().elements();

  Ideal mI = ideal_product(maximal(ring), *this);
  if (!mI.colength()) throw Error(ErrorCode::NotMPrimary, "minimal generators need an m-primary ideal");
  std::vector<Monomial> columns = mI.standard_monomials();
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> column_of;
  for (std::uint32_t i = 0; i < columns.size(); ++i) column_of.emplace(columns[i], i);

  linalg::Echelon ech(ring->field(), columns.size());
  std::vector<Polynomial> out;
  for (const auto& g : basis().elements()) {
    Polynomial r = mI.basis().normal_form(g);
    linalg::SparseVector row;
    for (const auto& t : r.terms()) row.emplace_back(column_of.at(t.monomial), t.coefficient);
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    if (ech.add_row(row)) out.push_back(g);
  }
  return out;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  if (a.is_monomial() && b.is_monomial())
    return Ideal::from_monomials(a.ring(), monomial_ideal::sum(a.leading_ideal(), b.leading_ideal()));
  std::vector<Polynomial> gens(a.basis().elements());
  gens.insert(gens.end(), b.basis().elements().begin(), b.basis().elements().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  if (a.is_monomial() && b.is_monomial())
    return Ideal::from_monomials(a.ring(),
                                 monomial_ideal::product(a.leading_ideal(), b.leading_ideal()));
  std::vector<Polynomial> gens;
  for (const auto& f : a.basis().elements())
    for (const auto& g : b.basis().elements()) gens.push_back((f * g).monic());
  std::vector<Polynomial> unique;
  for (auto& g : gens)
    if (std::find(unique.begin(), unique.end(), g) == unique.end()) unique.push_back(std::move(g));
  return Ideal(a.ring(), std::move(unique));
}

Ideal ideal_power(const Ideal& a, std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative ideal power");
  if (n == 0) return Ideal::unit(a.ring());
  if (a.is_monomial())
    return Ideal::from_monomials(a.ring(),
                                 monomial_ideal::power(a.leading_ideal(), n, a.ring()->nvars()));
  Ideal result = a;
  for (std::int64_t i = 1; i < n; ++i) result = ideal_product(result, a);
  return result;
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  const RingPtr& ring = a.ring();
  if (a.is_monomial() && b.is_monomial())
    return Ideal::from_monomials(ring,
                                 monomial_ideal::intersection(a.leading_ideal(), b.leading_ideal()));
  if (ring->nvars() + 1 > kMaxVariables)
    throw Error(ErrorCode::InvalidArgument, "no room for the tag variable");
  RingPtr tagged = tagged_ring(ring);
  const Field& K = ring->field();
  Polynomial t = Polynomial::variable(tagged, 0);
  Polynomial one_minus_t = Polynomial(tagged, K.one()) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.basis().elements()) gens.push_back(t * lift(tagged, f));
  for (const auto& g : b.basis().elements()) gens.push_back(one_minus_t * lift(tagged, g));
  ReducedBasis gb = groebner_basis(tagged, std::move(gens));
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements())
    if (g.leading_monomial()[0] == 0) kept.push_back(drop(ring, g));
  // the elimination order restricts to the ring's degrevlex order, so the
  // surviving elements already form the reduced basis
  return Ideal::from_basis(ReducedBasis(ring, std::move(kept)));
}

Ideal colon_ideal(const Ideal& a, const Ideal& b, ColonStrategy strategy) {
  check_same_ring(a, b);
  const auto& gens = b.basis().elements();
  return colon_ideal(a, std::span<const Polynomial>(gens), nullptr, strategy);
}

Ideal colon_ideal(const Ideal& a, std::span<const Polynomial> b, const Ideal* lower_bound,
                  ColonStrategy strategy) {
  std::vector<Polynomial> nonzero;
  for (const auto& g : b)
    if (!g.is_zero()) nonzero.push_back(g);
  if (nonzero.empty()) return Ideal::unit(a.ring());
  if (lower_bound) check_same_ring(a, *lower_bound);

  if (strategy == ColonStrategy::Auto) {
    if (a.is_monomial() && all_monomial(nonzero)) return colon_monomial(a, nonzero);
    strategy = a.colength() ? ColonStrategy::Kernel : ColonStrategy::Elimination;
  }
  if (strategy == ColonStrategy::Elimination) return colon_elimination(a, nonzero);

  const Ideal& c = lower_bound ? *lower_bound : a;
  if (!c.colength())
    throw Error(ErrorCode::InvalidArgument, "kernel colon needs a zero-dimensional lower bound");
  if (lower_bound) {
    for (const auto& h : c.basis().elements())
      for (const auto& g : nonzero)
        if (!a.contains(h * g))
          throw Error(ErrorCode::InvalidArgument,
                      "lower bound is not contained in the colon ideal");
  }
  return colon_kernel(a, nonzero, c);
}

std::uint64_t sum_colength(const Ideal& a, std::span<const Polynomial> gs, const Ideal& c) {
  Colength ca = a.colength();
  if (!ca || !c.colength())
    throw Error(ErrorCode::NotMPrimary, "sum_colength needs zero-dimensional ideals");
  const Field& K = a.ring()->field();
  const std::vector<Monomial> standard = c.standard_monomials();
  const std::size_t ncols = standard.size() * gs.size();
  std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
  std::vector<linalg::SparseVector> rows;
  std::uint32_t col = 0;
  for (const auto& g : gs)
    for (const auto& s : standard) {
      Polynomial w = a.basis().normal_form(g.mul_term(s, K.one()));
      for (const auto& t : w.terms()) {
        auto [it, inserted] = row_of.try_emplace(t.monomial, rows.size());
        if (inserted) rows.emplace_back();
        rows[it->second].emplace_back(col, t.coefficient);
      }
      ++col;
    }
  linalg::Echelon ech(K, ncols);
  for (const auto& row : rows) {
    ech.add_row(row);
    if (ech.full_rank()) break;
  }
  return *ca - ech.rank();
}

std::uint64_t sum_colength(const Ideal& a, const Polynomial& g, const Ideal& c) {
  return sum_colength(a, std::span<const Polynomial>(&g, 1), c);
}

}  // namespace rrc
