#include "rrclosure/groebner.hpp"

#include <algorithm>
#include <map>

#include "rrclosure/error.hpp"
#include "rrclosure/monomial_ideal.hpp"

namespace rrc {

namespace {

struct DescendingOrder {
  const TermOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
};

const Polynomial* find_reducer(const Monomial& m, std::span<const Polynomial> divisors) {
  for (const auto& g : divisors)
    if (g.leading_monomial().divides(m)) return &g;
  return nullptr;
}

const Polynomial* find_reducer(const Monomial& m, const std::vector<const Polynomial*>& divisors) {
  for (const Polynomial* g : divisors)
    if (g->leading_monomial().divides(m)) return g;
  return nullptr;
}

template <typename Divisors>
Polynomial reduce_fully(const Polynomial& f, const Divisors& divisors, bool all_monomial) {
  const RingPtr& ring = f.ring();
  if (all_monomial) {
    std::vector<Term> kept;
    for (const auto& t : f.terms())
      if (!find_reducer(t.monomial, divisors)) kept.push_back(t);
    Polynomial r(ring);
    r = Polynomial(ring, std::move(kept));
    return r;
  }
  const auto& K = ring->field();
  std::map<Monomial, Scalar, DescendingOrder> work(DescendingOrder{&ring->order()});
  for (const auto& t : f.terms()) work.emplace(t.monomial, t.coefficient);
  std::vector<Term> remainder;
  while (!work.empty()) {
    auto it = work.begin();
    Monomial m = it->first;
    Scalar c = std::move(it->second);
    work.erase(it);
    const Polynomial* g = find_reducer(m, divisors);
    if (!g) {
      remainder.push_back({std::move(m), std::move(c)});
      continue;
    }
    const auto& lt = g->leading_term();
    Monomial q = m / lt.monomial;
    Scalar factor = K.div(c, lt.coefficient);
    const auto& gt = g->terms();
    for (std::size_t i = 1; i < gt.size(); ++i) {
      Monomial u = gt[i].monomial * q;
      Scalar delta = K.mul(factor, gt[i].coefficient);
      auto [pos, inserted] = work.try_emplace(u, K.neg(delta));
      if (!inserted) {
        pos->second = K.sub(pos->second, delta);
        if (pos->second.is_zero()) work.erase(pos);
      }
    }
  }
  return Polynomial(ring, std::move(remainder));
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
 public:
  explicit Buchberger(RingPtr ring) : ring_(std::move(ring)) {}

  void add(Polynomial h) {
    polys_.push_back(std::move(h));
    active_.push_back(false);
    update(polys_.size() - 1);
  }

  void run() {
    const auto& ord = ring_->order();
    while (!pairs_.empty()) {
      // normal strategy: smallest lcm first
      std::size_t best = 0;
      for (std::size_t p = 1; p < pairs_.size(); ++p)
        if (ord.compare(pairs_[p].lcm, pairs_[best].lcm) < 0) best = p;
      Pair pair = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();

      Polynomial s = s_polynomial(polys_[pair.i], polys_[pair.j]);
      Polynomial h = reduce_fully(s, active_list(), false);
      if (h.is_zero()) continue;
      h = h.monic();
      if (h.is_constant()) {
        polys_.assign(1, h);
        active_.assign(1, true);
        pairs_.clear();
        return;
      }
      add(std::move(h));
    }
  }

  std::vector<Polynomial> reduced() const {
    std::vector<const Polynomial*> act = active_list();
    std::vector<Polynomial> out;
    out.reserve(act.size());
    for (std::size_t i = 0; i < act.size(); ++i) {
      std::vector<const Polynomial*> others;
      for (std::size_t j = 0; j < act.size(); ++j)
        if (j != i) others.push_back(act[j]);
      out.push_back(reduce_fully(*act[i], others, false).monic());
    }
    return out;
  }

 private:
  std::vector<const Polynomial*> active_list() const {
    std::vector<const Polynomial*> act;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) act.push_back(&polys_[i]);
    return act;
  }

  void update(std::size_t h) {
    const Monomial& lh = polys_[h].leading_monomial();
    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < polys_.size(); ++g)
      if (active_[g]) candidates.push_back({g, h, lcm(polys_[g].leading_monomial(), lh)});

    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& p = candidates[c];
      bool keep = lh.coprime(polys_[p.i].leading_monomial());
      if (!keep) {
        keep = true;
        for (std::size_t o = c + 1; o < candidates.size() && keep; ++o)
          if (candidates[o].lcm.divides(p.lcm)) keep = false;
        for (std::size_t o = 0; o < kept.size() && keep; ++o)
          if (kept[o].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }

    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) &&
                  !(lcm(polys_[p.i].leading_monomial(), lh) == p.lcm) &&
                  !(lcm(polys_[p.j].leading_monomial(), lh) == p.lcm);
      if (!drop) next.push_back(std::move(p));
    }
    for (auto& p : kept)
      if (!lh.coprime(polys_[p.i].leading_monomial())) next.push_back(std::move(p));
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < polys_.size(); ++g)
      if (active_[g] && lh.divides(polys_[g].leading_monomial())) active_[g] = false;
    active_[h] = true;
  }

  RingPtr ring_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

ReducedBasis::ReducedBasis(RingPtr ring, std::vector<Polynomial> elements)
    : ring_(std::move(ring)), elems_(std::move(elements)) {
  const auto& ord = ring_->order();
  std::sort(elems_.begin(), elems_.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  for (const auto& e : elems_)
    if (!e.is_monomial()) monomial_ = false;
}

std::vector<Monomial> ReducedBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elems_.size());
  for (const auto& e : elems_) out.push_back(e.leading_monomial());
  return out;
}

Polynomial ReducedBasis::normal_form(const Polynomial& f) const {
  if (elems_.empty()) return f;
  return reduce_fully(f, std::span<const Polynomial>(elems_), monomial_);
}

bool operator==(const ReducedBasis& a, const ReducedBasis& b) { return a.elems_ == b.elems_; }

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const auto& K = f.ring()->field();
  const auto& lf = f.leading_term();
  const auto& lg = g.leading_term();
  Monomial l = lcm(lf.monomial, lg.monomial);
  Polynomial a = f.mul_term(l / lf.monomial, K.inv(lf.coefficient));
  return a.sub_mul(K.inv(lg.coefficient), l / lg.monomial, g);
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors) {
  bool all_monomial = std::all_of(divisors.begin(), divisors.end(),
                                  [](const Polynomial& g) { return g.is_monomial(); });
  return reduce_fully(f, divisors, all_monomial);
}

ReducedBasis groebner_basis(const RingPtr& ring, std::vector<Polynomial> generators) {
  std::erase_if(generators, [](const Polynomial& g) { return g.is_zero(); });
  if (generators.empty()) return ReducedBasis(ring, {});
  for (const auto& g : generators)
    if (g.is_constant()) return ReducedBasis(ring, {Polynomial(ring, ring->field().one())});

  if (std::all_of(generators.begin(), generators.end(),
                  [](const Polynomial& g) { return g.is_monomial(); })) {
    monomial_ideal::Gens gens;
    for (const auto& g : generators) gens.push_back(g.leading_monomial());
    std::vector<Polynomial> out;
    for (const auto& m : monomial_ideal::minimalize(std::move(gens)))
      out.emplace_back(ring, m, ring->field().one());
    return ReducedBasis(ring, std::move(out));
  }

  const auto& ord = ring->order();
  std::sort(generators.begin(), generators.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  Buchberger engine(ring);
  std::vector<Polynomial> seen;
  for (auto& g : generators) {
    Polynomial h = normal_form(g, seen);
    if (h.is_zero()) continue;
    h = h.monic();
    if (h.is_constant()) return ReducedBasis(ring, {Polynomial(ring, ring->field().one())});
    seen.push_back(h);
    engine.add(std::move(h));
  }
  engine.run();
  return ReducedBasis(ring, engine.reduced());
}

}  // namespace rrc
