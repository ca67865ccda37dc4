#include "gpk/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <string>

namespace gpk {

MatrixGroup::MatrixGroup(const Field& f, std::vector<ProjMatrix> elements, std::vector<ProjMatrix> generators)
    : field_(&f), elements_(std::move(elements)), generators_(std::move(generators)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  index_.reserve(elements_.size() * 2);
  for (const auto& m : elements_) {
    if (&m.field() != field_) throw GroupError("group element over a different field");
    index_.insert(m);
  }
  for (const auto& g : generators_)
    if (!contains(g)) throw GroupError("generator is not a group element");
}

bool MatrixGroup::is_subset_of(const MatrixGroup& other) const {
  if (field_ != other.field_) return false;
  return std::all_of(elements_.begin(), elements_.end(), [&](const ProjMatrix& m) { return other.contains(m); });
}

MatrixGroup MatrixGroup::embed(const FieldEmbedding& emb) const {
  std::vector<ProjMatrix> el, gens;
  el.reserve(elements_.size());
  for (const auto& m : elements_) el.push_back(m.embed(emb));
  for (const auto& m : generators_) gens.push_back(m.embed(emb));
  return MatrixGroup(emb.target(), std::move(el), std::move(gens));
}

std::size_t default_group_cap() {
  if (const char* env = std::getenv("GPK_MAX_GROUP_ORDER")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw GroupError(std::string("invalid GPK_MAX_GROUP_ORDER value '") + env + "'");
  }
  return 1000000;
}

MatrixGroup closure(const Field& f, const std::vector<ProjMatrix>& gens, std::size_t cap) {
  const ProjMatrix id = ProjMatrix::identity(f);
  std::unordered_set<ProjMatrix> seen{id};
  std::deque<ProjMatrix> frontier{id};
  while (!frontier.empty()) {
    const ProjMatrix cur = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      ProjMatrix next = cur * g;
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw GroupError("group order exceeds cap " + std::to_string(cap));
        frontier.push_back(std::move(next));
      }
    }
  }
  return MatrixGroup(f, std::vector<ProjMatrix>(seen.begin(), seen.end()), gens);
}

MatrixGroup trivial_group(const Field& f) { return closure(f, {}); }

std::vector<ProjMatrix> greedy_generators(const Field& f, const std::vector<ProjMatrix>& elements) {
  std::vector<ProjMatrix> gens;
  MatrixGroup cur = trivial_group(f);
  for (const auto& m : elements) {
    if (cur.contains(m)) continue;
    gens.push_back(m);
    cur = closure(f, gens);
    if (cur.order() >= elements.size()) break;
  }
  return gens;
}

ProjMatrix sigma(const HermitianCurve& c, const Elem& a, const Elem& b) {
  const Field& f = a.field();
  const Elem o = f.one(), z = f.zero();
  return ProjMatrix({o, a.pow(c.q()), b, z, o, a, z, z, o});
}

ProjMatrix n2_element(const HermitianCurve& c, const Elem& a, const Elem& b) {
  const Field& f = a.field();
  const Elem o = f.one(), z = f.zero();
  return ProjMatrix({o, z, z, a, o, z, b, a.pow(c.q()), o});
}

ProjMatrix eta(const HermitianCurve& c, const Elem& scale) {
  const Field& f = scale.field();
  const Elem o = f.one(), z = f.zero();
  return ProjMatrix({scale.pow(c.q() + 1), z, z, z, scale, z, z, z, o});
}

ProjMatrix swap_xz(const Field& f) {
  const Elem o = f.one(), z = f.zero();
  return ProjMatrix({z, z, o, z, o, z, o, z, z});
}

namespace {

MatrixGroup unipotent_subgroup(const HermitianCurve& c, bool first) {
  const Field& f = c.base_field();
  std::vector<ProjMatrix> el;
  for (Field::Value av = 0; av < f.size(); ++av) {
    for (Field::Value bv = 0; bv < f.size(); ++bv) {
      const Elem a = f(av), b = f(bv);
      if (!hermitian_pair_check(a, b, c.q())) continue;
      el.push_back(first ? sigma(c, a, b) : n2_element(c, a, b));
    }
  }
  std::sort(el.begin(), el.end());
  auto gens = greedy_generators(f, el);
  return MatrixGroup(f, std::move(el), std::move(gens));
}

}  // namespace

MatrixGroup n1_subgroup(const HermitianCurve& c) { return unipotent_subgroup(c, true); }
MatrixGroup n2_subgroup(const HermitianCurve& c) { return unipotent_subgroup(c, false); }

Elem cyclic_scale(const HermitianCurve& c, std::uint64_t m) {
  const std::uint64_t order = c.q() * c.q() - 1;
  if (m == 0 || order % m != 0)
    throw GroupError("m = " + std::to_string(m) + " does not divide q^2 - 1 = " + std::to_string(order));
  const Field& f = c.base_field();
  return f(f.primitive()).pow(order / m);
}

MatrixGroup cyclic_subgroup(const HermitianCurve& c, std::uint64_t m) {
  const Elem c0 = cyclic_scale(c, m);
  const Field& f = c.base_field();
  if (m == 1) return trivial_group(f);
  return closure(f, {eta(c, c0)});
}

MatrixGroup intersect(const MatrixGroup& a, const MatrixGroup& b) {
  if (&a.field() != &b.field()) throw GroupError("intersection of groups over different fields");
  std::vector<ProjMatrix> el;
  for (const auto& m : a.elements())
    if (b.contains(m)) el.push_back(m);
  auto gens = greedy_generators(a.field(), el);
  return MatrixGroup(a.field(), std::move(el), std::move(gens));
}

bool is_normal(const MatrixGroup& n, const MatrixGroup& g) {
  if (!n.is_subset_of(g)) throw GroupError("normality test: N is not a subset of G");
  const auto& gens = g.generators().empty() ? g.elements() : g.generators();
  for (const auto& x : gens) {
    const ProjMatrix xi = x.inverse();
    for (const auto& m : n.elements())
      if (!n.contains(x * m * xi)) return false;
  }
  return true;
}

std::uint64_t element_order(const ProjMatrix& m) {
  std::uint64_t k = 1;
  ProjMatrix cur = m;
  while (!cur.is_identity()) {
    cur = cur * m;
    ++k;
  }
  return k;
}

std::optional<ProjMatrix> cyclic_generator(const MatrixGroup& g) {
  for (const auto& m : g.elements())
    if (element_order(m) == g.order()) return m;
  return std::nullopt;
}

namespace {

struct ElementSetLess {
  bool operator()(const MatrixGroup& a, const MatrixGroup& b) const {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  }
};

}  // namespace

std::vector<MatrixGroup> normal_subgroups_between(const MatrixGroup& n, const MatrixGroup& h, const MatrixGroup& g,
                                                  std::size_t cap) {
  if (!n.is_subset_of(h)) throw GroupError("subgroup enumeration: N is not contained in H");
  if (!h.is_subset_of(g)) throw GroupError("subgroup enumeration: H is not contained in G");
  if (h.order() > cap) throw GroupError("|H| = " + std::to_string(h.order()) + " exceeds enumeration cap");
  const Field& f = h.field();
  std::set<MatrixGroup, ElementSetLess> found;

  if (auto gen = cyclic_generator(h)) {
    // One subgroup per divisor of |H|.
    const std::uint64_t order = h.order();
    for (std::uint64_t d = 1; d <= order; ++d) {
      if (order % d != 0) continue;
      ProjMatrix sub = ProjMatrix::identity(f);
      for (std::uint64_t i = 0; i < order / d; ++i) sub = sub * *gen;
      MatrixGroup s = closure(f, {sub});
      if (n.is_subset_of(s)) found.insert(std::move(s));
    }
  } else {
    if (h.order() > 100) throw GroupError("non-cyclic H too large for subgroup enumeration");
    // Every subgroup containing N arises by adjoining elements one at a time.
    std::deque<MatrixGroup> work{n};
    found.insert(n);
    while (!work.empty()) {
      const MatrixGroup cur = work.front();
      work.pop_front();
      for (const auto& m : h.elements()) {
        if (cur.contains(m)) continue;
        auto gens = cur.generators();
        gens.push_back(m);
        MatrixGroup next = closure(f, gens);
        if (found.insert(next).second) work.push_back(std::move(next));
      }
    }
  }
  std::vector<MatrixGroup> out;
  for (const auto& s : found)
    if (is_normal(s, g)) out.push_back(s);
  return out;
}

bool check_semidirect(const MatrixGroup& g, const MatrixGroup& n, const MatrixGroup& h) {
  if (!n.is_subset_of(g) || !h.is_subset_of(g)) return false;
  if (!is_normal(n, g)) return false;
  if (!intersect(n, h).is_trivial()) return false;
  return n.order() * h.order() == g.order();
}

std::vector<ProjPoint> orbit(const MatrixGroup& g, const ProjPoint& p) {
  std::vector<ProjPoint> out;
  out.reserve(g.order());
  for (const auto& m : g.elements()) out.push_back(apply(m, p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MatrixGroup stabilizer(const MatrixGroup& g, const ProjPoint& p) {
  std::vector<ProjMatrix> el;
  for (const auto& m : g.elements())
    if (apply(m, p) == p) el.push_back(m);
  auto gens = greedy_generators(g.field(), el);
  return MatrixGroup(g.field(), std::move(el), std::move(gens));
}

}  // namespace gpk
