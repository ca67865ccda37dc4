#pragma once

// Finite subgroups of PGL_3 stored by full element enumeration.

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "gpk/projective.hpp"

namespace gpk {

class MatrixGroup {
 public:
  /// Caller guarantees closure; use `closure` to build groups.
  MatrixGroup(const Field& f, std::vector<ProjMatrix> elements, std::vector<ProjMatrix> generators);

  const Field& field() const noexcept { return *field_; }
  std::size_t order() const noexcept { return elements_.size(); }
  /// Sorted in canonical (encoding) order.
  const std::vector<ProjMatrix>& elements() const noexcept { return elements_; }
  const std::vector<ProjMatrix>& generators() const noexcept { return generators_; }
  bool contains(const ProjMatrix& m) const { return index_.count(m) > 0; }
  bool is_subset_of(const MatrixGroup& other) const;
  bool is_trivial() const noexcept { return elements_.size() == 1; }

  MatrixGroup embed(const FieldEmbedding& emb) const;

  friend bool operator==(const MatrixGroup& a, const MatrixGroup& b) { return a.elements_ == b.elements_; }

 private:
  const Field* field_;
  std::vector<ProjMatrix> elements_;
  std::vector<ProjMatrix> generators_;
  std::unordered_set<ProjMatrix> index_;
};

/// Closure cap: GPK_MAX_GROUP_ORDER if set, else 10^6.
std::size_t default_group_cap();

/// Smallest subgroup containing gens. Throws GroupError past the cap.
MatrixGroup closure(const Field& f, const std::vector<ProjMatrix>& gens, std::size_t cap = default_group_cap());
MatrixGroup trivial_group(const Field& f);

/// Generators chosen greedily in element order until they generate.
std::vector<ProjMatrix> greedy_generators(const Field& f, const std::vector<ProjMatrix>& elements);

/// sigma_{a,b}: (X:Y:Z) -> (X + a^q Y + b Z : Y + a Z : Z).
ProjMatrix sigma(const HermitianCurve& c, const Elem& a, const Elem& b);
/// (X:Y:Z) -> (X : a X + Y : b X + a^q Y + Z).
ProjMatrix n2_element(const HermitianCurve& c, const Elem& a, const Elem& b);
/// eta_c: (X:Y:Z) -> (c^(q+1) X : c Y : Z).
ProjMatrix eta(const HermitianCurve& c, const Elem& scale);
/// (X:Y:Z) -> (Z:Y:X), exchanging P1 and P2.
ProjMatrix swap_xz(const Field& f);

MatrixGroup n1_subgroup(const HermitianCurve& c);
MatrixGroup n2_subgroup(const HermitianCurve& c);
/// Order-m subgroup of C_(q^2-1) generated by eta_(c^((q^2-1)/m)), c the
/// smallest primitive element. Throws GroupError if m does not divide q^2-1.
MatrixGroup cyclic_subgroup(const HermitianCurve& c, std::uint64_t m);
/// Generator used by cyclic_subgroup.
Elem cyclic_scale(const HermitianCurve& c, std::uint64_t m);

MatrixGroup intersect(const MatrixGroup& a, const MatrixGroup& b);
/// Throws GroupError if N is not a subset of G.
bool is_normal(const MatrixGroup& n, const MatrixGroup& g);
std::uint64_t element_order(const ProjMatrix& m);
std::optional<ProjMatrix> cyclic_generator(const MatrixGroup& g);

/// All H' with N <= H' <= H that are normal in G, ordered by size.
/// Throws GroupError unless N <= H <= G, or if H is too large to enumerate
/// (cyclic: |H| <= cap; otherwise |H| <= 100).
std::vector<MatrixGroup> normal_subgroups_between(const MatrixGroup& n, const MatrixGroup& h, const MatrixGroup& g,
                                                  std::size_t cap = 10000);

/// N normal in G, N meet H trivial, |N||H| = |G|.
bool check_semidirect(const MatrixGroup& g, const MatrixGroup& n, const MatrixGroup& h);

/// Sorted orbit.
std::vector<ProjPoint> orbit(const MatrixGroup& g, const ProjPoint& p);
MatrixGroup stabilizer(const MatrixGroup& g, const ProjPoint& p);

}  // namespace gpk
