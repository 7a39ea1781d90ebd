#pragma once

#include "refltk/rootsystem.hpp"

namespace refltk {

/// Subgroup of a closed reflection group, held as the sorted list of element
/// indices. Since elements are canonically ordered, the index list doubles as
/// the subgroup's fingerprint.
class Subgroup {
 public:
  Subgroup(const ReflectionGroup& parent, std::vector<int> members);

  const ReflectionGroup& parent() const { return *parent_; }
  long order() const { return static_cast<long>(members_.size()); }
  const std::vector<int>& members() const { return members_; }
  bool contains(int element_index) const;

  friend bool operator==(const Subgroup& x, const Subgroup& y) {
    return x.parent_ == y.parent_ && x.members_ == y.members_;
  }

 private:
  const ReflectionGroup* parent_;
  std::vector<int> members_;  // sorted, closed, contains the identity
};

/// Closes a seed set of element indices under product (indices refer to w).
Subgroup subgroup_closure(const ReflectionGroup& w, const std::vector<int>& seed);

/// Isotropy group W_v = {w : w.v = v}.
Subgroup isotropy(const ReflectionGroup& w, const Vec& v);

/// Inertia group W_{+-alpha} = {w : w.alpha = +-alpha}. The vector must lie on
/// a root line of w (NotARoot otherwise).
Subgroup inertia(const ReflectionGroup& w, const Vec& alpha);

/// True iff H equals the closure of the reflections of its parent lying in H
/// (the empty reflection set closing to the trivial subgroup).
bool is_generated_by_contained_reflections(const Subgroup& h);

/// Certifies W_{+-alpha} = <s_alpha> . W_alpha as an internal direct product
/// Z/2 x W_alpha: set equality, commutation of s_alpha with W_alpha, and
/// s_alpha outside W_alpha, plus the index-2 order bookkeeping.
struct InertiaReport {
  CheckOutcome set_equality, commutation, direct_product;
  long inertia_order = 0, isotropy_order = 0;
  bool all_pass() const {
    return set_equality.pass && commutation.pass && direct_product.pass;
  }
};

InertiaReport verify_inertia_decomposition(const ReflectionGroup& w, const Vec& alpha);

/// Both inclusions of the fixed-locus equality
///   union_alpha Ker(alpha^dual) = union_{w != id} Ker(w - id):
///   forward: every root hyperplane is the fixed space of some w != id
///     (for genuine roots, of the reflection s_alpha, checked as an equality
///     of subspaces);
///   backward: the fixed space of every w != id lies inside a single root
///     hyperplane. Containment of a subspace in a finite union of hyperplanes
///     over an infinite field forces containment in one of them, so checking
///     one hyperplane at a time is complete; the scalars here have
///     characteristic 0.
struct FixedLocusReport {
  CheckOutcome forward, backward;
  bool all_pass() const { return forward.pass && backward.pass; }
};

FixedLocusReport verify_fixed_locus_equality(const ReflectionGroup& w, const RootSystem& delta);

}  // namespace refltk
