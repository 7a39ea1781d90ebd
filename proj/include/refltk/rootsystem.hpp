#pragma once

#include <unordered_set>

#include "refltk/group.hpp"
#include "refltk/polynomial.hpp"

namespace refltk {

/// The root system Delta associated with a closed reflection group: one
/// W-orbit Delta_i per conjugacy class of reflections, stored as exact vectors
/// closed under negation. Plain data so that verification routines (and
/// negative-control tests) can inspect and perturb it.
struct RootSystem {
  int dim = 0;
  std::vector<Vec> representatives;      // chosen beta_i, one per class
  std::vector<std::vector<Vec>> classes; // orbit of beta_i, sorted canonically
  std::unordered_set<std::string> keys;  // exact-vector membership index

  /// All roots, classes concatenated in order.
  std::vector<Vec> all() const;
  int total() const;
  bool contains(const Vec& v) const { return keys.count(vec_key(v)) > 0; }

  void insert(int class_index, const Vec& v);
  static RootSystem from_classes(int dim, std::vector<std::vector<Vec>> classes,
                                 std::vector<Vec> representatives);
};

/// Chooses one anisotropic representative per reflection conjugacy class (the
/// content-normalized, lexicographically least root of the class) and takes
/// its full W-orbit. Class order matches conjugacy_classes(W, reflections).
RootSystem build_root_system(const ReflectionGroup& w);

struct CheckOutcome {
  bool pass = true;
  long checked = 0;
  std::string witness;  // empty on pass

  void fail_with(const std::string& text) {
    if (pass) {
      pass = false;
      witness = text;
    }
  }
};

/// Exhaustive verification of the root-system properties:
///   r1: scalars lambda with lambda*alpha in Delta are exactly +-1,
///   r2: s_alpha(beta) stays in Delta,
///   conjugation: w s_alpha w^{-1} = s_{w.alpha} for every w and alpha,
///   cover: {s_alpha} is the full reflection set of W,
///   stability: each Delta_i is stable under the W-action.
struct AxiomReport {
  CheckOutcome r1, r2, conjugation, cover, stability;
  bool all_pass() const {
    return r1.pass && r2.pass && conjugation.pass && cover.pass && stability.pass;
  }
};

AxiomReport verify_axioms(const RootSystem& delta, const ReflectionGroup& w);

/// g_Delta = product over all roots (both signs) of the linear forms
/// alpha^dual = b(-, alpha); degree equals |Delta|.
Polynomial g_delta(const BilinearSpace& space, const RootSystem& delta);

/// True iff the zero locus of g_Delta equals the union of the fixed spaces of
/// the nontrivial elements, via the hyperplane-by-hyperplane containment
/// reduction (see verify_fixed_locus_equality).
bool vanishing_locus_equals_moved_locus(const ReflectionGroup& w, const RootSystem& delta);

}  // namespace refltk
