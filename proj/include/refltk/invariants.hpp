#pragma once

#include <optional>

#include "refltk/rootsystem.hpp"
#include "refltk/unipoly.hpp"

namespace refltk {

/// Exact Molien series (1/|W|) sum_w 1/det(id - t.w) as a reduced rational
/// function, together with its power-series expansion: coefficient k is the
/// dimension of the degree-k invariants of Sym(V^dual).
struct MolienData {
  RatFunc series;
  std::vector<Scalar> expansion;  // indices 0..expansion_degree
  int expansion_degree = 0;

  /// Expansion coefficients are dimensions: non-negative integers, with
  /// constant term 1.
  bool coefficients_are_dimensions() const;
};

MolienData molien_series(const ReflectionGroup& w, int expansion_degree);

/// Variant over an explicit element list (closed under products), used for
/// groups not generated by reflections, e.g. the trivial group.
MolienData molien_series_of_elements(const std::vector<Mat>& elements, int expansion_degree);

/// Expansion degree policy: clamp(|W|, 16, 512) unless overridden.
int default_expansion_degree(long order);

/// Greedy peel of candidate degrees d_1 <= ... <= d_n from the expansion,
/// then the exact certificate prod (1 - t^{d_i}) * series == 1 on the rational
/// function. Returns nullopt when the certificate fails (no such
/// factorization); throws InsufficientExpansion when the expansion is too
/// short to peel n degrees.
std::optional<std::vector<long>> extract_degrees(const MolienData& data, int dim);

struct DegreeIdentities {
  long degree_product = 0;
  long degree_sum_minus_rank = 0;
  bool product_matches_order = false;
  bool sum_matches_reflections = false;
  bool all_pass() const { return product_matches_order && sum_matches_reflections; }
};

/// Checks prod d_i = |W| and sum (d_i - 1) = |R_W|.
DegreeIdentities verify_degree_identities(const ReflectionGroup& w,
                                          const std::vector<long>& degrees);

/// Reynolds operator (1/|W|) sum_w w.p with the dual action
/// (w.f)(x) = f(w^{-1}.x); the result is W-invariant and the map is the
/// identity on invariants. Cost grows with |W| times the substitution cost.
Polynomial reynolds_project(const ReflectionGroup& w, const Polynomial& p);

/// Dual action of a single element on a polynomial.
Polynomial dual_act(const ReflectionGroup& w, int element, const Polynomial& p);

/// True iff w.g_Delta = g_Delta for every w. Each generator permutes the
/// exact root set Delta, which reorders the factors of g_Delta and fixes the
/// product; generator stability propagates to the whole group. Falls back to
/// expanded-polynomial comparison if a generator moves the root set.
bool verify_g_delta_in_invariant_ring(const ReflectionGroup& w, const RootSystem& delta);

}  // namespace refltk
