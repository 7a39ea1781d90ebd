#pragma once

#include <cstdint>

#include "refltk/stabilizers.hpp"

namespace refltk {

/// Commutation graph on the reflections of W: one vertex per +-root pair of
/// Delta (equivalently per reflection), an edge where the two reflections
/// commute (equivalently s_alpha(beta) = +-beta).
struct CommutationGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;          // i < j, lex sorted
  std::vector<std::vector<bool>> adjacent;         // symmetric, no loops

  bool has_edge(int i, int j) const {
    return adjacent[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
};

CommutationGraph commutation_graph(const ReflectionGroup& w, const RootSystem& delta);

/// All maximal cliques of the graph (Bron-Kerbosch with pivoting), each
/// returned as a sorted vertex list; the clique list itself is lex sorted.
std::vector<std::vector<int>> maximal_cliques(const CommutationGraph& graph);

/// Maximal elementary abelian 2-subgroup generated by reflections: the clique
/// of reflections generating it (positions in w.reflections(), also its
/// fingerprint), the closed subgroup of order 2^rank, and the rank.
struct TwoSubgroup {
  std::vector<int> clique;
  Subgroup group;
  int rank = 0;
  /// Generating roots linearly independent and the clique exhausts the
  /// reflections inside the subgroup (holds for commuting reflections on
  /// distinct lines; checked at runtime, selects the action encoding).
  bool independent_generators = true;
};

/// Subgroups generated by the maximal cliques of the commutation graph. Each
/// result is verified to have order 2^k with independent generating roots.
std::vector<TwoSubgroup> maximal_elementary_2subgroups(const ReflectionGroup& w,
                                                       const RootSystem& delta);

/// Invertible k x k matrix over the 2-element field, rows as bitmasks.
struct F2Matrix {
  int k = 0;
  std::vector<std::uint16_t> rows;

  static F2Matrix identity(int k);
  F2Matrix operator*(const F2Matrix& o) const;
  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;
  friend auto operator<=>(const F2Matrix&, const F2Matrix&) = default;
  bool is_identity() const { return *this == identity(k); }
  std::string to_string() const;
};

/// N_W(G) together with its action on G. With independent generating
/// reflections (always, for commuting reflections with distinct roots; checked
/// at runtime) each automorphism is the k x k matrix over the 2-element field
/// expressing the images of the generators; otherwise the fallback encoding
/// permutes the 2^k - 1 nontrivial elements of G.
struct NormalizerAction {
  Subgroup normalizer;
  bool matrix_encoding = true;
  std::vector<F2Matrix> action_of;                // aligned with normalizer.members()
  std::vector<std::vector<int>> permutation_of;   // fallback encoding, same alignment
  std::vector<F2Matrix> image;                    // distinct automorphisms, sorted
  bool centralizer_in_kernel = true;              // centralizing members act trivially
};

NormalizerAction normalizer_action(const ReflectionGroup& w, const TwoSubgroup& g);

/// One conjugacy class of maximal elementary abelian 2-subgroups generated by
/// reflections: lex-least fingerprint as representative, the orbit size, and
/// the normalizer action data of the representative.
struct TwoSubgroupClass {
  TwoSubgroup representative;
  long class_size = 0;
  NormalizerAction action;
};

std::vector<TwoSubgroupClass> classify_up_to_conjugacy(const ReflectionGroup& w,
                                                       const std::vector<TwoSubgroup>& subgroups);

/// action(w1 w2) = action(w1) action(w2) over all pairs of normalizer members.
bool action_is_homomorphism(const ReflectionGroup& w, const TwoSubgroupClass& cls);

/// The full classification: classes (sorted by fingerprint), the count r of
/// classes, and the cross-check that class sizes add up to the number of
/// maximal subgroups.
struct SplittingData {
  std::vector<TwoSubgroupClass> classes;
  long total_subgroups = 0;
  bool sizes_add_up = false;
  long class_count() const { return static_cast<long>(classes.size()); }
};

SplittingData splitting_report(const ReflectionGroup& w, const RootSystem& delta);

}  // namespace refltk
