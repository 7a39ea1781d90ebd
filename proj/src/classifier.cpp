#include "refltk/classifier.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace refltk {

CommutationGraph commutation_graph(const ReflectionGroup& w, const RootSystem& delta) {
  const int n = static_cast<int>(w.reflections().size());
  require(static_cast<int>(delta.total()) == 2 * n, ErrorCode::Internal,
          "root system does not match the reflection set");
  CommutationGraph graph;
  graph.vertex_count = n;
  graph.adjacent.assign(static_cast<std::size_t>(n),
                        std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i) {
    int si = w.reflections()[static_cast<std::size_t>(i)].element;
    for (int j = i + 1; j < n; ++j) {
      int sj = w.reflections()[static_cast<std::size_t>(j)].element;
      if (w.product(si, sj) == w.product(sj, si)) {
        graph.adjacent[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
        graph.adjacent[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = true;
        graph.edges.emplace_back(i, j);
      }
    }
  }
  return graph;
}

namespace {

void bron_kerbosch(const CommutationGraph& g, std::vector<int>& r, std::vector<int> p,
                   std::vector<int> x, std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  // Pivot: vertex of P u X with the most neighbours in P.
  int pivot = -1, best = -1;
  for (const auto* side : {&p, &x}) {
    for (int u : *side) {
      int count = 0;
      for (int v : p)
        if (g.has_edge(u, v)) ++count;
      if (count > best) {
        best = count;
        pivot = u;
      }
    }
  }
  std::vector<int> candidates;
  for (int v : p)
    if (pivot < 0 || !g.has_edge(pivot, v)) candidates.push_back(v);
  for (int v : candidates) {
    std::vector<int> p2, x2;
    for (int u : p)
      if (g.has_edge(v, u)) p2.push_back(u);
    for (int u : x)
      if (g.has_edge(v, u)) x2.push_back(u);
    r.push_back(v);
    bron_kerbosch(g, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const CommutationGraph& graph) {
  std::vector<int> all(static_cast<std::size_t>(graph.vertex_count));
  for (int i = 0; i < graph.vertex_count; ++i) all[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<int>> out;
  std::vector<int> r;
  bron_kerbosch(graph, r, std::move(all), {}, out);
  for (auto& clique : out) std::sort(clique.begin(), clique.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

TwoSubgroup subgroup_of_clique(const ReflectionGroup& w, const std::vector<int>& clique) {
  std::vector<int> seed;
  Mat roots(static_cast<int>(clique.size()), w.dim());
  for (std::size_t i = 0; i < clique.size(); ++i) {
    const auto& r = w.reflections()[static_cast<std::size_t>(clique[i])];
    seed.push_back(r.element);
    for (int j = 0; j < w.dim(); ++j) roots(static_cast<int>(i), j) = r.root(j);
  }
  TwoSubgroup g{clique, subgroup_closure(w, seed), static_cast<int>(clique.size())};
  for (int m : g.group.members()) {
    require(w.product(m, m) == w.identity_index(), ErrorCode::Internal,
            "clique closure contains an element of order > 2");
  }
  // Commuting reflections on distinct lines have independent roots, so the
  // closure has order 2^k and contains no reflections beyond the clique;
  // verify rather than assume, falling back to the permutation encoding of
  // the action if it ever failed.
  int contained_reflections = 0;
  for (const auto& r : w.reflections()) {
    if (g.group.contains(r.element)) ++contained_reflections;
  }
  g.independent_generators = rank(roots) == g.rank &&
                             g.group.order() == (1L << g.rank) &&
                             contained_reflections == g.rank;
  if (!g.independent_generators) {
    // Keep the reported rank truthful: |G| = 2^rank.
    int k = 0;
    while ((1L << (k + 1)) <= g.group.order()) ++k;
    g.rank = k;
  }
  return g;
}

std::vector<int> conjugate_fingerprint(const ReflectionGroup& w, const std::vector<int>& clique,
                                       int element) {
  std::vector<int> image;
  image.reserve(clique.size());
  for (int r : clique) image.push_back(std::abs(w.root_action(element, r)) - 1);
  std::sort(image.begin(), image.end());
  return image;
}

}  // namespace

std::vector<TwoSubgroup> maximal_elementary_2subgroups(const ReflectionGroup& w,
                                                       const RootSystem& delta) {
  std::vector<TwoSubgroup> out;
  for (const auto& clique : maximal_cliques(commutation_graph(w, delta))) {
    out.push_back(subgroup_of_clique(w, clique));
  }
  return out;
}

F2Matrix F2Matrix::identity(int k) {
  F2Matrix m;
  m.k = k;
  m.rows.assign(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) m.rows[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(1u << i);
  return m;
}

F2Matrix F2Matrix::operator*(const F2Matrix& o) const {
  F2Matrix out;
  out.k = k;
  out.rows.assign(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    std::uint16_t row = rows[static_cast<std::size_t>(i)];
    std::uint16_t acc = 0;
    for (int l = 0; l < k; ++l) {
      if (row & (1u << l)) acc ^= o.rows[static_cast<std::size_t>(l)];
    }
    out.rows[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

std::string F2Matrix::to_string() const {
  std::string out = "[";
  for (int i = 0; i < k; ++i) {
    if (i) out += ";";
    for (int j = 0; j < k; ++j) out += (rows[static_cast<std::size_t>(i)] & (1u << j)) ? '1' : '0';
  }
  return out + "]";
}

NormalizerAction normalizer_action(const ReflectionGroup& w, const TwoSubgroup& g) {
  // The reflections contained in G; since G is generated by the reflections
  // it contains, w normalizes G iff conjugation permutes this set of lines.
  std::vector<int> vertices;
  for (std::size_t r = 0; r < w.reflections().size(); ++r) {
    if (g.group.contains(w.reflections()[r].element)) vertices.push_back(static_cast<int>(r));
  }
  std::set<int> vertex_set(vertices.begin(), vertices.end());

  std::vector<int> members;
  for (int i = 0; i < w.order(); ++i) {
    bool stable = true;
    for (int r : vertices) {
      if (vertex_set.count(std::abs(w.root_action(i, r)) - 1) == 0) {
        stable = false;
        break;
      }
    }
    if (stable) members.push_back(i);
  }

  NormalizerAction action{Subgroup(w, std::move(members))};
  action.matrix_encoding = g.independent_generators;
  if (action.matrix_encoding) {
    const auto& clique = g.clique;
    const int k = g.rank;
    std::map<int, int> slot_of_vertex;
    for (std::size_t i = 0; i < clique.size(); ++i) slot_of_vertex[clique[i]] = static_cast<int>(i);
    for (int m : action.normalizer.members()) {
      F2Matrix mat;
      mat.k = k;
      mat.rows.assign(static_cast<std::size_t>(k), 0);
      for (int j = 0; j < k; ++j) {
        int image_slot =
            slot_of_vertex.at(std::abs(w.root_action(m, clique[static_cast<std::size_t>(j)])) - 1);
        // Column j of the matrix: the image of the j-th generator.
        mat.rows[static_cast<std::size_t>(image_slot)] |= static_cast<std::uint16_t>(1u << j);
      }
      action.action_of.push_back(std::move(mat));
    }
    std::set<F2Matrix> distinct(action.action_of.begin(), action.action_of.end());
    action.image.assign(distinct.begin(), distinct.end());
  } else {
    // Fallback: record each automorphism as a permutation of the nontrivial
    // elements of G (positions within members(), identity excluded).
    std::vector<int> nontrivial;
    for (int m : g.group.members()) {
      if (m != w.identity_index()) nontrivial.push_back(m);
    }
    std::map<int, int> slot;
    for (std::size_t i = 0; i < nontrivial.size(); ++i) slot[nontrivial[i]] = static_cast<int>(i);
    for (int m : action.normalizer.members()) {
      std::vector<int> perm;
      perm.reserve(nontrivial.size());
      int minv = w.inverse(m);
      for (int x : nontrivial) perm.push_back(slot.at(w.product(w.product(m, x), minv)));
      action.permutation_of.push_back(std::move(perm));
    }
  }

  // The centralizer of G must act trivially.
  for (std::size_t i = 0; i < action.normalizer.members().size(); ++i) {
    int m = action.normalizer.members()[i];
    bool centralizes = true;
    for (int r : vertices) {
      int s = w.reflections()[static_cast<std::size_t>(r)].element;
      if (w.product(m, s) != w.product(s, m)) {
        centralizes = false;
        break;
      }
    }
    if (!centralizes) continue;
    bool trivial = action.matrix_encoding
                       ? action.action_of[i].is_identity()
                       : [&] {
                           const auto& p = action.permutation_of[i];
                           for (std::size_t x = 0; x < p.size(); ++x) {
                             if (p[x] != static_cast<int>(x)) return false;
                           }
                           return true;
                         }();
    if (!trivial) action.centralizer_in_kernel = false;
  }
  return action;
}

std::vector<TwoSubgroupClass> classify_up_to_conjugacy(const ReflectionGroup& w,
                                                       const std::vector<TwoSubgroup>& subgroups) {
  std::map<std::vector<int>, const TwoSubgroup*> by_fingerprint;
  for (const auto& g : subgroups) by_fingerprint.emplace(g.clique, &g);
  require(by_fingerprint.size() == subgroups.size(), ErrorCode::Internal,
          "duplicate subgroup fingerprints");

  std::vector<TwoSubgroupClass> classes;
  std::set<std::vector<int>> visited;
  for (const auto& [fingerprint, subgroup] : by_fingerprint) {
    if (visited.count(fingerprint)) continue;
    // Conjugation orbit of the fingerprint under the generators.
    std::set<std::vector<int>> orbit{fingerprint};
    std::vector<std::vector<int>> queue{fingerprint};
    while (!queue.empty()) {
      std::vector<int> fp = std::move(queue.back());
      queue.pop_back();
      for (int gen : w.generator_indices()) {
        std::vector<int> image = conjugate_fingerprint(w, fp, gen);
        if (orbit.insert(image).second) queue.push_back(image);
      }
    }
    for (const auto& fp : orbit) {
      require(by_fingerprint.count(fp) > 0, ErrorCode::Internal,
              "conjugate of a maximal subgroup missing from the list");
      visited.insert(fp);
    }
    const TwoSubgroup* representative = by_fingerprint.at(*orbit.begin());
    TwoSubgroupClass cls{*representative, static_cast<long>(orbit.size()),
                         normalizer_action(w, *representative)};
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [](const TwoSubgroupClass& a, const TwoSubgroupClass& b) {
    return a.representative.clique < b.representative.clique;
  });
  return classes;
}

bool action_is_homomorphism(const ReflectionGroup& w, const TwoSubgroupClass& cls) {
  const auto& members = cls.action.normalizer.members();
  std::map<int, std::size_t> slot;
  for (std::size_t i = 0; i < members.size(); ++i) slot[members[i]] = i;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      int prod = w.product(members[i], members[j]);
      auto it = slot.find(prod);
      if (it == slot.end()) return false;  // normalizer not closed
      if (cls.action.matrix_encoding) {
        if (!(cls.action.action_of[it->second] ==
              cls.action.action_of[i] * cls.action.action_of[j])) {
          return false;
        }
      } else {
        const auto& pi = cls.action.permutation_of[i];
        const auto& pj = cls.action.permutation_of[j];
        const auto& pij = cls.action.permutation_of[it->second];
        for (std::size_t x = 0; x < pij.size(); ++x) {
          if (pij[x] != pi[static_cast<std::size_t>(pj[x])]) return false;
        }
      }
    }
  }
  return true;
}

SplittingData splitting_report(const ReflectionGroup& w, const RootSystem& delta) {
  SplittingData data;
  auto subgroups = maximal_elementary_2subgroups(w, delta);
  data.total_subgroups = static_cast<long>(subgroups.size());
  data.classes = classify_up_to_conjugacy(w, subgroups);
  long sum = 0;
  for (const auto& cls : data.classes) sum += cls.class_size;
  data.sizes_add_up = (sum == data.total_subgroups);
  // |W| / |N_W(G)| must reproduce the orbit size.
  for (const auto& cls : data.classes) {
    require(cls.class_size == w.order() / cls.action.normalizer.order(), ErrorCode::Internal,
            "orbit size disagrees with the normalizer index");
  }
  return data;
}

}  // namespace refltk
