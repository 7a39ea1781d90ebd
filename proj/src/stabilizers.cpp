#include "refltk/stabilizers.hpp"

#include <algorithm>
#include <deque>

#include "refltk/util.hpp"

namespace refltk {

Subgroup::Subgroup(const ReflectionGroup& parent, std::vector<int> members)
    : parent_(&parent), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (int i : members_) {
    require(i >= 0 && i < parent.order(), ErrorCode::NotASubset,
            "subgroup member outside the parent group");
  }
  require(std::binary_search(members_.begin(), members_.end(), parent.identity_index()),
          ErrorCode::Internal, "subgroup without identity");
  require(parent.order() % order() == 0, ErrorCode::Internal,
          "subgroup order does not divide the group order");
}

bool Subgroup::contains(int element_index) const {
  return std::binary_search(members_.begin(), members_.end(), element_index);
}

Subgroup subgroup_closure(const ReflectionGroup& w, const std::vector<int>& seed) {
  std::vector<bool> in(static_cast<std::size_t>(w.order()), false);
  std::vector<int> members{w.identity_index()};
  in[static_cast<std::size_t>(w.identity_index())] = true;
  std::deque<int> queue;
  for (int s : seed) {
    require(s >= 0 && s < w.order(), ErrorCode::NotASubset, "closure seed outside the group");
    if (!in[static_cast<std::size_t>(s)]) {
      in[static_cast<std::size_t>(s)] = true;
      members.push_back(s);
      queue.push_back(s);
    }
  }
  // Closure under products contains inverses (finite group), so expanding by
  // the seed alone is enough.
  std::vector<int> gens(queue.begin(), queue.end());
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int g : gens) {
      int y = w.product(x, g);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = true;
        members.push_back(y);
        queue.push_back(y);
      }
    }
  }
  return Subgroup(w, std::move(members));
}

Subgroup isotropy(const ReflectionGroup& w, const Vec& v) {
  require(static_cast<int>(v.size()) == w.dim(), ErrorCode::DimensionError,
          "isotropy vector must live in the space");
  std::vector<int> members;
  for (int i = 0; i < w.order(); ++i) {
    if (mat_eq(w.apply(i, v), v)) members.push_back(i);
  }
  return Subgroup(w, std::move(members));
}

Subgroup inertia(const ReflectionGroup& w, const Vec& alpha) {
  require(static_cast<int>(alpha.size()) == w.dim(), ErrorCode::DimensionError,
          "inertia vector must live in the space");
  int pos = w.reflection_on_line(alpha);
  require(pos >= 0, ErrorCode::NotARoot, "vector is not on a root line of the group");
  std::vector<int> members;
  for (int i = 0; i < w.order(); ++i) {
    if (std::abs(w.root_action(i, pos)) - 1 == pos) members.push_back(i);
  }
  return Subgroup(w, std::move(members));
}

bool is_generated_by_contained_reflections(const Subgroup& h) {
  const ReflectionGroup& w = h.parent();
  std::vector<int> contained;
  for (const auto& r : w.reflections()) {
    if (h.contains(r.element)) contained.push_back(r.element);
  }
  Subgroup closure = subgroup_closure(w, contained);
  return closure == h;
}

InertiaReport verify_inertia_decomposition(const ReflectionGroup& w, const Vec& alpha) {
  InertiaReport report;
  int pos = w.reflection_on_line(alpha);
  require(pos >= 0, ErrorCode::NotARoot, "vector is not on a root line of the group");
  int s = w.reflections()[static_cast<std::size_t>(pos)].element;

  Subgroup fix = isotropy(w, w.reflections()[static_cast<std::size_t>(pos)].root);
  Subgroup pm = inertia(w, alpha);
  report.isotropy_order = fix.order();
  report.inertia_order = pm.order();

  // (a) W_{+-alpha} = <s_alpha> . W_alpha as sets.
  std::vector<int> coset{fix.members()};
  for (int u : fix.members()) coset.push_back(w.product(s, u));
  std::sort(coset.begin(), coset.end());
  coset.erase(std::unique(coset.begin(), coset.end()), coset.end());
  report.set_equality.checked = static_cast<long>(coset.size());
  if (coset != pm.members()) report.set_equality.fail_with("<s_alpha>.W_alpha != W_{+-alpha}");

  // (b) s_alpha commutes with W_alpha.
  for (int u : fix.members()) {
    ++report.commutation.checked;
    if (w.product(s, u) != w.product(u, s)) {
      report.commutation.fail_with("s_alpha does not commute with element " + std::to_string(u));
    }
  }

  // (c) s_alpha outside W_alpha and the resulting order split give the
  // internal direct product Z/2 x W_alpha.
  report.direct_product.checked = 1;
  if (fix.contains(s)) report.direct_product.fail_with("s_alpha fixes alpha");
  if (pm.order() != 2 * fix.order())
    report.direct_product.fail_with("|W_{+-alpha}| != 2 |W_alpha|");
  return report;
}

FixedLocusReport verify_fixed_locus_equality(const ReflectionGroup& w, const RootSystem& delta) {
  FixedLocusReport report;
  const int n = w.dim();
  const Mat id = Mat::Identity(n, n);

  // Representatives of the root lines of Delta plus their dual forms.
  std::vector<Vec> lines;
  std::vector<Vec> duals;
  {
    std::unordered_set<std::string> seen;
    for (const auto& v : delta.all()) {
      Vec m = monic(v);
      if (seen.insert(vec_key(m)).second) {
        lines.push_back(m);
        duals.push_back(w.space().dual_form(m));
      }
    }
  }

  // Forward inclusion: each root hyperplane Ker(alpha^dual) is the fixed
  // space of some w != id; for a genuine root that w is s_alpha and the two
  // subspaces agree exactly.
  for (const auto& line : lines) {
    ++report.forward.checked;
    Mat row(1, n);
    for (int j = 0; j < n; ++j) row(0, j) = w.space().dual_form(line)(j);
    Subspace hyper = kernel(row);
    int pos = w.reflection_on_line(line);
    if (pos >= 0) {
      const Mat& s = w.element(w.reflections()[static_cast<std::size_t>(pos)].element);
      if (!(kernel(s - id) == hyper)) {
        report.forward.fail_with("Ker(alpha^dual) != Fix(s_alpha) for a root line");
      }
      continue;
    }
    // Not a reflection line: look for any nontrivial element fixing the
    // hyperplane pointwise.
    bool found = false;
    for (int i = 0; i < w.order() && !found; ++i) {
      if (i == w.identity_index()) continue;
      bool fixes = true;
      for (int b = 0; b < hyper.dim() && fixes; ++b) {
        Vec basis_vec = hyper.basis().row(b).transpose();
        fixes = mat_eq(w.apply(i, basis_vec), basis_vec);
      }
      found = fixes;
    }
    if (!found) {
      std::string text = "hyperplane of (";
      for (int j = 0; j < line.size(); ++j) {
        if (j) text += ",";
        text += line(j).to_string();
      }
      report.forward.fail_with(text + ") is not contained in any fixed space");
    }
  }

  // Backward inclusion: Fix(w) for w != id lies in a single root hyperplane.
  // A subspace inside a finite union of hyperplanes over an infinite field
  // lies in one of them, so the per-hyperplane scan is complete; the scalar
  // field here has characteristic 0.
  const int order = static_cast<int>(w.order());
  std::vector<char> ok(static_cast<std::size_t>(order), 1);
  parallel_for(order, [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      if (i == w.identity_index()) continue;
      Subspace fix = kernel(w.element(i) - id);
      if (fix.dim() == 0) continue;  // {0} lies in every hyperplane
      bool inside = false;
      for (std::size_t l = 0; l < duals.size() && !inside; ++l) {
        bool vanishes = true;
        for (int b = 0; b < fix.dim() && vanishes; ++b) {
          Scalar value(0);
          for (int j = 0; j < n; ++j) value += duals[l](j) * fix.basis()(b, j);
          vanishes = value.is_zero();
        }
        inside = vanishes;
      }
      if (!inside) ok[static_cast<std::size_t>(i)] = 0;
    }
  });
  report.backward.checked = order - 1;
  for (int i = 0; i < order; ++i) {
    if (!ok[static_cast<std::size_t>(i)]) {
      report.backward.fail_with("Fix(w) escapes every root hyperplane at element " +
                                std::to_string(i));
      break;
    }
  }
  return report;
}

}  // namespace refltk
