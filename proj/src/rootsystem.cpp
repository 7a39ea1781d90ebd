#include "refltk/rootsystem.hpp"

#include <algorithm>
#include <map>

#include "refltk/stabilizers.hpp"

namespace refltk {

std::vector<Vec> RootSystem::all() const {
  std::vector<Vec> out;
  for (const auto& cls : classes) out.insert(out.end(), cls.begin(), cls.end());
  return out;
}

int RootSystem::total() const {
  int n = 0;
  for (const auto& cls : classes) n += static_cast<int>(cls.size());
  return n;
}

void RootSystem::insert(int class_index, const Vec& v) {
  if (!keys.insert(vec_key(v)).second) return;
  classes[static_cast<std::size_t>(class_index)].push_back(v);
}

RootSystem RootSystem::from_classes(int dim, std::vector<std::vector<Vec>> classes,
                                    std::vector<Vec> representatives) {
  RootSystem delta;
  delta.dim = dim;
  delta.classes = std::move(classes);
  delta.representatives = std::move(representatives);
  for (const auto& cls : delta.classes)
    for (const auto& v : cls) delta.keys.insert(vec_key(v));
  return delta;
}

RootSystem build_root_system(const ReflectionGroup& w) {
  std::vector<int> reflection_elements;
  for (const auto& r : w.reflections()) reflection_elements.push_back(r.element);

  RootSystem delta;
  delta.dim = w.dim();
  auto blocks = conjugacy_classes(w, reflection_elements);
  for (const auto& block : blocks) {
    // beta_i: content-normalized form of the lexicographically least monic
    // root in the class. Any choice of representative works; this one is
    // deterministic.
    const Vec* least = nullptr;
    for (int elem : block) {
      const Vec& root = w.reflections()[static_cast<std::size_t>(
          w.reflection_position_of_element(elem))].root;
      if (least == nullptr || lex_compare(root, *least) < 0) least = &root;
    }
    Vec beta = content_normalize(*least);

    delta.classes.emplace_back();
    int idx = static_cast<int>(delta.classes.size()) - 1;
    for (int k = 0; k < w.order(); ++k) delta.insert(idx, w.apply(k, beta));
    auto& cls = delta.classes.back();
    std::sort(cls.begin(), cls.end(),
              [](const Vec& x, const Vec& y) { return vec_key(x) < vec_key(y); });
    delta.representatives.push_back(std::move(beta));
  }
  return delta;
}

namespace {

std::string describe_vec(const Vec& v) {
  std::string out = "(";
  for (int i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v(i).to_string();
  }
  return out + ")";
}

}  // namespace

AxiomReport verify_axioms(const RootSystem& delta, const ReflectionGroup& w) {
  AxiomReport report;
  const auto roots = delta.all();
  const BilinearSpace& space = w.space();

  // (R1): within Delta, proportional roots occur exactly as +- pairs. Since
  // lambda * alpha in Delta means lambda * alpha is one of finitely many
  // stored vectors, grouping by line is a complete check of the axiom.
  {
    std::map<std::string, std::vector<const Vec*>> lines;
    for (const auto& v : roots) lines[vec_key(monic(v))].push_back(&v);
    report.r1.checked = static_cast<long>(roots.size());
    for (const auto& [key, members] : lines) {
      if (members.size() == 2 && mat_eq(*members[0], Vec(-*members[1]))) continue;
      if (members.size() == 1) {
        report.r1.fail_with("missing -alpha for alpha = " + describe_vec(*members[0]));
      } else {
        // Two members on the same line that are not an exact +- pair.
        const Vec& a = *members[0];
        const Vec* other = nullptr;
        for (std::size_t i = 1; i < members.size(); ++i) {
          if (!mat_eq(*members[i], Vec(-a))) {
            other = members[i];
            break;
          }
        }
        if (other == nullptr) other = members[1];
        Scalar lambda(0);
        for (int i = 0; i < a.size(); ++i) {
          if (!a(i).is_zero()) {
            lambda = (*other)(i) / a(i);
            break;
          }
        }
        report.r1.fail_with("alpha = " + describe_vec(a) + " and lambda = " +
                            lambda.to_string() + " with lambda*alpha in Delta");
      }
    }
  }

  // (R2): s_alpha(beta) = beta - (2 b(alpha,beta)/b(alpha,alpha)) alpha in Delta.
  for (const auto& alpha : roots) {
    Scalar norm = space.evaluate(alpha, alpha);
    if (norm.is_zero()) {
      report.r2.fail_with("isotropic root " + describe_vec(alpha));
      continue;
    }
    for (const auto& beta : roots) {
      ++report.r2.checked;
      Scalar c = (Scalar(2) * space.evaluate(alpha, beta)) / norm;
      Vec image = beta - Vec(alpha * c);
      if (!delta.contains(image)) {
        report.r2.fail_with("s_alpha(beta) escapes Delta for alpha = " + describe_vec(alpha) +
                            ", beta = " + describe_vec(beta));
      }
    }
  }

  // Cover: the reflections {s_alpha : alpha in Delta} are exactly R_W.
  {
    std::unordered_set<std::string> delta_lines;
    for (const auto& v : roots) delta_lines.insert(vec_key(monic(v)));
    report.cover.checked = static_cast<long>(delta_lines.size());
    for (const auto& v : roots) {
      if (w.reflection_on_line(v) < 0) {
        report.cover.fail_with("no reflection of W has root line of " + describe_vec(v));
      }
    }
    for (const auto& r : w.reflections()) {
      if (delta_lines.count(vec_key(r.root)) == 0) {
        report.cover.fail_with("reflection root line " + describe_vec(r.root) +
                               " missing from Delta");
      }
    }
    if (report.cover.pass &&
        delta_lines.size() != w.reflections().size()) {
      report.cover.fail_with("line count mismatch");
    }
  }

  // Conjugation identity and W-stability of the classes, through the signed
  // root-line action (exact: elements are determined by it).
  if (report.cover.pass) {
    const int nr = static_cast<int>(w.reflections().size());
    std::vector<int> class_of(static_cast<std::size_t>(nr), -1);
    for (std::size_t c = 0; c < delta.classes.size(); ++c) {
      for (const auto& v : delta.classes[c]) {
        int pos = w.reflection_on_line(v);
        if (pos >= 0) class_of[static_cast<std::size_t>(pos)] = static_cast<int>(c);
      }
    }
    for (int i = 0; i < w.order(); ++i) {
      int inv = w.inverse(i);
      for (int r = 0; r < nr; ++r) {
        ++report.conjugation.checked;
        int s_elem = w.reflections()[static_cast<std::size_t>(r)].element;
        int lhs = w.product(w.product(i, s_elem), inv);
        int image = std::abs(w.root_action(i, r)) - 1;
        int rhs = w.reflections()[static_cast<std::size_t>(image)].element;
        if (lhs != rhs) {
          report.conjugation.fail_with("w s_alpha w^{-1} != s_{w.alpha} at element " +
                                       std::to_string(i) + ", root " + std::to_string(r));
        }
        ++report.stability.checked;
        if (class_of[static_cast<std::size_t>(r)] != class_of[static_cast<std::size_t>(image)]) {
          report.stability.fail_with("class of root " + std::to_string(r) +
                                     " not preserved by element " + std::to_string(i));
        }
      }
    }
  } else {
    report.conjugation.fail_with("skipped: root lines do not match R_W");
    report.stability.fail_with("skipped: root lines do not match R_W");
  }

  return report;
}

Polynomial g_delta(const BilinearSpace& space, const RootSystem& delta) {
  Polynomial product = Polynomial::constant(space.dim(), Scalar(1));
  for (const auto& alpha : delta.all()) {
    product = product * Polynomial::linear_form(space.dual_form(alpha));
  }
  return product;
}

bool vanishing_locus_equals_moved_locus(const ReflectionGroup& w, const RootSystem& delta) {
  return verify_fixed_locus_equality(w, delta).all_pass();
}

}  // namespace refltk
