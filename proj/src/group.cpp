#include "refltk/group.hpp"

#include <algorithm>
#include <deque>

namespace refltk {

namespace {

std::string action_row_key(const std::int16_t* row, std::size_t n) {
  return std::string(reinterpret_cast<const char*>(row), n * sizeof(std::int16_t));
}

Vec unit_vector(int dim, int i) {
  Vec v(dim);
  v.setConstant(Scalar(0));
  v(i) = Scalar(1);
  return v;
}

}  // namespace

Reflection reflection(const BilinearSpace& space, const Vec& v) {
  require(static_cast<int>(v.size()) == space.dim(), ErrorCode::DimensionError,
          "reflection root must live in the space");
  Scalar norm = space.evaluate(v, v);
  require(!norm.is_zero(), ErrorCode::IsotropicVector,
          "cannot reflect along an isotropic vector");
  Scalar factor = Scalar(2) / norm;
  Vec dual = space.dual_form(v);  // b(v, e_j) coefficients
  Mat m = Mat::Identity(space.dim(), space.dim());
  for (int i = 0; i < space.dim(); ++i) {
    if (v(i).is_zero()) continue;
    Scalar vi = factor * v(i);
    for (int j = 0; j < space.dim(); ++j) m(i, j) -= vi * dual(j);
  }
  return Reflection{v, std::move(m)};
}

bool is_orthogonal(const BilinearSpace& space, const Mat& g) {
  require(g.rows() == space.dim() && g.cols() == space.dim(), ErrorCode::DimensionError,
          "orthogonality test needs a dim x dim matrix");
  return mat_eq(g.transpose() * space.gram() * g, space.gram());
}

int ReflectionGroup::index_of(const Mat& g) const {
  auto it = index_.find(mat_key(g));
  return it == index_.end() ? -1 : it->second;
}

int ReflectionGroup::product(int i, int j) const {
  const std::size_t n = reflections_.size();
  if (n == 0 || action_index_.empty()) {
    return index_.at(mat_key(element(i) * element(j)));
  }
  const std::int16_t* gi = &root_action_[static_cast<std::size_t>(i) * n];
  const std::int16_t* gj = &root_action_[static_cast<std::size_t>(j) * n];
  thread_local std::vector<std::int16_t> buf;
  buf.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::int16_t through = gj[r];
    std::int16_t image = gi[std::abs(through) - 1];
    buf[r] = through < 0 ? static_cast<std::int16_t>(-image) : image;
  }
  return action_index_.at(action_row_key(buf.data(), n));
}

int ReflectionGroup::element_order(int i) const {
  int ord = 1;
  int cur = i;
  while (cur != identity_) {
    cur = product(cur, i);
    ++ord;
  }
  return ord;
}

int ReflectionGroup::reflection_on_line(const Vec& v) const {
  if (static_cast<int>(v.size()) != dim()) return -1;
  Vec m = monic(v);
  if (monic_sign(v) == 0) return -1;
  auto it = line_index_.find(vec_key(m));
  return it == line_index_.end() ? -1 : it->second;
}

int ReflectionGroup::reflection_position_of_element(int i) const {
  return reflection_pos_of_element_[static_cast<std::size_t>(i)];
}

namespace {

/// Signed root-line row of a single matrix, by direct matrix-vector products.
std::vector<std::int16_t> action_row_of_matrix(const Mat& g,
                                               const std::vector<GroupReflection>& refls,
                                               const std::unordered_map<std::string, int>& lines) {
  std::vector<std::int16_t> row(refls.size(), 0);
  for (std::size_t r = 0; r < refls.size(); ++r) {
    Vec image = g * refls[r].root;
    int sign = monic_sign(image);
    auto it = lines.find(vec_key(monic(image)));
    require(it != lines.end(), ErrorCode::Internal, "group does not permute its root lines");
    row[r] = static_cast<std::int16_t>(sign * (it->second + 1));
  }
  return row;
}

}  // namespace

ReflectionGroup close_group(const BilinearSpace& space, const std::vector<Reflection>& gens,
                            long cap) {
  require(!gens.empty(), ErrorCode::InvalidForm, "closure needs at least one generator");
  for (const auto& g : gens) {
    require(is_orthogonal(space, g.matrix), ErrorCode::InvalidForm,
            "generator is not orthogonal for the space");
  }

  const int n = space.dim();
  std::vector<Mat> found;
  std::unordered_map<std::string, int> seen;
  // Product edges (element, generator) -> element, in discovery order, so the
  // root-line action can later be propagated instead of recomputed.
  struct Edge {
    int from, gen, to;
  };
  std::vector<Edge> edges;
  std::vector<int> gen_slot;  // discovery index per generator

  auto try_insert = [&](Mat m) -> int {
    std::string key = mat_key(m);
    auto [it, fresh] = seen.emplace(std::move(key), static_cast<int>(found.size()));
    if (fresh) found.push_back(std::move(m));
    return fresh ? it->second : -1;
  };

  try_insert(Mat::Identity(n, n));
  std::deque<int> frontier;
  for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
    int idx = try_insert(gens[static_cast<std::size_t>(g)].matrix);
    gen_slot.push_back(idx >= 0 ? idx : seen.at(mat_key(gens[static_cast<std::size_t>(g)].matrix)));
    if (idx >= 0) frontier.push_back(idx);
  }
  while (!frontier.empty()) {
    int i = frontier.front();
    frontier.pop_front();
    const Mat lhs = found[static_cast<std::size_t>(i)];
    for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
      int idx = try_insert(lhs * gens[static_cast<std::size_t>(g)].matrix);
      if (idx >= 0) {
        require(static_cast<long>(found.size()) <= cap, ErrorCode::OrderCapExceeded,
                "group closure exceeded the cap of " + std::to_string(cap) + " elements");
        edges.push_back(Edge{i, g, idx});
        frontier.push_back(idx);
      }
    }
  }

  ReflectionGroup w;
  w.space_ = space;
  w.generators_ = gens;

  // Canonical element order: sort by matrix key so every downstream index,
  // fingerprint and report is schedule-independent.
  const int order = static_cast<int>(found.size());
  std::vector<std::pair<std::string, int>> keys;
  keys.reserve(found.size());
  for (auto& [key, idx] : seen) keys.emplace_back(key, idx);
  std::sort(keys.begin(), keys.end());
  std::vector<int> new_of_old(static_cast<std::size_t>(order), -1);
  w.elements_.reserve(found.size());
  for (auto& [key, old] : keys) {
    new_of_old[static_cast<std::size_t>(old)] = static_cast<int>(w.elements_.size());
    w.index_.emplace(key, static_cast<int>(w.elements_.size()));
    w.elements_.push_back(std::move(found[static_cast<std::size_t>(old)]));
  }

  w.identity_ = w.index_.at(mat_key(Mat::Identity(n, n)));
  for (int slot : gen_slot) w.generator_indices_.push_back(new_of_old[static_cast<std::size_t>(slot)]);

  // Reflection detection: rank(g - id) = 1 picks out the pseudo-reflections,
  // which in an orthogonal group over a field of characteristic 0 are exactly
  // the reflections; the root line is the kernel of (g + id).
  w.reflection_pos_of_element_.assign(static_cast<std::size_t>(order), -1);
  const Mat id = Mat::Identity(n, n);
  for (int i = 0; i < order; ++i) {
    if (i == w.identity_) continue;
    const Mat& g = w.elements_[static_cast<std::size_t>(i)];
    if (rank(g - id) != 1) continue;
    require(mat_eq(g * g, id), ErrorCode::Internal, "pseudo-reflection is not an involution");
    require(determinant(g) == Scalar(-1), ErrorCode::Internal, "reflection with det != -1");
    Subspace negated = kernel(g + id);
    require(negated.dim() == 1, ErrorCode::Internal, "involution with bad eigenspaces");
    Vec root = monic(negated.basis().row(0).transpose());
    int pos = static_cast<int>(w.reflections_.size());
    w.reflection_pos_of_element_[static_cast<std::size_t>(i)] = pos;
    w.line_index_.emplace(vec_key(root), pos);
    w.reflections_.push_back(GroupReflection{i, std::move(root)});
  }

  // Signed action on root lines. Only identity and generator rows need exact
  // matrix-vector products; every other row is the composition along its
  // discovery edge, which agrees with the direct computation by associativity.
  const std::size_t nr = w.reflections_.size();
  w.root_action_.assign(static_cast<std::size_t>(order) * nr, 0);
  if (nr > 0) {
    auto row_of = [&](int i) { return &w.root_action_[static_cast<std::size_t>(i) * nr]; };
    std::int16_t* id_row = row_of(w.identity_);
    for (std::size_t r = 0; r < nr; ++r) id_row[r] = static_cast<std::int16_t>(r + 1);
    std::vector<std::vector<std::int16_t>> gen_rows;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      gen_rows.push_back(action_row_of_matrix(gens[g].matrix, w.reflections_, w.line_index_));
      std::int16_t* dst = row_of(w.generator_indices_[g]);
      std::copy(gen_rows[g].begin(), gen_rows[g].end(), dst);
    }
    for (const Edge& e : edges) {
      const std::int16_t* lhs = row_of(new_of_old[static_cast<std::size_t>(e.from)]);
      const std::int16_t* rhs = gen_rows[static_cast<std::size_t>(e.gen)].data();
      std::int16_t* dst = row_of(new_of_old[static_cast<std::size_t>(e.to)]);
      for (std::size_t r = 0; r < nr; ++r) {
        std::int16_t through = rhs[r];
        std::int16_t image = lhs[std::abs(through) - 1];
        dst[r] = through < 0 ? static_cast<std::int16_t>(-image) : image;
      }
    }
    // Spot-check the propagated rows against direct products.
    int stride = std::max(1, order / 16);
    for (int i = 0; i < order; i += stride) {
      auto direct = action_row_of_matrix(w.elements_[static_cast<std::size_t>(i)],
                                         w.reflections_, w.line_index_);
      require(std::equal(direct.begin(), direct.end(), row_of(i)), ErrorCode::Internal,
              "propagated root action disagrees with direct computation");
    }
  }

  // The signed root action is faithful for reflection-generated groups; key it
  // for index-level products. On a collision (possible only for exotic
  // caller-supplied generators) products fall back to matrix hashing.
  bool faithful = nr > 0;
  for (int i = 0; i < order && faithful; ++i) {
    auto [it, fresh] = w.action_index_.emplace(
        action_row_key(&w.root_action_[static_cast<std::size_t>(i) * nr], nr), i);
    if (!fresh) faithful = false;
  }
  if (!faithful) w.action_index_.clear();

  w.inverses_.assign(static_cast<std::size_t>(order), -1);
  if (faithful) {
    std::vector<std::int16_t> buf(nr);
    for (int i = 0; i < order; ++i) {
      const std::int16_t* row = &w.root_action_[static_cast<std::size_t>(i) * nr];
      for (std::size_t r = 0; r < nr; ++r) {
        std::int16_t image = row[r];
        std::size_t target = static_cast<std::size_t>(std::abs(image)) - 1;
        buf[target] = static_cast<std::int16_t>(image < 0 ? -(static_cast<int>(r) + 1)
                                                          : static_cast<int>(r) + 1);
      }
      w.inverses_[static_cast<std::size_t>(i)] = w.action_index_.at(action_row_key(buf.data(), nr));
    }
  } else {
    for (int i = 0; i < order; ++i) {
      Mat inv = space.dual_gram() * w.elements_[static_cast<std::size_t>(i)].transpose() *
                space.gram();
      int idx = w.index_of(inv);
      require(idx >= 0, ErrorCode::Internal, "closure not inverse-closed");
      w.inverses_[static_cast<std::size_t>(i)] = idx;
    }
  }

  return w;
}

std::vector<std::vector<int>> conjugacy_classes(const ReflectionGroup& w,
                                                const std::vector<int>& subset) {
  const int order = static_cast<int>(w.order());
  std::vector<bool> in_subset(static_cast<std::size_t>(order), false);
  for (int i : subset) {
    require(i >= 0 && i < order, ErrorCode::NotASubset, "index outside the group");
    in_subset[static_cast<std::size_t>(i)] = true;
  }
  std::vector<int> members;
  for (int i = 0; i < order; ++i)
    if (in_subset[static_cast<std::size_t>(i)]) members.push_back(i);

  std::vector<bool> visited(static_cast<std::size_t>(order), false);
  std::vector<std::vector<int>> blocks;
  for (int start : members) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    // Conjugation orbit under the generators spans the full W-orbit.
    std::vector<bool> in_orbit(static_cast<std::size_t>(order), false);
    std::deque<int> queue{start};
    in_orbit[static_cast<std::size_t>(start)] = true;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int g : w.generator_indices()) {
        int y = w.product(w.product(g, x), w.inverse(g));
        if (!in_orbit[static_cast<std::size_t>(y)]) {
          in_orbit[static_cast<std::size_t>(y)] = true;
          queue.push_back(y);
        }
      }
    }
    std::vector<int> block;
    for (int i : members) {
      if (in_orbit[static_cast<std::size_t>(i)]) {
        block.push_back(i);
        visited[static_cast<std::size_t>(i)] = true;
      }
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::vector<std::vector<int>> conjugacy_classes(const ReflectionGroup& w,
                                                const std::vector<Mat>& subset) {
  std::vector<int> indices;
  indices.reserve(subset.size());
  for (const auto& m : subset) {
    int idx = w.index_of(m);
    require(idx >= 0, ErrorCode::NotASubset, "matrix is not an element of the group");
    indices.push_back(idx);
  }
  return conjugacy_classes(w, indices);
}

namespace {

NamedGroup build_named(Mat gram, std::vector<Vec> roots, long field_tag, std::string name) {
  BilinearSpace space(std::move(gram));
  std::vector<Reflection> gens;
  gens.reserve(roots.size());
  for (const auto& r : roots) gens.push_back(reflection(space, r));
  return NamedGroup{std::move(space), std::move(gens), field_tag, std::move(name)};
}

Mat identity_gram(int n) { return Mat::Identity(n, n); }

/// Symmetrized Cartan matrix of a simply-bonded chain with prescribed
/// off-diagonal entries between consecutive nodes.
Mat chain_gram(const std::vector<Scalar>& bonds) {
  int n = static_cast<int>(bonds.size()) + 1;
  Mat g(n, n);
  g.setConstant(Scalar(0));
  for (int i = 0; i < n; ++i) g(i, i) = Scalar(2);
  for (int i = 0; i + 1 < n; ++i) {
    g(i, i + 1) = bonds[static_cast<std::size_t>(i)];
    g(i + 1, i) = bonds[static_cast<std::size_t>(i)];
  }
  return g;
}

std::vector<Vec> standard_basis_roots(int n) {
  std::vector<Vec> roots;
  roots.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) roots.push_back(unit_vector(n, i));
  return roots;
}

Vec coords(int n, std::initializer_list<std::pair<int, Scalar>> entries) {
  Vec v(n);
  v.setConstant(Scalar(0));
  for (const auto& [i, s] : entries) v(i) = s;
  return v;
}

/// 2 cos(2 pi / m) for the dihedral angles realizable over Q or Q(sqrt d).
Scalar dihedral_cosine(int m) {
  switch (m) {
    case 3: return Scalar(-1);
    case 4: return Scalar(0);
    case 5: return Scalar(mpq_class(-1, 2), mpq_class(1, 2), 5);
    case 6: return Scalar(1);
    case 8: return Scalar(0, 1, 2);
    case 10: return Scalar(mpq_class(1, 2), mpq_class(1, 2), 5);
    case 12: return Scalar(0, 1, 3);
    default:
      fail(ErrorCode::UnknownType,
           "I2(" + std::to_string(m) + ") is not realizable over Q or a quadratic field");
  }
}

}  // namespace

NamedGroup named_weyl(const std::string& type, int rank) {
  auto bad_rank = [&]() -> void {
    fail(ErrorCode::UnknownType, "invalid rank " + std::to_string(rank) + " for type " + type);
  };

  if (type == "A") {
    if (rank < 1 || rank > 8) bad_rank();
    std::vector<Scalar> bonds(static_cast<std::size_t>(rank - 1), Scalar(-1));
    return build_named(chain_gram(bonds), standard_basis_roots(rank), 0,
                       "A" + std::to_string(rank));
  }
  if (type == "B" || type == "C" || type == "D") {
    if (rank < 2 || rank > 8) bad_rank();
    std::vector<Vec> roots;
    for (int i = 0; i + 1 < rank; ++i)
      roots.push_back(coords(rank, {{i, Scalar(1)}, {i + 1, Scalar(-1)}}));
    if (type == "B")
      roots.push_back(coords(rank, {{rank - 1, Scalar(1)}}));
    else if (type == "C")
      roots.push_back(coords(rank, {{rank - 1, Scalar(2)}}));
    else
      roots.push_back(coords(rank, {{rank - 2, Scalar(1)}, {rank - 1, Scalar(1)}}));
    return build_named(identity_gram(rank), std::move(roots), 0, type + std::to_string(rank));
  }
  if (type == "F") {
    if (rank != 4) bad_rank();
    Scalar half{mpq_class(1, 2)};
    std::vector<Vec> roots = {
        coords(4, {{1, Scalar(1)}, {2, Scalar(-1)}}),
        coords(4, {{2, Scalar(1)}, {3, Scalar(-1)}}),
        coords(4, {{3, Scalar(1)}}),
        coords(4, {{0, half}, {1, -half}, {2, -half}, {3, -half}}),
    };
    return build_named(identity_gram(4), std::move(roots), 0, "F4");
  }
  if (type == "G") {
    if (rank != 2) bad_rank();
    Mat gram(2, 2);
    gram << Scalar(2), Scalar(-3), Scalar(-3), Scalar(6);
    return build_named(std::move(gram), standard_basis_roots(2), 0, "G2");
  }
  if (type == "H") {
    if (rank != 3 && rank != 4) bad_rank();
    Scalar golden_bond{mpq_class(-1, 2), mpq_class(-1, 2), 5};  // -2cos(pi/5)
    std::vector<Scalar> bonds(static_cast<std::size_t>(rank - 1), Scalar(-1));
    bonds[0] = golden_bond;
    return build_named(chain_gram(bonds), standard_basis_roots(rank), 5,
                       "H" + std::to_string(rank));
  }
  if (type.size() >= 4 && type.rfind("I2(", 0) == 0 && type.back() == ')') {
    if (rank != 2) bad_rank();
    int m = 0;
    try {
      m = std::stoi(type.substr(3, type.size() - 4));
    } catch (const std::exception&) {
      fail(ErrorCode::UnknownType, "cannot parse dihedral order in " + type);
    }
    Scalar c = dihedral_cosine(m);
    Mat gram(2, 2);
    gram << Scalar(2), c, c, Scalar(2);
    std::vector<Vec> roots = {coords(2, {{0, c}, {1, Scalar(-2)}}),
                              coords(2, {{0, Scalar(1) - c}, {1, Scalar(1)}})};
    return build_named(std::move(gram), std::move(roots), c.field_tag(), type);
  }
  fail(ErrorCode::UnknownType, "unknown Coxeter type '" + type + "'");
}

}  // namespace refltk
