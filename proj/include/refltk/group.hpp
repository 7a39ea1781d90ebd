#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "refltk/bilinear.hpp"

namespace refltk {

inline constexpr long kDefaultOrderCap = 1'000'000;

/// Reflection s_v: orthogonal involution negating its root v and fixing the
/// hyperplane b(v, -) = 0 pointwise.
struct Reflection {
  Vec root;
  Mat matrix;
};

/// Builds s_v(w) = w - (2 b(v,w) / b(v,v)) v. Throws IsotropicVector when
/// b(v,v) = 0 (the formula's denominator vanishes).
Reflection reflection(const BilinearSpace& space, const Vec& v);

/// True iff g^T * gram * g = gram.
bool is_orthogonal(const BilinearSpace& space, const Mat& g);

/// A reflection contained in a closed group: its element index plus the
/// canonical (monic) representative of its root line.
struct GroupReflection {
  int element;
  Vec root;
};

/// Fully enumerated finite subgroup of O(V,b) generated by reflections.
/// Elements are stored sorted by canonical matrix key, so indices, reports and
/// fingerprints are deterministic regardless of closure schedule. Alongside the
/// exact matrices the group keeps its signed action on the reflection root
/// lines; that action is faithful (every element fixes the orthogonal
/// complement of the root span pointwise), which makes index-level products
/// and inverses cheap. All data is immutable after construction.
class ReflectionGroup {
 public:
  const BilinearSpace& space() const { return space_; }
  int dim() const { return space_.dim(); }
  long order() const { return static_cast<long>(elements_.size()); }

  const std::vector<Mat>& elements() const { return elements_; }
  const Mat& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  const std::vector<Reflection>& generators() const { return generators_; }
  const std::vector<int>& generator_indices() const { return generator_indices_; }

  int identity_index() const { return identity_; }
  /// Index of g in elements(), or -1 when g is not a member.
  int index_of(const Mat& g) const;
  int inverse(int i) const { return inverses_[static_cast<std::size_t>(i)]; }
  /// Index of element(i) * element(j), computed through the signed root action.
  int product(int i, int j) const;
  Vec apply(int i, const Vec& v) const { return element(i) * v; }
  /// Multiplicative order of element(i).
  int element_order(int i) const;

  /// All reflections of the group with canonical roots, sorted by element index.
  const std::vector<GroupReflection>& reflections() const { return reflections_; }
  /// Position in reflections() of the reflection with root line K*v, else -1.
  int reflection_on_line(const Vec& v) const;
  /// Position in reflections() if element i is a reflection, else -1.
  int reflection_position_of_element(int i) const;

  /// Signed action of element i on root line r (positions in reflections()):
  /// returns sign * (image_position + 1).
  int root_action(int i, int r) const {
    return root_action_[static_cast<std::size_t>(i) * reflections_.size() +
                        static_cast<std::size_t>(r)];
  }

 private:
  friend ReflectionGroup close_group(const BilinearSpace&, const std::vector<Reflection>&, long);

  BilinearSpace space_{Mat::Identity(1, 1)};
  std::vector<Reflection> generators_;
  std::vector<int> generator_indices_;
  std::vector<Mat> elements_;
  std::vector<int> inverses_;
  std::unordered_map<std::string, int> index_;
  int identity_ = -1;

  std::vector<GroupReflection> reflections_;
  std::unordered_map<std::string, int> line_index_;
  std::vector<int> reflection_pos_of_element_;
  std::vector<std::int16_t> root_action_;  // |W| x |R_W|, sign * (pos + 1)
  std::unordered_map<std::string, int> action_index_;
};

/// Breadth-first product closure of the generator set, with a canonical-matrix
/// hash set for dedup. Throws OrderCapExceeded when the closure grows past
/// cap. Generators must be orthogonal for the space.
ReflectionGroup close_group(const BilinearSpace& space, const std::vector<Reflection>& gens,
                            long cap = kDefaultOrderCap);

/// Partition of the subset (element indices) into W-conjugacy classes. Blocks
/// and their members are sorted ascending. Throws NotASubset on bad indices.
std::vector<std::vector<int>> conjugacy_classes(const ReflectionGroup& w,
                                                const std::vector<int>& subset);

/// Matrix-level variant; members are matched to element indices first.
std::vector<std::vector<int>> conjugacy_classes(const ReflectionGroup& w,
                                                const std::vector<Mat>& subset);

/// A named finite Coxeter datum realized over Q or Q(sqrt d): the bilinear
/// space, the simple-root reflections and the quadratic field tag (0 for Q).
struct NamedGroup {
  BilinearSpace space;
  std::vector<Reflection> generators;
  long field_tag;
  std::string name;
};

/// Standard presentations for types A, B, C, D, F4, G2, H3, H4 and I2(m) with
/// m in {3,4,5,6,8,10,12} (the dihedral angles realizable over a quadratic
/// field). Type strings: "A", "B", "C", "D", "F", "G", "H", "I2(m)".
/// Throws UnknownType for invalid data.
NamedGroup named_weyl(const std::string& type, int rank);

}  // namespace refltk
