#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "m0n/circular_order.hpp"
#include "m0n/exact.hpp"
#include "m0n/label_set.hpp"

namespace m0n {

/// A proper block of consecutive labels, i.e. an internal edge of the dual
/// tree. Stored as whichever of {S, S^c} does not contain n, so the same
/// bracket read in any rotated chart compares equal.
class Bracket {
 public:
  /// Throws std::invalid_argument unless 2 <= |S| <= n-2 after normalization.
  Bracket(LabelSet labels, int n);

  LabelSet labels() const noexcept { return labels_; }
  int size() const noexcept { return labels_.size(); }
  int n() const noexcept { return n_; }

  friend bool operator==(const Bracket& a, const Bracket& b) = default;
  friend bool operator<(const Bracket& a, const Bracket& b) { return lex_less(a.labels_, b.labels_); }

 private:
  LabelSet labels_;
  int n_ = 0;
};

/// Two brackets may coexist in a bracketing iff they are nested or disjoint.
inline bool compatible(const Bracket& a, const Bracket& b) {
  const LabelSet x = a.labels(), y = b.labels();
  return x.disjoint(y) || x.subset_of(y) || y.subset_of(x);
}

/// A face of the associahedron K(word): a nested family of brackets on the
/// first n-1 letters of a word that ends in n.
class Face {
 public:
  /// Validates the bracketing; `word` must end in n. Brackets are sorted.
  Face(CircularOrder word, std::vector<Bracket> brackets);
  explicit Face(CircularOrder word) : Face(std::move(word), {}) {}

  const CircularOrder& word() const noexcept { return word_; }
  std::span<const Bracket> brackets() const noexcept { return brackets_; }
  int n() const noexcept { return word_.size(); }
  int codim() const noexcept { return static_cast<int>(brackets_.size()); }
  int dim() const noexcept { return n() - 3 - codim(); }
  bool contains(const Bracket& b) const;

  friend bool operator==(const Face& a, const Face& b) = default;
  friend bool operator<(const Face& a, const Face& b) {
    if (a.word_ != b.word_) return a.word_ < b.word_;
    return a.brackets_ < b.brackets_;
  }

 private:
  CircularOrder word_;
  std::vector<Bracket> brackets_;
};

/// True iff `s` occupies consecutive slots among the first n-1 letters.
bool is_bracket_interval(const CircularOrder& word, LabelSet s);

/// Every bracket of K(word), in bracket order.
std::vector<Bracket> all_brackets(const CircularOrder& word);

/// Visits every face of K(word) with codimension in [min_codim, max_codim],
/// in lexicographic order of the sorted bracket lists. `word` is rotated to
/// end in n first.
void for_each_face(const CircularOrder& word, int min_codim, int max_codim,
                   const std::function<void(const Face&)>& visit);

std::vector<Face> enumerate_faces(const CircularOrder& word, int min_codim, int max_codim);
std::vector<Face> enumerate_faces(const CircularOrder& word);

/// Number of codimension-k faces of K_{n-1}:
/// C(n-3, k) C(n+k-1, k+1) / (n-1).
BigInt face_count(int n, int k);
BigInt total_face_count(int n);

/// Every face g with the same word and g.brackets containing f.brackets,
/// f included.
std::vector<Face> subfaces(const Face& f);

/// The planar dual tree of a polygon subdivision. Vertices 0..n-1 are the
/// external vertices carrying labels 1..n; internal vertices follow, the
/// first being the region adjacent to label n. Each adjacency list is in
/// clockwise order.
struct LabeledTree {
  int n = 0;
  std::vector<std::vector<int>> adjacency;

  int vertex_count() const { return static_cast<int>(adjacency.size()); }
  bool is_external(int v) const { return v < n; }
  Label label(int v) const { return v + 1; }
  int valency(int v) const { return static_cast<int>(adjacency[static_cast<std::size_t>(v)].size()); }

  std::vector<int> internal_vertices() const;
  std::vector<std::pair<int, int>> internal_edges() const;

  /// Labels of the component of (tree minus edge {from,to}) containing `to`.
  LabelSet side(int from, int to) const;
};

LabeledTree face_to_tree(const Face& f);

/// Valencies of the internal vertices, root region first.
std::vector<int> internal_valencies(const Face& f);

/// Every internal vertex has odd valency.
bool is_admissible(const Face& f);

/// For each edge at internal vertex v (clockwise), the labels beyond that
/// edge in clockwise order. Throws std::invalid_argument if v is external.
std::vector<std::vector<Label>> vertex_blocks(const LabeledTree& t, int v);

}  // namespace m0n
