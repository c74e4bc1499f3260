#include "m0n/associahedron.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace m0n {

Bracket::Bracket(LabelSet labels, int n) : n_(n) {
  if (n < 3 || !labels.subset_of(LabelSet::all(n)))
    throw std::invalid_argument("bracket has labels outside 1..n");
  labels_ = labels.contains(n) ? labels.complement(n) : labels;
  if (labels_.size() < 2 || labels_.size() > n - 2)
    throw std::invalid_argument("bracket size must lie in [2, n-2]");
}

bool is_bracket_interval(const CircularOrder& word, LabelSet s) {
  if (word.back() != word.size()) return is_bracket_interval(cyclic_normalize(word), s);
  const int n = word.size();
  if (s.empty() || s.contains(n) || !s.subset_of(LabelSet::all(n))) return false;
  int lo = n, hi = -1;
  for (Label l : s.labels()) {
    lo = std::min(lo, word.position(l));
    hi = std::max(hi, word.position(l));
  }
  return hi - lo + 1 == s.size();
}

Face::Face(CircularOrder word, std::vector<Bracket> brackets)
    : word_(std::move(word)), brackets_(std::move(brackets)) {
  const int n = word_.size();
  if (word_.back() != n) throw std::invalid_argument("face word must end in n");
  std::sort(brackets_.begin(), brackets_.end());
  for (std::size_t i = 0; i < brackets_.size(); ++i) {
    if (brackets_[i].n() != n) throw std::invalid_argument("bracket built for a different n");
    if (!is_bracket_interval(word_, brackets_[i].labels()))
      throw std::invalid_argument("bracket is not consecutive in the face word");
    if (i && brackets_[i - 1] == brackets_[i]) throw std::invalid_argument("repeated bracket");
    for (std::size_t j = 0; j < i; ++j)
      if (!compatible(brackets_[i], brackets_[j]))
        throw std::invalid_argument("brackets overlap without nesting");
  }
}

bool Face::contains(const Bracket& b) const {
  return std::binary_search(brackets_.begin(), brackets_.end(), b);
}

std::vector<Bracket> all_brackets(const CircularOrder& word) {
  const int n = word.size();
  std::vector<Bracket> out;
  for (int i = 0; i < n - 1; ++i) {
    LabelSet s;
    s.insert(word[i]);
    for (int j = i + 1; j < n - 1; ++j) {
      s.insert(word[j]);
      if (s.size() <= n - 2) out.emplace_back(s, n);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_codim_range(int n, int min_codim, int max_codim) {
  if (min_codim < 0 || min_codim > max_codim || max_codim > n - 3)
    throw std::invalid_argument("codimension range out of bounds");
}

// Depth-first over increasing candidate indices; preorder gives
// lexicographic order on the chosen lists.
void extend(const CircularOrder& word, const std::vector<Bracket>& candidates, std::size_t start,
            std::vector<Bracket>& chosen, int min_codim, int max_codim,
            const std::function<void(const Face&)>& visit) {
  const int k = static_cast<int>(chosen.size());
  if (k >= min_codim) visit(Face(word, chosen));
  if (k == max_codim) return;
  for (std::size_t i = start; i < candidates.size(); ++i) {
    const Bracket& b = candidates[i];
    if (!std::all_of(chosen.begin(), chosen.end(), [&](const Bracket& c) { return compatible(b, c); }))
      continue;
    chosen.push_back(b);
    extend(word, candidates, i + 1, chosen, min_codim, max_codim, visit);
    chosen.pop_back();
  }
}

}  // namespace

void for_each_face(const CircularOrder& word, int min_codim, int max_codim,
                   const std::function<void(const Face&)>& visit) {
  const CircularOrder w = cyclic_normalize(word);
  require_codim_range(w.size(), min_codim, max_codim);
  std::vector<Bracket> chosen;
  extend(w, all_brackets(w), 0, chosen, min_codim, max_codim, visit);
}

std::vector<Face> enumerate_faces(const CircularOrder& word, int min_codim, int max_codim) {
  std::vector<Face> out;
  for_each_face(word, min_codim, max_codim, [&](const Face& f) { out.push_back(f); });
  return out;
}

std::vector<Face> enumerate_faces(const CircularOrder& word) {
  return enumerate_faces(word, 0, word.size() - 3);
}

BigInt face_count(int n, int k) {
  if (n < 3 || k < 0 || k > n - 3) throw std::invalid_argument("face_count: need n >= 3 and 0 <= k <= n-3");
  const BigInt num = binomial(n - 3, k) * binomial(n + k - 1, k + 1);
  if (num % (n - 1) != 0) throw std::logic_error("face_count: division is not exact");
  return num / (n - 1);
}

BigInt total_face_count(int n) {
  BigInt total = 0;
  for (int k = 0; k <= n - 3; ++k) total += face_count(n, k);
  return total;
}

std::vector<Face> subfaces(const Face& f) {
  std::vector<Bracket> candidates;
  for (const Bracket& b : all_brackets(f.word())) {
    if (f.contains(b)) continue;
    const auto bs = f.brackets();
    if (std::all_of(bs.begin(), bs.end(), [&](const Bracket& c) { return compatible(b, c); }))
      candidates.push_back(b);
  }
  std::vector<Face> out;
  std::vector<Bracket> chosen;
  const int room = f.dim();
  extend(f.word(), candidates, 0, chosen, 0, room, [&](const Face& extra) {
    std::vector<Bracket> all(f.brackets().begin(), f.brackets().end());
    all.insert(all.end(), extra.brackets().begin(), extra.brackets().end());
    out.emplace_back(f.word(), std::move(all));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> LabeledTree::internal_vertices() const {
  std::vector<int> out;
  for (int v = n; v < vertex_count(); ++v) out.push_back(v);
  return out;
}

std::vector<std::pair<int, int>> LabeledTree::internal_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = n; v < vertex_count(); ++v)
    for (int u : adjacency[static_cast<std::size_t>(v)])
      if (u > v) out.emplace_back(v, u);
  return out;
}

LabelSet LabeledTree::side(int from, int to) const {
  LabelSet out;
  std::vector<std::pair<int, int>> stack{{to, from}};
  while (!stack.empty()) {
    auto [v, parent] = stack.back();
    stack.pop_back();
    if (is_external(v)) {
      out.insert(label(v));
      continue;
    }
    for (int u : adjacency[static_cast<std::size_t>(v)])
      if (u != parent) stack.emplace_back(u, v);
  }
  return out;
}

LabeledTree face_to_tree(const Face& f) {
  const int n = f.n();
  const auto brackets = f.brackets();
  const int m = static_cast<int>(brackets.size());
  const int root = n;
  auto vertex_of = [&](int bracket_index) { return bracket_index < 0 ? root : n + 1 + bracket_index; };

  // Smallest bracket strictly containing the given set, or -1 for the root.
  auto owner = [&](LabelSet s) {
    int best = -1;
    for (int i = 0; i < m; ++i) {
      const LabelSet b = brackets[static_cast<std::size_t>(i)].labels();
      if (b != s && s.subset_of(b) &&
          (best < 0 || b.size() < brackets[static_cast<std::size_t>(best)].size()))
        best = i;
    }
    return best;
  };
  auto first_slot = [&](LabelSet s) {
    int lo = std::numeric_limits<int>::max();
    for (Label l : s.labels()) lo = std::min(lo, f.word().position(l));
    return lo;
  };

  LabeledTree t;
  t.n = n;
  t.adjacency.resize(static_cast<std::size_t>(n + 1 + m));
  // children of each internal vertex, keyed by first slot in the word
  std::vector<std::vector<std::pair<int, int>>> children(static_cast<std::size_t>(m + 1));
  auto attach = [&](int parent_index, int child_vertex, LabelSet child_labels) {
    children[static_cast<std::size_t>(parent_index + 1)].emplace_back(first_slot(child_labels), child_vertex);
    t.adjacency[static_cast<std::size_t>(child_vertex)].push_back(vertex_of(parent_index));
  };
  for (Label l = 1; l <= n; ++l) attach(l == n ? -1 : owner(LabelSet{l}), l - 1, LabelSet{l});
  for (int i = 0; i < m; ++i) {
    const LabelSet b = brackets[static_cast<std::size_t>(i)].labels();
    attach(owner(b), vertex_of(i), b);
  }
  for (int i = -1; i < m; ++i) {
    auto& kids = children[static_cast<std::size_t>(i + 1)];
    std::sort(kids.begin(), kids.end());
    auto& adj = t.adjacency[static_cast<std::size_t>(vertex_of(i))];
    std::vector<int> ordered;
    for (const auto& kid : kids) ordered.push_back(kid.second);
    // bracket vertices already hold their parent; it closes the clockwise cycle
    ordered.insert(ordered.end(), adj.begin(), adj.end());
    adj = std::move(ordered);
  }
  return t;
}

std::vector<int> internal_valencies(const Face& f) {
  const LabeledTree t = face_to_tree(f);
  std::vector<int> out;
  for (int v : t.internal_vertices()) out.push_back(t.valency(v));
  return out;
}

bool is_admissible(const Face& f) {
  const auto valencies = internal_valencies(f);
  return std::all_of(valencies.begin(), valencies.end(), [](int v) { return v % 2 == 1; });
}

namespace {

void walk_clockwise(const LabeledTree& t, int v, int from, std::vector<Label>& out) {
  if (t.is_external(v)) {
    out.push_back(t.label(v));
    return;
  }
  const auto& adj = t.adjacency[static_cast<std::size_t>(v)];
  const int deg = static_cast<int>(adj.size());
  const int at = static_cast<int>(std::find(adj.begin(), adj.end(), from) - adj.begin());
  for (int k = 1; k < deg; ++k) walk_clockwise(t, adj[static_cast<std::size_t>((at + k) % deg)], v, out);
}

}  // namespace

std::vector<std::vector<Label>> vertex_blocks(const LabeledTree& t, int v) {
  if (v < 0 || v >= t.vertex_count() || t.is_external(v))
    throw std::invalid_argument("vertex_blocks needs an internal vertex");
  std::vector<std::vector<Label>> blocks;
  for (int u : t.adjacency[static_cast<std::size_t>(v)]) {
    std::vector<Label> block;
    walk_clockwise(t, u, v, block);
    blocks.push_back(std::move(block));
  }
  return blocks;
}

}  // namespace m0n
