#include "m0n/moduli.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "m0n/errors.hpp"

namespace m0n {

Face twist(const Face& f, const Bracket& a) {
  if (!f.contains(a)) throw std::invalid_argument("twist: bracket is not in the face");
  std::vector<Label> word(f.word().labels().begin(), f.word().labels().end());
  int lo = f.n(), hi = -1;
  for (Label l : a.labels().labels()) {
    lo = std::min(lo, f.word().position(l));
    hi = std::max(hi, f.word().position(l));
  }
  std::reverse(word.begin() + lo, word.begin() + hi + 1);
  return Face(CircularOrder(std::move(word)), {f.brackets().begin(), f.brackets().end()});
}

TwistOrbit twist_orbit(const Face& f) {
  Face seed(cyclic_normalize(f.word()), {f.brackets().begin(), f.brackets().end()});
  std::set<Face> seen{seed};
  std::deque<Face> queue{seed};
  while (!queue.empty()) {
    const Face cur = std::move(queue.front());
    queue.pop_front();
    for (const Bracket& a : cur.brackets()) {
      Face next = twist(cur, a);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return TwistOrbit{std::move(seed), {seen.begin(), seen.end()}};
}

std::optional<Orientation> orbit_match(const TwistOrbit& orbit, const CircularOrder& beta) {
  const CircularOrder target = cyclic_normalize(beta);
  bool same = false, reversed = false;
  for (const Face& m : orbit.members) {
    same = same || m.word() == target;
    reversed = reversed || cyclic_normalize(m.word().reversed()) == target;
  }
  if (same && reversed)
    throw InternalError("twist orbit reaches both orientations of " + beta.to_string());
  if (same) return Orientation::same;
  if (reversed) return Orientation::reversed;
  return std::nullopt;
}

std::vector<Bracket> mutual_brackets(const CircularOrder& alpha, const CircularOrder& beta) {
  if (alpha.size() != beta.size()) throw std::invalid_argument("circular orders have different n");
  std::vector<Bracket> out;
  for (const Bracket& b : all_brackets(cyclic_normalize(alpha)))
    if (is_cyclic_interval(beta, b.labels())) out.push_back(b);
  return out;
}

namespace {

// Nested families of exactly `size` brackets drawn from `pool`.
void families(const std::vector<Bracket>& pool, std::size_t start, std::size_t size,
              std::vector<Bracket>& chosen, std::vector<std::vector<Bracket>>& out) {
  if (chosen.size() == size) {
    out.push_back(chosen);
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    if (!std::all_of(chosen.begin(), chosen.end(), [&](const Bracket& c) { return compatible(pool[i], c); }))
      continue;
    chosen.push_back(pool[i]);
    families(pool, i + 1, size, chosen, out);
    chosen.pop_back();
  }
}

std::optional<Face> unique_hit(std::vector<Face>& hits, const CircularOrder& alpha, const CircularOrder& beta) {
  if (hits.empty()) return std::nullopt;
  if (hits.size() > 1)
    throw InternalError("K(" + alpha.to_string() + ") ∩ K(" + beta.to_string() +
                        ") has more than one maximal face");
  return std::move(hits.front());
}

}  // namespace

std::optional<Face> intersection_face(const CircularOrder& alpha, const CircularOrder& beta) {
  if (alpha.size() != beta.size()) throw std::invalid_argument("circular orders have different n");
  const CircularOrder a = cyclic_normalize(alpha);
  if (dihedral_equal(a, beta)) return Face(a);
  const std::vector<Bracket> pool = mutual_brackets(a, beta);
  for (int k = 1; k <= a.size() - 3; ++k) {
    std::vector<std::vector<Bracket>> candidates;
    std::vector<Bracket> chosen;
    families(pool, 0, static_cast<std::size_t>(k), chosen, candidates);
    std::vector<Face> hits;
    for (auto& family : candidates) {
      Face f(a, std::move(family));
      if (orbit_match(twist_orbit(f), beta)) hits.push_back(std::move(f));
    }
    if (auto hit = unique_hit(hits, a, beta)) return hit;
  }
  return std::nullopt;
}

std::optional<Face> intersection_face_oracle(const CircularOrder& alpha, const CircularOrder& beta) {
  if (alpha.size() != beta.size()) throw std::invalid_argument("circular orders have different n");
  const CircularOrder a = cyclic_normalize(alpha);
  for (int k = 0; k <= a.size() - 3; ++k) {
    std::vector<Face> hits;
    for_each_face(a, k, k, [&](const Face& f) {
      if (orbit_match(twist_orbit(f), beta)) hits.push_back(f);
    });
    if (auto hit = unique_hit(hits, a, beta)) return hit;
  }
  return std::nullopt;
}

}  // namespace m0n
