#pragma once

#include <optional>
#include <vector>

#include "m0n/associahedron.hpp"
#include "m0n/circular_order.hpp"

namespace m0n {

/// Twist along the internal edge of `a`: the block of a's letters in the
/// word is reversed. Bracket label sets are unchanged (a reversed block is
/// still consecutive). Throws std::invalid_argument if a is not in f.
Face twist(const Face& f, const Bracket& a);

/// All faces glued to `seed` in M_{0,n}-bar(R) through sequences of twists.
struct TwistOrbit {
  Face seed;
  std::vector<Face> members;  // sorted, seed included
};

TwistOrbit twist_orbit(const Face& f);

enum class Orientation { same, reversed };

/// Whether some member's word is a rotation of `beta` (same) or of its
/// reversal (reversed). Throws InternalError if both happen.
std::optional<Orientation> orbit_match(const TwistOrbit& orbit, const CircularOrder& beta);

/// Brackets of K(alpha) whose label sets are also cyclic intervals of beta.
std::vector<Bracket> mutual_brackets(const CircularOrder& alpha, const CircularOrder& beta);

/// The face K(alpha) ∩ K(beta) read in the alpha chart, or nullopt when the
/// cells do not meet. Searches nested families of mutual brackets by
/// increasing codimension and confirms each hit through its twist orbit.
std::optional<Face> intersection_face(const CircularOrder& alpha, const CircularOrder& beta);

/// Definition-level brute force over every face of K(alpha).
std::optional<Face> intersection_face_oracle(const CircularOrder& alpha, const CircularOrder& beta);

}  // namespace m0n
