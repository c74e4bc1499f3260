#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "m0n/associahedron.hpp"
#include "m0n/circular_order.hpp"
#include "m0n/intersect.hpp"

namespace m0n {

using Json = nlohmann::ordered_json;

/// Compact JSON with every floating-point value printed to 17 significant
/// digits (nlohmann's own dump uses shortest round-trip form).
std::string dump(const Json& j);

Json to_json(const CircularOrder& order);  // array of labels
Json to_json(LabelSet s);                  // ascending array
Json to_json(const Face& f);               // {"word": [...], "brackets": [[...], ...]}
Json to_json(Complex z);                   // {"re": ..., "im": ...}

/// Accepts a digit string ("134256") or a JSON array of labels.
CircularOrder order_from_json(const Json& j);
Face face_from_json(const Json& j);

/// {"alpha": "...", "beta": "...", "empty": bool, "brackets": [[...]]}
Json intersection_to_json(const CircularOrder& alpha, const CircularOrder& beta, const std::optional<Face>& f);

/// Value plus, when `factored`, the sign, power of i/2, csc arguments and
/// m factors (each with its blocks and admissible-term expansion).
Json pair_to_json(const CircularOrder& alpha, const CircularOrder& beta, const PairValue& v,
                  const Kinematics& k, bool factored);

/// {"n":..., "basis":..., "labels":[...], "entries":[[{"re":...,"im":...}, ...]]}
Json matrix_to_json(const IntersectionMatrix& m, const Kinematics& k, bool factored);
/// Header "row,col,re,im" then one line per entry.
std::string matrix_to_csv(const IntersectionMatrix& m);

/// Bracket notation in the face's word, e.g. "1((23)4)5" read on the first
/// n-1 letters with n appended.
std::string face_notation(const Face& f);

std::string to_string(Basis b);

}  // namespace m0n
