#include "m0n/serialize.hpp"

#include <algorithm>
#include <stdexcept>

#include "m0n/format.hpp"

namespace m0n {

namespace {

void write(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        write(value, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        write(j[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      out += format_number(j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  write(j, out);
  return out;
}

Json to_json(const CircularOrder& order) {
  return Json(std::vector<Label>(order.labels().begin(), order.labels().end()));
}

Json to_json(LabelSet s) { return Json(s.labels()); }

Json to_json(const Face& f) {
  Json brackets = Json::array();
  for (const Bracket& b : f.brackets()) brackets.push_back(to_json(b.labels()));
  return Json{{"word", to_json(f.word())}, {"brackets", std::move(brackets)}};
}

Json to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

CircularOrder order_from_json(const Json& j) {
  if (j.is_string()) return CircularOrder::parse(j.get<std::string>());
  if (j.is_array()) return CircularOrder(j.get<std::vector<Label>>());
  throw std::invalid_argument("circular order must be a digit string or an array");
}

Face face_from_json(const Json& j) {
  CircularOrder word = order_from_json(j.at("word"));
  const int n = word.size();
  std::vector<Bracket> brackets;
  for (const auto& b : j.at("brackets")) {
    const auto labels = b.get<std::vector<Label>>();
    brackets.emplace_back(LabelSet(std::span<const Label>(labels)), n);
  }
  return Face(std::move(word), std::move(brackets));
}

Json intersection_to_json(const CircularOrder& alpha, const CircularOrder& beta, const std::optional<Face>& f) {
  Json brackets = Json::array();
  if (f)
    for (const Bracket& b : f->brackets()) brackets.push_back(to_json(b.labels()));
  return Json{{"alpha", alpha.to_string()}, {"beta", beta.to_string()}, {"empty", !f.has_value()},
              {"brackets", std::move(brackets)}};
}

namespace {

Json factored_fields(const PairValue& v, const Kinematics& k) {
  Json out;
  out["sign"] = v.sign;
  out["winding"] = v.winding;
  out["prefactor_power"] = v.prefactor_power;
  if (v.empty) {
    out["face"] = nullptr;
    out["csc"] = Json::array();
    out["m"] = Json::array();
    return out;
  }
  out["face"] = to_json(*v.face);
  Json csc = Json::array();
  for (std::size_t i = 0; i < v.csc_args.size(); ++i)
    csc.push_back(Json{{"subset", to_json(v.edge_subsets[i])}, {"arg", v.csc_args[i]}});
  out["csc"] = std::move(csc);
  Json ms = Json::array();
  for (std::size_t i = 0; i < v.m_factors.size(); ++i) {
    std::vector<LabelSet> blocks;
    Json block_json = Json::array();
    for (const auto& b : v.vertex_blocks[i]) {
      blocks.emplace_back(std::span<const Label>(b));
      block_json.push_back(b);
    }
    // margin 0: the value itself was already computed, so genericity passed
    Json terms = Json::array();
    for (const MTerm& t : m_expansion(blocks, k, 0.0)) {
      Json edges = Json::array();
      for (LabelSet e : t.edges) edges.push_back(to_json(e));
      terms.push_back(Json{{"cot", std::move(edges)}, {"weight", t.weight}, {"value", t.value}});
    }
    ms.push_back(Json{{"blocks", std::move(block_json)}, {"value", v.m_factors[i]}, {"terms", std::move(terms)}});
  }
  out["m"] = std::move(ms);
  return out;
}

}  // namespace

Json pair_to_json(const CircularOrder& alpha, const CircularOrder& beta, const PairValue& v,
                  const Kinematics& k, bool factored) {
  Json out{{"alpha", alpha.to_string()}, {"beta", beta.to_string()}, {"n", alpha.size()},
           {"empty", v.empty}, {"value", to_json(v.value)}};
  if (factored) out.update(factored_fields(v, k));
  return out;
}

std::string to_string(Basis b) { return b == Basis::all_classes ? "all_classes" : "bounded_chambers"; }

Json matrix_to_json(const IntersectionMatrix& m, const Kinematics& k, bool factored) {
  Json labels = Json::array();
  for (const auto& l : m.labels) labels.push_back(l.to_string());
  Json rows = Json::array();
  for (const auto& line : m.entries) {
    Json row = Json::array();
    for (const PairValue& v : line) {
      Json cell = to_json(v.value);
      if (factored) cell.update(factored_fields(v, k));
      row.push_back(std::move(cell));
    }
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.n}, {"basis", to_string(m.basis)}, {"labels", std::move(labels)}, {"entries", std::move(rows)}};
}

std::string matrix_to_csv(const IntersectionMatrix& m) {
  std::string out = "row,col,re,im\n";
  for (std::size_t r = 0; r < m.labels.size(); ++r)
    for (std::size_t c = 0; c < m.labels.size(); ++c) {
      const Complex z = m.entries[r][c].value;
      out += m.labels[r].to_string() + ',' + m.labels[c].to_string() + ',' + format_number(z.real()) + ',' +
             format_number(z.imag()) + '\n';
    }
  return out;
}

std::string face_notation(const Face& f) {
  const int n = f.n();
  const bool spaced = n > 9;
  std::string out;
  for (int i = 0; i < n - 1; ++i) {
    const Label l = f.word()[i];
    int opening = 0, closing = 0;
    for (const Bracket& b : f.brackets()) {
      int lo = n, hi = -1;
      for (Label x : b.labels().labels()) {
        lo = std::min(lo, f.word().position(x));
        hi = std::max(hi, f.word().position(x));
      }
      if (lo == i) ++opening;
      if (hi == i) ++closing;
    }
    if (spaced && i) out += ' ';
    out.append(static_cast<std::size_t>(opening), '(');
    out += std::to_string(l);
    out.append(static_cast<std::size_t>(closing), ')');
  }
  return out;
}

}  // namespace m0n
