#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "m0n/associahedron.hpp"

using namespace m0n;
using test::face;
using test::order;

TEST_CASE("bracket normalization and validation") {
  const Bracket b(LabelSet{1, 5, 6}, 6);  // contains n, stored as complement
  CHECK(b.labels() == LabelSet({2, 3, 4}));
  CHECK_THROWS(Bracket(LabelSet{1}, 6));
  CHECK_THROWS(Bracket(LabelSet{1, 2, 3, 4, 5}, 6));
  CHECK(compatible(Bracket({2, 3}, 6), Bracket({2, 3, 4}, 6)));
  CHECK(compatible(Bracket({1, 2}, 6), Bracket({3, 4}, 6)));
  CHECK_FALSE(compatible(Bracket({2, 3}, 6), Bracket({3, 4}, 6)));
}

TEST_CASE("face validation") {
  CHECK_THROWS(face("1243", {{1, 2}}));         // word must end in n
  CHECK_THROWS(face("12345", {{1, 3}}));        // not an interval
  CHECK_THROWS(face("12345", {{2, 3}, {3, 4}}));  // crossing
  CHECK_NOTHROW(face("13245", {{1, 3}}));
}

TEST_CASE("enumerate_faces examples") {
  const auto k3 = enumerate_faces(order("1234"));
  REQUIRE(k3.size() == 3);
  CHECK(k3[0] == face("1234"));
  CHECK(std::count(k3.begin(), k3.end(), face("1234", {{1, 2}})) == 1);
  CHECK(std::count(k3.begin(), k3.end(), face("1234", {{2, 3}})) == 1);

  const auto k4 = enumerate_faces(order("12345"));
  CHECK(k4.size() == 11);
  CHECK(std::count_if(k4.begin(), k4.end(), [](const Face& f) { return f.codim() == 1; }) == 5);
  CHECK(std::count_if(k4.begin(), k4.end(), [](const Face& f) { return f.codim() == 2; }) == 5);

  CHECK(enumerate_faces(order("123456")).size() == 45);
  CHECK(enumerate_faces(order("123456"), 3, 3).size() == 14);
  CHECK(enumerate_faces(order("123")).size() == 1);
}

TEST_CASE("faces of any word are its own brackets") {
  for (const Face& f : enumerate_faces(order("315246"))) {
    CHECK(f.word() == order("315246"));
    for (const Bracket& b : f.brackets()) CHECK(is_bracket_interval(f.word(), b.labels()));
  }
  CHECK(enumerate_faces(order("315246")).size() == 45);
}

TEST_CASE("face_count") {
  CHECK(face_count(5, 1) == 5);
  CHECK(face_count(6, 3) == 14);
  CHECK(face_count(3, 0) == 1);
  CHECK(face_count(9, 6) == 429);
  for (int n = 3; n <= 9; ++n) {
    std::vector<long> counts(static_cast<std::size_t>(n - 2));
    for (const Face& f : enumerate_faces(CircularOrder::identity(n))) ++counts[static_cast<std::size_t>(f.codim())];
    BigInt euler = 0;
    for (int k = 0; k <= n - 3; ++k) {
      CHECK(face_count(n, k) == counts[static_cast<std::size_t>(k)]);
      euler += ((n - 3 - k) % 2 ? -1 : 1) * face_count(n, k);
    }
    CHECK(euler == 1);
  }
}

TEST_CASE("admissibility") {
  CHECK_FALSE(is_admissible(face("1234")));
  CHECK(is_admissible(face("1234", {{1, 2}})));
  CHECK_FALSE(is_admissible(face("123456", {{3, 4}, {2, 3, 4}})));
  CHECK(is_admissible(face("123456", {{3, 4}, {2, 3, 4}, {2, 3, 4, 5}})));
  CHECK(is_admissible(face("12345")));
}

TEST_CASE("face_to_tree") {
  // 1((23)4): three internal vertices on a path of two internal edges
  const LabeledTree t = face_to_tree(face("12345", {{2, 3}, {2, 3, 4}}));
  CHECK(t.internal_vertices().size() == 3);
  CHECK(t.internal_edges().size() == 2);
  auto val = internal_valencies(face("12345", {{2, 3}, {2, 3, 4}}));
  std::sort(val.begin(), val.end());
  CHECK(val == std::vector<int>{3, 3, 3});

  const LabeledTree star = face_to_tree(face("1234567"));
  CHECK(star.internal_vertices().size() == 1);
  CHECK(star.valency(star.internal_vertices()[0]) == 7);

  for (const Face& f : enumerate_faces(CircularOrder::identity(7), 4, 4))
    for (int v : internal_valencies(f)) CHECK(v == 3);
}

TEST_CASE("tree properties") {
  for (int n = 3; n <= 8; ++n) {
    std::set<std::vector<std::vector<int>>> seen;
    for (const Face& f : enumerate_faces(CircularOrder::identity(n))) {
      const LabeledTree t = face_to_tree(f);
      const auto val = internal_valencies(f);
      int total = 0, excess = 0;
      for (int v : val) {
        CHECK(v >= 3);
        total += v;
        excess += v - 3;
      }
      CHECK(excess == f.dim());
      CHECK(total == 2 * f.codim() + n);
      CHECK(val.size() == static_cast<std::size_t>(f.codim() + 1));
      CHECK(seen.insert(t.adjacency).second);
      std::vector<Bracket> back;
      for (auto [u, v] : t.internal_edges()) back.emplace_back(t.side(u, v), n);
      std::sort(back.begin(), back.end());
      CHECK(std::equal(back.begin(), back.end(), f.brackets().begin(), f.brackets().end()));
    }
  }
}

TEST_CASE("subfaces") {
  CHECK(subfaces(face("1234")).size() == 3);
  const auto s = subfaces(face("12345", {{2, 3}}));
  REQUIRE(s.size() == 3);
  CHECK(std::count(s.begin(), s.end(), face("12345", {{2, 3}})) == 1);
  CHECK(std::count(s.begin(), s.end(), face("12345", {{2, 3}, {1, 2, 3}})) == 1);
  CHECK(std::count(s.begin(), s.end(), face("12345", {{2, 3}, {2, 3, 4}})) == 1);

  for (const Face& f : enumerate_faces(CircularOrder::identity(7))) {
    const LabeledTree t = face_to_tree(f);
    BigInt product = 1;
    for (int v : t.internal_vertices()) product *= total_face_count(t.valency(v));
    CHECK(product == subfaces(f).size());
  }
}

TEST_CASE("vertex_blocks") {
  using Blocks = std::vector<std::vector<Label>>;
  const Face f = face("123456", {{3, 4}, {2, 3, 4}});
  const LabeledTree t = face_to_tree(f);
  std::set<Blocks> got;
  for (int v : t.internal_vertices()) got.insert(vertex_blocks(t, v));
  CHECK(got.count(Blocks{{1}, {2, 3, 4}, {5}, {6}}) == 1);
  CHECK(got.count(Blocks{{2}, {3, 4}, {5, 6, 1}}) == 1);
  CHECK(got.count(Blocks{{3}, {4}, {5, 6, 1, 2}}) == 1);

  const LabeledTree star = face_to_tree(face("12345"));
  CHECK(vertex_blocks(star, star.internal_vertices()[0]) == Blocks{{1}, {2}, {3}, {4}, {5}});
  CHECK_THROWS(vertex_blocks(star, 0));

  for (const Face& g : enumerate_faces(order("2413567"))) {
    const LabeledTree tg = face_to_tree(g);
    for (int v : tg.internal_vertices()) {
      std::vector<Label> concat;
      for (const auto& b : vertex_blocks(tg, v)) concat.insert(concat.end(), b.begin(), b.end());
      REQUIRE(concat.size() == 7);
      CHECK(rotation_equal(CircularOrder(concat), g.word()));
    }
  }
}
