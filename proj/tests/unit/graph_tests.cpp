#include "doctest.h"

#include "seidel/errors.hpp"
#include "seidel/graph.hpp"
#include "seidel/treegen.hpp"

#include <algorithm>
#include <set>

using namespace seidel;

TEST_CASE("from_edge_list basics") {
  Graph g = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(g.order() == 4);
  CHECK(g.size() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(0) == 1);

  Graph empty = Graph::from_edge_list(3, {});
  CHECK(empty.order() == 3);
  CHECK(empty.size() == 0);

  Graph single = Graph::from_edge_list(1, {});
  CHECK(single.order() == 1);
}

TEST_CASE("from_edge_list rejects bad input") {
  CHECK_THROWS_AS(Graph::from_edge_list(2, {{0, 2}}), InvalidVertex);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{-1, 0}}), InvalidVertex);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), SelfLoop);
  CHECK_THROWS_AS(Graph::from_edge_list(-1, {}), InvalidVertex);
}

TEST_CASE("duplicate and reversed edges collapse") {
  Graph g = Graph::from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(g.size() == 1);
  CHECK(g.has_edge(0, 1));
}

TEST_CASE("edges come back sorted and normalized") {
  Graph g = Graph::from_edge_list(4, {{3, 2}, {1, 0}, {2, 0}});
  auto es = g.edges();
  REQUIRE(es.size() == 3);
  CHECK(es[0] == Edge{0, 1});
  CHECK(es[1] == Edge{0, 2});
  CHECK(es[2] == Edge{2, 3});
  for (const Edge& e : es) CHECK(e.u < e.v);
}

TEST_CASE("neighbors are sorted") {
  Graph g = Graph::from_edge_list(5, {{2, 4}, {2, 0}, {2, 3}, {2, 1}});
  auto nb = g.neighbors(2);
  CHECK(std::is_sorted(nb.begin(), nb.end()));
  CHECK(nb.size() == 4);
  CHECK_THROWS_AS(g.neighbors(5), InvalidVertex);
  CHECK_THROWS_AS(g.degree(-1), InvalidVertex);
}

TEST_CASE("complement involution and edge count split") {
  for (int n = 1; n <= 6; ++n) {
    Graph p = make_family(TreeFamily::path(n));
    Graph pc = complement(p);
    CHECK(complement(pc) == p);
    CHECK(p.size() + pc.size() == n * (n - 1) / 2);
  }
  Graph k4 = make_family(TreeFamily::complete(4));
  CHECK(complement(k4).size() == 0);
}

TEST_CASE("is_tree") {
  CHECK(is_tree(make_family(TreeFamily::path(1))));
  CHECK(is_tree(make_family(TreeFamily::path(7))));
  CHECK(is_tree(make_family(TreeFamily::star(5))));
  CHECK(!is_tree(make_family(TreeFamily::cycle(4))));
  // right edge count but disconnected
  Graph bad = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(!is_tree(bad));
  CHECK(!is_tree(Graph::from_edge_list(3, {})));
}

TEST_CASE("distance") {
  Graph p5 = make_family(TreeFamily::path(5));
  CHECK(distance(p5, 0, 4) == 4);
  CHECK(distance(p5, 2, 2) == 0);
  CHECK(distance(p5, 1, 2) == 1);
  Graph two = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  CHECK(!distance(two, 0, 3).has_value());
  CHECK_THROWS_AS(distance(p5, 0, 9), InvalidVertex);
}

TEST_CASE("max_leaf_concentration on named trees") {
  for (int n = 2; n <= 8; ++n) {
    CHECK(max_leaf_concentration(make_family(TreeFamily::path(n))) == (n <= 3 ? n - 1 : 1));
    if (n >= 3) CHECK(max_leaf_concentration(make_family(TreeFamily::star(n))) == n - 1);
  }
  CHECK(max_leaf_concentration(make_family(TreeFamily::type1(3, 2))) == 3);
  CHECK(max_leaf_concentration(make_family(TreeFamily::type2(2, 1))) == 2);
  CHECK(max_leaf_concentration(make_family(TreeFamily::path(2))) == 1);
}

TEST_CASE("max_leaf_concentration error order") {
  CHECK_THROWS_AS(max_leaf_concentration(Graph::from_edge_list(1, {})), TooSmall);
  CHECK_THROWS_AS(max_leaf_concentration(make_family(TreeFamily::cycle(4))), NotATree);
}

TEST_CASE("max_leaf_concentration bracket on all small trees") {
  // every tree with n >= 2 satisfies 1 <= D <= max degree
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& t : free_trees(n)) {
      int d = max_leaf_concentration(t);
      CHECK(d >= 1);
      CHECK(d <= t.max_degree());
    }
  }
}

TEST_CASE("family constructors") {
  Graph p4 = make_family(TreeFamily::path(4));
  CHECK(p4.size() == 3);
  CHECK(p4.has_edge(0, 1));
  CHECK(p4.has_edge(2, 3));

  Graph s5 = make_family(TreeFamily::star(5));
  CHECK(s5.degree(0) == 4);
  CHECK(s5.size() == 4);

  Graph c5 = make_family(TreeFamily::cycle(5));
  CHECK(c5.size() == 5);
  for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

  Graph k5 = make_family(TreeFamily::complete(5));
  CHECK(k5.size() == 10);

  Graph t1 = make_family(TreeFamily::type1(3, 2));
  CHECK(t1.order() == 7);
  CHECK(t1.has_edge(0, 1));
  CHECK(t1.degree(0) == 4);
  CHECK(t1.degree(1) == 3);
  CHECK(is_tree(t1));

  Graph t2 = make_family(TreeFamily::type2(2, 1));
  CHECK(t2.order() == 7);
  CHECK(t2.has_edge(0, 1));
  CHECK(t2.has_edge(1, 2));
  CHECK(t2.has_edge(2, 3));
  CHECK(t2.degree(1) == 2);
  CHECK(t2.degree(2) == 2);
  CHECK(is_tree(t2));
}

TEST_CASE("family parameter validation") {
  CHECK_THROWS_AS(make_family(TreeFamily::path(0)), InvalidFamilyParams);
  CHECK_THROWS_AS(make_family(TreeFamily::cycle(2)), InvalidFamilyParams);
  CHECK_THROWS_AS(make_family(TreeFamily::type1(2, 3)), InvalidFamilyParams);
  CHECK_THROWS_AS(make_family(TreeFamily::type1(0, 0)), InvalidFamilyParams);
  CHECK_THROWS_AS(make_family(TreeFamily::type2(0, 0)), InvalidFamilyParams);
  CHECK_THROWS_AS(make_family(TreeFamily::type2(1, 2)), InvalidFamilyParams);
  CHECK_NOTHROW(make_family(TreeFamily::type2(1, 0)));
}

TEST_CASE("small family coincidences") {
  // the smallest members coincide with short paths
  Graph t1 = make_family(TreeFamily::type1(1, 1));
  CHECK(t1.order() == 4);
  CHECK(is_tree(t1));
  CHECK(t1.max_degree() == 2);  // a path

  Graph t2 = make_family(TreeFamily::type2(1, 0));
  CHECK(t2.order() == 5);
  CHECK(t2.max_degree() == 2);

  Graph t3 = make_family(TreeFamily::type2(1, 1));
  CHECK(t3.order() == 6);
  CHECK(t3.max_degree() == 2);
}

TEST_CASE("graph equality") {
  Graph a = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
  Graph b = Graph::from_edge_list(3, {{1, 2}, {0, 1}});
  Graph c = Graph::from_edge_list(3, {{0, 1}});
  CHECK(a == b);
  CHECK(a != c);
  CHECK(a != Graph::from_edge_list(4, {{0, 1}, {1, 2}}));
}
