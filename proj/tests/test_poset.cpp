#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "orderforge/json_io.hpp"
#include "orderforge/poset.hpp"
#include "test_util.hpp"

using namespace orderforge;
using tf::KellyModel;

TEST_CASE("from_relations reduces a closed 3-chain") {
  auto p = Poset::from_relations({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"x", "z"}});
  REQUIRE(p.covers().size() == 2);
  CHECK(p.covers()[0] == std::pair<int, int>{0, 1});
  CHECK(p.covers()[1] == std::pair<int, int>{1, 2});
  CHECK(p.less(p.index("x"), p.index("z")));
}

TEST_CASE("from_relations singleton and errors") {
  auto p = Poset::from_relations({"a"}, {});
  CHECK(p.covers().empty());
  CHECK_THROWS_AS(Poset::from_relations({"x", "y"}, {{"x", "y"}, {"y", "x"}}), Error);
  try {
    Poset::from_relations({"x", "y"}, {{"x", "y"}, {"y", "x"}});
  } catch (const Error& e) {
    CHECK(e.kind == Err::CycleDetected);
  }
  CHECK_THROWS_AS(Poset::from_relations({"x", "x"}, {}), Error);
}

TEST_CASE("upset and downset") {
  // S_2 directly
  auto s2 = Poset::from_relations({"a1", "a2", "b1", "b2"}, {{"a1", "b2"}, {"a2", "b1"}});
  Bits s(s2.n());
  s.set(s2.index("a1"));
  CHECK(tf::name_set(s2, s2.upset(s)) == std::set<std::string>{"a1", "b2"});

  auto c3 = Poset::from_relations({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
  Bits t(c3.n());
  t.set(c3.index("y"));
  CHECK(tf::name_set(c3, c3.downset(t)) == std::set<std::string>{"x", "y"});

  // K_5 oracle: enumerate subset containments {2} ⊆ s
  KellyModel k5(5);
  auto p = k5.poset();
  int a2 = -1;
  for (int i = 0; i < k5.count(); ++i)
    if (k5.names[i] == "a2") a2 = i;
  std::set<std::string> expect;
  for (int i = 0; i < k5.count(); ++i)
    if (i == a2 || k5.less(a2, i)) expect.insert(k5.names[i]);
  Bits q(p.n());
  q.set(p.index("a2"));
  CHECK(tf::name_set(p, p.upset(q)) == expect);
  // frozen from the oracle (c4 coincides with b5 in the subset model)
  CHECK(expect == std::set<std::string>{"a2", "c2", "c3", "b5", "b1", "b3", "b4"});
}

TEST_CASE("mins and maxs") {
  auto ac = tf::antichain(2);
  CHECK(ac.minimals().count() == 2);
  CHECK(ac.maximals().count() == 2);
  auto c3 = tf::chain(3);
  CHECK(tf::name_set(c3, c3.minimals()) == std::set<std::string>{"v0"});
  CHECK(tf::name_set(c3, c3.maximals()) == std::set<std::string>{"v2"});

  KellyModel k5(5);
  auto p = k5.poset();
  std::set<std::string> mins, maxs;
  for (int i = 0; i < k5.count(); ++i) {
    bool has_lo = false, has_hi = false;
    for (int j = 0; j < k5.count(); ++j) {
      if (k5.less(j, i)) has_lo = true;
      if (k5.less(i, j)) has_hi = true;
    }
    if (!has_lo) mins.insert(k5.names[i]);
    if (!has_hi) maxs.insert(k5.names[i]);
  }
  CHECK(tf::name_set(p, p.minimals()) == mins);
  CHECK(tf::name_set(p, p.maximals()) == maxs);
  CHECK(mins == std::set<std::string>{"a1", "a2", "a3", "a4", "a5"});
  CHECK(maxs == std::set<std::string>{"b1", "b2", "b3", "b4", "b5"});
}

TEST_CASE("height") {
  CHECK(tf::antichain(3).height() == 1);
  CHECK(tf::chain(4).height() == 4);
  KellyModel k5(5);
  CHECK(k5.poset().height() == 4);  // {1} ⊂ {1,2} ⊂ {1,2,3} ⊂ {1,2,3,4}
  CHECK_THROWS_AS(Poset::from_relations({}, {}).height(), Error);
}

TEST_CASE("is_convex") {
  auto c3 = Poset::from_relations({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
  CHECK_FALSE(c3.is_convex(tf::bits_of(c3, {"x", "z"})));
  CHECK(c3.is_convex(tf::bits_of(c3, {"x", "y"})));

  KellyModel k5(5);
  auto p = k5.poset();
  Bits q = p.upset(tf::bits_of(p, {"a1"}));
  q &= p.downset(tf::bits_of(p, {"b5"}));
  // oracle: exhaustive triple check
  bool convex = true;
  for (int x = 0; x < p.n(); ++x)
    for (int y = 0; y < p.n(); ++y)
      for (int z = 0; z < p.n(); ++z)
        if (q.test(x) && q.test(z) && !q.test(y) && p.less(x, y) && p.less(y, z)) convex = false;
  CHECK(convex);
  CHECK(p.is_convex(q));
}

TEST_CASE("witnessing paths") {
  auto c3 = Poset::from_relations({"x", "y", "z"}, {{"x", "z"}, {"x", "y"}, {"y", "z"}});
  auto path = c3.witnessing_path(c3.index("x"), c3.index("z"));
  REQUIRE(path.size() == 3);
  CHECK(c3.id(path[0]) == "x");
  CHECK(c3.id(path[1]) == "y");
  CHECK(c3.id(path[2]) == "z");
  CHECK(c3.witnessing_path(0, 0) == std::vector<int>{0});
  CHECK_THROWS_AS(tf::antichain(2).witnessing_path(0, 1), Error);

  KellyModel k5(5);
  auto p = k5.poset();
  auto w = p.witnessing_path(p.index("a1"), p.index("b5"));
  std::vector<std::string> names;
  for (int v : w) names.push_back(p.id(v));
  CHECK(names == std::vector<std::string>{"a1", "c2", "c3", "b5"});

  // a path never exceeds height-1 edges and walks covers
  CHECK((int)w.size() - 1 <= p.height() - 1);
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    bool is_cover = false;
    for (int u : p.cover_up()[w[i]])
      if (u == w[i + 1]) is_cover = true;
    CHECK(is_cover);
  }
}

TEST_CASE("linear extensions and concatenation") {
  LinearExtension l1{{"x"}}, l2{{"y"}};
  CHECK(concat_extensions({l1, l2}).order == std::vector<std::string>{"x", "y"});
  LinearExtension l3{{"a", "b"}}, l4{{"c"}}, l5{{"d", "e"}};
  CHECK(concat_extensions({l3, l4, l5}).order == std::vector<std::string>{"a", "b", "c", "d", "e"});
  CHECK_THROWS_AS(concat_extensions({l1, l1}), Error);

  auto c2 = tf::chain(2);
  CHECK(LinearExtension{{"v0", "v1"}}.extends(c2));
  CHECK_FALSE(LinearExtension{{"v1", "v0"}}.extends(c2));

  // concatenating per-component extensions extends the whole poset
  auto p = Poset::from_relations({"x", "y", "u", "v"}, {{"x", "y"}, {"u", "v"}});
  auto comps = p.poset_components();
  std::vector<LinearExtension> ls;
  for (auto& c : comps) {
    LinearExtension l;
    c.for_each([&](int e) { l.order.push_back(p.id(e)); });
    ls.push_back(l);
  }
  CHECK(concat_extensions(ls).extends(p));
}

TEST_CASE("cover graph shapes") {
  auto s2 = Poset::from_relations({"a1", "a2", "b1", "b2"}, {{"a1", "b2"}, {"a2", "b1"}});
  // S_2 has the four cross covers? only two here: S_2 proper needs i != j pairs
  auto s2p = Poset::from_relations({"a1", "a2", "b1", "b2"},
                                   {{"a1", "b2"}, {"a2", "b1"}});
  (void)s2p;
  // the standard example S_2: a_i < b_j iff i != j
  auto se2 = Poset::from_relations({"a1", "a2", "b1", "b2"}, {{"a1", "b2"}, {"a2", "b1"}});
  Graph g = se2.cover_graph();
  CHECK(g.m() == 2);

  auto cg = tf::chain(4).cover_graph();
  CHECK(cg.m() == 3);
  for (int v = 0; v < cg.n(); ++v) CHECK(cg.degree(v) <= 2);

  KellyModel k5(5);
  Graph kg = k5.poset().cover_graph();
  CHECK(kg.n() == 14);
  CHECK(kg.m() == 18);
}

TEST_CASE("cover relation is the transitive reduction, exhaustively") {
  KellyModel k4(4);
  for (const Poset& p : {tf::chain(5), k4.poset(), tf::antichain(4)}) {
    for (int x = 0; x < p.n(); ++x)
      for (int y = 0; y < p.n(); ++y) {
        bool is_cover = false;
        for (int u : p.cover_up()[x])
          if (u == y) is_cover = true;
        bool expect = p.less(x, y);
        if (expect)
          for (int z = 0; z < p.n(); ++z)
            if (p.less(x, z) && p.less(z, y)) expect = false;
        CHECK(is_cover == expect);
      }
    // closure of covers equals lt
    std::vector<Bits> reach(p.n(), Bits(p.n()));
    for (int x = 0; x < p.n(); ++x)
      for (int u : p.cover_up()[x]) reach[x].set(u);
    for (int k = 0; k < p.n(); ++k)
      for (int i = 0; i < p.n(); ++i)
        if (reach[i].test(k)) reach[i] |= reach[k];
    for (int x = 0; x < p.n(); ++x)
      for (int y = 0; y < p.n(); ++y) CHECK(reach[x].test(y) == p.less(x, y));
  }
}

TEST_CASE("induced subposet keeps order and ids") {
  KellyModel k4(4);
  auto p = k4.poset();
  Bits keep = tf::bits_of(p, {"a1", "a2", "b1", "b2"});
  auto q = p.induced(keep);
  CHECK(q.n() == 4);
  CHECK(q.less(q.index("a1"), q.index("b2")));
  CHECK(q.incomp(q.index("a1"), q.index("b1")));
}

TEST_CASE("poset json round trip") {
  KellyModel k4(4);
  auto p = k4.poset();
  auto j = poset_to_json(p);
  auto q = poset_from_json(json::parse(j.dump()));
  CHECK(q.n() == p.n());
  for (int x = 0; x < p.n(); ++x)
    for (int y = 0; y < p.n(); ++y) CHECK(p.less(x, y) == q.less(q.index(p.id(x)), q.index(p.id(y))));
}
