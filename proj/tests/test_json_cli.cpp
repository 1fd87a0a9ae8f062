#include <catch2/catch_amalgamated.hpp>

#include <fstream>

#include "pathpart/analysis.hpp"
#include "pathpart/json_io.hpp"

using namespace pathpart;

namespace {

json fixture(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  json j;
  in >> j;
  return j;
}

}  // namespace

TEST_CASE("group JSON") {
  CHECK(group_from_json(json("Z4")).order() == 4);
  CHECK(group_from_json(json("S3")).order() == 6);
  FinGroup v4 = make_builtin("V4");
  FinGroup back = group_from_json(group_to_json(v4));
  CHECK(back == v4);
  CHECK_THROWS_AS(group_from_json(json("nope")), std::invalid_argument);
  CHECK_THROWS_AS(group_from_json(json::object()), std::invalid_argument);
  // Invalid table content.
  json badj;
  badj["table"] = {{0, 1}, {1, 1}};
  CHECK_THROWS_AS(group_from_json(badj), std::invalid_argument);
}

TEST_CASE("graph JSON") {
  json explicit_form;
  explicit_form["vertices"] = {"a", "b", "c"};
  explicit_form["edges"] = json::array(
      {json::array({"a", "b"}), json::array({"b", "c"})});
  NamedGraph g1 = graph_from_json(explicit_form);
  REQUIRE(g1.graph.num_vertices() == 3);
  CHECK(g1.labels == std::vector<std::string>{"a", "b", "c"});
  CHECK(g1.graph.adjacent(g1.vertex("a"), g1.vertex("b")));
  CHECK_FALSE(g1.graph.adjacent(g1.vertex("a"), g1.vertex("c")));

  json adj_form = {{"adj", {{"a", {"b"}}, {"b", {"a", "c"}}, {"c", {"b"}}}}};
  NamedGraph g2 = graph_from_json(adj_form);
  CHECK(g2.graph == g1.graph);
  CHECK(g2.labels == g1.labels);

  // Round trip.
  NamedGraph g3 = graph_from_json(graph_to_json(g1.graph, g1.labels));
  CHECK(g3.graph == g1.graph);

  json bad_edge;
  bad_edge["vertices"] = {"a"};
  bad_edge["edges"] = json::array({json::array({"a", "z"})});
  CHECK_THROWS_AS(graph_from_json(bad_edge), std::invalid_argument);
  json self_loop;
  self_loop["vertices"] = {"a"};
  self_loop["edges"] = json::array({json::array({"a", "a"})});
  CHECK_THROWS_AS(graph_from_json(self_loop), std::invalid_argument);
}

TEST_CASE("decorated graph fixture") {
  DecGraph dg = decgraph_from_json(fixture("k2_z2z3.json"));
  REQUIRE(dg.graph.num_vertices() == 2);
  CHECK(dg.at(dg.vertex_by_label("a")).order() == 2);
  CHECK(dg.at(dg.vertex_by_label("b")).order() == 3);

  json missing = fixture("k2_z2z3.json");
  missing["decorations"].erase("b");
  CHECK_THROWS_AS(decgraph_from_json(missing), std::invalid_argument);
}

TEST_CASE("diagram fixture builds the expected colimit") {
  GroupDiagram d = diagram_from_json(fixture("d8_colimit.json"));
  REQUIRE(d.nodes.size() == 3);
  CHECK(groups_isomorphic(d.nodes[0], make_builtin("V4")));
  CHECK(groups_isomorphic(d.nodes[1], make_builtin("V4")));
  CHECK(d.nodes[2].order() == 2);
  auto c = colimit_of_groups(d);
  CHECK(c->num_classes() == 6);
}

TEST_CASE("handle specs") {
  auto grp = handle_from_json({{"type", "group"}, {"group", "Z3"}});
  CHECK(grp->enum_elems(1).size() == 3);

  auto fr = handle_from_json({{"type", "free-on-one"}});
  CHECK(fr->enum_elems(1).size() == 3);

  std::shared_ptr<MGHandle> mg;
  auto path = handle_from_json(fixture("path_p3.json"), &mg);
  REQUIRE(mg != nullptr);
  CHECK(mg->decgraph().graph.num_vertices() == 3);
  CHECK(mg->decgraph().at(0).order() == 2);

  auto dec = handle_from_json(fixture("k3_mixed.json"), &mg);
  CHECK(mg->decgraph().graph.num_edges() == 3);

  CHECK_THROWS_AS(handle_from_json({{"type", "mystery"}}),
                  std::invalid_argument);
}

TEST_CASE("corrupted handle breaks exactly one product") {
  auto h = handle_from_json(fixture("corrupted.json"));
  FinGroup s3 = make_builtin("S3");
  int straight = s3.mul(1, 2);
  Elem broken = h->product({Elem{1LL}, Elem{2LL}});
  CHECK(std::get<long long>(broken) == (straight + 1) % 6);
  CHECK(std::get<long long>(h->product({Elem{2LL}, Elem{1LL}})) ==
        s3.mul(2, 1));
  AxiomReport rep = check_axioms(*h, 5, 3);
  CHECK_FALSE(rep.p2.pass);
}

TEST_CASE("recovery pipeline through fixtures") {
  DecGraph dg = decgraph_from_json(fixture("k3_mixed.json"));
  CHECK(recover_check(dg).has_value());
}
