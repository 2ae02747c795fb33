#include <gtest/gtest.h>

#include "subcubic/catalog.hpp"
#include "subcubic/certificate.hpp"
#include "subcubic/enumerate.hpp"
#include "subcubic/graph6.hpp"
#include "subcubic/random_graph.hpp"

using namespace subcubic;

namespace {

// Two triangles joined by one edge: a bridge splits it into parts with E > n.
Graph two_triangles() {
  return Graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

}  // namespace

TEST(Certificate, ExceptionsAreNotApplicable) {
  for (const auto& name : equality_graphs()) EXPECT_THROW(build_certificate(named(name)), NotApplicableError);
  for (const auto& name : hypoenergetic_graphs()) EXPECT_THROW(build_certificate(named(name)), NotApplicableError);
  EXPECT_TRUE(is_equality_graph(named("k33")));
  EXPECT_TRUE(is_hypoenergetic_exception(named("w")));
  EXPECT_FALSE(is_equality_graph(named("p5")));
}

TEST(Certificate, PathUsesBridges) {
  const Graph p8 = named("p8");
  const Certificate c = build_certificate(p8);
  EXPECT_NE(c.root.kind, CertNode::Kind::BaseFact);
  EXPECT_GT(c.node_count(), 1u);
  EXPECT_TRUE(check_certificate(p8, c));
}

TEST(Certificate, CycleIsBaseFact) {
  const Graph c5 = named("c5");
  const Certificate c = build_certificate(c5);
  EXPECT_EQ(c.root.kind, CertNode::Kind::BaseFact);
  ASSERT_TRUE(c.root.bound);
  EXPECT_GT(c.root.bound->lo, 5);
  EXPECT_TRUE(check_certificate(c5, c));
}

TEST(Certificate, JsonRoundTrip) {
  const Graph g = two_triangles();
  const Certificate c = build_certificate(g);
  const nlohmann::json j = to_json(c);
  EXPECT_EQ(j["format"], "subcubic-certificate");
  EXPECT_EQ(j["graph6"], to_graph6(g));
  EXPECT_EQ(to_json(certificate_from_json(j)), j);
  EXPECT_TRUE(check_certificate(g, j));
  EXPECT_TRUE(check_certificate(g, nlohmann::json::parse(j.dump())));
}

TEST(Certificate, FalseBoundIsRejected) {
  // K23 has E < 5; a base fact claiming E > 5 must fail.
  CertNode node;
  node.kind = CertNode::Kind::BaseFact;
  node.graph = named("k23");
  node.claim = Comparison::Greater;
  node.bound = EnergyBound{mpq_class(51, 10), mpq_class(52, 10)};
  EXPECT_FALSE(check_certificate(node.graph, Certificate{node}));

  // An equality claim for a graph that is not one of the four.
  CertNode eq;
  eq.kind = CertNode::Kind::BaseFact;
  eq.graph = named("p4");
  eq.claim = Comparison::Equal;
  eq.factorization = "(x^2-1)";
  EXPECT_FALSE(check_certificate(eq.graph, Certificate{eq}));
}

TEST(Certificate, StructuralErrors) {
  const Graph g = two_triangles();
  const Certificate good = build_certificate(g);
  EXPECT_THROW(check_certificate(named("p6"), good), CertificateFormatError);

  // K22 cut along a perfect matching is a cut but not a star.
  const Graph k22 = named("k22");
  CertNode leaf;
  leaf.kind = CertNode::Kind::BaseFact;
  leaf.graph = named("s2");
  leaf.claim = Comparison::Equal;
  leaf.factorization = "(x^2-1)";
  CertNode step;
  step.kind = CertNode::Kind::StarCutStep;
  step.graph = k22;
  step.cut = {{0, 3}, {1, 2}};
  step.children = {leaf, leaf};
  EXPECT_THROW(check_certificate(k22, Certificate{step}), CertificateFormatError);

  // Wrong number of children.
  CertNode bridge;
  bridge.kind = CertNode::Kind::StarCutStep;
  bridge.graph = g;
  bridge.cut = {{2, 3}};
  bridge.children = {};
  EXPECT_THROW(check_certificate(g, Certificate{bridge}), CertificateFormatError);

  nlohmann::json j = to_json(good);
  j["root"]["type"] = "lemma";
  EXPECT_THROW(check_certificate(g, j), CertificateFormatError);
  nlohmann::json missing = to_json(good);
  missing.erase("root");
  EXPECT_THROW(check_certificate(g, missing), CertificateFormatError);
}

TEST(Certificate, TamperedChildIsCaught) {
  const Graph g = named("p8");
  nlohmann::json j = to_json(build_certificate(g));
  ASSERT_TRUE(j["root"].contains("children"));
  j["root"]["children"][0]["graph6"] = to_graph6(named("k23"));
  EXPECT_THROW(check_certificate(g, j), CertificateFormatError);
}

TEST(Certificate, RandomSubcubicGraphs) {
  Rng rng(51);
  int built = 0;
  for (int t = 0; t < 60; ++t) {
    const Graph g = random_connected_graph(rng, 7 + t % 8, 3, t % 4);
    if (is_equality_graph(g) || is_hypoenergetic_exception(g)) continue;
    const Certificate c = build_certificate(g);
    EXPECT_TRUE(check_certificate(g, to_json(c))) << to_graph6(g);
    ++built;
  }
  EXPECT_GT(built, 50);
}

TEST(Certificate, AllOrderSevenGraphs) {
  EnumSpec s;
  s.n = 7;
  enum_connected(s, [](const Graph& g) {
    if (is_hypoenergetic_exception(g)) return;
    EXPECT_TRUE(check_certificate(g, build_certificate(g))) << to_graph6(g);
  });
}
