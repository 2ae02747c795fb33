#include <gtest/gtest.h>

#include <algorithm>
#include <mutex>
#include <set>

#include "oracles.hpp"
#include "subcubic/canonical.hpp"
#include "subcubic/enumerate.hpp"
#include "subcubic/graph6.hpp"

using namespace subcubic;

namespace {

EnumSpec spec_of(int n, const std::string& cls = "any", int max_degree = 3) {
  EnumSpec s;
  s.n = n;
  s.max_degree = max_degree;
  parse_graph_class(cls, s);
  return s;
}

std::vector<std::string> collect(const EnumSpec& s, int threads = 1, int parts = 1,
                                 Generator gen = Generator::Augmentation) {
  std::vector<std::string> out;
  std::mutex mu;
  enumerate_parallel(
      s,
      [&](const Graph& g) {
        std::lock_guard lock(mu);
        out.push_back(to_graph6(g));
      },
      threads, parts, gen);
  return out;
}

std::set<CanonicalForm> forms_of(const EnumSpec& s, Generator gen = Generator::Augmentation) {
  std::set<CanonicalForm> forms;
  std::size_t count = 0;
  enumerate_parallel(
      s,
      [&](const Graph& g) {
        ++count;
        EXPECT_TRUE(matches(s, g));
        forms.insert(canonical_form(g));
      },
      1, 1, gen);
  EXPECT_EQ(forms.size(), count) << "duplicate isomorphism class";
  return forms;
}

}  // namespace

TEST(Enumerate, ConnectedSubcubicCounts) {
  const std::size_t expected[] = {1, 1, 2, 6, 10, 29, 64, 194, 531, 1733};
  for (int n = 1; n <= 10; ++n)
    EXPECT_EQ(enum_connected(spec_of(n), [](const Graph&) {}), expected[n - 1]) << n;
}

TEST(Enumerate, TreeCounts) {
  // Free trees with max degree <= 3.
  const std::size_t expected[] = {1, 1, 1, 2, 2, 4, 6, 11, 18, 37, 66, 135, 265, 552, 1132, 2410};
  for (int n = 1; n <= 16; ++n) EXPECT_EQ(enum_trees(n, 3, [](const Graph&) {}), expected[n - 1]) << n;
  // All free trees.
  EXPECT_EQ(enum_trees(10, 9, [](const Graph&) {}), 106u);
  EXPECT_EQ(enum_trees(5, 1, [](const Graph&) {}), 0u);
}

TEST(Enumerate, TreeGeneratorMatchesAugmentation) {
  for (int n = 1; n <= 12; ++n) {
    const EnumSpec s = spec_of(n, "tree");
    EXPECT_EQ(forms_of(s, Generator::Tree), forms_of(s, Generator::Augmentation)) << n;
  }
}

TEST(Enumerate, MatchesSeenSetOracle) {
  for (const char* cls : {"any", "tree", "unicyclic", "bicyclic", "quadrangle_free"}) {
    for (int n = 1; n <= 8; ++n) {
      const EnumSpec s = spec_of(n, cls);
      try {
        validate(s);
      } catch (const EnumError&) {
        continue;
      }
      std::set<CanonicalForm> oracle_forms;
      for (const Graph& g : enumerate_by_seen_set(s)) oracle_forms.insert(canonical_form(g));
      EXPECT_EQ(forms_of(s), oracle_forms) << cls << " n=" << n;
    }
  }
}

TEST(Enumerate, MatchesBruteForceClasses) {
  for (int n = 1; n <= 6; ++n) {
    for (int cap : {2, 3, 4}) {
      const EnumSpec s = spec_of(n, "any", cap);
      std::set<CanonicalForm> brute;
      for (const Graph& g : oracle::classes_by_brute_force(n, [&](const Graph& g) {
             return is_connected(g) && max_degree(g) <= cap;
           }))
        brute.insert(canonical_form(g));
      EXPECT_EQ(forms_of(s), brute) << n << " cap " << cap;
    }
  }
}

TEST(Enumerate, EdgeCountFilter) {
  EnumSpec s = spec_of(6);
  std::size_t total = 0;
  for (int m = 5; m <= 9; ++m) {
    s.edges = m;
    std::size_t c = enum_connected(s, [&](const Graph& g) { EXPECT_EQ(g.size(), m); });
    total += c;
  }
  EXPECT_EQ(total, 29u);
}

TEST(Enumerate, ParallelIsDeterministic) {
  const EnumSpec s = spec_of(9);
  const auto one = collect(s, 1, 1);
  auto sorted_one = one;
  std::sort(sorted_one.begin(), sorted_one.end());
  for (int parts : {2, 5, 8}) {
    for (int threads : {1, 4}) {
      auto many = collect(s, threads, parts);
      std::sort(many.begin(), many.end());
      EXPECT_EQ(many, sorted_one) << parts << "/" << threads;
    }
  }
  EXPECT_EQ(collect(s, 1, 1), one);
}

TEST(Enumerate, UnitsAreDisjointAndStable) {
  const EnumSpec s = spec_of(10);
  std::set<CanonicalForm> all;
  std::size_t count = 0;
  for (const WorkUnit& u : split_work(s, 6)) {
    std::vector<std::string> a, b;
    run_unit(u, [&](const Graph& g) {
      a.push_back(to_graph6(g));
      all.insert(canonical_form(g));
      ++count;
    });
    run_unit(u, [&](const Graph& g) { b.push_back(to_graph6(g)); });
    EXPECT_EQ(a, b);
    EXPECT_EQ(work_unit_from_json(to_json(u)), u);
  }
  EXPECT_EQ(all.size(), count);
  EXPECT_EQ(count, 1733u);

  std::size_t trees = 0;
  for (const WorkUnit& u : split_work(spec_of(14, "tree"), 4)) trees += run_unit(u, [](const Graph&) {});
  EXPECT_EQ(trees, 552u);
}

TEST(Enumerate, ValidateRejects) {
  EXPECT_THROW(validate(spec_of(25)), EnumError);
  EXPECT_NO_THROW(validate(spec_of(30, "tree"), true));
  EXPECT_THROW(validate(spec_of(65, "tree"), true), EnumError);
  EXPECT_THROW(validate(spec_of(0)), EnumError);
  EXPECT_THROW(validate(spec_of(3, "any", 1)), EnumError);
  EXPECT_THROW(validate(spec_of(2, "unicyclic")), EnumError);
  EXPECT_THROW(validate(spec_of(6, "any"), true), EnumError);
  EnumSpec s = spec_of(5);
  s.edges = 11;
  EXPECT_THROW(validate(s), EnumError);
  EnumSpec d = spec_of(5);
  d.connected = false;
  EXPECT_THROW(validate(d), EnumError);
  EnumSpec bad;
  EXPECT_THROW(parse_graph_class("planar", bad), EnumError);
}

TEST(Enumerate, ClassNamesRoundTrip) {
  for (const char* cls : {"any", "tree", "unicyclic", "bicyclic", "cyclic", "quadrangle_free", "cyclomatic(3)"}) {
    const EnumSpec s = spec_of(8, cls);
    EnumSpec back;
    parse_graph_class(class_name(s), back);
    EXPECT_EQ(back.graph_class, s.graph_class);
    EXPECT_EQ(back.cyclomatic, s.cyclomatic);
    EXPECT_EQ(enum_spec_from_json(to_json(s)), s);
  }
  EnumSpec e = spec_of(7);
  e.edges = 8;
  EXPECT_EQ(enum_spec_from_json(to_json(e)), e);
}

TEST(Enumerate, CyclomaticClassesPartitionAny) {
  const int n = 9;
  std::size_t sum = 0;
  for (int c = 0; c <= 5; ++c) sum += enum_connected(spec_of(n, "cyclomatic(" + std::to_string(c) + ")"), [](const Graph&) {});
  EXPECT_EQ(sum, 531u);
  EXPECT_EQ(enum_connected(spec_of(n, "cyclic"), [](const Graph&) {}) + enum_trees(n, 3, [](const Graph&) {}), 531u);
}
