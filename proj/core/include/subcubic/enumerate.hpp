#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "subcubic/graph.hpp"

namespace subcubic {

enum class GraphClass { Any, Tree, Unicyclic, Bicyclic, Cyclomatic, Cyclic, QuadrangleFree };

class EnumError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Which connected graphs to enumerate. Class membership is by the
/// cyclomatic number m - n + 1 (Cyclic means >= 1).
struct EnumSpec {
  int n = 1;
  int max_degree = 3;
  GraphClass graph_class = GraphClass::Any;
  int cyclomatic = 0;         // used by GraphClass::Cyclomatic
  std::optional<int> edges;   // optional exact edge count
  bool connected = true;      // only connected enumeration is supported

  friend bool operator==(const EnumSpec&, const EnumSpec&) = default;
};

/// "any", "tree", "unicyclic", "bicyclic", "cyclic", "quadrangle_free",
/// "cyclomatic(k)" (also "cyclomatic:k").
void parse_graph_class(std::string_view text, EnumSpec& spec);
std::string class_name(const EnumSpec& spec);

/// Throws EnumError when no graph can satisfy the spec or it exceeds the
/// supported ceilings.
void validate(const EnumSpec& spec, bool tree_generator = false);

/// Membership test used for generator soundness checks.
bool matches(const EnumSpec& spec, const Graph& g);

nlohmann::json to_json(const EnumSpec& spec);
EnumSpec enum_spec_from_json(const nlohmann::json& j);

enum class Generator { Augmentation, Tree };

/// Tree specs default to the dedicated free-tree generator.
Generator default_generator(const EnumSpec& spec);

/// One disjoint slice of the generation tree. Augmentation units own the
/// order-`prefix_depth` graphs whose sorted index is congruent to `index`
/// modulo `parts`; tree units own the free trees with that property in
/// generation order.
struct WorkUnit {
  EnumSpec spec;
  Generator generator = Generator::Augmentation;
  int parts = 1;
  int index = 0;
  int prefix_depth = 1;

  std::string id() const;
  friend bool operator==(const WorkUnit&, const WorkUnit&) = default;
};

nlohmann::json to_json(const WorkUnit& unit);
WorkUnit work_unit_from_json(const nlohmann::json& j);

/// Callback receiving each graph once. Under parallel enumeration it may be
/// invoked concurrently from different units.
using Consumer = std::function<void(const Graph&)>;

int prefix_depth_for(const EnumSpec& spec);

std::vector<WorkUnit> split_work(const EnumSpec& spec, int parts);
std::vector<WorkUnit> split_work(const EnumSpec& spec, int parts, Generator generator);

/// Runs one unit. Augmentation units emit canonically labelled graphs
/// sorted by canonical form; tree units emit in generation order.
std::size_t run_unit(const WorkUnit& unit, const Consumer& consume);

/// Orderly generation by canonical augmentation (single unit).
std::size_t enum_connected(const EnumSpec& spec, const Consumer& consume);

/// Free trees of order n with maximum degree <= max_degree, one per
/// isomorphism class, from a centroid-rooted generator.
std::size_t enum_trees(int n, int max_degree, const Consumer& consume);

/// Runs every unit of split_work on `threads` threads.
std::size_t enumerate_parallel(const EnumSpec& spec, const Consumer& consume, int threads, int parts,
                               Generator generator);

/// Seen-set generator: all augmentations, deduplicated by canonical form
/// in a global set. Limited to n <= 9; exists as an oracle for testing.
std::vector<Graph> enumerate_by_seen_set(const EnumSpec& spec);

}  // namespace subcubic
