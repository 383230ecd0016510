#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "logres/polynomial.hpp"
#include "logres/series.hpp"

namespace logres {

struct Chart {
  std::vector<std::string> names;
  std::vector<bool> exceptional;
  unsigned truncation_degree = 16;

  std::size_t dim() const { return names.size(); }
  std::size_t index_of(std::string_view name) const;
  std::vector<std::size_t> exceptional_indices() const;
  std::vector<std::size_t> free_indices() const;
  std::size_t exceptional_count() const;
};

// σ = (σ_1, …, σ_N) on a chart. Components are known modulo degree > precision.
struct MorphismChart {
  Chart chart;
  std::vector<Polynomial> components;
  unsigned precision = kInfinity;

  std::vector<std::string> component_strings() const;
};

// Coordinate subspace {x_i = 0 : i ∈ coordinates}, indices sorted.
struct BlowupCenter {
  std::vector<std::size_t> coordinates;
};

struct BlowupChild {
  std::size_t chart_variable;  // the coordinate playing w; new exceptional divisor is (w = 0)
  Chart chart;
  std::vector<Polynomial> substitution;  // parent variables in child coordinates
};

struct BlowupStep {
  Chart parent;
  BlowupCenter center;
  std::vector<BlowupChild> children;
};

BlowupCenter make_center(const Chart& chart, const std::vector<std::string>& names);
std::vector<std::string> center_names(const Chart& chart, const BlowupCenter& center);

BlowupStep blowup(const Chart& chart, const BlowupCenter& center);
bool is_combinatorial(const Chart& chart, const BlowupCenter& center);
// Number of non-exceptional center coordinates.
std::size_t free_codimension(const Chart& chart, const BlowupCenter& center);

MorphismChart pullback_morphism(const MorphismChart& m, const BlowupStep& step, std::size_t child);

// Moves the origin to point; exceptional flags of coordinates not vanishing there are dropped.
MorphismChart recenter(const MorphismChart& m, const std::vector<Rational>& point);

// Re-expresses m after a coordinate change given by the old coordinates as functions of
// the new ones. Result precision is min(m.precision, precision).
MorphismChart change_coordinates(const MorphismChart& m, const std::vector<Polynomial>& old_in_new,
                                 unsigned precision);

std::string substitution_to_string(const std::vector<Polynomial>& substitution, const Chart& parent,
                                   const Chart& child);

enum class NodeKind { root, blowup, coordinate_change };

struct ChartNode {
  NodeKind kind = NodeKind::root;
  int parent = -1;
  std::string path;
  BlowupCenter center;                   // blowup nodes: center in parent coordinates
  std::size_t chart_variable = 0;        // blowup nodes
  std::vector<Polynomial> substitution;  // parent variables in this node's coordinates
  std::string note;
  MorphismChart morphism;
  std::vector<std::size_t> children;
};

class ChartTree {
 public:
  explicit ChartTree(MorphismChart root);

  const ChartNode& node(std::size_t i) const { return nodes_.at(i); }
  std::size_t size() const { return nodes_.size(); }
  bool is_leaf(std::size_t i) const { return nodes_.at(i).children.empty(); }
  // Leaves in depth-first path order.
  std::vector<std::size_t> leaves() const;
  std::vector<std::size_t> leaves_under(std::size_t i) const;

  std::vector<std::size_t> blowup(std::size_t node, const BlowupCenter& center);
  std::size_t change_coordinates(std::size_t node, std::vector<Polynomial> old_in_new, MorphismChart transformed,
                                 std::string note);

  // Ancestor coordinates as polynomials in the coordinates of node.
  std::vector<Polynomial> composite_map(std::size_t ancestor, std::size_t node) const;
  std::size_t blowup_count() const;

 private:
  std::vector<ChartNode> nodes_;
};

std::string display_path(const std::string& path);

}  // namespace logres
