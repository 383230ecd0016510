#include "logres/chart.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace logres {

std::size_t Chart::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  throw std::invalid_argument("unknown chart variable '" + std::string(name) + "'");
}

std::vector<std::size_t> Chart::exceptional_indices() const {
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i < exceptional.size(); ++i)
    if (exceptional[i]) r.push_back(i);
  return r;
}

std::vector<std::size_t> Chart::free_indices() const {
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i < exceptional.size(); ++i)
    if (!exceptional[i]) r.push_back(i);
  return r;
}

std::size_t Chart::exceptional_count() const {
  return static_cast<std::size_t>(std::count(exceptional.begin(), exceptional.end(), true));
}

std::vector<std::string> MorphismChart::component_strings() const {
  std::vector<std::string> out;
  for (const auto& c : components) out.push_back(to_string(c, chart.names));
  return out;
}

BlowupCenter make_center(const Chart& chart, const std::vector<std::string>& names) {
  BlowupCenter c;
  for (const auto& n : names) c.coordinates.push_back(chart.index_of(n));
  std::sort(c.coordinates.begin(), c.coordinates.end());
  c.coordinates.erase(std::unique(c.coordinates.begin(), c.coordinates.end()), c.coordinates.end());
  return c;
}

std::vector<std::string> center_names(const Chart& chart, const BlowupCenter& center) {
  std::vector<std::string> out;
  for (auto i : center.coordinates) out.push_back(chart.names.at(i));
  return out;
}

BlowupStep blowup(const Chart& chart, const BlowupCenter& center) {
  if (center.coordinates.empty()) throw std::invalid_argument("empty blowup center");
  for (auto i : center.coordinates)
    if (i >= chart.dim()) throw std::invalid_argument("center coordinate out of range");
  std::size_t n = chart.dim();
  BlowupStep step{chart, center, {}};
  for (std::size_t w : center.coordinates) {
    BlowupChild child{w, chart, {}};
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial image = Polynomial::variable(n, i);
      bool in_center = std::find(center.coordinates.begin(), center.coordinates.end(), i) != center.coordinates.end();
      if (in_center && i != w) image = image * Polynomial::variable(n, w);
      child.substitution.push_back(image);
    }
    // Strict transforms of the other center components pass through this chart; (w = 0) is new.
    child.chart.exceptional[w] = true;
    step.children.push_back(std::move(child));
  }
  return step;
}

bool is_combinatorial(const Chart& chart, const BlowupCenter& center) {
  return std::all_of(center.coordinates.begin(), center.coordinates.end(),
                     [&](std::size_t i) { return chart.exceptional.at(i); });
}

std::size_t free_codimension(const Chart& chart, const BlowupCenter& center) {
  return static_cast<std::size_t>(std::count_if(center.coordinates.begin(), center.coordinates.end(),
                                                [&](std::size_t i) { return !chart.exceptional.at(i); }));
}

MorphismChart pullback_morphism(const MorphismChart& m, const BlowupStep& step, std::size_t child) {
  const BlowupChild& c = step.children.at(child);
  MorphismChart out{c.chart, {}, m.precision};
  for (const auto& comp : m.components) {
    // Blowup images are monomials, so known precision never decreases.
    out.components.push_back(substitute(comp, c.substitution).truncated(m.precision));
  }
  return out;
}

MorphismChart recenter(const MorphismChart& m, const std::vector<Rational>& point) {
  std::size_t n = m.chart.dim();
  if (point.size() != n) throw std::invalid_argument("point dimension mismatch");
  if (m.precision != kInfinity && std::any_of(point.begin(), point.end(), [](const Rational& q) { return q != 0; }))
    throw std::invalid_argument("cannot recenter a truncated morphism away from its origin");
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::variable(n, i) + Polynomial::constant(n, point[i]));
  MorphismChart out{m.chart, {}, m.precision};
  for (std::size_t i = 0; i < n; ++i)
    if (point[i] != 0) out.chart.exceptional[i] = false;
  for (const auto& comp : m.components) out.components.push_back(substitute(comp, images));
  return out;
}

MorphismChart change_coordinates(const MorphismChart& m, const std::vector<Polynomial>& old_in_new,
                                 unsigned precision) {
  unsigned known = std::min(m.precision, precision);
  MorphismChart out{m.chart, {}, known};
  for (const auto& comp : m.components) {
    if (known == kInfinity)
      out.components.push_back(substitute(comp, old_in_new));
    else
      out.components.push_back(substitute(TruncatedSeries{comp, m.precision}, old_in_new, known).poly);
  }
  return out;
}

std::string substitution_to_string(const std::vector<Polynomial>& substitution, const Chart& parent,
                                   const Chart& child) {
  std::string out;
  for (std::size_t i = 0; i < substitution.size(); ++i) {
    if (i) out += ", ";
    out += parent.names.at(i) + " = " + to_string(substitution[i], child.names);
  }
  return out;
}

ChartTree::ChartTree(MorphismChart root) {
  ChartNode n;
  n.morphism = std::move(root);
  nodes_.push_back(std::move(n));
}

std::vector<std::size_t> ChartTree::leaves() const { return leaves_under(0); }

std::vector<std::size_t> ChartTree::leaves_under(std::size_t i) const {
  std::vector<std::size_t> out;
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    if (nodes_[k].children.empty()) {
      out.push_back(k);
      return;
    }
    for (auto c : nodes_[k].children) walk(c);
  };
  walk(i);
  return out;
}

std::vector<std::size_t> ChartTree::blowup(std::size_t node, const BlowupCenter& center) {
  if (!is_leaf(node)) throw std::logic_error("blowup requested at an interior node");
  BlowupStep step = logres::blowup(nodes_[node].morphism.chart, center);
  std::vector<std::size_t> created;
  for (std::size_t c = 0; c < step.children.size(); ++c) {
    ChartNode n;
    n.kind = NodeKind::blowup;
    n.parent = static_cast<int>(node);
    n.center = center;
    n.chart_variable = step.children[c].chart_variable;
    n.path = nodes_[node].path + "/" + nodes_[node].morphism.chart.names[n.chart_variable];
    n.substitution = step.children[c].substitution;
    n.morphism = pullback_morphism(nodes_[node].morphism, step, c);
    created.push_back(nodes_.size());
    nodes_.push_back(std::move(n));
  }
  for (auto k : created) nodes_[node].children.push_back(k);
  return created;
}

std::size_t ChartTree::change_coordinates(std::size_t node, std::vector<Polynomial> old_in_new,
                                          MorphismChart transformed, std::string note) {
  if (!is_leaf(node)) throw std::logic_error("coordinate change requested at an interior node");
  ChartNode n;
  n.kind = NodeKind::coordinate_change;
  n.parent = static_cast<int>(node);
  n.path = nodes_[node].path + "/~";
  n.substitution = std::move(old_in_new);
  n.note = std::move(note);
  n.morphism = std::move(transformed);
  nodes_.push_back(std::move(n));
  nodes_[node].children.push_back(nodes_.size() - 1);
  return nodes_.size() - 1;
}

std::vector<Polynomial> ChartTree::composite_map(std::size_t ancestor, std::size_t node) const {
  std::size_t n = nodes_.at(node).morphism.chart.dim();
  std::vector<Polynomial> map;
  for (std::size_t i = 0; i < n; ++i) map.push_back(Polynomial::variable(n, i));
  std::size_t k = node;
  while (k != ancestor) {
    if (nodes_[k].parent < 0) throw std::invalid_argument("not an ancestor");
    std::vector<Polynomial> next;
    for (const auto& s : nodes_[k].substitution) next.push_back(substitute(s, map));
    map = std::move(next);
    k = static_cast<std::size_t>(nodes_[k].parent);
  }
  return map;
}

std::size_t ChartTree::blowup_count() const {
  std::size_t count = 0;
  for (const auto& n : nodes_)
    if (!n.children.empty() && nodes_[n.children.front()].kind == NodeKind::blowup) ++count;
  return count;
}

std::string display_path(const std::string& path) { return path.empty() ? "/" : path; }

}  // namespace logres
