#pragma once

#include <compare>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "metonym/errors.hpp"
#include "metonym/text_util.hpp"

namespace metonym {

// Semantic category name. Categories live in their own namespace, separate
// from surface words; a word maps to categories but is never itself a node
// of the hierarchy.
struct CategoryId {
  std::string name;

  CategoryId() = default;
  explicit CategoryId(std::string n) : name(std::move(n)) {}

  auto operator<=>(const CategoryId&) const = default;
};

// Directed acyclic is-a graph over categories. Edges point from a child
// category to its parents. Immutable once loaded; reads are thread-safe.
class IsAHierarchy {
public:
  void add_node(const CategoryId& c) {
    if (c.name.empty()) throw Error("empty category name");
    nodes_.insert(c);
  }

  // Inserts child -> parent, rejecting edges that would close a cycle.
  void add_edge(const CategoryId& child, const CategoryId& parent) {
    add_node(child);
    add_node(parent);
    if (child == parent || reaches(parent, child)) {
      throw CycleDetectedError({parent.name, child.name, parent.name});
    }
    parents_[child].insert(parent);
  }

  bool contains(const CategoryId& c) const { return nodes_.count(c) > 0; }

  const std::set<CategoryId>& nodes() const { return nodes_; }

  const std::set<CategoryId>& parents(const CategoryId& c) const {
    require(c);
    const auto it = parents_.find(c);
    return it == parents_.end() ? empty_set() : it->second;
  }

  // Transitive closure of parent edges, excluding c itself.
  std::set<CategoryId> ancestors(const CategoryId& c) const {
    require(c);
    std::set<CategoryId> seen;
    std::deque<CategoryId> queue{c};
    while (!queue.empty()) {
      const CategoryId cur = queue.front();
      queue.pop_front();
      const auto it = parents_.find(cur);
      if (it == parents_.end()) continue;
      for (const auto& p : it->second) {
        if (seen.insert(p).second) queue.push_back(p);
      }
    }
    return seen;
  }

  // True when anc is a strict ancestor of c. Early-exit walk; does not
  // materialize the full closure.
  bool is_ancestor(const CategoryId& anc, const CategoryId& c) const {
    require(c);
    return reaches(c, anc);
  }

  std::size_t edge_count() const {
    std::size_t n = 0;
    for (const auto& [child, ps] : parents_) n += ps.size();
    return n;
  }

  // One `child<TAB>parent` edge per line; a line with no tab declares an
  // isolated category. `#` starts a comment line.
  static IsAHierarchy load(std::istream& in) {
    IsAHierarchy h;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (is_comment_or_blank(line)) continue;
      const auto fields = split(trim(line), '\t');
      if (fields.size() == 1) {
        h.add_node(CategoryId(std::string(trim(fields[0]))));
        continue;
      }
      if (fields.size() != 2) {
        throw MalformedLineError(line_no, "expected `child<TAB>parent`");
      }
      const auto child = trim(fields[0]);
      const auto parent = trim(fields[1]);
      if (child.empty() || parent.empty()) {
        throw MalformedLineError(line_no, "empty category name");
      }
      h.add_node(CategoryId(std::string(child)));
      h.add_node(CategoryId(std::string(parent)));
      h.parents_[CategoryId(std::string(child))].insert(CategoryId(std::string(parent)));
    }
    h.check_acyclic();
    return h;
  }

  // Canonical form: sorted edges, then isolated nodes as bare lines.
  // load(save(h)) reproduces h exactly.
  void save(std::ostream& out) const {
    std::set<CategoryId> in_edge;
    for (const auto& [child, ps] : parents_) {
      for (const auto& p : ps) {
        out << child.name << '\t' << p.name << '\n';
        in_edge.insert(p);
      }
      in_edge.insert(child);
    }
    for (const auto& n : nodes_) {
      if (!in_edge.count(n)) out << n.name << '\n';
    }
  }

  friend bool operator==(const IsAHierarchy& a, const IsAHierarchy& b) {
    return a.nodes_ == b.nodes_ && a.parents_ == b.parents_;
  }

private:
  static const std::set<CategoryId>& empty_set() {
    static const std::set<CategoryId> empty;
    return empty;
  }

  void require(const CategoryId& c) const {
    if (!contains(c)) throw UnknownCategoryError(c.name);
  }

  // Is `to` reachable from `from` by parent edges (strictly upward)?
  bool reaches(const CategoryId& from, const CategoryId& to) const {
    std::set<CategoryId> seen;
    std::deque<CategoryId> queue{from};
    while (!queue.empty()) {
      const CategoryId cur = queue.front();
      queue.pop_front();
      const auto it = parents_.find(cur);
      if (it == parents_.end()) continue;
      for (const auto& p : it->second) {
        if (p == to) return true;
        if (seen.insert(p).second) queue.push_back(p);
      }
    }
    return false;
  }

  void check_acyclic() const {
    enum class Mark { White, Gray, Black };
    std::map<CategoryId, Mark> mark;
    for (const auto& n : nodes_) mark[n] = Mark::White;
    std::vector<CategoryId> path;

    // Recursive DFS via explicit stack of (node, next-parent iterator).
    for (const auto& start : nodes_) {
      if (mark[start] != Mark::White) continue;
      std::vector<std::pair<CategoryId, std::set<CategoryId>::const_iterator>> stack;
      mark[start] = Mark::Gray;
      path.push_back(start);
      stack.emplace_back(start, parent_begin(start));
      while (!stack.empty()) {
        auto& [node, it] = stack.back();
        if (it == parent_end(node)) {
          mark[node] = Mark::Black;
          path.pop_back();
          stack.pop_back();
          continue;
        }
        const CategoryId next = *it++;
        if (mark[next] == Mark::Gray) {
          std::vector<std::string> cycle;
          auto pos = path.begin();
          while (pos != path.end() && !(*pos == next)) ++pos;
          for (; pos != path.end(); ++pos) cycle.push_back(pos->name);
          cycle.push_back(next.name);
          throw CycleDetectedError(cycle);
        }
        if (mark[next] == Mark::White) {
          mark[next] = Mark::Gray;
          path.push_back(next);
          stack.emplace_back(next, parent_begin(next));
        }
      }
    }
  }

  std::set<CategoryId>::const_iterator parent_begin(const CategoryId& c) const {
    const auto it = parents_.find(c);
    return it == parents_.end() ? empty_set().begin() : it->second.begin();
  }

  std::set<CategoryId>::const_iterator parent_end(const CategoryId& c) const {
    const auto it = parents_.find(c);
    return it == parents_.end() ? empty_set().end() : it->second.end();
  }

  std::set<CategoryId> nodes_;
  std::map<CategoryId, std::set<CategoryId>> parents_;
};

}  // namespace metonym
