#include "dhall/quiver.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace dhall {

Quiver::Quiver(std::size_t vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
  for (const Arrow& a : arrows_)
    if (a.source >= vertex_count_ || a.target >= vertex_count_)
      throw std::invalid_argument("arrow endpoint out of range");
  // Kahn's algorithm: every vertex must be removable.
  std::vector<int> indeg(vertex_count_, 0);
  for (const Arrow& a : arrows_) ++indeg[a.target];
  std::deque<std::size_t> ready;
  for (std::size_t v = 0; v < vertex_count_; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    std::size_t v = ready.front();
    ready.pop_front();
    ++seen;
    for (const Arrow& a : arrows_)
      if (a.source == v && --indeg[a.target] == 0) ready.push_back(a.target);
  }
  if (seen != vertex_count_) throw std::invalid_argument("quiver has an oriented cycle");
}

namespace {

struct Component {
  std::vector<std::size_t> vertices;
  std::size_t edges = 0;
};

std::vector<Component> components(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const Arrow& a : q.arrows()) parent[find(a.source)] = find(a.target);
  std::map<std::size_t, Component> by_root;
  for (std::size_t v = 0; v < n; ++v) by_root[find(v)].vertices.push_back(v);
  for (const Arrow& a : q.arrows()) ++by_root[find(a.source)].edges;
  std::vector<Component> out;
  for (auto& [root, c] : by_root) out.push_back(std::move(c));
  return out;
}

// Dynkin label of one connected component, or "" if not Dynkin.
std::string classify(const Quiver& q, const Component& c) {
  const std::size_t n = c.vertices.size();
  if (c.edges != n - 1) return "";
  std::map<std::size_t, std::vector<std::size_t>> adj;
  for (const Arrow& a : q.arrows()) {
    if (std::find(c.vertices.begin(), c.vertices.end(), a.source) == c.vertices.end()) continue;
    adj[a.source].push_back(a.target);
    adj[a.target].push_back(a.source);
  }
  std::vector<std::size_t> branch;
  for (std::size_t v : c.vertices) {
    if (adj[v].size() > 3) return "";
    if (adj[v].size() == 3) branch.push_back(v);
  }
  if (branch.empty()) return "A" + std::to_string(n);
  if (branch.size() > 1) return "";
  std::vector<std::size_t> arms;
  for (std::size_t start : adj[branch[0]]) {
    std::size_t prev = branch[0], cur = start, len = 1;
    while (adj[cur].size() == 2) {
      std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  const std::size_t a = arms[0], b = arms[1], d = arms[2];
  if (a == 1 && b == 1) return "D" + std::to_string(n);
  if (a == 1 && b == 2 && d >= 2 && d <= 4) return "E" + std::to_string(n);
  return "";
}

}  // namespace

std::string Quiver::dynkin_type() const {
  // Listed by family letter, then rank, so the answer ignores vertex numbering.
  std::vector<std::pair<char, int>> types;
  for (const Component& c : components(*this)) {
    const std::string t = classify(*this, c);
    if (t.empty()) return "";
    types.emplace_back(t[0], std::stoi(t.substr(1)));
  }
  std::sort(types.begin(), types.end());
  std::string out;
  for (const auto& [family, rank] : types) out += (out.empty() ? "" : "+") + std::string(1, family) + std::to_string(rank);
  return out;
}

bool Quiver::is_finite_type() const { return vertex_count_ > 0 && !dynkin_type().empty(); }

std::vector<std::vector<Path>> Quiver::paths_from(std::size_t vertex) const {
  std::vector<std::vector<Path>> out(vertex_count_);
  std::vector<Path> stack{{vertex, vertex, {}}};
  while (!stack.empty()) {
    Path p = std::move(stack.back());
    stack.pop_back();
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
      if (arrows_[i].source != p.end) continue;
      Path next = p;
      next.arrows.push_back(i);
      next.end = arrows_[i].target;
      stack.push_back(std::move(next));
    }
    out[p.end].push_back(std::move(p));
  }
  // Deterministic order: by length, then arrow sequence.
  for (auto& bucket : out)
    std::sort(bucket.begin(), bucket.end(), [](const Path& a, const Path& b) {
      if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
      return a.arrows < b.arrows;
    });
  return out;
}

std::vector<DimVector> Quiver::positive_roots() const {
  const std::size_t n = vertex_count_;
  std::set<DimVector> seen;
  std::deque<DimVector> queue;
  for (std::size_t i = 0; i < n; ++i) {
    DimVector e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    DimVector d = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      int pairing = 2 * d[i];
      for (const Arrow& a : arrows_) {
        if (a.source == i) pairing -= d[a.target];
        if (a.target == i) pairing -= d[a.source];
      }
      DimVector r = d;
      r[i] -= pairing;
      if (r[i] < 0 || r == d) continue;
      if (seen.insert(r).second) queue.push_back(r);
      if (seen.size() > 100000) throw std::runtime_error("positive root generation did not terminate");
    }
  }
  return {seen.begin(), seen.end()};
}

int Quiver::euler_form(const DimVector& d, const DimVector& e) const {
  int s = 0;
  for (std::size_t i = 0; i < vertex_count_; ++i) s += d[i] * e[i];
  for (const Arrow& a : arrows_) s -= d[a.source] * e[a.target];
  return s;
}

Quiver linear_quiver(std::size_t n) {
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i + 1 < n; ++i) arrows.push_back({i, i + 1});
  return Quiver(n, std::move(arrows));
}

}  // namespace dhall
