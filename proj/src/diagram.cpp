#include "vctk/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace vctk {

DiagramGraph::DiagramGraph(const IntMatrix& intersection, int n)
    : mu_(intersection.rows()), n_(n), s_(intersection) {
  if (!intersection.square()) throw InvariantError("intersection matrix must be square");
  const int w = dashed_sign();
  for (std::size_t i = 0; i < mu_; ++i)
    for (std::size_t j = i + 1; j < mu_; ++j)
      if (sgn(s_(i, j)) != 0) edges_.push_back({i + 1, j + 1, s_(i, j), sgn(s_(i, j)) == w});
}

int DiagramGraph::dashed_sign() const {
  const int e = n_ % 2 == 0 ? n_ / 2 : (n_ + 1) / 2;
  return e % 2 == 0 ? 1 : -1;
}

bool DiagramGraph::connected() const {
  if (mu_ <= 1) return true;
  std::vector<std::size_t> parent(mu_);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::size_t components = mu_;
  for (const auto& e : edges_) {
    auto ra = find(e.a - 1), rb = find(e.b - 1);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

Integer DiagramGraph::negative_edge_count() const {
  Integer c = 0;
  for (const auto& e : edges_)
    if (sgn(e.weight) < 0) c += abs(e.weight);
  return c;
}

Integer DiagramGraph::line_count() const {
  Integer c = 0;
  for (const auto& e : edges_) c += abs(e.weight);
  return c;
}

std::vector<std::vector<std::size_t>> DiagramGraph::monotone_cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> path;
  auto adjacent = [&](std::size_t a, std::size_t b) { return sgn(s_(a, b)) != 0; };
  std::function<void(std::size_t)> extend = [&](std::size_t last) {
    if (path.size() >= 3 && adjacent(last, path.front())) {
      std::vector<std::size_t> cyc;
      for (auto v : path) cyc.push_back(v + 1);
      out.push_back(std::move(cyc));
    }
    for (std::size_t nxt = last + 1; nxt < mu_; ++nxt)
      if (adjacent(last, nxt)) {
        path.push_back(nxt);
        extend(nxt);
        path.pop_back();
      }
  };
  for (std::size_t start = 0; start < mu_; ++start) {
    path = {start};
    extend(start);
  }
  return out;
}

Integer DiagramGraph::monotone_cycle_feedback() const {
  auto cycles = monotone_cycles();
  if (cycles.empty()) return 0;
  // Each cycle as its list of edges (a, b), a < b, 0-based.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> cyc_edges;
  for (const auto& c : cycles) {
    std::vector<std::pair<std::size_t, std::size_t>> es;
    for (std::size_t k = 0; k < c.size(); ++k) {
      std::size_t a = c[k] - 1, b = c[(k + 1) % c.size()] - 1;
      es.emplace_back(std::min(a, b), std::max(a, b));
    }
    cyc_edges.push_back(std::move(es));
  }
  // Branch and bound on the first cycle not yet broken.
  std::vector<std::vector<bool>> deleted(mu_, std::vector<bool>(mu_, false));
  Integer best = line_count();
  std::function<void(const Integer&)> search = [&](const Integer& spent) {
    if (spent >= best) return;
    const std::vector<std::pair<std::size_t, std::size_t>>* open = nullptr;
    for (const auto& es : cyc_edges) {
      bool broken = std::any_of(es.begin(), es.end(), [&](auto e) { return deleted[e.first][e.second]; });
      if (!broken) {
        open = &es;
        break;
      }
    }
    if (!open) {
      best = spent;
      return;
    }
    for (auto [a, b] : *open) {
      deleted[a][b] = true;
      search(spent + abs(s_(a, b)));
      deleted[a][b] = false;
    }
  };
  search(0);
  return best;
}

std::string to_dot(const DiagramGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t v = 1; v <= g.size(); ++v) os << "  " << v << " [label=\"" << v << "\"];\n";
  for (const auto& e : g.edges()) {
    Integer lines = abs(e.weight);
    for (Integer k = 0; k < lines; ++k) {
      os << "  " << e.a << " -- " << e.b;
      if (e.dashed) os << " [style=dashed]";
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace vctk
