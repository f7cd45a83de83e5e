#include "torlen/stallings.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "torlen/error.hpp"

namespace torlen {

  namespace {

    // Column of a signed letter: 2*label for forward, 2*label+1 backward.
    std::size_t column(int letter) {
      auto label = static_cast<std::size_t>(std::abs(letter) - 1);
      return 2 * label + (letter < 0 ? 1 : 0);
    }

    // Raw labelled multigraph: the wedge of petals for the generators.
    struct RawGraph {
      std::size_t            vertices = 1;
      std::vector<GraphEdge> edges;
    };

    RawGraph wedge(Alphabet const& ambient, std::vector<Word> const& generators) {
      RawGraph g;
      for (auto const& w : generators) {
        Code c = code::reduce(ambient.encode(w));
        if (c.empty()) {
          continue;
        }
        std::size_t at = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
          std::size_t next = i + 1 == c.size() ? 0 : g.vertices++;
          auto        label = static_cast<std::size_t>(std::abs(c[i]) - 1);
          if (c[i] > 0) {
            g.edges.push_back({at, label, next});
          } else {
            g.edges.push_back({next, label, at});
          }
          at = next;
        }
      }
      return g;
    }

    struct UnionFind {
      std::vector<std::size_t> parent;
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
    };

    // Folds with a worklist of vertices whose adjacency changed.
    RawGraph fold(RawGraph g, std::size_t k) {
      std::size_t const n = g.vertices;
      UnionFind         uf(n);
      // adjacency: (column, neighbour)
      std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
      for (auto const& e : g.edges) {
        adj[e.from].push_back({2 * e.label, e.to});
        adj[e.to].push_back({2 * e.label + 1, e.from});
      }
      std::deque<std::size_t> work;
      for (std::size_t v = 0; v < n; ++v) {
        work.push_back(v);
      }
      auto merge = [&](std::size_t a, std::size_t b) {
        a = uf.find(a);
        b = uf.find(b);
        if (a == b) {
          return;
        }
        if (adj[a].size() < adj[b].size()) {
          std::swap(a, b);
        }
        uf.parent[b] = a;
        adj[a].insert(adj[a].end(), adj[b].begin(), adj[b].end());
        adj[b].clear();
        work.push_back(a);
      };
      while (!work.empty()) {
        std::size_t v = work.front();
        work.pop_front();
        if (uf.find(v) != v) {
          continue;
        }
        std::vector<long> seen(2 * k, -1);
        // merging may grow adj[v]; index-based loop picks up appended edges
        for (std::size_t i = 0; i < adj[v].size(); ++i) {
          auto [col, to] = adj[v][i];
          to             = uf.find(to);
          if (seen[col] < 0) {
            seen[col] = static_cast<long>(to);
          } else if (uf.find(static_cast<std::size_t>(seen[col])) != to) {
            merge(static_cast<std::size_t>(seen[col]), to);
            if (uf.find(v) != v) {
              break;  // v was absorbed; its root is queued
            }
          }
        }
      }
      std::set<GraphEdge> edges;
      for (auto const& e : g.edges) {
        edges.insert({uf.find(e.from), e.label, uf.find(e.to)});
      }
      std::map<std::size_t, std::size_t> renumber;
      renumber[uf.find(0)] = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (uf.find(v) == v) {
          renumber.emplace(v, renumber.size());
        }
      }
      RawGraph out;
      out.vertices = renumber.size();
      for (auto const& e : edges) {
        out.edges.push_back({renumber[e.from], e.label, renumber[e.to]});
      }
      return out;
    }

    RawGraph prune(RawGraph g) {
      while (true) {
        std::vector<std::size_t> degree(g.vertices, 0);
        for (auto const& e : g.edges) {
          ++degree[e.from];
          ++degree[e.to];
        }
        std::vector<bool> drop(g.vertices, false);
        bool              any = false;
        for (std::size_t v = 1; v < g.vertices; ++v) {
          if (degree[v] == 1) {
            drop[v] = true;
            any     = true;
          }
        }
        if (!any) {
          return g;
        }
        std::erase_if(g.edges,
                      [&](GraphEdge const& e) { return drop[e.from] || drop[e.to]; });
      }
    }

    // Breadth-first renumbering from the base of a folded graph.
    SubgroupGraph canonical(Alphabet const& ambient, RawGraph const& g) {
      std::size_t const k = ambient.size();
      std::vector<std::vector<long>> out(g.vertices, std::vector<long>(2 * k, -1));
      for (auto const& e : g.edges) {
        out[e.from][2 * e.label]    = static_cast<long>(e.to);
        out[e.to][2 * e.label + 1]  = static_cast<long>(e.from);
      }
      std::vector<long>        number(g.vertices, -1);
      std::deque<std::size_t>  queue{0};
      std::size_t              next = 0;
      number[0]                     = static_cast<long>(next++);
      while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t col = 0; col < 2 * k; ++col) {
          long w = out[v][col];
          if (w >= 0 && number[static_cast<std::size_t>(w)] < 0) {
            number[static_cast<std::size_t>(w)] = static_cast<long>(next++);
            queue.push_back(static_cast<std::size_t>(w));
          }
        }
      }
      std::vector<GraphEdge> edges;
      for (auto const& e : g.edges) {
        if (number[e.from] >= 0) {
          edges.push_back({static_cast<std::size_t>(number[e.from]), e.label,
                           static_cast<std::size_t>(number[e.to])});
        }
      }
      std::sort(edges.begin(), edges.end());
      edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
      return SubgroupGraph(ambient, next, std::move(edges));
    }

  }  // namespace

  SubgroupGraph::SubgroupGraph(Alphabet ambient, std::size_t vertices, std::vector<GraphEdge> edges)
      : _ambient(std::move(ambient)), _vertices(vertices), _edges(std::move(edges)) {
    std::size_t const k = _ambient.size();
    _out.assign(_vertices * 2 * k, -1);
    for (auto const& e : _edges) {
      if (e.from >= _vertices || e.to >= _vertices || e.label >= k) {
        throw Error("subgroup graph edge out of range");
      }
      auto& fwd = _out[e.from * 2 * k + 2 * e.label];
      auto& bwd = _out[e.to * 2 * k + 2 * e.label + 1];
      if ((fwd >= 0 && fwd != static_cast<long>(e.to))
          || (bwd >= 0 && bwd != static_cast<long>(e.from))) {
        throw Error("subgroup graph is not folded");
      }
      fwd = static_cast<long>(e.to);
      bwd = static_cast<long>(e.from);
    }
  }

  long SubgroupGraph::step(std::size_t vertex, int letter) const {
    return _out[vertex * 2 * _ambient.size() + column(letter)];
  }

  SubgroupGraph build_subgroup_graph(std::vector<std::string> const& ambient,
                                     std::vector<Word> const&        generators) {
    Alphabet alphabet(ambient);
    RawGraph g = fold(wedge(alphabet, generators), alphabet.size());
    return canonical(alphabet, prune(std::move(g)));
  }

  SubgroupGraph build_subgroup_graph_random_order(std::vector<std::string> const& ambient,
                                                  std::vector<Word> const&        generators,
                                                  std::uint64_t                   seed) {
    Alphabet     alphabet(ambient);
    RawGraph     g = wedge(alphabet, generators);
    std::mt19937_64 rng(seed);
    std::vector<GraphEdge> edges = g.edges;
    while (true) {
      // all (i, j) with edges i, j leaving or entering one vertex by one label
      std::vector<std::pair<std::size_t, std::size_t>> folds;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
          auto const& e = edges[i];
          auto const& f = edges[j];
          if (e.label == f.label && ((e.from == f.from) || (e.to == f.to))) {
            folds.push_back({i, j});
          }
        }
      }
      if (folds.empty()) {
        break;
      }
      auto [i, j] = folds[std::uniform_int_distribution<std::size_t>(0, folds.size() - 1)(rng)];
      GraphEdge e = edges[i], f = edges[j];
      std::size_t keep = e.from == f.from ? std::min(e.to, f.to) : std::min(e.from, f.from);
      std::size_t gone = e.from == f.from ? std::max(e.to, f.to) : std::max(e.from, f.from);
      edges.erase(edges.begin() + static_cast<long>(j));
      for (auto& x : edges) {
        if (x.from == gone) {
          x.from = keep;
        }
        if (x.to == gone) {
          x.to = keep;
        }
      }
      std::sort(edges.begin(), edges.end());
      edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }
    g.edges = std::move(edges);
    return canonical(alphabet, prune(std::move(g)));
  }

  std::size_t rank(SubgroupGraph const& g) {
    return g.edges().size() + 1 - g.vertex_count();
  }

  std::vector<Word> free_basis(SubgroupGraph const& g) {
    std::size_t const k = g.ambient().size();
    // spanning tree by breadth-first search, same order as the numbering
    std::vector<Code> path(g.vertex_count());
    std::vector<bool> reached(g.vertex_count(), false);
    std::set<GraphEdge> tree;
    std::deque<std::size_t> queue{0};
    reached[0] = true;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t col = 0; col < 2 * k; ++col) {
        int  letter = static_cast<int>(col / 2 + 1) * (col % 2 == 0 ? 1 : -1);
        long w      = g.step(v, letter);
        if (w < 0 || reached[static_cast<std::size_t>(w)]) {
          continue;
        }
        auto u     = static_cast<std::size_t>(w);
        reached[u] = true;
        path[u]    = path[v];
        path[u].push_back(letter);
        tree.insert(letter > 0 ? GraphEdge{v, col / 2, u} : GraphEdge{u, col / 2, v});
        queue.push_back(u);
      }
    }
    std::vector<Word> basis;
    for (auto const& e : g.edges()) {
      if (tree.count(e) != 0) {
        continue;
      }
      Code c = path[e.from];
      c.push_back(static_cast<int>(e.label + 1));
      c = code::multiply(c, code::inverse(path[e.to]));
      basis.push_back(g.ambient().decode(c));
    }
    return basis;
  }

  bool membership(SubgroupGraph const& g, Word const& w) {
    Code        c = code::reduce(g.ambient().encode(w));
    std::size_t v = g.base();
    for (int x : c) {
      long next = g.step(v, x);
      if (next < 0) {
        return false;
      }
      v = static_cast<std::size_t>(next);
    }
    return v == g.base();
  }

}  // namespace torlen
