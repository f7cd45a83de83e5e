#pragma once

// Subgroup graphs of free groups and Stallings folding.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "torlen/word.hpp"

namespace torlen {

  struct GraphEdge {
    std::size_t from  = 0;
    std::size_t label = 0;  // index into the ambient alphabet
    std::size_t to    = 0;

    auto operator<=>(GraphEdge const&) const = default;
  };

  // A folded core graph with base vertex 0.  Vertices are numbered
  // breadth-first from the base, scanning labels in ambient order with
  // outgoing before incoming, so equal subgroups give equal graphs.
  class SubgroupGraph {
   public:
    SubgroupGraph(Alphabet ambient, std::size_t vertices, std::vector<GraphEdge> edges);

    Alphabet const& ambient() const noexcept {
      return _ambient;
    }
    std::size_t vertex_count() const noexcept {
      return _vertices;
    }
    std::vector<GraphEdge> const& edges() const noexcept {
      return _edges;
    }
    std::size_t base() const noexcept {
      return 0;
    }

    // Follows a signed letter code (+-(label+1)); -1 if absent.
    long step(std::size_t vertex, int letter) const;

    bool operator==(SubgroupGraph const&) const = default;

   private:
    Alphabet               _ambient;
    std::size_t            _vertices = 1;
    std::vector<GraphEdge> _edges;
    std::vector<long>      _out;  // vertex * 2k + column
  };

  SubgroupGraph build_subgroup_graph(std::vector<std::string> const& ambient,
                                     std::vector<Word> const&        generators);

  // Same result through single folds chosen uniformly at random; used to
  // exercise confluence.
  SubgroupGraph build_subgroup_graph_random_order(std::vector<std::string> const& ambient,
                                                  std::vector<Word> const&        generators,
                                                  std::uint64_t                   seed);

  std::size_t       rank(SubgroupGraph const& g);
  std::vector<Word> free_basis(SubgroupGraph const& g);
  bool              membership(SubgroupGraph const& g, Word const& w);

}  // namespace torlen
