#include "resnum/distance.hpp"

#include <limits>
#include <string>

#include "resnum/error.hpp"
#include "resnum/kernels.hpp"

namespace resnum {

class DistanceBuilder {
 public:
  static DistanceMatrix build(const Graph& g) {
    const std::size_t n = g.order();
    if (n == 0) raise(ErrorKind::Disconnected, "distance matrix of the empty graph");
    if (n >= std::numeric_limits<Dist>::max()) {
      raise(ErrorKind::TooLarge, std::to_string(n) + " vertices exceed the distance width");
    }
    DistanceMatrix dm;
    dm.n_ = n;
    dm.stride_ = (n + 15) / 16 * 16;
    dm.d_.assign(n * dm.stride_, 0);

    const std::size_t words = g.words_per_row();
    std::vector<std::uint64_t> visited(words), frontier(words), next(words);
    for (Vertex s = 0; s < n; ++s) {
      std::fill(visited.begin(), visited.end(), 0);
      std::fill(frontier.begin(), frontier.end(), 0);
      visited[s >> 6] |= std::uint64_t{1} << (s & 63);
      frontier[s >> 6] |= std::uint64_t{1} << (s & 63);
      Dist* row = dm.d_.data() + s * dm.stride_;
      std::size_t reached = 1;
      for (Dist level = 1; reached < n; ++level) {
        std::fill(next.begin(), next.end(), 0);
        for (std::size_t w = 0; w < words; ++w) {
          std::uint64_t bits = frontier[w];
          while (bits != 0) {
            const auto u = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
            const auto adj = g.row(u);
            for (std::size_t k = 0; k < words; ++k) next[k] |= adj[k];
          }
        }
        bool any = false;
        for (std::size_t w = 0; w < words; ++w) {
          next[w] &= ~visited[w];
          visited[w] |= next[w];
          std::uint64_t bits = next[w];
          any = any || bits != 0;
          while (bits != 0) {
            row[w * 64 + std::countr_zero(bits)] = level;
            bits &= bits - 1;
            ++reached;
          }
        }
        if (!any) raise(ErrorKind::Disconnected, "distance matrix requires a connected graph");
        frontier.swap(next);
      }
    }
    return dm;
  }
};

Dist DistanceMatrix::diameter() const {
  Dist best = 0;
  for (Vertex u = 0; u < n_; ++u) best = std::max(best, kernels::max_value(row(u)));
  return best;
}

DistanceMatrix distance_matrix(const Graph& g) { return DistanceBuilder::build(g); }

}  // namespace resnum
