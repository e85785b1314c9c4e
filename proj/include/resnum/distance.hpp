#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "resnum/graph.hpp"

namespace resnum {

using Dist = std::uint16_t;

/// All-pairs hop distances stored row-major. Rows start on a 16-entry
/// boundary; the padding is never read by the kernels, which take exact spans.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  std::size_t order() const noexcept { return n_; }
  std::size_t stride() const noexcept { return stride_; }

  Dist operator()(Vertex u, Vertex v) const noexcept { return d_[u * stride_ + v]; }

  /// Row u, exactly n entries.
  std::span<const Dist> row(Vertex u) const noexcept { return {d_.data() + u * stride_, n_}; }
  /// Row u including zero padding (stride() entries).
  std::span<const Dist> padded_row(Vertex u) const noexcept {
    return {d_.data() + u * stride_, stride_};
  }

  Dist diameter() const;

  friend class DistanceBuilder;

 private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<Dist> d_;
};

/// One breadth-first search per source over the bit rows. Raises Disconnected
/// for disconnected input.
DistanceMatrix distance_matrix(const Graph& g);

}  // namespace resnum
