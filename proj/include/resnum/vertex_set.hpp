#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace resnum {

using Vertex = std::uint32_t;

inline constexpr std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

/// Fixed-universe bit set over {0, ..., n-1}. Graph rows, cliques and vertex
/// subsets all use this representation.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_(words_for(universe), 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

  static VertexSet full(std::size_t universe);
  static VertexSet from_words(std::size_t universe, std::span<const std::uint64_t> words);

  std::size_t universe() const noexcept { return universe_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }
  void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t size() const noexcept;
  bool empty() const noexcept;
  /// Smallest member, or universe() when empty.
  Vertex first() const noexcept;

  std::vector<Vertex> members() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        fn(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
  }

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  /// Removes every member of other.
  VertexSet& subtract(const VertexSet& other);

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

  bool is_subset_of(const VertexSet& other) const noexcept;
  bool intersects(const VertexSet& other) const noexcept;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  /// Orders sets by their sorted member lists (lexicographic).
  friend bool lex_less(const VertexSet& a, const VertexSet& b);

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace resnum
