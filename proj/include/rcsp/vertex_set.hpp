#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "rcsp/types.hpp"

namespace rcsp {

inline std::size_t ng_words_for(std::size_t vertex_count) { return (vertex_count + 63) / 64; }

/// Word-wise subset test: every bit of `a` is also set in `b`.
inline bool words_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

/// Fixed-width bit-vector over the vertex set.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t vertex_count) : words_(ng_words_for(vertex_count), 0) {}
  VertexSet(std::size_t vertex_count, std::initializer_list<VertexId> members) : VertexSet(vertex_count) {
    for (VertexId v : members) insert(v);
  }
  static VertexSet from_words(std::span<const std::uint64_t> words) {
    VertexSet s;
    s.words_.assign(words.begin(), words.end());
    return s;
  }

  void insert(VertexId v) { words_[v / 64] |= std::uint64_t{1} << (v % 64); }
  bool contains(VertexId v) const { return (words_[v / 64] >> (v % 64)) & 1u; }
  bool subset_of(const VertexSet& o) const { return words_subset(words_, o.words_); }
  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  std::vector<VertexId> members() const {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (auto w = words_[i]; w != 0; w &= w - 1) {
        out.push_back(static_cast<VertexId>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      }
    }
    return out;
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  auto operator<=>(const VertexSet&) const = default;

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace rcsp
