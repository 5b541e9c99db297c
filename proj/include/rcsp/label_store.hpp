#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#if defined(__AVX2__)
#include <immintrin.h>
#endif

#include "rcsp/bucket_graph.hpp"
#include "rcsp/vertex_set.hpp"

namespace rcsp {

inline constexpr BucketId kNoBucket = std::numeric_limits<BucketId>::max();

struct LabelHandle {
  BucketId bucket = kNoBucket;
  std::uint32_t index = 0;
  bool valid() const { return bucket != kNoBucket; }
  auto operator<=>(const LabelHandle&) const = default;
};

/// Read-only view of one label's dominance fields. Keys are oriented so that
/// smaller is better in both directions.
template <class T>
struct LabelRef {
  std::int64_t cost = 0;
  const T* keys = nullptr;
  const std::uint64_t* ng = nullptr;
};

/// Structure-of-arrays storage of one bucket: one contiguous array per field.
/// Append-only; all columns share the same length.
template <class T>
class LabelColumns {
 public:
  LabelColumns() = default;
  LabelColumns(std::size_t key_count, std::size_t ng_words) : keys_(key_count), ng_words_(ng_words) {}

  std::size_t size() const { return cost_.size(); }
  bool empty() const { return cost_.empty(); }
  std::size_t key_count() const { return keys_.size(); }
  std::size_t ng_words() const { return ng_words_; }

  std::int64_t cost(std::size_t i) const { return cost_[i]; }
  T key(std::size_t r, std::size_t i) const { return keys_[r][i]; }
  std::span<const std::uint64_t> ng(std::size_t i) const { return {ng_.data() + i * ng_words_, ng_words_}; }
  LabelHandle parent(std::size_t i) const { return parent_[i]; }
  EdgeId via(std::size_t i) const { return via_[i]; }

  const std::int64_t* cost_data() const { return cost_.data(); }
  const T* key_data(std::size_t r) const { return keys_[r].data(); }
  const std::uint64_t* ng_data() const { return ng_.data(); }

  void push_back(std::int64_t cost, const T* keys, const std::uint64_t* ng, LabelHandle parent, EdgeId via) {
    cost_.push_back(cost);
    for (std::size_t r = 0; r < keys_.size(); ++r) keys_[r].push_back(keys[r]);
    ng_.insert(ng_.end(), ng, ng + ng_words_);
    parent_.push_back(parent);
    via_.push_back(via);
  }

 private:
  std::vector<std::int64_t> cost_;
  std::vector<std::vector<T>> keys_;
  std::vector<std::uint64_t> ng_;
  std::vector<LabelHandle> parent_;
  std::vector<EdgeId> via_;
  std::size_t ng_words_ = 0;
};

enum class LexOrder : std::int8_t { before = -1, equal = 0, after = 1 };

/// Lexicographic order over (cost, key_1, ..., key_k); ng memory excluded.
template <class T>
LexOrder lex_compare(const LabelRef<T>& a, const LabelRef<T>& b, std::size_t keys) {
  if (a.cost != b.cost) return a.cost < b.cost ? LexOrder::before : LexOrder::after;
  for (std::size_t r = 0; r < keys; ++r) {
    if (a.keys[r] != b.keys[r]) return a.keys[r] < b.keys[r] ? LexOrder::before : LexOrder::after;
  }
  return LexOrder::equal;
}

/// a dominates b: cost and every key <=, and every ng memory of a is a subset
/// of b's.
template <class T>
bool dominates_scalar(const LabelRef<T>& a, const LabelRef<T>& b, std::size_t keys, std::size_t ng_words) {
  if (a.cost > b.cost) return false;
  for (std::size_t r = 0; r < keys; ++r) {
    if (a.keys[r] > b.keys[r]) return false;
  }
  return words_subset({a.ng, ng_words}, {b.ng, ng_words});
}

template <class T>
LabelRef<T> label_ref(const LabelColumns<T>& c, std::size_t i, T* scratch) {
  for (std::size_t r = 0; r < c.key_count(); ++r) scratch[r] = c.key(r, i);
  return {c.cost(i), scratch, c.ng_data() + i * c.ng_words()};
}

/// Reference fold: one label at a time, early exit on the first dominator.
template <class T>
bool dominated_by_any_scalar(const LabelColumns<T>& c, std::size_t begin, std::size_t end, const LabelRef<T>& cand) {
  const auto k = c.key_count();
  const auto w = c.ng_words();
  const auto* cost = c.cost_data();
  const auto* ng = c.ng_data();
  for (std::size_t i = begin; i < end; ++i) {
    if (cost[i] > cand.cost) continue;
    bool ok = true;
    for (std::size_t r = 0; r < k && ok; ++r) ok = c.key_data(r)[i] <= cand.keys[r];
    if (ok && words_subset({ng + i * w, w}, {cand.ng, w})) return true;
  }
  return false;
}

namespace detail {

// Bit l set iff p[l] <= c, for l < W.
template <int W, class V>
inline std::uint64_t lanes_le(const V* p, V c) {
  std::uint64_t m = 0;
  for (int l = 0; l < W; ++l) m |= static_cast<std::uint64_t>(p[l] <= c) << l;
  return m;
}

inline std::uint64_t lanes_le_dyn(const auto* p, auto c, std::size_t w) {
  std::uint64_t m = 0;
  for (std::size_t l = 0; l < w; ++l) m |= static_cast<std::uint64_t>(p[l] <= c) << l;
  return m;
}

#if defined(__AVX2__)
template <>
inline std::uint64_t lanes_le<32, std::int64_t>(const std::int64_t* p, std::int64_t c) {
  const __m256i cv = _mm256_set1_epi64x(c);
  std::uint32_t gt = 0;
  for (int i = 0; i < 8; ++i) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + 4 * i));
    gt |= static_cast<std::uint32_t>(_mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpgt_epi64(x, cv)))) << (4 * i);
  }
  return static_cast<std::uint32_t>(~gt);
}

template <>
inline std::uint64_t lanes_le<16, std::int64_t>(const std::int64_t* p, std::int64_t c) {
  const __m256i cv = _mm256_set1_epi64x(c);
  std::uint32_t gt = 0;
  for (int i = 0; i < 4; ++i) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + 4 * i));
    gt |= static_cast<std::uint32_t>(_mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpgt_epi64(x, cv)))) << (4 * i);
  }
  return ~gt & 0xFFFFu;
}

inline __m256i le_u16(const std::uint16_t* p, __m256i cv) {
  __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
  return _mm256_cmpeq_epi16(_mm256_max_epu16(x, cv), cv);
}

template <>
inline std::uint64_t lanes_le<32, std::uint16_t>(const std::uint16_t* p, std::uint16_t c) {
  const __m256i cv = _mm256_set1_epi16(static_cast<short>(c));
  __m256i packed = _mm256_packs_epi16(le_u16(p, cv), le_u16(p + 16, cv));
  packed = _mm256_permute4x64_epi64(packed, 0xD8);
  return static_cast<std::uint32_t>(_mm256_movemask_epi8(packed));
}

template <>
inline std::uint64_t lanes_le<16, std::uint16_t>(const std::uint16_t* p, std::uint16_t c) {
  const __m256i cv = _mm256_set1_epi16(static_cast<short>(c));
  __m256i a = le_u16(p, cv);
  __m256i packed = _mm256_permute4x64_epi64(_mm256_packs_epi16(a, a), 0xD8);
  return static_cast<std::uint32_t>(_mm256_movemask_epi8(packed)) & 0xFFFFu;
}

template <>
inline std::uint64_t lanes_le<32, std::uint32_t>(const std::uint32_t* p, std::uint32_t c) {
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  std::uint32_t m = 0;
  for (int i = 0; i < 4; ++i) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + 8 * i));
    __m256i le = _mm256_cmpeq_epi32(_mm256_max_epu32(x, cv), cv);
    m |= static_cast<std::uint32_t>(_mm256_movemask_ps(_mm256_castsi256_ps(le))) << (8 * i);
  }
  return m;
}

template <>
inline std::uint64_t lanes_le<16, std::uint32_t>(const std::uint32_t* p, std::uint32_t c) {
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  std::uint32_t m = 0;
  for (int i = 0; i < 2; ++i) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + 8 * i));
    __m256i le = _mm256_cmpeq_epi32(_mm256_max_epu32(x, cv), cv);
    m |= static_cast<std::uint32_t>(_mm256_movemask_ps(_mm256_castsi256_ps(le))) << (8 * i);
  }
  return m;
}
#endif

template <class T>
inline bool survivors_have_subset(std::uint64_t mask, std::size_t base, const std::uint64_t* ng, std::size_t w,
                                  const std::uint64_t* cand) {
  if (w == 0) return mask != 0;
  for (; mask != 0; mask &= mask - 1) {
    const auto i = base + static_cast<std::size_t>(std::countr_zero(mask));
    if (words_subset({ng + i * w, w}, {cand, w})) return true;
  }
  return false;
}

template <int W, class T>
bool batched_fixed(const LabelColumns<T>& c, std::size_t begin, std::size_t end, const LabelRef<T>& cand) {
  const auto k = c.key_count();
  const auto w = c.ng_words();
  const auto* cost = c.cost_data();
  std::size_t i = begin;
  for (; i + W <= end; i += W) {
    std::uint64_t mask = lanes_le<W>(cost + i, cand.cost);
    for (std::size_t r = 0; r < k && mask != 0; ++r) mask &= lanes_le<W>(c.key_data(r) + i, cand.keys[r]);
    if (mask != 0 && survivors_have_subset<T>(mask, i, c.ng_data(), w, cand.ng)) return true;
  }
  return dominated_by_any_scalar(c, i, end, cand);
}

}  // namespace detail

/// Same result as dominated_by_any_scalar. Works on chunks of `lane_width`
/// labels (1..64): one field at a time across all lanes, stopping a chunk as
/// soon as no lane survives; ng subsets are tested only on surviving lanes.
template <class T>
bool dominated_by_any_batched(const LabelColumns<T>& c, std::size_t begin, std::size_t end, const LabelRef<T>& cand,
                              std::size_t lane_width) {
  switch (lane_width) {
    case 8:
      return detail::batched_fixed<8>(c, begin, end, cand);
    case 16:
      return detail::batched_fixed<16>(c, begin, end, cand);
    case 32:
      return detail::batched_fixed<32>(c, begin, end, cand);
    default:
      break;
  }
  if (lane_width == 0 || lane_width > 64) lane_width = 32;
  const auto k = c.key_count();
  const auto w = c.ng_words();
  std::size_t i = begin;
  for (; i + lane_width <= end; i += lane_width) {
    std::uint64_t mask = detail::lanes_le_dyn(c.cost_data() + i, cand.cost, lane_width);
    for (std::size_t r = 0; r < k && mask != 0; ++r) {
      mask &= detail::lanes_le_dyn(c.key_data(r) + i, cand.keys[r], lane_width);
    }
    if (mask != 0 && detail::survivors_have_subset<T>(mask, i, c.ng_data(), w, cand.ng)) return true;
  }
  return dominated_by_any_scalar(c, i, end, cand);
}

/// Flat candidate storage filled while pulling into one bucket.
template <class T>
class CandidateBuffer {
 public:
  CandidateBuffer(std::size_t key_count, std::size_t ng_words) : k_(key_count), w_(ng_words) {}

  std::size_t size() const { return cost_.size(); }
  void clear() {
    cost_.clear();
    keys_.clear();
    ng_.clear();
    parent_.clear();
    via_.clear();
  }
  /// Reserves a slot and returns writable key / ng spans for it.
  void push(std::int64_t cost, LabelHandle parent, EdgeId via) {
    cost_.push_back(cost);
    keys_.resize(keys_.size() + k_);
    ng_.resize(ng_.size() + w_);
    parent_.push_back(parent);
    via_.push_back(via);
  }
  void pop() {
    cost_.pop_back();
    keys_.resize(keys_.size() - k_);
    ng_.resize(ng_.size() - w_);
    parent_.pop_back();
    via_.pop_back();
  }
  T* keys(std::size_t i) { return keys_.data() + i * k_; }
  std::uint64_t* ng(std::size_t i) { return ng_.data() + i * w_; }
  LabelRef<T> ref(std::size_t i) const { return {cost_[i], keys_.data() + i * k_, ng_.data() + i * w_}; }
  LabelHandle parent(std::size_t i) const { return parent_[i]; }
  EdgeId via(std::size_t i) const { return via_[i]; }
  std::size_t key_count() const { return k_; }
  std::size_t ng_words() const { return w_; }

 private:
  std::size_t k_, w_;
  std::vector<std::int64_t> cost_;
  std::vector<T> keys_;
  std::vector<std::uint64_t> ng_;
  std::vector<LabelHandle> parent_;
  std::vector<EdgeId> via_;
};

struct InsertOptions {
  bool prune = true;
  bool batched = false;
  std::size_t lane_width = 32;
};

template <class T>
bool dominated_by_any(const LabelColumns<T>& c, const LabelRef<T>& cand, const InsertOptions& opt) {
  return opt.batched ? dominated_by_any_batched(c, 0, c.size(), cand, opt.lane_width)
                     : dominated_by_any_scalar(c, 0, c.size(), cand);
}

/// Sorts candidates lexicographically (ties: ng popcount, ng words, parent,
/// edge) and appends those not dominated by any label in `earlier` (finished
/// buckets of the same vertex and direction) or already accepted into
/// `target`. Returns the number accepted. With prune off every candidate is
/// kept, in sorted order.
template <class T>
std::size_t insert_candidates(LabelColumns<T>& target, std::span<const LabelColumns<T>* const> earlier,
                              const CandidateBuffer<T>& cand, const InsertOptions& opt) {
  const auto k = cand.key_count();
  const auto w = cand.ng_words();
  std::vector<std::uint32_t> order(cand.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<std::uint32_t> pop(cand.size());
  for (std::uint32_t i = 0; i < pop.size(); ++i) {
    std::uint32_t n = 0;
    const auto* ng = cand.ref(i).ng;
    for (std::size_t j = 0; j < w; ++j) n += static_cast<std::uint32_t>(std::popcount(ng[j]));
    pop[i] = n;
  }
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    const auto ra = cand.ref(a), rb = cand.ref(b);
    if (auto o = lex_compare(ra, rb, k); o != LexOrder::equal) return o == LexOrder::before;
    if (pop[a] != pop[b]) return pop[a] < pop[b];
    for (std::size_t j = 0; j < w; ++j) {
      if (ra.ng[j] != rb.ng[j]) return ra.ng[j] < rb.ng[j];
    }
    if (cand.parent(a) != cand.parent(b)) return cand.parent(a) < cand.parent(b);
    return cand.via(a) < cand.via(b);
  });
  std::size_t accepted = 0;
  for (auto i : order) {
    const auto r = cand.ref(i);
    if (opt.prune) {
      bool dominated = dominated_by_any(target, r, opt);
      for (std::size_t e = 0; e < earlier.size() && !dominated; ++e) dominated = dominated_by_any(*earlier[e], r, opt);
      if (dominated) continue;
    }
    target.push_back(r.cost, r.keys, r.ng, cand.parent(i), cand.via(i));
    ++accepted;
  }
  return accepted;
}

}  // namespace rcsp
