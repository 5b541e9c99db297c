#include "rcsp/instance.hpp"

#include <algorithm>
#include <charconv>

namespace rcsp {

Cost Cost::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty cost");
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  auto dot = text.find('.', pos);
  auto whole_part = text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole_part.empty() && frac_part.empty()) throw std::invalid_argument("bad cost '" + std::string(text) + "'");
  if (frac_part.size() > 4) throw std::invalid_argument("cost has more than 4 decimals: '" + std::string(text) + "'");
  auto all_digits = [](std::string_view s) { return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }); };
  if (!all_digits(whole_part) || !all_digits(frac_part)) throw std::invalid_argument("bad cost '" + std::string(text) + "'");

  std::int64_t whole = 0;
  if (!whole_part.empty()) {
    auto [p, ec] = std::from_chars(whole_part.data(), whole_part.data() + whole_part.size(), whole);
    if (ec != std::errc{}) throw std::invalid_argument("cost out of range '" + std::string(text) + "'");
  }
  std::int64_t frac = 0;
  for (std::size_t i = 0; i < 4; ++i) frac = frac * 10 + (i < frac_part.size() ? frac_part[i] - '0' : 0);
  std::int64_t ticks = whole * kScale + frac;
  return from_ticks(negative ? -ticks : ticks);
}

std::string Cost::to_string() const {
  std::int64_t t = ticks_;
  std::string out;
  if (t < 0) {
    out.push_back('-');
    t = -t;
  }
  out += std::to_string(t / kScale);
  auto frac = t % kScale;
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, 4 - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

std::string_view to_string(ResourceKind kind) {
  switch (kind) {
    case ResourceKind::interval_additive:
      return "interval-additive";
    case ResourceKind::interval_timewindow:
      return "interval-timewindow";
    case ResourceKind::bitset_ng:
      return "bitset-ng";
  }
  return "?";
}

std::optional<ResourceKind> resource_kind_from_string(std::string_view text) {
  if (text == "interval-additive") return ResourceKind::interval_additive;
  if (text == "interval-timewindow") return ResourceKind::interval_timewindow;
  if (text == "bitset-ng") return ResourceKind::bitset_ng;
  return std::nullopt;
}

std::optional<Accum> apply_ref(ResourceKind kind, Accum value, Accum q, Accum lo, Accum hi, Direction dir) {
  if (dir == Direction::forward) {
    Accum next = value + q;
    if (kind == ResourceKind::interval_timewindow) {
      next = std::max(lo, next);
    } else if (next < lo) {
      return std::nullopt;
    }
    if (next > hi) return std::nullopt;
    return next;
  }
  Accum next = std::min(hi, value - q);
  if (next < lo) return std::nullopt;
  return next;
}

bool apply_ng(std::span<const std::uint64_t> mem, VertexId head, std::span<const std::uint64_t> ng_head,
              std::span<std::uint64_t> out) {
  if ((mem[head / 64] >> (head % 64)) & 1u) return false;
  for (std::size_t i = 0; i < mem.size(); ++i) out[i] = mem[i] & ng_head[i];
  out[head / 64] |= std::uint64_t{1} << (head % 64);
  return true;
}

std::optional<VertexSet> apply_ng(const VertexSet& mem, VertexId head, const VertexSet& ng_head) {
  VertexSet out = mem;
  if (!apply_ng(mem.words(), head, ng_head.words(), out.words())) return std::nullopt;
  return out;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

}  // namespace

Instance Instance::create(InstanceSpec spec) {
  const auto k = spec.resources.size();
  const auto n = spec.vertex_count;
  require(k > 0, "at least one resource is required");
  require(n >= 2, "at least two vertices are required");
  for (std::size_t r = 0; r < k; ++r) {
    require(spec.resources[r].id == r, "resource ids must be dense and ordered");
  }
  require(spec.primary < k, "primary resource id out of range");
  require(is_interval(spec.resources[spec.primary].kind), "primary resource must be interval-kind");
  require(spec.source < n && spec.sink < n, "source/sink out of range");
  require(spec.source != spec.sink, "source and sink must differ");

  spec.lower.resize(k);
  spec.upper.resize(k);
  spec.ng.resize(k);
  for (std::size_t r = 0; r < k; ++r) {
    if (is_interval(spec.resources[r].kind)) {
      require(spec.lower[r].size() == n && spec.upper[r].size() == n,
              "missing bounds for resource " + std::to_string(r));
      for (std::size_t v = 0; v < n; ++v) {
        require(spec.lower[r][v] <= spec.upper[r][v],
                "lower bound exceeds upper bound (resource " + std::to_string(r) + ", vertex " + std::to_string(v) + ")");
        if (spec.resources[r].kind == ResourceKind::interval_additive) {
          require(spec.lower[r][v] <= spec.lower[r][spec.source],
                  "additive lower bound above the source's lower bound (resource " + std::to_string(r) + ", vertex " +
                      std::to_string(v) + ")");
        }
      }
      spec.ng[r].clear();
    } else {
      require(spec.ng[r].size() == n, "missing ng sets for resource " + std::to_string(r));
      for (std::size_t v = 0; v < n; ++v) {
        require(spec.ng[r][v].words().size() == ng_words_for(n), "ng set has wrong width");
        require(spec.ng[r][v].contains(static_cast<VertexId>(v)),
                "ng set of vertex " + std::to_string(v) + " must contain the vertex itself");
      }
      spec.lower[r].clear();
      spec.upper[r].clear();
    }
  }

  Instance inst;
  inst.in_.resize(n);
  inst.out_.resize(n);
  for (std::size_t e = 0; e < spec.edges.size(); ++e) {
    auto& edge = spec.edges[e];
    require(edge.tail < n && edge.head < n, "edge " + std::to_string(e) + " endpoint out of range");
    require(edge.tail != edge.head, "self-loop on vertex " + std::to_string(edge.tail));
    edge.q.resize(k, 0);
    for (std::size_t r = 0; r < k; ++r) {
      if (!is_interval(spec.resources[r].kind)) {
        edge.q[r] = 0;
        continue;
      }
      require(edge.q[r] >= 0, "negative consumption on edge " + std::to_string(e));
    }
    require(edge.q[spec.primary] > 0, "primary consumption must be positive (edge " + std::to_string(e) + ")");
    inst.in_[edge.head].push_back(static_cast<EdgeId>(e));
    inst.out_[edge.tail].push_back(static_cast<EdgeId>(e));
  }

  for (ResourceId r = 0; r < k; ++r) {
    if (is_interval(spec.resources[r].kind)) {
      if (r == spec.primary) inst.primary_slot_ = inst.interval_.size();
      inst.interval_.push_back(r);
    } else {
      inst.bitset_.push_back(r);
    }
  }
  inst.spec_ = std::move(spec);
  return inst;
}

std::optional<Accum> Instance::extend(ResourceId r, Accum value, EdgeId e, Direction dir) const {
  const auto& edge = spec_.edges[e];
  VertexId to = dir == Direction::forward ? edge.head : edge.tail;
  return apply_ref(spec_.resources[r].kind, value, edge.q[r], spec_.lower[r][to], spec_.upper[r][to], dir);
}

}  // namespace rcsp
