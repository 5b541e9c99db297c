#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rcsp/types.hpp"
#include "rcsp/vertex_set.hpp"

namespace rcsp {

enum class ResourceKind : std::uint8_t { interval_additive, interval_timewindow, bitset_ng };

std::string_view to_string(ResourceKind kind);
std::optional<ResourceKind> resource_kind_from_string(std::string_view text);

inline bool is_interval(ResourceKind k) { return k != ResourceKind::bitset_ng; }

struct ResourceSpec {
  ResourceId id = 0;
  ResourceKind kind = ResourceKind::interval_timewindow;
  bool operator==(const ResourceSpec&) const = default;
};

struct Edge {
  VertexId tail = 0;
  VertexId head = 0;
  Cost cost;
  /// Consumption per resource id; entries of bitset resources are unused (0).
  std::vector<Accum> q;
  bool operator==(const Edge&) const = default;
};

/// Plain description filled by the parser and the generator. Turned into an
/// immutable Instance by Instance::create, which validates every invariant.
struct InstanceSpec {
  std::vector<ResourceSpec> resources;  // index == id
  ResourceId primary = 0;
  std::size_t vertex_count = 0;
  /// lower[r][v] / upper[r][v] for interval resources (empty for bitset ones).
  std::vector<std::vector<Accum>> lower, upper;
  /// ng[r][v] for bitset resources (empty for interval ones).
  std::vector<std::vector<VertexSet>> ng;
  std::vector<Edge> edges;
  VertexId source = 0;
  VertexId sink = 0;

  bool operator==(const InstanceSpec&) const = default;
};

/// Time-window or additive extension of one interval accumulation.
///
/// Forward: time window max(lo, value + q), additive value + q; infeasible
/// when above `hi` (or below `lo` for additive). Backward: min(hi, value - q),
/// infeasible when below `lo`. Backward values are latest feasible
/// accumulations on the forward scale, so both kinds clamp to `hi`.
std::optional<Accum> apply_ref(ResourceKind kind, Accum value, Accum q, Accum lo, Accum hi, Direction dir);

/// ng memory extension into `head`. Returns false (infeasible) if head is
/// already remembered; otherwise writes (mem & ng_head) | {head} to out.
/// `out` may alias `mem`.
bool apply_ng(std::span<const std::uint64_t> mem, VertexId head, std::span<const std::uint64_t> ng_head,
              std::span<std::uint64_t> out);

std::optional<VertexSet> apply_ng(const VertexSet& mem, VertexId head, const VertexSet& ng_head);

class Instance {
 public:
  /// Validates and freezes a spec. Throws ValidationError naming the violated
  /// invariant.
  static Instance create(InstanceSpec spec);

  const InstanceSpec& spec() const { return spec_; }
  std::size_t vertex_count() const { return spec_.vertex_count; }
  std::size_t edge_count() const { return spec_.edges.size(); }
  std::size_t resource_count() const { return spec_.resources.size(); }
  VertexId source() const { return spec_.source; }
  VertexId sink() const { return spec_.sink; }
  ResourceId primary() const { return spec_.primary; }
  const Edge& edge(EdgeId e) const { return spec_.edges[e]; }
  std::span<const Edge> edges() const { return spec_.edges; }
  const ResourceSpec& resource(ResourceId r) const { return spec_.resources[r]; }

  Accum lower(ResourceId r, VertexId v) const { return spec_.lower[r][v]; }
  Accum upper(ResourceId r, VertexId v) const { return spec_.upper[r][v]; }
  const VertexSet& ng(ResourceId r, VertexId v) const { return spec_.ng[r][v]; }

  std::span<const EdgeId> in_edges(VertexId v) const { return in_[v]; }
  std::span<const EdgeId> out_edges(VertexId v) const { return out_[v]; }

  /// Interval resource ids in ascending order; the primary is among them.
  std::span<const ResourceId> interval_resources() const { return interval_; }
  std::span<const ResourceId> bitset_resources() const { return bitset_; }
  /// Position of the primary resource within interval_resources().
  std::size_t primary_slot() const { return primary_slot_; }

  /// Extends resource r across edge e. Forward the edge is walked tail->head
  /// and the head's bounds apply; backward it is walked head->tail.
  std::optional<Accum> extend(ResourceId r, Accum value, EdgeId e, Direction dir) const;

 private:
  InstanceSpec spec_;
  std::vector<std::vector<EdgeId>> in_, out_;
  std::vector<ResourceId> interval_, bitset_;
  std::size_t primary_slot_ = 0;
};

}  // namespace rcsp
