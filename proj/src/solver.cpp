#include "rcsp/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace rcsp {

RunConfig RunConfig::preset(std::string_view name) {
  RunConfig c;
  c.name = std::string(name);
  if (name == "base") {
  } else if (name == "parallel") {
    c.parallel = true;
  } else if (name == "bidir") {
    c.bidirectional = true;
  } else if (name == "simd") {
    c.vectorised = true;
  } else if (name == "all") {
    c.parallel = c.bidirectional = c.vectorised = true;
  } else {
    throw std::invalid_argument("unknown config '" + std::string(name) + "' (base|parallel|bidir|simd|all)");
  }
  return c;
}

unsigned RunConfig::workers() const {
  if (!parallel) return 1;
  return threads != 0 ? threads : default_thread_count();
}

std::vector<std::string> preset_names() { return {"base", "parallel", "bidir", "simd", "all"}; }

Path replay_path(const Instance& inst, const std::vector<EdgeId>& edges) {
  const auto n = inst.vertex_count();
  Path p;
  VertexId at = inst.source();
  p.vertices.push_back(at);
  p.values.assign(inst.resource_count(), 0);
  std::vector<VertexSet> mem(inst.resource_count());
  for (auto r : inst.interval_resources()) p.values[r] = inst.lower(r, at);
  for (auto r : inst.bitset_resources()) mem[r] = VertexSet(n, {at});
  for (auto e : edges) {
    if (e >= inst.edge_count()) throw InternalError("replay: edge id out of range");
    const auto& edge = inst.edge(e);
    if (edge.tail != at) throw InternalError("replay: edge " + std::to_string(e) + " does not continue the path");
    for (auto r : inst.interval_resources()) {
      auto next = inst.extend(r, p.values[r], e, Direction::forward);
      if (!next) throw InternalError("replay: resource " + std::to_string(r) + " infeasible on edge " + std::to_string(e));
      p.values[r] = *next;
    }
    for (auto r : inst.bitset_resources()) {
      auto next = apply_ng(mem[r], edge.head, inst.ng(r, edge.head));
      if (!next) throw InternalError("replay: ng revisit of vertex " + std::to_string(edge.head));
      mem[r] = std::move(*next);
    }
    p.cost += edge.cost;
    at = edge.head;
    p.vertices.push_back(at);
    p.edges.push_back(e);
  }
  return p;
}

struct Solver::EngineBase {
  EngineBase(const Instance& inst, RunConfig cfg)
      : inst(inst), cfg(std::move(cfg)), layout(std::make_shared<BucketLayout>(build_buckets(inst))) {
    graph = build_dependencies(inst, layout, this->cfg.bidirectional ? SearchMode::bidir : SearchMode::mono);
    if (this->cfg.reduce_edges) reduce_implied_edges(graph);
  }
  virtual ~EngineBase() = default;

  virtual SolveResult solve() = 0;
  virtual std::vector<StoredLabel> labels(Direction dir, BucketId bucket) const = 0;
  virtual Path reconstruct(Direction dir, LabelHandle h) const = 0;
  virtual Path reconstruct(const Emission& em) const = 0;

  const Instance& inst;
  RunConfig cfg;
  std::shared_ptr<BucketLayout> layout;
  JobGraph graph;
  std::vector<Outcome> outcomes;
  std::vector<Emission> emissions;
};

namespace {

constexpr std::uint8_t kUnset = 0xFF;
constexpr std::uint8_t kClaimNone = 0, kClaimF = 1, kClaimB = 2;

template <class T>
class Engine final : public Solver::EngineBase {
 public:
  Engine(const Instance& inst, RunConfig cfg) : EngineBase(inst, std::move(cfg)) {
    const auto n = inst.vertex_count();
    for (auto r : inst.interval_resources()) {
      rid_.push_back(r);
      kind_.push_back(inst.resource(r).kind);
      Accum lo = inst.lower(r, 0), hi = inst.upper(r, 0);
      for (VertexId v = 1; v < n; ++v) {
        lo = std::min(lo, inst.lower(r, v));
        hi = std::max(hi, inst.upper(r, v));
      }
      lo_.push_back(lo);
      hi_.push_back(hi);
    }
    bits_.assign(inst.bitset_resources().begin(), inst.bitset_resources().end());
    k_ = rid_.size();
    wp_ = ng_words_for(n);
    w_ = bits_.size() * wp_;
    p_ = inst.primary_slot();
    bidir_ = this->cfg.bidirectional;
  }

  SolveResult solve() override {
    const std::size_t B = layout->bucket_count();
    const auto J = graph.job_count;
    fwd_.assign(B, LabelColumns<T>(k_, w_));
    bwd_.assign(bidir_ ? B : 0, LabelColumns<T>(k_, w_));
    claim_.reset(new std::atomic<std::uint8_t>[B]);
    status_.reset(new std::atomic<std::uint8_t>[J]);
    for (std::size_t b = 0; b < B; ++b) claim_[b].store(kClaimNone);
    for (std::size_t j = 0; j < J; ++j) status_[j].store(kUnset);
    best_.store(std::numeric_limits<std::int64_t>::max());
    const unsigned workers = cfg.workers();
    locals_.clear();
    for (unsigned w = 0; w < workers; ++w) locals_.emplace_back(k_, w_);
    emissions.clear();

    const auto s = inst.source();
    const auto t = inst.sink();
    if (bidir_) {
      claim_[layout->id(s, 0)].store(kClaimF);
      claim_[layout->id(t, layout->levels(t) - 1)].store(kClaimB);
    }

    DependencyTracker tracker(graph);
    JobBody body = [this](JobId j, unsigned w) {
      Outcome o;
      switch (graph.kind(j)) {
        case JobKind::forward:
          o = process_forward(j, locals_[w]);
          break;
        case JobKind::backward:
          o = process_backward(j, locals_[w]);
          break;
        default:
          o = process_splice(j, locals_[w]);
          break;
      }
      status_[j].store(static_cast<std::uint8_t>(o));
      return o;
    };

    const auto t0 = std::chrono::steady_clock::now();
    auto stats = execute(tracker, body, bidir_ ? QueuePolicy::midpoint_balance : QueuePolicy::fifo, workers);
    if (stats.deadlock) {
      std::string names;
      for (std::size_t i = 0; i < stats.stuck.size() && i < 8; ++i) names += " " + graph.name(stats.stuck[i]);
      throw InternalError("scheduler deadlock; stuck frontier:" + names);
    }

    SolveResult res;
    res.stats = stats;
    outcomes.assign(J, Outcome::processed);
    for (JobId j = 0; j < J; ++j) {
      outcomes[j] = static_cast<Outcome>(status_[j].load());
      if (graph.kind(j) == JobKind::splice) {
        if (outcomes[j] == Outcome::processed) ++res.splices_run;
      } else if (outcomes[j] == Outcome::processed) {
        ++res.buckets_processed;
      }
    }
    for (auto& l : locals_) res.labels_created += l.labels;

    if (!bidir_) {
      std::optional<LabelHandle> best;
      std::vector<T> ka(k_), kb(k_);
      for (std::uint32_t lv = 0; lv < layout->levels(t); ++lv) {
        const auto b = layout->id(t, lv);
        const auto& c = fwd_[b];
        for (std::uint32_t i = 0; i < c.size(); ++i) {
          if (!best) {
            best = LabelHandle{b, i};
            continue;
          }
          const auto ra = label_ref(c, i, ka.data());
          const auto& bc = fwd_[best->bucket];
          const auto rb = label_ref(bc, best->index, kb.data());
          auto o = lex_compare(ra, rb, k_);
          if (o == LexOrder::before ||
              (o == LexOrder::equal && std::lexicographical_compare(ra.ng, ra.ng + w_, rb.ng, rb.ng + w_))) {
            best = LabelHandle{b, i};
          }
        }
      }
      if (best) {
        res.feasible = true;
        res.cost = Cost::from_ticks(fwd_[best->bucket].cost(best->index));
        res.path = reconstruct(Direction::forward, *best);
      }
    } else {
      std::optional<Emission> best;
      for (auto& l : locals_) {
        if (l.best && (!best || *l.best < *best)) best = l.best;
        if (cfg.record_emissions) emissions.insert(emissions.end(), l.emitted.begin(), l.emitted.end());
      }
      std::sort(emissions.begin(), emissions.end());
      if (best) {
        res.feasible = true;
        res.cost = best->cost;
        res.path = reconstruct(*best);
      }
    }
    res.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
  }

  std::vector<StoredLabel> labels(Direction dir, BucketId b) const override {
    std::vector<StoredLabel> out;
    const auto& store = dir == Direction::forward ? fwd_ : bwd_;
    if (b >= store.size()) return out;
    const auto& c = store[b];
    for (std::size_t i = 0; i < c.size(); ++i) {
      StoredLabel l;
      l.cost = Cost::from_ticks(c.cost(i));
      for (std::size_t r = 0; r < k_; ++r) l.values.push_back(decode(dir, r, c.key(r, i)));
      auto ng = c.ng(i);
      l.ng.assign(ng.begin(), ng.end());
      l.parent = c.parent(i);
      l.via = c.via(i);
      out.push_back(std::move(l));
    }
    return out;
  }

  Path reconstruct(Direction dir, LabelHandle h) const override {
    const auto& store = dir == Direction::forward ? fwd_ : bwd_;
    const auto start = h;
    std::vector<EdgeId> edges;
    for (auto cur = h; store[cur.bucket].via(cur.index) != kNoEdge; cur = store[cur.bucket].parent(cur.index)) {
      edges.push_back(store[cur.bucket].via(cur.index));
      if (edges.size() > inst.edge_count() * layout->bucket_count() + 1) throw InternalError("parent chain loops");
    }
    const auto& c = store[start.bucket];
    if (dir == Direction::forward) {
      std::reverse(edges.begin(), edges.end());
      Path p = replay_path(inst, edges);
      if (p.vertices.back() != layout->vertex(start.bucket)) throw InternalError("replay ends at the wrong vertex");
      if (p.cost.ticks() != c.cost(start.index)) throw InternalError("replay cost mismatch");
      for (std::size_t r = 0; r < k_; ++r) {
        if (p.values[rid_[r]] != decode(dir, r, c.key(r, start.index))) throw InternalError("replay state mismatch");
      }
      return p;
    }
    // Backward: edges run from the label's vertex to the sink; replay the
    // reversed extension from the sink's upper bounds.
    Path p;
    p.vertices.push_back(layout->vertex(start.bucket));
    for (auto e : edges) {
      if (inst.edge(e).tail != p.vertices.back()) throw InternalError("backward chain is not a path");
      p.vertices.push_back(inst.edge(e).head);
      p.edges.push_back(e);
      p.cost += inst.edge(e).cost;
    }
    if (p.vertices.back() != inst.sink()) throw InternalError("backward chain does not end at the sink");
    p.values.assign(inst.resource_count(), 0);
    for (auto r : inst.interval_resources()) p.values[r] = inst.upper(r, inst.sink());
    for (auto it = p.edges.rbegin(); it != p.edges.rend(); ++it) {
      for (auto r : inst.interval_resources()) {
        auto v = inst.extend(r, p.values[r], *it, Direction::backward);
        if (!v) throw InternalError("backward replay infeasible");
        p.values[r] = *v;
      }
    }
    if (p.cost.ticks() != c.cost(start.index)) throw InternalError("backward replay cost mismatch");
    for (std::size_t r = 0; r < k_; ++r) {
      if (p.values[rid_[r]] != decode(dir, r, c.key(r, start.index))) throw InternalError("backward replay state mismatch");
    }
    return p;
  }

  Path reconstruct(const Emission& em) const override {
    auto f = reconstruct(Direction::forward, em.forward);
    std::vector<EdgeId> edges = f.edges;
    if (em.edge != kNoEdge) {
      edges.push_back(em.edge);
      auto b = reconstruct(Direction::backward, em.backward);
      edges.insert(edges.end(), b.edges.begin(), b.edges.end());
    }
    Path p = replay_path(inst, edges);
    if (p.vertices.back() != inst.sink()) throw InternalError("joined path does not end at the sink");
    if (p.cost != em.cost) throw InternalError("joined path cost mismatch");
    return p;
  }

 private:
  struct Local {
    Local(std::size_t k, std::size_t w) : cand(k, w), keys(k), mem(w) {}
    CandidateBuffer<T> cand;
    std::vector<const LabelColumns<T>*> earlier;
    std::vector<T> keys;
    std::vector<std::uint64_t> mem;
    std::size_t labels = 0;
    std::optional<Emission> best;
    std::vector<Emission> emitted;
  };

  Accum decode(Direction dir, std::size_t r, T key) const {
    return dir == Direction::forward ? lo_[r] + static_cast<Accum>(key) : hi_[r] - static_cast<Accum>(key);
  }
  T encode(Direction dir, std::size_t r, Accum v) const {
    return static_cast<T>(dir == Direction::forward ? v - lo_[r] : hi_[r] - v);
  }

  Outcome status(JobId j) const { return static_cast<Outcome>(status_[j].load()); }
  bool processed(JobKind k, BucketId b) const { return status(graph.job(k, b)) == Outcome::processed; }

  InsertOptions insert_options() const { return {cfg.prune, cfg.vectorised, cfg.lane_width}; }

  // Extends label i of `src` over edge e (forward: into the head, backward:
  // into the tail). Writes keys/ng to out_keys/out_ng and returns false when
  // infeasible or when the primary value falls outside `target`.
  bool extend(Direction dir, const LabelColumns<T>& src, std::size_t i, EdgeId e, const Interval& target, T* out_keys,
              std::uint64_t* out_ng) const {
    const auto& edge = inst.edge(e);
    const VertexId to = dir == Direction::forward ? edge.head : edge.tail;
    auto step = [&](std::size_t r) -> bool {
      const auto rid = rid_[r];
      auto v = apply_ref(kind_[r], decode(dir, r, src.key(r, i)), edge.q[rid], inst.lower(rid, to), inst.upper(rid, to),
                         dir);
      if (!v) return false;
      if (r == p_ && !target.contains(*v)) return false;
      out_keys[r] = encode(dir, r, *v);
      return true;
    };
    if (!step(p_)) return false;
    for (std::size_t r = 0; r < k_; ++r) {
      if (r != p_ && !step(r)) return false;
    }
    const auto* mem = src.ng_data() + i * w_;
    for (std::size_t b = 0; b < bits_.size(); ++b) {
      const auto off = b * wp_;
      if (!apply_ng({mem + off, wp_}, to, inst.ng(bits_[b], to).words(), {out_ng + off, wp_})) return false;
    }
    return true;
  }

  void seed(Direction dir, BucketId b, VertexId v) {
    std::vector<T> keys(k_);
    for (std::size_t r = 0; r < k_; ++r) {
      keys[r] = encode(dir, r, dir == Direction::forward ? inst.lower(rid_[r], v) : inst.upper(rid_[r], v));
    }
    std::vector<std::uint64_t> ng(w_, 0);
    for (std::size_t bi = 0; bi < bits_.size(); ++bi) ng[bi * wp_ + v / 64] |= std::uint64_t{1} << (v % 64);
    (dir == Direction::forward ? fwd_ : bwd_)[b].push_back(0, keys.data(), ng.data(), LabelHandle{}, kNoEdge);
  }

  void pull(Direction dir, JobId j, const Interval& target, Local& L) {
    auto& cand = L.cand;
    const auto kind = dir == Direction::forward ? JobKind::forward : JobKind::backward;
    const auto& store = dir == Direction::forward ? fwd_ : bwd_;
    for (const auto& src : graph.pulls[j]) {
      const auto cost = inst.edge(src.edge).cost.ticks();
      for (auto k = src.first; k <= src.last; ++k) {
        const auto sb = layout->id(src.from, k);
        if (!processed(kind, sb)) continue;
        const auto& cols = store[sb];
        for (std::uint32_t i = 0; i < cols.size(); ++i) {
          cand.push(cols.cost(i) + cost, LabelHandle{sb, i}, src.edge);
          const auto last = cand.size() - 1;
          if (!extend(dir, cols, i, src.edge, target, cand.keys(last), cand.ng(last))) cand.pop();
        }
      }
    }
  }

  void emit(Local& L, const Emission& em) {
    auto ticks = em.cost.ticks();
    auto cur = best_.load();
    while (ticks < cur && !best_.compare_exchange_weak(cur, ticks)) {
    }
    if (!L.best || em < *L.best) L.best = em;
    if (cfg.record_emissions) L.emitted.push_back(em);
  }

  Outcome process_forward(JobId j, Local& L) {
    const auto b = graph.bucket(j);
    const auto y = layout->vertex(b);
    const auto n = layout->level(b);
    if (bidir_) {
      auto c = claim_[b].load();
      if (c == kClaimB) return Outcome::cancelled;
      if (c == kClaimNone && !claim_[b].compare_exchange_strong(c, kClaimF) && c != kClaimF) return Outcome::cancelled;
    }
    auto& target = fwd_[b];
    if (y == inst.source() && n == 0) {
      seed(Direction::forward, b, y);
    } else {
      L.cand.clear();
      pull(Direction::forward, j, layout->interval(b), L);
      L.earlier.clear();
      for (std::uint32_t m = 0; m < n; ++m) {
        const auto eb = layout->id(y, m);
        if (processed(JobKind::forward, eb)) L.earlier.push_back(&fwd_[eb]);
      }
      insert_candidates<T>(target, L.earlier, L.cand, insert_options());
    }
    L.labels += target.size();
    if (bidir_ && y == inst.sink()) {
      for (std::uint32_t i = 0; i < target.size(); ++i) {
        emit(L, {Cost::from_ticks(target.cost(i)), LabelHandle{b, i}, LabelHandle{}, kNoEdge});
      }
    }
    return Outcome::processed;
  }

  Outcome process_backward(JobId j, Local& L) {
    const auto b = graph.bucket(j);
    const auto x = layout->vertex(b);
    const auto n = layout->level(b);
    const bool is_seed = x == inst.sink() && n + 1 == layout->levels(x);
    if (!is_seed) {
      // A backward bucket only stores labels when everything it could pull
      // from was itself stored backward.
      if (n + 1 < layout->levels(x) && !processed(JobKind::backward, layout->id(x, n + 1))) return Outcome::cancelled;
      for (const auto& src : graph.pulls[j]) {
        for (auto k = src.first; k <= src.last; ++k) {
          if (!processed(JobKind::backward, layout->id(src.from, k))) return Outcome::cancelled;
        }
      }
      auto c = claim_[b].load();
      if (c == kClaimF) return Outcome::cancelled;
      if (c == kClaimNone && !claim_[b].compare_exchange_strong(c, kClaimB) && c != kClaimB) return Outcome::cancelled;
    }
    auto& target = bwd_[b];
    if (is_seed) {
      seed(Direction::backward, b, x);
    } else {
      L.cand.clear();
      pull(Direction::backward, j, layout->interval(b), L);
      L.earlier.clear();
      for (auto m = n + 1; m < layout->levels(x); ++m) L.earlier.push_back(&bwd_[layout->id(x, m)]);
      insert_candidates<T>(target, L.earlier, L.cand, insert_options());
    }
    L.labels += target.size();
    return Outcome::processed;
  }

  Outcome process_splice(JobId j, Local& L) {
    const auto b = graph.bucket(j);
    if (!processed(JobKind::backward, b)) return Outcome::skipped;
    const auto y = layout->vertex(b);
    const auto n = layout->level(b);
    const auto top = layout->levels(y);
    const auto target = layout->interval(b);
    auto& keys = L.keys;
    auto& mem = L.mem;
    std::vector<Accum> limit(k_);
    std::vector<std::uint64_t> allowed(w_);
    for (const auto& src : plan_pull_sources(inst, *layout, Direction::forward, y, n)) {
      const auto edge_cost = inst.edge(src.edge).cost.ticks();
      for (auto k = src.first; k <= src.last; ++k) {
        const auto xb = layout->id(src.from, k);
        if (claim_[xb].load() != kClaimF || !processed(JobKind::forward, xb)) continue;
        const auto& fc = fwd_[xb];
        for (std::uint32_t i = 0; i < fc.size(); ++i) {
          if (!extend(Direction::forward, fc, i, src.edge, target, keys.data(), mem.data())) continue;
          const std::int64_t cf = fc.cost(i) + edge_cost;
          // Backward label joins iff its backward key is <= limit on every
          // interval resource and its memories meet the forward ones only at y.
          for (std::size_t r = 0; r < k_; ++r) limit[r] = hi_[r] - decode(Direction::forward, r, keys[r]);
          for (std::size_t w = 0; w < w_; ++w) allowed[w] = ~mem[w];
          for (std::size_t bi = 0; bi < bits_.size(); ++bi) allowed[bi * wp_ + y / 64] |= std::uint64_t{1} << (y % 64);
          for (auto m = n; m < top; ++m) {
            const auto bb = layout->id(y, m);
            const auto& bc = bwd_[bb];
            for (std::uint32_t bi = 0; bi < bc.size(); ++bi) {
              const auto total = cf + bc.cost(bi);
              if (!cfg.record_emissions && total > best_.load()) break;
              bool ok = true;
              for (std::size_t r = 0; r < k_ && ok; ++r) ok = static_cast<Accum>(bc.key(r, bi)) <= limit[r];
              if (!ok) continue;
              if (!words_subset(bc.ng(bi), allowed)) continue;
              emit(L, {Cost::from_ticks(total), LabelHandle{xb, i}, LabelHandle{bb, bi}, src.edge});
            }
          }
        }
      }
    }
    return Outcome::processed;
  }

  std::vector<ResourceId> rid_;
  std::vector<ResourceKind> kind_;
  std::vector<Accum> lo_, hi_;
  std::vector<ResourceId> bits_;
  std::size_t k_ = 0, wp_ = 0, w_ = 0, p_ = 0;
  bool bidir_ = false;

  std::vector<LabelColumns<T>> fwd_, bwd_;
  std::unique_ptr<std::atomic<std::uint8_t>[]> claim_;
  std::unique_ptr<std::atomic<std::uint8_t>[]> status_;
  std::atomic<std::int64_t> best_{0};
  std::vector<Local> locals_;
};

bool fits_u16(const Instance& inst) {
  for (auto r : inst.interval_resources()) {
    Accum lo = inst.lower(r, 0), hi = inst.upper(r, 0);
    for (VertexId v = 1; v < inst.vertex_count(); ++v) {
      lo = std::min(lo, inst.lower(r, v));
      hi = std::max(hi, inst.upper(r, v));
    }
    if (hi - lo > 65535) return false;
    if (hi - lo > static_cast<Accum>(std::numeric_limits<std::uint32_t>::max())) {
      throw ValidationError("resource range of resource " + std::to_string(r) + " exceeds 32 bits");
    }
  }
  return true;
}

}  // namespace

Solver::Solver(const Instance& instance, RunConfig config) {
  if (config.lane_width == 0 || config.lane_width > 64) throw std::invalid_argument("lane width must be in 1..64");
  if (fits_u16(instance)) {
    engine_ = std::make_unique<Engine<std::uint16_t>>(instance, std::move(config));
  } else {
    engine_ = std::make_unique<Engine<std::uint32_t>>(instance, std::move(config));
  }
}

Solver::~Solver() = default;

SolveResult Solver::solve() { return engine_->solve(); }
const Instance& Solver::instance() const { return engine_->inst; }
const RunConfig& Solver::config() const { return engine_->cfg; }
const JobGraph& Solver::graph() const { return engine_->graph; }
const BucketLayout& Solver::layout() const { return *engine_->layout; }

std::vector<StoredLabel> Solver::labels(Direction dir, BucketId bucket) const { return engine_->labels(dir, bucket); }

std::vector<StoredLabel> Solver::vertex_labels(Direction dir, VertexId v) const {
  std::vector<StoredLabel> out;
  const auto& l = *engine_->layout;
  for (std::uint32_t lv = 0; lv < l.levels(v); ++lv) {
    auto part = labels(dir, l.id(v, lv));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Outcome Solver::outcome(JobId job) const { return engine_->outcomes.at(job); }
const std::vector<Emission>& Solver::emissions() const { return engine_->emissions; }
Path Solver::reconstruct(Direction dir, LabelHandle handle) const { return engine_->reconstruct(dir, handle); }
Path Solver::reconstruct(const Emission& emission) const { return engine_->reconstruct(emission); }

std::string Solver::label_dump_csv() const {
  std::ostringstream out;
  out << "direction,bucket,vertex,level,index,cost,values,parent\n";
  const auto& l = *engine_->layout;
  for (auto dir : {Direction::forward, Direction::backward}) {
    for (BucketId b = 0; b < l.bucket_count(); ++b) {
      auto ls = labels(dir, b);
      for (std::size_t i = 0; i < ls.size(); ++i) {
        out << (dir == Direction::forward ? "f" : "b") << ',' << b << ',' << l.vertex(b) << ',' << l.level(b) << ','
            << i << ',' << ls[i].cost.to_string() << ',';
        for (std::size_t r = 0; r < ls[i].values.size(); ++r) out << (r ? ";" : "") << ls[i].values[r];
        out << ',';
        if (ls[i].parent.valid()) {
          out << ls[i].parent.bucket << ':' << ls[i].parent.index;
        } else {
          out << '-';
        }
        out << '\n';
      }
    }
  }
  return out.str();
}

SolveResult solve(const Instance& instance, const RunConfig& config) { return Solver(instance, config).solve(); }

}  // namespace rcsp
