#include "rcsp/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace rcsp {
namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class Int>
Int to_int(std::string_view tok, std::size_t line, const char* what) {
  Int value{};
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || p != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(tok) + "'");
  }
  return value;
}

struct PendingVertex {
  std::size_t line = 0;
  std::map<ResourceId, std::pair<Accum, Accum>> bounds;
  std::map<ResourceId, std::vector<VertexId>> ng;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Instance run() {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text_.size()) {
      auto end = text_.find('\n', start);
      if (end == std::string_view::npos) end = text_.size();
      ++line_no;
      auto line = text_.substr(start, end - start);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      auto toks = tokenize(line);
      if (!toks.empty()) handle(toks, line_no);
      start = end + 1;
    }
    return finish(line_no);
  }

 private:
  void handle(const std::vector<std::string_view>& t, std::size_t ln) {
    if (!seen_header_) {
      if (t.size() != 2 || t[0] != "RCSP" || t[1] != "1") throw ParseError(ln, "expected header 'RCSP 1'");
      seen_header_ = true;
      return;
    }
    const auto kw = t[0];
    if (kw == "RESOURCES") {
      if (t.size() != 4 || t[2] != "PRIMARY") throw ParseError(ln, "expected 'RESOURCES <k> PRIMARY <id>'");
      if (resource_count_) throw ParseError(ln, "duplicate RESOURCES line");
      resource_count_ = to_int<std::size_t>(t[1], ln, "resource count");
      spec_.primary = to_int<ResourceId>(t[3], ln, "primary id");
      kinds_.assign(*resource_count_, std::nullopt);
    } else if (kw == "RESOURCE") {
      need_resources(ln);
      if (t.size() != 3) throw ParseError(ln, "expected 'RESOURCE <id> <kind>'");
      auto id = to_int<ResourceId>(t[1], ln, "resource id");
      if (id >= *resource_count_) throw ParseError(ln, "resource id out of range");
      auto kind = resource_kind_from_string(t[2]);
      if (!kind) throw ParseError(ln, "unknown resource kind '" + std::string(t[2]) + "'");
      if (kinds_[id]) throw ParseError(ln, "duplicate resource " + std::to_string(id));
      kinds_[id] = *kind;
    } else if (kw == "VERTEX") {
      need_resources(ln);
      if (t.size() < 2) throw ParseError(ln, "expected 'VERTEX <id> ...'");
      auto id = to_int<VertexId>(t[1], ln, "vertex id");
      if (vertices_.count(id)) throw ParseError(ln, "duplicate vertex " + std::to_string(id));
      PendingVertex pv;
      pv.line = ln;
      std::size_t i = 2;
      while (i < t.size()) {
        if (t[i] == "BOUNDS") {
          if (i + 3 >= t.size()) throw ParseError(ln, "expected 'BOUNDS <rid> <a> <b>'");
          auto rid = to_int<ResourceId>(t[i + 1], ln, "resource id");
          pv.bounds[rid] = {to_int<Accum>(t[i + 2], ln, "lower bound"), to_int<Accum>(t[i + 3], ln, "upper bound")};
          i += 4;
        } else if (t[i] == "NG") {
          if (i + 1 >= t.size()) throw ParseError(ln, "expected 'NG <rid> <v>...'");
          auto rid = to_int<ResourceId>(t[i + 1], ln, "resource id");
          auto& members = pv.ng[rid];
          i += 2;
          while (i < t.size() && t[i] != "BOUNDS" && t[i] != "NG") {
            members.push_back(to_int<VertexId>(t[i], ln, "ng member"));
            ++i;
          }
        } else {
          throw ParseError(ln, "unexpected token '" + std::string(t[i]) + "' in VERTEX");
        }
      }
      vertices_[id] = std::move(pv);
    } else if (kw == "EDGE") {
      need_resources(ln);
      if (t.size() < 5 || t[3] != "COST") throw ParseError(ln, "expected 'EDGE <tail> <head> COST <c> [Q <rid> <q>]...'");
      Edge e;
      e.tail = to_int<VertexId>(t[1], ln, "tail");
      e.head = to_int<VertexId>(t[2], ln, "head");
      try {
        e.cost = Cost::parse(t[4]);
      } catch (const std::invalid_argument& err) {
        throw ParseError(ln, err.what());
      }
      e.q.assign(*resource_count_, 0);
      std::size_t i = 5;
      while (i < t.size()) {
        if (t[i] != "Q" || i + 2 >= t.size()) throw ParseError(ln, "expected 'Q <rid> <q>'");
        auto rid = to_int<ResourceId>(t[i + 1], ln, "resource id");
        if (rid >= *resource_count_) throw ParseError(ln, "resource id out of range");
        e.q[rid] = to_int<Accum>(t[i + 2], ln, "consumption");
        i += 3;
      }
      edge_lines_.push_back(ln);
      spec_.edges.push_back(std::move(e));
    } else if (kw == "SOURCE" || kw == "SINK") {
      if (t.size() != 2) throw ParseError(ln, "expected '" + std::string(kw) + " <id>'");
      auto id = to_int<VertexId>(t[1], ln, "vertex id");
      (kw == "SOURCE" ? source_ : sink_) = id;
    } else {
      throw ParseError(ln, "unknown keyword '" + std::string(kw) + "'");
    }
  }

  void need_resources(std::size_t ln) const {
    if (!resource_count_) throw ParseError(ln, "RESOURCES line must come first");
  }

  Instance finish(std::size_t last_line) {
    if (!seen_header_) throw ParseError(last_line, "missing header 'RCSP 1'");
    if (!resource_count_) throw ParseError(last_line, "missing RESOURCES line");
    if (!source_) throw ParseError(last_line, "missing SOURCE");
    if (!sink_) throw ParseError(last_line, "missing SINK");
    const auto k = *resource_count_;
    for (std::size_t r = 0; r < k; ++r) {
      if (!kinds_[r]) throw ValidationError("resource " + std::to_string(r) + " not declared");
      spec_.resources.push_back({static_cast<ResourceId>(r), *kinds_[r]});
    }
    const auto n = vertices_.size();
    spec_.vertex_count = n;
    spec_.lower.assign(k, {});
    spec_.upper.assign(k, {});
    spec_.ng.assign(k, {});
    VertexId expect = 0;
    for (auto& [id, pv] : vertices_) {
      if (id != expect) throw ValidationError("vertex ids must be 0..n-1; missing vertex " + std::to_string(expect));
      ++expect;
      for (auto& [rid, _] : pv.bounds) {
        if (rid >= k || !is_interval(*kinds_[rid])) throw ParseError(pv.line, "BOUNDS on non-interval resource");
      }
      for (auto& [rid, _] : pv.ng) {
        if (rid >= k || is_interval(*kinds_[rid])) throw ParseError(pv.line, "NG on non-bitset resource");
      }
      for (std::size_t r = 0; r < k; ++r) {
        if (is_interval(*kinds_[r])) {
          auto it = pv.bounds.find(static_cast<ResourceId>(r));
          if (it == pv.bounds.end()) {
            throw ValidationError("vertex " + std::to_string(id) + " has no bounds for resource " + std::to_string(r));
          }
          spec_.lower[r].push_back(it->second.first);
          spec_.upper[r].push_back(it->second.second);
        } else {
          VertexSet set(n);
          set.insert(id);
          if (auto it = pv.ng.find(static_cast<ResourceId>(r)); it != pv.ng.end()) {
            for (auto m : it->second) {
              if (m >= n) throw ParseError(pv.line, "ng member " + std::to_string(m) + " out of range");
              set.insert(m);
            }
          }
          spec_.ng[r].push_back(std::move(set));
        }
      }
    }
    spec_.source = *source_;
    spec_.sink = *sink_;
    return Instance::create(std::move(spec_));
  }

  std::string_view text_;
  bool seen_header_ = false;
  std::optional<std::size_t> resource_count_;
  std::vector<std::optional<ResourceKind>> kinds_;
  std::map<VertexId, PendingVertex> vertices_;
  std::vector<std::size_t> edge_lines_;
  std::optional<VertexId> source_, sink_;
  InstanceSpec spec_;
};

}  // namespace

Instance parse_instance(std::string_view text) { return Parser(text).run(); }

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string serialize_instance(const Instance& inst) {
  const auto& s = inst.spec();
  std::ostringstream out;
  out << "RCSP 1\n";
  out << "RESOURCES " << s.resources.size() << " PRIMARY " << s.primary << "\n";
  for (const auto& r : s.resources) out << "RESOURCE " << r.id << " " << to_string(r.kind) << "\n";
  for (std::size_t v = 0; v < s.vertex_count; ++v) {
    out << "VERTEX " << v;
    for (const auto& r : s.resources) {
      if (is_interval(r.kind)) out << " BOUNDS " << r.id << " " << s.lower[r.id][v] << " " << s.upper[r.id][v];
    }
    for (const auto& r : s.resources) {
      if (!is_interval(r.kind)) {
        out << " NG " << r.id;
        for (auto m : s.ng[r.id][v].members()) out << " " << m;
      }
    }
    out << "\n";
  }
  for (const auto& e : s.edges) {
    out << "EDGE " << e.tail << " " << e.head << " COST " << e.cost.to_string();
    for (const auto& r : s.resources) {
      if (is_interval(r.kind)) out << " Q " << r.id << " " << e.q[r.id];
    }
    out << "\n";
  }
  out << "SOURCE " << s.source << "\n";
  out << "SINK " << s.sink << "\n";
  return out.str();
}

}  // namespace rcsp
