#include "rcsp/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rcsp::bench {

double shifted_geomean(std::span<const double> values, double shift) {
  if (values.empty()) throw std::invalid_argument("shifted geometric mean of an empty list");
  if (!(shift > 0)) throw std::invalid_argument("shift must be positive");
  double sum = 0;
  for (double v : values) {
    if (v < 0) throw std::invalid_argument("negative runtime");
    sum += std::log(v + shift);
  }
  return std::exp(sum / static_cast<double>(values.size())) - shift;
}

namespace {

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = line.find(sep, start);
    out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string fmt(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

std::string write_report_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << "instance,config,threads,runtime_s,cost,labels\n";
  for (const auto& r : rows) {
    out << r.instance << ',' << r.config << ',' << r.threads << ',' << fmt(r.runtime_s, 6) << ',' << r.cost << ','
        << r.labels << '\n';
  }
  return out.str();
}

std::vector<ReportRow> read_report_csv(std::string_view text) {
  std::vector<ReportRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (ln == 1) {
      if (line != "instance,config,threads,runtime_s,cost,labels") {
        throw std::invalid_argument("unexpected report header: " + line);
      }
      continue;
    }
    auto f = split(line, ',');
    if (f.size() != 6) throw std::invalid_argument("report line " + std::to_string(ln) + ": expected 6 fields");
    ReportRow r;
    r.instance = f[0];
    r.config = f[1];
    try {
      r.threads = static_cast<unsigned>(std::stoul(f[2]));
      r.runtime_s = std::stod(f[3]);
      r.labels = static_cast<std::size_t>(std::stoull(f[5]));
    } catch (const std::exception&) {
      throw std::invalid_argument("report line " + std::to_string(ln) + ": bad number");
    }
    r.cost = f[4];
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string group_of(std::string_view instance) {
  auto pos = instance.find('/');
  return std::string(pos == std::string_view::npos ? instance : instance.substr(0, pos));
}

namespace {

// instance -> config -> runtime, instance order of first appearance.
struct Table {
  std::vector<std::string> instances;
  std::vector<std::string> configs;
  std::map<std::string, std::map<std::string, double>> cell;
};

Table tabulate(const std::vector<ReportRow>& rows) {
  Table t;
  for (const auto& r : rows) {
    if (!t.cell.count(r.instance)) t.instances.push_back(r.instance);
    if (std::find(t.configs.begin(), t.configs.end(), r.config) == t.configs.end()) t.configs.push_back(r.config);
    t.cell[r.instance][r.config] = r.runtime_s;
  }
  for (const auto& i : t.instances) {
    for (const auto& c : t.configs) {
      if (!t.cell[i].count(c)) throw std::invalid_argument("missing cell (" + i + ", " + c + ")");
    }
  }
  return t;
}

}  // namespace

std::vector<GroupStats> aggregate(const std::vector<ReportRow>& rows, const AggregateOptions& opt) {
  auto t = tabulate(rows);
  std::vector<std::string> groups;
  std::map<std::string, std::vector<std::string>> members;
  for (const auto& i : t.instances) {
    if (opt.hard_threshold) {
      auto it = t.cell[i].find(opt.base_config);
      if (it == t.cell[i].end()) throw std::invalid_argument("hard filter needs config " + opt.base_config);
      if (it->second < *opt.hard_threshold) continue;
    }
    auto g = group_of(i);
    if (!members.count(g)) groups.push_back(g);
    members[g].push_back(i);
  }
  std::vector<GroupStats> out;
  for (const auto& g : groups) {
    GroupStats s;
    s.group = g;
    s.instances = members[g].size();
    for (const auto& c : t.configs) {
      std::vector<double> v;
      for (const auto& i : members[g]) v.push_back(t.cell[i][c]);
      s.runtime[c] = shifted_geomean(v, opt.shift);
    }
    for (const auto& c : t.configs) {
      if (s.runtime.count(opt.all_config)) s.normalized[c] = s.runtime[c] / s.runtime[opt.all_config];
      if (s.runtime.count(opt.base_config)) s.speedup[c] = s.runtime[opt.base_config] / s.runtime[c];
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<ProfilePoint> perf_profile(const std::vector<ReportRow>& rows) {
  auto t = tabulate(rows);
  const double inf = std::numeric_limits<double>::infinity();
  std::map<std::string, std::vector<double>> ratios;
  std::set<double> taus;
  for (const auto& i : t.instances) {
    double best = inf;
    for (const auto& c : t.configs) best = std::min(best, t.cell[i][c]);
    for (const auto& c : t.configs) {
      double v = t.cell[i][c];
      double r = v == best ? 1.0 : (best == 0 ? inf : v / best);
      ratios[c].push_back(r);
      if (std::isfinite(r)) taus.insert(r);
    }
  }
  std::vector<ProfilePoint> out;
  const double n = static_cast<double>(t.instances.size());
  for (const auto& c : t.configs) {
    for (double tau : taus) {
      const auto& rs = ratios[c];
      auto hits = std::count_if(rs.begin(), rs.end(), [&](double r) { return r <= tau; });
      out.push_back({c, tau, static_cast<double>(hits) / n});
    }
  }
  return out;
}

std::string write_profile_csv(const std::vector<ProfilePoint>& points) {
  std::ostringstream out;
  out << "config,tau,fraction\n";
  for (const auto& p : points) out << p.config << ',' << fmt(p.tau, 6) << ',' << fmt(p.fraction, 6) << '\n';
  return out.str();
}

std::vector<std::string> cost_disagreements(const std::vector<ReportRow>& rows) {
  std::map<std::string, std::set<std::string>> costs;
  std::vector<std::string> order;
  for (const auto& r : rows) {
    if (!costs.count(r.instance)) order.push_back(r.instance);
    costs[r.instance].insert(r.cost);
  }
  std::vector<std::string> out;
  for (const auto& i : order) {
    if (costs[i].size() > 1) out.push_back(i);
  }
  return out;
}

std::string format_table(const std::vector<GroupStats>& groups, const std::vector<std::string>& configs) {
  std::ostringstream out;
  auto row = [&](const std::string& label, const std::map<std::string, double>& m) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%-12s", label.c_str());
    out << buf;
    for (const auto& c : configs) {
      auto it = m.find(c);
      std::snprintf(buf, sizeof buf, "%10s", it == m.end() ? "-" : fmt(it->second, 3).c_str());
      out << buf;
    }
    out << '\n';
  };
  char buf[32];
  std::snprintf(buf, sizeof buf, "%-12s", "group");
  out << buf;
  for (const auto& c : configs) {
    std::snprintf(buf, sizeof buf, "%10s", c.c_str());
    out << buf;
  }
  out << '\n';
  for (const auto& g : groups) {
    out << g.group << " (" << g.instances << " instances)\n";
    row("  runtime", g.runtime);
    row("  normalized", g.normalized);
    row("  speedup", g.speedup);
  }
  return out.str();
}

}  // namespace rcsp::bench
