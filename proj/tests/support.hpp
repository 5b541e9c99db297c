#pragma once

#include <algorithm>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "rcsp/bucket_graph.hpp"
#include "rcsp/instance_io.hpp"

namespace rcsp::testing {

using Succ = std::vector<std::vector<std::uint32_t>>;

/// Layout with at least n buckets, so that every id below n is a forward job.
inline std::shared_ptr<BucketLayout> layout_with(std::size_t n) {
  std::string text = "RCSP 1\nRESOURCES 1 PRIMARY 0\nRESOURCE 0 interval-timewindow\n";
  text += "VERTEX 0 BOUNDS 0 0 0\nVERTEX 1 BOUNDS 0 0 " + std::to_string(n) + "\n";
  text += "EDGE 0 1 COST 0 Q 0 1\nSOURCE 0\nSINK 1\n";
  return std::make_shared<BucketLayout>(build_buckets(parse_instance(text)));
}

/// Hard-edge-only job graph over the given successor lists.
inline JobGraph graph_from(const Succ& succ) {
  JobGraph g;
  g.layout = layout_with(succ.size());
  g.job_count = succ.size();
  g.successors = succ;
  g.member_of.assign(succ.size(), {});
  g.pulls.assign(succ.size(), {});
  std::vector<char> has_pred(succ.size(), 0);
  for (const auto& s : succ) {
    for (auto w : s) has_pred[w] = 1;
  }
  for (std::uint32_t j = 0; j < succ.size(); ++j) {
    if (!has_pred[j]) g.seeds.push_back(j);
  }
  return g;
}

/// DAG on a random permutation with edge probability p.
inline Succ random_dag(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<std::uint32_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint32_t>(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(p);
  Succ succ(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) succ[perm[i]].push_back(perm[j]);
    }
  }
  for (auto& s : succ) std::shuffle(s.begin(), s.end(), rng);
  return succ;
}

/// reach[s][w]: w reachable from s by a non-empty path.
inline std::vector<std::vector<char>> closure(const Succ& succ) {
  const auto n = succ.size();
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::uint32_t> stack{static_cast<std::uint32_t>(s)};
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (auto w : succ[u]) {
        if (!reach[s][w]) {
          reach[s][w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return reach;
}

}  // namespace rcsp::testing
