#pragma once

#include <random>
#include <string>
#include <vector>

#include "groundkit/penman.hpp"

namespace groundkit::testing {

// Random rooted DAG AMR: v0 is the root, every vj (j >= 1) gets one edge
// from some vi with i < j plus extra forward edges, so the invariants hold
// by construction.
inline penman::AmrGraph random_amr(std::mt19937_64& rng) {
  static const char* kConcepts[] = {"alpha", "beta-01", "gamma", "delta-02", "epsilon", "zeta"};
  static const char* kRoles[] = {":ARG0", ":ARG1", ":ARG2", ":mod", ":op1", ":time", ":manner"};
  static const char* kValues[] = {"42", "-", "\"two words\"", "3.5", "interjection"};

  std::uniform_int_distribution<std::size_t> count(1, 10);
  std::uniform_int_distribution<std::size_t> concept_pick(0, std::size(kConcepts) - 1);
  std::uniform_int_distribution<std::size_t> role_pick(0, std::size(kRoles) - 1);
  std::uniform_int_distribution<std::size_t> value_pick(0, std::size(kValues) - 1);
  std::bernoulli_distribution extra_edge(0.15);
  std::bernoulli_distribution attr(0.2);

  std::size_t n = count(rng);
  penman::AmrGraph g;
  g.root = "v0";
  for (std::size_t i = 0; i < n; ++i)
    g.instances.emplace_back("v" + std::to_string(i), kConcepts[concept_pick(rng)]);

  auto var = [](std::size_t i) { return "v" + std::to_string(i); };
  std::uint32_t pos = 0;
  for (std::size_t j = 1; j < n; ++j) {
    std::uniform_int_distribution<std::size_t> parent(0, j - 1);
    g.edges.push_back({var(parent(rng)), kRoles[role_pick(rng)], var(j), pos++});
    for (std::size_t i = 0; i < j; ++i)
      if (extra_edge(rng)) g.edges.push_back({var(i), kRoles[role_pick(rng)], var(j), pos++});
  }
  for (std::size_t i = 0; i < n; ++i)
    if (attr(rng)) g.attributes.push_back({var(i), ":value", kValues[value_pick(rng)], pos++});
  return g;
}

// Random bytes, occasionally salted with PENMAN punctuation so the fuzz
// reaches deeper parser states.
inline std::string random_bytes(std::mt19937_64& rng, std::size_t max_len) {
  static const char kSalt[] = "()/:\"# \n\\v0";
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> byte(0, 255);
  std::uniform_int_distribution<std::size_t> salt(0, std::size(kSalt) - 2);
  std::bernoulli_distribution use_salt(0.5);
  std::string s;
  std::size_t k = len(rng);
  for (std::size_t i = 0; i < k; ++i)
    s.push_back(use_salt(rng) ? kSalt[salt(rng)] : static_cast<char>(byte(rng)));
  return s;
}

}  // namespace groundkit::testing
