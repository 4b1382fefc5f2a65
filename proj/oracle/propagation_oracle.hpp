#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hepmeme/corpus.hpp"
#include "hepmeme/gender.hpp"
#include "hepmeme/propagation.hpp"

namespace hepmeme::oracle {

// Self-contained propagation instance over papers 0..n-1. Edges never form
// self loops but may repeat.
struct Instance {
  std::size_t n_papers = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // (citing, cited)
  std::vector<bool> carrier;
  std::vector<Gender> gender;
};

// Reference counts: for every paper, scan the whole edge list. No adjacency,
// no shared helpers with the production implementation.
PropagationCounts brute_force_counts(const Instance& inst, CitedFilter filter,
                                     UniverseMode mode = UniverseMode::Shared);

Instance random_instance(std::mt19937_64& rng, std::size_t max_papers, std::size_t max_edges);

inline constexpr std::string_view kOracleMeme = "meme";

// Corpus whose paper i has id i+1 and an abstract containing kOracleMeme
// exactly when inst.carrier[i].
Corpus to_corpus(const Instance& inst);

// Two disjoint copies of the instance (second copy shifted by n_papers).
Instance duplicated(const Instance& inst);

// Reproducible fixture dump (single-line JSON).
std::string to_json(const Instance& inst);

}  // namespace hepmeme::oracle
