#pragma once

#include <random>
#include <utility>
#include <vector>

#include "proprep/core.hpp"
#include "proprep/hardness.hpp"
#include "proprep/single_peaked.hpp"
#include "proprep/stabbing.hpp"

namespace proprep::gen {

using Rng = std::mt19937_64;

std::vector<std::string> candidate_names(int m);

Election random_election(int n, int m, Rng& rng);

// Random axis; each vote starts at a random peak and extends to the left or
// right neighbour by a coin flip.
std::pair<Election, Axis> random_sp_election(int n, int m, Rng& rng);

// Each voter approves a random-length prefix of its vote (possibly empty).
std::vector<std::vector<int>> random_prefix_approvals(const Election& e, Rng& rng);

HittingSetInstance random_hitting_set(int universe, int sets, Rng& rng);

// Configuration model with rejection of triples repeating an element.
RX3CInstance random_rx3c(int n, Rng& rng);

// Random simple graph with maximum degree 3.
std::vector<std::pair<int, int>> random_subcubic_graph(int vertices, int edges, Rng& rng);

StabbingInstance random_stabbing(int max_u, int m, int k, Rng& rng);

int uniform(Rng& rng, int lo, int hi);  // inclusive

}  // namespace proprep::gen
