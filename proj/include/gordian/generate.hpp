#pragma once

#include <optional>
#include <random>
#include <vector>

#include "gordian/diagram.hpp"
#include "gordian/moves.hpp"

namespace gordian {

// Closure of a braid on `strands` strands, every strand oriented down the braid.
Diagram braid_closure(int strands, const std::vector<BraidLetter>& word);

struct RandomKnotOptions {
    int max_crossings = 12;
    int min_crossings = 3;
    int max_strands = 4;
    int kinks = 0;  // extra R1 kinks inserted at random edges
};

// A knot diagram drawn from closures of random braids, with optional kinks.
// Deterministic in the generator state.
Diagram random_knot(std::mt19937& rng, const RandomKnotOptions& opt = {});

// Random site with n+1 strands, found by a self-avoiding walk through the
// faces of d; nullopt if the walk gets stuck `attempts` times.
std::optional<MoveSite> random_site(const Diagram& d, int n, std::mt19937& rng, int attempts = 50);

}  // namespace gordian
