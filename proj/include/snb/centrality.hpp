#pragma once

#include <vector>

#include "snb/graph.hpp"

namespace snb {

struct CentralityVector {
    std::vector<double> values;
    double stdev = 0.0;  // population standard deviation of values
};

// Exact shortest-path betweenness (Brandes). Unnormalized, each unordered
// pair {s, t} counted once. Disconnected pairs contribute nothing.
CentralityVector betweenness(const Graph& g);

double population_stdev(const std::vector<double>& values);

}  // namespace snb
