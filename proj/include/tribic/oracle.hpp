#pragma once

#include <vector>

#include "tribic/core.hpp"
#include "tribic/scaling.hpp"
#include "tribic/tca.hpp"

namespace tribic::oracle {

// Brute-force ground truth, exponential on purpose. Shares no closure
// code with the fca/tca/trimax implementations it is used to judge.

// Every maximal bicluster of similar values, by literal enumeration of
// object subsets. Guarded to at most 12 objects and 12 attributes.
std::vector<Bicluster> oracle_maximal_biclusters(const NumericalDataset& d, Theta theta);

// Every triadic concept, by literal enumeration of object and attribute
// subsets with explicit componentwise-maximality checks. Guarded to
// small contexts.
std::vector<tca::TriadicConcept> oracle_triconcepts(const scaling::TriadicContext& ctx);

}  // namespace tribic::oracle
