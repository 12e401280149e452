#pragma once

#include "ppco/snapshot.hpp"

namespace ppco {

// The closed pack cyclone vessel corpus: a 19-node product structure
// (root + 18 components) with 38 classified interactions, one development
// process, a 3-team supply-chain organization, and the ActorX viewpoint and
// profile configuration.
Snapshot load_cyclone_fixture();

}  // namespace ppco
