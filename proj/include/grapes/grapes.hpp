#ifndef GRAPES_GRAPES_HPP
#define GRAPES_GRAPES_HPP

// Umbrella header for the whole library.

#include "bigint.hpp"
#include "complexes.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "homology.hpp"
#include "homotopy_type.hpp"
#include "intervals.hpp"
#include "invariants.hpp"
#include "io.hpp"
#include "multidigraph.hpp"
#include "reductions.hpp"
#include "simplicial.hpp"

#endif
