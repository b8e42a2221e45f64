#pragma once

// Umbrella header: the whole distinct-sum sequence toolkit.

#include "distsum/sequence.hpp"   // data model, verifier, counting identity
#include "distsum/labeling.hpp"   // path labelings, interleaving, vertex repair
#include "distsum/construct.hpp"  // residue-case builders, base table, construct()
#include "distsum/search.hpp"     // exhaustive oracle: search(), exists()
#include "distsum/io.hpp"         // parsing and plain-text reports
#include "distsum/render.hpp"     // three-line path diagram
