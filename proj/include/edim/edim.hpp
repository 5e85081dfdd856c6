#pragma once

// Umbrella header: exact edge metric dimension, graph products, structural
// statistics, closed-form evaluators and desk-scale verification.

#include "edim/bitset.hpp"
#include "edim/enumeration.hpp"
#include "edim/families.hpp"
#include "edim/graph.hpp"
#include "edim/io.hpp"
#include "edim/products.hpp"
#include "edim/solver.hpp"
#include "edim/structure.hpp"
#include "edim/theorems.hpp"
