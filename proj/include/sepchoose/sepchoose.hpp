#pragma once

#include "sepchoose/bitset.hpp"
#include "sepchoose/bounds.hpp"
#include "sepchoose/certificate.hpp"
#include "sepchoose/coloring.hpp"
#include "sepchoose/construction.hpp"
#include "sepchoose/error.hpp"
#include "sepchoose/exact.hpp"
#include "sepchoose/hypergraph.hpp"
#include "sepchoose/independence.hpp"
#include "sepchoose/random.hpp"
#include "sepchoose/solver.hpp"
#include "sepchoose/transversal.hpp"
