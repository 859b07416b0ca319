#pragma once

#include "vgraph/errors.hpp"
#include "vgraph/finite_graph.hpp"
#include "vgraph/instance.hpp"
#include "vgraph/io.hpp"
#include "vgraph/lattice.hpp"
#include "vgraph/linear_coloring.hpp"
#include "vgraph/qlinalg.hpp"
#include "vgraph/qreal.hpp"
#include "vgraph/rational.hpp"
#include "vgraph/solver.hpp"
#include "vgraph/spindle.hpp"
