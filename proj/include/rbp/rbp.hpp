/// Umbrella header.

#pragma once

#include "rbp/birkhoff.hpp"
#include "rbp/ehrhart.hpp"
#include "rbp/gt.hpp"
#include "rbp/hpolytope.hpp"
#include "rbp/io.hpp"
#include "rbp/lattice_enum.hpp"
#include "rbp/matrix.hpp"
#include "rbp/poset.hpp"
#include "rbp/rational.hpp"
#include "rbp/rsk.hpp"
#include "rbp/vertex_enum.hpp"
