// Umbrella header for the complements library.
#pragma once

#include "complements/rational.hpp"
#include "complements/boundary.hpp"
#include "complements/curve_complements.hpp"
#include "complements/multiplier_table.hpp"
#include "complements/dual_graph.hpp"
#include "complements/fiber.hpp"
#include "complements/complement_types.hpp"
#include "complements/simplicial.hpp"
#include "complements/json_io.hpp"
#include "complements/reproduce.hpp"
