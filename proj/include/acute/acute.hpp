#pragma once

#include "acute/errors.hpp"
#include "acute/triangulation.hpp"
#include "acute/triangulation_io.hpp"
#include "acute/predicates.hpp"
#include "acute/constructions.hpp"
#include "acute/fixtures.hpp"
#include "acute/coxeter.hpp"
#include "acute/spherical.hpp"
#include "acute/sigma.hpp"
#include "acute/duality.hpp"
#include "acute/slanted_cube.hpp"
#include "acute/parallel.hpp"
#include "acute/lm.hpp"
#include "acute/realization.hpp"
#include "acute/euclidean.hpp"
#include "acute/invariants.hpp"
#include "acute/export.hpp"
