#pragma once

#include "arcsys/error.hpp"
#include "arcsys/surface.hpp"
#include "arcsys/arcs.hpp"
#include "arcsys/farey.hpp"
#include "arcsys/intersection.hpp"
#include "arcsys/lifts.hpp"
#include "arcsys/clique.hpp"
#include "arcsys/systems.hpp"
#include "arcsys/planar.hpp"
#include "arcsys/constructions.hpp"
#include "arcsys/chords.hpp"
#include "arcsys/formulas.hpp"
#include "arcsys/io.hpp"
#include "arcsys/svg.hpp"
