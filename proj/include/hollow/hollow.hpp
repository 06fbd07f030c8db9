#pragma once

// Umbrella header: hollow symmetric inverse eigenvalue toolbox.

#include "hollow/catalog.hpp"
#include "hollow/catalog_verify.hpp"
#include "hollow/gencyc.hpp"
#include "hollow/graph.hpp"
#include "hollow/graph6.hpp"
#include "hollow/jacobi.hpp"
#include "hollow/matrix.hpp"
#include "hollow/obstructions.hpp"
#include "hollow/realizers.hpp"
#include "hollow/search.hpp"
#include "hollow/serialize.hpp"
#include "hollow/spectrum.hpp"
#include "hollow/target.hpp"
