#pragma once

// Umbrella header.

#include "decomposition.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "json_io.hpp"
#include "laurent.hpp"
#include "params.hpp"
#include "paths.hpp"
#include "soergel.hpp"
#include "svg.hpp"
#include "tableaux.hpp"
