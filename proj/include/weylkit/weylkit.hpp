#pragma once

#include "weylkit/cavallin.hpp"
#include "weylkit/domino.hpp"
#include "weylkit/embedding.hpp"
#include "weylkit/json_io.hpp"
#include "weylkit/lr.hpp"
#include "weylkit/powers.hpp"
#include "weylkit/registry.hpp"
#include "weylkit/so_branching.hpp"
#include "weylkit/stembridge.hpp"
