#pragma once

#include "xkg/agents.hpp"
#include "xkg/asteroids.hpp"
#include "xkg/bench.hpp"
#include "xkg/drawlist_json.hpp"
#include "xkg/game.hpp"
#include "xkg/graphics.hpp"
#include "xkg/hash.hpp"
#include "xkg/loop.hpp"
#include "xkg/raster.hpp"
#include "xkg/rng.hpp"
#include "xkg/session.hpp"
#include "xkg/tetris.hpp"
