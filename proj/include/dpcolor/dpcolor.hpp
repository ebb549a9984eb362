#pragma once

#include "dpcolor/builtin.hpp"
#include "dpcolor/configuration.hpp"
#include "dpcolor/discharging.hpp"
#include "dpcolor/dp_cover.hpp"
#include "dpcolor/error.hpp"
#include "dpcolor/graph.hpp"
#include "dpcolor/io.hpp"
#include "dpcolor/pattern_match.hpp"
#include "dpcolor/plane_graph.hpp"
#include "dpcolor/reducibility.hpp"
#include "dpcolor/replay.hpp"
#include "dpcolor/report.hpp"
#include "dpcolor/solver.hpp"
#include "dpcolor/structure.hpp"
