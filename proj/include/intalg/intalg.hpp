#pragma once

#include "intalg/cli.hpp"
#include "intalg/cones.hpp"
#include "intalg/fan_hilbert.hpp"
#include "intalg/formulas.hpp"
#include "intalg/invariants.hpp"
#include "intalg/mesh.hpp"
#include "intalg/oracles.hpp"
#include "intalg/polyvol.hpp"
#include "intalg/presentation.hpp"
#include "intalg/region.hpp"
#include "intalg/report.hpp"
#include "intalg/report_json.hpp"
#include "intalg/smith.hpp"
