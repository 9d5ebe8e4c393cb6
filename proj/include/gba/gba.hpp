#pragma once

#include "gba/action.hpp"
#include "gba/config.hpp"
#include "gba/error.hpp"
#include "gba/families.hpp"
#include "gba/ffield.hpp"
#include "gba/fieldgraphs.hpp"
#include "gba/gamma.hpp"
#include "gba/graph.hpp"
#include "gba/group.hpp"
#include "gba/matrix.hpp"
#include "gba/report.hpp"
#include "gba/scenarios.hpp"
#include "gba/su3.hpp"
