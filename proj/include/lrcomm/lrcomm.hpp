#pragma once

#include "shapes.hpp"
#include "tableau.hpp"
#include "hive.hpp"
#include "deletion.hpp"
#include "paths.hpp"
#include "usystem.hpp"
#include "lrcalc.hpp"
#include "crystal.hpp"
