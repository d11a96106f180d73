#pragma once

#include "criteria.hpp"
#include "drinfeld.hpp"
#include "exact.hpp"
#include "json_io.hpp"
#include "matrix.hpp"
#include "rootsys.hpp"
#include "sl2_engine.hpp"
#include "weyl_dims.hpp"
