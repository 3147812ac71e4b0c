#pragma once

#include "tunneltime/errors.hpp"
#include "tunneltime/experiments.hpp"
#include "tunneltime/potentials.hpp"
#include "tunneltime/quadrature.hpp"
#include "tunneltime/stattherm.hpp"
#include "tunneltime/times.hpp"
#include "tunneltime/transmission.hpp"
#include "tunneltime/turning.hpp"
#include "tunneltime/units.hpp"
#include "tunneltime/wkb.hpp"
