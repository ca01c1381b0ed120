#pragma once

#include "hatom/angular_momentum.hpp"
#include "hatom/energy.hpp"
#include "hatom/errors.hpp"
#include "hatom/exp_poly.hpp"
#include "hatom/field_grid.hpp"
#include "hatom/polynomial.hpp"
#include "hatom/quadrature.hpp"
#include "hatom/rational.hpp"
#include "hatom/trig_poly.hpp"
#include "hatom/wavefunction.hpp"
