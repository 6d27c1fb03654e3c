#pragma once

#include "carnot/algebra.hpp"
#include "carnot/catalog.hpp"
#include "carnot/curvature.hpp"
#include "carnot/error.hpp"
#include "carnot/forms.hpp"
#include "carnot/growth.hpp"
#include "carnot/horizontality.hpp"
#include "carnot/lattice.hpp"
#include "carnot/linalg.hpp"
#include "carnot/predictor.hpp"
#include "carnot/rational.hpp"
#include "carnot/series.hpp"
#include "carnot/subspace.hpp"
