#pragma once

#include "ptweyl/errors.hpp"
#include "ptweyl/grid.hpp"
#include "ptweyl/intertwine.hpp"
#include "ptweyl/model_core.hpp"
#include "ptweyl/nu_solver.hpp"
#include "ptweyl/oracle.hpp"
#include "ptweyl/pdfv.hpp"
#include "ptweyl/profiles.hpp"
#include "ptweyl/stencil.hpp"
#include "ptweyl/types.hpp"
