#pragma once

#include "descm/assembly.hpp"
#include "descm/de_map.hpp"
#include "descm/eigensolver.hpp"
#include "descm/error.hpp"
#include "descm/mesh.hpp"
#include "descm/potential.hpp"
#include "descm/sinc_basis.hpp"
#include "descm/solver.hpp"
