#pragma once

#include "bethe/errors.hpp"
#include "bethe/scalar.hpp"
#include "bethe/matrix.hpp"
#include "bethe/poly.hpp"
#include "bethe/lattice.hpp"
#include "bethe/rootsys.hpp"
#include "bethe/arrangement.hpp"
#include "bethe/nested.hpp"
#include "bethe/hamiltonians.hpp"
#include "bethe/sampling.hpp"
#include "bethe/degenerate.hpp"
#include "bethe/typea.hpp"
#include "bethe/reps/spin.hpp"
#include "bethe/reps/hecke.hpp"
#include "bethe/checks.hpp"
