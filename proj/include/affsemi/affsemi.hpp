#pragma once

// Exact combinatorics of simplicial affine semigroups: Apery sets, remainder
// classes, type and quasi-Frobenius elements, Cohen-Macaulay / Buchsbaum /
// Gorenstein / normality tests, normalization generators and the minimal
// generating set of the conductor ideal.

#include "affsemi/apery.hpp"
#include "affsemi/conductor.hpp"
#include "affsemi/cone.hpp"
#include "affsemi/errors.hpp"
#include "affsemi/integer.hpp"
#include "affsemi/lattice.hpp"
#include "affsemi/matrix.hpp"
#include "affsemi/oracle.hpp"
#include "affsemi/rational.hpp"
#include "affsemi/report.hpp"
#include "affsemi/semigroup.hpp"
#include "affsemi/simplex.hpp"
#include "affsemi/structure.hpp"
#include "affsemi/vec.hpp"
