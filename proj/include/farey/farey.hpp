#pragma once

// Farey symbols for finite index subgroups of PSL2(Z): construction from
// membership oracles, independent generators, membership certificates,
// coset enumeration, group invariants and congruence testing.

#include "farey/congruence.hpp"
#include "farey/construct.hpp"
#include "farey/cosets.hpp"
#include "farey/errors.hpp"
#include "farey/fraction.hpp"
#include "farey/generators.hpp"
#include "farey/geometry.hpp"
#include "farey/invariants.hpp"
#include "farey/json_io.hpp"
#include "farey/matrix.hpp"
#include "farey/membership.hpp"
#include "farey/numeric.hpp"
#include "farey/oracle.hpp"
#include "farey/permutation.hpp"
#include "farey/symbol.hpp"
#include "farey/words.hpp"
