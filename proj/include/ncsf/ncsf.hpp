#pragma once

#include "bigint.hpp"
#include "linear_combination.hpp"
#include "composition.hpp"
#include "qpoly.hpp"
#include "int_matrix.hpp"
#include "permutation.hpp"
#include "forest.hpp"
#include "nsym.hpp"
#include "cycle_index.hpp"
#include "fqsym.hpp"
#include "bases.hpp"
#include "products.hpp"
#include "equivalences.hpp"
