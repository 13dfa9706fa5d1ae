#pragma once

#include "isospec/core/arith.hpp"
#include "isospec/core/error.hpp"
#include "isospec/core/matrix.hpp"
#include "isospec/core/polynomial.hpp"
#include "isospec/core/primes.hpp"
#include "isospec/groups/catalog.hpp"
#include "isospec/groups/characters.hpp"
#include "isospec/groups/gassmann.hpp"
#include "isospec/groups/group_table.hpp"
#include "isospec/groups/io.hpp"
#include "isospec/groups/perm_group.hpp"
#include "isospec/groups/permutation.hpp"
#include "isospec/groups/subgroup_search.hpp"
#include "isospec/lattices/builtin.hpp"
#include "isospec/lattices/commensurable.hpp"
#include "isospec/lattices/enumeration.hpp"
#include "isospec/lattices/gram.hpp"
#include "isospec/lattices/io.hpp"
#include "isospec/lattices/kitaoka.hpp"
#include "isospec/lattices/local.hpp"
#include "isospec/lattices/similarity.hpp"
#include "isospec/lattices/theta.hpp"
#include "isospec/numberfields/census.hpp"
#include "isospec/numberfields/discriminant.hpp"
#include "isospec/numberfields/io.hpp"
#include "isospec/numberfields/zp_poly.hpp"
#include "isospec/schreier/char_poly.hpp"
#include "isospec/schreier/coset_graph.hpp"
#include "isospec/schreier/intertwiner.hpp"
