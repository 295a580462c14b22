#ifndef COXHOM_COXHOM_HPP_
#define COXHOM_COXHOM_HPP_

#include "coxhom/catalog.hpp"
#include "coxhom/chains.hpp"
#include "coxhom/consistency.hpp"
#include "coxhom/error.hpp"
#include "coxhom/graph.hpp"
#include "coxhom/invariants.hpp"
#include "coxhom/io.hpp"
#include "coxhom/oracles.hpp"
#include "coxhom/union_find.hpp"
#include "coxhom/words.hpp"

#endif  // COXHOM_COXHOM_HPP_
