#pragma once

#include "propbudget/axioms.hpp"
#include "propbudget/error.hpp"
#include "propbudget/generate.hpp"
#include "propbudget/io.hpp"
#include "propbudget/item_set.hpp"
#include "propbudget/knapsack.hpp"
#include "propbudget/load.hpp"
#include "propbudget/model.hpp"
#include "propbudget/oracle.hpp"
#include "propbudget/report.hpp"
#include "propbudget/rules.hpp"
