#pragma once

#include "biasedcube/hypergraph.hpp"
#include "biasedcube/set_family.hpp"
#include "biasedcube/turan.hpp"
