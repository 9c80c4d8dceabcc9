#pragma once

#include "sombor/canonical.hpp"
#include "sombor/decomposition.hpp"
#include "sombor/degree_sequence.hpp"
#include "sombor/error.hpp"
#include "sombor/greedy.hpp"
#include "sombor/oracle.hpp"
#include "sombor/prufer.hpp"
#include "sombor/swap.hpp"
#include "sombor/tree.hpp"
#include "sombor/tree_io.hpp"
#include "sombor/weight_math.hpp"
