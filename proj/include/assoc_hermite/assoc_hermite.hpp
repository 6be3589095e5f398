#pragma once

#include "assoc_hermite/algebra.hpp"
#include "assoc_hermite/io.hpp"
#include "assoc_hermite/linearization.hpp"
#include "assoc_hermite/matching.hpp"
#include "assoc_hermite/models.hpp"
#include "assoc_hermite/moments.hpp"
#include "assoc_hermite/permutations.hpp"
#include "assoc_hermite/rooted_map.hpp"
#include "assoc_hermite/tableaux.hpp"
#include "assoc_hermite/tail_swap.hpp"
#include "assoc_hermite/verify.hpp"
