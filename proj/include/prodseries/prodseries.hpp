#pragma once

#include "prodseries/bell.hpp"
#include "prodseries/combinatorics.hpp"
#include "prodseries/convergence.hpp"
#include "prodseries/errors.hpp"
#include "prodseries/formula.hpp"
#include "prodseries/rational.hpp"
#include "prodseries/sampling.hpp"
#include "prodseries/series.hpp"
#include "prodseries/term_key.hpp"
