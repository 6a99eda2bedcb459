#ifndef REPCOUNT_REPCOUNT_HPP
#define REPCOUNT_REPCOUNT_HPP

#include "repcount/circle_moments.hpp"
#include "repcount/configuration.hpp"
#include "repcount/erdos_fuchs.hpp"
#include "repcount/integer_sequence.hpp"
#include "repcount/oracle.hpp"
#include "repcount/polynomial_tail.hpp"
#include "repcount/power_series.hpp"
#include "repcount/residue.hpp"
#include "repcount/sequences.hpp"
#include "repcount/series.hpp"

#endif  // REPCOUNT_REPCOUNT_HPP
