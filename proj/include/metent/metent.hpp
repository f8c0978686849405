#pragma once

#include "metent/asymptotics.hpp"
#include "metent/besov.hpp"
#include "metent/block_decomp.hpp"
#include "metent/constants.hpp"
#include "metent/entropy_result.hpp"
#include "metent/error.hpp"
#include "metent/finite_bounds.hpp"
#include "metent/holder_exponent.hpp"
#include "metent/hyperrect.hpp"
#include "metent/model_io.hpp"
#include "metent/numeric.hpp"
#include "metent/oracle.hpp"
#include "metent/sequences.hpp"
