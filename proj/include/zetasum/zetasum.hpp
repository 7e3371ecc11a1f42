#pragma once

#include "arith.hpp"
#include "cache.hpp"
#include "constants.hpp"
#include "errors.hpp"
#include "identities.hpp"
#include "quadrature.hpp"
#include "reconstruct.hpp"
#include "reduce.hpp"
#include "special.hpp"
#include "zeros.hpp"
