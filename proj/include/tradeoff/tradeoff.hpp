#pragma once

#include "critpoints.hpp"
#include "envelope.hpp"
#include "errors.hpp"
#include "invariance.hpp"
#include "multiparam.hpp"
#include "penalty.hpp"
#include "polynomial.hpp"
#include "scalar.hpp"
#include "table.hpp"
