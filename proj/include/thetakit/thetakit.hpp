#pragma once

#include "census.hpp"
#include "classification.hpp"
#include "congruence.hpp"
#include "construction.hpp"
#include "isomorphism.hpp"
#include "reconstruction.hpp"
#include "semigroup.hpp"
