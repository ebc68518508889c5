#pragma once

#include "treegen/degree.hpp"
#include "treegen/errors.hpp"
#include "treegen/oracle.hpp"
#include "treegen/random.hpp"
#include "treegen/sampler.hpp"
#include "treegen/stats.hpp"
#include "treegen/tree_codec.hpp"
