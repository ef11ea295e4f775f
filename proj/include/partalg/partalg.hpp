#pragma once

#include "partalg/dims.hpp"
#include "partalg/errors.hpp"
#include "partalg/filter.hpp"
#include "partalg/filter_io.hpp"
#include "partalg/lr.hpp"
#include "partalg/numeric.hpp"
#include "partalg/partition.hpp"
#include "partalg/series.hpp"
