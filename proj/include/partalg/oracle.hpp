#pragma once

#include "partalg/oracle/caps.hpp"
#include "partalg/oracle/ee.hpp"
#include "partalg/oracle/group_algebra.hpp"
#include "partalg/oracle/modules.hpp"
#include "partalg/oracle/permutation.hpp"
#include "partalg/oracle/polynomial.hpp"
#include "partalg/oracle/subspace.hpp"
#include "partalg/oracle/tensor.hpp"
