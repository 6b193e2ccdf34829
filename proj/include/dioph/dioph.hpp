#pragma once

#include "dioph/basis.hpp"
#include "dioph/errors.hpp"
#include "dioph/integers.hpp"
#include "dioph/matrix.hpp"
#include "dioph/oracle.hpp"
#include "dioph/presentation.hpp"
#include "dioph/quotients.hpp"
#include "dioph/solution_space.hpp"
