#pragma once

#include "dqpt/errors.hpp"
#include "dqpt/extended_real.hpp"
#include "dqpt/loschmidt.hpp"
#include "dqpt/oracle.hpp"
#include "dqpt/parallel.hpp"
#include "dqpt/qsl.hpp"
#include "dqpt/spectral.hpp"
#include "dqpt/zeros.hpp"
