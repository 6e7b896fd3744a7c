#include "dqpt/errors.hpp"
