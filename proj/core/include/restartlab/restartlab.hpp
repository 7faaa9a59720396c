#ifndef RESTARTLAB_RESTARTLAB_HPP
#define RESTARTLAB_RESTARTLAB_HPP

#include "restartlab/bounds.hpp"
#include "restartlab/driver.hpp"
#include "restartlab/errors.hpp"
#include "restartlab/loss.hpp"
#include "restartlab/strategy.hpp"
#include "restartlab/sweep.hpp"

#endif
