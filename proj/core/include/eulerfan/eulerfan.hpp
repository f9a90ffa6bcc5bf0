#pragma once

#include "eulerfan/action.hpp"
#include "eulerfan/eos.hpp"
#include "eulerfan/errors.hpp"
#include "eulerfan/fixture.hpp"
#include "eulerfan/riemann.hpp"
#include "eulerfan/spacetime.hpp"
#include "eulerfan/subsolution.hpp"
#include "eulerfan/tolerance.hpp"
