#pragma once

#include "conicqed/background.hpp"
#include "conicqed/errors.hpp"
#include "conicqed/modes.hpp"
#include "conicqed/numerics.hpp"
#include "conicqed/opse.hpp"
#include "conicqed/quad.hpp"
#include "conicqed/specfun.hpp"
#include "conicqed/tpse.hpp"
