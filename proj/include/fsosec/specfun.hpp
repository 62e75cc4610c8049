// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fsosec/specfun/bessel_k.hpp"
#include "fsosec/specfun/gamma.hpp"
#include "fsosec/specfun/hyp_pfq.hpp"
#include "fsosec/specfun/kummer_u.hpp"
#include "fsosec/specfun/meijer_g.hpp"
#include "fsosec/specfun/quadrature.hpp"
