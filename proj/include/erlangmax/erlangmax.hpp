// erlangmax.hpp -- umbrella header.

#pragma once

#include "erlangmax/asym.hpp"
#include "erlangmax/errors.hpp"
#include "erlangmax/exact.hpp"
#include "erlangmax/mc.hpp"
#include "erlangmax/output.hpp"
#include "erlangmax/params.hpp"
#include "erlangmax/specfun.hpp"
#include "erlangmax/spectral.hpp"
#include "erlangmax/verify.hpp"
