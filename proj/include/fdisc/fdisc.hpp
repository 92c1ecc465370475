#pragma once

#include "fdisc/bounds.hpp"
#include "fdisc/core.hpp"
#include "fdisc/discrepancy.hpp"
#include "fdisc/io.hpp"
#include "fdisc/loss.hpp"
#include "fdisc/measure.hpp"
#include "fdisc/random.hpp"
#include "fdisc/spectral.hpp"
#include "fdisc/stats.hpp"
#include "fdisc/util.hpp"
