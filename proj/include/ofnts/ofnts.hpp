#pragma once

#include "ofnts/averages.hpp"
#include "ofnts/baselines.hpp"
#include "ofnts/date.hpp"
#include "ofnts/decimal.hpp"
#include "ofnts/error.hpp"
#include "ofnts/report.hpp"
#include "ofnts/run.hpp"
#include "ofnts/series.hpp"
#include "ofnts/stats.hpp"
#include "ofnts/trapezoid.hpp"
