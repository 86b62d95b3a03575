#pragma once

#include "adapt_meter/error.hpp"
#include "adapt_meter/metrics.hpp"
#include "adapt_meter/parsers.hpp"
#include "adapt_meter/pointcut_matcher.hpp"
#include "adapt_meter/process_model.hpp"
#include "adapt_meter/rational.hpp"
#include "adapt_meter/report.hpp"
#include "adapt_meter/sweep.hpp"
