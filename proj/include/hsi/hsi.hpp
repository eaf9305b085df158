#pragma once

// Umbrella header.

#include "hsi/classify.hpp"
#include "hsi/cube_io.hpp"
#include "hsi/error.hpp"
#include "hsi/features.hpp"
#include "hsi/labeled_set.hpp"
#include "hsi/metrics.hpp"
#include "hsi/mpri.hpp"
#include "hsi/parallel.hpp"
#include "hsi/pipeline.hpp"
#include "hsi/rgbrecon.hpp"
#include "hsi/synth.hpp"
#include "hsi/tensorssa.hpp"
