#pragma once

#include "aocc/ccc_aocc.hpp"
#include "aocc/denoise_baselines.hpp"
#include "aocc/esr_metric.hpp"
#include "aocc/event_core.hpp"
#include "aocc/frame_contrast.hpp"
#include "aocc/io_formats.hpp"
#include "aocc/labeled_metrics.hpp"
#include "aocc/noise_injection.hpp"
#include "aocc/parallel.hpp"
#include "aocc/plot.hpp"
#include "aocc/synth.hpp"
#include "aocc/tables.hpp"
