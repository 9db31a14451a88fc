#pragma once

#include "eprsim/report_io.hpp"
#include "eprsim/run_config.hpp"

namespace eprsim {

/// Coincidence-probability or correlation curve of one model over the
/// configured phi grid (degrees at the boundary). Rows are sorted ascending
/// in phi_deg.
Document run_sweep(const RunConfig& cfg);

/// <S_x>, <S_y> over the configured time grid. Throws ConfigError if
/// omega == 0.
Document run_precession(const RunConfig& cfg);

/// Three-setting inequality evaluation at cfg.angles_deg = {a, b, c}.
Document run_bell_check(const RunConfig& cfg);

/// Four-setting evaluation at cfg.angles_deg = {a, a2, b, b2}, or, with
/// cfg.scan > 0, the maximal quadruple over the scan grid.
Document run_chsh(const RunConfig& cfg);

/// Operator-square certificate: per-context scalars, nine-fold totals,
/// exhaustive factor- and entry-level search counts, and a mutation check
/// (third column scalar flipped) confirming the search is not vacuous.
Document run_ks_demo(const RunConfig& cfg);

/// Evaluates the unpolarized model on the fixed 37-point grid (0..180 step
/// 5 degrees), fits the two fixed candidates sin^2(phi)/2 and cos^2(phi)/2,
/// declares the matching convention, and reports the distance to the
/// singlet curve under that convention.
Document run_adjudicate_eq20(const RunConfig& cfg);

/// Dispatch on cfg.command.
Document run(const RunConfig& cfg);

}  // namespace eprsim
