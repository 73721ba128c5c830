// Copyright 2026 The dephasing Authors
// SPDX-License-Identifier: Apache-2.0

//! Sweeps over the evolution abscissa, witness reports and figure datasets.

mod figures;
mod sweep;
mod table;
mod witness;

pub use figures::{figure_series, figure_series_with, Figure, FigureOptions, Panel, Series};
pub use sweep::{
    evaluate_point, rate_singularities, run_sweep, sweep_points, Facet, SweepConfig, SweepRecord, DEFAULT_STEPS,
};
pub use table::{table_entry, TableCell, TableEntry, TableQuantity};
pub use witness::{detect_sign_changes, witness_consistency, WitnessReport, FACTOR_FLOOR};
