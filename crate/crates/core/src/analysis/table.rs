// Copyright 2026 The dephasing Authors
// SPDX-License-Identifier: Apache-2.0

//! Closed-form facet values next to brute-force values computed from the
//! explicitly evolved density matrix.

use crate::channels::{apply_channel, Channel};
use crate::error::Result;
use crate::infomeasures::{avg_gate_fidelity, gate_fidelity_dephased, holevo_dephased_closed, holevo_nmd_closed};
use crate::mat2::Mat2;
use crate::qstate::{beta_balance, coherence_l1, mixedness, pure_qubit, vn_entropy_bits, DensityMatrix};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TableQuantity {
    Coherence,
    Mixedness,
    Beta,
    GateFidelity,
    Holevo,
}

impl TableQuantity {
    pub const ALL: [TableQuantity; 5] = [
        TableQuantity::Coherence,
        TableQuantity::Mixedness,
        TableQuantity::Beta,
        TableQuantity::GateFidelity,
        TableQuantity::Holevo,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            TableQuantity::Coherence => "coherence",
            TableQuantity::Mixedness => "mixedness",
            TableQuantity::Beta => "beta",
            TableQuantity::GateFidelity => "gate_fidelity",
            TableQuantity::Holevo => "holevo",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TableCell {
    pub quantity: TableQuantity,
    pub closed: f64,
    pub oracle: f64,
}

impl TableCell {
    pub fn diff(&self) -> f64 {
        (self.closed - self.oracle).abs()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TableEntry {
    pub abscissa: f64,
    pub theta: f64,
    pub factor: f64,
    /// In [`TableQuantity::ALL`] order.
    pub cells: [TableCell; 5],
}

impl TableEntry {
    pub fn max_diff(&self) -> f64 {
        self.cells.iter().map(TableCell::diff).fold(0.0, f64::max)
    }
}

/// One table column-slice at `(x, θ, φ)`.
///
/// Oracles evolve `|θ, φ⟩` through the channel's Kraus operators and
/// measure the output matrix directly; the gate-fidelity oracle uses the
/// Kraus traces. The NMD Holevo oracle is the von Neumann entropy of
/// `diag(A, 1 − A)` with `A = 1 − 2p/3 + 2αp(p − 1)`.
pub fn table_entry(channel: &Channel, x: f64, theta: f64, phi: f64) -> Result<TableEntry> {
    let point = channel.at(x)?;
    let f = point.factor;
    let kraus = point.kraus();
    let evolved = apply_channel(&kraus, &pure_qubit(theta, phi))?;
    let s = theta.sin();

    let (holevo_closed, holevo_oracle) = match channel {
        Channel::Rtn(_) => (holevo_dephased_closed(f, theta), vn_entropy_bits(&evolved)),
        Channel::Nmd(params) => {
            let a = 1.0 - 2.0 * x / 3.0 + 2.0 * params.alpha() * x * (x - 1.0);
            let diag = DensityMatrix::new(Mat2::from_real(a, 0.0, 0.0, 1.0 - a))?;
            (holevo_nmd_closed(params, x)?, vn_entropy_bits(&diag))
        }
    };

    let cell = |quantity, closed, oracle| TableCell { quantity, closed, oracle };
    Ok(TableEntry {
        abscissa: x,
        theta,
        factor: f,
        cells: [
            cell(TableQuantity::Coherence, (f * s).abs(), coherence_l1(&evolved)),
            cell(TableQuantity::Mixedness, (1.0 - f * f) * s * s, mixedness(&evolved)),
            cell(TableQuantity::Beta, s * s, beta_balance(&evolved, 2)?),
            cell(TableQuantity::GateFidelity, gate_fidelity_dephased(f), avg_gate_fidelity(&kraus, 2)?),
            cell(TableQuantity::Holevo, holevo_closed, holevo_oracle),
        ],
    })
}
