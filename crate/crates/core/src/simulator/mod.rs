//! Monte Carlo model of the opportunistic MIMO-SDMA downlink.
//!
//! One slot: the base station picks an `M x M` unitary beam matrix, every
//! user draws an `N x M` Rayleigh channel, evaluates the effective SINR of
//! each beam with its combiner and feeds it back, and the base station gives
//! every beam to the user reporting the largest value. Noise is `CN(0, I_N)`
//! and each beam carries unit symbol power, so the average SNR constant
//! `rho` enters only through the SINR expressions.

mod channel;
mod combining;
mod monte_carlo;
mod schedule;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use channel::{draw_beams, draw_channel, effective_gains, BeamMatrix, ChannelRealization};
pub use combining::{sinr, sinr_mrc, sinr_oc, sinr_sc};
pub use monte_carlo::{
    sample_effective_sinrs, simulate_sum_rate, simulate_sum_rates, trial_rng, TrialRng,
};
pub use schedule::{schedule, BeamScheduler, ScheduleResult, SinrTable};

/// Dimensions and SNR of a homogeneous system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemConfig {
    transmit: usize,
    receive: usize,
    users: usize,
    rho: f64,
}

impl SystemConfig {
    /// `transmit` = M, `receive` = N, `users` = K, `rho` in linear scale.
    pub fn new(transmit: usize, receive: usize, users: usize, rho: f64) -> Result<Self> {
        if transmit == 0 {
            return Err(Error::InvalidConfig("M must be at least 1".into()));
        }
        if receive == 0 || receive > transmit {
            return Err(Error::InvalidConfig(format!(
                "N must satisfy 1 <= N <= M, got N = {receive}, M = {transmit}"
            )));
        }
        if users == 0 {
            return Err(Error::InvalidConfig("K must be at least 1".into()));
        }
        if !(rho > 0.0 && rho.is_finite()) {
            return Err(Error::InvalidConfig(format!("rho must be positive and finite, got {rho}")));
        }
        Ok(Self {
            transmit,
            receive,
            users,
            rho,
        })
    }

    /// The four-transmit, two-receive antenna system the closed forms describe.
    pub fn m4n2(users: usize, rho: f64) -> Result<Self> {
        Self::new(4, 2, users, rho)
    }

    pub fn transmit_antennas(&self) -> usize {
        self.transmit
    }

    pub fn receive_antennas(&self) -> usize {
        self.receive
    }

    pub fn users(&self) -> usize {
        self.users
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn with_users(self, users: usize) -> Result<Self> {
        Self::new(self.transmit, self.receive, users, self.rho)
    }
}

/// Linear combining technique applied at each receiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CombinerKind {
    /// Selection combining: the best single antenna.
    Sc,
    /// Maximum ratio combining: weights matched to the desired beam.
    Mrc,
    /// Optimum (MMSE) combining: weights that also suppress the other beams.
    Oc,
}

impl CombinerKind {
    pub const ALL: [CombinerKind; 3] = [CombinerKind::Sc, CombinerKind::Mrc, CombinerKind::Oc];

    pub fn name(self) -> &'static str {
        match self {
            CombinerKind::Sc => "sc",
            CombinerKind::Mrc => "mrc",
            CombinerKind::Oc => "oc",
        }
    }
}

impl fmt::Display for CombinerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CombinerKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sc" => Ok(CombinerKind::Sc),
            "mrc" => Ok(CombinerKind::Mrc),
            "oc" => Ok(CombinerKind::Oc),
            other => Err(Error::Domain {
                op: "CombinerKind::from_str",
                detail: format!("unknown combiner {other:?}"),
            }),
        }
    }
}
