//! Opportunistic beamforming and scheduling for the MIMO-SDMA downlink with
//! linear combining at the receivers.
//!
//! The crate has two halves that are meant to be checked against each other:
//!
//! * [`simulator`] draws Rayleigh channels and Haar beams, computes the
//!   effective SINR of every user on every beam under selection combining,
//!   maximum ratio combining or optimum (MMSE) combining, hands each beam to
//!   its strongest user and averages the resulting sum-rate.
//! * [`analytic`] and [`throughput`] hold the closed-form SINR distributions
//!   for four transmit and two receive antennas, the Gumbel normalizing
//!   factors of the per-beam maximum, and the finite-K and asymptotic
//!   throughput integrals together with their `log log K` scaling ratios.
//!
//! [`cli`] wires both halves into deterministic CSV-producing experiments.

pub mod analytic;
pub mod cli;
mod error;
pub mod linalg;
pub mod quadrature;
pub mod roots;
pub mod simulator;
pub mod stats;
pub mod throughput;

pub use analytic::{FactorMethod, NormalizingFactors, SinrModel};
pub use error::{Error, Result};
pub use simulator::{
    BeamMatrix, ChannelRealization, CombinerKind, ScheduleResult, SinrTable, SystemConfig,
};
pub use throughput::{ThroughputEstimate, ThroughputMethod};
