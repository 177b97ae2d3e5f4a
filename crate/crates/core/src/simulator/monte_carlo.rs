//! Seeded Monte Carlo over independent slots.
//!
//! Trial `t` of a run with root seed `s` draws from a ChaCha8 generator keyed
//! by `s` (via `seed_from_u64`) on stream `t`. A trial therefore depends on
//! `(s, t)` alone: trials can run in any order or in parallel and still give
//! the same per-trial values, which are then reduced in trial order.
//!
//! Within a trial the beam matrix is drawn first, followed by the channels of
//! users `0..K` in order. The random stream does not depend on the combiner,
//! so every combiner in a joint run sees the same channels.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::channel::redraw_channel;
use super::{draw_beams, draw_channel, sinr, BeamScheduler, CombinerKind, SystemConfig};
use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::stats::mean_and_stderr;
use crate::throughput::ThroughputEstimate;

pub type TrialRng = ChaCha8Rng;

/// Random stream of trial `trial` under root seed `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> TrialRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn run_slot(cfg: &SystemConfig, combiners: &[CombinerKind], rng: &mut TrialRng) -> Result<Vec<f64>> {
    let m = cfg.transmit_antennas();
    let beams = draw_beams(m, rng);
    let mut channel = draw_channel(cfg, rng);
    let mut gains = CMatrix::zeros(cfg.receive_antennas(), m);
    let mut schedulers: Vec<BeamScheduler> = combiners.iter().map(|_| BeamScheduler::new(m)).collect();
    for user in 0..cfg.users() {
        if user > 0 {
            redraw_channel(&mut channel, rng);
        }
        channel.matrix().mul_into(beams.matrix(), &mut gains);
        for (kind, sched) in combiners.iter().zip(schedulers.iter_mut()) {
            for beam in 0..m {
                sched.offer_beam(user, beam, sinr(*kind, &gains, beam, cfg.rho())?);
            }
        }
    }
    Ok(schedulers.iter().map(BeamScheduler::sum_rate).collect())
}

/// Average sum-rate of several combiners over the same `trials` slots.
///
/// Entry `i` of the result belongs to `combiners[i]` and equals what
/// [`simulate_sum_rate`] returns for that combiner alone.
pub fn simulate_sum_rates(
    cfg: &SystemConfig,
    combiners: &[CombinerKind],
    trials: usize,
    seed: u64,
) -> Result<Vec<ThroughputEstimate>> {
    if trials == 0 {
        return Err(Error::InvalidConfig("trials must be at least 1".into()));
    }
    let per_trial: Vec<Vec<f64>> = (0..trials as u64)
        .into_par_iter()
        .map(|t| run_slot(cfg, combiners, &mut trial_rng(seed, t)))
        .collect::<Result<_>>()?;
    Ok((0..combiners.len())
        .map(|i| {
            let rates: Vec<f64> = per_trial.iter().map(|r| r[i]).collect();
            let (mean, stderr) = mean_and_stderr(&rates);
            ThroughputEstimate::monte_carlo(mean, stderr, cfg.users() as u64)
        })
        .collect())
}

/// Average sum-rate over `trials` independent slots, each with fresh beams
/// and fresh channels for all users.
pub fn simulate_sum_rate(
    cfg: &SystemConfig,
    combiner: CombinerKind,
    trials: usize,
    seed: u64,
) -> Result<ThroughputEstimate> {
    Ok(simulate_sum_rates(cfg, &[combiner], trials, seed)?.remove(0))
}

/// Independent samples of the effective SINR on `beam` for one user, one
/// vector per combiner. Sample `i` uses trial stream `i`.
pub fn sample_effective_sinrs(
    cfg: &SystemConfig,
    combiners: &[CombinerKind],
    beam: usize,
    samples: usize,
    seed: u64,
) -> Result<Vec<Vec<f64>>> {
    if beam >= cfg.transmit_antennas() {
        return Err(Error::Domain {
            op: "sample_effective_sinrs",
            detail: format!("beam {beam} out of range for M = {}", cfg.transmit_antennas()),
        });
    }
    let draws: Vec<Vec<f64>> = (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = trial_rng(seed, i);
            let beams = draw_beams(cfg.transmit_antennas(), &mut rng);
            let h = draw_channel(cfg, &mut rng);
            let g = h.matrix() * beams.matrix();
            combiners
                .iter()
                .map(|&kind| sinr(kind, &g, beam, cfg.rho()))
                .collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<_>>()?;
    Ok((0..combiners.len())
        .map(|c| draws.iter().map(|d| d[c]).collect())
        .collect())
}
