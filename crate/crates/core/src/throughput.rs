//! Average sum-rate: exact finite-K quadrature, the asymptotic Gumbel
//! integral, and the `log log K` scaling ratios.
//!
//! With `M` beams each served by the best of `K` i.i.d. users,
//! `C = M * integral_0^inf log2(1 + x) d[F(x)^K]`. Replacing `F^K` by its
//! Gumbel limit and integrating by parts gives the asymptotic form
//! `(M / ln 2) * integral_0^inf (1 - exp(-exp(-(x - b_K) / a_K))) / (1 + x) dx`.

use std::f64::consts::LN_2;
use std::fmt;

use crate::analytic::{
    approx_factors, FactorMethod, NormalizingFactors, SinrModel, TRANSMIT_ANTENNAS,
};
use crate::error::{Error, Result};
use crate::quadrature::{integrate, QuadOptions};
use crate::roots::grow_upper_bracket;
use crate::simulator::CombinerKind;

/// Largest `1 - F(x_max)^K` left outside the exact integral.
pub const EXACT_TAIL_MASS: f64 = 1e-12;
/// Integrand level below which the asymptotic integral is cut off.
pub const ASYMPTOTIC_TAIL_LEVEL: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ThroughputMethod {
    MonteCarlo,
    ExactQuadrature,
    AsymptoticNumeric,
    AsymptoticApprox,
}

impl ThroughputMethod {
    pub const ALL: [ThroughputMethod; 4] = [
        ThroughputMethod::MonteCarlo,
        ThroughputMethod::ExactQuadrature,
        ThroughputMethod::AsymptoticNumeric,
        ThroughputMethod::AsymptoticApprox,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ThroughputMethod::MonteCarlo => "monte_carlo",
            ThroughputMethod::ExactQuadrature => "exact_quadrature",
            ThroughputMethod::AsymptoticNumeric => "asymptotic_numeric",
            ThroughputMethod::AsymptoticApprox => "asymptotic_approx",
        }
    }
}

impl fmt::Display for ThroughputMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A sum-rate in bits/s/Hz and where it came from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThroughputEstimate {
    pub value: f64,
    pub method: ThroughputMethod,
    pub k: u64,
    /// Standard error of the mean; zero for the deterministic methods.
    pub stderr: f64,
    /// Upper limit the improper integral was truncated at.
    pub truncated_at: Option<f64>,
    /// Error estimate reported by the quadrature.
    pub quadrature_error: Option<f64>,
}

impl ThroughputEstimate {
    pub fn monte_carlo(value: f64, stderr: f64, k: u64) -> Self {
        Self {
            value,
            method: ThroughputMethod::MonteCarlo,
            k,
            stderr,
            truncated_at: None,
            quadrature_error: None,
        }
    }
}

fn throughput_quad_options() -> QuadOptions {
    QuadOptions {
        abs_tol: 1e-10,
        rel_tol: 0.0,
        ..QuadOptions::default()
    }
}

/// Exact average sum-rate over `beams` beams with `k` users:
/// `beams * integral log2(1 + x) K F^{K-1}(x) f(x) dx`, truncated where the
/// remaining mass of the maximum is at most [`EXACT_TAIL_MASS`].
pub fn exact_throughput(model: &SinrModel, k: u64, beams: usize) -> Result<ThroughputEstimate> {
    exact_throughput_with(model, k, beams, throughput_quad_options())
}

pub fn exact_throughput_with(
    model: &SinrModel,
    k: u64,
    beams: usize,
    opts: QuadOptions,
) -> Result<ThroughputEstimate> {
    if k == 0 || beams == 0 {
        return Err(Error::Domain {
            op: "exact_throughput",
            detail: format!("need K >= 1 and at least one beam, got K = {k}, beams = {beams}"),
        });
    }
    let kf = k as f64;
    // 1 - (1 - s)^K = EXACT_TAIL_MASS
    let tail = -((-EXACT_TAIL_MASS).ln_1p() / kf).exp_m1();
    let x_max = model.survival_quantile(tail)?;

    let mut points = vec![0.0, x_max];
    for c in [100.0, 10.0, 1.0, 0.1, 0.01] {
        let s = (c / kf).min(1.0);
        if s > tail && s < 1.0 {
            points.push(model.survival_quantile(s)?);
        }
    }
    points.sort_by(f64::total_cmp);
    points.dedup();

    let per_beam_opts = QuadOptions {
        abs_tol: opts.abs_tol / beams as f64,
        ..opts
    };
    let integral = integrate(
        |x| {
            let sf = model.sf(x).unwrap_or(0.0);
            let pdf = model.pdf(x).unwrap_or(0.0);
            let max_density = if k == 1 {
                pdf
            } else {
                kf * ((kf - 1.0) * (-sf).ln_1p()).exp() * pdf
            };
            x.ln_1p() / LN_2 * max_density
        },
        &points,
        per_beam_opts,
    )?;
    Ok(ThroughputEstimate {
        value: beams as f64 * integral.value,
        method: ThroughputMethod::ExactQuadrature,
        k,
        stderr: 0.0,
        truncated_at: Some(x_max),
        quadrature_error: Some(beams as f64 * integral.abs_error),
    })
}

/// Asymptotic sum-rate from the Gumbel limit with the given factors, over
/// the four beams of the closed-form system.
pub fn asymptotic_throughput(factors: &NormalizingFactors) -> Result<ThroughputEstimate> {
    asymptotic_throughput_with(factors, throughput_quad_options())
}

pub fn asymptotic_throughput_with(
    factors: &NormalizingFactors,
    opts: QuadOptions,
) -> Result<ThroughputEstimate> {
    let (a, b) = (factors.a_k, factors.b_k);
    if !(a > 0.0 && a.is_finite() && b.is_finite()) {
        return Err(Error::Domain {
            op: "asymptotic_throughput",
            detail: format!("need a_K > 0 and finite b_K, got a_K = {a}, b_K = {b}"),
        });
    }
    let beams = TRANSMIT_ANTENNAS as f64;
    let integrand = move |x: f64| -(-(-(x - b) / a).exp()).exp_m1() / (1.0 + x);

    let center = b.max(0.0);
    let start = center + a * (1.0 / ASYMPTOTIC_TAIL_LEVEL).ln();
    let x_max = grow_upper_bracket(start.max(1.0), |x| integrand(x) <= ASYMPTOTIC_TAIL_LEVEL)?;

    let mut points = vec![0.0, x_max];
    for offset in [-5.0, -2.0, 0.0, 2.0, 5.0, 10.0] {
        let p = b + offset * a;
        if p > 0.0 && p < x_max {
            points.push(p);
        }
    }
    points.sort_by(f64::total_cmp);
    points.dedup();

    let integral = integrate(
        integrand,
        &points,
        QuadOptions {
            abs_tol: opts.abs_tol * LN_2 / beams,
            ..opts
        },
    )?;
    let method = match factors.method {
        FactorMethod::Numeric => ThroughputMethod::AsymptoticNumeric,
        FactorMethod::ApproxRho1 => ThroughputMethod::AsymptoticApprox,
    };
    Ok(ThroughputEstimate {
        value: beams / LN_2 * integral.value,
        method,
        k: factors.k,
        stderr: 0.0,
        truncated_at: Some(x_max),
        quadrature_error: Some(beams / LN_2 * integral.abs_error),
    })
}

/// `C_asymptotic / (4 log2 b_K)` with numeric factors; tends to 1.
pub fn scaling_ratio(model: &SinrModel, k: u64) -> Result<f64> {
    let factors = model.solve_factors(k)?;
    if factors.b_k <= 1.0 {
        return Err(Error::PreAsymptotic { k, b_k: factors.b_k });
    }
    let c = asymptotic_throughput(&factors)?.value;
    Ok(c / (TRANSMIT_ANTENNAS as f64 * factors.b_k.log2()))
}

/// `4 log2(b_K)` with the `rho = 1` closed-form location factor.
pub fn rho1_scaling_form(combiner: CombinerKind, k: u64) -> Result<f64> {
    let f = approx_factors(combiner, k)?;
    if f.b_k <= 1.0 {
        return Err(Error::PreAsymptotic { k, b_k: f.b_k });
    }
    Ok(TRANSMIT_ANTENNAS as f64 * f.b_k.log2())
}
