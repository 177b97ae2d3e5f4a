//! Effective SINR of one beam after linear combining.
//!
//! All three functions take the effective gain matrix `G = H A` (antennas by
//! beams) and a zero-based beam index. Every other beam counts as
//! interference at unit power, noise is white with unit power per antenna.

use num_complex::Complex64;

use super::CombinerKind;
use crate::error::{Error, Result};
use crate::linalg::CMatrix;

fn check_beam(g: &CMatrix, beam: usize) {
    assert!(
        beam < g.cols(),
        "beam index {beam} out of range for {} beams",
        g.cols()
    );
}

/// Selection combining: the best per-antenna SINR
/// `rho |G[n,m]|^2 / (1 + rho sum_{j != m} |G[n,j]|^2)`.
pub fn sinr_sc(g: &CMatrix, beam: usize, rho: f64) -> f64 {
    check_beam(g, beam);
    let mut best: f64 = 0.0;
    for n in 0..g.rows() {
        let row = g.row(n);
        let total: f64 = row.iter().map(|z| z.norm_sqr()).sum();
        let desired = row[beam].norm_sqr();
        let interference = (total - desired).max(0.0);
        best = best.max(rho * desired / (1.0 + rho * interference));
    }
    best
}

/// Maximum ratio combining with weight `w = g_m`:
/// `rho |g_m|^4 / (|g_m|^2 + rho sum_{j != m} |g_m^H g_j|^2)`.
///
/// A zero desired column yields 0.
pub fn sinr_mrc(g: &CMatrix, beam: usize, rho: f64) -> f64 {
    check_beam(g, beam);
    let desired_power: f64 = (0..g.rows()).map(|n| g[(n, beam)].norm_sqr()).sum();
    if desired_power == 0.0 {
        return 0.0;
    }
    let mut interference = 0.0;
    for j in (0..g.cols()).filter(|&j| j != beam) {
        let inner: Complex64 = (0..g.rows()).map(|n| g[(n, beam)].conj() * g[(n, j)]).sum();
        interference += inner.norm_sqr();
    }
    rho * desired_power * desired_power / (desired_power + rho * interference)
}

/// Optimum combining:
/// `rho g_m^H (I + rho sum_{j != m} g_j g_j^H)^{-1} g_m`.
///
/// Two receive antennas use the closed-form 2x2 inverse; other sizes go
/// through a Cholesky solve.
pub fn sinr_oc(g: &CMatrix, beam: usize, rho: f64) -> Result<f64> {
    check_beam(g, beam);
    let n = g.rows();
    match n {
        1 => {
            let interference: f64 = (0..g.cols())
                .filter(|&j| j != beam)
                .map(|j| g[(0, j)].norm_sqr())
                .sum();
            Ok(rho * g[(0, beam)].norm_sqr() / (1.0 + rho * interference))
        }
        2 => {
            // R = [[a, b], [conj(b), d]]
            let mut a = 1.0;
            let mut d = 1.0;
            let mut b = Complex64::new(0.0, 0.0);
            for j in (0..g.cols()).filter(|&j| j != beam) {
                let (u, v) = (g[(0, j)], g[(1, j)]);
                a += rho * u.norm_sqr();
                d += rho * v.norm_sqr();
                b += rho * u * v.conj();
            }
            let det = a * d - b.norm_sqr();
            if !(det > 0.0) || !det.is_finite() {
                return Err(Error::Singular { op: "sinr_oc", det });
            }
            let (x, y) = (g[(0, beam)], g[(1, beam)]);
            let quad = d * x.norm_sqr() + a * y.norm_sqr() - 2.0 * (b * x.conj() * y).re;
            Ok((rho * quad / det).max(0.0))
        }
        _ => {
            let mut r = CMatrix::identity(n);
            for j in (0..g.cols()).filter(|&j| j != beam) {
                for p in 0..n {
                    for q in 0..n {
                        r[(p, q)] += rho * g[(p, j)] * g[(q, j)].conj();
                    }
                }
            }
            let desired = g.column(beam);
            let quad = hermitian_quad_inverse(&mut r, &desired)?;
            Ok((rho * quad).max(0.0))
        }
    }
}

/// `x^H R^{-1} x` for Hermitian positive definite `R`, via `R = L L^H`
/// (overwrites `r` with `L`).
fn hermitian_quad_inverse(r: &mut CMatrix, x: &[Complex64]) -> Result<f64> {
    let n = r.rows();
    for j in 0..n {
        let mut diag = r[(j, j)].re;
        for k in 0..j {
            diag -= r[(j, k)].norm_sqr();
        }
        if !(diag > 0.0) {
            return Err(Error::Singular {
                op: "sinr_oc",
                det: diag,
            });
        }
        let l_jj = diag.sqrt();
        r[(j, j)] = Complex64::new(l_jj, 0.0);
        for i in j + 1..n {
            let mut s = r[(i, j)];
            for k in 0..j {
                s -= r[(i, k)] * r[(j, k)].conj();
            }
            r[(i, j)] = s / l_jj;
        }
    }
    // Forward substitution L y = x; then x^H R^{-1} x = |y|^2.
    let mut y = vec![Complex64::new(0.0, 0.0); n];
    for i in 0..n {
        let mut s = x[i];
        for k in 0..i {
            s -= r[(i, k)] * y[k];
        }
        y[i] = s / r[(i, i)].re;
    }
    Ok(y.iter().map(|v| v.norm_sqr()).sum())
}

/// Dispatches on the combiner.
pub fn sinr(kind: CombinerKind, g: &CMatrix, beam: usize, rho: f64) -> Result<f64> {
    match kind {
        CombinerKind::Sc => Ok(sinr_sc(g, beam, rho)),
        CombinerKind::Mrc => Ok(sinr_mrc(g, beam, rho)),
        CombinerKind::Oc => sinr_oc(g, beam, rho),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simulator::{draw_beams, draw_channel, effective_gains, trial_rng, SystemConfig};
    use proptest::prelude::*;

    fn random_gains(m: usize, n: usize, seed: u64) -> CMatrix {
        let cfg = SystemConfig::new(m, n, 1, 1.0).unwrap();
        let mut rng = trial_rng(seed, 0);
        let a = draw_beams(m, &mut rng);
        effective_gains(&draw_channel(&cfg, &mut rng), &a).unwrap()
    }

    #[test]
    fn single_beam_has_no_interference() {
        for n in 1..=3 {
            let g = random_gains(3, n, 5).column(0);
            let g = CMatrix::from_row_major(n, 1, g);
            let rho = 2.5;
            let snr_best = (0..n).map(|i| rho * g[(i, 0)].norm_sqr()).fold(0.0, f64::max);
            let snr_total: f64 = (0..n).map(|i| rho * g[(i, 0)].norm_sqr()).sum();
            assert!((sinr_sc(&g, 0, rho) - snr_best).abs() < 1e-14);
            assert!((sinr_mrc(&g, 0, rho) - snr_total).abs() < 1e-12);
            assert!((sinr_oc(&g, 0, rho).unwrap() - snr_total).abs() < 1e-12);
        }
    }

    #[test]
    fn zeroed_antenna_row_reduces_sc_to_the_other_antenna() {
        let mut g = random_gains(4, 2, 7);
        for j in 0..4 {
            g[(1, j)] = Complex64::new(0.0, 0.0);
        }
        let row = g.row(0);
        let total: f64 = row.iter().map(|z| z.norm_sqr()).sum();
        let expected = row[2].norm_sqr() / (1.0 + total - row[2].norm_sqr());
        assert!((sinr_sc(&g, 2, 1.0) - expected).abs() < 1e-14);
    }

    #[test]
    fn mrc_with_one_antenna_is_sc() {
        for seed in 0..20 {
            let g = random_gains(4, 1, seed);
            for m in 0..4 {
                let sc = sinr_sc(&g, m, 3.0);
                assert!((sinr_mrc(&g, m, 3.0) - sc).abs() <= 1e-12 * sc.max(1.0));
                assert!((sinr_oc(&g, m, 3.0).unwrap() - sc).abs() <= 1e-12 * sc.max(1.0));
            }
        }
    }

    #[test]
    fn mrc_zero_column_is_zero() {
        let mut g = random_gains(4, 2, 1);
        g[(0, 1)] = Complex64::new(0.0, 0.0);
        g[(1, 1)] = Complex64::new(0.0, 0.0);
        assert_eq!(sinr_mrc(&g, 1, 1.0), 0.0);
    }

    #[test]
    fn cholesky_path_agrees_with_adjugate_path() {
        // Embed a 2-antenna problem into 3 antennas with a zero third row:
        // the extra antenna only sees noise and contributes nothing.
        for seed in 0..20 {
            let g2 = random_gains(4, 2, seed);
            let g3 = CMatrix::from_fn(3, 4, |i, j| {
                if i < 2 {
                    g2[(i, j)]
                } else {
                    Complex64::new(0.0, 0.0)
                }
            });
            for m in 0..4 {
                let a = sinr_oc(&g2, m, 2.0).unwrap();
                let b = sinr_oc(&g3, m, 2.0).unwrap();
                assert!((a - b).abs() <= 1e-12 * a.max(1.0), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn oc_matches_brute_force_weight_search_for_two_antennas() {
        // SINR of weight w is rho |w^H g_m|^2 / (|w|^2 + rho sum |w^H g_j|^2);
        // sweep w over a fine grid of directions and compare the best value.
        let g = random_gains(4, 2, 42);
        let rho = 1.5;
        let m = 0;
        let mut best: f64 = 0.0;
        let steps = 400;
        for a in 0..=steps {
            let theta = std::f64::consts::FRAC_PI_2 * a as f64 / steps as f64;
            for p in 0..steps {
                let phi = std::f64::consts::TAU * p as f64 / steps as f64;
                let w = [
                    Complex64::new(theta.cos(), 0.0),
                    Complex64::from_polar(theta.sin(), phi),
                ];
                let proj = |j: usize| (w[0].conj() * g[(0, j)] + w[1].conj() * g[(1, j)]).norm_sqr();
                let interference: f64 = (1..4).map(proj).sum();
                best = best.max(rho * proj(m) / (1.0 + rho * interference));
            }
        }
        let oc = sinr_oc(&g, m, rho).unwrap();
        assert!(oc >= best - 1e-12);
        assert!((oc - best) / oc < 1e-3, "oc {oc} vs grid {best}");
    }

    proptest! {
        #[test]
        fn oc_dominates_mrc_and_sc(seed in any::<u64>(), rho in 0.01f64..100.0, n in 1usize..=4) {
            let g = random_gains(4, n, seed);
            for m in 0..4 {
                let oc = sinr_oc(&g, m, rho).unwrap();
                let mrc = sinr_mrc(&g, m, rho);
                let sc = sinr_sc(&g, m, rho);
                let slack = 1e-10 * oc.max(1.0);
                prop_assert!(oc + slack >= mrc, "oc {} < mrc {}", oc, mrc);
                prop_assert!(oc + slack >= sc, "oc {} < sc {}", oc, sc);
            }
        }

        #[test]
        fn sinr_nondecreasing_in_rho(seed in any::<u64>(), rho in 0.01f64..50.0, factor in 1.0f64..10.0) {
            let g = random_gains(4, 2, seed);
            for kind in CombinerKind::ALL {
                for m in 0..4 {
                    let lo = sinr(kind, &g, m, rho).unwrap();
                    let hi = sinr(kind, &g, m, rho * factor).unwrap();
                    prop_assert!(hi >= lo * (1.0 - 1e-12));
                }
            }
        }
    }
}
