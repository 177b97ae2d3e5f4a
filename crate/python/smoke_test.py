"""Smoke test for the oppsched_py extension module.

Build and install first:

    maturin develop --release -m crates/python/Cargo.toml
"""

import math
import sys

import oppsched_py as op


def close(a, b, tol):
    return abs(a - b) <= tol


def main():
    assert op.COMBINERS == ["sc", "mrc", "oc"]

    sc = op.SinrModel("sc", 1.0)
    assert close(sc.cdf(1.0), (1.0 - math.exp(-1.0) / 8.0) ** 2, 1e-12)
    assert close(sc.cdf(2.0) + sc.sf(2.0), 1.0, 1e-15)
    f = sc.solve_factors(100)
    assert f.method == "numeric" and close(f.b_k, 2.0, 0.01), f
    approx = op.approx_factors("sc", 100)
    assert approx.method == "approx_rho1" and close(approx.b_k, 1.617, 1e-3), approx

    for name in op.COMBINERS:
        model = op.SinrModel(name, 5.0)
        assert close(model.hazard_limit(5e3), 5.0, 0.05)
        assert close(op.SinrModel(name, 1e9).cdf(1.0), op.sir_limit_cdf(name, 1.0), 1e-6)

    oc = op.SinrModel("oc", 1.0)
    exact = oc.exact_throughput(256)
    assert close(exact.value, 9.325457820321576, 1e-8), exact
    asym = op.asymptotic_throughput(oc.solve_factors(256))
    assert abs(asym.value - exact.value) / exact.value < 0.05, asym
    assert 1.0 < oc.scaling_ratio(10**6) < 1.1

    cfg = op.SystemConfig(users=64, rho=1.0)
    first = op.simulate_sum_rate(cfg, "oc", 2000, seed=7)
    again = op.simulate_sum_rate(cfg, "oc", 2000, seed=7)
    assert first.value == again.value and first.stderr == again.stderr
    truth = oc.exact_throughput(64).value
    assert abs(first.value - truth) <= 4.0 * first.stderr, (first, truth)

    samples = op.sample_effective_sinrs(op.SystemConfig(1, 1.0), "mrc", 1000, beam=3)
    assert len(samples) == 1000 and min(samples) >= 0.0

    for bad in (lambda: op.SinrModel("zf", 1.0), lambda: op.SystemConfig(0, 1.0), lambda: sc.cdf(-1.0)):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")

    print("oppsched_py smoke test passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
