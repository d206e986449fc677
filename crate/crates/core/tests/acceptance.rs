//! Acceptance gate: one line per criterion, nonzero exit if any fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use calderon::families::{log_family, multiply_traversed};
use calderon::forward::{forward, ConformalMap, ForwardResult};
use calderon::inverse::{near_fixed_subspace, objective_and_gradient, quadratic_residual};
use calderon::{align, is_simple, reconstruct, FourierCoefficients, Init, SolverConfig, SpectralMatrix};
use common::Poly;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const GRID: usize = 2048;
const SIMPLICITY_GRID: usize = 4096;
const PROXIMITY: f64 = 1e-3;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn build(p: &Poly, n: usize, grid: usize) -> ForwardResult {
    forward(&ConformalMap::new(p.0.clone()).expect("valid map"), n, grid).expect("forward build")
}

fn truth(p: &Poly, n: usize) -> FourierCoefficients {
    let mut g = common::boundary_coefficients(p, n, 2048);
    g[n] = Complex64::new(0.0, 0.0);
    FourierCoefficients::new(n, g).unwrap()
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn disk_identity() -> Outcome {
    let n = 16;
    let h = build(&Poly::real(&[0.0, 1.0]), n, 1024).matrix;
    let err = h.max_abs_diff(&SpectralMatrix::disk_hilbert(n));
    outcome(err <= 1e-10, format!("max |H - diag(sgn n)| = {err:.2e} (tol 1e-10)"))
}

fn printed_example() -> Outcome {
    let h = build(&common::asymmetric(), 3, GRID).matrix;
    let errs = common::printed_errors(h.entries());
    let ((m, n), worst) = errs.iter().copied().fold(((0, 0), 0.0), |a, b| if b.1 > a.1 { b } else { a });
    let raw: f64 = (0..7)
        .flat_map(|r| (0..7).map(move |c| (r, c)))
        .map(|(r, c)| (h.entries()[(r, c)] - Complex64::new(common::PRINTED_RE[r][c], common::PRINTED_IM[r][c])).norm())
        .fold(0.0, f64::max);
    outcome(
        worst <= 0.015,
        format!("max |conj(h) - printed| = {worst:.4} at (m,n) = ({m},{n}) (tol 0.015); unconjugated {raw:.3}"),
    )
}

fn fixed_point() -> Outcome {
    let n = 20;
    let mut parts = Vec::new();
    let mut pass = true;
    for (name, p) in [("dents", common::dented_disk()), ("cardioid-like", common::cardioid())] {
        let h = build(&p, n, GRID).matrix;
        let g = truth(&p, n);
        let d = common::fixed_point_defect(h.entries(), g.as_slice());
        pass &= d <= 1e-6;
        parts.push(format!("{name} {d:.2e}"));
    }
    outcome(pass, format!("|H g - g|/|g| at N=20: {} (tol 1e-6)", parts.join(", ")))
}

fn involution() -> Outcome {
    let n = 20;
    let h = build(&common::cardioid(), n, GRID).matrix;
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let v = FourierCoefficients::from_fn(n, |k| {
            if k == 0 || k.abs() > 10 {
                c(0.0)
            } else {
                Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
            }
        });
        let hhv = h.apply(&h.apply(&v));
        worst = worst.max(common::diff_norm(hhv.as_slice(), v.as_slice()) / v.norm());
    }
    outcome(worst <= 1e-6, format!("max |H^2 v - v|/|v| over 20 v = {worst:.2e} (tol 1e-6)"))
}

fn self_adjoint() -> Outcome {
    let maps = [
        ("disk N=16", Poly::real(&[0.0, 1.0]), 16),
        ("dents N=20", common::dented_disk(), 20),
        ("cardioid-like N=10", common::cardioid(), 10),
        ("cardioid-like N=20", common::cardioid(), 20),
        ("asymmetric N=3", common::asymmetric(), 3),
        ("asymmetric N=10", common::asymmetric(), 10),
    ];
    let mut worst = (0.0_f64, "");
    for (name, p, n) in &maps {
        let h = build(p, *n, GRID).matrix;
        let (row, col) = h.structural_zero_defect();
        let d = h.self_adjoint_defect().max(row).max(col);
        if d >= worst.0 {
            worst = (d, name);
        }
    }
    outcome(
        worst.0 <= 1e-8,
        format!("max defect over {} matrices = {:.2e} ({}) (tol 1e-8)", maps.len(), worst.0, worst.1),
    )
}

fn subspace_dimension() -> Outcome {
    let disk = near_fixed_subspace(&SpectralMatrix::disk_hilbert(8), 1e-3).map(|w| w.dim());
    let ex3 = near_fixed_subspace(&build(&common::cardioid(), 10, GRID).matrix, 1e-3).map(|w| w.dim());
    let pass = matches!(disk, Ok(8)) && matches!(ex3, Ok(10));
    outcome(pass, format!("L(disk, N=8) = {disk:?}, L(cardioid-like, N=10) = {ex3:?} at eps 1e-3"))
}

fn cardioid_reconstruction() -> Outcome {
    let h = build(&common::cardioid(), 10, GRID).matrix;
    match reconstruct(&h, &SolverConfig::default()) {
        Ok(r) => {
            let (_, d) = align(&truth(&common::cardioid(), 10), &r.gamma_hat);
            let f = r.objective();
            outcome(
                r.converged && f <= 1e-8 && r.iterations <= 10 && r.is_simple && d <= 1e-2,
                format!(
                    "F = {f:.1e} after {} iterations, simple = {}, distance = {d:.2e} (tol 1e-2)",
                    r.iterations, r.is_simple
                ),
            )
        }
        Err(e) => outcome(false, format!("error: {e}")),
    }
}

fn dented_disk_reconstruction() -> Outcome {
    let h = build(&common::dented_disk(), 20, GRID).matrix;
    match reconstruct(&h, &SolverConfig::default()) {
        Ok(r) => {
            let (_, d) = align(&truth(&common::dented_disk(), 20), &r.gamma_hat);
            outcome(
                r.converged && r.is_simple && d <= 5e-2,
                format!(
                    "converged = {} in {} iterations, simple = {}, distance = {d:.2e} (tol 5e-2)",
                    r.converged, r.iterations, r.is_simple
                ),
            )
        }
        Err(e) => outcome(false, format!("error: {e}")),
    }
}

fn log_family_solutions() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for z in [0.3, 0.6, 0.9] {
        let g = log_family(c(z), 40).unwrap();
        let res = quadratic_residual(&g).norm();
        let simple = is_simple(&g, SIMPLICITY_GRID, PROXIMITY).unwrap().simple;
        pass &= res <= 1e-6 && !simple;
        parts.push(format!("zeta {z}: residual {res:.1e}, simple {simple}"));
    }
    outcome(pass, format!("{} (tol 1e-6, want non-simple)", parts.join("; ")))
}

fn traversed_circles() -> Outcome {
    let mut pass = true;
    let mut worst: f64 = 0.0;
    let mut simple_flags = Vec::new();
    for n in 0..=4 {
        let g = multiply_traversed(n, 8);
        let res = quadratic_residual(&g).norm();
        let simple = is_simple(&g, SIMPLICITY_GRID, PROXIMITY).unwrap().simple;
        worst = worst.max(res);
        pass &= res <= 1e-14 && (n == 0 || !simple);
        simple_flags.push(simple);
    }
    outcome(pass, format!("max residual {worst:.1e}, simple for n=0..4: {simple_flags:?}"))
}

fn gradient_check() -> Outcome {
    let h = build(&common::cardioid(), 8, GRID).matrix;
    let basis = near_fixed_subspace(&h, 0.1).unwrap();
    let l = basis.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let step = 1e-5;
    let f = |cs: &[Complex64]| common::objective(basis.combine(cs).as_slice());
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let x: Vec<Complex64> =
            (0..l).map(|_| Complex64::new(rng.random_range(-0.7..0.7), rng.random_range(-0.7..0.7))).collect();
        let (_, grad) = objective_and_gradient(&basis, &x);
        let fd: Vec<Complex64> = (0..l)
            .map(|k| {
                let shifted = |d: Complex64| {
                    let mut y = x.clone();
                    y[k] += d;
                    f(&y)
                };
                let dx = (shifted(c(step)) - shifted(c(-step))) / (2.0 * step);
                let dy = (shifted(Complex64::new(0.0, step)) - shifted(Complex64::new(0.0, -step))) / (2.0 * step);
                Complex64::new(0.5 * dx, 0.5 * dy)
            })
            .collect();
        worst = worst.max(common::diff_norm(&grad, &fd) / common::norm(&fd));
    }
    outcome(worst <= 1e-6, format!("max relative error over 50 points = {worst:.2e} (tol 1e-6)"))
}

fn basin() -> Outcome {
    let h = build(&common::cardioid(), 10, GRID).matrix;
    let wrong = reconstruct(
        &h,
        &SolverConfig {
            init: Init::Coords(vec![c(1.0), c(1.0), c(1.64)]),
            ..SolverConfig::default()
        },
    );
    let right = reconstruct(&h, &SolverConfig::default());
    match (wrong, right) {
        (Ok(w), Ok(r)) => outcome(
            w.converged && !w.is_simple && r.converged && r.is_simple,
            format!(
                "init e1+e2+1.64e3: converged {} simple {} (F {:.1e}); init e1: converged {} simple {}",
                w.converged,
                w.is_simple,
                w.objective(),
                r.converged,
                r.is_simple
            ),
        ),
        (Err(e), _) | (_, Err(e)) => outcome(false, format!("error: {e}")),
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("disk identity", disk_identity),
        ("printed asymmetric matrix", printed_example),
        ("fixed-point identity", fixed_point),
        ("involution", involution),
        ("self-adjointness and structural zeros", self_adjoint),
        ("subspace dimension", subspace_dimension),
        ("reconstruction, cardioid-like domain", cardioid_reconstruction),
        ("reconstruction, disk with dents", dented_disk_reconstruction),
        ("logarithmic wrong-solution family", log_family_solutions),
        ("multiply traversed circles", traversed_circles),
        ("gradient vs finite differences", gradient_check),
        ("two-basin behaviour", basin),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let status = if o.pass { "PASS" } else { "FAIL" };
        if !o.pass {
            failed += 1;
        }
        println!("[{status}] {:>2} {name}: {} [{:.2}s]", i + 1, o.detail, start.elapsed().as_secs_f64());
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
