//! Acceptance criteria 1-11. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; the process exits nonzero
//! if any criterion fails.

use std::f64::consts::PI;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use fueter_core::boundary::Domain;
use fueter_core::criteria::quaternion_l_trace;
use fueter_core::criteria::quaternion_trace;
use fueter_core::forms::{bm_harmonic_repr, omega_display, split_u_omega, EvalGuard, KernelCache};
use fueter_core::neumann::{harmonic_basis, BallNeumann};
use fueter_core::quadrature::{QuadOrders, SurfaceQuadrature};
use fueter_core::wirtinger::is_psi_regular;
use fueter_core::{ComplexPair, WPoly, Q};
use fueter_lab::corpus::{self, rng, Rng};
use fueter_lab::{moments, verify, SuiteConfig};
use num_complex::Complex;
use rand::RngExt;

type Outcome = Result<String, String>;

fn pair(x: [f64; 4]) -> ComplexPair<f64> {
    ComplexPair::new(Complex::new(x[0], x[1]), Complex::new(x[2], x[3]))
}

fn norm(x: &[f64; 4]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

fn unit_direction(rng: &mut Rng) -> [f64; 4] {
    loop {
        let x: [f64; 4] = std::array::from_fn(|_| rng.random_range(-1.0..1.0));
        let n = norm(&x);
        if n > 0.1 && n <= 1.0 {
            return x.map(|v| v / n);
        }
    }
}

fn within(limit: Duration, elapsed: Duration) -> Result<(), String> {
    if elapsed < limit {
        Ok(())
    } else {
        Err(format!("took {:.1} s, limit {} s", elapsed.as_secs_f64(), limit.as_secs()))
    }
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn default_entries() -> Result<(SuiteConfig, Vec<verify::EntryReport>, Duration), String> {
    let cfg = SuiteConfig::default();
    let start = Instant::now();
    let entries = verify::corpus(&cfg);
    let domain = cfg.domain().map_err(|e| e.to_string())?;
    let reports = verify::check_entries(&cfg, &entries, &domain).map_err(|e| e.to_string())?;
    Ok((cfg, reports, start.elapsed()))
}

fn eq2_equivalence() -> Outcome {
    let (_, reports, elapsed) = default_entries()?;
    let c = verify::confusion(&reports).eq2;
    within(Duration::from_secs(10), elapsed)?;
    let labels = reports.iter().all(|e| e.psi_regular == e.expected_psi_regular);
    check(
        reports.len() == 50 && c.diagonal() && labels,
        format!(
            "{} functions, tp {} fn {} fp {} tn {}, {:.2} s",
            reports.len(),
            c.true_positive,
            c.false_negative,
            c.false_positive,
            c.true_negative,
            elapsed.as_secs_f64()
        ),
    )
}

fn reflected_equivalence() -> Outcome {
    let (_, reports, _) = default_entries()?;
    let c = verify::confusion(&reports).cor1;
    let mismatches = c.false_negative + c.false_positive;
    check(
        reports.len() == 50 && mismatches == 0,
        format!("{} functions, {} regular after reflection, {mismatches} mismatches", c.total(), c.true_positive),
    )
}

fn conjugate_construction() -> Outcome {
    let start = Instant::now();
    let family = corpus::harmonic_family(SuiteConfig::default().seed, 100, 6);
    let solver = BallNeumann::<Q>::new(6);
    let sphere = Domain::<Q>::unit_sphere();
    let mut failures = Vec::new();
    let mut holomorphic = 0;
    for (k, f1) in family.iter().enumerate() {
        let f = solver.operator_r(f1).map_err(|e| format!("function {k}: {e}"))?;
        if !is_psi_regular(&f) {
            failures.push(format!("{k}: D' R(f1) != 0"));
        }
        if !sphere.vanishes_on_boundary(&(&solver.operator_c(&f) - f1)) {
            failures.push(format!("{k}: C(R(f1)) != f1"));
        }
        if f1.is_holomorphic() {
            holomorphic += 1;
            if !f.f2.is_zero() || f.f1 != *f1 {
                failures.push(format!("{k}: R(f1) != f1 + 0j for holomorphic f1"));
            }
        }
    }
    let elapsed = start.elapsed();
    within(Duration::from_secs(30), elapsed)?;
    check(
        failures.is_empty(),
        if failures.is_empty() {
            format!("100 functions ({holomorphic} holomorphic), {:.2} s", elapsed.as_secs_f64())
        } else {
            failures.join("; ")
        },
    )
}

fn normal_derivative_kernel() -> Outcome {
    let sphere = Domain::<Q>::unit_sphere();
    let (mut count, mut exceptions) = (0, Vec::new());
    for n in 0..=6u32 {
        for p in 0..=n {
            let q = n - p;
            for h in harmonic_basis::<Q>(p, q) {
                count += 1;
                let vanishes = sphere.vanishes_on_boundary(&sphere.op_dbar_n(&h).numerator);
                if vanishes != (q == 0) || (vanishes && !h.is_holomorphic()) {
                    exceptions.push(format!("({p},{q})"));
                }
            }
        }
    }
    check(exceptions.is_empty(), format!("{count} basis elements, exceptions {exceptions:?}"))
}

struct Grid {
    quad: SurfaceQuadrature,
    cache: KernelCache,
    interior: Vec<ComplexPair<f64>>,
}

fn grid() -> Result<Grid, String> {
    let quad = SurfaceQuadrature::hopf(QuadOrders::uniform(32)).map_err(|e| e.to_string())?;
    let mut rng = rng(0x5eed);
    let mut targets = Vec::new();
    for _ in 0..10 {
        let r = 0.5 * rng.random_range(0.0f64..1.0).powf(0.25);
        targets.push(pair(unit_direction(&mut rng).map(|v| v * r)));
    }
    for _ in 0..10 {
        let r = rng.random_range(2.0..3.0);
        targets.push(pair(unit_direction(&mut rng).map(|v| v * r)));
    }
    let cache = KernelCache::build(&quad, &targets, &EvalGuard::default()).map_err(|e| e.to_string())?;
    Ok(Grid { interior: targets[..10].to_vec(), quad, cache })
}

fn reproduction_errors(grid: &Grid) -> (f64, f64, f64, usize) {
    let sphere = Domain::<f64>::unit_sphere();
    let entries = verify::corpus(&SuiteConfig::default());
    let (mut inner, mut outer, mut prop1) = (0.0f64, 0.0f64, 0.0f64);
    let mut count = 0;
    for e in entries.iter().filter(|e| e.expected && e.f.degree().is_some_and(|d| d <= 4)) {
        count += 1;
        let f = e.f.to_f64();
        let tr = quaternion_trace(&grid.quad, &f);
        let lf = quaternion_l_trace(&grid.quad, &sphere, &f);
        for (t, z) in grid.cache.targets().iter().enumerate() {
            let cf = grid.cache.cauchy_fueter(&grid.quad, t, &tr);
            let p1 = grid.cache.prop1(&grid.quad, t, &tr, &lf);
            prop1 = prop1.max((cf.clone() - p1).abs());
            if t < grid.interior.len() {
                inner = inner.max((cf - f.eval(z)).abs());
            } else {
                outer = outer.max(cf.abs());
            }
        }
    }
    (inner, outer, prop1, count)
}

fn cauchy_fueter_reproduction() -> Outcome {
    let start = Instant::now();
    let grid = grid()?;
    let (inner, outer, _, count) = reproduction_errors(&grid);
    let zeros = vec![Complex::new(0.0, 0.0); grid.quad.len()];
    let ones = vec![Complex::new(1.0, 0.0); grid.quad.len()];
    let unit = bm_harmonic_repr(&grid.quad, &ones, &zeros, &pair([0.0; 4]), &EvalGuard::default())
        .map_err(|e| e.to_string())?;
    let unit_err = (unit - 1.0).norm_sqr().sqrt();
    let elapsed = start.elapsed();
    within(Duration::from_secs(120), elapsed)?;
    check(
        count > 0 && inner < 1e-8 && outer < 1e-8 && unit_err < 1e-12,
        format!(
            "{count} functions, interior {inner:.1e}, exterior {outer:.1e}, unit {unit_err:.1e}, {:.1} s",
            elapsed.as_secs_f64()
        ),
    )
}

fn decomposed_reconstruction() -> Outcome {
    let grid = grid()?;
    let (_, _, prop1, count) = reproduction_errors(&grid);
    check(count > 0 && prop1 < 1e-10, format!("{count} functions x 20 points, max difference {prop1:.1e}"))
}

fn kernel_split() -> Outcome {
    let mut rng = rng(0x0e9a);
    let mut worst = 0.0f64;
    let mut samples = 0;
    while samples < 1000 {
        let zeta: [f64; 4] = std::array::from_fn(|_| rng.random_range(-2.0..2.0));
        let z: [f64; 4] = std::array::from_fn(|_| rng.random_range(-2.0..2.0));
        if norm(&std::array::from_fn(|k| zeta[k] - z[k])) < 0.5 {
            continue;
        }
        let frame: [[f64; 4]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| rng.random_range(-1.0..1.0)));
        let (_, omega) = split_u_omega(&pair(zeta), &pair(z), 1e-12).map_err(|e| e.to_string())?;
        let display = omega_display(&pair(zeta), &pair(z), 1e-12).map_err(|e| e.to_string())?;
        worst = worst.max((omega.eval(&frame) - display.eval(&frame)).norm_sqr().sqrt());
        samples += 1;
    }
    check(worst < 1e-13, format!("{samples} samples, max {worst:.1e}"))
}

fn quadrature_moments() -> Outcome {
    let quad = SurfaceQuadrature::hopf(QuadOrders::uniform(32)).map_err(|e| e.to_string())?;
    let rows = moments::table(&quad);
    let worst = moments::worst(&rows);
    let area = 2.0 * PI * PI;
    let area_err = (quad.total_weight() - area).abs() / area;
    check(worst < 1e-12 && area_err < 1e-12, format!("{} moments, worst {worst:.1e}, area {area_err:.1e}", rows.len()))
}

fn weak_condition() -> Outcome {
    let cfg = SuiteConfig::default();
    let entries = verify::corpus(&cfg);
    let domain = cfg.domain().map_err(|e| e.to_string())?;
    let weak = verify::check_weak(&cfg, &entries, &domain).map_err(|e| e.to_string())?;
    check(
        weak.max_positive_defect < 1e-8 && weak.zbar2_defect > 1e-3,
        format!(
            "{} test functions, positive defect {:.1e}, zbar2 defect {:.1e}",
            weak.phi_count, weak.max_positive_defect, weak.zbar2_defect
        ),
    )
}

fn holomorphy_criterion() -> Outcome {
    let cfg = SuiteConfig::default();
    let entries = verify::corpus(&cfg);
    let domain = cfg.domain().map_err(|e| e.to_string())?;
    let suite =
        verify::check_thm4_suite(&cfg, &verify::thm4_functions(&entries), &domain).map_err(|e| e.to_string())?;
    let zb1 = fueter_lab::polyjson::pretty(&WPoly::<Q>::z1bar());
    let mut problems = Vec::new();
    for t in &suite {
        if !t.matches || (t.holomorphic && !t.exact_zero) {
            problems.push(format!("h = {}, f = {}", t.h, t.f));
        }
        if t.f == zb1 && (t.exact_zero || t.witnesses == 0) {
            problems.push(format!("h = {}: zb1 not rejected", t.h));
        }
    }
    let zb1_rows = suite.iter().filter(|t| t.f == zb1).count();
    check(
        problems.is_empty() && zb1_rows == 2,
        format!("{} checks over h = (1,0), (1,z1), problems {problems:?}", suite.len()),
    )
}

fn run_cli(args: &[&str], out: &Path) -> Result<(), String> {
    let status = Command::new(env!("CARGO_BIN_EXE_fueter-lab"))
        .args(args)
        .arg("--out")
        .arg(out)
        .output()
        .map_err(|e| e.to_string())?;
    if status.status.success() {
        Ok(())
    } else {
        Err(format!("{args:?} exited with {:?}: {}", status.status.code(), String::from_utf8_lossy(&status.stderr)))
    }
}

fn without_seconds(csv: &str) -> String {
    let mut lines = Vec::new();
    for line in csv.lines() {
        let cols: Vec<&str> = line.split(',').collect();
        lines.push(cols[..cols.len() - 1].join(","));
    }
    lines.join("\n")
}

fn determinism() -> Outcome {
    let dirs = [tempfile::tempdir().map_err(|e| e.to_string())?, tempfile::tempdir().map_err(|e| e.to_string())?];
    for d in &dirs {
        run_cli(&["verify"], d.path())?;
        run_cli(&["reconstruct"], d.path())?;
    }
    let read = |d: &tempfile::TempDir, name: &str| std::fs::read(d.path().join(name)).map_err(|e| e.to_string());
    let verify_same = read(&dirs[0], verify::REPORT_FILE)? == read(&dirs[1], verify::REPORT_FILE)?;
    let table = |d: &tempfile::TempDir| {
        read(d, fueter_lab::reconstruct::TABLE_FILE).map(|b| without_seconds(&String::from_utf8_lossy(&b)))
    };
    let reconstruct_same = table(&dirs[0])? == table(&dirs[1])?;
    check(
        verify_same && reconstruct_same,
        format!(
            "verify.json identical: {verify_same}, reconstruct.csv identical (wall time excluded): {reconstruct_same}"
        ),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("boundary equation equivalence", eq2_equivalence),
        ("regularity equivalence via reflection", reflected_equivalence),
        ("conjugate harmonic construction", conjugate_construction),
        ("normal derivative vanishes only on holomorphic", normal_derivative_kernel),
        ("Cauchy-Fueter reproduction", cauchy_fueter_reproduction),
        ("decomposed reconstruction", decomposed_reconstruction),
        ("kernel split", kernel_split),
        ("quadrature moments", quadrature_moments),
        ("weak condition", weak_condition),
        ("holomorphy criterion", holomorphy_criterion),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail}) [{secs:.2} s]", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({detail}) [{secs:.2} s]", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
