use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fueter_lab::config::SuiteConfig;
use fueter_lab::{conjugate, moments, reconstruct, verify, Backend, LabError, EXIT_MISMATCH, EXIT_OK};

/// Verification suites for quaternionic regularity on domains of C^2.
#[derive(Parser, Debug)]
#[command(name = "fueter-lab", version)]
struct Cli {
    /// TOML configuration; defaults apply when omitted.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Overrides the configured corpus seed.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Overrides the configured output directory.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Overrides the configured scalar backend.
    #[arg(long, global = true, value_enum)]
    backend: Option<Backend>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Boundary criteria against direct operator checks on a seeded corpus.
    Verify,
    /// Convergence table of the boundary-integral reconstructions.
    Reconstruct,
    /// Conjugate harmonic f2 of a harmonic f1 (polynomial JSON file).
    Conjugate {
        /// Polynomial JSON file holding f1.
        input: PathBuf,
    },
    /// Quadrature moments on the unit sphere against the closed form.
    Moments,
}

fn load(cli: &Cli) -> Result<(SuiteConfig, PathBuf), LabError> {
    let mut cfg = match &cli.config {
        Some(path) => SuiteConfig::load(path)?,
        None => SuiteConfig::default(),
    };
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    if let Some(backend) = cli.backend {
        cfg.backend = backend;
    }
    let out = cli.out.clone().unwrap_or_else(|| PathBuf::from(&cfg.out));
    Ok((cfg, out))
}

fn verdict(passed: bool) -> i32 {
    if passed {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

fn run(cli: &Cli) -> Result<i32, LabError> {
    let (cfg, out) = load(cli)?;
    match &cli.command {
        Command::Verify => {
            let (report, path) = verify::command(&cfg, &out)?;
            let c = &report.confusion;
            for (name, m) in [("eq2", &c.eq2), ("cor1", &c.cor1), ("cor2", &c.cor2)] {
                println!(
                    "{name}: tp {} fn {} fp {} tn {}{}",
                    m.true_positive,
                    m.false_negative,
                    m.false_positive,
                    m.true_negative,
                    if m.diagonal() { "" } else { "  MISMATCH" }
                );
            }
            let thm4_bad = report.thm4.iter().filter(|t| !t.matches).count();
            println!("thm4: {} cases, {} mismatches", report.thm4.len(), thm4_bad);
            println!(
                "weak: max positive defect {:e}, conj z2 defect {:e}",
                report.weak.max_positive_defect, report.weak.zbar2_defect
            );
            println!("report: {}", path.display());
            Ok(verdict(report.passed))
        }
        Command::Reconstruct => {
            let (table, path) = reconstruct::command(&cfg, &out)?;
            for r in &table.rows {
                println!(
                    "{:<10} {:<13} {:<8} ({:>3},{:>3},{:>3})  {:.3e}",
                    r.function, r.method, r.target, r.eta, r.xi1, r.xi2, r.abs_error
                );
            }
            for f in &table.failures {
                eprintln!("FAIL {f}");
            }
            println!("table: {}", path.display());
            Ok(verdict(table.passed()))
        }
        Command::Conjugate { input } => {
            let (output, path) = conjugate::command(&cfg, input, &out)?;
            println!("dprime_residual_exact_zero: {}", output.certificate.dprime_residual_exact_zero);
            if !output.certificate.compat_components.is_empty() {
                println!("incompatible components: {:?}", output.certificate.compat_components);
            }
            println!("output: {}", path.display());
            Ok(verdict(output.passed()))
        }
        Command::Moments => {
            let outcome = moments::command(cfg.orders(), &out)?;
            println!("{} moments, worst error {:e}", outcome.rows.len(), outcome.worst);
            println!("table: {}", outcome.table.display());
            println!("nodes: {}", outcome.nodes.display());
            Ok(verdict(outcome.worst < moments::TOLERANCE))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
