//! `eop` — construct rationally extended three-body potentials, evaluate
//! their closed-form spectra and eigenfunctions, and verify every claim
//! against independent numerical oracles.
//!
//! Subcommands: `identities`, `spectrum`, `sample`, `tables`, `verify`.
//! Exit codes: 0 success, 1 verification failure, 2 usage/parameter error,
//! 3 I/O error.

mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use eop_core::families::{
    angular_potential, radial_potential, solve_params, Couplings, FamilyId,
};
use eop_core::numverify::tolerances::{DEFAULT_GRID_POINTS, RADIAL_INNER_CUTOFF};
use eop_core::numverify::{spectrum_match_with, Channel, GridSpec, SpectrumReport};
use eop_core::report::DefaultsEcho;
use eop_core::spectra::{
    angular_validity, energy, lambda_ell, AngularWavefunction, QuantumNumbers,
    RadialWavefunction,
};
use eop_core::verify::{
    full_verification, general_p_catalog, identity_sweep, x1_catalog, VerifyOptions,
    REFERENCE_F1, REFERENCE_G,
};
use eop_core::{EopError, Result};

use config::FileConfig;
use output::{csv_document, render_report, write_output, CsvRow};

// ---------------------------------------------------------------------------
// Command line
// ---------------------------------------------------------------------------

#[derive(Parser)]
#[command(
    name = "eop",
    version,
    about = "Rationally extended three-body potentials: spectra, eigenfunctions, verification",
    after_help = "Exit codes: 0 success, 1 verification failure, 2 usage/parameter error, 3 I/O error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Audit the six sector-angle identities and both configuration-space
    /// forms of the angular variable over random sweeps.
    Identities(IdentitiesArgs),
    /// Closed-form spectrum E_{n,l}, optionally cross-checked against grid
    /// diagonalization / operator residuals.
    Spectrum(SpectrumArgs),
    /// Sample a potential or eigenfunction onto a CSV curve.
    Sample(SampleArgs),
    /// Emit the two machine-readable family tables, each row stamped by the
    /// verification suite.
    Tables(TablesArgs),
    /// Run the full verification suite and emit one JSON report.
    Verify(VerifyArgs),
}

/// Flags shared by every subcommand; file config fills gaps, built-in
/// defaults fill the rest.
#[derive(Args, Clone)]
struct CommonArgs {
    /// Potential family: scarf | pt2 | pt | pt-rm | pt-eckart [default: scarf]
    #[arg(long)]
    family: Option<String>,
    /// Oscillator strength omega > 0 [default: 1]
    #[arg(long)]
    omega: Option<f64>,
    /// Pairwise inverse-square coupling g > -1/2 [default: 4]
    #[arg(long)]
    g: Option<f64>,
    /// Three-body coupling f1 (family-specific reality bounds) [default: 2]
    #[arg(long)]
    f1: Option<f64>,
    /// Radial extension order m >= 0 [default: 1]
    #[arg(long)]
    m: Option<usize>,
    /// Angular extension order p >= 1 [default: 1]
    #[arg(long)]
    p: Option<usize>,
    /// Highest radial excitation n [default: 3]
    #[arg(long)]
    nmax: Option<usize>,
    /// Highest angular level l [default: 2]
    #[arg(long)]
    lmax: Option<usize>,
    /// Grid points for numerical oracles and sampled curves [default: 2048]
    #[arg(long = "grid-points")]
    grid_points: Option<usize>,
    /// Output format: json for reports, csv for sampled curves
    #[arg(long)]
    format: Option<String>,
    /// Output path (stdout when omitted; a directory for `tables`)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seed for the random sweeps [default: 7]
    #[arg(long)]
    seed: Option<u64>,
    /// Flat key=value config file mirroring the flags; flags override it
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct IdentitiesArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Random pole-avoiding angles for the identity sweep [default: 10000]
    #[arg(long)]
    samples: Option<usize>,
    /// Random configurations for the xi-equivalence sweep [default: 1000]
    #[arg(long = "xi-samples")]
    xi_samples: Option<usize>,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// analytic | numeric | both [default: both]
    #[arg(long)]
    mode: Option<String>,
}

#[derive(Args)]
struct SampleArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// What to sample: potential | wavefunction [default: potential]
    #[arg(long)]
    target: Option<String>,
    /// Separated channel: radial | angular [default: radial]
    #[arg(long)]
    channel: Option<String>,
    /// Radial excitation n of a sampled wavefunction [default: 0]
    #[arg(long)]
    n: Option<usize>,
    /// Angular level l of the sampled channel [default: 0]
    #[arg(long)]
    ell: Option<usize>,
}

#[derive(Args)]
struct TablesArgs {
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Random angles for the identity sweep [default: 10000]
    #[arg(long)]
    samples: Option<usize>,
    /// Random configurations for the xi-equivalence sweep [default: 1000]
    #[arg(long = "xi-samples")]
    xi_samples: Option<usize>,
    /// Highest radial extension order in the residual sweep [default: 2]
    #[arg(long)]
    mmax: Option<usize>,
    /// Highest angular extension order in the residual sweep [default: 2]
    #[arg(long)]
    pmax: Option<usize>,
    /// Angular levels checked per spectrum report [default: 4]
    #[arg(long)]
    levels: Option<usize>,
}

// ---------------------------------------------------------------------------
// Resolved run configuration
// ---------------------------------------------------------------------------

/// The fully resolved run: flags over config file over built-in defaults.
struct Run {
    family: Option<FamilyId>,
    omega: f64,
    g: f64,
    f1: f64,
    m: usize,
    p: usize,
    nmax: usize,
    lmax: usize,
    grid_points: usize,
    format: String,
    out: Option<PathBuf>,
    seed: u64,
    file: FileConfig,
}

impl Run {
    fn resolve(common: &CommonArgs, default_format: &str) -> Result<Run> {
        let file = match &common.config {
            Some(path) => FileConfig::load(path)?,
            None => FileConfig::default(),
        };
        let family = match file.resolve_opt(common.family.clone(), "family")? {
            Some(name) => Some(FamilyId::parse(&name)?),
            None => None,
        };
        let format = file.resolve(
            common.format.clone(),
            "format",
            default_format.to_string(),
        )?;
        if format != "json" && format != "csv" {
            return Err(EopError::UsageError(format!(
                "unknown format `{format}` (expected json|csv)"
            )));
        }
        Ok(Run {
            family,
            omega: file.resolve(common.omega, "omega", 1.0)?,
            g: file.resolve(common.g, "g", REFERENCE_G)?,
            f1: file.resolve(common.f1, "f1", REFERENCE_F1)?,
            m: file.resolve(common.m, "m", 1)?,
            p: file.resolve(common.p, "p", 1)?,
            nmax: file.resolve(common.nmax, "nmax", 3)?,
            lmax: file.resolve(common.lmax, "lmax", 2)?,
            grid_points: file.resolve(common.grid_points, "grid-points", DEFAULT_GRID_POINTS)?,
            format,
            out: file.resolve_opt(common.out.clone(), "out")?,
            seed: file.resolve(common.seed, "seed", 7)?,
            file,
        })
    }

    /// The family, defaulting to the sine-map family for the commands that
    /// need one.
    fn family_or_default(&self) -> FamilyId {
        self.family.unwrap_or(FamilyId::Scarf)
    }

    fn couplings(&self) -> Result<Couplings> {
        Couplings::new(self.omega, self.g, self.f1, self.m, self.p)
    }

    fn defaults_echo(&self) -> DefaultsEcho {
        DefaultsEcho {
            family: self.family.map(|f| f.name().to_string()),
            omega: self.omega,
            g: self.g,
            f1: self.f1,
            m: self.m,
            p: self.p,
            nmax: self.nmax,
            lmax: self.lmax,
            grid_points: self.grid_points,
            format: self.format.clone(),
            seed: self.seed,
        }
    }

    fn require_json(&self, command: &str) -> Result<()> {
        if self.format != "json" {
            return Err(EopError::UsageError(format!(
                "`eop {command}` emits JSON reports; csv applies to `eop sample` only"
            )));
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// identities
// ---------------------------------------------------------------------------

fn cmd_identities(args: &IdentitiesArgs) -> Result<u8> {
    let run = Run::resolve(&args.common, "json")?;
    run.require_json("identities")?;
    let samples = run.file.resolve(args.samples, "samples", 10_000)?;
    let xi_samples = run.file.resolve(args.xi_samples, "xi-samples", 1_000)?;
    let sweep = identity_sweep(samples, xi_samples, run.seed)?;
    let text = render_report("identities", &run.defaults_echo(), &sweep)?;
    write_output(run.out.as_deref(), &text)?;
    Ok(if sweep.pass { 0 } else { 1 })
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct EnergyLine {
    n: usize,
    energy: f64,
}

#[derive(Serialize)]
struct SpectrumLevel {
    ell: usize,
    lambda: Option<f64>,
    lambda_sq: Option<f64>,
    excluded: Option<String>,
    energies: Vec<EnergyLine>,
}

#[derive(Serialize)]
struct SpectrumPayload {
    family: String,
    mode: String,
    analytic: Option<Vec<SpectrumLevel>>,
    numeric: Option<NumericSection>,
    pass: bool,
}

#[derive(Serialize)]
struct NumericSection {
    /// One radial verification per valid angular level (ladder at lambda_l).
    radial: Vec<SpectrumReport>,
    /// Angular verification across levels 0..=lmax.
    angular: SpectrumReport,
    max_rel_error: Option<f64>,
    max_residual: Option<f64>,
    pass: bool,
}

fn analytic_levels(
    family: FamilyId,
    c: &Couplings,
    lmax: usize,
    nmax: usize,
) -> Result<Vec<SpectrumLevel>> {
    let sp = solve_params(family, c)?;
    let validity = angular_validity(family, c)?;
    let mut levels = Vec::with_capacity(lmax + 1);
    for ell in 0..=lmax {
        if let Some(reason) = validity.exclusion_reason(ell) {
            levels.push(SpectrumLevel {
                ell,
                lambda: None,
                lambda_sq: None,
                excluded: Some(reason.to_string()),
                energies: Vec::new(),
            });
            continue;
        }
        let lam = lambda_ell(family, &sp, ell)?;
        let energies = (0..=nmax)
            .map(|n| {
                energy(c, QuantumNumbers::new(n, ell), lam)
                    .map(|e| EnergyLine { n, energy: e })
            })
            .collect::<Result<Vec<_>>>()?;
        levels.push(SpectrumLevel {
            ell,
            lambda: Some(lam),
            lambda_sq: Some(lam * lam),
            excluded: None,
            energies,
        });
    }
    Ok(levels)
}

fn numeric_section(family: FamilyId, c: &Couplings, run: &Run) -> Result<NumericSection> {
    let sp = solve_params(family, c)?;
    let validity = angular_validity(family, c)?;
    let mut radial = Vec::new();
    for ell in 0..=run.lmax {
        if !validity.is_valid(ell) {
            continue;
        }
        let lam = lambda_ell(family, &sp, ell)?;
        radial.push(spectrum_match_with(
            family,
            c,
            Channel::Radial { lambda: lam },
            run.nmax + 1,
            run.grid_points,
        )?);
    }
    let angular = spectrum_match_with(family, c, Channel::Angular, run.lmax + 1, run.grid_points)?;
    let reports = radial.iter().chain(std::iter::once(&angular));
    let max_rel_error = reports
        .clone()
        .filter_map(|r| r.max_rel_error)
        .fold(None, |acc: Option<f64>, v| Some(acc.map_or(v, |a| a.max(v))));
    let max_residual = reports
        .clone()
        .filter_map(|r| r.max_residual)
        .fold(None, |acc: Option<f64>, v| Some(acc.map_or(v, |a| a.max(v))));
    let pass = radial.iter().all(|r| r.pass) && angular.pass;
    Ok(NumericSection { radial, angular, max_rel_error, max_residual, pass })
}

fn cmd_spectrum(args: &SpectrumArgs) -> Result<u8> {
    let run = Run::resolve(&args.common, "json")?;
    run.require_json("spectrum")?;
    let mode = run
        .file
        .resolve(args.mode.clone(), "mode", "both".to_string())?;
    if !matches!(mode.as_str(), "analytic" | "numeric" | "both") {
        return Err(EopError::UsageError(format!(
            "unknown mode `{mode}` (expected analytic|numeric|both)"
        )));
    }
    let family = run.family_or_default();
    let c = run.couplings()?;
    // Surface coupling problems before any report assembly so the violated
    // bound is named on stderr and the exit code is a usage error.
    solve_params(family, &c)?;

    let analytic = if mode != "numeric" {
        Some(analytic_levels(family, &c, run.lmax, run.nmax)?)
    } else {
        None
    };
    let numeric = if mode != "analytic" {
        Some(numeric_section(family, &c, &run)?)
    } else {
        None
    };
    let pass = numeric.as_ref().map_or(true, |n| n.pass);
    let payload = SpectrumPayload {
        family: family.name().to_string(),
        mode,
        analytic,
        numeric,
        pass,
    };
    let text = render_report("spectrum", &run.defaults_echo(), &payload)?;
    write_output(run.out.as_deref(), &text)?;
    Ok(if pass { 0 } else { 1 })
}

// ---------------------------------------------------------------------------
// sample
// ---------------------------------------------------------------------------

/// Midpoint samples of an open interval: n points, none on the endpoints
/// (the angular potentials diverge at the sector walls).
fn midpoints(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let h = (hi - lo) / n as f64;
    (0..n).map(|i| lo + (i as f64 + 0.5) * h).collect()
}

fn cmd_sample(args: &SampleArgs) -> Result<u8> {
    let run = Run::resolve(&args.common, "csv")?;
    if run.format != "csv" {
        return Err(EopError::UsageError(
            "`eop sample` emits CSV curves; JSON reports come from the other commands".into(),
        ));
    }
    let target = run
        .file
        .resolve(args.target.clone(), "target", "potential".to_string())?;
    let channel = run
        .file
        .resolve(args.channel.clone(), "channel", "radial".to_string())?;
    let n = run.file.resolve(args.n, "n", 0)?;
    let ell = run.file.resolve(args.ell, "ell", 0)?;
    let family = run.family_or_default();
    let c = run.couplings()?;
    let sp = solve_params(family, &c)?;

    let rows = match (channel.as_str(), target.as_str()) {
        ("radial", "potential") => {
            let lam = lambda_ell(family, &sp, ell)?;
            midpoints(RADIAL_INNER_CUTOFF, GridSpec::radial_rmax(run.omega), run.grid_points)
                .into_iter()
                .map(|r| {
                    radial_potential(&c, lam, r).map(|v| CsvRow { x: r, re: v, im: 0.0 })
                })
                .collect::<Result<Vec<_>>>()?
        }
        ("radial", "wavefunction") => {
            let lam = lambda_ell(family, &sp, ell)?;
            let mut rw = RadialWavefunction::new(&c, lam, n)?;
            rw.normalize()?;
            midpoints(RADIAL_INNER_CUTOFF, GridSpec::radial_rmax(run.omega), run.grid_points)
                .into_iter()
                .map(|r| rw.eval(r).map(|v| CsvRow { x: r, re: v, im: 0.0 }))
                .collect::<Result<Vec<_>>>()?
        }
        ("angular", "potential") => {
            let (lo, hi) = family.angular_domain();
            midpoints(lo, hi, run.grid_points)
                .into_iter()
                .map(|phi| {
                    angular_potential(family, &sp, &c, c.p, phi)
                        .map(|v| CsvRow { x: phi, re: v.re, im: v.im })
                })
                .collect::<Result<Vec<_>>>()?
        }
        ("angular", "wavefunction") => {
            let validity = angular_validity(family, &c)?;
            if let Some(reason) = validity.exclusion_reason(ell) {
                return Err(EopError::OutOfRange(format!(
                    "angular level {ell} is not part of the spectrum: {reason}"
                )));
            }
            let mut aw = AngularWavefunction::new(family, &sp, ell, c.p)?;
            aw.normalize()?;
            let (lo, hi) = family.angular_domain();
            midpoints(lo, hi, run.grid_points)
                .into_iter()
                .map(|phi| aw.eval(phi).map(|v| CsvRow { x: phi, re: v.re, im: v.im }))
                .collect::<Result<Vec<_>>>()?
        }
        _ => {
            return Err(EopError::UsageError(format!(
                "unknown sample selection channel=`{channel}` target=`{target}` \
                 (expected channel radial|angular, target potential|wavefunction)"
            )))
        }
    };
    write_output(run.out.as_deref(), &csv_document(&rows))?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// tables
// ---------------------------------------------------------------------------

fn cmd_tables(args: &TablesArgs) -> Result<u8> {
    let run = Run::resolve(&args.common, "json")?;
    run.require_json("tables")?;
    let x1 = x1_catalog(run.omega, run.g, run.f1, run.grid_points)?;
    let general = general_p_catalog(run.omega, run.g, run.f1, run.grid_points)?;

    let dir = run.out.clone().unwrap_or_else(|| PathBuf::from("."));
    std::fs::create_dir_all(&dir)
        .map_err(|e| EopError::Io(format!("creating {}: {e}", dir.display())))?;
    let defaults = run.defaults_echo();
    let mut all_pass = true;
    for (catalog, file) in [(&x1, "table_x1.json"), (&general, "table_general_p.json")] {
        let path = dir.join(file);
        let text = render_report("tables", &defaults, catalog)?;
        write_output(Some(&path), &text)?;
        all_pass &= catalog.pass;
        println!(
            "{}: {} ({} rows)",
            path.display(),
            if catalog.pass { "PASS" } else { "FAIL" },
            catalog.rows.len()
        );
    }
    Ok(if all_pass { 0 } else { 1 })
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(args: &VerifyArgs) -> Result<u8> {
    let run = Run::resolve(&args.common, "json")?;
    run.require_json("verify")?;
    let base = VerifyOptions::default();
    let opts = VerifyOptions {
        omega: run.omega,
        g: run.g,
        f1: run.f1,
        grid_points: run.grid_points,
        seed: run.seed,
        identity_samples: run.file.resolve(args.samples, "samples", base.identity_samples)?,
        xi_samples: run.file.resolve(args.xi_samples, "xi-samples", base.xi_samples)?,
        param_samples: base.param_samples,
        separability_samples: base.separability_samples,
        nmax: run.nmax,
        lmax: run.lmax,
        mmax: run.file.resolve(args.mmax, "mmax", base.mmax)?,
        pmax: run.file.resolve(args.pmax, "pmax", base.pmax)?,
        levels: run.file.resolve(args.levels, "levels", base.levels)?,
    };
    let report = full_verification(&opts)?;
    let text = render_report("verify", &run.defaults_echo(), &report)?;
    write_output(run.out.as_deref(), &text)?;
    Ok(if report.pass { 0 } else { 1 })
}

// ---------------------------------------------------------------------------
// entry point
// ---------------------------------------------------------------------------

fn exit_code_for(e: &EopError) -> u8 {
    match e {
        EopError::Io(_) => 3,
        EopError::UsageError(_)
        | EopError::ParameterError(_)
        | EopError::DomainError(_)
        | EopError::OutOfRange(_)
        | EopError::ConstructionError(_)
        | EopError::SingularConfiguration(_)
        | EopError::DegenerateConfiguration => 2,
        _ => 1,
    }
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Identities(args) => cmd_identities(args),
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::Sample(args) => cmd_sample(args),
        Command::Tables(args) => cmd_tables(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
