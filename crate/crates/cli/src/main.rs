//! `poincare-cgc`: coefficient tables, state decomposition, state export and the
//! verification suite.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

mod emit;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use poincare_cgc::cgc::{angular_helicity_com, angular_spin_orbit_com, enumerate_channels, ChannelLabel, Degeneracy, Scheme, TwoParticleSpec};
use poincare_cgc::reference::{helicity_table, spin_orbit_j1_table, ReferenceCell};
use poincare_cgc::states::{build_com_basis_state, build_grid, decompose_product_state, BellState, ProductState, DEFAULT_GRID};
use poincare_cgc::verify::{self, Level};
use poincare_cgc::HalfInt;

use emit::{Field, Format, Table};

const GRID_VAR: &str = "POINCARE_CGC_GRID";

#[derive(Parser)]
#[command(name = "poincare-cgc", version, about = "Two-particle Clebsch-Gordan coefficients of the Poincaré group")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Angular coefficients of every realized channel of total spin j at one direction.
    #[command(allow_negative_numbers = true)]
    Table {
        #[arg(long, default_value = "spin-orbit")]
        scheme: Scheme,
        /// Total spin, e.g. `1` or `3/2`.
        #[arg(long, allow_hyphen_values = true)]
        j: String,
        /// Polar angle in radians.
        #[arg(long, default_value_t = 0.0)]
        theta: f64,
        /// Azimuth in radians.
        #[arg(long, default_value_t = 0.0)]
        phi: f64,
        #[arg(long, default_value = "csv")]
        format: Format,
        /// Spin of particle 1.
        #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
        j1: String,
        /// Spin of particle 2.
        #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
        j2: String,
        /// Add the matching published closed form and its residual to each row.
        #[arg(long)]
        symbolic_check: bool,
    },
    /// Run the invariant suite and print one line per check.
    Verify {
        #[arg(long, default_value = "fast")]
        level: Level,
        /// Negate one coefficient in the orthogonality check (mutation test).
        #[arg(long, hide = true)]
        inject_cgc_sign_flip: bool,
    },
    /// Partial-wave coefficients of a spin-½ Bell state with particle 1 along (θ, φ).
    #[command(allow_negative_numbers = true)]
    Decompose {
        /// One of psi00, psi01, psi10, psi11.
        state: String,
        #[arg(long, default_value_t = 0.0)]
        theta: f64,
        #[arg(long, default_value_t = 0.0)]
        phi: f64,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        j_max: String,
        #[arg(long, default_value = "spin-orbit")]
        scheme: Scheme,
        #[arg(long, default_value = "csv")]
        format: Format,
        /// Invariant mass squared of the pair (unit particle masses).
        #[arg(long, default_value_t = 9.0)]
        mandelstam: f64,
    },
    /// Sample one COM basis state of a spin-½ pair on the quadrature grid and print it as JSON.
    #[command(allow_negative_numbers = true)]
    Export {
        #[arg(long, default_value = "spin-orbit")]
        scheme: Scheme,
        #[arg(long, allow_hyphen_values = true)]
        j: String,
        /// Orbital label (spin-orbit scheme).
        #[arg(long, allow_hyphen_values = true)]
        l: Option<String>,
        /// Total intrinsic spin (spin-orbit scheme).
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
        /// Helicity of particle 1 (helicity scheme).
        #[arg(long, allow_hyphen_values = true)]
        lambda1: Option<String>,
        /// Helicity of particle 2 (helicity scheme).
        #[arg(long, allow_hyphen_values = true)]
        lambda2: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        component: String,
        #[arg(long, default_value_t = 9.0)]
        mandelstam: f64,
    },
}

/// A failure with its exit code; the message goes to standard error.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

impl From<poincare_cgc::Error> for Failure {
    fn from(e: poincare_cgc::Error) -> Self {
        usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        // A reader that stops early (`| head`) is not an error.
        if e.kind() == io::ErrorKind::BrokenPipe {
            return Failure { code: 0, message: String::new() };
        }
        usage(format!("write failed: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|code| out.flush().map(|_| code).map_err(Failure::from));
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            drop(out);
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<u8, Failure> {
    match command {
        Command::Table { scheme, j, theta, phi, format, j1, j2, symbolic_check } => {
            let spec = TwoParticleSpec::new(1.0, 1.0, spin(&j1, "j1")?, spin(&j2, "j2")?)?;
            let table = coefficient_table(&spec, scheme, spin(&j, "j")?, angle(theta, "theta")?, angle(phi, "phi")?, symbolic_check)?;
            table.write(format, out)?;
            Ok(0)
        }
        Command::Verify { level, inject_cgc_sign_flip } => {
            let report = if inject_cgc_sign_flip { verify::run_with_cgc(level, flipped_cgc) } else { verify::run(level) };
            out.write_all(report.render().as_bytes())?;
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Decompose { state, theta, phi, j_max, scheme, format, mandelstam } => {
            let bell = state.parse::<BellState>().map_err(|e| usage(e.to_string()))?;
            let psi = ProductState::bell(bell, angle(theta, "theta")?, angle(phi, "phi")?);
            let d = decompose_product_state(&psi, &TwoParticleSpec::fermion_pair(), mandelstam, spin(&j_max, "j-max")?, scheme)?;
            let mut table = Table::new(vec!["scheme", "j", "eta", "component", "re", "im"]);
            for c in &d.coefficients {
                table.push(vec![
                    scheme.to_string().into(),
                    c.channel.j.to_string().into(),
                    c.channel.eta.to_string().into(),
                    c.component.to_string().into(),
                    c.value.re.into(),
                    c.value.im.into(),
                ]);
            }
            table.write(format, out)?;
            Ok(0)
        }
        Command::Export { scheme, j, l, s, lambda1, lambda2, component, mandelstam } => {
            let j = spin(&j, "j")?;
            let label = |v: Option<String>, name: &str| v.ok_or_else(|| usage(format!("--{name} is required for the {scheme} scheme"))).and_then(|v| projection(&v, name));
            let channel = match scheme {
                Scheme::SpinOrbit => ChannelLabel::spin_orbit(j, label(l, "l")?, label(s, "s")?),
                Scheme::Helicity => ChannelLabel::helicity(j, label(lambda1, "lambda1")?, label(lambda2, "lambda2")?),
            };
            let (nt, np) = grid_dims()?;
            let grid = Arc::new(build_grid(nt, np)?);
            let state = build_com_basis_state(&grid, &TwoParticleSpec::fermion_pair(), mandelstam, channel, projection(&component, "component")?)?;
            writeln!(out, "{}", state.to_json())?;
            Ok(0)
        }
    }
}

fn projection(text: &str, name: &str) -> Result<HalfInt, Failure> {
    text.parse().map_err(|_| usage(format!("--{name}: `{text}` is not an integer or half-integer")))
}

fn spin(text: &str, name: &str) -> Result<HalfInt, Failure> {
    let v = projection(text, name)?;
    if v < HalfInt::ZERO {
        return Err(usage(format!("--{name} must be non-negative, got {v}")));
    }
    Ok(v)
}

fn angle(x: f64, name: &str) -> Result<f64, Failure> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(usage(format!("--{name} must be a finite angle in radians")))
    }
}

/// Reads `nθ,nφ` from the environment, falling back to 32,64.
fn grid_dims() -> Result<(usize, usize), Failure> {
    let Ok(text) = std::env::var(GRID_VAR) else {
        return Ok(DEFAULT_GRID);
    };
    let bad = || usage(format!("{GRID_VAR}=`{text}` is not of the form `n_theta,n_phi`"));
    let (a, b) = text.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

/// The library coefficient with the sign of `⟨½ ½; ½ −½ | 1 0⟩` reversed.
fn flipped_cgc(j: HalfInt, j1: HalfInt, j2: HalfInt, m: HalfInt, m1: HalfInt, m2: HalfInt) -> f64 {
    let v = poincare_cgc::su2::su2_cgc(j, j1, j2, m, m1, m2);
    if j == HalfInt::ONE && j1 == HalfInt::HALF && j2 == HalfInt::HALF && m == HalfInt::ZERO && m1 == HalfInt::HALF {
        -v
    } else {
        v
    }
}

fn coefficient_table(spec: &TwoParticleSpec, scheme: Scheme, j: HalfInt, theta: f64, phi: f64, symbolic: bool) -> Result<Table, Failure> {
    let mut columns = vec!["scheme", "j", "eta", "component", "spin1", "spin2", "theta", "phi", "re", "im"];
    if symbolic {
        columns.extend(["reference", "printed", "residual", "amended", "amended_residual"]);
    }
    let references: Vec<ReferenceCell> = if *spec == TwoParticleSpec::fermion_pair() {
        match scheme {
            Scheme::SpinOrbit => spin_orbit_j1_table(),
            Scheme::Helicity => helicity_table(),
        }
    } else {
        Vec::new()
    };
    let mut table = Table::new(columns);
    for channel in enumerate_channels(spec, j, scheme).into_iter().filter(ChannelLabel::is_realized) {
        for component in j.projections() {
            let cells: Vec<((HalfInt, HalfInt), Complex64)> = match channel.eta {
                Degeneracy::SpinOrbit { .. } => spec
                    .spin_pairs()
                    .into_iter()
                    .map(|(a, b)| Ok(((a, b), angular_spin_orbit_com(spec, &channel, component, a, b, theta, phi)?)))
                    .collect::<Result<_, Failure>>()?,
                Degeneracy::Helicity { lambda1, lambda2 } => {
                    vec![((lambda1, lambda2), angular_helicity_com(spec, &channel, component, theta, phi)?)]
                }
            };
            for (spins, value) in cells {
                let mut row: Vec<Field> = vec![
                    scheme.to_string().into(),
                    j.to_string().into(),
                    channel.eta.to_string().into(),
                    component.to_string().into(),
                    spins.0.to_string().into(),
                    spins.1.to_string().into(),
                    theta.into(),
                    phi.into(),
                    value.re.into(),
                    value.im.into(),
                ];
                if symbolic {
                    let cell = references.iter().find(|c| c.channel == channel && c.component == component && c.spins == spins);
                    row.extend(symbolic_fields(cell, value, theta, phi));
                }
                table.push(row);
            }
        }
    }
    Ok(table)
}

fn symbolic_fields(cell: Option<&ReferenceCell>, value: Complex64, theta: f64, phi: f64) -> Vec<Field> {
    let Some(c) = cell else {
        return vec![Field::Empty; 5];
    };
    let printed = (c.printed)(theta, phi);
    // Printed radicals of negative arguments are not real numbers.
    let residual = if printed.re.is_nan() { Field::Empty } else { (value - printed).norm().into() };
    let (amended, amended_residual) = match &c.amended {
        Some(a) => (Field::from(a.expression), Field::from((value - (a.value)(theta, phi)).norm())),
        None => (Field::Empty, Field::Empty),
    };
    vec![Field::from(c.id), Field::from(c.expression), residual, amended, amended_residual]
}
