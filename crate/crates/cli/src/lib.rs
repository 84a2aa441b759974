//! The `knotinv` command line: Hopf and double axiom reports, the bead
//! invariant, the Fox-calculus oracle, the Kuperberg contraction and the
//! comparison between the last two pipelines.
//!
//! Exit status is 0 when every check in the report passed, 1 when a check
//! failed, 2 for unreadable or malformed input, 3 when the representation
//! does not satisfy the Wirtinger relators and 4 when a computation could
//! not be completed (for instance the term budget was exceeded).

use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use fox_oracle::{wada_torsion, wada_torsion_column, FoxError, FoxImages};
use hopf_core::{exterior_rank, gl_to_aut, load_algebra, HopfAlgebraData, HopfError, TwistedAutomorphism};
use kuperberg_contraction::{compare_main_theorem, kuperberg_contract, KuperbergError};
use rt_invariant::{counit_eval, normalize, universal_invariant_with, InvariantOptions, RtError};
use scalar_ring::{FieldElement, FieldMatrix, LaurentScalar};
use tangle_diagram::{check_representation, parse_tangle, TangleDiagram, TangleError, TangleRepresentation};
use twisted_double::{verify_double_axioms, BatteryConfig, DoubleError, RibbonData, TwistedDouble};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_REPRESENTATION: i32 = 3;
pub const EXIT_COMPUTATION: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "knotinv", version, about = "Twisted quantum invariants of knots from twisted Drinfeld doubles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Checks the Hopf (super)algebra axioms.
    CheckHopf {
        #[arg(long)]
        algebra: String,
    },
    /// Runs the twisted-double axiom battery over a small grading set.
    CheckDouble {
        #[arg(long)]
        algebra: String,
        /// Largest number of basis tuples tested exhaustively per check.
        #[arg(long, default_value_t = 4096)]
        max_tuples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// Prints ε(Z^ρ) and the normalized polynomial P.
    Invariant(KnotArgs),
    /// Prints the Wada numerator and denominator from Fox calculus.
    Oracle {
        #[command(flatten)]
        knot: KnotArgs,
        /// Generator whose column is deleted (first admissible by default).
        #[arg(long)]
        column: Option<usize>,
    },
    /// Prints the Kuperberg contraction Z_Kup.
    Kuperberg(KnotArgs),
    /// Checks ε(Z^ρ) = √r(m)^{-r}·Z_Kup exactly and up to a unit.
    Compare(KnotArgs),
}

#[derive(Debug, Args)]
pub struct KnotArgs {
    /// `ext:n`, `taft:n` or a JSON algebra file.
    #[arg(long, default_value = "ext:1")]
    pub algebra: String,
    /// Morse-word tangle file.
    #[arg(long)]
    pub tangle: PathBuf,
    /// Representation file; the trivial representation when omitted.
    #[arg(long)]
    pub rep: Option<PathBuf>,
    /// Tensor with h: every generator also shifts degrees by t.
    #[arg(long)]
    pub graded: bool,
}

/// The outcome of one command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub report: String,
    pub error: Option<String>,
}

/// Errors that stop a command before its report is complete.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("the representation does not satisfy the Wirtinger relators")]
    Representation,
    #[error("{0}")]
    Computation(String),
}

impl CliError {
    fn status(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Representation => EXIT_REPRESENTATION,
            CliError::Computation(_) => EXIT_COMPUTATION,
        }
    }
}

impl From<TangleError> for CliError {
    fn from(e: TangleError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<HopfError> for CliError {
    fn from(e: HopfError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<DoubleError> for CliError {
    fn from(e: DoubleError) -> Self {
        CliError::Computation(e.to_string())
    }
}

impl From<RtError> for CliError {
    fn from(e: RtError) -> Self {
        match e {
            RtError::NotARepresentation => CliError::Representation,
            RtError::Tangle(t) => t.into(),
            other => CliError::Computation(other.to_string()),
        }
    }
}

impl From<FoxError> for CliError {
    fn from(e: FoxError) -> Self {
        match e {
            FoxError::NotARepresentation => CliError::Representation,
            FoxError::NotLinear | FoxError::Shape(_) | FoxError::GeneratorCount { .. } | FoxError::Column(_) => {
                CliError::Input(e.to_string())
            }
            other => CliError::Computation(other.to_string()),
        }
    }
}

impl From<KuperbergError> for CliError {
    fn from(e: KuperbergError) -> Self {
        match e {
            KuperbergError::NotARepresentation => CliError::Representation,
            KuperbergError::Rt(r) => r.into(),
            KuperbergError::LastCrossingOver | KuperbergError::NotInvolutory => CliError::Input(e.to_string()),
            other => CliError::Computation(other.to_string()),
        }
    }
}

/// Runs a command, collecting its report and exit status.
pub fn run(cli: &Cli) -> Outcome {
    let mut report = String::new();
    match dispatch(&cli.command, &mut report) {
        Ok(pass) => Outcome { status: if pass { EXIT_OK } else { EXIT_CHECK_FAILED }, report, error: None },
        Err(e) => Outcome { status: e.status(), report, error: Some(e.to_string()) },
    }
}

fn canonical(x: &LaurentScalar) -> String {
    match x.canonical_unit_form() {
        Ok(c) => c.to_string(),
        Err(_) => "0".into(),
    }
}

/// The diagram and representation named on the command line.
pub fn load_knot(args: &KnotArgs, h: &HopfAlgebraData) -> Result<(TangleDiagram, TangleRepresentation), CliError> {
    let text = std::fs::read_to_string(&args.tangle)
        .map_err(|e| CliError::Input(format!("{}: {e}", args.tangle.display())))?;
    let d = parse_tangle(&text).map_err(|e| CliError::Input(format!("{}: {e}", args.tangle.display())))?;
    let rho = match &args.rep {
        Some(path) => TangleRepresentation::load(path, h, &d)?,
        None => match exterior_rank(h) {
            Some(n) => TangleRepresentation::trivial_linear(h, n, d.generator_count(), false)?,
            None => TangleRepresentation::trivial(h, d.generator_count(), false),
        },
    };
    let rho = if args.graded && !rho.graded() { graded(h, &rho)? } else { rho };
    Ok((d, rho))
}

/// ρ⊗h: the same images with every shift set to 1.
pub fn graded(h: &HopfAlgebraData, rho: &TangleRepresentation) -> Result<TangleRepresentation, CliError> {
    let n = rho.images().len();
    Ok(match rho.linear() {
        Some(ms) => TangleRepresentation::from_linear(h, ms.to_vec(), vec![1; n], true)?,
        None => TangleRepresentation::new(
            rho.images().iter().map(|a| TwistedAutomorphism::new(a.base().clone(), 1)).collect(),
            true,
        ),
    })
}

fn dispatch(cmd: &Command, out: &mut String) -> Result<bool, CliError> {
    match cmd {
        Command::CheckHopf { algebra } => {
            let h = load_algebra(algebra)?;
            let rep = h.verify_hopf_axioms();
            writeln!(out, "algebra {} (dimension {})", h.name(), h.dim()).unwrap();
            write!(out, "{rep}").unwrap();
            writeln!(out, "S^2 = id: {}", if h.is_involutory() { "yes" } else { "no" }).unwrap();
            Ok(rep.all_pass())
        }
        Command::CheckDouble { algebra, max_tuples, seed } => {
            let h = Arc::new(load_algebra(algebra)?);
            let gradings = default_gradings(&h)?;
            let dbl = TwistedDouble::new(h.clone());
            let rep = verify_double_axioms(&dbl, &gradings, &BatteryConfig { max_tuples: *max_tuples, seed: *seed })?;
            writeln!(out, "double of {} over {} gradings", h.name(), gradings.len()).unwrap();
            write!(out, "{}", rep.axioms).unwrap();
            for g in &rep.skipped_ribbon {
                writeln!(out, "ribbon checks skipped (no square root of r_H): {g}").unwrap();
            }
            Ok(rep.axioms.all_pass())
        }
        Command::Invariant(args) => {
            let h = Arc::new(load_algebra(&args.algebra)?);
            let (d, rho) = load_knot(args, &h)?;
            let dbl = TwistedDouble::new(h.clone());
            let ribbon = RibbonData::new(&dbl)?;
            let z = universal_invariant_with(&ribbon, &d, &rho, &InvariantOptions::from_env())?;
            let eps = counit_eval(&dbl, &z);
            writeln!(out, "epsilon(Z) = {eps}").unwrap();
            let p = normalize(&ribbon, &d, &rho, &eps)?;
            writeln!(out, "P raw = {p}").unwrap();
            writeln!(out, "P = {}", canonical(&p)).unwrap();
            Ok(true)
        }
        Command::Oracle { knot, column } => {
            let h = load_algebra(&knot.algebra)?;
            let (d, rho) = load_knot(knot, &h)?;
            let images = FoxImages::from_representation(&rho)?;
            let w = match column {
                Some(j) => wada_torsion_column(&d, &images, *j)?,
                None => wada_torsion(&d, &images)?,
            };
            writeln!(out, "column = {}", d.generator_name(w.column)).unwrap();
            writeln!(out, "numerator = {}", canonical(&w.numerator)).unwrap();
            writeln!(out, "denominator = {}", canonical(&w.denominator)).unwrap();
            writeln!(out, "numerator raw = {}", w.numerator).unwrap();
            writeln!(out, "denominator raw = {}", w.denominator).unwrap();
            Ok(true)
        }
        Command::Kuperberg(args) => {
            let h = load_algebra(&args.algebra)?;
            let (d, rho) = load_knot(args, &h)?;
            if !check_representation(&d, &rho, &h)? {
                return Err(CliError::Representation);
            }
            let z = kuperberg_contract(&h, &d, &rho)?;
            writeln!(out, "Z_Kup = {z}").unwrap();
            writeln!(out, "Z_Kup canonical = {}", canonical(&z)).unwrap();
            Ok(true)
        }
        Command::Compare(args) => {
            let h = Arc::new(load_algebra(&args.algebra)?);
            let (d, rho) = load_knot(args, &h)?;
            if !check_representation(&d, &rho, &h)? {
                return Err(CliError::Representation);
            }
            let dbl = TwistedDouble::new(h.clone());
            let ribbon = RibbonData::new(&dbl)?;
            let r = compare_main_theorem(&ribbon, &d, &rho)?;
            writeln!(out, "epsilon(Z) = {}", r.counit).unwrap();
            writeln!(out, "Z_Kup = {}", r.kuperberg).unwrap();
            writeln!(out, "sqrt(r(m))^(-r) = {} (clockwise rotation {})", r.factor, d.rotation_cw()).unwrap();
            writeln!(out, "exact identity: {}", if r.exact { "PASS" } else { "FAIL" }).unwrap();
            match r.up_to_unit {
                Some(w) => writeln!(out, "up-to-unit: PASS (sign {}, k = {})", if w.sign > 0 { "+" } else { "-" }, w.k)
                    .unwrap(),
                None => writeln!(out, "up-to-unit: FAIL").unwrap(),
            }
            Ok(r.exact && r.up_to_unit.is_some())
        }
    }
}

/// The identity, the identity shifted by t and, on Λ(Kⁿ), a non-identity
/// linear automorphism: diag(4) for n = 1 and I + E_12 otherwise.
pub fn default_gradings(h: &HopfAlgebraData) -> Result<Vec<TwistedAutomorphism>, CliError> {
    let id = TwistedAutomorphism::identity(h.dim());
    let mut out = vec![id.clone(), TwistedAutomorphism::new(id.base().clone(), 1)];
    if let Some(n) = exterior_rank(h) {
        let mut a = FieldMatrix::identity(n);
        if n == 1 {
            a[(0, 0)] = FieldElement::from_int(4);
        } else {
            a[(0, 1)] = FieldElement::one();
        }
        out.push(TwistedAutomorphism::new(gl_to_aut(h, &a)?, 0));
    }
    Ok(out)
}
