//! Command-line front end. Every subcommand prints `key=value` records; exit status is 0 when
//! the answer is yes or the construction succeeded, 1 when a property is false, 2 on malformed
//! input and 3 when the answer is inconclusive.

use std::ffi::OsString;
use std::fmt::Display;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algcore::{FinGradedAlgebra, SimplicityWitness, Verdict};
use crate::autograde::AutomorphismSystem;
use crate::corresp::{
    central_image, certify_class_b, isograded_check, multiloop_transport, qtorus, qtorus_normal_form, realize,
    similar_check, torus_predicates, twist, verify_realization, verify_transport, ClassBFailure,
    RealizationCertificate, Similarity, Specialization, TransportCertificate,
};
use crate::cyclo::CycloNumber;
use crate::error::Error;
use crate::format::{read_file, TextFormat};
use crate::lattice::{is_admissible, smith_normal_form, Character, IntMatrix, QuotientMap};
use crate::linalg::Matrix;
use crate::loopcore::{centroid_of_loop, graded_iso_check, GammaFiniteAlgebra, GradedIsoWitness};
use crate::suite::{run_check, run_suite, DEFAULT_SEED};

pub const OK: i32 = 0;
pub const FALSE: i32 = 1;
pub const MALFORMED: i32 = 2;
pub const INCONCLUSIVE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "multiloop", version, about = "Loop and multiloop algebras over cyclotomic fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Quotient {
    /// Moduli `m₁,…,mₙ` of `Λ̄`.
    #[arg(long, value_delimiter = ',')]
    m: Option<Vec<u64>>,
    /// Basis change `B` of `π(λ) = λB mod m` (default identity).
    #[arg(long, allow_hyphen_values = true)]
    basis: Option<IntMatrix>,
}

#[derive(Args, Debug)]
struct Output {
    /// Write the resulting document here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Property {
    GradedSimple,
    Central,
    Torus,
    Fgc,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Smith normal form `U M V = D`.
    Snf {
        #[arg(long, allow_hyphen_values = true)]
        matrix: IntMatrix,
    },
    /// Tests `(m′, m)`-admissibility of `P` and prints `Q = D_{m′} Pᵗ D_m⁻¹`.
    Admissible {
        #[arg(long = "P", allow_hyphen_values = true)]
        p: IntMatrix,
        #[arg(long, value_delimiter = ',')]
        mprime: Vec<u64>,
        #[arg(long, value_delimiter = ',')]
        m: Vec<u64>,
    },
    /// Loop algebra of a finite-dimensional graded algebra.
    Loop {
        #[arg(long)]
        algebra: PathBuf,
        #[command(flatten)]
        quotient: Quotient,
        #[command(flatten)]
        out: Output,
    },
    /// Multiloop algebra of an automorphism system.
    Multiloop {
        #[arg(long)]
        autos: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Centroid of a finite algebra, or of a loop presentation.
    Centroid {
        #[arg(long, conflicts_with = "gamma", required_unless_present = "gamma")]
        algebra: Option<PathBuf>,
        #[arg(long)]
        gamma: Option<PathBuf>,
    },
    /// Decides a property of a finite algebra (`graded-simple`, `central`) or of a loop
    /// presentation (`torus`, `fgc`; `graded-simple` and `central` go through the central image).
    Check {
        property: Property,
        #[arg(long, conflicts_with = "gamma", required_unless_present = "gamma")]
        algebra: Option<PathBuf>,
        #[arg(long)]
        gamma: Option<PathBuf>,
    },
    /// Central image `B / ker(ρ) B`; `ρ` is given by its values on the kernel basis.
    CentralImage {
        #[arg(long)]
        gamma: PathBuf,
        /// One scalar per kernel basis vector (repeat the flag); augmentation when omitted.
        #[arg(long = "value", allow_hyphen_values = true)]
        values: Vec<CycloNumber>,
        #[command(flatten)]
        out: Output,
    },
    /// Twist `A_χ` by a character given on the kernel basis.
    Twist {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long = "value", allow_hyphen_values = true)]
        values: Vec<CycloNumber>,
        #[command(flatten)]
        quotient: Quotient,
        #[command(flatten)]
        out: Output,
    },
    /// Decides `A ∼_π A′`.
    Similar {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        other: PathBuf,
        #[command(flatten)]
        quotient: Quotient,
    },
    /// Writes a class-B presentation as a regraded multiloop algebra.
    Realize {
        #[arg(long)]
        gamma: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Transports an automorphism system along an admissible `P`.
    Transport {
        #[arg(long)]
        autos: PathBuf,
        #[arg(long = "P", allow_hyphen_values = true)]
        p: IntMatrix,
        #[arg(long, value_delimiter = ',')]
        mprime: Vec<u64>,
        /// Half-width of the truncation box the certificate is checked on.
        #[arg(long = "box", default_value_t = 3)]
        half_width: i64,
        #[command(flatten)]
        out: Output,
    },
    /// Checks a graded-isomorphism, realization, transport or isograded witness.
    IsoCheck {
        #[command(subcommand)]
        kind: IsoKind,
    },
    /// The quantum torus `Q(m, e)`.
    Qtorus {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        e: i64,
        #[command(flatten)]
        out: Output,
    },
    /// Tensor decomposition of the torus `T(E, N)`.
    QtorusNf {
        #[arg(long = "E", allow_hyphen_values = true)]
        e: IntMatrix,
        #[arg(long = "N")]
        n: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Runs the reproduction suite.
    VerifyPaper {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Run a single check.
        #[arg(long)]
        only: Option<u32>,
    },
}

#[derive(Subcommand, Debug)]
enum IsoKind {
    /// `ω: B → B′` with both presentations over the same quotient map.
    Graded {
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        witness: PathBuf,
    },
    Realization {
        #[arg(long)]
        gamma: PathBuf,
        #[arg(long)]
        certificate: PathBuf,
    },
    Transport {
        #[arg(long)]
        autos: PathBuf,
        #[arg(long)]
        certificate: PathBuf,
        #[arg(long = "box", default_value_t = 3)]
        half_width: i64,
    },
    /// `(P, φ)` between two automorphism systems.
    Isograded {
        #[arg(long)]
        autos: PathBuf,
        #[arg(long)]
        other: PathBuf,
        #[arg(long = "P", allow_hyphen_values = true)]
        p: IntMatrix,
        #[arg(long)]
        phi: PathBuf,
    },
}

/// Accumulates `key=value` records and the exit status.
struct Report {
    lines: Vec<String>,
    status: i32,
}

impl Report {
    fn new() -> Self {
        Report {
            lines: Vec::new(),
            status: OK,
        }
    }

    fn kv(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.lines.push(format!("{key}={value}"));
        self
    }

    fn status(&mut self, s: i32) -> &mut Self {
        self.status = s;
        self
    }

    fn verdict(&mut self, key: &str, holds: bool) -> &mut Self {
        self.kv(key, holds);
        if !holds {
            self.status = FALSE;
        }
        self
    }
}

fn join<T: Display>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn quotient_for(qa: &Quotient, fallback: Option<&[u64]>) -> Result<QuotientMap, Error> {
    let m = match (&qa.m, fallback) {
        (Some(m), _) => m.clone(),
        (None, Some(m)) => m.to_vec(),
        (None, None) => return Err(Error::Invalid("--m is required".into())),
    };
    let b = qa.basis.clone().unwrap_or_else(|| IntMatrix::identity(m.len()));
    QuotientMap::new(m, b)
}

fn emit<T: TextFormat>(value: &T, out: &Output, r: &mut Report) -> Result<(), Error> {
    let text = value.to_text();
    match &out.out {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| Error::Invalid(format!("{}: {e}", p.display())))?;
            r.kv("wrote", p.display());
        }
        None => r.lines.push(text.trim_end().to_string()),
    }
    Ok(())
}

fn simplicity(r: &mut Report, key: &str, v: Verdict<SimplicityWitness>) {
    match v {
        Verdict::Holds => {
            r.kv(key, true);
        }
        Verdict::Fails(w) => {
            r.kv(key, false).status(FALSE);
            match w {
                SimplicityWitness::ZeroProduct => r.kv("witness", "zero-product"),
                SimplicityWitness::Ideal(basis) => {
                    r.kv("witness", "ideal").kv("ideal-dim", basis.len());
                    for v in &basis {
                        r.kv("ideal-vector", join(v));
                    }
                    r
                }
                SimplicityWitness::NonScalarCentral(v) => r.kv("witness", "central-element").kv("element", join(&v)),
            };
        }
        Verdict::Inconclusive(why) => {
            r.kv(key, "inconclusive").kv("reason", why).status(INCONCLUSIVE);
        }
    }
}

fn class_b_failure(r: &mut Report, f: ClassBFailure) {
    let status = if matches!(f, ClassBFailure::Undecided(_)) { INCONCLUSIVE } else { FALSE };
    r.kv("class-b", false).kv("reason", &f).status(status);
    if let ClassBFailure::NotGradedSimple(SimplicityWitness::Ideal(basis)) = f {
        r.kv("ideal-dim", basis.len());
    }
}

fn execute(cmd: Command, r: &mut Report) -> Result<(), Error> {
    match cmd {
        Command::Snf { matrix } => {
            let s = smith_normal_form(&matrix);
            r.kv("invariants", join(&s.invariant_factors()))
                .kv("D", &s.d)
                .kv("U", &s.u)
                .kv("V", &s.v);
        }
        Command::Admissible { p, mprime, m } => match is_admissible(&p, &mprime, &m)? {
            Some(q) => {
                r.kv("admissible", true).kv("Q", q);
            }
            None => {
                r.verdict("admissible", false);
            }
        },
        Command::Loop { algebra, quotient, out } => {
            let a: FinGradedAlgebra = read_file(&algebra)?;
            let q = quotient_for(&quotient, Some(a.group().moduli()))?;
            let b = GammaFiniteAlgebra::loop_algebra(&q, &a)?;
            r.kv("rank", b.rank()).kv("components", b.num_components());
            emit(&b, &out, r)?;
        }
        Command::Multiloop { autos, out } => {
            let s: AutomorphismSystem = read_file(&autos)?;
            if let Err(v) = s.validate() {
                return Err(Error::Precondition(v.to_string()));
            }
            let b = GammaFiniteAlgebra::multiloop(&s)?;
            r.kv("m", join(s.orders()))
                .kv("group-order", s.group_order())
                .kv("support-generates", s.support_generates());
            emit(&b, &out, r)?;
        }
        Command::Centroid { algebra, gamma } => {
            if let Some(path) = algebra {
                let a: FinGradedAlgebra = read_file(&path)?;
                let c = a.centroid();
                r.kv("dim", c.dim()).kv("graded-dim", c.graded_dim());
                for (deg, maps) in &c.components {
                    if !maps.is_empty() {
                        r.kv(&format!("component[{deg}]"), maps.len());
                    }
                }
            } else if let Some(path) = gamma {
                let b: GammaFiniteAlgebra = read_file(&path)?;
                let a = b.specialize(&b.augmentation())?;
                let c = centroid_of_loop(b.quotient(), &a)?;
                r.kv("gamma", &c.gamma)
                    .kv("fiber-dims", join(&c.fiber_dims))
                    .kv("monomial", c.monomial);
            }
        }
        Command::Check { property, algebra, gamma } => check(property, algebra, gamma, r)?,
        Command::CentralImage { gamma, values, out } => {
            let b: GammaFiniteAlgebra = read_file(&gamma)?;
            let rho = if values.is_empty() {
                Specialization::augmentation(&b)
            } else {
                Specialization::from_values(b.quotient(), values)?
            };
            let a = central_image(&b, &rho)?;
            r.kv("dim", a.dim()).kv("group", join(a.group().moduli()));
            emit(&a, &out, r)?;
        }
        Command::Twist { algebra, values, quotient, out } => {
            let a: FinGradedAlgebra = read_file(&algebra)?;
            let q = quotient_for(&quotient, Some(a.group().moduli()))?;
            let chi = Character::on_kernel(&q, values)?;
            let t = twist(&a, &chi, &q)?;
            r.kv("unchanged", t == a);
            emit(&t, &out, r)?;
        }
        Command::Similar { algebra, other, quotient } => {
            let a: FinGradedAlgebra = read_file(&algebra)?;
            let a2: FinGradedAlgebra = read_file(&other)?;
            let q = quotient_for(&quotient, Some(a.group().moduli()))?;
            match similar_check(&a, &a2, &q)? {
                Similarity::Similar { chi, .. } => {
                    r.kv("similar", true).kv("chi", join(chi.values()));
                }
                Similarity::NotSimilar => {
                    r.verdict("similar", false);
                }
                Similarity::Unknown(why) => {
                    r.kv("similar", "unknown").kv("reason", why).status(INCONCLUSIVE);
                }
            }
        }
        Command::Realize { gamma, out } => {
            let b: GammaFiniteAlgebra = read_file(&gamma)?;
            if let Err(f) = certify_class_b(&b, &Specialization::augmentation(&b)) {
                class_b_failure(r, f);
                return Ok(());
            }
            let cert = realize(&b)?;
            r.kv("m", format!("({})", join(&cert.m)))
                .kv("base-change", &cert.base_change)
                .kv("A-dim", cert.a.dim());
            if let [k, k2] = cert.m[..] {
                let one = CycloNumber::one();
                if k == k2 && FinGradedAlgebra::power_norm_residue(k, 1, &one, &one)
                    .map(|a11| cert.a.regraded_line_iso(&a11).is_some())
                    .unwrap_or(false)
                {
                    r.kv("A", format!("A_{{1,1}}(m={k})"));
                }
            }
            r.kv("witness", verify_realization(&b, &cert).is_ok());
            emit(&cert, &out, r)?;
        }
        Command::Transport { autos, p, mprime, half_width, out } => {
            let s: AutomorphismSystem = read_file(&autos)?;
            let m = s.orders().to_vec();
            if is_admissible(&p, &mprime, &m)?.is_none() {
                r.verdict("admissible", false);
                return Ok(());
            }
            let cert = multiloop_transport(&m, &mprime, &p, &s)?;
            let bounds = vec![(-half_width, half_width); m.len()];
            let ok = verify_transport(&s, &cert, &bounds).is_ok();
            r.kv("admissible", true).kv("R", &cert.r).verdict("witness", ok);
            emit(&cert, &out, r)?;
        }
        Command::IsoCheck { kind } => iso_check(kind, r)?,
        Command::Qtorus { m, e, out } => {
            let b = qtorus(m, e)?;
            r.kv("m", m).kv("e", e);
            emit(&b, &out, r)?;
        }
        Command::QtorusNf { e, n, out } => {
            let nf = qtorus_normal_form(&e, n)?;
            r.kv("r", nf.r())
                .kv("s", nf.s)
                .kv("m", join(&nf.m))
                .kv("e", join(&nf.e))
                .kv("transform", &nf.transform)
                .verdict("witness", nf.verify(&e, n).is_ok());
            emit(&nf.witness, &out, r)?;
        }
        Command::VerifyPaper { seed, only } => {
            let report = match only {
                Some(id) => {
                    let o = run_check(id, seed).ok_or_else(|| Error::Invalid(format!("no check {id}")))?;
                    crate::suite::SuiteReport { seed, outcomes: vec![o] }
                }
                None => run_suite(seed),
            };
            r.lines.push(report.to_string());
            if !report.all_passed() {
                r.status(FALSE);
            }
        }
    }
    Ok(())
}

fn check(property: Property, algebra: Option<PathBuf>, gamma: Option<PathBuf>, r: &mut Report) -> Result<(), Error> {
    let finite = |path: &Option<PathBuf>| -> Result<FinGradedAlgebra, Error> {
        match (path, &gamma) {
            (Some(p), _) => read_file(p),
            (None, Some(g)) => {
                let b: GammaFiniteAlgebra = read_file(g)?;
                b.specialize(&b.augmentation())
            }
            (None, None) => Err(Error::Invalid("--algebra or --gamma is required".into())),
        }
    };
    let presentation = || -> Result<GammaFiniteAlgebra, Error> {
        match &gamma {
            Some(g) => read_file(g),
            None => Err(Error::Invalid("this property needs --gamma".into())),
        }
    };
    match property {
        Property::GradedSimple => simplicity(r, "graded-simple", finite(&algebra)?.is_graded_simple()),
        Property::Central => {
            let a = finite(&algebra)?;
            let d0 = a.centroid().component(&a.group().zero()).len();
            r.kv("degree-zero-centroid-dim", d0).verdict("graded-central", d0 == 1);
        }
        Property::Torus => {
            let t = torus_predicates(&presentation()?)?;
            r.kv("components-one-dimensional", t.components_one_dimensional)
                .kv("components-invertible", t.components_invertible)
                .kv("support-generates", t.support_generates)
                .kv("graded-central-simple", t.graded_central_simple)
                .verdict("torus", t.is_torus);
        }
        Property::Fgc => {
            let f = presentation()?.fgc_report();
            r.kv("fgc", true)
                .kv("rank-over-centroid", f.rank_over_centroid)
                .kv("quotient-order", f.quotient_order);
        }
    }
    Ok(())
}

fn iso_check(kind: IsoKind, r: &mut Report) -> Result<(), Error> {
    let failure = |r: &mut Report, e: &dyn Display| {
        r.kv("valid", false).kv("failure", e).status(FALSE);
    };
    match kind {
        IsoKind::Graded { source, target, witness } => {
            let b: GammaFiniteAlgebra = read_file(&source)?;
            let b2: GammaFiniteAlgebra = read_file(&target)?;
            let w: GradedIsoWitness = read_file(&witness)?;
            match graded_iso_check(&b, &b2, &w) {
                Ok(()) => drop(r.kv("valid", true)),
                Err(e) => failure(r, &e),
            }
        }
        IsoKind::Realization { gamma, certificate } => {
            let b: GammaFiniteAlgebra = read_file(&gamma)?;
            let c: RealizationCertificate = read_file(&certificate)?;
            match verify_realization(&b, &c) {
                Ok(()) => drop(r.kv("valid", true).kv("m", join(&c.m))),
                Err(e) => failure(r, &e),
            }
        }
        IsoKind::Transport { autos, certificate, half_width } => {
            let s: AutomorphismSystem = read_file(&autos)?;
            let c: TransportCertificate = read_file(&certificate)?;
            let bounds = vec![(-half_width, half_width); s.rank()];
            match verify_transport(&s, &c, &bounds) {
                Ok(()) => drop(r.kv("valid", true)),
                Err(e) => failure(r, &e),
            }
        }
        IsoKind::Isograded { autos, other, p, phi } => {
            let s: AutomorphismSystem = read_file(&autos)?;
            let s2: AutomorphismSystem = read_file(&other)?;
            let phi: Matrix = read_file(&phi)?;
            match isograded_check(&s, &s2, &p, &phi) {
                Ok(()) => drop(r.kv("valid", true)),
                Err(e) => failure(r, &e),
            }
        }
    }
    Ok(())
}

fn malformed(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse { .. }
            | Error::Invalid(_)
            | Error::Dimension(_)
            | Error::GradingMismatch { .. }
            | Error::NotUnimodular
            | Error::SingularMatrix
            | Error::SingularScalar
            | Error::Precondition(_)
    )
}

/// Runs the CLI on `argv` (including the program name), writing to `out`; returns the exit
/// status.
pub fn run_with<I, T>(argv: I, out: &mut dyn std::io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { MALFORMED } else { OK };
            let _ = e.print();
            return code;
        }
    };
    let mut r = Report::new();
    let status = match execute(cli.command, &mut r) {
        Ok(()) => r.status,
        Err(e) => {
            r.kv("error", &e);
            if malformed(&e) {
                MALFORMED
            } else {
                FALSE
            }
        }
    };
    for l in &r.lines {
        let _ = writeln!(out, "{l}");
    }
    status
}

pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout().lock())
}
