//! `antidend`: check, build and search anti-dendriform structures from the
//! command line. Documents go to stdout (or `-o`), diagnostics to stderr.
//!
//! Exit status: 0 when every check passes, 1 when a check fails or an input
//! lacks a required property (the verdict lists witnesses), 2 for usage,
//! parse and I/O errors.

mod inputs;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use antidend_core::algebra::{associated_associative, AntiDendAlgebra, check_anti_dendriform, check_associative};
use antidend_core::bialgebra::{check_bialgebra, coboundary_bialgebra, double_algebra_checked};
use antidend_core::document::{self, Document, RbBundle};
use antidend_core::representation::check_representation;
use antidend_core::rota_baxter::{
    check_qrb, check_quadratic, factorizable_to_qrb, qrb_to_factorizable, semidirect_qrb,
    BilinearForm, RBOperator,
};
use antidend_core::search::{enumerate_algebras, enumerate_ybe, SearchSpec, DEFAULT_BUDGET};
use antidend_core::ybe::{canonical_double_r, classify_r, factorize};
use antidend_core::{Error, Field, Report, Scalar};

use inputs::{Fail, Inputs};

/// Environment variable overriding the default search budget.
const BUDGET_VAR: &str = "ANTIDEND_SEARCH_BUDGET";

#[derive(Parser)]
#[command(name = "antidend", version, about = "Exact checks and constructions for anti-dendriform algebras")]
struct Cli {
    /// Write the output documents to this file instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify axioms of a structure.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Double algebra on A ⊕ A* of a bialgebra.
    Double { file: PathBuf },
    /// Coboundary bialgebra of an r-matrix.
    Cobound { alg: PathBuf, r: Option<PathBuf> },
    /// Classification flags of an r-matrix.
    Classify { alg: PathBuf, r: Option<PathBuf> },
    /// Split a vector as x1 − x2 along a factorizable r-matrix.
    Factorize {
        alg: PathBuf,
        r: Option<PathBuf>,
        /// Comma-separated coordinates of x.
        #[arg(long)]
        vector: String,
    },
    /// Double of a bialgebra with its canonical r-matrix (two documents).
    CanonicalDouble { bialg: PathBuf },
    /// Factorizable r-matrices and quadratic Rota-Baxter data.
    #[command(subcommand)]
    Qrb(QrbCmd),
    /// Quadratic Rota-Baxter data on A ⋉ A* from a Rota-Baxter operator.
    Semidirect {
        alg: PathBuf,
        p: Option<PathBuf>,
        #[arg(long)]
        weight: Option<String>,
    },
    /// Exhaustive enumeration over a prime field.
    #[command(subcommand)]
    Search(SearchCmd),
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Anti-dendriform axioms and associativity of x≻y + x≺y.
    Algebra { file: PathBuf },
    /// Bialgebra compatibility conditions.
    Bialgebra { file: PathBuf },
    /// Representation axioms.
    Rep { alg: PathBuf, rep: Option<PathBuf> },
    /// Symmetric nondegenerate invariant bilinear form.
    Quadratic { alg: PathBuf, omega: Option<PathBuf> },
    /// Quadratic Rota-Baxter algebra of the given weight.
    Qrb(QrbFiles),
}

#[derive(Args)]
struct QrbFiles {
    alg: PathBuf,
    p: Option<PathBuf>,
    omega: Option<PathBuf>,
    #[arg(long)]
    weight: Option<String>,
}

#[derive(Subcommand)]
enum QrbCmd {
    /// r with T_r = P (ω♯)⁻¹.
    ToR(QrbFiles),
    /// (P, ω) from a factorizable r.
    FromR {
        alg: PathBuf,
        r: Option<PathBuf>,
        #[arg(long)]
        weight: String,
    },
}

#[derive(Subcommand)]
enum SearchCmd {
    /// All anti-dendriform algebras of a dimension over F_p.
    Algebras {
        #[arg(long)]
        dim: usize,
        /// Field tag such as p3.
        #[arg(long)]
        field: String,
        #[arg(long)]
        budget: Option<u128>,
    },
    /// All solutions r of D(r) = 0 on an algebra over F_p.
    Ybe {
        alg: PathBuf,
        /// Keep only solutions with this classification flag.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        budget: Option<u128>,
    },
}

/// Documents produced by a command, and whether its checks passed.
struct Outcome {
    docs: Vec<Document>,
    passed: bool,
}

impl Outcome {
    fn one(doc: Document) -> Outcome {
        Outcome {
            docs: vec![doc],
            passed: true,
        }
    }

    fn verdict(check: &str, field: Field, dim: usize, report: &Report) -> Outcome {
        Outcome {
            docs: vec![document::verdict(check, field, dim, report)],
            passed: report.passed(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (check, result) = run(cli.command);
    let outcome = match result {
        Ok(o) => o,
        Err(fail) => {
            eprintln!("antidend: {fail}");
            match fail.domain_verdict(&check) {
                Some(doc) => Outcome {
                    docs: vec![doc],
                    passed: false,
                },
                None => return ExitCode::from(2),
            }
        }
    };
    let text: String = outcome.docs.iter().map(document::serialize).collect();
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("antidend: cannot write output: {e}");
        return ExitCode::from(2);
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(command: Command) -> (String, Result<Outcome, Fail>) {
    let name = match &command {
        Command::Check(c) => match c {
            CheckCmd::Algebra { .. } => "check algebra",
            CheckCmd::Bialgebra { .. } => "check bialgebra",
            CheckCmd::Rep { .. } => "check rep",
            CheckCmd::Quadratic { .. } => "check quadratic",
            CheckCmd::Qrb(_) => "check qrb",
        },
        Command::Double { .. } => "double",
        Command::Cobound { .. } => "cobound",
        Command::Classify { .. } => "classify",
        Command::Factorize { .. } => "factorize",
        Command::CanonicalDouble { .. } => "canonical-double",
        Command::Qrb(QrbCmd::ToR(_)) => "qrb to-r",
        Command::Qrb(QrbCmd::FromR { .. }) => "qrb from-r",
        Command::Semidirect { .. } => "semidirect",
        Command::Search(SearchCmd::Algebras { .. }) => "search algebras",
        Command::Search(SearchCmd::Ybe { .. }) => "search ybe",
    };
    (name.to_string(), dispatch(name, command))
}

fn paths<'a>(items: impl IntoIterator<Item = &'a Option<PathBuf>>, first: &'a PathBuf) -> Vec<&'a PathBuf> {
    std::iter::once(first).chain(items.into_iter().flatten()).collect()
}

fn weight_of(field: Field, text: Option<&str>, bundle: Option<&RbBundle>) -> Result<Scalar, Fail> {
    match (text, bundle) {
        (Some(t), _) => Ok(field.parse_scalar(t)?),
        (None, Some(b)) => Ok(b.operator.weight().clone()),
        (None, None) => Err(Fail::Usage("--weight is required".into())),
    }
}

/// Algebra, operator and form from separate files or one rb-bundle.
fn qrb_inputs(files: &QrbFiles) -> Result<(AntiDendAlgebra, RBOperator, BilinearForm), Fail> {
    let mut inputs = Inputs::load(&paths([&files.p, &files.omega], &files.alg))?;
    let bundle = inputs.take_bundle();
    let algebra = match inputs.take_algebra() {
        Ok(a) => a,
        Err(e) => bundle.as_ref().map(|b| b.algebra.clone()).ok_or(e)?,
    };
    let field = algebra.field();
    let weight = weight_of(field, files.weight.as_deref(), bundle.as_ref())?;
    let p = match inputs.take_matrix() {
        Ok(m) => RBOperator::new(m, weight)?,
        Err(e) => {
            let b = bundle.as_ref().ok_or(e)?;
            RBOperator::new(b.operator.matrix().clone(), weight)?
        }
    };
    let omega = match inputs.take_form() {
        Ok(w) => w,
        Err(e) => bundle.as_ref().and_then(|b| b.form.clone()).ok_or(e)?,
    };
    Ok((algebra, p, omega))
}

fn read_budget(flag: Option<u128>) -> Result<u128, Fail> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Fail::Usage(format!("{BUDGET_VAR} must be a nonnegative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn dispatch(name: &str, command: Command) -> Result<Outcome, Fail> {
    match command {
        Command::Check(CheckCmd::Algebra { file }) => {
            let a = Inputs::load(&[&file])?.take_algebra()?;
            let mut report = check_anti_dendriform(&a);
            report.merge(check_associative(&associated_associative(&a)));
            Ok(Outcome::verdict(name, a.field(), a.dim(), &report))
        }
        Command::Check(CheckCmd::Bialgebra { file }) => {
            let b = Inputs::load(&[&file])?.take_bialgebra()?;
            Ok(Outcome::verdict(name, b.field(), b.dim(), &check_bialgebra(&b)))
        }
        Command::Check(CheckCmd::Rep { alg, rep }) => {
            let mut inputs = Inputs::load(&paths([&rep], &alg))?;
            let a = inputs.take_algebra()?.validate()?;
            let v = inputs.take_representation()?;
            Ok(Outcome::verdict(name, a.field(), a.dim(), &check_representation(&a, &v)?))
        }
        Command::Check(CheckCmd::Quadratic { alg, omega }) => {
            let mut inputs = Inputs::load(&paths([&omega], &alg))?;
            let a = inputs.take_algebra()?.validate()?;
            let w = inputs.take_form()?;
            Ok(Outcome::verdict(name, a.field(), a.dim(), &check_quadratic(&a, &w)?))
        }
        Command::Check(CheckCmd::Qrb(files)) => {
            let (a, p, w) = qrb_inputs(&files)?;
            Ok(Outcome::verdict(name, a.field(), a.dim(), &check_qrb(&a, &p, &w)?))
        }
        Command::Double { file } => {
            let b = Inputs::load(&[&file])?.take_bialgebra()?;
            Ok(Outcome::one(Document::algebra(double_algebra_checked(&b)?)))
        }
        Command::Cobound { alg, r } => {
            let mut inputs = Inputs::load(&paths([&r], &alg))?;
            let a = inputs.take_algebra()?.validate()?;
            let r = inputs.take_tensor2()?;
            Ok(Outcome::one(Document::bialgebra(coboundary_bialgebra(&a, &r)?)))
        }
        Command::Classify { alg, r } => {
            let mut inputs = Inputs::load(&paths([&r], &alg))?;
            let a = inputs.take_algebra()?.validate()?;
            let r = inputs.take_tensor2()?;
            let c = classify_r(&a, &r)?;
            let passed = c.violations.passed();
            Ok(Outcome {
                docs: vec![document::classification(&r, &c)],
                passed,
            })
        }
        Command::Factorize { alg, r, vector } => {
            let mut inputs = Inputs::load(&paths([&r], &alg))?;
            let a = inputs.take_algebra()?;
            let r = inputs.take_tensor2()?;
            let x = vector
                .split(',')
                .map(|s| a.field().parse_scalar(s))
                .collect::<Result<Vec<_>, _>>()?;
            let (x1, x2) = factorize(&a, &r, &x)?;
            let mut fields = serde_json::Map::new();
            fields.insert("x".into(), document::vector_value(&x));
            fields.insert("x1".into(), document::vector_value(&x1));
            fields.insert("x2".into(), document::vector_value(&x2));
            Ok(Outcome::one(Document::record("factorization", a.field(), a.dim(), fields)?))
        }
        Command::CanonicalDouble { bialg } => {
            let b = Inputs::load(&[&bialg])?.take_bialgebra()?;
            let (d, r) = canonical_double_r(&b)?;
            Ok(Outcome {
                docs: vec![Document::algebra(d), Document::tensor2(r)],
                passed: true,
            })
        }
        Command::Qrb(QrbCmd::ToR(files)) => {
            let (a, p, w) = qrb_inputs(&files)?;
            Ok(Outcome::one(Document::tensor2(qrb_to_factorizable(&a, &p, &w)?)))
        }
        Command::Qrb(QrbCmd::FromR { alg, r, weight }) => {
            let mut inputs = Inputs::load(&paths([&r], &alg))?;
            let a = inputs.take_algebra()?;
            let r = inputs.take_tensor2()?;
            let lambda = a.field().parse_scalar(&weight)?;
            let (p, w) = factorizable_to_qrb(&a, &r, &lambda)?;
            Ok(Outcome::one(Document::rb_bundle(RbBundle {
                algebra: a,
                operator: p,
                form: Some(w),
                r: Some(r),
            })))
        }
        Command::Semidirect { alg, p, weight } => {
            let mut inputs = Inputs::load(&paths([&p], &alg))?;
            let bundle = inputs.take_bundle();
            let a = match inputs.take_algebra() {
                Ok(a) => a,
                Err(e) => bundle.as_ref().map(|b| b.algebra.clone()).ok_or(e)?,
            };
            let lambda = weight_of(a.field(), weight.as_deref(), bundle.as_ref())?;
            let m = match inputs.take_matrix() {
                Ok(m) => m,
                Err(e) => bundle.as_ref().map(|b| b.operator.matrix().clone()).ok_or(e)?,
            };
            let a = a.validate()?;
            let s = semidirect_qrb(&a, &RBOperator::new(m, lambda)?)?;
            Ok(Outcome::one(Document::rb_bundle(RbBundle {
                algebra: s.algebra,
                operator: s.operator,
                form: Some(s.form),
                r: Some(s.r),
            })))
        }
        Command::Search(SearchCmd::Algebras { dim, field, budget }) => {
            let p = match Field::from_tag(&field)? {
                Field::Prime(p) => p,
                Field::Rational => return Err(Fail::Usage("search needs a prime field such as p3".into())),
            };
            let spec = SearchSpec::algebras(dim, p)?.with_budget(read_budget(budget)?);
            let found = enumerate_algebras(&spec)?;
            let count = found.algebras.len();
            let mut docs: Vec<Document> = found.algebras.into_iter().map(Document::algebra).collect();
            docs.push(document::summary(&spec, count, found.candidates));
            Ok(Outcome { docs, passed: true })
        }
        Command::Search(SearchCmd::Ybe { alg, filter, budget }) => {
            let a = Inputs::load(&[&alg])?.take_algebra()?.validate()?;
            let p = match a.field() {
                Field::Prime(p) => p,
                Field::Rational => return Err(Fail::Usage("search needs an algebra over a prime field".into())),
            };
            let spec = SearchSpec::ybe(a.dim(), p)?
                .with_budget(read_budget(budget)?)
                .with_filter(filter);
            let found = enumerate_ybe(&spec, &a)?;
            let count = found.solutions.len();
            let mut docs: Vec<Document> = found
                .solutions
                .iter()
                .map(|(r, c)| document::classification(r, c))
                .collect();
            docs.push(document::summary(&spec, count, found.candidates));
            Ok(Outcome { docs, passed: true })
        }
    }
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail::Core(e)
    }
}
