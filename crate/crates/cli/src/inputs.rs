//! Loading input documents and mapping failures to exit statuses.

use std::fmt;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use antidend_core::algebra::AntiDendAlgebra;
use antidend_core::bialgebra::Bialgebra;
use antidend_core::document::{self, Body, Document, RbBundle};
use antidend_core::representation::Representation;
use antidend_core::rota_baxter::BilinearForm;
use antidend_core::{Error, Field, Matrix, Report, Tensor2};

/// Field and dimension of the first loaded document, used to label a verdict
/// when a command stops on a domain error.
static CONTEXT: OnceLock<(Field, usize)> = OnceLock::new();

#[derive(Debug)]
pub enum Fail {
    Core(Error),
    Usage(String),
    Io(PathBuf, std::io::Error),
    /// Parse error inside a named file.
    Parse(String, Error),
}

impl fmt::Display for Fail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fail::Core(e) => write!(f, "{e}"),
            Fail::Usage(m) => write!(f, "{m}"),
            Fail::Io(p, e) => write!(f, "{}: {e}", p.display()),
            Fail::Parse(name, e) => write!(f, "{name}: {e}"),
        }
    }
}

impl Fail {
    /// A verdict document for errors that mean "the input lacks the property",
    /// `None` for usage and input errors.
    pub fn domain_verdict(&self, check: &str) -> Option<Document> {
        let Fail::Core(e) = self else { return None };
        let report = match e {
            Error::NotAnAlgebra(r)
            | Error::NotABialgebra(r)
            | Error::NotQrb(r)
            | Error::NotRotaBaxter(r)
            | Error::NotACocycle(r) => r.clone(),
            Error::NotFactorizable | Error::Degenerate | Error::Singular => Report::new(),
            _ => return None,
        };
        let (field, dim) = CONTEXT.get().copied().unwrap_or((Field::Rational, 0));
        let mut doc = document::verdict(check, field, dim, &report);
        if let Body::Record { fields, .. } = &mut doc.body {
            fields.insert("error".into(), e.to_string().into());
            fields.insert("passed".into(), false.into());
        }
        Some(doc)
    }
}

fn read_source(path: &Path) -> Result<(String, String), Fail> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Fail::Io(path.into(), e))?;
        Ok(("<stdin>".into(), text))
    } else {
        let text = std::fs::read_to_string(path).map_err(|e| Fail::Io(path.into(), e))?;
        Ok((path.display().to_string(), text))
    }
}

/// Documents from every input, consumed by kind in order of appearance.
pub struct Inputs {
    docs: Vec<Document>,
}

macro_rules! take {
    ($name:ident, $variant:ident, $ty:ty, $what:literal) => {
        pub fn $name(&mut self) -> Result<$ty, Fail> {
            let pos = self
                .docs
                .iter()
                .position(|d| matches!(d.body, Body::$variant(_)))
                .ok_or_else(|| Fail::Usage(concat!("missing ", $what, " document").into()))?;
            match self.docs.remove(pos).body {
                Body::$variant(x) => Ok(x),
                _ => unreachable!(),
            }
        }
    };
}

impl Inputs {
    pub fn load(paths: &[&PathBuf]) -> Result<Inputs, Fail> {
        let mut docs = Vec::new();
        for path in paths {
            let (name, text) = read_source(path)?;
            let parsed = document::parse_lines(&text).map_err(|e| Fail::Parse(name, e))?;
            docs.extend(parsed);
        }
        if let Some(first) = docs.first() {
            let _ = CONTEXT.set((first.field, first.dim));
        }
        let field = docs.first().map(|d| d.field);
        if let Some(other) = docs.iter().find(|d| Some(d.field) != field) {
            return Err(Fail::Core(Error::FieldMismatch(format!(
                "inputs mix fields {} and {}",
                field.expect("nonempty").tag(),
                other.field.tag()
            ))));
        }
        Ok(Inputs { docs })
    }

    take!(take_algebra, Algebra, AntiDendAlgebra, "algebra");
    take!(take_bialgebra, Bialgebra, Bialgebra, "bialgebra");
    take!(take_representation, Representation, Representation, "representation");
    take!(take_tensor2, Tensor2, Tensor2, "tensor2");
    take!(take_matrix, Matrix, Matrix, "matrix");
    take!(take_form, Form, BilinearForm, "form");

    pub fn take_bundle(&mut self) -> Option<RbBundle> {
        let pos = self.docs.iter().position(|d| matches!(d.body, Body::RbBundle(_)))?;
        match self.docs.remove(pos).body {
            Body::RbBundle(b) => Some(*b),
            _ => unreachable!(),
        }
    }
}
