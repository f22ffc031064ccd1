//! The shared text format: one JSON object per document,
//! `{"body": {...}, "header": {"dim": n, "field": "p3", "format": 1, "kind": "algebra"}}`.
//!
//! Serialization is canonical: keys sorted, no whitespace, scalars as strings
//! in canonical form, structure constants as sparse `[i, j, k, "value"]` rows
//! in index order with zeros omitted. Parsing accepts integers where scalars are
//! expected and tolerates explicit zeros, so `serialize ∘ parse` normalizes.

use serde_json::{json, Map, Value};

use crate::algebra::{AntiDendAlgebra, Op};
use crate::bialgebra::{Bialgebra, Coalgebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::Report;
use crate::representation::{RepMap, Representation};
use crate::rota_baxter::{BilinearForm, RBOperator};
use crate::scalar::{Field, Scalar};
use crate::search::{SearchSpec, Target};
use crate::tensor::{Tensor2, Tensor3};
use crate::ybe::Classification;

pub const FORMAT_VERSION: u64 = 1;

/// Output-only kinds, carried as plain JSON objects.
pub const RECORD_KINDS: [&str; 4] = ["classification", "factorization", "summary", "verdict"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub field: Field,
    pub dim: usize,
    pub body: Body,
}

/// Operator `P`, weight `λ`, and optionally `ω` and `r`, over an embedded algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RbBundle {
    pub algebra: AntiDendAlgebra,
    pub operator: RBOperator,
    pub form: Option<BilinearForm>,
    pub r: Option<Tensor2>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Body {
    Algebra(AntiDendAlgebra),
    Bialgebra(Bialgebra),
    Representation(Representation),
    Tensor2(Tensor2),
    Matrix(Matrix),
    Form(BilinearForm),
    RbBundle(Box<RbBundle>),
    SearchSpec(SearchSpec),
    Record { kind: String, fields: Map<String, Value> },
}

impl Document {
    pub fn kind(&self) -> &str {
        match &self.body {
            Body::Algebra(_) => "algebra",
            Body::Bialgebra(_) => "bialgebra",
            Body::Representation(_) => "representation",
            Body::Tensor2(_) => "tensor2",
            Body::Matrix(_) => "matrix",
            Body::Form(_) => "form",
            Body::RbBundle(_) => "rb-bundle",
            Body::SearchSpec(_) => "search-spec",
            Body::Record { kind, .. } => kind,
        }
    }

    pub fn algebra(a: AntiDendAlgebra) -> Document {
        Document {
            field: a.field(),
            dim: a.dim(),
            body: Body::Algebra(a),
        }
    }

    pub fn bialgebra(b: Bialgebra) -> Document {
        Document {
            field: b.field(),
            dim: b.dim(),
            body: Body::Bialgebra(b),
        }
    }

    pub fn representation(v: Representation) -> Document {
        Document {
            field: v.field(),
            dim: v.algebra_dim(),
            body: Body::Representation(v),
        }
    }

    pub fn tensor2(t: Tensor2) -> Document {
        Document {
            field: t.field(),
            dim: t.dim(),
            body: Body::Tensor2(t),
        }
    }

    pub fn matrix(m: Matrix) -> Document {
        Document {
            field: m.field(),
            dim: m.rows(),
            body: Body::Matrix(m),
        }
    }

    pub fn form(w: BilinearForm) -> Document {
        Document {
            field: w.field(),
            dim: w.dim(),
            body: Body::Form(w),
        }
    }

    pub fn rb_bundle(b: RbBundle) -> Document {
        Document {
            field: b.algebra.field(),
            dim: b.algebra.dim(),
            body: Body::RbBundle(Box::new(b)),
        }
    }

    pub fn search_spec(s: SearchSpec) -> Document {
        Document {
            field: s.field,
            dim: s.dim,
            body: Body::SearchSpec(s),
        }
    }

    pub fn record(kind: &str, field: Field, dim: usize, fields: Map<String, Value>) -> Result<Document> {
        if !RECORD_KINDS.contains(&kind) {
            return Err(Error::UnknownKind(kind.to_string()));
        }
        Ok(Document {
            field,
            dim,
            body: Body::Record {
                kind: kind.to_string(),
                fields,
            },
        })
    }
}

fn scalar_value(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

/// Dense vector as a list of scalar strings.
pub fn vector_value(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_value).collect())
}

/// `{"failures": [...], "passed": bool}` with each failure as
/// `{"condition", "left", "right", "witness"}`.
pub fn report_value(report: &Report) -> Value {
    let failures: Vec<Value> = report
        .failures()
        .iter()
        .map(|f| {
            json!({
                "condition": f.condition,
                "left": vector_value(&f.left),
                "right": vector_value(&f.right),
                "witness": f.witness,
            })
        })
        .collect();
    json!({ "failures": failures, "passed": report.passed() })
}

/// Sparse rows `[i, j, k, "v"]` of a flattened `n×n×n` array.
fn sparse3(n: usize, get: impl Fn(usize, usize, usize) -> Scalar) -> Value {
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = get(i, j, k);
                if !v.is_zero() {
                    rows.push(json!([i, j, k, v.to_string()]));
                }
            }
        }
    }
    Value::Array(rows)
}

fn sparse2(rows: usize, cols: usize, get: impl Fn(usize, usize) -> Scalar) -> Value {
    let mut out = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            let v = get(i, j);
            if !v.is_zero() {
                out.push(json!([i, j, v.to_string()]));
            }
        }
    }
    Value::Array(out)
}

fn products_value(a: &AntiDendAlgebra) -> Map<String, Value> {
    let n = a.dim();
    let mut m = Map::new();
    m.insert("prec".into(), sparse3(n, |i, j, k| a.coef(Op::Prec, i, j, k).clone()));
    m.insert("succ".into(), sparse3(n, |i, j, k| a.coef(Op::Succ, i, j, k).clone()));
    m
}

fn matrix_entries(m: &Matrix) -> Value {
    sparse2(m.rows(), m.cols(), |i, j| m.get(i, j).clone())
}

fn family_value(v: &Representation, map: RepMap) -> Value {
    let mut rows = Vec::new();
    for (x, mat) in v.family(map).iter().enumerate() {
        for i in 0..mat.rows() {
            for j in 0..mat.cols() {
                let s = mat.get(i, j);
                if !s.is_zero() {
                    rows.push(json!([x, i, j, s.to_string()]));
                }
            }
        }
    }
    Value::Array(rows)
}

fn body_value(body: &Body) -> Value {
    match body {
        Body::Algebra(a) => Value::Object(products_value(a)),
        Body::Bialgebra(b) => {
            let mut m = products_value(b.algebra());
            let c = b.coalgebra();
            let n = c.dim();
            m.insert("delta_prec".into(), sparse3(n, |k, i, j| c.coef(Op::Prec, k, i, j)));
            m.insert("delta_succ".into(), sparse3(n, |k, i, j| c.coef(Op::Succ, k, i, j)));
            Value::Object(m)
        }
        Body::Representation(v) => json!({
            "l_prec": family_value(v, RepMap::LPrec),
            "l_succ": family_value(v, RepMap::LSucc),
            "module_dim": v.module_dim(),
            "r_prec": family_value(v, RepMap::RPrec),
            "r_succ": family_value(v, RepMap::RSucc),
        }),
        Body::Tensor2(t) => json!({ "entries": matrix_entries(&t.as_matrix()) }),
        Body::Matrix(m) => json!({
            "cols": m.cols(),
            "entries": matrix_entries(m),
            "rows": m.rows(),
        }),
        Body::Form(w) => json!({ "entries": matrix_entries(w.matrix()) }),
        Body::RbBundle(b) => {
            let mut m = Map::new();
            m.insert("algebra".into(), Value::Object(products_value(&b.algebra)));
            m.insert("operator".into(), matrix_entries(b.operator.matrix()));
            m.insert("weight".into(), scalar_value(b.operator.weight()));
            if let Some(w) = &b.form {
                m.insert("form".into(), matrix_entries(w.matrix()));
            }
            if let Some(r) = &b.r {
                m.insert("r".into(), matrix_entries(&r.as_matrix()));
            }
            Value::Object(m)
        }
        Body::SearchSpec(s) => {
            let mut m = Map::new();
            m.insert("budget".into(), Value::String(s.budget.to_string()));
            let target = match s.target {
                Target::Algebras => "algebras",
                Target::YbeSolutions => "ybe-solutions",
            };
            m.insert("target".into(), Value::String(target.into()));
            if let Some(f) = &s.filter {
                m.insert("filter".into(), Value::String(f.clone()));
            }
            Value::Object(m)
        }
        Body::Record { fields, .. } => Value::Object(fields.clone()),
    }
}

/// Sparse `[i, j, "v"]` rows of a matrix.
pub fn matrix_value(m: &Matrix) -> Value {
    matrix_entries(m)
}

/// Sparse `[i, j, k, "v"]` rows of a 3-tensor.
pub fn tensor3_value(t: &Tensor3) -> Value {
    sparse3(t.dim(), |i, j, k| t.get(i, j, k).clone())
}

/// `{"check": name, "failures": [...], "passed": bool}`.
pub fn verdict(check: &str, field: Field, dim: usize, report: &Report) -> Document {
    let mut fields = match report_value(report) {
        Value::Object(m) => m,
        _ => unreachable!("report_value builds an object"),
    };
    fields.insert("check".into(), Value::String(check.into()));
    Document::record("verdict", field, dim, fields).expect("known kind")
}

/// Flags of `r`, `r` itself, the residual `D(r)` when nonzero, and any
/// breached implications.
pub fn classification(r: &Tensor2, c: &Classification) -> Document {
    let flags: Map<String, Value> = Classification::FLAGS
        .iter()
        .map(|f| (f.to_string(), Value::Bool(c.flag(f).expect("listed flag"))))
        .collect();
    let mut fields = Map::new();
    fields.insert("flags".into(), Value::Object(flags));
    fields.insert("r".into(), matrix_entries(&r.as_matrix()));
    if let Some(d) = &c.residual {
        fields.insert("residual".into(), tensor3_value(d));
    }
    fields.insert("violations".into(), report_value(&c.violations));
    Document::record("classification", r.field(), r.dim(), fields).expect("known kind")
}

/// Closing record of a search stream.
pub fn summary(spec: &SearchSpec, count: usize, candidates: u128) -> Document {
    let mut fields = Map::new();
    fields.insert("candidates".into(), Value::String(candidates.to_string()));
    fields.insert("count".into(), Value::from(count));
    fields.insert("spec".into(), body_value(&Body::SearchSpec(spec.clone())));
    Document::record("summary", spec.field, spec.dim, fields).expect("known kind")
}

pub fn to_value(doc: &Document) -> Value {
    json!({
        "body": body_value(&doc.body),
        "header": {
            "dim": doc.dim,
            "field": doc.field.tag(),
            "format": FORMAT_VERSION,
            "kind": doc.kind(),
        },
    })
}

/// Canonical single-line text, newline terminated.
pub fn serialize(doc: &Document) -> String {
    let mut s = serde_json::to_string(&to_value(doc)).expect("values always serialize");
    s.push('\n');
    s
}

/// Line and column (1-based) of the first occurrence of `needle`, or `(0, 0)`.
fn locate(text: &str, needle: &str) -> (usize, usize) {
    match text.find(needle) {
        Some(pos) => {
            let before = &text[..pos];
            let line = before.matches('\n').count() + 1;
            let column = before.rfind('\n').map_or(pos, |nl| pos - nl - 1) + 1;
            (line, column)
        }
        None => (0, 0),
    }
}

/// Parsing context: the field, and the source text for error positions.
struct Ctx<'a> {
    field: Field,
    text: &'a str,
}

impl Ctx<'_> {
    fn err(&self, needle: &str, message: String) -> Error {
        let (line, column) = locate(self.text, needle);
        Error::Syntax {
            line,
            column,
            message,
        }
    }

    fn scalar(&self, v: &Value) -> Result<Scalar> {
        let (text, needle) = match v {
            Value::String(s) => (s.clone(), format!("\"{s}\"")),
            Value::Number(n) if n.is_i64() || n.is_u64() => (n.to_string(), n.to_string()),
            other => return Err(self.err(&other.to_string(), format!("expected a scalar, got {other}"))),
        };
        self.field.parse_scalar(&text).map_err(|e| match e {
            Error::Syntax { message, .. } => self.err(&needle, message),
            other => other,
        })
    }

    fn index(&self, v: &Value, bound: usize) -> Result<usize> {
        let i = v
            .as_u64()
            .ok_or_else(|| self.err(&v.to_string(), format!("expected an index, got {v}")))?;
        if i as usize >= bound {
            return Err(Error::DimensionMismatch(format!("index {i} out of range 0..{bound}")));
        }
        Ok(i as usize)
    }

    fn usize_field(&self, obj: &Map<String, Value>, key: &str) -> Result<usize> {
        let v = get(self, obj, key)?;
        v.as_u64()
            .map(|x| x as usize)
            .ok_or_else(|| self.err(&format!("\"{key}\""), format!("{key} must be a nonnegative integer")))
    }

    /// Sparse rows of arity `bounds.len() + 1` into a dense row-major array.
    fn sparse(&self, v: &Value, bounds: &[usize]) -> Result<Vec<Scalar>> {
        let rows = v
            .as_array()
            .ok_or_else(|| self.err(&v.to_string(), "expected a list of entries".into()))?;
        let len: usize = bounds.iter().product();
        let mut dense = vec![self.field.zero(); len];
        let mut seen = vec![false; len];
        for row in rows {
            let cells = row
                .as_array()
                .filter(|c| c.len() == bounds.len() + 1)
                .ok_or_else(|| {
                    self.err(
                        &row.to_string(),
                        format!("entry {row} needs {} indices and a value", bounds.len()),
                    )
                })?;
            let mut flat = 0;
            for (cell, &b) in cells.iter().zip(bounds) {
                flat = flat * b + self.index(cell, b)?;
            }
            if seen[flat] {
                return Err(self.err(&row.to_string(), format!("duplicate entry {row}")));
            }
            seen[flat] = true;
            dense[flat] = self.scalar(&cells[bounds.len()])?;
        }
        Ok(dense)
    }
}

fn get<'v>(ctx: &Ctx<'_>, obj: &'v Map<String, Value>, key: &str) -> Result<&'v Value> {
    obj.get(key)
        .ok_or_else(|| ctx.err("\"body\"", format!("missing field {key:?}")))
}

fn object<'v>(ctx: &Ctx<'_>, v: &'v Value, what: &str) -> Result<&'v Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| ctx.err(&format!("\"{what}\""), format!("{what} must be an object")))
}

fn parse_products(ctx: &Ctx<'_>, obj: &Map<String, Value>, n: usize) -> Result<AntiDendAlgebra> {
    let succ = ctx.sparse(get(ctx, obj, "succ")?, &[n, n, n])?;
    let prec = ctx.sparse(get(ctx, obj, "prec")?, &[n, n, n])?;
    AntiDendAlgebra::new(ctx.field, n, succ, prec)
}

fn parse_square(ctx: &Ctx<'_>, v: &Value, n: usize) -> Result<Matrix> {
    Matrix::new(ctx.field, n, n, ctx.sparse(v, &[n, n])?)
}

fn parse_family(ctx: &Ctx<'_>, v: &Value, n: usize, m: usize) -> Result<Vec<Matrix>> {
    let dense = ctx.sparse(v, &[n, m, m])?;
    dense
        .chunks(m * m)
        .map(|c| Matrix::new(ctx.field, m, m, c.to_vec()))
        .collect()
}

fn parse_body(ctx: &Ctx<'_>, kind: &str, n: usize, body: &Value) -> Result<Body> {
    let obj = object(ctx, body, "body")?;
    Ok(match kind {
        "algebra" => Body::Algebra(parse_products(ctx, obj, n)?),
        "bialgebra" => {
            let a = parse_products(ctx, obj, n)?;
            let ds = ctx.sparse(get(ctx, obj, "delta_succ")?, &[n, n, n])?;
            let dp = ctx.sparse(get(ctx, obj, "delta_prec")?, &[n, n, n])?;
            Body::Bialgebra(Bialgebra::new(a, Coalgebra::new(ctx.field, n, ds, dp)?)?)
        }
        "representation" => {
            let m = ctx.usize_field(obj, "module_dim")?;
            let fam = |key: &str| parse_family(ctx, get(ctx, obj, key)?, n, m);
            Body::Representation(Representation::new(
                ctx.field,
                m,
                fam("l_succ")?,
                fam("r_succ")?,
                fam("l_prec")?,
                fam("r_prec")?,
            )?)
        }
        "tensor2" => Body::Tensor2(Tensor2::new(
            ctx.field,
            n,
            ctx.sparse(get(ctx, obj, "entries")?, &[n, n])?,
        )?),
        "matrix" => {
            let rows = ctx.usize_field(obj, "rows")?;
            let cols = ctx.usize_field(obj, "cols")?;
            if rows != n {
                return Err(Error::DimensionMismatch(format!(
                    "header dimension {n} but {rows} rows"
                )));
            }
            let data = ctx.sparse(get(ctx, obj, "entries")?, &[rows, cols])?;
            Body::Matrix(Matrix::new(ctx.field, rows, cols, data)?)
        }
        "form" => Body::Form(BilinearForm::new(parse_square(ctx, get(ctx, obj, "entries")?, n)?)?),
        "rb-bundle" => {
            let algebra = parse_products(ctx, object(ctx, get(ctx, obj, "algebra")?, "algebra")?, n)?;
            let p = parse_square(ctx, get(ctx, obj, "operator")?, n)?;
            let weight = ctx.scalar(get(ctx, obj, "weight")?)?;
            let form = match obj.get("form") {
                Some(v) => Some(BilinearForm::new(parse_square(ctx, v, n)?)?),
                None => None,
            };
            let r = match obj.get("r") {
                Some(v) => Some(Tensor2::from_matrix(&parse_square(ctx, v, n)?)?),
                None => None,
            };
            Body::RbBundle(Box::new(RbBundle {
                algebra,
                operator: RBOperator::new(p, weight)?,
                form,
                r,
            }))
        }
        "search-spec" => {
            let target = match get(ctx, obj, "target")?.as_str() {
                Some("algebras") => Target::Algebras,
                Some("ybe-solutions") => Target::YbeSolutions,
                _ => return Err(ctx.err("\"target\"", "target must be algebras or ybe-solutions".into())),
            };
            let budget = get(ctx, obj, "budget")?
                .as_str()
                .and_then(|s| s.parse::<u128>().ok())
                .ok_or_else(|| ctx.err("\"budget\"", "budget must be a decimal string".into()))?;
            let filter = match obj.get("filter") {
                Some(Value::String(s)) => Some(s.clone()),
                None | Some(Value::Null) => None,
                Some(_) => return Err(ctx.err("\"filter\"", "filter must be a string".into())),
            };
            Body::SearchSpec(SearchSpec {
                target,
                dim: n,
                field: ctx.field,
                budget,
                filter,
            })
        }
        k if RECORD_KINDS.contains(&k) => Body::Record {
            kind: k.to_string(),
            fields: obj.clone(),
        },
        other => return Err(Error::UnknownKind(other.to_string())),
    })
}

pub fn parse(text: &str) -> Result<Document> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    from_value(&value, text)
}

/// Parses one document per nonblank line.
pub fn parse_lines(text: &str) -> Result<Vec<Document>> {
    let mut out = Vec::new();
    for (k, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        out.push(parse(line).map_err(|e| match e {
            Error::Syntax {
                column, message, ..
            } => Error::Syntax {
                line: k + 1,
                column,
                message,
            },
            other => other,
        })?);
    }
    Ok(out)
}

fn from_value(value: &Value, text: &str) -> Result<Document> {
    let bootstrap = Ctx {
        field: Field::Rational,
        text,
    };
    let top = object(&bootstrap, value, "document")?;
    let header = object(&bootstrap, get(&bootstrap, top, "header")?, "header")?;
    let kind = header
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| bootstrap.err("\"header\"", "header needs a string kind".into()))?;
    let tag = header
        .get("field")
        .and_then(Value::as_str)
        .ok_or_else(|| bootstrap.err("\"header\"", "header needs a string field".into()))?;
    let field = Field::from_tag(tag).map_err(|e| match e {
        Error::Syntax { message, .. } => bootstrap.err("\"field\"", message),
        other => other,
    })?;
    match header.get("format").and_then(Value::as_u64) {
        Some(FORMAT_VERSION) => {}
        _ => {
            return Err(bootstrap.err(
                "\"format\"",
                format!("unsupported format version (expected {FORMAT_VERSION})"),
            ))
        }
    }
    let ctx = Ctx { field, text };
    let dim = ctx.usize_field(header, "dim")?;
    crate::algebra::check_dim(dim)?;
    let body = parse_body(&ctx, kind, dim, get(&ctx, top, "body")?)?;
    Ok(Document { field, dim, body })
}
