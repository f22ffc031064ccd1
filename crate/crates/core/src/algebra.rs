//! Anti-dendriform algebras and their associated associative algebras.

use crate::error::{Error, Result};
use crate::linalg::{vec_ops, Matrix};
use crate::report::Report;
use crate::scalar::{Field, Scalar};

/// Which product of an anti-dendriform algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    Succ,
    Prec,
    /// `x·y = x≻y + x≺y`
    Dot,
}

impl Op {
    pub fn name(self) -> &'static str {
        match self {
            Op::Succ => "succ",
            Op::Prec => "prec",
            Op::Dot => "dot",
        }
    }
}

pub(crate) fn check_dim(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::DimensionMismatch("dimension must be positive".into()));
    }
    if n > crate::MAX_DIM {
        return Err(Error::DimensionTooLarge(n));
    }
    Ok(())
}

fn check_constants(field: Field, n: usize, c: &[Scalar], what: &str) -> Result<()> {
    if c.len() != n * n * n {
        return Err(Error::DimensionMismatch(format!(
            "{what}: {} structure constants for dimension {n}",
            c.len()
        )));
    }
    if c.iter().any(|s| s.field() != field) {
        return Err(Error::FieldMismatch(format!("{what}: constants not all over {field}")));
    }
    Ok(())
}

/// Bilinear product given by structure constants `c[i][j][k]`, flattened.
fn mul_with(c: &[Scalar], n: usize, field: Field, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec_ops::zeros(field, n);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let coef = xi * yj;
            let row = &c[(i * n + j) * n..(i * n + j + 1) * n];
            vec_ops::axpy(&mut out, &coef, row);
        }
    }
    out
}

/// `L(x)[k][j] = Σ_i x_i c[i][j][k]`
fn left_with(c: &[Scalar], n: usize, field: Field, x: &[Scalar]) -> Matrix {
    let mut m = Matrix::zeros(field, n, n);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for j in 0..n {
            for k in 0..n {
                let v = &c[(i * n + j) * n + k];
                if !v.is_zero() {
                    let cur = m.get(k, j) + &(xi * v);
                    m.set(k, j, cur);
                }
            }
        }
    }
    m
}

/// `R(x)[k][j] = Σ_i x_i c[j][i][k]`
fn right_with(c: &[Scalar], n: usize, field: Field, x: &[Scalar]) -> Matrix {
    let mut m = Matrix::zeros(field, n, n);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for j in 0..n {
            for k in 0..n {
                let v = &c[(j * n + i) * n + k];
                if !v.is_zero() {
                    let cur = m.get(k, j) + &(xi * v);
                    m.set(k, j, cur);
                }
            }
        }
    }
    m
}

/// An anti-dendriform algebra in a fixed basis `e_0..e_{n-1}`:
/// `e_i ≻ e_j = Σ_k succ[i][j][k] e_k`, likewise `≺`.
#[derive(Clone, Debug)]
pub struct AntiDendAlgebra {
    field: Field,
    n: usize,
    succ: Vec<Scalar>,
    prec: Vec<Scalar>,
    dot: Vec<Scalar>,
    validated: bool,
}

/// Equal when the structure constants agree, validated or not.
impl PartialEq for AntiDendAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.n == other.n && self.succ == other.succ && self.prec == other.prec
    }
}

impl Eq for AntiDendAlgebra {}

impl AntiDendAlgebra {
    /// Unvalidated algebra from flattened constants (index `(i*n + j)*n + k`).
    pub fn new(field: Field, n: usize, succ: Vec<Scalar>, prec: Vec<Scalar>) -> Result<Self> {
        check_dim(n)?;
        check_constants(field, n, &succ, "succ")?;
        check_constants(field, n, &prec, "prec")?;
        let dot = succ.iter().zip(&prec).map(|(a, b)| a + b).collect();
        Ok(AntiDendAlgebra {
            field,
            n,
            succ,
            prec,
            dot,
            validated: false,
        })
    }

    pub fn zero(field: Field, n: usize) -> Result<Self> {
        let z = vec![field.zero(); n * n * n];
        AntiDendAlgebra::new(field, n, z.clone(), z)
    }

    pub fn from_fn(
        field: Field,
        n: usize,
        mut succ: impl FnMut(usize, usize, usize) -> Scalar,
        mut prec: impl FnMut(usize, usize, usize) -> Scalar,
    ) -> Result<Self> {
        let mut s = Vec::with_capacity(n * n * n);
        let mut p = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    s.push(succ(i, j, k));
                    p.push(prec(i, j, k));
                }
            }
        }
        AntiDendAlgebra::new(field, n, s, p)
    }

    /// Runs the axiom check and marks the algebra as validated.
    pub fn validate(mut self) -> Result<Self> {
        let report = check_anti_dendriform(&self);
        if !report.passed() {
            return Err(Error::NotAnAlgebra(report));
        }
        self.validated = true;
        Ok(self)
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn constants(&self, op: Op) -> &[Scalar] {
        match op {
            Op::Succ => &self.succ,
            Op::Prec => &self.prec,
            Op::Dot => &self.dot,
        }
    }

    /// Flattened constants of `≻` or `≺` (or `·`).
    pub fn raw(&self, op: Op) -> &[Scalar] {
        self.constants(op)
    }

    pub fn coef(&self, op: Op, i: usize, j: usize, k: usize) -> &Scalar {
        &self.constants(op)[(i * self.n + j) * self.n + k]
    }

    /// Coordinates of `e_i ∘ e_j`.
    pub fn basis_product(&self, op: Op, i: usize, j: usize) -> &[Scalar] {
        let n = self.n;
        &self.constants(op)[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn mul(&self, op: Op, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        mul_with(self.constants(op), self.n, self.field, x, y)
    }

    /// Left multiplication operator `L_∘(x)`.
    pub fn left(&self, op: Op, x: &[Scalar]) -> Matrix {
        left_with(self.constants(op), self.n, self.field, x)
    }

    /// Right multiplication operator `R_∘(x)`.
    pub fn right(&self, op: Op, x: &[Scalar]) -> Matrix {
        right_with(self.constants(op), self.n, self.field, x)
    }

    pub fn left_basis(&self, op: Op, i: usize) -> Matrix {
        self.left(op, &vec_ops::basis(self.field, self.n, i))
    }

    pub fn right_basis(&self, op: Op, i: usize) -> Matrix {
        self.right(op, &vec_ops::basis(self.field, self.n, i))
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        vec_ops::basis(self.field, self.n, i)
    }

    pub fn is_zero(&self) -> bool {
        self.succ.iter().chain(&self.prec).all(Scalar::is_zero)
    }

    /// Direct sum `A ⊕ B` with basis `(A-basis, B-basis)`; cross products vanish.
    pub fn direct_sum(&self, other: &AntiDendAlgebra) -> Result<AntiDendAlgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch("direct sum of algebras over different fields".into()));
        }
        let (a, b) = (self.n, other.n);
        let field = self.field;
        let pick = |op: Op, i: usize, j: usize, k: usize| -> Scalar {
            if i < a && j < a && k < a {
                self.coef(op, i, j, k).clone()
            } else if i >= a && j >= a && k >= a {
                other.coef(op, i - a, j - a, k - a).clone()
            } else {
                field.zero()
            }
        };
        AntiDendAlgebra::from_fn(
            field,
            a + b,
            |i, j, k| pick(Op::Succ, i, j, k),
            |i, j, k| pick(Op::Prec, i, j, k),
        )
    }
}

/// Evaluates `x≻(y≻z) = −(x·y)≻z = −x≺(y·z) = (x≺y)≺z` (ids `A1.1`..`A1.3`,
/// one per consecutive pair) and `(x≻y)≺z = x≻(y≺z)` (`A2`) on all basis triples.
pub fn check_anti_dendriform(a: &AntiDendAlgebra) -> Report {
    let mut report = Report::new();
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let xy_dot = a.basis_product(Op::Dot, i, j);
            let xy_prec = a.basis_product(Op::Prec, i, j);
            let xy_succ = a.basis_product(Op::Succ, i, j);
            let x = a.basis(i);
            for k in 0..n {
                let z = a.basis(k);
                let t1 = a.mul(Op::Succ, &x, a.basis_product(Op::Succ, j, k));
                let t2 = vec_ops::neg(&a.mul(Op::Succ, xy_dot, &z));
                let t3 = vec_ops::neg(&a.mul(Op::Prec, &x, a.basis_product(Op::Dot, j, k)));
                let t4 = a.mul(Op::Prec, xy_prec, &z);
                let w = [i, j, k];
                report.expect_eq("A1.1", &w, &t1, &t2);
                report.expect_eq("A1.2", &w, &t2, &t3);
                report.expect_eq("A1.3", &w, &t3, &t4);
                let l = a.mul(Op::Prec, xy_succ, &z);
                let r = a.mul(Op::Succ, &x, a.basis_product(Op::Prec, j, k));
                report.expect_eq("A2", &w, &l, &r);
            }
        }
    }
    report
}

/// An associative algebra by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocAlgebra {
    field: Field,
    n: usize,
    c: Vec<Scalar>,
}

impl AssocAlgebra {
    pub fn new(field: Field, n: usize, c: Vec<Scalar>) -> Result<Self> {
        check_dim(n)?;
        check_constants(field, n, &c, "dot")?;
        Ok(AssocAlgebra { field, n, c })
    }

    pub fn zero(field: Field, n: usize) -> Result<Self> {
        AssocAlgebra::new(field, n, vec![field.zero(); n * n * n])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn raw(&self) -> &[Scalar] {
        &self.c
    }

    pub fn coef(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[(i * self.n + j) * self.n + k]
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.n;
        &self.c[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        mul_with(&self.c, self.n, self.field, x, y)
    }

    pub fn left(&self, x: &[Scalar]) -> Matrix {
        left_with(&self.c, self.n, self.field, x)
    }

    pub fn right(&self, x: &[Scalar]) -> Matrix {
        right_with(&self.c, self.n, self.field, x)
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        vec_ops::basis(self.field, self.n, i)
    }
}

/// `(x·y)·z = x·(y·z)` on basis triples (`ASSOC`).
pub fn check_associative(a: &AssocAlgebra) -> Report {
    let mut report = Report::new();
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let l = a.mul(a.basis_product(i, j), &a.basis(k));
                let r = a.mul(&a.basis(i), a.basis_product(j, k));
                report.expect_eq("ASSOC", &[i, j, k], &l, &r);
            }
        }
    }
    report
}

pub fn associated_associative(a: &AntiDendAlgebra) -> AssocAlgebra {
    AssocAlgebra {
        field: a.field,
        n: a.n,
        c: a.dot.clone(),
    }
}

/// Which products a homomorphism must preserve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preserve {
    /// Both `≻` and `≺`.
    Both,
    /// Only `·`.
    Dot,
}

fn check_map_shape(f: &Matrix, src: usize, dst: usize) -> Result<()> {
    if f.cols() != src || f.rows() != dst {
        return Err(Error::DimensionMismatch(format!(
            "map is {}x{} but algebras have dimensions {src} -> {dst}",
            f.rows(),
            f.cols()
        )));
    }
    Ok(())
}

/// `f(x∘y) = f(x)∘f(y)` on basis pairs (`HOM.succ`, `HOM.prec` or `HOM.dot`).
pub fn check_homomorphism(
    f: &Matrix,
    src: &AntiDendAlgebra,
    dst: &AntiDendAlgebra,
    which: Preserve,
) -> Result<Report> {
    check_map_shape(f, src.dim(), dst.dim())?;
    let ops: &[Op] = match which {
        Preserve::Both => &[Op::Succ, Op::Prec],
        Preserve::Dot => &[Op::Dot],
    };
    let mut report = Report::new();
    let n = src.dim();
    for i in 0..n {
        let fi = f.column(i);
        for j in 0..n {
            let fj = f.column(j);
            for &op in ops {
                let l = f.apply(src.basis_product(op, i, j));
                let r = dst.mul(op, &fi, &fj);
                report.expect_eq(&format!("HOM.{}", op.name()), &[i, j], &l, &r);
            }
        }
    }
    Ok(report)
}

/// Homomorphism check between associative algebras (`HOM.dot`).
pub fn check_assoc_homomorphism(
    f: &Matrix,
    src: &AssocAlgebra,
    dst: &AssocAlgebra,
) -> Result<Report> {
    check_map_shape(f, src.dim(), dst.dim())?;
    let mut report = Report::new();
    let n = src.dim();
    for i in 0..n {
        for j in 0..n {
            let l = f.apply(src.basis_product(i, j));
            let r = dst.mul(&f.column(i), &f.column(j));
            report.expect_eq("HOM.dot", &[i, j], &l, &r);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Field {
        Field::prime(3).unwrap()
    }

    fn f3a() -> AntiDendAlgebra {
        let f = f3();
        AntiDendAlgebra::new(f, 1, vec![f.one()], vec![f.one()]).unwrap()
    }

    #[test]
    fn zero_algebra_passes() {
        let z2 = AntiDendAlgebra::zero(Field::Rational, 2).unwrap();
        assert!(check_anti_dendriform(&z2).passed());
    }

    #[test]
    fn f3a_passes_and_sums_to_two() {
        let a = f3a();
        assert!(check_anti_dendriform(&a).passed());
        let assoc = associated_associative(&a);
        assert_eq!(assoc.coef(0, 0, 0), &f3().from_i64(2));
        assert!(check_associative(&assoc).passed());
    }

    #[test]
    fn succ_only_fails_first_equality() {
        let q = Field::Rational;
        let a = AntiDendAlgebra::new(q, 1, vec![q.one()], vec![q.zero()]).unwrap();
        let report = check_anti_dendriform(&a);
        let first = &report.failures()[0];
        assert_eq!(first.condition, "A1.1");
        assert_eq!(first.witness, vec![0, 0, 0]);
        assert_eq!(first.left, vec![q.one()]);
        assert_eq!(first.right, vec![q.from_i64(-1)]);
    }

    #[test]
    fn operators_follow_column_convention() {
        let q = Field::Rational;
        // e0 ≻ e1 = e1, everything else zero
        let a = AntiDendAlgebra::from_fn(
            q,
            2,
            |i, j, k| q.from_i64((i == 0 && j == 1 && k == 1) as i64),
            |_, _, _| q.zero(),
        )
        .unwrap();
        let l0 = a.left_basis(Op::Succ, 0);
        assert_eq!(l0.apply(&a.basis(1)), a.basis(1));
        let r1 = a.right_basis(Op::Succ, 1);
        assert_eq!(r1.apply(&a.basis(0)), a.basis(1));
        assert!(r1.apply(&a.basis(1)).iter().all(Scalar::is_zero));
    }

    #[test]
    fn homomorphism_examples() {
        let a = f3a();
        let id = Matrix::identity(f3(), 1);
        assert!(check_homomorphism(&id, &a, &a, Preserve::Both).unwrap().passed());
        let zero = Matrix::zeros(f3(), 1, 1);
        assert!(check_homomorphism(&zero, &a, &a, Preserve::Both).unwrap().passed());
        let two = Matrix::scalar(f3(), 1, &f3().from_i64(2));
        let report = check_homomorphism(&two, &a, &a, Preserve::Both).unwrap();
        assert!(report.has("HOM.succ"));
        assert_eq!(report.failures()[0].left, vec![f3().from_i64(2)]);
        assert_eq!(report.failures()[0].right, vec![f3().from_i64(1)]);
    }

    #[test]
    fn validate_sets_flag() {
        assert!(f3a().validate().unwrap().is_validated());
        let q = Field::Rational;
        let bad = AntiDendAlgebra::new(q, 1, vec![q.one()], vec![q.zero()]).unwrap();
        assert!(matches!(bad.validate(), Err(Error::NotAnAlgebra(_))));
    }
}
