//! Representations of anti-dendriform algebras and of associative algebras.

use std::str::FromStr;

use crate::algebra::{AntiDendAlgebra, AssocAlgebra, Op};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::Report;
use crate::scalar::{Field, Scalar};

/// The four structure maps, plus the derived sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepMap {
    LSucc,
    RSucc,
    LPrec,
    RPrec,
    /// `l≻ + l≺`
    LDot,
    /// `r≻ + r≺`
    RDot,
}

fn check_family(field: Field, n: usize, m: usize, maps: &[Matrix], what: &str) -> Result<()> {
    if maps.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "{what}: {} matrices for an algebra of dimension {n}",
            maps.len()
        )));
    }
    for mat in maps {
        if mat.rows() != m || mat.cols() != m {
            return Err(Error::DimensionMismatch(format!(
                "{what}: {}x{} matrix on a module of dimension {m}",
                mat.rows(),
                mat.cols()
            )));
        }
        if mat.field() != field {
            return Err(Error::FieldMismatch(format!("{what}: matrix over {}", mat.field())));
        }
    }
    Ok(())
}

fn combine(field: Field, m: usize, maps: &[Matrix], x: &[Scalar]) -> Matrix {
    let mut out = Matrix::zeros(field, m, m);
    for (xi, mat) in x.iter().zip(maps) {
        if !xi.is_zero() {
            out = &out + &mat.scale(xi);
        }
    }
    out
}

/// `(V, l≻, r≻, l≺, r≺)`: one `m×m` matrix per algebra basis vector for each map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    field: Field,
    n: usize,
    m: usize,
    l_succ: Vec<Matrix>,
    r_succ: Vec<Matrix>,
    l_prec: Vec<Matrix>,
    r_prec: Vec<Matrix>,
}

impl Representation {
    pub fn new(
        field: Field,
        m: usize,
        l_succ: Vec<Matrix>,
        r_succ: Vec<Matrix>,
        l_prec: Vec<Matrix>,
        r_prec: Vec<Matrix>,
    ) -> Result<Self> {
        let n = l_succ.len();
        check_family(field, n, m, &l_succ, "l_succ")?;
        check_family(field, n, m, &r_succ, "r_succ")?;
        check_family(field, n, m, &l_prec, "l_prec")?;
        check_family(field, n, m, &r_prec, "r_prec")?;
        Ok(Representation {
            field,
            n,
            m,
            l_succ,
            r_succ,
            l_prec,
            r_prec,
        })
    }

    pub fn zero(field: Field, n: usize, m: usize) -> Representation {
        let z = vec![Matrix::zeros(field, m, m); n];
        Representation {
            field,
            n,
            m,
            l_succ: z.clone(),
            r_succ: z.clone(),
            l_prec: z.clone(),
            r_prec: z,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Dimension of the algebra acting.
    pub fn algebra_dim(&self) -> usize {
        self.n
    }

    /// Dimension of the module.
    pub fn module_dim(&self) -> usize {
        self.m
    }

    pub fn family(&self, map: RepMap) -> Vec<Matrix> {
        match map {
            RepMap::LSucc => self.l_succ.clone(),
            RepMap::RSucc => self.r_succ.clone(),
            RepMap::LPrec => self.l_prec.clone(),
            RepMap::RPrec => self.r_prec.clone(),
            RepMap::LDot => self.l_succ.iter().zip(&self.l_prec).map(|(a, b)| a + b).collect(),
            RepMap::RDot => self.r_succ.iter().zip(&self.r_prec).map(|(a, b)| a + b).collect(),
        }
    }

    /// The map evaluated at an algebra element.
    pub fn at(&self, map: RepMap, x: &[Scalar]) -> Matrix {
        match map {
            RepMap::LSucc => combine(self.field, self.m, &self.l_succ, x),
            RepMap::RSucc => combine(self.field, self.m, &self.r_succ, x),
            RepMap::LPrec => combine(self.field, self.m, &self.l_prec, x),
            RepMap::RPrec => combine(self.field, self.m, &self.r_prec, x),
            RepMap::LDot => &self.at(RepMap::LSucc, x) + &self.at(RepMap::LPrec, x),
            RepMap::RDot => &self.at(RepMap::RSucc, x) + &self.at(RepMap::RPrec, x),
        }
    }

    pub fn at_basis(&self, map: RepMap, i: usize) -> Matrix {
        match map {
            RepMap::LSucc => self.l_succ[i].clone(),
            RepMap::RSucc => self.r_succ[i].clone(),
            RepMap::LPrec => self.l_prec[i].clone(),
            RepMap::RPrec => self.r_prec[i].clone(),
            RepMap::LDot => &self.l_succ[i] + &self.l_prec[i],
            RepMap::RDot => &self.r_succ[i] + &self.r_prec[i],
        }
    }

    /// Replaces one matrix, for mutation tests.
    pub fn with_matrix(mut self, map: RepMap, i: usize, mat: Matrix) -> Result<Self> {
        let slot = match map {
            RepMap::LSucc => &mut self.l_succ,
            RepMap::RSucc => &mut self.r_succ,
            RepMap::LPrec => &mut self.l_prec,
            RepMap::RPrec => &mut self.r_prec,
            _ => return Err(Error::UnknownVariant("derived maps are not stored".into())),
        };
        if mat.rows() != self.m || mat.cols() != self.m {
            return Err(Error::DimensionMismatch("replacement matrix shape".into()));
        }
        slot[i] = mat;
        Ok(self)
    }
}

pub fn regular_representation(a: &AntiDendAlgebra) -> Representation {
    let n = a.dim();
    let fam = |f: &dyn Fn(usize) -> Matrix| (0..n).map(f).collect::<Vec<_>>();
    Representation {
        field: a.field(),
        n,
        m: n,
        l_succ: fam(&|i| a.left_basis(Op::Succ, i)),
        r_succ: fam(&|i| a.right_basis(Op::Succ, i)),
        l_prec: fam(&|i| a.left_basis(Op::Prec, i)),
        r_prec: fam(&|i| a.right_basis(Op::Prec, i)),
    }
}

fn expect_chain(report: &mut Report, id: &str, w: &[usize], chain: &[Matrix]) {
    for (k, pair) in chain.windows(2).enumerate() {
        let cond = format!("{id}.{}", k + 1);
        report.expect_eq(&cond, w, pair[0].entries(), pair[1].entries());
    }
}

/// Checks the four representation axiom groups on all basis pairs `(x, y)`.
/// Chains of equalities get one id per consecutive pair (`R1.1`..`R3.3`);
/// the three separate identities of the last group are `R4.1`..`R4.3`.
pub fn check_representation(a: &AntiDendAlgebra, v: &Representation) -> Result<Report> {
    if a.dim() != v.n {
        return Err(Error::DimensionMismatch(format!(
            "representation of a {}-dimensional algebra checked against dimension {}",
            v.n,
            a.dim()
        )));
    }
    if a.field() != v.field {
        return Err(Error::FieldMismatch("representation and algebra fields differ".into()));
    }
    use RepMap::*;
    let n = a.dim();
    let mut report = Report::new();
    for i in 0..n {
        for j in 0..n {
            let w = [i, j];
            let xy_dot = a.basis_product(Op::Dot, i, j);
            let xy_succ = a.basis_product(Op::Succ, i, j);
            let xy_prec = a.basis_product(Op::Prec, i, j);
            let (x, y) = (|m| v.at_basis(m, i), |m| v.at_basis(m, j));

            expect_chain(
                &mut report,
                "R1",
                &w,
                &[
                    &x(LSucc) * &y(LSucc),
                    -&v.at(LSucc, xy_dot),
                    -&(&x(LPrec) * &y(LDot)),
                    v.at(LPrec, xy_prec),
                ],
            );
            expect_chain(
                &mut report,
                "R2",
                &w,
                &[
                    v.at(RSucc, xy_succ),
                    -&(&y(RSucc) * &x(RDot)),
                    -&v.at(RPrec, xy_dot),
                    &y(RPrec) * &x(RPrec),
                ],
            );
            expect_chain(
                &mut report,
                "R3",
                &w,
                &[
                    &x(LSucc) * &y(RSucc),
                    -&(&y(RSucc) * &x(LDot)),
                    -&(&x(LPrec) * &y(RDot)),
                    &y(RPrec) * &x(LPrec),
                ],
            );
            let l = v.at(LPrec, xy_succ);
            let r = &x(LSucc) * &y(LPrec);
            report.expect_eq("R4.1", &w, l.entries(), r.entries());
            let l = &y(RPrec) * &x(RSucc);
            let r = v.at(RSucc, xy_prec);
            report.expect_eq("R4.2", &w, l.entries(), r.entries());
            let l = &y(RPrec) * &x(LSucc);
            let r = &x(LSucc) * &y(RPrec);
            report.expect_eq("R4.3", &w, l.entries(), r.entries());
        }
    }
    Ok(report)
}

/// `(V, l, r)` for an associative algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocRep {
    field: Field,
    n: usize,
    m: usize,
    l: Vec<Matrix>,
    r: Vec<Matrix>,
}

impl AssocRep {
    pub fn new(field: Field, m: usize, l: Vec<Matrix>, r: Vec<Matrix>) -> Result<Self> {
        let n = l.len();
        check_family(field, n, m, &l, "l")?;
        check_family(field, n, m, &r, "r")?;
        Ok(AssocRep { field, n, m, l, r })
    }

    pub fn module_dim(&self) -> usize {
        self.m
    }

    pub fn left(&self, x: &[Scalar]) -> Matrix {
        combine(self.field, self.m, &self.l, x)
    }

    pub fn right(&self, x: &[Scalar]) -> Matrix {
        combine(self.field, self.m, &self.r, x)
    }

    pub fn left_basis(&self, i: usize) -> &Matrix {
        &self.l[i]
    }

    pub fn right_basis(&self, i: usize) -> &Matrix {
        &self.r[i]
    }
}

/// Bimodule law: `l(xy) = l(x)l(y)` (`BIMOD.1`), `r(xy) = r(y)r(x)` (`BIMOD.2`),
/// `l(x)r(y) = r(y)l(x)` (`BIMOD.3`).
pub fn check_assoc_bimodule(a: &AssocAlgebra, v: &AssocRep) -> Result<Report> {
    if a.dim() != v.n {
        return Err(Error::DimensionMismatch("bimodule over an algebra of another dimension".into()));
    }
    let n = a.dim();
    let mut report = Report::new();
    for i in 0..n {
        for j in 0..n {
            let w = [i, j];
            let xy = a.basis_product(i, j);
            let l = v.left(xy);
            let r = &v.l[i] * &v.l[j];
            report.expect_eq("BIMOD.1", &w, l.entries(), r.entries());
            let l = v.right(xy);
            let r = &v.r[j] * &v.r[i];
            report.expect_eq("BIMOD.2", &w, l.entries(), r.entries());
            let l = &v.l[i] * &v.r[j];
            let r = &v.r[j] * &v.l[i];
            report.expect_eq("BIMOD.3", &w, l.entries(), r.entries());
        }
    }
    Ok(report)
}

/// The five representations built from a given one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// `(V, −l≻, −r≺)` over `(A, ·)`
    AssocA,
    /// `(V, l≻+l≺, r≻+r≺)` over `(A, ·)`
    AssocB,
    /// `(V*, −(r≺*+r≻*), l≺*, r≻*, −(l≺*+l≻*))`
    DualC,
    /// `(V*, −r≺*, −l≻*)` over `(A, ·)`
    AssocDualD,
    /// `(V*, −(r≺*+r≻*), −(l≺*+l≻*))` over `(A, ·)`
    AssocDualE,
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Variant> {
        match s {
            "assoc-a" => Ok(Variant::AssocA),
            "assoc-b" => Ok(Variant::AssocB),
            "dual-c" => Ok(Variant::DualC),
            "assoc-dual-d" => Ok(Variant::AssocDualD),
            "assoc-dual-e" => Ok(Variant::AssocDualE),
            other => Err(Error::UnknownVariant(other.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Derived {
    AntiDend(Representation),
    Assoc(AssocRep),
}

fn neg_all(v: Vec<Matrix>) -> Vec<Matrix> {
    v.iter().map(|m| -m).collect()
}

fn transpose_all(v: Vec<Matrix>) -> Vec<Matrix> {
    v.iter().map(Matrix::transpose).collect()
}

pub fn derived_representation(v: &Representation, variant: Variant) -> Derived {
    use RepMap::*;
    let (f, m) = (v.field, v.m);
    let assoc = |l, r| Derived::Assoc(AssocRep { field: f, n: v.n, m, l, r });
    match variant {
        Variant::AssocA => assoc(neg_all(v.family(LSucc)), neg_all(v.family(RPrec))),
        Variant::AssocB => assoc(v.family(LDot), v.family(RDot)),
        Variant::DualC => Derived::AntiDend(Representation {
            field: f,
            n: v.n,
            m,
            l_succ: neg_all(transpose_all(v.family(RDot))),
            r_succ: transpose_all(v.family(LPrec)),
            l_prec: transpose_all(v.family(RSucc)),
            r_prec: neg_all(transpose_all(v.family(LDot))),
        }),
        Variant::AssocDualD => assoc(
            neg_all(transpose_all(v.family(RPrec))),
            neg_all(transpose_all(v.family(LSucc))),
        ),
        Variant::AssocDualE => assoc(
            neg_all(transpose_all(v.family(RDot))),
            neg_all(transpose_all(v.family(LDot))),
        ),
    }
}

/// Checks a derived representation against the appropriate axioms.
pub fn check_derived(a: &AntiDendAlgebra, d: &Derived) -> Result<Report> {
    match d {
        Derived::AntiDend(rep) => check_representation(a, rep),
        Derived::Assoc(rep) => check_assoc_bimodule(&crate::algebra::associated_associative(a), rep),
    }
}
