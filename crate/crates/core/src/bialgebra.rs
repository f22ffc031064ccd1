//! Coalgebras, bialgebra compatibility, coboundary coproducts and the double.

use crate::algebra::{check_anti_dendriform, AntiDendAlgebra, Op};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::scalar::{Field, Scalar};
use crate::tensor::{act2, act3, Slot, Tensor2};
use crate::ybe::ybe_residuals;

/// Coproducts `Δ≻(e_k) = Σ d_succ[k][i][j] e_i⊗e_j`, likewise `Δ≺`.
///
/// There is no separate axiom list: a coalgebra is valid exactly when its
/// dual products on `A*` form an anti-dendriform algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    field: Field,
    n: usize,
    d_succ: Vec<Scalar>,
    d_prec: Vec<Scalar>,
}

impl Coalgebra {
    /// Flattened constants, index `(k*n + i)*n + j`.
    pub fn new(field: Field, n: usize, d_succ: Vec<Scalar>, d_prec: Vec<Scalar>) -> Result<Self> {
        // Reuse the algebra constructor's shape and field validation.
        AntiDendAlgebra::new(field, n, d_succ.clone(), d_prec.clone())?;
        Ok(Coalgebra {
            field,
            n,
            d_succ,
            d_prec,
        })
    }

    pub fn zero(field: Field, n: usize) -> Result<Self> {
        let z = vec![field.zero(); n * n * n];
        Coalgebra::new(field, n, z.clone(), z)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn coef(&self, op: Op, k: usize, i: usize, j: usize) -> Scalar {
        let idx = (k * self.n + i) * self.n + j;
        match op {
            Op::Succ => self.d_succ[idx].clone(),
            Op::Prec => self.d_prec[idx].clone(),
            Op::Dot => &self.d_succ[idx] + &self.d_prec[idx],
        }
    }

    /// `Δ∘(x)`; `Op::Dot` gives `Δ = Δ≻ + Δ≺`.
    pub fn coproduct(&self, op: Op, x: &[Scalar]) -> Tensor2 {
        Tensor2::from_fn(self.field, self.n, |i, j| {
            let mut acc = self.field.zero();
            for (k, xk) in x.iter().enumerate() {
                if !xk.is_zero() {
                    acc += &(xk * &self.coef(op, k, i, j));
                }
            }
            acc
        })
    }

    pub fn basis_coproduct(&self, op: Op, k: usize) -> Tensor2 {
        Tensor2::from_fn(self.field, self.n, |i, j| self.coef(op, k, i, j))
    }

    pub fn is_zero(&self) -> bool {
        self.d_succ.iter().chain(&self.d_prec).all(Scalar::is_zero)
    }
}

/// The products on `A*` dual to the coproducts: `e_i* ∘ e_j* = Σ_k d[k][i][j] e_k*`.
pub fn dualize(c: &Coalgebra) -> AntiDendAlgebra {
    let n = c.n;
    AntiDendAlgebra::from_fn(
        c.field,
        n,
        |i, j, k| c.coef(Op::Succ, k, i, j),
        |i, j, k| c.coef(Op::Prec, k, i, j),
    )
    .expect("shape already validated")
}

/// Inverse of [`dualize`].
pub fn codualize(a: &AntiDendAlgebra) -> Coalgebra {
    let n = a.dim();
    let mut s = Vec::with_capacity(n * n * n);
    let mut p = Vec::with_capacity(n * n * n);
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                s.push(a.coef(Op::Succ, i, j, k).clone());
                p.push(a.coef(Op::Prec, i, j, k).clone());
            }
        }
    }
    Coalgebra::new(a.field(), n, s, p).expect("shape already validated")
}

/// Coalgebra axioms, via the dual algebra (ids prefixed `CO.`).
pub fn check_coalgebra(c: &Coalgebra) -> Report {
    check_anti_dendriform(&dualize(c)).prefixed("CO.")
}

#[derive(Clone, Debug)]
pub struct Bialgebra {
    algebra: AntiDendAlgebra,
    coalgebra: Coalgebra,
    validated: bool,
}

impl PartialEq for Bialgebra {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.coalgebra == other.coalgebra
    }
}

impl Eq for Bialgebra {}

impl Bialgebra {
    pub fn new(algebra: AntiDendAlgebra, coalgebra: Coalgebra) -> Result<Self> {
        if algebra.dim() != coalgebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "algebra of dimension {} with coalgebra of dimension {}",
                algebra.dim(),
                coalgebra.dim()
            )));
        }
        if algebra.field() != coalgebra.field() {
            return Err(Error::FieldMismatch("algebra and coalgebra fields differ".into()));
        }
        Ok(Bialgebra {
            algebra,
            coalgebra,
            validated: false,
        })
    }

    /// Algebra with zero coproducts.
    pub fn with_zero_coproducts(algebra: AntiDendAlgebra) -> Self {
        let coalgebra = Coalgebra::zero(algebra.field(), algebra.dim()).expect("valid dimension");
        Bialgebra {
            algebra,
            coalgebra,
            validated: false,
        }
    }

    pub fn validate(mut self) -> Result<Self> {
        let report = check_bialgebra(&self);
        if !report.passed() {
            return Err(Error::NotABialgebra(report));
        }
        self.validated = true;
        Ok(self)
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub fn algebra(&self) -> &AntiDendAlgebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }
}

/// Algebra axioms, coalgebra axioms (`CO.` ids) and the six compatibility
/// conditions `DB1.1`..`DB1.6` on all basis pairs `(x, y) = (e_i, e_j)`.
pub fn check_bialgebra(b: &Bialgebra) -> Report {
    let a = &b.algebra;
    let c = &b.coalgebra;
    let mut report = check_anti_dendriform(a);
    report.merge(check_coalgebra(c));
    let n = a.dim();
    let id = Slot::Identity;
    let act = |s1: Slot<'_>, s2: Slot<'_>, t: &Tensor2| act2(s1, s2, t).expect("square operators");
    for i in 0..n {
        let (l_succ_x, l_prec_x, l_dot_x) = (
            a.left_basis(Op::Succ, i),
            a.left_basis(Op::Prec, i),
            a.left_basis(Op::Dot, i),
        );
        let r_prec_x = a.right_basis(Op::Prec, i);
        let (ds_x, dp_x) = (c.basis_coproduct(Op::Succ, i), c.basis_coproduct(Op::Prec, i));
        for j in 0..n {
            let w = [i, j];
            let (l_succ_y, l_prec_y) = (a.left_basis(Op::Succ, j), a.left_basis(Op::Prec, j));
            let (r_succ_y, r_prec_y, r_dot_y) = (
                a.right_basis(Op::Succ, j),
                a.right_basis(Op::Prec, j),
                a.right_basis(Op::Dot, j),
            );
            let ds_y = c.basis_coproduct(Op::Succ, j);
            let dp_y = c.basis_coproduct(Op::Prec, j);
            let d_y = &ds_y + &dp_y;
            let d_x = &ds_x + &dp_x;
            let xy_dot = a.basis_product(Op::Dot, i, j);

            let lhs = c.coproduct(Op::Prec, xy_dot);
            let rhs = &act(Slot::Op(&r_dot_y), id, &dp_x) - &act(id, Slot::Op(&l_succ_x), &dp_y);
            report.expect_eq("DB1.1", &w, lhs.entries(), rhs.entries());

            let lhs = c.coproduct(Op::Succ, xy_dot);
            let rhs = &act(id, Slot::Op(&l_dot_x), &ds_y) - &act(Slot::Op(&r_prec_y), id, &ds_x);
            report.expect_eq("DB1.2", &w, lhs.entries(), rhs.entries());

            let lhs = c.coproduct(Op::Dot, a.basis_product(Op::Prec, i, j));
            let rhs = &act(Slot::Op(&r_prec_y), id, &d_x) - &act(id, Slot::Op(&l_prec_x), &ds_y);
            report.expect_eq("DB1.3", &w, lhs.entries(), rhs.entries());

            let lhs = c.coproduct(Op::Dot, a.basis_product(Op::Succ, i, j));
            let rhs = &act(id, Slot::Op(&l_succ_x), &d_y) - &act(Slot::Op(&r_succ_y), id, &dp_x);
            report.expect_eq("DB1.4", &w, lhs.entries(), rhs.entries());

            let t1 = act(Slot::Op(&l_succ_x), id, &d_y);
            let t2 = act(Slot::Op(&r_succ_y), id, &ds_x.tau());
            let t3 = act(id, Slot::Op(&l_prec_y), &dp_x.tau());
            let t4 = act(id, Slot::Op(&r_prec_x), &d_y);
            let total = &(&(&t1 + &t2) - &t3) - &t4;
            report.expect_zero("DB1.5", &w, total.entries());

            let t1 = act(id, Slot::Op(&r_dot_y), &ds_x);
            let t2 = act(Slot::Op(&l_succ_y), id, &ds_x);
            let t3 = act(id, Slot::Op(&r_prec_x), &dp_y).tau();
            let t4 = act(Slot::Op(&l_dot_x), id, &dp_y).tau();
            let total = &(&(&t1 + &t2) - &t3) - &t4;
            report.expect_zero("DB1.6", &w, total.entries());
        }
    }
    report
}

pub(crate) fn check_same_dim(a: &AntiDendAlgebra, r: &Tensor2) -> Result<()> {
    if a.dim() != r.dim() {
        return Err(Error::DimensionMismatch(format!(
            "tensor of dimension {} on an algebra of dimension {}",
            r.dim(),
            a.dim()
        )));
    }
    if a.field() != r.field() {
        return Err(Error::FieldMismatch("tensor and algebra fields differ".into()));
    }
    Ok(())
}

/// `Δ≻,r(x) = −(R≺(x)⊗I + I⊗L·(x))r` and `Δ≺,r(x) = (R·(x)⊗I + I⊗L≻(x))r`.
pub fn coboundary_coproducts(a: &AntiDendAlgebra, r: &Tensor2) -> Result<Coalgebra> {
    check_same_dim(a, r)?;
    let n = a.dim();
    let id = Slot::Identity;
    let mut d_succ = Vec::with_capacity(n * n * n);
    let mut d_prec = Vec::with_capacity(n * n * n);
    for k in 0..n {
        let s = &act2(Slot::Op(&a.right_basis(Op::Prec, k)), id, r)?
            + &act2(id, Slot::Op(&a.left_basis(Op::Dot, k)), r)?;
        d_succ.extend((-&s).entries().iter().cloned());
        let p = &act2(Slot::Op(&a.right_basis(Op::Dot, k)), id, r)?
            + &act2(id, Slot::Op(&a.left_basis(Op::Succ, k)), r)?;
        d_prec.extend(p.entries().iter().cloned());
    }
    Coalgebra::new(a.field(), n, d_succ, d_prec)
}

/// The bialgebra `(A, Δ≻,r, Δ≺,r)`, unvalidated.
pub fn coboundary_bialgebra(a: &AntiDendAlgebra, r: &Tensor2) -> Result<Bialgebra> {
    Bialgebra::new(a.clone(), coboundary_coproducts(a, r)?)
}

/// The conditions `CD3`..`CD8` under which the coboundary coproducts of `r`
/// give a bialgebra. `CD3`, `CD4` run over basis pairs, the rest over basis vectors.
pub fn check_coboundary_conditions(a: &AntiDendAlgebra, r: &Tensor2) -> Result<Report> {
    check_same_dim(a, r)?;
    let n = a.dim();
    let id = Slot::Identity;
    let s = r.symmetric_part();
    let (d, d1, d2) = ybe_residuals(a, r)?;
    let mut report = Report::new();
    for i in 0..n {
        let l_succ_x = a.left_basis(Op::Succ, i);
        let l_dot_x = a.left_basis(Op::Dot, i);
        let r_prec_x = a.right_basis(Op::Prec, i);
        let r_dot_x = a.right_basis(Op::Dot, i);
        for j in 0..n {
            let w = [i, j];
            let l_succ_y = a.left_basis(Op::Succ, j);
            let l_prec_y = a.left_basis(Op::Prec, j);
            let r_succ_y = a.right_basis(Op::Succ, j);
            let r_dot_y = a.right_basis(Op::Dot, j);

            let t1 = act2(Slot::Op(&(&l_succ_x * &r_succ_y)), id, &s)?;
            let t2 = act2(Slot::Op(&r_succ_y), Slot::Op(&r_prec_x), &s)?;
            let t3 = act2(id, Slot::Op(&(&r_prec_x * &l_prec_y)), &s)?;
            let t4 = act2(Slot::Op(&l_succ_x), Slot::Op(&l_prec_y), &s)?;
            let total = &(&(&t1 - &t2) + &t3) - &t4;
            report.expect_zero("CD3", &w, total.entries());

            let inner = &act2(Slot::Op(&l_succ_y), id, &s)? + &act2(id, Slot::Op(&r_dot_y), &s)?;
            let total =
                &act2(Slot::Op(&r_prec_x), id, &inner)? + &act2(id, Slot::Op(&l_dot_x), &inner)?;
            report.expect_zero("CD4", &w, total.entries());
        }
        let w = [i];
        let rp1 = act3([Slot::Op(&r_prec_x), id, id], &d1)?;
        let ls3 = act3([id, id, Slot::Op(&l_succ_x)], &d1)?;
        report.expect_zero("CD5", &w, (&rp1 - &ls3).entries());

        let ld3 = act3([id, id, Slot::Op(&l_dot_x)], &d2)?;
        let rp1 = act3([Slot::Op(&r_prec_x), id, id], &d2)?;
        report.expect_zero("CD6", &w, (&ld3 + &rp1).entries());

        let rd1 = act3([Slot::Op(&r_dot_x), id, id], &d)?;
        let ls3 = act3([id, id, Slot::Op(&l_succ_x)], &d)?;
        report.expect_zero("CD7", &w, (&rd1 + &ls3).entries());

        let lhs = act3([Slot::Op(&r_prec_x), id, id], &d2)?;
        let rhs = act3([id, id, Slot::Op(&l_succ_x)], &d)?;
        report.expect_eq("CD8", &w, lhs.entries(), rhs.entries());
    }
    Ok(report)
}

/// The double `A ⊕ A*` with basis `(e_1..e_n, e_1*..e_n*)`.
///
/// Mixed products in coordinates (`c` for `A`, `c*` for the dual algebra):
/// `e_i≻f_j = Σ c*≺[j][k][i] e_k − Σ c·[k][i][j] f_k`,
/// `f_i≻e_j = −Σ c*·[k][i][j] e_k + Σ c≺[j][k][i] f_k`,
/// `e_i≺f_j = −Σ c*·[j][k][i] e_k + Σ c≻[k][i][j] f_k`,
/// `f_i≺e_j = Σ c*≻[k][i][j] e_k − Σ c·[j][k][i] f_k`.
pub fn double_algebra(b: &Bialgebra) -> Result<AntiDendAlgebra> {
    let a = &b.algebra;
    let dual = dualize(&b.coalgebra);
    let n = a.dim();
    let field = a.field();
    if 2 * n > crate::MAX_DIM {
        return Err(Error::DimensionTooLarge(2 * n));
    }
    let succ = |p: usize, q: usize, t: usize| -> Scalar {
        let (pa, qa, ta) = (p < n, q < n, t < n);
        let (i, j, k) = (p % n, q % n, t % n);
        match (pa, qa, ta) {
            (true, true, true) => a.coef(Op::Succ, i, j, k).clone(),
            (false, false, false) => dual.coef(Op::Succ, i, j, k).clone(),
            (true, false, true) => dual.coef(Op::Prec, j, k, i).clone(),
            (true, false, false) => -a.coef(Op::Dot, k, i, j),
            (false, true, true) => -dual.coef(Op::Dot, k, i, j),
            (false, true, false) => a.coef(Op::Prec, j, k, i).clone(),
            _ => field.zero(),
        }
    };
    let prec = |p: usize, q: usize, t: usize| -> Scalar {
        let (pa, qa, ta) = (p < n, q < n, t < n);
        let (i, j, k) = (p % n, q % n, t % n);
        match (pa, qa, ta) {
            (true, true, true) => a.coef(Op::Prec, i, j, k).clone(),
            (false, false, false) => dual.coef(Op::Prec, i, j, k).clone(),
            (true, false, true) => -dual.coef(Op::Dot, j, k, i),
            (true, false, false) => a.coef(Op::Succ, k, i, j).clone(),
            (false, true, true) => dual.coef(Op::Succ, k, i, j).clone(),
            (false, true, false) => -a.coef(Op::Dot, j, k, i),
            _ => field.zero(),
        }
    };
    AntiDendAlgebra::from_fn(field, 2 * n, succ, prec)
}

/// [`double_algebra`] after validating the bialgebra.
pub fn double_algebra_checked(b: &Bialgebra) -> Result<AntiDendAlgebra> {
    if !b.validated {
        let report = check_bialgebra(b);
        if !report.passed() {
            return Err(Error::NotABialgebra(report));
        }
    }
    double_algebra(b)
}
