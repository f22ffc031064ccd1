//! r-matrices: Yang-Baxter residuals, invariance, classification, factorization
//! and the canonical r-matrix on the double.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{check_homomorphism, AntiDendAlgebra, Op, Preserve};
use crate::bialgebra::{
    check_bialgebra, check_same_dim, coboundary_bialgebra, double_algebra, Bialgebra,
};
use crate::error::{Error, Result};
use crate::linalg::{vec_ops, Matrix};
use crate::report::Report;
use crate::scalar::Scalar;
use crate::tensor::{act2, Slot, Tensor2, Tensor3};

/// A placement `r_{XY} ∗ s_{ZW}` of two 2-tensors in three tensor slots.
///
/// The first tensor `Σ a_i⊗b_i` puts `a_i` in slot `X` and `b_i` in slot `Y`;
/// the second `Σ a_j⊗b_j` puts `a_j` in `Z` and `b_j` in `W`. The two placements
/// share exactly one slot, which receives the product (first factor on the left).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Pattern {
    first: [usize; 2],
    second: [usize; 2],
}

impl Pattern {
    /// Slots are 1-based, as in `Pattern::new([1, 2], [1, 3])` for `r12∗r13`.
    pub fn new(first: [usize; 2], second: [usize; 2]) -> Result<Pattern> {
        let bad = || Error::UnknownPattern(format!("{first:?}*{second:?}"));
        let in_range = |p: [usize; 2]| p.iter().all(|&s| (1..=3).contains(&s)) && p[0] != p[1];
        if !in_range(first) || !in_range(second) {
            return Err(bad());
        }
        let shared = first.iter().filter(|s| second.contains(s)).count();
        if shared != 1 {
            return Err(bad());
        }
        Ok(Pattern { first, second })
    }

    fn shared(&self) -> usize {
        *self.first.iter().find(|s| self.second.contains(s)).expect("one shared slot")
    }
}

impl FromStr for Pattern {
    type Err = Error;
    /// Accepts `12*13`, `r12*r13` or `r12∗r13`.
    fn from_str(s: &str) -> Result<Pattern> {
        let bad = || Error::UnknownPattern(s.to_string());
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace() && *c != 'r').collect();
        let (l, r) = cleaned
            .split_once('*')
            .or_else(|| cleaned.split_once('∗'))
            .ok_or_else(bad)?;
        let digits = |t: &str| -> Result<[usize; 2]> {
            let d: Vec<usize> = t
                .chars()
                .map(|c| c.to_digit(10).map(|v| v as usize))
                .collect::<Option<_>>()
                .ok_or_else(bad)?;
            match d.as_slice() {
                [a, b] => Ok([*a, *b]),
                _ => Err(bad()),
            }
        };
        Pattern::new(digits(l)?, digits(r)?).map_err(|_| bad())
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "r{}{}*r{}{}",
            self.first[0], self.first[1], self.second[0], self.second[1]
        )
    }
}

/// `r_{XY} ∘ s_{ZW}` for the product `op` of `a`.
pub fn tensor_pair_product(
    a: &AntiDendAlgebra,
    r: &Tensor2,
    s: &Tensor2,
    pattern: Pattern,
    op: Op,
) -> Result<Tensor3> {
    check_same_dim(a, r)?;
    check_same_dim(a, s)?;
    let n = a.dim();
    let field = a.field();
    let shared = pattern.shared();
    // Each tensor has one leg in the product and one bystander leg.
    let (r_first, s_first) = (pattern.first[0] == shared, pattern.second[0] == shared);
    let r_slot = pattern.first[usize::from(r_first)] - 1;
    let s_slot = pattern.second[usize::from(s_first)] - 1;
    let r_at = |by: usize, leg: usize| if r_first { r.get(leg, by) } else { r.get(by, leg) };
    let s_at = |leg: usize, by: usize| if s_first { s.get(leg, by) } else { s.get(by, leg) };

    // u[b][right][k] = Σ_left r(b, left) · c(left, right, k)
    let mut u = vec![field.zero(); n * n * n];
    for b in 0..n {
        for left in 0..n {
            let rc = r_at(b, left);
            if rc.is_zero() {
                continue;
            }
            for right in 0..n {
                for (k, c) in a.basis_product(op, left, right).iter().enumerate() {
                    if !c.is_zero() {
                        u[(b * n + right) * n + k] += &(rc * c);
                    }
                }
            }
        }
    }

    let mut out = Tensor3::zeros(field, n);
    let mut slot = [0usize; 3];
    for b in 0..n {
        for right in 0..n {
            for k in 0..n {
                let uc = &u[(b * n + right) * n + k];
                if uc.is_zero() {
                    continue;
                }
                for b2 in 0..n {
                    let sc = s_at(right, b2);
                    if sc.is_zero() {
                        continue;
                    }
                    slot[r_slot] = b;
                    slot[s_slot] = b2;
                    slot[shared - 1] = k;
                    out.add_at(slot[0], slot[1], slot[2], &(uc * sc));
                }
            }
        }
    }
    Ok(out)
}

fn pp(a: &AntiDendAlgebra, r: &Tensor2, pat: &str, op: Op) -> Result<Tensor3> {
    tensor_pair_product(a, r, r, pat.parse()?, op)
}

/// `D = r12·r13 + r23≻r12 − r13≺r23`,
/// `D1 = r23·r12 + r13≻r23 + r12≺r13`,
/// `D2 = r13·r23 − r12≻r13 + r23≺r12`.
pub fn ybe_residuals(a: &AntiDendAlgebra, r: &Tensor2) -> Result<(Tensor3, Tensor3, Tensor3)> {
    let d = &(&pp(a, r, "12*13", Op::Dot)? + &pp(a, r, "23*12", Op::Succ)?)
        - &pp(a, r, "13*23", Op::Prec)?;
    let d1 = &(&pp(a, r, "23*12", Op::Dot)? + &pp(a, r, "13*23", Op::Succ)?)
        + &pp(a, r, "12*13", Op::Prec)?;
    let d2 = &(&pp(a, r, "13*23", Op::Dot)? - &pp(a, r, "12*13", Op::Succ)?)
        + &pp(a, r, "23*12", Op::Prec)?;
    Ok((d, d1, d2))
}

/// Just `D(r)`.
pub fn ybe_residual(a: &AntiDendAlgebra, r: &Tensor2) -> Result<Tensor3> {
    Ok(ybe_residuals(a, r)?.0)
}

/// Matrix of `T_r: A* → A`, `T_r(e_i*) = Σ_j r[i][j] e_j`.
pub fn t_operator(r: &Tensor2) -> Matrix {
    r.as_matrix().transpose()
}

/// Inverse of [`t_operator`].
pub fn tensor_of_t(m: &Matrix) -> Result<Tensor2> {
    Tensor2::from_matrix(&m.transpose())
}

/// `(R≺(x)⊗I + I⊗L·(x))t = 0` (`IE3`) and `(R·(x)⊗I + I⊗L≻(x))t = 0` (`IE4`)
/// for every basis vector `x`.
pub fn check_invariant(a: &AntiDendAlgebra, t: &Tensor2) -> Result<Report> {
    check_same_dim(a, t)?;
    let id = Slot::Identity;
    let mut report = Report::new();
    for i in 0..a.dim() {
        let v = &act2(Slot::Op(&a.right_basis(Op::Prec, i)), id, t)?
            + &act2(id, Slot::Op(&a.left_basis(Op::Dot, i)), t)?;
        report.expect_zero("IE3", &[i], v.entries());
        let v = &act2(Slot::Op(&a.right_basis(Op::Dot, i)), id, t)?
            + &act2(id, Slot::Op(&a.left_basis(Op::Succ, i)), t)?;
        report.expect_zero("IE4", &[i], v.entries());
    }
    Ok(report)
}

/// `f*(y)ζ` for the dual of a left or right multiplication operator.
fn dual_left(a: &AntiDendAlgebra, op: Op, y: &[Scalar], zeta: &[Scalar]) -> Vec<Scalar> {
    a.left(op, y).transpose().apply(zeta)
}

fn dual_right(a: &AntiDendAlgebra, op: Op, y: &[Scalar], zeta: &[Scalar]) -> Vec<Scalar> {
    a.right(op, y).transpose().apply(zeta)
}

/// Invariance restated on `A*` through `T_r` and `T_{τ(r)}`:
/// `R·*(T_r ζ)η = −L≺*(T_{τ(r)} η)ζ` (`IE5`), `R≻*(T_r ζ)η = −L·*(T_{τ(r)} η)ζ` (`IE6`).
pub fn check_invariant_dual_form(a: &AntiDendAlgebra, r: &Tensor2) -> Result<Report> {
    check_same_dim(a, r)?;
    let (tr, tt) = (t_operator(r), t_operator(&r.tau()));
    two_sided_dual_form(a, &tr, &tt, ["IE5", "IE6"])
}

fn two_sided_dual_form(
    a: &AntiDendAlgebra,
    tr: &Matrix,
    tt: &Matrix,
    ids: [&str; 2],
) -> Result<Report> {
    let n = a.dim();
    let mut report = Report::new();
    for p in 0..n {
        let zeta = a.basis(p);
        let trz = tr.column(p);
        for q in 0..n {
            let eta = a.basis(q);
            let tte = tt.column(q);
            let l = dual_right(a, Op::Dot, &trz, &eta);
            let r = vec_ops::neg(&dual_left(a, Op::Prec, &tte, &zeta));
            report.expect_eq(ids[0], &[p, q], &l, &r);
            let l = dual_right(a, Op::Succ, &trz, &eta);
            let r = vec_ops::neg(&dual_left(a, Op::Dot, &tte, &zeta));
            report.expect_eq(ids[1], &[p, q], &l, &r);
        }
    }
    Ok(report)
}

/// `L·(x)T = −T R≺*(x)` (`IE7.1`) and `L≻(x)T = −T R·*(x)` (`IE7.2`) as matrices.
pub fn check_invariant_operator_form(a: &AntiDendAlgebra, r: &Tensor2) -> Result<Report> {
    check_same_dim(a, r)?;
    Ok(operator_form(a, &t_operator(r), ["IE7.1", "IE7.2"]))
}

fn operator_form(a: &AntiDendAlgebra, t: &Matrix, ids: [&str; 2]) -> Report {
    let mut report = Report::new();
    for i in 0..a.dim() {
        let l = &a.left_basis(Op::Dot, i) * t;
        let r = -&(t * &a.right_basis(Op::Prec, i).transpose());
        report.expect_eq(ids[0], &[i], l.entries(), r.entries());
        let l = &a.left_basis(Op::Succ, i) * t;
        let r = -&(t * &a.right_basis(Op::Dot, i).transpose());
        report.expect_eq(ids[1], &[i], l.entries(), r.entries());
    }
    report
}

/// The four equivalent conditions on `t = r + τ(r)` plus their consequences.
#[derive(Clone, Debug)]
pub struct SymmetricPartForms {
    /// `t` invariant.
    pub invariant: Report,
    /// `L·(x)T_t = −T_t R≺*(x)`, `L≻(x)T_t = −T_t R·*(x)` (`IE8.*`).
    pub left_form: Report,
    /// `T_t L·*(x) = −R≺(x)T_t`, `T_t L≻*(x) = −R·(x)T_t` (`IE9.*`).
    pub right_form: Report,
    /// `R·*(T_t ζ)η = −L≺*(T_t η)ζ`, `R≻*(T_t ζ)η = −L·*(T_t η)ζ` (`IE10.*`).
    pub dual_form: Report,
    /// `L≺(x)T_t = T_t R≻*(x)` (`IE11`), `T_t L≺*(x) = R≻(x)T_t` (`IE12`),
    /// `R≺*(T_t ζ)η = L≻*(T_t η)ζ` (`IE13`).
    pub consequences: Report,
}

pub fn symmetric_part_forms(a: &AntiDendAlgebra, r: &Tensor2) -> Result<SymmetricPartForms> {
    check_same_dim(a, r)?;
    let s = r.symmetric_part();
    let t = t_operator(&s);
    let invariant = check_invariant(a, &s)?;
    let left_form = operator_form(a, &t, ["IE8.1", "IE8.2"]);
    let mut right_form = Report::new();
    let mut consequences = Report::new();
    for i in 0..a.dim() {
        let l = &t * &a.left_basis(Op::Dot, i).transpose();
        let rr = -&(&a.right_basis(Op::Prec, i) * &t);
        right_form.expect_eq("IE9.1", &[i], l.entries(), rr.entries());
        let l = &t * &a.left_basis(Op::Succ, i).transpose();
        let rr = -&(&a.right_basis(Op::Dot, i) * &t);
        right_form.expect_eq("IE9.2", &[i], l.entries(), rr.entries());

        let l = &a.left_basis(Op::Prec, i) * &t;
        let rr = &t * &a.right_basis(Op::Succ, i).transpose();
        consequences.expect_eq("IE11", &[i], l.entries(), rr.entries());
        let l = &t * &a.left_basis(Op::Prec, i).transpose();
        let rr = &a.right_basis(Op::Succ, i) * &t;
        consequences.expect_eq("IE12", &[i], l.entries(), rr.entries());
    }
    let dual_form = two_sided_dual_form(a, &t, &t, ["IE10.1", "IE10.2"])?;
    let n = a.dim();
    for p in 0..n {
        for q in 0..n {
            let (zeta, eta) = (a.basis(p), a.basis(q));
            let l = dual_right(a, Op::Prec, &t.column(p), &eta);
            let rr = dual_left(a, Op::Succ, &t.column(q), &zeta);
            consequences.expect_eq("IE13", &[p, q], &l, &rr);
        }
    }
    Ok(SymmetricPartForms {
        invariant,
        left_form,
        right_form,
        dual_form,
        consequences,
    })
}

/// Products on `A*` induced by `r`:
/// `ζ≻η = −R·*(T_r ζ)η − L≺*(T_{τ(r)} η)ζ`, `ζ≺η = R≻*(T_r ζ)η + L·*(T_{τ(r)} η)ζ`.
pub fn induced_dual_products(a: &AntiDendAlgebra, r: &Tensor2) -> Result<AntiDendAlgebra> {
    check_same_dim(a, r)?;
    let n = a.dim();
    let (tr, tt) = (t_operator(r), t_operator(&r.tau()));
    let mut succ = vec![Vec::new(); n * n];
    let mut prec = vec![Vec::new(); n * n];
    for p in 0..n {
        let zeta = a.basis(p);
        let trz = tr.column(p);
        for q in 0..n {
            let eta = a.basis(q);
            let tte = tt.column(q);
            let s = vec_ops::neg(&vec_ops::add(
                &dual_right(a, Op::Dot, &trz, &eta),
                &dual_left(a, Op::Prec, &tte, &zeta),
            ));
            let pr = vec_ops::add(
                &dual_right(a, Op::Succ, &trz, &eta),
                &dual_left(a, Op::Dot, &tte, &zeta),
            );
            succ[p * n + q] = s;
            prec[p * n + q] = pr;
        }
    }
    AntiDendAlgebra::from_fn(
        a.field(),
        n,
        |i, j, k| succ[i * n + j][k].clone(),
        |i, j, k| prec[i * n + j][k].clone(),
    )
}

/// `ζ·_r η = L≻*(T_{τ(r)} η)ζ − R≺*(T_r ζ)η` on basis pairs, as `[p][q] -> coords`.
pub fn induced_dot(a: &AntiDendAlgebra, r: &Tensor2) -> Result<Vec<Vec<Scalar>>> {
    check_same_dim(a, r)?;
    let n = a.dim();
    let (tr, tt) = (t_operator(r), t_operator(&r.tau()));
    let mut out = Vec::with_capacity(n * n);
    for p in 0..n {
        for q in 0..n {
            out.push(vec_ops::sub(
                &dual_left(a, Op::Succ, &tt.column(q), &a.basis(p)),
                &dual_right(a, Op::Prec, &tr.column(p), &a.basis(q)),
            ));
        }
    }
    Ok(out)
}

/// The six operator equations on `A*` tied to `D`, `D1`, `D2` (items `a`..`f`).
/// Item `a`, `b` ⇔ `D = 0`; `c`, `d` ⇔ `D1 = 0`; `e`, `f` ⇔ `D2 = 0`.
pub fn check_operator_ybe_form(a: &AntiDendAlgebra, r: &Tensor2, item: char) -> Result<Report> {
    check_same_dim(a, r)?;
    let n = a.dim();
    let (tr, tt) = (t_operator(r), t_operator(&r.tau()));
    let id = format!("YA.{item}");
    let mut report = Report::new();
    for p in 0..n {
        let eta = a.basis(p);
        for q in 0..n {
            let zeta = a.basis(q);
            let (tr_e, tt_e) = (tr.column(p), tt.column(p));
            let (tr_z, tt_z) = (tr.column(q), tt.column(q));
            let (lhs, rhs) = match item {
                'a' => (
                    a.mul(Op::Dot, &tt_e, &tt_z),
                    tt.apply(&vec_ops::sub(
                        &dual_right(a, Op::Prec, &tr_e, &zeta),
                        &dual_left(a, Op::Succ, &tt_z, &eta),
                    )),
                ),
                'b' => (
                    a.mul(Op::Prec, &tr_e, &tr_z),
                    tr.apply(&vec_ops::add(
                        &dual_right(a, Op::Succ, &tr_e, &zeta),
                        &dual_left(a, Op::Dot, &tt_z, &eta),
                    )),
                ),
                'c' => (
                    a.mul(Op::Succ, &tr_e, &tr_z),
                    vec_ops::neg(&tr.apply(&vec_ops::add(
                        &dual_left(a, Op::Prec, &tt_z, &eta),
                        &dual_right(a, Op::Dot, &tr_e, &zeta),
                    ))),
                ),
                'd' => (
                    a.mul(Op::Prec, &tt_e, &tt_z),
                    vec_ops::neg(&tt.apply(&vec_ops::add(
                        &dual_left(a, Op::Dot, &tt_z, &eta),
                        &dual_right(a, Op::Succ, &tr_e, &zeta),
                    ))),
                ),
                'e' => (
                    a.mul(Op::Dot, &tr_e, &tr_z),
                    tr.apply(&vec_ops::sub(
                        &dual_left(a, Op::Succ, &tt_z, &eta),
                        &dual_right(a, Op::Prec, &tr_e, &zeta),
                    )),
                ),
                'f' => (
                    a.mul(Op::Succ, &tt_e, &tt_z),
                    tt.apply(&vec_ops::add(
                        &dual_left(a, Op::Prec, &tt_z, &eta),
                        &dual_right(a, Op::Dot, &tr_e, &zeta),
                    )),
                ),
                other => return Err(Error::UnknownVariant(format!("item {other}"))),
            };
            report.expect_eq(&id, &[p, q], &lhs, &rhs);
        }
    }
    Ok(report)
}

/// Classification flags of an r-matrix on a given algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub skew: bool,
    pub sym_part_invariant: bool,
    pub ybe: bool,
    pub d1_zero: bool,
    pub d2_zero: bool,
    pub quasi_triangular: bool,
    pub triangular: bool,
    pub factorizable: bool,
    /// Coordinates of `D(r)` when nonzero.
    pub residual: Option<Tensor3>,
    /// Breaches of the implications that should hold when the symmetric part
    /// is invariant (`YA1.a`: `D = 0` but `D1` or `D2` nonzero, `YA1.b`:
    /// `D(r)` and `D(τ(r))` vanish differently). Always empty unless the theory
    /// or the code is wrong.
    pub violations: Report,
}

impl Classification {
    pub const FLAGS: [&'static str; 8] = [
        "skew",
        "sym_part_invariant",
        "ybe",
        "d1_zero",
        "d2_zero",
        "quasi_triangular",
        "triangular",
        "factorizable",
    ];

    pub fn flag(&self, name: &str) -> Option<bool> {
        Some(match name {
            "skew" => self.skew,
            "sym_part_invariant" => self.sym_part_invariant,
            "ybe" => self.ybe,
            "d1_zero" => self.d1_zero,
            "d2_zero" => self.d2_zero,
            "quasi_triangular" => self.quasi_triangular,
            "triangular" => self.triangular,
            "factorizable" => self.factorizable,
            _ => return None,
        })
    }
}

pub fn classify_r(a: &AntiDendAlgebra, r: &Tensor2) -> Result<Classification> {
    check_same_dim(a, r)?;
    let skew = r.is_skew();
    let sym = r.symmetric_part();
    let sym_part_invariant = check_invariant(a, &sym)?.passed();
    let (d, d1, d2) = ybe_residuals(a, r)?;
    let ybe = d.is_zero();
    let d1_zero = d1.is_zero();
    let d2_zero = d2.is_zero();
    let quasi_triangular = ybe && sym_part_invariant;
    let triangular = quasi_triangular && skew;
    let factorizable = quasi_triangular && t_operator(&sym).is_invertible();
    let mut violations = Report::new();
    if sym_part_invariant {
        if ybe && !(d1_zero && d2_zero) {
            violations.fail("YA1.a", &[]);
        }
        if ybe != ybe_residual(a, &r.tau())?.is_zero() {
            violations.fail("YA1.b", &[]);
        }
    }
    Ok(Classification {
        skew,
        sym_part_invariant,
        ybe,
        d1_zero,
        d2_zero,
        quasi_triangular,
        triangular,
        factorizable,
        residual: (!ybe).then_some(d),
        violations,
    })
}

/// `x = x1 − x2` with `x1 = T_r T_t⁻¹ x`, `x2 = −T_{τ(r)} T_t⁻¹ x`, `t = r + τ(r)`.
pub fn factorize(
    a: &AntiDendAlgebra,
    r: &Tensor2,
    x: &[Scalar],
) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
    if x.len() != a.dim() {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} in dimension {}",
            x.len(),
            a.dim()
        )));
    }
    if !classify_r(a, r)?.factorizable {
        return Err(Error::NotFactorizable);
    }
    let inv = t_operator(&r.symmetric_part()).invert()?;
    let y = inv.apply(x);
    let x1 = t_operator(r).apply(&y);
    let x2 = vec_ops::neg(&t_operator(&r.tau()).apply(&y));
    Ok((x1, x2))
}

/// Whether `(x1, x2) = (T_r ζ, −T_{τ(r)} ζ)` for some `ζ ∈ A*`.
pub fn in_factor_image(r: &Tensor2, x1: &[Scalar], x2: &[Scalar]) -> bool {
    let n = r.dim();
    let field = r.field();
    let stacked = Matrix::block(
        field,
        &[vec![t_operator(r)], vec![-&t_operator(&r.tau())]],
    )
    .expect("conforming blocks");
    let target: Vec<Scalar> = x1.iter().chain(x2).cloned().collect();
    let augmented = Matrix::from_fn(field, 2 * n, n + 1, |i, j| {
        if j < n {
            stacked.get(i, j).clone()
        } else {
            target[i].clone()
        }
    });
    stacked.rank() == augmented.rank()
}

/// `r = Σ e_i ⊗ e_i*` on the double `A ⊕ A*`.
pub fn canonical_r(n: usize, field: crate::scalar::Field) -> Tensor2 {
    let mut r = Tensor2::zeros(field, 2 * n);
    for i in 0..n {
        r.set(i, n + i, field.one());
    }
    r
}

/// The double of a bialgebra together with its canonical r-matrix.
pub fn canonical_double_r(b: &Bialgebra) -> Result<(AntiDendAlgebra, Tensor2)> {
    if !b.is_validated() {
        let report = check_bialgebra(b);
        if !report.passed() {
            return Err(Error::NotABialgebra(report));
        }
    }
    let d = double_algebra(b)?;
    Ok((d, canonical_r(b.dim(), b.field())))
}

/// Matrix of `φ(x, ζ) = (x + T_r ζ, x − T_{τ(r)} ζ)` from `A ⊕ A*` to `A ⊕ A`.
pub fn double_iso_phi(a: &AntiDendAlgebra, r: &Tensor2) -> Result<Matrix> {
    if !classify_r(a, r)?.factorizable {
        return Err(Error::NotFactorizable);
    }
    let n = a.dim();
    let id = Matrix::identity(a.field(), n);
    Matrix::block(
        a.field(),
        &[
            vec![id.clone(), t_operator(r)],
            vec![id, -&t_operator(&r.tau())],
        ],
    )
}

/// Checks that `φ` is a homomorphism from the double of the coboundary
/// bialgebra of `r` onto the direct sum `A ⊕ A`, and that it is invertible.
pub fn check_double_iso(a: &AntiDendAlgebra, r: &Tensor2) -> Result<Report> {
    let phi = double_iso_phi(a, r)?;
    let double = double_algebra(&coboundary_bialgebra(a, r)?)?;
    let sum = a.direct_sum(a)?;
    let mut report = check_homomorphism(&phi, &double, &sum, Preserve::Both)?;
    if !phi.is_invertible() {
        report.fail("PHI.bijective", &[]);
    }
    Ok(report)
}
