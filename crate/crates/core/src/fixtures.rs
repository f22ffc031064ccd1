//! Small named structures used by the test suites and shipped as files under
//! `fixtures/`.

use crate::algebra::AntiDendAlgebra;
use crate::bialgebra::{Bialgebra, Coalgebra};
use crate::document::{Document, RbBundle};
use crate::linalg::Matrix;
use crate::representation::regular_representation;
use crate::rota_baxter::{BilinearForm, RBOperator};
use crate::scalar::Field;
use crate::tensor::Tensor2;
use crate::ybe::canonical_double_r;

pub fn zero_algebra(field: Field, n: usize) -> AntiDendAlgebra {
    AntiDendAlgebra::zero(field, n).expect("small dimension")
}

/// `Z1` over ℚ.
pub fn z1() -> AntiDendAlgebra {
    zero_algebra(Field::Rational, 1)
}

/// `Z2` over ℚ.
pub fn z2() -> AntiDendAlgebra {
    zero_algebra(Field::Rational, 2)
}

/// One-dimensional over 𝔽₃ with `e≻e = e≺e = e`, so `e·e = 2e`.
pub fn f3a() -> AntiDendAlgebra {
    let f = Field::Prime(3);
    AntiDendAlgebra::new(f, 1, vec![f.one()], vec![f.one()]).expect("valid shape")
}

/// Two-step nilpotent over ℚ: `e0≻e0 = e1`, `e0≺e0 = 2e1`. Every triple
/// product vanishes, so the axioms hold trivially while `D(r)` does not.
pub fn n2() -> AntiDendAlgebra {
    let q = Field::Rational;
    let c = |v: i64| move |i, j, k| q.from_i64(if (i, j, k) == (0, 0, 1) { v } else { 0 });
    AntiDendAlgebra::from_fn(q, 2, c(1), c(2)).expect("valid shape")
}

/// Two-step nilpotent over ℚ with `e0, e1` multiplying into `e2`.
pub fn n3() -> AntiDendAlgebra {
    let q = Field::Rational;
    let succ = [[1, -1], [2, 0]];
    let prec = [[0, 3], [-1, 1]];
    let pick = |t: [[i64; 2]; 2]| {
        move |i: usize, j: usize, k: usize| q.from_i64(if i < 2 && j < 2 && k == 2 { t[i][j] } else { 0 })
    };
    AntiDendAlgebra::from_fn(q, 3, pick(succ), pick(prec)).expect("valid shape")
}

pub fn zero_bialgebra(field: Field, n: usize) -> Bialgebra {
    Bialgebra::with_zero_coproducts(zero_algebra(field, n))
}

pub fn f3a_zero_bialgebra() -> Bialgebra {
    Bialgebra::with_zero_coproducts(f3a())
}

/// `F3A` with `Δ_≻(e) = e⊗e` and `Δ_≺ = 0`.
pub fn f3a_dsucc_bialgebra() -> Bialgebra {
    let f = Field::Prime(3);
    let c = Coalgebra::new(f, 1, vec![f.one()], vec![f.zero()]).expect("valid shape");
    Bialgebra::new(f3a(), c).expect("same dimension")
}

/// `e0⊗e1 − e1⊗e0` on `Z2`.
pub fn z2_skew() -> Tensor2 {
    Tensor2::from_i64_rows(Field::Rational, &[&[0, 1], &[-1, 0]])
}

/// The double of the one-dimensional zero bialgebra over ℚ with `r = e⊗e*`.
pub fn db1() -> (AntiDendAlgebra, Tensor2) {
    canonical_double_r(&zero_bialgebra(Field::Rational, 1)).expect("zero bialgebra is valid")
}

/// `Z2` over ℚ with `ω = I`, `λ = 1`, `P = −½I`.
pub fn z2_half() -> RbBundle {
    let q = Field::Rational;
    let half = q.ratio(-1, 2).expect("nonzero denominator");
    RbBundle {
        algebra: z2(),
        operator: RBOperator::new(Matrix::scalar(q, 2, &half), q.one()).expect("square"),
        form: Some(BilinearForm::identity(q, 2)),
        r: None,
    }
}

/// Algebras paired with a factorizable r-matrix: canonical doubles of the zero
/// bialgebras of dimensions 1 to 3, of `F3A` and of `N2`, and `Z2`
/// with `r = −½I`.
pub fn factorizable() -> Vec<(String, AntiDendAlgebra, Tensor2)> {
    let mut out = Vec::new();
    for n in 1..=3 {
        let (d, r) = canonical_double_r(&zero_bialgebra(Field::Rational, n)).expect("valid");
        out.push((format!("double-zero{n}"), d, r));
    }
    let (d, r) = canonical_double_r(&f3a_zero_bialgebra()).expect("valid");
    out.push(("double-f3a".into(), d, r));
    let (d, r) = canonical_double_r(&Bialgebra::with_zero_coproducts(n2())).expect("valid");
    out.push(("double-n2".into(), d, r));
    let q = Field::Rational;
    let half = Tensor2::from_matrix(&Matrix::scalar(q, 2, &q.ratio(-1, 2).expect("ok")))
        .expect("square");
    out.push(("z2-half".into(), z2(), half));
    out
}

/// Every shipped fixture file, by file name.
pub fn files() -> Vec<(&'static str, Document)> {
    let q = Field::Rational;
    let (db1_alg, db1_r) = db1();
    let f3 = Field::Prime(3);
    vec![
        ("z1.add", Document::algebra(z1())),
        ("z2.add", Document::algebra(z2())),
        ("z2-p2.add", Document::algebra(zero_algebra(Field::Prime(2), 2))),
        ("f3a.add", Document::algebra(f3a())),
        ("n2.add", Document::algebra(n2())),
        ("n3.add", Document::algebra(n3())),
        ("zero1.bialg", Document::bialgebra(zero_bialgebra(q, 1))),
        ("zero2.bialg", Document::bialgebra(zero_bialgebra(q, 2))),
        ("f3a-zero.bialg", Document::bialgebra(f3a_zero_bialgebra())),
        ("f3a-dsucc.bialg", Document::bialgebra(f3a_dsucc_bialgebra())),
        ("f3a-regular.rep", Document::representation(regular_representation(&f3a()))),
        ("db1.add", Document::algebra(db1_alg)),
        ("db1.t2", Document::tensor2(db1_r)),
        ("skew.t2", Document::tensor2(z2_skew())),
        ("z2-half.rb", Document::rb_bundle(z2_half())),
        ("z2-half-p.mat", Document::matrix(Matrix::scalar(q, 2, &q.ratio(-1, 2).expect("ok")))),
        ("z2-id.form", Document::form(BilinearForm::identity(q, 2))),
        ("f3a-id.form", Document::form(BilinearForm::identity(f3, 1))),
        ("f3a-two.mat", Document::matrix(Matrix::scalar(f3, 1, &f3.from_i64(2)))),
        ("z1-zero.mat", Document::matrix(Matrix::zeros(q, 1, 1))),
        ("z2-zero.mat", Document::matrix(Matrix::zeros(q, 2, 2))),
    ]
}
