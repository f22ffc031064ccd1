//! Randomized properties over ℚ and 𝔽_p.

use std::sync::OnceLock;

use proptest::prelude::*;

use antidend_core::algebra::{check_anti_dendriform, AntiDendAlgebra};
use antidend_core::bialgebra::{
    check_bialgebra, check_coalgebra, check_coboundary_conditions, coboundary_bialgebra,
    coboundary_coproducts, codualize, dualize, Coalgebra,
};
use antidend_core::document::{parse, serialize, Document};
use antidend_core::fixtures;
use antidend_core::representation::{
    check_representation, derived_representation, regular_representation, Derived, Variant,
};
use antidend_core::search::{enumerate_algebras, SearchSpec};
use antidend_core::ybe::{
    check_invariant, check_invariant_dual_form, check_invariant_operator_form,
    check_operator_ybe_form, classify_r, factorize, in_factor_image, induced_dual_products,
    symmetric_part_forms, ybe_residuals,
};
use antidend_core::{act3, Field, Matrix, Scalar, Slot, Tensor2, Tensor3};

/// Algebras with nonzero products over ℚ and 𝔽₃, plus zero algebras.
fn pool() -> &'static [AntiDendAlgebra] {
    static POOL: OnceLock<Vec<AntiDendAlgebra>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut out = vec![fixtures::z1(), fixtures::z2(), fixtures::n2(), fixtures::n3(), fixtures::f3a()];
        out.extend(fixtures::factorizable().into_iter().map(|(_, a, _)| a));
        let spec = SearchSpec::algebras(2, 3).unwrap().with_budget(u128::MAX);
        out.extend(enumerate_algebras(&spec).unwrap().algebras.into_iter().step_by(7));
        out
    })
}

fn scalar(field: Field, (num, den): (i64, i64)) -> Scalar {
    match field {
        Field::Rational => field.ratio(num, den).unwrap(),
        Field::Prime(_) => field.from_i64(num),
    }
}

type Seeds = Vec<(i64, i64)>;

fn seeds(len: usize) -> impl Strategy<Value = Seeds> {
    prop::collection::vec((-4i64..=4, 1i64..=3), len)
}

fn tensor(field: Field, n: usize, s: &Seeds) -> Tensor2 {
    Tensor2::from_fn(field, n, |i, j| scalar(field, s[i * n + j]))
}

fn algebra_and_tensor() -> impl Strategy<Value = (&'static AntiDendAlgebra, Tensor2)> {
    (0..pool().len(), seeds(36)).prop_map(|(i, s)| {
        let a = &pool()[i];
        (a, tensor(a.field(), a.dim(), &s))
    })
}

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rational),
        Just(Field::Prime(2)),
        Just(Field::Prime(3)),
        Just(Field::Prime(101)),
        Just(Field::Prime(4_294_967_291)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(f in field(), x in (-50i64..50, 1i64..20), y in (-50i64..50, 1i64..20), z in (-50i64..50, 1i64..20)) {
        let (x, y, z) = (scalar(f, x), scalar(f, y), scalar(f, z));
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &(-x.clone()), f.zero());
        match x.inv() {
            Some(i) => prop_assert_eq!(&x * &i, f.one()),
            None => prop_assert!(x.is_zero()),
        }
    }

    #[test]
    fn inverse_is_two_sided(f in field(), n in 1usize..5, s in seeds(16)) {
        let m = Matrix::from_fn(f, n, n, |i, j| scalar(f, s[i * n + j]));
        match m.invert() {
            Ok(inv) => {
                prop_assert_eq!(&inv * &m, Matrix::identity(f, n));
                prop_assert_eq!(&m * &inv, Matrix::identity(f, n));
            }
            Err(_) => prop_assert!(m.rank() < n),
        }
    }

    #[test]
    fn act3_is_linear_and_composes(f in field(), s in seeds(27), t in seeds(27), a in seeds(9), b in seeds(9)) {
        let n = 3;
        let t1 = Tensor3::from_fn(f, n, |i, j, k| scalar(f, s[(i * n + j) * n + k]));
        let t2 = Tensor3::from_fn(f, n, |i, j, k| scalar(f, t[(i * n + j) * n + k]));
        let ma = Matrix::from_fn(f, n, n, |i, j| scalar(f, a[i * n + j]));
        let mb = Matrix::from_fn(f, n, n, |i, j| scalar(f, b[i * n + j]));
        let id = || Slot::Identity;
        let act = |m: &Matrix, t: &Tensor3| act3([id(), Slot::Op(m), id()], t).unwrap();
        prop_assert_eq!(act(&ma, &(&t1 + &t2)), &act(&ma, &t1) + &act(&ma, &t2));
        prop_assert_eq!(act(&(&ma * &mb), &t1), act(&ma, &act(&mb, &t1)));
    }

    #[test]
    fn residual_is_the_difference_of_its_halves((a, r) in algebra_and_tensor()) {
        let (d, d1, d2) = ybe_residuals(a, &r).unwrap();
        prop_assert_eq!(d, &d1 - &d2);
    }

    #[test]
    fn coboundary_conditions_agree_with_bialgebra_check((a, r) in algebra_and_tensor()) {
        let cd = check_coboundary_conditions(a, &r).unwrap().passed();
        prop_assert_eq!(cd, check_bialgebra(&coboundary_bialgebra(a, &r).unwrap()).passed());
    }

    #[test]
    fn induced_dual_products_are_the_dual_coboundary((a, r) in algebra_and_tensor()) {
        let via_coproducts = dualize(&coboundary_coproducts(a, &r).unwrap());
        prop_assert_eq!(induced_dual_products(a, &r).unwrap(), via_coproducts);
    }

    #[test]
    fn invariance_evaluators_agree((a, r) in algebra_and_tensor()) {
        let direct = check_invariant(a, &r).unwrap().passed();
        prop_assert_eq!(direct, check_invariant_dual_form(a, &r).unwrap().passed());
        prop_assert_eq!(direct, check_invariant_operator_form(a, &r).unwrap().passed());
    }

    #[test]
    fn symmetric_part_conditions_agree((a, r) in algebra_and_tensor()) {
        let s = symmetric_part_forms(a, &r).unwrap();
        let inv = s.invariant.passed();
        prop_assert_eq!(inv, s.left_form.passed());
        prop_assert_eq!(inv, s.right_form.passed());
        prop_assert_eq!(inv, s.dual_form.passed());
        if inv {
            prop_assert!(s.consequences.passed());
        }
    }

    #[test]
    fn operator_equations_match_residuals((a, r) in algebra_and_tensor()) {
        let (d, d1, d2) = ybe_residuals(a, &r).unwrap();
        for (items, res) in [(['a', 'b'], &d), (['c', 'd'], &d1), (['e', 'f'], &d2)] {
            for item in items {
                prop_assert_eq!(check_operator_ybe_form(a, &r, item).unwrap().passed(), res.is_zero(), "item {}", item);
            }
        }
    }

    #[test]
    fn flip_keeps_quasi_triangular_and_factorizable((a, r) in algebra_and_tensor()) {
        let (c, ct) = (classify_r(a, &r).unwrap(), classify_r(a, &r.tau()).unwrap());
        prop_assert_eq!(c.quasi_triangular, ct.quasi_triangular);
        prop_assert_eq!(c.factorizable, ct.factorizable);
    }

    #[test]
    fn coalgebra_is_its_dual_algebra(f in field(), s in seeds(16)) {
        let n = 2;
        let ds: Vec<Scalar> = s[..8].iter().map(|&v| scalar(f, v)).collect();
        let dp: Vec<Scalar> = s[8..].iter().map(|&v| scalar(f, v)).collect();
        let c = Coalgebra::new(f, n, ds, dp).unwrap();
        let dual = dualize(&c);
        prop_assert_eq!(check_coalgebra(&c).passed(), check_anti_dendriform(&dual).passed());
        prop_assert_eq!(codualize(&dual), c);
    }

    #[test]
    fn regular_and_double_dual_representations(i in 0..pool().len()) {
        let a = &pool()[i];
        let v = regular_representation(a);
        prop_assert!(check_representation(a, &v).unwrap().passed());
        let Derived::AntiDend(once) = derived_representation(&v, Variant::DualC) else { unreachable!() };
        let Derived::AntiDend(twice) = derived_representation(&once, Variant::DualC) else { unreachable!() };
        prop_assert_eq!(twice, v);
    }

    #[test]
    fn documents_round_trip((a, r) in algebra_and_tensor()) {
        for doc in [Document::algebra(a.clone()), Document::tensor2(r.clone())] {
            let text = serialize(&doc);
            let back = parse(&text).unwrap();
            prop_assert_eq!(serialize(&back), text);
            prop_assert_eq!(back, doc);
        }
    }

    #[test]
    fn factorization_is_linear(i in 0..fixtures::factorizable().len(), x in seeds(8), y in seeds(8)) {
        let (_, a, r) = &fixtures::factorizable()[i];
        let f = a.field();
        let n = a.dim();
        let x: Vec<Scalar> = x[..n].iter().map(|&v| scalar(f, v)).collect();
        let y: Vec<Scalar> = y[..n].iter().map(|&v| scalar(f, v)).collect();
        let (x1, x2) = factorize(a, r, &x).unwrap();
        let (y1, y2) = factorize(a, r, &y).unwrap();
        let diff: Vec<Scalar> = x1.iter().zip(&x2).map(|(p, q)| p - q).collect();
        prop_assert_eq!(&diff, &x);
        prop_assert!(in_factor_image(r, &x1, &x2));
        let sum: Vec<Scalar> = x.iter().zip(&y).map(|(p, q)| p + q).collect();
        let (s1, s2) = factorize(a, r, &sum).unwrap();
        let add = |u: &[Scalar], v: &[Scalar]| -> Vec<Scalar> { u.iter().zip(v).map(|(p, q)| p + q).collect() };
        prop_assert_eq!(s1, add(&x1, &y1));
        prop_assert_eq!(s2, add(&x2, &y2));
    }
}
