//! Acceptance suite: one line per criterion, exact arithmetic throughout.
//!
//! Criterion 3 is known to fail over 𝔽₃: 48 pairs (algebra, skew r) on 24
//! algebras of dimension 2 satisfy the coboundary conditions with D(r) ≠ 0.
//! The suite prints FAIL for it and exits nonzero if any other criterion fails
//! or if that failure differs from the known counterexample set.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use antidend_core::algebra::{
    associated_associative, check_anti_dendriform, check_associative, check_homomorphism,
    AntiDendAlgebra, Preserve,
};
use antidend_core::bialgebra::{check_bialgebra, check_coboundary_conditions, coboundary_bialgebra, double_algebra};
use antidend_core::document::{parse_lines, Body};
use antidend_core::fixtures;
use antidend_core::rota_baxter::{
    check_assoc_qrb, check_qrb, factorizable_to_qrb, induce_from_connes, qrb_to_factorizable,
    semidirect_qrb, BilinearForm, RBOperator,
};
use antidend_core::search::{enumerate_ybe, skew_tensors, SearchSpec};
use antidend_core::ybe::{
    canonical_double_r, classify_r, double_iso_phi, factorize, in_factor_image,
    induced_dual_products, t_operator, ybe_residual, ybe_residuals,
};
use antidend_core::{Field, Matrix, Scalar, Tensor2};

use common::{run, run_pipeline, BIG_BUDGET, PIPELINES};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

/// Every algebra printed by `search algebras` for dimensions 1, 2 over 𝔽₂, 𝔽₃.
fn searched() -> Vec<(Field, usize, Vec<AntiDendAlgebra>, usize)> {
    let mut out = Vec::new();
    for (dim, field) in [("1", "p2"), ("1", "p3"), ("2", "p2"), ("2", "p3")] {
        let res = run(&["search", "algebras", "--dim", dim, "--field", field, "--budget", BIG_BUDGET], None);
        assert_eq!(res.code, 0, "{}", res.stderr);
        let docs = parse_lines(&res.stdout).expect("search output parses");
        let mut algebras = Vec::new();
        let mut count = None;
        for doc in docs {
            match doc.body {
                Body::Algebra(a) => algebras.push(a),
                Body::Record { kind, fields } if kind == "summary" => {
                    count = fields["count"].as_u64().map(|c| c as usize);
                }
                other => panic!("unexpected document {other:?}"),
            }
        }
        let f = Field::from_tag(field).unwrap();
        out.push((f, dim.parse().unwrap(), algebras, count.expect("summary record")));
    }
    out
}

fn named_fixtures() -> Vec<AntiDendAlgebra> {
    let mut out = vec![
        fixtures::z1(),
        fixtures::z2(),
        fixtures::n2(),
        fixtures::n3(),
        fixtures::f3a(),
        fixtures::db1().0,
    ];
    out.extend(fixtures::factorizable().into_iter().map(|(_, a, _)| a));
    out
}

fn random_scalar(rng: &mut ChaCha8Rng, f: Field) -> Scalar {
    match f {
        Field::Rational => f.ratio(rng.random_range(-9..=9), rng.random_range(1..=5)).unwrap(),
        Field::Prime(p) => f.residue(rng.random_range(0..p)),
    }
}

fn random_tensor(rng: &mut ChaCha8Rng, f: Field, n: usize) -> Tensor2 {
    Tensor2::from_fn(f, n, |_, _| random_scalar(rng, f))
}

fn c1(searched: &[(Field, usize, Vec<AntiDendAlgebra>, usize)]) -> Outcome {
    let mut all = vec![fixtures::z1(), fixtures::z2(), fixtures::f3a()];
    for (_, _, algs, _) in searched {
        all.extend(algs.iter().cloned());
    }
    let bad = all
        .iter()
        .filter(|a| !check_anti_dendriform(a).passed() || !check_associative(&associated_associative(a)).passed())
        .count();
    let cli_ok = ["z1.add", "z2.add", "f3a.add"]
        .iter()
        .all(|f| run(&["check", "algebra", f], None).code == 0);
    outcome(bad == 0 && cli_ok, format!("{} algebras, {bad} failing", all.len()))
}

fn c2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let pool = named_fixtures();
    let mut bad = 0;
    for _ in 0..500 {
        let a = &pool[rng.random_range(0..pool.len())];
        let r = random_tensor(&mut rng, a.field(), a.dim());
        let (d, d1, d2) = ybe_residuals(a, &r).unwrap();
        bad += usize::from(d != &d1 - &d2);
    }
    outcome(bad == 0, format!("500 random r, {bad} mismatches"))
}

/// Pairs where D(r) ≠ 0 but the coboundary conditions hold, by (field, dim,
/// algebra index); and the count of pairs where the two checks disagree.
fn c3(searched: &[(Field, usize, Vec<AntiDendAlgebra>, usize)]) -> (Outcome, bool) {
    let mut pairs = 0;
    let mut converse: Vec<(Field, usize, usize)> = Vec::new();
    let mut forward = 0;
    let mut incoherent = 0;
    for (f, n, algs, _) in searched {
        let skews = skew_tensors(*f, *n).unwrap();
        for (i, a) in algs.iter().enumerate() {
            for r in &skews {
                pairs += 1;
                let d_zero = ybe_residual(a, r).unwrap().is_zero();
                let cd = check_coboundary_conditions(a, r).unwrap().passed();
                let bi = check_bialgebra(&coboundary_bialgebra(a, r).unwrap()).passed();
                incoherent += usize::from(cd != bi);
                match (d_zero, cd) {
                    (true, false) => forward += 1,
                    (false, true) => converse.push((*f, *n, i)),
                    _ => {}
                }
            }
        }
    }
    let algebras: BTreeSet<_> = converse.iter().collect();
    let known = forward == 0
        && incoherent == 0
        && converse.len() == 48
        && algebras.len() == 24
        && converse.iter().all(|&(f, n, _)| f == Field::Prime(3) && n == 2);
    let passed = forward == 0 && incoherent == 0 && converse.is_empty();
    let detail = format!(
        "{pairs} pairs; D=0 without coboundary conditions: {forward}; checks disagree: {incoherent}; \
         coboundary conditions with D≠0: {} pairs on {} algebras (dim 2 over 𝔽₃, char-3 only)",
        converse.len(),
        algebras.len()
    );
    (outcome(passed, detail), known)
}

/// Quasi-triangular pairs found by `enumerate_ybe` on every searched algebra.
fn quasi_triangular(searched: &[(Field, usize, Vec<AntiDendAlgebra>, usize)]) -> Vec<(AntiDendAlgebra, Tensor2)> {
    let mut out = Vec::new();
    for (f, n, algs, _) in searched {
        let Field::Prime(p) = f else { unreachable!() };
        for a in algs {
            let spec = SearchSpec::ybe(*n, *p).unwrap();
            for (r, c) in enumerate_ybe(&spec, a).unwrap().solutions {
                if c.sym_part_invariant {
                    out.push((a.clone(), r));
                }
            }
        }
    }
    out
}

fn c4(qt: &[(AntiDendAlgebra, Tensor2)]) -> Outcome {
    let bad = qt
        .iter()
        .filter(|(a, r)| {
            let (d, d1, d2) = ybe_residuals(a, r).unwrap();
            !(d.is_zero() && d1.is_zero() && d2.is_zero() && ybe_residual(a, &r.tau()).unwrap().is_zero())
        })
        .count();
    outcome(bad == 0, format!("{} quasi-triangular pairs, {bad} failing", qt.len()))
}

fn c5(qt: &[(AntiDendAlgebra, Tensor2)]) -> Outcome {
    let mut bad = 0;
    for (a, r) in qt {
        let dual = induced_dual_products(a, r).unwrap();
        let plus = t_operator(r);
        let minus = t_operator(&r.tau()).scale(&-a.field().one());
        for f in [&plus, &minus] {
            for which in [Preserve::Both, Preserve::Dot] {
                bad += usize::from(!check_homomorphism(f, &dual, a, which).unwrap().passed());
            }
        }
    }
    outcome(bad == 0, format!("{} pairs × 4 homomorphism checks, {bad} failing", qt.len()))
}

fn c6() -> Outcome {
    let mut bialgebras: Vec<_> = (1..=3).map(|n| fixtures::zero_bialgebra(Field::Rational, n)).collect();
    bialgebras.push(fixtures::f3a_zero_bialgebra());
    let mut bad = 0;
    for b in &bialgebras {
        let (d, r) = canonical_double_r(b).unwrap();
        let fact = classify_r(&d, &r).unwrap().factorizable;
        let phi = double_iso_phi(&d, &r).unwrap();
        let source = double_algebra(&coboundary_bialgebra(&d, &r).unwrap()).unwrap();
        let target = d.direct_sum(&d).unwrap();
        let hom = check_homomorphism(&phi, &source, &target, Preserve::Both).unwrap().passed();
        let id = Matrix::identity(d.field(), phi.rows());
        let inverse = phi.invert().map(|inv| &phi * &inv == id && &inv * &phi == id).unwrap_or(false);
        bad += usize::from(!(fact && hom && inverse));
    }
    outcome(bad == 0, format!("{} doubles, {bad} failing", bialgebras.len()))
}

fn c7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut bad = 0;
    let cases = fixtures::factorizable();
    for (_, a, r) in &cases {
        let f = a.field();
        for _ in 0..100 {
            let x: Vec<Scalar> = (0..a.dim()).map(|_| random_scalar(&mut rng, f)).collect();
            let y: Vec<Scalar> = (0..a.dim()).map(|_| random_scalar(&mut rng, f)).collect();
            let c = random_scalar(&mut rng, f);
            let (x1, x2) = factorize(a, r, &x).unwrap();
            let (y1, y2) = factorize(a, r, &y).unwrap();
            let combo: Vec<Scalar> = x.iter().zip(&y).map(|(p, q)| &(&c * p) + q).collect();
            let (z1, z2) = factorize(a, r, &combo).unwrap();
            let lin = |u: &[Scalar], v: &[Scalar]| -> Vec<Scalar> { u.iter().zip(v).map(|(p, q)| &(&c * p) + q).collect() };
            let diff: Vec<Scalar> = x1.iter().zip(&x2).map(|(p, q)| p - q).collect();
            let ok = diff == x && in_factor_image(r, &x1, &x2) && z1 == lin(&x1, &y1) && z2 == lin(&x2, &y2);
            bad += usize::from(!ok);
        }
    }
    outcome(bad == 0, format!("{} fixtures × 100 vectors, {bad} failing", cases.len()))
}

fn c8() -> Outcome {
    let mut bad = 0;
    let mut runs = 0;
    for (_, a, r) in fixtures::factorizable() {
        for lam in [1, -1, 2] {
            runs += 1;
            let lam = a.field().from_i64(lam);
            let ok = factorizable_to_qrb(&a, &r, &lam).is_ok_and(|(p, w)| {
                check_qrb(&a, &p, &w).unwrap().passed()
                    && qrb_to_factorizable(&a, &p, &w).is_ok_and(|back| back == r)
                    && w.r_omega().is_ok_and(|ro| &r + &r.tau() == ro.scale(&-lam.clone()))
            });
            bad += usize::from(!ok);
        }
    }
    outcome(bad == 0, format!("{runs} round trips, {bad} failing"))
}

/// Quadratic Rota-Baxter triples: the shipped bundle, every output of
/// `factorizable_to_qrb`, and the semidirect constructions.
fn qrb_fixtures() -> Vec<(AntiDendAlgebra, RBOperator, BilinearForm)> {
    let b = fixtures::z2_half();
    let mut out = vec![(b.algebra.clone(), b.operator.clone(), b.form.clone().unwrap())];
    for (_, a, r) in fixtures::factorizable() {
        for lam in [1, -1, 2] {
            let (p, w) = factorizable_to_qrb(&a, &r, &a.field().from_i64(lam)).unwrap();
            out.push((a.clone(), p, w));
        }
    }
    let q = Field::Rational;
    let f3 = Field::Prime(3);
    for (a, p) in [
        (fixtures::z1(), Matrix::zeros(q, 1, 1)),
        (fixtures::z2(), Matrix::zeros(q, 2, 2)),
        (fixtures::f3a(), Matrix::scalar(f3, 1, &f3.from_i64(2))),
    ] {
        let s = semidirect_qrb(&a, &RBOperator::new(p, a.field().one()).unwrap()).unwrap();
        out.push((s.algebra, s.operator, s.form));
    }
    out
}

fn c9() -> Outcome {
    let triples = qrb_fixtures();
    let mut bad = 0;
    for (a, p, w) in &triples {
        let assoc = associated_associative(a);
        let ok = check_assoc_qrb(&assoc, p, w).unwrap().passed()
            && induce_from_connes(&assoc, w).is_ok_and(|back| back == *a);
        bad += usize::from(!ok);
    }
    let f3a = fixtures::f3a();
    let golden = induce_from_connes(&associated_associative(&f3a), &BilinearForm::identity(Field::Prime(3), 1))
        .is_ok_and(|back| back == f3a);
    outcome(
        bad == 0 && golden,
        format!("{} triples, {bad} failing; assoc(F3A) with ω = I gives back F3A: {golden}", triples.len()),
    )
}

fn c10() -> Outcome {
    let q = Field::Rational;
    let one = q.one();
    let z1 = semidirect_qrb(&fixtures::z1(), &RBOperator::new(Matrix::zeros(q, 1, 1), one.clone()).unwrap()).unwrap();
    let r_ok = z1.r == Tensor2::from_i64_rows(q, &[&[0, -1], &[0, 0]]);
    let q_ok = z1.operator.matrix() == &Matrix::from_i64_rows(q, &[&[0, 0], &[0, -1]]);
    let z1_ok = r_ok
        && q_ok
        && check_qrb(&z1.algebra, &z1.operator, &z1.form).unwrap().passed()
        && classify_r(&z1.algebra, &z1.r).unwrap().factorizable;
    let z2 = semidirect_qrb(&fixtures::z2(), &RBOperator::new(Matrix::zeros(q, 2, 2), one).unwrap()).unwrap();
    let canonical = Tensor2::from_i64_rows(q, &[&[0, 0, -1, 0], &[0, 0, 0, -1], &[0, 0, 0, 0], &[0, 0, 0, 0]]);
    let z2_ok = z2.r == canonical
        && check_qrb(&z2.algebra, &z2.operator, &z2.form).unwrap().passed()
        && classify_r(&z2.algebra, &z2.r).unwrap().factorizable;
    outcome(z1_ok && z2_ok, format!("Z1: r = −e⊗e* {r_ok}, Q = diag(0,−1) {q_ok}; Z2: {z2_ok}"))
}

fn c11(searched: &[(Field, usize, Vec<AntiDendAlgebra>, usize)]) -> Outcome {
    // dim 2 values confirmed by scripts/recount.py, an independent numpy scan.
    let expected = [1, 3, 10, 145];
    let got: Vec<usize> = searched.iter().map(|s| s.3).collect();
    let listed: Vec<usize> = searched.iter().map(|s| s.2.len()).collect();
    outcome(
        got == expected && listed == expected,
        format!("dim1 p2 = {}, dim1 p3 = {}, dim2 p2 = {}, dim2 p3 = {}", got[0], got[1], got[2], got[3]),
    )
}

fn c12() -> Outcome {
    let mut differing = Vec::new();
    for pl in PIPELINES {
        let (first, second) = (run_pipeline(pl), run_pipeline(pl));
        if first.stdout != second.stdout || first.code != second.code {
            differing.push(pl.name);
        }
    }
    outcome(differing.is_empty(), format!("{} pipelines run twice, differing: {differing:?}", PIPELINES.len()))
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn main() -> ExitCode {
    let (searched, search_time) = timed(searched);
    let (qt, qt_time) = timed(|| quasi_triangular(&searched));
    let mut results: Vec<(u32, &str, u64, Outcome, Duration)> = Vec::new();
    let mut record = |n, name, limit, (o, t): (Outcome, Duration)| results.push((n, name, limit, o, t));

    let (o, t) = timed(|| c1(&searched));
    record(1, "axiom suite", 10, (o, t + search_time));
    record(2, "D = D1 − D2", 5, timed(c2));
    let ((o, known), t) = timed(|| c3(&searched));
    let known_failure = known;
    record(3, "skew r: D = 0 ⇔ coboundary conditions ⇔ bialgebra", 60, (o, t));
    let (o, t) = timed(|| c4(&qt));
    record(4, "invariant symmetric part forces D1 = D2 = 0", 30, (o, t + qt_time));
    record(5, "T_r and −T_τ(r) are homomorphisms", 30, timed(|| c5(&qt)));
    record(6, "canonical doubles are factorizable, φ is an isomorphism", 10, timed(c6));
    record(7, "factorization x = x1 − x2", 5, timed(c7));
    record(8, "factorizable ↔ quadratic Rota-Baxter round trip", 10, timed(c8));
    record(9, "quadratic Rota-Baxter ↔ associative side", 5, timed(c9));
    record(10, "semidirect construction", 5, timed(c10));
    record(11, "enumeration counts", 120, timed(|| c11(&searched)));
    record(12, "determinism", 60, timed(c12));

    let mut unexpected = Vec::new();
    for (n, name, limit, o, t) in &results {
        let in_time = t.as_secs_f64() < *limit as f64;
        let pass = o.passed && in_time;
        println!(
            "criterion {n:>2}: {}  {name} ({:.2} s, limit {limit} s): {}",
            if pass { "PASS" } else { "FAIL" },
            t.as_secs_f64(),
            o.detail
        );
        let expected_failure = *n == 3 && !o.passed && known_failure && in_time;
        if !pass && !expected_failure {
            unexpected.push(*n);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: only criterion 3 fails, on exactly the known counterexample set");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected failures in criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
