//! Exhaustive enumeration over prime fields.
//!
//! Candidates are visited in lexicographic order of their flattened constant
//! vector (first entry most significant, digits `0..p`). Work is split into
//! shards by a fixed-length prefix; shard results are concatenated in prefix
//! order, so output never depends on thread scheduling.

use rayon::prelude::*;

use crate::algebra::AntiDendAlgebra;
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::tensor::Tensor2;
use crate::ybe::{classify_r, Classification};

pub const DEFAULT_BUDGET: u128 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Algebras,
    YbeSolutions,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    pub target: Target,
    pub dim: usize,
    pub field: Field,
    pub budget: u128,
    /// Classification flag every emitted r-matrix must have.
    pub filter: Option<String>,
}

impl SearchSpec {
    pub fn algebras(dim: usize, p: u64) -> Result<SearchSpec> {
        Ok(SearchSpec {
            target: Target::Algebras,
            dim,
            field: Field::prime(p)?,
            budget: DEFAULT_BUDGET,
            filter: None,
        })
    }

    pub fn ybe(dim: usize, p: u64) -> Result<SearchSpec> {
        Ok(SearchSpec {
            target: Target::YbeSolutions,
            dim,
            field: Field::prime(p)?,
            budget: DEFAULT_BUDGET,
            filter: None,
        })
    }

    pub fn with_budget(mut self, budget: u128) -> SearchSpec {
        self.budget = budget;
        self
    }

    pub fn with_filter(mut self, flag: Option<String>) -> SearchSpec {
        self.filter = flag;
        self
    }

    fn prime(&self) -> Result<u64> {
        self.field
            .order()
            .ok_or_else(|| Error::FieldMismatch("search needs a prime field".into()))
    }

    /// Number of unknowns.
    pub fn unknowns(&self) -> usize {
        match self.target {
            Target::Algebras => 2 * self.dim.pow(3),
            Target::YbeSolutions => self.dim.pow(2),
        }
    }

    /// `p^unknowns`, saturating.
    pub fn candidates(&self) -> Result<u128> {
        let p = self.prime()? as u128;
        let mut c: u128 = 1;
        for _ in 0..self.unknowns() {
            c = c.saturating_mul(p);
        }
        Ok(c)
    }

    fn check_budget(&self) -> Result<u128> {
        if self.dim == 0 || self.dim > crate::MAX_DIM {
            return Err(Error::DimensionTooLarge(self.dim));
        }
        let needed = self.candidates()?;
        if needed > self.budget {
            return Err(Error::BudgetExceeded {
                needed,
                budget: self.budget,
            });
        }
        Ok(needed)
    }
}

/// Fast membership test on raw residues; mirrors `check_anti_dendriform`.
struct FastChecker {
    n: usize,
    p: u64,
}

impl FastChecker {
    /// `e_i ∘ v`
    #[inline]
    fn left_basis(&self, c: &[u32], i: usize, v: &[u32], out: &mut [u64]) {
        let n = self.n;
        out.iter_mut().for_each(|o| *o = 0);
        for (j, &vj) in v.iter().enumerate() {
            if vj == 0 {
                continue;
            }
            let base = (i * n + j) * n;
            for k in 0..n {
                out[k] = (out[k] + vj as u64 * c[base + k] as u64 % self.p) % self.p;
            }
        }
    }

    /// `v ∘ e_k`
    #[inline]
    fn right_basis(&self, c: &[u32], v: &[u32], k: usize, out: &mut [u64]) {
        let n = self.n;
        out.iter_mut().for_each(|o| *o = 0);
        for (i, &vi) in v.iter().enumerate() {
            if vi == 0 {
                continue;
            }
            let base = (i * n + k) * n;
            for m in 0..n {
                out[m] = (out[m] + vi as u64 * c[base + m] as u64 % self.p) % self.p;
            }
        }
    }

    fn row<'a>(&self, c: &'a [u32], i: usize, j: usize) -> &'a [u32] {
        let n = self.n;
        &c[(i * n + j) * n..(i * n + j + 1) * n]
    }

    /// `(x·y)·z = x·(y·z)` on basis triples.
    fn associative(&self, dot: &[u32], buf: &mut [Vec<u64>; 2]) -> bool {
        let n = self.n;
        let [l, r] = buf;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    self.right_basis(dot, self.row(dot, i, j), k, l);
                    self.left_basis(dot, i, self.row(dot, j, k), r);
                    if l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The four equalities of the axiom check, with early exit.
    fn passes(&self, succ: &[u32], prec: &[u32], dot: &[u32], buf: &mut [Vec<u64>; 2]) -> bool {
        let n = self.n;
        let p = self.p;
        let [a, b] = buf;
        let neg = |v: &mut [u64]| v.iter_mut().for_each(|x| *x = (p - *x) % p);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    // x≻(y≻z) = −(x·y)≻z
                    self.left_basis(succ, i, self.row(succ, j, k), a);
                    self.right_basis(succ, self.row(dot, i, j), k, b);
                    neg(b);
                    if a != b {
                        return false;
                    }
                    // −(x·y)≻z = −x≺(y·z)
                    self.left_basis(prec, i, self.row(dot, j, k), a);
                    neg(a);
                    if a != b {
                        return false;
                    }
                    // −x≺(y·z) = (x≺y)≺z
                    self.right_basis(prec, self.row(prec, i, j), k, b);
                    if a != b {
                        return false;
                    }
                    // (x≻y)≺z = x≻(y≺z)
                    self.right_basis(prec, self.row(succ, i, j), k, a);
                    self.left_basis(succ, i, self.row(prec, j, k), b);
                    if a != b {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Advances a little-endian-last odometer; false after the last state.
fn advance(digits: &mut [u32], p: u32) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < p {
            return true;
        }
        *d = 0;
    }
    false
}

fn shard_prefixes(p: u32, unknowns: usize) -> (usize, Vec<Vec<u32>>) {
    let mut len = 0;
    let mut count: u64 = 1;
    while len < unknowns && count < 256 {
        len += 1;
        count *= p as u64;
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut prefix = vec![0u32; len];
    loop {
        out.push(prefix.clone());
        if !advance(&mut prefix, p) {
            break;
        }
    }
    (len, out)
}

fn to_algebra(field: Field, n: usize, digits: &[u32]) -> AntiDendAlgebra {
    let half = n * n * n;
    let conv = |d: &[u32]| d.iter().map(|&v| field.residue(v as u64)).collect::<Vec<Scalar>>();
    AntiDendAlgebra::new(field, n, conv(&digits[..half]), conv(&digits[half..]))
        .expect("shape fixed by construction")
}

#[derive(Clone, Debug)]
pub struct AlgebraSearch {
    pub algebras: Vec<AntiDendAlgebra>,
    pub candidates: u128,
}

/// All anti-dendriform algebras of dimension `spec.dim` over `𝔽_p`, as raw
/// structure constants (no quotient by isomorphism).
///
/// The axioms force `x·y = x≻y + x≺y` to be associative, so the search first
/// lists associative `·` and then splits each one as `≻ + ≺` in every possible
/// way. The result is sorted back into lexicographic order of `(≻, ≺)`, which
/// makes it identical to a plain scan of all `p^(2n³)` candidates.
pub fn enumerate_algebras(spec: &SearchSpec) -> Result<AlgebraSearch> {
    if spec.target != Target::Algebras {
        return Err(Error::UnknownVariant("search target is not algebras".into()));
    }
    let candidates = spec.check_budget()?;
    let p = spec.prime()?;
    let n = spec.dim;
    let cube = n * n * n;
    let checker = FastChecker { n, p };
    let new_buf = || [vec![0u64; n], vec![0u64; n]];
    let (plen, prefixes) = shard_prefixes(p as u32, cube);

    let dots: Vec<Vec<u32>> = prefixes
        .par_iter()
        .map(|prefix| {
            let mut buf = new_buf();
            let mut found = Vec::new();
            let mut digits = vec![0u32; cube];
            digits[..plen].copy_from_slice(prefix);
            loop {
                if checker.associative(&digits, &mut buf) {
                    found.push(digits.clone());
                }
                if !advance(&mut digits[plen..], p as u32) {
                    break;
                }
            }
            found
        })
        .flatten()
        .collect();

    let mut hits: Vec<Vec<u32>> = dots
        .par_iter()
        .map(|dot| {
            let mut buf = new_buf();
            let mut found = Vec::new();
            let mut succ = vec![0u32; cube];
            let mut prec = vec![0u32; cube];
            loop {
                for ((pr, &d), &s) in prec.iter_mut().zip(dot).zip(&succ) {
                    *pr = ((d as u64 + p - s as u64) % p) as u32;
                }
                if checker.passes(&succ, &prec, dot, &mut buf) {
                    let mut digits = succ.clone();
                    digits.extend_from_slice(&prec);
                    found.push(digits);
                }
                if !advance(&mut succ, p as u32) {
                    break;
                }
            }
            found
        })
        .flatten()
        .collect();
    hits.sort_unstable();

    let algebras = hits
        .iter()
        .map(|d| {
            to_algebra(spec.field, n, d)
                .validate()
                .expect("fast checker agrees with the generic one")
        })
        .collect();
    Ok(AlgebraSearch {
        algebras,
        candidates,
    })
}

/// Plain scan of every `(≻, ≺)` candidate; slow reference for [`enumerate_algebras`].
pub fn enumerate_algebras_naive(spec: &SearchSpec) -> Result<AlgebraSearch> {
    let candidates = spec.check_budget()?;
    let p = spec.prime()?;
    let n = spec.dim;
    let cube = n * n * n;
    let checker = FastChecker { n, p };
    let (plen, prefixes) = shard_prefixes(p as u32, 2 * cube);
    let hits: Vec<Vec<u32>> = prefixes
        .par_iter()
        .map(|prefix| {
            let mut buf = [vec![0u64; n], vec![0u64; n]];
            let mut found = Vec::new();
            let mut digits = vec![0u32; 2 * cube];
            let mut dot = vec![0u32; cube];
            digits[..plen].copy_from_slice(prefix);
            loop {
                let (succ, prec) = digits.split_at(cube);
                for ((d, &s), &q) in dot.iter_mut().zip(succ).zip(prec) {
                    *d = ((s as u64 + q as u64) % p) as u32;
                }
                if checker.passes(succ, prec, &dot, &mut buf) {
                    found.push(digits.clone());
                }
                if !advance(&mut digits[plen..], p as u32) {
                    break;
                }
            }
            found
        })
        .flatten()
        .collect();
    let algebras = hits.iter().map(|d| to_algebra(spec.field, n, d)).collect();
    Ok(AlgebraSearch {
        algebras,
        candidates,
    })
}

#[derive(Clone, Debug)]
pub struct YbeSearch {
    pub solutions: Vec<(Tensor2, Classification)>,
    pub candidates: u128,
}

/// All `r` with `D(r) = 0` on `a`, optionally restricted to a classification flag.
pub fn enumerate_ybe(spec: &SearchSpec, a: &AntiDendAlgebra) -> Result<YbeSearch> {
    if spec.target != Target::YbeSolutions {
        return Err(Error::UnknownVariant("search target is not ybe-solutions".into()));
    }
    if a.field() != spec.field {
        return Err(Error::FieldMismatch("base algebra and search field differ".into()));
    }
    if a.dim() != spec.dim {
        return Err(Error::DimensionMismatch("base algebra and search dimension differ".into()));
    }
    if let Some(flag) = &spec.filter {
        if !Classification::FLAGS.contains(&flag.as_str()) {
            return Err(Error::UnknownVariant(flag.clone()));
        }
    }
    let candidates = spec.check_budget()?;
    let all = all_tensors(spec.field, spec.dim)?;
    let classified: Vec<Option<(Tensor2, Classification)>> = all
        .into_par_iter()
        .map(|r| {
            let c = classify_r(a, &r).expect("dimensions checked");
            let keep = c.ybe
                && spec
                    .filter
                    .as_deref()
                    .is_none_or(|f| c.flag(f).expect("flag validated"));
            keep.then_some((r, c))
        })
        .collect();
    Ok(YbeSearch {
        solutions: classified.into_iter().flatten().collect(),
        candidates,
    })
}

/// Every `r ∈ 𝔽_p^{n×n}` in lexicographic order of `r[0][0], r[0][1], …`.
pub fn all_tensors(field: Field, n: usize) -> Result<Vec<Tensor2>> {
    let p = field
        .order()
        .ok_or_else(|| Error::FieldMismatch("enumeration needs a prime field".into()))?;
    let mut out = Vec::new();
    let mut digits = vec![0u32; n * n];
    loop {
        let data = digits.iter().map(|&v| field.residue(v as u64)).collect();
        out.push(Tensor2::new(field, n, data)?);
        if !advance(&mut digits, p as u32) {
            break;
        }
    }
    Ok(out)
}

/// Every skew-symmetric `r` over `𝔽_p` in lexicographic order.
pub fn skew_tensors(field: Field, n: usize) -> Result<Vec<Tensor2>> {
    Ok(all_tensors(field, n)?.into_iter().filter(Tensor2::is_skew).collect())
}
