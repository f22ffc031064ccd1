//! Elements of `A⊗A` and `A⊗A⊗A` in coordinates, and operator actions on them.

use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{Field, Scalar};

/// `sum_{i,j} r[i][j] e_i ⊗ e_j`. Doubles as an r-matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor2 {
    field: Field,
    n: usize,
    data: Vec<Scalar>,
}

impl Tensor2 {
    pub fn new(field: Field, n: usize, data: Vec<Scalar>) -> Result<Tensor2> {
        if data.len() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a rank-2 tensor of dimension {n}",
                data.len()
            )));
        }
        if data.iter().any(|s| s.field() != field) {
            return Err(Error::FieldMismatch(format!("tensor entries not all over {field}")));
        }
        Ok(Tensor2 { field, n, data })
    }

    pub fn zeros(field: Field, n: usize) -> Tensor2 {
        Tensor2 {
            field,
            n,
            data: vec![field.zero(); n * n],
        }
    }

    pub fn from_fn(field: Field, n: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Tensor2 {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Tensor2 { field, n, data }
    }

    pub fn from_i64_rows(field: Field, rows: &[&[i64]]) -> Tensor2 {
        Tensor2::from_fn(field, rows.len(), |i, j| field.from_i64(rows[i][j]))
    }

    /// `c · e_i ⊗ e_j`
    pub fn elementary(field: Field, n: usize, i: usize, j: usize, c: Scalar) -> Tensor2 {
        let mut t = Tensor2::zeros(field, n);
        t.set(i, j, c);
        t
    }

    /// Coefficient array read as a matrix (not the operator `T_r`).
    pub fn from_matrix(m: &Matrix) -> Result<Tensor2> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch("tensor from non-square array".into()));
        }
        Ok(Tensor2 {
            field: m.field(),
            n: m.rows(),
            data: m.entries().to_vec(),
        })
    }

    pub fn as_matrix(&self) -> Matrix {
        Matrix::new(self.field, self.n, self.n, self.data.clone()).expect("square by construction")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// The flip `τ(r)[i][j] = r[j][i]`.
    pub fn tau(&self) -> Tensor2 {
        Tensor2::from_fn(self.field, self.n, |i, j| self.get(j, i).clone())
    }

    /// `r + τ(r)`
    pub fn symmetric_part(&self) -> Tensor2 {
        self + &self.tau()
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.tau()
    }

    /// `r + τ(r) = 0`
    pub fn is_skew(&self) -> bool {
        self.symmetric_part().is_zero()
    }

    pub fn scale(&self, c: &Scalar) -> Tensor2 {
        Tensor2 {
            field: self.field,
            n: self.n,
            data: self.data.iter().map(|x| c * x).collect(),
        }
    }
}

/// The flip on `A⊗A`.
pub fn tau(r: &Tensor2) -> Tensor2 {
    r.tau()
}

impl Add<&Tensor2> for &Tensor2 {
    type Output = Tensor2;
    fn add(self, rhs: &Tensor2) -> Tensor2 {
        assert_eq!(self.n, rhs.n, "tensor dimension mismatch");
        Tensor2 {
            field: self.field,
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&Tensor2> for &Tensor2 {
    type Output = Tensor2;
    fn sub(self, rhs: &Tensor2) -> Tensor2 {
        assert_eq!(self.n, rhs.n, "tensor dimension mismatch");
        Tensor2 {
            field: self.field,
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Tensor2 {
    type Output = Tensor2;
    fn neg(self) -> Tensor2 {
        Tensor2 {
            field: self.field,
            n: self.n,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

/// `sum t[i][j][k] e_i ⊗ e_j ⊗ e_k`
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    field: Field,
    n: usize,
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn new(field: Field, n: usize, data: Vec<Scalar>) -> Result<Tensor3> {
        if data.len() != n * n * n {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a rank-3 tensor of dimension {n}",
                data.len()
            )));
        }
        if data.iter().any(|s| s.field() != field) {
            return Err(Error::FieldMismatch(format!("tensor entries not all over {field}")));
        }
        Ok(Tensor3 { field, n, data })
    }

    pub fn zeros(field: Field, n: usize) -> Tensor3 {
        Tensor3 {
            field,
            n,
            data: vec![field.zero(); n * n * n],
        }
    }

    pub fn from_fn(
        field: Field,
        n: usize,
        mut f: impl FnMut(usize, usize, usize) -> Scalar,
    ) -> Tensor3 {
        let mut data = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    data.push(f(i, j, k));
                }
            }
        }
        Tensor3 { field, n, data }
    }

    /// `a ⊗ b ⊗ c` for coordinate vectors.
    pub fn rank_one(a: &[Scalar], b: &[Scalar], c: &[Scalar]) -> Tensor3 {
        let field = a[0].field();
        Tensor3::from_fn(field, a.len(), |i, j, k| &(&a[i] * &b[j]) * &c[k])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[(i * self.n + j) * self.n + k]
    }

    pub fn add_at(&mut self, i: usize, j: usize, k: usize, v: &Scalar) {
        let idx = (i * self.n + j) * self.n + k;
        self.data[idx] += v;
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let idx = (i * self.n + j) * self.n + k;
        self.data[idx] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Tensor3 {
        Tensor3 {
            field: self.field,
            n: self.n,
            data: self.data.iter().map(|x| c * x).collect(),
        }
    }
}

impl Add<&Tensor3> for &Tensor3 {
    type Output = Tensor3;
    fn add(self, rhs: &Tensor3) -> Tensor3 {
        assert_eq!(self.n, rhs.n, "tensor dimension mismatch");
        Tensor3 {
            field: self.field,
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&Tensor3> for &Tensor3 {
    type Output = Tensor3;
    fn sub(self, rhs: &Tensor3) -> Tensor3 {
        assert_eq!(self.n, rhs.n, "tensor dimension mismatch");
        Tensor3 {
            field: self.field,
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Tensor3 {
    type Output = Tensor3;
    fn neg(self) -> Tensor3 {
        Tensor3 {
            field: self.field,
            n: self.n,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

/// One tensor leg of an operator product `M₁⊗M₂(⊗M₃)`.
#[derive(Clone, Copy, Debug)]
pub enum Slot<'a> {
    Identity,
    Op(&'a Matrix),
}

impl Slot<'_> {
    fn check(&self, n: usize) -> Result<()> {
        match self {
            Slot::Identity => Ok(()),
            Slot::Op(m) if m.rows() == n && m.cols() == n => Ok(()),
            Slot::Op(m) => Err(Error::DimensionMismatch(format!(
                "{}x{} operator on a leg of dimension {n}",
                m.rows(),
                m.cols()
            ))),
        }
    }
}

/// `(M₁ ⊗ M₂) t`
pub fn act2(a: Slot<'_>, b: Slot<'_>, t: &Tensor2) -> Result<Tensor2> {
    let n = t.dim();
    a.check(n)?;
    b.check(n)?;
    let mut cur = t.clone();
    if let Slot::Op(m) = a {
        cur = Tensor2::from_fn(t.field(), n, |i, j| {
            let mut acc = t.field().zero();
            for x in 0..n {
                let c = m.get(i, x);
                if !c.is_zero() {
                    acc += &(c * cur.get(x, j));
                }
            }
            acc
        });
    }
    if let Slot::Op(m) = b {
        cur = Tensor2::from_fn(t.field(), n, |i, j| {
            let mut acc = t.field().zero();
            for x in 0..n {
                let c = m.get(j, x);
                if !c.is_zero() {
                    acc += &(c * cur.get(i, x));
                }
            }
            acc
        });
    }
    Ok(cur)
}

/// `(M₁ ⊗ M₂ ⊗ M₃) t`, contracting each leg in turn.
pub fn act3(slots: [Slot<'_>; 3], t: &Tensor3) -> Result<Tensor3> {
    let n = t.dim();
    for s in &slots {
        s.check(n)?;
    }
    let mut cur = t.clone();
    for (leg, slot) in slots.iter().enumerate() {
        let Slot::Op(m) = slot else { continue };
        let prev = cur;
        cur = Tensor3::from_fn(t.field(), n, |i, j, k| {
            let idx = [i, j, k];
            let mut acc = t.field().zero();
            for x in 0..n {
                let c = m.get(idx[leg], x);
                if c.is_zero() {
                    continue;
                }
                let mut src = idx;
                src[leg] = x;
                acc += &(c * prev.get(src[0], src[1], src[2]));
            }
            acc
        });
    }
    Ok(cur)
}
