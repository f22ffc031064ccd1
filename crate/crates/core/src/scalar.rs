//! Exact scalars over the rationals or a prime field.
//!
//! A [`Scalar`] carries its field with it so that values read from untrusted
//! files can be checked for consistency. Mixing fields inside one arithmetic
//! expression is a programming error and panics; every public constructor in
//! this crate validates field uniformity up front.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest admissible prime modulus; keeps residue products inside `u64`.
pub const MAX_PRIME: u64 = u32::MAX as u64;

/// The base field of every scalar, matrix and tensor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// The prime field of order `p`; rejects composites and oversized moduli.
    pub fn prime(p: u64) -> Result<Field> {
        if !(2..=MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(Error::BadPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Prime {
                p,
                v: n.rem_euclid(p as i64) as u64,
            },
        }
    }

    /// `num/den` as a scalar. Over a prime field the denominator is inverted.
    pub fn ratio(self, num: i64, den: i64) -> Result<Scalar> {
        let d = self.from_i64(den);
        let inv = d.inv().ok_or(Error::Singular)?;
        Ok(&self.from_i64(num) * &inv)
    }

    /// Residue constructor for prime fields; `v` must already be reduced.
    pub fn residue(self, v: u64) -> Scalar {
        match self {
            Field::Prime(p) => {
                debug_assert!(v < p);
                Scalar::Prime { p, v }
            }
            Field::Rational => self.from_i64(v as i64),
        }
    }

    /// Field order for prime fields, `None` for the rationals.
    pub fn order(self) -> Option<u64> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some(p),
        }
    }

    /// All elements of a finite field in increasing residue order.
    pub fn elements(self) -> Option<Vec<Scalar>> {
        self.order().map(|p| (0..p).map(|v| self.residue(v)).collect())
    }

    /// Header tag: `Q` or `p<prime>`.
    pub fn tag(self) -> String {
        match self {
            Field::Rational => "Q".to_string(),
            Field::Prime(p) => format!("p{p}"),
        }
    }

    pub fn from_tag(tag: &str) -> Result<Field> {
        let t = tag.trim();
        if t == "Q" || t == "q" {
            return Ok(Field::Rational);
        }
        let digits = t
            .strip_prefix('p')
            .or_else(|| t.strip_prefix('F'))
            .ok_or_else(|| Error::syntax(format!("unknown field tag {tag:?}")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::syntax(format!("unknown field tag {tag:?}")))?;
        Field::prime(p)
    }

    /// Parse a scalar written in canonical string form for this field.
    ///
    /// Rationals accept `a` or `a/b` with `b != 0`. Prime fields accept any
    /// decimal integer, reduced modulo `p`; fractions are a field mismatch.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar> {
        let s = text.trim();
        match self {
            Field::Rational => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s, "1"),
                };
                let num = BigInt::from_str(num.trim())
                    .map_err(|_| Error::syntax(format!("invalid rational {text:?}")))?;
                let den = BigInt::from_str(den.trim())
                    .map_err(|_| Error::syntax(format!("invalid rational {text:?}")))?;
                if den.is_zero() {
                    return Err(Error::syntax(format!("zero denominator in {text:?}")));
                }
                Ok(Scalar::Rational(BigRational::new(num, den)))
            }
            Field::Prime(p) => {
                if s.contains('/') {
                    return Err(Error::FieldMismatch(format!(
                        "fraction {text:?} in a prime-field document"
                    )));
                }
                let n = BigInt::from_str(s)
                    .map_err(|_| Error::syntax(format!("invalid residue {text:?}")))?;
                let r = n.mod_floor(&BigInt::from(p));
                Ok(Scalar::Prime {
                    p,
                    v: r.to_u64().expect("reduced residue fits"),
                })
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { p: u64, v: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime { v, .. } => *v == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Prime { p, v } => Scalar::Prime {
                p: *p,
                v: pow_mod(*v, p - 2, *p),
            },
        })
    }

    /// Residue of a prime-field scalar.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Prime { v, .. } => Some(*v),
            Scalar::Rational(_) => None,
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    // BigRational keeps the denominator positive.
                    debug_assert!(q.denom().is_positive());
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Prime { v, .. } => write!(f, "{v}"),
        }
    }
}

fn field_clash(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { p, v: a }, Scalar::Prime { p: q, v: b }) if p == q => Scalar::Prime {
                p: *p,
                v: (a + b) % p,
            },
            _ => field_clash(self, rhs),
        }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Prime { p, v: a }, Scalar::Prime { p: q, v: b }) if p == q => Scalar::Prime {
                p: *p,
                v: (a + p - b) % p,
            },
            _ => field_clash(self, rhs),
        }
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { p, v: a }, Scalar::Prime { p: q, v: b }) if p == q => Scalar::Prime {
                p: *p,
                v: a * b % p,
            },
            _ => field_clash(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { p, v } => Scalar::Prime {
                p: *p,
                v: (p - v) % p,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Prime { p, v }, Scalar::Prime { p: q, v: b }) if p == q => {
                *v = (*v + b) % *p;
            }
            _ => *self = &*self + rhs,
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}
