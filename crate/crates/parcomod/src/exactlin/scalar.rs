//! Exact field elements: arbitrary-precision rationals or residues modulo a prime.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// The ground field of a computation session.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum Field {
    Q,
    Fp { p: u32 },
}

impl Field {
    /// Prime field of order `p`; `p` must be prime and below 2^31.
    pub fn fp(p: u32) -> Result<Field, Error> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a prime below 2^31")));
        }
        Ok(Field::Fp { p })
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::zero()),
            Field::Fp { p } => Scalar::Fp { v: 0, p },
        }
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Fp { p } => Scalar::Fp { v: n.rem_euclid(p as i64) as u32, p },
        }
    }

    /// `n / d`; panics when `d` is zero in the field.
    pub fn frac(self, n: i64, d: i64) -> Scalar {
        self.int(n).div(&self.int(d))
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Q => 0,
            Field::Fp { p } => p,
        }
    }

    /// Number of elements, `None` for Q.
    pub fn order(self) -> Option<u32> {
        match self {
            Field::Q => None,
            Field::Fp { p } => Some(p),
        }
    }

    /// All elements of a finite field in the order 0, 1, ..., p-1.
    pub fn elements(self) -> Option<Vec<Scalar>> {
        self.order().map(|p| (0..p).map(|v| Scalar::Fp { v, p }).collect())
    }

    /// Uniform element of GF(p), or a small integer in [-3, 3] over Q.
    pub fn random<R: Rng + ?Sized>(self, rng: &mut R) -> Scalar {
        match self {
            Field::Q => self.int(rng.gen_range(-3..=3)),
            Field::Fp { p } => Scalar::Fp { v: rng.gen_range(0..p), p },
        }
    }

    /// Parses the serialized form: "a/b" or "a" over Q, a decimal residue over GF(p).
    pub fn parse(self, s: &str) -> Result<Scalar, Error> {
        let bad = || Error::Parse(format!("invalid scalar {s:?}"));
        let s = s.trim();
        match self {
            Field::Q => {
                let (n, d) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s, "1"),
                };
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar::Q(BigRational::new(n, d)))
            }
            Field::Fp { p } => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                let r = (n % BigInt::from(p) + BigInt::from(p)) % BigInt::from(p);
                Ok(Scalar::Fp { v: r.to_u32().ok_or_else(bad)?, p })
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "Q"),
            Field::Fp { p } => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact scalar. Operations between scalars of different fields panic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Q(BigRational),
    Fp { v: u32, p: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Q,
            Scalar::Fp { p, .. } => Field::Fp { p: *p },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "division by zero");
        match self {
            Scalar::Q(r) => Scalar::Q(r.recip()),
            Scalar::Fp { v, p } => Scalar::Fp { v: pow_mod(*v as u64, *p as u64 - 2, *p as u64) as u32, p: *p },
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self * &other.inv()
    }

    /// `self += a * b`, the inner step of every elimination loop.
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        match (&mut *self, a, b) {
            (Scalar::Fp { v, p }, Scalar::Fp { v: x, p: pa }, Scalar::Fp { v: y, p: pb }) => {
                assert!(*p == *pa && *p == *pb, "mixed prime fields");
                let m = *p as u64;
                *v = ((*v as u64 + (*x as u64 * *y as u64) % m) % m) as u32;
            }
            _ => {
                let t = a * b;
                *self += &t;
            }
        }
    }

    /// Canonical string form used in files.
    pub fn to_string_repr(&self) -> String {
        self.to_string()
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalars from different fields: {} and {}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => {
                Scalar::Fp { v: ((*a as u64 + *b as u64) % *p as u64) as u32, p: *p }
            }
            _ => mismatch(self, o),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => {
                Scalar::Fp { v: ((*a as u64 + *p as u64 - *b as u64) % *p as u64) as u32, p: *p }
            }
            _ => mismatch(self, o),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => {
                Scalar::Fp { v: ((*a as u64 * *b as u64) % *p as u64) as u32, p: *p }
            }
            _ => mismatch(self, o),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { v, p } => Scalar::Fp { v: (*p - *v) % *p, p: *p },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        &self + &o
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        &self - &o
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        &self * &o
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        match (&mut *self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => *a += b,
            (Scalar::Fp { v, p }, Scalar::Fp { v: b, p: q }) if *p == *q => {
                *v = ((*v as u64 + *b as u64) % *p as u64) as u32
            }
            _ => {
                let s = self.clone();
                mismatch(&s, o)
            }
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        *self += &(-o);
    }
}

impl Scalar {
    /// Absolute height of a rational (max of |num|, den); used only for diagnostics.
    pub fn height(&self) -> BigInt {
        match self {
            Scalar::Q(r) => r.numer().abs().max(r.denom().clone()),
            Scalar::Fp { v, .. } => BigInt::from(*v),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_arithmetic() {
        let f = Field::fp(7).unwrap();
        let a = f.int(3);
        let b = f.int(5);
        assert_eq!(&a + &b, f.int(1));
        assert_eq!(&a - &b, f.int(5));
        assert_eq!(&a * &b, f.int(1));
        assert_eq!(a.inv(), f.int(5));
        assert_eq!(-&a, f.int(4));
    }

    #[test]
    fn rational_parse_and_print() {
        let q = Field::Q;
        let x = q.parse("6/-4").unwrap();
        assert_eq!(x.to_string(), "-3/2");
        assert_eq!(q.parse("5").unwrap().to_string(), "5");
        assert!(q.parse("1/0").is_err());
        assert_eq!(q.frac(1, 2).to_string(), "1/2");
    }

    #[test]
    fn fp_parse_negative() {
        let f = Field::fp(5).unwrap();
        assert_eq!(f.parse("-1").unwrap(), f.int(4));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(Field::fp(9).is_err());
        assert!(Field::fp(2).is_ok());
    }

    #[test]
    #[should_panic]
    fn mixing_fields_panics() {
        let _ = &Field::Q.one() + &Field::fp(3).unwrap().one();
    }
}
