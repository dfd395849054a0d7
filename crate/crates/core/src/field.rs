//! Exact arithmetic in the biquadratic field `K = Q(i, sqrt 2)`.
//!
//! Elements are stored on the fixed basis `{1, i, r2, i*r2}` where `r2` is the
//! formal square root of two. Every coefficient is a reduced `BigRational`,
//! so two elements are equal exactly when their coefficient arrays are equal.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Builds a rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// An element `c0 + c1*i + c2*r2 + c3*i*r2` of `K`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElem {
    c: [Rational; 4],
}

impl FieldElem {
    pub fn new(c0: Rational, c1: Rational, c2: Rational, c3: Rational) -> Self {
        FieldElem { c: [c0, c1, c2, c3] }
    }

    pub fn from_ints(c0: i64, c1: i64, c2: i64, c3: i64) -> Self {
        let r = |n: i64| Rational::from_integer(n.into());
        Self::new(r(c0), r(c1), r(c2), r(c3))
    }

    pub fn zero() -> Self {
        FieldElem::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn rat(n: i64, d: i64) -> Self {
        Self::from_rational(rat(n, d))
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::new(q, Rational::zero(), Rational::zero(), Rational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn sqrt2() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    /// `i * sqrt 2`, a square root of `-2`.
    pub fn i_sqrt2() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Zero::is_zero)
    }

    /// True when the element lies in `Q`.
    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.c[0].clone())
    }

    /// Number of nonzero basis coordinates.
    pub fn term_count(&self) -> usize {
        self.c.iter().filter(|q| !q.is_zero()).count()
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        FieldElem {
            c: std::array::from_fn(|k| &self.c[k] * q),
        }
    }

    /// Image under `i -> -i`.
    pub fn conj_i(&self) -> Self {
        Self::new(
            self.c[0].clone(),
            -&self.c[1],
            self.c[2].clone(),
            -&self.c[3],
        )
    }

    /// Image under `sqrt 2 -> -sqrt 2`.
    pub fn conj_sqrt2(&self) -> Self {
        Self::new(
            self.c[0].clone(),
            self.c[1].clone(),
            -&self.c[2],
            -&self.c[3],
        )
    }

    /// Field norm to `Q`: the product of the four Galois conjugates.
    pub fn norm(&self) -> Rational {
        let a = self * &self.conj_i();
        let b = self.conj_sqrt2() * self.conj_sqrt2().conj_i();
        let n = a * b;
        debug_assert!(n.is_rational());
        n.c[0].clone()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        // x + y r2 with x, y in Q(i); (x + y r2)(x - y r2) = x^2 - 2 y^2 lies in Q(i).
        let bar = self.conj_sqrt2();
        let n = self * &bar;
        let (u, v) = (&n.c[0], &n.c[1]);
        let d = u * u + v * v;
        let n_inv = Self::new(u / &d, -(v / &d), Rational::zero(), Rational::zero());
        Ok(bar * n_inv)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// A square root inside `K`, when one exists.
    pub fn sqrt(&self) -> Option<Self> {
        let zero = Rational::zero();
        let a = (self.c[0].clone(), self.c[1].clone());
        let b = (self.c[2].clone(), self.c[3].clone());
        if b.0.is_zero() && b.1.is_zero() {
            if let Some((x, y)) = sqrt_gauss(&a.0, &a.1) {
                return Some(Self::new(x, y, zero.clone(), zero));
            }
            let half = rat(1, 2);
            let (x, y) = sqrt_gauss(&(&a.0 * &half), &(&a.1 * &half))?;
            return Some(Self::new(zero.clone(), zero, x, y));
        }
        // (p + q r2)^2 = (p^2 + 2 q^2) + 2 p q r2, so p^2 solves 2 P^2 - 2 A P + B^2 = 0.
        let a_elem = Self::new(a.0, a.1, zero.clone(), zero.clone());
        let b_elem = Self::new(b.0, b.1, zero.clone(), zero.clone());
        let disc = &a_elem * &a_elem - (&b_elem * &b_elem).scale(&rat(2, 1));
        let (dx, dy) = sqrt_gauss(&disc.c[0], &disc.c[1])?;
        let d_elem = Self::new(dx, dy, zero.clone(), zero);
        for cand in [&a_elem + &d_elem, &a_elem - &d_elem] {
            let p_sq = cand.scale(&rat(1, 2));
            let Some((px, py)) = sqrt_gauss(&p_sq.c[0], &p_sq.c[1]) else {
                continue;
            };
            let p = Self::new(px, py, Rational::zero(), Rational::zero());
            if p.is_zero() {
                continue;
            }
            let q = (&b_elem * &p.inv().ok()?).scale(&rat(1, 2));
            let root = &p + &(&q * &Self::sqrt2());
            if &(&root * &root) == self {
                return Some(root);
            }
        }
        None
    }

    /// Floating-point image under `i -> 1i`, `r2 -> +1.414..`; diagnostics only.
    pub fn to_complex(&self) -> (f64, f64) {
        let f = |q: &Rational| q.to_f64().unwrap_or(f64::NAN);
        let s = std::f64::consts::SQRT_2;
        (
            f(&self.c[0]) + s * f(&self.c[2]),
            f(&self.c[1]) + s * f(&self.c[3]),
        )
    }
}

fn sqrt_rational(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rational::new(n, d))
}

/// Square root of `u + v i` in `Q(i)`.
fn sqrt_gauss(u: &Rational, v: &Rational) -> Option<(Rational, Rational)> {
    if v.is_zero() {
        if !u.is_negative() {
            return sqrt_rational(u).map(|x| (x, Rational::zero()));
        }
        return sqrt_rational(&-u).map(|y| (Rational::zero(), y));
    }
    let m = sqrt_rational(&(u * u + v * v))?;
    let x = sqrt_rational(&((u + m) / rat(2, 1)))?;
    let y = v / (&x * rat(2, 1));
    Some((x, y))
}

#[inline]
fn mac(acc: &mut Rational, k: i64, a: &Rational, b: &Rational) {
    if a.is_zero() || b.is_zero() {
        return;
    }
    let p = a * b;
    match k {
        1 => *acc += p,
        -1 => *acc -= p,
        _ => *acc += p * BigInt::from(k),
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &'a FieldElem) -> FieldElem {
        let [a0, a1, a2, a3] = &self.c;
        let [b0, b1, b2, b3] = &rhs.c;
        if self.is_rational() {
            return rhs.scale(a0);
        }
        if rhs.is_rational() {
            return self.scale(b0);
        }
        let mut r: [Rational; 4] = Default::default();
        mac(&mut r[0], 1, a0, b0);
        mac(&mut r[0], -1, a1, b1);
        mac(&mut r[0], 2, a2, b2);
        mac(&mut r[0], -2, a3, b3);
        mac(&mut r[1], 1, a0, b1);
        mac(&mut r[1], 1, a1, b0);
        mac(&mut r[1], 2, a2, b3);
        mac(&mut r[1], 2, a3, b2);
        mac(&mut r[2], 1, a0, b2);
        mac(&mut r[2], 1, a2, b0);
        mac(&mut r[2], -1, a1, b3);
        mac(&mut r[2], -1, a3, b1);
        mac(&mut r[3], 1, a0, b3);
        mac(&mut r[3], 1, a3, b0);
        mac(&mut r[3], 1, a1, b2);
        mac(&mut r[3], 1, a2, b1);
        FieldElem { c: r }
    }
}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &'a FieldElem) -> FieldElem {
        FieldElem {
            c: std::array::from_fn(|k| &self.c[k] + &rhs.c[k]),
        }
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &'a FieldElem) -> FieldElem {
        FieldElem {
            c: std::array::from_fn(|k| &self.c[k] - &rhs.c[k]),
        }
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            c: std::array::from_fn(|k| -&self.c[k]),
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: &'a FieldElem) -> FieldElem {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<FieldElem> for &'a FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

/// Division panics on a zero divisor; use [`FieldElem::inv`] to handle it.
impl Div<&FieldElem> for &FieldElem {
    type Output = FieldElem;
    fn div(self, rhs: &FieldElem) -> FieldElem {
        self * &rhs.inv().expect("division by zero in K")
    }
}

impl Div for FieldElem {
    type Output = FieldElem;
    fn div(self, rhs: FieldElem) -> FieldElem {
        &self / &rhs
    }
}

impl AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, rhs: &FieldElem) {
        for k in 0..4 {
            if !rhs.c[k].is_zero() {
                self.c[k] += &rhs.c[k];
            }
        }
    }
}

impl SubAssign<&FieldElem> for FieldElem {
    fn sub_assign(&mut self, rhs: &FieldElem) {
        for k in 0..4 {
            if !rhs.c[k].is_zero() {
                self.c[k] -= &rhs.c[k];
            }
        }
    }
}

impl MulAssign<&FieldElem> for FieldElem {
    fn mul_assign(&mut self, rhs: &FieldElem) {
        *self = &*self * rhs;
    }
}

impl From<i64> for FieldElem {
    fn from(n: i64) -> Self {
        FieldElem::int(n)
    }
}

impl From<Rational> for FieldElem {
    fn from(q: Rational) -> Self {
        FieldElem::from_rational(q)
    }
}

impl From<BigInt> for FieldElem {
    fn from(n: BigInt) -> Self {
        FieldElem::from_rational(Rational::from_integer(n))
    }
}

pub(crate) fn fmt_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for FieldElem {
    /// Writes `p/q + p/q*i + p/q*r2 + p/q*i*r2`, dropping zero terms and unit coefficients.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        const BASIS: [&str; 4] = ["", "i", "r2", "i*r2"];
        let mut first = true;
        for (q, basis) in self.c.iter().zip(BASIS) {
            if q.is_zero() {
                continue;
            }
            let neg = q.numer().sign() == Sign::Minus;
            let mag = q.abs();
            let body = match (basis, mag.is_one()) {
                ("", _) => fmt_rational(&mag),
                (b, true) => b.to_string(),
                (b, false) => format!("{}*{}", fmt_rational(&mag), b),
            };
            match (first, neg) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElem({self})")
    }
}

impl FromStr for FieldElem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        crate::text::parse_poly(s)?.to_constant().ok_or(Error::NotConstant)
    }
}

impl Serialize for FieldElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
