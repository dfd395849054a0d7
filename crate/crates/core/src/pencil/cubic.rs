//! Chord-tangent arithmetic on the singular members and the maps `mu`, `nu`
//! onto the multiplicative and additive groups.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldElem;

/// `c Y^2 = 4 X^3 + p X + q` in the affine chart `Z = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneCubic {
    pub c: FieldElem,
    pub p: FieldElem,
    pub q: FieldElem,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum CubicPoint {
    /// `(0:1:0)`, the identity.
    Infinity,
    Affine { x: FieldElem, y: FieldElem },
}

impl CubicPoint {
    pub fn affine(x: FieldElem, y: FieldElem) -> Self {
        CubicPoint::Affine { x, y }
    }
}

impl PlaneCubic {
    /// The I1 member `E^2 Y^2 = (X - 3)(2X + 3)^2`.
    pub fn nodal(e: &FieldElem) -> Self {
        PlaneCubic {
            c: e.pow(2),
            p: FieldElem::int(-27),
            q: FieldElem::int(-27),
        }
    }

    /// The II member `F^3 Y^2 = 4 X^3`.
    pub fn cuspidal(f: &FieldElem) -> Self {
        PlaneCubic {
            c: f.pow(3),
            p: FieldElem::zero(),
            q: FieldElem::zero(),
        }
    }

    fn rhs(&self, x: &FieldElem) -> FieldElem {
        &(&(&x.pow(3) * &FieldElem::int(4)) + &(&self.p * x)) + &self.q
    }

    pub fn contains(&self, pt: &CubicPoint) -> bool {
        match pt {
            CubicPoint::Infinity => true,
            CubicPoint::Affine { x, y } => &self.c * &y.pow(2) == self.rhs(x),
        }
    }

    /// Singular iff `y = 0` and `12 x^2 + p = 0` on the curve.
    pub fn is_singular(&self, pt: &CubicPoint) -> bool {
        match pt {
            CubicPoint::Infinity => false,
            CubicPoint::Affine { x, y } => {
                y.is_zero()
                    && (&(&x.pow(2) * &FieldElem::int(12)) + &self.p).is_zero()
                    && self.rhs(x).is_zero()
            }
        }
    }

    pub fn neg(&self, pt: &CubicPoint) -> CubicPoint {
        match pt {
            CubicPoint::Infinity => CubicPoint::Infinity,
            CubicPoint::Affine { x, y } => CubicPoint::affine(x.clone(), -y),
        }
    }

    /// Third intersection of the chord (or tangent) through `P, Q`, reflected in `Y`.
    pub fn add(&self, a: &CubicPoint, b: &CubicPoint) -> Result<CubicPoint> {
        for pt in [a, b] {
            if !self.contains(pt) {
                return Err(Error::NotOnCurve);
            }
            if self.is_singular(pt) {
                return Err(Error::SingularPointInput);
            }
        }
        let (x1, y1, x2, y2) = match (a, b) {
            (CubicPoint::Infinity, _) => return Ok(b.clone()),
            (_, CubicPoint::Infinity) => return Ok(a.clone()),
            (CubicPoint::Affine { x: x1, y: y1 }, CubicPoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let lambda = if x1 != x2 {
            &(y2 - y1) * &(x2 - x1).inv()?
        } else if y1 == y2 && !y1.is_zero() {
            let num = &(&x1.pow(2) * &FieldElem::int(12)) + &self.p;
            &num * &(&(&self.c * y1) * &FieldElem::int(2)).inv()?
        } else {
            // vertical line through P and -P
            return Ok(CubicPoint::Infinity);
        };
        let x3 = &(&(&(&self.c * &lambda.pow(2)) * &FieldElem::rat(1, 4)) - x1) - x2;
        let y3 = &(&lambda * &(&x3 - x1)) + y1;
        Ok(CubicPoint::affine(x3, -&y3))
    }

    pub fn mul(&self, pt: &CubicPoint, n: i64) -> Result<CubicPoint> {
        let mut acc = CubicPoint::Infinity;
        let base = if n < 0 { self.neg(pt) } else { pt.clone() };
        for _ in 0..n.unsigned_abs() {
            acc = self.add(&acc, &base)?;
        }
        Ok(acc)
    }
}

/// Which of the two reciprocal isomorphisms onto `K^*` is used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MuConvention {
    /// `(2EY - 3 sqrt2 i (2X + 3)) / (2EY + 3 sqrt2 i (2X + 3))`
    #[default]
    Printed,
    Reciprocal,
}

fn tangent_term(x: &FieldElem) -> FieldElem {
    &FieldElem::i_sqrt2() * &(&(x * &FieldElem::int(2)) + &FieldElem::int(3)).scale(&crate::field::rat(3, 1))
}

/// `mu` on the nodal member with `E^2 Y^2 = (X - 3)(2X + 3)^2`.
pub fn mu(e: &FieldElem, pt: &CubicPoint, conv: MuConvention) -> Result<FieldElem> {
    let (x, y) = match pt {
        CubicPoint::Infinity => return Ok(FieldElem::one()),
        CubicPoint::Affine { x, y } => (x, y),
    };
    let ey2 = &(e * y) * &FieldElem::int(2);
    let t = tangent_term(x);
    let num = &ey2 - &t;
    let den = &ey2 + &t;
    if num.is_zero() || den.is_zero() {
        return Err(Error::NodePoint);
    }
    let m = &num * &den.inv()?;
    Ok(match conv {
        MuConvention::Printed => m,
        MuConvention::Reciprocal => m.inv()?,
    })
}

/// `(-3(m^2 + 10m + 1) / (2(m-1)^2), 54 sqrt2 i m (m+1) / (E (m-1)^3))`, and `1 -> (0:1:0)`.
pub fn mu_inverse(e: &FieldElem, m: &FieldElem, conv: MuConvention) -> Result<CubicPoint> {
    if m.is_zero() {
        return Err(Error::NodePoint);
    }
    let m = match conv {
        MuConvention::Printed => m.clone(),
        MuConvention::Reciprocal => m.inv()?,
    };
    if m.is_one() {
        return Ok(CubicPoint::Infinity);
    }
    let one = FieldElem::one();
    let m1 = &m - &one;
    let quad = &(&m.pow(2) + &(&m * &FieldElem::int(10))) + &one;
    let x = &(&quad * &FieldElem::int(-3)) * &(&m1.pow(2) * &FieldElem::int(2)).inv()?;
    let y = &(&(&FieldElem::i_sqrt2() * &FieldElem::int(54)) * &(&m * &(&m + &one)))
        * &(e * &m1.pow(3)).inv()?;
    Ok(CubicPoint::affine(x, y))
}

/// `nu = X / (F Y)` on the cuspidal member `F^3 Y^2 = 4 X^3`.
pub fn nu(f: &FieldElem, pt: &CubicPoint) -> Result<FieldElem> {
    match pt {
        CubicPoint::Infinity => Ok(FieldElem::zero()),
        CubicPoint::Affine { x, y } => {
            if y.is_zero() {
                return Err(Error::CuspPoint);
            }
            Ok(x * &(f * y).inv()?)
        }
    }
}

/// `(F / (4 n^2), 1 / (4 n^3))`, and `0 -> (0:1:0)`.
pub fn nu_inverse(f: &FieldElem, n: &FieldElem) -> Result<CubicPoint> {
    if n.is_zero() {
        return Ok(CubicPoint::Infinity);
    }
    Ok(CubicPoint::affine(
        f * &(&n.pow(2) * &FieldElem::int(4)).inv()?,
        (&n.pow(3) * &FieldElem::int(4)).inv()?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e12() -> FieldElem {
        FieldElem::int(-39032)
    }

    #[test]
    fn identity_and_node() {
        let e = e12();
        let cub = PlaneCubic::nodal(&e);
        assert_eq!(mu(&e, &CubicPoint::Infinity, MuConvention::Printed).unwrap(), FieldElem::one());
        let node = CubicPoint::affine(FieldElem::rat(-3, 2), FieldElem::zero());
        assert!(cub.contains(&node) && cub.is_singular(&node));
        assert_eq!(mu(&e, &node, MuConvention::Printed), Err(Error::NodePoint));
        let p = mu_inverse(&e, &FieldElem::int(2), MuConvention::Printed).unwrap();
        assert_eq!(cub.add(&p, &CubicPoint::Infinity).unwrap(), p);
        assert_eq!(cub.add(&node, &p), Err(Error::SingularPointInput));
    }

    #[test]
    fn mu_multiplicative() {
        let e = e12();
        let cub = PlaneCubic::nodal(&e);
        for conv in [MuConvention::Printed, MuConvention::Reciprocal] {
            for (a, b) in [(2, 3), (5, -7), (3, 3), (-1, 4), (2, 2)] {
                let (ma, mb) = (FieldElem::int(a), FieldElem::int(b));
                let pa = mu_inverse(&e, &ma, conv).unwrap();
                let pb = mu_inverse(&e, &mb, conv).unwrap();
                assert!(cub.contains(&pa));
                assert_eq!(mu(&e, &pa, conv).unwrap(), ma);
                let sum = cub.add(&pa, &pb).unwrap();
                assert!(cub.contains(&sum));
                assert_eq!(mu(&e, &sum, conv).unwrap(), &ma * &mb);
            }
        }
    }

    #[test]
    fn nu_additive() {
        let f = FieldElem::int(1924);
        let cub = PlaneCubic::cuspidal(&f);
        assert_eq!(nu(&f, &CubicPoint::Infinity).unwrap(), FieldElem::zero());
        let cusp = CubicPoint::affine(FieldElem::zero(), FieldElem::zero());
        assert_eq!(nu(&f, &cusp), Err(Error::CuspPoint));
        for (a, b) in [(1, 2), (3, -3), (5, 5), (-2, 7)] {
            let (na, nb) = (FieldElem::int(a), FieldElem::int(b));
            let pa = nu_inverse(&f, &na).unwrap();
            let pb = nu_inverse(&f, &nb).unwrap();
            assert!(cub.contains(&pa));
            let sum = cub.add(&pa, &pb).unwrap();
            assert_eq!(nu(&f, &sum).unwrap(), &na + &nb);
        }
    }
}
