//! Weierstrass data over the base `(S:T)`, the Kodaira classifier and the
//! singular-fiber configurations of the degree-one family.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::octahedral::Catalog;
use crate::poly::{konst, var, Poly, RationalFn, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FiberType {
    I(u32),
    IStar(u32),
    II,
    III,
    IV,
    IIStar,
    IIIStar,
    IVStar,
}

impl fmt::Display for FiberType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberType::I(n) => write!(f, "I{n}"),
            FiberType::IStar(n) => write!(f, "I{n}*"),
            FiberType::II => f.write_str("II"),
            FiberType::III => f.write_str("III"),
            FiberType::IV => f.write_str("IV"),
            FiberType::IIStar => f.write_str("II*"),
            FiberType::IIIStar => f.write_str("III*"),
            FiberType::IVStar => f.write_str("IV*"),
        }
    }
}

impl Serialize for FiberType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Where `J` sends the fiber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JClass {
    Zero,
    One,
    Infinity,
    Other(FieldElem),
}

impl JClass {
    pub fn from_value(j: FieldElem) -> Self {
        if j.is_zero() {
            JClass::Zero
        } else if j.is_one() {
            JClass::One
        } else {
            JClass::Other(j)
        }
    }

    pub fn is_other(&self) -> bool {
        matches!(self, JClass::Other(_))
    }
}

impl fmt::Display for JClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JClass::Zero => f.write_str("0"),
            JClass::One => f.write_str("1"),
            JClass::Infinity => f.write_str("inf"),
            JClass::Other(v) => write!(f, "{v}"),
        }
    }
}

impl Serialize for JClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Ramification index of `J` at the fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ramification {
    Exact(u32),
    AtLeast(u32),
}

impl fmt::Display for Ramification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ramification::Exact(n) => write!(f, "{n}"),
            Ramification::AtLeast(n) => write!(f, ">={n}"),
        }
    }
}

impl Serialize for Ramification {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Ramification::Exact(n) => s.serialize_u32(*n),
            Ramification::AtLeast(_) => s.serialize_str(&self.to_string()),
        }
    }
}

/// Kodaira's table. With `degree_one` the open rows report `e_p = 1` exactly.
pub fn classify_fiber(
    orders: (u32, u32, u32),
    j: &JClass,
    degree_one: bool,
) -> Result<(FiberType, Ramification)> {
    use FiberType::*;
    use JClass::*;
    use Ramification::Exact;
    let (v2, v3, vd) = orders;
    let open = if degree_one {
        Exact(1)
    } else {
        Ramification::AtLeast(1)
    };
    let hit = match (v2, v3, vd, j) {
        (0, 0, 0, Other(_)) => Some((I(0), open)),
        (v2, 0, 0, Zero) if v2 >= 1 => Some((I(0), Exact(3 * v2))),
        (0, v3, 0, One) if v3 >= 1 => Some((I(0), Exact(2 * v3))),
        (0, 0, n, Infinity) if n >= 1 => Some((I(n), Exact(n))),
        (2, 3, 6, Other(_)) => Some((IStar(0), open)),
        (v2, 3, 6, Zero) if v2 >= 3 => Some((IStar(0), Exact(3 * v2 - 6))),
        (2, v3, 6, One) if v3 >= 4 => Some((IStar(0), Exact(2 * v3 - 6))),
        (2, 3, d, Infinity) if d >= 7 => Some((IStar(d - 6), Exact(d - 6))),
        (v2, 1, 2, Zero) if v2 >= 1 => Some((II, Exact(3 * v2 - 2))),
        (1, v3, 3, One) if v3 >= 2 => Some((III, Exact(2 * v3 - 3))),
        (v2, 2, 4, Zero) if v2 >= 2 => Some((IV, Exact(3 * v2 - 4))),
        (v2, 4, 8, Zero) if v2 >= 3 => Some((IVStar, Exact(3 * v2 - 8))),
        (3, v3, 9, One) if v3 >= 5 => Some((IIIStar, Exact(2 * v3 - 9))),
        (v2, 5, 10, Zero) if v2 >= 4 => Some((IIStar, Exact(3 * v2 - 10))),
        _ => None,
    };
    hit.ok_or_else(|| Error::UnclassifiableTriple {
        v2,
        v3,
        vd,
        j: j.to_string(),
    })
}

/// The four configurations of the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseLabel {
    /// `E, F, V` all nonzero: `[I1, II, III, I0*]`.
    Generic,
    /// `E = 0`: `[I1*, II, III]`.
    EZero,
    /// `F = 0`: `[I1, IV*, III]`.
    FZero,
    /// `V = 0`: `[I1, II, III*]`.
    VZero,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 4] = [
        CaseLabel::Generic,
        CaseLabel::EZero,
        CaseLabel::FZero,
        CaseLabel::VZero,
    ];

    /// Case of the moduli point `(a:b)`.
    pub fn of_ab(a: &FieldElem, b: &FieldElem) -> CaseLabel {
        if a.is_zero() {
            CaseLabel::EZero
        } else if b.is_zero() {
            CaseLabel::FZero
        } else if a == b {
            CaseLabel::VZero
        } else {
            CaseLabel::Generic
        }
    }

    pub fn expected_types(self) -> Vec<FiberType> {
        use FiberType::*;
        match self {
            CaseLabel::Generic => vec![I(1), II, III, IStar(0)],
            CaseLabel::EZero => vec![IStar(1), II, III],
            CaseLabel::FZero => vec![I(1), IVStar, III],
            CaseLabel::VZero => vec![I(1), II, IIIStar],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Params {
    Moduli { a: FieldElem, b: FieldElem },
    Cover {
        alpha: FieldElem,
        beta: FieldElem,
        a: FieldElem,
        b: FieldElem,
    },
    Symbolic { case: CaseLabel },
}

/// `g2`, `g3` as binary forms in `(S, T)`, possibly with coefficients in `alpha, beta`.
#[derive(Debug, Clone)]
pub struct WeierstrassData {
    pub g2: Poly,
    pub g3: Poly,
    pub disc: Poly,
    /// `a` and `b` of the factor `aT - bS`.
    pub a: Poly,
    pub b: Poly,
    pub params: Params,
}

fn s() -> Poly {
    var(Var::S)
}
fn t() -> Poly {
    var(Var::T)
}

/// `aT - bS`.
pub fn moving_factor(a: &Poly, b: &Poly) -> Poly {
    &(a * &t()) - &(b * &s())
}

impl WeierstrassData {
    /// `g2 = 27 T (T-S) (aT-bS)^2`, `g3 = 27 T (T-S)^2 (aT-bS)^3` for polynomial `a, b`.
    pub fn from_ab_poly(a: Poly, b: Poly, params: Params) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::DegenerateParameter);
        }
        let l = moving_factor(&a, &b);
        let ts = &t() - &s();
        let g2 = (&(&t() * &ts) * &l.pow(2)).scale(&FieldElem::int(27));
        let g3 = (&(&t() * &ts.pow(2)) * &l.pow(3)).scale(&FieldElem::int(27));
        let disc = &g2.pow(3) - &g3.pow(2).scale(&FieldElem::int(27));
        Ok(WeierstrassData {
            g2,
            g3,
            disc,
            a,
            b,
            params,
        })
    }

    /// The claimed factorization `27^3 S T^2 (T-S)^3 (aT-bS)^6`.
    pub fn disc_factored(&self) -> Poly {
        let l = moving_factor(&self.a, &self.b);
        (&(&s() * &t().pow(2)) * &(&t() - &s()).pow(3))
            * l.pow(6)
            * konst(27 * 27 * 27)
    }

    /// `Y^2 Z - 4X^3 + g2 X Z^2 + g3 Z^3`.
    pub fn equation(&self) -> Poly {
        weierstrass_equation(&self.g2, &self.g3)
    }

    /// Applies the twist `X -> kX, Y -> k sqrt(k) Y` and returns the substituted equation.
    pub fn twisted_equation(&self, k: &FieldElem, sqrt_k: &FieldElem) -> Poly {
        self.equation().substitute(&[
            (Var::X, var(Var::X).scale(k)),
            (Var::Y, var(Var::Y).scale(&(k * sqrt_k))),
        ])
    }
}

pub fn weierstrass_equation(g2: &Poly, g3: &Poly) -> Poly {
    let x = var(Var::X);
    let y = var(Var::Y);
    let z = var(Var::Z);
    let zz = z.pow(2);
    &(&(&(&y.pow(2) * &z) - &x.pow(3).scale(&FieldElem::int(4))) + &(&(g2 * &x) * &zz))
        + &(g3 * &(&zz * &z))
}

pub fn family_coefficients(a: &FieldElem, b: &FieldElem) -> Result<WeierstrassData> {
    WeierstrassData::from_ab_poly(
        Poly::constant(a.clone()),
        Poly::constant(b.clone()),
        Params::Moduli {
            a: a.clone(),
            b: b.clone(),
        },
    )
}

/// `(a, b) = (E^2, F^3)` evaluated at `(alpha, beta)`.
pub fn cover_ab(alpha: &FieldElem, beta: &FieldElem) -> Result<(FieldElem, FieldElem)> {
    if alpha.is_zero() && beta.is_zero() {
        return Err(Error::DegenerateParameter);
    }
    let (_, e, f) = crate::octahedral::eval_vef(alpha, beta)?;
    Ok((e.pow(2), f.pow(3)))
}

pub fn cover_coefficients(alpha: &FieldElem, beta: &FieldElem) -> Result<WeierstrassData> {
    let (a, b) = cover_ab(alpha, beta)?;
    WeierstrassData::from_ab_poly(
        Poly::constant(a.clone()),
        Poly::constant(b.clone()),
        Params::Cover {
            alpha: alpha.clone(),
            beta: beta.clone(),
            a,
            b,
        },
    )
}

/// `g2 = 27 T (T-S)(E^2 T - F^3 S)^2` etc. with `E, F` kept as forms in `alpha, beta`.
pub fn cover_symbolic() -> WeierstrassData {
    let c = Catalog::alpha_beta();
    WeierstrassData::from_ab_poly(
        c.e.pow(2),
        c.f.pow(3),
        Params::Symbolic {
            case: CaseLabel::Generic,
        },
    )
    .expect("E^2 and F^3 are nonzero forms")
}

/// The confluent cases with `(a, b)` specialized symbolically: `E = 0` gives
/// `(0, F^3)`, `F = 0` gives `(-27 V^4, 0)`, `V = 0` gives `(F^3, F^3)`.
pub fn confluent_symbolic(case: CaseLabel) -> WeierstrassData {
    let c = Catalog::alpha_beta();
    let f3 = c.f.pow(3);
    let (a, b) = match case {
        CaseLabel::Generic => (c.e.pow(2), f3),
        CaseLabel::EZero => (Poly::zero(), f3),
        CaseLabel::FZero => (c.v.pow(4).scale(&FieldElem::int(-27)), Poly::zero()),
        CaseLabel::VZero => (f3.clone(), f3),
    };
    WeierstrassData::from_ab_poly(a, b, Params::Symbolic { case })
        .expect("nonzero specialization")
}

pub fn j_function(data: &WeierstrassData) -> Result<RationalFn> {
    if data.disc.is_zero() {
        return Err(Error::ZeroDiscriminant);
    }
    RationalFn::new(data.g2.pow(3), data.disc.clone())
}

/// `j = 1728 J`.
pub fn j_function_1728(data: &WeierstrassData) -> Result<RationalFn> {
    let j = j_function(data)?;
    Ok(RationalFn {
        num: j.num.scale(&FieldElem::int(1728)),
        den: j.den,
    })
}

/// `J = T/S` by cross-multiplication.
pub fn j_is_t_over_s(data: &WeierstrassData) -> Result<bool> {
    let t_over_s = RationalFn::new(t(), s())?;
    Ok(j_function(data)?.equals(&t_over_s))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberRecord {
    /// `(S : T)`, so `J = T/S` here.
    pub position: [FieldElem; 2],
    #[serde(rename = "type")]
    pub fiber_type: FiberType,
    pub orders: [u32; 3],
    pub j_class: JClass,
    pub e_p: Ramification,
}

/// Orders of `g2`, `g3`, `disc` at `(s0:t0)`.
pub fn orders_at(data: &WeierstrassData, p: &[FieldElem; 2]) -> Result<[u32; 3]> {
    Ok([
        data.g2.vanishing_order(&p[0], &p[1])?,
        data.g3.vanishing_order(&p[0], &p[1])?,
        data.disc.vanishing_order(&p[0], &p[1])?,
    ])
}

/// The `J`-class at a point from the orders, evaluating `J` when it is finite and nonzero.
pub fn j_class_at(data: &WeierstrassData, p: &[FieldElem; 2], orders: &[u32; 3]) -> Result<JClass> {
    let (v2, vd) = (orders[0] as i64, orders[2] as i64);
    match (3 * v2).cmp(&vd) {
        std::cmp::Ordering::Greater => Ok(JClass::Zero),
        std::cmp::Ordering::Less => Ok(JClass::Infinity),
        std::cmp::Ordering::Equal => {
            let mut num = data.g2.pow(3);
            let mut den = data.disc.clone();
            for _ in 0..vd {
                num = num.div_linear_st(&p[0], &p[1])?;
                den = den.div_linear_st(&p[0], &p[1])?;
            }
            let at = [(Var::S, p[0].clone()), (Var::T, p[1].clone())];
            let n = num.specialize(&at);
            let d = den.specialize(&at);
            if n.is_zero() {
                return Ok(JClass::Zero);
            }
            if n == d {
                return Ok(JClass::One);
            }
            let n = n.to_constant().ok_or(Error::NotConstant)?;
            let d = d.to_constant().ok_or(Error::NotConstant)?;
            Ok(JClass::from_value(&n * &d.inv()?))
        }
    }
}

/// Projective equality of two points of the line.
pub fn same_point(p: &[FieldElem; 2], q: &[FieldElem; 2]) -> bool {
    &p[0] * &q[1] == &p[1] * &q[0]
}

/// Normalizes `(s:t)` to `(1:t/s)` when `s != 0`, else `(0:1)`.
pub fn normalize_point(p: &[FieldElem; 2]) -> Result<[FieldElem; 2]> {
    if p[0].is_zero() {
        if p[1].is_zero() {
            return Err(Error::ZeroPoint);
        }
        Ok([FieldElem::zero(), FieldElem::one()])
    } else {
        Ok([FieldElem::one(), &p[1] * &p[0].inv()?])
    }
}

fn records_at(data: &WeierstrassData, positions: &[[FieldElem; 2]]) -> Result<Vec<FiberRecord>> {
    let mut out = Vec::new();
    for p in positions {
        let orders = orders_at(data, p)?;
        let j = j_class_at(data, p, &orders)?;
        let (ft, e) = classify_fiber((orders[0], orders[1], orders[2]), &j, true)?;
        out.push(FiberRecord {
            position: p.clone(),
            fiber_type: ft,
            orders,
            j_class: j,
            e_p: e,
        });
    }
    Ok(out)
}

/// Singular fibers of the member with moduli `(a:b)`, ordered `(0:1), (1:0), (1:1), (1:J0)`.
/// The fourth point is dropped when it merges with one of the others.
pub fn configuration_ab(a: &FieldElem, b: &FieldElem) -> Result<(WeierstrassData, Vec<FiberRecord>)> {
    let data = family_coefficients(a, b)?;
    let recs = configuration_of(&data, a, b)?;
    Ok((data, recs))
}

fn configuration_of(data: &WeierstrassData, a: &FieldElem, b: &FieldElem) -> Result<Vec<FiberRecord>> {
    let fixed = [
        [FieldElem::zero(), FieldElem::one()],
        [FieldElem::one(), FieldElem::zero()],
        [FieldElem::one(), FieldElem::one()],
    ];
    let moving = normalize_point(&[a.clone(), b.clone()])?;
    let mut positions = fixed.to_vec();
    if !positions.iter().any(|p| same_point(p, &moving)) {
        positions.push(moving);
    }
    records_at(data, &positions)
}

pub fn fiber_configuration(alpha: &FieldElem, beta: &FieldElem) -> Result<(WeierstrassData, Vec<FiberRecord>)> {
    let data = cover_coefficients(alpha, beta)?;
    let (a, b) = match &data.params {
        Params::Cover { a, b, .. } => (a.clone(), b.clone()),
        _ => unreachable!(),
    };
    let recs = configuration_of(&data, &a, &b)?;
    Ok((data, recs))
}

/// The fibers at `(0:1)`, `(1:0)`, `(1:1)` classified over `K[alpha, beta]`.
/// In the confluent cases these are all the singular fibers; in the generic case
/// the moving `I0*` fiber sits at the symbolic point `(E^2 : F^3)` and is not listed.
pub fn symbolic_configuration(case: CaseLabel) -> Result<Vec<FiberRecord>> {
    let data = confluent_symbolic(case);
    let positions = [
        [FieldElem::zero(), FieldElem::one()],
        [FieldElem::one(), FieldElem::zero()],
        [FieldElem::one(), FieldElem::one()],
    ];
    records_at(&data, &positions)
}

/// Minimality at every listed fiber: `v(g2) < 4` or `v(g3) < 6`.
pub fn is_minimal(records: &[FiberRecord]) -> bool {
    records.iter().all(|r| r.orders[0] < 4 || r.orders[1] < 6)
}

pub fn euler_sum(records: &[FiberRecord]) -> u32 {
    records.iter().map(|r| r.orders[2]).sum()
}

/// `J0 = b/a`.
pub fn j0(a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
    Ok(b * &a.inv()?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistReport {
    pub g2_scaled: bool,
    pub g3_scaled: bool,
    pub equation_scaled: bool,
}

impl TwistReport {
    pub fn passed(&self) -> bool {
        self.g2_scaled && self.g3_scaled && self.equation_scaled
    }
}

/// Checks `g2(ka,kb) = k^2 g2(a,b)`, `g3(ka,kb) = k^3 g3(a,b)` and that the twist
/// carries one equation to `k^3` times the other.
pub fn verify_twist(a: &FieldElem, b: &FieldElem, k: &FieldElem) -> Result<TwistReport> {
    if k.is_zero() {
        return Err(Error::DegenerateParameter);
    }
    let sqrt_k = k
        .sqrt()
        .ok_or_else(|| Error::NoSquareRootInK(k.to_string()))?;
    let base = family_coefficients(a, b)?;
    let scaled = family_coefficients(&(k * a), &(k * b))?;
    let k2 = k.pow(2);
    let k3 = k.pow(3);
    Ok(TwistReport {
        g2_scaled: scaled.g2 == base.g2.scale(&k2),
        g3_scaled: scaled.g3 == base.g3.scale(&k3),
        equation_scaled: scaled.twisted_equation(k, &sqrt_k) == base.equation().scale(&k3),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use FiberType::*;

    fn fe(n: i64) -> FieldElem {
        FieldElem::int(n)
    }

    #[test]
    fn table_rows() {
        let other = JClass::Other(fe(5));
        assert_eq!(classify_fiber((0, 0, 0), &other, false).unwrap(), (I(0), Ramification::AtLeast(1)));
        assert_eq!(classify_fiber((2, 3, 6), &other, false).unwrap().0, IStar(0));
        assert_eq!(classify_fiber((0, 0, 5), &JClass::Infinity, false).unwrap(), (I(5), Ramification::Exact(5)));
        assert_eq!(classify_fiber((4, 5, 10), &JClass::Zero, false).unwrap().0, IIStar);
        assert_eq!(classify_fiber((7, 5, 10), &JClass::Zero, false).unwrap().0, IIStar);
        assert!(classify_fiber((4, 6, 12), &JClass::Zero, false).is_err());
        assert!(classify_fiber((0, 0, 0), &JClass::Infinity, false).is_err());
    }

    #[test]
    fn family_disc_factorization_and_j() {
        let d = family_coefficients(&fe(1), &fe(2)).unwrap();
        assert_eq!(d.disc, d.disc_factored());
        assert!(j_is_t_over_s(&d).unwrap());
        assert_eq!(
            d.disc.vanishing_order(&fe(0), &fe(1)).unwrap(),
            1
        );
    }

    #[test]
    fn generic_configuration() {
        let (_, recs) = configuration_ab(&fe(1), &fe(2)).unwrap();
        let types: Vec<_> = recs.iter().map(|r| r.fiber_type).collect();
        assert_eq!(types, vec![I(1), II, III, IStar(0)]);
        assert_eq!(euler_sum(&recs), 12);
        assert_eq!(recs[3].j_class, JClass::Other(fe(2)));
    }

    #[test]
    fn cover_points() {
        let (a, b) = cover_ab(&fe(1), &fe(2)).unwrap();
        assert_eq!(a, fe(1523497024));
        assert_eq!(b, fe(7122217024));
        let (_, recs) = fiber_configuration(&fe(1), &fe(0)).unwrap();
        let types: Vec<_> = recs.iter().map(|r| r.fiber_type).collect();
        assert_eq!(types, vec![I(1), II, IIIStar]);
        assert_eq!(
            fiber_configuration(&fe(0), &fe(0)).unwrap_err(),
            Error::DegenerateParameter
        );
    }

    #[test]
    fn symbolic_confluent_cases() {
        for case in [CaseLabel::EZero, CaseLabel::FZero, CaseLabel::VZero] {
            let recs = symbolic_configuration(case).unwrap();
            let types: Vec<_> = recs.iter().map(|r| r.fiber_type).collect();
            assert_eq!(types, case.expected_types(), "{case:?}");
            assert_eq!(euler_sum(&recs), 12);
        }
        let recs = symbolic_configuration(CaseLabel::Generic).unwrap();
        assert_eq!(euler_sum(&recs), 6);
    }

    #[test]
    fn twists() {
        assert!(verify_twist(&fe(1), &fe(2), &fe(1)).unwrap().passed());
        assert!(verify_twist(&fe(1), &fe(2), &fe(4)).unwrap().passed());
        assert!(verify_twist(&fe(1), &fe(0), &fe(2)).unwrap().passed());
        assert!(matches!(
            verify_twist(&fe(1), &fe(2), &fe(3)),
            Err(Error::NoSquareRootInK(_))
        ));
    }
}
