//! The cubic pencil, its singular members and base points, the transform to the
//! Weierstrass model, and the section generators over the octahedral cover.

pub mod cubic;
pub mod relations;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::octahedral::{complement, enumerate_group, act, Catalog, Group};
use crate::poly::{konst, var, Poly, RationalFn, Var};
use crate::weierstrass::{moving_factor, weierstrass_equation, WeierstrassData, Params, CaseLabel};

/// Product followed by reduction modulo `V1^2 + V2^2 + V3^2`.
pub fn rmul(a: &Poly, b: &Poly) -> Poly {
    (a * b).reduce_conic()
}

fn x() -> Poly {
    var(Var::X)
}
fn y() -> Poly {
    var(Var::Y)
}
fn z() -> Poly {
    var(Var::Z)
}
fn s() -> Poly {
    var(Var::S)
}
fn t() -> Poly {
    var(Var::T)
}

/// The two generating cubics: the member is `T * c_t - S * c_s`.
#[derive(Debug, Clone)]
pub struct CubicPencil {
    /// `E^2 Y^2 Z - 4X^3 + 27 X Z^2 + 27 Z^3`.
    pub c_t: Poly,
    /// `F^3 Y^2 Z - 4X^3`.
    pub c_s: Poly,
    pub a: Poly,
    pub b: Poly,
}

impl CubicPencil {
    /// With `(a, b) = (E^2, F^3)` taken from the catalog.
    pub fn from_catalog(c: &Catalog) -> Self {
        Self::from_ab(c.e.pow(2), c.f.pow(3))
    }

    pub fn from_ab(a: Poly, b: Poly) -> Self {
        let y2z = &y().pow(2) * &z();
        let x3 = x().pow(3).scale(&FieldElem::int(4));
        let c_t = &(&(&a * &y2z) - &x3)
            + &(&(&x() * &z().pow(2)).scale(&FieldElem::int(27)) + &z().pow(3).scale(&FieldElem::int(27)));
        let c_s = &(&b * &y2z) - &x3;
        CubicPencil { c_t, c_s, a, b }
    }

    /// `T c_t - S c_s` with `S, T` symbolic.
    pub fn member(&self) -> Poly {
        &(&t() * &self.c_t) - &(&s() * &self.c_s)
    }

    pub fn member_at(&self, s0: &FieldElem, t0: &FieldElem) -> Poly {
        &self.c_t.scale(t0) - &self.c_s.scale(s0)
    }

    /// `(T-S)^2 (aT-bS)^3`, the factor relating the transformed Weierstrass
    /// equation to the member.
    pub fn transform_factor(&self) -> Poly {
        let l = moving_factor(&self.a, &self.b);
        &(&t() - &s()).pow(2) * &l.pow(3)
    }
}

/// `(X, Y, Z) -> ((T-S)(aT-bS) X, (T-S)(aT-bS)^2 Y, Z)` as polynomial substitution.
pub fn transform_substitution(a: &Poly, b: &Poly) -> Vec<(Var, Poly)> {
    let l = moving_factor(a, b);
    let ts = &t() - &s();
    vec![
        (Var::X, &(&ts * &l) * &x()),
        (Var::Y, &(&ts * &l.pow(2)) * &y()),
    ]
}

/// Weierstrass equation pulled back along the transform, and the member times the factor.
/// The two agree identically.
pub fn transform_check(a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
    let pencil = CubicPencil::from_ab(a.clone(), b.clone());
    let data = WeierstrassData::from_ab_poly(a.clone(), b.clone(), Params::Symbolic { case: CaseLabel::Generic })?;
    let pulled = data.equation().substitute(&transform_substitution(a, b));
    let expected = &pencil.transform_factor() * &pencil.member();
    Ok((pulled, expected))
}

/// A point of the plane, projective.
pub type PlanePoint = [FieldElem; 3];

/// Image of a plane point under the transform at a given `(S:T)` and moduli `(a:b)`.
pub fn to_weierstrass(pt: &PlanePoint, st: &[FieldElem; 2], a: &FieldElem, b: &FieldElem) -> PlanePoint {
    let (s0, t0) = (&st[0], &st[1]);
    let ts = t0 - s0;
    let l = &(a * t0) - &(b * s0);
    [
        &(&ts * &l) * &pt[0],
        &(&ts * &l.pow(2)) * &pt[1],
        pt[2].clone(),
    ]
}

#[derive(Debug, Clone, Serialize)]
pub struct SingularMember {
    pub label: &'static str,
    /// `(S:T)` of the member.
    pub position: [FieldElem; 2],
    pub cubic: Poly,
    /// The printed normal form.
    pub normal_form: Poly,
    /// `cubic = scale * normal_form`.
    pub scale: FieldElem,
}

/// The four singular members over a catalog. Identities hold exactly over
/// `(alpha, beta)` and modulo the conic over the formal catalog.
pub fn singular_members(c: &Catalog) -> Vec<SingularMember> {
    let p = CubicPencil::from_catalog(c);
    let e2 = c.e.pow(2);
    let f3 = c.f.pow(3);
    let v4 = c.v.pow(4);
    let y2z = &y().pow(2) * &z();
    let nodal = &(&e2 * &y2z) - &(&(&x() - &z().scale(&FieldElem::int(3))) * &(&x().scale(&FieldElem::int(2)) + &z().scale(&FieldElem::int(3))).pow(2));
    let cusp = &(&f3 * &y2z) - &x().pow(3).scale(&FieldElem::int(4));
    let conic_line = &z() * &(&(&(&v4 * &y().pow(2)) - &(&x() * &z())) - &z().pow(2));
    let lines = &(&(&v4 * &x().pow(3)).scale(&FieldElem::int(4)) - &(&f3 * &(&x() * &z().pow(2)))) - &(&f3 * &z().pow(3));
    let one = FieldElem::one();
    let zero = FieldElem::zero();
    vec![
        SingularMember {
            label: "I1",
            position: [zero.clone(), one.clone()],
            cubic: p.member_at(&zero, &one),
            normal_form: nodal,
            scale: one.clone(),
        },
        SingularMember {
            label: "II",
            position: [one.clone(), zero.clone()],
            cubic: p.member_at(&one, &zero),
            normal_form: cusp,
            scale: -&one,
        },
        SingularMember {
            label: "III",
            position: [one.clone(), one.clone()],
            cubic: p.member_at(&one, &one),
            normal_form: conic_line,
            scale: FieldElem::int(-27),
        },
        SingularMember {
            label: "I0*",
            // (E^2 : F^3) is symbolic; the member is F^3 c_t - E^2 c_s
            position: [zero.clone(), zero],
            cubic: &(&f3 * &p.c_t) - &(&e2 * &p.c_s),
            normal_form: lines,
            scale: FieldElem::int(-27),
        },
    ]
}

/// `prod_k (4 (ViVj)^2 X - F Z)`, the three concurrent lines.
pub fn line_product(c: &Catalog) -> Poly {
    let mut acc = Poly::one();
    for k in 0..3 {
        let w2 = c.vv(k).pow(2);
        let line = &(&w2 * &x()).scale(&FieldElem::int(4)) - &(&c.f * &z());
        acc = &acc * &line;
    }
    acc
}

/// Whether `p` vanishes with all first partials at the affine point `(x0, y0, 1)`.
pub fn is_singular_at(p: &Poly, x0: &FieldElem, y0: &FieldElem) -> Result<bool> {
    let at = [
        (Var::X, x0.clone()),
        (Var::Y, y0.clone()),
        (Var::Z, FieldElem::one()),
    ];
    for q in [p.clone(), p.derivative(Var::X), p.derivative(Var::Y), p.derivative(Var::Z)] {
        let v = q.specialize(&at);
        if !v.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Projective coordinates `(F w : ±1 : 4 w^3)` of the base point of pair `k`,
/// i.e. `(F/(4w^2), ±1/(4w^3))` with `w = ViVj`.
pub fn base_point_projective(c: &Catalog, k: usize, sign: i64) -> [Poly; 3] {
    let w = c.vv(k);
    [&c.f * &w, konst(sign), w.pow(3).scale(&FieldElem::int(4))]
}

/// `(X/Z, Y/Z)` of the base point as rational functions.
pub fn base_point(c: &Catalog, k: usize, sign: i64) -> Result<(RationalFn, RationalFn)> {
    let w = c.vv(k);
    Ok((
        RationalFn::new(c.f.clone(), w.pow(2).scale(&FieldElem::int(4)))?,
        RationalFn::new(konst(sign), w.pow(3).scale(&FieldElem::int(4)))?,
    ))
}

pub fn plug_point(p: &Poly, pt: &[Poly; 3]) -> Poly {
    p.substitute(&[
        (Var::X, pt[0].clone()),
        (Var::Y, pt[1].clone()),
        (Var::Z, pt[2].clone()),
    ])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NumericBasePoint {
    pub pair: [usize; 2],
    pub sign: i8,
    pub x: FieldElem,
    pub y: FieldElem,
}

/// The six affine base points at a parameter value, plus the triple point at `(0:1:0)`.
pub fn base_points(alpha: &FieldElem, beta: &FieldElem) -> Result<Vec<NumericBasePoint>> {
    if alpha.is_zero() && beta.is_zero() {
        return Err(Error::DegenerateParameter);
    }
    let c = Catalog::alpha_beta();
    let at = [(Var::Alpha, alpha.clone()), (Var::Beta, beta.clone())];
    let f = c.f.eval_at(&at)?;
    let mut out = Vec::new();
    for k in [2usize, 1, 0] {
        let w = c.vv(k).eval_at(&at)?;
        if w.is_zero() {
            return Err(Error::VertexDegeneration);
        }
        let (i, j) = complement(k);
        let x = &f * &(&w.pow(2) * &FieldElem::int(4)).inv()?;
        let y = (&w.pow(3) * &FieldElem::int(4)).inv()?;
        for sign in [1i8, -1] {
            out.push(NumericBasePoint {
                pair: [i + 1, j + 1],
                sign,
                x: x.clone(),
                y: &y * &FieldElem::int(sign as i64),
            });
        }
    }
    Ok(out)
}

/// The member restricted to `Z = 0` is `-4 (T-S) X^3`: the line `Z = 0` meets
/// every member only at `(0:1:0)`, with multiplicity three.
pub fn triple_contact_holds(p: &CubicPencil) -> bool {
    let restricted = p.member().substitute(&[(Var::Z, Poly::zero())]);
    let expected = (&(&t() - &s()) * &x().pow(3)).scale(&FieldElem::int(-4));
    // and (0:1:0) is a smooth point: dM/dZ there is (aT - bS)
    let dz = p.member().derivative(Var::Z).substitute(&[
        (Var::X, Poly::zero()),
        (Var::Y, Poly::one()),
        (Var::Z, Poly::zero()),
    ]);
    restricted == expected && dz == moving_factor(&p.a, &p.b)
}

/// `sign` and the pair `(i, j)`, `i < j`, 1-based, choose one of the six generators.
#[derive(Debug, Clone)]
pub struct SectionGenerator {
    pub pair: (usize, usize),
    pub sign: i64,
    /// `X~/Z~` and `Y~/Z~`.
    pub x: RationalFn,
    pub y: RationalFn,
}

/// `X~ = F (T-S)(E^2 T - F^3 S) / (4 (ViVj)^2)`, `Y~ = ±(T-S)(E^2 T - F^3 S)^2 / (4 (ViVj)^3)`.
pub fn section_generator(c: &Catalog, i: usize, j: usize, sign: i64) -> Result<SectionGenerator> {
    let k = crate::octahedral::pair_to_k(i, j)?;
    let w = c.vv(k);
    let l = moving_factor(&c.e.pow(2), &c.f.pow(3));
    let ts = &t() - &s();
    let x = RationalFn::new(
        &(&c.f * &ts) * &l,
        w.pow(2).scale(&FieldElem::int(4)),
    )?;
    let y = RationalFn::new(
        (&ts * &l.pow(2)).scale(&FieldElem::int(sign)),
        w.pow(3).scale(&FieldElem::int(4)),
    )?;
    Ok(SectionGenerator {
        pair: (i, j),
        sign,
        x,
        y,
    })
}

/// `Y~^2 Z~ - 4X~^3 + g2 X~ Z~^2 + g3 Z~^3` at the generator, in projective
/// coordinates `(F w (T-S) L : ±(T-S) L^2 : 4 w^3)`, reduced modulo the conic
/// after every product when `reduce` is set.
pub fn generator_residual(c: &Catalog, i: usize, j: usize, sign: i64, reduce: bool) -> Result<Poly> {
    let k = crate::octahedral::pair_to_k(i, j)?;
    let mul = |a: &Poly, b: &Poly| if reduce { rmul(a, b) } else { a * b };
    let w = c.vv(k);
    let e2 = mul(&c.e, &c.e);
    let f3 = mul(&mul(&c.f, &c.f), &c.f);
    let l = moving_factor(&e2, &f3);
    let ts = &t() - &s();
    let tsl = mul(&ts, &l);
    let xx = mul(&mul(&c.f, &w), &tsl);
    let yy = mul(&tsl, &l).scale(&FieldElem::int(sign));
    let zz = mul(&w, &mul(&w, &w)).scale(&FieldElem::int(4));
    let data = WeierstrassData::from_ab_poly(e2, f3, Params::Symbolic { case: CaseLabel::Generic })?;
    let (g2, g3) = if reduce {
        (data.g2.reduce_conic(), data.g3.reduce_conic())
    } else {
        (data.g2, data.g3)
    };
    let z2 = mul(&zz, &zz);
    let y2z = mul(&mul(&yy, &yy), &zz);
    let x3 = mul(&mul(&xx, &xx), &xx).scale(&FieldElem::int(4));
    let g2xz2 = mul(&mul(&g2, &xx), &z2);
    let g3z3 = mul(&g3, &mul(&z2, &zz));
    Ok(&(&(&y2z - &x3) + &g2xz2) + &g3z3)
}

/// Every generator, both signs, over the formal catalog: residuals after elimination of `V3^2`.
pub fn theorem_residuals() -> Result<Vec<((usize, usize), i64, Poly)>> {
    let c = Catalog::formal();
    let mut out = Vec::new();
    for (i, j) in [(1, 2), (1, 3), (2, 3)] {
        for sign in [1, -1] {
            out.push(((i, j), sign, generator_residual(c, i, j, sign, true)?));
        }
    }
    Ok(out)
}

/// `weierstrass_equation` on the symbolic cover model, for callers that want it directly.
pub fn cover_equation() -> Poly {
    let c = Catalog::alpha_beta();
    let data = WeierstrassData::from_ab_poly(c.e.pow(2), c.f.pow(3), Params::Symbolic { case: CaseLabel::Generic })
        .expect("nonzero forms");
    weierstrass_equation(&data.g2, &data.g3)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectionPoint {
    pub pair: [usize; 2],
    pub sign: i8,
    pub position: [FieldElem; 2],
    /// `(X~ : Y~ : Z~)`; `(0 : 1 : 0)` is never produced, the affine form has `Z~ = 1`.
    pub point: [FieldElem; 3],
    pub on_curve: bool,
}

/// Evaluates a generator at numeric `(alpha, beta)` and `(S:T)`.
pub fn eval_section(
    alpha: &FieldElem,
    beta: &FieldElem,
    st: &[FieldElem; 2],
    i: usize,
    j: usize,
    sign: i64,
) -> Result<SectionPoint> {
    if alpha.is_zero() && beta.is_zero() {
        return Err(Error::DegenerateParameter);
    }
    if st[0].is_zero() && st[1].is_zero() {
        return Err(Error::ZeroPoint);
    }
    let c = Catalog::alpha_beta();
    let g = section_generator(c, i, j, sign)?;
    let at = [
        (Var::Alpha, alpha.clone()),
        (Var::Beta, beta.clone()),
        (Var::S, st[0].clone()),
        (Var::T, st[1].clone()),
    ];
    let w = c.vv(crate::octahedral::pair_to_k(i, j)?).eval_at(&at)?;
    if w.is_zero() {
        return Err(Error::VertexDegeneration);
    }
    let xv = g.x.eval_at(&at)?;
    let yv = g.y.eval_at(&at)?;
    let data = crate::weierstrass::cover_coefficients(alpha, beta)?;
    let on = data
        .equation()
        .eval_at(&[
            (Var::X, xv.clone()),
            (Var::Y, yv.clone()),
            (Var::Z, FieldElem::one()),
            (Var::S, st[0].clone()),
            (Var::T, st[1].clone()),
        ])?
        .is_zero();
    Ok(SectionPoint {
        pair: [i, j],
        sign: sign as i8,
        position: st.clone(),
        point: [xv, yv, FieldElem::one()],
        on_curve: on,
    })
}

/// For every element of the binary octahedral group, the set `{(ViVj)^2}` is
/// carried to itself, so the six base points are permuted.
pub fn base_points_permuted() -> bool {
    let c = Catalog::alpha_beta();
    let squares: Vec<Poly> = (0..3).map(|k| c.vv(k).pow(2)).collect();
    enumerate_group(Group::Octahedral).iter().all(|g| {
        squares
            .iter()
            .all(|w2| squares.contains(&act(g, w2)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transform_identity() {
        let c = Catalog::alpha_beta();
        let (pulled, expected) = transform_check(&konst(1), &konst(2)).unwrap();
        assert_eq!(pulled, expected);
        let (pulled, expected) = transform_check(&c.e.pow(2), &c.f.pow(3)).unwrap();
        assert_eq!(pulled, expected);
    }

    #[test]
    fn members_and_lines() {
        let c = Catalog::alpha_beta();
        for m in singular_members(c) {
            assert_eq!(m.cubic, m.normal_form.scale(&m.scale), "{}", m.label);
        }
        let f = Catalog::formal();
        for m in singular_members(f) {
            assert!((&m.cubic - &m.normal_form.scale(&m.scale)).reduce_conic().is_zero(), "{}", m.label);
        }
        let lines = &line_product(f) - &singular_members(f)[3].normal_form;
        assert!(lines.reduce_conic().is_zero());
        assert_eq!(line_product(c), singular_members(c)[3].normal_form);
    }

    #[test]
    fn node_and_cusp() {
        let c = Catalog::alpha_beta();
        let ms = singular_members(c);
        let at = [(Var::Alpha, FieldElem::int(1)), (Var::Beta, FieldElem::int(2))];
        let nodal = ms[0].cubic.specialize(&at);
        assert!(is_singular_at(&nodal, &FieldElem::rat(-3, 2), &FieldElem::zero()).unwrap());
        let cusp = ms[1].cubic.specialize(&at);
        assert!(is_singular_at(&cusp, &FieldElem::zero(), &FieldElem::zero()).unwrap());
    }

    #[test]
    fn base_points_lie_on_both_cubics() {
        for c in [Catalog::alpha_beta(), Catalog::formal()] {
            let p = CubicPencil::from_catalog(c);
            for k in 0..3 {
                for sign in [1, -1] {
                    let pt = base_point_projective(c, k, sign);
                    assert!(plug_point(&p.c_s, &pt).reduce_conic().is_zero());
                    assert!(plug_point(&p.c_t, &pt).reduce_conic().is_zero());
                }
            }
        }
        let pts = base_points(&FieldElem::int(1), &FieldElem::int(2)).unwrap();
        assert_eq!(pts.len(), 6);
        for a in 0..6 {
            for b in a + 1..6 {
                assert!(pts[a].x != pts[b].x || pts[a].y != pts[b].y);
            }
        }
        assert_eq!(
            base_points(&FieldElem::int(1), &FieldElem::zero()),
            Err(Error::VertexDegeneration)
        );
    }

    #[test]
    fn triple_contact_and_permutation() {
        assert!(triple_contact_holds(&CubicPencil::from_catalog(Catalog::alpha_beta())));
        assert!(base_points_permuted());
    }

    #[test]
    fn one_generator_alpha_beta() {
        let r = generator_residual(Catalog::alpha_beta(), 1, 2, 1, false).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn eval_section_point() {
        let st = [FieldElem::int(3), FieldElem::int(5)];
        let p = eval_section(&FieldElem::int(1), &FieldElem::int(2), &st, 1, 2, 1).unwrap();
        assert!(p.on_curve);
        let st = [FieldElem::int(1), FieldElem::int(1)];
        let p = eval_section(&FieldElem::int(1), &FieldElem::int(2), &st, 2, 3, -1).unwrap();
        assert!(p.point[0].is_zero() && p.point[1].is_zero());
    }
}
