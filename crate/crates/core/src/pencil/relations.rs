//! Algebraic relations among the fiber-group generators, the moduli and the
//! cross ratios. Every check returns its residual, zero when the identity holds.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::octahedral::{complement, Catalog};
use crate::poly::{konst, var, Poly, RationalFn, Var};

use super::cubic::{mu, CubicPoint, MuConvention};

#[derive(Debug, Clone, Serialize)]
pub struct Identity {
    pub name: String,
    /// Zero iff the identity holds.
    pub residual: Poly,
}

impl Identity {
    pub fn new(name: impl Into<String>, residual: Poly) -> Self {
        Identity {
            name: name.into(),
            residual: residual.reduce_conic(),
        }
    }

    /// `lhs = rhs` as rational functions.
    pub fn rational(name: impl Into<String>, lhs: &RationalFn, rhs: &RationalFn) -> Self {
        Self::new(name, lhs.cross_difference(rhs))
    }

    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

fn rf(num: Poly, den: Poly) -> RationalFn {
    RationalFn::new(num, den).expect("nonzero denominator")
}

fn c(n: i64) -> RationalFn {
    RationalFn::constant(FieldElem::int(n))
}

/// Cyclic order: `k = 1 -> (2, 3)`, `k = 2 -> (3, 1)`, `k = 3 -> (1, 2)`, 0-based.
pub fn cyclic(k: usize) -> (usize, usize) {
    ((k + 1) % 3, (k + 2) % 3)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SingularKind {
    I1,
    II,
}

impl std::str::FromStr for SingularKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I1" | "i1" => Ok(SingularKind::I1),
            "II" | "ii" => Ok(SingularKind::II),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

/// `E_k^+ / E_k^-` (I1) or `(V2V3, V1V3, V1V2)` (II) at a parameter value.
pub fn singular_group_generators(kind: SingularKind, alpha: &FieldElem, beta: &FieldElem) -> Result<[FieldElem; 3]> {
    if alpha.is_zero() && beta.is_zero() {
        return Err(Error::DegenerateParameter);
    }
    let cat = Catalog::alpha_beta();
    let at = [(Var::Alpha, alpha.clone()), (Var::Beta, beta.clone())];
    match kind {
        SingularKind::I1 => {
            if cat.e.eval_at(&at)?.is_zero() {
                return Err(Error::ConfluentCase("E = 0"));
            }
            let mut out = Vec::new();
            for k in 0..3 {
                let p = cat.ek_plus[k].eval_at(&at)?;
                let m = cat.ek_minus[k].eval_at(&at)?;
                out.push(&p * &m.inv()?);
            }
            Ok([out[0].clone(), out[1].clone(), out[2].clone()])
        }
        SingularKind::II => {
            if cat.f.eval_at(&at)?.is_zero() {
                return Err(Error::ConfluentCase("F = 0"));
            }
            Ok([
                cat.vv(0).eval_at(&at)?,
                cat.vv(1).eval_at(&at)?,
                cat.vv(2).eval_at(&at)?,
            ])
        }
    }
}

/// `mu` of the `+` base point of pair `k` on the nodal member equals `E_k^+ / E_k^-`.
pub fn base_point_mu(alpha: &FieldElem, beta: &FieldElem, k: usize) -> Result<FieldElem> {
    let cat = Catalog::alpha_beta();
    let at = [(Var::Alpha, alpha.clone()), (Var::Beta, beta.clone())];
    let (e, f, w) = (cat.e.eval_at(&at)?, cat.f.eval_at(&at)?, cat.vv(k).eval_at(&at)?);
    if w.is_zero() {
        return Err(Error::VertexDegeneration);
    }
    let pt = CubicPoint::affine(
        &f * &(&w.pow(2) * &FieldElem::int(4)).inv()?,
        (&w.pow(3) * &FieldElem::int(4)).inv()?,
    );
    mu(&e, &pt, MuConvention::Printed)
}

/// `E^2 (x^2+10x+1)^3 - 432 F^3 x^2 (x^2+10x+1) + 3456 F^3 x^3` at `x = n/d`, homogenized.
pub fn degree6(e2: &Poly, f3: &Poly, n: &Poly, d: &Poly) -> Poly {
    let q = &(&(&n.pow(2) + &(n * d).scale(&FieldElem::int(10))) + &d.pow(2));
    let nd = n * d;
    let a = &(e2 * &q.pow(3)).reduce_conic();
    let b = (&(f3 * &nd.pow(2)) * q).scale(&FieldElem::int(432)).reduce_conic();
    let c3 = (f3 * &nd.pow(3)).scale(&FieldElem::int(3456)).reduce_conic();
    (&(a - &b) + &c3).reduce_conic()
}

/// `4 E^2 (x^4+x^2+1)^3 - F^3 (x^2-1)^2 (2x^2+1)^2 (x^2+2)^2` at `x = n/d`, homogenized.
pub fn degree12(e2: &Poly, f3: &Poly, n: &Poly, d: &Poly) -> Poly {
    let (n2, d2) = (n.pow(2), d.pow(2));
    let quartic = &(&n2.pow(2) + &(&n2 * &d2)) + &d2.pow(2);
    let a = (e2 * &quartic.pow(3)).scale(&FieldElem::int(4)).reduce_conic();
    let p1 = &n2 - &d2;
    let p2 = &n2.scale(&FieldElem::int(2)) + &d2;
    let p3 = &n2 + &d2.scale(&FieldElem::int(2));
    let b = (f3 * &(&(&p1 * &p2) * &p3).pow(2)).reduce_conic();
    (&a - &b).reduce_conic()
}

pub fn annihilator_identities(cat: &Catalog) -> Vec<Identity> {
    let e2 = cat.e.pow(2).reduce_conic();
    let f3 = cat.f.pow(3).reduce_conic();
    let mut out = Vec::new();
    for k in 0..3 {
        out.push(Identity::new(
            format!("degree6 at E{}+/E{}-", k + 1, k + 1),
            degree6(&e2, &f3, &cat.ek_plus[k], &cat.ek_minus[k]),
        ));
        out.push(Identity::new(
            format!("degree6 at E{}-/E{}+", k + 1, k + 1),
            degree6(&e2, &f3, &cat.ek_minus[k], &cat.ek_plus[k]),
        ));
    }
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            for sign in [1, -1] {
                out.push(Identity::new(
                    format!("degree12 at {}V{}/V{}", if sign > 0 { "" } else { "-" }, i + 1, j + 1),
                    degree12(&e2, &f3, &cat.vk[i].clone().scale(&FieldElem::int(sign)), &cat.vk[j].clone()),
                ));
            }
        }
    }
    out
}

/// `r + 1/r` for `r = E_k^+ / E_k^-` in its three printed forms.
pub fn intermediate_identities(cat: &Catalog) -> Vec<Identity> {
    let e = RationalFn::from_poly(cat.e.clone());
    let f = RationalFn::from_poly(cat.f.clone());
    let mut out = Vec::new();
    for k in 0..3 {
        let (p, m) = (&cat.ek_plus[k], &cat.ek_minus[k]);
        let sum = rf(&p.pow(2) + &m.pow(2), p * m);
        let ek = RationalFn::from_poly(cat.ek[k].clone());
        let prod = rf((&cat.ek[k].pow(2)).scale(&FieldElem::int(-8)), p * m);
        out.push(Identity::rational(
            format!("E{k}+/E{k}- + E{k}-/E{k}+ = -8 E{k}^2/(E{k}+ E{k}-) - 2", k = k + 1),
            &sum,
            &(&prod - &c(2)),
        ));
        let cube = rf(cat.ek[k].pow(3).scale(&FieldElem::int(32)), cat.e.clone());
        out.push(Identity::rational(
            format!("E{k}+/E{k}- + E{k}-/E{k}+ = 32 E{k}^3/E - 2", k = k + 1),
            &sum,
            &(&cube - &c(2)),
        ));
        let lin = &(&(&(&f * &ek) * &c(24)) * &e.inv().expect("E nonzero")) - &c(10);
        out.push(Identity::rational(
            format!("E{k}+/E{k}- + E{k}-/E{k}+ = 24 F E{k}/E - 10", k = k + 1),
            &sum,
            &lin,
        ));
    }
    out
}

/// `xi_k = F / (4 (ViVj)^2)`.
pub fn xi_values(cat: &Catalog) -> [RationalFn; 3] {
    let xi = |k: usize| rf(cat.f.clone(), cat.vv(k).pow(2).scale(&FieldElem::int(4)));
    [xi(0), xi(1), xi(2)]
}

pub fn xi_identities(cat: &Catalog) -> Vec<Identity> {
    let xi = xi_values(cat);
    let f3 = cat.f.pow(3);
    let v4 = cat.v.pow(4);
    let e2 = cat.e.pow(2);
    let coef = rf(f3.clone(), v4.clone());
    let mut out = Vec::new();
    for (k, x) in xi.iter().enumerate() {
        let cubic = &(&x.pow(3) * &c(4)) - &(&coef * &(x + &c(1)));
        out.push(Identity::new(format!("xi{} cubic", k + 1), cubic.num));
    }
    let j0 = rf(f3.clone(), e2.clone());
    let j0_ratio = &(&j0 * &(&j0 - &c(1)).inv().expect("J0 != 1")) * &c(27);
    out.push(Identity::rational("27 J0/(J0-1) = F^3/V^4", &j0_ratio, &coef));
    let sum = &(&xi[0] + &xi[1]) + &xi[2];
    out.push(Identity::new("xi1 + xi2 + xi3 = 0", sum.num));
    let prod = &(&xi[0] * &xi[1]) * &xi[2];
    out.push(Identity::rational(
        "xi1 xi2 xi3 = F^3/(4V^4)",
        &prod,
        &rf(f3.clone(), v4.scale(&FieldElem::int(4))),
    ));
    let j0_prod = &(&j0 * &(&j0 - &c(1)).inv().expect("J0 != 1")) * &RationalFn::constant(FieldElem::rat(27, 4));
    out.push(Identity::rational("xi1 xi2 xi3 = 27 J0/(4(J0-1))", &prod, &j0_prod));
    for (k, x) in xi.iter().enumerate() {
        let rhs = &x.pow(3) * &(x + &c(1)).inv().expect("xi+1 nonzero");
        out.push(Identity::rational(format!("xi1 xi2 xi3 = xi{k}^3/(xi{k}+1)", k = k + 1), &prod, &rhs));
    }
    out
}

/// Relations among the `xi_k`, the ratios `Vi/Vj` and `E_k^+/E_k^-`; the
/// displays with square roots are checked after squaring.
pub fn xi_subfield_identities(cat: &Catalog) -> Vec<Identity> {
    let xi = xi_values(cat);
    let mut out = Vec::new();
    let i_sqrt2 = FieldElem::i_sqrt2();
    for k in 0..3 {
        let (i, j) = cyclic(k);
        let (vi, vj) = (cat.vk[i].clone(), cat.vk[j].clone());
        let w = &vi * &vj;
        let diff = &vi.pow(2) - &vj.pow(2);
        let xk = &xi[k];
        let (ni, nj, nk) = (i + 1, j + 1, k + 1);
        out.push(Identity::new(format!("E{nk} = V{ni}^2 - V{nj}^2"), &cat.ek[k] - &diff));
        let plus = &diff.scale(&i_sqrt2) + &w.scale(&FieldElem::int(3));
        let minus = &diff.scale(&i_sqrt2) - &w.scale(&FieldElem::int(3));
        let r = rf(cat.ek_plus[k].clone(), cat.ek_minus[k].clone());
        out.push(Identity::rational(
            format!("E{nk}+/E{nk}- in V{ni}, V{nj}"),
            &r,
            &rf(plus, minus),
        ));
        let sq = rf(diff.pow(2), w.pow(2));
        out.push(Identity::rational(
            format!("((V{ni}^2-V{nj}^2)/(V{ni}V{nj}))^2 = xi{nk} - 3"),
            &sq,
            &(xk - &c(3)),
        ));
        // s = 3(r+1)/(r-1) is the square root of -2(xi_k - 3)
        let s = rf(cat.ek[k].scale(&i_sqrt2), w.clone());
        out.push(Identity::rational(
            format!("s{nk}^2 = -2(xi{nk} - 3)"),
            &s.pow(2),
            &(&(xk - &c(3)) * &c(-2)),
        ));
        out.push(Identity::rational(
            format!("E{nk}+/E{nk}- = (s{nk} + 3)/(s{nk} - 3)"),
            &r,
            &(&(&s + &c(3)) * &(&s - &c(3)).inv().expect("s != 3")),
        ));
        let rhs = &(&(&(xk * &c(2)) - &c(15)) - &(&s * &c(6))) * &(&(xk * &c(2)) + &c(3)).inv().expect("2xi+3 nonzero");
        out.push(Identity::rational(
            format!("E{nk}+/E{nk}- = (2xi{nk} - 15 - 6 s{nk})/(2xi{nk} + 3)"),
            &r,
            &rhs,
        ));
        // xi_i, xi_j = (xi_k/2)(-1 ± sqrt((xi_k-3)/(xi_k+1)))
        let ratio = &(xk - &c(3)) * &(xk + &c(1)).inv().expect("xi+1 nonzero");
        let root = |m: usize| &(&(&xi[m] * &c(2)) * &xk.inv().expect("xi nonzero")) + &c(1);
        let (ri, rj) = (root(i), root(j));
        out.push(Identity::rational(format!("(2xi{ni}/xi{nk} + 1)^2 = (xi{nk}-3)/(xi{nk}+1)"), &ri.pow(2), &ratio));
        out.push(Identity::rational(format!("(2xi{nj}/xi{nk} + 1)^2 = (xi{nk}-3)/(xi{nk}+1)"), &rj.pow(2), &ratio));
        out.push(Identity::new(format!("opposite roots for xi{ni}, xi{nj}"), (&ri + &rj).num));
        // q = Vi/Vj = (sqrt(xi_k+1) ± sqrt(xi_k-3))/2
        let q = rf(vi.clone(), vj.clone());
        let qi = q.inv().expect("Vj nonzero");
        out.push(Identity::rational(format!("(V{ni}/V{nj} + V{nj}/V{ni})^2 = xi{nk} + 1"), &(&q + &qi).pow(2), &(xk + &c(1))));
        out.push(Identity::rational(format!("(V{ni}/V{nj} - V{nj}/V{ni})^2 = xi{nk} - 3"), &(&q - &qi).pow(2), &(xk - &c(3))));
        out.push(Identity::rational(
            format!("(V{ni}/V{nj})^2 = xi{ni}/xi{nj}"),
            &q.pow(2),
            &(&xi[i] * &xi[j].inv().expect("xi nonzero")),
        ));
    }
    out
}

/// `W1^2 W2^2 + W1^2 W3^2 + W2^2 W3^2`.
pub fn quartic_form() -> Poly {
    let w = |k: usize| var(Var::v(k + 1)).pow(2);
    &(&(&w(0) * &w(1)) + &(&w(0) * &w(2))) + &(&w(1) * &w(2))
}

pub fn cremona(cat: &Catalog) -> [Poly; 3] {
    [cat.vv(0), cat.vv(1), cat.vv(2)]
}

pub fn quartic_identities(cat: &Catalog) -> Vec<Identity> {
    let image = quartic_form().substitute_v(&cremona(cat));
    vec![
        Identity::new("II generators on the quartic", image.clone()),
        Identity::new(
            "quartic image = (V1V2V3)^2 (V1^2+V2^2+V3^2)",
            &image - &(&(&(&cat.vk[0].clone() * &cat.vk[1].clone()) * &cat.vk[2].clone()).pow(2) * &(&(&cat.vk[0].clone().pow(2) + &cat.vk[1].clone().pow(2)) + &cat.vk[2].clone().pow(2))),
        ),
    ]
}

/// Jacobi moduli `kappa = i V1/V3`, `kappa' = i V2/V3`.
pub fn moduli(cat: &Catalog) -> (RationalFn, RationalFn) {
    let i = FieldElem::i();
    (
        rf(cat.vk[0].clone().scale(&i), cat.vk[2].clone()),
        rf(cat.vk[1].clone().scale(&i), cat.vk[2].clone()),
    )
}

/// Over `(alpha, beta)`, with `rho = alpha/beta`.
pub fn modulus_identities() -> Vec<Identity> {
    let cat = Catalog::alpha_beta();
    let (k, kp) = moduli(cat);
    let (a, b) = (var(Var::Alpha), var(Var::Beta));
    let denom = &a.pow(2) + &b.pow(2);
    let k_rho = rf((&a * &b).scale(&FieldElem::int(2)), denom.clone());
    let kp_rho = rf(&b.pow(2) - &a.pow(2), denom);
    let rho = rf(a.clone(), b.clone());
    let one = c(1);
    let mut out = vec![
        Identity::rational("kappa = 2rho/(1+rho^2)", &k, &k_rho),
        Identity::rational("kappa' = (1-rho^2)/(1+rho^2)", &kp, &kp_rho),
        Identity::rational("kappa^2 + kappa'^2 = 1", &(&k.pow(2) + &kp.pow(2)), &one),
        Identity::rational(
            "kappa/(1+kappa') = rho",
            &(&k * &(&one + &kp).inv().expect("1+kappa' nonzero")),
            &rho,
        ),
    ];
    // rho = 0
    let at0 = [(Var::Alpha, Poly::zero()), (Var::Beta, Poly::one())];
    let k0 = k.substitute(&at0).expect("V3(0,1) != 0");
    let kp0 = kp.substitute(&at0).expect("V3(0,1) != 0");
    out.push(Identity::rational("kappa(rho = 0) = 0", &k0, &RationalFn::constant(FieldElem::zero())));
    out.push(Identity::rational("kappa'(rho = 0) = 1", &kp0, &one));
    out
}

/// `-E2/E3, -E3/E2, -E1/E3, -E3/E1, -E1/E2, -E2/E1`.
pub fn lambda_orbit(cat: &Catalog) -> Vec<RationalFn> {
    [(1, 2), (2, 1), (0, 2), (2, 0), (0, 1), (1, 0)]
        .iter()
        .map(|&(i, j)| rf(cat.ek[i].scale(&FieldElem::int(-1)), cat.ek[j].clone()))
        .collect()
}

fn find_in(set: &[RationalFn], x: &RationalFn) -> Option<usize> {
    set.iter().position(|y| y.cross_difference(x).reduce_conic().is_zero())
}

pub fn lambda_identities(cat: &Catalog) -> Vec<Identity> {
    let orbit = lambda_orbit(cat);
    let l = orbit[0].clone();
    let one = c(1);
    let inv = |x: &RationalFn| x.inv().expect("nonzero cross ratio");
    let standard = [
        ("lambda", l.clone()),
        ("1/lambda", inv(&l)),
        ("1-lambda", &one - &l),
        ("1/(1-lambda)", inv(&(&one - &l))),
        ("(lambda-1)/lambda", &(&l - &one) * &inv(&l)),
        ("lambda/(lambda-1)", &l * &inv(&(&l - &one))),
    ];
    let mut out = Vec::new();
    out.push(Identity::new("E1 + E2 + E3 = 0", &(&cat.ek[0] + &cat.ek[1]) + &cat.ek[2]));
    out.push(Identity::rational("(-E1/E3) = 1 - (-E2/E3)", &orbit[2], &(&one - &l)));
    out.push(Identity::rational("lambda (1/lambda) = 1", &(&l * &inv(&l)), &one));
    let mut hit = [false; 6];
    for (name, s) in &standard {
        match find_in(&orbit, s) {
            Some(p) => hit[p] = true,
            None => out.push(Identity::new(format!("{name} not among the cross ratios"), konst(1))),
        }
    }
    if hit.iter().any(|h| !h) {
        out.push(Identity::new("cross ratios not all reached", konst(1)));
    }
    for (n, x) in orbit.iter().enumerate() {
        for (tag, y) in [("1/", inv(x)), ("1-", &one - x)] {
            if find_in(&orbit, &y).is_none() {
                out.push(Identity::new(format!("orbit not closed under {tag} at entry {}", n + 1), konst(1)));
            }
        }
    }
    out.push(Identity::new("six cross ratios closed", Poly::zero()));
    out
}

pub fn torus_identities(cat: &Catalog) -> Vec<Identity> {
    let x: Vec<Poly> = cat.ek.iter().map(|e| e.scale(&FieldElem::rat(-1, 3))).collect();
    let sym2 = &(&(&x[0] * &x[1]) + &(&x[0] * &x[2])) + &(&x[1] * &x[2]);
    let g2 = sym2.scale(&FieldElem::int(-4));
    let g3 = (&(&x[0] * &x[1]) * &x[2]).scale(&FieldElem::int(4));
    let f3 = cat.f.pow(3);
    let e2 = cat.e.pow(2);
    let j0 = rf(f3.clone(), e2.clone());
    let disc = &g2.pow(3) - &g3.pow(2).scale(&FieldElem::int(27));
    let jp = rf(g2.pow(3), disc.clone());
    vec![
        Identity::new("g2' = F/3", &g2 - &cat.f.scale(&FieldElem::rat(1, 3))),
        Identity::new("g3' = E/27", &g3 - &cat.e.scale(&FieldElem::rat(1, 27))),
        Identity::new("g2'^3 - 27 g3'^2 = (F^3 - E^2)/27", &disc - &(&f3 - &e2).scale(&FieldElem::rat(1, 27))),
        Identity::rational("J' = F^3/(F^3 - E^2)", &jp, &rf(f3.clone(), &f3 - &e2)),
        Identity::rational("J' = F^3/(27 V^4)", &jp, &rf(f3.clone(), cat.v.pow(4).scale(&FieldElem::int(27)))),
        Identity::rational(
            "J' = J0/(J0 - 1)",
            &jp,
            &(&j0 * &(&j0 - &c(1)).inv().expect("J0 != 1")),
        ),
    ]
}

/// `J' = F^3 / (27 V^4)` at a parameter value.
pub fn torus_j(alpha: &FieldElem, beta: &FieldElem) -> Result<FieldElem> {
    let (v, _e, f) = crate::octahedral::eval_vef(alpha, beta)?;
    let den = &v.pow(4) * &FieldElem::int(27);
    Ok(&f.pow(3) * &den.inv().map_err(|_| Error::ConfluentCase("V = 0"))?)
}

/// `E_k^+ E_k^- = E_i E_j` for the complementary pair.
pub fn product_relation(alpha: &FieldElem, beta: &FieldElem) -> Result<bool> {
    let cat = Catalog::alpha_beta();
    let at = [(Var::Alpha, alpha.clone()), (Var::Beta, beta.clone())];
    for k in 0..3 {
        let (i, j) = complement(k);
        let lhs = &cat.ek_plus[k].eval_at(&at)? * &cat.ek_minus[k].eval_at(&at)?;
        let rhs = &cat.ek[i].eval_at(&at)? * &cat.ek[j].eval_at(&at)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
