//! Binary octahedral invariants: the forms `V, E, F`, the quadrics `V1, V2, V3`,
//! the quartics `Ek` and `Ek±`, the 48-element group acting on `(alpha, beta)`,
//! and Molien series for its quaternion and binary tetrahedral subgroups.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldElem, Rational};
use crate::poly::{var, Poly, Var};

/// The named forms of the invariant theory.
///
/// The same formulas are built twice: once as forms in `(alpha, beta)` and once
/// in the formal variables `V1, V2, V3`, where identities hold modulo the conic
/// `V1^2 + V2^2 + V3^2`.
#[derive(Debug, Clone)]
pub struct Catalog {
    pub v: Poly,
    pub e: Poly,
    pub f: Poly,
    /// `V1, V2, V3`.
    pub vk: [Poly; 3],
    /// `E1, E2, E3`.
    pub ek: [Poly; 3],
    /// `E1+, E2+, E3+`.
    pub ek_plus: [Poly; 3],
    /// `E1-, E2-, E3-`.
    pub ek_minus: [Poly; 3],
}

/// For `k` in 0..3 the complementary pair `(i, j)`, 0-based.
pub fn complement(k: usize) -> (usize, usize) {
    match k {
        0 => (1, 2),
        1 => (0, 2),
        2 => (0, 1),
        _ => panic!("index {k} out of range"),
    }
}

/// Maps a 1-based pair `(i, j)` with `i < j` to the 0-based index of the third.
pub fn pair_to_k(i: usize, j: usize) -> Result<usize> {
    match (i, j) {
        (2, 3) => Ok(0),
        (1, 3) => Ok(1),
        (1, 2) => Ok(2),
        _ => Err(Error::BadPair(i, j)),
    }
}

impl Catalog {
    fn from_vk(vk: [Poly; 3], v: Poly, e: Poly, f: Poly) -> Self {
        let sq: Vec<Poly> = vk.iter().map(|p| p.pow(2)).collect();
        let ek = [&sq[1] - &sq[2], &sq[2] - &sq[0], &sq[0] - &sq[1]];
        let i_r2 = FieldElem::i_sqrt2();
        let mk = |k: usize, sign: i64| {
            let (i, j) = complement(k);
            let vv = (&vk[i] * &vk[j]).scale(&FieldElem::int(3 * sign));
            &ek[k].scale(&i_r2) + &vv
        };
        let ek_plus = [mk(0, 1), mk(1, 1), mk(2, 1)];
        let ek_minus = [mk(0, -1), mk(1, -1), mk(2, -1)];
        Catalog {
            v,
            e,
            f,
            vk,
            ek,
            ek_plus,
            ek_minus,
        }
    }

    /// Forms in `(alpha, beta)`.
    pub fn alpha_beta() -> &'static Catalog {
        static CELL: OnceLock<Catalog> = OnceLock::new();
        CELL.get_or_init(|| {
            let a = var(Var::Alpha);
            let b = var(Var::Beta);
            let a2 = a.pow(2);
            let b2 = b.pow(2);
            let a4 = a.pow(4);
            let b4 = b.pow(4);
            let a8 = a.pow(8);
            let b8 = b.pow(8);
            let a4b4 = &a4 * &b4;
            let v = (&a * &b).scale(&FieldElem::int(4)) * (&a4 - &b4);
            let e = (&a4 + &b4).scale(&FieldElem::int(8))
                * (&(&a8 + &b8) - &a4b4.scale(&FieldElem::int(34)));
            let f = (&(&a8 + &b8) + &a4b4.scale(&FieldElem::int(14))).scale(&FieldElem::int(4));
            let vk = [
                (&a * &b).scale(&FieldElem::from_ints(0, -2, 0, 0)),
                (&a2 - &b2).scale(&FieldElem::i()),
                &a2 + &b2,
            ];
            Catalog::from_vk(vk, v, e, f)
        })
    }

    /// Forms in the formal variables `V1, V2, V3`.
    pub fn formal() -> &'static Catalog {
        static CELL: OnceLock<Catalog> = OnceLock::new();
        CELL.get_or_init(|| {
            let vk = [var(Var::V1), var(Var::V2), var(Var::V3)];
            let sq: Vec<Poly> = vk.iter().map(|p| p.pow(2)).collect();
            let v = (&(&vk[0] * &vk[1]) * &vk[2]).scale(&FieldElem::int(2));
            let e = (&(&sq[0] - &sq[1]) * &(&sq[0] - &sq[2])) * (&sq[1] - &sq[2]);
            let e = e.scale(&FieldElem::int(4));
            let f = (&(&(&sq[0] * &sq[1]) + &(&sq[0] * &sq[2])) + &(&sq[1] * &sq[2]))
                .scale(&FieldElem::int(-4));
            Catalog::from_vk(vk, v, e, f)
        })
    }

    /// `Vi * Vj` for the pair complementary to `k` (0-based).
    pub fn vv(&self, k: usize) -> Poly {
        let (i, j) = complement(k);
        &self.vk[i] * &self.vk[j]
    }

    /// Looks a form up by name: `V, E, F, V1..V3, E1..E3, E1+..E3+, E1-..E3-`.
    pub fn named(&self, name: &str) -> Option<&Poly> {
        let idx = |s: &str| match s {
            "1" => Some(0),
            "2" => Some(1),
            "3" => Some(2),
            _ => None,
        };
        match name {
            "V" => Some(&self.v),
            "E" => Some(&self.e),
            "F" => Some(&self.f),
            _ => {
                if let Some(rest) = name.strip_prefix('V') {
                    return idx(rest).map(|k| &self.vk[k]);
                }
                let rest = name.strip_prefix('E')?;
                if let Some(r) = rest.strip_suffix('+') {
                    return idx(r).map(|k| &self.ek_plus[k]);
                }
                if let Some(r) = rest.strip_suffix('-') {
                    return idx(r).map(|k| &self.ek_minus[k]);
                }
                idx(rest).map(|k| &self.ek[k])
            }
        }
    }
}

/// The polynomial identities of the catalog, each as `(name, lhs - rhs)`.
/// Over `(alpha, beta)` every difference is the zero polynomial; over the formal
/// catalog they vanish after [`Poly::reduce_conic`].
pub fn catalog_identities(c: &Catalog) -> Vec<(String, Poly)> {
    let mut out: Vec<(String, Poly)> = Vec::new();
    let sq: Vec<Poly> = c.vk.iter().map(|p| p.pow(2)).collect();
    let mut push = |name: String, p: Poly| out.push((name, p));

    push("V1^2 + V2^2 + V3^2 = 0".into(), &(&sq[0] + &sq[1]) + &sq[2]);
    push(
        "E^2 = F^3 - 27 V^4".into(),
        &(&c.e.pow(2) - &c.f.pow(3)) + &c.v.pow(4).scale(&FieldElem::int(27)),
    );
    push(
        "V = 2 V1 V2 V3".into(),
        &c.v - &(&(&c.vk[0] * &c.vk[1]) * &c.vk[2]).scale(&FieldElem::int(2)),
    );
    let e_v = ((&sq[0] - &sq[1]) * (&sq[0] - &sq[2]) * (&sq[1] - &sq[2])).scale(&FieldElem::int(4));
    push(
        "E = 4 (V1^2 - V2^2)(V1^2 - V3^2)(V2^2 - V3^2)".into(),
        &c.e - &e_v,
    );
    let f_v = (&(&(&sq[0] * &sq[1]) + &(&sq[0] * &sq[2])) + &(&sq[1] * &sq[2]))
        .scale(&FieldElem::int(-4));
    push(
        "F = -4 (V1^2 V2^2 + V1^2 V3^2 + V2^2 V3^2)".into(),
        &c.f - &f_v,
    );
    push(
        "E1 + E2 + E3 = 0".into(),
        &(&c.ek[0] + &c.ek[1]) + &c.ek[2],
    );
    let s2 = &(&(&c.ek[0] * &c.ek[1]) + &(&c.ek[0] * &c.ek[2])) + &(&c.ek[1] * &c.ek[2]);
    push(
        "E1 E2 + E1 E3 + E2 E3 = -3/4 F".into(),
        &s2 + &c.f.scale(&FieldElem::rat(3, 4)),
    );
    push(
        "E1 E2 E3 = -1/4 E".into(),
        &(&(&c.ek[0] * &c.ek[1]) * &c.ek[2]) + &c.e.scale(&FieldElem::rat(1, 4)),
    );
    for k in 0..3 {
        let (i, j) = complement(k);
        let n = k + 1;
        let pm = &c.ek_plus[k] * &c.ek_minus[k];
        push(
            format!("E{n}+ E{n}- = E{} E{}", i + 1, j + 1),
            &pm - &(&c.ek[i] * &c.ek[j]),
        );
        push(
            format!("E = -4 E{n}+ E{n}- E{n}"),
            &c.e + &(&pm * &c.ek[k]).scale(&FieldElem::int(4)),
        );
        push(
            format!("E{n}+ + E{n}- = 2 r2 i E{n}"),
            &(&c.ek_plus[k] + &c.ek_minus[k]) - &c.ek[k].scale(&FieldElem::from_ints(0, 0, 0, 2)),
        );
        push(
            format!("4 E{n}^3 - 3 F E{n} + E = 0"),
            &(&c.ek[k].pow(3).scale(&FieldElem::int(4))
                - &(&c.f * &c.ek[k]).scale(&FieldElem::int(3)))
                + &c.e,
        );
        push(
            format!("F + 6 (V{}V{})^2 = -2 E{} E{}", i + 1, j + 1, i + 1, j + 1),
            &(&c.f + &c.vv(k).pow(2).scale(&FieldElem::int(6)))
                + &(&c.ek[i] * &c.ek[j]).scale(&FieldElem::int(2)),
        );
    }
    let v2 = c.v.pow(2);
    push(
        "(V E)^2 = F^3 V^2 - 27 (V^2)^3".into(),
        &(&(&c.v * &c.e).pow(2) - &(&c.f.pow(3) * &v2)) + &v2.pow(3).scale(&FieldElem::int(27)),
    );
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    Quaternion,
    Tetrahedral,
    Octahedral,
}

impl Group {
    pub const ALL: [Group; 3] = [Group::Quaternion, Group::Tetrahedral, Group::Octahedral];

    pub fn order(self) -> usize {
        match self {
            Group::Quaternion => 8,
            Group::Tetrahedral => 24,
            Group::Octahedral => 48,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Group::Quaternion => "quaternion",
            Group::Tetrahedral => "tetrahedral",
            Group::Octahedral => "octahedral",
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Group {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Group::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown group `{s}`")))
    }
}

pub type Matrix = [[FieldElem; 2]; 2];

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    std::array::from_fn(|r| {
        std::array::from_fn(|c| &(&a[r][0] * &b[0][c]) + &(&a[r][1] * &b[1][c]))
    })
}

pub fn mat_det(a: &Matrix) -> FieldElem {
    &(&a[0][0] * &a[1][1]) - &(&a[0][1] * &a[1][0])
}

/// Inverse of a determinant-one matrix.
pub fn mat_inv_unimodular(a: &Matrix) -> Matrix {
    [
        [a[1][1].clone(), -&a[0][1]],
        [-&a[1][0], a[0][0].clone()],
    ]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElement {
    pub matrix: Matrix,
    /// Row of the 24-row coset table, 0-based; rows 0..12 are the left list.
    pub row: usize,
    /// `+1` for the listed representative, `-1` for its negative.
    pub sign: i8,
    pub quaternion: bool,
    pub tetrahedral: bool,
}

impl GroupElement {
    pub fn in_group(&self, g: Group) -> bool {
        match g {
            Group::Quaternion => self.quaternion,
            Group::Tetrahedral => self.tetrahedral,
            Group::Octahedral => true,
        }
    }

    pub fn trace(&self) -> FieldElem {
        &self.matrix[0][0] + &self.matrix[1][1]
    }
}

// Entries as Gaussian integers (re, im), with a common scale per row.
type Gauss = (i64, i64);
enum Scale {
    One,
    Half,
    InvSqrt2,
}

const LEFT: [[Gauss; 4]; 12] = [
    [(1, 0), (0, 0), (0, 0), (1, 0)],
    [(0, 1), (0, 0), (0, 0), (0, -1)],
    [(0, 0), (0, 1), (0, 1), (0, 0)],
    [(0, 0), (-1, 0), (1, 0), (0, 0)],
    [(1, 1), (-1, 1), (1, 1), (1, -1)],
    [(1, -1), (1, -1), (-1, -1), (1, 1)],
    [(1, 1), (1, -1), (-1, -1), (1, -1)],
    [(1, -1), (-1, 1), (1, 1), (1, 1)],
    [(1, -1), (1, 1), (-1, 1), (1, 1)],
    [(1, 1), (-1, -1), (1, -1), (1, -1)],
    [(1, -1), (-1, -1), (1, -1), (1, 1)],
    [(1, 1), (1, 1), (-1, 1), (1, -1)],
];

const RIGHT: [[Gauss; 4]; 12] = [
    [(1, 1), (0, 0), (0, 0), (1, -1)],
    [(1, -1), (0, 0), (0, 0), (1, 1)],
    [(1, 0), (0, 1), (0, 1), (1, 0)],
    [(1, 0), (0, -1), (0, -1), (1, 0)],
    [(1, 0), (-1, 0), (1, 0), (1, 0)],
    [(1, 0), (1, 0), (-1, 0), (1, 0)],
    [(0, 0), (-1, 1), (1, 1), (0, 0)],
    [(0, 0), (1, 1), (-1, 1), (0, 0)],
    [(0, 1), (-1, 0), (1, 0), (0, -1)],
    [(0, 1), (1, 0), (-1, 0), (0, -1)],
    [(0, 1), (0, 1), (0, 1), (0, -1)],
    [(0, 1), (0, -1), (0, -1), (0, -1)],
];

fn build(entries: &[Gauss; 4], scale: Scale) -> Matrix {
    let s = match scale {
        Scale::One => FieldElem::one(),
        Scale::Half => FieldElem::rat(1, 2),
        Scale::InvSqrt2 => FieldElem::new(
            Rational::from_integer(0.into()),
            Rational::from_integer(0.into()),
            crate::field::rat(1, 2),
            Rational::from_integer(0.into()),
        ),
    };
    let e = |k: usize| &FieldElem::from_ints(entries[k].0, entries[k].1, 0, 0) * &s;
    [[e(0), e(1)], [e(2), e(3)]]
}

/// The 24 listed coset representatives in table order.
pub fn representatives() -> Vec<Matrix> {
    let mut out = Vec::with_capacity(24);
    for (r, row) in LEFT.iter().enumerate() {
        out.push(build(row, if r < 4 { Scale::One } else { Scale::Half }));
    }
    for row in RIGHT.iter() {
        out.push(build(row, Scale::InvSqrt2));
    }
    out
}

/// Elements of the requested group, each representative followed by its negative.
pub fn enumerate_group(g: Group) -> Vec<GroupElement> {
    static ALL: OnceLock<Vec<GroupElement>> = OnceLock::new();
    let all = ALL.get_or_init(|| {
        let mut out = Vec::with_capacity(48);
        for (row, m) in representatives().into_iter().enumerate() {
            for sign in [1i8, -1] {
                let matrix = if sign == 1 {
                    m.clone()
                } else {
                    [[-&m[0][0], -&m[0][1]], [-&m[1][0], -&m[1][1]]]
                };
                out.push(GroupElement {
                    matrix,
                    row,
                    sign,
                    quaternion: row < 4,
                    tetrahedral: row < 12,
                });
            }
        }
        out
    });
    all.iter().filter(|e| e.in_group(g)).cloned().collect()
}

/// Whether the matrices are closed under multiplication as a set.
pub fn is_closed(elems: &[GroupElement]) -> bool {
    let set: std::collections::HashSet<&Matrix> = elems.iter().map(|e| &e.matrix).collect();
    elems.iter().all(|a| {
        elems
            .iter()
            .all(|b| set.contains(&mat_mul(&a.matrix, &b.matrix)))
    })
}

/// Contragredient action `p -> p o sigma^-1` on forms in `(alpha, beta)`.
pub fn act(sigma: &GroupElement, p: &Poly) -> Poly {
    act_matrix(&sigma.matrix, p)
}

pub fn act_matrix(m: &Matrix, p: &Poly) -> Poly {
    let inv = mat_inv_unimodular(m);
    let a = var(Var::Alpha);
    let b = var(Var::Beta);
    let na = &a.scale(&inv[0][0]) + &b.scale(&inv[0][1]);
    let nb = &a.scale(&inv[1][0]) + &b.scale(&inv[1][1]);
    p.substitute(&[(Var::Alpha, na), (Var::Beta, nb)])
}

/// `sigma*(Vk) = signs[k] * V_{perm[k]}`, all indices 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SignedPermutation {
    pub perm: [usize; 3],
    pub signs: [i8; 3],
}

impl SignedPermutation {
    pub fn identity() -> Self {
        SignedPermutation {
            perm: [0, 1, 2],
            signs: [1, 1, 1],
        }
    }

    /// `(self o other)`: apply `other` first, then `self`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        SignedPermutation {
            perm: std::array::from_fn(|k| self.perm[other.perm[k]]),
            signs: std::array::from_fn(|k| other.signs[k] * self.signs[other.perm[k]]),
        }
    }

    /// Images written as `[+V2, -V3, +V1]`.
    pub fn images(&self) -> [String; 3] {
        std::array::from_fn(|k| {
            format!(
                "{}V{}",
                if self.signs[k] > 0 { "+" } else { "-" },
                self.perm[k] + 1
            )
        })
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.images();
        write!(f, "({a}, {b}, {c})")
    }
}

pub fn action_signature(sigma: &GroupElement) -> Result<SignedPermutation> {
    signature_of_matrix(&sigma.matrix)
}

pub fn signature_of_matrix(m: &Matrix) -> Result<SignedPermutation> {
    let cat = Catalog::alpha_beta();
    let mut perm = [0usize; 3];
    let mut signs = [0i8; 3];
    for k in 0..3 {
        let img = act_matrix(m, &cat.vk[k]);
        let hit = (0..3).find_map(|j| {
            if img == cat.vk[j] {
                Some((j, 1))
            } else if img == -&cat.vk[j] {
                Some((j, -1))
            } else {
                None
            }
        });
        let (j, s) = hit.ok_or(Error::NotSignedPermutation)?;
        perm[k] = j;
        signs[k] = s;
    }
    Ok(SignedPermutation { perm, signs })
}

/// `Some(+1)` or `Some(-1)` when `sigma*(p) = ±p`, otherwise `None`.
pub fn sign_under(sigma: &GroupElement, p: &Poly) -> Option<i8> {
    let img = act(sigma, p);
    if img == *p {
        Some(1)
    } else if img == -p {
        Some(-1)
    } else {
        None
    }
}

/// Coefficients `t^0..t^n` of `(1/|G|) sum 1/det(I - tA)`.
pub fn molien_series(g: Group, n: usize) -> Result<Vec<Rational>> {
    let elems = enumerate_group(g);
    let mut sum = vec![FieldElem::zero(); n + 1];
    for el in &elems {
        // 1/(1 - tr t + t^2) since det A = 1
        let tr = el.trace();
        let mut prev2 = FieldElem::zero();
        let mut prev = FieldElem::one();
        sum[0] += &prev;
        for c in sum.iter_mut().skip(1) {
            let cur = &(&tr * &prev) - &prev2;
            *c += &cur;
            prev2 = prev;
            prev = cur;
        }
    }
    let inv_order = FieldElem::rat(1, elems.len() as i64);
    sum.into_iter()
        .enumerate()
        .map(|(degree, c)| {
            let c = &c * &inv_order;
            match c.to_rational() {
                Some(q) if q.is_integer() && q >= Rational::from_integer(0.into()) => Ok(q),
                _ => Err(Error::NonRationalCoefficient {
                    degree,
                    value: c.to_string(),
                }),
            }
        })
        .collect()
}

/// Series of the closed-form Hilbert–Poincaré functions
/// `(1+t^6)/(1-t^4)^2`, `(1+t^12)/((1-t^6)(1-t^8))`, `(1+t^18)/((1-t^8)(1-t^12))`.
pub fn hilbert_closed_form(g: Group, n: usize) -> Vec<Rational> {
    let (num_deg, d1, d2) = match g {
        Group::Quaternion => (6, 4, 4),
        Group::Tetrahedral => (12, 6, 8),
        Group::Octahedral => (18, 8, 12),
    };
    // count solutions of d1 a + d2 b + num_deg c = k with c in {0, 1}
    let mut out = vec![0i64; n + 1];
    for c in 0..=1usize {
        let base = c * num_deg;
        let mut a = 0;
        while base + a * d1 <= n {
            let mut b = 0;
            while base + a * d1 + b * d2 <= n {
                out[base + a * d1 + b * d2] += 1;
                b += 1;
            }
            a += 1;
        }
    }
    out.into_iter()
        .map(|k| Rational::from_integer(k.into()))
        .collect()
}

/// Evaluates `(V, E, F)` at a point.
pub fn eval_vef(alpha: &FieldElem, beta: &FieldElem) -> Result<(FieldElem, FieldElem, FieldElem)> {
    let c = Catalog::alpha_beta();
    let at = [(Var::Alpha, alpha.clone()), (Var::Beta, beta.clone())];
    Ok((c.v.eval_at(&at)?, c.e.eval_at(&at)?, c.f.eval_at(&at)?))
}

/// Substitutes the `(alpha, beta)` forms of `V1, V2, V3` for the formal variables.
pub fn v_to_alpha_beta(p: &Poly) -> Poly {
    p.substitute_v(&Catalog::alpha_beta().vk)
}

/// Basis of degree-24 octahedral invariants spanned by `E^2` and `F^3`.
pub fn degree24_basis() -> [Poly; 2] {
    let c = Catalog::alpha_beta();
    [c.e.pow(2), c.f.pow(3)]
}

/// Numerator and denominator of `J0 = F^3 / E^2`.
pub fn j0_form() -> (Poly, Poly) {
    let c = Catalog::alpha_beta();
    (c.f.pow(3), c.e.pow(2))
}
