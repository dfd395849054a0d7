//! The Néron–Severi lattice `Z^(1,9)` on `l, e1..e9`, fiber components of the
//! `III` and `I0*` fibers, numerical sections and the Mordell–Weil lattice.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{rat, Rational};
use crate::weierstrass::CaseLabel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct DivisorClass(pub [i64; 10]);

impl DivisorClass {
    pub fn zero() -> Self {
        DivisorClass([0; 10])
    }

    pub fn l() -> Self {
        Self::basis(0)
    }

    /// `e_k` for `k` in 1..=9.
    pub fn e(k: usize) -> Self {
        assert!((1..=9).contains(&k), "e index {k}");
        Self::basis(k)
    }

    fn basis(k: usize) -> Self {
        let mut c = [0; 10];
        c[k] = 1;
        DivisorClass(c)
    }

    pub fn coeffs(&self) -> &[i64; 10] {
        &self.0
    }

    pub fn dot(&self, other: &DivisorClass) -> i64 {
        gram(self, other)
    }

    pub fn square(&self) -> i64 {
        gram(self, self)
    }
}

/// `diag(+1, -1, ..., -1)`.
pub fn gram(u: &DivisorClass, v: &DivisorClass) -> i64 {
    u.0[0] * v.0[0] - (1..10).map(|k| u.0[k] * v.0[k]).sum::<i64>()
}

impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, o: DivisorClass) -> DivisorClass {
        DivisorClass(std::array::from_fn(|k| self.0[k] + o.0[k]))
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, o: DivisorClass) -> DivisorClass {
        DivisorClass(std::array::from_fn(|k| self.0[k] - o.0[k]))
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass(self.0.map(|c| -c))
    }
}

impl Mul<DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, d: DivisorClass) -> DivisorClass {
        DivisorClass(d.0.map(|c| self * c))
    }
}

impl fmt::Display for DivisorClass {
    /// Writes e.g. `3l - e2 - 2e4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let name = if k == 0 { "l".to_string() } else { format!("e{k}") };
            let mag = c.abs();
            let body = if mag == 1 { name } else { format!("{mag}{name}") };
            match (first, c < 0) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `r_ij = e_i - e_j`.
pub fn r2(i: usize, j: usize) -> DivisorClass {
    DivisorClass::e(i) - DivisorClass::e(j)
}

/// `r_ijk = l - e_i - e_j - e_k`.
pub fn r3(i: usize, j: usize, k: usize) -> DivisorClass {
    DivisorClass::l() - DivisorClass::e(i) - DivisorClass::e(j) - DivisorClass::e(k)
}

/// `f = 3l - sum e_k`.
pub fn fiber_class() -> DivisorClass {
    let mut c = [-1; 10];
    c[0] = 3;
    DivisorClass(c)
}

pub fn zero_section() -> DivisorClass {
    DivisorClass::e(9)
}

/// Looks up `l, e1..e9, f, s0, u0, u1, v0..v4, rij, rijk`.
pub fn named_class(name: &str) -> Result<DivisorClass> {
    let e = DivisorClass::e;
    let l = DivisorClass::l();
    let unknown = || Error::UnknownName(name.to_string());
    let digit = |c: char| -> Option<usize> {
        c.to_digit(10)
            .map(|d| d as usize)
            .filter(|d| (1..=9).contains(d))
    };
    Ok(match name {
        "l" | "ℓ" => l,
        "f" => fiber_class(),
        "s0" => zero_section(),
        "u0" => l - e(7) - e(8) - e(9),
        "u1" => 2 * l - e(1) - e(2) - e(3) - e(4) - e(5) - e(6),
        "v0" => e(8) - e(9),
        "v1" => l - e(1) - e(4) - e(7),
        "v2" => l - e(2) - e(5) - e(7),
        "v3" => l - e(3) - e(6) - e(7),
        "v4" => e(7) - e(8),
        _ => {
            let (head, tail) = name.split_at(1);
            let ds: Option<Vec<usize>> = tail.chars().map(digit).collect();
            let ds = ds.ok_or_else(unknown)?;
            match (head, ds.as_slice()) {
                ("e", [k]) => e(*k),
                ("r", [i, j]) if i != j => r2(*i, *j),
                ("r", [i, j, k]) if i != j && j != k && i != k => r3(*i, *j, *k),
                _ => return Err(unknown()),
            }
        }
    })
}

pub const COMPONENT_NAMES: [&str; 7] = ["u0", "u1", "v0", "v1", "v2", "v3", "v4"];

/// Index `(n1, n2, n3)` of `n1 s(e1) + n2 s(e2) + n3 s(e3)` in the Mordell–Weil group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SectionIndex(pub [i64; 3]);

impl SectionIndex {
    pub fn eps_i(&self) -> [i64; 3] {
        self.0.map(|n| n.rem_euclid(2))
    }

    pub fn eps(&self) -> i64 {
        self.eps_i().iter().sum()
    }

    /// `[eps/2]`.
    pub fn half_eps(&self) -> i64 {
        self.eps() / 2
    }

    /// `m = (n1^2 + n2^2 + n3^2 - eps) / 4`; always an integer.
    pub fn m(&self) -> i64 {
        let s: i64 = self.0.iter().map(|n| n * n).sum::<i64>() - self.eps();
        debug_assert_eq!(s.rem_euclid(4), 0);
        s / 4
    }

    pub fn neg(&self) -> SectionIndex {
        SectionIndex(self.0.map(|n| -n))
    }

    pub fn add(&self, o: &SectionIndex) -> SectionIndex {
        SectionIndex(std::array::from_fn(|k| self.0[k] + o.0[k]))
    }
}

pub fn section_class(idx: &SectionIndex) -> DivisorClass {
    let n = idx.0;
    let ei = idx.eps_i();
    let eps = idx.eps();
    let h = idx.half_eps();
    let m = idx.m();
    let mut c = [0i64; 10];
    c[0] = 3 * m + h * (eps - 1);
    for k in 0..3 {
        c[1 + k] = -(m - (n[k] + ei[k]) / 2 + h * ei[k]);
        c[4 + k] = -(m + (n[k] - ei[k]) / 2 + h * ei[k]);
    }
    c[7] = -(m + h * (eps - 2));
    c[8] = c[7];
    c[9] = -(m + (1 - h) * (eps - 1));
    DivisorClass(c)
}

/// The same class built from fiber components:
/// `e9 + sum n_i (e_i - e9) - sum (n_i - eps_i)/2 (u0 + v0 - v_i) - [eps/2](u0 + (eps-2) v0 - sum eps_i v_i - v4) + m f`.
pub fn section_class_via_components(idx: &SectionIndex) -> DivisorClass {
    let c = |s: &str| named_class(s).expect("catalog name");
    let n = idx.0;
    let ei = idx.eps_i();
    let eps = idx.eps();
    let h = idx.half_eps();
    let (u0, v0, v4) = (c("u0"), c("v0"), c("v4"));
    let vs = [c("v1"), c("v2"), c("v3")];
    let mut s = zero_section();
    for k in 0..3 {
        s = s + n[k] * (DivisorClass::e(k + 1) - zero_section());
        s = s - ((n[k] - ei[k]) / 2) * (u0 + v0 - vs[k]);
    }
    let mut bracket = u0 + (eps - 2) * v0 - v4;
    for k in 0..3 {
        bracket = bracket - ei[k] * vs[k];
    }
    s - h * bracket + idx.m() * fiber_class()
}

pub fn is_numerical_section(s: &DivisorClass) -> bool {
    gram(s, &fiber_class()) == 1 && s.square() == -1
}

fn require_section(s: &DivisorClass) -> Result<()> {
    if is_numerical_section(s) {
        Ok(())
    } else {
        Err(Error::NotNumericalSection {
            sf: gram(s, &fiber_class()),
            ss: s.square(),
        })
    }
}

/// `s1 + s2 = s0 + (s1 - s0) + (s2 - s0) - ((s1 - s0).(s2 - s0)) f`.
pub fn mw_add(s1: &DivisorClass, s2: &DivisorClass) -> Result<DivisorClass> {
    require_section(s1)?;
    require_section(s2)?;
    let s0 = zero_section();
    let d1 = *s1 - s0;
    let d2 = *s2 - s0;
    Ok(s0 + d1 + d2 - gram(&d1, &d2) * fiber_class())
}

pub fn mw_inverse(idx: &SectionIndex) -> DivisorClass {
    section_class(&idx.neg())
}

/// The roots `r14, r25, r36` spanning the Mordell–Weil part.
pub fn mw_roots() -> [DivisorClass; 3] {
    [r2(1, 4), r2(2, 5), r2(3, 6)]
}

/// Coordinates of the orthogonal projection onto `span(r14, r25, r36)`.
pub fn mw_project(s: &DivisorClass) -> Result<[Rational; 3]> {
    require_section(s)?;
    Ok(mw_roots().map(|r| rat(gram(s, &r), r.square())))
}

/// `(n . n') / 2`, the height pairing on `A1* + A1* + A1*`.
pub fn height_pairing(n: &SectionIndex, n2: &SectionIndex) -> Rational {
    rat((0..3).map(|k| n.0[k] * n2.0[k]).sum(), 2)
}

/// Height pairing computed from classes: minus the pairing of the projections.
pub fn height_pairing_classes(s1: &DivisorClass, s2: &DivisorClass) -> Result<Rational> {
    let p1 = mw_project(s1)?;
    let p2 = mw_project(s2)?;
    let mut acc = Rational::zero();
    for (k, r) in mw_roots().iter().enumerate() {
        acc += &p1[k] * &p2[k] * Rational::from_integer(r.square().into());
    }
    Ok(-acc)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberIntersections {
    pub u0: i64,
    pub u1: i64,
    pub v0: i64,
    pub v1: i64,
    pub v2: i64,
    pub v3: i64,
    pub v4: i64,
}

impl FiberIntersections {
    pub fn as_array(&self) -> [i64; 7] {
        [self.u0, self.u1, self.v0, self.v1, self.v2, self.v3, self.v4]
    }

    /// One multiplicity-one component hit on each reducible fiber, and `v4` missed.
    pub fn meets_one_simple_component(&self) -> bool {
        let a = self.as_array();
        a.iter().all(|&x| x == 0 || x == 1)
            && self.u0 + self.u1 == 1
            && self.v0 + self.v1 + self.v2 + self.v3 == 1
            && self.v4 == 0
    }
}

/// The closed forms in `eps_i`, `eps`, `[eps/2]`.
pub fn fiber_intersections(idx: &SectionIndex) -> FiberIntersections {
    let ei = idx.eps_i();
    let eps = idx.eps();
    let h = idx.half_eps();
    let vi = |k: usize| ei[k] + h * (1 - 2 * ei[k]);
    FiberIntersections {
        u0: 1 - eps + 2 * h,
        u1: eps - 2 * h,
        v0: 1 - eps + h * (2 * eps - 3),
        v1: vi(0),
        v2: vi(1),
        v3: vi(2),
        v4: 0,
    }
}

/// Direct pairing with the named components.
pub fn fiber_intersections_direct(s: &DivisorClass) -> FiberIntersections {
    let g = |n: &str| gram(s, &named_class(n).expect("catalog name"));
    FiberIntersections {
        u0: g("u0"),
        u1: g("u1"),
        v0: g("v0"),
        v1: g("v1"),
        v2: g("v2"),
        v3: g("v3"),
        v4: g("v4"),
    }
}

/// Exact rational solution of `sum x_k gens[k] = target`, if one exists.
pub fn solve_in_span(gens: &[DivisorClass], target: &DivisorClass) -> Option<Vec<Rational>> {
    let ncols = gens.len();
    // rows: the 10 coordinates; augmented column is the target
    let mut m: Vec<Vec<Rational>> = (0..10)
        .map(|r| {
            let mut row: Vec<Rational> = gens
                .iter()
                .map(|g| Rational::from_integer(g.0[r].into()))
                .collect();
            row.push(Rational::from_integer(target.0[r].into()));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..10).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..10 {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..=ncols {
                    let sub = &factor * &m[row][c];
                    m[r][c] -= sub;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if m[row..].iter().any(|r| !r[ncols].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][ncols].clone();
    }
    Some(x)
}

/// Generators `f, u1, v1, v2, v3, v4` of `<f> + L`.
pub fn fiber_span() -> Vec<DivisorClass> {
    ["f", "u1", "v1", "v2", "v3", "v4"]
        .iter()
        .map(|n| named_class(n).expect("catalog name"))
        .collect()
}

/// Integer coefficients expressing `d` in [`fiber_span`], if `d` lies in its integer span.
pub fn fiber_span_certificate(d: &DivisorClass) -> Option<Vec<i64>> {
    let x = solve_in_span(&fiber_span(), d)?;
    x.iter()
        .map(|q| {
            if q.is_integer() {
                i64::try_from(q.to_integer()).ok()
            } else {
                None
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShiodaTate {
    pub case: CaseLabel,
    pub configuration: String,
    pub l_type: &'static str,
    pub l_rank: u32,
    pub mw_rank: u32,
    pub mw_lattice: &'static str,
    pub oguiso_shioda_no: u32,
}

impl ShiodaTate {
    /// `rank NS = 2 + rank L + rank MW = 10`.
    pub fn balances(&self) -> bool {
        2 + self.l_rank + self.mw_rank == 10
    }
}

pub fn shioda_tate_report(case: CaseLabel) -> ShiodaTate {
    let (l_type, l_rank, mw_rank, mw_lattice, no) = match case {
        CaseLabel::Generic => ("A1+D4", 5, 3, "A1*+A1*+A1*", 18),
        CaseLabel::EZero => ("A1+D5", 6, 2, "A1*+<1/4>", 30),
        CaseLabel::FZero => ("A1+E6", 7, 1, "<1/6>", 49),
        CaseLabel::VZero => ("E7", 7, 1, "A1*", 43),
    };
    let configuration = format!(
        "[{}]",
        case.expected_types()
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    ShiodaTate {
        case,
        configuration,
        l_type,
        l_rank,
        mw_rank,
        mw_lattice,
        oguiso_shioda_no: no,
    }
}

/// Root-basis check of the `E8` diagram `r12 - r23 - ... - r78` with `r123` on `r34`,
/// extended by `r89`: every root has square `-2`, adjacent roots pair to `1`, others to `0`.
pub fn e8_diagram_holds() -> bool {
    let mut roots: Vec<DivisorClass> = (1..=8).map(|i| r2(i, i + 1)).collect();
    roots.push(r3(1, 2, 3));
    let mut edges: Vec<(usize, usize)> = (0..7).map(|i| (i, i + 1)).collect();
    edges.push((2, 8));
    let adjacent = |a: usize, b: usize| edges.iter().any(|&(x, y)| (x, y) == (a, b) || (y, x) == (a, b));
    for a in 0..roots.len() {
        if roots[a].square() != -2 {
            return false;
        }
        for b in a + 1..roots.len() {
            let want = if adjacent(a, b) { 1 } else { 0 };
            if gram(&roots[a], &roots[b]) != want {
                return false;
            }
        }
    }
    // all are orthogonal to f; all but r89 are orthogonal to s0
    roots
        .iter()
        .all(|r| gram(r, &fiber_class()) == 0)
        && roots[..7]
            .iter()
            .chain(std::iter::once(&roots[8]))
            .all(|r| gram(r, &zero_section()) == 0)
}

/// `D4~` shape of the `I0*` components and the two fiber decompositions of `f`.
pub fn fiber_components_hold() -> bool {
    let c = |n: &str| named_class(n).expect("catalog name");
    let v: Vec<DivisorClass> = ["v0", "v1", "v2", "v3"].iter().map(|n| c(n)).collect();
    let v4 = c("v4");
    let shape = v.iter().all(|x| gram(&v4, x) == 1 && x.square() == -2)
        && (0..4).all(|i| (0..4).all(|j| i == j || gram(&v[i], &v[j]) == 0));
    let sum_v = v[0] + v[1] + v[2] + v[3] + 2 * v4;
    shape && sum_v == fiber_class() && c("u0") + c("u1") == fiber_class() && gram(&c("u0"), &c("u1")) == 2
}

/// Every entry lies in `Z/2`.
pub fn is_half_integral(x: &[Rational]) -> bool {
    x.iter().all(|q| (q * Rational::from_integer(2.into())).is_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(a: i64, b: i64, c: i64) -> SectionIndex {
        SectionIndex([a, b, c])
    }

    #[test]
    fn gram_examples() {
        let f = fiber_class();
        assert_eq!(gram(&f, &f), 0);
        assert_eq!(gram(&f, &zero_section()), 1);
        let u0 = named_class("u0").unwrap();
        let u1 = named_class("u1").unwrap();
        assert_eq!(gram(&u0, &u1), 2);
    }

    #[test]
    fn named_classes() {
        assert_eq!(named_class("v4").unwrap(), DivisorClass::e(7) - DivisorClass::e(8));
        assert_eq!(named_class("r123").unwrap(), r3(1, 2, 3));
        assert!(matches!(named_class("w3"), Err(Error::UnknownName(_))));
        assert!(named_class("r11").is_err());
    }

    #[test]
    fn section_examples() {
        assert_eq!(section_class(&idx(0, 0, 0)), zero_section());
        assert_eq!(
            section_class(&idx(1, 1, 0)),
            DivisorClass::l() - DivisorClass::e(4) - DivisorClass::e(5)
        );
        let s = section_class(&idx(2, 0, 0));
        assert_eq!(s.0, [3, 0, -1, -1, -2, -1, -1, -1, -1, 0]);
        assert!(is_numerical_section(&s));
        assert!(!is_numerical_section(&fiber_class()));
        assert!(is_numerical_section(&DivisorClass::e(7)));
    }

    #[test]
    fn mw_examples() {
        let e1 = DivisorClass::e(1);
        let e2 = DivisorClass::e(2);
        assert_eq!(mw_add(&e1, &zero_section()).unwrap(), e1);
        assert_eq!(
            mw_add(&e1, &e2).unwrap(),
            e1 + e2 - zero_section() + fiber_class()
        );
        assert_eq!(mw_project(&DivisorClass::e(7)).unwrap(), [rat(0, 1), rat(0, 1), rat(0, 1)]);
        assert_eq!(height_pairing(&idx(1, 0, 0), &idx(1, 0, 0)), rat(1, 2));
        assert_eq!(height_pairing(&idx(1, 0, 0), &idx(0, 1, 0)), rat(0, 1));
        assert!(mw_add(&fiber_class(), &e1).is_err());
    }

    #[test]
    fn intersections_examples() {
        let r = fiber_intersections(&idx(0, 0, 0));
        assert_eq!((r.u0, r.v0), (1, 1));
        let r = fiber_intersections(&idx(1, 0, 0));
        assert_eq!((r.u1, r.v1), (1, 1));
        let r = fiber_intersections(&idx(1, 1, 0));
        assert_eq!((r.u0, r.v3), (1, 1));
    }

    #[test]
    fn structure() {
        assert!(e8_diagram_holds());
        assert!(fiber_components_hold());
        for c in CaseLabel::ALL {
            assert!(shioda_tate_report(c).balances());
        }
    }
}
