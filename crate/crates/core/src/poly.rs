//! Sparse multivariate polynomials and rational functions over `K`.
//!
//! Every polynomial lives in one fixed ring `K[alpha, beta, S, T, X, Y, Z, x, t, V1, V2, V3]`.
//! Monomials are exponent arrays ordered lexicographically (alpha most
//! significant), and zero coefficients are never stored, so structural
//! equality is coefficient-wise equality.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::FieldElem;

pub const NVARS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Alpha,
    Beta,
    S,
    T,
    X,
    Y,
    Z,
    /// Lower-case `x`, the unknown of the annihilating polynomials.
    LowerX,
    /// Lower-case `t`, the series variable.
    LowerT,
    V1,
    V2,
    V3,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::Alpha,
        Var::Beta,
        Var::S,
        Var::T,
        Var::X,
        Var::Y,
        Var::Z,
        Var::LowerX,
        Var::LowerT,
        Var::V1,
        Var::V2,
        Var::V3,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Alpha => "alpha",
            Var::Beta => "beta",
            Var::S => "S",
            Var::T => "T",
            Var::X => "X",
            Var::Y => "Y",
            Var::Z => "Z",
            Var::LowerX => "x",
            Var::LowerT => "t",
            Var::V1 => "V1",
            Var::V2 => "V2",
            Var::V3 => "V3",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        match s {
            "α" => Some(Var::Alpha),
            "β" => Some(Var::Beta),
            _ => Var::ALL.into_iter().find(|v| v.name() == s),
        }
    }

    /// `V1`, `V2`, `V3` for `k = 1, 2, 3`.
    pub fn v(k: usize) -> Var {
        match k {
            1 => Var::V1,
            2 => Var::V2,
            3 => Var::V3,
            _ => panic!("V index {k} out of range"),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub type Monomial = [u16; NVARS];

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    std::array::from_fn(|k| a[k] + b[k])
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, FieldElem>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Self::constant(FieldElem::one())
    }

    pub fn constant(c: FieldElem) -> Self {
        Self::term(c, [0; NVARS])
    }

    pub fn int(n: i64) -> Self {
        Self::constant(FieldElem::int(n))
    }

    pub fn var(v: Var) -> Self {
        let mut m = [0; NVARS];
        m[v.index()] = 1;
        Self::term(FieldElem::one(), m)
    }

    pub fn term(c: FieldElem, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    /// `c * prod v^e` over the listed powers.
    pub fn monomial(c: FieldElem, powers: &[(Var, u16)]) -> Self {
        let mut m = [0; NVARS];
        for &(v, e) in powers {
            m[v.index()] += e;
        }
        Self::term(c, m)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, FieldElem)>>(it: I) -> Self {
        let mut acc: HashMap<Monomial, FieldElem> = HashMap::new();
        for (m, c) in it {
            *acc.entry(m).or_default() += &c;
        }
        Poly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElem)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|&e| e == 0))
    }

    pub fn to_constant(&self) -> Option<FieldElem> {
        match self.terms.len() {
            0 => Some(FieldElem::zero()),
            1 if self.is_constant() => self.terms.values().next().cloned(),
            _ => None,
        }
    }

    pub fn coeff(&self, m: &Monomial) -> FieldElem {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Variables that occur with positive exponent.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|v| self.terms.keys().any(|m| m[v.index()] > 0))
            .collect()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms
            .keys()
            .map(|m| m[v.index()] as u32)
            .max()
            .unwrap_or(0)
    }

    pub fn min_degree_in(&self, v: Var) -> u32 {
        self.terms
            .keys()
            .map(|m| m[v.index()] as u32)
            .min()
            .unwrap_or(0)
    }

    /// The common degree in `group` when every monomial has the same one.
    pub fn homogeneous_degree(&self, group: &[Var]) -> Option<u32> {
        let mut degs = self
            .terms
            .keys()
            .map(|m| group.iter().map(|v| m[v.index()] as u32).sum::<u32>());
        let d = degs.next().unwrap_or(0);
        degs.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous_in(&self, group: &[Var], d: u32) -> bool {
        self.is_zero() || self.homogeneous_degree(group) == Some(d)
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
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

    pub fn derivative(&self, v: Var) -> Self {
        let k = v.index();
        Poly::from_terms(self.terms.iter().filter(|(m, _)| m[k] > 0).map(|(m, c)| {
            let mut m2 = *m;
            m2[k] -= 1;
            (m2, c * &FieldElem::int(m[k] as i64))
        }))
    }

    /// Replaces each listed variable by a polynomial; unlisted variables are kept.
    pub fn substitute(&self, subs: &[(Var, Poly)]) -> Poly {
        let mut map: [Option<&Poly>; NVARS] = [None; NVARS];
        for (v, p) in subs {
            map[v.index()] = Some(p);
        }
        let mut powers: HashMap<(usize, u16), Poly> = HashMap::new();
        let mut acc: HashMap<Monomial, FieldElem> = HashMap::new();
        for (m, c) in &self.terms {
            let mut kept = [0u16; NVARS];
            let mut factor = Poly::one();
            for k in 0..NVARS {
                if m[k] == 0 {
                    continue;
                }
                match map[k] {
                    None => kept[k] = m[k],
                    Some(p) => {
                        let pw = powers
                            .entry((k, m[k]))
                            .or_insert_with(|| p.pow(m[k] as u32));
                        factor = &factor * &*pw;
                    }
                }
            }
            for (fm, fc) in factor.terms {
                *acc.entry(mono_mul(&fm, &kept)).or_default() += &(&fc * c);
            }
        }
        Poly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn eval(&self, assignment: &BTreeMap<Var, FieldElem>) -> Result<FieldElem> {
        let mut total = FieldElem::zero();
        let mut cache: HashMap<(usize, u16), FieldElem> = HashMap::new();
        for (m, c) in &self.terms {
            let mut val = c.clone();
            for (k, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = Var::ALL[k];
                let x = assignment.get(&v).ok_or(Error::MissingVariable(v))?;
                let p = cache.entry((k, e)).or_insert_with(|| x.pow(e as u32));
                val = &val * &*p;
            }
            total += &val;
        }
        Ok(total)
    }

    /// Convenience wrapper around [`Poly::eval`].
    pub fn eval_at(&self, values: &[(Var, FieldElem)]) -> Result<FieldElem> {
        self.eval(&values.iter().cloned().collect())
    }

    /// Substitutes constants for some variables, leaving the rest symbolic.
    pub fn specialize(&self, values: &[(Var, FieldElem)]) -> Poly {
        let subs: Vec<(Var, Poly)> = values
            .iter()
            .map(|(v, c)| (*v, Poly::constant(c.clone())))
            .collect();
        self.substitute(&subs)
    }

    /// Normal form modulo `V1^2 + V2^2 + V3^2`: every `V3^2` becomes `-V1^2 - V2^2`.
    pub fn reduce_conic(&self) -> Poly {
        let k3 = Var::V3.index();
        if self.terms.keys().all(|m| m[k3] < 2) {
            return self.clone();
        }
        let q = -(Poly::var(Var::V1).pow(2) + Poly::var(Var::V2).pow(2));
        let mut q_pows: Vec<Poly> = vec![Poly::one()];
        let mut acc: HashMap<Monomial, FieldElem> = HashMap::new();
        for (m, c) in &self.terms {
            let half = (m[k3] / 2) as usize;
            while q_pows.len() <= half {
                let next = q_pows.last().unwrap() * &q;
                q_pows.push(next);
            }
            let mut base = *m;
            base[k3] %= 2;
            for (qm, qc) in &q_pows[half].terms {
                *acc.entry(mono_mul(qm, &base)).or_default() += &(qc * c);
            }
        }
        Poly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// `V1 -> p1`, `V2 -> p2`, `V3 -> p3`.
    pub fn substitute_v(&self, v: &[Poly; 3]) -> Poly {
        self.substitute(&[
            (Var::V1, v[0].clone()),
            (Var::V2, v[1].clone()),
            (Var::V3, v[2].clone()),
        ])
    }

    /// Exact quotient by the linear form `t0*S - s0*T`, treating every other
    /// variable as part of the coefficients. Fails when the form does not divide.
    pub fn div_linear_st(&self, s0: &FieldElem, t0: &FieldElem) -> Result<Poly> {
        if s0.is_zero() && t0.is_zero() {
            return Err(Error::ZeroPoint);
        }
        let (ks, kt) = (Var::S.index(), Var::T.index());
        // Group by (S,T)-total degree and the remaining monomial; within each group
        // divide the binary form sum_k c_k S^k T^(d-k).
        let mut groups: BTreeMap<(u16, Monomial), BTreeMap<u16, FieldElem>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let d = m[ks] + m[kt];
            let mut rest = *m;
            rest[ks] = 0;
            rest[kt] = 0;
            groups.entry((d, rest)).or_default().insert(m[ks], c.clone());
        }
        let mut out: Vec<(Monomial, FieldElem)> = Vec::new();
        for ((d, rest), coeffs) in groups {
            if d == 0 {
                return Err(Error::NotDivisible);
            }
            let c = |k: u16| coeffs.get(&k).cloned().unwrap_or_default();
            // (t0 S - s0 T) * sum_{k<d} q_k S^k T^(d-1-k) has S^k coefficient t0 q_{k-1} - s0 q_k.
            let mut q: Vec<FieldElem> = vec![FieldElem::zero(); d as usize];
            if !t0.is_zero() {
                let t0_inv = t0.inv()?;
                for k in (1..=d).rev() {
                    let upper = if k < d {
                        &q[k as usize] * s0
                    } else {
                        FieldElem::zero()
                    };
                    q[(k - 1) as usize] = &(&c(k) + &upper) * &t0_inv;
                }
                if &(-s0) * &q[0] != c(0) {
                    return Err(Error::NotDivisible);
                }
            } else {
                if !c(d).is_zero() {
                    return Err(Error::NotDivisible);
                }
                let s0_inv = s0.inv()?;
                for k in 0..d {
                    q[k as usize] = -(&c(k) * &s0_inv);
                }
            }
            for (k, qk) in q.into_iter().enumerate() {
                let mut m = rest;
                m[ks] = k as u16;
                m[kt] = d - 1 - k as u16;
                out.push((m, qk));
            }
        }
        Ok(Poly::from_terms(out))
    }

    /// Multiplicity of the linear factor `t0*S - s0*T` in a form in `(S, T)`.
    pub fn vanishing_order(&self, s0: &FieldElem, t0: &FieldElem) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroForm);
        }
        if s0.is_zero() && t0.is_zero() {
            return Err(Error::ZeroPoint);
        }
        let mut f = self.clone();
        let mut n = 0;
        loop {
            match f.div_linear_st(s0, t0) {
                Ok(q) => {
                    f = q;
                    n += 1;
                }
                Err(Error::NotDivisible) => return Ok(n),
                Err(e) => return Err(e),
            }
        }
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            match terms.get_mut(m) {
                Some(x) => {
                    *x += c;
                    if x.is_zero() {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(*m, c.clone());
                }
            }
        }
        Poly { terms }
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut acc: HashMap<Monomial, FieldElem> =
            HashMap::with_capacity(self.len() * rhs.len() / 2 + 1);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                *acc.entry(mono_mul(m1, m2)).or_default() += &(c1 * c2);
            }
        }
        Poly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

macro_rules! forward_poly_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &'a Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Poly> for &'a Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                self.$m(&rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

impl From<FieldElem> for Poly {
    fn from(c: FieldElem) -> Self {
        Poly::constant(c)
    }
}

impl From<Var> for Poly {
    fn from(v: Var) -> Self {
        Poly::var(v)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_poly(self))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A quotient `num / den` with `den != 0`; equality is by cross-multiplication.
#[derive(Clone)]
pub struct RationalFn {
    pub num: Poly,
    pub den: Poly,
}

impl RationalFn {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(RationalFn { num, den })
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFn {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: FieldElem) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inv(&self) -> Result<Self> {
        RationalFn::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        RationalFn {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Cross-multiplied difference `n1*d2 - n2*d1`; zero exactly when the fractions agree.
    pub fn cross_difference(&self, other: &RationalFn) -> Poly {
        &(&self.num * &other.den) - &(&other.num * &self.den)
    }

    pub fn equals(&self, other: &RationalFn) -> bool {
        self.cross_difference(other).is_zero()
    }

    /// Equality in the function field of the conic `V1^2 + V2^2 + V3^2 = 0`.
    pub fn equals_mod_conic(&self, other: &RationalFn) -> bool {
        self.cross_difference(other).reduce_conic().is_zero()
    }

    /// Applies [`Poly::reduce_conic`] to numerator and denominator.
    pub fn reduce_conic(&self) -> Self {
        RationalFn {
            num: self.num.reduce_conic(),
            den: self.den.reduce_conic(),
        }
    }

    pub fn substitute(&self, subs: &[(Var, Poly)]) -> Result<Self> {
        RationalFn::new(self.num.substitute(subs), self.den.substitute(subs))
    }

    pub fn eval(&self, assignment: &BTreeMap<Var, FieldElem>) -> Result<FieldElem> {
        let d = self.den.eval(assignment)?;
        let n = self.num.eval(assignment)?;
        Ok(&n * &d.inv()?)
    }

    pub fn eval_at(&self, values: &[(Var, FieldElem)]) -> Result<FieldElem> {
        self.eval(&values.iter().cloned().collect())
    }

    /// Evaluates a polynomial in one variable `x` at this rational function,
    /// returning the cleared numerator `sum c_k num^k den^(n-k)` with `n = deg_x p`.
    pub fn plug_into(&self, p: &Poly, x: Var) -> Poly {
        let n = p.degree_in(x);
        let num_pows = powers(&self.num, n);
        let den_pows = powers(&self.den, n);
        let k = x.index();
        let mut acc = Poly::zero();
        for (m, c) in p.terms() {
            let e = m[k] as usize;
            let mut rest = *m;
            rest[k] = 0;
            let coeff = Poly::term(c.clone(), rest);
            acc = &acc + &(&coeff * &(&num_pows[e] * &den_pows[n as usize - e]));
        }
        acc
    }
}

fn powers(p: &Poly, n: u32) -> Vec<Poly> {
    let mut v = vec![Poly::one()];
    for _ in 0..n {
        let next = v.last().unwrap() * p;
        v.push(next);
    }
    v
}

impl<'a> Add<&'a RationalFn> for &'a RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &'a RationalFn) -> RationalFn {
        if self.den == rhs.den {
            return RationalFn {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            };
        }
        RationalFn {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl<'a> Sub<&'a RationalFn> for &'a RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &'a RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<'a> Mul<&'a RationalFn> for &'a RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &'a RationalFn) -> RationalFn {
        RationalFn {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// Shorthand used throughout the crate.
pub fn var(v: Var) -> Poly {
    Poly::var(v)
}

pub fn konst(n: i64) -> Poly {
    Poly::int(n)
}
