//! Named suites of exact checks, each reporting the first failing difference.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{rat, FieldElem, Rational};
use crate::lattice::{self, DivisorClass, SectionIndex};
use crate::octahedral::{self, act, enumerate_group, Catalog, Group};
use crate::pencil::{self, cubic, relations, relations::Identity};
use crate::weierstrass::{self, CaseLabel, FiberType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Invariants,
    Groups,
    Molien,
    Fibers,
    Lattice,
    Sections,
    FiberGroups,
    Modulus,
    Values,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Invariants,
        Suite::Groups,
        Suite::Molien,
        Suite::Fibers,
        Suite::Lattice,
        Suite::Sections,
        Suite::FiberGroups,
        Suite::Modulus,
        Suite::Values,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Invariants => "invariants",
            Suite::Groups => "groups",
            Suite::Molien => "molien",
            Suite::Fibers => "fibers",
            Suite::Lattice => "lattice",
            Suite::Sections => "sections",
            Suite::FiberGroups => "fibergroups",
            Suite::Modulus => "modulus",
            Suite::Values => "values",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .iter()
            .copied()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub difference: Option<String>,
}

impl CheckResult {
    fn ok(name: impl Into<String>, passed: bool) -> Self {
        CheckResult {
            name: name.into(),
            passed,
            difference: if passed { None } else { Some("false".into()) },
        }
    }

    fn eq<T: PartialEq + fmt::Display>(name: impl Into<String>, got: T, want: T) -> Self {
        let passed = got == want;
        CheckResult {
            name: name.into(),
            passed,
            difference: if passed {
                None
            } else {
                Some(format!("got {got}, expected {want}"))
            },
        }
    }

    fn identity(id: Identity) -> Self {
        let passed = id.holds();
        CheckResult {
            name: id.name,
            passed,
            difference: if passed { None } else { Some(id.residual.to_string()) },
        }
    }

    fn error(name: impl Into<String>, e: Error) -> Self {
        CheckResult {
            name: name.into(),
            passed: false,
            difference: Some(format!("error: {e}")),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: bool,
    pub total: usize,
    pub failed: usize,
    pub first_failure: Option<CheckResult>,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    fn from_checks(suite: Suite, checks: Vec<CheckResult>) -> Self {
        let failed = checks.iter().filter(|c| !c.passed).count();
        SuiteReport {
            suite,
            passed: failed == 0,
            total: checks.len(),
            failed,
            first_failure: checks.iter().find(|c| !c.passed).cloned(),
            checks,
        }
    }
}

pub fn run(suite: Suite) -> SuiteReport {
    let checks = match suite {
        Suite::Invariants => invariants(),
        Suite::Groups => groups(),
        Suite::Molien => molien(),
        Suite::Fibers => fibers(),
        Suite::Lattice => lattice_sweep(5),
        Suite::Sections => sections(),
        Suite::FiberGroups => fiber_groups(),
        Suite::Modulus => modulus(),
        Suite::Values => values(),
    };
    SuiteReport::from_checks(suite, checks)
}

/// Runs the suites on separate threads; reports come back in the given order.
pub fn run_many(suites: &[Suite]) -> Vec<SuiteReport> {
    std::thread::scope(|s| {
        let handles: Vec<_> = suites.iter().map(|&x| s.spawn(move || run(x))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked"))
            .collect()
    })
}

fn invariants() -> Vec<CheckResult> {
    let mut out = Vec::new();
    for (label, cat) in [("alpha,beta", Catalog::alpha_beta()), ("V", Catalog::formal())] {
        for (name, p) in octahedral::catalog_identities(cat) {
            out.push(CheckResult::identity(Identity::new(format!("{name} [{label}]"), p)));
        }
    }
    out
}

fn groups() -> Vec<CheckResult> {
    let mut out = Vec::new();
    for (g, n) in [(Group::Quaternion, 8), (Group::Tetrahedral, 24), (Group::Octahedral, 48)] {
        let elems: Vec<_> = enumerate_group(g).into_iter().filter(|e| e.in_group(g)).collect();
        out.push(CheckResult::eq(format!("|{}|", g.name()), elems.len(), n));
        out.push(CheckResult::ok(format!("{} closed", g.name()), octahedral::is_closed(&elems)));
    }
    let cat = Catalog::alpha_beta();
    let mut f_inv = true;
    let mut ve_split = true;
    let mut perm_fixed = true;
    let mut consistent = true;
    for el in enumerate_group(Group::Octahedral) {
        f_inv &= act(&el, &cat.f) == cat.f;
        let want = if el.tetrahedral { Some(1) } else { Some(-1) };
        ve_split &= octahedral::sign_under(&el, &cat.v) == want && octahedral::sign_under(&el, &cat.e) == want;
        match octahedral::action_signature(&el) {
            Ok(sig) => {
                if el.quaternion {
                    perm_fixed &= sig.perm == [0, 1, 2];
                }
                for k in 0..3 {
                    let img = act(&el, &cat.vk[k]);
                    let target = &cat.vk[sig.perm[k]];
                    consistent &= if sig.signs[k] > 0 { img == *target } else { img == -target };
                }
            }
            Err(_) => consistent = false,
        }
    }
    out.push(CheckResult::ok("F invariant under all 48", f_inv));
    out.push(CheckResult::ok("V, E fixed by tetrahedral, negated otherwise", ve_split));
    out.push(CheckResult::ok("quaternion elements act by signs only", perm_fixed));
    out.push(CheckResult::ok("signed permutations match the action on V1, V2, V3", consistent));
    out
}

fn molien() -> Vec<CheckResult> {
    let mut out = Vec::new();
    for g in [Group::Quaternion, Group::Tetrahedral, Group::Octahedral] {
        match octahedral::molien_series(g, 48) {
            Ok(series) => {
                let closed = octahedral::hilbert_closed_form(g, 48);
                let fmt = |v: &[Rational]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
                out.push(CheckResult::eq(format!("{} Molien through t^48", g.name()), fmt(&series), fmt(&closed)));
            }
            Err(e) => out.push(CheckResult::error(format!("{} Molien", g.name()), e)),
        }
    }
    out
}

const GENERIC_ORDERS: [[u32; 3]; 4] = [[0, 0, 1], [1, 1, 2], [1, 2, 3], [2, 3, 6]];

/// A deterministic spread of rational moduli `(a:b)` off `{0, 1, inf}`.
pub fn sample_moduli(n: usize) -> Vec<(FieldElem, FieldElem)> {
    let mut out = Vec::new();
    let mut k: i64 = 1;
    while out.len() < n {
        let a = FieldElem::rat(3 * k + 1, k % 7 + 1);
        let b = FieldElem::rat(-(5 * k) + 17, 2 * k + 1);
        k += 1;
        if a.is_zero() || b.is_zero() || a == b {
            continue;
        }
        out.push((a, b));
    }
    out
}

pub fn check_generic_moduli(a: &FieldElem, b: &FieldElem) -> CheckResult {
    let name = format!("(a:b) = ({a} : {b})");
    match weierstrass::configuration_ab(a, b) {
        Ok((_, recs)) => {
            let types: Vec<String> = recs.iter().map(|r| r.fiber_type.to_string()).collect();
            let orders: Vec<[u32; 3]> = recs.iter().map(|r| r.orders).collect();
            let ok = types == ["I1", "II", "III", "I0*"]
                && orders == GENERIC_ORDERS
                && weierstrass::euler_sum(&recs) == 12;
            CheckResult {
                name,
                passed: ok,
                difference: if ok {
                    None
                } else {
                    Some(format!("types {types:?}, orders {orders:?}"))
                },
            }
        }
        Err(e) => CheckResult::error(name, e),
    }
}

fn fibers() -> Vec<CheckResult> {
    let mut out: Vec<CheckResult> = sample_moduli(50)
        .iter()
        .map(|(a, b)| check_generic_moduli(a, b))
        .collect();
    let confluent = [
        (CaseLabel::EZero, FiberType::IStar(1), [2, 3, 7]),
        (CaseLabel::FZero, FiberType::IVStar, [3, 4, 8]),
        (CaseLabel::VZero, FiberType::IIIStar, [3, 5, 9]),
    ];
    for (case, ft, orders) in confluent {
        let name = format!("confluent {case:?}");
        match weierstrass::symbolic_configuration(case) {
            Ok(recs) => {
                let hit = recs.iter().any(|r| r.fiber_type == ft && r.orders == orders);
                out.push(CheckResult::ok(format!("{name}: {ft} with orders {orders:?}"), hit));
                out.push(CheckResult::eq(format!("{name}: Euler sum"), weierstrass::euler_sum(&recs), 12));
            }
            Err(e) => out.push(CheckResult::error(name, e)),
        }
    }
    let generic = weierstrass::symbolic_configuration(CaseLabel::Generic);
    out.push(CheckResult::ok(
        "generic cover: fixed fibers I1, II, III",
        matches!(&generic, Ok(r) if r.iter().map(|x| x.fiber_type).collect::<Vec<_>>() == [FiberType::I(1), FiberType::II, FiberType::III]),
    ));
    out
}

/// The section sweep over `|n_i| <= bound`.
pub fn lattice_sweep(bound: i64) -> Vec<CheckResult> {
    let f = lattice::fiber_class();
    let basis = [
        SectionIndex([1, 0, 0]),
        SectionIndex([0, 1, 0]),
        SectionIndex([0, 0, 1]),
    ];
    let mut bad: Vec<String> = Vec::new();
    let mut count = 0usize;
    let range = -bound..=bound;
    for a in range.clone() {
        for b in range.clone() {
            for c in range.clone() {
                count += 1;
                let n = SectionIndex([a, b, c]);
                let s = lattice::section_class(&n);
                let mut why = Vec::new();
                if s.dot(&f) != 1 || s.square() != -1 {
                    why.push("not a numerical section");
                }
                if s != lattice::section_class_via_components(&n) {
                    why.push("component formula disagrees");
                }
                let want = [rat(a, 2), rat(b, 2), rat(c, 2)];
                if lattice::mw_project(&s).ok() != Some(want) {
                    why.push("mw_project round trip");
                }
                if lattice::fiber_intersections(&n) != lattice::fiber_intersections_direct(&s) {
                    why.push("fiber intersections");
                }
                for m in basis.iter().chain(std::iter::once(&n.neg())) {
                    let t = lattice::section_class(m);
                    let sum = lattice::section_class(&n.add(m));
                    match lattice::mw_add(&s, &t) {
                        Ok(added) => {
                            if lattice::fiber_span_certificate(&(added - sum)).is_none() {
                                why.push("addition not in the fiber span");
                            }
                        }
                        Err(_) => why.push("mw_add rejected a section"),
                    }
                }
                if !why.is_empty() {
                    bad.push(format!("{:?}: {}", n.0, why.join(", ")));
                }
            }
        }
    }
    let mut out = vec![CheckResult {
        name: format!("{count} section indices"),
        passed: bad.is_empty(),
        difference: bad.first().cloned(),
    }];
    let mut heights = true;
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            let want = if i == j { rat(1, 2) } else { rat(0, 1) };
            heights &= lattice::height_pairing(x, y) == want;
            let hc = lattice::height_pairing_classes(&lattice::section_class(x), &lattice::section_class(y));
            heights &= hc.ok() == Some(want);
        }
    }
    out.push(CheckResult::ok("height matrix diag(1/2, 1/2, 1/2)", heights));
    out.push(CheckResult::ok("E8 diagram", lattice::e8_diagram_holds()));
    out.push(CheckResult::ok("fiber components", lattice::fiber_components_hold()));
    for case in CaseLabel::ALL {
        out.push(CheckResult::ok(
            format!("Shioda-Tate {case:?}"),
            lattice::shioda_tate_report(case).balances(),
        ));
    }
    out
}

fn sections() -> Vec<CheckResult> {
    let mut out = Vec::new();
    match pencil::theorem_residuals() {
        Ok(rs) => {
            for ((i, j), sign, r) in rs {
                let s = if sign > 0 { "+" } else { "-" };
                out.push(CheckResult::identity(Identity::new(format!("generator V{i}V{j} {s}"), r)));
            }
        }
        Err(e) => out.push(CheckResult::error("generators", e)),
    }
    let cat = Catalog::alpha_beta();
    match pencil::transform_check(&cat.e.pow(2), &cat.f.pow(3)) {
        Ok((pulled, expected)) => out.push(CheckResult::identity(Identity::new(
            "Weierstrass equation = (T-S)^2 L^3 member",
            &pulled - &expected,
        ))),
        Err(e) => out.push(CheckResult::error("transform", e)),
    }
    for c in [Catalog::alpha_beta(), Catalog::formal()] {
        for m in pencil::singular_members(c) {
            out.push(CheckResult::identity(Identity::new(
                format!("member {}", m.label),
                &m.cubic - &m.normal_form.scale(&m.scale),
            )));
        }
        out.push(CheckResult::identity(Identity::new(
            "concurrent lines factor",
            &pencil::line_product(c) - &pencil::singular_members(c)[3].normal_form,
        )));
        let p = pencil::CubicPencil::from_catalog(c);
        for k in 0..3 {
            for sign in [1, -1] {
                let pt = pencil::base_point_projective(c, k, sign);
                for (which, cub) in [("C_S", &p.c_s), ("C_T", &p.c_t)] {
                    out.push(CheckResult::identity(Identity::new(
                        format!("base point {}{} on {which}", k + 1, if sign > 0 { "+" } else { "-" }),
                        pencil::plug_point(cub, &pt),
                    )));
                }
            }
        }
    }
    out.push(CheckResult::ok(
        "Z = 0 meets every member only at (0:1:0)",
        pencil::triple_contact_holds(&pencil::CubicPencil::from_catalog(cat)),
    ));
    out.push(CheckResult::ok("base points permuted by the octahedral group", pencil::base_points_permuted()));
    let st = [FieldElem::int(2), FieldElem::int(7)];
    match pencil::eval_section(&FieldElem::int(1), &FieldElem::int(2), &st, 1, 2, 1) {
        Ok(p) => out.push(CheckResult::ok("generator at (1,2), (2:7) on the curve", p.on_curve)),
        Err(e) => out.push(CheckResult::error("eval_section", e)),
    }
    out
}

/// Pairs of integers used as sample group elements.
const SAMPLE_PAIRS: [(i64, i64); 12] = [
    (2, 3),
    (5, -7),
    (3, 3),
    (-1, 4),
    (2, 2),
    (11, 13),
    (-3, -5),
    (7, 1),
    (4, -9),
    (6, 17),
    (-2, 19),
    (8, 8),
];

fn fiber_groups() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let (alpha, beta) = (FieldElem::int(1), FieldElem::int(2));
    let (_, e, f) = match octahedral::eval_vef(&alpha, &beta) {
        Ok(x) => x,
        Err(err) => return vec![CheckResult::error("evaluate", err)],
    };
    let nodal = cubic::PlaneCubic::nodal(&e);
    let cusp = cubic::PlaneCubic::cuspidal(&f);
    let mut mu_ok = true;
    let mut nu_ok = true;
    for &(x, y) in &SAMPLE_PAIRS {
        for conv in [cubic::MuConvention::Printed, cubic::MuConvention::Reciprocal] {
            let (mx, my) = (FieldElem::rat(x, 3), FieldElem::rat(y, 5));
            let r = (|| -> Result<bool> {
                let p = cubic::mu_inverse(&e, &mx, conv)?;
                let q = cubic::mu_inverse(&e, &my, conv)?;
                let sum = nodal.add(&p, &q)?;
                Ok(nodal.contains(&p) && cubic::mu(&e, &sum, conv)? == &mx * &my)
            })();
            mu_ok &= r == Ok(true);
        }
        let (nx, ny) = (FieldElem::rat(x, 7), FieldElem::rat(y, 2));
        let r = (|| -> Result<bool> {
            let p = cubic::nu_inverse(&f, &nx)?;
            let q = cubic::nu_inverse(&f, &ny)?;
            let sum = cusp.add(&p, &q)?;
            Ok(cusp.contains(&p) && cubic::nu(&f, &sum)? == &nx + &ny)
        })();
        nu_ok &= r == Ok(true);
    }
    out.push(CheckResult::ok(format!("mu multiplicative on {} pairs", SAMPLE_PAIRS.len()), mu_ok));
    out.push(CheckResult::ok(format!("nu additive on {} pairs", SAMPLE_PAIRS.len()), nu_ok));
    let cat = Catalog::formal();
    for id in relations::annihilator_identities(cat)
        .into_iter()
        .chain(relations::intermediate_identities(cat))
        .chain(relations::xi_identities(cat))
        .chain(relations::xi_subfield_identities(cat))
        .chain(relations::quartic_identities(cat))
    {
        out.push(CheckResult::identity(id));
    }
    match relations::singular_group_generators(relations::SingularKind::I1, &alpha, &beta) {
        Ok(g) => {
            for (k, gk) in g.iter().enumerate() {
                let m = relations::base_point_mu(&alpha, &beta, k);
                out.push(CheckResult::ok(format!("mu of base point {} = E{}+/E{}-", k + 1, k + 1, k + 1), m.as_ref() == Ok(gk)));
            }
        }
        Err(e) => out.push(CheckResult::error("I1 generators", e)),
    }
    match relations::singular_group_generators(relations::SingularKind::II, &alpha, &beta) {
        Ok(g) => {
            let pts = pencil::base_points(&alpha, &beta);
            let ok = pts.map(|pts| {
                pts.iter().filter(|p| p.sign > 0).all(|p| {
                    let k = octahedral::pair_to_k(p.pair[0], p.pair[1]).unwrap_or(0);
                    cubic::nu(&f, &cubic::CubicPoint::affine(p.x.clone(), p.y.clone())).as_ref() == Ok(&g[k])
                })
            });
            out.push(CheckResult::ok("nu of base points = ViVj", ok == Ok(true)));
        }
        Err(e) => out.push(CheckResult::error("II generators", e)),
    }
    out.push(CheckResult::ok(
        "E_k+ E_k- = E_i E_j at (1,2)",
        relations::product_relation(&alpha, &beta) == Ok(true),
    ));
    out
}

fn modulus() -> Vec<CheckResult> {
    let cat = Catalog::formal();
    relations::modulus_identities()
        .into_iter()
        .chain(relations::lambda_identities(cat))
        .chain(relations::torus_identities(cat))
        .map(CheckResult::identity)
        .collect()
}

fn values() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let (alpha, beta) = (FieldElem::int(1), FieldElem::int(2));
    match octahedral::eval_vef(&alpha, &beta) {
        Ok((v, e, f)) => {
            out.push(CheckResult::eq("E(1,2)", e.clone(), FieldElem::int(-39032)));
            out.push(CheckResult::eq("F(1,2)", f.clone(), FieldElem::int(1924)));
            out.push(CheckResult::eq("V(1,2)", v.clone(), FieldElem::int(-120)));
            out.push(CheckResult::eq("E^2 = F^3 - 27V^4", e.pow(2), &f.pow(3) - &(&v.pow(4) * &FieldElem::int(27))));
        }
        Err(err) => out.push(CheckResult::error("V, E, F at (1,2)", err)),
    }
    let want = FieldElem::from_rational(Rational::new(481i64.pow(3).into(), 4879i64.pow(2).into()));
    match octahedral::eval_vef(&alpha, &beta).and_then(|(_, e, f)| weierstrass::j0(&e.pow(2), &f.pow(3))) {
        Ok(j) => {
            out.push(CheckResult::eq("J0(1,2)", j.clone(), want));
            let lowest = j
                .to_rational()
                .map(|q| q.numer().to_string() == "111284641" && q.denom().to_string() == "23804641");
            out.push(CheckResult::ok("J0(1,2) = 111284641/23804641 in lowest terms", lowest == Some(true)));
        }
        Err(err) => out.push(CheckResult::error("J0(1,2)", err)),
    }
    let s = lattice::section_class(&SectionIndex([1, 1, 0]));
    out.push(CheckResult::eq(
        "section (1,1,0)",
        s,
        DivisorClass::l() - DivisorClass::e(4) - DivisorClass::e(5),
    ));
    match relations::torus_j(&alpha, &beta) {
        Ok(j) => out.push(CheckResult::eq(
            "J'(1,2) = 1924^3/(27 120^4)",
            j,
            FieldElem::from_rational(Rational::new(1924i64.pow(3).into(), (27 * 120i64.pow(4)).into())),
        )),
        Err(err) => out.push(CheckResult::error("J'(1,2)", err)),
    }
    out
}
