use serde::Serialize;

use ellsurf_core::lattice::{self, FiberIntersections, ShiodaTate};
use ellsurf_core::octahedral::{self, representatives, signature_of_matrix};
use ellsurf_core::pencil;
use ellsurf_core::verify::{self, Suite, SuiteReport};
use ellsurf_core::weierstrass::{self, Params};
use ellsurf_core::{
    CaseLabel, DivisorClass, Error, FieldElem, FiberRecord, Group, Rational, SectionIndex, WeierstrassData,
};

use crate::text;
use crate::{CliError, Output};

fn elem(name: &str, s: &str) -> Result<FieldElem, CliError> {
    s.parse::<FieldElem>()
        .map_err(|e| CliError::Usage(format!("--{name}: {e}")))
}

fn index(s: &str) -> Result<SectionIndex, CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(CliError::Usage(format!("expected three comma-separated integers, got `{s}`")));
    }
    let mut n = [0i64; 3];
    for (k, p) in parts.iter().enumerate() {
        n[k] = p
            .parse()
            .map_err(|_| CliError::Usage(format!("`{p}` is not an integer")))?;
    }
    Ok(SectionIndex(n))
}

fn rational_string(q: &Rational) -> String {
    q.to_string()
}

#[derive(Serialize)]
pub struct Classification {
    pub params: Params,
    #[serde(rename = "J0")]
    pub j0: String,
    pub case: CaseLabel,
    pub fibers: Vec<FiberRecord>,
    pub euler_sum: u32,
    pub minimal: bool,
}

fn classification(data: &WeierstrassData, a: &FieldElem, b: &FieldElem, fibers: Vec<FiberRecord>) -> Classification {
    let j0 = match weierstrass::j0(a, b) {
        Ok(j) => j.to_string(),
        Err(_) => "inf".into(),
    };
    Classification {
        params: data.params.clone(),
        j0,
        case: CaseLabel::of_ab(a, b),
        euler_sum: weierstrass::euler_sum(&fibers),
        minimal: weierstrass::is_minimal(&fibers),
        fibers,
    }
}

pub fn classify_ab(a: &str, b: &str) -> Result<Output, CliError> {
    let (a, b) = (elem("a", a)?, elem("b", b)?);
    if a.is_zero() && b.is_zero() {
        return Err(Error::DegenerateParameter.into());
    }
    let (data, recs) = weierstrass::configuration_ab(&a, &b)?;
    let c = classification(&data, &a, &b, recs);
    let t = text::classification(&c);
    Output::new(&c, t)
}

pub fn classify_cover(alpha: &str, beta: &str) -> Result<Output, CliError> {
    let (alpha, beta) = (elem("alpha", alpha)?, elem("beta", beta)?);
    let (data, recs) = weierstrass::fiber_configuration(&alpha, &beta)?;
    let (a, b) = match &data.params {
        Params::Cover { a, b, .. } => (a.clone(), b.clone()),
        _ => return Err(CliError::Internal("cover parameters missing".into())),
    };
    let c = classification(&data, &a, &b, recs);
    let t = text::classification(&c);
    Output::new(&c, t)
}

#[derive(Serialize)]
pub struct FibersReport {
    pub case: CaseLabel,
    /// Fibers at (0:1), (1:0), (1:1) over the symbolic parameters.
    pub fibers: Vec<FiberRecord>,
    pub moving_fiber: Option<&'static str>,
    pub shioda_tate: ShiodaTate,
}

pub fn fibers(case: CaseLabel) -> Result<Output, CliError> {
    let recs = weierstrass::symbolic_configuration(case)?;
    let r = FibersReport {
        case,
        fibers: recs,
        moving_fiber: if case == CaseLabel::Generic { Some("I0* at (E^2 : F^3)") } else { None },
        shioda_tate: lattice::shioda_tate_report(case),
    };
    let t = text::fibers(&r);
    Output::new(&r, t)
}

#[derive(Serialize)]
pub struct SectionReport {
    pub index: [i64; 3],
    pub class: [i64; 10],
    pub class_text: String,
    pub numerical_section: bool,
    pub intersections: FiberIntersections,
    pub projection: [String; 3],
    pub height: String,
}

fn section_report(n: &SectionIndex) -> Result<SectionReport, CliError> {
    let s = lattice::section_class(n);
    let proj = lattice::mw_project(&s)?;
    Ok(SectionReport {
        index: n.0,
        class: s.0,
        class_text: s.to_string(),
        numerical_section: lattice::is_numerical_section(&s),
        intersections: lattice::fiber_intersections(n),
        projection: proj.map(|q| rational_string(&q)),
        height: rational_string(&lattice::height_pairing(n, n)),
    })
}

pub fn section(n: &str) -> Result<Output, CliError> {
    let r = section_report(&index(n)?)?;
    let t = text::section(&r);
    Output::new(&r, t)
}

#[derive(Serialize)]
pub struct Certificate {
    pub generators: [&'static str; 6],
    pub coefficients: Vec<i64>,
}

#[derive(Serialize)]
pub struct MwReport {
    pub summands: [[i64; 3]; 2],
    pub sum: [i64; 3],
    pub class: [i64; 10],
    pub class_text: String,
    /// `mw_add(s1, s2) - section_class(n1 + n2)`.
    pub deviation: [i64; 10],
    pub certificate: Option<Certificate>,
}

pub fn mw(x: &str, y: &str) -> Result<Output, CliError> {
    let (n, m) = (index(x)?, index(y)?);
    let added = lattice::mw_add(&lattice::section_class(&n), &lattice::section_class(&m))?;
    let sum = n.add(&m);
    let reduced = lattice::section_class(&sum);
    let deviation: DivisorClass = added - reduced;
    let certificate = lattice::fiber_span_certificate(&deviation).map(|coefficients| Certificate {
        generators: ["f", "u1", "v1", "v2", "v3", "v4"],
        coefficients,
    });
    let r = MwReport {
        summands: [n.0, m.0],
        sum: sum.0,
        class: reduced.0,
        class_text: reduced.to_string(),
        deviation: deviation.0,
        certificate,
    };
    let ok = r.certificate.is_some();
    let t = text::mw(&r);
    let mut out = Output::new(&r, t)?;
    out.ok = ok;
    Ok(out)
}

#[derive(Serialize)]
pub struct MolienReport {
    pub group: Group,
    pub order: usize,
    pub degree: usize,
    pub coefficients: Vec<String>,
    pub closed_form: &'static str,
    pub matches_closed_form: bool,
}

pub fn molien(g: Group, degree: usize) -> Result<Output, CliError> {
    let series = octahedral::molien_series(g, degree)?;
    let closed = octahedral::hilbert_closed_form(g, degree);
    let r = MolienReport {
        group: g,
        order: g.order(),
        degree,
        coefficients: series.iter().map(rational_string).collect(),
        closed_form: match g {
            Group::Quaternion => "(1+t^6)/(1-t^4)^2",
            Group::Tetrahedral => "(1+t^12)/((1-t^6)(1-t^8))",
            Group::Octahedral => "(1+t^18)/((1-t^8)(1-t^12))",
        },
        matches_closed_form: series == closed,
    };
    let ok = r.matches_closed_form;
    let t = text::molien(&r);
    let mut out = Output::new(&r, t)?;
    out.ok = ok;
    Ok(out)
}

#[derive(Serialize)]
pub struct TableRow {
    pub row: usize,
    /// `[[a, b], [c, d]]`; the table lists the pair `±` this matrix.
    pub matrix: [[FieldElem; 2]; 2],
    pub images: [String; 3],
    pub tetrahedral: bool,
}

pub fn group_table() -> Result<Output, CliError> {
    let mut rows = Vec::with_capacity(24);
    for (k, m) in representatives().into_iter().enumerate() {
        let sig = signature_of_matrix(&m)?;
        rows.push(TableRow {
            row: k + 1,
            matrix: m,
            images: sig.images(),
            tetrahedral: k < 12,
        });
    }
    let t = text::group_table(&rows);
    Output::new(&rows, t)
}

pub fn verify(which: &str) -> Result<Output, CliError> {
    let suites: Vec<Suite> = if which == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![which.parse::<Suite>().map_err(|_| {
            let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
            CliError::Usage(format!("unknown suite `{which}`; expected one of {} or all", names.join(", ")))
        })?]
    };
    let reports: Vec<SuiteReport> = verify::run_many(&suites);
    let ok = reports.iter().all(|r| r.passed);
    let t = text::verify(&reports);
    let mut out = Output::new(&reports, t)?;
    out.ok = ok;
    Ok(out)
}

pub fn eval_section(alpha: &str, beta: &str, s: &str, t: &str, pair: &str, sign: &str) -> Result<Output, CliError> {
    let (alpha, beta) = (elem("alpha", alpha)?, elem("beta", beta)?);
    let st = [elem("s", s)?, elem("t", t)?];
    let digits: Vec<usize> = pair.chars().filter_map(|c| c.to_digit(10)).map(|d| d as usize).collect();
    if digits.len() != 2 || pair.chars().count() != 2 {
        return Err(CliError::Usage(format!("--pair expects 12, 13 or 23, got `{pair}`")));
    }
    let sign = match sign {
        "+" | "+1" | "1" => 1,
        "-" | "-1" => -1,
        _ => return Err(CliError::Usage(format!("--sign expects + or -, got `{sign}`"))),
    };
    let p = pencil::eval_section(&alpha, &beta, &st, digits[0], digits[1], sign)?;
    if !p.on_curve {
        return Err(CliError::Internal("evaluated generator is off the curve".into()));
    }
    let txt = text::section_point(&p);
    Output::new(&p, txt)
}
