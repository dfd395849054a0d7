//! Plain-text renderings for `--format text`.

use std::fmt::Write;

use ellsurf_core::pencil::SectionPoint;
use ellsurf_core::verify::SuiteReport;

use crate::commands::{Classification, FibersReport, MolienReport, MwReport, SectionReport, TableRow};

fn serde_name<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_value(v).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default()
}

fn fiber_lines(out: &mut String, fibers: &[ellsurf_core::FiberRecord]) {
    for r in fibers {
        let _ = writeln!(
            out,
            "  ({} : {})  {:<4} orders {:?}  J = {}  e_p = {}",
            r.position[0], r.position[1], r.fiber_type.to_string(), r.orders, r.j_class, r.e_p
        );
    }
}

pub fn classification(c: &Classification) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "J0 = {}", c.j0);
    fiber_lines(&mut s, &c.fibers);
    let _ = writeln!(s, "Euler sum {}, minimal {}", c.euler_sum, c.minimal);
    s
}

pub fn fibers(r: &FibersReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "case {}", serde_name(&r.case));
    fiber_lines(&mut s, &r.fibers);
    if let Some(m) = r.moving_fiber {
        let _ = writeln!(s, "  moving: {m}");
    }
    let st = &r.shioda_tate;
    let _ = writeln!(
        s,
        "L = {} (rank {}), MW rank {}, MW lattice {}, No. {}",
        st.l_type, st.l_rank, st.mw_rank, st.mw_lattice, st.oguiso_shioda_no
    );
    s
}

pub fn section(r: &SectionReport) -> String {
    let i = &r.intersections;
    format!(
        "{}\nclass {:?}\nmeets u0..v4: {:?}\nprojection ({}, {}, {}), height {}\n",
        r.class_text,
        r.class,
        [i.u0, i.u1, i.v0, i.v1, i.v2, i.v3, i.v4],
        r.projection[0],
        r.projection[1],
        r.projection[2],
        r.height
    )
}

pub fn mw(r: &MwReport) -> String {
    let cert = match &r.certificate {
        Some(c) => {
            let mut t = String::new();
            for (g, &k) in c.generators.iter().zip(&c.coefficients).filter(|(_, &k)| k != 0) {
                let sign = if k < 0 { "-" } else { "+" };
                if t.is_empty() {
                    t = if k < 0 { "-".into() } else { String::new() };
                } else {
                    t += &format!(" {sign} ");
                }
                if k.abs() != 1 {
                    t += &format!("{} ", k.abs());
                }
                t += g;
            }
            if t.is_empty() {
                "0".into()
            } else {
                t
            }
        }
        None => "not in the fiber span".into(),
    };
    format!("{:?} + {:?} = {:?}\n{}\ndeviation = {}\n", r.summands[0], r.summands[1], r.sum, r.class_text, cert)
}

pub fn molien(r: &MolienReport) -> String {
    format!(
        "{} (order {}): {}\n{} through t^{}: {}\n",
        serde_name(&r.group),
        r.order,
        r.coefficients.join(" "),
        r.closed_form,
        r.degree,
        if r.matches_closed_form { "agrees" } else { "DIFFERS" }
    )
}

pub fn group_table(rows: &[TableRow]) -> String {
    let mut s = String::new();
    for r in rows {
        let m = &r.matrix;
        let _ = writeln!(
            s,
            "{:>2}  [[{}, {}], [{}, {}]]  ->  {}, {}, {}",
            r.row, m[0][0], m[0][1], m[1][0], m[1][1], r.images[0], r.images[1], r.images[2]
        );
    }
    s
}

pub fn verify(reports: &[SuiteReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let _ = writeln!(
            s,
            "{} {:<12} {}/{}",
            if r.passed { "PASS" } else { "FAIL" },
            r.suite.name(),
            r.total - r.failed,
            r.total
        );
        if let Some(f) = &r.first_failure {
            let _ = writeln!(s, "    {}: {}", f.name, f.difference.clone().unwrap_or_default());
        }
    }
    s
}

pub fn section_point(p: &SectionPoint) -> String {
    format!(
        "({} : {} : {})\n",
        p.point[0], p.point[1], p.point[2]
    )
}
