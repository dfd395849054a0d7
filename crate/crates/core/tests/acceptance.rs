//! Acceptance criteria, one PASS/FAIL line each. Exit status 1 if any fails.

use std::time::Instant;

use ellsurf_core::lattice::{self, SectionIndex};
use ellsurf_core::octahedral::{self, signature_of_matrix, Catalog, Group, Matrix};
use ellsurf_core::pencil;
use ellsurf_core::text::parse_poly;
use ellsurf_core::verify::{self, Suite};
use ellsurf_core::weierstrass::{self, configuration_ab, symbolic_configuration};
use ellsurf_core::{CaseLabel, DivisorClass, FieldElem, FiberType, Poly, Var};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond { Ok(()) } else { Err(msg()) }
}

fn suite(s: Suite) -> Outcome {
    let r = verify::run(s);
    match r.first_failure {
        None => Ok(()),
        Some(c) => Err(format!("{}: {}", c.name, c.difference.unwrap_or_default())),
    }
}

fn c1_invariants() -> Outcome {
    let r = verify::run(Suite::Invariants);
    // twelve families; the per-k ones appear three times, over two catalogs
    ensure(r.total == 2 * (8 + 3 * 5 + 1), || format!("{} identities listed", r.total))?;
    suite(Suite::Invariants)
}

/// Rows of the coset table: scale, entries, images of `V1, V2, V3`.
const TABLE: [(&str, [&str; 4], &str); 24] = [
    ("1", ["1", "0", "0", "1"], "V1 V2 V3"),
    ("1", ["i", "0", "0", "-i"], "V1 -V2 -V3"),
    ("1", ["0", "i", "i", "0"], "-V1 V2 -V3"),
    ("1", ["0", "-1", "1", "0"], "-V1 -V2 V3"),
    ("1/2", ["1+i", "-1+i", "1+i", "1-i"], "V2 V3 V1"),
    ("1/2", ["1-i", "1-i", "-1-i", "1+i"], "V3 V1 V2"),
    ("1/2", ["1+i", "1-i", "-1-i", "1-i"], "-V2 V3 -V1"),
    ("1/2", ["1-i", "-1+i", "1+i", "1+i"], "-V3 -V1 V2"),
    ("1/2", ["1-i", "1+i", "-1+i", "1+i"], "-V2 -V3 V1"),
    ("1/2", ["1+i", "-1-i", "1-i", "1-i"], "V3 -V1 -V2"),
    ("1/2", ["1-i", "-1-i", "1-i", "1+i"], "V2 -V3 -V1"),
    ("1/2", ["1+i", "1+i", "-1+i", "1-i"], "-V3 V1 -V2"),
    ("r2/2", ["1+i", "0", "0", "1-i"], "V1 V3 -V2"),
    ("r2/2", ["1-i", "0", "0", "1+i"], "V1 -V3 V2"),
    ("r2/2", ["1", "i", "i", "1"], "-V3 V2 V1"),
    ("r2/2", ["1", "-i", "-i", "1"], "V3 V2 -V1"),
    ("r2/2", ["1", "-1", "1", "1"], "V2 -V1 V3"),
    ("r2/2", ["1", "1", "-1", "1"], "-V2 V1 V3"),
    ("r2/2", ["0", "-1+i", "1+i", "0"], "-V1 V3 V2"),
    ("r2/2", ["0", "1+i", "-1+i", "0"], "-V1 -V3 -V2"),
    ("r2/2", ["i", "-1", "1", "-i"], "V3 -V2 V1"),
    ("r2/2", ["i", "1", "-1", "-i"], "-V3 -V2 -V1"),
    ("r2/2", ["i", "i", "i", "-i"], "V2 V1 -V3"),
    ("r2/2", ["i", "-i", "-i", "-i"], "-V2 -V1 -V3"),
];

fn konst(s: &str) -> FieldElem {
    parse_poly(s).unwrap().to_constant().unwrap()
}

fn table_matrix(row: usize) -> Matrix {
    let (scale, e, _) = TABLE[row];
    let s = konst(scale);
    let m = |k: usize| &konst(e[k]) * &s;
    [[m(0), m(1)], [m(2), m(3)]]
}

/// `(index, sign)` for each of `V1, V2, V3`.
fn table_images(row: usize) -> Vec<(usize, i8)> {
    TABLE[row]
        .2
        .split_whitespace()
        .map(|t| {
            let (sign, name) = match t.strip_prefix('-') {
                Some(n) => (-1, n),
                None => (1, t),
            };
            (name[1..].parse::<usize>().unwrap() - 1, sign)
        })
        .collect()
}

/// `V o sigma^-1`, computed here by direct substitution.
fn pull_back(m: &Matrix, p: &Poly) -> Poly {
    let det = &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]);
    assert!(det.is_one());
    // inverse of a determinant-one matrix
    let inv = [[m[1][1].clone(), -&m[0][1]], [-&m[1][0], m[0][0].clone()]];
    let (a, b) = (Poly::var(Var::Alpha), Poly::var(Var::Beta));
    let na = &a.scale(&inv[0][0]) + &b.scale(&inv[0][1]);
    let nb = &a.scale(&inv[1][0]) + &b.scale(&inv[1][1]);
    p.substitute(&[(Var::Alpha, na), (Var::Beta, nb)])
}

fn c2_group_table() -> Outcome {
    let cat = Catalog::alpha_beta();
    let reps = octahedral::representatives();
    ensure(reps.len() == 24, || format!("{} representatives", reps.len()))?;
    for row in 0..24 {
        let m = table_matrix(row);
        let neg: Matrix = [[-&m[0][0], -&m[0][1]], [-&m[1][0], -&m[1][1]]];
        ensure(reps[row] == m || reps[row] == neg, || format!("row {}: matrix differs", row + 1))?;
        let want = table_images(row);
        for (k, &(j, sign)) in want.iter().enumerate() {
            let img = pull_back(&m, &cat.vk[k]);
            let target = cat.vk[j].scale(&FieldElem::int(sign as i64));
            ensure(img == target, || format!("row {}: image of V{} is not {}", row + 1, k + 1, TABLE[row].2))?;
        }
        let sig = signature_of_matrix(&reps[row]).map_err(|e| e.to_string())?;
        for (k, &(j, sign)) in want.iter().enumerate() {
            ensure(sig.perm[k] == j && sig.signs[k] == sign, || {
                format!("row {}: signature {} vs table {}", row + 1, sig, TABLE[row].2)
            })?;
        }
        // F invariant everywhere; V and E change sign off the tetrahedral rows
        let sign = if row < 12 { 1 } else { -1 };
        ensure(pull_back(&m, &cat.f) == cat.f, || format!("row {}: F not invariant", row + 1))?;
        for (name, p) in [("V", &cat.v), ("E", &cat.e)] {
            ensure(pull_back(&m, p) == p.scale(&FieldElem::int(sign)), || {
                format!("row {}: {name} does not pick up sign {sign}", row + 1)
            })?;
        }
    }
    Ok(())
}

fn c3_molien() -> Outcome {
    for g in [Group::Quaternion, Group::Tetrahedral, Group::Octahedral] {
        // molien_series fails if any coefficient has an i or sqrt2 part or is not a non-negative integer
        let series = octahedral::molien_series(g, 48).map_err(|e| format!("{}: {e}", g.name()))?;
        let closed = octahedral::hilbert_closed_form(g, 48);
        ensure(series == closed, || format!("{}: series differs from the closed form", g.name()))?;
    }
    Ok(())
}

const GENERIC_ORDERS: [[u32; 3]; 4] = [[0, 0, 1], [1, 1, 2], [1, 2, 3], [2, 3, 6]];

fn c4_classifier() -> Outcome {
    let mut rng = StdRng::seed_from_u64(20240611);
    let mut done = 0;
    while done < 50 {
        let a = FieldElem::rat(rng.gen_range(-1000..=1000), rng.gen_range(1..=300));
        let b = FieldElem::rat(rng.gen_range(-1000..=1000), rng.gen_range(1..=300));
        if a.is_zero() || b.is_zero() || a == b {
            continue;
        }
        done += 1;
        let (_, recs) = configuration_ab(&a, &b).map_err(|e| e.to_string())?;
        let types: Vec<FiberType> = recs.iter().map(|r| r.fiber_type).collect();
        let orders: Vec<[u32; 3]> = recs.iter().map(|r| r.orders).collect();
        ensure(
            types == [FiberType::I(1), FiberType::II, FiberType::III, FiberType::IStar(0)]
                && orders == GENERIC_ORDERS
                && weierstrass::euler_sum(&recs) == 12,
            || format!("(a:b) = ({a}:{b}): {types:?} {orders:?}"),
        )?;
    }
    for (case, ft, orders) in [
        (CaseLabel::EZero, FiberType::IStar(1), [2, 3, 7]),
        (CaseLabel::FZero, FiberType::IVStar, [3, 4, 8]),
        (CaseLabel::VZero, FiberType::IIIStar, [3, 5, 9]),
    ] {
        let recs = symbolic_configuration(case).map_err(|e| e.to_string())?;
        ensure(recs.iter().any(|r| r.fiber_type == ft && r.orders == orders), || {
            format!("{case:?}: no {ft} with orders {orders:?}")
        })?;
        ensure(weierstrass::euler_sum(&recs) == 12, || format!("{case:?}: Euler sum"))?;
    }
    Ok(())
}

fn c5_lattice() -> Outcome {
    for c in verify::lattice_sweep(5) {
        ensure(c.passed, || format!("{}: {}", c.name, c.difference.clone().unwrap_or_default()))?;
    }
    Ok(())
}

fn c6_generators() -> Outcome {
    let rs = pencil::theorem_residuals().map_err(|e| e.to_string())?;
    ensure(rs.len() == 6, || format!("{} generators", rs.len()))?;
    for ((i, j), sign, r) in rs {
        ensure(r.is_zero(), || format!("V{i}V{j} sign {sign}: residual has {} terms", r.len()))?;
    }
    Ok(())
}

fn c9_values() -> Outcome {
    let (v, e, f) = octahedral::eval_vef(&FieldElem::int(1), &FieldElem::int(2)).map_err(|e| e.to_string())?;
    ensure(
        (v.clone(), e.clone(), f.clone()) == (FieldElem::int(-120), FieldElem::int(-39032), FieldElem::int(1924)),
        || format!("(V, E, F)(1,2) = ({v}, {e}, {f})"),
    )?;
    let (vi, ei, fi) = (-120i128, -39032i128, 1924i128);
    ensure(ei * ei == fi.pow(3) - 27 * vi.pow(4), || "E^2 = F^3 - 27 V^4 fails".into())?;
    let j = weierstrass::j0(&e.pow(2), &f.pow(3)).map_err(|e| e.to_string())?;
    ensure(j.to_string() == "111284641/23804641", || format!("J0(1,2) = {j}"))?;
    ensure(481i64.pow(3) == 111284641 && 4879i64.pow(2) == 23804641, || "481^3/4879^2".into())?;
    let s = lattice::section_class(&SectionIndex([1, 1, 0]));
    ensure(s == DivisorClass::l() - DivisorClass::e(4) - DivisorClass::e(5), || format!("section (1,1,0) = {s}"))?;
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("invariant-relation suite", c1_invariants),
        ("group-table reproduction", c2_group_table),
        ("Molien series vs closed forms", c3_molien),
        ("fiber classifier", c4_classifier),
        ("section lattice sweep", c5_lattice),
        ("section generators on the Weierstrass model", c6_generators),
        ("fiber-group suite", || suite(Suite::FiberGroups)),
        ("moduli, cross ratios and torus J", || suite(Suite::Modulus)),
        ("concrete values", c9_values),
    ];
    let mut failed = 0;
    let start = Instant::now();
    for (n, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let ms = t.elapsed().as_millis();
        match r {
            Ok(()) => println!("PASS {}: {name} ({ms} ms)", n + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}: {name} ({ms} ms): {why}", n + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.1} s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
