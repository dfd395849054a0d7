//! Values recomputed by independent means: plain integers, floating point and
//! hand-expanded formulas, compared against the library.

use ellsurf_core::octahedral::{self, enumerate_group, eval_vef, Catalog, Group};
use ellsurf_core::pencil::{self, relations};
use ellsurf_core::weierstrass::{self, family_coefficients};
use ellsurf_core::{rat, FieldElem, Rational, Var};

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

fn vef_int(a: i128, b: i128) -> (i128, i128, i128) {
    let v = 4 * a * b * (a.pow(4) - b.pow(4));
    let e = 8 * (a.pow(4) + b.pow(4)) * (a.pow(8) - 34 * a.pow(4) * b.pow(4) + b.pow(8));
    let f = 4 * (a.pow(8) + 14 * a.pow(4) * b.pow(4) + b.pow(8));
    (v, e, f)
}

#[test]
fn vef_against_integers() {
    for a in -4i128..=4 {
        for b in -4i128..=4 {
            let (v, e, f) = vef_int(a, b);
            let (lv, le, lf) = eval_vef(&FieldElem::int(a as i64), &FieldElem::int(b as i64)).unwrap();
            assert_eq!(lv, FieldElem::int(v as i64));
            assert_eq!(le, FieldElem::int(e as i64));
            assert_eq!(lf, FieldElem::int(f as i64));
            assert_eq!(e * e, f.pow(3) - 27 * v.pow(4));
        }
    }
    assert_eq!(vef_int(1, 2), (-120, -39032, 1924));
}

#[test]
fn j0_lowest_terms() {
    let (_, e, f) = vef_int(1, 2);
    let (n, d) = (f.pow(3), e.pow(2));
    let g = gcd(n, d);
    assert_eq!((n / g, d / g), (111284641, 23804641));
    assert_eq!((481i128.pow(3), 4879i128.pow(2)), (111284641, 23804641));
    let j = weierstrass::j0(&FieldElem::int(e.pow(2) as i64), &FieldElem::int(f.pow(3) as i64)).unwrap();
    assert_eq!(j.to_string(), "111284641/23804641");
}

#[test]
fn torus_j_sample() {
    // F^3 / (27 V^4) with F = 4 * 481: the value is 64 times 481^3 / (27 * 120^4)
    let j = relations::torus_j(&FieldElem::int(1), &FieldElem::int(2)).unwrap();
    let small = Rational::new(481i64.pow(3).into(), (27 * 120i64.pow(4)).into());
    assert_eq!(j, FieldElem::from_rational(small * rat(64, 1)));
}

#[test]
fn base_points_at_sample() {
    // V1 = -4i, V2 = -3i, V3 = 5 at (1, 2)
    let i = FieldElem::i();
    let vs = [&i * &FieldElem::int(-4), &i * &FieldElem::int(-3), FieldElem::int(5)];
    let c = Catalog::alpha_beta();
    let at = [(Var::Alpha, FieldElem::int(1)), (Var::Beta, FieldElem::int(2))];
    for k in 0..3 {
        assert_eq!(c.vk[k].eval_at(&at).unwrap(), vs[k]);
    }
    let f = FieldElem::int(1924);
    let pts = pencil::base_points(&FieldElem::int(1), &FieldElem::int(2)).unwrap();
    for p in &pts {
        let w = &vs[p.pair[0] - 1] * &vs[p.pair[1] - 1];
        assert_eq!(p.x, &f * &(&w.pow(2) * &FieldElem::int(4)).inv().unwrap());
        // on F^3 Y^2 = 4 X^3
        assert_eq!(&f.pow(3) * &p.y.pow(2), &p.x.pow(3) * &FieldElem::int(4));
    }
    let mut seen: Vec<String> = pts.iter().map(|p| format!("{} {}", p.x, p.y)).collect();
    seen.sort();
    seen.dedup();
    assert_eq!(seen.len(), 6);
}

/// Binary octahedral conjugacy classes as (size, trace numerator over sqrt2 part).
fn class_traces(g: Group) -> Vec<(usize, f64)> {
    let s = std::f64::consts::SQRT_2;
    let mut v = vec![(1, 2.0), (1, -2.0), (6, 0.0)];
    if g != Group::Quaternion {
        v.extend([(8, 1.0), (8, -1.0)]);
    }
    if g == Group::Octahedral {
        v.extend([(6, s), (6, -s), (12, 0.0)]);
    }
    v
}

#[test]
fn molien_from_class_traces() {
    for g in [Group::Quaternion, Group::Tetrahedral, Group::Octahedral] {
        let n = 48;
        let mut series = vec![0.0f64; n + 1];
        let order: usize = class_traces(g).iter().map(|c| c.0).sum();
        assert_eq!(order, g.order());
        for (size, tr) in class_traces(g) {
            // 1/(1 - tr t + t^2)
            let (mut p2, mut p1) = (0.0, 1.0);
            series[0] += size as f64;
            for c in series.iter_mut().skip(1) {
                let cur = tr * p1 - p2;
                *c += size as f64 * cur;
                p2 = p1;
                p1 = cur;
            }
        }
        let lib = octahedral::molien_series(g, n).unwrap();
        for (k, x) in series.iter().enumerate() {
            let want = (x / order as f64).round() as i64;
            assert_eq!(lib[k], rat(want, 1), "{} degree {k}", g.name());
        }
        // the library's group has the same trace multiset
        let mut traces: Vec<i64> = enumerate_group(g)
            .iter()
            .filter(|e| e.in_group(g))
            .map(|e| {
                let (re, _) = e.trace().to_complex();
                (re * 1000.0).round() as i64
            })
            .collect();
        traces.sort();
        let mut want: Vec<i64> = class_traces(g)
            .iter()
            .flat_map(|&(n, t)| std::iter::repeat((t * 1000.0).round() as i64).take(n))
            .collect();
        want.sort();
        assert_eq!(traces, want, "{}", g.name());
    }
}

#[test]
fn closed_forms_by_series_multiplication() {
    fn geometric(d: usize, n: usize) -> Vec<i64> {
        (0..=n).map(|k| if k % d == 0 { 1 } else { 0 }).collect()
    }
    fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut c = vec![0; a.len()];
        for i in 0..a.len() {
            for j in 0..a.len() - i {
                c[i + j] += a[i] * b[j];
            }
        }
        c
    }
    let n = 48;
    for (g, top, d1, d2) in [
        (Group::Quaternion, 6, 4, 4),
        (Group::Tetrahedral, 12, 6, 8),
        (Group::Octahedral, 18, 8, 12),
    ] {
        let mut num = vec![0i64; n + 1];
        num[0] = 1;
        num[top] = 1;
        let s = mul(&mul(&num, &geometric(d1, n)), &geometric(d2, n));
        let lib = octahedral::hilbert_closed_form(g, n);
        assert_eq!(lib, s.iter().map(|&x| rat(x, 1)).collect::<Vec<_>>());
    }
}

#[test]
fn discriminant_factorization_pointwise() {
    for (a, b) in [(2i64, 3i64), (-5, 7), (11, -4)] {
        let data = family_coefficients(&FieldElem::int(a), &FieldElem::int(b)).unwrap();
        for (s, t) in [(1i64, 2i64), (3, -1), (5, 7), (-2, 9)] {
            let at = [(Var::S, FieldElem::int(s)), (Var::T, FieldElem::int(t))];
            let g2 = data.g2.eval_at(&at).unwrap().to_rational().unwrap();
            let g3 = data.g3.eval_at(&at).unwrap().to_rational().unwrap();
            // g2 = 27 T (T-S) (aT-bS)^2, g3 = 27 T (T-S)^2 (aT-bS)^3
            let l = a * t - b * s;
            assert_eq!(g2, rat(27 * t * (t - s) * l * l, 1));
            assert_eq!(g3, rat(27 * t * (t - s).pow(2) * l.pow(3), 1));
            let disc = g2.pow(3) - rat(27, 1) * g3.pow(2);
            let want = rat(27i64.pow(3) * s * t * t * (t - s).pow(3), 1) * rat(l, 1).pow(6);
            assert_eq!(disc, want);
            assert_eq!(data.disc.eval_at(&at).unwrap(), FieldElem::from_rational(want));
        }
    }
}

#[test]
fn node_by_hand() {
    // E^2 Y^2 = (X-3)(2X+3)^2 has gradient zero at (-3/2, 0)
    let x = rat(-3, 2);
    let rhs = (x.clone() - rat(3, 1)) * (rat(2, 1) * x.clone() + rat(3, 1)).pow(2);
    let drhs = (rat(2, 1) * x.clone() + rat(3, 1)).pow(2) + rat(4, 1) * (x.clone() - rat(3, 1)) * (rat(2, 1) * x + rat(3, 1));
    assert_eq!(rhs, rat(0, 1));
    assert_eq!(drhs, rat(0, 1));
}
