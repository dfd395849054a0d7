use ellsurf_core::lattice::{self, fiber_class, section_class, zero_section, SectionIndex};
use ellsurf_core::rat;
use proptest::prelude::*;

fn index() -> impl Strategy<Value = SectionIndex> {
    prop::array::uniform3(-20i64..=20).prop_map(SectionIndex)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn numerical_sections(n in index()) {
        let s = section_class(&n);
        prop_assert_eq!(s.dot(&fiber_class()), 1);
        prop_assert_eq!(s.square(), -1);
        prop_assert_eq!(s, lattice::section_class_via_components(&n));
        prop_assert_eq!(lattice::mw_project(&s).unwrap(), n.0.map(|x| rat(x, 2)));
        prop_assert!(lattice::fiber_intersections(&n).meets_one_simple_component());
    }

    #[test]
    fn addition_modulo_fibers(n in index(), m in index()) {
        let added = lattice::mw_add(&section_class(&n), &section_class(&m)).unwrap();
        let defect = added - section_class(&n.add(&m));
        prop_assert!(lattice::fiber_span_certificate(&defect).is_some());
    }

    #[test]
    fn inverse(n in index()) {
        let added = lattice::mw_add(&section_class(&n), &lattice::mw_inverse(&n)).unwrap();
        prop_assert!(lattice::fiber_span_certificate(&(added - zero_section())).is_some());
    }

    #[test]
    fn heights(n in index(), m in index()) {
        let h = lattice::height_pairing_classes(&section_class(&n), &section_class(&m)).unwrap();
        prop_assert_eq!(h, lattice::height_pairing(&n, &m));
        if n.0 != [0, 0, 0] {
            prop_assert!(lattice::height_pairing(&n, &n) > rat(0, 1));
        }
    }
}

#[test]
fn fiber_span_rejects_sections() {
    assert!(lattice::fiber_span_certificate(&section_class(&SectionIndex([1, 0, 0]))).is_none());
    assert!(lattice::fiber_span_certificate(&(section_class(&SectionIndex([1, 0, 0])) - zero_section())).is_none());
}

#[test]
fn m_integral_on_box() {
    for a in -50i64..=50 {
        for b in -50i64..=50 {
            for c in -50i64..=50 {
                let n = SectionIndex([a, b, c]);
                let odd = [a, b, c].iter().filter(|x| x.rem_euclid(2) == 1).count() as i64;
                assert_eq!((a * a + b * b + c * c - odd) % 4, 0, "{:?}", n.0);
                let s = section_class(&n);
                assert_eq!((s.dot(&fiber_class()), s.square()), (1, -1), "{:?}", n.0);
            }
        }
    }
}
