use std::collections::BTreeSet;

use twoline::bijections::*;
use twoline::counting::{a_table, s_count, z_table, BigCount};
use twoline::objects::*;
use twoline::parallel::Execution;

#[test]
fn standard_reports_pass_at_desk_scale() {
    let reports = standard_reports(12, Execution::default());
    assert!(reports.len() > 50);
    for r in &reports {
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn sequential_and_parallel_reports_agree() {
    assert_eq!(standard_reports(8, Execution::Sequential), standard_reports(8, Execution::Parallel));
}

#[test]
fn closed_set_images_have_expected_shape() {
    let a = a_table(12);
    for m in (0..=12).step_by(2) {
        for size in 0..=m {
            let images: BTreeSet<Matching> = enum_closed_sets(m, Some(size))
                .unwrap()
                .iter()
                .map(|c| closed_set_to_matching(c).unwrap())
                .collect();
            assert!(images.iter().all(|x| (x.upper_count(), x.lower_count()) == (m - size, size)));
            assert_eq!(BigCount::from(images.len()), *a.get(m - size, size).unwrap());
        }
    }
}

#[test]
fn composite_map_tracks_indices() {
    // closed set on Z_2n of size k -> sum with n summands and total k -> path ending at k - n
    let z = z_table(12);
    for n in 0..=6 {
        for k in 0..=2 * n {
            let mut count = 0u64;
            for c in enum_closed_sets(2 * n, Some(k)).unwrap() {
                let s = closed_set_to_012(&c).unwrap();
                assert_eq!((s.len(), s.total()), (n, k));
                let p = s012_to_motzkin(&s).unwrap();
                assert_eq!(p.end_height(), k as i64 - n as i64);
                count += 1;
            }
            assert_eq!(BigCount::from(count), s_count(n, k));
            assert_eq!(z.get(2 * n, k).unwrap(), &s_count(n, k));
        }
    }
}

#[test]
fn weighted_cost_is_line_size() {
    for n in 0..=8 {
        for m in enum_matchings(n, n).unwrap() {
            let p = matching_to_weighted_path(&m).unwrap();
            assert_eq!(p.cost(), Some(n));
        }
    }
}

#[test]
fn text_interface_roundtrips() {
    let cases = [
        ("closed-set-to-matching", "0011"),
        ("closed-set-to-012", "00001110111000"),
        ("012-to-motzkin", "2+1+0"),
        ("matching-to-weighted", "U1-L1,U2-U3,U4-L4,L2-L3"),
        ("motzkin-to-chords", "DHDUUHDDUU"),
        ("matching-split", "U1-L3,U2-L6,U3-U4,U5-L9,U6-U7,L1-L2,L4-L5,L7-L8"),
        ("s1-to-domino", "1+2+2+1+2+1+2"),
        ("s1-to-s2", "1+2+2+1+2+1+2"),
        ("staircase-to-compositions", "H2,V2,H2,V1,H1,V2,H1,V1,H2,V2"),
    ];
    for (name, input) in cases {
        let out = apply_named(name, input, false).unwrap();
        assert_eq!(apply_named(name, &out, true).unwrap(), input, "{name}");
    }
    assert!(apply_named("closed-set-to-matching", "010", false).is_err());
}
