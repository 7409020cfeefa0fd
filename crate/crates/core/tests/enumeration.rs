use std::collections::BTreeSet;
use std::fmt::Debug;
use std::ops::ControlFlow;

use twoline::objects::*;
use twoline::series::PartSet;

fn sorted_unique_valid<T: CombObject + Debug>(items: &[T]) {
    for w in items.windows(2) {
        assert!(w[0] < w[1], "not strictly increasing: {} then {}", w[0], w[1]);
    }
    for x in items {
        assert!(x.is_valid(), "{x} failed validation: {:?}", x.validate());
    }
}

/// A mutated object must be valid exactly when it belongs to the enumerated
/// set of its parameters.
fn mutation_agrees<T: CombObject + Debug>(mutant: &T, universe: &BTreeSet<T>) {
    assert_eq!(mutant.is_valid(), universe.contains(mutant), "mutant {mutant} ({mutant:?})");
}

#[test]
fn matchings() {
    for k in 0..=7 {
        for n in 0..=7 {
            let all = enum_matchings(k, n).unwrap();
            sorted_unique_valid(&all);
            let universe: BTreeSet<Matching> = all.iter().cloned().collect();
            for m in &all {
                let (hu, hl) = m.horizontal_pairs();
                assert_eq!(&Matching::from_horizontals(k, n, &hu, &hl).unwrap(), m);
                // move one endpoint to every other point of the same line
                for (idx, &(a, b)) in m.pairs().iter().enumerate() {
                    for target in 1..=k.max(n) {
                        let moved = match b {
                            Point::Upper(_) if target <= k => Point::Upper(target),
                            Point::Lower(_) if target <= n => Point::Lower(target),
                            _ => continue,
                        };
                        let mut pairs = m.pairs().to_vec();
                        pairs[idx] = (a, moved);
                        mutation_agrees(&Matching::new(k, n, pairs), &universe);
                    }
                }
            }
        }
    }
}

#[test]
fn peakless_paths() {
    for k in 0..=8 {
        for e in -(k as i64)..=k as i64 {
            let all = enum_peakless(k, e).unwrap();
            sorted_unique_valid(&all);
            assert!(all.iter().all(|p| p.len() == k && p.end_height() == e));
        }
        let universe: BTreeSet<MotzkinPath> =
            (-(k as i64)..=k as i64).flat_map(|e| enum_peakless(k, e).unwrap()).collect();
        for p in &universe {
            for i in 0..k {
                for s in [Step::D, Step::H, Step::U] {
                    let mut steps = p.steps().to_vec();
                    steps[i] = s;
                    mutation_agrees(&MotzkinPath::new(steps), &universe);
                }
            }
        }
    }
}

#[test]
fn domino_pairs() {
    for k in 0..=7 {
        for n in 0..=7 {
            let all = enum_domino_pairs(k, n).unwrap();
            sorted_unique_valid(&all);
            assert!(all.iter().all(|p| p.widths() == (k, n)));
            for p in &all {
                for i in 0..p.left.len() {
                    let mut q = p.clone();
                    q.left[i] = if q.left[i] == Tile::V { Tile::HH } else { Tile::V };
                    // changes the vertical count on one side only
                    assert!(!q.is_valid());
                }
            }
        }
    }
}

#[test]
fn closed_sets() {
    for m in 0..=12 {
        let all = enum_closed_sets(m, None).unwrap();
        sorted_unique_valid(&all);
        let universe: BTreeSet<ClosedSet> = all.iter().cloned().collect();
        for c in &all {
            for v in 0..m {
                let mut bits = c.members().to_vec();
                bits[v] = !bits[v];
                mutation_agrees(&ClosedSet::new(bits), &universe);
            }
        }
        let by_size: usize = (0..=m).map(|k| enum_closed_sets(m, Some(k)).unwrap().len()).sum();
        assert_eq!(by_size, all.len());
    }
}

#[test]
fn sums_012() {
    for n in 0..=6 {
        let universe: BTreeSet<Sum012> = (0..=2 * n).flat_map(|k| enum_012(n, k).unwrap()).collect();
        for k in 0..=2 * n {
            let all = enum_012(n, k).unwrap();
            sorted_unique_valid(&all);
            assert!(all.iter().all(|s| s.total() == k && s.len() == n));
        }
        for s in &universe {
            for i in 0..n {
                for d in 0..=3u8 {
                    let mut v = s.summands().to_vec();
                    v[i] = d;
                    mutation_agrees(&Sum012::new(v), &universe);
                }
            }
        }
    }
}

#[test]
fn compositions() {
    for set in [PartSet::ones_and_twos(), PartSet::Odd, PartSet::AtLeastTwo] {
        for n in 0..=12 {
            let all = enum_compositions(&set, n, None).unwrap();
            sorted_unique_valid(&all);
            assert!(all.iter().all(|c| c.total() == n));
            let universe: BTreeSet<Composition> = all.iter().cloned().collect();
            for c in &all {
                for i in 0..c.parts().len() {
                    for delta in [1usize, 2] {
                        // shift weight between two neighbours keeps the total
                        if i + 1 < c.parts().len() && c.parts()[i] > delta {
                            let mut parts = c.parts().to_vec();
                            parts[i] -= delta;
                            parts[i + 1] += delta;
                            mutation_agrees(&Composition::new(set.clone(), parts), &universe);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn weighted_paths() {
    for cost in 0..=9 {
        let all = enum_weighted_paths(cost).unwrap();
        sorted_unique_valid(&all);
        assert!(all.iter().all(|p| p.cost() == Some(cost)));
        for p in &all {
            for i in 0..p.steps().len() {
                let swap = match p.steps()[i] {
                    WStep::U => WStep::D,
                    WStep::D => WStep::U,
                    other => other,
                };
                let mut steps = p.steps().to_vec();
                steps[i] = swap;
                let q = WeightedPath::new(steps);
                assert_eq!(q.is_valid(), all.contains(&q) || q == *p, "{q}");
            }
        }
    }
}

#[test]
fn chords() {
    for n in 0..=7 {
        let all = enum_chords(n).unwrap();
        sorted_unique_valid(&all);
        let universe: BTreeSet<ChordConfig> = all.iter().cloned().collect();
        for c in &all {
            // add any one extra chord
            for i in 1..=n {
                for j in 1..=n {
                    let inner = ChordConfig::new(n, c.inner_arcs().iter().copied().chain([(i, j)]), c.cross_arcs().iter().copied());
                    if i < j {
                        mutation_agrees(&inner, &universe);
                    }
                    let cross = ChordConfig::new(n, c.inner_arcs().iter().copied(), c.cross_arcs().iter().copied().chain([(i, j)]));
                    mutation_agrees(&cross, &universe);
                }
            }
        }
    }
}

#[test]
fn lacings() {
    for k in 1..=4 {
        for n in 1..=4 {
            for mode in [LacingMode::Right, LacingMode::NonSelfCrossing] {
                let all = enum_lacings(k, n, mode).unwrap();
                for w in all.windows(2) {
                    assert!(w[0] < w[1]);
                }
                assert!(all.iter().all(|l| l.validate_mode(mode).is_ok()));
                let universe: BTreeSet<Lacing> = all.iter().cloned().collect();
                for l in &all {
                    for i in 1..l.order().len() {
                        for j in i + 1..l.order().len() {
                            let mut order = l.order().to_vec();
                            order.swap(i, j);
                            let m = Lacing::new(k, n, order);
                            assert_eq!(m.validate_mode(mode).is_ok(), universe.contains(&m), "{m}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn staircases_and_step_paths() {
    for k in 0..=9 {
        for n in 0..=9 {
            let stairs = enum_staircases(k, n).unwrap();
            let paths = enum_b_step_paths(k, n).unwrap();
            sorted_unique_valid(&stairs);
            sorted_unique_valid(&paths);
            assert_eq!(stairs.len(), paths.len());
            assert!(stairs.iter().all(|s| s.endpoint() == (k, n)));
            assert!(paths.iter().all(|p| p.endpoint() == (k, n)));
            for s in &stairs {
                for i in 0..s.runs().len() {
                    for len in [0u8, 3] {
                        let mut runs = s.runs().to_vec();
                        runs[i] = len;
                        assert!(!Staircase::new(runs).is_valid());
                    }
                }
            }
        }
    }
}

#[test]
fn text_roundtrip() {
    for m in enum_matchings(4, 6).unwrap() {
        assert_eq!(m.to_string().parse::<Matching>().unwrap(), m);
    }
    for c in enum_chords(6).unwrap() {
        assert_eq!(c.to_string().parse::<ChordConfig>().unwrap(), c);
    }
    for l in enum_lacings(3, 4, LacingMode::Right).unwrap() {
        assert_eq!(l.to_string().parse::<Lacing>().unwrap(), l);
    }
    for s in enum_staircases(6, 7).unwrap() {
        assert_eq!(s.to_string().parse::<Staircase>().unwrap(), s);
    }
    for p in enum_b_step_paths(6, 7).unwrap() {
        assert_eq!(p.to_string().parse::<StepPath>().unwrap(), p);
    }
    for d in enum_domino_pairs(5, 5).unwrap() {
        assert_eq!(d.to_string().parse::<DominoPair>().unwrap(), d);
    }
}

#[test]
fn early_stop() {
    let mut seen = 0;
    visit_matchings(6, 6, &mut |_| {
        seen += 1;
        if seen == 3 { ControlFlow::Break(()) } else { ControlFlow::Continue(()) }
    })
    .unwrap();
    assert_eq!(seen, 3);
}

#[test]
fn limits() {
    use twoline::Error;
    let too_large = |r: twoline::Result<u64>| matches!(r, Err(Error::InstanceTooLarge { .. }));
    assert!(too_large(count_visited(|f| visit_matchings(13, 13, f))));
    assert!(too_large(count_visited(|f| visit_peakless(23, 1, f))));
    assert!(too_large(count_visited(|f| visit_chords(13, f))));
    assert!(too_large(count_visited(|f| visit_lacings(7, 6, LacingMode::Right, f))));
    assert!(too_large(count_visited(|f| visit_weighted_paths(19, f))));
}
