//! Constructive bijections between the object families, each with its
//! inverse, plus a checker that runs them over whole enumerated domains.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::objects::domino::{format_tiling, parse_tiling};
use crate::objects::{
    enum_chords, enum_closed_sets, enum_compositions, enum_matchings, enum_peakless,
    enum_staircases, enum_weighted_paths, enum_012, ChordConfig, ClosedSet, CombObject,
    Composition, Matching, MotzkinPath, Point, Staircase, Step, Sum012, Tile, WStep, WeightedPath,
};
use crate::parallel::{map_collect, Execution};
use crate::series::PartSet;

fn require_valid<T: CombObject>(x: &T) -> Result<()> {
    x.validate()
}

fn require_even_fence(c: &ClosedSet) -> Result<()> {
    require_valid(c)?;
    if c.fence_size() % 2 == 1 {
        return Err(Error::invalid(format!("fence Z_{} is not even", c.fence_size())));
    }
    Ok(())
}

/// Runs of equal colour in a bit sequence, as `(colour, start, len)`.
fn runs(bits: &[bool]) -> Vec<(bool, usize, usize)> {
    let mut out: Vec<(bool, usize, usize)> = Vec::new();
    for (i, &b) in bits.iter().enumerate() {
        match out.last_mut() {
            Some((c, _, len)) if *c == b => *len += 1,
            _ => out.push((b, i, 1)),
        }
    }
    out
}

/// Lays the fence out on two lines: white vertices go to the upper line and
/// black (member) vertices to the lower line, both in zigzag order.
///
/// The colour runs read `W0 B1 W1 ... Bt Wt [B(t+1)]` where `W0` and
/// `B(t+1)` are even (possibly empty) and the rest odd. The last vertex of
/// each odd black run is joined to the first vertex of the white run after
/// it; all other vertices pair up with their neighbour inside their run.
pub fn closed_set_to_matching(c: &ClosedSet) -> Result<Matching> {
    require_even_fence(c)?;
    let bits = c.members();
    let mut pairs = Vec::new();
    let (mut upper, mut lower) = (0usize, 0usize);
    let mut pending_black: Option<usize> = None;
    for (colour, _, len) in runs(bits) {
        let mut first = 0;
        if !colour {
            if let Some(j) = pending_black.take() {
                upper += 1;
                pairs.push((Point::Upper(upper), Point::Lower(j)));
                first = 1;
            }
            for _ in (first..len).step_by(2) {
                pairs.push((Point::Upper(upper + 1), Point::Upper(upper + 2)));
                upper += 2;
            }
        } else {
            let paired = len - len % 2;
            for _ in (0..paired).step_by(2) {
                pairs.push((Point::Lower(lower + 1), Point::Lower(lower + 2)));
                lower += 2;
            }
            if len % 2 == 1 {
                lower += 1;
                pending_black = Some(lower);
            }
        }
    }
    if pending_black.is_some() {
        return Err(Error::invalid("odd black run at the end of the fence"));
    }
    Ok(Matching::new(upper, lower, pairs))
}

/// Inverse of [`closed_set_to_matching`].
pub fn matching_to_closed_set(m: &Matching) -> Result<ClosedSet> {
    require_valid(m)?;
    let (k, n) = (m.upper_count(), m.lower_count());
    let cross = m.cross_pairs();
    let mut bits = Vec::with_capacity(k + n);
    let (mut u, mut l) = (0usize, 0usize);
    for &(ci, cj) in &cross {
        bits.extend(std::iter::repeat_n(false, ci - 1 - u));
        bits.extend(std::iter::repeat_n(true, cj - l));
        u = ci - 1;
        l = cj;
    }
    bits.extend(std::iter::repeat_n(false, k - u));
    bits.extend(std::iter::repeat_n(true, n - l));
    let c = ClosedSet::new(bits);
    require_valid(&c)?;
    Ok(c)
}

/// Summand `i` counts the members among fence vertices `2i` and `2i + 1`.
pub fn closed_set_to_012(c: &ClosedSet) -> Result<Sum012> {
    require_even_fence(c)?;
    Ok(Sum012::new(
        c.members().chunks(2).map(|w| w.iter().filter(|&&b| b).count() as u8).collect(),
    ))
}

pub fn sum012_to_closed_set(s: &Sum012) -> Result<ClosedSet> {
    require_valid(s)?;
    let bits = s
        .summands()
        .iter()
        .flat_map(|&d| match d {
            0 => [false, false],
            1 => [true, false],
            _ => [true, true],
        })
        .collect();
    Ok(ClosedSet::new(bits))
}

/// `2 -> U`, `1 -> H`, `0 -> D`.
pub fn s012_to_motzkin(s: &Sum012) -> Result<MotzkinPath> {
    require_valid(s)?;
    Ok(MotzkinPath::new(
        s.summands()
            .iter()
            .map(|&d| match d {
                0 => Step::D,
                1 => Step::H,
                _ => Step::U,
            })
            .collect(),
    ))
}

pub fn motzkin_to_s012(p: &MotzkinPath) -> Result<Sum012> {
    require_valid(p)?;
    Ok(Sum012::new(p.steps().iter().map(|s| (s.rise() + 1) as u8).collect()))
}

/// Contracted line: `true` for a cross-pair endpoint (black), `false` for a
/// contracted same-line pair (white).
fn contracted_line(m: &Matching, upper: bool) -> Vec<bool> {
    let len = if upper { m.upper_count() } else { m.lower_count() };
    let mut partner_next = vec![false; len + 2];
    for &(a, b) in m.pairs() {
        if a.is_upper() == upper && b.is_upper() == upper {
            partner_next[a.index()] = true;
        }
    }
    let mut out = Vec::new();
    let mut i = 1;
    while i <= len {
        if partner_next[i] {
            out.push(false);
            i += 2;
        } else {
            out.push(true);
            i += 1;
        }
    }
    out
}

/// Contracts every same-line pair to a white point and reads the aligned
/// columns: black over black is `C`, white over white is `L`, black over
/// white is `U`, white over black is `D`.
pub fn matching_to_weighted_path(m: &Matching) -> Result<WeightedPath> {
    require_valid(m)?;
    if m.upper_count() != m.lower_count() {
        return Err(Error::invalid("both lines must carry the same number of points"));
    }
    let (top, bottom) = (contracted_line(m, true), contracted_line(m, false));
    Ok(WeightedPath::new(
        top.iter()
            .zip(&bottom)
            .map(|(&t, &b)| match (t, b) {
                (true, true) => WStep::C,
                (false, false) => WStep::L,
                (true, false) => WStep::U,
                (false, true) => WStep::D,
            })
            .collect(),
    ))
}

pub fn weighted_path_to_matching(p: &WeightedPath) -> Result<Matching> {
    require_valid(p)?;
    let size = p.cost().ok_or_else(|| Error::invalid("cost is not an integer"))?;
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    let (mut u, mut l) = (0usize, 0usize);
    for &s in p.steps() {
        let (top_black, bottom_black) = match s {
            WStep::C => (true, true),
            WStep::L => (false, false),
            WStep::U => (true, false),
            WStep::D => (false, true),
        };
        if top_black {
            u += 1;
        } else {
            upper.push((u + 1, u + 2));
            u += 2;
        }
        if bottom_black {
            l += 1;
        } else {
            lower.push((l + 1, l + 2));
            l += 2;
        }
    }
    debug_assert_eq!((u, l), (size, size));
    Matching::from_horizontals(size, size, &upper, &lower)
}

/// Reads a chord configuration off the arcs of one sector: an inner arc
/// opens with `U` and closes with `D`, a cross arc leaves its source with
/// `U` and arrives at its target with `D`, an isolated point is `H`.
pub fn chords_to_motzkin(c: &ChordConfig) -> Result<MotzkinPath> {
    require_valid(c)?;
    let mut steps = vec![Step::H; c.points()];
    for &(i, j) in c.inner_arcs() {
        steps[i - 1] = Step::U;
        steps[j - 1] = Step::D;
    }
    for &(p, q) in c.cross_arcs() {
        steps[p - 1] = Step::U;
        steps[q - 1] = Step::D;
    }
    Ok(MotzkinPath::new(steps))
}

/// Inverse of [`chords_to_motzkin`] for peakless paths returning to height 0.
///
/// `U` and `D` are matched like parentheses; matched pairs become inner
/// arcs. The unmatched `D`s all precede the unmatched `U`s, and the
/// `i`-th unmatched `D` from the left is the target of the `i`-th unmatched
/// `U` from the right.
pub fn motzkin_to_chords(p: &MotzkinPath) -> Result<ChordConfig> {
    require_valid(p)?;
    if p.end_height() != 0 {
        return Err(Error::invalid("path must return to its starting height"));
    }
    let mut open = Vec::new();
    let mut inner = Vec::new();
    let mut targets = Vec::new();
    for (idx, &s) in p.steps().iter().enumerate() {
        let pos = idx + 1;
        match s {
            Step::U => open.push(pos),
            Step::D => match open.pop() {
                Some(i) => inner.push((i, pos)),
                None => targets.push(pos),
            },
            Step::H => {}
        }
    }
    let cross = open.iter().rev().zip(&targets).map(|(&src, &tgt)| (src, tgt));
    let c = ChordConfig::new(p.len(), inner, cross);
    require_valid(&c)?;
    Ok(c)
}

/// Same-line pairs of both lines of a matching, which determine it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HorizontalSplit {
    pub k: usize,
    pub n: usize,
    pub upper: Vec<(usize, usize)>,
    pub lower: Vec<(usize, usize)>,
}

impl fmt::Display for HorizontalSplit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let seg = |v: &[(usize, usize)]| {
            if v.is_empty() {
                "-".to_string()
            } else {
                v.iter().map(|(i, j)| format!("{i}-{j}")).collect::<Vec<_>>().join(",")
            }
        };
        write!(f, "{},{}:{}|{}", self.k, self.n, seg(&self.upper), seg(&self.lower))
    }
}

/// Parses `k,n:upper|lower`, e.g. `7,9:3-4,6-7|1-2,4-5,7-8`.
impl FromStr for HorizontalSplit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse("horizontal split", s);
        let (sizes, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        let (k, n) = sizes.split_once(',').ok_or_else(bad)?;
        let (upper, lower) = rest.split_once('|').ok_or_else(bad)?;
        let segs = |t: &str| -> Result<Vec<(usize, usize)>> {
            let t = t.trim();
            if t == "-" || t.is_empty() {
                return Ok(Vec::new());
            }
            t.split(',')
                .map(|x| {
                    let (i, j) = x.split_once('-').ok_or_else(bad)?;
                    Ok((i.trim().parse().map_err(|_| bad())?, j.trim().parse().map_err(|_| bad())?))
                })
                .collect()
        };
        Ok(HorizontalSplit {
            k: k.trim().parse().map_err(|_| bad())?,
            n: n.trim().parse().map_err(|_| bad())?,
            upper: segs(upper)?,
            lower: segs(lower)?,
        })
    }
}

pub fn matching_split_horizontals(m: &Matching) -> Result<HorizontalSplit> {
    require_valid(m)?;
    let (upper, lower) = m.horizontal_pairs();
    Ok(HorizontalSplit { k: m.upper_count(), n: m.lower_count(), upper, lower })
}

pub fn matching_reconstruct(h: &HorizontalSplit) -> Result<Matching> {
    let m = Matching::from_horizontals(h.k, h.n, &h.upper, &h.lower)?;
    require_valid(&m)?;
    Ok(m)
}

fn require_s1(c: &Composition) -> Result<()> {
    require_valid(c)?;
    if let Some(p) = c.parts().iter().find(|&&p| p != 1 && p != 2) {
        return Err(Error::invalid(format!("part {p} is not 1 or 2")));
    }
    Ok(())
}

/// `1 -> V`, `2 -> HH`.
pub fn composition_s1_to_domino(c: &Composition) -> Result<Vec<Tile>> {
    require_s1(c)?;
    Ok(c.parts().iter().map(|&p| if p == 1 { Tile::V } else { Tile::HH }).collect())
}

pub fn domino_to_composition_s1(tiles: &[Tile]) -> Composition {
    Composition::new(PartSet::ones_and_twos(), tiles.iter().map(|t| t.width()).collect())
}

/// Appends a 1 and cuts after every 1; a group of `r` twos and a one becomes
/// the odd part `2r + 1`.
pub fn composition_s1_to_s2(c: &Composition) -> Result<Composition> {
    require_s1(c)?;
    let mut parts = Vec::new();
    let mut acc = 0;
    for &p in c.parts().iter().chain(std::iter::once(&1)) {
        acc += p;
        if p == 1 {
            parts.push(acc);
            acc = 0;
        }
    }
    Ok(Composition::new(PartSet::Odd, parts))
}

pub fn composition_s2_to_s1(c: &Composition) -> Result<Composition> {
    if c.parts().iter().any(|p| p % 2 == 0) || c.parts().is_empty() {
        return Err(Error::invalid(format!("{c} is not a nonempty composition into odd parts")));
    }
    let mut parts = Vec::new();
    for &p in c.parts() {
        parts.extend(std::iter::repeat_n(2, p / 2));
        parts.push(1);
    }
    parts.pop();
    Ok(Composition::new(PartSet::ones_and_twos(), parts))
}

/// Horizontal runs and vertical runs as two compositions into 1s and 2s.
pub fn staircase_to_composition_pair(s: &Staircase) -> Result<(Composition, Composition)> {
    require_valid(s)?;
    let to_comp = |v: Vec<u8>| Composition::new(PartSet::ones_and_twos(), v.into_iter().map(usize::from).collect());
    Ok((to_comp(s.horizontal_runs()), to_comp(s.vertical_runs())))
}

pub fn composition_pair_to_staircase(h: &Composition, v: &Composition) -> Result<Staircase> {
    require_s1(h)?;
    require_s1(v)?;
    if h.parts().len() != v.parts().len() {
        return Err(Error::invalid("both compositions need the same number of parts"));
    }
    let pairs: Vec<(u8, u8)> = h.parts().iter().zip(v.parts()).map(|(&a, &b)| (a as u8, b as u8)).collect();
    Ok(Staircase::from_pairs(&pairs))
}

/// Outcome of running a bijection over an enumerated domain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub name: String,
    pub domain_size: usize,
    pub image_size: usize,
    pub codomain_size: usize,
    pub roundtrip_failures: usize,
    pub witness: Option<String>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.roundtrip_failures == 0
            && self.image_size == self.domain_size
            && self.image_size == self.codomain_size
    }
}

/// Applies `forward` to every domain element and `inverse` to the image.
/// An element fails when either map errors, the image is outside the
/// codomain, or the roundtrip does not return it.
pub fn check_bijection<A, B>(
    name: impl Into<String>,
    domain: &[A],
    codomain: &[B],
    forward: impl Fn(&A) -> Result<B>,
    inverse: impl Fn(&B) -> Result<A>,
) -> BijectionReport
where
    A: PartialEq + fmt::Display,
    B: Ord + Clone,
{
    let codomain_set: BTreeSet<&B> = codomain.iter().collect();
    let mut images = BTreeSet::new();
    let mut failures = 0;
    let mut witness = None;
    for a in domain {
        let ok = match forward(a) {
            Ok(b) => {
                let back_ok = matches!(inverse(&b), Ok(ref back) if back == a);
                let inside = codomain_set.contains(&b);
                images.insert(b);
                back_ok && inside
            }
            Err(_) => false,
        };
        if !ok {
            failures += 1;
            witness.get_or_insert_with(|| a.to_string());
        }
    }
    BijectionReport {
        name: name.into(),
        domain_size: domain.len(),
        image_size: images.len(),
        codomain_size: codomain_set.len(),
        roundtrip_failures: failures,
        witness,
    }
}

fn merge(name: String, parts: Vec<BijectionReport>) -> BijectionReport {
    let mut out = BijectionReport {
        name,
        domain_size: 0,
        image_size: 0,
        codomain_size: 0,
        roundtrip_failures: 0,
        witness: None,
    };
    for p in parts {
        if !p.passed() && out.witness.is_none() {
            out.witness = Some(format!("{}: {}", p.name, p.witness.clone().unwrap_or_default()));
        }
        out.domain_size += p.domain_size;
        out.image_size += p.image_size;
        out.codomain_size += p.codomain_size;
        out.roundtrip_failures += p.roundtrip_failures;
    }
    out
}

fn all_closed(m: usize) -> Vec<ClosedSet> {
    enum_closed_sets(m, None).expect("within limits")
}

/// One closed-set bijection check per fence size `2n <= max_fence`.
fn closed_set_matching_reports(max_fence: usize) -> Vec<BijectionReport> {
    (0..=max_fence / 2)
        .map(|half| {
            let m = 2 * half;
            let cells: Vec<BijectionReport> = (0..=m)
                .map(|size| {
                    let domain = enum_closed_sets(m, Some(size)).expect("within limits");
                    let codomain = enum_matchings(m - size, size).expect("within limits");
                    check_bijection(
                        format!("Z_{m} size {size}"),
                        &domain,
                        &codomain,
                        closed_set_to_matching,
                        matching_to_closed_set,
                    )
                })
                .collect();
            merge(format!("closed set -> matching, fence {m}"), cells)
        })
        .collect()
}

/// Bijection checks up to a size parameter `max` (objects of total size
/// about `max`), one report per map and size.
pub fn standard_reports(max: usize, exec: Execution) -> Vec<BijectionReport> {
    let max = max.min(12);
    let jobs: Vec<(usize, usize)> = (0..9).flat_map(|id| (0..=max).map(move |s| (id, s))).collect();
    let mut reports: Vec<BijectionReport> = map_collect(jobs, exec, |(id, s)| report_for(id, s))
        .into_iter()
        .flatten()
        .collect();
    reports.extend(closed_set_matching_reports(max));
    reports
}

fn report_for(id: usize, s: usize) -> Option<BijectionReport> {
    let one_two = PartSet::ones_and_twos();
    match id {
        0 if s.is_multiple_of(2) => {
            let n = s / 2;
            let domain = all_closed(s);
            let codomain: Vec<Sum012> =
                (0..=s).flat_map(|k| enum_012(n, k).expect("within limits")).collect();
            Some(check_bijection(
                format!("closed set -> 0-1-2 sum, fence {s}"),
                &domain,
                &codomain,
                closed_set_to_012,
                sum012_to_closed_set,
            ))
        }
        1 => {
            let domain: Vec<Sum012> = (0..=2 * s).flat_map(|k| enum_012(s, k).expect("within limits")).collect();
            let codomain: Vec<MotzkinPath> = (-(s as i64)..=s as i64)
                .flat_map(|e| enum_peakless(s, e).expect("within limits"))
                .collect();
            Some(check_bijection(
                format!("0-1-2 sum -> peakless path, length {s}"),
                &domain,
                &codomain,
                s012_to_motzkin,
                motzkin_to_s012,
            ))
        }
        2 => {
            let domain = enum_matchings(s, s).expect("within limits");
            let codomain = enum_weighted_paths(s).expect("within limits");
            Some(check_bijection(
                format!("matching -> weighted path, size {s}"),
                &domain,
                &codomain,
                matching_to_weighted_path,
                weighted_path_to_matching,
            ))
        }
        3 if s <= 9 => {
            let domain = enum_peakless(s, 0).expect("within limits");
            let codomain = enum_chords(s).expect("within limits");
            Some(check_bijection(
                format!("peakless path -> chords, n = {s}"),
                &domain,
                &codomain,
                motzkin_to_chords,
                chords_to_motzkin,
            ))
        }
        4 => {
            let cells: Vec<BijectionReport> = (0..=s)
                .map(|k| {
                    let domain = enum_matchings(k, s - k).expect("within limits");
                    let images: Vec<HorizontalSplit> =
                        domain.iter().filter_map(|m| matching_split_horizontals(m).ok()).collect();
                    check_bijection(
                        format!("k = {k}"),
                        &domain,
                        &images,
                        matching_split_horizontals,
                        matching_reconstruct,
                    )
                })
                .collect();
            Some(merge(format!("matching -> horizontal split, k + n = {s}"), cells))
        }
        5 => {
            let domain = enum_compositions(&one_two, s, None).expect("within limits");
            let codomain: Vec<Vec<Tile>> = (0..=s)
                .flat_map(|v| crate::objects::domino::tilings_with(s, v))
                .collect();
            Some(check_bijection(
                format!("composition -> domino tiling, n = {s}"),
                &domain,
                &codomain,
                composition_s1_to_domino,
                |t: &Vec<Tile>| Ok(domino_to_composition_s1(t)),
            ))
        }
        6 => {
            let domain = enum_compositions(&one_two, s, None).expect("within limits");
            let codomain = enum_compositions(&PartSet::Odd, s + 1, None).expect("within limits");
            Some(check_bijection(
                format!("1-2 composition -> odd composition, n = {s}"),
                &domain,
                &codomain,
                composition_s1_to_s2,
                composition_s2_to_s1,
            ))
        }
        7 => {
            let cells: Vec<BijectionReport> = (0..=s)
                .map(|k| {
                    let domain = enum_staircases(k, s - k).expect("within limits");
                    let codomain = composition_pairs(k, s - k);
                    check_bijection(
                        format!("({k}, {})", s - k),
                        &domain,
                        &codomain,
                        staircase_to_composition_pair,
                        |(h, v): &(Composition, Composition)| composition_pair_to_staircase(h, v),
                    )
                })
                .collect();
            Some(merge(format!("staircase -> composition pair, k + n = {s}"), cells))
        }
        8 => {
            // composite: closed set -> 0-1-2 -> Motzkin agrees with the closed-set size
            if s % 2 == 1 {
                return None;
            }
            let n = s / 2;
            let cells: Vec<BijectionReport> = (0..=s)
                .map(|size| {
                    let domain = enum_closed_sets(s, Some(size)).expect("within limits");
                    let codomain = enum_peakless(n, size as i64 - n as i64).expect("within limits");
                    check_bijection(
                        format!("size {size}"),
                        &domain,
                        &codomain,
                        |c: &ClosedSet| closed_set_to_012(c).and_then(|x| s012_to_motzkin(&x)),
                        |p: &MotzkinPath| motzkin_to_s012(p).and_then(|x| sum012_to_closed_set(&x)),
                    )
                })
                .collect();
            Some(merge(format!("closed set -> peakless path, fence {s}"), cells))
        }
        _ => None,
    }
}

/// Pairs of 1-2 compositions of `k` and `n` with equally many parts.
fn composition_pairs(k: usize, n: usize) -> Vec<(Composition, Composition)> {
    let one_two = PartSet::ones_and_twos();
    let left = enum_compositions(&one_two, k, None).expect("within limits");
    let right = enum_compositions(&one_two, n, None).expect("within limits");
    let mut out = Vec::new();
    for h in &left {
        for v in right.iter().filter(|v| v.parts().len() == h.parts().len()) {
            out.push((h.clone(), v.clone()));
        }
    }
    out
}

impl fmt::Display for BijectionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: domain {}, image {}, codomain {}, failures {}",
            self.name, self.domain_size, self.image_size, self.codomain_size, self.roundtrip_failures
        )?;
        if let Some(w) = &self.witness {
            write!(f, " (first failure: {w})")?;
        }
        Ok(())
    }
}

/// Names accepted by [`apply_named`].
pub const BIJECTION_NAMES: &[&str] = &[
    "closed-set-to-matching",
    "closed-set-to-012",
    "012-to-motzkin",
    "matching-to-weighted",
    "motzkin-to-chords",
    "matching-split",
    "s1-to-domino",
    "s1-to-s2",
    "staircase-to-compositions",
];

/// Applies a bijection (or its inverse) to one object in text form and
/// returns the result in text form.
pub fn apply_named(name: &str, input: &str, inverse: bool) -> Result<String> {
    let input = input.trim();
    let one_two = || PartSet::ones_and_twos();
    let out = match (name, inverse) {
        ("closed-set-to-matching", false) => closed_set_to_matching(&input.parse()?)?.to_string(),
        ("closed-set-to-matching", true) => matching_to_closed_set(&input.parse()?)?.to_string(),
        ("closed-set-to-012", false) => closed_set_to_012(&input.parse()?)?.to_string(),
        ("closed-set-to-012", true) => sum012_to_closed_set(&input.parse()?)?.to_string(),
        ("012-to-motzkin", false) => s012_to_motzkin(&input.parse()?)?.to_string(),
        ("012-to-motzkin", true) => motzkin_to_s012(&input.parse()?)?.to_string(),
        ("matching-to-weighted", false) => matching_to_weighted_path(&input.parse()?)?.to_string(),
        ("matching-to-weighted", true) => weighted_path_to_matching(&input.parse()?)?.to_string(),
        ("motzkin-to-chords", false) => motzkin_to_chords(&input.parse()?)?.to_string(),
        ("motzkin-to-chords", true) => chords_to_motzkin(&input.parse()?)?.to_string(),
        ("matching-split", false) => matching_split_horizontals(&input.parse()?)?.to_string(),
        ("matching-split", true) => matching_reconstruct(&input.parse()?)?.to_string(),
        ("s1-to-domino", false) => {
            format_tiling(&composition_s1_to_domino(&Composition::parse(one_two(), input)?)?)
        }
        ("s1-to-domino", true) => domino_to_composition_s1(&parse_tiling(input)?).to_string(),
        ("s1-to-s2", false) => composition_s1_to_s2(&Composition::parse(one_two(), input)?)?.to_string(),
        ("s1-to-s2", true) => composition_s2_to_s1(&Composition::parse(PartSet::Odd, input)?)?.to_string(),
        ("staircase-to-compositions", false) => {
            let (h, v) = staircase_to_composition_pair(&input.parse()?)?;
            format!("{h}|{v}")
        }
        ("staircase-to-compositions", true) => {
            let (h, v) = input.split_once('|').ok_or_else(|| Error::parse("composition pair", input))?;
            composition_pair_to_staircase(&Composition::parse(one_two(), h)?, &Composition::parse(one_two(), v)?)?
                .to_string()
        }
        _ => return Err(Error::invalid(format!("unknown bijection {name}"))),
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(s: &str) -> ClosedSet {
        s.parse().unwrap()
    }

    #[test]
    fn closed_set_matching_examples() {
        assert_eq!(closed_set_to_matching(&ClosedSet::empty(4)).unwrap().to_string(), "U1-U2,U3-U4");
        assert_eq!(closed_set_to_matching(&ClosedSet::full(4)).unwrap().to_string(), "L1-L2,L3-L4");
        let images: BTreeSet<String> = enum_closed_sets(4, Some(2))
            .unwrap()
            .iter()
            .map(|c| closed_set_to_matching(c).unwrap().to_string())
            .collect();
        assert_eq!(images.len(), 2);
        assert!(closed_set_to_matching(&cs("010")).is_err());
        assert!(closed_set_to_matching(&cs("01")).is_err());
    }

    #[test]
    fn closed_set_012_examples() {
        let fig = cs("00001110111000");
        assert!(fig.is_valid());
        assert_eq!(closed_set_to_012(&fig).unwrap().to_string(), "0+0+2+1+2+1+0");
        assert_eq!(sum012_to_closed_set(&closed_set_to_012(&fig).unwrap()).unwrap(), fig);
        assert_eq!(closed_set_to_012(&ClosedSet::empty(6)).unwrap().to_string(), "0+0+0");
        assert_eq!(closed_set_to_012(&ClosedSet::full(6)).unwrap().to_string(), "2+2+2");
    }

    #[test]
    fn sum_to_path_examples() {
        let p = |s: &str| s012_to_motzkin(&s.parse().unwrap()).unwrap();
        assert_eq!(p("1+1+1").to_string(), "HHH");
        assert_eq!(p("0+1+2").to_string(), "DHU");
        assert_eq!(p("2+1+0").to_string(), "UHD");
        assert!(p("2+1+0").is_valid());
    }

    #[test]
    fn weighted_examples() {
        let w = |s: &str| matching_to_weighted_path(&s.parse().unwrap()).unwrap();
        assert_eq!(w("U1-L1").to_string(), "C");
        assert_eq!(w("U1-U2,L1-L2").to_string(), "L");
        let images: BTreeSet<String> =
            enum_matchings(3, 3).unwrap().iter().map(|m| matching_to_weighted_path(m).unwrap().to_string()).collect();
        let expected: BTreeSet<String> = ["CCC", "CL", "LC", "UD", "DU"].iter().map(|s| s.to_string()).collect();
        assert_eq!(images, expected);
        assert!(matching_to_weighted_path(&"U1-U2".parse().unwrap()).is_err());
    }

    #[test]
    fn chord_examples() {
        let all_h: MotzkinPath = "HHH".parse().unwrap();
        assert_eq!(motzkin_to_chords(&all_h).unwrap(), ChordConfig::empty(3));
        let fig: MotzkinPath = "DHDUUHDDUU".parse().unwrap();
        let cfg = motzkin_to_chords(&fig).unwrap();
        assert_eq!(cfg.to_string(), "10:4-8,5-7/9>3,10>1");
        assert_eq!(chords_to_motzkin(&cfg).unwrap(), fig);
        assert!(motzkin_to_chords(&"UH".parse().unwrap()).is_err());
    }

    #[test]
    fn split_examples() {
        let m: Matching = "U1-L3,U2-L6,U3-U4,U5-L9,U6-U7,L1-L2,L4-L5,L7-L8".parse().unwrap();
        let h = matching_split_horizontals(&m).unwrap();
        assert_eq!(h.to_string(), "7,9:3-4,6-7|1-2,4-5,7-8");
        assert_eq!(h.to_string().parse::<HorizontalSplit>().unwrap(), h);
        assert_eq!(matching_reconstruct(&h).unwrap(), m);
        let all_cross: Matching = "U1-L1,U2-L2".parse().unwrap();
        let h = matching_split_horizontals(&all_cross).unwrap();
        assert!(h.upper.is_empty() && h.lower.is_empty());
    }

    #[test]
    fn composition_examples() {
        let c = Composition::parse(PartSet::ones_and_twos(), "1+2+2+1+2+1+2").unwrap();
        assert_eq!(format_tiling(&composition_s1_to_domino(&c).unwrap()), "VHHHHVHHVHH");
        assert_eq!(composition_s1_to_s2(&c).unwrap().to_string(), "1+5+3+3");
        let one = Composition::parse(PartSet::ones_and_twos(), "1").unwrap();
        assert_eq!(composition_s1_to_s2(&one).unwrap().to_string(), "1+1");
        assert_eq!(composition_s1_to_domino(&one).unwrap(), [Tile::V]);
        let twos = Composition::parse(PartSet::ones_and_twos(), "2+2").unwrap();
        assert_eq!(composition_s1_to_domino(&twos).unwrap(), [Tile::HH, Tile::HH]);
        assert!(composition_s2_to_s1(&Composition::parse(PartSet::Odd, "2").unwrap()).is_err());
    }

    #[test]
    fn staircase_examples() {
        let s = Staircase::from_pairs(&[(2, 2), (2, 1), (1, 2), (1, 1), (2, 2)]);
        let (h, v) = staircase_to_composition_pair(&s).unwrap();
        assert_eq!((h.to_string(), v.to_string()), ("2+2+1+1+2".into(), "2+1+2+1+2".into()));
        assert_eq!(composition_pair_to_staircase(&h, &v).unwrap(), s);
        assert_eq!(apply_named("staircase-to-compositions", "H1,V1", false).unwrap(), "1|1");
    }

    #[test]
    fn standard_reports_pass() {
        for r in standard_reports(8, Execution::Sequential) {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn named_dispatch() {
        assert_eq!(apply_named("closed-set-to-012", "00001110111000", false).unwrap(), "0+0+2+1+2+1+0");
        assert_eq!(apply_named("closed-set-to-012", "0+0+2+1+2+1+0", true).unwrap(), "00001110111000");
        assert_eq!(apply_named("s1-to-s2", "1+5+3+3", true).unwrap(), "1+2+2+1+2+1+2");
        assert!(apply_named("nope", "", false).is_err());
        for name in BIJECTION_NAMES {
            assert!(!matches!(apply_named(name, "", false), Err(Error::InvalidInput(ref m)) if m.starts_with("unknown")));
        }
    }
}
