//! Rotationally symmetric chord configurations.
//!
//! A circle is cut into congruent arcs (sectors) of `n` marked points each,
//! labelled `1..=n` in circular order. A configuration lists the chords of
//! one sector; every rotation by a whole sector is implied. Inner arcs
//! `i-j` join two points of the same sector, cross arcs `p>q` join point `p`
//! of a sector to point `q` of the next one.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use super::{collect_all, tokens, CombObject, Sink, EMPTY};
use crate::error::{Error, Result};

pub const CHORD_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChordConfig {
    n: usize,
    inner: BTreeSet<(usize, usize)>,
    cross: BTreeSet<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Chord {
    Inner(usize, usize),
    Cross(usize, usize),
}

impl ChordConfig {
    pub fn new(
        n: usize,
        inner: impl IntoIterator<Item = (usize, usize)>,
        cross: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let inner = inner.into_iter().map(|(i, j)| (i.min(j), i.max(j))).collect();
        ChordConfig { n, inner, cross: cross.into_iter().collect() }
    }

    pub fn empty(n: usize) -> Self {
        ChordConfig::new(n, [], [])
    }

    pub fn points(&self) -> usize {
        self.n
    }

    pub fn inner_arcs(&self) -> &BTreeSet<(usize, usize)> {
        &self.inner
    }

    pub fn cross_arcs(&self) -> &BTreeSet<(usize, usize)> {
        &self.cross
    }

    fn chords(&self) -> Vec<Chord> {
        self.inner
            .iter()
            .map(|&(i, j)| Chord::Inner(i, j))
            .chain(self.cross.iter().map(|&(p, q)| Chord::Cross(p, q)))
            .collect()
    }
}

/// Copies of a chord on three consecutive sectors, as position pairs with
/// sector `s` point `i` at `s * n + i - 1`.
fn copies(c: Chord, n: usize) -> Vec<(usize, usize)> {
    match c {
        Chord::Inner(i, j) => (0..3).map(|s| (s * n + i - 1, s * n + j - 1)).collect(),
        Chord::Cross(p, q) => (0..2).map(|s| (s * n + p - 1, (s + 1) * n + q - 1)).collect(),
    }
}

fn check_chord(c: Chord, n: usize) -> Result<()> {
    match c {
        Chord::Inner(i, j) => {
            if i == 0 || j > n || j < i + 2 {
                return Err(Error::invalid(format!("inner arc {i}-{j} is not allowed for n = {n}")));
            }
        }
        Chord::Cross(p, q) => {
            if q == 0 || p > n || q >= p {
                return Err(Error::invalid(format!("cross arc {p}>{q} is not allowed for n = {n}")));
            }
        }
    }
    Ok(())
}

/// Two chord families are compatible when no copies interleave or share an
/// endpoint.
fn compatible(a: Chord, b: Chord, n: usize) -> bool {
    let (ca, cb) = (copies(a, n), copies(b, n));
    for &(x1, y1) in &ca {
        for &(x2, y2) in &cb {
            if (x1, y1) == (x2, y2) && a == b {
                continue;
            }
            if x1 == x2 || x1 == y2 || y1 == x2 || y1 == y2 {
                return false;
            }
            let inside = |p: usize| x1 < p && p < y1;
            if inside(x2) != inside(y2) {
                return false;
            }
        }
    }
    true
}

impl CombObject for ChordConfig {
    fn validate(&self) -> Result<()> {
        let chords = self.chords();
        for &c in &chords {
            check_chord(c, self.n)?;
            if !compatible(c, c, self.n) {
                return Err(Error::invalid(format!("{c:?} crosses its own rotation")));
            }
        }
        for (i, &a) in chords.iter().enumerate() {
            for &b in &chords[i + 1..] {
                if !compatible(a, b, self.n) {
                    return Err(Error::invalid(format!("{a:?} and {b:?} cross or touch")));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for ChordConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |items: Vec<String>| if items.is_empty() { EMPTY.to_string() } else { items.join(",") };
        let inner = join(self.inner.iter().map(|(i, j)| format!("{i}-{j}")).collect());
        let cross = join(self.cross.iter().map(|(p, q)| format!("{p}>{q}")).collect());
        write!(f, "{}:{inner}/{cross}", self.n)
    }
}

impl FromStr for ChordConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse("chord configuration", s);
        let (n, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        let (inner, cross) = rest.split_once('/').ok_or_else(bad)?;
        let pair = |t: &str, sep: char| -> Result<(usize, usize)> {
            let (a, b) = t.split_once(sep).ok_or_else(bad)?;
            Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
        };
        let inner: Vec<_> = tokens(inner, ",").into_iter().map(|t| pair(t, '-')).collect::<Result<_>>()?;
        let cross: Vec<_> = tokens(cross, ",").into_iter().map(|t| pair(t, '>')).collect::<Result<_>>()?;
        Ok(ChordConfig::new(n, inner, cross))
    }
}

/// Streams all configurations with `n` points per sector, sorted.
///
/// Backtracks over the admissible chords, keeping only pairwise compatible
/// choices.
pub fn visit_chords(n: usize, sink: Sink<'_, ChordConfig>) -> Result<()> {
    if n > CHORD_LIMIT {
        return Err(Error::too_large("chord configurations", format!("n = {n} > {CHORD_LIMIT}")));
    }
    let mut candidates = Vec::new();
    for i in 1..=n {
        for j in i + 2..=n {
            candidates.push(Chord::Inner(i, j));
        }
        for q in 1..i {
            candidates.push(Chord::Cross(i, q));
        }
    }

    fn go(
        idx: usize,
        candidates: &[Chord],
        chosen: &mut Vec<Chord>,
        n: usize,
        out: &mut Vec<ChordConfig>,
    ) {
        if idx == candidates.len() {
            let mut cfg = ChordConfig::empty(n);
            for &c in chosen.iter() {
                match c {
                    Chord::Inner(i, j) => cfg.inner.insert((i, j)),
                    Chord::Cross(p, q) => cfg.cross.insert((p, q)),
                };
            }
            out.push(cfg);
            return;
        }
        go(idx + 1, candidates, chosen, n, out);
        let c = candidates[idx];
        if compatible(c, c, n) && chosen.iter().all(|&d| compatible(c, d, n)) {
            chosen.push(c);
            go(idx + 1, candidates, chosen, n, out);
            chosen.pop();
        }
    }

    let mut out = Vec::new();
    go(0, &candidates, &mut Vec::new(), n, &mut out);
    out.sort();
    for cfg in out {
        if let ControlFlow::Break(()) = sink(cfg) {
            break;
        }
    }
    Ok(())
}

pub fn enum_chords(n: usize) -> Result<Vec<ChordConfig>> {
    collect_all(|sink| visit_chords(n, sink))
}
