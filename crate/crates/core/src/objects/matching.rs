//! Noncrossing perfect matchings of points on two parallel lines.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use super::{collect_all, tokens, write_joined, CombObject, Sink};
use crate::error::{Error, Result};

pub const MATCHING_LIMIT: usize = 24;

/// A marked point; indices are 1-based from the left. Upper points order
/// before lower points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Point {
    Upper(usize),
    Lower(usize),
}

impl Point {
    pub fn index(self) -> usize {
        match self {
            Point::Upper(i) | Point::Lower(i) => i,
        }
    }

    pub fn is_upper(self) -> bool {
        matches!(self, Point::Upper(_))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Upper(i) => write!(f, "U{i}"),
            Point::Lower(j) => write!(f, "L{j}"),
        }
    }
}

impl FromStr for Point {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse("point", s);
        let (tag, idx) = s.split_at_checked(1).ok_or_else(bad)?;
        let idx: usize = idx.parse().map_err(|_| bad())?;
        if idx == 0 {
            return Err(bad());
        }
        match tag {
            "U" => Ok(Point::Upper(idx)),
            "L" => Ok(Point::Lower(idx)),
            _ => Err(bad()),
        }
    }
}

/// Pairs are stored normalized: each pair as `(low, high)` in point order,
/// the list sorted by first element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    k: usize,
    n: usize,
    pairs: Vec<(Point, Point)>,
}

impl Matching {
    /// Normalizes the pair list; does not validate.
    pub fn new(k: usize, n: usize, pairs: impl IntoIterator<Item = (Point, Point)>) -> Self {
        let mut pairs: Vec<(Point, Point)> =
            pairs.into_iter().map(|(a, b)| if a <= b { (a, b) } else { (b, a) }).collect();
        pairs.sort();
        Matching { k, n, pairs }
    }

    pub fn upper_count(&self) -> usize {
        self.k
    }

    pub fn lower_count(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(Point, Point)] {
        &self.pairs
    }

    /// Cross pairs as `(upper index, lower index)`, sorted.
    pub fn cross_pairs(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .pairs
            .iter()
            .filter_map(|&(a, b)| match (a, b) {
                (Point::Upper(i), Point::Lower(j)) => Some((i, j)),
                _ => None,
            })
            .collect();
        out.sort();
        out
    }

    /// Same-line pairs on each line, as left indices `(i, i + 1)`.
    pub fn horizontal_pairs(&self) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
        let mut upper = Vec::new();
        let mut lower = Vec::new();
        for &(a, b) in &self.pairs {
            match (a, b) {
                (Point::Upper(i), Point::Upper(j)) => upper.push((i, j)),
                (Point::Lower(i), Point::Lower(j)) => lower.push((i, j)),
                _ => {}
            }
        }
        (upper, lower)
    }

    /// Rebuilds a matching from its same-line pairs by joining the free
    /// points of both lines left to right.
    pub fn from_horizontals(
        k: usize,
        n: usize,
        upper: &[(usize, usize)],
        lower: &[(usize, usize)],
    ) -> Result<Self> {
        let free = |len: usize, segs: &[(usize, usize)], line: &str| -> Result<Vec<usize>> {
            let mut used = vec![false; len + 1];
            for &(i, j) in segs {
                if i == 0 || j > len || j != i + 1 || used[i] || used[j] {
                    return Err(Error::invalid(format!("bad {line} segment {i}-{j}")));
                }
                used[i] = true;
                used[j] = true;
            }
            Ok((1..=len).filter(|&i| !used[i]).collect())
        };
        let fu = free(k, upper, "upper")?;
        let fl = free(n, lower, "lower")?;
        if fu.len() != fl.len() {
            return Err(Error::invalid(format!(
                "{} free upper points but {} free lower points",
                fu.len(),
                fl.len()
            )));
        }
        let pairs = upper
            .iter()
            .map(|&(i, j)| (Point::Upper(i), Point::Upper(j)))
            .chain(lower.iter().map(|&(i, j)| (Point::Lower(i), Point::Lower(j))))
            .chain(fu.iter().zip(&fl).map(|(&i, &j)| (Point::Upper(i), Point::Lower(j))));
        Ok(Matching::new(k, n, pairs))
    }

    fn in_range(&self, p: Point) -> bool {
        match p {
            Point::Upper(i) => (1..=self.k).contains(&i),
            Point::Lower(j) => (1..=self.n).contains(&j),
        }
    }
}

impl CombObject for Matching {
    fn validate(&self) -> Result<()> {
        let mut upper = vec![false; self.k + 1];
        let mut lower = vec![false; self.n + 1];
        for &(a, b) in &self.pairs {
            for p in [a, b] {
                if !self.in_range(p) {
                    return Err(Error::invalid(format!("point {p} out of range")));
                }
                let slot = match p {
                    Point::Upper(i) => &mut upper[i],
                    Point::Lower(j) => &mut lower[j],
                };
                if *slot {
                    return Err(Error::invalid(format!("point {p} used twice")));
                }
                *slot = true;
            }
            if a.is_upper() == b.is_upper() && b.index() != a.index() + 1 {
                return Err(Error::invalid(format!("same-line pair {a}-{b} is not adjacent")));
            }
        }
        if upper[1..].iter().chain(&lower[1..]).any(|used| !used) {
            return Err(Error::invalid("not a perfect matching"));
        }
        let cross = self.cross_pairs();
        if cross.windows(2).any(|w| w[0].1 >= w[1].1) {
            return Err(Error::invalid("cross pairs intersect"));
        }
        let (hu, hl) = self.horizontal_pairs();
        if Matching::from_horizontals(self.k, self.n, &hu, &hl)? != *self {
            return Err(Error::invalid("free points are not joined in order"));
        }
        Ok(())
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write_joined(f, &parts, ",")
    }
}

/// Line sizes are taken from the largest index seen on each line.
impl FromStr for Matching {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        let (mut k, mut n) = (0, 0);
        for tok in tokens(s, ",") {
            let (a, b) = tok.split_once('-').ok_or_else(|| Error::parse("matching", tok))?;
            let (a, b): (Point, Point) = (a.trim().parse()?, b.trim().parse()?);
            for p in [a, b] {
                match p {
                    Point::Upper(i) => k = k.max(i),
                    Point::Lower(j) => n = n.max(j),
                }
            }
            pairs.push((a, b));
        }
        Ok(Matching::new(k, n, pairs))
    }
}

/// Streams all matchings of `k` upper and `n` lower points.
///
/// Backtracks over the first unmatched point (uppers before lowers), trying
/// partners in increasing order, so output is lexicographic in the pair list.
pub fn visit_matchings(k: usize, n: usize, sink: Sink<'_, Matching>) -> Result<()> {
    if k + n > MATCHING_LIMIT {
        return Err(Error::too_large("matchings", format!("k + n = {} > {MATCHING_LIMIT}", k + n)));
    }
    if (k + n) % 2 == 1 {
        return Ok(());
    }

    struct Search<'s, 'a> {
        k: usize,
        n: usize,
        upper_used: Vec<bool>,
        lower_used: Vec<bool>,
        pairs: Vec<(Point, Point)>,
        sink: &'s mut dyn FnMut(Matching) -> ControlFlow<()>,
        _marker: std::marker::PhantomData<&'a ()>,
    }

    impl Search<'_, '_> {
        fn run(&mut self, next_upper: usize, last_cross_lower: usize) -> ControlFlow<()> {
            if let Some(i) = (next_upper..=self.k).find(|&i| !self.upper_used[i]) {
                if i < self.k && !self.upper_used[i + 1] {
                    self.upper_used[i] = true;
                    self.upper_used[i + 1] = true;
                    self.pairs.push((Point::Upper(i), Point::Upper(i + 1)));
                    self.run(i + 2, last_cross_lower)?;
                    self.pairs.pop();
                    self.upper_used[i] = false;
                    self.upper_used[i + 1] = false;
                }
                // skipped lowers can only pair among themselves, so the gap must be even
                for j in (last_cross_lower + 1..=self.n).step_by(2) {
                    self.upper_used[i] = true;
                    self.lower_used[j] = true;
                    self.pairs.push((Point::Upper(i), Point::Lower(j)));
                    self.run(i + 1, j)?;
                    self.pairs.pop();
                    self.upper_used[i] = false;
                    self.lower_used[j] = false;
                }
                return ControlFlow::Continue(());
            }
            // all uppers matched: remaining lowers pair off left to right
            let free: Vec<usize> = (1..=self.n).filter(|&j| !self.lower_used[j]).collect();
            let mut extra = Vec::with_capacity(free.len() / 2);
            for w in free.chunks(2) {
                if w.len() != 2 || w[1] != w[0] + 1 {
                    return ControlFlow::Continue(());
                }
                extra.push((Point::Lower(w[0]), Point::Lower(w[1])));
            }
            let mut pairs = self.pairs.clone();
            pairs.extend(extra);
            (self.sink)(Matching { k: self.k, n: self.n, pairs })
        }
    }

    let mut search = Search {
        k,
        n,
        upper_used: vec![false; k + 2],
        lower_used: vec![false; n + 2],
        pairs: Vec::new(),
        sink,
        _marker: std::marker::PhantomData,
    };
    let _ = search.run(1, 0);
    Ok(())
}

pub fn enum_matchings(k: usize, n: usize) -> Result<Vec<Matching>> {
    collect_all(|sink| visit_matchings(k, n, sink))
}
