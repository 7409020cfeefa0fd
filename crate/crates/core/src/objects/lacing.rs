//! Shoe lacings: orders in which a lace visits the holes of two parallel
//! rows, `k` on the left and `n` on the right, numbered from the top.
//!
//! Every hole must have a lace neighbour on the opposite side. The first
//! and last holes are tied together by the knot, so only interior holes are
//! checked.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use super::{collect_all, tokens, write_joined, CombObject, Sink};
use crate::error::{Error, Result};

pub const LACING_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hole {
    pub side: Side,
    pub index: usize,
}

impl Hole {
    pub fn left(index: usize) -> Self {
        Hole { side: Side::Left, index }
    }

    pub fn right(index: usize) -> Self {
        Hole { side: Side::Right, index }
    }

    fn coords(self) -> (i64, i64) {
        let x = match self.side {
            Side::Left => 0,
            Side::Right => 1,
        };
        (x, -(self.index as i64))
    }
}

impl fmt::Display for Hole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::Left => write!(f, "L{}", self.index),
            Side::Right => write!(f, "R{}", self.index),
        }
    }
}

impl FromStr for Hole {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse("hole", s);
        let (tag, idx) = s.split_at_checked(1).ok_or_else(bad)?;
        let index: usize = idx.parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        match tag {
            "L" => Ok(Hole::left(index)),
            "R" => Ok(Hole::right(index)),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LacingMode {
    /// Starts at the top left hole and ends at the top right hole.
    Right,
    /// Starts at the top left hole, ends at the bottom right hole and drawn
    /// with straight segments never crosses itself.
    NonSelfCrossing,
}

impl LacingMode {
    fn end(self, n: usize) -> Hole {
        match self {
            LacingMode::Right => Hole::right(1),
            LacingMode::NonSelfCrossing => Hole::right(n),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lacing {
    k: usize,
    n: usize,
    order: Vec<Hole>,
}

impl Lacing {
    pub fn new(k: usize, n: usize, order: Vec<Hole>) -> Self {
        Lacing { k, n, order }
    }

    pub fn sizes(&self) -> (usize, usize) {
        (self.k, self.n)
    }

    pub fn order(&self) -> &[Hole] {
        &self.order
    }

    fn validate_common(&self) -> Result<()> {
        let mut left = vec![false; self.k + 1];
        let mut right = vec![false; self.n + 1];
        for h in &self.order {
            let seen = match h.side {
                Side::Left => left.get_mut(h.index),
                Side::Right => right.get_mut(h.index),
            };
            match seen {
                Some(s) if !*s && h.index > 0 => *s = true,
                _ => return Err(Error::invalid(format!("hole {h} out of range or repeated"))),
            }
        }
        if self.order.len() != self.k + self.n {
            return Err(Error::invalid("not every hole is visited"));
        }
        if self.order.first() != Some(&Hole::left(1)) {
            return Err(Error::invalid("lacing must start at L1"));
        }
        for (t, w) in self.order.windows(3).enumerate() {
            if w[0].side == w[1].side && w[2].side == w[1].side {
                return Err(Error::invalid(format!(
                    "hole {} (position {}) has no neighbour on the other side",
                    w[1],
                    t + 2
                )));
            }
        }
        Ok(())
    }

    /// Checks the lacing against one specific mode.
    pub fn validate_mode(&self, mode: LacingMode) -> Result<()> {
        self.validate_common()?;
        if self.order.last() != Some(&mode.end(self.n)) {
            return Err(Error::invalid(format!("lacing must end at {}", mode.end(self.n))));
        }
        if mode == LacingMode::NonSelfCrossing {
            for j in 1..self.order.len().saturating_sub(1) {
                if crosses_earlier(&self.order[..=j + 1]) {
                    return Err(Error::invalid(format!("segment {} crosses an earlier one", j + 1)));
                }
            }
        }
        Ok(())
    }
}

impl CombObject for Lacing {
    /// Accepts lacings valid in either mode.
    fn validate(&self) -> Result<()> {
        self.validate_mode(LacingMode::Right)
            .or_else(|_| self.validate_mode(LacingMode::NonSelfCrossing))
    }
}

fn orient(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i64 {
    ((b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)).signum()
}

fn on_segment(a: (i64, i64), b: (i64, i64), p: (i64, i64)) -> bool {
    p.0 >= a.0.min(b.0) && p.0 <= a.0.max(b.0) && p.1 >= a.1.min(b.1) && p.1 <= a.1.max(b.1)
}

/// Closed segment intersection on integer points.
fn segments_meet(a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)) -> bool {
    let (o1, o2, o3, o4) = (orient(a, b, c), orient(a, b, d), orient(c, d, a), orient(c, d, b));
    if o1 != o2 && o3 != o4 && o1 * o2 <= 0 && o3 * o4 <= 0 {
        return true;
    }
    (o1 == 0 && on_segment(a, b, c))
        || (o2 == 0 && on_segment(a, b, d))
        || (o3 == 0 && on_segment(c, d, a))
        || (o4 == 0 && on_segment(c, d, b))
}

/// Whether the last segment of `path` meets any earlier segment other than
/// at the shared hole with its predecessor.
fn crosses_earlier(path: &[Hole]) -> bool {
    let m = path.len();
    if m < 3 {
        return false;
    }
    let (c, d) = (path[m - 2].coords(), path[m - 1].coords());
    // the previous segment shares hole c; it only conflicts when collinear
    // and doubling back
    let b = path[m - 3].coords();
    if orient(b, c, d) == 0 && on_segment(c, d, b) || orient(b, c, d) == 0 && on_segment(b, c, d) {
        return true;
    }
    path[..m - 2]
        .windows(2)
        .any(|w| segments_meet(w[0].coords(), w[1].coords(), c, d))
}

impl fmt::Display for Lacing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.order, ",")
    }
}

/// Row sizes are taken from the largest index seen on each side.
impl FromStr for Lacing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let order: Vec<Hole> = tokens(s, ",").into_iter().map(str::parse).collect::<Result<_>>()?;
        let max = |side| order.iter().filter(|h| h.side == side).map(|h| h.index).max().unwrap_or(0);
        Ok(Lacing { k: max(Side::Left), n: max(Side::Right), order })
    }
}

/// Streams lacings of `k` left and `n` right holes in the given mode, sorted
/// by visit order.
pub fn visit_lacings(k: usize, n: usize, mode: LacingMode, sink: Sink<'_, Lacing>) -> Result<()> {
    if k + n > LACING_LIMIT {
        return Err(Error::too_large("lacings", format!("k + n = {} > {LACING_LIMIT}", k + n)));
    }
    if k == 0 || n == 0 {
        return Ok(());
    }
    let end = mode.end(n);
    let holes: Vec<Hole> = (1..=k).map(Hole::left).chain((1..=n).map(Hole::right)).collect();

    struct Walk<'s> {
        k: usize,
        n: usize,
        mode: LacingMode,
        end: Hole,
        holes: Vec<Hole>,
        used: Vec<bool>,
        path: Vec<Hole>,
        sink: Sink<'s, Lacing>,
    }

    impl Walk<'_> {
        fn go(&mut self) -> ControlFlow<()> {
            let total = self.k + self.n;
            if self.path.len() == total {
                return (self.sink)(Lacing::new(self.k, self.n, self.path.clone()));
            }
            for idx in 0..self.holes.len() {
                let h = self.holes[idx];
                if self.used[idx] || (h == self.end) != (self.path.len() == total - 1) {
                    continue;
                }
                let m = self.path.len();
                if m >= 2 && self.path[m - 2].side == self.path[m - 1].side && h.side == self.path[m - 1].side {
                    continue;
                }
                self.path.push(h);
                if self.mode == LacingMode::NonSelfCrossing && crosses_earlier(&self.path) {
                    self.path.pop();
                    continue;
                }
                self.used[idx] = true;
                self.go()?;
                self.used[idx] = false;
                self.path.pop();
            }
            ControlFlow::Continue(())
        }
    }

    let mut used = vec![false; k + n];
    used[0] = true;
    let start = holes[0];
    let mut walk = Walk { k, n, mode, end, holes, used, path: vec![start], sink };
    let _ = walk.go();
    Ok(())
}

pub fn enum_lacings(k: usize, n: usize, mode: LacingMode) -> Result<Vec<Lacing>> {
    collect_all(|sink| visit_lacings(k, n, mode, sink))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(k: usize, n: usize, mode: LacingMode) -> usize {
        enum_lacings(k, n, mode).unwrap().len()
    }

    #[test]
    fn square_shoes() {
        assert_eq!(count(2, 2, LacingMode::Right), 2);
        assert_eq!(count(3, 3, LacingMode::Right), 20);
        assert_eq!(count(3, 3, LacingMode::NonSelfCrossing), 5);
        assert_eq!(count(4, 4, LacingMode::NonSelfCrossing), 11);
        assert_eq!(count(1, 1, LacingMode::Right), 1);
    }

    #[test]
    fn defective_shoes() {
        assert_eq!(count(2, 3, LacingMode::NonSelfCrossing), 2);
        assert_eq!(count(3, 4, LacingMode::NonSelfCrossing), 5);
        assert_eq!(count(2, 3, LacingMode::Right), 4);
        assert_eq!(count(3, 4, LacingMode::Right), 60);
    }

    #[test]
    fn validation() {
        let l: Lacing = "L1,R2,L2,R1".parse().unwrap();
        assert!(l.validate_mode(LacingMode::Right).is_ok());
        assert!(l.validate_mode(LacingMode::NonSelfCrossing).is_err());
        let nsc: Lacing = "L1,R1,L2,R2".parse().unwrap();
        assert!(nsc.validate_mode(LacingMode::NonSelfCrossing).is_ok());
        // interior hole with both neighbours on its own side
        assert!(!"L1,L2,L3,R1".parse::<Lacing>().unwrap().is_valid());
        // crossing diagonals
        assert!("L1,R2,R1,L2,R3".parse::<Lacing>().unwrap().validate_mode(LacingMode::NonSelfCrossing).is_err());
        assert!("L1,X2".parse::<Lacing>().is_err());
        assert!(!"L2,R1".parse::<Lacing>().unwrap().is_valid());
    }
}
