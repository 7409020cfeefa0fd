//! Closed vertex sets of the fence `Z_m`.
//!
//! Vertices are `0..m` in zigzag order. Odd positions are upper vertices;
//! each has edges down to its neighbours `i - 1` and `i + 1` (when present).
//! A set is closed when no edge leaves it downward.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use super::{collect_all, CombObject, Sink, EMPTY};
use crate::error::{Error, Result};

pub const FENCE_LIMIT: usize = 26;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClosedSet {
    members: Vec<bool>,
}

impl ClosedSet {
    pub fn new(members: Vec<bool>) -> Self {
        ClosedSet { members }
    }

    pub fn empty(m: usize) -> Self {
        ClosedSet { members: vec![false; m] }
    }

    pub fn full(m: usize) -> Self {
        ClosedSet { members: vec![true; m] }
    }

    pub fn fence_size(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[bool] {
        &self.members
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.get(v).copied().unwrap_or(false)
    }

    pub fn size(&self) -> usize {
        self.members.iter().filter(|&&b| b).count()
    }
}

pub fn is_upper(v: usize) -> bool {
    v % 2 == 1
}

impl CombObject for ClosedSet {
    fn validate(&self) -> Result<()> {
        let m = self.members.len();
        for v in (1..m).step_by(2) {
            if !self.members[v] {
                continue;
            }
            for w in [v - 1, v + 1] {
                if w < m && !self.members[w] {
                    return Err(Error::invalid(format!("edge {v} -> {w} leaves the set")));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for ClosedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.members.is_empty() {
            return f.write_str(EMPTY);
        }
        self.members.iter().try_for_each(|&b| f.write_str(if b { "1" } else { "0" }))
    }
}

impl FromStr for ClosedSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == EMPTY {
            return Ok(ClosedSet::empty(0));
        }
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::parse("closed set", s)),
            })
            .collect::<Result<_>>()
            .map(ClosedSet::new)
    }
}

/// Streams closed sets of `Z_m`, optionally only those of a given size, in
/// bit-string order.
pub fn visit_closed_sets(m: usize, size: Option<usize>, sink: Sink<'_, ClosedSet>) -> Result<()> {
    if m > FENCE_LIMIT {
        return Err(Error::too_large("closed sets", format!("m = {m} > {FENCE_LIMIT}")));
    }

    fn go(
        bits: &mut Vec<bool>,
        m: usize,
        count: usize,
        size: Option<usize>,
        sink: &mut dyn FnMut(ClosedSet) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let v = bits.len();
        if let Some(s) = size {
            if count > s || count + (m - v) < s {
                return ControlFlow::Continue(());
            }
        }
        if v == m {
            return sink(ClosedSet::new(bits.clone()));
        }
        for b in [false, true] {
            // an upper member needs its left neighbour; a lower non-member
            // forbids its left upper neighbour
            let ok = if is_upper(v) { !b || bits[v - 1] } else { b || v == 0 || !bits[v - 1] };
            if ok {
                bits.push(b);
                go(bits, m, count + b as usize, size, sink)?;
                bits.pop();
            }
        }
        ControlFlow::Continue(())
    }

    let _ = go(&mut Vec::with_capacity(m), m, 0, size, sink);
    Ok(())
}

pub fn enum_closed_sets(m: usize, size: Option<usize>) -> Result<Vec<ClosedSet>> {
    collect_all(|sink| visit_closed_sets(m, size, sink))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(m: usize) -> Vec<usize> {
        (0..=m).map(|k| enum_closed_sets(m, Some(k)).unwrap().len()).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(counts(4), [1, 2, 2, 2, 1]);
        assert_eq!(counts(3), [1, 2, 1, 1]);
        assert_eq!(enum_closed_sets(0, None).unwrap(), [ClosedSet::empty(0)]);
        assert!(enum_closed_sets(27, None).is_err());
    }

    #[test]
    fn all_valid_and_brute_force() {
        for m in 0..=10 {
            let sets = enum_closed_sets(m, None).unwrap();
            assert!(sets.iter().all(|s| s.is_valid()));
            let brute = (0u32..1 << m)
                .filter(|bits| ClosedSet::new((0..m).map(|i| bits >> i & 1 == 1).collect()).is_valid())
                .count();
            assert_eq!(sets.len(), brute);
        }
    }

    #[test]
    fn parse_and_validate() {
        let s: ClosedSet = "0110".parse().unwrap();
        assert_eq!((s.fence_size(), s.size()), (4, 2));
        assert!(!s.is_valid());
        assert!("1110".parse::<ClosedSet>().unwrap().is_valid());
        assert!("01x".parse::<ClosedSet>().is_err());
    }
}
