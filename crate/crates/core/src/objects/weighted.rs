//! Horizon-to-horizon paths with weighted steps: `C` costs 1, `L` costs 2,
//! `U` and `D` cost 3/2 each.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use super::{collect_all, CombObject, Sink, EMPTY};
use crate::error::{Error, Result};

pub const WEIGHTED_LIMIT: usize = 18;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WStep {
    C,
    D,
    L,
    U,
}

impl WStep {
    /// Cost in half units.
    pub fn half_cost(self) -> usize {
        match self {
            WStep::C => 2,
            WStep::L => 4,
            WStep::U | WStep::D => 3,
        }
    }

    fn rise(self) -> i64 {
        match self {
            WStep::U => 1,
            WStep::D => -1,
            _ => 0,
        }
    }

    pub fn letter(self) -> char {
        match self {
            WStep::C => 'C',
            WStep::D => 'D',
            WStep::L => 'L',
            WStep::U => 'U',
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightedPath {
    steps: Vec<WStep>,
}

impl WeightedPath {
    pub fn new(steps: Vec<WStep>) -> Self {
        WeightedPath { steps }
    }

    pub fn steps(&self) -> &[WStep] {
        &self.steps
    }

    /// Total cost; `None` when it is not an integer.
    pub fn cost(&self) -> Option<usize> {
        let half: usize = self.steps.iter().map(|s| s.half_cost()).sum();
        half.is_multiple_of(2).then_some(half / 2)
    }
}

impl CombObject for WeightedPath {
    fn validate(&self) -> Result<()> {
        let h: i64 = self.steps.iter().map(|s| s.rise()).sum();
        if h != 0 {
            return Err(Error::invalid(format!("path ends at height {h}")));
        }
        Ok(())
    }
}

impl fmt::Display for WeightedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return f.write_str(EMPTY);
        }
        self.steps.iter().try_for_each(|s| write!(f, "{}", s.letter()))
    }
}

impl FromStr for WeightedPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == EMPTY {
            return Ok(WeightedPath::default());
        }
        s.chars()
            .map(|c| match c {
                'C' => Ok(WStep::C),
                'D' => Ok(WStep::D),
                'L' => Ok(WStep::L),
                'U' => Ok(WStep::U),
                _ => Err(Error::parse("weighted path", s)),
            })
            .collect::<Result<_>>()
            .map(WeightedPath::new)
    }
}

/// Streams all paths of total cost `cost`.
pub fn visit_weighted_paths(cost: usize, sink: Sink<'_, WeightedPath>) -> Result<()> {
    if cost > WEIGHTED_LIMIT {
        return Err(Error::too_large("weighted paths", format!("cost = {cost} > {WEIGHTED_LIMIT}")));
    }

    fn go(
        steps: &mut Vec<WStep>,
        rem: usize,
        h: i64,
        sink: &mut dyn FnMut(WeightedPath) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if rem == 0 {
            return if h == 0 { sink(WeightedPath::new(steps.clone())) } else { ControlFlow::Continue(()) };
        }
        for s in [WStep::C, WStep::D, WStep::L, WStep::U] {
            let c = s.half_cost();
            if c > rem {
                continue;
            }
            let (r, nh) = (rem - c, h + s.rise());
            // returning to height 0 costs 3 half units per level; the rest
            // must be an even number of half units
            let back = 3 * nh.unsigned_abs() as usize;
            if back > r || (r - back) % 2 == 1 {
                continue;
            }
            steps.push(s);
            go(steps, r, nh, sink)?;
            steps.pop();
        }
        ControlFlow::Continue(())
    }

    let _ = go(&mut Vec::new(), 2 * cost, 0, sink);
    Ok(())
}

pub fn enum_weighted_paths(cost: usize) -> Result<Vec<WeightedPath>> {
    collect_all(|sink| visit_weighted_paths(cost, sink))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(cost: usize) -> Vec<String> {
        enum_weighted_paths(cost).unwrap().iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(words(3), ["CCC", "CL", "DU", "LC", "UD"]);
        assert_eq!(words(0), ["-"]);
        assert_eq!(words(1), ["C"]);
        assert_eq!(words(4).len(), 11);
        assert!(enum_weighted_paths(19).is_err());
    }

    #[test]
    fn parse_and_validate() {
        let p: WeightedPath = "CLUD".parse().unwrap();
        assert_eq!(p.cost(), Some(6));
        assert!(p.is_valid());
        assert!(!"UC".parse::<WeightedPath>().unwrap().is_valid());
        assert_eq!("U".parse::<WeightedPath>().unwrap().cost(), None);
        assert!("CX".parse::<WeightedPath>().is_err());
    }
}
