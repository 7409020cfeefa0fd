//! Peakless Motzkin paths without a floor.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use super::{collect_all, CombObject, Sink, EMPTY};
use crate::error::{Error, Result};

pub const PEAKLESS_LIMIT: usize = 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    D,
    H,
    U,
}

impl Step {
    pub fn rise(self) -> i64 {
        match self {
            Step::D => -1,
            Step::H => 0,
            Step::U => 1,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Step::D => 'D',
            Step::H => 'H',
            Step::U => 'U',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'D' => Some(Step::D),
            'H' => Some(Step::H),
            'U' => Some(Step::U),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MotzkinPath {
    steps: Vec<Step>,
}

impl MotzkinPath {
    pub fn new(steps: Vec<Step>) -> Self {
        MotzkinPath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Final height relative to the start.
    pub fn end_height(&self) -> i64 {
        self.steps.iter().map(|s| s.rise()).sum()
    }
}

impl CombObject for MotzkinPath {
    fn validate(&self) -> Result<()> {
        match self.steps.windows(2).position(|w| w == [Step::U, Step::D]) {
            Some(i) => Err(Error::invalid(format!("peak at step {}", i + 1))),
            None => Ok(()),
        }
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return f.write_str(EMPTY);
        }
        self.steps.iter().try_for_each(|s| write!(f, "{}", s.letter()))
    }
}

impl FromStr for MotzkinPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == EMPTY {
            return Ok(MotzkinPath::default());
        }
        s.chars()
            .map(|c| Step::from_letter(c).ok_or_else(|| Error::parse("Motzkin path", s)))
            .collect::<Result<_>>()
            .map(MotzkinPath::new)
    }
}

/// Streams peakless paths of `k` steps ending at height `n_end`.
pub fn visit_peakless(k: usize, n_end: i64, sink: Sink<'_, MotzkinPath>) -> Result<()> {
    if k > PEAKLESS_LIMIT {
        return Err(Error::too_large("peakless paths", format!("k = {k} > {PEAKLESS_LIMIT}")));
    }
    if n_end.unsigned_abs() as usize > k {
        return Ok(());
    }

    fn go(
        steps: &mut Vec<Step>,
        k: usize,
        height: i64,
        target: i64,
        sink: &mut dyn FnMut(MotzkinPath) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if steps.len() == k {
            return sink(MotzkinPath::new(steps.clone()));
        }
        let remaining = (k - steps.len() - 1) as i64;
        for step in [Step::D, Step::H, Step::U] {
            if step == Step::D && steps.last() == Some(&Step::U) {
                continue;
            }
            let h = height + step.rise();
            if (target - h).abs() > remaining {
                continue;
            }
            steps.push(step);
            go(steps, k, h, target, sink)?;
            steps.pop();
        }
        ControlFlow::Continue(())
    }

    let _ = go(&mut Vec::with_capacity(k), k, 0, n_end, sink);
    Ok(())
}

pub fn enum_peakless(k: usize, n_end: i64) -> Result<Vec<MotzkinPath>> {
    collect_all(|sink| visit_peakless(k, n_end, sink))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(k: usize, n: i64) -> Vec<String> {
        enum_peakless(k, n).unwrap().iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(words(3, 1).len(), 4);
        assert_eq!(words(1, 1), ["U"]);
        assert_eq!(words(2, 0), ["DU", "HH"]);
        assert_eq!(words(0, 0), ["-"]);
        assert!(words(2, 3).is_empty());
        assert!(enum_peakless(23, 0).is_err());
    }

    #[test]
    fn parse_and_validate() {
        let p: MotzkinPath = "HHU".parse().unwrap();
        assert_eq!(p.end_height(), 1);
        assert!(p.is_valid());
        assert!(!"HUDH".parse::<MotzkinPath>().unwrap().is_valid());
        assert!("HXU".parse::<MotzkinPath>().is_err());
        assert_eq!("-".parse::<MotzkinPath>().unwrap(), MotzkinPath::default());
    }
}
