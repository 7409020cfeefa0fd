//! Lattice paths from the origin with steps `(1,1)`, `(1,2)`, `(2,1)` and
//! `(2,2)`.

use std::fmt;
use std::str::FromStr;

use super::staircase::{visit_pair_sequences, STAIRCASE_LIMIT};
use super::{collect_all, tokens, write_joined, CombObject, Sink};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BStep {
    pub dx: u8,
    pub dy: u8,
}

impl fmt::Display for BStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.dx, self.dy)
    }
}

impl FromStr for BStep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let b = s.as_bytes();
        if b.len() != 2 || !b.iter().all(u8::is_ascii_digit) {
            return Err(Error::parse("step", s));
        }
        Ok(BStep { dx: b[0] - b'0', dy: b[1] - b'0' })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StepPath {
    steps: Vec<BStep>,
}

impl StepPath {
    pub fn new(steps: Vec<BStep>) -> Self {
        StepPath { steps }
    }

    pub fn steps(&self) -> &[BStep] {
        &self.steps
    }

    pub fn endpoint(&self) -> (usize, usize) {
        self.steps.iter().fold((0, 0), |(x, y), s| (x + s.dx as usize, y + s.dy as usize))
    }
}

impl CombObject for StepPath {
    fn validate(&self) -> Result<()> {
        match self.steps.iter().find(|s| !(1..=2).contains(&s.dx) || !(1..=2).contains(&s.dy)) {
            Some(s) => Err(Error::invalid(format!("step {s} is not allowed"))),
            None => Ok(()),
        }
    }
}

impl fmt::Display for StepPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.steps, ",")
    }
}

impl FromStr for StepPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        tokens(s, ",").into_iter().map(str::parse).collect::<Result<_>>().map(StepPath::new)
    }
}

pub fn visit_b_step_paths(k: usize, n: usize, sink: Sink<'_, StepPath>) -> Result<()> {
    if k + n > STAIRCASE_LIMIT {
        return Err(Error::too_large("step paths", format!("k + n = {} > {STAIRCASE_LIMIT}", k + n)));
    }
    visit_pair_sequences(k, n, &mut |pairs| {
        sink(StepPath::new(pairs.iter().map(|&(dx, dy)| BStep { dx, dy }).collect()))
    });
    Ok(())
}

pub fn enum_b_step_paths(k: usize, n: usize) -> Result<Vec<StepPath>> {
    collect_all(|sink| visit_b_step_paths(k, n, sink))
}
