//! Sequences of summands 0, 1, 2 in which a 2 is never followed by a 0.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use super::{collect_all, tokens, write_joined, CombObject, Sink};
use crate::error::{Error, Result};

pub const SUM012_LIMIT: usize = 20;

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sum012 {
    summands: Vec<u8>,
}

impl Sum012 {
    pub fn new(summands: Vec<u8>) -> Self {
        Sum012 { summands }
    }

    pub fn summands(&self) -> &[u8] {
        &self.summands
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn total(&self) -> usize {
        self.summands.iter().map(|&s| s as usize).sum()
    }
}

impl CombObject for Sum012 {
    fn validate(&self) -> Result<()> {
        if let Some(s) = self.summands.iter().find(|&&s| s > 2) {
            return Err(Error::invalid(format!("summand {s} is not 0, 1 or 2")));
        }
        match self.summands.windows(2).position(|w| w == [2, 0]) {
            Some(i) => Err(Error::invalid(format!("0 follows 2 at summand {}", i + 2))),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Sum012 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.summands, "+")
    }
}

impl FromStr for Sum012 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        tokens(s, "+")
            .into_iter()
            .map(|t| t.parse::<u8>().map_err(|_| Error::parse("0-1-2 sum", s)))
            .collect::<Result<_>>()
            .map(Sum012::new)
    }
}

/// Streams valid sums with `n` summands and total `k`.
pub fn visit_012(n: usize, k: usize, sink: Sink<'_, Sum012>) -> Result<()> {
    if n > SUM012_LIMIT {
        return Err(Error::too_large("0-1-2 sums", format!("n = {n} > {SUM012_LIMIT}")));
    }

    fn go(
        cur: &mut Vec<u8>,
        n: usize,
        rem: usize,
        sink: &mut dyn FnMut(Sum012) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if cur.len() == n {
            return if rem == 0 { sink(Sum012::new(cur.clone())) } else { ControlFlow::Continue(()) };
        }
        let slots_after = n - cur.len() - 1;
        for d in 0..=2u8 {
            let d_us = d as usize;
            if d == 0 && cur.last() == Some(&2) {
                continue;
            }
            if d_us > rem || rem - d_us > 2 * slots_after {
                continue;
            }
            cur.push(d);
            go(cur, n, rem - d_us, sink)?;
            cur.pop();
        }
        ControlFlow::Continue(())
    }

    let _ = go(&mut Vec::with_capacity(n), n, k, sink);
    Ok(())
}

pub fn enum_012(n: usize, k: usize) -> Result<Vec<Sum012>> {
    collect_all(|sink| visit_012(n, k, sink))
}
