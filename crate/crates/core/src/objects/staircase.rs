//! Staircases from `(0, 0)` to `(k, n)`: alternating horizontal and
//! vertical runs of length 1 or 2, starting horizontal and ending vertical.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use super::{collect_all, tokens, write_joined, CombObject, Sink};
use crate::error::{Error, Result};

pub const STAIRCASE_LIMIT: usize = 28;

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Staircase {
    runs: Vec<u8>,
}

impl Staircase {
    pub fn new(runs: Vec<u8>) -> Self {
        Staircase { runs }
    }

    /// Builds a staircase from `(horizontal, vertical)` run pairs.
    pub fn from_pairs(pairs: &[(u8, u8)]) -> Self {
        Staircase { runs: pairs.iter().flat_map(|&(h, v)| [h, v]).collect() }
    }

    pub fn runs(&self) -> &[u8] {
        &self.runs
    }

    pub fn horizontal_runs(&self) -> Vec<u8> {
        self.runs.iter().step_by(2).copied().collect()
    }

    pub fn vertical_runs(&self) -> Vec<u8> {
        self.runs.iter().skip(1).step_by(2).copied().collect()
    }

    pub fn endpoint(&self) -> (usize, usize) {
        let sum = |v: Vec<u8>| v.iter().map(|&x| x as usize).sum();
        (sum(self.horizontal_runs()), sum(self.vertical_runs()))
    }
}

impl CombObject for Staircase {
    fn validate(&self) -> Result<()> {
        if self.runs.len() % 2 == 1 {
            return Err(Error::invalid("staircase must end with a vertical run"));
        }
        match self.runs.iter().find(|&&r| r != 1 && r != 2) {
            Some(r) => Err(Error::invalid(format!("run length {r} is not 1 or 2"))),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Staircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .runs
            .iter()
            .enumerate()
            .map(|(i, r)| format!("{}{r}", if i % 2 == 0 { 'H' } else { 'V' }))
            .collect();
        write_joined(f, &parts, ",")
    }
}

impl FromStr for Staircase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse("staircase", s);
        let mut runs = Vec::new();
        for (i, t) in tokens(s, ",").into_iter().enumerate() {
            let expected = if i % 2 == 0 { "H" } else { "V" };
            let len = t.strip_prefix(expected).ok_or_else(bad)?;
            runs.push(len.parse().map_err(|_| bad())?);
        }
        Ok(Staircase { runs })
    }
}

/// Run-pair sequences `(a, b)` with `a, b` in `{1, 2}`, summing to `(k, n)`,
/// in lexicographic order.
pub(crate) fn visit_pair_sequences(
    k: usize,
    n: usize,
    sink: &mut dyn FnMut(&[(u8, u8)]) -> ControlFlow<()>,
) {
    fn go(
        k: usize,
        n: usize,
        cur: &mut Vec<(u8, u8)>,
        sink: &mut dyn FnMut(&[(u8, u8)]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if k == 0 && n == 0 {
            return sink(cur);
        }
        // each remaining pair contributes 1 or 2 to both coordinates
        if k == 0 || n == 0 || k > 2 * n || n > 2 * k {
            return ControlFlow::Continue(());
        }
        for a in 1..=2u8 {
            for b in 1..=2u8 {
                if a as usize <= k && b as usize <= n {
                    cur.push((a, b));
                    go(k - a as usize, n - b as usize, cur, sink)?;
                    cur.pop();
                }
            }
        }
        ControlFlow::Continue(())
    }
    let _ = go(k, n, &mut Vec::new(), sink);
}

pub fn visit_staircases(k: usize, n: usize, sink: Sink<'_, Staircase>) -> Result<()> {
    if k + n > STAIRCASE_LIMIT {
        return Err(Error::too_large("staircases", format!("k + n = {} > {STAIRCASE_LIMIT}", k + n)));
    }
    visit_pair_sequences(k, n, &mut |pairs| sink(Staircase::from_pairs(pairs)));
    Ok(())
}

pub fn enum_staircases(k: usize, n: usize) -> Result<Vec<Staircase>> {
    collect_all(|sink| visit_staircases(k, n, sink))
}
