//! Compositions (ordered sums) with parts from a [`PartSet`].

use std::fmt;
use std::ops::ControlFlow;

use super::{collect_all, tokens, write_joined, CombObject, Sink};
use crate::error::{Error, Result};
use crate::series::PartSet;

pub const COMPOSITION_LIMIT: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    part_set: PartSet,
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(part_set: PartSet, parts: Vec<usize>) -> Self {
        Composition { part_set, parts }
    }

    /// Parses `1+2+2` against a part set.
    pub fn parse(part_set: PartSet, s: &str) -> Result<Self> {
        let parts = tokens(s, "+")
            .into_iter()
            .map(|t| t.parse::<usize>().map_err(|_| Error::parse("composition", s)))
            .collect::<Result<_>>()?;
        Ok(Composition { part_set, parts })
    }

    pub fn part_set(&self) -> &PartSet {
        &self.part_set
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn count_of(&self, part: usize) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }
}

impl CombObject for Composition {
    fn validate(&self) -> Result<()> {
        self.part_set.check()?;
        match self.parts.iter().find(|&&p| !self.part_set.contains(p)) {
            Some(p) => Err(Error::invalid(format!("part {p} not in {}", self.part_set))),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.parts, "+")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompositionFilter {
    /// Exactly `count` parts equal to `part`.
    PartCount { part: usize, count: usize },
    /// Exactly this many parts.
    Summands(usize),
}

impl CompositionFilter {
    pub fn accepts(&self, parts: &[usize]) -> bool {
        match *self {
            CompositionFilter::PartCount { part, count } => {
                parts.iter().filter(|&&p| p == part).count() == count
            }
            CompositionFilter::Summands(c) => parts.len() == c,
        }
    }
}

/// Streams compositions of `n` with parts in `parts`, in lexicographic order
/// of the part sequence.
pub fn visit_compositions(
    parts: &PartSet,
    n: usize,
    filter: Option<CompositionFilter>,
    sink: Sink<'_, Composition>,
) -> Result<()> {
    parts.check()?;
    if n > COMPOSITION_LIMIT {
        return Err(Error::too_large("compositions", format!("n = {n} > {COMPOSITION_LIMIT}")));
    }
    let allowed = parts.parts_up_to(n);

    struct Walk<'a, 's> {
        set: &'a PartSet,
        allowed: &'a [usize],
        filter: Option<CompositionFilter>,
        cur: Vec<usize>,
        sink: Sink<'s, Composition>,
    }

    impl Walk<'_, '_> {
        fn go(&mut self, rem: usize) -> ControlFlow<()> {
            if rem == 0 {
                if self.filter.is_none_or(|f| f.accepts(&self.cur)) {
                    return (self.sink)(Composition::new(self.set.clone(), self.cur.clone()));
                }
                return ControlFlow::Continue(());
            }
            if let Some(CompositionFilter::Summands(c)) = self.filter {
                if self.cur.len() >= c {
                    return ControlFlow::Continue(());
                }
            }
            for i in 0..self.allowed.len() {
                let p = self.allowed[i];
                if p > rem {
                    break;
                }
                self.cur.push(p);
                self.go(rem - p)?;
                self.cur.pop();
            }
            ControlFlow::Continue(())
        }
    }

    let mut walk = Walk { set: parts, allowed: &allowed, filter, cur: Vec::new(), sink };
    let _ = walk.go(n);
    Ok(())
}

pub fn enum_compositions(
    parts: &PartSet,
    n: usize,
    filter: Option<CompositionFilter>,
) -> Result<Vec<Composition>> {
    collect_all(|sink| visit_compositions(parts, n, filter, sink))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(parts: &PartSet, n: usize, filter: Option<CompositionFilter>) -> Vec<String> {
        enum_compositions(parts, n, filter).unwrap().iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn examples() {
        let one_two = PartSet::ones_and_twos();
        assert_eq!(
            words(&one_two, 5, Some(CompositionFilter::PartCount { part: 2, count: 1 })),
            ["1+1+1+2", "1+1+2+1", "1+2+1+1", "2+1+1+1"]
        );
        assert_eq!(
            words(&PartSet::AtLeastTwo, 7, Some(CompositionFilter::Summands(2))),
            ["2+5", "3+4", "4+3", "5+2"]
        );
        assert_eq!(words(&PartSet::Odd, 1, None), ["1"]);
        assert_eq!(words(&one_two, 0, None), ["-"]);
        assert_eq!(words(&one_two, 4, None).len(), 5);
        assert!(enum_compositions(&one_two, 25, None).is_err());
    }

    #[test]
    fn validate() {
        let c = Composition::parse(PartSet::Odd, "1+5+3+3").unwrap();
        assert_eq!(c.total(), 12);
        assert!(c.is_valid());
        assert!(!Composition::parse(PartSet::Odd, "1+2").unwrap().is_valid());
        assert!(Composition::parse(PartSet::Odd, "1+x").is_err());
        assert_eq!(
            enum_compositions(&PartSet::Finite(Default::default()), 3, None),
            Err(Error::EmptyPartSet)
        );
    }
}
