//! Pairs of domino tilings of `2 x k` and `2 x n` strips with equally many
//! vertical dominoes.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use super::{collect_all, CombObject, Sink, EMPTY};
use crate::error::{Error, Result};

pub const DOMINO_LIMIT: usize = 20;

/// A tiling column: one vertical domino (width 1) or two stacked
/// horizontal dominoes (width 2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tile {
    HH,
    V,
}

impl Tile {
    pub fn width(self) -> usize {
        match self {
            Tile::V => 1,
            Tile::HH => 2,
        }
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tile::V => "V",
            Tile::HH => "HH",
        })
    }
}

pub fn tiling_width(tiles: &[Tile]) -> usize {
    tiles.iter().map(|t| t.width()).sum()
}

pub fn vertical_count(tiles: &[Tile]) -> usize {
    tiles.iter().filter(|&&t| t == Tile::V).count()
}

pub fn format_tiling(tiles: &[Tile]) -> String {
    if tiles.is_empty() {
        return EMPTY.to_string();
    }
    tiles.iter().map(|t| t.to_string()).collect()
}

pub fn parse_tiling(s: &str) -> Result<Vec<Tile>> {
    let s = s.trim();
    if s == EMPTY || s.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        if let Some(r) = rest.strip_prefix("HH") {
            out.push(Tile::HH);
            rest = r;
        } else if let Some(r) = rest.strip_prefix('V') {
            out.push(Tile::V);
            rest = r;
        } else {
            return Err(Error::parse("tiling", s));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DominoPair {
    pub left: Vec<Tile>,
    pub right: Vec<Tile>,
}

impl DominoPair {
    pub fn widths(&self) -> (usize, usize) {
        (tiling_width(&self.left), tiling_width(&self.right))
    }
}

impl CombObject for DominoPair {
    fn validate(&self) -> Result<()> {
        let (l, r) = (vertical_count(&self.left), vertical_count(&self.right));
        if l != r {
            return Err(Error::invalid(format!("{l} vertical dominoes on the left, {r} on the right")));
        }
        Ok(())
    }
}

impl fmt::Display for DominoPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", format_tiling(&self.left), format_tiling(&self.right))
    }
}

impl FromStr for DominoPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (l, r) = s.split_once('|').ok_or_else(|| Error::parse("domino pair", s))?;
        Ok(DominoPair { left: parse_tiling(l)?, right: parse_tiling(r)? })
    }
}

/// All tilings of a `2 x width` strip with `verticals` vertical dominoes,
/// in lexicographic order (`HH` before `V`).
pub fn tilings_with(width: usize, verticals: usize) -> Vec<Vec<Tile>> {
    fn go(rem: usize, v: usize, cur: &mut Vec<Tile>, out: &mut Vec<Vec<Tile>>) {
        if rem == 0 {
            if v == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if rem >= 2 && rem - 2 >= v {
            cur.push(Tile::HH);
            go(rem - 2, v, cur, out);
            cur.pop();
        }
        if v > 0 {
            cur.push(Tile::V);
            go(rem - 1, v - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if verticals <= width && (width - verticals).is_multiple_of(2) {
        go(width, verticals, &mut Vec::new(), &mut out);
    }
    out
}

pub fn visit_domino_pairs(k: usize, n: usize, sink: Sink<'_, DominoPair>) -> Result<()> {
    if k > DOMINO_LIMIT || n > DOMINO_LIMIT {
        return Err(Error::too_large("domino pairs", format!("k = {k}, n = {n}, limit {DOMINO_LIMIT}")));
    }
    let mut all = Vec::new();
    for v in 0..=k.min(n) {
        let lefts = tilings_with(k, v);
        if lefts.is_empty() {
            continue;
        }
        let rights = tilings_with(n, v);
        for l in &lefts {
            for r in &rights {
                all.push(DominoPair { left: l.clone(), right: r.clone() });
            }
        }
    }
    all.sort();
    for p in all {
        if let ControlFlow::Break(()) = sink(p) {
            break;
        }
    }
    Ok(())
}

pub fn enum_domino_pairs(k: usize, n: usize) -> Result<Vec<DominoPair>> {
    collect_all(|sink| visit_domino_pairs(k, n, sink))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(enum_domino_pairs(3, 5).unwrap().len(), 10);
        let one = enum_domino_pairs(1, 1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].to_string(), "V|V");
        assert_eq!(enum_domino_pairs(2, 2).unwrap().len(), 2);
        assert_eq!(enum_domino_pairs(0, 0).unwrap()[0].to_string(), "-|-");
        assert!(enum_domino_pairs(21, 1).is_err());
    }

    #[test]
    fn parse_and_validate() {
        let p: DominoPair = "VHH|HHV".parse().unwrap();
        assert_eq!(p.widths(), (3, 3));
        assert!(p.is_valid());
        assert!(!"VV|HH".parse::<DominoPair>().unwrap().is_valid());
        assert!("VH|V".parse::<DominoPair>().is_err());
    }
}
