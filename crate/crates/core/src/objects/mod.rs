//! Explicit enumerators and validators for every family counted in
//! [`crate::counting`].
//!
//! Each family has a `visit_*` function that streams objects to a sink in
//! increasing canonical order, and an `enum_*` convenience that collects
//! them. The sink can stop the walk early by returning
//! [`ControlFlow::Break`].
//!
//! # Text encodings
//!
//! One object per line. The empty object of any family is written `-`.
//!
//! | family | example | grammar |
//! |---|---|---|
//! | matching | `U1-L1,U2-U3` | pairs `P-P` joined by `,`, `P = U<i> \| L<j>` (1-based), each pair low-high, sorted |
//! | Motzkin path | `UHD` | letters `U`, `H`, `D` |
//! | domino pair | `VHH\|HHV` | two tilings over tokens `V` and `HH` separated by `\|` |
//! | closed set | `0110` | one bit per fence vertex in zigzag order, odd positions are upper vertices |
//! | 0-1-2 sum | `2+1+0` | digits joined by `+` |
//! | composition | `1+2+2` | parts joined by `+` |
//! | weighted path | `CLUD` | letters `C` (cost 1), `L` (cost 2), `U`, `D` (cost 1.5 each) |
//! | chord configuration | `10:4-8,5-7/9>3,10>1` | `n:` inner arcs `i-j`, `/`, cross arcs `p>q` (point `p` joins point `q` of the next sector) |
//! | lacing | `L1,L2,R2,R1` | holes `L<i>` / `R<j>` (1 = top) in visit order |
//! | staircase | `H2,V1,H1,V2` | alternating runs starting with `H`, ending with `V` |
//! | step path | `11,21` | steps `dxdy` from `11`, `12`, `21`, `22` |
//!
//! Ordering is the lexicographic order of the structured encoding (token by
//! token), which for fixed-width families coincides with byte order.

use std::fmt;
use std::ops::ControlFlow;

use crate::error::Result;

pub mod chords;
pub mod composition;
pub mod domino;
pub mod fence;
pub mod lacing;
pub mod matching;
pub mod motzkin;
pub mod staircase;
pub mod step_path;
pub mod sum012;
pub mod weighted;

pub use chords::{enum_chords, visit_chords, ChordConfig};
pub use composition::{enum_compositions, visit_compositions, Composition, CompositionFilter};
pub use domino::{enum_domino_pairs, visit_domino_pairs, DominoPair, Tile};
pub use fence::{enum_closed_sets, visit_closed_sets, ClosedSet};
pub use lacing::{enum_lacings, visit_lacings, Hole, Lacing, LacingMode, Side};
pub use matching::{enum_matchings, visit_matchings, Matching, Point};
pub use motzkin::{enum_peakless, visit_peakless, MotzkinPath, Step};
pub use staircase::{enum_staircases, visit_staircases, Staircase};
pub use step_path::{enum_b_step_paths, visit_b_step_paths, BStep, StepPath};
pub use sum012::{enum_012, visit_012, Sum012};
pub use weighted::{enum_weighted_paths, visit_weighted_paths, WStep, WeightedPath};

/// Receives enumerated objects; returning `Break` ends the enumeration.
pub type Sink<'a, T> = &'a mut dyn FnMut(T) -> ControlFlow<()>;

/// Shared behaviour of the combinatorial object types.
pub trait CombObject: Clone + Ord + fmt::Display {
    /// Checks every structural invariant of the type.
    fn validate(&self) -> Result<()>;

    fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }
}

pub(crate) const EMPTY: &str = "-";

pub(crate) fn write_joined<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: &[T],
    sep: &str,
) -> fmt::Result {
    if items.is_empty() {
        return f.write_str(EMPTY);
    }
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{item}")?;
    }
    Ok(())
}

/// Splits an encoding into tokens; `-` and the empty string mean no tokens.
pub(crate) fn tokens<'a>(s: &'a str, sep: &'a str) -> Vec<&'a str> {
    let s = s.trim();
    if s.is_empty() || s == EMPTY {
        Vec::new()
    } else {
        s.split(sep).map(str::trim).collect()
    }
}

pub(crate) fn collect_all<T>(visit: impl FnOnce(Sink<'_, T>) -> Result<()>) -> Result<Vec<T>> {
    let mut out = Vec::new();
    visit(&mut |x| {
        out.push(x);
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Number of objects a visitor yields.
pub fn count_visited<T>(visit: impl FnOnce(Sink<'_, T>) -> Result<()>) -> Result<u64> {
    let mut n = 0u64;
    visit(&mut |_| {
        n += 1;
        ControlFlow::Continue(())
    })?;
    Ok(n)
}
