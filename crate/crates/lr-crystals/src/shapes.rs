//! Partitions, cells, compositions, and skew shapes: the coordinate
//! substrate for everything else in the crate.
//!
//! Coordinates are 1-based throughout, in matrix convention: `(row, col)`
//! with row 1 at the top and column 1 on the left. Text formats are
//! comma-separated part lists (`"3,2,1"`, the empty partition renders as
//! `"0"`) and `"outer/inner"` for skew shapes; in JSON a partition is an
//! array of parts and a cell is a two-element `[row, col]` array.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A 1-based box coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    /// Both coordinates must be at least 1.
    pub fn new(row: u32, col: u32) -> Self {
        assert!(row >= 1 && col >= 1, "cells are 1-based");
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.row, self.col)
    }
}

impl FromStr for Cell {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (row, col) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected \"row,col\", got {s:?}")))?;
        let parse = |t: &str| -> Result<u32> {
            let n: u32 = t
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad cell coordinate {t:?} in {s:?}")))?;
            if n == 0 {
                return Err(Error::Parse(format!("cell coordinates are 1-based: {s:?}")));
            }
            Ok(n)
        };
        Ok(Cell {
            row: parse(row)?,
            col: parse(col)?,
        })
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.row, self.col].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cell {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [row, col] = <[u32; 2]>::deserialize(deserializer)?;
        if row == 0 || col == 0 {
            return Err(D::Error::custom("cell coordinates are 1-based"));
        }
        Ok(Cell { row, col })
    }
}

fn parse_parts(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}")))
        })
        .collect()
}

fn render_parts(parts: &[u32]) -> String {
    parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// A partition: a weakly decreasing sequence of positive parts, identified
/// with its Young diagram. Trailing zeros are dropped on construction, so
/// equality is plain sequence equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the parts are
    /// not weakly decreasing.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    // Internal constructor for parts already known to be valid.
    pub(crate) fn from_valid(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last() != Some(&0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of (positive) rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The 1-based `row`-th part; rows past the end read as 0.
    pub fn part(&self, row: u32) -> u32 {
        if row == 0 {
            return 0;
        }
        self.parts.get(row as usize - 1).copied().unwrap_or(0)
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Componentwise containment of diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &q)| q <= self.part(i as u32 + 1))
    }

    /// All boxes in row-major order (row ascending, column ascending).
    pub fn cells(&self) -> Vec<Cell> {
        SkewShape::from(self.clone()).cells()
    }

    pub fn as_composition(&self) -> Composition {
        Composition::new(self.parts.clone())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            // "0" parses back to the empty partition; an empty string would
            // vanish in CLI output.
            write!(f, "0")
        } else {
            write!(f, "{}", render_parts(&self.parts))
        }
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Partition::new(Vec::<u32>::deserialize(deserializer)?).map_err(D::Error::custom)
    }
}

/// A composition: an arbitrary finite sequence of nonnegative parts.
///
/// Compositions are what repeated row additions produce before anyone checks
/// that the result is still a Young diagram, so unlike [`Partition`] they are
/// stored verbatim: no ordering constraint, zeros kept.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        Composition {
            parts: parts.into(),
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The 1-based `row`-th part; rows past the end read as 0.
    pub fn part(&self, row: u32) -> u32 {
        if row == 0 {
            return 0;
        }
        self.parts.get(row as usize - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Adds one box to `row` (extending with zero parts if the row does not
    /// exist yet) and returns the new length of that row.
    pub fn increment(&mut self, row: u32) -> u32 {
        assert!(row >= 1, "rows are 1-based");
        let idx = row as usize - 1;
        if idx >= self.parts.len() {
            self.parts.resize(idx + 1, 0);
        }
        self.parts[idx] += 1;
        self.parts[idx]
    }

    /// True when the parts are weakly decreasing once trailing zeros are
    /// ignored, i.e. when this composition is (the part list of) a Young
    /// diagram.
    pub fn is_young(&self) -> bool {
        let mut parts = self.parts.as_slice();
        while parts.last() == Some(&0) {
            parts = &parts[..parts.len() - 1];
        }
        parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// The same shape as a [`Partition`], when [`Composition::is_young`] holds.
    pub fn to_partition(&self) -> Option<Partition> {
        if self.is_young() {
            let mut parts = self.parts.clone();
            while parts.last() == Some(&0) {
                parts.pop();
            }
            Some(Partition::from_valid(parts))
        } else {
            None
        }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_parts(&self.parts))
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Composition::new(parse_parts(s)?))
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Ok(Composition::new(Vec::<u32>::deserialize(deserializer)?))
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        p.as_composition()
    }
}

/// A skew shape `outer \ inner` for a pair of partitions with
/// `inner ⊆ outer`; its cell set is `{ (i,j) : inner_i < j ≤ outer_i }`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidSkewShape(format!(
                "{inner} is not contained in {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of boxes: `|outer| - |inner|`.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        self.inner.part(c.row) < c.col && c.col <= self.outer.part(c.row)
    }

    /// All boxes in row-major order (row ascending, column ascending).
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &hi) in self.outer.parts().iter().enumerate() {
            let row = i as u32 + 1;
            for col in self.inner.part(row) + 1..=hi {
                out.push(Cell { row, col });
            }
        }
        out
    }
}

impl From<Partition> for SkewShape {
    fn from(p: Partition) -> Self {
        SkewShape {
            outer: p,
            inner: Partition::empty(),
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (outer, inner) = match s.split_once('/') {
            Some((o, i)) => (o.parse()?, i.parse()?),
            None => (s.parse()?, Partition::empty()),
        };
        SkewShape::new(outer, inner)
    }
}

/// All partitions of `n`, largest-first part ordering, deterministic.
pub fn partitions_of_size(n: usize) -> Vec<Partition> {
    partitions_bounded(n, n)
}

/// All partitions of `n` with at most `max_rows` parts.
pub fn partitions_bounded(n: usize, max_rows: usize) -> Vec<Partition> {
    fn go(
        remaining: usize,
        max_part: usize,
        rows_left: usize,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition::from_valid(cur.clone()));
            return;
        }
        if rows_left == 0 {
            return;
        }
        let hi = remaining.min(max_part);
        // A part of size p leaves `remaining - p` for `rows_left - 1` rows of
        // size at most p, so p must satisfy p * rows_left >= remaining.
        let lo = remaining.div_ceil(rows_left);
        for p in (lo..=hi).rev() {
            cur.push(p as u32);
            go(remaining - p, p, rows_left - 1, cur, out);
            cur.pop();
        }
    }

    let mut out = Vec::new();
    go(n, n, max_rows, &mut Vec::new(), &mut out);
    out
}

/// All partitions contained in `p`, deterministic.
pub fn subpartitions(p: &Partition) -> Vec<Partition> {
    fn go(bounds: &[u32], i: usize, prev: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i < bounds.len() {
            let hi = bounds[i].min(prev);
            for q in (1..=hi).rev() {
                cur.push(q);
                go(bounds, i + 1, q, cur, out);
                cur.pop();
            }
        }
        // Choosing 0 here forces 0 in every later row: emit what we have.
        out.push(Partition::from_valid(cur.clone()));
    }

    let mut out = Vec::new();
    go(p.parts(), 0, u32::MAX, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn containment_is_componentwise() {
        assert!(p(&[2, 2, 1]).contains(&p(&[2, 1])));
        assert!(!p(&[3, 1]).contains(&p(&[2, 2])));
        assert!(p(&[1]).contains(&Partition::empty()));
    }

    #[test]
    fn increasing_parts_are_rejected() {
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn trailing_zeros_are_normalized_away() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert_eq!(Partition::new(vec![0, 0]).unwrap(), Partition::empty());
    }

    #[test]
    fn sizes() {
        assert_eq!(p(&[2, 2, 1]).size(), 5);
        assert_eq!(Partition::empty().size(), 0);
        assert_eq!(p(&[4, 3, 1]).size(), 8);
    }

    #[test]
    fn cells_in_row_major_order() {
        let cells = p(&[2, 2, 1]).cells();
        assert_eq!(
            cells,
            vec![
                Cell::new(1, 1),
                Cell::new(1, 2),
                Cell::new(2, 1),
                Cell::new(2, 2),
                Cell::new(3, 1),
            ]
        );

        let skew = SkewShape::new(p(&[2, 1]), p(&[1])).unwrap();
        assert_eq!(skew.cells(), vec![Cell::new(1, 2), Cell::new(2, 1)]);

        let empty = SkewShape::new(p(&[2, 1]), p(&[2, 1])).unwrap();
        assert_eq!(empty.cells(), Vec::new());
    }

    #[test]
    fn young_compositions() {
        assert!(!Composition::new(vec![2, 3]).is_young());
        assert!(Composition::new(vec![3, 3, 2]).is_young());
        assert!(Composition::new(vec![]).is_young());
        assert!(Composition::new(vec![2, 1, 0]).is_young());
        assert!(!Composition::new(vec![2, 0, 1]).is_young());
    }

    #[test]
    fn skew_requires_containment() {
        assert!(SkewShape::new(p(&[2, 1]), p(&[2, 2])).is_err());
    }

    #[test]
    fn text_round_trips() {
        for s in ["3,2,1", "0", "1", "4,4,2,1"] {
            let q: Partition = s.parse().unwrap();
            assert_eq!(q.to_string().parse::<Partition>().unwrap(), q);
        }
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(Partition::empty().to_string(), "0");

        let skew: SkewShape = "3,2,1/1".parse().unwrap();
        assert_eq!(skew.outer(), &p(&[3, 2, 1]));
        assert_eq!(skew.inner(), &p(&[1]));
        assert_eq!(skew.to_string().parse::<SkewShape>().unwrap(), skew);

        let plain: SkewShape = "2,2".parse().unwrap();
        assert!(plain.inner().is_empty());
    }

    #[test]
    fn json_formats() {
        let q = p(&[3, 1]);
        assert_eq!(serde_json::to_string(&q).unwrap(), "[3,1]");
        assert_eq!(serde_json::from_str::<Partition>("[3,1]").unwrap(), q);
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());

        let c = Cell::new(2, 5);
        assert_eq!(serde_json::to_string(&c).unwrap(), "[2,5]");
        assert_eq!(serde_json::from_str::<Cell>("[2,5]").unwrap(), c);
        assert!(serde_json::from_str::<Cell>("[0,5]").is_err());
    }

    #[test]
    fn partition_enumeration() {
        assert_eq!(partitions_of_size(0), vec![Partition::empty()]);
        assert_eq!(partitions_of_size(4).len(), 5);
        assert_eq!(partitions_of_size(8).len(), 22);
        assert_eq!(partitions_bounded(8, 4).len(), 15);
        // Everything enumerated has the right size and row bound.
        for q in partitions_bounded(7, 3) {
            assert_eq!(q.size(), 7);
            assert!(q.len() <= 3);
        }
    }

    #[test]
    fn subpartition_enumeration() {
        let subs = subpartitions(&p(&[2, 1]));
        assert_eq!(subs.len(), 5); // (), (1), (2), (1,1), (2,1)
        for q in &subs {
            assert!(p(&[2, 1]).contains(q));
        }
        assert_eq!(subpartitions(&Partition::empty()), vec![Partition::empty()]);
        // Count for a 2x2 box: binomial(4,2) = 6.
        assert_eq!(subpartitions(&p(&[2, 2])).len(), 6);
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(0u32..5, 0..5).prop_map(|mut parts| {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(parts).unwrap()
        })
    }

    proptest! {
        #[test]
        fn parse_render_round_trip(q in arb_partition()) {
            prop_assert_eq!(q.to_string().parse::<Partition>().unwrap(), q);
        }

        #[test]
        fn composition_parse_render_round_trip(parts in proptest::collection::vec(0u32..6, 0..6)) {
            let c = Composition::new(parts);
            prop_assert_eq!(c.to_string().parse::<Composition>().unwrap(), c);
        }

        #[test]
        fn skew_cell_count_and_order(outer in arb_partition(), inner in arb_partition()) {
            prop_assume!(outer.contains(&inner));
            let skew = SkewShape::new(outer, inner).unwrap();
            let cells = skew.cells();
            prop_assert_eq!(cells.len(), skew.size());
            // Strictly increasing in row-major order, hence duplicate-free.
            prop_assert!(cells.windows(2).all(|w| w[0] < w[1]));
            prop_assert_eq!(skew.to_string().parse::<SkewShape>().unwrap(), skew);
        }

        #[test]
        fn skew_shapes_are_convex(outer in arb_partition(), inner in arb_partition()) {
            prop_assume!(outer.contains(&inner));
            let skew = SkewShape::new(outer, inner).unwrap();
            let cells = skew.cells();
            for a in &cells {
                for b in &cells {
                    if a.row < b.row && a.col < b.col {
                        prop_assert!(skew.contains_cell(Cell::new(a.row, b.col)));
                    }
                }
            }
        }
    }
}
