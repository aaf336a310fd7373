//! Orders on cells: the componentwise partial order, the two standard
//! reading orders `J` (row by row, right to left) and `F` (column by
//! column, rightmost first), admissible total orders as first-class data,
//! and exhaustive enumeration of all admissible orders on a cell set.
//!
//! A total order on a finite cell set is *admissible* when every pair with
//! weakly smaller row and weakly larger column comes first, i.e. when it is
//! a linear extension of [`forced_before`]. Both `J` and `F` are admissible
//! on every cell set, but in general there are many more; they are stored
//! extensionally as [`TotalCellOrder`] so that enumerated and user-supplied
//! orders are interchangeable with the built-in ones.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::shapes::Cell;

/// Componentwise (product) partial order: `a ≤ b` in both coordinates.
pub fn leq_p(a: Cell, b: Cell) -> bool {
    a.row <= b.row && a.col <= b.col
}

/// Row-reading total order: earlier row first, and within a row the larger
/// column first.
pub fn leq_j(a: Cell, b: Cell) -> bool {
    a.row < b.row || (a.row == b.row && a.col >= b.col)
}

/// Column-reading total order: larger column first, and within a column the
/// smaller row first. Taken reflexively so that it is a total order in the
/// same sense as [`leq_j`].
pub fn leq_f(a: Cell, b: Cell) -> bool {
    a.col > b.col || (a.col == b.col && a.row <= b.row)
}

/// True when `a` must precede `b` in every admissible order: `a ≠ b`,
/// `a.row ≤ b.row`, and `a.col ≥ b.col`.
pub fn forced_before(a: Cell, b: Cell) -> bool {
    a != b && a.row <= b.row && a.col >= b.col
}

/// The two built-in admissible comparators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKind {
    /// Row by row from the top, right to left within a row.
    J,
    /// Column by column from the right, top to bottom within a column.
    F,
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderKind::J => write!(f, "J"),
            OrderKind::F => write!(f, "F"),
        }
    }
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "J" | "j" => Ok(OrderKind::J),
            "F" | "f" => Ok(OrderKind::F),
            other => Err(Error::Parse(format!(
                "unknown order {other:?}, expected J or F"
            ))),
        }
    }
}

/// Default cap on how many admissible orders an enumeration may return.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// An explicit total order on a finite set of cells, listed least first.
#[derive(Clone, Debug)]
pub struct TotalCellOrder {
    sequence: Vec<Cell>,
    pos: HashMap<Cell, usize>,
}

impl PartialEq for TotalCellOrder {
    fn eq(&self, other: &Self) -> bool {
        self.sequence == other.sequence
    }
}

impl Eq for TotalCellOrder {}

impl TotalCellOrder {
    /// Builds an order from its least-to-greatest cell sequence. Fails on
    /// duplicate cells.
    pub fn new(sequence: Vec<Cell>) -> Result<Self> {
        let mut pos = HashMap::with_capacity(sequence.len());
        for (i, &c) in sequence.iter().enumerate() {
            if pos.insert(c, i).is_some() {
                return Err(Error::DuplicateCell(c));
            }
        }
        Ok(TotalCellOrder { sequence, pos })
    }

    /// Sorts `domain` by the chosen comparator.
    pub fn from_comparator(domain: &[Cell], kind: OrderKind) -> Result<Self> {
        let mut cells = domain.to_vec();
        match kind {
            OrderKind::J => cells.sort_by(|a, b| a.row.cmp(&b.row).then(b.col.cmp(&a.col))),
            OrderKind::F => cells.sort_by(|a, b| b.col.cmp(&a.col).then(a.row.cmp(&b.row))),
        }
        TotalCellOrder::new(cells)
    }

    /// The cells from least to greatest.
    pub fn sequence(&self) -> &[Cell] {
        &self.sequence
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    /// 0-based rank of a domain cell.
    pub fn position(&self, c: Cell) -> Option<usize> {
        self.pos.get(&c).copied()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.pos.contains_key(&c)
    }

    /// True when the domain is exactly `cells` (assumed duplicate-free).
    pub fn has_domain(&self, cells: &[Cell]) -> bool {
        cells.len() == self.sequence.len() && cells.iter().all(|&c| self.contains(c))
    }

    pub fn require_domain(&self, cells: &[Cell], what: &str) -> Result<()> {
        if self.has_domain(cells) {
            Ok(())
        } else {
            Err(Error::DomainMismatch(format!(
                "order domain does not match the cells of {what}"
            )))
        }
    }

    /// First pair `(a, b)` with `a` forced before `b` but ranked after it,
    /// if any.
    pub fn admissibility_violation(&self) -> Option<(Cell, Cell)> {
        for (i, &b) in self.sequence.iter().enumerate() {
            for &a in &self.sequence[i + 1..] {
                if forced_before(a, b) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_admissible(&self) -> bool {
        self.admissibility_violation().is_none()
    }

    pub fn require_admissible(&self) -> Result<()> {
        match self.admissibility_violation() {
            None => Ok(()),
            Some((first, second)) => Err(Error::NotAdmissible { first, second }),
        }
    }

    /// Parses the order file format: one `row,col` cell per line, least
    /// first. Blank lines and `#` comment lines are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cells = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            cells.push(line.parse()?);
        }
        TotalCellOrder::new(cells)
    }

    /// Renders the order file format.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.sequence {
            out.push_str(&c.to_string());
            out.push('\n');
        }
        out
    }
}

/// All admissible total orders on `domain`, capped at
/// [`DEFAULT_ORDER_CAP`]. See [`enumerate_admissible_orders_capped`].
pub fn enumerate_admissible_orders(domain: &[Cell]) -> Result<Vec<TotalCellOrder>> {
    enumerate_admissible_orders_capped(domain, DEFAULT_ORDER_CAP)
}

/// All admissible total orders on `domain`: the linear extensions of
/// [`forced_before`], enumerated by backtracking over minimal elements.
/// Output is lexicographic in the row-major ranks of the emitted sequences,
/// so every call is deterministic. Exceeding `cap` is an error rather than a
/// truncation.
pub fn enumerate_admissible_orders_capped(
    domain: &[Cell],
    cap: usize,
) -> Result<Vec<TotalCellOrder>> {
    let mut cells = domain.to_vec();
    cells.sort_unstable();
    for w in cells.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicateCell(w[0]));
        }
    }
    let n = cells.len();

    // preds[i] lists the indices that must be placed before cells[i].
    let preds: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| forced_before(cells[j], cells[i]))
                .collect()
        })
        .collect();

    fn go(
        cells: &[Cell],
        preds: &[Vec<usize>],
        placed: &mut Vec<bool>,
        seq: &mut Vec<Cell>,
        out: &mut Vec<TotalCellOrder>,
        cap: usize,
    ) -> Result<()> {
        if seq.len() == cells.len() {
            if out.len() == cap {
                return Err(Error::CapExceeded {
                    what: "admissible order enumeration",
                    cap,
                });
            }
            out.push(TotalCellOrder::new(seq.clone()).expect("sequence built without duplicates"));
            return Ok(());
        }
        for i in 0..cells.len() {
            if !placed[i] && preds[i].iter().all(|&j| placed[j]) {
                placed[i] = true;
                seq.push(cells[i]);
                go(cells, preds, placed, seq, out, cap)?;
                seq.pop();
                placed[i] = false;
            }
        }
        Ok(())
    }

    let mut out = Vec::new();
    go(
        &cells,
        &preds,
        &mut vec![false; n],
        &mut Vec::new(),
        &mut out,
        cap,
    )?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Partition;
    use proptest::prelude::*;

    fn c(row: u32, col: u32) -> Cell {
        Cell::new(row, col)
    }

    fn cells_of(parts: &[u32]) -> Vec<Cell> {
        Partition::new(parts.to_vec()).unwrap().cells()
    }

    #[test]
    fn product_order() {
        assert!(leq_p(c(1, 1), c(2, 3)));
        assert!(!leq_p(c(1, 3), c(2, 1)));
        assert!(leq_p(c(2, 2), c(2, 2)));
    }

    #[test]
    fn row_reading_order() {
        assert!(leq_j(c(1, 3), c(1, 2)));
        assert!(leq_j(c(1, 1), c(2, 5)));
        assert!(!leq_j(c(2, 1), c(1, 9)));
    }

    #[test]
    fn column_reading_order() {
        assert!(leq_f(c(3, 4), c(1, 2)));
        assert!(leq_f(c(1, 2), c(3, 2)));
        assert!(leq_f(c(2, 2), c(2, 2)));
    }

    #[test]
    fn comparator_orders_on_small_shapes() {
        let j = TotalCellOrder::from_comparator(&cells_of(&[2, 1]), OrderKind::J).unwrap();
        assert_eq!(j.sequence(), &[c(1, 2), c(1, 1), c(2, 1)]);

        let f = TotalCellOrder::from_comparator(&cells_of(&[2, 1]), OrderKind::F).unwrap();
        assert_eq!(f.sequence(), &[c(1, 2), c(1, 1), c(2, 1)]);

        let f22 = TotalCellOrder::from_comparator(&cells_of(&[2, 2]), OrderKind::F).unwrap();
        assert_eq!(f22.sequence(), &[c(1, 2), c(2, 2), c(1, 1), c(2, 1)]);
    }

    #[test]
    fn admissibility() {
        for parts in [&[2u32, 1][..], &[2, 2], &[3, 2, 1], &[4]] {
            let cells = cells_of(parts);
            for kind in [OrderKind::J, OrderKind::F] {
                assert!(TotalCellOrder::from_comparator(&cells, kind)
                    .unwrap()
                    .is_admissible());
            }
        }

        let bad = TotalCellOrder::new(vec![c(1, 1), c(1, 2)]).unwrap();
        assert!(!bad.is_admissible());
        assert_eq!(bad.admissibility_violation(), Some((c(1, 2), c(1, 1))));
    }

    #[test]
    fn enumeration_on_small_shapes() {
        let one = enumerate_admissible_orders(&cells_of(&[2, 1])).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].sequence(), &[c(1, 2), c(1, 1), c(2, 1)]);

        let two = enumerate_admissible_orders(&cells_of(&[2, 2])).unwrap();
        assert_eq!(two.len(), 2);
        for o in &two {
            assert!(o.is_admissible());
            assert_eq!(o.sequence()[0], c(1, 2));
            assert_eq!(o.sequence()[3], c(2, 1));
        }

        let single = enumerate_admissible_orders(&[c(3, 3)]).unwrap();
        assert_eq!(single.len(), 1);

        let empty = enumerate_admissible_orders(&[]).unwrap();
        assert_eq!(empty.len(), 1);
        assert!(empty[0].is_empty());
    }

    #[test]
    fn enumeration_cap_is_an_error() {
        let err = enumerate_admissible_orders_capped(&cells_of(&[2, 2]), 1).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }

    #[test]
    fn order_file_round_trip() {
        let order = TotalCellOrder::from_comparator(&cells_of(&[2, 2]), OrderKind::F).unwrap();
        let parsed = TotalCellOrder::parse(&order.render()).unwrap();
        assert_eq!(parsed, order);

        let with_noise = "# an order\n1,2\n\n1,1\n";
        let parsed = TotalCellOrder::parse(with_noise).unwrap();
        assert_eq!(parsed.sequence(), &[c(1, 2), c(1, 1)]);

        assert!(TotalCellOrder::parse("1,2\n1,2\n").is_err());
        assert!(TotalCellOrder::parse("0,2\n").is_err());
    }

    /// Independent check of the enumeration: filter *all* permutations of the
    /// domain through `is_admissible`.
    fn all_admissible_by_filtering(cells: &[Cell]) -> Vec<Vec<Cell>> {
        fn permutations(items: &[Cell]) -> Vec<Vec<Cell>> {
            if items.is_empty() {
                return vec![Vec::new()];
            }
            let mut out = Vec::new();
            for (i, &x) in items.iter().enumerate() {
                let mut rest = items.to_vec();
                rest.remove(i);
                for mut tail in permutations(&rest) {
                    tail.insert(0, x);
                    out.push(tail);
                }
            }
            out
        }
        let mut sorted = cells.to_vec();
        sorted.sort_unstable();
        let mut out: Vec<Vec<Cell>> = permutations(&sorted)
            .into_iter()
            .filter(|seq| TotalCellOrder::new(seq.clone()).unwrap().is_admissible())
            .collect();
        out.sort();
        out
    }

    #[test]
    fn enumeration_matches_permutation_filter_on_shapes() {
        for parts in [
            &[1u32][..],
            &[2],
            &[1, 1],
            &[2, 1],
            &[2, 2],
            &[3, 1],
            &[3, 2],
            &[2, 2, 1],
        ] {
            let cells = cells_of(parts);
            let enumerated: Vec<Vec<Cell>> = enumerate_admissible_orders(&cells)
                .unwrap()
                .into_iter()
                .map(|o| o.sequence().to_vec())
                .collect();
            let mut sorted = enumerated.clone();
            sorted.sort();
            assert_eq!(
                sorted,
                all_admissible_by_filtering(&cells),
                "shape {parts:?}"
            );
            // Deterministic lexicographic emission means already sorted.
            assert_eq!(enumerated, sorted, "shape {parts:?}");
        }
    }

    fn arb_domain() -> impl Strategy<Value = Vec<Cell>> {
        proptest::collection::btree_set((1u32..=4, 1u32..=4), 0..=5)
            .prop_map(|set| set.into_iter().map(|(r, q)| Cell::new(r, q)).collect())
    }

    proptest! {
        #[test]
        fn reading_orders_are_total(a in (1u32..9, 1u32..9), b in (1u32..9, 1u32..9)) {
            let (a, b) = (Cell::new(a.0, a.1), Cell::new(b.0, b.1));
            prop_assert!(leq_j(a, b) || leq_j(b, a));
            prop_assert!(leq_f(a, b) || leq_f(b, a));
        }

        #[test]
        fn forced_precedence_refines_both_readings(a in (1u32..9, 1u32..9), b in (1u32..9, 1u32..9)) {
            let (a, b) = (Cell::new(a.0, a.1), Cell::new(b.0, b.1));
            if forced_before(a, b) {
                prop_assert!(leq_j(a, b));
                prop_assert!(leq_f(a, b));
            }
        }

        #[test]
        fn enumeration_matches_permutation_filter(domain in arb_domain()) {
            let enumerated: Vec<Vec<Cell>> = enumerate_admissible_orders(&domain)
                .unwrap()
                .into_iter()
                .map(|o| o.sequence().to_vec())
                .collect();
            for seq in &enumerated {
                prop_assert!(TotalCellOrder::new(seq.clone()).unwrap().is_admissible());
            }
            let mut sorted = enumerated;
            sorted.sort();
            prop_assert_eq!(sorted, all_admissible_by_filtering(&domain));
        }

        #[test]
        fn comparator_orders_are_admissible(domain in arb_domain()) {
            for kind in [OrderKind::J, OrderKind::F] {
                prop_assert!(TotalCellOrder::from_comparator(&domain, kind).unwrap().is_admissible());
            }
        }
    }
}
