//! Classical Littlewood-Richardson counting: semistandard fillings of a
//! skew shape whose reverse reading word is a ballot word.
//!
//! This module exists to cross-check the crystal and picture enumerations
//! and deliberately shares nothing with them beyond the shape types. The
//! reverse reading word convention is fixed as rows top to bottom, each row
//! right to left; the symmetry and single-row self-checks in the tests pin
//! that convention down.

use crate::error::{Error, Result};
use crate::shapes::{Cell, Partition, SkewShape};

/// A semistandard filling of a skew shape: rows weakly increase, columns
/// strictly increase, with both constraints read across the skew cells only.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewFilling {
    shape: SkewShape,
    // rows[i] holds the entries of row i+1 left to right, one per skew cell.
    rows: Vec<Vec<u32>>,
}

impl SkewFilling {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        let outer = shape.outer();
        let inner = shape.inner();
        if rows.len() != outer.len() {
            return Err(Error::InvalidFilling(format!(
                "expected {} rows, got {}",
                outer.len(),
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            let r = i as u32 + 1;
            let want = (outer.part(r) - inner.part(r)) as usize;
            if row.len() != want {
                return Err(Error::InvalidFilling(format!(
                    "row {r} should have {want} entries, got {}",
                    row.len()
                )));
            }
            if row.contains(&0) {
                return Err(Error::InvalidFilling(format!(
                    "row {r} has a non-positive entry"
                )));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidFilling(format!(
                    "row {r} is not weakly increasing"
                )));
            }
        }
        let filling = SkewFilling { shape, rows };
        for c in filling.shape.cells() {
            if c.row == 1 {
                continue;
            }
            let above = Cell::new(c.row - 1, c.col);
            if filling.shape.contains_cell(above) {
                let (lo, hi) = (filling.entry(above).unwrap(), filling.entry(c).unwrap());
                if lo >= hi {
                    return Err(Error::InvalidFilling(format!(
                        "column {} is not strictly increasing",
                        c.col
                    )));
                }
            }
        }
        Ok(filling)
    }

    fn from_valid(shape: SkewShape, rows: Vec<Vec<u32>>) -> Self {
        SkewFilling { shape, rows }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn entry(&self, c: Cell) -> Option<u32> {
        if !self.shape.contains_cell(c) {
            return None;
        }
        let offset = self.shape.inner().part(c.row);
        self.rows
            .get(c.row as usize - 1)
            .and_then(|row| row.get((c.col - offset) as usize - 1))
            .copied()
    }

    /// Rows top to bottom, each row right to left.
    pub fn reverse_reading_word(&self) -> Vec<u32> {
        self.rows
            .iter()
            .flat_map(|r| r.iter().rev().copied())
            .collect()
    }
}

/// True when every prefix contains at least as many `k`s as `k+1`s, for
/// every `k ≥ 1`.
pub fn is_ballot(word: &[u32]) -> bool {
    let max = word.iter().copied().max().unwrap_or(0) as usize;
    let mut counts = vec![0usize; max + 1];
    for &letter in word {
        let k = letter as usize;
        counts[k] += 1;
        if k >= 2 && counts[k] > counts[k - 1] {
            return false;
        }
    }
    true
}

// Fills the cells of nu\lambda in reverse-reading order (rows top to bottom,
// right to left within a row), so the word built so far is always a prefix of
// the final reverse reading word and the ballot condition can prune exactly.
fn search_fillings(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    visit: &mut dyn FnMut(&[Vec<u32>]),
) {
    struct Frame<'a> {
        lambda: &'a Partition,
        nu: &'a Partition,
        content_left: Vec<usize>,
        placed: Vec<usize>,
        // rows filled right-to-left; rows[i][k] is the entry k cells left of
        // the row end, reversed before visiting.
        rows: Vec<Vec<u32>>,
    }

    impl Frame<'_> {
        fn entry_at(&self, row: u32, col: u32) -> Option<u32> {
            if row == 0 || col <= self.lambda.part(row) || col > self.nu.part(row) {
                return None;
            }
            let back = (self.nu.part(row) - col) as usize;
            self.rows
                .get(row as usize - 1)
                .and_then(|r| r.get(back))
                .copied()
        }

        fn go(&mut self, row: u32, visit: &mut dyn FnMut(&[Vec<u32>])) {
            if row as usize > self.nu.len() {
                let rows: Vec<Vec<u32>> = self
                    .rows
                    .iter()
                    .map(|r| r.iter().rev().copied().collect())
                    .collect();
                visit(&rows);
                return;
            }
            let lo = self.lambda.part(row);
            let hi = self.nu.part(row);
            self.fill_cell(row, hi, lo, visit);
        }

        fn fill_cell(&mut self, row: u32, col: u32, lo: u32, visit: &mut dyn FnMut(&[Vec<u32>])) {
            if col == lo {
                self.go(row + 1, visit);
                return;
            }
            let right = self.entry_at(row, col + 1).unwrap_or(u32::MAX);
            let above = self.entry_at(row - 1, col).unwrap_or(0);
            let max_letter = self.content_left.len() as u32 - 1;
            for k in above + 1..=max_letter.min(right) {
                let ku = k as usize;
                if self.content_left[ku] == 0 {
                    continue;
                }
                if ku >= 2 && self.placed[ku] + 1 > self.placed[ku - 1] {
                    continue;
                }
                self.content_left[ku] -= 1;
                self.placed[ku] += 1;
                self.rows[row as usize - 1].push(k);
                self.fill_cell(row, col - 1, lo, visit);
                self.rows[row as usize - 1].pop();
                self.placed[ku] -= 1;
                self.content_left[ku] += 1;
            }
        }
    }

    let mut content_left = vec![0usize; mu.len() + 1];
    for (i, &m) in mu.parts().iter().enumerate() {
        content_left[i + 1] = m as usize;
    }
    let mut frame = Frame {
        lambda,
        nu,
        content_left,
        placed: vec![0usize; mu.len() + 1],
        rows: vec![Vec::new(); nu.len()],
    };
    frame.go(1, visit);
}

/// All ballot fillings of `ν \ λ` with content `μ` (exactly `μ_k` entries
/// equal to `k`), in a deterministic order. Empty unless `|λ| + |μ| = |ν|`
/// and `λ ⊆ ν`.
pub fn ballot_fillings(lambda: &Partition, mu: &Partition, nu: &Partition) -> Vec<SkewFilling> {
    if lambda.size() + mu.size() != nu.size() || !nu.contains(lambda) {
        return Vec::new();
    }
    let shape = SkewShape::new(nu.clone(), lambda.clone()).expect("containment checked");
    let mut out = Vec::new();
    search_fillings(lambda, mu, nu, &mut |rows| {
        out.push(SkewFilling::from_valid(shape.clone(), rows.to_vec()));
    });
    out
}

/// `c^ν_{λμ}` counted by the ballot rule. Returns 0 (rather than an error)
/// on incompatible triples.
pub fn lr_coefficient_ballot(lambda: &Partition, mu: &Partition, nu: &Partition) -> usize {
    if lambda.size() + mu.size() != nu.size() || !nu.contains(lambda) {
        return 0;
    }
    let mut count = 0;
    search_fillings(lambda, mu, nu, &mut |_| count += 1);
    count
}
