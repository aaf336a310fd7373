//! Readings of tableaux along admissible orders, the row-addition procedure,
//! and the Littlewood-Richardson crystal they carve out.
//!
//! Reading a tableau `T` of shape `μ` along an admissible order gives a word
//! of entries; *adding* that word to a partition `λ` drops one box into row
//! `i` for each letter `i`, in word order. `T` belongs to the crystal for
//! the triple `(λ, μ, ν)` exactly when every intermediate shape of the
//! addition is again a Young diagram and the final shape is `ν`. Counting
//! those tableaux computes the Littlewood-Richardson coefficient.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orders::{OrderKind, TotalCellOrder};
use crate::shapes::{Cell, Composition, Partition};
use crate::tableaux::{enumerate_ssyt, Tableau};

/// A tableau read out along a total order: the letter sequence plus the cell
/// each letter came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reading {
    letters: Vec<u32>,
    sources: Vec<Cell>,
}

impl Reading {
    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    /// Cells in reading order; parallel to [`Reading::letters`].
    pub fn sources(&self) -> &[Cell] {
        &self.sources
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// Reads the entries of `t` along an admissible order on its cells.
pub fn read(t: &Tableau, order: &TotalCellOrder) -> Result<Reading> {
    order.require_domain(&t.shape().cells(), "the tableau shape")?;
    order.require_admissible()?;
    let sources = order.sequence().to_vec();
    let letters = sources
        .iter()
        .map(|&c| t.entry(c).expect("order domain equals the shape"))
        .collect();
    Ok(Reading { letters, sources })
}

/// One step of an addition: the letter, the box it lands in, and the shape
/// after this step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdditionStep {
    pub letter: u32,
    pub destination: Cell,
    #[serde(rename = "shape")]
    pub shape_after: Composition,
}

/// The full record of adding a letter word to a partition.
///
/// Additions never fail: a step that breaks the Young condition is recorded
/// as data (`all_young` turns false) rather than reported as an error, since
/// the crystal membership filter needs the negative case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdditionTrace {
    pub start: Partition,
    pub steps: Vec<AdditionStep>,
    pub all_young: bool,
}

impl AdditionTrace {
    /// Shape after the last step (the start shape for an empty word).
    pub fn final_shape(&self) -> Composition {
        self.steps
            .last()
            .map(|s| s.shape_after.clone())
            .unwrap_or_else(|| self.start.as_composition())
    }

    /// Final shape as a partition, when every step stayed a Young diagram.
    pub fn final_partition(&self) -> Option<Partition> {
        if self.all_young {
            self.final_shape().to_partition()
        } else {
            None
        }
    }

    pub fn destinations(&self) -> impl Iterator<Item = Cell> + '_ {
        self.steps.iter().map(|s| s.destination)
    }
}

/// Adds `letters` to `start` one box at a time: letter `i` lengthens row `i`
/// by one, extending with zero-length rows when row `i` does not exist yet.
pub fn add_letters(start: &Partition, letters: &[u32]) -> AdditionTrace {
    let mut shape = start.as_composition();
    let mut steps = Vec::with_capacity(letters.len());
    let mut all_young = true;
    for &letter in letters {
        assert!(letter >= 1, "letters are 1-based row indices");
        let new_len = shape.increment(letter);
        all_young = all_young && shape.is_young();
        steps.push(AdditionStep {
            letter,
            destination: Cell::new(letter, new_len),
            shape_after: shape.clone(),
        });
    }
    AdditionTrace {
        start: start.clone(),
        steps,
        all_young,
    }
}

fn check_triple(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<()> {
    if lambda.size() + mu.size() != nu.size() {
        return Err(Error::SizeMismatch(format!(
            "|{lambda}| + |{mu}| = {} but |{nu}| = {}",
            lambda.size() + mu.size(),
            nu.size()
        )));
    }
    if !nu.contains(lambda) {
        return Err(Error::InvalidSkewShape(format!(
            "{nu} does not contain {lambda}"
        )));
    }
    Ok(())
}

/// The Littlewood-Richardson crystal of the triple `(λ, μ, ν)` along an
/// admissible order on the cells of `μ`: every semistandard tableau of shape
/// `μ` (entries bounded by the number of rows of `ν`) whose reading, added
/// to `λ`, stays a Young diagram at every step and ends at `ν`.
///
/// The result does not actually depend on the order — that is one of the
/// facts the test suite verifies exhaustively — so [`lr_coefficient_crystal`]
/// simply fixes the `J` order.
pub fn lr_crystal(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    order: &TotalCellOrder,
) -> Result<Vec<Tableau>> {
    check_triple(lambda, mu, nu)?;
    order.require_domain(&mu.cells(), "mu")?;
    order.require_admissible()?;
    let mut out = Vec::new();
    for t in enumerate_ssyt(mu, nu.len() as u32) {
        let reading = read(&t, order)?;
        let trace = add_letters(lambda, reading.letters());
        if trace.all_young && trace.final_partition().as_ref() == Some(nu) {
            out.push(t);
        }
    }
    Ok(out)
}

/// `c^ν_{λμ}` counted by the crystal along the `J` order.
pub fn lr_coefficient_crystal(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<usize> {
    let order = TotalCellOrder::from_comparator(&mu.cells(), OrderKind::J)?;
    Ok(lr_crystal(lambda, mu, nu, &order)?.len())
}

/// Decomposes the tensor product of the crystals of `λ` and `μ` with entries
/// in `1..=max_entry`: reads every tableau of shape `μ` along the column
/// order, adds it to `λ`, and collects the final shapes of the additions
/// that stayed Young diagrams. The result maps each shape to its
/// multiplicity; shapes with more than `max_entry` rows are excluded (they
/// carry no tableaux with the given entry bound).
pub fn decompose_tensor(
    lambda: &Partition,
    mu: &Partition,
    max_entry: u32,
) -> Result<BTreeMap<Partition, usize>> {
    let order = TotalCellOrder::from_comparator(&mu.cells(), OrderKind::F)?;
    decompose_with(lambda, mu, max_entry, &order)
}

// The reading order is a free choice here (the tests verify that), so the
// core is order-generic and the public entry point fixes F.
fn decompose_with(
    lambda: &Partition,
    mu: &Partition,
    max_entry: u32,
    order: &TotalCellOrder,
) -> Result<BTreeMap<Partition, usize>> {
    if lambda.len() > max_entry as usize || mu.len() > max_entry as usize {
        return Err(Error::SizeMismatch(format!(
            "{lambda} and {mu} must have at most {max_entry} rows"
        )));
    }
    let mut out = BTreeMap::new();
    for t in enumerate_ssyt(mu, max_entry) {
        let reading = read(&t, order)?;
        let trace = add_letters(lambda, reading.letters());
        if let Some(shape) = trace.final_partition() {
            if shape.len() <= max_entry as usize {
                *out.entry(shape).or_insert(0) += 1;
            }
        }
    }
    Ok(out)
}
