//! Semistandard Young tableaux: rows weakly increase, columns strictly
//! increase. The text format lists rows top to bottom with `/` between
//! them, e.g. `"1 1 / 2"`; the JSON format is an array of row arrays.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::shapes::{Cell, Partition};

/// A semistandard tableau, stored as its rows.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Builds a tableau from its rows, validating shape and
    /// semistandardness. Entries are positive; the empty row list is the
    /// empty tableau.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let lens: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
        if lens.contains(&0) {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        let shape = Partition::new(lens)
            .map_err(|_| Error::InvalidTableau("row lengths must weakly decrease".into()))?;
        for (i, row) in rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                if e == 0 {
                    return Err(Error::InvalidTableau(format!(
                        "entry at ({},{}) must be positive",
                        i + 1,
                        j + 1
                    )));
                }
                if j > 0 && row[j - 1] > e {
                    return Err(Error::InvalidTableau(format!(
                        "row {} is not weakly increasing",
                        i + 1
                    )));
                }
                if i > 0 && rows[i - 1][j] >= e {
                    return Err(Error::InvalidTableau(format!(
                        "column {} is not strictly increasing",
                        j + 1
                    )));
                }
            }
        }
        Ok(Tableau { shape, rows })
    }

    // Internal constructor for fillings already known to be semistandard.
    pub(crate) fn from_valid(rows: Vec<Vec<u32>>) -> Self {
        let shape = Partition::from_valid(rows.iter().map(|r| r.len() as u32).collect());
        Tableau { shape, rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Entry at a cell, `None` outside the shape.
    pub fn entry(&self, c: Cell) -> Option<u32> {
        self.rows
            .get(c.row as usize - 1)
            .and_then(|row| row.get(c.col as usize - 1))
            .copied()
    }

    /// Largest entry, 0 for the empty tableau.
    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// All cells carrying entry `k`, rightmost first. Semistandardness puts
    /// at most one such cell in each column, so this ordering is total.
    pub fn level_set(&self, k: u32) -> Vec<Cell> {
        let mut cells: Vec<Cell> = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                if e == k {
                    cells.push(Cell::new(i as u32 + 1, j as u32 + 1));
                }
            }
        }
        cells.sort_by_key(|c| std::cmp::Reverse(c.col));
        cells
    }

    /// 1-based rank of `c` from the right among the cells sharing its entry.
    pub fn p_index(&self, c: Cell) -> Result<u32> {
        let entry = self.entry(c).ok_or(Error::OutsideShape(c))?;
        let rank = self
            .level_set(entry)
            .iter()
            .position(|&x| x == c)
            .expect("cell with an entry is in its level set");
        Ok(rank as u32 + 1)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Tableau::new(Vec::new());
        }
        let rows: Result<Vec<Vec<u32>>> = s
            .split('/')
            .map(|row| {
                row.split_whitespace()
                    .map(|t| {
                        t.parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad tableau entry {t:?}")))
                    })
                    .collect()
            })
            .collect();
        Tableau::new(rows?)
    }
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Tableau::new(Vec::<Vec<u32>>::deserialize(deserializer)?).map_err(D::Error::custom)
    }
}

/// Every semistandard tableau of the given shape with entries in
/// `1..=max_entry`, in lexicographic order of the row-major entry word.
pub fn enumerate_ssyt(shape: &Partition, max_entry: u32) -> Vec<Tableau> {
    fn go(
        shape: &[u32],
        max_entry: u32,
        row: usize,
        col: usize,
        rows: &mut Vec<Vec<u32>>,
        out: &mut Vec<Tableau>,
    ) {
        if row == shape.len() {
            out.push(Tableau::from_valid(rows.clone()));
            return;
        }
        let (next_row, next_col) = if col + 1 < shape[row] as usize {
            (row, col + 1)
        } else {
            (row + 1, 0)
        };
        let mut lo = 1;
        if col > 0 {
            lo = lo.max(rows[row][col - 1]);
        }
        if row > 0 && col < rows[row - 1].len() {
            lo = lo.max(rows[row - 1][col] + 1);
        }
        for e in lo..=max_entry {
            rows[row].push(e);
            go(shape, max_entry, next_row, next_col, rows, out);
            rows[row].pop();
        }
    }

    let mut rows: Vec<Vec<u32>> = shape
        .parts()
        .iter()
        .map(|&p| Vec::with_capacity(p as usize))
        .collect();
    let mut out = Vec::new();
    go(shape.parts(), max_entry, 0, 0, &mut rows, &mut out);
    out
}
