//! Pictures: bijections from the cells of a Young diagram onto the cells of
//! a skew diagram that respect the componentwise order on one side against
//! an admissible order on the other, in both directions.
//!
//! Two constructions of the same set live here side by side. The brute-force
//! [`enumerate_pictures`] searches the bijection space directly and knows
//! nothing about tableaux; [`picture_from_tableau`] and
//! [`tableau_from_picture`] convert back and forth between pictures and the
//! crystal elements of [`crate::crystal::lr_crystal`]. That the two routes
//! produce the same set, for every admissible order pair, is exactly what
//! the acceptance suite checks.

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::crystal::{add_letters, read};
use crate::error::{Error, Result};
use crate::orders::{leq_p, TotalCellOrder};
use crate::shapes::{Cell, Partition, SkewShape};
use crate::tableaux::Tableau;

/// Default cap on the number of domain cells [`enumerate_pictures`] accepts.
pub const DEFAULT_PICTURE_CAP: usize = 8;

/// A bijection from the cells of a partition onto the cells of a skew shape,
/// stored extensionally: `images[k]` is the image of the `k`-th domain cell
/// in row-major order. Equality is agreement on every domain cell.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PictureMap {
    domain_shape: Partition,
    codomain: SkewShape,
    images: Vec<Cell>,
}

impl PictureMap {
    /// Builds the map and checks that it is a bijection onto the codomain
    /// cells.
    pub fn new(domain_shape: Partition, codomain: SkewShape, images: Vec<Cell>) -> Result<Self> {
        if images.len() != domain_shape.size() {
            return Err(Error::SizeMismatch(format!(
                "{} images for the {} cells of {domain_shape}",
                images.len(),
                domain_shape.size()
            )));
        }
        if domain_shape.size() != codomain.size() {
            return Err(Error::SizeMismatch(format!(
                "|{domain_shape}| = {} but |{codomain}| = {}",
                domain_shape.size(),
                codomain.size()
            )));
        }
        let mut seen = std::collections::HashSet::with_capacity(images.len());
        for &img in &images {
            if !codomain.contains_cell(img) {
                return Err(Error::OutsideShape(img));
            }
            if !seen.insert(img) {
                return Err(Error::NotBijective(format!(
                    "cell ({},{}) is hit twice",
                    img.row, img.col
                )));
            }
        }
        Ok(PictureMap {
            domain_shape,
            codomain,
            images,
        })
    }

    pub fn domain_shape(&self) -> &Partition {
        &self.domain_shape
    }

    pub fn codomain(&self) -> &SkewShape {
        &self.codomain
    }

    pub fn domain_cells(&self) -> Vec<Cell> {
        self.domain_shape.cells()
    }

    /// Image of a domain cell.
    pub fn image(&self, c: Cell) -> Option<Cell> {
        if c.row == 0 || c.col == 0 || c.col > self.domain_shape.part(c.row) {
            return None;
        }
        let before: usize = self.domain_shape.parts()[..c.row as usize - 1]
            .iter()
            .map(|&p| p as usize)
            .sum();
        Some(self.images[before + c.col as usize - 1])
    }

    /// Preimage of a codomain cell.
    pub fn preimage(&self, c: Cell) -> Option<Cell> {
        let idx = self.images.iter().position(|&i| i == c)?;
        Some(self.domain_cells()[idx])
    }

    /// `(domain cell, image)` pairs in row-major domain order.
    pub fn pairs(&self) -> Vec<(Cell, Cell)> {
        self.domain_cells()
            .into_iter()
            .zip(self.images.iter().copied())
            .collect()
    }
}

impl Serialize for PictureMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(4))?;
        map.serialize_entry("mu", &self.domain_shape)?;
        map.serialize_entry("nu", self.codomain.outer())?;
        map.serialize_entry("lambda", self.codomain.inner())?;
        map.serialize_entry("map", &self.pairs())?;
        map.end()
    }
}

// Shared core of the two standardness directions: every componentwise-
// comparable pair of source cells must map to target cells ranked the same
// way.
fn pairs_standard(pairs: &[(Cell, Cell)], target: &TotalCellOrder) -> bool {
    pairs.iter().all(|&(u, fu)| {
        pairs
            .iter()
            .all(|&(v, fv)| !leq_p(u, v) || target.position(fu) <= target.position(fv))
    })
}

/// True when `f` sends componentwise-comparable domain cells to cells in
/// weakly increasing `target_order` rank. `target_order` must be an
/// admissible order on the codomain cells.
pub fn is_pa_standard(f: &PictureMap, target_order: &TotalCellOrder) -> Result<bool> {
    target_order.require_domain(&f.codomain.cells(), "the picture codomain")?;
    target_order.require_admissible()?;
    Ok(pairs_standard(&f.pairs(), target_order))
}

/// The same condition for the inverse map: componentwise-comparable codomain
/// cells must have preimages in weakly increasing `domain_order` rank.
pub fn inverse_is_pa_standard(f: &PictureMap, domain_order: &TotalCellOrder) -> Result<bool> {
    domain_order.require_domain(&f.domain_cells(), "the picture domain")?;
    domain_order.require_admissible()?;
    let inverse: Vec<(Cell, Cell)> = f.pairs().into_iter().map(|(u, fu)| (fu, u)).collect();
    Ok(pairs_standard(&inverse, domain_order))
}

/// An admissible picture respects `target_order` forwards and
/// `domain_order` backwards.
pub fn is_admissible_picture(
    f: &PictureMap,
    target_order: &TotalCellOrder,
    domain_order: &TotalCellOrder,
) -> Result<bool> {
    Ok(is_pa_standard(f, target_order)? && inverse_is_pa_standard(f, domain_order)?)
}

/// All admissible pictures from `μ` onto `skew` for the given order pair,
/// by direct search over bijections; see
/// [`enumerate_pictures_capped`].
pub fn enumerate_pictures(
    mu: &Partition,
    skew: &SkewShape,
    target_order: &TotalCellOrder,
    domain_order: &TotalCellOrder,
) -> Result<Vec<PictureMap>> {
    enumerate_pictures_capped(mu, skew, target_order, domain_order, DEFAULT_PICTURE_CAP)
}

/// All admissible pictures from `μ` onto `skew`, enumerated by assigning
/// images to domain cells in row-major order. Both standardness conditions
/// are pairwise, so partial assignments that already violate one can be
/// abandoned without losing any bijection; the full space of bijections is
/// still what is being searched, independently of any tableau machinery.
/// Output is deterministic (lexicographic in the image sequences).
pub fn enumerate_pictures_capped(
    mu: &Partition,
    skew: &SkewShape,
    target_order: &TotalCellOrder,
    domain_order: &TotalCellOrder,
    cap: usize,
) -> Result<Vec<PictureMap>> {
    if mu.size() != skew.size() {
        return Err(Error::SizeMismatch(format!(
            "|{mu}| = {} but |{skew}| = {}",
            mu.size(),
            skew.size()
        )));
    }
    if mu.size() > cap {
        return Err(Error::CapExceeded {
            what: "picture enumeration domain",
            cap,
        });
    }
    let domain = mu.cells();
    let range = skew.cells();
    target_order.require_domain(&range, "the skew shape")?;
    target_order.require_admissible()?;
    domain_order.require_domain(&domain, "mu")?;
    domain_order.require_admissible()?;

    struct Search<'a> {
        domain: &'a [Cell],
        range: &'a [Cell],
        target_order: &'a TotalCellOrder,
        domain_order: &'a TotalCellOrder,
        used: Vec<bool>,
        images: Vec<Cell>,
        out: Vec<Vec<Cell>>,
    }

    impl Search<'_> {
        fn compatible(&self, u: Cell, fu: Cell) -> bool {
            for (k, &v) in self.domain[..self.images.len()].iter().enumerate() {
                let fv = self.images[k];
                // Forward standardness on the pair {u, v}.
                if leq_p(u, v) && self.target_order.position(fu) > self.target_order.position(fv) {
                    return false;
                }
                if leq_p(v, u) && self.target_order.position(fv) > self.target_order.position(fu) {
                    return false;
                }
                // Backward standardness on the image pair {fu, fv}.
                if leq_p(fu, fv) && self.domain_order.position(u) > self.domain_order.position(v) {
                    return false;
                }
                if leq_p(fv, fu) && self.domain_order.position(v) > self.domain_order.position(u) {
                    return false;
                }
            }
            true
        }

        fn go(&mut self) {
            if self.images.len() == self.domain.len() {
                self.out.push(self.images.clone());
                return;
            }
            let u = self.domain[self.images.len()];
            for idx in 0..self.range.len() {
                if self.used[idx] {
                    continue;
                }
                let fu = self.range[idx];
                if !self.compatible(u, fu) {
                    continue;
                }
                self.used[idx] = true;
                self.images.push(fu);
                self.go();
                self.images.pop();
                self.used[idx] = false;
            }
        }
    }

    let mut search = Search {
        domain: &domain,
        range: &range,
        target_order,
        domain_order,
        used: vec![false; range.len()],
        images: Vec::with_capacity(domain.len()),
        out: Vec::new(),
    };
    search.go();
    search
        .out
        .into_iter()
        .map(|images| PictureMap::new(mu.clone(), skew.clone(), images))
        .collect()
}

/// Reads a picture off as a tableau: the entry at each domain cell is the
/// row coordinate of its image. For an admissible picture the result is
/// semistandard and lies in the crystal of `(inner, μ, outer)` along
/// `domain_order`; any failure of those checks means the input was not an
/// admissible picture and is reported as a contract violation.
pub fn tableau_from_picture(f: &PictureMap, domain_order: &TotalCellOrder) -> Result<Tableau> {
    domain_order.require_domain(&f.domain_cells(), "the picture domain")?;
    domain_order.require_admissible()?;
    let rows: Vec<Vec<u32>> = f
        .domain_shape()
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &len)| {
            (1..=len)
                .map(|j| {
                    f.image(Cell::new(i as u32 + 1, j))
                        .expect("domain cell")
                        .row
                })
                .collect()
        })
        .collect();
    let tableau = Tableau::new(rows)
        .map_err(|e| Error::ContractViolation(format!("image rows do not form a tableau: {e}")))?;

    let lambda = f.codomain().inner();
    let reading = read(&tableau, domain_order)?;
    let trace = add_letters(lambda, reading.letters());
    if !trace.all_young || trace.final_partition().as_ref() != Some(f.codomain().outer()) {
        return Err(Error::ContractViolation(format!(
            "reading the image rows does not rebuild {} from {lambda}",
            f.codomain()
        )));
    }
    Ok(tableau)
}

/// Turns a crystal element into a picture: a cell with entry `m`, the `p`-th
/// of its entry from the right, maps to `(m, λ_m + p)`. For a tableau in the
/// crystal of `(λ, shape, ν)` the result is an admissible picture for every
/// admissible order pair; an image outside `ν \ λ` or a collision means the
/// tableau was not in the crystal and is reported as a contract violation.
pub fn picture_from_tableau(t: &Tableau, lambda: &Partition, nu: &Partition) -> Result<PictureMap> {
    let skew = SkewShape::new(nu.clone(), lambda.clone())?;
    let mut images = Vec::with_capacity(t.size());
    for c in t.shape().cells() {
        let m = t.entry(c).expect("iterating shape cells");
        let col = lambda.part(m) + t.p_index(c)?;
        let img = Cell::new(m, col);
        if !skew.contains_cell(img) {
            return Err(Error::ContractViolation(format!(
                "cell ({},{}) maps to ({},{}) outside {skew}",
                c.row, c.col, img.row, img.col
            )));
        }
        images.push(img);
    }
    PictureMap::new(t.shape().clone(), skew, images)
        .map_err(|e| Error::ContractViolation(format!("tableau is not a crystal element: {e}")))
}

/// The picture set computed through the crystal instead of by search: the
/// image of [`crate::crystal::lr_crystal`] under [`picture_from_tableau`],
/// sorted. A fast path that the brute-force enumeration is tested against.
pub fn pictures_via_crystal(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<Vec<PictureMap>> {
    let order = TotalCellOrder::from_comparator(&mu.cells(), crate::orders::OrderKind::J)?;
    let mut out = crate::crystal::lr_crystal(lambda, mu, nu, &order)?
        .iter()
        .map(|t| picture_from_tableau(t, lambda, nu))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}
