//! Littlewood-Richardson coefficients computed three independent ways, with
//! the bijections that explain why the answers agree.
//!
//! The coefficient `c^ν_{λμ}` is counted here by
//!
//! - **crystals** ([`crystal`]): semistandard tableaux of shape `μ` whose
//!   reading word, added to `λ` row by row, passes through Young diagrams
//!   only and ends at `ν`;
//! - **pictures** ([`pictures`]): bijections from the cells of `μ` onto the
//!   cells of `ν\λ` that are order-preserving in both directions, found by
//!   direct search over the bijection space;
//! - **the ballot rule** ([`oracle`]): semistandard fillings of `ν\λ` with
//!   content `μ` whose reverse reading word is a ballot word — a classical
//!   count kept deliberately independent of the other two.
//!
//! Readings and pictures are parameterized by *admissible orders*
//! ([`orders`]): total orders on a cell set in which a weakly higher,
//! weakly further-right cell always comes first. The row order `J` and the
//! column order `F` are the two standard examples, and
//! [`orders::enumerate_admissible_orders`] lists them all. The conversion
//! maps [`pictures::picture_from_tableau`] and
//! [`pictures::tableau_from_picture`] are mutually inverse between the
//! crystal and the picture set, and neither set depends on which admissible
//! orders were chosen; the `acceptance` test suite and `lr-crystals verify`
//! check all of this exhaustively at desk scale.
//!
//! The library is the primary interface; `examples/` holds one runnable
//! example per capability, and the `lr-crystals` binary exposes the same
//! operations as `coeff`, `enumerate`, `verify`, and `orders` subcommands.
//!
//! ```
//! use lr_crystals::crystal::lr_coefficient_crystal;
//! use lr_crystals::oracle::lr_coefficient_ballot;
//! use lr_crystals::Partition;
//!
//! let lambda: Partition = "2,1".parse()?;
//! let mu: Partition = "2,1".parse()?;
//! let nu: Partition = "3,2,1".parse()?;
//!
//! assert_eq!(lr_coefficient_crystal(&lambda, &mu, &nu)?, 2);
//! assert_eq!(lr_coefficient_ballot(&lambda, &mu, &nu), 2);
//! # Ok::<(), lr_crystals::Error>(())
//! ```

pub mod cli;
pub mod crystal;
pub mod error;
pub mod oracle;
pub mod orders;
pub mod pictures;
pub mod shapes;
pub mod tableaux;

pub use error::{Error, Result};
pub use orders::{OrderKind, TotalCellOrder};
pub use shapes::{Cell, Composition, Partition, SkewShape};
pub use tableaux::Tableau;
