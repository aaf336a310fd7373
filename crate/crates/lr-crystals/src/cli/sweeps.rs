//! Verification sweeps: exhaustive desk-scale checks of the facts the
//! library is built around, packaged as reports the CLI can print.
//!
//! Every sweep fans out across triples with rayon and reassembles the
//! checks in a fixed order, so identical invocations produce identical
//! reports.

use rayon::prelude::*;
use serde::Serialize;

use crate::crystal::{add_letters, lr_crystal, read};
use crate::error::{Error, Result};
use crate::oracle::lr_coefficient_ballot;
use crate::orders::{enumerate_admissible_orders, OrderKind, TotalCellOrder};
use crate::pictures::{
    enumerate_pictures, picture_from_tableau, pictures_via_crystal, tableau_from_picture,
};
use crate::shapes::{partitions_bounded, partitions_of_size, subpartitions, Partition, SkewShape};
use crate::tableaux::enumerate_ssyt;

/// Hard ceiling on `max_nu` budgets: above this the picture search domain
/// exceeds its cap.
pub const MAX_NU_CEILING: usize = 8;
/// Hard ceiling on `max_mu` for order-enumeration sweeps.
pub const MAX_MU_CEILING: usize = 6;
/// Hard ceilings for the tensor sweep.
pub const MAX_ENTRY_CEILING: u32 = 4;
pub const MAX_SIZE_CEILING: usize = 6;

/// When `|μ|` is at most this, sweeps range over *every* admissible order
/// pair; above it they spot-check the two reading orders.
pub const ALL_ORDER_PAIRS_MAX: usize = 4;

/// One verified fact: a name, the triple or context it was checked on,
/// the outcome, and a short detail string.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub context: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

/// A sweep report: what was swept, every check, and the tally.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub scope: String,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(scope: impl Into<String>) -> Self {
        VerificationReport {
            scope: scope.into(),
            checks: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn push(&mut self, check: Check) {
        if check.pass {
            self.summary.passed += 1;
        } else {
            self.summary.failed += 1;
        }
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        for c in checks {
            self.push(c);
        }
    }

    /// Appends another report, joining the scopes.
    pub fn merge(&mut self, other: VerificationReport) {
        if !self.scope.is_empty() {
            self.scope.push_str("; ");
        }
        self.scope.push_str(&other.scope);
        self.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("scope: {}\n", self.scope));
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{status} {} [{}] {}\n",
                c.name, c.context, c.detail
            ));
        }
        out.push_str(&format!(
            "summary: {} passed, {} failed\n",
            self.summary.passed, self.summary.failed
        ));
        out
    }
}

// Runs a fallible check body; an error is a failed check, not an abort.
fn run_check(name: &str, context: &str, body: impl FnOnce() -> Result<(bool, String)>) -> Check {
    let (pass, detail) = match body() {
        Ok((pass, detail)) => (pass, detail),
        Err(e) => (false, format!("error: {e}")),
    };
    Check {
        name: name.into(),
        context: context.into(),
        pass,
        detail,
    }
}

/// Every `(λ, μ, ν)` with `|ν| ≤ max_nu`, `λ ⊆ ν`, `|λ| + |μ| = |ν|`,
/// optionally with a row bound on `ν`.
pub fn compatible_triples(
    max_nu: usize,
    max_nu_rows: Option<usize>,
) -> Vec<(Partition, Partition, Partition)> {
    let mut out = Vec::new();
    for n in 0..=max_nu {
        let nus = match max_nu_rows {
            Some(rows) => partitions_bounded(n, rows),
            None => partitions_of_size(n),
        };
        for nu in nus {
            for lambda in subpartitions(&nu) {
                for mu in partitions_of_size(n - lambda.size()) {
                    out.push((lambda.clone(), mu, nu.clone()));
                }
            }
        }
    }
    out
}

fn order_pairs(skew: &SkewShape, mu: &Partition) -> Result<Vec<(TotalCellOrder, TotalCellOrder)>> {
    if mu.size() <= ALL_ORDER_PAIRS_MAX {
        let on_skew = enumerate_admissible_orders(&skew.cells())?;
        let on_mu = enumerate_admissible_orders(&mu.cells())?;
        let mut pairs = Vec::with_capacity(on_skew.len() * on_mu.len());
        for a in &on_skew {
            for a_prime in &on_mu {
                pairs.push((a.clone(), a_prime.clone()));
            }
        }
        Ok(pairs)
    } else {
        let mut pairs = Vec::with_capacity(2);
        for kind in [OrderKind::J, OrderKind::F] {
            pairs.push((
                TotalCellOrder::from_comparator(&skew.cells(), kind)?,
                TotalCellOrder::from_comparator(&mu.cells(), kind)?,
            ));
        }
        Ok(pairs)
    }
}

fn bijection_checks(lambda: &Partition, mu: &Partition, nu: &Partition) -> Vec<Check> {
    let context = format!("lambda={lambda} mu={mu} nu={nu}");
    let skew = SkewShape::new(nu.clone(), lambda.clone()).expect("triples are compatible");
    let mut checks = Vec::with_capacity(4);

    checks.push(run_check("count-identity", &context, || {
        let j_mu = TotalCellOrder::from_comparator(&mu.cells(), OrderKind::J)?;
        let j_skew = TotalCellOrder::from_comparator(&skew.cells(), OrderKind::J)?;
        let pictures = enumerate_pictures(mu, &skew, &j_skew, &j_mu)?.len();
        let crystal = lr_crystal(lambda, mu, nu, &j_mu)?.len();
        let ballot = lr_coefficient_ballot(lambda, mu, nu);
        Ok((
            pictures == crystal && crystal == ballot,
            format!("pictures={pictures} crystal={crystal} ballot={ballot}"),
        ))
    }));

    checks.push(run_check("picture-crystal-image", &context, || {
        let j_mu = TotalCellOrder::from_comparator(&mu.cells(), OrderKind::J)?;
        let j_skew = TotalCellOrder::from_comparator(&skew.cells(), OrderKind::J)?;
        let mut direct = enumerate_pictures(mu, &skew, &j_skew, &j_mu)?;
        direct.sort();
        let via = pictures_via_crystal(lambda, mu, nu)?;
        Ok((direct == via, format!("{} pictures both ways", via.len())))
    }));

    let pairs = match order_pairs(&skew, mu) {
        Ok(pairs) => pairs,
        Err(e) => {
            checks.push(Check {
                name: "round-trip".into(),
                context,
                pass: false,
                detail: format!("error: {e}"),
            });
            return checks;
        }
    };

    checks.push(run_check("round-trip", &context, || {
        let mut elements = 0usize;
        for (a, a_prime) in &pairs {
            for t in lr_crystal(lambda, mu, nu, a_prime)? {
                let picture = picture_from_tableau(&t, lambda, nu)?;
                if tableau_from_picture(&picture, a_prime)? != t {
                    return Ok((
                        false,
                        format!("tableau {t} does not survive the round trip"),
                    ));
                }
                elements += 1;
            }
            for picture in enumerate_pictures(mu, &skew, a, a_prime)? {
                let t = tableau_from_picture(&picture, a_prime)?;
                if picture_from_tableau(&t, lambda, nu)? != picture {
                    return Ok((false, "a picture does not survive the round trip".into()));
                }
                elements += 1;
            }
        }
        Ok((
            true,
            format!("{} round trips over {} order pairs", elements, pairs.len()),
        ))
    }));

    checks.push(run_check("trace-agreement", &context, || {
        let mut steps = 0usize;
        for (_, a_prime) in &pairs {
            for t in lr_crystal(lambda, mu, nu, a_prime)? {
                let picture = picture_from_tableau(&t, lambda, nu)?;
                let reading = read(&t, a_prime)?;
                let trace = add_letters(lambda, reading.letters());
                for (j, dest) in trace.destinations().enumerate() {
                    if picture.image(reading.sources()[j]) != Some(dest) {
                        return Ok((
                            false,
                            format!("step {} of {t} lands away from its picture image", j + 1),
                        ));
                    }
                    steps += 1;
                }
            }
        }
        Ok((true, format!("{steps} addition steps matched")))
    }));

    checks
}

/// Checks, for every compatible triple within budget, that the picture
/// count, the crystal count, and the ballot count agree; that the two
/// conversion maps are mutually inverse over every selected order pair; that
/// addition destinations agree with picture images step by step; and that
/// the brute-force picture search equals the crystal image.
pub fn sweep_bijection(max_nu: usize) -> Result<VerificationReport> {
    if max_nu > MAX_NU_CEILING {
        return Err(Error::CapExceeded {
            what: "bijection sweep |nu| budget",
            cap: MAX_NU_CEILING,
        });
    }
    let triples = compatible_triples(max_nu, None);
    let mut report = VerificationReport::new(format!(
        "round trips and count identities for all triples with |nu| <= {max_nu} \
         (all admissible order pairs when |mu| <= {ALL_ORDER_PAIRS_MAX}, J/F otherwise)"
    ));
    let checks: Vec<Vec<Check>> = triples
        .par_iter()
        .map(|(lambda, mu, nu)| bijection_checks(lambda, mu, nu))
        .collect();
    report.extend(checks.into_iter().flatten());
    Ok(report)
}

fn order_independence_checks(lambda: &Partition, mu: &Partition, nu: &Partition) -> Vec<Check> {
    let context = format!("lambda={lambda} mu={mu} nu={nu}");
    let skew = SkewShape::new(nu.clone(), lambda.clone()).expect("triples are compatible");
    let mut checks = Vec::with_capacity(2);

    checks.push(run_check("crystal-order-independence", &context, || {
        let j_mu = TotalCellOrder::from_comparator(&mu.cells(), OrderKind::J)?;
        let mut base = lr_crystal(lambda, mu, nu, &j_mu)?;
        base.sort();
        let orders = enumerate_admissible_orders(&mu.cells())?;
        for order in &orders {
            let mut got = lr_crystal(lambda, mu, nu, order)?;
            got.sort();
            if got != base {
                return Ok((false, "an order yields a different crystal than J".into()));
            }
        }
        Ok((
            true,
            format!("{} orders, {} elements", orders.len(), base.len()),
        ))
    }));

    checks.push(run_check("picture-order-independence", &context, || {
        let j_mu = TotalCellOrder::from_comparator(&mu.cells(), OrderKind::J)?;
        let j_skew = TotalCellOrder::from_comparator(&skew.cells(), OrderKind::J)?;
        let mut base = enumerate_pictures(mu, &skew, &j_skew, &j_mu)?;
        base.sort();
        let on_skew = enumerate_admissible_orders(&skew.cells())?;
        let on_mu = enumerate_admissible_orders(&mu.cells())?;
        for a in &on_skew {
            for a_prime in &on_mu {
                let mut got = enumerate_pictures(mu, &skew, a, a_prime)?;
                got.sort();
                if got != base {
                    return Ok((false, "an order pair yields a different picture set".into()));
                }
            }
        }
        Ok((
            true,
            format!(
                "{} order pairs, {} pictures",
                on_skew.len() * on_mu.len(),
                base.len()
            ),
        ))
    }));

    checks
}

/// Checks that the crystal of a triple is the same set along every
/// admissible order on `μ`, and the picture set the same along every
/// admissible order pair, for all compatible triples within budget.
pub fn sweep_order_independence(max_mu: usize, max_nu: usize) -> Result<VerificationReport> {
    if max_mu > MAX_MU_CEILING {
        return Err(Error::CapExceeded {
            what: "order-independence sweep |mu| budget",
            cap: MAX_MU_CEILING,
        });
    }
    if max_nu > MAX_NU_CEILING {
        return Err(Error::CapExceeded {
            what: "order-independence sweep |nu| budget",
            cap: MAX_NU_CEILING,
        });
    }
    let triples: Vec<_> = compatible_triples(max_nu, None)
        .into_iter()
        .filter(|(_, mu, _)| mu.size() <= max_mu)
        .collect();
    let mut report = VerificationReport::new(format!(
        "order independence over all admissible orders for triples with |mu| <= {max_mu}, |nu| <= {max_nu}"
    ));
    let checks: Vec<Vec<Check>> = triples
        .par_iter()
        .map(|(lambda, mu, nu)| order_independence_checks(lambda, mu, nu))
        .collect();
    report.extend(checks.into_iter().flatten());
    Ok(report)
}

/// Checks the dimension bookkeeping of the tensor-product decomposition:
/// with entries bounded by `m`, the tableau counts of the two factors
/// multiply to the multiplicity-weighted tableau counts of the summands.
pub fn sweep_tensor(max_entry: u32, max_size: usize) -> Result<VerificationReport> {
    if max_entry > MAX_ENTRY_CEILING {
        return Err(Error::CapExceeded {
            what: "tensor sweep entry budget",
            cap: MAX_ENTRY_CEILING as usize,
        });
    }
    if max_size > MAX_SIZE_CEILING {
        return Err(Error::CapExceeded {
            what: "tensor sweep size budget",
            cap: MAX_SIZE_CEILING,
        });
    }
    let mut cases = Vec::new();
    for m in 1..=max_entry {
        for lsize in 0..=max_size {
            for lambda in partitions_bounded(lsize, m as usize) {
                for msize in 0..=max_size {
                    for mu in partitions_bounded(msize, m as usize) {
                        cases.push((lambda.clone(), mu, m));
                    }
                }
            }
        }
    }
    let mut report = VerificationReport::new(format!(
        "tensor decomposition dimension identity for |lambda|, |mu| <= {max_size}, entries <= {max_entry}"
    ));
    let checks: Vec<Check> = cases
        .par_iter()
        .map(|(lambda, mu, m)| {
            let context = format!("lambda={lambda} mu={mu} max_entry={m}");
            run_check("tensor-dimension", &context, || {
                let lhs = enumerate_ssyt(lambda, *m).len() * enumerate_ssyt(mu, *m).len();
                let rhs: usize = crate::crystal::decompose_tensor(lambda, mu, *m)?
                    .iter()
                    .map(|(nu, mult)| mult * enumerate_ssyt(nu, *m).len())
                    .sum();
                Ok((lhs == rhs, format!("{lhs} = {rhs}")))
            })
        })
        .collect();
    report.extend(checks);
    Ok(report)
}
