//! Show that the crystal of a triple is the same set of tableaux along
//! every admissible order, not just the two built-in readings.

use std::collections::BTreeSet;

use lr_crystals::crystal::lr_crystal;
use lr_crystals::orders::{enumerate_admissible_orders, OrderKind, TotalCellOrder};
use lr_crystals::{Partition, Tableau};

fn main() -> anyhow::Result<()> {
    let lambda: Partition = "2,1".parse()?;
    let mu: Partition = "2,2".parse()?;
    let nu: Partition = "4,2,1".parse()?;

    let orders = enumerate_admissible_orders(&mu.cells())?;
    println!(
        "mu = {mu} carries {} admissible orders; computing the crystal of \
         (lambda={lambda}, nu={nu}) along each:\n",
        orders.len()
    );

    let j = TotalCellOrder::from_comparator(&mu.cells(), OrderKind::J)?;
    let reference: BTreeSet<Tableau> = lr_crystal(&lambda, &mu, &nu, &j)?.into_iter().collect();

    for order in &orders {
        let cells: Vec<String> = order.sequence().iter().map(|c| c.to_string()).collect();
        let crystal: BTreeSet<Tableau> =
            lr_crystal(&lambda, &mu, &nu, order)?.into_iter().collect();
        let elements: Vec<String> = crystal.iter().map(|t| format!("[{t}]")).collect();
        println!("order {}  ->  {}", cells.join(" "), elements.join(", "));
        anyhow::ensure!(crystal == reference, "crystal depends on the order!");
    }

    println!("\nsame {} tableaux along every order", reference.len());
    Ok(())
}
