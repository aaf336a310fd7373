//! List the crystal elements of a triple, with the reading word and the full
//! addition trace (as JSON) for each.

use lr_crystals::crystal::{add_letters, lr_crystal, read};
use lr_crystals::orders::{OrderKind, TotalCellOrder};
use lr_crystals::Partition;

fn main() -> anyhow::Result<()> {
    let lambda: Partition = "2,1".parse()?;
    let mu: Partition = "2,1".parse()?;
    let nu: Partition = "3,2,1".parse()?;
    let order = TotalCellOrder::from_comparator(&mu.cells(), OrderKind::J)?;

    let elements = lr_crystal(&lambda, &mu, &nu, &order)?;
    println!(
        "crystal of (lambda={lambda}, mu={mu}, nu={nu}): {} elements\n",
        elements.len()
    );

    for t in &elements {
        let reading = read(t, &order)?;
        let trace = add_letters(&lambda, reading.letters());
        println!("tableau   {t}");
        println!("reading   {:?}", reading.letters());
        println!("trace     {}", serde_json::to_string(&trace)?);
        println!();
    }
    Ok(())
}
