//! List every admissible total order on the cells of a few shapes, and show
//! where the two built-in reading orders sit among them.

use lr_crystals::orders::{enumerate_admissible_orders, OrderKind, TotalCellOrder};
use lr_crystals::SkewShape;

fn main() -> anyhow::Result<()> {
    for text in ["2,1", "2,2", "3,2", "3,2,1/1"] {
        let shape: SkewShape = text.parse()?;
        let cells = shape.cells();
        let orders = enumerate_admissible_orders(&cells)?;
        let j = TotalCellOrder::from_comparator(&cells, OrderKind::J)?;
        let f = TotalCellOrder::from_comparator(&cells, OrderKind::F)?;

        println!("shape {text}: {} admissible orders", orders.len());
        for order in &orders {
            let cells: Vec<String> = order.sequence().iter().map(|c| c.to_string()).collect();
            let tag = if *order == j && *order == f {
                "  (= J = F)"
            } else if *order == j {
                "  (= J)"
            } else if *order == f {
                "  (= F)"
            } else {
                ""
            };
            println!("  {}{tag}", cells.join(" "));
        }
        println!();
    }
    Ok(())
}
