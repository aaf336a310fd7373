//! Enumerate the admissible pictures of a triple and print each bijection
//! cell by cell, with a small ASCII rendering of the two diagrams.

use lr_crystals::orders::{OrderKind, TotalCellOrder};
use lr_crystals::pictures::enumerate_pictures;
use lr_crystals::{Partition, SkewShape};

fn main() -> anyhow::Result<()> {
    let lambda: Partition = "2,1".parse()?;
    let mu: Partition = "2,1".parse()?;
    let nu: Partition = "3,2,1".parse()?;
    let skew = SkewShape::new(nu.clone(), lambda.clone())?;

    let a = TotalCellOrder::from_comparator(&skew.cells(), OrderKind::J)?;
    let a_prime = TotalCellOrder::from_comparator(&mu.cells(), OrderKind::J)?;
    let pictures = enumerate_pictures(&mu, &skew, &a, &a_prime)?;

    println!("domain mu = {mu}:");
    for &len in mu.parts() {
        println!("  {}", "# ".repeat(len as usize));
    }
    println!("codomain {skew} (dots are the removed inner cells):");
    for (i, &len) in nu.parts().iter().enumerate() {
        let inner = lambda.part(i as u32 + 1) as usize;
        println!(
            "  {}{}",
            ". ".repeat(inner),
            "# ".repeat(len as usize - inner)
        );
    }
    println!();

    println!("{} admissible pictures for (J, J):", pictures.len());
    for (i, f) in pictures.iter().enumerate() {
        println!("picture {}:", i + 1);
        for (from, to) in f.pairs() {
            println!("  ({},{}) -> ({},{})", from.row, from.col, to.row, to.col);
        }
    }
    Ok(())
}
