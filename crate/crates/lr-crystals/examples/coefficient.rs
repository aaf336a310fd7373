//! Compute one Littlewood-Richardson coefficient three independent ways.
//!
//! Usage: cargo run --example coefficient [-- LAMBDA MU NU]
//! e.g.   cargo run --example coefficient -- 2,1 2,1 3,2,1

use lr_crystals::crystal::lr_coefficient_crystal;
use lr_crystals::oracle::lr_coefficient_ballot;
use lr_crystals::orders::{OrderKind, TotalCellOrder};
use lr_crystals::pictures::enumerate_pictures;
use lr_crystals::{Partition, SkewShape};

fn main() -> anyhow::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (lambda, mu, nu): (Partition, Partition, Partition) = if args.len() == 3 {
        (args[0].parse()?, args[1].parse()?, args[2].parse()?)
    } else {
        ("2,1".parse()?, "2,1".parse()?, "3,2,1".parse()?)
    };

    println!("lambda = {lambda}, mu = {mu}, nu = {nu}");

    let crystal = lr_coefficient_crystal(&lambda, &mu, &nu)?;
    println!("crystal count:  {crystal}");

    let skew = SkewShape::new(nu.clone(), lambda.clone())?;
    let a = TotalCellOrder::from_comparator(&skew.cells(), OrderKind::J)?;
    let a_prime = TotalCellOrder::from_comparator(&mu.cells(), OrderKind::J)?;
    let pictures = enumerate_pictures(&mu, &skew, &a, &a_prime)?.len();
    println!("picture count:  {pictures}");

    let ballot = lr_coefficient_ballot(&lambda, &mu, &nu);
    println!("ballot count:   {ballot}");

    anyhow::ensure!(
        crystal == pictures && pictures == ballot,
        "counts disagree!"
    );
    println!("all three agree: c = {crystal}");
    Ok(())
}
