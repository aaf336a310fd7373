//! Decompose a tensor product of crystals into its summands and check the
//! dimension bookkeeping.

use lr_crystals::crystal::decompose_tensor;
use lr_crystals::tableaux::enumerate_ssyt;
use lr_crystals::Partition;

fn main() -> anyhow::Result<()> {
    let lambda: Partition = "2,1".parse()?;
    let mu: Partition = "2,1".parse()?;
    let max_entry = 3;

    let decomposition = decompose_tensor(&lambda, &mu, max_entry)?;
    println!("B({lambda}) (x) B({mu}) with entries <= {max_entry} decomposes as:");

    let mut total = 0usize;
    for (nu, mult) in &decomposition {
        let dim = enumerate_ssyt(nu, max_entry).len();
        total += mult * dim;
        println!("  {mult} x B({nu})   ({dim} tableaux each)");
    }

    let lhs = enumerate_ssyt(&lambda, max_entry).len() * enumerate_ssyt(&mu, max_entry).len();
    println!("dimension check: {lhs} = {total}");
    anyhow::ensure!(lhs == total, "dimension identity failed");
    Ok(())
}
