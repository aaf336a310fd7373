//! Walk the two conversion maps by hand: crystal element -> picture ->
//! crystal element, and picture -> crystal element -> picture, over every
//! admissible order pair of a small triple.

use lr_crystals::crystal::lr_crystal;
use lr_crystals::orders::enumerate_admissible_orders;
use lr_crystals::pictures::{enumerate_pictures, picture_from_tableau, tableau_from_picture};
use lr_crystals::{Partition, SkewShape};

fn main() -> anyhow::Result<()> {
    let lambda: Partition = "1".parse()?;
    let mu: Partition = "2,1".parse()?;
    let nu: Partition = "2,2".parse()?;
    let skew = SkewShape::new(nu.clone(), lambda.clone())?;

    let on_skew = enumerate_admissible_orders(&skew.cells())?;
    let on_mu = enumerate_admissible_orders(&mu.cells())?;
    println!(
        "triple (lambda={lambda}, mu={mu}, nu={nu}): {} x {} admissible order pairs\n",
        on_skew.len(),
        on_mu.len()
    );

    for a in &on_skew {
        for a_prime in &on_mu {
            let crystal = lr_crystal(&lambda, &mu, &nu, a_prime)?;
            let pictures = enumerate_pictures(&mu, &skew, a, a_prime)?;
            println!(
                "pair: A = {:?}, A' = {:?}",
                a.sequence()
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>(),
                a_prime
                    .sequence()
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>(),
            );

            for t in &crystal {
                let f = picture_from_tableau(t, &lambda, &nu)?;
                let back = tableau_from_picture(&f, a_prime)?;
                let images: Vec<String> = f.pairs().iter().map(|(_, to)| to.to_string()).collect();
                println!(
                    "  tableau [{t}] -> picture [{}] -> tableau [{back}]",
                    images.join(" ")
                );
                anyhow::ensure!(&back == t, "round trip changed a tableau");
            }
            for f in &pictures {
                let t = tableau_from_picture(f, a_prime)?;
                let back = picture_from_tableau(&t, &lambda, &nu)?;
                anyhow::ensure!(&back == f, "round trip changed a picture");
            }
            println!(
                "  {} crystal elements and {} pictures all survive the round trip",
                crystal.len(),
                pictures.len()
            );
        }
    }
    Ok(())
}
