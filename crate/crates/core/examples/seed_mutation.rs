//! Seed mutation: classic and generalized rules, involution, and the pentagon.
//!
//! ```bash
//! cargo run --example seed_mutation
//! ```

use gencluster::{ClusterPattern, ExchangeMatrix, MutationPair, Result, Seed, TropicalSemifield};

fn show(label: &str, pattern: &ClusterPattern, seed: &Seed) {
    let f = pattern.semifield();
    let x: Vec<String> = seed.x().iter().map(|v| v.render(f)).collect();
    let y: Vec<String> = seed.y().iter().map(|v| f.render(v)).collect();
    println!("{label}: B = {}", seed.b().matrix());
    println!("    x = [{}]", x.join(", "));
    println!("    y = [{}]", y.join(", "));
}

fn main() -> Result<()> {
    let b = ExchangeMatrix::from_rows(vec![vec![0, 1], vec![-1, 0]])?;

    // principal coefficients, classic A2
    let a2 = ClusterPattern::principal(b.clone(), vec![1, 1])?;
    show("A2 after mu_1", &a2, &a2.seed_at(&[0])?);
    let back = a2.seed_at(&[0, 0])?;
    println!("mu_1 mu_1 = id: {}", &back == a2.initial_seed());
    let pentagon = a2.seed_at(&[0, 1, 0, 1, 0])?;
    println!("five mutations give the swapped initial seed: {}", pentagon == a2.initial_seed().permute(&[1, 0]));

    // degree 2 in direction 1 with frozen coefficient z: Z_1(u) = 1 + z u + u^2
    let f = TropicalSemifield::new(["z"])?;
    let pair = MutationPair::new(vec![2, 1], vec![vec![f.generator(0)], vec![]])?;
    let gen = ClusterPattern::new(f.clone(), b, pair, vec![f.one(), f.one()])?;
    show("generalized after mu_1", &gen, &gen.seed_at(&[0])?);
    let round = gen.seed_at(&[0, 1, 0, 1, 0, 1])?;
    show("generalized after (mu_2 mu_1)^3", &gen, &round);
    Ok(())
}
