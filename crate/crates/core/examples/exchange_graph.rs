//! Exchange graph enumeration with DOT output.
//!
//! ```bash
//! cargo run --example exchange_graph > a3.dot
//! ```

use gencluster::cli::graph_summary;
use gencluster::{explore, ClusterPattern, ExchangeMatrix, MutationPair, Result, TropicalSemifield};

fn main() -> Result<()> {
    let f = TropicalSemifield::trivial();
    let a3 = ClusterPattern::classic(
        f.clone(),
        ExchangeMatrix::from_rows(vec![vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 0]])?,
        vec![f.one(); 3],
    )?;
    let g = explore(&a3, None, Some(100))?;
    eprintln!("A3: {}", graph_summary(&g));
    eprintln!("runtime checks: {:?}", g.stats());

    // a generalized pattern and its classic companion with B' = B R have the same graph size
    let z = TropicalSemifield::new(["z"])?;
    let pair = MutationPair::new(vec![2, 1], vec![vec![z.generator(0)], vec![]])?;
    let b = ExchangeMatrix::from_rows(vec![vec![0, 1], vec![-1, 0]])?;
    let gen = ClusterPattern::new(z.clone(), b, pair, vec![z.one(), z.one()])?;
    let companion = ClusterPattern::classic(
        f.clone(),
        ExchangeMatrix::from_rows(vec![vec![0, 1], vec![-2, 0]])?,
        vec![f.one(); 2],
    )?;
    eprintln!("generalized rank 2: {}", graph_summary(&explore(&gen, None, Some(100))?));
    eprintln!("classic companion:  {}", graph_summary(&explore(&companion, None, Some(100))?));

    // an infinite-type pattern stops at the depth limit
    let kronecker = ClusterPattern::classic(
        f.clone(),
        ExchangeMatrix::from_rows(vec![vec![0, 2], vec![-2, 0]])?,
        vec![f.one(); 2],
    )?;
    eprintln!("Kronecker, depth 6: {}", graph_summary(&explore(&kronecker, Some(6), None)?));

    print!("{}", g.to_dot(true));
    Ok(())
}
