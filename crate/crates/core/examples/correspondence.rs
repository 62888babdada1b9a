//! A generalized pattern and the classic pattern with the same `B·R`:
//! equal D-matrices and matching cluster variables.
//!
//! ```bash
//! cargo run --example correspondence
//! ```

use gencluster::correspondence::{d_matrices, make_pair, transport, verify_identification};
use gencluster::{ClusterPattern, Error, ExchangeMatrix, MutationPair, Result, TropicalSemifield};

fn main() -> Result<()> {
    let z = TropicalSemifield::new(["z"])?;
    let pair = MutationPair::new(vec![2, 1], vec![vec![z.generator(0)], vec![]])?;
    let b = ExchangeMatrix::from_rows(vec![vec![0, 1], vec![-1, 0]])?;
    let left = ClusterPattern::new(z.clone(), b, pair, vec![z.one(), z.one()])?;
    let trivial = TropicalSemifield::trivial();
    let right = ClusterPattern::classic(
        trivial.clone(),
        ExchangeMatrix::from_rows(vec![vec![0, 1], vec![-2, 0]])?,
        vec![trivial.one(); 2],
    )?;
    let pair = make_pair(left.clone(), right.clone())?;

    for path in [vec![0], vec![0, 1], vec![1, 0, 1]] {
        let (d, d_bar) = d_matrices(&pair, &[], &path);
        println!("path {path:?}: D = {d}, companion D = {d_bar}");
        let (x, x_bar) = transport(&pair, &path, path[0])?;
        println!("    {}  <->  {}", left.render_variable(&x), right.render_variable(&x_bar));
    }
    let report = verify_identification(&pair, 10)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));

    let wrong = ClusterPattern::classic(
        trivial.clone(),
        ExchangeMatrix::from_rows(vec![vec![0, 2], vec![-1, 0]])?,
        vec![trivial.one(); 2],
    )?;
    if let Err(Error::IncompatibleInitialData) = make_pair(left, wrong) {
        println!("B*R mismatch is rejected");
    }
    Ok(())
}
