//! Connected subgraphs, the d-vector trichotomy and compatible sets on complete graphs.
//!
//! ```bash
//! cargo run --example structural_checks
//! ```

use std::collections::BTreeSet;

use gencluster::graph::{
    connected_subgraph, verify_all_connected_subgraphs, verify_compatible_sets, verify_dvector_trichotomy,
};
use gencluster::{explore, ClusterPattern, ExchangeMatrix, MutationPair, Result, TropicalSemifield};

fn main() -> Result<()> {
    let f = TropicalSemifield::new(["z"])?;
    let pair = MutationPair::new(vec![2, 1], vec![vec![f.generator(0)], vec![]])?;
    let b = ExchangeMatrix::from_rows(vec![vec![0, 1], vec![-1, 0]])?;
    let pattern = ClusterPattern::new(f.clone(), b, pair, vec![f.one(), f.one()])?;
    let g = explore(&pattern, None, Some(100))?;

    println!("cluster variables:");
    for id in 0..g.variables().len() {
        let d = g.variables()[id].denominator_vector()?;
        println!("  #{id}: {}   d = {:?}", g.render_variable(id), d.entries());
    }

    let x1 = g.vertices()[0].cluster[0];
    let (seeds, connected) = connected_subgraph(&g, &BTreeSet::from([x1]));
    println!("seeds containing x1: {seeds:?}, connected: {connected}");

    for report in [verify_all_connected_subgraphs(&g), verify_dvector_trichotomy(&g)?, verify_compatible_sets(&g)?] {
        println!("{:<20} {} ({} cases)", report.check, report.status(), report.cases);
    }
    Ok(())
}
