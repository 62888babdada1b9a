//! C-, G-matrices and F-polynomials under principal coefficients, the C-G
//! duality, and reconstruction of a seed with other coefficients.
//!
//! ```bash
//! cargo run --example principal_invariants
//! ```

use gencluster::invariants::{c_matrix, check_cg_duality, f_polynomials, g_matrix, separation_reconstruct};
use gencluster::{ClusterPattern, ExchangeMatrix, MutationPair, Result, TropicalSemifield};

fn main() -> Result<()> {
    let b = ExchangeMatrix::from_rows(vec![vec![0, 1], vec![-1, 0]])?;
    let principal = ClusterPattern::principal(b.clone(), vec![2, 1])?;
    let f = principal.semifield();

    for path in [vec![], vec![0], vec![0, 1], vec![0, 1, 0]] {
        let seed = principal.seed_at(&path)?;
        let fs: Vec<String> = f_polynomials(&principal, &seed)?.iter().map(|p| f.render_ring(p)).collect();
        println!("path {:?}", path.iter().map(|k| k + 1).collect::<Vec<_>>());
        println!("  C = {}  G = {}", c_matrix(&principal, &seed)?, g_matrix(&principal, &seed)?);
        println!("  F = [{}]", fs.join(", "));
        println!("  duality holds: {}", check_cg_duality(&principal, &seed)?);
    }

    // the same B and R over Trop(u, v) with nontrivial y and z
    let p = TropicalSemifield::new(["u", "v"])?;
    let pair = MutationPair::new(vec![2, 1], vec![vec![p.parse("u^2*v^-1")?], vec![]])?;
    let general = ClusterPattern::new(p.clone(), b, pair, vec![p.parse("u^-1*v")?, p.parse("v^2")?])?;
    let path = [0, 1, 0];
    let direct = general.seed_at(&path)?;
    for i in 0..2 {
        let (y, x) = separation_reconstruct(&general, &principal, &path, i)?;
        println!(
            "x_{} = {}   y_{} = {}   matches direct mutation: {}",
            i + 1,
            x.render(&p),
            i + 1,
            p.render(&y),
            x == direct.x()[i] && y == direct.y()[i]
        );
    }
    Ok(())
}
