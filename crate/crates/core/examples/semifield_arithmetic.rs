//! Tropical semifield and group ring arithmetic.
//!
//! ```bash
//! cargo run --example semifield_arithmetic
//! ```

use gencluster::semifield::eval_poly_tropical;
use gencluster::{GroupRingElement, Result, TropicalSemifield};

fn main() -> Result<()> {
    let p = TropicalSemifield::new(["y1", "y2", "z"])?;
    let a = p.parse("y1^2*z^-1")?;
    let b = p.parse("y1*y2")?;

    // multiplication adds exponents, the auxiliary addition takes minima
    println!("a * b   = {}", p.render(&a.try_mul(&b)?));
    println!("a (+) b = {}", p.render(&a.tropical_add(&b)));
    println!("1 (+) a = {}", p.render(&p.one().tropical_add(&a)));

    // Z_k|_P(u) for Z(u) = 1 + z u + u^2
    let z = p.parse("z")?;
    let coeffs = [p.one(), z, p.one()];
    let y = p.parse("y1")?;
    println!("Z(y1)   = {}", p.render(&eval_poly_tropical(&coeffs, &y)?));

    // the group ring ZP keeps honest integer sums
    let one = GroupRingElement::one(p.rank());
    let y1 = GroupRingElement::from_monomial(p.generator(0));
    let f = &one + &y1;
    let g = &one - &y1;
    println!("(1 + y1)(1 - y1) = {}", p.render_ring(&(&f * &g)));
    Ok(())
}
