//! Laurent polynomials over `ZP`: exact division, d-vectors, derivatives and evaluation.
//!
//! ```bash
//! cargo run --example laurent_division
//! ```

use gencluster::{Error, LaurentPolynomial, Result, TropicalSemifield};
use num_rational::BigRational;

fn main() -> Result<()> {
    let p = TropicalSemifield::new(["y"])?;
    let x1 = LaurentPolynomial::generator(2, 1, 0);
    let x2 = LaurentPolynomial::generator(2, 1, 1);
    let y = LaurentPolynomial::monomial(&[0, 0], &p.generator(0));

    // (x2 + y) / x1 is Laurent; (x2 + y) / (x1 + x2) is not
    let num = &x2 + &y;
    let q = num.exact_div(&x1)?;
    println!("(x2 + y) / x1 = {}", q.render(&p));
    println!("d-vector      = {:?}", q.denominator_vector()?.entries());
    match num.exact_div(&(&x1 + &x2)) {
        Err(Error::NotLaurent) => println!("(x2 + y) / (x1 + x2) is not a Laurent polynomial"),
        other => println!("unexpected: {other:?}"),
    }

    // a genuine polynomial divisor
    let prod = (&x1 + &y).try_mul(&(&x2 - &y))?;
    println!("(x1 + y)(x2 - y) / (x2 - y) = {}", prod.exact_div(&(&x2 - &y))?.render(&p));

    let dq = q.partial_derivative(0)?;
    println!("d/dx1 of the quotient = {}", dq.render(&p));
    let r = |n: i64| BigRational::from_integer(n.into());
    println!("quotient at x = (2, 3), y = 5: {}", q.evaluate(&[r(2), r(3)], &[r(5)])?);
    Ok(())
}
