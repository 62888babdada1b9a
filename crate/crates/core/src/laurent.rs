//! Sparse Laurent polynomials in the cluster directions with coefficients in `ZP`.
//!
//! Since `P` is a free abelian group, `ZP[x^±1]` is the integral Laurent ring in
//! the cluster variables together with the semifield generators. Terms are
//! stored flat: each key holds the `n` cluster exponents followed by the `m`
//! semifield exponents, and maps to a nonzero integer. The coefficient in `ZP`
//! of a cluster monomial is recovered by grouping on the first `n` entries.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{check_dim, Error, Result};
use crate::semifield::{rational_pow, render_monomial, GroupRingElement, SemifieldElement, TropicalSemifield};

/// Exponent vector ordered graded-lexicographically (total degree, then lex).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Exponent(Vec<i64>);

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        let da: i64 = self.0.iter().sum();
        let db: i64 = other.0.iter().sum();
        da.cmp(&db).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn grlex(a: &[i64], b: &[i64]) -> Ordering {
    let da: i64 = a.iter().sum();
    let db: i64 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

/// Denominator vector of a Laurent polynomial with respect to the base cluster.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DVector(pub Vec<i64>);

impl DVector {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    rank: usize,
    ngens: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero(rank: usize, ngens: usize) -> Self {
        Self { rank, ngens, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize, ngens: usize) -> Self {
        Self::constant(&GroupRingElement::one(ngens), rank)
    }

    /// The cluster variable `x_i` (0-based).
    pub fn generator(rank: usize, ngens: usize, i: usize) -> Self {
        let mut x = vec![0; rank];
        x[i] = 1;
        Self::monomial(&x, &SemifieldElement::one(ngens))
    }

    /// `p · x^exps` for a semifield monomial `p`.
    pub fn monomial(x_exps: &[i64], p: &SemifieldElement) -> Self {
        let mut key = x_exps.to_vec();
        key.extend_from_slice(p.exponents());
        let mut terms = BTreeMap::new();
        terms.insert(Exponent(key), BigInt::one());
        Self { rank: x_exps.len(), ngens: p.rank(), terms }
    }

    pub fn constant(c: &GroupRingElement, rank: usize) -> Self {
        Self::from_coefficients(rank, c.rank(), [(vec![0; rank], c.clone())])
            .expect("constant has consistent dimensions")
    }

    /// Builds `Σ c_e · x^e` from cluster exponents and `ZP` coefficients.
    pub fn from_coefficients(
        rank: usize,
        ngens: usize,
        coeffs: impl IntoIterator<Item = (Vec<i64>, GroupRingElement)>,
    ) -> Result<Self> {
        let mut out = Self::zero(rank, ngens);
        for (x, c) in coeffs {
            check_dim(rank, x.len())?;
            check_dim(ngens, c.rank())?;
            for (m, k) in c.terms() {
                let mut key = x.clone();
                key.extend_from_slice(m.exponents());
                out.add_term(Exponent(key), k.clone());
            }
        }
        Ok(out)
    }

    /// Builds from flat keys `(x-exponents ++ semifield exponents, integer)`.
    pub fn from_flat_terms(
        rank: usize,
        ngens: usize,
        terms: impl IntoIterator<Item = (Vec<i64>, BigInt)>,
    ) -> Result<Self> {
        let mut out = Self::zero(rank, ngens);
        for (key, c) in terms {
            check_dim(rank + ngens, key.len())?;
            out.add_term(Exponent(key), c);
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of flat terms (cluster monomial times semifield monomial).
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Flat terms in increasing graded-lex order.
    pub fn flat_terms(&self) -> impl Iterator<Item = (&[i64], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.0.as_slice(), c))
    }

    /// True for `±p·x^e`, the units of the Laurent ring.
    pub fn is_unit_monomial(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    fn add_term(&mut self, e: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same_ring(&self, other: &Self) -> Result<()> {
        check_dim(self.rank, other.rank)?;
        check_dim(self.ngens, other.ngens)
    }

    /// Coefficients in `ZP`, keyed by cluster exponent vector.
    pub fn coefficients(&self) -> BTreeMap<Vec<i64>, GroupRingElement> {
        let mut out: BTreeMap<Vec<i64>, Vec<(SemifieldElement, BigInt)>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let (x, p) = e.0.split_at(self.rank);
            out.entry(x.to_vec()).or_default().push((SemifieldElement::new(p.to_vec()), c.clone()));
        }
        out.into_iter()
            .map(|(x, ts)| (x, GroupRingElement::from_terms(self.ngens, ts).expect("consistent rank")))
            .collect()
    }

    pub fn coefficient(&self, x_exps: &[i64]) -> GroupRingElement {
        self.coefficients().remove(x_exps).unwrap_or_else(|| GroupRingElement::zero(self.ngens))
    }

    /// Sets every cluster variable to 1.
    pub fn specialize_cluster_to_one(&self) -> GroupRingElement {
        let terms = self.terms.iter().map(|(e, c)| (SemifieldElement::new(e.0[self.rank..].to_vec()), c.clone()));
        GroupRingElement::from_terms(self.ngens, terms).expect("consistent rank")
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let mut out = Self::zero(self.rank, self.ngens);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let key = ea.0.iter().zip(&eb.0).map(|(a, b)| a + b).collect();
                out.add_term(Exponent(key), ca * cb);
            }
        }
        Ok(out)
    }

    /// Multiplies by `x^x_exps · p`.
    pub fn mul_monomial(&self, x_exps: &[i64], p: &SemifieldElement) -> Result<Self> {
        check_dim(self.rank, x_exps.len())?;
        check_dim(self.ngens, p.rank())?;
        let shift: Vec<i64> = x_exps.iter().chain(p.exponents()).copied().collect();
        Ok(self.shifted(&shift))
    }

    fn shifted(&self, shift: &[i64]) -> Self {
        Self {
            rank: self.rank,
            ngens: self.ngens,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exponent(e.0.iter().zip(shift).map(|(a, b)| a + b).collect()), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(self.rank, self.ngens);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    /// Integer power; negative exponents are allowed only for unit monomials.
    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            if !self.is_unit_monomial() {
                return Err(Error::Argument("negative power of a non-monomial".into()));
            }
            let (e, c) = self.terms.iter().next().expect("one term");
            let key = e.0.iter().map(|a| a * k).collect();
            let coeff = if c.is_negative() && k % 2 != 0 { -BigInt::one() } else { BigInt::one() };
            let mut out = Self::zero(self.rank, self.ngens);
            out.add_term(Exponent(key), coeff);
            return Ok(out);
        }
        let mut result = Self::one(self.rank, self.ngens);
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    fn min_exponents(&self) -> Vec<i64> {
        let width = self.rank + self.ngens;
        let mut mins = vec![i64::MAX; width];
        for e in self.terms.keys() {
            for (m, &v) in mins.iter_mut().zip(&e.0) {
                *m = (*m).min(v);
            }
        }
        mins
    }

    /// Exact quotient `self / den`.
    ///
    /// Both operands are shifted by monomials into the polynomial range and the
    /// graded-lex leading term of the remainder is cancelled until it vanishes.
    /// A leading term that is not divisible, or an integer coefficient that does
    /// not divide, means the quotient is not a Laurent polynomial.
    pub fn exact_div(&self, den: &Self) -> Result<Self> {
        self.check_same_ring(den)?;
        if den.is_zero() {
            return Err(Error::Argument("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        if den.terms.len() == 1 {
            let (de, dc) = den.terms.iter().next().expect("one term");
            let mut out = Self::zero(self.rank, self.ngens);
            for (e, c) in &self.terms {
                let (q, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return Err(Error::NotLaurent);
                }
                out.add_term(Exponent(e.0.iter().zip(&de.0).map(|(a, b)| a - b).collect()), q);
            }
            return Ok(out);
        }

        let num_shift: Vec<i64> = self.min_exponents().iter().map(|v| -v).collect();
        let den_shift: Vec<i64> = den.min_exponents().iter().map(|v| -v).collect();
        let mut rem = self.shifted(&num_shift).terms;
        let den_poly = den.shifted(&den_shift);
        let (lead_e, lead_c) = den_poly.terms.last_key_value().expect("nonzero divisor");
        let mut quotient = Self::zero(self.rank, self.ngens);

        while let Some((e, c)) = rem.last_key_value() {
            let qe: Vec<i64> = e.0.iter().zip(&lead_e.0).map(|(a, b)| a - b).collect();
            if qe.iter().any(|&v| v < 0) {
                return Err(Error::NotLaurent);
            }
            let (q, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return Err(Error::NotLaurent);
            }
            for (de, dc) in &den_poly.terms {
                let key = Exponent(qe.iter().zip(&de.0).map(|(a, b)| a + b).collect());
                let delta = -(&q * dc);
                match rem.entry(key) {
                    Entry::Vacant(v) => {
                        v.insert(delta);
                    }
                    Entry::Occupied(mut o) => {
                        *o.get_mut() += delta;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }
            quotient.add_term(Exponent(qe), q);
        }
        let back: Vec<i64> = den_shift.iter().zip(&num_shift).map(|(d, n)| d - n).collect();
        Ok(quotient.shifted(&back))
    }

    /// `d_j = -min_terms(exponent of x_j)`.
    pub fn denominator_vector(&self) -> Result<DVector> {
        if self.is_zero() {
            return Err(Error::Argument("zero polynomial has no denominator vector".into()));
        }
        Ok(DVector(self.min_exponents()[..self.rank].iter().map(|v| -v).collect()))
    }

    /// Formal partial derivative in `x_i` (0-based).
    pub fn partial_derivative(&self, i: usize) -> Result<Self> {
        if i >= self.rank {
            return Err(Error::Argument(format!("direction {i} out of range")));
        }
        let mut out = Self::zero(self.rank, self.ngens);
        for (e, c) in &self.terms {
            let k = e.0[i];
            if k != 0 {
                let mut key = e.0.clone();
                key[i] -= 1;
                out.add_term(Exponent(key), c * BigInt::from(k));
            }
        }
        Ok(out)
    }

    /// Exact value at a point; cluster coordinates must be nonzero.
    pub fn evaluate(&self, x_point: &[BigRational], p_point: &[BigRational]) -> Result<BigRational> {
        check_dim(self.rank, x_point.len())?;
        check_dim(self.ngens, p_point.len())?;
        if x_point.iter().any(Zero::is_zero) {
            return Err(Error::Evaluation("zero cluster coordinate".into()));
        }
        let point: Vec<&BigRational> = x_point.iter().chain(p_point).collect();
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for (v, &k) in point.iter().zip(&e.0) {
                if k != 0 {
                    if v.is_zero() {
                        return Err(Error::Evaluation("zero value for a semifield generator".into()));
                    }
                    term *= rational_pow(v, k);
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Canonical text: cluster monomials in decreasing graded-lex order, each
    /// with its `ZP` coefficient rendered in lexicographic order.
    pub fn render(&self, semifield: &TropicalSemifield) -> String {
        let names: Vec<String> = (1..=self.rank).map(|i| format!("x{i}")).collect();
        self.render_with(&names, semifield.generators())
    }

    pub fn render_with(&self, x_names: &[String], p_names: &[String]) -> String {
        let mut groups: Vec<(Vec<i64>, GroupRingElement)> = self.coefficients().into_iter().collect();
        groups.sort_by(|a, b| grlex(&b.0, &a.0));
        let mut out = String::new();
        for (x, c) in groups {
            let xm = render_monomial(x_names, &x);
            let (negative, body) = if c.len() == 1 {
                let (m, k) = c.terms().next().expect("one term");
                let mut parts = Vec::new();
                if !k.abs().is_one() {
                    parts.push(k.abs().to_string());
                }
                parts.extend(render_monomial(p_names, m.exponents()));
                parts.extend(xm);
                if parts.is_empty() {
                    parts.push("1".to_string());
                }
                (k.is_negative(), parts.join("*"))
            } else {
                let inner = crate::semifield::render_signed_sum(
                    c.terms().map(|(m, k)| (k, render_monomial(p_names, m.exponents()))),
                );
                match xm {
                    Some(xm) => (false, format!("({inner})*{xm}")),
                    None => (false, format!("({inner})")),
                }
            };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.try_add(rhs).expect("Laurent ring mismatch")
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.try_sub(rhs).expect("Laurent ring mismatch")
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.try_mul(rhs).expect("Laurent ring mismatch")
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            rank: self.rank,
            ngens: self.ngens,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(rank: usize, ngens: usize, i: usize) -> LaurentPolynomial {
        LaurentPolynomial::generator(rank, ngens, i)
    }

    fn trop(names: &[&str]) -> TropicalSemifield {
        TropicalSemifield::new(names.iter().copied()).unwrap()
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn arithmetic_examples() {
        let f = trop(&[]);
        let s = &x(2, 0, 0) + &x(2, 0, 1);
        assert_eq!(s.pow(2).unwrap().render(&f), "x1^2 + 2*x1*x2 + x2^2");
        let prod = &x(2, 0, 0) * &x(2, 0, 0).pow(-1).unwrap();
        assert_eq!(prod, LaurentPolynomial::one(2, 0));

        let f = trop(&["y1"]);
        let y1 = LaurentPolynomial::monomial(&[0, -1], &f.generator(0));
        let p = &(&LaurentPolynomial::one(2, 1) + &y1) * &x(2, 1, 1);
        assert_eq!(p.render(&f), "x2 + y1");
    }

    #[test]
    fn negative_power_of_non_monomial_is_rejected() {
        let s = &x(2, 0, 0) + &x(2, 0, 1);
        assert!(matches!(s.pow(-1), Err(Error::Argument(_))));
        let m = x(2, 0, 0).scale(&BigInt::from(-1));
        assert_eq!(m.pow(-3).unwrap(), x(2, 0, 0).pow(-3).unwrap().scale(&BigInt::from(-1)));
    }

    #[test]
    fn exact_division_examples() {
        let f = trop(&[]);
        let x1 = x(2, 0, 0);
        let x2 = x(2, 0, 1);
        let num = &x1.pow(2).unwrap() - &x2.pow(2).unwrap();
        let q = num.exact_div(&(&x1 - &x2)).unwrap();
        assert_eq!(q.render(&f), "x1 + x2");

        let q = (&x1 + &x2).exact_div(&x1.pow(-1).unwrap()).unwrap();
        assert_eq!(q.render(&f), "x1^2 + x1*x2");

        let err = (&x1 + &LaurentPolynomial::one(2, 0)).exact_div(&(&x1 + &x2));
        assert_eq!(err, Err(Error::NotLaurent));
        let two = LaurentPolynomial::one(2, 0).scale(&BigInt::from(2));
        assert_eq!(x1.exact_div(&two), Err(Error::NotLaurent));
        assert_eq!((&x1 + &x2).exact_div(&(&(&x1 + &x1) + &x2)), Err(Error::NotLaurent));
        assert!(matches!(x1.exact_div(&LaurentPolynomial::zero(2, 0)), Err(Error::Argument(_))));
    }

    #[test]
    fn division_with_coefficients() {
        let f = trop(&["y1"]);
        let y = LaurentPolynomial::monomial(&[0, 0], &f.generator(0));
        let a = &(&x(2, 1, 0) + &y) * &(&x(2, 1, 1) - &y.pow(-2).unwrap());
        let q = a.exact_div(&(&x(2, 1, 1) - &y.pow(-2).unwrap())).unwrap();
        assert_eq!(q, &x(2, 1, 0) + &y);
    }

    #[test]
    fn denominator_vector_examples() {
        let f = trop(&["y1"]);
        for i in 0..3 {
            let mut e = vec![0; 3];
            e[i] = -1;
            assert_eq!(x(3, 1, i).denominator_vector().unwrap(), DVector(e));
        }
        let y = LaurentPolynomial::monomial(&[0, 0], &f.generator(0));
        let p = (&x(2, 1, 1) + &y).exact_div(&x(2, 1, 0)).unwrap();
        assert_eq!(p.denominator_vector().unwrap(), DVector(vec![1, 0]));
        let q = &(&LaurentPolynomial::one(2, 1) + &x(2, 1, 1)) * &x(2, 1, 0);
        assert_eq!(q.denominator_vector().unwrap(), DVector(vec![-1, 0]));
        assert!(LaurentPolynomial::zero(2, 1).denominator_vector().is_err());
    }

    #[test]
    fn derivative_examples() {
        let p = &x(2, 0, 0).pow(2).unwrap() * &x(2, 0, 1);
        assert_eq!(p.partial_derivative(0).unwrap(), (&x(2, 0, 0) * &x(2, 0, 1)).scale(&BigInt::from(2)));
        assert!(LaurentPolynomial::one(2, 0).partial_derivative(0).unwrap().is_zero());
        let inv = x(2, 0, 0).pow(-1).unwrap();
        assert_eq!(inv.partial_derivative(0).unwrap(), x(2, 0, 0).pow(-2).unwrap().scale(&BigInt::from(-1)));
        assert!(inv.partial_derivative(2).is_err());
    }

    #[test]
    fn evaluation_examples() {
        let s = &x(2, 0, 0) + &x(2, 0, 1);
        assert_eq!(s.evaluate(&[rat(1), rat(1)], &[]).unwrap(), rat(2));

        let f = trop(&["y1"]);
        let y = LaurentPolynomial::monomial(&[0, 0], &f.generator(0));
        let p = (&x(2, 1, 1) + &y).exact_div(&x(2, 1, 0)).unwrap();
        assert_eq!(p.evaluate(&[rat(2), rat(3)], &[rat(5)]).unwrap(), rat(4));
        assert!(matches!(p.evaluate(&[rat(0), rat(3)], &[rat(5)]), Err(Error::Evaluation(_))));
        assert!(matches!(p.evaluate(&[rat(1)], &[rat(5)]), Err(Error::Dimension { .. })));
    }

    #[test]
    fn grouped_rendering() {
        let f = trop(&["y1", "z"]);
        let p = LaurentPolynomial::from_coefficients(
            2,
            2,
            [
                (vec![-1, 0], GroupRingElement::one(2)),
                (vec![-1, 1], GroupRingElement::from_monomial(f.parse("z").unwrap())),
                (vec![-1, 2], GroupRingElement::one(2)),
            ],
        )
        .unwrap();
        assert_eq!(p.render(&f), "x1^-1*x2^2 + z*x1^-1*x2 + x1^-1");
        let c = GroupRingElement::one(2).try_add(&GroupRingElement::from_monomial(f.generator(0))).unwrap();
        let q = LaurentPolynomial::constant(&c, 2);
        assert_eq!(q.render(&f), "(1 + y1)");
        assert_eq!(LaurentPolynomial::zero(2, 2).render(&f), "0");
    }

    fn poly(rank: usize, ngens: usize) -> impl Strategy<Value = LaurentPolynomial> {
        proptest::collection::vec((proptest::collection::vec(-2i64..=2, rank + ngens), -4i64..=4), 0..5).prop_map(
            move |ts| {
                LaurentPolynomial::from_flat_terms(rank, ngens, ts.into_iter().map(|(e, c)| (e, BigInt::from(c))))
                    .unwrap()
            },
        )
    }

    fn point(len: usize) -> impl Strategy<Value = Vec<BigRational>> {
        proptest::collection::vec((1i64..7, 1i64..5, any::<bool>()), len).prop_map(|v| {
            v.into_iter().map(|(n, d, neg)| BigRational::new(if neg { -n } else { n }.into(), d.into())).collect()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn division_round_trip(a in poly(2, 1), b in poly(2, 1)) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]

        #[test]
        fn ring_axioms(a in poly(2, 1), b in poly(2, 1), c in poly(2, 1)) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn denominator_shift(a in poly(3, 1), m in proptest::collection::vec(-3i64..=3, 3)) {
            prop_assume!(!a.is_zero());
            let shifted = a.mul_monomial(&m, &SemifieldElement::one(1)).unwrap();
            let d = a.denominator_vector().unwrap();
            let expect: Vec<i64> = d.0.iter().zip(&m).map(|(d, m)| d - m).collect();
            prop_assert_eq!(shifted.denominator_vector().unwrap(), DVector(expect));
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in poly(2, 1), b in poly(2, 1), xp in point(2), pp in point(1)) {
            let ea = a.evaluate(&xp, &pp).unwrap();
            let eb = b.evaluate(&xp, &pp).unwrap();
            prop_assert_eq!((&a * &b).evaluate(&xp, &pp).unwrap(), &ea * &eb);
            prop_assert_eq!((&a + &b).evaluate(&xp, &pp).unwrap(), &ea + &eb);
        }

        #[test]
        fn leibniz_rule(a in poly(2, 1), b in poly(2, 1), i in 0usize..2) {
            let lhs = (&a * &b).partial_derivative(i).unwrap();
            let rhs = &(&a.partial_derivative(i).unwrap() * &b) + &(&a * &b.partial_derivative(i).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
