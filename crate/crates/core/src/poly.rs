//! Sparse Laurent polynomials in the three grading variables `q`, `z1`, `z2`
//! with exact integer coefficients.
//!
//! Characters of the graded spaces in this crate are finite sums
//! `Σ c · q^a z1^b z2^c` with integer (possibly negative) exponents, so a
//! map from exponent triples to coefficients is all that is needed. All
//! arithmetic is exact.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exponents of a single term, in the order `(q, z1, z2)`.
pub type Exps = (i64, i64, i64);

/// A Laurent polynomial in `q`, `z1`, `z2` over the integers.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Exps, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Poly::term(BigInt::one(), (0, 0, 0))
    }

    /// The single term `c · q^a z1^b z2^c`.
    pub fn term(coeff: BigInt, exps: Exps) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        Poly { terms }
    }

    /// The monomial `q^a z1^b z2^c` with coefficient 1.
    pub fn monomial(exps: Exps) -> Self {
        Poly::term(BigInt::one(), exps)
    }

    pub fn from_i64(n: i64) -> Self {
        Poly::term(BigInt::from(n), (0, 0, 0))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: Exps) -> BigInt {
        self.terms.get(&exps).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, coeff: &BigInt, exps: Exps) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn add_assign(&mut self, other: &Poly) {
        for (e, c) in &other.terms {
            self.add_term(c, *e);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(&(-c), *e);
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            out.terms.insert(*e, -c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(&(ca * cb), (ea.0 + eb.0, ea.1 + eb.1, ea.2 + eb.2));
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        let mut out = Poly::zero();
        if c.is_zero() {
            return out;
        }
        for (e, k) in &self.terms {
            out.terms.insert(*e, k * c);
        }
        out
    }

    /// Multiply by the monomial `q^a z1^b z2^c`.
    pub fn mul_monomial(&self, exps: Exps) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            out.terms
                .insert((e.0 + exps.0, e.1 + exps.1, e.2 + exps.2), c.clone());
        }
        out
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Substitute `q → q^{-1}` (negate every q-exponent).
    pub fn subst_q_inverse(&self) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            out.terms.insert((-e.0, e.1, e.2), c.clone());
        }
        out
    }

    /// Substitute `z2 → q^t · z2` (each term gains `t` q-powers per z2-power).
    pub fn subst_z2_mul_qpow(&self, t: i64) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            out.terms.insert((e.0 + t * e.2, e.1, e.2), c.clone());
        }
        out
    }

    /// Swap the roles of `z1` and `z2`.
    pub fn swap_z1_z2(&self) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            out.terms.insert((e.0, e.2, e.1), c.clone());
        }
        out
    }

    /// Evaluate at a rational point. All coordinates must be nonzero when a
    /// negative exponent occurs.
    pub fn eval(&self, q: &BigRational, z1: &BigRational, z2: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            t *= rat_pow(q, e.0);
            t *= rat_pow(z1, e.1);
            t *= rat_pow(z2, e.2);
            acc += t;
        }
        acc
    }

    /// Specialize all variables to 1 (the total dimension underlying a character).
    pub fn eval_at_one(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.terms.values() {
            acc += c;
        }
        acc
    }

    /// JSON term list: `[{"q": a, "z1": b, "z2": c, "c": "coeff"}, ...]`.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| {
                serde_json::json!({
                    "q": e.0,
                    "z1": e.1,
                    "z2": e.2,
                    "c": c.to_string(),
                })
            })
            .collect();
        serde_json::Value::Array(terms)
    }

    pub fn from_json(v: &serde_json::Value) -> crate::error::Result<Poly> {
        use crate::error::Error;
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Golden("polynomial must be a term array".into()))?;
        let mut out = Poly::zero();
        for t in arr {
            let get_exp = |key: &str| -> crate::error::Result<i64> {
                t.get(key)
                    .and_then(|x| x.as_i64())
                    .ok_or_else(|| Error::Golden(format!("term missing integer field '{key}'")))
            };
            let coeff_str = t
                .get("c")
                .and_then(|x| x.as_str())
                .ok_or_else(|| Error::Golden("term missing string field 'c'".into()))?;
            let coeff: BigInt = coeff_str
                .parse()
                .map_err(|_| Error::Golden(format!("bad coefficient '{coeff_str}'")))?;
            out.add_term(&coeff, (get_exp("q")?, get_exp("z1")?, get_exp("z2")?));
        }
        Ok(out)
    }
}

fn rat_pow(base: &BigRational, exp: i64) -> BigRational {
    if exp == 0 {
        return BigRational::one();
    }
    let mut acc = BigRational::one();
    let b = if exp > 0 { base.clone() } else { base.recip() };
    for _ in 0..exp.unsigned_abs() {
        acc *= &b;
    }
    acc
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Sort by (total degree, exponents) for readable output.
        let mut items: Vec<(&Exps, &BigInt)> = self.terms.iter().collect();
        items.sort_by_key(|(e, _)| (e.0 + e.1 + e.2, **e));
        let mut first = true;
        for (e, c) in items {
            let mut factors: Vec<String> = Vec::new();
            let abs = c.magnitude();
            let show_coeff = !abs.is_one() || (e.0 == 0 && e.1 == 0 && e.2 == 0);
            if show_coeff {
                factors.push(abs.to_string());
            }
            for (name, exp) in [("q", e.0), ("z1", e.1), ("z2", e.2)] {
                match exp {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{exp}")),
                }
            }
            let term = factors.join("*");
            if first {
                if c.sign() == num_bigint::Sign::Minus {
                    write!(f, "-{term}")?;
                } else {
                    write!(f, "{term}")?;
                }
                first = false;
            } else if c.sign() == num_bigint::Sign::Minus {
                write!(f, " - {term}")?;
            } else {
                write!(f, " + {term}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: i64, e: Exps) -> Poly {
        Poly::term(BigInt::from(s), e)
    }

    #[test]
    fn ring_axioms_smoke() {
        let a = p(2, (1, 0, 0)).add(&p(3, (0, 1, -2)));
        let b = p(-1, (1, 0, 0)).add(&Poly::one());
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.sub(&a), Poly::zero());
        assert_eq!(a.add(&b).mul(&a), a.mul(&a).add(&b.mul(&a)));
        assert_eq!(a.mul(&Poly::one()), a);
        assert_eq!(a.mul(&Poly::zero()), Poly::zero());
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = p(5, (2, 1, 0));
        let b = p(-5, (2, 1, 0));
        assert!(a.add(&b).is_zero());
    }

    #[test]
    fn substitutions() {
        // q^2 z2^3 under z2 -> q z2 becomes q^5 z2^3.
        let a = Poly::monomial((2, 0, 3));
        assert_eq!(a.subst_z2_mul_qpow(1), Poly::monomial((5, 0, 3)));
        // q -> q^{-1} is an involution.
        let b = p(7, (3, 1, -2)).add(&p(-2, (-1, 0, 4)));
        assert_eq!(b.subst_q_inverse().subst_q_inverse(), b);
        // swapping z1 and z2 twice is the identity.
        assert_eq!(b.swap_z1_z2().swap_z1_z2(), b);
    }

    #[test]
    fn eval_matches_terms() {
        let a = p(2, (1, 1, 0)).add(&p(-3, (0, 0, 2)));
        let q = BigRational::new(BigInt::from(1), BigInt::from(2));
        let z1 = BigRational::from_integer(BigInt::from(3));
        let z2 = BigRational::new(BigInt::from(-1), BigInt::from(5));
        // 2 * (1/2) * 3 - 3 * (1/25) = 3 - 3/25 = 72/25
        assert_eq!(
            a.eval(&q, &z1, &z2),
            BigRational::new(BigInt::from(72), BigInt::from(25))
        );
        assert_eq!(a.eval_at_one(), BigInt::from(-1));
    }

    #[test]
    fn eval_with_negative_exponents() {
        let a = Poly::monomial((-2, 0, 0));
        let q = BigRational::new(BigInt::from(2), BigInt::from(3));
        assert_eq!(
            a.eval(&q, &q, &q),
            BigRational::new(BigInt::from(9), BigInt::from(4))
        );
    }

    #[test]
    fn json_round_trip() {
        let a = p(12345678901234567, (1, -2, 3)).add(&p(-7, (0, 0, 0)));
        let j = a.to_json();
        assert_eq!(Poly::from_json(&j).unwrap(), a);
    }

    #[test]
    fn display_is_readable() {
        let a = p(1, (0, 0, 1)).add(&Poly::one()).add(&p(-2, (1, 1, 1)));
        assert_eq!(a.to_string(), "1 + z2 - 2*q*z1*z2");
    }
}
