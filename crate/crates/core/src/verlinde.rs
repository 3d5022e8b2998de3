//! The level-`k` Verlinde (fusion) algebra on weights `0..=k`.
//!
//! Basis elements `π_0, …, π_k` multiply by
//! `π_a · π_b = Σ π_c`, the sum running over all `c` such that `(a, b, c)`
//! is an *admissible triple* at level `k`: the half-sums
//! `x = (a+c-b)/2`, `y = (a+b-c)/2`, `z = (b+c-a)/2` are nonnegative
//! integers with `x + y + z ≤ k`. Admissibility is symmetric in all three
//! entries. The dimension numbers `d^(N)_{k,l}` are the coefficients of
//! `(π_0 + … + π_k)^N` and count the paths in [`crate::paths`].

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Is `(a, b, c)` admissible at level `k`?
pub fn is_admissible(k: i64, a: i64, b: i64, c: i64) -> bool {
    xyz(k, a, b, c).is_some()
}

/// The half-sum coordinates `(x, y, z)` of an admissible triple:
/// `a = x + y`, `b = y + z`, `c = x + z`. Returns `None` when the triple is
/// not admissible at level `k`.
pub fn xyz(k: i64, a: i64, b: i64, c: i64) -> Option<(i64, i64, i64)> {
    if (a + b + c) % 2 != 0 {
        return None;
    }
    let x = (a + c - b) / 2;
    let y = (a + b - c) / 2;
    let z = (b + c - a) / 2;
    if x >= 0 && y >= 0 && z >= 0 && x + y + z <= k {
        Some((x, y, z))
    } else {
        None
    }
}

/// All `c` with `(a, b, c)` admissible at level `k`.
pub fn admissible_third(k: i64, a: i64, b: i64) -> Vec<i64> {
    (0..=k).filter(|&c| is_admissible(k, a, b, c)).collect()
}

/// All admissible triples `(a, b, c)` at level `k`, in lexicographic order.
pub fn admissible_triples(k: i64) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for a in 0..=k {
        for b in 0..=k {
            for c in 0..=k {
                if is_admissible(k, a, b, c) {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

/// An element of the level-`k` fusion algebra, stored as the coefficient
/// vector of `π_0, …, π_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionElement {
    pub k: i64,
    pub coeffs: Vec<BigInt>,
}

impl FusionElement {
    pub fn zero(k: i64) -> Self {
        FusionElement {
            k,
            coeffs: vec![BigInt::zero(); (k + 1) as usize],
        }
    }

    /// The basis element `π_l`.
    pub fn basis(k: i64, l: i64) -> Result<Self> {
        if !(0..=k).contains(&l) {
            return Err(Error::BadParameter(format!("weight l={l} outside 0..={k}")));
        }
        let mut e = FusionElement::zero(k);
        e.coeffs[l as usize] = BigInt::one();
        Ok(e)
    }

    /// `π_0 + π_1 + … + π_k`.
    pub fn sum_of_basis(k: i64) -> Self {
        FusionElement {
            k,
            coeffs: vec![BigInt::one(); (k + 1) as usize],
        }
    }

    pub fn add(&self, other: &FusionElement) -> Result<FusionElement> {
        if self.k != other.k {
            return Err(Error::Mismatch(format!("levels {} vs {}", self.k, other.k)));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(FusionElement { k: self.k, coeffs })
    }

    pub fn mul(&self, other: &FusionElement) -> Result<FusionElement> {
        if self.k != other.k {
            return Err(Error::Mismatch(format!("levels {} vs {}", self.k, other.k)));
        }
        let k = self.k;
        let mut out = FusionElement::zero(k);
        for a in 0..=k {
            if self.coeffs[a as usize].is_zero() {
                continue;
            }
            for b in 0..=k {
                if other.coeffs[b as usize].is_zero() {
                    continue;
                }
                let prod = &self.coeffs[a as usize] * &other.coeffs[b as usize];
                for c in admissible_third(k, a, b) {
                    out.coeffs[c as usize] += &prod;
                }
            }
        }
        Ok(out)
    }

    pub fn total(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

/// The coefficient vector of `(π_0 + … + π_k)^N`; entry `l` is `d^(N)_{k,l}`.
pub fn verlinde_numbers(k: i64, n: u32) -> Result<Vec<BigInt>> {
    if k < 1 {
        return Err(Error::BadParameter(format!("level k={k} must be >= 1")));
    }
    let s = FusionElement::sum_of_basis(k);
    let mut acc = FusionElement::basis(k, 0)?; // identity of the fusion product
    for _ in 0..n {
        acc = acc.mul(&s)?;
    }
    Ok(acc.coeffs)
}

/// `d^(N)_{k,l}`.
pub fn verlinde_number(k: i64, l: i64, n: u32) -> Result<BigInt> {
    if !(0..=k).contains(&l) {
        return Err(Error::BadParameter(format!("weight l={l} outside 0..={k}")));
    }
    Ok(verlinde_numbers(k, n)?[l as usize].clone())
}

/// Check `d^(N)_{k,l} = Σ d^(N-1)_{k,l'}` over admissible `(l, l'', l')`
/// (each admissible pair `(l'', l')` contributes one summand).
pub fn check_dimension_recursion(k: i64, n: u32) -> Result<bool> {
    let prev = verlinde_numbers(k, n - 1)?;
    let cur = verlinde_numbers(k, n)?;
    for l in 0..=k {
        let mut acc = BigInt::zero();
        for lpp in 0..=k {
            for lp in 0..=k {
                if is_admissible(k, l, lpp, lp) {
                    acc += &prev[lp as usize];
                }
            }
        }
        if acc != cur[l as usize] {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nums(k: i64, n: u32) -> Vec<i64> {
        verlinde_numbers(k, n)
            .unwrap()
            .iter()
            .map(|b| i64::try_from(b).unwrap())
            .collect()
    }

    #[test]
    fn admissibility_is_symmetric() {
        for k in 1..=4 {
            for a in 0..=k {
                for b in 0..=k {
                    for c in 0..=k {
                        let adm = is_admissible(k, a, b, c);
                        assert_eq!(adm, is_admissible(k, b, a, c));
                        assert_eq!(adm, is_admissible(k, c, b, a));
                        assert_eq!(adm, is_admissible(k, a, c, b));
                    }
                }
            }
        }
    }

    #[test]
    fn xyz_reconstructs_triple() {
        for k in 1..=4 {
            for (a, b, c) in admissible_triples(k) {
                let (x, y, z) = xyz(k, a, b, c).unwrap();
                assert_eq!((x + y, y + z, x + z), (a, b, c));
            }
        }
    }

    #[test]
    fn product_range_matches_interval_description() {
        // π_a · π_b is supported on |a-b| ..= min(a+b, 2k-a-b) with step 2.
        for k in 1..=4 {
            for a in 0..=k {
                for b in 0..=k {
                    let thirds = admissible_third(k, a, b);
                    let lo = (a - b).abs();
                    let hi = (a + b).min(2 * k - a - b);
                    let expected: Vec<i64> = (lo..=hi).filter(|c| (c - lo) % 2 == 0).collect();
                    assert_eq!(thirds, expected, "k={k} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn level_one_powers_double() {
        // At level 1 both entries are 2^(N-1).
        for n in 1..=10u32 {
            let expect = 1i64 << (n - 1);
            assert_eq!(nums(1, n), vec![expect, expect]);
        }
        assert_eq!(nums(1, 0), vec![1, 0]);
    }

    #[test]
    fn frozen_small_tables() {
        // Hand-computed via the transfer matrix of admissible-third counts.
        assert_eq!(nums(2, 0), vec![1, 0, 0]);
        assert_eq!(nums(2, 1), vec![1, 1, 1]);
        assert_eq!(nums(2, 2), vec![3, 4, 3]);
        assert_eq!(nums(2, 3), vec![10, 14, 10]);
        assert_eq!(nums(3, 2), vec![4, 6, 6, 4]);
        assert_eq!(nums(3, 3), vec![20, 32, 32, 20]);
    }

    #[test]
    fn dimension_recursion_holds() {
        for k in 1..=3 {
            for n in 1..=6 {
                assert!(check_dimension_recursion(k, n).unwrap(), "k={k} N={n}");
            }
        }
    }

    #[test]
    fn fusion_product_is_commutative_and_associative() {
        let k = 3;
        for a in 0..=k {
            for b in 0..=k {
                let pa = FusionElement::basis(k, a).unwrap();
                let pb = FusionElement::basis(k, b).unwrap();
                assert_eq!(pa.mul(&pb).unwrap(), pb.mul(&pa).unwrap());
                for c in 0..=k {
                    let pc = FusionElement::basis(k, c).unwrap();
                    assert_eq!(
                        pa.mul(&pb).unwrap().mul(&pc).unwrap(),
                        pa.mul(&pb.mul(&pc).unwrap()).unwrap()
                    );
                }
            }
        }
    }
}
