//! Graded characters of the path sets and the transfer matrices that move
//! them between lengths.
//!
//! The character of the length-`N`, weight-`l` path set is
//! `χ(q, z1, z2) = Σ q^e z1^{s1} z2^{s2}` over all paths, optionally refined
//! by the left selector `i` and/or the right boundary data `(l', i')`. Both
//! refinements are indexed by pairs from [`pair_set`].
//!
//! A right transfer matrix `R^{(N)}` (dependent on the source length `N`)
//! extends paths by one step at the far end; a left transfer matrix `L`
//! (length-independent, combined with `z2 -> q z2` in the argument) extends
//! at the near end. Both hold exactly for the lengths checked here, and are
//! tied to each other by a conjugation symmetry.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::paths::{enumerate_cpaths, enumerate_vpaths, vpath_stats};
use crate::poly::Poly;
use crate::verlinde::is_admissible;

/// Boundary pairs `(i, j)` with `0 <= j <= i <= k`, lexicographic. Indexes
/// the rows and columns of the transfer matrices; its length is
/// `(k+1)(k+2)/2`.
pub fn pair_set(k: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for i in 0..=k {
        for j in 0..=i {
            out.push((i, j));
        }
    }
    out
}

pub fn pair_position(k: i64, pair: (i64, i64)) -> Option<usize> {
    pair_set(k).iter().position(|&p| p == pair)
}

/// Total character of the length-`n` weight-`l` path set.
pub fn character(k: i64, l: i64, n: usize) -> Result<Poly> {
    let mut p = Poly::zero();
    for c in enumerate_cpaths(k, l, n)? {
        p.add_term(&BigInt::from(1), c.gradings());
    }
    Ok(p)
}

/// Character refined by the left selector; index `i` runs over `0..=l`.
pub fn character_left(k: i64, l: i64, n: usize) -> Result<Vec<Poly>> {
    let mut out = vec![Poly::zero(); (l + 1) as usize];
    for c in enumerate_cpaths(k, l, n)? {
        out[c.selector() as usize].add_term(&BigInt::from(1), c.gradings());
    }
    Ok(out)
}

/// Character refined by the right boundary data `(l', i')`. Keys absent from
/// the map are zero. Needs `n >= 1`.
pub fn character_right(k: i64, l: i64, n: usize) -> Result<BTreeMap<(i64, i64), Poly>> {
    let mut out: BTreeMap<(i64, i64), Poly> = BTreeMap::new();
    for v in enumerate_vpaths(k, l, n)? {
        let st = vpath_stats(&v)?;
        out.entry((st.right_weight, st.right_sel))
            .or_insert_with(Poly::zero)
            .add_term(&BigInt::from(1), (st.e, st.s1, st.s2));
    }
    Ok(out)
}

/// Character split by both boundaries: key `(i, (l', i'))`.
pub type BoundaryTable = BTreeMap<(i64, (i64, i64)), Poly>;

/// Character refined by both boundaries.
pub fn character_table(k: i64, l: i64, n: usize) -> Result<BoundaryTable> {
    let mut out = BoundaryTable::new();
    for v in enumerate_vpaths(k, l, n)? {
        let st = vpath_stats(&v)?;
        out.entry((st.left, (st.right_weight, st.right_sel)))
            .or_insert_with(Poly::zero)
            .add_term(&BigInt::from(1), (st.e, st.s1, st.s2));
    }
    Ok(out)
}

/// Right transfer matrix for source length `n`: rows are the new right data
/// `(i, j)`, columns the old `(i', j')`. The entry is
/// `q^{n i - (n-1)(i-j-j')^+} z1^{j' - (j+j'-i)^+} z2^{i - (i-j-j')^+}`
/// when `(i', 2j - i + i', i)` is admissible, else zero.
pub fn transfer_right(k: i64, n: i64) -> Vec<Vec<Poly>> {
    let pairs = pair_set(k);
    pairs
        .iter()
        .map(|&(i, j)| {
            pairs
                .iter()
                .map(|&(ip, jp)| {
                    if !is_admissible(k, ip, 2 * j - i + ip, i) {
                        return Poly::zero();
                    }
                    let qe = n * i - (n - 1) * (i - j - jp).max(0);
                    let z1e = jp - (j + jp - i).max(0);
                    let z2e = i - (i - j - jp).max(0);
                    Poly::monomial((qe, z1e, z2e))
                })
                .collect()
        })
        .collect()
}

/// Left transfer matrix: rows are the new left data `(l, i)`, columns the
/// old `(l', i')`. The entry is `(q z1 z2)^b z2^i` with
/// `b = l' + i - l - (i' + i - l)^+` when `(l, 2i - l + l', l')` is
/// admissible, else zero. Used as `X^{n+1}(q,z1,z2) = L X^n(q,z1,qz2)`.
pub fn transfer_left(k: i64) -> Vec<Vec<Poly>> {
    let pairs = pair_set(k);
    pairs
        .iter()
        .map(|&(l, i)| {
            pairs
                .iter()
                .map(|&(lp, ip)| {
                    if !is_admissible(k, l, 2 * i - l + lp, lp) {
                        return Poly::zero();
                    }
                    let b = lp + i - l - (ip + i - l).max(0);
                    Poly::monomial((b, b, b + i))
                })
                .collect()
        })
        .collect()
}

/// A near-miss variant of [`transfer_left`] with an extra `q^{i'}` factor on
/// each entry. Kept to document that this variant fails the length
/// recursion; see the regression test.
pub fn transfer_left_variant_extra_selector_power(k: i64) -> Vec<Vec<Poly>> {
    let pairs = pair_set(k);
    transfer_left(k)
        .into_iter()
        .map(|row| {
            row.into_iter()
                .zip(&pairs)
                .map(|(p, &(_, ip))| p.mul_monomial((ip, 0, 0)))
                .collect()
        })
        .collect()
}

/// Check `χ^{n+1}[·;(i,j)] = Σ R^{(n)}((i,j),(i',j')) χ^n[·;(i',j')]` for all
/// weights `l`. Holds for source lengths `n >= 2` (the length-1 right data
/// convention differs).
pub fn check_right_recursion(k: i64, n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::BadParameter(
            "right recursion needs source length >= 2".into(),
        ));
    }
    let pairs = pair_set(k);
    let r = transfer_right(k, n as i64);
    for l in 0..=k {
        let src = character_right(k, l, n)?;
        let tgt = character_right(k, l, n + 1)?;
        for (row, &pr) in pairs.iter().enumerate() {
            let mut acc = Poly::zero();
            for (col, &pc) in pairs.iter().enumerate() {
                if let Some(chi) = src.get(&pc) {
                    acc.add_assign(&r[row][col].mul(chi));
                }
            }
            let want = tgt.get(&pr).cloned().unwrap_or_else(Poly::zero);
            if acc != want {
                return Err(Error::Mismatch(format!(
                    "right recursion k={k} l={l} n={n} at pair {pr:?}: got {acc}, want {want}"
                )));
            }
        }
    }
    Ok(())
}

/// The vector of left-refined characters over all pairs `(l, i)`.
fn left_vector(k: i64, n: usize) -> Result<Vec<Poly>> {
    let pairs = pair_set(k);
    let mut per_l = Vec::new();
    for l in 0..=k {
        per_l.push(character_left(k, l, n)?);
    }
    Ok(pairs
        .iter()
        .map(|&(l, i)| per_l[l as usize][i as usize].clone())
        .collect())
}

/// Check `X^{n+1}(q,z1,z2) = L X^n(q,z1,qz2)` componentwise over pairs
/// `(l, i)`, for source lengths `n >= 1`. `matrix` allows checking a variant
/// (pass [`transfer_left`] for the real thing).
pub fn check_left_recursion_with(k: i64, n: usize, matrix: &[Vec<Poly>]) -> Result<()> {
    if n < 1 {
        return Err(Error::BadParameter(
            "left recursion needs source length >= 1".into(),
        ));
    }
    let pairs = pair_set(k);
    let src: Vec<Poly> = left_vector(k, n)?
        .into_iter()
        .map(|p| p.subst_z2_mul_qpow(1))
        .collect();
    let tgt = left_vector(k, n + 1)?;
    for (row, &pr) in pairs.iter().enumerate() {
        let mut acc = Poly::zero();
        for (col, chi) in src.iter().enumerate() {
            acc.add_assign(&matrix[row][col].mul(chi));
        }
        if acc != tgt[row] {
            return Err(Error::Mismatch(format!(
                "left recursion k={k} n={n} at pair {pr:?}: got {acc}, want {}",
                tgt[row]
            )));
        }
    }
    Ok(())
}

pub fn check_left_recursion(k: i64, n: usize) -> Result<()> {
    check_left_recursion_with(k, n, &transfer_left(k))
}

/// Check the boundary-exchange symmetry of the doubly refined characters:
/// `χ[i,l; i',l'](q,z1,z2)` equals
/// `q^{(n-1)(l'-i')} (z1 z2)^{l'-i'-l+i} χ[i',l'; i,l](q^{-1}, z1, z2 q^{n-1})`
/// for all boundary data, for lengths `n >= 2`.
pub fn check_conjugation(k: i64, n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::BadParameter(
            "conjugation check needs length >= 2".into(),
        ));
    }
    let mut tables = Vec::new();
    for l in 0..=k {
        tables.push(character_table(k, l, n)?);
    }
    let nn = n as i64;
    for l in 0..=k {
        for i in 0..=l {
            for lp in 0..=k {
                for ip in 0..=lp {
                    let lhs = tables[l as usize]
                        .get(&(i, (lp, ip)))
                        .cloned()
                        .unwrap_or_else(Poly::zero);
                    let mirror = tables[lp as usize]
                        .get(&(ip, (l, i)))
                        .cloned()
                        .unwrap_or_else(Poly::zero);
                    let t = lp - ip - l + i;
                    let rhs = mirror
                        .subst_q_inverse()
                        .subst_z2_mul_qpow(nn - 1)
                        .mul_monomial(((nn - 1) * (lp - ip), t, t));
                    if lhs != rhs {
                        return Err(Error::Mismatch(format!(
                            "conjugation k={k} n={n} at [{i},{l};{ip},{lp}]: {lhs} vs {rhs}"
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Rank of a polynomial matrix evaluated at a rational point.
pub fn rank_at(matrix: &[Vec<Poly>], q: &BigRational, z1: &BigRational, z2: &BigRational) -> usize {
    let rows: Vec<Vec<BigRational>> = matrix
        .iter()
        .map(|row| row.iter().map(|p| p.eval(q, z1, z2)).collect())
        .collect();
    crate::linalg::rational_rank(rows)
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    // Nonzero, with distinct small primes favoured to dodge accidental
    // coincidences between sample points.
    let num = rng.gen_range(2..=97i64);
    let den = rng.gen_range(1..=13i64);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Best-effort generic rank: the maximum over `trials` random rational
/// points. A lower bound on the true generic rank.
pub fn generic_rank(matrix: &[Vec<Poly>], seed: u64, trials: usize) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0;
    for _ in 0..trials {
        let q = random_rational(&mut rng);
        let z1 = random_rational(&mut rng);
        let z2 = random_rational(&mut rng);
        best = best.max(rank_at(matrix, &q, &z1, &z2));
    }
    best
}

/// Rank on the locus `q = 1`, `z2 = 1/z1` (maximum over random `z1`), where
/// the transfer matrices degenerate to the fusion-algebra multiplication and
/// the rank drops to `k + 1`.
pub fn degenerate_rank(matrix: &[Vec<Poly>], seed: u64, trials: usize) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let one = BigRational::new(BigInt::from(1), BigInt::from(1));
    let mut best = 0;
    for _ in 0..trials {
        let z1 = random_rational(&mut rng);
        let z2 = one.clone() / z1.clone();
        best = best.max(rank_at(matrix, &one, &z1, &z2));
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden;

    #[test]
    fn small_characters_are_known() {
        let chi = character(1, 0, 2).unwrap();
        let mut want = Poly::one();
        want.add_term(&BigInt::from(1), (1, 0, 1));
        assert_eq!(chi, want);
        let chi3 = character(1, 0, 3).unwrap();
        let mut want3 = Poly::one();
        want3.add_term(&BigInt::from(1), (1, 0, 1));
        want3.add_term(&BigInt::from(1), (2, 0, 1));
        want3.add_term(&BigInt::from(1), (3, 1, 2));
        assert_eq!(chi3, want3);
    }

    #[test]
    fn length_one_characters() {
        for k in 1..=3 {
            for l in 0..=k {
                let left = character_left(k, l, 1).unwrap();
                for (i, p) in left.iter().enumerate() {
                    let want = if i as i64 == l {
                        Poly::monomial((0, 0, l))
                    } else {
                        Poly::zero()
                    };
                    assert_eq!(*p, want);
                }
                let right = character_right(k, l, 1).unwrap();
                assert_eq!(right.len(), 1);
                assert_eq!(right[&(l, l)], Poly::monomial((0, 0, l)));
            }
        }
    }

    #[test]
    fn character_counts_paths_at_one() {
        for k in 1..=3 {
            for l in 0..=k {
                for n in 0..=4usize {
                    let chi = character(k, l, n).unwrap();
                    let d = crate::verlinde::verlinde_number(k, l, n as u32).unwrap();
                    assert_eq!(chi.eval_at_one(), d);
                }
            }
        }
    }

    #[test]
    fn refinements_sum_to_total() {
        for k in 1..=2 {
            for l in 0..=k {
                for n in 1..=4usize {
                    let total = character(k, l, n).unwrap();
                    let mut from_left = Poly::zero();
                    for p in character_left(k, l, n).unwrap() {
                        from_left.add_assign(&p);
                    }
                    assert_eq!(from_left, total);
                    let mut from_right = Poly::zero();
                    for p in character_right(k, l, n).unwrap().values() {
                        from_right.add_assign(p);
                    }
                    assert_eq!(from_right, total);
                }
            }
        }
    }

    #[test]
    fn right_recursion_holds() {
        for k in 1..=2 {
            for n in 2..=3usize {
                check_right_recursion(k, n).unwrap();
            }
        }
    }

    #[test]
    fn left_recursion_holds() {
        for k in 1..=2 {
            for n in 1..=3usize {
                check_left_recursion(k, n).unwrap();
            }
        }
    }

    #[test]
    fn variant_with_extra_selector_power_fails() {
        let m = transfer_left_variant_extra_selector_power(1);
        assert!(check_left_recursion_with(1, 1, &m).is_err());
    }

    #[test]
    fn conjugation_holds() {
        for k in 1..=2 {
            for n in 2..=3usize {
                check_conjugation(k, n).unwrap();
            }
        }
    }

    #[test]
    fn golden_matrices_match_builders() {
        for n in 2..=6i64 {
            let (pairs, rows) = golden::parse_matrix(golden::R1_MATRIX_JSON, Some(n)).unwrap();
            assert_eq!(pairs, pair_set(1));
            assert_eq!(rows, transfer_right(1, n));
        }
        let (pairs, rows) = golden::parse_matrix(golden::L1_MATRIX_JSON, None).unwrap();
        assert_eq!(pairs, pair_set(1));
        assert_eq!(rows, transfer_left(1));
    }

    #[test]
    fn ranks_generic_and_degenerate() {
        for k in 1..=2i64 {
            let size = ((k + 1) * (k + 2) / 2) as usize;
            let r = transfer_right(k, 3);
            assert_eq!(generic_rank(&r, 7, 3), size);
            assert_eq!(degenerate_rank(&r, 11, 3), (k + 1) as usize);
            let l = transfer_left(k);
            assert_eq!(generic_rank(&l, 7, 3), size);
            assert_eq!(degenerate_rank(&l, 11, 3), (k + 1) as usize);
        }
    }
}
