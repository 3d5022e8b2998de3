//! End-to-end acceptance checks covering every verified identity at desk
//! scale: path/fusion cardinalities, the path bijection and its recursions,
//! transfer-matrix golden data and rank degeneration, the inversion lemma,
//! and the full Heisenberg-oracle battery (golden tables, selector-refined
//! dimension counts, character recursion, exact sequences, coproduct
//! injectivity, vanishing lemmas) plus randomized engine properties.
//!
//! Each criterion runs over a fixed parameter range and either passes with a
//! short summary or fails with the first mismatch it found.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::characters::{
    check_conjugation, check_left_recursion, check_right_recursion, degenerate_rank, generic_rank,
    pair_set, transfer_left, transfer_right,
};
use crate::error::{Error, Result};
use crate::golden::{parse_matrix, parse_tables, L1_MATRIX_JSON, R1_MATRIX_JSON, W1_TABLES_JSON};
use crate::heis::verify::{
    check_bridge, check_golden_tables, check_w_sum, verify_aux, verify_coproduct, verify_lemmas,
    verify_ses, verify_thm_r,
};
use crate::heis::{
    apply_word, window_weights, Caps, Elem, Engine, Family, Letter, ModuleParams, Oracle,
};
use crate::paths::{
    check_concat_recursion, concat_cpath, enumerate_cpaths, enumerate_vpaths, iota, iota_inverse,
    level1_decompose, level1_summands, multiply_cpaths, vpath_stats, CPath,
};
use crate::verlinde::{admissible_triples, verlinde_number};

/// Outcome of one acceptance criterion.
pub struct CriterionResult {
    pub name: &'static str,
    pub passed: bool,
    pub seconds: f64,
    pub details: String,
}

/// Which criteria to run and which golden sources to compare against.
pub struct SuiteConfig<'a> {
    pub r1_src: &'a str,
    pub l1_src: &'a str,
    pub w1_src: &'a str,
    /// Path/character criteria (no oracle involved).
    pub run_combinatorics: bool,
    /// Oracle-backed criteria and the randomized engine suite.
    pub run_oracle: bool,
}

impl Default for SuiteConfig<'static> {
    fn default() -> Self {
        SuiteConfig {
            r1_src: R1_MATRIX_JSON,
            l1_src: L1_MATRIX_JSON,
            w1_src: W1_TABLES_JSON,
            run_combinatorics: true,
            run_oracle: true,
        }
    }
}

fn timed(
    results: &mut Vec<CriterionResult>,
    name: &'static str,
    f: impl FnOnce() -> Result<String>,
) {
    let t0 = std::time::Instant::now();
    let r = f();
    let seconds = t0.elapsed().as_secs_f64();
    results.push(match r {
        Ok(details) => CriterionResult {
            name,
            passed: true,
            seconds,
            details,
        },
        Err(e) => CriterionResult {
            name,
            passed: false,
            seconds,
            details: e.to_string(),
        },
    });
}

/// Run every acceptance criterion in order.
pub fn run_all() -> Vec<CriterionResult> {
    run_with(&SuiteConfig::default())
}

/// Run the selected acceptance criteria. Oracle-backed criteria share one
/// oracle so coinvariant tables are computed once.
pub fn run_with(cfg: &SuiteConfig) -> Vec<CriterionResult> {
    let mut results: Vec<CriterionResult> = Vec::new();
    if cfg.run_combinatorics {
        timed(
            &mut results,
            "path_and_fusion_counts_agree",
            path_and_fusion_counts_agree,
        );
        timed(
            &mut results,
            "level_one_counts_double",
            level_one_counts_double,
        );
        timed(
            &mut results,
            "path_bijection_round_trips",
            path_bijection_round_trips,
        );
        timed(
            &mut results,
            "concatenation_recursion_partitions",
            concatenation_recursion_partitions,
        );
        timed(
            &mut results,
            "level_one_decomposition_reconstructs",
            level_one_decomposition_reconstructs,
        );
        timed(&mut results, "golden_transfer_matrices_match", || {
            golden_transfer_matrices_match(cfg.r1_src, cfg.l1_src)
        });
        timed(
            &mut results,
            "transfer_recursions_and_conjugation",
            transfer_recursions_and_conjugation,
        );
        timed(
            &mut results,
            "transfer_matrix_rank_degeneration",
            transfer_matrix_rank_degeneration,
        );
        timed(&mut results, "reversal_identities", reversal_identities);
    }
    if cfg.run_oracle {
        let mut o = Oracle::default();
        timed(&mut results, "golden_coinvariant_tables", || {
            golden_coinvariant_tables(&mut o, cfg.w1_src)
        });
        timed(&mut results, "coinvariant_dims_match_path_counts", || {
            coinvariant_dims_match_path_counts(&mut o)
        });
        timed(&mut results, "truncation_recursion", || {
            truncation_recursion(&mut o)
        });
        timed(&mut results, "character_bridge_and_sum", || {
            character_bridge_and_sum(&mut o)
        });
        timed(&mut results, "exact_sequence_additivity", || {
            exact_sequence_additivity(&mut o)
        });
        timed(&mut results, "coproduct_injectivity", || {
            coproduct_injectivity(&mut o)
        });
        timed(&mut results, "annihilation_lemmas", || {
            annihilation_lemmas(&mut o)
        });
        timed(&mut results, "engine_property_suite", engine_property_suite);
    }
    results
}

/// Both path models and the fusion-product coefficients count the same sets.
fn path_and_fusion_counts_agree() -> Result<String> {
    let mut cases = 0;
    for k in 1..=3 {
        for l in 0..=k {
            for n in 1..=6usize {
                let d = verlinde_number(k, l, n as u32)?;
                let c = enumerate_cpaths(k, l, n)?.len();
                let v = enumerate_vpaths(k, l, n)?.len();
                if BigInt::from(c) != d || BigInt::from(v) != d {
                    return Err(Error::Mismatch(format!(
                        "k={k} l={l} N={n}: {c} inequality paths, {v} weight paths, \
                         fusion number {d}"
                    )));
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (k,l,N) cases up to k=3, N=6"))
}

/// At level one every fusion coefficient is a power of two.
fn level_one_counts_double() -> Result<String> {
    for n in 1..=10u32 {
        let want = BigInt::from(1) << (n - 1);
        for l in 0..=1 {
            let d = verlinde_number(1, l, n)?;
            let c = enumerate_cpaths(1, l, n as usize)?.len();
            if d != want || BigInt::from(c) != want {
                return Err(Error::Mismatch(format!(
                    "k=1 l={l} N={n}: fusion number {d}, {c} paths, expected {want}"
                )));
            }
        }
    }
    Ok("2^(N-1) for both l at every N up to 10".into())
}

/// The weight-path/inequality-path bijection round-trips both ways and is
/// onto.
fn path_bijection_round_trips() -> Result<String> {
    let mut cases = 0;
    for k in 1..=3 {
        for l in 0..=k {
            for n in 1..=6usize {
                let cs = enumerate_cpaths(k, l, n)?;
                let vs = enumerate_vpaths(k, l, n)?;
                let mut images: BTreeSet<CPath> = BTreeSet::new();
                for v in &vs {
                    let c = iota(v)?;
                    c.validate()?;
                    if iota_inverse(&c)? != *v {
                        return Err(Error::Mismatch(format!(
                            "k={k} l={l} N={n}: round trip fails at {v:?}"
                        )));
                    }
                    images.insert(c);
                }
                let target: BTreeSet<CPath> = cs.iter().cloned().collect();
                if images != target {
                    return Err(Error::Mismatch(format!(
                        "k={k} l={l} N={n}: image has {} paths, target {}",
                        images.len(),
                        target.len()
                    )));
                }
                for c in &cs {
                    if iota(&iota_inverse(c)?)? != *c {
                        return Err(Error::Mismatch(format!(
                            "k={k} l={l} N={n}: reverse round trip fails at {c:?}"
                        )));
                    }
                }
                cases += 1;
            }
        }
    }
    Ok(format!(
        "{cases} (k,l,N) bijections verified up to k=3, N=6"
    ))
}

/// Concatenation maps partition longer paths, with selector classes refined
/// by the triple decomposition.
fn concatenation_recursion_partitions() -> Result<String> {
    let mut cases = 0;
    for k in 1..=3 {
        for l in 0..=k {
            for n in 1..=5usize {
                check_concat_recursion(k, l, n)?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} recursion partitions up to k=3, N=5"))
}

/// Every path factors into level-one paths, compatibly with concatenation.
fn level_one_decomposition_reconstructs() -> Result<String> {
    let mut paths = 0;
    for k in 1..=3 {
        for l in 0..=k {
            for n in 0..=4usize {
                for p in enumerate_cpaths(k, l, n)? {
                    let subs = level1_summands(&p)?;
                    if subs.len() != k as usize {
                        return Err(Error::Mismatch(format!(
                            "k={k}: {} summands for {p:?}",
                            subs.len()
                        )));
                    }
                    let mut acc: Option<CPath> = None;
                    for s in &subs {
                        s.validate()?;
                        acc = Some(match acc {
                            None => s.clone(),
                            Some(t) => multiply_cpaths(&t, s)?,
                        });
                    }
                    if acc.unwrap() != p || (k == 1 && subs[0] != p) {
                        return Err(Error::Mismatch(format!(
                            "k={k} l={l} N={n}: summand product differs from {p:?}"
                        )));
                    }
                    paths += 1;
                }
            }
        }
    }
    let mut triples = 0;
    for k in 1..=3 {
        for (l, lpp, lp) in admissible_triples(k) {
            for n in 0..=3usize {
                for p in enumerate_cpaths(k, lp, n)? {
                    let pairs = level1_decompose(&p, (l, lpp, lp))?;
                    let whole = concat_cpath((l, lpp, lp), &p)?;
                    let mut acc: Option<CPath> = None;
                    let mut tsum = (0, 0, 0);
                    for (t, s) in &pairs {
                        let img = concat_cpath(*t, s)?;
                        tsum = (tsum.0 + t.0, tsum.1 + t.1, tsum.2 + t.2);
                        acc = Some(match acc {
                            None => img,
                            Some(u) => multiply_cpaths(&u, &img)?,
                        });
                    }
                    if tsum != (l, lpp, lp) || acc.unwrap() != whole {
                        return Err(Error::Mismatch(format!(
                            "k={k} triple ({l},{lpp},{lp}): decomposition of {p:?} \
                             does not recompose"
                        )));
                    }
                    triples += 1;
                }
            }
        }
    }
    Ok(format!(
        "{paths} paths reconstructed, {triples} triple decompositions recomposed"
    ))
}

/// Embedded level-one transfer matrices equal the computed ones entry by
/// entry.
fn golden_transfer_matrices_match(r1_src: &str, l1_src: &str) -> Result<String> {
    for n in 2..=6 {
        let (pairs, rows) = parse_matrix(r1_src, Some(n))?;
        if pairs != pair_set(1) || rows != transfer_right(1, n) {
            return Err(Error::Mismatch(format!(
                "right matrix at N={n} differs from golden data"
            )));
        }
    }
    let (pairs, rows) = parse_matrix(l1_src, None)?;
    if pairs != pair_set(1) || rows != transfer_left(1) {
        return Err(Error::Mismatch(
            "left matrix differs from golden data".into(),
        ));
    }
    Ok("right matrix for N=2..6 and left matrix match golden files".into())
}

/// Transfer matrices reproduce the partial-character recursions, and the
/// left/right matrices are conjugate through path reversal.
fn transfer_recursions_and_conjugation() -> Result<String> {
    let mut cases = 0;
    for k in 1..=3 {
        for n in 2..=5 {
            check_right_recursion(k, n)?;
            cases += 1;
        }
        for n in 1..=5 {
            check_left_recursion(k, n)?;
            cases += 1;
        }
    }
    for k in 1..=2 {
        for n in 2..=5 {
            check_conjugation(k, n)?;
            cases += 1;
        }
    }
    Ok(format!(
        "{cases} recursion/conjugation instances up to k=3, N=5"
    ))
}

/// Full rank at a generic point, rank k+1 on the degeneration locus
/// q = z1 z2 = 1.
fn transfer_matrix_rank_degeneration() -> Result<String> {
    let mut cases = 0;
    for k in 1..=3 {
        let full = ((k + 1) * (k + 2) / 2) as usize;
        let degenerate = (k + 1) as usize;
        let mut matrices = vec![transfer_left(k)];
        for n in 2..=4 {
            matrices.push(transfer_right(k, n));
        }
        for m in &matrices {
            let g = generic_rank(m, 7, 3);
            let d = degenerate_rank(m, 11, 3);
            if g != full || d != degenerate {
                return Err(Error::Mismatch(format!(
                    "k={k}: generic rank {g} (want {full}), degenerate rank {d} \
                     (want {degenerate})"
                )));
            }
            cases += 1;
        }
    }
    Ok(format!(
        "{cases} matrices at full generic rank, k+1 on the locus"
    ))
}

/// Reversing a weight path preserves validity and obeys the three grading
/// identities, swapping endpoint weights and selectors.
fn reversal_identities() -> Result<String> {
    let mut paths = 0;
    for k in 1..=2i64 {
        for n in 1..=5usize {
            let mut pool: BTreeMap<(Vec<i64>, Vec<i64>), i64> = BTreeMap::new();
            let mut rev_pool: BTreeMap<(Vec<i64>, Vec<i64>), i64> = BTreeMap::new();
            for l in 0..=k {
                for v in enumerate_vpaths(k, l, n)? {
                    let s = vpath_stats(&v)?;
                    let rev = v.reversed();
                    rev.validate()?;
                    let sr = vpath_stats(&rev)?;
                    let (i, lp, ip) = (s.left, s.right_weight, s.right_sel);
                    let endpoints = rev.l() == lp && sr.right_weight == l && rev.reversed() == v;
                    let selectors = sr.left == ip && sr.right_sel == i;
                    let gradings = sr.e + s.e == (n as i64 - 1) * (s.s2 + l - i)
                        && sr.s1 + lp - ip == s.s1 + l - i
                        && sr.s2 + lp - ip == s.s2 + l - i;
                    if !(endpoints && selectors && gradings) {
                        return Err(Error::Mismatch(format!(
                            "k={k} N={n} path {:?};{:?}: endpoints {endpoints}, \
                             selectors {selectors}, gradings {gradings}",
                            v.alpha, v.beta
                        )));
                    }
                    *pool.entry((v.alpha.clone(), v.beta.clone())).or_default() += 1;
                    *rev_pool.entry((rev.alpha, rev.beta)).or_default() += 1;
                    paths += 1;
                }
            }
            if pool != rev_pool {
                return Err(Error::Mismatch(format!(
                    "k={k} N={n}: reversal does not permute the union of path sets"
                )));
            }
        }
    }
    Ok(format!("{paths} paths verified up to k=2, N=5"))
}

/// Oracle coinvariant bases reproduce the embedded level-one tables.
fn golden_coinvariant_tables(o: &mut Oracle, w1_src: &str) -> Result<String> {
    let tables = parse_tables(w1_src)?;
    let cells = check_golden_tables(o, &tables)?;
    if cells != 30 {
        return Err(Error::Mismatch(format!(
            "expected 30 golden cells, compared {cells}"
        )));
    }
    Ok("30 golden cells match dimension and monomial support".into())
}

/// Coinvariant dimensions refine path counts by the selector.
fn coinvariant_dims_match_path_counts(o: &mut Oracle) -> Result<String> {
    let mut checks = 0;
    for k in 1..=2 {
        for l in 0..=k {
            for mt in 0..=4i64 {
                for nt in 0..=(4 - mt) {
                    checks += verify_aux(o, k, l, mt, nt)?;
                }
            }
        }
    }
    Ok(format!("{checks} selector counts match for k<=2, M+N<=4"))
}

/// One step of the graded character recursion in the second truncation
/// parameter.
fn truncation_recursion(o: &mut Oracle) -> Result<String> {
    let mut cases = 0;
    for k in 1..=2 {
        for l1 in 0..=k {
            for l2 in 0..=k {
                for l3 in 0..=l1.min(l2) {
                    for mt in 0..=2i64 {
                        for nt in 1..=(3 - mt) {
                            cases += verify_thm_r(o, k, l1, l2, l3, mt, nt)?;
                        }
                    }
                }
            }
        }
    }
    Ok(format!(
        "{cases} character recursion steps for k<=2, M+N<=3"
    ))
}

/// Path characters match oracle characters one selector at a time, and the
/// selector sum reassembles the single-boundary space.
fn character_bridge_and_sum(o: &mut Oracle) -> Result<String> {
    let mut checks = 0;
    for k in 1..=2 {
        for l in 0..=k {
            for n in 1..=3usize {
                checks += check_bridge(o, k, l, n)?;
            }
            for (mt, nt) in [(1, 0), (1, 1), (2, 0), (2, 1), (1, 2)] {
                checks += check_w_sum(o, k, l, mt, nt)?;
            }
        }
    }
    Ok(format!("{checks} bridge/sum identities for k<=2, N<=3"))
}

/// Graded dimension additivity across each short exact sequence.
fn exact_sequence_additivity(o: &mut Oracle) -> Result<String> {
    let mut cases = 0;
    let mut weights = 0;
    for k in 1..=2 {
        for l1 in 0..=k {
            for l2 in 0..=k {
                for (kind, mt, nt) in [
                    ("v", 1, 1),
                    ("v", 2, 0),
                    ("v", 1, 0),
                    ("u", 1, 1),
                    ("u", 0, 2),
                    ("u", 0, 1),
                    ("vbar", 1, 1),
                    ("ubar", 1, 1),
                    ("wbar", 1, 1),
                    ("wbar", 1, 0),
                    ("wbar", 0, 1),
                    ("wl3", 1, 1),
                    ("wl3", 1, 0),
                    ("wl3", 0, 1),
                ] {
                    match verify_ses(o, k, kind, l1, l2, mt, nt) {
                        Ok(n) => {
                            cases += 1;
                            weights += n;
                        }
                        Err(Error::BadParameter(_)) => {}
                        Err(e) => return Err(e),
                    }
                }
            }
        }
    }
    if cases == 0 {
        return Err(Error::Mismatch("no applicable exact sequences".into()));
    }
    Ok(format!(
        "{cases} sequences additive over {weights} graded weights"
    ))
}

/// The level-splitting coproduct is injective on coinvariants cell by cell.
fn coproduct_injectivity(o: &mut Oracle) -> Result<String> {
    let checks = verify_coproduct(o, 2, 4)?;
    if checks == 0 {
        return Err(Error::Mismatch("no coproduct cells checked".into()));
    }
    Ok(format!(
        "{checks} cells injective for windows M+N<=2, weights m+n<=4"
    ))
}

/// The boundary vanishing lemmas hold as exact zero tests in the modules.
fn annihilation_lemmas(o: &mut Oracle) -> Result<String> {
    let checks = verify_lemmas(o, &[1, 2, 3], 3)?;
    Ok(format!("{checks} vanishing instances over a,b,c<=3, k<=3"))
}

/// Randomized engine properties: normal ordering is confluent under
/// adjacent transpositions (with the bracket correction), conserves weight,
/// and cell dimensions are monotone under cap escalation.
fn engine_property_suite() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0c01_4afe);
    let fams = [Family::V, Family::U, Family::W];
    let start = Elem::one();
    for case in 0..1000 {
        let fam = fams[rng.gen_range(0..fams.len())];
        let len = rng.gen_range(2..=6);
        let word: Vec<(Letter, i64)> = (0..len)
            .map(|_| match rng.gen_range(0..3) {
                0 => (Letter::E, rng.gen_range(-2..=3)),
                1 => (Letter::F, rng.gen_range(-2..=3)),
                _ => (Letter::H, rng.gen_range(-1..=4)),
            })
            .collect();
        let lhs = apply_word(fam, &word, &start);
        if !lhs.is_zero() {
            let mut want = (0i64, 0i64, 0i64);
            for &(lt, i) in &word {
                match lt {
                    Letter::E => want = (want.0 + 1, want.1, want.2 + i),
                    Letter::F => want = (want.0, want.1 + 1, want.2 + i),
                    Letter::H => want = (want.0 + 1, want.1 + 1, want.2 + i),
                }
            }
            if lhs.weight() != Some(want) {
                return Err(Error::Mismatch(format!(
                    "case {case}: weight not conserved for word {word:?}"
                )));
            }
        }
        let pos = rng.gen_range(0..len - 1);
        let (a, b) = (word[pos], word[pos + 1]);
        let mut swapped = word.clone();
        swapped.swap(pos, pos + 1);
        let mut rhs = apply_word(fam, &swapped, &start);
        let sign = match (a.0, b.0) {
            (Letter::E, Letter::F) => 1,
            (Letter::F, Letter::E) => -1,
            _ => 0,
        };
        if sign != 0 {
            let mut bracket = word.clone();
            bracket.splice(pos..pos + 2, [(Letter::H, a.1 + b.1)]);
            rhs.add_assign(&apply_word(fam, &bracket, &start).scaled(&BigInt::from(sign)));
        }
        if lhs != rhs {
            return Err(Error::Mismatch(format!(
                "case {case}: swapping positions {pos},{} changes the result of {word:?}",
                pos + 1
            )));
        }
    }
    let caps = Caps::default();
    let mut eng = Engine::default();
    let mut cells = 0;
    for (p, mt, nt) in [
        (ModuleParams::w_pair(2, 1, 1), 2, 1),
        (ModuleParams::w_pair(1, 1, 0), 1, 2),
        (ModuleParams::v_pair(2, 2, 1), 1, 1),
    ] {
        for w in window_weights(&p, mt, nt) {
            let d0 = eng.cell(&p, Some((mt, nt)), caps.escalated(0), w).0;
            let d1 = eng.cell(&p, Some((mt, nt)), caps.escalated(1), w).0;
            let d2 = eng.cell(&p, Some((mt, nt)), caps.escalated(2), w).0;
            if d0 < d1 || d1 < d2 {
                return Err(Error::Mismatch(format!(
                    "{} at ({mt},{nt}) weight {w:?}: dims {d0},{d1},{d2} increase \
                     under larger caps",
                    p.label()
                )));
            }
            cells += 1;
        }
    }
    Ok(format!(
        "1000 seeded words confluent and weight-conserving; {cells} cells monotone \
         under cap escalation"
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_criteria_pass() {
        for r in [
            level_one_counts_double(),
            golden_transfer_matrices_match(R1_MATRIX_JSON, L1_MATRIX_JSON),
            transfer_matrix_rank_degeneration(),
            reversal_identities(),
        ] {
            r.unwrap();
        }
    }
}
