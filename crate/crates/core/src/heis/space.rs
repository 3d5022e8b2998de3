//! Weight-space computations in a presented module: candidate monomials,
//! relation rows, and echelon quotients.
//!
//! A weight space of the induced module is spanned by the normal monomials
//! at that weight ([`monomials_at_weight`]). Relations are streamed into an
//! integer echelon as sparse rows over the candidate columns:
//!
//! 1. mode-truncation images (for coinvariant spaces): any candidate
//!    containing a letter at or above its truncation index is itself an
//!    image, giving an instant pivot; below-threshold image modes contribute
//!    bracket rows;
//! 2. translates of the boundary power relations by words in the modes;
//! 3. Fourier modes of the vanishing currents applied to lower monomials.
//!
//! Generation is capped (see [`super::Caps`]): auxiliary degrees are scanned
//! up to an overshoot above the target degree and translate words reach a
//! bounded distance below the mode thresholds. A capped relation set is a
//! subset of the true one, so computed dimensions are upper bounds and a
//! certified zero is exact; tables are recomputed at escalating caps until
//! they stop changing.
//!
//! Columns are ordered so that preferred pivots come first: monomials with
//! more `e` letters, then lexicographically larger `h`, `e`, `f` index
//! multisets. Survivor (non-pivot) columns form the reported basis.

use num_bigint::BigInt;
use std::cmp::Reverse;
use std::collections::HashMap;
use std::rc::Rc;

use super::algebra::{apply_e, apply_f, apply_gen, apply_h, Elem, Family, Letter, Mono};
use super::presentation::{CurrentKind, ModuleParams};
use super::Caps;
use crate::linalg::{Echelon, SparseVec};

/// All nondecreasing index lists of the given length within `[min_idx,
/// max_idx]` summing to `total` (`max_idx = None` leaves the upper end to
/// the sum constraint).
pub fn index_multisets(
    count: usize,
    min_idx: i64,
    max_idx: Option<i64>,
    total: i64,
) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut acc = Vec::with_capacity(count);
    fn rec(
        count: usize,
        min_idx: i64,
        max_idx: Option<i64>,
        total: i64,
        acc: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if count == 0 {
            if total == 0 {
                out.push(acc.clone());
            }
            return;
        }
        let n = count as i64;
        let mut v = min_idx;
        while n * v <= total {
            if let Some(hi) = max_idx {
                if v > hi {
                    break;
                }
                // The remaining letters are capped at hi.
                if total - v > (n - 1) * hi {
                    v += 1;
                    continue;
                }
            }
            acc.push(v);
            rec(count - 1, v, max_idx, total - v, acc, out);
            acc.pop();
            v += 1;
        }
    }
    rec(count, min_idx, max_idx, total, &mut acc, &mut out);
    out
}

/// `len! / prod(multiplicity!)` for a sorted index list: the number of
/// orderings, i.e. the coefficient the multiset carries inside a power of a
/// generating current.
pub fn multinomial(sorted: &[i64]) -> BigInt {
    let mut result = BigInt::from(1);
    let mut run = 0u64;
    let mut placed = 0u64;
    let mut prev = None;
    for &x in sorted {
        placed += 1;
        result *= BigInt::from(placed);
        if prev == Some(x) {
            run += 1;
        } else {
            run = 1;
            prev = Some(x);
        }
        result /= BigInt::from(run);
    }
    result
}

fn mono_from_parts(es: &[i64], hs: &[i64], fs: &[i64]) -> Mono {
    let mut m = Mono::one();
    for &i in es {
        m = m.with(Letter::E, i, 1);
    }
    for &s in hs {
        m = m.with(Letter::H, s, 1);
    }
    for &j in fs {
        m = m.with(Letter::F, j, 1);
    }
    m
}

/// All induced-module monomials of the family at an exact weight.
pub fn monomials_at_weight(fam: Family, w: (i64, i64, i64)) -> Vec<Mono> {
    let (m, n, d) = w;
    let (emin, fmin, hmin) = fam.thresholds();
    let mut out = Vec::new();
    if m < 0 || n < 0 || d < 0 {
        return out;
    }
    for nh in 0..=m.min(n) {
        let ne = m - nh;
        let nf = n - nh;
        let (emin_s, hmin_s, fmin_s) = (ne * emin, nh * hmin, nf * fmin);
        for se in emin_s..=(d - hmin_s - fmin_s) {
            for sh in hmin_s..=(d - se - fmin_s) {
                let sf = d - se - sh;
                for es in index_multisets(ne as usize, emin, None, se) {
                    for hs in index_multisets(nh as usize, hmin, None, sh) {
                        for fs in index_multisets(nf as usize, fmin, None, sf) {
                            out.push(mono_from_parts(&es, &hs, &fs));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Column sort key: preferred pivots first, survivors last.
pub fn column_key(m: &Mono) -> impl Ord {
    (
        Reverse(m.letter_count(Letter::E)),
        Reverse(m.indices_desc(Letter::H)),
        Reverse(m.indices_desc(Letter::E)),
        Reverse(m.indices_desc(Letter::F)),
        m.clone(),
    )
}

type MonoCache = HashMap<(Family, (i64, i64, i64)), Rc<Vec<Mono>>>;

/// Shared engine: caches candidate lists per (family, weight).
#[derive(Default)]
pub struct Engine {
    mono_cache: MonoCache,
}

/// Coinvariant truncation `(M, N)`: images of `e_i (i >= M)`, `f_j (j >= N)`
/// and `h_s (s >= M + N)` are divided out. `None` means the plain module.
pub type Trunc = Option<(i64, i64)>;

impl Engine {
    pub fn new() -> Self {
        Engine::default()
    }

    /// Candidate monomials at a weight, unsorted, cached.
    pub fn monos(&mut self, fam: Family, w: (i64, i64, i64)) -> Rc<Vec<Mono>> {
        self.mono_cache
            .entry((fam, w))
            .or_insert_with(|| Rc::new(monomials_at_weight(fam, w)))
            .clone()
    }

    /// Candidates at a weight in column order.
    pub fn sorted_candidates(&mut self, fam: Family, w: (i64, i64, i64)) -> Vec<Mono> {
        let mut c: Vec<Mono> = self.monos(fam, w).as_ref().clone();
        c.sort_by_cached_key(column_key);
        c
    }

    /// Stream every relation row at the given weight into `emit`; stop when
    /// `emit` returns `true`.
    pub fn for_each_relation_row(
        &mut self,
        params: &ModuleParams,
        trunc: Trunc,
        caps: Caps,
        w: (i64, i64, i64),
        emit: &mut dyn FnMut(Elem) -> bool,
    ) {
        let fam = params.family;
        let (emin, fmin, _hmin) = fam.thresholds();
        let (m, n, d) = w;

        if let Some((mt, nt)) = trunc {
            // Image rows from candidates containing a letter at or above its
            // truncation index: peel one such letter and reapply it. For `e`
            // and `h` the application is a pure insertion and the row is the
            // candidate itself; a reapplied `f` picks up `h` corrections
            // from crossing the `e` block.
            let cands = self.monos(fam, w);
            for c in cands.iter() {
                if (c.count_at_or_above(Letter::E, mt.max(emin)) > 0
                    || c.count_at_or_above(Letter::H, mt + nt) > 0)
                    && emit(Elem::from_mono(c.clone()))
                {
                    return;
                }
                let high_f: Vec<i64> = c
                    .block(Letter::F)
                    .keys()
                    .copied()
                    .filter(|&j| j >= nt.max(fmin))
                    .collect();
                for j in high_f {
                    let rest = c.without_one(Letter::F, j);
                    if emit(apply_f(fam, j, &Elem::from_mono(rest))) {
                        return;
                    }
                }
            }
            // Below-threshold image modes act by brackets alone.
            for i in mt..emin {
                let srcs = self.monos(fam, (m - 1, n, d - i));
                for src in srcs.iter() {
                    let row = apply_e(fam, i, &Elem::from_mono(src.clone()));
                    if !row.is_zero() && emit(row) {
                        return;
                    }
                }
            }
            for j in nt..fmin {
                let srcs = self.monos(fam, (m, n - 1, d - j));
                for src in srcs.iter() {
                    let row = apply_f(fam, j, &Elem::from_mono(src.clone()));
                    if !row.is_zero() && emit(row) {
                        return;
                    }
                }
            }
            // Below-threshold h modes act as zero: no rows.
        }

        if self.current_rows(params, trunc, caps, w, emit) {
            return;
        }
        self.translate_rows(params, trunc, caps, w, emit);
    }

    /// Rows `g · (boundary power) · v` for words `g` in the modes; returns
    /// true if `emit` stopped the stream.
    fn translate_rows(
        &mut self,
        params: &ModuleParams,
        trunc: Trunc,
        caps: Caps,
        w: (i64, i64, i64),
        emit: &mut dyn FnMut(Elem) -> bool,
    ) -> bool {
        let fam = params.family;
        let (emin, _fmin, hmin) = fam.thresholds();
        let (m, n, d) = w;
        let slack = caps.aux_slack;
        // Index windows for the word letters.
        let (hi_e, hi_f, hi_h) = match trunc {
            Some((mt, nt)) => (
                Some(mt.max(emin) - 1),
                Some(mt + nt - 1 + slack),
                Some(mt + nt - 1),
            ),
            None => (None, None, None),
        };
        let h_dead = trunc.map(|(mt, nt)| mt + nt);

        // Corridor for intermediate degrees. Any admissible word can be
        // reordered so that every partial index sum stays within one letter
        // of the straight line from the seed degree to the target degree
        // (apply a positive-index letter while below the line, a negative
        // one while above), so weights outside the corridor can be skipped
        // without losing any word from the span.
        let base_ds: Vec<i64> = params
            .boundary_powers()
            .iter()
            .map(|&(_, bidx, power)| bidx * power as i64)
            .collect();
        let d_floor = base_ds.iter().copied().chain([d]).min().unwrap() - slack;
        let d_ceil = match (hi_e, hi_f, hi_h) {
            (Some(a), Some(b), Some(c)) => {
                let step = a.max(b).max(c).max(0);
                Some(base_ds.iter().copied().chain([d]).max().unwrap() + step)
            }
            _ => None,
        };

        // Achievable total of `count` indices drawn from `[lo, hi]`.
        let sum_range = |count: i64, lo: i64, hi: Option<i64>| -> Option<(i64, Option<i64>)> {
            if count == 0 {
                return Some((0, Some(0)));
            }
            match hi {
                Some(h) if h < lo => None,
                Some(h) => Some((count * lo, Some(count * h))),
                None => Some((count * lo, None)),
            }
        };
        // Can some word over the windows carry weight `from` to `w`?
        let viable = |from: (i64, i64, i64)| -> bool {
            let (gm, gn, gd) = (m - from.0, n - from.1, d - from.2);
            if gm < 0 || gn < 0 {
                return false;
            }
            if from.2 < d_floor || d_ceil.is_some_and(|c| from.2 > c) {
                return false;
            }
            for nh in 0..=gm.min(gn) {
                let ranges = (
                    sum_range(gm - nh, -slack, hi_e),
                    sum_range(gn - nh, -slack, hi_f),
                    sum_range(nh, hmin, hi_h),
                );
                let (Some((le, he)), Some((lf, hf)), Some((lh, hh))) = ranges else {
                    continue;
                };
                let hi_ok = match (he, hf, hh) {
                    (Some(a), Some(b), Some(c)) => gd <= a + b + c,
                    _ => true,
                };
                if gd >= le + lf + lh && hi_ok {
                    return true;
                }
            }
            false
        };
        // Terms whose `h` letters reach the truncation index are spanned by
        // the single-monomial image rows, and stay so under any further mode
        // application because `h` is central; dropping them shrinks rows
        // without changing the joint span.
        let strip = |x: Elem| -> Elem {
            let Some(hd) = h_dead else { return x };
            let mut out = Elem::zero();
            for (mono, c) in x.terms {
                if mono.count_at_or_above(Letter::H, hd) == 0 {
                    out.terms.insert(mono, c);
                }
            }
            out
        };

        // Translate rows form a left module over the window modes, so the
        // span at the target weight is built by saturation: seed with the
        // boundary-power rows, then repeatedly apply single modes to the
        // reduced basis at each intermediate weight, pruning weights from
        // which the target is unreachable.
        struct Spot {
            ech: Echelon,
            cols: Rc<Vec<Mono>>,
            map: HashMap<Mono, usize>,
        }
        let mut spots: HashMap<(i64, i64, i64), Spot> = HashMap::new();
        let absorb = |spots: &mut HashMap<(i64, i64, i64), Spot>,
                      cands: Rc<Vec<Mono>>,
                      sw: (i64, i64, i64),
                      x: &Elem|
         -> Option<Elem> {
            let spot = spots.entry(sw).or_insert_with(|| {
                let map = cands
                    .iter()
                    .cloned()
                    .enumerate()
                    .map(|(i, mono)| (mono, i))
                    .collect();
                Spot {
                    ech: Echelon::new(),
                    cols: cands,
                    map,
                }
            });
            let reduced = spot.ech.reduce(elem_to_sparse(x, &spot.map));
            reduced.leading_col()?;
            spot.ech.insert(reduced.clone());
            let mut next = Elem::zero();
            for (&colidx, c) in reduced.iter() {
                next.terms.insert(spot.cols[colidx].clone(), c.clone());
            }
            Some(next)
        };

        let mut frontier: Vec<Elem> = Vec::new();
        for (letter, bidx, power) in params.boundary_powers() {
            let seed = strip(Elem::from_mono(Mono::one().with(letter, bidx, power)));
            if seed.is_zero() {
                continue;
            }
            let sw = seed.weight().expect("homogeneous seed");
            if !viable(sw) {
                continue;
            }
            let cands = self.monos(fam, sw);
            if let Some(r) = absorb(&mut spots, cands, sw, &seed) {
                frontier.push(r);
            }
        }
        while !frontier.is_empty() {
            for r in frontier.iter().filter(|r| r.weight() == Some(w)) {
                if emit(r.clone()) {
                    return true;
                }
            }
            let mut next_frontier = Vec::new();
            for r in &frontier {
                let rw = r.weight().expect("homogeneous row");
                if rw == w {
                    continue;
                }
                for (lt, dm, dn, lo_t, hi_t) in [
                    (Letter::E, 1, 0, -slack, hi_e),
                    (Letter::F, 0, 1, -slack, hi_f),
                    (Letter::H, 1, 1, hmin, hi_h),
                ] {
                    let (gm, gn) = (m - rw.0 - dm, n - rw.1 - dn);
                    if gm < 0 || gn < 0 {
                        continue;
                    }
                    // After this letter the remaining indices total at least
                    // -slack each, bounding the index from above.
                    let dyn_hi = d - rw.2 + slack * (gm + gn);
                    let i_hi = hi_t.map_or(dyn_hi, |h| h.min(dyn_hi));
                    for i in lo_t..=i_hi {
                        let w2 = (rw.0 + dm, rw.1 + dn, rw.2 + i);
                        if !viable(w2) {
                            continue;
                        }
                        let out = strip(apply_gen(fam, lt, i, r));
                        if out.is_zero() {
                            continue;
                        }
                        let cands = self.monos(fam, w2);
                        if let Some(red) = absorb(&mut spots, cands, w2, &out) {
                            next_frontier.push(red);
                        }
                    }
                }
            }
            frontier = next_frontier;
        }
        false
    }

    /// Rows from Fourier modes of the vanishing currents applied to lower
    /// monomials; returns true if `emit` stopped the stream.
    fn current_rows(
        &mut self,
        params: &ModuleParams,
        trunc: Trunc,
        caps: Caps,
        w: (i64, i64, i64),
        emit: &mut dyn FnMut(Elem) -> bool,
    ) -> bool {
        let k = params.k;
        let fam = params.family;
        let (m, n, d) = w;
        for kind in CurrentKind::all(k) {
            let (dm, dn) = kind.weight_shift(k);
            let (sm, sn) = (m - dm, n - dn);
            if sm < 0 || sn < 0 {
                continue;
            }
            for dp in 0..=(d + caps.aux_cap) {
                let j = d - dp;
                let srcs = self.monos(fam, (sm, sn, dp));
                for src in srcs.iter() {
                    if let Some(row) = current_row(params, trunc, kind, j, src) {
                        if emit(row) {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    /// Quotient dimension and surviving basis at one weight.
    pub fn cell(
        &mut self,
        params: &ModuleParams,
        trunc: Trunc,
        caps: Caps,
        w: (i64, i64, i64),
    ) -> (usize, Vec<Mono>) {
        if params.is_zero_module() {
            return (0, Vec::new());
        }
        let candidates = self.sorted_candidates(params.family, w);
        if candidates.is_empty() {
            return (0, Vec::new());
        }
        let col: HashMap<Mono, usize> = candidates
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, c)| (c, i))
            .collect();
        let target = candidates.len();
        let mut ech = Echelon::new();
        self.for_each_relation_row(params, trunc, caps, w, &mut |row| {
            ech.insert(elem_to_sparse(&row, &col));
            ech.rank() == target
        });
        let pivots = ech.pivot_cols();
        let survivors: Vec<Mono> = candidates
            .iter()
            .enumerate()
            .filter(|(i, _)| !pivots.contains(i))
            .map(|(_, c)| c.clone())
            .collect();
        (target - ech.rank(), survivors)
    }

    /// Certified zero test in the plain (untruncated) module at the given
    /// caps. `true` is exact; `false` may mean the caps were too small.
    pub fn is_zero_in_module(&mut self, params: &ModuleParams, x: &Elem, caps: Caps) -> bool {
        if x.is_zero() || params.is_zero_module() {
            return true;
        }
        let w = x.weight().expect("homogeneous element");
        let candidates = self.sorted_candidates(params.family, w);
        let col: HashMap<Mono, usize> = candidates
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, c)| (c, i))
            .collect();
        let mut ech = Echelon::new();
        let target = candidates.len();
        self.for_each_relation_row(params, None, caps, w, &mut |row| {
            ech.insert(elem_to_sparse(&row, &col));
            ech.rank() == target
        });
        ech.contains(elem_to_sparse(x, &col))
    }
}

pub fn elem_to_sparse(x: &Elem, col: &HashMap<Mono, usize>) -> SparseVec {
    SparseVec::from_entries(x.terms.iter().map(|(mono, c)| {
        let idx = *col
            .get(mono)
            .unwrap_or_else(|| panic!("monomial {mono} outside the candidate set"));
        (idx, c.clone())
    }))
}

/// One Fourier-mode relation row: the mode of total index `j` of the current
/// applied to `src`. Returns `None` when the row is certainly redundant
/// (under truncation) or empty.
fn current_row(
    params: &ModuleParams,
    trunc: Trunc,
    kind: CurrentKind,
    j: i64,
    src: &Mono,
) -> Option<Elem> {
    let k = params.k;
    let fam = params.family;
    let (emin, fmin, hmin) = fam.thresholds();
    let (main_letter, p, a) = match kind {
        CurrentKind::EH(a) => (Letter::E, (k + 1 - a) as usize, a as usize),
        CurrentKind::FH(a) => (Letter::F, (k + 1 - a) as usize, a as usize),
        CurrentKind::HPow => (Letter::H, 0, (k + 1) as usize),
    };
    // `e` and `h` letters of `src` that no mode can remove persist into
    // every term; at or above the truncation index they make the whole row
    // a combination of single-monomial image rows. (`f` letters admit no
    // such shortcut: their image rows carry corrections.)
    if let Some((mt, nt)) = trunc {
        if src.count_at_or_above(Letter::H, mt + nt) > 0 {
            return None;
        }
        let dead_e = src.count_at_or_above(Letter::E, mt);
        let e_removals = match main_letter {
            Letter::F => p as i64,
            _ => 0,
        };
        if dead_e > e_removals {
            return None;
        }
        let _ = nt;
    }
    // Lower index bound for the main letter: below it, both the direct term
    // and every bracket term vanish on `src`.
    let (lo_main, hi_main) = match main_letter {
        Letter::E => {
            let lo = match src.max_index(Letter::F) {
                None => emin,
                Some(c) => emin.min(hmin - c),
            };
            (lo, trunc.map(|(mt, _)| mt.max(emin) - 1))
        }
        Letter::F => {
            let lo = match src.max_index(Letter::E) {
                None => fmin,
                Some(b) => fmin.min(hmin - b),
            };
            (lo, trunc.map(|(_, nt)| nt.max(fmin) - 1))
        }
        Letter::H => (hmin, None),
    };
    let hi_h = trunc.map(|(mt, nt)| mt + nt - 1);
    if let Some(hi) = hi_h {
        if a > 0 && hi < hmin {
            return None;
        }
    }
    let mut row = Elem::zero();
    let base = Elem::from_mono(src.clone());
    let smin = p as i64 * lo_main;
    let smax = match hi_main {
        Some(hi) => p as i64 * hi,
        None => j - a as i64 * hmin,
    };
    for s_main in smin..=smax.max(smin - 1) {
        let s_h = j - s_main;
        for mains in index_multisets(p, lo_main, hi_main, s_main) {
            for hs in index_multisets(a, hmin, hi_h, s_h) {
                let coeff = multinomial(&mains) * multinomial(&hs);
                let mut term = base.clone();
                for &i in &mains {
                    term = match main_letter {
                        Letter::E => apply_e(fam, i, &term),
                        Letter::F => apply_f(fam, i, &term),
                        Letter::H => unreachable!(),
                    };
                    if term.is_zero() {
                        break;
                    }
                }
                for &s in &hs {
                    term = apply_h(fam, s, &term);
                }
                row.add_assign(&term.scaled(&coeff));
            }
        }
    }
    if kind == CurrentKind::HPow {
        // Pure h modes: p = 0 main letters, handled by the a-block alone.
        debug_assert!(p == 0);
    }
    if row.is_zero() {
        None
    } else {
        Some(row)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiset_enumeration() {
        assert_eq!(index_multisets(2, 1, None, 4), vec![vec![1, 3], vec![2, 2]]);
        assert_eq!(index_multisets(0, 0, None, 0), vec![Vec::<i64>::new()]);
        assert_eq!(index_multisets(0, 0, None, 1), Vec::<Vec<i64>>::new());
        assert_eq!(
            index_multisets(2, -1, Some(1), 0),
            vec![vec![-1, 1], vec![0, 0]]
        );
        assert_eq!(index_multisets(3, 0, Some(1), 2), vec![vec![0, 1, 1]]);
    }

    #[test]
    fn multinomial_coefficients() {
        assert_eq!(multinomial(&[]), BigInt::from(1));
        assert_eq!(multinomial(&[2, 2, 2]), BigInt::from(1));
        assert_eq!(multinomial(&[1, 2]), BigInt::from(2));
        assert_eq!(multinomial(&[1, 1, 2]), BigInt::from(3));
        assert_eq!(multinomial(&[1, 2, 3]), BigInt::from(6));
    }

    #[test]
    fn monomial_enumeration_small() {
        let ms = monomials_at_weight(Family::W, (1, 1, 1));
        assert_eq!(ms.len(), 1); // h_1 only: e_1 f_0 and e_0 f_1 are below threshold
        assert!(ms[0].h.contains_key(&1));
        let ms2 = monomials_at_weight(Family::W, (1, 1, 2));
        // h_2 and e_1 f_1
        assert_eq!(ms2.len(), 2);
        let ms3 = monomials_at_weight(Family::V, (0, 1, 0));
        assert_eq!(ms3.len(), 1); // f_0
        assert!(monomials_at_weight(Family::W, (0, 0, 0))[0].is_one());
    }

    #[test]
    fn column_order_prefers_pivots() {
        let mut eng = Engine::new();
        let cands = eng.sorted_candidates(Family::W, (1, 1, 2));
        // e_1 f_1 should be eliminated in favour of h_2.
        assert_eq!(cands[0].to_string(), "e_1*f_1");
        assert_eq!(cands[1].to_string(), "h_2");
        let cands2 = eng.sorted_candidates(Family::W, (2, 1, 3));
        // e_1 h_2 before e_2 h_1 (larger h multiset first among equal e counts).
        let strs: Vec<String> = cands2.iter().map(|c| c.to_string()).collect();
        let pos_eh12 = strs.iter().position(|s| s == "e_1*h_2").unwrap();
        let pos_eh21 = strs.iter().position(|s| s == "e_2*h_1").unwrap();
        assert!(pos_eh12 < pos_eh21);
    }

    #[test]
    fn boundary_powers_vanish_in_module() {
        let caps = Caps::default();
        let mut eng = Engine::new();
        for (k, l1, l2, l3) in [(1, 1, 1, 1), (2, 1, 2, 1), (1, 0, 1, 0)] {
            let p = ModuleParams::new(k, Family::W, l1, l2, l3);
            let e_pow = Elem::from_mono(Mono::one().with(Letter::E, 1, (l1 + 1) as u32));
            assert!(eng.is_zero_in_module(&p, &e_pow, caps), "{}", p.label());
            let h_pow = Elem::from_mono(Mono::one().with(Letter::H, 1, (l3 + 1) as u32));
            assert!(eng.is_zero_in_module(&p, &h_pow, caps), "{}", p.label());
            if l1 >= 1 {
                let e_small = Elem::from_mono(Mono::one().with(Letter::E, 1, l1 as u32));
                assert!(!eng.is_zero_in_module(&p, &e_small, caps), "{}", p.label());
            }
        }
    }

    #[test]
    fn small_coinvariant_cells() {
        let caps = Caps::default();
        let mut eng = Engine::new();
        // Level 1, truncation (1,1), the two-parameter spaces.
        let w11 = ModuleParams::w_pair(1, 1, 1);
        assert_eq!(eng.cell(&w11, Some((1, 1)), caps, (0, 0, 0)).0, 1);
        assert_eq!(eng.cell(&w11, Some((1, 1)), caps, (1, 1, 1)).0, 1);
        let w10 = ModuleParams::w_pair(1, 1, 0);
        assert_eq!(eng.cell(&w10, Some((1, 1)), caps, (0, 0, 0)).0, 1);
        assert_eq!(eng.cell(&w10, Some((1, 1)), caps, (1, 1, 1)).0, 0);
        // The surviving basis at (1,1,1) for W_1[1,1] is h_1.
        let (dim, basis) = eng.cell(&w11, Some((1, 1)), caps, (1, 1, 1));
        assert_eq!(dim, 1);
        assert_eq!(basis[0].to_string(), "h_1");
    }
}
