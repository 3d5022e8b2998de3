//! The infinite-dimensional Lie algebra with basis `e_i, f_j, h_s` subject
//! to `[e_i, f_j] = h_{i+j}` and `h` central (`e`'s and `f`'s each commute
//! among themselves), acting on modules induced from a cyclic vector `v`
//! annihilated by all modes below a per-family index threshold.
//!
//! Vectors are integer combinations of normal-ordered monomials
//! `(∏ h)(∏ e)(∏ f) v` whose indices all meet the thresholds. Applying a
//! mode renormalizes in one step:
//!
//! * `h_s`: joins the `h` block if `s` meets the threshold, else the term
//!   vanishes (it slides onto `v`);
//! * `e_i` at or above threshold: joins the `e` block (it never has to cross
//!   the `f` block);
//! * `e_i` below threshold: must land on `v`, so only the bracket terms
//!   survive — for each `f_c` present, replace it by `h_{i+c}` (which in
//!   turn must meet the `h` threshold), with multiplicity;
//! * `f_j`: crossing the `e` block always produces bracket terms
//!   `-(replace e_b by h_{j+b})` with multiplicity, plus the direct term
//!   `f_j` joined to the `f` block when `j` meets the threshold.

use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Module family, fixing the mode-index thresholds `(e, f, h)` of the
/// cyclic vector's annihilator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// Thresholds (1, 0, 0).
    V,
    /// Thresholds (0, 1, 0).
    U,
    /// Thresholds (1, 1, 1).
    W,
}

impl Family {
    pub fn thresholds(self) -> (i64, i64, i64) {
        match self {
            Family::V => (1, 0, 0),
            Family::U => (0, 1, 0),
            Family::W => (1, 1, 1),
        }
    }

    pub fn e_min(self) -> i64 {
        self.thresholds().0
    }

    pub fn f_min(self) -> i64 {
        self.thresholds().1
    }

    pub fn h_min(self) -> i64 {
        self.thresholds().2
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "V" | "v" => Some(Family::V),
            "U" | "u" => Some(Family::U),
            "W" | "w" => Some(Family::W),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::V => write!(fm, "V"),
            Family::U => write!(fm, "U"),
            Family::W => write!(fm, "W"),
        }
    }
}

/// One of the three mode letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    E,
    H,
    F,
}

/// A normal-ordered monomial: index -> multiplicity per letter. Represents
/// `(∏ h)(∏ e)(∏ f) v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono {
    pub e: BTreeMap<i64, u32>,
    pub h: BTreeMap<i64, u32>,
    pub f: BTreeMap<i64, u32>,
}

impl Mono {
    pub fn one() -> Self {
        Mono::default()
    }

    pub fn is_one(&self) -> bool {
        self.e.is_empty() && self.h.is_empty() && self.f.is_empty()
    }

    pub fn block(&self, letter: Letter) -> &BTreeMap<i64, u32> {
        match letter {
            Letter::E => &self.e,
            Letter::H => &self.h,
            Letter::F => &self.f,
        }
    }

    fn block_mut(&mut self, letter: Letter) -> &mut BTreeMap<i64, u32> {
        match letter {
            Letter::E => &mut self.e,
            Letter::H => &mut self.h,
            Letter::F => &mut self.f,
        }
    }

    pub fn with(&self, letter: Letter, idx: i64, mult: u32) -> Mono {
        if mult == 0 {
            return self.clone();
        }
        let mut m = self.clone();
        *m.block_mut(letter).entry(idx).or_default() += mult;
        m
    }

    pub fn without_one(&self, letter: Letter, idx: i64) -> Mono {
        let mut m = self.clone();
        let b = m.block_mut(letter);
        match b.get_mut(&idx) {
            Some(c) if *c > 1 => *c -= 1,
            Some(_) => {
                b.remove(&idx);
            }
            None => panic!("letter {letter:?}_{idx} absent"),
        }
        m
    }

    /// `(m, n, d)`: `m` counts `e`'s and `h`'s, `n` counts `f`'s and `h`'s,
    /// `d` sums all indices (with multiplicity).
    pub fn weight(&self) -> (i64, i64, i64) {
        let count = |b: &BTreeMap<i64, u32>| b.values().map(|&c| c as i64).sum::<i64>();
        let isum = |b: &BTreeMap<i64, u32>| b.iter().map(|(&i, &c)| i * c as i64).sum::<i64>();
        let (ec, hc, fc) = (count(&self.e), count(&self.h), count(&self.f));
        (
            ec + hc,
            fc + hc,
            isum(&self.e) + isum(&self.h) + isum(&self.f),
        )
    }

    pub fn letter_count(&self, letter: Letter) -> i64 {
        self.block(letter).values().map(|&c| c as i64).sum()
    }

    pub fn max_index(&self, letter: Letter) -> Option<i64> {
        self.block(letter).keys().next_back().copied()
    }

    /// Number of letters of the given kind with index `>= bound`.
    pub fn count_at_or_above(&self, letter: Letter, bound: i64) -> i64 {
        self.block(letter)
            .range(bound..)
            .map(|(_, &c)| c as i64)
            .sum()
    }

    /// Indices listed with multiplicity, descending. Used by column keys.
    pub fn indices_desc(&self, letter: Letter) -> Vec<i64> {
        let mut out = Vec::new();
        for (&i, &c) in self.block(letter).iter().rev() {
            out.extend(std::iter::repeat_n(i, c as usize));
        }
        out
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(fm, "1");
        }
        let mut parts = Vec::new();
        for (name, block) in [("e", &self.e), ("f", &self.f), ("h", &self.h)] {
            for (&i, &c) in block {
                for _ in 0..c {
                    parts.push(format!("{name}_{i}"));
                }
            }
        }
        write!(fm, "{}", parts.join("*"))
    }
}

/// An integer combination of monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Elem {
    pub terms: BTreeMap<Mono, BigInt>,
}

impl Elem {
    pub fn zero() -> Self {
        Elem::default()
    }

    pub fn from_mono(m: Mono) -> Self {
        let mut e = Elem::zero();
        e.terms.insert(m, BigInt::from(1));
        e
    }

    pub fn one() -> Self {
        Elem::from_mono(Mono::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Mono, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &Elem) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn scaled(&self, c: &BigInt) -> Elem {
        let mut out = Elem::zero();
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.terms.insert(m.clone(), v * c);
        }
        out
    }

    /// Weight of a homogeneous element, if any term exists.
    pub fn weight(&self) -> Option<(i64, i64, i64)> {
        let w = self.terms.keys().next()?.weight();
        debug_assert!(self.terms.keys().all(|m| m.weight() == w));
        Some(w)
    }
}

/// Apply `h_s`.
pub fn apply_h(fam: Family, s: i64, x: &Elem) -> Elem {
    let mut out = Elem::zero();
    if s < fam.h_min() {
        return out;
    }
    for (m, c) in &x.terms {
        out.add_term(m.with(Letter::H, s, 1), c.clone());
    }
    out
}

/// Apply `e_i`.
pub fn apply_e(fam: Family, i: i64, x: &Elem) -> Elem {
    let mut out = Elem::zero();
    if i >= fam.e_min() {
        for (m, c) in &x.terms {
            out.add_term(m.with(Letter::E, i, 1), c.clone());
        }
    } else {
        for (m, c) in &x.terms {
            for (&fc, &mult) in m.f.clone().iter() {
                if i + fc >= fam.h_min() {
                    let m2 = m.without_one(Letter::F, fc).with(Letter::H, i + fc, 1);
                    out.add_term(m2, c * BigInt::from(mult));
                }
            }
        }
    }
    out
}

/// Apply `f_j`.
pub fn apply_f(fam: Family, j: i64, x: &Elem) -> Elem {
    let mut out = Elem::zero();
    for (m, c) in &x.terms {
        for (&eb, &mult) in m.e.clone().iter() {
            if j + eb >= fam.h_min() {
                let m2 = m.without_one(Letter::E, eb).with(Letter::H, j + eb, 1);
                out.add_term(m2, -(c * BigInt::from(mult)));
            }
        }
        if j >= fam.f_min() {
            out.add_term(m.with(Letter::F, j, 1), c.clone());
        }
    }
    out
}

pub fn apply_gen(fam: Family, letter: Letter, idx: i64, x: &Elem) -> Elem {
    match letter {
        Letter::E => apply_e(fam, idx, x),
        Letter::H => apply_h(fam, idx, x),
        Letter::F => apply_f(fam, idx, x),
    }
}

/// Apply an operator word; the rightmost letter acts first.
pub fn apply_word(fam: Family, word: &[(Letter, i64)], x: &Elem) -> Elem {
    let mut cur = x.clone();
    for &(letter, idx) in word.iter().rev() {
        cur = apply_gen(fam, letter, idx, &cur);
        if cur.is_zero() {
            break;
        }
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_monos(fam: Family) -> Vec<Mono> {
        let (emin, fmin, hmin) = fam.thresholds();
        let mut out = vec![Mono::one()];
        out.push(Mono::one().with(Letter::E, emin, 2));
        out.push(
            Mono::one()
                .with(Letter::F, fmin, 1)
                .with(Letter::F, fmin + 2, 1),
        );
        out.push(
            Mono::one()
                .with(Letter::E, emin + 1, 1)
                .with(Letter::H, hmin, 1)
                .with(Letter::F, fmin, 2),
        );
        out.push(
            Mono::one()
                .with(Letter::E, emin, 1)
                .with(Letter::F, fmin + 1, 3),
        );
        out
    }

    #[test]
    fn bracket_identity_holds() {
        // e_i f_j - f_j e_i acts as h_{i+j} on every vector, including
        // below-threshold mode indices.
        for fam in [Family::V, Family::U, Family::W] {
            for m in sample_monos(fam) {
                let x = Elem::from_mono(m);
                for i in -1..=2 {
                    for j in -1..=2 {
                        let lhs_a = apply_e(fam, i, &apply_f(fam, j, &x));
                        let lhs_b = apply_f(fam, j, &apply_e(fam, i, &x));
                        let mut lhs = lhs_a.clone();
                        lhs.add_assign(&lhs_b.scaled(&BigInt::from(-1)));
                        let rhs = apply_h(fam, i + j, &x);
                        assert_eq!(lhs, rhs, "fam={fam} i={i} j={j} x={x:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn like_letters_commute_and_h_is_central() {
        for fam in [Family::V, Family::U, Family::W] {
            for m in sample_monos(fam) {
                let x = Elem::from_mono(m);
                for a in -1..=2 {
                    for b in -1..=2 {
                        let ee_ab = apply_e(fam, a, &apply_e(fam, b, &x));
                        let ee_ba = apply_e(fam, b, &apply_e(fam, a, &x));
                        assert_eq!(ee_ab, ee_ba);
                        let ff_ab = apply_f(fam, a, &apply_f(fam, b, &x));
                        let ff_ba = apply_f(fam, b, &apply_f(fam, a, &x));
                        assert_eq!(ff_ab, ff_ba);
                        let he = apply_h(fam, a, &apply_e(fam, b, &x));
                        let eh = apply_e(fam, b, &apply_h(fam, a, &x));
                        assert_eq!(he, eh);
                        let hf = apply_h(fam, a, &apply_f(fam, b, &x));
                        let fh = apply_f(fam, b, &apply_h(fam, a, &x));
                        assert_eq!(hf, fh);
                    }
                }
            }
        }
    }

    #[test]
    fn weights_shift_correctly() {
        let fam = Family::W;
        let x = Elem::from_mono(Mono::one().with(Letter::E, 1, 1).with(Letter::F, 2, 2));
        let (m, n, d) = x.weight().unwrap();
        let ex = apply_e(fam, 3, &x);
        assert_eq!(ex.weight(), Some((m + 1, n, d + 3)));
        let fx = apply_f(fam, 1, &x);
        assert_eq!(fx.weight(), Some((m, n + 1, d + 1)));
        let hx = apply_h(fam, 2, &x);
        assert_eq!(hx.weight(), Some((m + 1, n + 1, d + 2)));
    }

    #[test]
    fn below_threshold_modes_annihilate_the_cyclic_vector() {
        for fam in [Family::V, Family::U, Family::W] {
            let v = Elem::one();
            let (emin, fmin, hmin) = fam.thresholds();
            assert!(apply_e(fam, emin - 1, &v).is_zero());
            assert!(apply_f(fam, fmin - 1, &v).is_zero());
            assert!(apply_h(fam, hmin - 1, &v).is_zero());
            assert!(!apply_e(fam, emin, &v).is_zero());
            assert!(!apply_f(fam, fmin, &v).is_zero());
            assert!(!apply_h(fam, hmin, &v).is_zero());
        }
    }

    #[test]
    fn display_and_order() {
        let m = Mono::one()
            .with(Letter::E, 2, 1)
            .with(Letter::H, 1, 1)
            .with(Letter::F, 1, 2);
        assert_eq!(m.to_string(), "e_2*f_1*f_1*h_1");
        assert_eq!(m.weight(), (2, 3, 5));
        assert_eq!(m.indices_desc(Letter::F), vec![1, 1]);
        assert_eq!(Mono::one().to_string(), "1");
    }
}
