//! Parameterized module presentations.
//!
//! A module is determined by a level `k`, a [`Family`] (which fixes the mode
//! thresholds), and three boundary parameters `(l1, l2, l3)` giving the
//! nilpotency orders of the threshold modes on the cyclic vector:
//! `e^(l1+1) v = f^(l2+1) v = h^(l3+1) v = 0`, each mode taken at its
//! family's threshold index.
//!
//! Parameters are clamped — `l1, l2` to at most `k`, and `l3` to at most
//! `min(l1, l2)` — and a parameter that is negative after clamping makes the
//! module zero. Convenient constructors cover the recurring shorthands: the
//! two-parameter `W` spaces (`l3 = l1 + l2 - k`), the plain pairs
//! (`l3 = 0`), and the modified ("bar") spaces (`l3 = min(l1, l2)`).

use super::algebra::{Family, Letter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModuleParams {
    pub k: i64,
    pub family: Family,
    pub l1: i64,
    pub l2: i64,
    pub l3: i64,
}

impl ModuleParams {
    /// Clamping constructor; negative inputs (or ones driven negative by a
    /// shorthand) survive as markers of the zero module.
    pub fn new(k: i64, family: Family, l1: i64, l2: i64, l3: i64) -> Self {
        let l1 = l1.min(k);
        let l2 = l2.min(k);
        let l3 = l3.min(l1).min(l2);
        ModuleParams {
            k,
            family,
            l1,
            l2,
            l3,
        }
    }

    pub fn is_zero_module(&self) -> bool {
        self.l1 < 0 || self.l2 < 0 || self.l3 < 0
    }

    /// Two-parameter `V` space: `l3 = 0`.
    pub fn v_pair(k: i64, l1: i64, l2: i64) -> Self {
        Self::new(k, Family::V, l1, l2, 0)
    }

    /// Two-parameter `U` space: `l3 = 0`.
    pub fn u_pair(k: i64, l1: i64, l2: i64) -> Self {
        Self::new(k, Family::U, l1, l2, 0)
    }

    /// Two-parameter `W` space: `l3 = l1 + l2 - k` (zero module when the sum
    /// is below the level).
    pub fn w_pair(k: i64, l1: i64, l2: i64) -> Self {
        Self::new(k, Family::W, l1, l2, l1.min(k) + l2.min(k) - k)
    }

    /// Modified `V` space: `l3 = min(l1, l2)`.
    pub fn v_bar(k: i64, l1: i64, l2: i64) -> Self {
        Self::new(k, Family::V, l1, l2, l1.min(l2))
    }

    /// Modified `U` space: `l3 = min(l1, l2)`.
    pub fn u_bar(k: i64, l1: i64, l2: i64) -> Self {
        Self::new(k, Family::U, l1, l2, l1.min(l2))
    }

    /// Modified `W` space: `l3 = min(l1, l2)`.
    pub fn w_bar(k: i64, l1: i64, l2: i64) -> Self {
        Self::new(k, Family::W, l1, l2, l1.min(l2))
    }

    /// The three boundary power relations `(letter, index, power)`: each
    /// threshold mode raised to one more than its parameter kills `v`.
    pub fn boundary_powers(&self) -> Vec<(Letter, i64, u32)> {
        let (emin, fmin, hmin) = self.family.thresholds();
        vec![
            (Letter::E, emin, (self.l1 + 1) as u32),
            (Letter::F, fmin, (self.l2 + 1) as u32),
            (Letter::H, hmin, (self.l3 + 1) as u32),
        ]
    }

    /// Stable identifier, e.g. `W_2[1,2,1]`.
    pub fn label(&self) -> String {
        format!(
            "{}_{}[{},{},{}]",
            self.family, self.k, self.l1, self.l2, self.l3
        )
    }
}

/// The current kinds whose Fourier modes are imposed as relations: products
/// of `k+1` like-letter currents, `e^(k+1-a) h^a` and `f^(k+1-a) h^a` for
/// `a <= k`, plus the pure `h^(k+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurrentKind {
    /// `e^(k+1-a) h^a`.
    EH(i64),
    /// `f^(k+1-a) h^a`.
    FH(i64),
    /// `h^(k+1)`.
    HPow,
}

impl CurrentKind {
    pub fn all(k: i64) -> Vec<CurrentKind> {
        let mut out = Vec::new();
        for a in 0..=k {
            out.push(CurrentKind::EH(a));
        }
        for a in 0..=k {
            out.push(CurrentKind::FH(a));
        }
        out.push(CurrentKind::HPow);
        out
    }

    /// Weight shift `(Δm, Δn)` of any Fourier mode of this current.
    pub fn weight_shift(self, k: i64) -> (i64, i64) {
        match self {
            CurrentKind::EH(a) => (k + 1, a),
            CurrentKind::FH(a) => (a, k + 1),
            CurrentKind::HPow => (k + 1, k + 1),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clamping() {
        let p = ModuleParams::new(2, Family::W, 5, 1, 4);
        assert_eq!((p.l1, p.l2, p.l3), (2, 1, 1));
        assert!(!p.is_zero_module());
        assert!(ModuleParams::w_pair(2, 1, 0).is_zero_module());
        let wp = ModuleParams::w_pair(1, 1, 1);
        assert_eq!((wp.l1, wp.l2, wp.l3), (1, 1, 1));
        assert_eq!(ModuleParams::w_pair(2, 3, 1).l3, 1);
        assert_eq!(ModuleParams::v_bar(2, 2, 1).l3, 1);
    }

    #[test]
    fn boundary_powers_follow_family() {
        let p = ModuleParams::new(2, Family::U, 1, 2, 0);
        assert_eq!(
            p.boundary_powers(),
            vec![(Letter::E, 0, 2), (Letter::F, 1, 3), (Letter::H, 0, 1)]
        );
    }

    #[test]
    fn current_kinds_enumerate() {
        let all = CurrentKind::all(2);
        assert_eq!(all.len(), 7);
        assert_eq!(CurrentKind::EH(1).weight_shift(2), (3, 1));
        assert_eq!(CurrentKind::FH(0).weight_shift(2), (0, 3));
        assert_eq!(CurrentKind::HPow.weight_shift(2), (3, 3));
    }
}
