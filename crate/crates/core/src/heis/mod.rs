//! Heisenberg-type mode algebra, presented modules, and coinvariant
//! spaces.
//!
//! The algebra has commuting families `e_i`, `f_j` and central `h_s` with
//! `[e_i, f_j] = h_{i+j}`. A module family fixes lower mode thresholds and
//! a cyclic vector killed by powers of the boundary modes; coinvariant
//! spaces divide further by the images of the modes at or above an upper
//! truncation. Everything is computed exactly over the integers.

pub mod algebra;
pub mod coinv;
pub mod presentation;
pub mod space;
pub mod verify;

pub use algebra::{apply_e, apply_f, apply_gen, apply_h, apply_word, Elem, Family, Letter, Mono};
pub use coinv::{coinvariant_table, window_weights, CoinvTable, Oracle};
pub use presentation::{CurrentKind, ModuleParams};
pub use space::{monomials_at_weight, Engine};

fn env_i64(name: &str, default: i64) -> i64 {
    std::env::var(name)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(default)
}

/// Generation caps for the relation stream. Relations are always a subset
/// of the true set, so dimensions computed under any caps are upper bounds;
/// escalation plus a stabilization check turns them into trusted values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// How far above the target degree current sources are scanned.
    pub aux_cap: i64,
    /// How far below the mode thresholds translate-word indices reach.
    pub aux_slack: i64,
    /// Increment of `aux_cap` per escalation round.
    pub step: i64,
    /// Escalation rounds attempted before giving up on stabilization.
    pub rounds: u32,
}

impl Caps {
    pub fn escalated(&self, round: u32) -> Caps {
        Caps {
            aux_cap: self.aux_cap + self.step * round as i64,
            aux_slack: self.aux_slack + round as i64,
            ..*self
        }
    }
}

impl Default for Caps {
    /// Defaults can be overridden through `COINV_AUX_CAP`,
    /// `COINV_AUX_SLACK` and `COINV_STAB_STEP`.
    fn default() -> Self {
        Caps {
            aux_cap: env_i64("COINV_AUX_CAP", 4),
            aux_slack: env_i64("COINV_AUX_SLACK", 2),
            step: env_i64("COINV_STAB_STEP", 2),
            rounds: 3,
        }
    }
}
