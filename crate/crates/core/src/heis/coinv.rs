//! Coinvariant tables: the full weight grid of a truncated module, with
//! per-weight dimensions and surviving bases, computed at escalating caps
//! until the answer stops changing.

use num_bigint::BigInt;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::rc::Rc;

use super::algebra::{Family, Mono};
use super::presentation::ModuleParams;
use super::space::Engine;
use super::Caps;
use crate::poly::Poly;

/// Weights that can carry a nonzero cell of the `(m_trunc, n_trunc)`
/// coinvariant space: weights of monomials in the window modes
/// (`e_i` for `e_min <= i < M`, `f_j` for `f_min <= j < N`, `h_s` for
/// `h_min <= s < M + N`, each index with multiplicity at most `k`),
/// restricted by the zero-mode vanishing conditions on one-sided windows.
pub fn window_weights(params: &ModuleParams, m_trunc: i64, n_trunc: i64) -> Vec<(i64, i64, i64)> {
    if params.is_zero_module() {
        return Vec::new();
    }
    let fam = params.family;
    let (emin, fmin, hmin) = fam.thresholds();
    let k = params.k;
    // (index, per-letter weight shift) for every window mode.
    let mut modes: Vec<(i64, i64, i64)> = Vec::new();
    for i in emin..m_trunc {
        modes.push((1, 0, i));
    }
    for j in fmin..n_trunc {
        modes.push((0, 1, j));
    }
    for s in hmin..(m_trunc + n_trunc) {
        modes.push((1, 1, s));
    }
    let mut weights = BTreeSet::new();
    fn rec(
        modes: &[(i64, i64, i64)],
        k: i64,
        acc: (i64, i64, i64),
        out: &mut BTreeSet<(i64, i64, i64)>,
    ) {
        match modes.split_first() {
            None => {
                out.insert(acc);
            }
            Some((&(dm, dn, dd), rest)) => {
                for mult in 0..=k {
                    rec(
                        rest,
                        k,
                        (acc.0 + mult * dm, acc.1 + mult * dn, acc.2 + mult * dd),
                        out,
                    );
                }
            }
        }
    }
    rec(&modes, k, (0, 0, 0), &mut weights);
    // One-sided windows of the two-boundary family: the zero modes of the
    // absent side act freely on the quotient and kill the weights outside
    // the highest-weight cone.
    weights
        .into_iter()
        .filter(|&(m, n, _)| {
            if fam != Family::W {
                return true;
            }
            if m_trunc == 0 && n - 2 * m < k - params.l1 {
                return false;
            }
            if n_trunc == 0 && m - 2 * n < k - params.l2 {
                return false;
            }
            true
        })
        .collect()
}

/// Quotient dimension per weight; absent keys are zero.
pub type DimTable = BTreeMap<(i64, i64, i64), usize>;
/// Surviving monomial basis per weight.
pub type BasisTable = BTreeMap<(i64, i64, i64), Vec<Mono>>;

/// Graded dimension table of one coinvariant space.
#[derive(Clone, Debug)]
pub struct CoinvTable {
    pub params: ModuleParams,
    pub m_trunc: i64,
    pub n_trunc: i64,
    pub dims: DimTable,
    pub bases: BasisTable,
    /// Whether two consecutive cap levels produced identical dimensions.
    pub stabilized: bool,
    /// The caps of the final (reported) pass.
    pub caps: Caps,
}

impl CoinvTable {
    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    /// Character: sum of `dim * q^d z1^m z2^n` over the weight grid.
    pub fn character(&self) -> Poly {
        let mut p = Poly::zero();
        for (&(m, n, d), &dim) in &self.dims {
            if dim > 0 {
                p.add_term(&BigInt::from(dim), (d, m, n));
            }
        }
        p
    }

    pub fn dim_at(&self, w: (i64, i64, i64)) -> usize {
        self.dims.get(&w).copied().unwrap_or(0)
    }
}

fn compute_pass(
    engine: &mut Engine,
    params: &ModuleParams,
    m_trunc: i64,
    n_trunc: i64,
    weights: &[(i64, i64, i64)],
    caps: Caps,
) -> (DimTable, BasisTable) {
    let mut dims = BTreeMap::new();
    let mut bases = BTreeMap::new();
    for &w in weights {
        let (dim, basis) = engine.cell(params, Some((m_trunc, n_trunc)), caps, w);
        if dim > 0 {
            dims.insert(w, dim);
            bases.insert(w, basis);
        }
    }
    (dims, bases)
}

/// Build the table, escalating caps until two consecutive passes agree on
/// every dimension (or the round budget runs out).
pub fn coinvariant_table(
    engine: &mut Engine,
    params: &ModuleParams,
    m_trunc: i64,
    n_trunc: i64,
    caps: Caps,
) -> CoinvTable {
    let weights = window_weights(params, m_trunc, n_trunc);
    let mut level = caps.escalated(0);
    let (mut dims, mut bases) = compute_pass(engine, params, m_trunc, n_trunc, &weights, level);
    let mut stabilized = false;
    for round in 1..=caps.rounds {
        let next = caps.escalated(round);
        let (d2, b2) = compute_pass(engine, params, m_trunc, n_trunc, &weights, next);
        let agreed = d2 == dims;
        dims = d2;
        bases = b2;
        level = next;
        if agreed {
            stabilized = true;
            break;
        }
    }
    CoinvTable {
        params: *params,
        m_trunc,
        n_trunc,
        dims,
        bases,
        stabilized,
        caps: level,
    }
}

/// Shared front end: one mode engine plus a cache of finished tables.
pub struct Oracle {
    pub caps: Caps,
    pub engine: Engine,
    tables: HashMap<(ModuleParams, i64, i64), Rc<CoinvTable>>,
}

impl Oracle {
    pub fn new(caps: Caps) -> Self {
        Oracle {
            caps,
            engine: Engine::new(),
            tables: HashMap::new(),
        }
    }

    pub fn table(&mut self, params: &ModuleParams, m_trunc: i64, n_trunc: i64) -> Rc<CoinvTable> {
        let key = (*params, m_trunc, n_trunc);
        if let Some(t) = self.tables.get(&key) {
            return t.clone();
        }
        let t = Rc::new(coinvariant_table(
            &mut self.engine,
            params,
            m_trunc,
            n_trunc,
            self.caps,
        ));
        self.tables.insert(key, t.clone());
        t
    }
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new(Caps::default())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vacuum_cell_survival_follows_the_cone_cutoff() {
        // One-sided windows at level 1: the vacuum survives only when the
        // boundary labels allow a singular vector of that weight.
        let mut o = Oracle::default();
        let t = o.table(&ModuleParams::w_pair(1, 1, 0), 0, 1);
        assert_eq!(t.total_dim(), 1);
        let t = o.table(&ModuleParams::w_pair(1, 0, 1), 0, 1);
        assert_eq!(t.total_dim(), 0);
        let t = o.table(&ModuleParams::w_pair(1, 0, 1), 1, 0);
        assert_eq!(t.total_dim(), 1);
    }

    #[test]
    fn two_site_tables_at_level_one() {
        let mut o = Oracle::default();
        // W_1[1,1] at window (1,1): basis {1, h_1}.
        let t = o.table(&ModuleParams::w_pair(1, 1, 1), 1, 1);
        assert!(t.stabilized);
        assert_eq!(t.total_dim(), 2);
        assert_eq!(t.dim_at((0, 0, 0)), 1);
        assert_eq!(t.dim_at((1, 1, 1)), 1);
        // Character q z1 z2 + 1.
        let ch = t.character();
        assert_eq!(ch.coeff((0, 0, 0)), BigInt::from(1));
        assert_eq!(ch.coeff((1, 1, 1)), BigInt::from(1));
        assert_eq!(ch.num_terms(), 2);
    }

    #[test]
    fn zero_module_has_empty_table() {
        let mut o = Oracle::default();
        let p = ModuleParams::new(1, Family::W, 1, 1, -1);
        assert!(p.is_zero_module());
        let t = o.table(&p, 2, 2);
        assert_eq!(t.total_dim(), 0);
        assert!(t.stabilized);
    }
}
