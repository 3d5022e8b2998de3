//! Two path models counted by the level-`k` fusion numbers, and the maps
//! between them.
//!
//! **Inequality paths** ([`CPath`]) are tuples
//! `(a_{N-1}, …, a_0; b_{N-1}, …, b_1)` with entries in `0..=k` subject to
//! boundary, triangle and trapezoid inequalities (with the conventions
//! `b_{-1} = l`, `b_0 = 0`, `a_s = b_s = 0` for `s ≥ N`, and a limit
//! condition obtained by closing the trapezoid family at infinity).
//!
//! **Admissible-weight paths** ([`VPath`]) are tuples
//! `(α_1, …, α_N; β_1, …, β_{N-1})` with `α_1 = l` and every
//! `(α_i, β_i, α_{i+1})` admissible at level `k`.
//!
//! Both sets have cardinality `d^(N)_{k,l}` and are connected by an explicit
//! bijection ([`iota`]) that intertwines the concatenation maps
//! ([`concat_cpath`], [`concat_vpath`]). A level-`k` inequality path further
//! decomposes into `k` level-1 paths compatibly with concatenation
//! ([`level1_summands`], [`level1_decompose`]).

use crate::error::{Error, Result};
use crate::verlinde::{is_admissible, xyz};

/// A weight triple used in concatenation: `(l, l'', l')` concatenates a path
/// of weight `l'` into a path of weight `l`, absorbing `l''`.
pub type Triple = (i64, i64, i64);

/// An inequality path. `a` stores `a_0..a_{N-1}`, `b` stores `b_1..b_{N-1}`
/// (empty when `N ≤ 1`). The empty path (`N = 0`) is valid exactly when
/// `l = 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CPath {
    pub k: i64,
    pub l: i64,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

/// An admissible-weight path. `alpha` stores `α_1..α_N` (so `N ≥ 1`), `beta`
/// stores `β_1..β_{N-1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VPath {
    pub k: i64,
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
}

impl CPath {
    pub fn empty(k: i64) -> Self {
        CPath {
            k,
            l: 0,
            a: Vec::new(),
            b: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// `a_i` with the convention `a_i = 0` outside `0..N`.
    pub fn a_at(&self, i: i64) -> i64 {
        if i >= 0 && (i as usize) < self.a.len() {
            self.a[i as usize]
        } else {
            0
        }
    }

    /// `b_i` with the conventions `b_{-1} = l`, `b_0 = 0`, `b_i = 0` for `i ≥ N`.
    pub fn b_at(&self, i: i64) -> i64 {
        if i == -1 {
            self.l
        } else if i >= 1 && (i as usize) < self.a.len() {
            self.b[(i - 1) as usize]
        } else {
            0
        }
    }

    /// The left selector: `a_0` (0 for the empty path). Partitions the path
    /// set into the classes refined by the concatenation recursion.
    pub fn selector(&self) -> i64 {
        self.a_at(0)
    }

    /// The grading triple `(e, s1, s2)`:
    /// `e = Σ_{i≥1} i(a_i+b_i)`, `s1 = Σ_{i≥1} b_i`,
    /// `s2 = a_0 + Σ_{i≥1} (a_i+b_i)`.
    pub fn gradings(&self) -> (i64, i64, i64) {
        let n = self.a.len() as i64;
        let mut e = 0;
        let mut s1 = 0;
        let mut s2 = self.a_at(0);
        for i in 1..n {
            let t = self.a_at(i) + self.b_at(i);
            e += i * t;
            s1 += self.b_at(i);
            s2 += t;
        }
        (e, s1, s2)
    }

    pub fn validate(&self) -> Result<()> {
        let mut errs = Vec::new();
        let n = self.a.len() as i64;
        if self.k < 1 {
            errs.push(format!("level k={} must be >= 1", self.k));
        }
        if !(0..=self.k).contains(&self.l) {
            errs.push(format!("weight l={} outside 0..={}", self.l, self.k));
        }
        let expect_b = if self.a.is_empty() {
            0
        } else {
            self.a.len() - 1
        };
        if self.b.len() != expect_b {
            errs.push(format!(
                "b has length {}, expected {}",
                self.b.len(),
                expect_b
            ));
        }
        if !errs.is_empty() {
            return Err(Error::InvalidPath(errs));
        }
        for (i, &v) in self.a.iter().enumerate() {
            if !(0..=self.k).contains(&v) {
                errs.push(format!("a[{i}]={v} outside 0..={}", self.k));
            }
        }
        for (i, &v) in self.b.iter().enumerate() {
            if !(0..=self.k).contains(&v) {
                errs.push(format!("b[{}]={v} outside 0..={}", i + 1, self.k));
            }
        }
        if !errs.is_empty() {
            return Err(Error::InvalidPath(errs));
        }
        if n == 0 {
            if self.l != 0 {
                errs.push("empty path requires weight 0".into());
            }
            return if errs.is_empty() {
                Ok(())
            } else {
                Err(Error::InvalidPath(errs))
            };
        }
        if self.a[0] > self.l {
            errs.push(format!(
                "a_0={} exceeds boundary weight {}",
                self.a[0], self.l
            ));
        }
        // Triangle conditions (trivial beyond i = N-1 by the conventions).
        for i in 0..n {
            if self.a_at(i) + self.b_at(i + 1) + self.a_at(i + 1) > self.k {
                errs.push(format!("triangle a_{i}+b_{}+a_{} exceeds k", i + 1, i + 1));
            }
            if self.b_at(i) + self.a_at(i) + self.b_at(i + 1) > self.k {
                errs.push(format!("triangle b_{i}+a_{i}+b_{} exceeds k", i + 1));
            }
        }
        // Finite trapezoid conditions. For finite j > N the constraint is
        // weaker than at j = N, so j ranges over i+1 ..= N.
        for i in -1..n {
            for j in (i + 1)..=n {
                let bsum: i64 = (i..=j).map(|s| self.b_at(s)).sum();
                let asum: i64 = ((i + 1)..=(j - 2)).map(|s| self.a_at(s)).sum();
                if bsum > self.k + asum {
                    errs.push(format!("trapezoid ({i},{j}) violated"));
                }
            }
        }
        // Limit (j = ∞) family: the boundary value k cancels and the
        // condition becomes a tail comparison; i = N-1 forces b_{N-1} = 0.
        for i in -1..n {
            let bsum: i64 = (i..n).map(|s| self.b_at(s)).sum();
            let asum: i64 = ((i + 1)..n).map(|s| self.a_at(s)).sum();
            if bsum > asum {
                errs.push(format!("tail condition at i={i} violated"));
            }
        }
        if errs.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidPath(errs))
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "k": self.k,
            "l": self.l,
            "N": self.a.len(),
            "a": self.a,
            "b": self.b,
        })
    }
}

impl VPath {
    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        false // N ≥ 1 always
    }

    pub fn l(&self) -> i64 {
        self.alpha[0]
    }

    /// `α_i` for 1-based `i`, 0 beyond the end.
    pub fn alpha_at(&self, i: i64) -> i64 {
        if i >= 1 && (i as usize) <= self.alpha.len() {
            self.alpha[(i - 1) as usize]
        } else {
            0
        }
    }

    /// `β_i` for 1-based `i`, with `β_N = α_N` and 0 beyond.
    pub fn beta_at(&self, i: i64) -> i64 {
        let n = self.alpha.len() as i64;
        if (1..n).contains(&i) {
            self.beta[(i - 1) as usize]
        } else if i == n {
            self.alpha[(n - 1) as usize]
        } else {
            0
        }
    }

    pub fn validate(&self) -> Result<()> {
        let mut errs = Vec::new();
        if self.k < 1 {
            errs.push(format!("level k={} must be >= 1", self.k));
        }
        if self.alpha.is_empty() {
            errs.push("alpha must be nonempty".into());
            return Err(Error::InvalidPath(errs));
        }
        if self.beta.len() + 1 != self.alpha.len() {
            errs.push(format!(
                "beta has length {}, expected {}",
                self.beta.len(),
                self.alpha.len() - 1
            ));
            return Err(Error::InvalidPath(errs));
        }
        for (i, &v) in self.alpha.iter().enumerate() {
            if !(0..=self.k).contains(&v) {
                errs.push(format!("alpha[{}]={v} outside 0..={}", i + 1, self.k));
            }
        }
        for (i, &v) in self.beta.iter().enumerate() {
            if !(0..=self.k).contains(&v) {
                errs.push(format!("beta[{}]={v} outside 0..={}", i + 1, self.k));
            }
        }
        let n = self.alpha.len() as i64;
        for i in 1..n {
            let t = (self.alpha_at(i), self.beta_at(i), self.alpha_at(i + 1));
            if !is_admissible(self.k, t.0, t.1, t.2) {
                errs.push(format!(
                    "triple (α_{i}, β_{i}, α_{}) = {t:?} not admissible",
                    i + 1
                ));
            }
        }
        if errs.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidPath(errs))
        }
    }

    /// Reversal `(α_N..α_1; β_{N-1}..β_1)`; valid by symmetry of
    /// admissibility, and an involution.
    pub fn reversed(&self) -> VPath {
        let mut alpha = self.alpha.clone();
        let mut beta = self.beta.clone();
        alpha.reverse();
        beta.reverse();
        VPath {
            k: self.k,
            alpha,
            beta,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "k": self.k,
            "l": self.l(),
            "N": self.alpha.len(),
            "alpha": self.alpha,
            "beta": self.beta,
        })
    }
}

fn check_level_weight(k: i64, l: i64) -> Result<()> {
    if k < 1 {
        return Err(Error::BadParameter(format!("level k={k} must be >= 1")));
    }
    if !(0..=k).contains(&l) {
        return Err(Error::BadParameter(format!("weight l={l} outside 0..={k}")));
    }
    Ok(())
}

/// All inequality paths of length `n` and boundary weight `l`, sorted
/// lexicographically by `(a, b)`.
pub fn enumerate_cpaths(k: i64, l: i64, n: usize) -> Result<Vec<CPath>> {
    check_level_weight(k, l)?;
    if n == 0 {
        return Ok(if l == 0 {
            vec![CPath::empty(k)]
        } else {
            Vec::new()
        });
    }
    let mut out = Vec::new();
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n.saturating_sub(1));
    // Depth-first over a_0, then (b_i, a_i) pairs, pruning with the triangle
    // conditions and every trapezoid that is fully determined so far.
    fn place_a(k: i64, l: i64, n: usize, a: &mut Vec<i64>, b: &mut Vec<i64>, out: &mut Vec<CPath>) {
        if a.len() == n {
            let p = CPath {
                k,
                l,
                a: a.clone(),
                b: b.clone(),
            };
            if p.validate().is_ok() {
                out.push(p);
            }
            return;
        }
        let i = a.len() as i64; // index being placed
        let hi = if i == 0 { l.min(k) } else { k };
        for v in 0..=hi {
            a.push(v);
            let p = CPath {
                k,
                l,
                a: a.clone(),
                b: b.clone(),
            };
            // triangle a_{i-1} + b_i + a_i
            if i == 0 || p.a_at(i - 1) + p.b_at(i) + v <= k {
                place_b(k, l, n, a, b, out);
            }
            a.pop();
        }
    }
    fn place_b(k: i64, l: i64, n: usize, a: &mut Vec<i64>, b: &mut Vec<i64>, out: &mut Vec<CPath>) {
        if a.len() == n {
            place_a(k, l, n, a, b, out);
            return;
        }
        let j = a.len() as i64; // b_j placed before a_j
        for v in 0..=k {
            b.push(v);
            let p = CPath {
                k,
                l,
                a: a.clone(),
                b: b.clone(),
            };
            let tri = p.b_at(j - 1) + p.a_at(j - 1) + v <= k;
            let trap = (-1..j).all(|i| {
                let bsum: i64 = (i..=j).map(|s| p.b_at(s)).sum();
                let asum: i64 = ((i + 1)..=(j - 2)).map(|s| p.a_at(s)).sum();
                bsum <= k + asum
            });
            if tri && trap {
                place_a(k, l, n, a, b, out);
            }
            b.pop();
        }
    }
    // Interleave: a_0 first, then b_1, a_1, b_2, a_2, ...
    fn start(k: i64, l: i64, n: usize, a: &mut Vec<i64>, b: &mut Vec<i64>, out: &mut Vec<CPath>) {
        for v in 0..=l.min(k) {
            a.push(v);
            place_b(k, l, n, a, b, out);
            a.pop();
        }
    }
    start(k, l, n, &mut a, &mut b, &mut out);
    out.sort();
    out.dedup();
    Ok(out)
}

/// All admissible-weight paths of length `n ≥ 1` starting at `l`, sorted
/// lexicographically by `(alpha, beta)`.
pub fn enumerate_vpaths(k: i64, l: i64, n: usize) -> Result<Vec<VPath>> {
    check_level_weight(k, l)?;
    if n == 0 {
        return Err(Error::BadParameter(
            "admissible-weight paths need length >= 1".into(),
        ));
    }
    let mut out = Vec::new();
    let mut alpha = vec![l];
    let mut beta = Vec::new();
    fn extend(k: i64, n: usize, alpha: &mut Vec<i64>, beta: &mut Vec<i64>, out: &mut Vec<VPath>) {
        if alpha.len() == n {
            out.push(VPath {
                k,
                alpha: alpha.clone(),
                beta: beta.clone(),
            });
            return;
        }
        let cur = *alpha.last().unwrap();
        for be in 0..=k {
            for al in 0..=k {
                if is_admissible(k, cur, be, al) {
                    beta.push(be);
                    alpha.push(al);
                    extend(k, n, alpha, beta, out);
                    alpha.pop();
                    beta.pop();
                }
            }
        }
    }
    extend(k, n, &mut alpha, &mut beta, &mut out);
    out.sort();
    Ok(out)
}

/// Concatenate the admissible triple `(l, l'', l')` onto an inequality path
/// of weight `l'`: the appended column becomes the new low-index end
/// (`a_0^{new} = y`, `b_1^{new} = z - (a_0^{old} - x)^+`), existing entries
/// shift up by one.
pub fn concat_cpath(triple: Triple, p: &CPath) -> Result<CPath> {
    let (l, lpp, lp) = triple;
    let k = p.k;
    let Some((x, y, z)) = xyz(k, l, lpp, lp) else {
        return Err(Error::NotAdmissible {
            k,
            a: l,
            b: lpp,
            c: lp,
        });
    };
    if p.l != lp {
        return Err(Error::Mismatch(format!(
            "path weight {} vs triple third {}",
            p.l, lp
        )));
    }
    let a0_old = p.a_at(0);
    let b_new = z - (a0_old - x).max(0);
    let mut a = Vec::with_capacity(p.a.len() + 1);
    a.push(y);
    a.extend_from_slice(&p.a);
    let mut b = Vec::new();
    if !p.a.is_empty() {
        b.push(b_new);
        b.extend_from_slice(&p.b);
    } else {
        debug_assert_eq!(b_new, 0);
    }
    let out = CPath { k, l, a, b };
    out.validate()?;
    Ok(out)
}

/// Invert [`concat_cpath`]: split off the triple carried by the low-index
/// column of a nonempty path. Round-trips with concatenation.
pub fn peel_cpath(p: &CPath) -> Result<(Triple, CPath)> {
    if p.is_empty() {
        return Err(Error::BadParameter("cannot peel the empty path".into()));
    }
    p.validate()?;
    if p.len() == 1 {
        // The unique admissible triple onto the empty path is (l, l, 0).
        return Ok(((p.l, p.l, 0), CPath::empty(p.k)));
    }
    let a_new = p.a[0];
    let b_new = p.b[0];
    let a0_old = p.a[1];
    let x = p.l - a_new;
    let corr = (a0_old - x).max(0);
    let lp = p.l - a_new + b_new + corr;
    let lpp = a_new + b_new + corr;
    let shorter = CPath {
        k: p.k,
        l: lp,
        a: p.a[1..].to_vec(),
        b: p.b[1..].to_vec(),
    };
    shorter.validate()?;
    if !is_admissible(p.k, p.l, lpp, lp) {
        return Err(Error::NotAdmissible {
            k: p.k,
            a: p.l,
            b: lpp,
            c: lp,
        });
    }
    Ok(((p.l, lpp, lp), shorter))
}

/// Concatenate `(l, l'', l')` onto an admissible-weight path of weight `l'`:
/// prepend `α = l`, `β = l''`.
pub fn concat_vpath(triple: Triple, p: &VPath) -> Result<VPath> {
    let (l, lpp, lp) = triple;
    if !is_admissible(p.k, l, lpp, lp) {
        return Err(Error::NotAdmissible {
            k: p.k,
            a: l,
            b: lpp,
            c: lp,
        });
    }
    if p.l() != lp {
        return Err(Error::Mismatch(format!(
            "path weight {} vs triple third {}",
            p.l(),
            lp
        )));
    }
    let mut alpha = Vec::with_capacity(p.alpha.len() + 1);
    alpha.push(l);
    alpha.extend_from_slice(&p.alpha);
    let mut beta = Vec::with_capacity(p.beta.len() + 1);
    beta.push(lpp);
    beta.extend_from_slice(&p.beta);
    let out = VPath {
        k: p.k,
        alpha,
        beta,
    };
    out.validate()?;
    Ok(out)
}

/// The bijection from admissible-weight paths to inequality paths:
/// `a_{i-1} = y_i` and `b_i = z_i - (y_{i+1} - x_i)^+`, where
/// `(x_i, y_i, z_i)` are the half-sum coordinates of `(α_i, β_i, α_{i+1})`
/// (with the boundary conventions).
pub fn iota(v: &VPath) -> Result<CPath> {
    v.validate()?;
    let n = v.alpha.len() as i64;
    let coords = |i: i64| -> (i64, i64, i64) {
        xyz(v.k, v.alpha_at(i), v.beta_at(i), v.alpha_at(i + 1))
            .expect("validated path has admissible triples")
    };
    let mut a = Vec::with_capacity(n as usize);
    for i in 1..=n {
        a.push(coords(i).1);
    }
    let mut b = Vec::new();
    for i in 1..n {
        let (x_i, _, z_i) = coords(i);
        let y_next = coords(i + 1).1;
        b.push(z_i - (y_next - x_i).max(0));
    }
    let out = CPath {
        k: v.k,
        l: v.l(),
        a,
        b,
    };
    out.validate()?;
    Ok(out)
}

/// Inverse of [`iota`], by repeatedly peeling the low-index column.
pub fn iota_inverse(c: &CPath) -> Result<VPath> {
    c.validate()?;
    if c.is_empty() {
        return Err(Error::BadParameter(
            "no admissible-weight path of length 0".into(),
        ));
    }
    if c.len() == 1 {
        // a_0 = l is forced at length 1.
        let out = VPath {
            k: c.k,
            alpha: vec![c.l],
            beta: Vec::new(),
        };
        out.validate()?;
        return Ok(out);
    }
    let (triple, shorter) = peel_cpath(c)?;
    let inner = iota_inverse(&shorter)?;
    concat_vpath(triple, &inner)
}

/// Statistics of an admissible-weight path used by the graded characters:
/// gradings `(e, s1, s2)`, the left selector `i`, and the right boundary
/// data `(l', i')` (weight of the far end and selector of the reversal).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathStats {
    pub e: i64,
    pub s1: i64,
    pub s2: i64,
    pub left: i64,
    pub right_weight: i64,
    pub right_sel: i64,
}

pub fn vpath_stats(v: &VPath) -> Result<PathStats> {
    let c = iota(v)?;
    let (e, s1, s2) = c.gradings();
    let n = v.alpha.len() as i64;
    let right_weight = v.alpha_at(n);
    let right_sel = if n >= 2 {
        (v.alpha_at(n) + v.beta_at(n - 1) - v.alpha_at(n - 1)) / 2
    } else {
        v.l()
    };
    Ok(PathStats {
        e,
        s1,
        s2,
        left: c.selector(),
        right_weight,
        right_sel,
    })
}

/// Component-wise product of inequality paths: levels, weights and entries
/// add. All defining inequalities are linear, so validity is preserved.
pub fn multiply_cpaths(p1: &CPath, p2: &CPath) -> Result<CPath> {
    if p1.len() != p2.len() {
        return Err(Error::Mismatch(format!(
            "lengths {} vs {}",
            p1.len(),
            p2.len()
        )));
    }
    let out = CPath {
        k: p1.k + p2.k,
        l: p1.l + p2.l,
        a: p1.a.iter().zip(&p2.a).map(|(x, y)| x + y).collect(),
        b: p1.b.iter().zip(&p2.b).map(|(x, y)| x + y).collect(),
    };
    out.validate()?;
    Ok(out)
}

/// Component-wise product of admissible-weight paths.
pub fn multiply_vpaths(p1: &VPath, p2: &VPath) -> Result<VPath> {
    if p1.len() != p2.len() {
        return Err(Error::Mismatch(format!(
            "lengths {} vs {}",
            p1.len(),
            p2.len()
        )));
    }
    let out = VPath {
        k: p1.k + p2.k,
        alpha: p1.alpha.iter().zip(&p2.alpha).map(|(x, y)| x + y).collect(),
        beta: p1.beta.iter().zip(&p2.beta).map(|(x, y)| x + y).collect(),
    };
    out.validate()?;
    Ok(out)
}

/// Decompose a level-`k` inequality path into `k` level-1 paths of the same
/// length whose component-wise sum is the original. Deterministic.
pub fn level1_summands(p: &CPath) -> Result<Vec<CPath>> {
    p.validate()?;
    let k = p.k;
    match p.len() {
        0 => Ok(vec![CPath::empty(1); k as usize]),
        1 => {
            // a_0 = l is forced; the first l summands carry weight 1.
            Ok((0..k)
                .map(|j| {
                    let w = i64::from(j < p.l);
                    CPath {
                        k: 1,
                        l: w,
                        a: vec![w],
                        b: Vec::new(),
                    }
                })
                .collect())
        }
        _ => {
            let (triple, shorter) = peel_cpath(p)?;
            let subs = level1_summands(&shorter)?;
            let triples = match_level1_triples(k, triple, &subs)?;
            triples
                .iter()
                .zip(&subs)
                .map(|(t, s)| concat_cpath(*t, s))
                .collect()
        }
    }
}

/// Split an admissible level-`k` triple into `k` level-1 triples matched to
/// the given level-1 summands: the triple contributes `x` copies of
/// `(1,0,1)`, `y` of `(1,1,0)`, `z` of `(0,1,1)` and the rest `(0,0,0)`.
/// Copies needing a weight-1 (resp. weight-0) third component are paired
/// with weight-1 (resp. weight-0) summands; `(1,0,1)` prefers summands with
/// selector 1 so that appended `b`-entries add up correctly.
fn match_level1_triples(k: i64, triple: Triple, subs: &[CPath]) -> Result<Vec<Triple>> {
    let (l, lpp, lp) = triple;
    let Some((x, y, _z)) = xyz(k, l, lpp, lp) else {
        return Err(Error::NotAdmissible {
            k,
            a: l,
            b: lpp,
            c: lp,
        });
    };
    if subs.len() != k as usize {
        return Err(Error::Mismatch(format!(
            "{} summands for level {k}",
            subs.len()
        )));
    }
    let weight_sum: i64 = subs.iter().map(|s| s.l).sum();
    if weight_sum != lp {
        return Err(Error::Mismatch(format!(
            "summand weights sum to {weight_sum}, need {lp}"
        )));
    }
    let a0: i64 = subs.iter().map(|s| s.selector()).sum();
    let mut ones_sel: Vec<usize> = Vec::new(); // weight 1, selector 1
    let mut ones_zero: Vec<usize> = Vec::new(); // weight 1, selector 0
    let mut zeros: Vec<usize> = Vec::new();
    for (j, s) in subs.iter().enumerate() {
        match (s.l, s.selector()) {
            (1, 1) => ones_sel.push(j),
            (1, 0) => ones_zero.push(j),
            (0, 0) => zeros.push(j),
            other => {
                return Err(Error::Mismatch(format!(
                    "summand {j} has (weight, selector) = {other:?}, not level-1 shaped"
                )))
            }
        }
    }
    let mut out = vec![(0, 0, 0); k as usize];
    // Weight-0 summands: y copies of (1,1,0), the rest (0,0,0).
    for (t, &j) in zeros.iter().enumerate() {
        out[j] = if (t as i64) < y { (1, 1, 0) } else { (0, 0, 0) };
    }
    if a0 >= x {
        for (t, &j) in ones_sel.iter().enumerate() {
            out[j] = if (t as i64) < x { (1, 0, 1) } else { (0, 1, 1) };
        }
        for &j in &ones_zero {
            out[j] = (0, 1, 1);
        }
    } else {
        for &j in &ones_sel {
            out[j] = (1, 0, 1);
        }
        for (t, &j) in ones_zero.iter().enumerate() {
            out[j] = if (t as i64) < x - a0 {
                (1, 0, 1)
            } else {
                (0, 1, 1)
            };
        }
    }
    Ok(out)
}

/// Given a path of weight `l'` and an admissible triple `(l, l'', l')`,
/// produce matched pairs (level-1 triple, level-1 summand) such that
/// concatenating pairwise and summing reconstructs the concatenation of the
/// whole triple onto the whole path.
pub fn level1_decompose(p: &CPath, triple: Triple) -> Result<Vec<(Triple, CPath)>> {
    let subs = level1_summands(p)?;
    let triples = match_level1_triples(p.k, triple, &subs)?;
    Ok(triples.into_iter().zip(subs).collect())
}

/// Verify the concatenation recursion for paths of length `n`: every length-`n`
/// path arises exactly once as a concatenation onto a length-`n-1` path, with
/// the refined bookkeeping over (selector, source weight, source selector).
pub fn check_concat_recursion(k: i64, l: i64, n: usize) -> Result<()> {
    use std::collections::BTreeMap;
    let target = enumerate_cpaths(k, l, n)?;
    let mut seen: BTreeMap<CPath, (Triple, CPath)> = BTreeMap::new();
    let mut image_classes: BTreeMap<(i64, i64, i64), usize> = BTreeMap::new();
    for lpp in 0..=k {
        for lp in 0..=k {
            if !is_admissible(k, l, lpp, lp) {
                continue;
            }
            let y = xyz(k, l, lpp, lp).unwrap().1;
            for src in enumerate_cpaths(k, lp, n - 1)? {
                let img = concat_cpath((l, lpp, lp), &src)?;
                if img.selector() != y {
                    return Err(Error::Mismatch(format!(
                        "image selector {} differs from triple coordinate y={y}",
                        img.selector()
                    )));
                }
                if seen
                    .insert(img.clone(), ((l, lpp, lp), src.clone()))
                    .is_some()
                {
                    return Err(Error::Mismatch(format!("duplicate image {img:?}")));
                }
                *image_classes.entry((y, lp, src.selector())).or_default() += 1;
            }
        }
    }
    if seen.len() != target.len() {
        return Err(Error::Mismatch(format!(
            "recursion produced {} paths, target has {}",
            seen.len(),
            target.len()
        )));
    }
    let mut target_classes: BTreeMap<(i64, i64, i64), usize> = BTreeMap::new();
    for p in &target {
        let Some((triple, src)) = seen.get(p) else {
            return Err(Error::Mismatch(format!(
                "path {p:?} not produced by the recursion"
            )));
        };
        // Round-trip through the inverse.
        let (triple2, src2) = peel_cpath(p)?;
        if *triple != triple2 || *src != src2 {
            return Err(Error::Mismatch(format!(
                "peel of {p:?} disagrees with its producer"
            )));
        }
        *target_classes
            .entry((p.selector(), triple.2, src.selector()))
            .or_default() += 1;
    }
    if image_classes != target_classes {
        return Err(Error::Mismatch("refined class counts disagree".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verlinde::{admissible_triples, verlinde_number};

    #[test]
    fn frozen_length_three_level_one_paths() {
        let got = enumerate_cpaths(1, 0, 3).unwrap();
        let expect: Vec<(Vec<i64>, Vec<i64>)> = vec![
            (vec![0, 0, 0], vec![0, 0]),
            (vec![0, 0, 1], vec![0, 0]),
            (vec![0, 0, 1], vec![1, 0]),
            (vec![0, 1, 0], vec![0, 0]),
        ];
        let got_pairs: Vec<(Vec<i64>, Vec<i64>)> =
            got.iter().map(|p| (p.a.clone(), p.b.clone())).collect();
        assert_eq!(got_pairs, expect);
    }

    #[test]
    fn frozen_length_two_level_two_paths() {
        let got = enumerate_cpaths(2, 1, 2).unwrap();
        let got_pairs: Vec<(Vec<i64>, Vec<i64>)> =
            got.iter().map(|p| (p.a.clone(), p.b.clone())).collect();
        let expect: Vec<(Vec<i64>, Vec<i64>)> = vec![
            (vec![0, 1], vec![0]),
            (vec![0, 2], vec![0]),
            (vec![1, 0], vec![0]),
            (vec![1, 1], vec![0]),
        ];
        assert_eq!(got_pairs, expect);
    }

    #[test]
    fn counts_match_fusion_numbers() {
        for k in 1..=3 {
            for l in 0..=k {
                for n in 0..=4usize {
                    let c = enumerate_cpaths(k, l, n).unwrap().len();
                    let d = verlinde_number(k, l, n as u32).unwrap();
                    assert_eq!(num_bigint::BigInt::from(c), d, "k={k} l={l} N={n}");
                    if n >= 1 {
                        let v = enumerate_vpaths(k, l, n).unwrap().len();
                        assert_eq!(c, v, "k={k} l={l} N={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn bijection_round_trips() {
        for k in 1..=2 {
            for l in 0..=k {
                for n in 1..=4usize {
                    let vs = enumerate_vpaths(k, l, n).unwrap();
                    let cs = enumerate_cpaths(k, l, n).unwrap();
                    let mut images = Vec::new();
                    for v in &vs {
                        let c = iota(v).unwrap();
                        assert_eq!(iota_inverse(&c).unwrap(), *v);
                        images.push(c);
                    }
                    images.sort();
                    assert_eq!(images, cs, "bijection image k={k} l={l} N={n}");
                }
            }
        }
    }

    #[test]
    fn concat_peel_round_trip() {
        for k in 1..=2 {
            for (l, lpp, lp) in admissible_triples(k) {
                for n in 0..=3usize {
                    for p in enumerate_cpaths(k, lp, n).unwrap() {
                        let img = concat_cpath((l, lpp, lp), &p).unwrap();
                        let (t2, p2) = peel_cpath(&img).unwrap();
                        assert_eq!(t2, (l, lpp, lp));
                        assert_eq!(p2, p);
                    }
                }
            }
        }
    }

    #[test]
    fn recursion_partitions() {
        for k in 1..=2 {
            for l in 0..=k {
                for n in 1..=4usize {
                    check_concat_recursion(k, l, n).unwrap();
                }
            }
        }
    }

    #[test]
    fn level1_sums_reconstruct() {
        for k in 1..=3 {
            for l in 0..=k {
                for n in 0..=3usize {
                    for p in enumerate_cpaths(k, l, n).unwrap() {
                        let subs = level1_summands(&p).unwrap();
                        assert_eq!(subs.len(), k as usize);
                        let mut acc: Option<CPath> = None;
                        for s in &subs {
                            s.validate().unwrap();
                            acc = Some(match acc {
                                None => s.clone(),
                                Some(t) => multiply_cpaths(&t, s).unwrap(),
                            });
                        }
                        if k == 1 {
                            assert_eq!(subs[0], p);
                        }
                        assert_eq!(acc.unwrap(), p, "k={k} l={l} N={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn level1_concat_compatibility() {
        // Concatenating matched triples onto matched summands reconstructs
        // the concatenation of the whole triple.
        for k in 1..=3 {
            for (l, lpp, lp) in admissible_triples(k) {
                for n in 0..=3usize {
                    for p in enumerate_cpaths(k, lp, n).unwrap() {
                        let pairs = level1_decompose(&p, (l, lpp, lp)).unwrap();
                        let whole = concat_cpath((l, lpp, lp), &p).unwrap();
                        let mut acc: Option<CPath> = None;
                        let mut tsum = (0, 0, 0);
                        for (t, s) in &pairs {
                            let img = concat_cpath(*t, s).unwrap();
                            tsum = (tsum.0 + t.0, tsum.1 + t.1, tsum.2 + t.2);
                            acc = Some(match acc {
                                None => img,
                                Some(u) => multiply_cpaths(&u, &img).unwrap(),
                            });
                        }
                        assert_eq!(tsum, (l, lpp, lp));
                        assert_eq!(acc.unwrap(), whole);
                    }
                }
            }
        }
    }

    #[test]
    fn product_commutes_with_concatenation() {
        let k1 = 1;
        let k2 = 2;
        for (l1, lpp1, lp1) in admissible_triples(k1) {
            for (l2, lpp2, lp2) in admissible_triples(k2) {
                for p1 in enumerate_vpaths(k1, lp1, 2).unwrap() {
                    for p2 in enumerate_vpaths(k2, lp2, 2).unwrap() {
                        let lhs = multiply_vpaths(
                            &concat_vpath((l1, lpp1, lp1), &p1).unwrap(),
                            &concat_vpath((l2, lpp2, lp2), &p2).unwrap(),
                        )
                        .unwrap();
                        let rhs = concat_vpath(
                            (l1 + l2, lpp1 + lpp2, lp1 + lp2),
                            &multiply_vpaths(&p1, &p2).unwrap(),
                        )
                        .unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn gradings_of_length_one() {
        for k in 1..=3 {
            for l in 0..=k {
                let ps = enumerate_cpaths(k, l, 1).unwrap();
                assert_eq!(ps.len(), 1);
                assert_eq!(ps[0].gradings(), (0, 0, l));
                assert_eq!(ps[0].selector(), l);
            }
        }
    }

    #[test]
    fn reversal_is_involutive_and_valid() {
        for v in enumerate_vpaths(2, 1, 4).unwrap() {
            let r = v.reversed();
            r.validate().unwrap();
            assert_eq!(r.reversed(), v);
        }
    }
}
