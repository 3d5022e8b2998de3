//! Frozen reference data and its parsers.
//!
//! Two kinds of golden files ship embedded in the crate (external copies may
//! be pointed at instead, e.g. by the command-line suite):
//!
//! * transfer matrices on boundary pairs, entries given as lists of monomial
//!   terms whose `q` exponent may be the symbol `"N"` (the source length);
//! * monomial bases of small truncated modules, given as strings like
//!   `"f_2*h_1"`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::poly::Poly;

pub const R1_MATRIX_JSON: &str = include_str!("../golden/r1_matrix.json");
pub const L1_MATRIX_JSON: &str = include_str!("../golden/l1_matrix.json");
pub const W1_TABLES_JSON: &str = include_str!("../golden/w1_tables.json");

/// A product of modes as index/multiplicity lists `(e, h, f)`, each sorted by
/// index. The empty word is the cyclic vector.
pub type ModeWord = (Vec<(i64, u32)>, Vec<(i64, u32)>, Vec<(i64, u32)>);

/// Boundary pair labels plus row-major matrix entries.
pub type LabeledMatrix = (Vec<(i64, i64)>, Vec<Vec<Poly>>);

/// Parse a matrix golden file. `n` substitutes the symbolic exponent `"N"`;
/// it is required only if the file uses the symbol.
pub fn parse_matrix(src: &str, n: Option<i64>) -> Result<LabeledMatrix> {
    let v: serde_json::Value = serde_json::from_str(src)?;
    let pairs = v["pairs"]
        .as_array()
        .ok_or_else(|| Error::Golden("missing 'pairs' array".into()))?
        .iter()
        .map(|p| {
            let xs = p.as_array().filter(|xs| xs.len() == 2);
            match xs {
                Some(xs) => Ok((
                    xs[0]
                        .as_i64()
                        .ok_or_else(|| Error::Golden("bad pair entry".into()))?,
                    xs[1]
                        .as_i64()
                        .ok_or_else(|| Error::Golden("bad pair entry".into()))?,
                )),
                None => Err(Error::Golden("pair is not a 2-element array".into())),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let rows_v = v["rows"]
        .as_array()
        .ok_or_else(|| Error::Golden("missing 'rows' array".into()))?;
    if rows_v.len() != pairs.len() {
        return Err(Error::Golden(format!(
            "{} rows for {} pairs",
            rows_v.len(),
            pairs.len()
        )));
    }
    let mut rows = Vec::with_capacity(rows_v.len());
    for row_v in rows_v {
        let cells = row_v
            .as_array()
            .ok_or_else(|| Error::Golden("row is not an array".into()))?;
        if cells.len() != pairs.len() {
            return Err(Error::Golden("row length differs from pair count".into()));
        }
        let mut row = Vec::with_capacity(cells.len());
        for cell in cells {
            let terms = cell
                .as_array()
                .ok_or_else(|| Error::Golden("entry is not a term list".into()))?;
            let mut p = Poly::zero();
            for t in terms {
                let c = t["c"]
                    .as_i64()
                    .ok_or_else(|| Error::Golden("term missing integer 'c'".into()))?;
                let qe = match &t["q"] {
                    serde_json::Value::Number(x) => x
                        .as_i64()
                        .ok_or_else(|| Error::Golden("non-integer q exponent".into()))?,
                    serde_json::Value::String(s) if s == "N" => n.ok_or_else(|| {
                        Error::Golden("symbolic exponent 'N' needs a length to instantiate".into())
                    })?,
                    other => {
                        return Err(Error::Golden(format!("bad q exponent {other}")));
                    }
                };
                let z1 = t["z1"]
                    .as_i64()
                    .ok_or_else(|| Error::Golden("term missing integer 'z1'".into()))?;
                let z2 = t["z2"]
                    .as_i64()
                    .ok_or_else(|| Error::Golden("term missing integer 'z2'".into()))?;
                p.add_term(&num_bigint::BigInt::from(c), (qe, z1, z2));
            }
            row.push(p);
        }
        rows.push(row);
    }
    Ok((pairs, rows))
}

/// Parse a basis word such as `"e_2*h_1"`, `"f_1"`, or `"1"`.
pub fn parse_mode_word(s: &str) -> Result<ModeWord> {
    let mut e: BTreeMap<i64, u32> = BTreeMap::new();
    let mut h: BTreeMap<i64, u32> = BTreeMap::new();
    let mut f: BTreeMap<i64, u32> = BTreeMap::new();
    let trimmed = s.trim();
    if trimmed != "1" {
        for factor in trimmed.split(['*', ' ']).filter(|t| !t.is_empty()) {
            let (name, idx) = factor
                .split_once('_')
                .ok_or_else(|| Error::Golden(format!("bad mode factor '{factor}'")))?;
            let idx: i64 = idx
                .parse()
                .map_err(|_| Error::Golden(format!("bad mode index in '{factor}'")))?;
            let map = match name {
                "e" => &mut e,
                "h" => &mut h,
                "f" => &mut f,
                _ => return Err(Error::Golden(format!("unknown mode letter '{name}'"))),
            };
            *map.entry(idx).or_default() += 1;
        }
    }
    let flat = |m: BTreeMap<i64, u32>| m.into_iter().collect::<Vec<_>>();
    Ok((flat(e), flat(h), flat(f)))
}

/// Golden monomial-basis tables for a family of truncated modules.
pub struct GoldenTables {
    pub level: i64,
    /// Boundary parameter pairs of the tabulated modules.
    pub modules: Vec<(i64, i64)>,
    /// `(M, N)` -> per-module basis sets.
    pub cells: BTreeMap<(usize, usize), Vec<BTreeSet<ModeWord>>>,
}

pub fn parse_tables(src: &str) -> Result<GoldenTables> {
    let v: serde_json::Value = serde_json::from_str(src)?;
    let level = v["level"]
        .as_i64()
        .ok_or_else(|| Error::Golden("missing integer 'level'".into()))?;
    let modules = v["modules"]
        .as_array()
        .ok_or_else(|| Error::Golden("missing 'modules' array".into()))?
        .iter()
        .map(|p| {
            let xs = p.as_array().filter(|xs| xs.len() == 2);
            xs.and_then(|xs| Some((xs[0].as_i64()?, xs[1].as_i64()?)))
                .ok_or_else(|| Error::Golden("bad module pair".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let cells_v = v["cells"]
        .as_object()
        .ok_or_else(|| Error::Golden("missing 'cells' object".into()))?;
    let mut cells = BTreeMap::new();
    for (key, val) in cells_v {
        let (m, n) = key
            .split_once(',')
            .ok_or_else(|| Error::Golden(format!("bad cell key '{key}'")))?;
        let m: usize = m
            .parse()
            .map_err(|_| Error::Golden(format!("bad cell key '{key}'")))?;
        let n: usize = n
            .parse()
            .map_err(|_| Error::Golden(format!("bad cell key '{key}'")))?;
        let per_module = val
            .as_array()
            .ok_or_else(|| Error::Golden("cell is not an array".into()))?;
        if per_module.len() != modules.len() {
            return Err(Error::Golden(format!(
                "cell {key} lists {} modules, expected {}",
                per_module.len(),
                modules.len()
            )));
        }
        let mut sets = Vec::with_capacity(per_module.len());
        for words in per_module {
            let words = words
                .as_array()
                .ok_or_else(|| Error::Golden("basis is not an array".into()))?;
            let mut set = BTreeSet::new();
            for w in words {
                let s = w
                    .as_str()
                    .ok_or_else(|| Error::Golden("basis word is not a string".into()))?;
                if !set.insert(parse_mode_word(s)?) {
                    return Err(Error::Golden(format!("duplicate basis word '{s}'")));
                }
            }
            sets.push(set);
        }
        cells.insert((m, n), sets);
    }
    Ok(GoldenTables {
        level,
        modules,
        cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_matrices_parse() {
        let (pairs, rows) = parse_matrix(R1_MATRIX_JSON, Some(4)).unwrap();
        assert_eq!(pairs, vec![(0, 0), (1, 0), (1, 1)]);
        assert_eq!(rows.len(), 3);
        assert!(parse_matrix(R1_MATRIX_JSON, None).is_err());
        let (_, l_rows) = parse_matrix(L1_MATRIX_JSON, None).unwrap();
        assert_eq!(l_rows[2][0], Poly::monomial((0, 0, 1)));
    }

    #[test]
    fn embedded_tables_parse() {
        let t = parse_tables(W1_TABLES_JSON).unwrap();
        assert_eq!(t.level, 1);
        assert_eq!(t.modules, vec![(1, 1), (1, 0), (0, 1)]);
        assert_eq!(t.cells.len(), 10);
        let c03 = &t.cells[&(0, 3)];
        assert_eq!(c03[0].len(), 4);
        assert!(c03[0].contains(&(vec![], vec![(1, 1)], vec![(2, 1)])));
    }

    #[test]
    fn mode_words_parse() {
        assert_eq!(parse_mode_word("1").unwrap(), (vec![], vec![], vec![]));
        assert_eq!(
            parse_mode_word("e_2*h_1*e_2").unwrap(),
            (vec![(2, 2)], vec![(1, 1)], vec![])
        );
        assert!(parse_mode_word("g_1").is_err());
    }
}
