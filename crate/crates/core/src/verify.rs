//! Self-checks over all small cases: closed formula against the oracle,
//! structure of `C(S)`, the involution bijection, the two routes to
//! constructible characters, families, and type `D`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::canonical_basis::{basis_matrix, c_set, canonical_vector, psi_pairs};
use crate::combinatorics::{
    enumerate_standard, window_for_degree, Bipartition, ContentMultiset, Symbol,
};
use crate::cyclotomic::{rouquier_families, CyclotomicParams};
use crate::error::Result;
use crate::hecke::{
    admissible_involutions, constructible_b, constructible_components, constructible_d, families,
    involution_from_symbol, specialize, symbol_from_involution, z_data, CharacterCombination,
    CharacterLabel, ZData,
};
use crate::laurent::LaurentPoly;
use crate::quantum_action::monomial_oracle;

/// Failures kept per check; the count is always exact.
const MAX_RECORDED: usize = 20;

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
    pub examples: Vec<String>,
}

impl CheckResult {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            cases: 0,
            failures: 0,
            examples: vec![],
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < MAX_RECORDED {
                self.examples.push(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub max_m: u32,
    pub max_r: u32,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verify up to m = {}, r = {}", self.max_m, self.max_r)?;
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "{status} {} ({} cases, {} failures)",
                c.name, c.cases, c.failures
            )?;
            for e in &c.examples {
                writeln!(f, "    {e}")?;
            }
        }
        write!(
            f,
            "{}",
            if self.passed() {
                "all checks passed"
            } else {
                "verification failed"
            }
        )
    }
}

/// Standard symbols of degree `m` with `k = 0` for every `m <= max_m` and
/// `r <= max_r`.
fn standard_range(max_m: u32, max_r: u32) -> Result<Vec<(u32, u32, Vec<Symbol>)>> {
    let mut out = Vec::new();
    for r in 0..=max_r {
        for m in 0..=max_m {
            out.push((m, r, enumerate_standard(m, 0, r, window_for_degree(m, r))?));
        }
    }
    Ok(out)
}

fn binomial(n: usize, t: usize) -> u64 {
    (0..t).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

fn check_oracle(range: &[(u32, u32, Vec<Symbol>)]) -> Result<CheckResult> {
    let mut out = CheckResult::new("monomial oracle agrees with the closed formula");
    for (_, _, symbols) in range {
        for s in symbols {
            let formula = canonical_vector::<i64>(s)?;
            let (oracle, word) = monomial_oracle::<i64>(s)?;
            out.record(formula == oracle, || {
                format!("{s} via {word}: formula {formula}, oracle {oracle}")
            });
        }
    }
    Ok(out)
}

fn check_structure(range: &[(u32, u32, Vec<Symbol>)]) -> Result<CheckResult> {
    let mut out = CheckResult::new("C(S) has 2^p elements and unitriangular monomial coefficients");
    for (_, _, symbols) in range {
        for s in symbols {
            let p = psi_pairs(s)?.len();
            let cs = c_set(s)?;
            let vec = canonical_vector::<i64>(s)?;
            let mut by_n: BTreeMap<usize, u64> = BTreeMap::new();
            for (_, n) in &cs {
                *by_n.entry(*n).or_default() += 1;
            }
            let label = s.to_bipartition();
            let ok = cs.len() == 1 << p
                && (0..=p).all(|t| by_n.get(&t).copied().unwrap_or(0) == binomial(p, t))
                && vec.coeff(&label).is_one()
                && vec.iter().all(|(bp, c)| match c.as_unit_monomial() {
                    Some(t) => t <= p as i64 && (bp == &label || t > 0),
                    None => false,
                })
                && vec.is_weight_homogeneous();
            out.record(ok, || format!("{s}: p = {p}, vector {vec}"));
        }
    }
    Ok(out)
}

fn check_bijection(range: &[(u32, u32, Vec<Symbol>)]) -> Result<CheckResult> {
    let mut out = CheckResult::new("standard symbols and admissible involutions correspond");
    for (_, _, symbols) in range {
        let mut fibres: BTreeMap<ZData, u64> = BTreeMap::new();
        for s in symbols {
            let zd = z_data(s);
            let inv = involution_from_symbol(s)?;
            let back = symbol_from_involution(&zd, &inv);
            out.record(back.as_ref() == Ok(s), || {
                format!("{s} -> {inv:?} -> {back:?}")
            });
            *fibres.entry(zd).or_default() += 1;
        }
        for (zd, count) in fibres {
            let invs = admissible_involutions(&zd)?;
            let sizes_ok = invs.iter().all(|inv| {
                symbol_from_involution(&zd, inv)
                    .and_then(|s| c_set(&s))
                    .is_ok_and(|cs| cs.len() == 1 << ((zd.len() - zd.r as usize) / 2))
            });
            out.record(invs.len() as u64 == count && sizes_ok, || {
                format!(
                    "Z = {:?}: {count} standard symbols, {} involutions",
                    zd.z,
                    invs.len()
                )
            });
        }
    }
    Ok(out)
}

fn check_two_paths(range: &[(u32, u32, Vec<Symbol>)]) -> Result<CheckResult> {
    let mut out = CheckResult::new("constructible characters equal canonical vectors at v = 1");
    for (_, _, symbols) in range {
        for s in symbols {
            let direct: CharacterCombination<i64> = constructible_b(s)?;
            let via_v: CharacterCombination<i64> = specialize(&canonical_vector::<i64>(s)?)?;
            out.record(direct == via_v, || format!("{s}"));
        }
    }
    Ok(out)
}

fn as_partition<T: Ord + Clone>(blocks: impl IntoIterator<Item = Vec<T>>) -> BTreeSet<BTreeSet<T>> {
    blocks
        .into_iter()
        .map(|b| b.into_iter().collect())
        .collect()
}

fn check_families(max_m: u32, max_r: u32) -> Result<CheckResult> {
    let mut out =
        CheckResult::new("content families match constructible components and Rouquier families");
    for r in 0..=max_r {
        for m in 0..=max_m {
            let by_content = as_partition(families(m, 0, r).into_iter().map(|f| f.members));
            let by_graph = as_partition(constructible_components(m, 0, r)?);
            let params = CyclotomicParams::new(2, m, vec![i64::from(r), 0])?;
            let by_rouquier = as_partition(rouquier_families(&params).into_iter().map(|f| {
                f.members
                    .into_iter()
                    .map(|dp| {
                        Bipartition::new(dp.components[0].clone(), dp.components[1].clone(), 0, r)
                    })
                    .collect::<Vec<_>>()
            }));
            out.record(by_content == by_graph && by_content == by_rouquier, || {
                format!(
                    "m = {m}, r = {r}: {} content blocks, {} components, {} Rouquier blocks",
                    by_content.len(),
                    by_graph.len(),
                    by_rouquier.len()
                )
            });
        }
    }
    Ok(out)
}

fn check_type_d(max_m: u32) -> Result<CheckResult> {
    let mut out = CheckResult::new("type D constructible characters");
    for m in 0..=max_m {
        let chars: Vec<CharacterCombination<i64>> = constructible_d(m, 0)?;
        let content_of = |l: &CharacterLabel| l.bipartition.cell_content();
        let mut covered: BTreeMap<CharacterLabel, u64> = BTreeMap::new();
        for c in &chars {
            for l in c.support() {
                *covered.entry(l.clone()).or_default() += 1;
            }
            let contents: BTreeSet<ContentMultiset> = c.support().map(content_of).collect();
            out.record(
                contents.len() == 1 && c.terms.values().all(|&q| q == 1),
                || {
                    format!(
                        "m = {m}: character {:?} spans several families",
                        c.terms.keys().collect::<Vec<_>>()
                    )
                },
            );
        }
        for s in enumerate_standard(m, 0, 0, window_for_degree(m, 0))? {
            let bp = s.to_bipartition();
            let cs = c_set(&s)?;
            if s.beta == s.gamma {
                let tagged = covered
                    .keys()
                    .filter(|l| l.bipartition == bp && l.tag.is_some())
                    .count();
                out.record(cs.len() == 1 && cs[0].0 == s && tagged == 2, || {
                    format!("{s}: |C(S)| = {}, {tagged} tagged characters", cs.len())
                });
                continue;
            }
            let p = psi_pairs(&s)?.len();
            let classes: BTreeSet<CharacterLabel> = cs
                .iter()
                .map(|(x, _)| CharacterLabel::d_class(&x.to_bipartition()))
                .collect();
            let m_z = z_data(&s).len();
            let listed = chars
                .iter()
                .any(|c| c.support().cloned().collect::<BTreeSet<_>>() == classes);
            out.record(
                cs.len() == 1 << p && m_z == 2 * p && classes.len() == 1 << (p - 1) && listed,
                || {
                    format!(
                        "{s}: p = {p}, |Z| = {m_z}, {} unordered classes",
                        classes.len()
                    )
                },
            );
        }
        // every unordered label, tagged or not, is covered
        for bp in crate::combinatorics::bipartitions(m, 0, 0) {
            let label = CharacterLabel::d_class(&bp);
            let ok = if bp.top == bp.bottom {
                covered
                    .keys()
                    .filter(|l| l.bipartition == bp && l.tag.is_some())
                    .count()
                    == 2
            } else {
                covered.contains_key(&label)
            };
            out.record(ok, || format!("label {bp} not covered"));
        }
    }
    Ok(out)
}

/// Exponents of the displayed weight block of degree 6, `r = 1`; `None`
/// is a zero entry. Rows and columns are in basis order.
pub const GOLDEN_ROWS: [&str; 10] = [
    "((0,0,0),(3,3))",
    "((0,0,1),(2,3))",
    "((0,0,2),(2,2))",
    "((0,1,1),(1,3))",
    "((0,1,2),(1,2))",
    "((1,1,1),(0,3))",
    "((0,2,2),(1,1))",
    "((1,1,2),(0,2))",
    "((1,2,2),(0,1))",
    "((2,2,2),(0,0))",
];

pub const GOLDEN_ENTRIES: [[Option<i64>; 5]; 10] = [
    [Some(0), None, None, None, None],
    [Some(1), Some(0), None, None, None],
    [None, Some(1), Some(0), None, None],
    [None, Some(1), None, Some(0), None],
    [Some(1), Some(2), Some(1), Some(1), Some(0)],
    [None, None, None, Some(1), None],
    [Some(2), None, None, None, Some(1)],
    [None, None, None, Some(2), Some(1)],
    [None, None, Some(1), None, Some(2)],
    [None, None, Some(2), None, None],
];

fn check_golden_block() -> Result<CheckResult> {
    let mut out = CheckResult::new("weight block of degree 6, r = 1");
    let rows = GOLDEN_ROWS
        .iter()
        .map(|l| Bipartition::parse_label(l, 0, 1))
        .collect::<Result<Vec<_>>>()?;
    let block = basis_matrix::<i64>(6, 0, 1)?.restrict_to_content(&rows[4].cell_content());
    out.record(block.rows == rows && block.columns[..] == rows[..5], || {
        format!(
            "labels differ: rows {:?}, columns {:?}",
            block
                .rows
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>(),
            block
                .columns
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
        )
    });
    if block.rows.len() == 10 && block.columns.len() == 5 {
        for (i, row) in GOLDEN_ENTRIES.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                let want = e.map_or_else(LaurentPoly::zero, LaurentPoly::v_pow);
                let got = &block.entries[i][j];
                out.record(got == &want, || {
                    format!("entry ({}, {}): got {got}, want {want}", i + 1, j + 1)
                });
            }
        }
    }
    Ok(out)
}

/// Runs every check up to degree `max_m` and `r <= max_r`. The golden
/// weight block is included once `max_m >= 6` and `max_r >= 1`.
pub fn run(max_m: u32, max_r: u32) -> Result<VerifyReport> {
    let range = standard_range(max_m, max_r)?;
    let mut checks = vec![
        check_oracle(&range)?,
        check_structure(&range)?,
        check_bijection(&range)?,
        check_two_paths(&range)?,
        check_families(max_m, max_r)?,
        check_type_d(max_m)?,
    ];
    if max_m >= 6 && max_r >= 1 {
        checks.push(check_golden_block()?);
    }
    Ok(VerifyReport {
        max_m,
        max_r,
        checks,
    })
}
