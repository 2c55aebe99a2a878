use canonical_symbols::combinatorics::{enumerate_standard, window_for_degree, ContentMultiset};
use canonical_symbols::cyclotomic::{rouquier_families, CyclotomicParams};
use canonical_symbols::hecke::constructible_d_literal;
use canonical_symbols::{
    basis_matrix, constructible_b, constructible_d, monomial_oracle, verify, Bipartition,
    Constructible, Rational,
};

use crate::emit;
use crate::{OutputFormat, TypeArg};

pub type CmdResult<T> = Result<T, String>;

pub enum WeightFilter {
    None,
    Of(String),
    Raw(String),
}

/// Parses `"j:c,j:c,..."` into the multiset with `c` copies of each `j`.
pub fn parse_weight_raw(raw: &str) -> CmdResult<ContentMultiset> {
    let mut counts = Vec::new();
    for item in raw.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (j, c) = item
            .split_once(':')
            .ok_or_else(|| format!("expected j:c in --weight-raw, got {item:?}"))?;
        let j: i64 = j
            .trim()
            .parse()
            .map_err(|_| format!("bad index {j:?} in --weight-raw"))?;
        let c: u32 = c
            .trim()
            .parse()
            .map_err(|_| format!("bad coefficient {c:?} in --weight-raw"))?;
        counts.push((j, c));
    }
    counts.sort_unstable();
    if counts.windows(2).any(|w| w[0].0 == w[1].0) {
        return Err("repeated index in --weight-raw".into());
    }
    Ok(counts
        .into_iter()
        .flat_map(|(j, c)| std::iter::repeat_n(j, c as usize))
        .collect())
}

pub fn canonical(
    m: u32,
    r: u32,
    k: i64,
    filter: &WeightFilter,
    show_word: bool,
    format: OutputFormat,
) -> CmdResult<String> {
    let full = basis_matrix::<i64>(m, k, r).map_err(|e| e.to_string())?;
    let matrix = match filter {
        WeightFilter::None => full,
        WeightFilter::Of(label) => {
            let bp = Bipartition::parse_label(label, k, r).map_err(|e| e.to_string())?;
            if bp.degree() != u64::from(m) {
                return Err(format!(
                    "--weight-of label {label} has degree {}, not {m}",
                    bp.degree()
                ));
            }
            full.restrict_to_content(&bp.cell_content())
        }
        WeightFilter::Raw(raw) => full.restrict_to_content(&parse_weight_raw(raw)?),
    };
    let words = if show_word {
        let words = matrix
            .columns
            .iter()
            .map(|c| monomial_oracle::<i64>(&c.to_symbol_default()).map(|(_, w)| w))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        Some(words)
    } else {
        None
    };
    Ok(emit::matrix(format, m, k, r, &matrix, words.as_deref()))
}

pub fn constructible(
    kind: TypeArg,
    m: u32,
    r: u32,
    k: i64,
    literal: bool,
    format: OutputFormat,
) -> CmdResult<String> {
    let records: Vec<(Option<Bipartition>, Constructible)> = match kind {
        TypeArg::B => {
            if literal {
                return Err("--literal applies to --type D only".into());
            }
            let symbols =
                enumerate_standard(m, k, r, window_for_degree(m, r)).map_err(|e| e.to_string())?;
            symbols
                .iter()
                .map(|s| constructible_b::<Rational>(s).map(|c| (Some(s.to_bipartition()), c)))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?
        }
        TypeArg::D => {
            if r != 0 {
                return Err(format!(
                    "flag conflict: --type D requires --r 0, got --r {r}"
                ));
            }
            let chars = if literal {
                constructible_d_literal::<Rational>(m, k)
            } else {
                constructible_d::<Rational>(m, k)
            };
            chars
                .map_err(|e| e.to_string())?
                .into_iter()
                .map(|c| (None, c))
                .collect()
        }
    };
    Ok(emit::characters(format, &records))
}

pub fn families(d: usize, charges: &[i64], m: u32, format: OutputFormat) -> CmdResult<String> {
    if charges.len() != d {
        return Err(format!(
            "arity mismatch: --d {d} needs {d} charges, got {}",
            charges.len()
        ));
    }
    let params = CyclotomicParams::new(d, m, charges.to_vec()).map_err(|e| e.to_string())?;
    Ok(emit::families(format, &rouquier_families(&params)))
}

/// Returns the report and whether every check passed.
pub fn verify(max_m: u32, max_r: u32, json: bool) -> CmdResult<(String, bool)> {
    let report = verify::run(max_m, max_r).map_err(|e| e.to_string())?;
    let text = if json {
        let mut s = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
        s.push('\n');
        s
    } else {
        format!("{report}\n")
    };
    Ok((text, report.passed()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_raw_parsing() {
        let c = parse_weight_raw("0:1, 1:2,-1:1").unwrap();
        assert_eq!(c.count(1), 2);
        assert_eq!(c.count(-1), 1);
        assert_eq!(c.total(), 4);
        assert!(parse_weight_raw("").unwrap().is_empty());
        assert!(parse_weight_raw("1").is_err());
        assert!(parse_weight_raw("1:2,1:1").is_err());
        assert!(parse_weight_raw("a:1").is_err());
    }
}
