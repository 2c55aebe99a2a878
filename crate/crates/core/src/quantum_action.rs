//! Chevalley generators acting on the level-2 Fock space, and the monomial
//! oracle that rebuilds canonical basis vectors as `f`-words applied to the
//! highest weight vector.
//!
//! On one row (a semi-infinite wedge `u_beta`), `f_j` moves the bead at `j`
//! to `j + 1`, `e_j` moves it back, and `t_j` scales by
//! `v^([j in beta] - [j+1 in beta])`. On `u_beta ⊗ u_gamma` the coproduct
//! gives
//!
//! ```text
//! f_j (b ⊗ g) = b ⊗ f_j g + f_j b ⊗ t_j g
//! e_j (b ⊗ g) = e_j b ⊗ g + t_j^-1 b ⊗ e_j g
//! t_j (b ⊗ g) = t_j b ⊗ t_j g
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{Bipartition, Row, Symbol};
use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::laurent::LaurentPoly;
use crate::scalar::Coefficient;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OperatorKind {
    E,
    F,
    T,
    TInverse,
    /// `f_j^(2) = f_j^2 / [2]`.
    FDividedSquare,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Operator {
    pub kind: OperatorKind,
    pub index: i64,
}

impl Operator {
    pub fn e(j: i64) -> Self {
        Self {
            kind: OperatorKind::E,
            index: j,
        }
    }
    pub fn f(j: i64) -> Self {
        Self {
            kind: OperatorKind::F,
            index: j,
        }
    }
    pub fn t(j: i64) -> Self {
        Self {
            kind: OperatorKind::T,
            index: j,
        }
    }
    pub fn t_inverse(j: i64) -> Self {
        Self {
            kind: OperatorKind::TInverse,
            index: j,
        }
    }
    pub fn f_divided_square(j: i64) -> Self {
        Self {
            kind: OperatorKind::FDividedSquare,
            index: j,
        }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = self.index;
        match self.kind {
            OperatorKind::E => write!(f, "e_{j}"),
            OperatorKind::F => write!(f, "f_{j}"),
            OperatorKind::T => write!(f, "t_{j}"),
            OperatorKind::TInverse => write!(f, "t_{j}^-1"),
            OperatorKind::FDividedSquare => write!(f, "f_{j}^(2)"),
        }
    }
}

fn contains(row: &[i64], floor: i64, x: i64) -> bool {
    x <= floor || row.binary_search(&x).is_ok()
}

fn replace(row: &[i64], from: i64, to: i64) -> Vec<i64> {
    let mut out: Vec<i64> = row
        .iter()
        .map(|&x| if x == from { to } else { x })
        .collect();
    out.sort_unstable();
    out
}

/// Exponent of `v` in `t_j u_row`.
fn t_exponent(row: &[i64], floor: i64, j: i64) -> i64 {
    i64::from(contains(row, floor, j)) - i64::from(contains(row, floor, j + 1))
}

/// Action on a single row given as the window entries above `floor`.
/// `None` means the row is annihilated; otherwise the new row and the
/// exponent `e` of the coefficient `v^e`.
fn act_row_exp(op: Operator, row: &[i64], floor: i64) -> Result<Option<(Vec<i64>, i64)>> {
    let j = op.index;
    if j <= floor {
        return Err(Error::WindowViolation { j, floor });
    }
    let has_j = contains(row, floor, j);
    let has_next = contains(row, floor, j + 1);
    Ok(match op.kind {
        OperatorKind::F => (has_j && !has_next).then(|| (replace(row, j, j + 1), 0)),
        OperatorKind::E => (has_next && !has_j).then(|| (replace(row, j + 1, j), 0)),
        OperatorKind::T => Some((row.to_vec(), t_exponent(row, floor, j))),
        OperatorKind::TInverse => Some((row.to_vec(), -t_exponent(row, floor, j))),
        OperatorKind::FDividedSquare => {
            return Err(Error::Malformed(
                "divided powers act on tensor products only".into(),
            ))
        }
    })
}

/// Action of `e_j`, `f_j`, `t_j` or `t_j^-1` on one row.
pub fn act_row<R: Coefficient>(
    op: Operator,
    row: &[i64],
    floor: i64,
) -> Result<Option<(Vec<i64>, LaurentPoly<R>)>> {
    Ok(act_row_exp(op, row, floor)?.map(|(row, e)| (row, LaurentPoly::v_pow(e))))
}

/// Action of a generator (not a divided power) on `u_S`.
fn act_generator<R: Coefficient>(op: Operator, s: &Symbol) -> Result<FockVector<R>> {
    let j = op.index;
    let floor = s.floor;
    let mut out = FockVector::zero();
    let mut push = |beta: Vec<i64>, gamma: Vec<i64>, e: i64| -> Result<()> {
        let sym = Symbol {
            beta,
            gamma,
            ..s.clone()
        };
        out.add_term(sym.to_bipartition(), &LaurentPoly::v_pow(e))
    };
    let (beta, gamma) = (&s.beta[..], &s.gamma[..]);
    match op.kind {
        OperatorKind::F => {
            if let Some((g, _)) = act_row_exp(op, gamma, floor)? {
                push(beta.to_vec(), g, 0)?;
            }
            if let Some((b, _)) = act_row_exp(op, beta, floor)? {
                push(b, gamma.to_vec(), t_exponent(gamma, floor, j))?;
            }
        }
        OperatorKind::E => {
            if let Some((b, _)) = act_row_exp(op, beta, floor)? {
                push(b, gamma.to_vec(), 0)?;
            }
            if let Some((g, _)) = act_row_exp(op, gamma, floor)? {
                push(beta.to_vec(), g, -t_exponent(beta, floor, j))?;
            }
        }
        OperatorKind::T | OperatorKind::TInverse => {
            let e = t_exponent(beta, floor, j) + t_exponent(gamma, floor, j);
            let e = if op.kind == OperatorKind::T { e } else { -e };
            push(beta.to_vec(), gamma.to_vec(), e)?;
        }
        OperatorKind::FDividedSquare => unreachable!("handled by act_in"),
    }
    Ok(out)
}

type SymbolOf<'a> = &'a dyn Fn(&Bipartition) -> Result<Symbol>;

fn act_in<R: Coefficient>(
    op: Operator,
    vec: &FockVector<R>,
    symbol_of: SymbolOf<'_>,
) -> Result<FockVector<R>> {
    if op.kind == OperatorKind::FDividedSquare {
        let f = Operator::f(op.index);
        let once = act_in(f, vec, symbol_of)?;
        let twice = act_in(f, &once, symbol_of)?;
        return twice.div_exact(&LaurentPoly::quantum_integer(2));
    }
    let mut out = FockVector::zero();
    for (bp, coeff) in vec.iter() {
        let s = symbol_of(bp)?;
        out = out.checked_add(&act_generator::<R>(op, &s)?.scale(coeff)?)?;
    }
    Ok(out)
}

/// Action on a Fock vector, drawing every support label through the fixed
/// window starting above `floor`.
pub fn act_fock_in_window<R: Coefficient>(
    op: Operator,
    vec: &FockVector<R>,
    floor: i64,
) -> Result<FockVector<R>> {
    if op.index <= floor {
        return Err(Error::WindowViolation { j: op.index, floor });
    }
    act_in(op, vec, &|bp| bp.to_symbol(bp.charge_k - floor))
}

/// Action on a Fock vector; each label is drawn through a window reaching
/// below the operator index.
pub fn act_fock<R: Coefficient>(op: Operator, vec: &FockVector<R>) -> Result<FockVector<R>> {
    act_in(op, vec, &|bp| {
        let window = bp.default_window().max(bp.charge_k - op.index + 2);
        bp.to_symbol(window)
    })
}

/// `f_{i_1}^{(r_1)} ... f_{i_s}^{(r_s)}`, stored outermost letter first and
/// serialized as `[[i, r], ...]`.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MonomialWord {
    pub letters: Vec<(i64, u8)>,
}

impl MonomialWord {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Principal degree `r_1 + ... + r_s`.
    pub fn degree(&self) -> u64 {
        self.letters.iter().map(|&(_, e)| u64::from(e)).sum()
    }

    /// Applies the word to `vec`, innermost letter first.
    pub fn apply<R: Coefficient>(&self, vec: &FockVector<R>, floor: i64) -> Result<FockVector<R>> {
        self.letters
            .iter()
            .rev()
            .try_fold(vec.clone(), |acc, &(j, e)| {
                let op = if e == 2 {
                    Operator::f_divided_square(j)
                } else {
                    Operator::f(j)
                };
                act_fock_in_window(op, &acc, floor)
            })
    }
}

impl fmt::Display for MonomialWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        let letters: Vec<String> = self
            .letters
            .iter()
            .map(|&(j, e)| {
                let index = if (0..10).contains(&j) {
                    j.to_string()
                } else {
                    format!("{{{j}}}")
                };
                if e == 2 {
                    format!("f_{index}^(2)")
                } else {
                    format!("f_{index}")
                }
            })
            .collect();
        f.write_str(&letters.join(" "))
    }
}

/// One step of the degree induction: the symbol `S'` one or two degrees
/// lower, and the letter `(j - 1, exponent)` with `b_S = f_{j-1}^{(e)} b_S'`.
fn reduction_step(s: &Symbol) -> Result<(Symbol, (i64, u8))> {
    let floor = s.floor;
    let qualifies = |row: &[i64]| {
        row.iter()
            .copied()
            .filter(|&i| !contains(row, floor, i - 1))
            .min()
    };
    let j = match (qualifies(&s.beta), qualifies(&s.gamma)) {
        (Some(a), Some(b)) => a.min(b),
        (Some(a), None) | (None, Some(a)) => a,
        (None, None) => return Err(Error::NoReductionFound),
    };
    let in_top = s.contains(Row::Top, j);
    let in_bottom = s.contains(Row::Bottom, j);
    let prev_top = s.contains(Row::Top, j - 1);
    let prev_bottom = s.contains(Row::Bottom, j - 1);

    let lower = |s: &Symbol, row: Row| {
        let mut t = s.clone();
        let r = t.row_mut(row);
        *r = replace(r, j, j - 1);
        t
    };
    match (in_top && in_bottom, prev_top, prev_bottom) {
        // j in both rows, j - 1 in neither
        (true, false, false) => Ok((lower(&lower(s, Row::Top), Row::Bottom), (j - 1, 2))),
        // j in both rows, j - 1 in exactly one: lower j in the other row
        (true, true, false) => Ok((lower(s, Row::Bottom), (j - 1, 1))),
        (true, false, true) => Ok((lower(s, Row::Top), (j - 1, 1))),
        (true, true, true) => Err(Error::NoReductionFound),
        // a single occurrence of j
        (false, ..) => {
            let row = if in_top { Row::Top } else { Row::Bottom };
            Ok((lower(s, row), (j - 1, 1)))
        }
    }
}

/// Recomputes `Phi(b_S)` by descending from `S` to the highest weight symbol
/// through the reduction steps and applying the resulting `f`-word to
/// `u_{S_0}`.
pub fn monomial_oracle<R: Coefficient>(s: &Symbol) -> Result<(FockVector<R>, MonomialWord)> {
    if !s.is_standard() {
        return Err(Error::NotStandard);
    }
    let s = s.with_floor(s.floor - 2)?;
    let floor = s.floor;
    let mut word = MonomialWord::default();
    let mut cur = s;
    while cur.degree() > 0 {
        let (prev, letter) = reduction_step(&cur)?;
        word.letters.push(letter);
        cur = prev;
    }
    let highest = FockVector::basis(cur.to_bipartition());
    let vec = word.apply(&highest, floor)?;
    Ok((vec, word))
}

/// True iff all support labels share one cell content.
pub fn weight_check<R: Coefficient>(vec: &FockVector<R>) -> bool {
    vec.is_weight_homogeneous()
}
