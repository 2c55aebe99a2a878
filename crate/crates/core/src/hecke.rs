//! Constructible characters of Iwahori–Hecke algebras of types `B_m` (with
//! parameters `q^r, q, ..., q`) and `D_m`, via Lusztig's symbols.
//!
//! A symbol `S` gives `Z = (beta ∪ gamma) - (beta ∩ gamma)`. An involution
//! of `Z` with `r` fixed points is *r-admissible* when it can be peeled off
//! one orbit of two consecutive remaining elements at a time. Each
//! admissible involution `iota` yields the constructible character
//! `sum chi_S` over the symbols splitting every orbit of `iota` across the
//! two rows; standard symbols and admissible involutions are in bijection
//! through the pairs of the symbol.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::canonical_basis::{c_set, psi_pairs};
use crate::combinatorics::{bipartitions, window_for_degree, Bipartition, ContentMultiset, Symbol};
use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::scalar::Coefficient;

/// `Z` together with `beta ∩ gamma` and the window it was read from.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ZData {
    pub z: Vec<i64>,
    pub common: Vec<i64>,
    pub floor: i64,
    pub charge_k: i64,
    pub r: u32,
}

impl ZData {
    pub fn len(&self) -> usize {
        self.z.len()
    }

    pub fn is_empty(&self) -> bool {
        self.z.is_empty()
    }

    fn check_parity(&self) -> Result<()> {
        let r = self.r as usize;
        if self.z.len() < r || !(self.z.len() - r).is_multiple_of(2) {
            return Err(Error::ParityViolation {
                len: self.z.len(),
                r: self.r,
            });
        }
        Ok(())
    }
}

pub fn z_data(s: &Symbol) -> ZData {
    let beta: BTreeSet<i64> = s.beta.iter().copied().collect();
    let gamma: BTreeSet<i64> = s.gamma.iter().copied().collect();
    ZData {
        z: beta.symmetric_difference(&gamma).copied().collect(),
        common: beta.intersection(&gamma).copied().collect(),
        floor: s.floor,
        charge_k: s.charge_k,
        r: s.r,
    }
}

/// An involution of `Z`: two-element orbits `(smaller, larger)` plus fixed
/// points, both sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct AdmissibleInvolution {
    pub orbits: Vec<(i64, i64)>,
    pub fixed: Vec<i64>,
}

impl AdmissibleInvolution {
    fn normalized(mut orbits: Vec<(i64, i64)>, mut fixed: Vec<i64>) -> Self {
        for o in &mut orbits {
            if o.0 > o.1 {
                *o = (o.1, o.0);
            }
        }
        orbits.sort_unstable();
        fixed.sort_unstable();
        Self { orbits, fixed }
    }

    /// The all-fixed involution.
    pub fn identity(z: &[i64]) -> Self {
        Self {
            orbits: vec![],
            fixed: z.to_vec(),
        }
    }
}

/// Whether `inv` is an r-admissible involution of `zd.z`.
pub fn is_admissible(zd: &ZData, inv: &AdmissibleInvolution) -> bool {
    let mut elems: Vec<i64> = inv
        .orbits
        .iter()
        .flat_map(|&(a, b)| [a, b])
        .chain(inv.fixed.iter().copied())
        .collect();
    elems.sort_unstable();
    if elems != zd.z || inv.fixed.len() != zd.r as usize || inv.orbits.iter().any(|&(a, b)| a >= b)
    {
        return false;
    }
    // Peeling any available consecutive orbit never blocks a later peel.
    let mut remaining = zd.z.clone();
    let mut orbits: BTreeSet<(i64, i64)> = inv.orbits.iter().copied().collect();
    while !orbits.is_empty() {
        let Some(pos) = remaining
            .windows(2)
            .position(|w| orbits.contains(&(w[0], w[1])))
        else {
            return false;
        };
        orbits.remove(&(remaining[pos], remaining[pos + 1]));
        remaining.drain(pos..pos + 2);
    }
    true
}

/// All r-admissible involutions of `Z`, generated by the peeling recursion.
pub fn admissible_involutions(zd: &ZData) -> Result<Vec<AdmissibleInvolution>> {
    zd.check_parity()?;
    let n = zd.z.len();
    if n > 63 {
        return Err(Error::Malformed(format!("|Z| = {n} is too large")));
    }
    type Matchings = Vec<Vec<(usize, usize)>>;
    fn go(mask: u64, r: usize, memo: &mut HashMap<u64, Matchings>) -> Matchings {
        if let Some(hit) = memo.get(&mask) {
            return hit.clone();
        }
        let remaining: Vec<usize> = (0..64).filter(|i| mask >> i & 1 == 1).collect();
        let mut out = BTreeSet::new();
        if remaining.len() == r {
            out.insert(vec![]);
        } else {
            for w in remaining.windows(2) {
                let (a, b) = (w[0], w[1]);
                for mut sub in go(mask & !(1 << a) & !(1 << b), r, memo) {
                    sub.push((a, b));
                    sub.sort_unstable();
                    out.insert(sub);
                }
            }
        }
        let out: Matchings = out.into_iter().collect();
        memo.insert(mask, out.clone());
        out
    }
    let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let mut memo = HashMap::new();
    Ok(go(full, zd.r as usize, &mut memo)
        .into_iter()
        .map(|m| {
            let used: BTreeSet<usize> = m.iter().flat_map(|&(a, b)| [a, b]).collect();
            let orbits = m.iter().map(|&(a, b)| (zd.z[a], zd.z[b])).collect();
            let fixed = (0..n)
                .filter(|i| !used.contains(i))
                .map(|i| zd.z[i])
                .collect();
            AdmissibleInvolution::normalized(orbits, fixed)
        })
        .collect())
}

/// The involution whose nontrivial orbits are the pairs of `s`.
pub fn involution_from_symbol(s: &Symbol) -> Result<AdmissibleInvolution> {
    let pairs = psi_pairs(s)?;
    let zd = z_data(s);
    let paired: BTreeSet<i64> = pairs.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    let fixed =
        zd.z.iter()
            .copied()
            .filter(|x| !paired.contains(x))
            .collect();
    let orbits = pairs.pairs.iter().map(|&(j, psi)| (psi, j)).collect();
    Ok(AdmissibleInvolution::normalized(orbits, fixed))
}

/// The standard symbol with `Z`-data `zd` whose pairs are the orbits of
/// `inv`: the smaller element of each orbit and every fixed point go to the
/// top row, the larger element of each orbit to the bottom row.
pub fn symbol_from_involution(zd: &ZData, inv: &AdmissibleInvolution) -> Result<Symbol> {
    if !is_admissible(zd, inv) {
        return Err(Error::InadmissibleInvolution);
    }
    let mut beta: Vec<i64> = zd.common.clone();
    let mut gamma: Vec<i64> = zd.common.clone();
    for &(a, b) in &inv.orbits {
        beta.push(a);
        gamma.push(b);
    }
    beta.extend(&inv.fixed);
    beta.sort_unstable();
    gamma.sort_unstable();
    Symbol::new(beta, gamma, zd.floor, zd.charge_k, zd.r)
}

/// Symbols with `Z`-data `zd` putting one element of every orbit of `inv`
/// in each row (fixed points in the top row).
pub fn orbit_splittings(zd: &ZData, inv: &AdmissibleInvolution) -> Result<Vec<Symbol>> {
    let p = inv.orbits.len();
    (0u64..1 << p)
        .map(|mask| {
            let mut beta = zd.common.clone();
            let mut gamma = zd.common.clone();
            beta.extend(&inv.fixed);
            for (t, &(a, b)) in inv.orbits.iter().enumerate() {
                let (up, down) = if mask >> t & 1 == 0 { (a, b) } else { (b, a) };
                beta.push(up);
                gamma.push(down);
            }
            beta.sort_unstable();
            gamma.sort_unstable();
            Symbol::new(beta, gamma, zd.floor, zd.charge_k, zd.r)
        })
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum WeylType {
    B,
    D,
}

/// The two characters labelled by a degenerate unordered bipartition
/// `{lambda, lambda}` in type `D`. The tags carry no further meaning.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum DTag {
    I,
    II,
}

/// An irreducible character label: a bipartition for type `B`; for type
/// `D` an unordered bipartition (stored with `top <= bottom`) and a tag
/// when both halves agree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CharacterLabel {
    pub bipartition: Bipartition,
    pub tag: Option<DTag>,
}

impl CharacterLabel {
    pub fn b(bp: Bipartition) -> Self {
        Self {
            bipartition: bp,
            tag: None,
        }
    }

    /// The unordered class `{lambda, mu}` of an `r = 0` bipartition.
    pub fn d_class(bp: &Bipartition) -> Self {
        let bp = match bp.sharp() {
            Some(sharp) if sharp.top < bp.top => sharp,
            _ => bp.clone(),
        };
        Self {
            bipartition: bp,
            tag: None,
        }
    }
}

/// A character `sum c_chi chi` with coefficients in `Q`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharacterCombination<Q> {
    pub kind: WeylType,
    pub terms: BTreeMap<CharacterLabel, Q>,
}

impl<Q: Coefficient> CharacterCombination<Q> {
    pub fn new(kind: WeylType) -> Self {
        Self {
            kind,
            terms: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, label: CharacterLabel, c: Q) -> Result<()> {
        let entry = self.terms.entry(label).or_insert_with(Q::zero);
        *entry = entry.checked_add(&c).ok_or(Error::Overflow)?;
        Ok(())
    }

    pub fn support(&self) -> impl Iterator<Item = &CharacterLabel> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `psi_S = sum_{Sigma in C(Z~, iota)} chi_Sigma` for the involution `iota`
/// attached to the standard symbol `s`.
pub fn constructible_b<Q: Coefficient>(s: &Symbol) -> Result<CharacterCombination<Q>> {
    let inv = involution_from_symbol(s)?;
    let mut out = CharacterCombination::new(WeylType::B);
    for sigma in orbit_splittings(&z_data(s), &inv)? {
        out.add(CharacterLabel::b(sigma.to_bipartition()), Q::one())?;
    }
    Ok(out)
}

/// Type-`B` character read off a Fock vector at `v = 1`.
pub fn specialize<R: Coefficient, Q: Coefficient>(
    vec: &FockVector<R>,
) -> Result<CharacterCombination<Q>> {
    let mut out = CharacterCombination::new(WeylType::B);
    for (bp, c) in vec.specialize()? {
        let c = c.to_i64().and_then(Q::from_i64).ok_or(Error::Overflow)?;
        out.add(CharacterLabel::b(bp), c)?;
    }
    Ok(out)
}

/// Constructible characters of `W(D_m)`.
///
/// Each standard `S != S#` gives `1/2 sum_{Sigma in C(S)} chi_Sigma`; since
/// `chi_Sigma = chi_{Sigma#}` and `C(S)` is `#`-stable, every unordered class
/// gets coefficient one. Each `S = S#` gives the two tagged characters.
pub fn constructible_d<Q: Coefficient>(
    m: u32,
    charge_k: i64,
) -> Result<Vec<CharacterCombination<Q>>> {
    let two = Q::from_i64(2).ok_or(Error::Overflow)?;
    let mut out: Vec<CharacterCombination<Q>> = Vec::new();
    let mut push = |c: CharacterCombination<Q>| {
        if !out.contains(&c) {
            out.push(c);
        }
    };
    for bp in bipartitions(m, charge_k, 0) {
        let s = bp.to_symbol(window_for_degree(m, 0))?;
        if !s.is_standard() {
            continue;
        }
        if s.beta == s.gamma {
            for tag in [DTag::I, DTag::II] {
                let mut c = CharacterCombination::new(WeylType::D);
                c.add(
                    CharacterLabel {
                        bipartition: bp.clone(),
                        tag: Some(tag),
                    },
                    Q::one(),
                )?;
                push(c);
            }
            continue;
        }
        let mut counts: BTreeMap<CharacterLabel, i64> = BTreeMap::new();
        for (sigma, _) in c_set(&s)? {
            *counts
                .entry(CharacterLabel::d_class(&sigma.to_bipartition()))
                .or_default() += 1;
        }
        let mut c = CharacterCombination::new(WeylType::D);
        for (label, n) in counts {
            let n = Q::from_i64(n).ok_or(Error::Overflow)?;
            c.add(
                label,
                n.checked_exact_div(&two).ok_or(Error::InexactDivision)?,
            )?;
        }
        push(c);
    }
    Ok(out)
}

/// Type-`D` characters in the literal form `1/2 sum chi_Sigma` over ordered
/// symbols; the tagged characters are returned unchanged.
pub fn constructible_d_literal<Q: Coefficient>(
    m: u32,
    charge_k: i64,
) -> Result<Vec<CharacterCombination<Q>>> {
    let half = Q::one()
        .checked_exact_div(&Q::from_i64(2).ok_or(Error::Overflow)?)
        .ok_or(Error::InexactDivision)?;
    let mut out = Vec::new();
    for c in constructible_d::<Q>(m, charge_k)? {
        if c.terms.keys().any(|l| l.tag.is_some()) {
            out.push(c);
            continue;
        }
        let mut lit = CharacterCombination::new(WeylType::D);
        for label in c.terms.keys() {
            let bp = &label.bipartition;
            lit.add(CharacterLabel::b(bp.clone()), half.clone())?;
            if let Some(sharp) = bp.sharp().filter(|s| s != bp) {
                lit.add(CharacterLabel::b(sharp), half.clone())?;
            }
        }
        out.push(lit);
    }
    Ok(out)
}

/// A block of irreducible labels sharing one content multiset.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Family {
    pub content: ContentMultiset,
    pub members: Vec<Bipartition>,
}

/// Families of `Irr W(B_m)`: classes of equal charged content, blocks
/// ordered by their smallest member.
pub fn families(m: u32, charge_k: i64, r: u32) -> Vec<Family> {
    let mut blocks: Vec<Family> = Vec::new();
    let mut index: HashMap<ContentMultiset, usize> = HashMap::new();
    for bp in bipartitions(m, charge_k, r) {
        let content = bp.cell_content();
        match index.get(&content) {
            Some(&i) => blocks[i].members.push(bp),
            None => {
                index.insert(content.clone(), blocks.len());
                blocks.push(Family {
                    content,
                    members: vec![bp],
                });
            }
        }
    }
    blocks
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let p = self.parent[x];
        if p == x {
            return x;
        }
        let root = self.find(p);
        self.parent[x] = root;
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Connected components of the graph on `Irr W(B_m)` joining two labels
/// whenever they occur together in a constructible character.
pub fn constructible_components(m: u32, charge_k: i64, r: u32) -> Result<Vec<Vec<Bipartition>>> {
    let labels = bipartitions(m, charge_k, r);
    let mut uf = UnionFind::new(labels.len());
    let window = window_for_degree(m, r);
    for bp in &labels {
        let s = bp.to_symbol(window)?;
        if !s.is_standard() {
            continue;
        }
        let psi: CharacterCombination<i64> = constructible_b(&s)?;
        let idx: Vec<usize> = psi
            .support()
            .map(|l| {
                labels
                    .binary_search(&l.bipartition)
                    .expect("support has degree m")
            })
            .collect();
        for w in idx.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    let mut blocks: BTreeMap<usize, Vec<Bipartition>> = BTreeMap::new();
    for (i, bp) in labels.iter().enumerate() {
        blocks.entry(uf.find(i)).or_default().push(bp.clone());
    }
    Ok(blocks.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical_basis::canonical_vector;
    use crate::combinatorics::Partition;
    use num_rational::Ratio;

    fn example_2_1() -> Symbol {
        Symbol::from_rows(&[1, 3, 5, 8, 9], &[3, 6, 7, 10]).unwrap()
    }

    fn zd(z: &[i64], r: u32) -> ZData {
        ZData {
            z: z.to_vec(),
            common: vec![],
            floor: 0,
            charge_k: 0,
            r,
        }
    }

    #[test]
    fn z_of_worked_example() {
        let d = z_data(&example_2_1());
        assert_eq!(d.z, vec![1, 5, 6, 7, 8, 9, 10]);
        assert_eq!(d.common, vec![3]);
        assert_eq!((d.len() - d.r as usize) % 2, 0);
    }

    #[test]
    fn z_of_highest_weight() {
        let s0 = Bipartition::empty(2, 3).to_symbol_default();
        assert_eq!(z_data(&s0).z, vec![3, 4, 5]);
        let s0 = Bipartition::empty(2, 0).to_symbol_default();
        assert!(z_data(&s0).is_empty());
    }

    #[test]
    fn all_fixed_when_m_equals_r() {
        let invs = admissible_involutions(&zd(&[2, 5, 9], 3)).unwrap();
        assert_eq!(invs, vec![AdmissibleInvolution::identity(&[2, 5, 9])]);
    }

    #[test]
    fn four_points_no_fixed() {
        let d = zd(&[1, 2, 3, 4], 0);
        let invs = admissible_involutions(&d).unwrap();
        assert_eq!(invs.len(), 2);
        let crossing = AdmissibleInvolution::normalized(vec![(1, 3), (2, 4)], vec![]);
        assert!(!invs.contains(&crossing));
        assert!(!is_admissible(&d, &crossing));
        for inv in &invs {
            assert!(is_admissible(&d, inv));
        }
    }

    #[test]
    fn parity_violation() {
        assert!(matches!(
            admissible_involutions(&zd(&[1, 2, 3], 0)),
            Err(Error::ParityViolation { .. })
        ));
        assert!(matches!(
            admissible_involutions(&zd(&[1], 3)),
            Err(Error::ParityViolation { .. })
        ));
    }

    #[test]
    fn involution_of_worked_example() {
        let inv = involution_from_symbol(&example_2_1()).unwrap();
        assert_eq!(inv.orbits, vec![(1, 7), (5, 6), (9, 10)]);
        assert_eq!(inv.fixed, vec![8]);
        let d = z_data(&example_2_1());
        assert!(admissible_involutions(&d).unwrap().contains(&inv));
        assert_eq!(symbol_from_involution(&d, &inv).unwrap(), example_2_1());
    }

    #[test]
    fn inadmissible_rejected() {
        let d = zd(&[1, 2, 3, 4], 0);
        let crossing = AdmissibleInvolution::normalized(vec![(1, 3), (2, 4)], vec![]);
        assert_eq!(
            symbol_from_involution(&d, &crossing),
            Err(Error::InadmissibleInvolution)
        );
        let fixed_inside = AdmissibleInvolution::normalized(vec![(1, 3)], vec![2]);
        assert!(!is_admissible(&zd(&[1, 2, 3], 1), &fixed_inside));
    }

    /// Brute force: all involutions with r fixed points, filtered by
    /// `is_admissible`.
    fn brute_admissible(d: &ZData) -> BTreeSet<AdmissibleInvolution> {
        fn all(
            rest: &[i64],
            fixed_left: usize,
            acc: &mut Vec<(i64, i64)>,
            fixed: &mut Vec<i64>,
            out: &mut Vec<AdmissibleInvolution>,
        ) {
            let Some((&first, tail)) = rest.split_first() else {
                if fixed_left == 0 {
                    out.push(AdmissibleInvolution::normalized(acc.clone(), fixed.clone()));
                }
                return;
            };
            if fixed_left > 0 {
                fixed.push(first);
                all(tail, fixed_left - 1, acc, fixed, out);
                fixed.pop();
            }
            for i in 0..tail.len() {
                acc.push((first, tail[i]));
                let rest2: Vec<i64> = tail
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != i)
                    .map(|(_, &x)| x)
                    .collect();
                all(&rest2, fixed_left, acc, fixed, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        all(&d.z, d.r as usize, &mut vec![], &mut vec![], &mut out);
        out.into_iter()
            .filter(|inv| is_admissible(d, inv))
            .collect()
    }

    #[test]
    fn peeling_matches_brute_force() {
        for n in 0..=8 {
            for r in 0..=3u32 {
                if n < r as usize || !(n - r as usize).is_multiple_of(2) {
                    continue;
                }
                let d = zd(&(1..=n as i64).collect::<Vec<_>>(), r);
                let gen: BTreeSet<_> = admissible_involutions(&d).unwrap().into_iter().collect();
                assert_eq!(gen, brute_admissible(&d), "n = {n}, r = {r}");
            }
        }
    }

    #[test]
    fn constructible_b_of_worked_example() {
        let s = example_2_1();
        let psi: CharacterCombination<i64> = constructible_b(&s).unwrap();
        assert_eq!(psi.len(), 8);
        let expected: Vec<Symbol> = c_set(&s).unwrap().into_iter().map(|(x, _)| x).collect();
        for sigma in expected {
            assert_eq!(psi.terms[&CharacterLabel::b(sigma.to_bipartition())], 1);
        }
        let via_v: CharacterCombination<i64> =
            specialize(&canonical_vector::<i64>(&s).unwrap()).unwrap();
        assert_eq!(psi, via_v);
    }

    #[test]
    fn type_d_degree_zero() {
        let d: Vec<CharacterCombination<i64>> = constructible_d(0, 0).unwrap();
        assert_eq!(d.len(), 2);
        let tags: Vec<_> = d
            .iter()
            .map(|c| c.terms.keys().next().unwrap().tag)
            .collect();
        assert_eq!(tags, vec![Some(DTag::I), Some(DTag::II)]);
    }

    #[test]
    fn type_d_literal_form_has_halves() {
        let lit: Vec<CharacterCombination<Ratio<i64>>> = constructible_d_literal(2, 0).unwrap();
        let half = Ratio::new(1, 2);
        for c in &lit {
            if c.terms.keys().all(|l| l.tag.is_none()) {
                assert!(c.terms.values().all(|q| *q == half));
            }
        }
        assert!(constructible_d_literal::<i64>(2, 0).is_err());
    }

    #[test]
    fn d_class_is_unordered() {
        let a = Partition::new(vec![1]).unwrap();
        let b = Partition::new(vec![2]).unwrap();
        let x = Bipartition::new(a.clone(), b.clone(), 0, 0);
        let y = Bipartition::new(b, a, 0, 0);
        assert_eq!(CharacterLabel::d_class(&x), CharacterLabel::d_class(&y));
    }

    #[test]
    fn families_small_cases() {
        let f = families(0, 0, 1);
        assert_eq!(f.len(), 1);
        // (1 3 / 2) and (1 2 / 3) share content {1, 2, 3}
        let a = Symbol::from_rows(&[1, 3], &[2]).unwrap().to_bipartition();
        let b = Symbol::from_rows(&[1, 2], &[3]).unwrap().to_bipartition();
        let f = families(2, 1, 1);
        assert!(f
            .iter()
            .any(|fam| fam.members.contains(&a) && fam.members.contains(&b)));
    }
}
