//! Finitely supported vectors of the level-2 Fock space.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinatorics::{Bipartition, ContentMultiset};
use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::scalar::Coefficient;

/// A linear combination of standard basis vectors `s_(lambda, mu)` with
/// Laurent-polynomial coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FockVector<R> {
    terms: BTreeMap<Bipartition, LaurentPoly<R>>,
}

impl<R: Coefficient> FockVector<R> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    /// The standard basis vector `s_bp`.
    pub fn basis(bp: Bipartition) -> Self {
        Self::term(bp, LaurentPoly::one())
    }

    pub fn term(bp: Bipartition, coeff: LaurentPoly<R>) -> Self {
        let mut out = Self::zero();
        if !coeff.is_zero() {
            out.terms.insert(bp, coeff);
        }
        out
    }

    pub fn add_term(&mut self, bp: Bipartition, coeff: &LaurentPoly<R>) -> Result<()> {
        if coeff.is_zero() {
            return Ok(());
        }
        match self.terms.get_mut(&bp) {
            Some(existing) => {
                let sum = existing.checked_add(coeff)?;
                if sum.is_zero() {
                    self.terms.remove(&bp);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(bp, coeff.clone());
            }
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (bp, c) in &other.terms {
            out.add_term(bp.clone(), c)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (bp, c) in &other.terms {
            out.add_term(bp.clone(), &c.checked_neg()?)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &LaurentPoly<R>) -> Result<Self> {
        let mut out = Self::zero();
        for (bp, x) in &self.terms {
            out.add_term(bp.clone(), &x.checked_mul(c)?)?;
        }
        Ok(out)
    }

    /// Divides every coefficient exactly by `d`.
    pub fn div_exact(&self, d: &LaurentPoly<R>) -> Result<Self> {
        let mut out = Self::zero();
        for (bp, x) in &self.terms {
            out.add_term(bp.clone(), &x.div_exact(d)?)?;
        }
        Ok(out)
    }

    pub fn coeff(&self, bp: &Bipartition) -> LaurentPoly<R> {
        self.terms
            .get(bp)
            .cloned()
            .unwrap_or_else(LaurentPoly::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Bipartition, &LaurentPoly<R>)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Bipartition> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficients specialized at `v = 1`; terms vanishing there are dropped.
    pub fn specialize(&self) -> Result<BTreeMap<Bipartition, R>> {
        let mut out = BTreeMap::new();
        for (bp, c) in &self.terms {
            let x = c.eval_at_one()?;
            if !x.is_zero() {
                out.insert(bp.clone(), x);
            }
        }
        Ok(out)
    }

    /// True iff every support label has the same cell content, i.e. the
    /// vector lies in a single weight space.
    pub fn is_weight_homogeneous(&self) -> bool {
        let mut contents = self.terms.keys().map(Bipartition::cell_content);
        match contents.next() {
            None => true,
            Some(first) => contents.all(|c| c == first),
        }
    }

    /// The shared cell content, if the vector is nonzero and homogeneous.
    pub fn content(&self) -> Option<ContentMultiset> {
        if self.is_empty() || !self.is_weight_homogeneous() {
            return None;
        }
        self.terms.keys().next().map(Bipartition::cell_content)
    }
}

impl<R: Coefficient> fmt::Debug for FockVector<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(
                self.terms
                    .iter()
                    .map(|(bp, c)| (bp.to_string(), c.to_string())),
            )
            .finish()
    }
}

impl<R: Coefficient> fmt::Display for FockVector<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(bp, c)| {
                if c.is_one() {
                    format!("s{bp}")
                } else {
                    format!("({c}) s{bp}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(bound(
    serialize = "R: Coefficient + Serialize",
    deserialize = "R: Coefficient + Deserialize<'de>"
))]
struct TermRepr<R> {
    bipartition: Bipartition,
    coeff: LaurentPoly<R>,
}

#[derive(Serialize, Deserialize)]
#[serde(bound(
    serialize = "R: Coefficient + Serialize",
    deserialize = "R: Coefficient + Deserialize<'de>"
))]
struct VectorRepr<R> {
    terms: Vec<TermRepr<R>>,
}

impl<R: Coefficient + Serialize> Serialize for FockVector<R> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        VectorRepr {
            terms: self
                .terms
                .iter()
                .map(|(bp, c)| TermRepr {
                    bipartition: bp.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de, R: Coefficient + Deserialize<'de>> Deserialize<'de> for FockVector<R> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = VectorRepr::<R>::deserialize(deserializer)?;
        let mut out = Self::zero();
        for t in repr.terms {
            out.add_term(t.bipartition, &t.coeff)
                .map_err(D::Error::custom)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Partition;

    type L = LaurentPoly<i64>;

    fn bp(top: &[u32], bottom: &[u32]) -> Bipartition {
        Bipartition::new(
            Partition::new(top.to_vec()).unwrap(),
            Partition::new(bottom.to_vec()).unwrap(),
            0,
            1,
        )
    }

    #[test]
    fn cancellation_removes_terms() {
        let mut x = FockVector::<i64>::basis(bp(&[1], &[]));
        x.add_term(bp(&[1], &[]), &L::constant(-1)).unwrap();
        assert!(x.is_empty());
    }

    #[test]
    fn weight_check_examples() {
        assert!(FockVector::<i64>::zero().is_weight_homogeneous());
        // contents {1} and {0} differ
        let mut x = FockVector::<i64>::basis(bp(&[1], &[]));
        x.add_term(bp(&[], &[1]), &L::one()).unwrap();
        assert!(!x.is_weight_homogeneous());
    }

    #[test]
    fn json_schema() {
        let x = FockVector::<i64>::term(bp(&[2], &[1]), L::v_pow(2));
        let json = serde_json::to_value(&x).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"terms": [{"bipartition": {"top": [2], "bottom": [1], "k": 0, "r": 1},
                                          "coeff": [[2, 1]]}]})
        );
        let back: FockVector<i64> = serde_json::from_value(json).unwrap();
        assert_eq!(back, x);
    }
}
