//! Piecewise-constant observables on `Σ^ℤ` with exact complex rational
//! values.
//!
//! These form an algebra closed under rational linear combinations,
//! pointwise products and composition with a sliding block code, and every
//! sup-norm is an exact rational (kept squared). Canonical form: one piece per
//! distinct value, pieces sorted by value, every piece nonempty. Canonical
//! observables are equal exactly when they agree at every point.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use crate::alphabet::{Alphabet, Word};
use crate::clopen::ClopenSet;
use crate::error::{Error, Result};
use crate::qcomplex::QComplex;
use crate::system::{Limits, SlidingBlockCode};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PcObservable {
    alphabet: Arc<Alphabet>,
    pieces: Vec<(ClopenSet, QComplex)>,
}

impl PcObservable {
    pub fn constant(alphabet: Arc<Alphabet>, value: QComplex) -> Self {
        let full = ClopenSet::full(alphabet.clone());
        PcObservable {
            alphabet,
            pieces: vec![(full, value)],
        }
    }

    pub fn zero(alphabet: Arc<Alphabet>) -> Self {
        Self::constant(alphabet, QComplex::zero())
    }

    /// `χ_A`.
    pub fn indicator(a: &ClopenSet) -> Self {
        let alphabet = a.alphabet().clone();
        let pieces = vec![(a.clone(), QComplex::one()), (a.complement(), QComplex::zero())];
        Self::canonical(alphabet, pieces)
    }

    /// Builds an observable from pairwise disjoint pieces; points outside
    /// every piece take `default`.
    pub fn from_pieces(
        alphabet: Arc<Alphabet>,
        pieces: Vec<(ClopenSet, QComplex)>,
        default: QComplex,
    ) -> Result<Self> {
        let mut covered = ClopenSet::empty(alphabet.clone());
        for (set, _) in &pieces {
            if set.alphabet() != &alphabet {
                return Err(Error::AlphabetMismatch);
            }
            if !covered.is_disjoint(set)? {
                return Err(Error::OverlappingPieces);
            }
            covered = covered.union(set)?;
        }
        let mut all = pieces;
        all.push((covered.complement(), default));
        Ok(Self::canonical(alphabet, all))
    }

    fn canonical(alphabet: Arc<Alphabet>, raw: Vec<(ClopenSet, QComplex)>) -> Self {
        let mut by_value: BTreeMap<QComplex, ClopenSet> = BTreeMap::new();
        for (set, v) in raw {
            if set.is_empty() {
                continue;
            }
            match by_value.get_mut(&v) {
                Some(acc) => *acc = acc.union(&set).expect("same alphabet"),
                None => {
                    by_value.insert(v, set);
                }
            }
        }
        PcObservable {
            alphabet,
            pieces: by_value.into_iter().map(|(v, s)| (s, v)).collect(),
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// `(set, value)` pairs sorted by value.
    pub fn pieces(&self) -> &[(ClopenSet, QComplex)] {
        &self.pieces
    }

    fn check_alphabet(&self, other: &PcObservable) -> Result<()> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    /// Value at any point extending `w`; `w` must cover every piece.
    pub fn value_at(&self, w: &Word) -> Result<QComplex> {
        for (set, v) in &self.pieces {
            if set.member(w)? {
                return Ok(v.clone());
            }
        }
        unreachable!("pieces cover the whole space")
    }

    fn combine(
        &self,
        other: &PcObservable,
        op: impl Fn(&QComplex, &QComplex) -> QComplex,
    ) -> Result<PcObservable> {
        self.check_alphabet(other)?;
        let mut raw = Vec::with_capacity(self.pieces.len() * other.pieces.len());
        for (s, v) in &self.pieces {
            for (t, w) in &other.pieces {
                let i = s.intersect(t)?;
                if !i.is_empty() {
                    raw.push((i, op(v, w)));
                }
            }
        }
        Ok(Self::canonical(self.alphabet.clone(), raw))
    }

    pub fn add(&self, other: &PcObservable) -> Result<PcObservable> {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &PcObservable) -> Result<PcObservable> {
        self.combine(other, |a, b| a - b)
    }

    pub fn mul(&self, other: &PcObservable) -> Result<PcObservable> {
        self.combine(other, |a, b| a * b)
    }

    pub fn scale(&self, c: &QComplex) -> PcObservable {
        let raw = self
            .pieces
            .iter()
            .map(|(s, v)| (s.clone(), c * v))
            .collect();
        Self::canonical(self.alphabet.clone(), raw)
    }

    /// `max |f|²` over the pieces.
    pub fn sup_norm_sq(&self) -> BigRational {
        self.pieces
            .iter()
            .map(|(_, v)| v.norm_sq())
            .max()
            .unwrap_or_else(BigRational::zero)
    }

    /// `(K f)(x) = f(F(x))`: every level set is pulled back through `F`.
    pub fn koopman_apply(&self, f: &SlidingBlockCode, limits: &Limits) -> Result<PcObservable> {
        if f.alphabet() != &self.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let raw = self
            .pieces
            .iter()
            .map(|(s, v)| Ok((f.preimage(s, limits)?, v.clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::canonical(self.alphabet.clone(), raw))
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.len() == 1 && self.pieces[0].1.is_zero()
    }

    pub fn equals_obs(&self, other: &PcObservable) -> bool {
        self == other
    }

    /// Union of the pieces with a nonzero value.
    pub fn support(&self) -> ClopenSet {
        self.pieces
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .fold(ClopenSet::empty(self.alphabet.clone()), |acc, (s, _)| {
                acc.union(s).expect("same alphabet")
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bin() -> Arc<Alphabet> {
        Arc::new(Alphabet::binary())
    }

    fn cyl(lo: i64, w: &str) -> ClopenSet {
        ClopenSet::cylinder(bin(), lo, w).unwrap()
    }

    fn word(lo: i64, s: &str) -> Word {
        Word::new(lo, bin().parse_word(s).unwrap())
    }

    #[test]
    fn indicators_of_trivial_sets_are_constants() {
        let one = PcObservable::constant(bin(), QComplex::one());
        assert_eq!(PcObservable::indicator(&ClopenSet::full(bin())), one);
        assert!(PcObservable::indicator(&ClopenSet::empty(bin())).is_zero());
        let chi = PcObservable::indicator(&cyl(0, "1"));
        assert_eq!(chi.value_at(&word(0, "10")).unwrap(), QComplex::one());
        assert_eq!(chi.value_at(&word(0, "01")).unwrap(), QComplex::zero());
    }

    #[test]
    fn algebra_examples() {
        let a = cyl(0, "1").union(&cyl(1, "01")).unwrap();
        let b = cyl(-1, "1");
        let chi_a = PcObservable::indicator(&a);
        let chi_not_a = PcObservable::indicator(&a.complement());
        assert_eq!(
            chi_a.add(&chi_not_a).unwrap(),
            PcObservable::constant(bin(), QComplex::one())
        );
        assert_eq!(
            chi_a.mul(&PcObservable::indicator(&b)).unwrap(),
            PcObservable::indicator(&a.intersect(&b).unwrap())
        );
        assert!(chi_a.mul(&chi_not_a).unwrap().is_zero());
        let scaled = chi_a.scale(&QComplex::ratio(2, 3));
        assert_eq!(scaled.value_at(&word(0, "100")).unwrap(), QComplex::ratio(2, 3));
        assert_eq!(chi_a.support(), a);
        let f = scaled.add(&PcObservable::indicator(&b)).unwrap();
        assert!(f
            .add(&f.scale(&QComplex::int(-1)))
            .unwrap()
            .equals_obs(&PcObservable::zero(bin())));
    }

    #[test]
    fn sup_norms() {
        assert_eq!(
            PcObservable::indicator(&cyl(0, "1")).sup_norm_sq(),
            BigRational::from_integer(1.into())
        );
        assert!(PcObservable::zero(bin()).sup_norm_sq().is_zero());
        let f = PcObservable::indicator(&cyl(0, "1")).scale(&QComplex::ratio(3, 2));
        assert_eq!(f.sup_norm_sq(), BigRational::new(9.into(), 4.into()));
        let g = PcObservable::constant(bin(), QComplex::parse_pair("1", "-1").unwrap());
        assert_eq!(g.sup_norm_sq(), BigRational::from_integer(2.into()));
    }

    #[test]
    fn koopman_examples() {
        let lim = Limits::default();
        let one = PcObservable::constant(bin(), QComplex::one());
        let shift = SlidingBlockCode::shift(bin());
        assert_eq!(one.koopman_apply(&shift, &lim).unwrap(), one);
        let chi = PcObservable::indicator(&cyl(0, "1"));
        assert_eq!(
            chi.koopman_apply(&shift, &lim).unwrap(),
            PcObservable::indicator(&cyl(1, "1"))
        );
        let not = SlidingBlockCode::permutation(bin(), vec![1, 0]).unwrap();
        assert_eq!(
            chi.koopman_apply(&not, &lim).unwrap(),
            PcObservable::indicator(&cyl(0, "0"))
        );
    }

    #[test]
    fn overlapping_pieces_are_rejected() {
        let r = PcObservable::from_pieces(
            bin(),
            vec![(cyl(0, "1"), QComplex::one()), (cyl(1, "1"), QComplex::int(2))],
            QComplex::zero(),
        );
        assert_eq!(r, Err(Error::OverlappingPieces));
        let ok = PcObservable::from_pieces(
            bin(),
            vec![(cyl(0, "1"), QComplex::one()), (cyl(0, "0"), QComplex::one())],
            QComplex::int(5),
        )
        .unwrap();
        assert_eq!(ok, PcObservable::constant(bin(), QComplex::one()));
    }
}
