//! Set-to-set reachability ("does some orbit starting in `A` enter `B`?")
//! for sliding block codes.
//!
//! Two routes are provided. [`HaltingQuery::reach_semidecide`] iterates exact
//! preimages `P_t = F^{-t}(B)` and stops on the first hit, or proves
//! unreachability when the union `U_t = P_0 ∪ … ∪ P_t` stops growing (in
//! particular when the `P_t` become periodic). [`HaltingQuery::resolvent_certificate`]
//! evaluates a truncation of `χ_A (λI − K)^{-1} χ_B` through the Neumann
//! series and certifies it nonzero once the truncated value beats a bound on
//! the remaining tail.

use std::collections::HashMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use crate::alphabet::Word;
use crate::clopen::ClopenSet;
use crate::error::{Error, Result};
use crate::linalg;
use crate::observable::PcObservable;
use crate::qcomplex::QComplex;
use crate::system::{Limits, SlidingBlockCode};

#[derive(Clone, Debug)]
pub struct HaltingQuery {
    pub system: SlidingBlockCode,
    pub from: ClopenSet,
    pub to: ClopenSet,
    pub lambda: BigRational,
    /// Maximum number of preimage applications.
    pub budget: usize,
    pub limits: Limits,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    /// `P_end = P_start`: one period of preimages covers the whole union.
    Period { start: usize, end: usize },
    /// `U_step = U_{step-1}`.
    Stabilized { step: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnknownReason {
    Budget,
    Resource(Error),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HaltingVerdict {
    /// `witness` lies in `A ∩ F^{-t}(B)`.
    Reached { t: usize, witness: Word },
    Unreachable(Evidence),
    Unknown { budget: usize, reason: UnknownReason },
}

impl HaltingVerdict {
    pub fn is_decided(&self) -> bool {
        !matches!(self, HaltingVerdict::Unknown { .. })
    }

    pub fn hit_time(&self) -> Option<usize> {
        match self {
            HaltingVerdict::Reached { t, .. } => Some(*t),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateVerdict {
    Positive,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolventCertificate {
    pub order: usize,
    /// `sup |χ_A · S_N|²`.
    pub partial_norm_sq: BigRational,
    /// Square of `‖χ_B‖ · λ^{-(N+2)} / (1 − λ^{-1})`.
    pub tail_bound_sq: BigRational,
    pub verdict: CertificateVerdict,
}

impl fmt::Display for ResolventCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::qcomplex::format_rational;
        let v = match self.verdict {
            CertificateVerdict::Positive => "positive",
            CertificateVerdict::Inconclusive => "inconclusive",
        };
        write!(
            f,
            "{v} N={} partial_norm_sq={} tail_bound_sq={}",
            self.order,
            format_rational(&self.partial_norm_sq),
            format_rational(&self.tail_bound_sq)
        )
    }
}

/// `S_N = λ^{-1} Σ_{k=0}^{N} λ^{-k} K^k χ_B`. Accepts complex `λ` with
/// `|λ| > 1`.
pub fn neumann_partial(
    system: &SlidingBlockCode,
    target: &ClopenSet,
    lambda: &QComplex,
    order: usize,
    limits: &Limits,
) -> Result<PcObservable> {
    if lambda.norm_sq() <= BigRational::one() {
        return Err(Error::LambdaModulus(lambda.to_string()));
    }
    let inv = lambda.inv().expect("|lambda| > 1");
    let mut coeff = inv.clone();
    let mut power = target.clone();
    let mut sum = PcObservable::indicator(&power).scale(&coeff);
    for _ in 0..order {
        power = system.preimage(&power, limits)?;
        coeff = &coeff * &inv;
        sum = sum.add(&PcObservable::indicator(&power).scale(&coeff))?;
    }
    Ok(sum)
}

impl HaltingQuery {
    pub fn new(
        system: SlidingBlockCode,
        from: ClopenSet,
        to: ClopenSet,
        lambda: BigRational,
        budget: usize,
    ) -> Result<Self> {
        if lambda <= BigRational::one() {
            return Err(Error::InvalidLambda(crate::qcomplex::format_rational(&lambda)));
        }
        if budget == 0 {
            return Err(Error::ZeroBudget);
        }
        if from.alphabet() != system.alphabet() || to.alphabet() != system.alphabet() {
            return Err(Error::AlphabetMismatch);
        }
        if from.is_empty() {
            return Err(Error::EmptyQuerySet("source"));
        }
        if to.is_empty() {
            return Err(Error::EmptyQuerySet("target"));
        }
        Ok(HaltingQuery {
            system,
            from,
            to,
            lambda,
            budget,
            limits: Limits::default(),
        })
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    fn check_order(&self, order: usize) -> Result<()> {
        if order > self.budget {
            return Err(Error::OrderExceedsBudget {
                order,
                budget: self.budget,
            });
        }
        Ok(())
    }

    pub fn neumann_partial(&self, order: usize) -> Result<PcObservable> {
        self.check_order(order)?;
        neumann_partial(
            &self.system,
            &self.to,
            &QComplex::real(self.lambda.clone()),
            order,
            &self.limits,
        )
    }

    /// Certificate for truncation order `order`.
    pub fn resolvent_certificate(&self, order: usize) -> Result<ResolventCertificate> {
        self.check_order(order)?;
        let mut series = ResolventSeries::new(self);
        loop {
            let cert = series.advance()?;
            if cert.order == order {
                return Ok(cert);
            }
        }
    }

    /// Smallest order `N <= max_order` whose certificate is positive.
    pub fn first_positive_certificate(
        &self,
        max_order: usize,
    ) -> Result<Option<ResolventCertificate>> {
        self.check_order(max_order)?;
        let mut series = ResolventSeries::new(self);
        loop {
            let cert = series.advance()?;
            if cert.verdict == CertificateVerdict::Positive {
                return Ok(Some(cert));
            }
            if cert.order == max_order {
                return Ok(None);
            }
        }
    }

    pub fn reach_semidecide(&self) -> HaltingVerdict {
        match self.reach_inner() {
            Ok(v) => v,
            Err(e) => HaltingVerdict::Unknown {
                budget: self.budget,
                reason: UnknownReason::Resource(e),
            },
        }
    }

    fn reach_inner(&self) -> Result<HaltingVerdict> {
        let mut seen: HashMap<ClopenSet, usize> = HashMap::new();
        let mut power = self.to.clone();
        let mut union = ClopenSet::empty(self.system.alphabet().clone());
        for t in 0..=self.budget {
            if t > 0 {
                power = self.system.preimage(&power, &self.limits)?;
            }
            let hit = self.from.intersect(&power)?;
            if let Some(witness) = hit.first_word() {
                return Ok(HaltingVerdict::Reached { t, witness });
            }
            if let Some(&start) = seen.get(&power) {
                return Ok(HaltingVerdict::Unreachable(Evidence::Period { start, end: t }));
            }
            let grown = union.union(&power)?;
            if t > 0 && grown == union {
                return Ok(HaltingVerdict::Unreachable(Evidence::Stabilized { step: t }));
            }
            union = grown;
            seen.insert(power.clone(), t);
        }
        Ok(HaltingVerdict::Unknown {
            budget: self.budget,
            reason: UnknownReason::Budget,
        })
    }
}

/// Incremental evaluation of `χ_A · S_N` for `N = 0, 1, 2, …`.
///
/// By linearity `χ_A · S_N = Σ_k λ^{-(k+1)} χ_{A ∩ F^{-k}(B)}`, so only the
/// part of each term inside `A` is accumulated.
pub struct ResolventSeries<'q> {
    query: &'q HaltingQuery,
    next_order: usize,
    power: ClopenSet,
    coeff: QComplex,
    restricted: PcObservable,
    target_norm_sq: BigRational,
    lambda_inv: BigRational,
}

impl<'q> ResolventSeries<'q> {
    pub fn new(query: &'q HaltingQuery) -> Self {
        let lambda_inv = query.lambda.recip();
        ResolventSeries {
            query,
            next_order: 0,
            power: query.to.clone(),
            coeff: QComplex::real(lambda_inv.clone()),
            restricted: PcObservable::zero(query.system.alphabet().clone()),
            target_norm_sq: PcObservable::indicator(&query.to).sup_norm_sq(),
            lambda_inv,
        }
    }

    pub fn advance(&mut self) -> Result<ResolventCertificate> {
        let order = self.next_order;
        if order > 0 {
            self.power = self.query.system.preimage(&self.power, &self.query.limits)?;
            self.coeff = &self.coeff * &QComplex::real(self.lambda_inv.clone());
        }
        let inside = self.query.from.intersect(&self.power)?;
        if !inside.is_empty() {
            let term = PcObservable::indicator(&inside).scale(&self.coeff);
            self.restricted = self.restricted.add(&term)?;
        }
        self.next_order += 1;

        let partial_norm_sq = self.restricted.sup_norm_sq();
        let tail_bound_sq = self.tail_bound_sq(order);
        let verdict = if partial_norm_sq > tail_bound_sq {
            CertificateVerdict::Positive
        } else {
            CertificateVerdict::Inconclusive
        };
        Ok(ResolventCertificate {
            order,
            partial_norm_sq,
            tail_bound_sq,
            verdict,
        })
    }

    pub fn restricted_partial(&self) -> &PcObservable {
        &self.restricted
    }

    fn tail_bound_sq(&self, order: usize) -> BigRational {
        &self.target_norm_sq * tail_bound_sq(&self.query.lambda, order)
    }
}

/// `(λ^{-(N+2)} / (1 − λ^{-1}))²`, the squared tail bound for a target of
/// unit sup-norm.
pub fn tail_bound_sq(lambda: &BigRational, order: usize) -> BigRational {
    let inv = lambda.recip();
    let g = inv.pow(order as i32 + 2) / (BigRational::one() - &inv);
    &g * &g
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpanDimension {
    Finite(usize),
    ExceedsBudget(usize),
}

/// Dimension of `span{g, Kg, K²g, …}`, found by exact rank tests on the
/// common refinement of the iterates. `budget` bounds the number of Koopman
/// applications.
pub fn span_dimension(
    system: &SlidingBlockCode,
    g: &PcObservable,
    budget: usize,
    limits: &Limits,
) -> Result<SpanDimension> {
    if budget == 0 {
        return Err(Error::ZeroBudget);
    }
    if g.is_zero() {
        return Ok(SpanDimension::Finite(0));
    }
    // atoms of the common refinement, each with the values of all iterates
    let mut atoms: Vec<(ClopenSet, Vec<QComplex>)> = vec![(
        ClopenSet::full(system.alphabet().clone()),
        Vec::new(),
    )];
    let mut current = g.clone();
    refine(&mut atoms, &current)?;
    for k in 1..=budget {
        current = current.koopman_apply(system, limits)?;
        refine(&mut atoms, &current)?;
        let columns: Vec<Vec<QComplex>> = (0..=k)
            .map(|j| atoms.iter().map(|(_, vals)| vals[j].clone()).collect())
            .collect();
        if linalg::rank(&columns) == k {
            return Ok(SpanDimension::Finite(k));
        }
    }
    Ok(SpanDimension::ExceedsBudget(budget))
}

fn refine(atoms: &mut Vec<(ClopenSet, Vec<QComplex>)>, f: &PcObservable) -> Result<()> {
    let mut next = Vec::with_capacity(atoms.len());
    for (set, vals) in atoms.drain(..) {
        for (piece, v) in f.pieces() {
            let i = set.intersect(piece)?;
            if !i.is_empty() {
                let mut vals = vals.clone();
                vals.push(v.clone());
                next.push((i, vals));
            }
        }
    }
    *atoms = next;
    Ok(())
}
