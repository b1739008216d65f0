//! The ring of subsets of a finite base set: symmetric difference as sum,
//! intersection as product, `∅` as zero and the base set as one. A Boolean
//! ring — every element is idempotent and its own additive inverse.

use std::sync::Arc;

use thiserror::Error;

use crate::finite_ring::{FiniteRing, RingError};
use crate::finite_sets::{same_universe, SetError, Subset, Universe};

/// Exhaustive verification and ring materialization are limited to bases of
/// this size; the element count doubles with every base element.
pub const MAX_BASE: usize = 4;

#[derive(Debug, Error)]
pub enum PowersetError {
    #[error("base has {size} elements; exhaustive mode is capped at {max}")]
    BaseTooLarge { size: usize, max: usize },
    #[error(transparent)]
    Set(#[from] SetError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Which powerset-ring axiom a check was exercising.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsAxiom {
    AddAssociativity,
    AddCommutativity,
    AddIdentity,
    AddSelfInverse,
    MulAssociativity,
    MulCommutativity,
    MulIdentity,
    Distributivity,
}

/// First failing instance of an axiom, as subset bitmasks over the base.
#[derive(Debug, Clone)]
pub struct PsAxiomFailure {
    pub axiom: PsAxiom,
    pub witness: Vec<Subset>,
}

/// Outcome of the exhaustive axiom sweep.
#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub failure: Option<PsAxiomFailure>,
    /// Pairs checked by each binary-law sweep.
    pub pairs_checked: usize,
    /// Triples checked by the distributivity sweep.
    pub distributivity_triples: usize,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// The ring `(2^X, Δ, ∩)` over a base universe `X`.
#[derive(Debug, Clone)]
pub struct PowersetRing {
    base: Arc<Universe>,
}

impl PowersetRing {
    pub fn new(base: Arc<Universe>) -> PowersetRing {
        PowersetRing { base }
    }

    pub fn base(&self) -> &Arc<Universe> {
        &self.base
    }

    /// Number of ring elements, `2^|X|`.
    pub fn element_count(&self) -> usize {
        1usize << self.base.size()
    }

    fn check_operand(&self, s: &Subset) -> Result<(), PowersetError> {
        if same_universe(s.universe(), &self.base) {
            Ok(())
        } else {
            Err(SetError::UniverseMismatch.into())
        }
    }

    /// Ring sum: symmetric difference.
    pub fn add(&self, a: &Subset, b: &Subset) -> Result<Subset, PowersetError> {
        self.check_operand(a)?;
        self.check_operand(b)?;
        Ok(a.symmetric_difference(b)?)
    }

    /// Ring product: intersection.
    pub fn mul(&self, a: &Subset, b: &Subset) -> Result<Subset, PowersetError> {
        self.check_operand(a)?;
        self.check_operand(b)?;
        Ok(a.intersection(b)?)
    }

    /// Enumerates the ring elements in binary-counter order: bit `i` of the
    /// counter is membership of base element `i`.
    pub fn elements(&self) -> impl Iterator<Item = Subset> + '_ {
        (0..self.element_count() as u64).map(move |m| Subset::from_low_mask(&self.base, m))
    }

    /// Exhaustively verifies every ring axiom over all pairs and triples.
    pub fn check_axioms(&self) -> Result<AxiomReport, PowersetError> {
        if self.base.size() > MAX_BASE {
            return Err(PowersetError::BaseTooLarge {
                size: self.base.size(),
                max: MAX_BASE,
            });
        }
        let elems: Vec<Subset> = self.elements().collect();
        let n = elems.len();
        let zero = Subset::empty(&self.base);
        let one = Subset::full(&self.base);

        let fail = |axiom: PsAxiom, witness: &[&Subset]| AxiomReport {
            failure: Some(PsAxiomFailure {
                axiom,
                witness: witness.iter().map(|s| (*s).clone()).collect(),
            }),
            pairs_checked: n * n,
            distributivity_triples: n * n * n,
        };

        for a in &elems {
            if self.add(a, &zero)? != *a {
                return Ok(fail(PsAxiom::AddIdentity, &[a]));
            }
            if !self.add(a, a)?.is_empty() {
                return Ok(fail(PsAxiom::AddSelfInverse, &[a]));
            }
            if self.mul(a, &one)? != *a || self.mul(&one, a)? != *a {
                return Ok(fail(PsAxiom::MulIdentity, &[a]));
            }
        }
        for a in &elems {
            for b in &elems {
                if self.add(a, b)? != self.add(b, a)? {
                    return Ok(fail(PsAxiom::AddCommutativity, &[a, b]));
                }
                if self.mul(a, b)? != self.mul(b, a)? {
                    return Ok(fail(PsAxiom::MulCommutativity, &[a, b]));
                }
            }
        }
        for a in &elems {
            for b in &elems {
                for c in &elems {
                    if self.add(&self.add(a, b)?, c)? != self.add(a, &self.add(b, c)?)? {
                        return Ok(fail(PsAxiom::AddAssociativity, &[a, b, c]));
                    }
                    if self.mul(&self.mul(a, b)?, c)? != self.mul(a, &self.mul(b, c)?)? {
                        return Ok(fail(PsAxiom::MulAssociativity, &[a, b, c]));
                    }
                    if self.mul(a, &self.add(b, c)?)?
                        != self.add(&self.mul(a, b)?, &self.mul(a, c)?)?
                    {
                        return Ok(fail(PsAxiom::Distributivity, &[a, b, c]));
                    }
                }
            }
        }
        Ok(AxiomReport {
            failure: None,
            pairs_checked: n * n,
            distributivity_triples: n * n * n,
        })
    }

    /// Materializes the powerset ring as a Cayley-table ring. Elements are
    /// all subsets of the base in binary-counter order, labeled like
    /// `{a,c}`; zero is `{}` and one the full base.
    pub fn as_finite_ring(&self) -> Result<Arc<FiniteRing>, PowersetError> {
        if self.base.size() > MAX_BASE {
            return Err(PowersetError::BaseTooLarge {
                size: self.base.size(),
                max: MAX_BASE,
            });
        }
        let n = self.element_count();
        let labels: Vec<String> = (0..n as u64)
            .map(|m| {
                let members: Vec<&str> = (0..self.base.size())
                    .filter(|i| m >> i & 1 == 1)
                    .map(|i| self.base.label(i))
                    .collect();
                format!("{{{}}}", members.join(","))
            })
            .collect();
        let elems = Universe::new(labels)?;
        let add: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| x ^ y).collect()).collect();
        let mul: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| x & y).collect()).collect();
        Ok(FiniteRing::from_tables(elems, &add, &mul, 0, Some(n - 1))?)
    }
}
