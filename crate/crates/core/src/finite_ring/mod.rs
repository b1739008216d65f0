//! Finite rings presented by Cayley tables, validated exhaustively at
//! construction, together with subrings, ideals, congruences, quotients and
//! ring homomorphisms.
//!
//! Every [`FiniteRing`] value has had all ring axioms checked over all
//! element pairs/triples, so downstream code may assume them. Constructors
//! return a structured [`RingError::AxiomViolation`] naming the failed axiom
//! and a witness tuple instead of a ring.

mod congruence;
mod hom;
mod quotient;
mod subring;

pub use congruence::{enumerate_congruences, CompatOp, CompatibilityViolation, Congruence};
pub use hom::{enumerate_homs, find_isomorphism, HomLaw, RingHom};
pub use quotient::{CosetSpace, MulWitness};
pub use subring::{IdealViolation, SubringVerdict, SubringViolation};

use std::sync::Arc;

use thiserror::Error;

use crate::finite_sets::{same_universe, SetError, Subset, Universe};

/// Largest ring the exhaustive construction-time validation accepts.
pub const MAX_RING: usize = 256;

/// Largest ring for which ideals are enumerated.
pub const MAX_IDEAL_ENUM: usize = 24;

/// Largest ring accepted by the isomorphism/homomorphism search.
pub const MAX_ISO_SEARCH: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingAxiom {
    AddCommutativity,
    AddAssociativity,
    AddIdentity,
    AddInverse,
    MulAssociativity,
    MulIdentity,
    LeftDistributivity,
    RightDistributivity,
}

impl std::fmt::Display for RingAxiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            RingAxiom::AddCommutativity => "add-commutativity",
            RingAxiom::AddAssociativity => "add-associativity",
            RingAxiom::AddIdentity => "add-identity",
            RingAxiom::AddInverse => "add-inverse",
            RingAxiom::MulAssociativity => "mul-associativity",
            RingAxiom::MulIdentity => "mul-identity",
            RingAxiom::LeftDistributivity => "left-distributivity",
            RingAxiom::RightDistributivity => "right-distributivity",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Error)]
pub enum RingError {
    #[error("ring axiom {axiom} fails at witness {witness:?}")]
    AxiomViolation {
        axiom: RingAxiom,
        witness: Vec<usize>,
    },
    #[error("table is {got}x? but the ring has {expected} elements")]
    TableShape { expected: usize, got: usize },
    #[error("table entry {entry} out of range for ring of size {size}")]
    TableEntry { entry: usize, size: usize },
    #[error("element index {index} out of range for ring of size {size}")]
    ElementOutOfRange { index: usize, size: usize },
    #[error("ring of size {size} exceeds the cap of {max} for this operation")]
    SizeCap { size: usize, max: usize },
    #[error("blocks do not partition the ring: element {element} appears {count} times")]
    NotAPartition { element: usize, count: usize },
    #[error("{0}")]
    Compatibility(CompatibilityViolation),
    #[error("not an ideal: {0}")]
    NotAnIdeal(IdealViolation),
    #[error("not an additive subgroup: {0}")]
    NotASubgroup(SubringViolation),
    #[error("not a homomorphism: {law} fails at ({x}, {y})")]
    NotAHomomorphism { law: HomLaw, x: usize, y: usize },
    #[error("homomorphism endpoints do not match")]
    HomMismatch,
    #[error(transparent)]
    Set(#[from] SetError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// A finite ring: an element universe plus addition and multiplication
/// Cayley tables, validated against the ring axioms at construction.
#[derive(Debug)]
pub struct FiniteRing {
    elems: Arc<Universe>,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    zero: usize,
    one: Option<usize>,
    commutative: bool,
    /// Two-sided multiplicative inverses; empty when the ring has no one.
    inverse: Vec<Option<usize>>,
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.elems == other.elems
            && self.add == other.add
            && self.mul == other.mul
            && self.zero == other.zero
            && self.one == other.one
    }
}
impl Eq for FiniteRing {}

impl FiniteRing {
    /// Validates the tables and assembles the ring. The tables are indexed by
    /// element position; `one` may be omitted and is then auto-detected.
    pub fn from_tables(
        elems: Arc<Universe>,
        add: &[Vec<usize>],
        mul: &[Vec<usize>],
        zero: usize,
        one: Option<usize>,
    ) -> Result<Arc<FiniteRing>, RingError> {
        let n = elems.size();
        if n > MAX_RING {
            return Err(RingError::SizeCap {
                size: n,
                max: MAX_RING,
            });
        }
        let add = flatten_table(n, add)?;
        let mul = flatten_table(n, mul)?;
        if zero >= n {
            return Err(RingError::ElementOutOfRange {
                index: zero,
                size: n,
            });
        }
        if let Some(e) = one {
            if e >= n {
                return Err(RingError::ElementOutOfRange { index: e, size: n });
            }
        }
        validate_axioms(n, &add, &mul, zero, one)?;

        let neg = (0..n)
            .map(|x| (0..n).find(|&y| add[x * n + y] == zero).expect("verified"))
            .collect();
        let one = one.or_else(|| detect_one(n, &mul));
        let commutative = (0..n).all(|x| (0..n).all(|y| mul[x * n + y] == mul[y * n + x]));
        let inverse = match one {
            Some(e) => (0..n)
                .map(|x| (0..n).find(|&y| mul[x * n + y] == e && mul[y * n + x] == e))
                .collect(),
            None => vec![None; n],
        };

        Ok(Arc::new(FiniteRing {
            elems,
            add,
            mul,
            neg,
            zero,
            one,
            commutative,
            inverse,
        }))
    }

    /// The ring of integers modulo `n`, elements labeled `0..n-1`.
    pub fn zmod(n: usize) -> Result<Arc<FiniteRing>, RingError> {
        if n == 0 || n > MAX_RING {
            return Err(RingError::SizeCap {
                size: n,
                max: MAX_RING,
            });
        }
        let elems = Universe::indexed(n)?;
        let add: Vec<Vec<usize>> = (0..n)
            .map(|x| (0..n).map(|y| (x + y) % n).collect())
            .collect();
        let mul: Vec<Vec<usize>> = (0..n)
            .map(|x| (0..n).map(|y| (x * y) % n).collect())
            .collect();
        let one = if n == 1 { Some(0) } else { Some(1) };
        FiniteRing::from_tables(elems, &add, &mul, 0, one)
    }

    /// Componentwise product ring; element `(x, y)` is labeled from the
    /// factor labels.
    pub fn product(a: &Arc<FiniteRing>, b: &Arc<FiniteRing>) -> Result<Arc<FiniteRing>, RingError> {
        let (na, nb) = (a.size(), b.size());
        let n = na.saturating_mul(nb);
        if n > MAX_RING {
            return Err(RingError::SizeCap {
                size: n,
                max: MAX_RING,
            });
        }
        let labels: Vec<String> = (0..na)
            .flat_map(|i| {
                let a = a.clone();
                let b = b.clone();
                (0..nb).map(move |j| format!("({},{})", a.label(i), b.label(j)))
            })
            .collect();
        let elems = Universe::new(labels)?;
        let pair = |i: usize, j: usize| i * nb + j;
        let mut add = vec![vec![0; n]; n];
        let mut mul = vec![vec![0; n]; n];
        for i1 in 0..na {
            for j1 in 0..nb {
                for i2 in 0..na {
                    for j2 in 0..nb {
                        let (x, y) = (pair(i1, j1), pair(i2, j2));
                        add[x][y] = pair(a.add(i1, i2), b.add(j1, j2));
                        mul[x][y] = pair(a.mul(i1, i2), b.mul(j1, j2));
                    }
                }
            }
        }
        let zero = pair(a.zero(), b.zero());
        let one = match (a.one(), b.one()) {
            (Some(ea), Some(eb)) => Some(pair(ea, eb)),
            _ => None,
        };
        FiniteRing::from_tables(elems, &add, &mul, zero, one)
    }

    pub fn size(&self) -> usize {
        self.elems.size()
    }

    pub fn elems(&self) -> &Arc<Universe> {
        &self.elems
    }

    pub fn label(&self, x: usize) -> &str {
        self.elems.label(x)
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.size() + y]
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.size() + y]
    }

    pub fn neg(&self, x: usize) -> usize {
        self.neg[x]
    }

    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> Option<usize> {
        self.one
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn is_unit(&self, x: usize) -> bool {
        self.inverse[x].is_some()
    }

    pub fn inverse_of(&self, x: usize) -> Option<usize> {
        self.inverse[x]
    }

    /// Elements with a two-sided multiplicative inverse, ascending.
    pub fn units(&self) -> Vec<usize> {
        (0..self.size()).filter(|&x| self.is_unit(x)).collect()
    }

    /// Smallest `k ≥ 1` with `k·x = 0`.
    pub fn additive_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut k = 1;
        while acc != self.zero {
            acc = self.add(acc, x);
            k += 1;
        }
        k
    }

    pub fn add_table(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        (0..n)
            .map(|x| self.add[x * n..(x + 1) * n].to_vec())
            .collect()
    }

    pub fn mul_table(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        (0..n)
            .map(|x| self.mul[x * n..(x + 1) * n].to_vec())
            .collect()
    }

    pub(crate) fn check_subset(&self, s: &Subset) -> Result<(), RingError> {
        if same_universe(s.universe(), &self.elems) {
            Ok(())
        } else {
            Err(RingError::Set(SetError::UniverseMismatch))
        }
    }
}

fn flatten_table(n: usize, table: &[Vec<usize>]) -> Result<Vec<usize>, RingError> {
    if table.len() != n {
        return Err(RingError::TableShape {
            expected: n,
            got: table.len(),
        });
    }
    let mut flat = Vec::with_capacity(n * n);
    for row in table {
        if row.len() != n {
            return Err(RingError::TableShape {
                expected: n,
                got: row.len(),
            });
        }
        for &entry in row {
            if entry >= n {
                return Err(RingError::TableEntry { entry, size: n });
            }
            flat.push(entry);
        }
    }
    Ok(flat)
}

/// Exhaustive axiom check; witnesses are the first failing tuple in
/// lexicographic element order.
fn validate_axioms(
    n: usize,
    add: &[usize],
    mul: &[usize],
    zero: usize,
    one: Option<usize>,
) -> Result<(), RingError> {
    let a = |x: usize, y: usize| add[x * n + y];
    let m = |x: usize, y: usize| mul[x * n + y];

    for x in 0..n {
        for y in 0..n {
            if a(x, y) != a(y, x) {
                return Err(RingError::AxiomViolation {
                    axiom: RingAxiom::AddCommutativity,
                    witness: vec![x, y],
                });
            }
        }
    }
    for x in 0..n {
        if a(zero, x) != x || a(x, zero) != x {
            return Err(RingError::AxiomViolation {
                axiom: RingAxiom::AddIdentity,
                witness: vec![x],
            });
        }
    }
    for x in 0..n {
        if !(0..n).any(|y| a(x, y) == zero) {
            return Err(RingError::AxiomViolation {
                axiom: RingAxiom::AddInverse,
                witness: vec![x],
            });
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if a(a(x, y), z) != a(x, a(y, z)) {
                    return Err(RingError::AxiomViolation {
                        axiom: RingAxiom::AddAssociativity,
                        witness: vec![x, y, z],
                    });
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if m(m(x, y), z) != m(x, m(y, z)) {
                    return Err(RingError::AxiomViolation {
                        axiom: RingAxiom::MulAssociativity,
                        witness: vec![x, y, z],
                    });
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if m(x, a(y, z)) != a(m(x, y), m(x, z)) {
                    return Err(RingError::AxiomViolation {
                        axiom: RingAxiom::LeftDistributivity,
                        witness: vec![x, y, z],
                    });
                }
                if m(a(y, z), x) != a(m(y, x), m(z, x)) {
                    return Err(RingError::AxiomViolation {
                        axiom: RingAxiom::RightDistributivity,
                        witness: vec![x, y, z],
                    });
                }
            }
        }
    }
    if let Some(e) = one {
        for x in 0..n {
            if m(e, x) != x || m(x, e) != x {
                return Err(RingError::AxiomViolation {
                    axiom: RingAxiom::MulIdentity,
                    witness: vec![x],
                });
            }
        }
    }
    Ok(())
}

fn detect_one(n: usize, mul: &[usize]) -> Option<usize> {
    (0..n).find(|&e| (0..n).all(|x| mul[e * n + x] == x && mul[x * n + e] == x))
}
