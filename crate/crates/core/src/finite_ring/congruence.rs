//! Ring congruences: equivalence relations compatible with both operations.
//!
//! A valid congruence is checked for additive compatibility (`x ~ y` implies
//! `x+c ~ y+c`) and for two-sided multiplicative compatibility, and is then
//! verified to coincide with the coset partition of the ideal that is the
//! block of zero — on rings the two descriptions are equivalent.

use std::fmt;
use std::sync::Arc;

use crate::finite_sets::Subset;

use super::{FiniteRing, RingError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompatOp {
    Add,
    MulLeft,
    MulRight,
}

impl fmt::Display for CompatOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CompatOp::Add => "addition",
            CompatOp::MulLeft => "left multiplication",
            CompatOp::MulRight => "right multiplication",
        })
    }
}

/// `x ~ y` but applying `op` with `c` separates the pair into different blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompatibilityViolation {
    pub op: CompatOp,
    pub x: usize,
    pub y: usize,
    pub c: usize,
}

impl fmt::Display for CompatibilityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "congruence incompatible with {}: {} ~ {} but combining with {} separates them",
            self.op, self.x, self.y, self.c
        )
    }
}

/// A validated ring congruence, stored as a block partition. Blocks are
/// numbered in order of their least element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    ring: Arc<FiniteRing>,
    block_of: Vec<usize>,
    blocks: Vec<Subset>,
}

impl Congruence {
    /// Validates a block partition as a congruence.
    pub fn from_partition(
        ring: &Arc<FiniteRing>,
        blocks: &[Subset],
    ) -> Result<Congruence, RingError> {
        let n = ring.size();
        for b in blocks {
            ring.check_subset(b)?;
        }
        let mut seen = vec![0usize; n];
        for b in blocks {
            for x in b.iter() {
                seen[x] += 1;
            }
        }
        if let Some(x) = (0..n).find(|&x| seen[x] != 1) {
            return Err(RingError::NotAPartition {
                element: x,
                count: seen[x],
            });
        }

        // Renumber blocks by least element for a canonical layout.
        let mut ordered: Vec<Subset> = blocks.iter().filter(|b| !b.is_empty()).cloned().collect();
        ordered.sort_by_key(|b| b.iter().next().expect("non-empty block"));
        let mut block_of = vec![0usize; n];
        for (i, b) in ordered.iter().enumerate() {
            for x in b.iter() {
                block_of[x] = i;
            }
        }

        let cong = Congruence {
            ring: Arc::clone(ring),
            block_of,
            blocks: ordered,
        };
        cong.validate()?;
        Ok(cong)
    }

    /// The coset partition `x ~ y ⟺ x - y ∈ I` of an ideal.
    pub fn from_ideal(ring: &Arc<FiniteRing>, ideal: &Subset) -> Result<Congruence, RingError> {
        if let Some(v) = ring.is_ideal(ideal)? {
            return Err(RingError::NotAnIdeal(v));
        }
        let mut blocks: Vec<Subset> = Vec::new();
        let mut covered = Subset::empty(ring.elems());
        for x in 0..ring.size() {
            if covered.contains(x) {
                continue;
            }
            let coset = Subset::from_indices(ring.elems(), ideal.iter().map(|i| ring.add(x, i)))?;
            covered = covered.union(&coset)?;
            blocks.push(coset);
        }
        Congruence::from_partition(ring, &blocks)
    }

    /// Singleton classes; the finest congruence.
    pub fn identity(ring: &Arc<FiniteRing>) -> Congruence {
        let blocks: Vec<Subset> = (0..ring.size())
            .map(|x| {
                let mut s = Subset::empty(ring.elems());
                s.insert(x);
                s
            })
            .collect();
        Congruence::from_partition(ring, &blocks).expect("identity congruence is always valid")
    }

    /// One block holding everything; the coarsest congruence.
    pub fn total(ring: &Arc<FiniteRing>) -> Congruence {
        Congruence::from_partition(ring, &[Subset::full(ring.elems())])
            .expect("total congruence is always valid")
    }

    fn validate(&self) -> Result<(), RingError> {
        let ring = &self.ring;
        let n = ring.size();
        for x in 0..n {
            for y in 0..n {
                if self.block_of[x] != self.block_of[y] {
                    continue;
                }
                for c in 0..n {
                    if self.block_of[ring.add(x, c)] != self.block_of[ring.add(y, c)] {
                        return Err(RingError::Compatibility(CompatibilityViolation {
                            op: CompatOp::Add,
                            x,
                            y,
                            c,
                        }));
                    }
                    if self.block_of[ring.mul(x, c)] != self.block_of[ring.mul(y, c)] {
                        return Err(RingError::Compatibility(CompatibilityViolation {
                            op: CompatOp::MulRight,
                            x,
                            y,
                            c,
                        }));
                    }
                    if self.block_of[ring.mul(c, x)] != self.block_of[ring.mul(c, y)] {
                        return Err(RingError::Compatibility(CompatibilityViolation {
                            op: CompatOp::MulLeft,
                            x,
                            y,
                            c,
                        }));
                    }
                }
            }
        }

        // The block of zero must be an ideal and every block one of its
        // additive cosets.
        let zero_block = self.class_of(ring.zero()).clone();
        if let Some(v) = ring.is_ideal(&zero_block)? {
            return Err(RingError::Internal(format!(
                "congruence passed compatibility but its zero block is not an ideal ({v})"
            )));
        }
        for x in 0..n {
            let coset =
                Subset::from_indices(ring.elems(), zero_block.iter().map(|i| ring.add(x, i)))?;
            if &coset != self.class_of(x) {
                return Err(RingError::Internal(format!(
                    "block of {x} is not the coset {coset} of the zero block"
                )));
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn class_of(&self, x: usize) -> &Subset {
        &self.blocks[self.block_of[x]]
    }

    /// The block of zero, which validation established to be an ideal.
    pub fn zero_block(&self) -> &Subset {
        self.class_of(self.ring.zero())
    }
}

/// Every congruence of the ring, found by scanning all set partitions of the
/// element set (restricted-growth enumeration). Capped to keep the Bell
/// number manageable.
pub fn enumerate_congruences(ring: &Arc<FiniteRing>) -> Result<Vec<Congruence>, RingError> {
    const MAX: usize = 10;
    let n = ring.size();
    if n > MAX {
        return Err(RingError::SizeCap { size: n, max: MAX });
    }
    let mut out = Vec::new();
    let mut assignment = vec![0usize; n];
    partitions_rec(ring, &mut assignment, 1, &mut out)?;
    Ok(out)
}

fn partitions_rec(
    ring: &Arc<FiniteRing>,
    assignment: &mut Vec<usize>,
    pos: usize,
    out: &mut Vec<Congruence>,
) -> Result<(), RingError> {
    let n = ring.size();
    if pos == n {
        let block_count = assignment.iter().max().copied().unwrap_or(0) + 1;
        let mut blocks = vec![Subset::empty(ring.elems()); block_count];
        for (x, &b) in assignment.iter().enumerate() {
            blocks[b].insert(x);
        }
        if let Ok(c) = Congruence::from_partition(ring, &blocks) {
            out.push(c);
        }
        return Ok(());
    }
    let max_used = assignment[..pos].iter().max().copied().unwrap_or(0);
    for b in 0..=max_used + 1 {
        assignment[pos] = b;
        partitions_rec(ring, assignment, pos + 1, out)?;
    }
    Ok(())
}
