//! Subring and ideal predicates with witnesses, generated subrings, and
//! exhaustive enumeration of ideals and subrings.
//!
//! "Subring" here means sub-rng: a non-empty subset closed under addition,
//! additive inverse and multiplication. Containment of a multiplicative
//! identity is not required; kernels of set-valued homomorphisms typically
//! have none.

use std::fmt;

use crate::finite_sets::Subset;

use super::{FiniteRing, RingError, MAX_IDEAL_ENUM};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubringViolation {
    Empty,
    AddClosure { x: usize, y: usize },
    NegClosure { x: usize },
    MulClosure { x: usize, y: usize },
}

impl fmt::Display for SubringViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubringViolation::Empty => write!(f, "the subset is empty"),
            SubringViolation::AddClosure { x, y } => {
                write!(f, "not closed under + at ({x}, {y})")
            }
            SubringViolation::NegClosure { x } => write!(f, "not closed under negation at {x}"),
            SubringViolation::MulClosure { x, y } => {
                write!(f, "not closed under * at ({x}, {y})")
            }
        }
    }
}

/// Outcome of a subring check; failures carry the violated closure and a
/// witness pair in lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubringVerdict {
    Subring,
    NotSubring(SubringViolation),
}

impl SubringVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, SubringVerdict::Subring)
    }

    pub fn violation(&self) -> Option<SubringViolation> {
        match self {
            SubringVerdict::Subring => None,
            SubringVerdict::NotSubring(v) => Some(*v),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealViolation {
    NotSubgroup(SubringViolation),
    /// Multiplication by a ring element escapes the subset; `left` tells
    /// whether the ring element multiplied from the left.
    Absorb {
        r: usize,
        x: usize,
        left: bool,
    },
}

impl fmt::Display for IdealViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealViolation::NotSubgroup(v) => write!(f, "{v}"),
            IdealViolation::Absorb { r, x, left } => {
                if *left {
                    write!(f, "{r} * {x} escapes the subset")
                } else {
                    write!(f, "{x} * {r} escapes the subset")
                }
            }
        }
    }
}

impl FiniteRing {
    /// Checks the sub-rng criterion: non-empty and closed under `+`,
    /// additive inverse and `*`.
    pub fn is_subring(&self, s: &Subset) -> Result<SubringVerdict, RingError> {
        self.check_subset(s)?;
        if s.is_empty() {
            return Ok(SubringVerdict::NotSubring(SubringViolation::Empty));
        }
        for x in s.iter() {
            if !s.contains(self.neg(x)) {
                return Ok(SubringVerdict::NotSubring(SubringViolation::NegClosure {
                    x,
                }));
            }
        }
        for x in s.iter() {
            for y in s.iter() {
                if !s.contains(self.add(x, y)) {
                    return Ok(SubringVerdict::NotSubring(SubringViolation::AddClosure {
                        x,
                        y,
                    }));
                }
            }
        }
        for x in s.iter() {
            for y in s.iter() {
                if !s.contains(self.mul(x, y)) {
                    return Ok(SubringVerdict::NotSubring(SubringViolation::MulClosure {
                        x,
                        y,
                    }));
                }
            }
        }
        Ok(SubringVerdict::Subring)
    }

    /// Checks that `s` is an additive subgroup: contains zero and is closed
    /// under `+` and negation.
    pub fn is_additive_subgroup(&self, s: &Subset) -> Result<Option<SubringViolation>, RingError> {
        self.check_subset(s)?;
        if !s.contains(self.zero()) {
            return Ok(Some(SubringViolation::Empty));
        }
        for x in s.iter() {
            if !s.contains(self.neg(x)) {
                return Ok(Some(SubringViolation::NegClosure { x }));
            }
        }
        for x in s.iter() {
            for y in s.iter() {
                if !s.contains(self.add(x, y)) {
                    return Ok(Some(SubringViolation::AddClosure { x, y }));
                }
            }
        }
        Ok(None)
    }

    /// Checks that `s` is a two-sided ideal.
    pub fn is_ideal(&self, s: &Subset) -> Result<Option<IdealViolation>, RingError> {
        if let Some(v) = self.is_additive_subgroup(s)? {
            return Ok(Some(IdealViolation::NotSubgroup(v)));
        }
        for r in 0..self.size() {
            for x in s.iter() {
                if !s.contains(self.mul(r, x)) {
                    return Ok(Some(IdealViolation::Absorb { r, x, left: true }));
                }
                if !s.contains(self.mul(x, r)) {
                    return Ok(Some(IdealViolation::Absorb { r, x, left: false }));
                }
            }
        }
        Ok(None)
    }

    /// Least subset containing `s` closed under `+`, negation and `*`; the
    /// empty set generates the zero subring.
    pub fn subring_generated(&self, s: &Subset) -> Result<Subset, RingError> {
        self.check_subset(s)?;
        let mut closed = s.clone();
        closed.insert(self.zero());
        loop {
            let mut next = closed.clone();
            for x in closed.iter() {
                next.insert(self.neg(x));
                for y in closed.iter() {
                    next.insert(self.add(x, y));
                    next.insert(self.mul(x, y));
                }
            }
            if next == closed {
                return Ok(closed);
            }
            closed = next;
        }
    }

    /// All two-sided ideals in canonical order: ascending cardinality, ties
    /// broken lexicographically by element indices. Enumerates additive
    /// subgroups by closure growth rather than scanning all subsets.
    pub fn ideals(&self) -> Result<Vec<Subset>, RingError> {
        if self.size() > MAX_IDEAL_ENUM {
            return Err(RingError::SizeCap {
                size: self.size(),
                max: MAX_IDEAL_ENUM,
            });
        }
        let subgroups = self.additive_subgroups();
        let mut ideals: Vec<Subset> = Vec::new();
        for s in subgroups {
            if self.is_ideal(&s)?.is_none() {
                ideals.push(s);
            }
        }
        sort_canonical(&mut ideals);
        Ok(ideals)
    }

    /// All subrings (sub-rngs), canonical order as for [`ideals`](Self::ideals).
    pub fn subrings(&self) -> Result<Vec<Subset>, RingError> {
        if self.size() > MAX_IDEAL_ENUM {
            return Err(RingError::SizeCap {
                size: self.size(),
                max: MAX_IDEAL_ENUM,
            });
        }
        let mut out = Vec::new();
        for s in self.additive_subgroups() {
            if self.is_subring(&s)?.holds() {
                out.push(s);
            }
        }
        sort_canonical(&mut out);
        Ok(out)
    }

    /// Every additive subgroup, found by closing {0} ∪ generators under the
    /// group operations and growing one generator at a time.
    fn additive_subgroups(&self) -> Vec<Subset> {
        let zero_sub = {
            let mut s = Subset::empty(self.elems());
            s.insert(self.zero());
            s
        };
        let mut found = vec![zero_sub.clone()];
        let mut frontier = vec![zero_sub];
        while let Some(s) = frontier.pop() {
            for g in 0..self.size() {
                if s.contains(g) {
                    continue;
                }
                let mut gen = s.clone();
                gen.insert(g);
                let grown = self.additive_closure(&gen);
                if !found.contains(&grown) {
                    found.push(grown.clone());
                    frontier.push(grown);
                }
            }
        }
        found
    }

    fn additive_closure(&self, s: &Subset) -> Subset {
        let mut closed = s.clone();
        loop {
            let mut next = closed.clone();
            for x in closed.iter() {
                next.insert(self.neg(x));
                for y in closed.iter() {
                    next.insert(self.add(x, y));
                }
            }
            if next == closed {
                return closed;
            }
            closed = next;
        }
    }
}

fn sort_canonical(sets: &mut [Subset]) {
    sets.sort_by(|a, b| {
        a.cardinality()
            .cmp(&b.cardinality())
            .then_with(|| a.iter().collect::<Vec<_>>().cmp(&b.iter().collect()))
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subset(ring: &FiniteRing, elems: &[usize]) -> Subset {
        Subset::from_indices(ring.elems(), elems.iter().copied()).unwrap()
    }

    #[test]
    fn subring_verdicts_in_z6() {
        let z6 = FiniteRing::zmod(6).unwrap();
        assert!(z6.is_subring(&subset(&z6, &[0, 2, 4])).unwrap().holds());
        assert!(z6.is_subring(&subset(&z6, &[0])).unwrap().holds());

        let v = z6.is_subring(&subset(&z6, &[1, 3, 5])).unwrap();
        // negation-closed (pairs 1/5, 3/3), but 1+1 = 2 escapes
        assert_eq!(
            v.violation(),
            Some(SubringViolation::AddClosure { x: 1, y: 1 })
        );

        let v = z6.is_subring(&subset(&z6, &[0, 1, 5])).unwrap();
        assert_eq!(
            v.violation(),
            Some(SubringViolation::AddClosure { x: 1, y: 1 })
        );

        assert_eq!(
            z6.is_subring(&Subset::empty(z6.elems()))
                .unwrap()
                .violation(),
            Some(SubringViolation::Empty)
        );
    }

    #[test]
    fn generated_subrings() {
        let z6 = FiniteRing::zmod(6).unwrap();
        assert_eq!(
            z6.subring_generated(&subset(&z6, &[2])).unwrap(),
            subset(&z6, &[0, 2, 4])
        );
        assert_eq!(
            z6.subring_generated(&Subset::empty(z6.elems())).unwrap(),
            subset(&z6, &[0])
        );
        let full = Subset::full(z6.elems());
        assert_eq!(z6.subring_generated(&full).unwrap(), full);
    }

    #[test]
    fn ideal_enumeration() {
        let z6 = FiniteRing::zmod(6).unwrap();
        let ideals = z6.ideals().unwrap();
        assert_eq!(
            ideals,
            vec![
                subset(&z6, &[0]),
                subset(&z6, &[0, 3]),
                subset(&z6, &[0, 2, 4]),
                Subset::full(z6.elems()),
            ]
        );

        let z4 = FiniteRing::zmod(4).unwrap();
        assert_eq!(
            z4.ideals().unwrap(),
            vec![
                subset(&z4, &[0]),
                subset(&z4, &[0, 2]),
                Subset::full(z4.elems()),
            ]
        );
    }

    #[test]
    fn subring_but_not_ideal() {
        // The diagonal of Z2 x Z2 is a subring but absorbs nothing.
        let z2 = FiniteRing::zmod(2).unwrap();
        let p = FiniteRing::product(&z2, &z2).unwrap();
        let diag = subset(&p, &[0, 3]);
        assert!(p.is_subring(&diag).unwrap().holds());
        assert!(p.is_ideal(&diag).unwrap().is_some());
    }

    #[test]
    fn ideals_of_product_ring() {
        let z2 = FiniteRing::zmod(2).unwrap();
        let z4 = FiniteRing::zmod(4).unwrap();
        let p = FiniteRing::product(&z2, &z4).unwrap();
        // Ideals of a product of unital rings are products of ideals: 2 * 3.
        assert_eq!(p.ideals().unwrap().len(), 6);
    }
}
