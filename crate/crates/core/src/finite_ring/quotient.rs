//! Quotient constructions: by a congruence (always a ring) and by a mere
//! additive subgroup, where the induced multiplication may fail to be
//! representative-independent and the failure is witnessed instead of hidden.

use std::sync::Arc;

use crate::finite_sets::{Subset, Universe};

use super::{Congruence, FiniteRing, RingError, RingHom};

/// Representatives `(a1, b1)` and `(a2, b2)` of the same coset pair whose
/// products land in different cosets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MulWitness {
    pub coset_a: usize,
    pub coset_b: usize,
    pub a1: usize,
    pub b1: usize,
    pub a2: usize,
    pub b2: usize,
}

/// Additive cosets of a subgroup with the induced operations. Addition is
/// always well-defined; multiplication only when the products are
/// representative-independent, which holds whenever the subgroup is an ideal.
#[derive(Debug)]
pub struct CosetSpace {
    ring: Arc<FiniteRing>,
    subgroup: Subset,
    cosets: Vec<Subset>,
    coset_of: Vec<usize>,
    induced_add: Vec<usize>,
    induced_mul: Option<Vec<usize>>,
    mul_failure: Option<MulWitness>,
    quotient: Option<Arc<FiniteRing>>,
}

impl FiniteRing {
    /// Partitions the ring into additive cosets of `k` and induces the
    /// operations; `k` must be an additive subgroup.
    pub fn quotient_by_subgroup(
        self: &Arc<FiniteRing>,
        k: &Subset,
    ) -> Result<CosetSpace, RingError> {
        if let Some(v) = self.is_additive_subgroup(k)? {
            return Err(RingError::NotASubgroup(v));
        }
        let n = self.size();

        let mut cosets: Vec<Subset> = Vec::new();
        let mut coset_of = vec![usize::MAX; n];
        for x in 0..n {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let coset = Subset::from_indices(self.elems(), k.iter().map(|i| self.add(x, i)))?;
            let idx = cosets.len();
            for m in coset.iter() {
                coset_of[m] = idx;
            }
            cosets.push(coset);
        }
        let nc = cosets.len();

        // Induced addition via representatives, then verified on all pairs.
        let rep = |i: usize| cosets[i].iter().next().expect("cosets are non-empty");
        let mut induced_add = vec![0usize; nc * nc];
        for i in 0..nc {
            for j in 0..nc {
                induced_add[i * nc + j] = coset_of[self.add(rep(i), rep(j))];
            }
        }
        for a in 0..n {
            for b in 0..n {
                let expect = induced_add[coset_of[a] * nc + coset_of[b]];
                assert_eq!(
                    coset_of[self.add(a, b)],
                    expect,
                    "coset addition must be representative-independent"
                );
            }
        }

        // Induced multiplication: scan every element pair for
        // representative-independence and keep the first conflict.
        let mut table = vec![usize::MAX; nc * nc];
        let mut first_pair = vec![(0usize, 0usize); nc * nc];
        let mut mul_failure = None;
        'scan: for a in 0..n {
            for b in 0..n {
                let slot = coset_of[a] * nc + coset_of[b];
                let prod = coset_of[self.mul(a, b)];
                if table[slot] == usize::MAX {
                    table[slot] = prod;
                    first_pair[slot] = (a, b);
                } else if table[slot] != prod {
                    let (a1, b1) = first_pair[slot];
                    mul_failure = Some(MulWitness {
                        coset_a: coset_of[a],
                        coset_b: coset_of[b],
                        a1,
                        b1,
                        a2: a,
                        b2: b,
                    });
                    break 'scan;
                }
            }
        }
        let induced_mul = if mul_failure.is_none() {
            Some(table)
        } else {
            None
        };

        let quotient = match &induced_mul {
            Some(mul) => Some(coset_ring(
                self,
                &cosets,
                &induced_add,
                mul,
                coset_of[self.zero()],
            )?),
            None => None,
        };

        Ok(CosetSpace {
            ring: Arc::clone(self),
            subgroup: k.clone(),
            cosets,
            coset_of,
            induced_add,
            induced_mul,
            mul_failure,
            quotient,
        })
    }
}

impl Congruence {
    /// The quotient ring on the congruence blocks together with the
    /// canonical projection. The block tables are induced by representatives
    /// and re-verified by brute force.
    pub fn quotient(&self) -> Result<(Arc<FiniteRing>, RingHom), RingError> {
        let ring = self.ring();
        let space = ring.quotient_by_subgroup(self.zero_block())?;
        let quotient = space.as_ring().ok_or_else(|| {
            RingError::Internal(format!(
                "congruence quotient multiplication not well-defined: {:?}",
                space.mul_failure()
            ))
        })?;
        let table: Vec<usize> = (0..ring.size()).map(|x| space.coset_of(x)).collect();
        let projection = RingHom::from_table(ring, quotient, table)?;
        Ok((Arc::clone(quotient), projection))
    }
}

fn coset_ring(
    ring: &FiniteRing,
    cosets: &[Subset],
    add: &[usize],
    mul: &[usize],
    zero: usize,
) -> Result<Arc<FiniteRing>, RingError> {
    let labels: Vec<String> = cosets
        .iter()
        .map(|c| {
            format!(
                "[{}]",
                ring.label(c.iter().next().expect("non-empty coset"))
            )
        })
        .collect();
    let elems = Universe::new(labels)?;
    let nc = cosets.len();
    let add: Vec<Vec<usize>> = (0..nc)
        .map(|i| add[i * nc..(i + 1) * nc].to_vec())
        .collect();
    let mul: Vec<Vec<usize>> = (0..nc)
        .map(|i| mul[i * nc..(i + 1) * nc].to_vec())
        .collect();
    FiniteRing::from_tables(elems, &add, &mul, zero, None)
}

impl CosetSpace {
    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn subgroup(&self) -> &Subset {
        &self.subgroup
    }

    pub fn cosets(&self) -> &[Subset] {
        &self.cosets
    }

    pub fn count(&self) -> usize {
        self.cosets.len()
    }

    pub fn coset_of(&self, x: usize) -> usize {
        self.coset_of[x]
    }

    pub fn induced_add(&self, i: usize, j: usize) -> usize {
        self.induced_add[i * self.count() + j]
    }

    pub fn mul_well_defined(&self) -> bool {
        self.induced_mul.is_some()
    }

    pub fn mul_failure(&self) -> Option<&MulWitness> {
        self.mul_failure.as_ref()
    }

    pub fn induced_mul(&self, i: usize, j: usize) -> Option<usize> {
        self.induced_mul.as_ref().map(|t| t[i * self.count() + j])
    }

    /// The cosets as a validated ring, when multiplication is well-defined.
    pub fn as_ring(&self) -> Option<&Arc<FiniteRing>> {
        self.quotient.as_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_ring::find_isomorphism;

    fn subset(ring: &FiniteRing, elems: &[usize]) -> Subset {
        Subset::from_indices(ring.elems(), elems.iter().copied()).unwrap()
    }

    #[test]
    fn quotient_of_z6_by_even_ideal() {
        let z6 = FiniteRing::zmod(6).unwrap();
        let c = Congruence::from_ideal(&z6, &subset(&z6, &[0, 2, 4])).unwrap();
        let (q, proj) = c.quotient().unwrap();
        assert_eq!(q.size(), 2);
        assert!(proj.is_surjective());
        assert_eq!(proj.apply(3), q.elems().index_of("[1]").unwrap());
        let z2 = FiniteRing::zmod(2).unwrap();
        assert!(find_isomorphism(&q, &z2).unwrap().is_some());
    }

    #[test]
    fn quotient_of_z6_by_three_ideal() {
        let z6 = FiniteRing::zmod(6).unwrap();
        let c = Congruence::from_ideal(&z6, &subset(&z6, &[0, 3])).unwrap();
        let (q, _) = c.quotient().unwrap();
        assert_eq!(q.size(), 3);
        let z3 = FiniteRing::zmod(3).unwrap();
        assert!(find_isomorphism(&q, &z3).unwrap().is_some());
    }

    #[test]
    fn quotient_by_total_congruence_is_zero_ring() {
        let z6 = FiniteRing::zmod(6).unwrap();
        let (q, _) = Congruence::total(&z6).quotient().unwrap();
        assert_eq!(q.size(), 1);
        assert_eq!(q.zero(), q.one().unwrap());
    }

    #[test]
    fn coset_space_examples() {
        let z6 = FiniteRing::zmod(6).unwrap();

        let s = z6.quotient_by_subgroup(&subset(&z6, &[0, 2, 4])).unwrap();
        assert_eq!(s.count(), 2);
        assert!(s.mul_well_defined());

        let s = z6.quotient_by_subgroup(&subset(&z6, &[0, 3])).unwrap();
        assert_eq!(s.count(), 3);
        assert!(s.mul_well_defined());

        let s = z6.quotient_by_subgroup(&subset(&z6, &[0])).unwrap();
        assert_eq!(s.count(), 6);
        let q = s.as_ring().unwrap();
        assert!(find_isomorphism(q, &z6).unwrap().is_some());
    }

    #[test]
    fn subgroup_that_is_no_ideal_can_break_multiplication() {
        // In Z2 x Z2 the diagonal {(0,0),(1,1)} is a subring but not an
        // ideal; its cosets do not carry a well-defined product.
        let z2 = FiniteRing::zmod(2).unwrap();
        let p = FiniteRing::product(&z2, &z2).unwrap();
        let diag = subset(&p, &[0, 3]);
        let s = p.quotient_by_subgroup(&diag).unwrap();
        assert_eq!(s.count(), 2);
        assert!(!s.mul_well_defined());
        let w = s.mul_failure().unwrap();
        // Re-check the witness: same coset pair, different product cosets.
        assert_eq!(s.coset_of(w.a1), s.coset_of(w.a2));
        assert_eq!(s.coset_of(w.b1), s.coset_of(w.b2));
        assert_ne!(s.coset_of(p.mul(w.a1, w.b1)), s.coset_of(p.mul(w.a2, w.b2)));
    }

    #[test]
    fn non_subgroup_is_rejected() {
        let z6 = FiniteRing::zmod(6).unwrap();
        assert!(matches!(
            z6.quotient_by_subgroup(&subset(&z6, &[0, 1])),
            Err(RingError::NotASubgroup(_))
        ));
    }
}
