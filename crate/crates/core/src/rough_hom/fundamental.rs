//! The image ring of a powerful set-valued homomorphism and the
//! fundamental-theorem pipeline: quotient the source by the kernel, collect
//! the distinct image sets under setwise operations, and exhibit
//! `phi(a + ker F) = F(a)` as an isomorphism. Every assertion failure is
//! reported as a finding with a witness instead of aborting.

use std::fmt;
use std::sync::Arc;

use crate::finite_ring::{CosetSpace, FiniteRing, MulWitness, SubringVerdict, SubringViolation};
use crate::finite_sets::{Subset, Universe};

use super::{setwise_add, setwise_mul, RoughHomError, SetValuedRingHom};

/// The distinct image sets `{F(x)}` as a ring under setwise operations.
#[derive(Debug)]
pub struct ImageRing {
    /// Validated ring on the distinct image sets.
    pub ring: Arc<FiniteRing>,
    /// The image sets, in order of first occurrence scanning the source.
    pub sets: Vec<Subset>,
    /// Index of `F(x)` in `sets`, per source element.
    pub class_of: Vec<usize>,
}

impl SetValuedRingHom {
    /// Builds the image ring. The powerful laws guarantee closure and the
    /// ring axioms; both are verified anyway and a failure surfaces as an
    /// error carrying the offending pair.
    pub fn image_ring(&self) -> Result<ImageRing, RoughHomError> {
        let report = self.is_powerful();
        if !report.is_powerful() {
            return Err(RoughHomError::NotPowerful(Box::new(report)));
        }
        let n = self.source().size();

        let mut sets: Vec<Subset> = Vec::new();
        let mut class_of = Vec::with_capacity(n);
        for x in 0..n {
            let image = self.image_of(x);
            match sets.iter().position(|s| s == image) {
                Some(i) => class_of.push(i),
                None => {
                    class_of.push(sets.len());
                    sets.push(image.clone());
                }
            }
        }

        let k = sets.len();
        let mut add = vec![vec![0usize; k]; k];
        let mut mul = vec![vec![0usize; k]; k];
        for i in 0..k {
            for j in 0..k {
                let sum = setwise_add(self.target(), &sets[i], &sets[j])?;
                add[i][j] =
                    sets.iter()
                        .position(|s| *s == sum)
                        .ok_or(RoughHomError::ImageNotClosed {
                            op: "addition",
                            x: i,
                            y: j,
                        })?;
                let prod = setwise_mul(self.target(), &sets[i], &sets[j])?;
                mul[i][j] =
                    sets.iter()
                        .position(|s| *s == prod)
                        .ok_or(RoughHomError::ImageNotClosed {
                            op: "multiplication",
                            x: i,
                            y: j,
                        })?;
            }
        }

        let labels: Vec<String> = sets
            .iter()
            .map(|s| format!("{{{}}}", s.labels().collect::<Vec<_>>().join(",")))
            .collect();
        let elems = Universe::new(labels)?;
        let zero = class_of[self.source().zero()];
        let ring = FiniteRing::from_tables(elems, &add, &mul, zero, None)?;
        Ok(ImageRing {
            ring,
            sets,
            class_of,
        })
    }

    /// Runs the full pipeline: kernel, kernel-subring check, coset space of
    /// the kernel, image ring, and the candidate isomorphism
    /// `phi(a + K) = F(a)` with well-definedness, bijectivity and both
    /// operation laws verified by brute force.
    pub fn fundamental_theorem(&self) -> Result<IsoReport, RoughHomError> {
        let report = self.is_powerful();
        if !report.is_powerful() {
            return Err(RoughHomError::NotPowerful(Box::new(report)));
        }
        let mut findings = Vec::new();

        let kernel = self.kernel();
        let kernel_verdict = self.source().is_subring(&kernel)?;
        if let Some(v) = kernel_verdict.violation() {
            findings.push(IsoFinding::KernelNotSubring(v));
        }

        let cosets = self.source().quotient_by_subgroup(&kernel)?;
        let image = self.image_ring()?;

        // phi via least representatives; well-defined iff F is constant on
        // every coset.
        let mut phi = Vec::with_capacity(cosets.count());
        for (ci, coset) in cosets.cosets().iter().enumerate() {
            let mut members = coset.iter();
            let rep = members.next().expect("cosets are non-empty");
            if let Some(b) = coset
                .iter()
                .find(|&b| image.class_of[b] != image.class_of[rep])
            {
                if !findings
                    .iter()
                    .any(|f| matches!(f, IsoFinding::NotConstantOnCoset { .. }))
                {
                    findings.push(IsoFinding::NotConstantOnCoset {
                        coset: ci,
                        a: rep,
                        b,
                    });
                }
            }
            phi.push(image.class_of[rep]);
        }

        'inj: for i in 0..phi.len() {
            for j in i + 1..phi.len() {
                if phi[i] == phi[j] {
                    findings.push(IsoFinding::NotInjective {
                        coset_a: i,
                        coset_b: j,
                    });
                    break 'inj;
                }
            }
        }
        if let Some(missed) = (0..image.sets.len()).find(|i| !phi.contains(i)) {
            findings.push(IsoFinding::NotSurjective {
                image_index: missed,
            });
        }

        'add: for i in 0..cosets.count() {
            for j in 0..cosets.count() {
                if image.ring.add(phi[i], phi[j]) != phi[cosets.induced_add(i, j)] {
                    findings.push(IsoFinding::AddMismatch {
                        coset_a: i,
                        coset_b: j,
                    });
                    break 'add;
                }
            }
        }
        match cosets.mul_failure() {
            Some(w) => findings.push(IsoFinding::CosetMulNotWellDefined(*w)),
            None => {
                'mul: for i in 0..cosets.count() {
                    for j in 0..cosets.count() {
                        let induced = cosets.induced_mul(i, j).expect("mul is well-defined");
                        if image.ring.mul(phi[i], phi[j]) != phi[induced] {
                            findings.push(IsoFinding::MulMismatch {
                                coset_a: i,
                                coset_b: j,
                            });
                            break 'mul;
                        }
                    }
                }
            }
        }

        Ok(IsoReport {
            kernel,
            kernel_verdict,
            cosets,
            image,
            phi,
            findings,
        })
    }
}

/// A verified step of the pipeline that failed, with its witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsoFinding {
    KernelNotSubring(SubringViolation),
    /// `F` takes two different values on one kernel coset.
    NotConstantOnCoset {
        coset: usize,
        a: usize,
        b: usize,
    },
    CosetMulNotWellDefined(MulWitness),
    NotInjective {
        coset_a: usize,
        coset_b: usize,
    },
    NotSurjective {
        image_index: usize,
    },
    AddMismatch {
        coset_a: usize,
        coset_b: usize,
    },
    MulMismatch {
        coset_a: usize,
        coset_b: usize,
    },
}

impl fmt::Display for IsoFinding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoFinding::KernelNotSubring(v) => write!(f, "kernel is not a subring: {v}"),
            IsoFinding::NotConstantOnCoset { coset, a, b } => write!(
                f,
                "phi ill-defined: F({a}) and F({b}) differ on coset {coset}"
            ),
            IsoFinding::CosetMulNotWellDefined(w) => write!(
                f,
                "coset product ill-defined at coset pair ({}, {}): ({}, {}) vs ({}, {})",
                w.coset_a, w.coset_b, w.a1, w.b1, w.a2, w.b2
            ),
            IsoFinding::NotInjective { coset_a, coset_b } => {
                write!(f, "phi identifies cosets {coset_a} and {coset_b}")
            }
            IsoFinding::NotSurjective { image_index } => {
                write!(f, "image set {image_index} is not reached by phi")
            }
            IsoFinding::AddMismatch { coset_a, coset_b } => {
                write!(f, "phi breaks addition at cosets ({coset_a}, {coset_b})")
            }
            IsoFinding::MulMismatch { coset_a, coset_b } => write!(
                f,
                "phi breaks multiplication at cosets ({coset_a}, {coset_b})"
            ),
        }
    }
}

/// Everything the fundamental-theorem pipeline produced. The theorem holds
/// for the input exactly when [`is_isomorphism`](Self::is_isomorphism).
#[derive(Debug)]
pub struct IsoReport {
    pub kernel: Subset,
    pub kernel_verdict: SubringVerdict,
    pub cosets: CosetSpace,
    pub image: ImageRing,
    /// Coset index to image-set index, `phi(a + K) = F(a)`.
    pub phi: Vec<usize>,
    pub findings: Vec<IsoFinding>,
}

impl IsoReport {
    pub fn is_isomorphism(&self) -> bool {
        self.findings.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_ring::{find_isomorphism, Congruence, RingHom};

    fn subset(ring: &FiniteRing, elems: &[usize]) -> Subset {
        Subset::from_indices(ring.elems(), elems.iter().copied()).unwrap()
    }

    fn classes(ring: &Arc<FiniteRing>, ideal: &[usize]) -> SetValuedRingHom {
        let ideal = subset(ring, ideal);
        SetValuedRingHom::from_congruence(&Congruence::from_ideal(ring, &ideal).unwrap())
    }

    #[test]
    fn image_ring_of_parity_classes() {
        let z6 = FiniteRing::zmod(6).unwrap();
        let f = classes(&z6, &[0, 2, 4]);
        let image = f.image_ring().unwrap();
        assert_eq!(image.ring.size(), 2);
        assert_eq!(image.ring.label(0), "{0,2,4}");
        assert_eq!(image.ring.label(1), "{1,3,5}");
        assert_eq!(image.ring.one(), Some(1));
        let z2 = FiniteRing::zmod(2).unwrap();
        assert!(find_isomorphism(&image.ring, &z2).unwrap().is_some());
    }

    #[test]
    fn image_ring_of_a_singleton_map_is_the_classical_image() {
        let z6 = FiniteRing::zmod(6).unwrap();
        let z3 = FiniteRing::zmod(3).unwrap();
        let rho = RingHom::from_table(&z6, &z3, vec![0, 1, 2, 0, 1, 2]).unwrap();
        let image = SetValuedRingHom::from_hom(&rho).image_ring().unwrap();
        assert_eq!(image.ring.size(), 3);
        assert!(find_isomorphism(&image.ring, &z3).unwrap().is_some());
    }

    #[test]
    fn image_ring_of_identity_classes_mirrors_the_ring() {
        let z6 = FiniteRing::zmod(6).unwrap();
        let f = SetValuedRingHom::from_congruence(&Congruence::identity(&z6));
        let image = f.image_ring().unwrap();
        assert_eq!(image.ring.size(), 6);
        assert!(find_isomorphism(&image.ring, &z6).unwrap().is_some());
    }

    #[test]
    fn image_ring_requires_powerful() {
        let z4 = FiniteRing::zmod(4).unwrap();
        assert!(matches!(
            classes(&z4, &[0, 2]).image_ring(),
            Err(RoughHomError::NotPowerful(_))
        ));
    }

    #[test]
    fn fundamental_theorem_for_parity_classes() {
        let z6 = FiniteRing::zmod(6).unwrap();
        let report = classes(&z6, &[0, 2, 4]).fundamental_theorem().unwrap();
        assert!(report.is_isomorphism(), "findings: {:?}", report.findings);
        assert_eq!(report.kernel, subset(&z6, &[0, 2, 4]));
        assert!(report.kernel_verdict.holds());
        assert_eq!(report.cosets.count(), 2);
        assert_eq!(report.image.ring.size(), 2);
        let z2 = FiniteRing::zmod(2).unwrap();
        assert!(find_isomorphism(&report.image.ring, &z2).unwrap().is_some());
    }

    #[test]
    fn fundamental_theorem_recovers_the_classical_statement() {
        let z6 = FiniteRing::zmod(6).unwrap();
        let z3 = FiniteRing::zmod(3).unwrap();
        let rho = RingHom::from_table(&z6, &z3, vec![0, 1, 2, 0, 1, 2]).unwrap();
        let report = SetValuedRingHom::from_hom(&rho)
            .fundamental_theorem()
            .unwrap();
        assert!(report.is_isomorphism());
        assert_eq!(report.kernel, subset(&z6, &[0, 3]));
        assert_eq!(report.cosets.count(), 3);
        assert!(find_isomorphism(&report.image.ring, &z3).unwrap().is_some());
    }

    #[test]
    fn fundamental_theorem_degenerate_cases() {
        for n in [1usize, 5, 8] {
            let r = FiniteRing::zmod(n).unwrap();
            let f = SetValuedRingHom::from_congruence(&Congruence::identity(&r));
            let report = f.fundamental_theorem().unwrap();
            assert!(report.is_isomorphism());
            assert_eq!(report.kernel.cardinality(), 1);
            assert_eq!(report.cosets.count(), n);
        }
    }

    #[test]
    fn fundamental_theorem_on_a_product_ring() {
        let z2 = FiniteRing::zmod(2).unwrap();
        let z4 = FiniteRing::zmod(4).unwrap();
        let p = FiniteRing::product(&z2, &z4).unwrap();
        let mut powerful = 0;
        for ideal in p.ideals().unwrap() {
            let f = SetValuedRingHom::from_congruence(&Congruence::from_ideal(&p, &ideal).unwrap());
            if !f.is_powerful().is_powerful() {
                continue;
            }
            powerful += 1;
            let report = f.fundamental_theorem().unwrap();
            assert!(report.is_isomorphism(), "Z2xZ4 mod {ideal}: {:?}", report.findings);
            assert_eq!(report.cosets.count(), p.size() / ideal.cardinality());
        }
        assert!(powerful >= 2, "at least the trivial congruences qualify");
    }

    #[test]
    fn non_unital_source_skips_the_unit_law_and_still_factors() {
        // the rng {0, 2} inside Z4: multiplication is identically zero, so
        // there is no one and no units to quantify over
        let elems = Universe::new(["0", "2"]).unwrap();
        let add = vec![vec![0, 1], vec![1, 0]];
        let mul = vec![vec![0, 0], vec![0, 0]];
        let rng = FiniteRing::from_tables(elems, &add, &mul, 0, None).unwrap();
        assert_eq!(rng.one(), None);

        let f = SetValuedRingHom::from_congruence(&Congruence::identity(&rng));
        let report = f.is_powerful();
        assert!(report.is_powerful());
        assert!(report.unit_inverse.holds(), "vacuous without a one");

        let iso = f.fundamental_theorem().unwrap();
        assert!(iso.is_isomorphism());
        assert_eq!(iso.image.ring.one(), None);
    }

    #[test]
    fn image_ring_is_isomorphic_to_the_congruence_quotient() {
        // cross-construction consistency on every ideal congruence of Z4..Z9
        for n in 4..=9 {
            let ring = FiniteRing::zmod(n).unwrap();
            for ideal in ring.ideals().unwrap() {
                let c = Congruence::from_ideal(&ring, &ideal).unwrap();
                let f = SetValuedRingHom::from_congruence(&c);
                if !f.is_powerful().is_powerful() {
                    continue;
                }
                let image = f.image_ring().unwrap();
                let (quotient, _) = c.quotient().unwrap();
                assert!(
                    find_isomorphism(&image.ring, &quotient).unwrap().is_some(),
                    "Z{n} mod {ideal}"
                );
            }
        }
    }
}
