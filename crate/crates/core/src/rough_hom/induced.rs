//! Set-valued maps induced through a surjective ring homomorphism:
//! `F1(x) = rho⁻¹(F2(rho(x)))`, the commuting law for upper approximations,
//! and the transfer of powerfulness — probed both with and without
//! injectivity of `rho`, since the latter configuration can break.

use std::sync::Arc;

use crate::finite_ring::RingHom;
use crate::finite_sets::{same_universe, SetValuedMap, Subset};

use super::{PowerfulReport, RoughHomError, SetValuedRingHom};

/// `F1(x) = {s : rho(s) ∈ F2(rho(x))}` on the source of `rho`; requires
/// `rho` surjective and `F2` a set-valued map on its target ring. The result
/// is total because preimages of non-empty sets under a surjection are
/// non-empty.
pub fn induced_svh(
    rho: &RingHom,
    f2: &SetValuedRingHom,
) -> Result<SetValuedRingHom, RoughHomError> {
    if !rho.is_surjective() {
        return Err(RoughHomError::NotSurjective);
    }
    if !same_universe(f2.source().elems(), rho.target().elems())
        || !same_universe(f2.target().elems(), rho.target().elems())
    {
        return Err(RoughHomError::Endpoints);
    }
    let source = rho.source();
    let images: Vec<Subset> = (0..source.size())
        .map(|x| rho.preimage_of_subset(f2.image_of(rho.apply(x))))
        .collect::<Result<_, _>>()?;
    let map = SetValuedMap::new(
        Arc::clone(source.elems()),
        Arc::clone(source.elems()),
        images,
    )?;
    SetValuedRingHom::new(Arc::clone(source), Arc::clone(source), map)
}

/// Both sides of the commuting law `rho(upper_F1(A)) = upper_F2(rho(A))`
/// and the first differing element, if any.
#[derive(Debug, Clone)]
pub struct Thm42Outcome {
    pub lhs: Subset,
    pub rhs: Subset,
    pub witness: Option<usize>,
}

impl Thm42Outcome {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// Checks `rho(upper_F1(A)) = upper_F2(rho(A))` where `F1` is the induced
/// map; `a` is a subset of the source elements.
pub fn check_thm42(
    rho: &RingHom,
    f2: &SetValuedRingHom,
    a: &Subset,
) -> Result<Thm42Outcome, RoughHomError> {
    let f1 = induced_svh(rho, f2)?;
    let lhs = rho.image_of_subset(&f1.map().upper_approx(a)?)?;
    let rhs = f2.map().upper_approx(&rho.image_of_subset(a)?)?;
    let witness = (0..rho.target().size()).find(|&y| lhs.contains(y) != rhs.contains(y));
    Ok(Thm42Outcome { lhs, rhs, witness })
}

/// Powerfulness of the induced map, with the injectivity of `rho` recorded
/// so a harness can probe whether dropping injectivity ever breaks it.
#[derive(Debug, Clone)]
pub struct Thm43Report {
    pub rho_injective: bool,
    pub induced: SetValuedRingHom,
    pub report: PowerfulReport,
}

/// Requires `F2` powerful, induces `F1` and classifies it.
pub fn check_thm43(rho: &RingHom, f2: &SetValuedRingHom) -> Result<Thm43Report, RoughHomError> {
    let f2_report = f2.is_powerful();
    if !f2_report.is_powerful() {
        return Err(RoughHomError::NotPowerful(Box::new(f2_report)));
    }
    let induced = induced_svh(rho, f2)?;
    let report = induced.is_powerful();
    Ok(Thm43Report {
        rho_injective: rho.is_injective(),
        induced,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_ring::{Congruence, FiniteRing};

    fn mod_map(n: usize, m: usize) -> RingHom {
        let src = FiniteRing::zmod(n).unwrap();
        let dst = FiniteRing::zmod(m).unwrap();
        RingHom::from_table(&src, &dst, (0..n).map(|x| x % m).collect()).unwrap()
    }

    #[test]
    fn identity_induction_gives_back_f2() {
        let z6 = FiniteRing::zmod(6).unwrap();
        let f2 = SetValuedRingHom::from_congruence(
            &Congruence::from_ideal(&z6, &Subset::from_indices(z6.elems(), [0, 2, 4]).unwrap())
                .unwrap(),
        );
        let f1 = induced_svh(&RingHom::identity(&z6), &f2).unwrap();
        assert_eq!(f1.map(), f2.map());
    }

    #[test]
    fn preimage_classes_of_mod3() {
        let rho = mod_map(6, 3);
        let z3 = rho.target();
        let f2 = SetValuedRingHom::from_congruence(&Congruence::identity(z3));
        let f1 = induced_svh(&rho, &f2).unwrap();
        let z6 = rho.source();
        assert_eq!(
            f1.image_of(1),
            &Subset::from_indices(z6.elems(), [1, 4]).unwrap()
        );

        // constant-full F2 induces constant-full F1
        let full = SetValuedRingHom::from_congruence(&Congruence::total(z3));
        let f1 = induced_svh(&rho, &full).unwrap();
        assert_eq!(f1.image_of(2), &Subset::full(z6.elems()));
    }

    #[test]
    fn non_surjective_rho_is_rejected() {
        let z2 = FiniteRing::zmod(2).unwrap();
        let z4 = FiniteRing::zmod(4).unwrap();
        let rho = RingHom::from_table(&z2, &z4, vec![0, 0]).unwrap();
        let f2 = SetValuedRingHom::from_congruence(&Congruence::identity(&z4));
        assert!(matches!(
            induced_svh(&rho, &f2),
            Err(RoughHomError::NotSurjective)
        ));
    }

    #[test]
    fn upper_approximations_commute_with_rho() {
        // identity reduction: both sides are literally the same set
        let z6 = FiniteRing::zmod(6).unwrap();
        let id = RingHom::identity(&z6);
        let f2 = SetValuedRingHom::from_congruence(
            &Congruence::from_ideal(&z6, &Subset::from_indices(z6.elems(), [0, 2, 4]).unwrap())
                .unwrap(),
        );
        for mask in 0u64..64 {
            let a = Subset::from_low_mask(z6.elems(), mask);
            assert!(check_thm42(&id, &f2, &a).unwrap().holds());
        }

        let rho = mod_map(6, 3);
        let f2 = SetValuedRingHom::from_congruence(&Congruence::identity(rho.target()));

        let a = Subset::from_indices(rho.source().elems(), [1]).unwrap();
        let outcome = check_thm42(&rho, &f2, &a).unwrap();
        assert!(outcome.holds());
        assert_eq!(
            outcome.lhs,
            Subset::from_indices(rho.target().elems(), [1]).unwrap()
        );

        // exhaustive over all 64 subsets of Z6
        for mask in 0u64..64 {
            let a = Subset::from_low_mask(rho.source().elems(), mask);
            assert!(check_thm42(&rho, &f2, &a).unwrap().holds(), "A = {a}");
        }
    }

    #[test]
    fn induced_powerfulness_with_and_without_injectivity() {
        // bijective rho transports powerfulness
        let z6 = FiniteRing::zmod(6).unwrap();
        let id = RingHom::identity(&z6);
        let f2 = SetValuedRingHom::from_congruence(
            &Congruence::from_ideal(&z6, &Subset::from_indices(z6.elems(), [0, 2, 4]).unwrap())
                .unwrap(),
        );
        let r = check_thm43(&id, &f2).unwrap();
        assert!(r.rho_injective);
        assert!(r.report.is_powerful());

        // surjective non-injective: Z6 -> Z3 with identity classes stays powerful
        let rho = mod_map(6, 3);
        let f2 = SetValuedRingHom::from_congruence(&Congruence::identity(rho.target()));
        let r = check_thm43(&rho, &f2).unwrap();
        assert!(!r.rho_injective);
        assert!(r.report.is_powerful());

        // ... but Z4 -> Z2 with identity classes induces the parity classes
        // of Z4, which are not powerful: injectivity cannot be dropped.
        let rho = mod_map(4, 2);
        let f2 = SetValuedRingHom::from_congruence(&Congruence::identity(rho.target()));
        let r = check_thm43(&rho, &f2).unwrap();
        assert!(!r.rho_injective);
        assert!(!r.report.is_powerful());
        assert!(!r.report.multiplicative.holds());
    }

    #[test]
    fn induction_is_functorial() {
        let rho = mod_map(12, 6);
        let sigma = mod_map(6, 3);
        let z3 = sigma.target();
        for f2 in [
            SetValuedRingHom::from_congruence(&Congruence::identity(z3)),
            SetValuedRingHom::from_congruence(&Congruence::total(z3)),
        ] {
            let composed = rho.then(&sigma).unwrap();
            let direct = induced_svh(&composed, &f2).unwrap();
            let staged = induced_svh(&rho, &induced_svh(&sigma, &f2).unwrap()).unwrap();
            assert_eq!(direct.map(), staged.map());
        }
    }
}
