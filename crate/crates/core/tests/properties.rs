//! Property tests for the invariants that hold on every input: duality and
//! monotonicity of the approximation operators, involution of map
//! inversion, the class laws over ideal congruences, and the kernel/coset
//! structure of powerful maps.

use std::sync::Arc;

use proptest::prelude::*;

use roughring::finite_ring::{find_isomorphism, Congruence, FiniteRing};
use roughring::finite_sets::{all_subsets, SetValuedMap, Subset, Universe};
use roughring::rough_hom::{setwise_add, setwise_mul, SetValuedRingHom};

fn subset_from_mask(u: &Arc<Universe>, mask: u64) -> Subset {
    Subset::from_indices(u, (0..u.size()).filter(|i| mask >> i & 1 == 1)).unwrap()
}

fn map_from_masks(x: &Arc<Universe>, y: &Arc<Universe>, masks: &[u64]) -> SetValuedMap {
    let images = masks.iter().map(|&m| subset_from_mask(y, m)).collect();
    SetValuedMap::new(Arc::clone(x), Arc::clone(y), images).unwrap()
}

/// A random map shape: source size, target size, image masks, subset masks.
fn map_and_sets() -> impl Strategy<Value = (usize, usize, Vec<u64>, u64, u64)> {
    (1usize..=8, 1usize..=8).prop_flat_map(|(xs, ys)| {
        let mask = (1u64 << ys) - 1;
        (
            Just(xs),
            Just(ys),
            prop::collection::vec(0..=mask, xs),
            0..=mask,
            0..=mask,
        )
    })
}

proptest! {
    #[test]
    fn duality((xs, ys, masks, a, _b) in map_and_sets()) {
        let xu = Universe::indexed(xs).unwrap();
        let yu = Universe::indexed(ys).unwrap();
        let f = map_from_masks(&xu, &yu, &masks);
        let a = subset_from_mask(&yu, a);
        let lower = f.lower_approx(&a).unwrap();
        let dual = f.upper_approx(&a.complement()).unwrap().complement();
        prop_assert_eq!(lower, dual);
    }

    #[test]
    fn monotonicity((xs, ys, masks, a, b) in map_and_sets()) {
        let xu = Universe::indexed(xs).unwrap();
        let yu = Universe::indexed(ys).unwrap();
        let f = map_from_masks(&xu, &yu, &masks);
        // force a ⊆ b by unioning
        let a = subset_from_mask(&yu, a);
        let b = a.union(&subset_from_mask(&yu, b)).unwrap();
        prop_assert!(f
            .lower_approx(&a)
            .unwrap()
            .is_subset_of(&f.lower_approx(&b).unwrap())
            .unwrap());
        prop_assert!(f
            .upper_approx(&a)
            .unwrap()
            .is_subset_of(&f.upper_approx(&b).unwrap())
            .unwrap());
    }

    #[test]
    fn inversion_is_an_involution((xs, ys, masks, _a, _b) in map_and_sets()) {
        let xu = Universe::indexed(xs).unwrap();
        let yu = Universe::indexed(ys).unwrap();
        let f = map_from_masks(&xu, &yu, &masks);
        prop_assert_eq!(f.invert().invert(), f);
    }

    #[test]
    fn upper_matches_the_inverse_map_view((xs, ys, masks, a, _b) in map_and_sets()) {
        // x ∈ upper(F, A) iff some y ∈ A has x ∈ F⁻¹(y)
        let xu = Universe::indexed(xs).unwrap();
        let yu = Universe::indexed(ys).unwrap();
        let f = map_from_masks(&xu, &yu, &masks);
        let a = subset_from_mask(&yu, a);
        let upper = f.upper_approx(&a).unwrap();
        let inv = f.invert();
        let mut via_inverse = Subset::empty(&xu);
        for y in a.iter() {
            via_inverse = via_inverse.union(inv.image_of(y)).unwrap();
        }
        prop_assert_eq!(upper, via_inverse);
    }

    #[test]
    fn total_map_bounds((xs, ys, masks, a, _b) in map_and_sets()) {
        let xu = Universe::indexed(xs).unwrap();
        let yu = Universe::indexed(ys).unwrap();
        let mask = (1u64 << ys) - 1;
        // force totality: empty images get the full target
        let masks: Vec<u64> = masks.iter().map(|&m| if m == 0 { mask } else { m }).collect();
        let f = map_from_masks(&xu, &yu, &masks);
        prop_assert!(f.is_total());
        let a = subset_from_mask(&yu, a);
        prop_assert!(f
            .lower_approx(&a)
            .unwrap()
            .is_subset_of(&f.upper_approx(&a).unwrap())
            .unwrap());
        prop_assert_eq!(f.upper_approx(&Subset::full(&yu)).unwrap(), Subset::full(&xu));
        prop_assert!(f.lower_approx(&Subset::empty(&yu)).unwrap().is_empty());
    }

    #[test]
    fn powerset_sum_is_an_exponent_two_group(size in 1usize..=8, a in 0u64..256, b in 0u64..256) {
        // randomized spot check above the exhaustive cap
        let u = Universe::indexed(size).unwrap();
        let mask = (1u64 << size) - 1;
        let a = subset_from_mask(&u, a & mask);
        let b = subset_from_mask(&u, b & mask);
        prop_assert!(a.symmetric_difference(&a).unwrap().is_empty());
        let c = a.intersection(&b).unwrap();
        // distributivity of ∩ over Δ with a third random set: use b Δ c
        let bc = b.symmetric_difference(&c).unwrap();
        let left = a.intersection(&bc).unwrap();
        let right = a
            .intersection(&b)
            .unwrap()
            .symmetric_difference(&a.intersection(&c).unwrap())
            .unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn generated_subring_is_a_closed_fixed_point(n in 1usize..=12, seed in 0u64..4096) {
        let ring = FiniteRing::zmod(n).unwrap();
        let mask = seed & ((1u64 << n.min(12)) - 1);
        let s = subset_from_mask(ring.elems(), mask);
        let generated = ring.subring_generated(&s).unwrap();
        prop_assert!(s.is_subset_of(&generated).unwrap());
        prop_assert!(ring.is_subring(&generated).unwrap().holds());
        prop_assert_eq!(ring.subring_generated(&generated).unwrap(), generated);
    }

    #[test]
    fn identity_isomorphism_exists(n in 1usize..=12) {
        let ring = FiniteRing::zmod(n).unwrap();
        let iso = find_isomorphism(&ring, &ring).unwrap().unwrap();
        prop_assert!(iso.is_isomorphism());
    }
}

#[test]
fn inverse_image_aliases_agree_on_all_small_maps() {
    // exhaustive over every map (total or not) with |X| = |Y| ≤ 3
    for size in 1usize..=3 {
        let u = Universe::indexed(size).unwrap();
        let subset_count = 1u64 << size;
        let map_count = (subset_count).pow(size as u32);
        for index in 0..map_count {
            let mut masks = Vec::with_capacity(size);
            let mut rest = index;
            for _ in 0..size {
                masks.push(rest % subset_count);
                rest /= subset_count;
            }
            let f = map_from_masks(&u, &u, &masks);
            for b in all_subsets(&u).unwrap() {
                assert_eq!(
                    f.upper_inverse_image(&b).unwrap(),
                    f.upper_approx(&b).unwrap()
                );
                assert_eq!(
                    f.lower_inverse_image(&b).unwrap(),
                    f.lower_approx(&b).unwrap()
                );
            }
        }
    }
}

#[test]
fn class_laws_over_all_ideal_congruences_up_to_twelve() {
    // additive law: always an equality; multiplicative law: always an
    // inclusion (setwise inside the class)
    for n in 1usize..=12 {
        let ring = FiniteRing::zmod(n).unwrap();
        for ideal in ring.ideals().unwrap() {
            let c = Congruence::from_ideal(&ring, &ideal).unwrap();
            for x in 0..n {
                for y in 0..n {
                    let sum_class = c.class_of(ring.add(x, y));
                    let sum_setwise = setwise_add(&ring, c.class_of(x), c.class_of(y)).unwrap();
                    assert_eq!(&sum_setwise, sum_class, "Z{n} mod {ideal} at ({x},{y})");

                    let prod_class = c.class_of(ring.mul(x, y));
                    let prod_setwise = setwise_mul(&ring, c.class_of(x), c.class_of(y)).unwrap();
                    assert!(
                        prod_setwise.is_subset_of(prod_class).unwrap(),
                        "Z{n} mod {ideal} at ({x},{y})"
                    );
                }
            }
        }
    }
}

#[test]
fn kernel_separates_fibers_of_powerful_maps() {
    // F(x) = F(y) iff x - y ∈ ker(F), for every powerful class map on
    // Z1..Z12
    for n in 1usize..=12 {
        let ring = FiniteRing::zmod(n).unwrap();
        for ideal in ring.ideals().unwrap() {
            let f =
                SetValuedRingHom::from_congruence(&Congruence::from_ideal(&ring, &ideal).unwrap());
            if !f.is_powerful().is_powerful() {
                continue;
            }
            let kernel = f.kernel();
            for x in 0..n {
                for y in 0..n {
                    let same = f.image_of(x) == f.image_of(y);
                    let diff_in_kernel = kernel.contains(ring.sub(x, y));
                    assert_eq!(same, diff_in_kernel, "Z{n} mod {ideal} at ({x},{y})");
                }
            }
            // F(0) is setwise-additively idempotent
            let f0 = f.image_of(ring.zero());
            assert_eq!(&setwise_add(&ring, f0, f0).unwrap(), f0);
        }
    }
}

#[test]
fn values_are_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<Universe>();
    assert_send_sync::<Subset>();
    assert_send_sync::<SetValuedMap>();
    assert_send_sync::<FiniteRing>();
    assert_send_sync::<Congruence>();
    assert_send_sync::<SetValuedRingHom>();
}

#[test]
fn quotient_sizes_match_the_index() {
    for n in 1usize..=12 {
        let ring = FiniteRing::zmod(n).unwrap();
        for ideal in ring.ideals().unwrap() {
            let c = Congruence::from_ideal(&ring, &ideal).unwrap();
            let (q, projection) = c.quotient().unwrap();
            assert_eq!(q.size(), n / ideal.cardinality());
            assert!(projection.is_surjective());
        }
    }
}
