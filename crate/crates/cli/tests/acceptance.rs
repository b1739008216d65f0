//! Acceptance suite: one test per shipping criterion, each printing a
//! pass line (visible with `--nocapture`). All expected values are exact —
//! set equality and boolean verdicts, no tolerances.

use std::process::Command;
use std::sync::Arc;

use roughring::finite_ring::{enumerate_homs, find_isomorphism, Congruence, FiniteRing};
use roughring::finite_sets::{all_subsets, SetValuedMap, Subset, Universe};
use roughring::lawcheck::errata::{errata_report, ErrataScope};
use roughring::lawcheck::{check_law, revalidate, LawId, LawScope, VerdictStatus};
use roughring::powerset_ring::PowersetRing;
use roughring::rough_hom::{check_thm42, PowerfulWitness, SetValuedRingHom};

fn pass(n: u32, what: &str) {
    println!("[acceptance] criterion {n:02} {what}: pass");
}

fn example_2_1() -> (Arc<Universe>, SetValuedMap) {
    let u = Universe::new(["1", "2", "3", "4", "5", "6"]).unwrap();
    let f = SetValuedMap::from_index_table(
        Arc::clone(&u),
        Arc::clone(&u),
        &[
            vec![0],
            vec![0, 2],
            vec![2, 3],
            vec![3],
            vec![0, 5],
            vec![0, 4, 5],
        ],
    )
    .unwrap();
    (u, f)
}

fn set(u: &Arc<Universe>, labels: &[&str]) -> Subset {
    Subset::from_labels(u, labels).unwrap()
}

/// The set-valued homomorphism of the coset congruence of an ideal.
fn classes(ring: &Arc<FiniteRing>, ideal: &[usize]) -> SetValuedRingHom {
    let ideal = Subset::from_indices(ring.elems(), ideal.iter().copied()).unwrap();
    SetValuedRingHom::from_congruence(&Congruence::from_ideal(ring, &ideal).unwrap())
}

/// Criterion-7/9 family: every powerful congruence-class map on Z1..Z12
/// plus the singleton map of every ring homomorphism between Z_n and Z_m
/// for n, m <= 8.
fn powerful_family() -> Vec<(String, SetValuedRingHom)> {
    let mut family = Vec::new();
    for n in 1..=12usize {
        let ring = FiniteRing::zmod(n).unwrap();
        for ideal in ring.ideals().unwrap() {
            let f =
                SetValuedRingHom::from_congruence(&Congruence::from_ideal(&ring, &ideal).unwrap());
            if f.is_powerful().is_powerful() {
                family.push((format!("classes Z{n} mod {ideal}"), f));
            }
        }
    }
    for n in 1..=8usize {
        for m in 1..=8usize {
            let src = FiniteRing::zmod(n).unwrap();
            let dst = FiniteRing::zmod(m).unwrap();
            for (k, hom) in enumerate_homs(&src, &dst).unwrap().iter().enumerate() {
                family.push((
                    format!("singleton hom {k} Z{n} -> Z{m}"),
                    SetValuedRingHom::from_hom(hom),
                ));
            }
        }
    }
    family
}

#[test]
fn criterion_01_worked_example_reproduction() {
    let (u, f) = example_2_1();
    let a = set(&u, &["1", "3", "5"]);
    let b = set(&u, &["2", "4", "6"]);
    assert_eq!(f.lower_approx(&a).unwrap(), set(&u, &["1", "2"]));
    assert_eq!(
        f.upper_approx(&a).unwrap(),
        set(&u, &["1", "2", "3", "5", "6"])
    );
    assert_eq!(f.lower_approx(&b).unwrap(), set(&u, &["4"]));
    assert_eq!(f.upper_approx(&b).unwrap(), set(&u, &["3", "4", "5", "6"]));
    assert_eq!(f.image(), set(&u, &["1", "3", "4", "5", "6"]));
    pass(1, "six-element worked example, exact sets");
}

#[test]
fn criterion_02_inverse_example_and_errata() {
    let u = Universe::new(["a", "b", "c", "d", "e", "f"]).unwrap();
    let f = SetValuedMap::from_index_table(
        Arc::clone(&u),
        Arc::clone(&u),
        &[
            vec![0],
            vec![0, 2],
            vec![2, 3],
            vec![3],
            vec![0, 5],
            vec![0, 4, 5],
        ],
    )
    .unwrap();
    let b1 = set(&u, &["a", "d", "e"]);
    let pair = f.rough_pair(&b1).unwrap();
    assert_eq!(pair.lower, set(&u, &["a", "d"]));
    assert_eq!(pair.upper, Subset::full(&u));

    // B2: the oracle values, against which the printed ones are errata
    let b2 = set(&u, &["b", "e", "f"]);
    let pair = f.rough_pair(&b2).unwrap();
    assert!(pair.lower.is_empty());
    assert_eq!(pair.upper, set(&u, &["e", "f"]));

    let report = errata_report(&ErrataScope {
        examples: true,
        laws: Vec::new(),
        thm43_probe: false,
        prop42_identity: false,
        law_scope: LawScope::default(),
    })
    .unwrap();
    let ids: Vec<&str> = report.entries.iter().map(|e| e.id.as_str()).collect();
    assert!(ids.contains(&"example-3-1-B2"));
    assert!(ids.contains(&"example-3-2"));
    pass(2, "inverse-map example with errata entries");
}

#[test]
fn criterion_03_powerset_ring_axioms() {
    for size in 1..=4usize {
        let u = Universe::indexed(size).unwrap();
        let ps = PowersetRing::new(Arc::clone(&u));
        let report = ps.check_axioms().unwrap();
        assert!(report.passed(), "|X| = {size}");
        assert_eq!(
            report.distributivity_triples,
            (1 << size) * (1 << size) * (1 << size)
        );

        let empty = Subset::empty(&u);
        let full = Subset::full(&u);
        for a in ps.elements() {
            assert!(ps.add(&a, &a).unwrap().is_empty(), "A + A = 0");
            assert_eq!(ps.add(&a, &empty).unwrap(), a, "0 is the + identity");
            assert_eq!(ps.mul(&a, &full).unwrap(), a, "X is the * identity");
        }
    }
    pass(3, "powerset ring axioms exhaustive for |X| in 1..=4");
}

#[test]
fn criterion_04_law_catalog() {
    let scope = LawScope::default();
    assert_eq!((scope.x_size, scope.y_size, scope.total_only), (3, 3, true));
    let equality_laws = [
        LawId::P21_1,
        LawId::P21_2,
        LawId::P21_3,
        LawId::T21_1,
        LawId::T21_3,
        LawId::P31_2,
        LawId::P32_1,
        LawId::P32_3,
    ];
    for law in equality_laws {
        let verdict = check_law(law, &scope).unwrap();
        assert!(
            matches!(verdict.status, VerdictStatus::EqualityEverywhere),
            "{law}: {:?}",
            verdict.status
        );
    }
    let inclusion_laws = [
        LawId::P21_4,
        LawId::P21_5,
        LawId::T21_2,
        LawId::T21_4,
        LawId::P31_1,
        LawId::P31_3,
        LawId::P32_2,
        LawId::P32_4,
    ];
    for law in inclusion_laws {
        let verdict = check_law(law, &scope).unwrap();
        let VerdictStatus::ProperInclusion(witness) = &verdict.status else {
            panic!("{law}: expected a strict witness, got {:?}", verdict.status)
        };
        assert!(
            revalidate(witness, law).unwrap(),
            "{law}: witness re-validates"
        );
    }
    pass(
        4,
        "law catalog exhaustive at |X| = |Y| = 3 with re-validated witnesses",
    );
}

#[test]
fn criterion_05_congruence_class_laws() {
    let scope = LawScope::default();
    let add = check_law(LawId::P42Add, &scope).unwrap();
    assert!(
        matches!(add.status, VerdictStatus::EqualityEverywhere),
        "{:?}",
        add.status
    );

    let mul = check_law(LawId::P42Mul, &scope).unwrap();
    let VerdictStatus::ProperInclusion(witness) = &mul.status else {
        panic!("expected a strict witness, got {:?}", mul.status)
    };
    let roughring::lawcheck::LawWitness::ClassLaw {
        ring_name,
        ideal,
        x,
        y,
        ..
    } = witness
    else {
        panic!("wrong witness shape")
    };
    assert_eq!(ring_name, "Z4");
    assert_eq!(ideal.to_string(), "{0 2}");
    assert_eq!((*x, *y), (0, 0));
    assert!(revalidate(witness, LawId::P42Mul).unwrap());
    pass(5, "class laws over Z1..Z12 and Z2xZ4 with the Z4 witness");
}

#[test]
fn criterion_06_powerful_classification() {
    let z6 = FiniteRing::zmod(6).unwrap();
    assert!(classes(&z6, &[0, 2, 4]).is_powerful().is_powerful());
    assert!(classes(&z6, &[0, 3]).is_powerful().is_powerful());

    let z4 = FiniteRing::zmod(4).unwrap();
    let report = classes(&z4, &[0, 2]).is_powerful();
    assert!(!report.is_powerful());
    assert_eq!(
        report.multiplicative.witness(),
        Some(PowerfulWitness::Pair { x: 0, y: 0 })
    );

    let mut singleton_count = 0usize;
    for n in 1..=8usize {
        for m in 1..=8usize {
            let src = FiniteRing::zmod(n).unwrap();
            let dst = FiniteRing::zmod(m).unwrap();
            for hom in enumerate_homs(&src, &dst).unwrap() {
                let f = SetValuedRingHom::from_hom(&hom);
                assert!(
                    f.is_powerful().is_powerful(),
                    "singleton of Z{n} -> Z{m} hom must be powerful"
                );
                singleton_count += 1;
            }
        }
    }
    assert!(
        singleton_count > 64,
        "every pair admits at least the zero map"
    );
    pass(
        6,
        "powerful classification incl. all singleton maps for n, m <= 8",
    );
}

#[test]
fn criterion_07_kernel_and_rough_subring_theorems() {
    let family = powerful_family();
    assert!(!family.is_empty());
    for (name, f) in &family {
        let check = f.check_kernel_subring().unwrap();
        assert!(check.verdict.holds(), "{name}: kernel must be a subring");

        for s in f.target().subrings().unwrap() {
            let hypothesis = f.image_of(f.source().zero()).is_subset_of(&s).unwrap();
            if !hypothesis {
                continue;
            }
            let report = f.rough_subring_check(&s).unwrap();
            assert!(report.hypothesis_holds);
            assert!(
                report.lower_verdict.holds(),
                "{name}: lower approximation of {s} must be a subring"
            );
            assert!(!report.falsifies_lower_theorem);
        }
    }
    pass(
        7,
        "kernel-subring and lower-rough-subring theorems, zero failures",
    );
}

#[test]
fn criterion_08_upper_approximations_commute() {
    for (n, m) in [(6usize, 3usize), (12, 4)] {
        let src = FiniteRing::zmod(n).unwrap();
        let dst = FiniteRing::zmod(m).unwrap();
        let rho = roughring::finite_ring::RingHom::from_table(
            &src,
            &dst,
            (0..n).map(|x| x % m).collect(),
        )
        .unwrap();
        for ideal in dst.ideals().unwrap() {
            let f2 =
                SetValuedRingHom::from_congruence(&Congruence::from_ideal(&dst, &ideal).unwrap());
            for a in all_subsets(src.elems()).unwrap() {
                let outcome = check_thm42(&rho, &f2, &a).unwrap();
                assert!(
                    outcome.holds(),
                    "Z{n} -> Z{m}, classes mod {ideal}, A = {a}"
                );
            }
        }
    }
    pass(
        8,
        "upper approximations commute with both reductions, exhaustive",
    );
}

#[test]
fn criterion_09_fundamental_theorem_at_desk_scale() {
    for (name, f) in powerful_family() {
        let report = f.fundamental_theorem().unwrap();
        assert!(
            report.is_isomorphism(),
            "{name}: findings {:?}",
            report.findings
        );
    }

    // the two named instances
    let z6 = FiniteRing::zmod(6).unwrap();
    let report = classes(&z6, &[0, 2, 4]).fundamental_theorem().unwrap();
    assert_eq!(report.kernel.to_string(), "{0 2 4}");
    assert_eq!(report.cosets.count(), 2);
    assert_eq!(report.image.ring.size(), 2);
    let z2 = FiniteRing::zmod(2).unwrap();
    assert!(find_isomorphism(&report.image.ring, &z2).unwrap().is_some());

    let z3 = FiniteRing::zmod(3).unwrap();
    let rho =
        roughring::finite_ring::RingHom::from_table(&z6, &z3, (0..6).map(|x| x % 3).collect())
            .unwrap();
    let report = SetValuedRingHom::from_hom(&rho)
        .fundamental_theorem()
        .unwrap();
    assert_eq!(report.cosets.count(), 3);
    assert!(find_isomorphism(&report.image.ring, &z3).unwrap().is_some());
    pass(
        9,
        "quotient-image isomorphism for the whole powerful family",
    );
}

fn run_cli(args: &[&str]) -> (Vec<u8>, i32) {
    let exe = env!("CARGO_BIN_EXE_roughring");
    let output = Command::new(exe).args(args).output().expect("binary runs");
    (output.stdout, output.status.code().expect("exit code"))
}

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn golden(name: &str) -> Vec<u8> {
    std::fs::read(format!(
        "{}/tests/golden/{name}",
        env!("CARGO_MANIFEST_DIR")
    ))
    .expect("golden file")
}

#[test]
fn criterion_10_cli_golden_outputs_and_exit_codes() {
    let (out, code) = run_cli(&[
        "approx",
        "--map",
        "F",
        "--set",
        "A",
        &fixture("example21.rr"),
    ]);
    assert_eq!(out, golden("approx_example21.txt"));
    assert_eq!(code, 0);

    let (out, code) = run_cli(&["fundamental", "--svh", "G", &fixture("z6.rr")]);
    assert_eq!(out, golden("fundamental_z6.txt"));
    assert_eq!(code, 0);

    let (out, code) = run_cli(&["laws", "--law", "P42-mul"]);
    assert_eq!(out, golden("laws_p42mul.txt"));
    assert_eq!(code, 1);

    // usage errors exit 2
    let (_, code) = run_cli(&["approx", "--map", "F", "--set", "A", "/nonexistent.rr"]);
    assert_eq!(code, 2);
    let (_, code) = run_cli(&["laws", "--law", "P99-9"]);
    assert_eq!(code, 2);
    pass(10, "golden CLI bytes with the 0/1/2 exit-code contract");
}
