//! The generated errata report: every printed claim whose brute-force
//! verification disagrees with it, together with the verified status and a
//! reproducible witness. The report content is deterministic; running it
//! twice yields identical entries.

use std::sync::Arc;

use crate::finite_ring::{Congruence, FiniteRing, RingHom};
use crate::finite_sets::{SetValuedMap, Subset, Universe};
use crate::rough_hom::{check_thm43, setwise_add, SetValuedRingHom};

use super::{check_law, LawId, LawScope, LawWitness, LawcheckError, VerdictStatus};

/// Which sections of the report to generate.
#[derive(Debug, Clone)]
pub struct ErrataScope {
    /// The two worked examples whose printed values disagree with the
    /// definitions.
    pub examples: bool,
    /// Laws to re-verify and classify.
    pub laws: Vec<LawId>,
    /// Probe whether the induced-map theorem really needs injectivity.
    pub thm43_probe: bool,
    /// The identity claim that equates a set with an element.
    pub prop42_identity: bool,
    pub law_scope: LawScope,
}

impl ErrataScope {
    pub fn full() -> ErrataScope {
        ErrataScope {
            examples: true,
            laws: LawId::ALL.to_vec(),
            thm43_probe: true,
            prop42_identity: true,
            law_scope: LawScope::default(),
        }
    }

    pub fn empty() -> ErrataScope {
        ErrataScope {
            examples: false,
            laws: Vec::new(),
            thm43_probe: false,
            prop42_identity: false,
            law_scope: LawScope::default(),
        }
    }
}

impl Default for ErrataScope {
    fn default() -> ErrataScope {
        ErrataScope::full()
    }
}

#[derive(Debug, Clone)]
pub struct ErrataEntry {
    pub id: String,
    pub claim: String,
    pub status: String,
    pub details: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct ErrataReport {
    pub entries: Vec<ErrataEntry>,
}

pub fn errata_report(scope: &ErrataScope) -> Result<ErrataReport, LawcheckError> {
    let mut entries = Vec::new();
    if scope.examples {
        entries.push(example_3_1_b2()?);
        entries.push(example_3_2()?);
    }
    for &law in &scope.laws {
        entries.push(law_entry(law, &scope.law_scope)?);
    }
    if scope.thm43_probe {
        entries.push(thm43_probe()?);
    }
    if scope.prop42_identity {
        entries.push(prop42_identity()?);
    }
    Ok(ErrataReport { entries })
}

/// The letters example: F(a)={a}, F(b)={a,c}, F(c)={c,d}, F(d)={d},
/// F(e)={a,f}, F(f)={a,e,f}.
fn letters_fixture() -> Result<SetValuedMap, LawcheckError> {
    let u = Universe::new(["a", "b", "c", "d", "e", "f"])?;
    Ok(SetValuedMap::from_index_table(
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
    )?)
}

fn example_3_1_b2() -> Result<ErrataEntry, LawcheckError> {
    let map = letters_fixture()?;
    let b2 = Subset::from_labels(map.target(), ["b", "e", "f"])?;
    let pair = map.rough_pair(&b2)?;
    Ok(ErrataEntry {
        id: "example-3-1-B2".to_string(),
        claim: "for B2 = {b e f} the printed approximations are {d} and {c d e f}".to_string(),
        status: "printed values contradict direct evaluation of the definitions".to_string(),
        details: vec![
            format!(
                "direct evaluation: lower = {} and upper = {}",
                pair.lower, pair.upper
            ),
            "neither printed set matches either approximation under either naming convention"
                .to_string(),
        ],
    })
}

fn example_3_2() -> Result<ErrataEntry, LawcheckError> {
    let u = Universe::new(["1", "2", "3", "4", "5", "6"])?;
    let map = SetValuedMap::from_index_table(
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
    )?;
    let a = Subset::from_labels(&u, ["1", "3", "5"])?;
    let pair = map.rough_pair(&a)?;
    Ok(ErrataEntry {
        id: "example-3-2".to_string(),
        claim: "prints approximations {1 2 3} and {1 2 3 4 5 6} for the same map and subset as \
                the first worked example"
            .to_string(),
        status: "printed values contradict both the definitions and the first worked example"
            .to_string(),
        details: vec![
            format!(
                "direct evaluation: lower = {} and upper = {}",
                pair.lower, pair.upper
            ),
            "the first worked example prints exactly the directly-evaluated values".to_string(),
        ],
    })
}

fn law_entry(law: LawId, law_scope: &LawScope) -> Result<ErrataEntry, LawcheckError> {
    let verdict = check_law(law, law_scope)?;
    let mut details = vec![format!("checked statement: {}", law.statement())];
    let status = match &verdict.status {
        VerdictStatus::EqualityEverywhere => format!(
            "verified as an equality on all {} instances",
            verdict.instances
        ),
        VerdictStatus::ProperInclusion(witness) => {
            details.extend(describe_witness(witness));
            format!(
                "equality fails; the inclusion holds on all {} instances and is strict at the \
                 witness",
                verdict.instances
            )
        }
        VerdictStatus::ExhaustedNoWitness => format!(
            "inclusion verified on all {} instances; no strict instance in this scope",
            verdict.instances
        ),
        VerdictStatus::Refuted(witness) => {
            details.extend(describe_witness(witness));
            "REFUTED: even the corrected statement fails".to_string()
        }
    };
    Ok(ErrataEntry {
        id: law.to_string(),
        claim: law.printed_claim().to_string(),
        status,
        details,
    })
}

fn describe_map(name: &str, map: &SetValuedMap) -> Vec<String> {
    (0..map.source().size())
        .map(|x| format!("{name}({}) = {}", map.source().label(x), map.image_of(x)))
        .collect()
}

pub(crate) fn describe_witness(witness: &LawWitness) -> Vec<String> {
    match witness {
        LawWitness::SingleMap {
            map,
            a,
            b,
            lhs,
            rhs,
        } => {
            let mut lines = describe_map("F", map);
            lines.push(format!("A = {a}"));
            if let Some(b) = b {
                lines.push(format!("B = {b}"));
            }
            lines.push(format!("left side = {lhs}"));
            lines.push(format!("right side = {rhs}"));
            lines
        }
        LawWitness::MapPair {
            f1,
            f2,
            a,
            lhs,
            rhs,
        } => {
            let mut lines = describe_map("F1", f1);
            lines.extend(describe_map("F2", f2));
            lines.push(format!("A = {a}"));
            lines.push(format!("left side = {lhs}"));
            lines.push(format!("right side = {rhs}"));
            lines
        }
        LawWitness::ClassLaw {
            ring_name,
            ideal,
            x,
            y,
            class_side,
            setwise_side,
            ring,
        } => vec![
            format!("ring = {ring_name}"),
            format!("ideal = {ideal}"),
            format!("x = {}", ring.label(*x)),
            format!("y = {}", ring.label(*y)),
            format!("class side = {class_side}"),
            format!("setwise side = {setwise_side}"),
        ],
    }
}

/// Surjective non-injective reductions with every powerful class map on the
/// target: does powerfulness survive the induction without injectivity?
fn thm43_probe() -> Result<ErrataEntry, LawcheckError> {
    let mut details = Vec::new();
    let mut broken = 0usize;
    let mut survived = 0usize;
    for n in 2..=12usize {
        for m in (2..n).filter(|m| n % m == 0) {
            let src = FiniteRing::zmod(n)?;
            let dst = FiniteRing::zmod(m)?;
            let rho = RingHom::from_table(&src, &dst, (0..n).map(|x| x % m).collect())?;
            for ideal in dst.ideals()? {
                let f2 = SetValuedRingHom::from_congruence(&Congruence::from_ideal(&dst, &ideal)?);
                if !f2.is_powerful().is_powerful() {
                    continue;
                }
                let probe = check_thm43(&rho, &f2)?;
                let verdict = if probe.report.is_powerful() {
                    survived += 1;
                    "induced map powerful"
                } else {
                    broken += 1;
                    "induced map NOT powerful"
                };
                details.push(format!(
                    "rho: Z{n} -> Z{m}, classes of ideal {ideal} on Z{m}: {verdict}"
                ));
            }
        }
    }
    details.push(format!(
        "summary: {survived} configurations stay powerful, {broken} do not"
    ));
    Ok(ErrataEntry {
        id: "thm-4-3-injectivity".to_string(),
        claim: "the induced-map theorem assumes the surjection is also injective although its \
                proof only uses surjectivity"
            .to_string(),
        status: if broken > 0 {
            "injectivity cannot be dropped: surjective non-injective counterexamples exist"
                .to_string()
        } else {
            "no counterexample found in the probe family; the assumption may be redundant"
                .to_string()
        },
        details,
    })
}

fn prop42_identity() -> Result<ErrataEntry, LawcheckError> {
    let mut checked = 0usize;
    for n in 1..=8usize {
        let ring = FiniteRing::zmod(n)?;
        for ideal in ring.ideals()? {
            let f = SetValuedRingHom::from_congruence(&Congruence::from_ideal(&ring, &ideal)?);
            if !f.is_powerful().is_powerful() {
                continue;
            }
            let zero_image = f.image_of(ring.zero()).clone();
            for x in 0..ring.size() {
                let sum = setwise_add(&ring, &zero_image, f.image_of(x))?;
                if sum != *f.image_of(x) {
                    return Ok(ErrataEntry {
                        id: "prop-4-2-identity".to_string(),
                        claim: "asserts F(e1) = e2 for a powerful map".to_string(),
                        status: format!(
                            "REFUTED reading: F(0) fails to act as additive identity on Z{n}"
                        ),
                        details: vec![format!("x = {x}")],
                    });
                }
            }
            let image = f.image_ring()?;
            assert_eq!(
                image.class_of[ring.zero()],
                image.ring.zero(),
                "F(0) indexes the zero of the image ring by construction"
            );
            checked += 1;
        }
    }
    Ok(ErrataEntry {
        id: "prop-4-2-identity".to_string(),
        claim: "asserts F(e1) = e2 for a powerful map, equating a set of target elements with a \
                single element"
            .to_string(),
        status: "type mismatch as printed; the literal claim is left unverified and the \
                 checkable reading holds"
            .to_string(),
        details: vec![
            "checkable reading: F(0) is the zero of the image ring and acts as the setwise \
             additive identity on every image set"
                .to_string(),
            format!("verified on {checked} powerful class maps over the ideals of Z1..Z8"),
        ],
    })
}
