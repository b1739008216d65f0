//! Subcommand implementations. Every command renders a deterministic
//! `key: value` report (headed by `format: 1`) and an exit code: 0 when all
//! checks pass, 1 when a check found a violation or counterexample, 2 for
//! input and usage errors (raised as [`CliError`]).

use std::fmt::{Display, Write};
use std::sync::Arc;

use roughring::finite_ring::{FiniteRing, RingHom};
use roughring::finite_sets::{all_subsets, SetValuedMap, Subset, Universe};
use roughring::lawcheck::errata::{errata_report, ErrataScope};
use roughring::lawcheck::{
    check_all, check_law, LawId, LawScope, LawVerdict, LawWitness, VerdictStatus,
};
use roughring::powerset_ring::PowersetRing;
use roughring::rough_hom::{check_thm42, check_thm43, PowerfulReport, SetValuedRingHom, Verdict};

use crate::document::{DocError, Document, Item};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug)]
pub enum CliError {
    Doc(DocError),
    Usage(String),
}

impl Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Doc(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<DocError> for CliError {
    fn from(e: DocError) -> CliError {
        CliError::Doc(e)
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub struct Outcome {
    pub report: String,
    pub exit: i32,
}

struct Report {
    out: String,
}

impl Report {
    fn new() -> Report {
        Report {
            out: String::from("format: 1\n"),
        }
    }

    fn line(&mut self, key: &str, value: impl Display) {
        writeln!(self.out, "{key}: {value}").expect("writing to a string");
    }

    fn finish(self, exit: i32) -> Outcome {
        Outcome {
            report: self.out,
            exit,
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn get_item<'a>(doc: &'a Document, name: &str, kind: &str) -> Result<&'a Item, CliError> {
    doc.get(name)
        .ok_or_else(|| usage(format!("no declaration named `{name}` in the document")))
        .and_then(|item| {
            if item.kind() == kind {
                Ok(item)
            } else {
                Err(usage(format!(
                    "`{name}` is a {}, expected a {kind}",
                    item.kind()
                )))
            }
        })
}

fn get_map<'a>(doc: &'a Document, name: &str) -> Result<&'a SetValuedMap, CliError> {
    match get_item(doc, name, "map")? {
        Item::Map(m) => Ok(m),
        _ => unreachable!(),
    }
}

fn get_set<'a>(doc: &'a Document, name: &str) -> Result<(&'a str, &'a Subset), CliError> {
    match get_item(doc, name, "set")? {
        Item::Set { carrier, subset } => Ok((carrier, subset)),
        _ => unreachable!(),
    }
}

fn get_ring<'a>(doc: &'a Document, name: &str) -> Result<&'a Arc<FiniteRing>, CliError> {
    match get_item(doc, name, "ring")? {
        Item::Ring(r) => Ok(r),
        _ => unreachable!(),
    }
}

fn get_universe<'a>(doc: &'a Document, name: &str) -> Result<&'a Arc<Universe>, CliError> {
    match get_item(doc, name, "universe")? {
        Item::Universe(u) => Ok(u),
        _ => unreachable!(),
    }
}

fn get_svh<'a>(doc: &'a Document, name: &str) -> Result<&'a SetValuedRingHom, CliError> {
    match get_item(doc, name, "svh")? {
        Item::Svh(s) => Ok(s),
        _ => unreachable!(),
    }
}

fn get_hom<'a>(doc: &'a Document, name: &str) -> Result<&'a RingHom, CliError> {
    match get_item(doc, name, "hom")? {
        Item::Hom(h) => Ok(h),
        _ => unreachable!(),
    }
}

pub fn approx(doc: &Document, map_name: &str, set_name: &str) -> Result<Outcome, CliError> {
    let map = get_map(doc, map_name)?;
    let (_, set) = get_set(doc, set_name)?;
    let pair = map.rough_pair(set).map_err(|e| {
        usage(format!(
            "`{set_name}` does not fit the target of `{map_name}`: {e}"
        ))
    })?;
    let mut r = Report::new();
    r.line("map", map_name);
    r.line("set", set_name);
    r.line("lower_def", "lower(A) = {x : F(x) ⊆ A}");
    r.line("upper_def", "upper(A) = {x : F(x) ∩ A ≠ ∅}");
    r.line("lower", &pair.lower);
    r.line("upper", &pair.upper);
    r.line("boundary", &pair.boundary);
    r.line("rough", yes_no(pair.is_rough()));
    Ok(r.finish(EXIT_OK))
}

pub fn invert(doc: &Document, map_name: &str) -> Result<Outcome, CliError> {
    let map = get_map(doc, map_name)?;
    let inverse = map.invert();
    let mut r = Report::new();
    r.line("map", map_name);
    r.line("inverse_def", "F⁻¹(y) = {x : y ∈ F(x)}");
    for y in 0..inverse.source().size() {
        r.line(
            &format!("inverse({})", inverse.source().label(y)),
            inverse.image_of(y),
        );
    }
    Ok(r.finish(EXIT_OK))
}

pub fn psring(doc: &Document, universe_name: &str) -> Result<Outcome, CliError> {
    let universe = get_universe(doc, universe_name)?;
    let ps = PowersetRing::new(Arc::clone(universe));
    let report = ps
        .check_axioms()
        .map_err(|e| usage(format!("cannot verify `{universe_name}`: {e}")))?;
    let ring = ps
        .as_finite_ring()
        .map_err(|e| usage(format!("cannot materialize `{universe_name}`: {e}")))?;

    let mut r = Report::new();
    r.line("universe", universe_name);
    r.line("base_size", universe.size());
    r.line("elements", ps.element_count());
    r.line("add_def", "S1 + S2 = symmetric difference");
    r.line("mul_def", "S1 * S2 = intersection");
    r.line("zero", ring.label(ring.zero()));
    r.line("one", ring.label(ring.one().expect("full base is the one")));
    r.line("axioms", if report.passed() { "pass" } else { "fail" });
    r.line("pairs_checked", report.pairs_checked);
    r.line("distributivity_triples", report.distributivity_triples);
    if let Some(f) = &report.failure {
        let sets: Vec<String> = f.witness.iter().map(|s| s.to_string()).collect();
        r.line("failure", format!("{:?} at {}", f.axiom, sets.join(", ")));
        return Ok(r.finish(EXIT_VIOLATION));
    }
    r.line("ring_valid", "yes");
    Ok(r.finish(EXIT_OK))
}

pub fn ring_info(doc: &Document, ring_name: &str) -> Result<Outcome, CliError> {
    let ring = get_ring(doc, ring_name)?;
    let mut r = Report::new();
    r.line("ring", ring_name);
    r.line("size", ring.size());
    r.line("zero", ring.label(ring.zero()));
    match ring.one() {
        Some(one) => r.line("one", ring.label(one)),
        None => r.line("one", "none"),
    }
    r.line("commutative", yes_no(ring.is_commutative()));
    let units: Vec<&str> = ring.units().iter().map(|&u| ring.label(u)).collect();
    r.line("units", format!("{{{}}}", units.join(" ")));
    if ring.size() <= 24 {
        let ideals = ring.ideals().map_err(|e| usage(e.to_string()))?;
        r.line("ideals", ideals.len());
        for (i, ideal) in ideals.iter().enumerate() {
            r.line(&format!("ideal_{i}"), ideal);
        }
    } else {
        r.line("ideals", "skipped (size over 24)");
    }
    Ok(r.finish(EXIT_OK))
}

fn coset_label(ring: &FiniteRing, coset: &Subset) -> String {
    format!(
        "[{}]",
        ring.label(coset.iter().next().expect("non-empty coset"))
    )
}

pub fn quotient(
    doc: &Document,
    ideal: Option<&str>,
    partition: Option<&str>,
    subgroup: Option<&str>,
) -> Result<Outcome, CliError> {
    let picked: Vec<&Option<&str>> = [&ideal, &partition, &subgroup]
        .into_iter()
        .filter(|o| o.is_some())
        .collect();
    if picked.len() != 1 {
        return Err(usage(
            "pass exactly one of --ideal, --partition, or --subgroup",
        ));
    }

    let (key, name, ring, k): (&str, &str, Arc<FiniteRing>, Subset) = if let Some(name) = ideal {
        let (ring_name, subset) = match get_item(doc, name, "ideal")? {
            Item::Ideal { ring, subset } => (ring.clone(), subset.clone()),
            _ => unreachable!(),
        };
        let ring = get_ring(doc, &ring_name)?;
        ("ideal", name, Arc::clone(ring), subset)
    } else if let Some(name) = partition {
        let congruence = match get_item(doc, name, "partition")? {
            Item::Partition { congruence, .. } => congruence.clone(),
            _ => unreachable!(),
        };
        (
            "partition",
            name,
            Arc::clone(congruence.ring()),
            congruence.zero_block().clone(),
        )
    } else {
        let name = subgroup.expect("checked above");
        let (carrier, subset) = get_set(doc, name)?;
        let ring = match doc.get(carrier) {
            Some(Item::Ring(r)) => Arc::clone(r),
            _ => {
                return Err(usage(format!(
                    "set `{name}` is bound to `{carrier}`, which is not a ring"
                )))
            }
        };
        ("subgroup", name, ring, subset.clone())
    };

    let space = ring
        .quotient_by_subgroup(&k)
        .map_err(|e| usage(format!("cannot quotient by `{name}`: {e}")))?;

    let mut r = Report::new();
    r.line(key, name);
    r.line("ring_size", ring.size());
    r.line("cosets", space.count());
    for (i, coset) in space.cosets().iter().enumerate() {
        r.line(&format!("coset_{i}"), coset);
    }
    r.line("mul_well_defined", yes_no(space.mul_well_defined()));
    match space.mul_failure() {
        Some(w) => {
            r.line(
                "mul_witness",
                format!(
                    "({}, {}) vs ({}, {}) in coset pair ({}, {})",
                    ring.label(w.a1),
                    ring.label(w.b1),
                    ring.label(w.a2),
                    ring.label(w.b2),
                    w.coset_a,
                    w.coset_b
                ),
            );
            Ok(r.finish(EXIT_VIOLATION))
        }
        None => {
            let q = space.as_ring().expect("well-defined product yields a ring");
            r.line("quotient_size", q.size());
            r.line("quotient_zero", q.label(q.zero()));
            Ok(r.finish(EXIT_OK))
        }
    }
}

pub fn iso(doc: &Document, left: &str, right: &str) -> Result<Outcome, CliError> {
    let a = get_ring(doc, left)?;
    let b = get_ring(doc, right)?;
    let found = roughring::finite_ring::find_isomorphism(a, b)
        .map_err(|e| usage(format!("isomorphism search refused: {e}")))?;
    let mut r = Report::new();
    r.line("left", left);
    r.line("right", right);
    match found {
        Some(phi) => {
            r.line("isomorphism", "yes");
            for x in 0..a.size() {
                r.line(&format!("phi({})", a.label(x)), b.label(phi.apply(x)));
            }
            Ok(r.finish(EXIT_OK))
        }
        None => {
            r.line("isomorphism", "no");
            Ok(r.finish(EXIT_VIOLATION))
        }
    }
}

/// Renders one powerful-law verdict, with witness and both sides of the
/// failing instance when the law is a pairwise one.
fn law_lines(r: &mut Report, prefix: &str, verdict: &Verdict, svh: &SetValuedRingHom, mul: bool) {
    use roughring::rough_hom::PowerfulWitness;
    match verdict {
        Verdict::Holds => r.line(prefix, "holds"),
        Verdict::Fails(w) => {
            r.line(prefix, "fails");
            let source = svh.source();
            match w {
                PowerfulWitness::Pair { x, y } => {
                    r.line(
                        &format!("{prefix}_witness"),
                        format!("({}, {})", source.label(*x), source.label(*y)),
                    );
                    let combined = if mul {
                        source.mul(*x, *y)
                    } else {
                        source.add(*x, *y)
                    };
                    let setwise = if mul {
                        roughring::rough_hom::setwise_mul(
                            svh.target(),
                            svh.image_of(*x),
                            svh.image_of(*y),
                        )
                    } else {
                        roughring::rough_hom::setwise_add(
                            svh.target(),
                            svh.image_of(*x),
                            svh.image_of(*y),
                        )
                    }
                    .expect("images live in the target ring");
                    r.line(&format!("{prefix}_lhs"), svh.image_of(combined));
                    r.line(&format!("{prefix}_rhs"), setwise);
                }
                PowerfulWitness::Element { x } => {
                    r.line(&format!("{prefix}_witness"), source.label(*x));
                }
                PowerfulWitness::NonUnitImage { u, a } => {
                    r.line(
                        &format!("{prefix}_witness"),
                        format!(
                            "image of unit {} contains the non-unit {}",
                            source.label(*u),
                            svh.target().label(*a)
                        ),
                    );
                }
                PowerfulWitness::InverseMismatch { u } => {
                    r.line(
                        &format!("{prefix}_witness"),
                        format!("unit {}", source.label(*u)),
                    );
                }
            }
        }
    }
}

fn powerful_lines(r: &mut Report, prefix: &str, report: &PowerfulReport, svh: &SetValuedRingHom) {
    let key = |name: &str| {
        if prefix.is_empty() {
            name.to_string()
        } else {
            format!("{prefix}_{name}")
        }
    };
    law_lines(r, &key("additive_law"), &report.additive, svh, false);
    law_lines(
        r,
        &key("multiplicative_law"),
        &report.multiplicative,
        svh,
        true,
    );
    law_lines(r, &key("negation_law"), &report.negation, svh, false);
    law_lines(r, &key("unit_inverse_law"), &report.unit_inverse, svh, true);
    let info = |v: &Verdict| match v {
        Verdict::Holds => "holds".to_string(),
        Verdict::Fails(w) => format!("fails ({w})"),
    };
    r.line(
        &key("unit_inverse_elementwise"),
        info(&report.unit_inverse_elementwise),
    );
    r.line(
        &key("unit_images_all_units"),
        info(&report.unit_images_all_units),
    );
    r.line(&key("powerful"), yes_no(report.is_powerful()));
}

pub fn svh(doc: &Document, name: &str) -> Result<Outcome, CliError> {
    let svh = get_svh(doc, name)?;
    let report = svh.is_powerful();
    let mut r = Report::new();
    r.line("svh", name);
    r.line("source_size", svh.source().size());
    r.line("target_size", svh.target().size());
    powerful_lines(&mut r, "", &report, svh);
    let exit = if report.is_powerful() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    };
    Ok(r.finish(exit))
}

pub fn kernel(doc: &Document, name: &str, unit_variant: bool) -> Result<Outcome, CliError> {
    let svh = get_svh(doc, name)?;
    let report = svh.is_powerful();
    let mut r = Report::new();
    r.line("svh", name);
    r.line("powerful", yes_no(report.is_powerful()));
    if !report.is_powerful() {
        powerful_lines(&mut r, "law", &report, svh);
        return Ok(r.finish(EXIT_VIOLATION));
    }
    let check = svh
        .check_kernel_subring()
        .expect("powerfulness was just established");
    r.line("kernel_def", "ker(F) = {x : F(x) = F(0)}");
    r.line("kernel", &check.kernel);
    match check.verdict.violation() {
        None => r.line("kernel_subring", "yes"),
        Some(v) => r.line("kernel_subring", format!("no ({v})")),
    }
    if unit_variant {
        match svh.kernel_at_one() {
            Some(k) => {
                r.line(
                    "unit_kernel_def",
                    "{x : F(x) = F(1)} (non-default comparison variant)",
                );
                r.line("unit_kernel", &k);
                let verdict = svh
                    .source()
                    .is_subring(&k)
                    .expect("kernel is over the source elements");
                match verdict.violation() {
                    None => r.line("unit_kernel_subring", "yes"),
                    Some(v) => r.line("unit_kernel_subring", format!("no ({v})")),
                }
            }
            None => r.line("unit_kernel", "unavailable (source ring has no one)"),
        }
    }
    let exit = if check.verdict.holds() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    };
    Ok(r.finish(exit))
}

pub fn induced(
    doc: &Document,
    hom_name: &str,
    svh_name: &str,
    set_name: Option<&str>,
) -> Result<Outcome, CliError> {
    let rho = get_hom(doc, hom_name)?;
    let f2 = get_svh(doc, svh_name)?;
    let mut r = Report::new();
    r.line("hom", hom_name);
    r.line("svh", svh_name);

    let f2_report = f2.is_powerful();
    r.line("f2_powerful", yes_no(f2_report.is_powerful()));
    if !f2_report.is_powerful() {
        powerful_lines(&mut r, "f2", &f2_report, f2);
        return Ok(r.finish(EXIT_VIOLATION));
    }
    let probe = check_thm43(rho, f2).map_err(|e| usage(format!("cannot induce: {e}")))?;
    r.line("rho_injective", yes_no(probe.rho_injective));
    let f1 = &probe.induced;
    for x in 0..f1.source().size() {
        r.line(
            &format!("induced({})", f1.source().label(x)),
            f1.image_of(x),
        );
    }
    powerful_lines(&mut r, "induced", &probe.report, f1);

    let mut exit = if probe.report.is_powerful() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    };

    match set_name {
        Some(set_name) => {
            let (_, a) = get_set(doc, set_name)?;
            let outcome = check_thm42(rho, f2, a)
                .map_err(|e| usage(format!("cannot check the commuting law: {e}")))?;
            r.line("thm42_set", set_name);
            r.line("thm42", if outcome.holds() { "pass" } else { "fail" });
            if let Some(y) = outcome.witness {
                r.line("thm42_witness", rho.target().label(y));
                r.line("thm42_lhs", &outcome.lhs);
                r.line("thm42_rhs", &outcome.rhs);
                exit = EXIT_VIOLATION;
            }
        }
        None => {
            let n = rho.source().size();
            if n <= 12 {
                let mut failed = None;
                let mut checked = 0u64;
                for a in all_subsets(rho.source().elems()).expect("source is small") {
                    checked += 1;
                    let outcome = check_thm42(rho, f2, &a)
                        .map_err(|e| usage(format!("cannot check the commuting law: {e}")))?;
                    if !outcome.holds() && failed.is_none() {
                        failed = Some((a, outcome));
                    }
                }
                r.line("thm42_subsets", checked);
                match failed {
                    None => r.line("thm42", "pass"),
                    Some((a, outcome)) => {
                        r.line("thm42", "fail");
                        r.line("thm42_set", &a);
                        r.line(
                            "thm42_witness",
                            rho.target().label(outcome.witness.expect("failed outcome")),
                        );
                        exit = EXIT_VIOLATION;
                    }
                }
            } else {
                r.line(
                    "thm42",
                    "skipped (source too large for the exhaustive sweep)",
                );
            }
        }
    }
    Ok(r.finish(exit))
}

pub fn fundamental(doc: &Document, name: &str) -> Result<Outcome, CliError> {
    let svh = get_svh(doc, name)?;
    let powerful = svh.is_powerful();
    let mut r = Report::new();
    r.line("svh", name);
    r.line("powerful", yes_no(powerful.is_powerful()));
    if !powerful.is_powerful() {
        powerful_lines(&mut r, "law", &powerful, svh);
        return Ok(r.finish(EXIT_VIOLATION));
    }
    let report = svh
        .fundamental_theorem()
        .map_err(|e| usage(format!("pipeline failed structurally: {e}")))?;
    r.line("kernel_def", "ker(F) = {x : F(x) = F(0)}");
    r.line("kernel", &report.kernel);
    match report.kernel_verdict.violation() {
        None => r.line("kernel_subring", "yes"),
        Some(v) => r.line("kernel_subring", format!("no ({v})")),
    }
    r.line("cosets", report.cosets.count());
    r.line("mul_well_defined", yes_no(report.cosets.mul_well_defined()));
    r.line("image_size", report.image.ring.size());
    r.line("isomorphism", yes_no(report.is_isomorphism()));
    r.line("phi_def", "phi(a + ker(F)) = F(a)");
    let ring = svh.source();
    for (ci, coset) in report.cosets.cosets().iter().enumerate() {
        r.line(
            &format!("phi({})", coset_label(ring, coset)),
            report.image.ring.label(report.phi[ci]),
        );
    }
    for finding in &report.findings {
        r.line("finding", finding);
    }
    let exit = if report.is_isomorphism() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    };
    Ok(r.finish(exit))
}

fn witness_lines(r: &mut Report, witness: &LawWitness) {
    match witness {
        LawWitness::SingleMap {
            map,
            a,
            b,
            lhs,
            rhs,
        } => {
            for x in 0..map.source().size() {
                r.line(&format!("F({})", map.source().label(x)), map.image_of(x));
            }
            r.line("A", a);
            if let Some(b) = b {
                r.line("B", b);
            }
            r.line("lhs", lhs);
            r.line("rhs", rhs);
        }
        LawWitness::MapPair {
            f1,
            f2,
            a,
            lhs,
            rhs,
        } => {
            for x in 0..f1.source().size() {
                r.line(&format!("F1({})", f1.source().label(x)), f1.image_of(x));
            }
            for x in 0..f2.source().size() {
                r.line(&format!("F2({})", f2.source().label(x)), f2.image_of(x));
            }
            r.line("A", a);
            r.line("lhs", lhs);
            r.line("rhs", rhs);
        }
        LawWitness::ClassLaw {
            ring_name,
            ring,
            ideal,
            x,
            y,
            class_side,
            setwise_side,
        } => {
            r.line("ring", ring_name);
            r.line("ideal", ideal);
            r.line("x", ring.label(*x));
            r.line("y", ring.label(*y));
            r.line("class_side", class_side);
            r.line("setwise_side", setwise_side);
        }
    }
}

fn verdict_lines(r: &mut Report, verdict: &LawVerdict) -> bool {
    r.line("law", verdict.law);
    r.line("statement", verdict.law.statement());
    r.line("expected", verdict.law.expected());
    let (status, witnessed) = match &verdict.status {
        VerdictStatus::EqualityEverywhere => ("equality-everywhere", false),
        VerdictStatus::ProperInclusion(_) => ("proper-inclusion", true),
        VerdictStatus::Refuted(_) => ("refuted", true),
        VerdictStatus::ExhaustedNoWitness => ("no-witness-in-scope", false),
    };
    r.line("status", status);
    r.line("instances", verdict.instances);
    if let Some(w) = verdict.witness() {
        witness_lines(r, w);
    }
    witnessed
}

pub fn laws(law: Option<&str>, x: usize, y: usize) -> Result<Outcome, CliError> {
    let scope = LawScope {
        x_size: x,
        y_size: y,
        ..LawScope::default()
    };
    let verdicts = match law {
        Some(id) => {
            let law: LawId = id.parse().map_err(|e| usage(format!("{e}")))?;
            vec![check_law(law, &scope).map_err(|e| usage(format!("{e}")))?]
        }
        None => check_all(&scope).map_err(|e| usage(format!("{e}")))?,
    };
    let mut r = Report::new();
    let mut any_witness = false;
    for verdict in &verdicts {
        any_witness |= verdict_lines(&mut r, verdict);
    }
    let exit = if any_witness { EXIT_VIOLATION } else { EXIT_OK };
    Ok(r.finish(exit))
}

pub fn errata() -> Result<Outcome, CliError> {
    let report = errata_report(&ErrataScope::full()).map_err(|e| usage(format!("{e}")))?;
    let mut r = Report::new();
    for entry in &report.entries {
        r.line("entry", &entry.id);
        r.line("claim", &entry.claim);
        r.line("status", &entry.status);
        for detail in &entry.details {
            r.line("detail", detail);
        }
    }
    Ok(r.finish(EXIT_OK))
}

pub fn emit(doc: &Document) -> Result<Outcome, CliError> {
    Ok(Outcome {
        report: doc.emit(),
        exit: EXIT_OK,
    })
}
