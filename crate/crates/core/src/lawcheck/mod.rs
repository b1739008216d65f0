//! Exhaustive verification of the distribution laws for approximation
//! operators, over every set-valued map of a given small shape, plus the
//! congruence-class laws over a family of small rings.
//!
//! Each law in the closed catalog carries its corrected expected status:
//! an equality, or an inclusion whose printed equality form is refuted by a
//! concrete witness. Equality laws must verify with zero witnesses; for
//! inclusion laws the checker hunts the enumeration-order-first instance
//! where the inclusion is strict, and also confirms the inclusion itself
//! never fails. The scan runs on packed bitmasks; every witness is then
//! rebuilt and re-validated through the public map and ring operations
//! before it is reported.

pub mod errata;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::finite_ring::{Congruence, FiniteRing, RingError};
use crate::finite_sets::{SetError, SetValuedMap, Subset, Universe};
use crate::rough_hom::{setwise_add, setwise_mul, RoughHomError};

/// Instance budget per law check.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error)]
pub enum LawcheckError {
    #[error("scope requires {required} instances, over the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("scope sizes must be between 1 and {max}")]
    BadScope { max: usize },
    #[error("unknown law id `{0}`")]
    UnknownLaw(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Set(#[from] SetError),
    #[error(transparent)]
    RoughHom(#[from] RoughHomError),
}

/// The closed catalog of checked laws.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LawId {
    P21_1,
    P21_2,
    P21_3,
    P21_4,
    P21_5,
    T21_1,
    T21_2,
    T21_3,
    T21_4,
    P31_1,
    P31_2,
    P31_3,
    P32_1,
    P32_2,
    P32_3,
    P32_4,
    P42Add,
    P42Mul,
}

/// Corrected status a law is expected to verify at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpectedStatus {
    Equality,
    /// Left side contained in the right side; equality can fail.
    InclusionSubset,
    /// Left side contains the right side; equality can fail.
    InclusionSuperset,
}

impl fmt::Display for ExpectedStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExpectedStatus::Equality => "equality",
            ExpectedStatus::InclusionSubset | ExpectedStatus::InclusionSuperset => "inclusion",
        })
    }
}

impl LawId {
    pub const ALL: [LawId; 18] = [
        LawId::P21_1,
        LawId::P21_2,
        LawId::P21_3,
        LawId::P21_4,
        LawId::P21_5,
        LawId::T21_1,
        LawId::T21_2,
        LawId::T21_3,
        LawId::T21_4,
        LawId::P31_1,
        LawId::P31_2,
        LawId::P31_3,
        LawId::P32_1,
        LawId::P32_2,
        LawId::P32_3,
        LawId::P32_4,
        LawId::P42Add,
        LawId::P42Mul,
    ];

    pub fn expected(self) -> ExpectedStatus {
        use ExpectedStatus::*;
        match self {
            LawId::P21_1 | LawId::P21_2 | LawId::P21_3 => Equality,
            LawId::P21_4 | LawId::P21_5 => InclusionSubset,
            LawId::T21_1 | LawId::T21_3 => Equality,
            LawId::T21_2 => InclusionSubset,
            LawId::T21_4 => InclusionSuperset,
            LawId::P31_2 => Equality,
            LawId::P31_1 | LawId::P31_3 => InclusionSubset,
            LawId::P32_1 | LawId::P32_3 => Equality,
            LawId::P32_2 => InclusionSubset,
            LawId::P32_4 => InclusionSuperset,
            LawId::P42Add => Equality,
            LawId::P42Mul => InclusionSuperset,
        }
    }

    /// The checked statement, left side first. For inclusion laws the
    /// relation symbol gives the verified direction.
    pub fn statement(self) -> &'static str {
        match self {
            LawId::P21_1 => "lower(A ∩ B) = lower(A) ∩ lower(B)",
            LawId::P21_2 => "upper({}) = {}",
            LawId::P21_3 => "upper(A ∪ B) = upper(A) ∪ upper(B)",
            LawId::P21_4 => "lower(A) ∪ lower(B) ⊆ lower(A ∪ B)",
            LawId::P21_5 => "upper(A ∩ B) ⊆ upper(A) ∩ upper(B)",
            LawId::T21_1 => "upper[F1∪F2](A) = upper[F1](A) ∪ upper[F2](A)",
            LawId::T21_2 => "upper[F1∩F2](A) ⊆ upper[F1](A) ∩ upper[F2](A)",
            LawId::T21_3 => "lower[F1∪F2](A) = lower[F1](A) ∩ lower[F2](A)",
            LawId::T21_4 => "lower[F1∩F2](A) ⊇ lower[F1](A) ∪ lower[F2](A)",
            LawId::P31_1 => "upper-inv(B1 ∩ B2) ⊆ upper-inv(B1) ∩ upper-inv(B2)",
            LawId::P31_2 => "upper-inv(B1 ∪ B2) = upper-inv(B1) ∪ upper-inv(B2)",
            LawId::P31_3 => "lower-inv(B1) ∪ lower-inv(B2) ⊆ lower-inv(B1 ∪ B2)",
            LawId::P32_1 => "upper-inv[F1∪F2](B) = upper-inv[F1](B) ∪ upper-inv[F2](B)",
            LawId::P32_2 => "upper-inv[F1∩F2](B) ⊆ upper-inv[F1](B) ∩ upper-inv[F2](B)",
            LawId::P32_3 => "lower-inv[F1∪F2](B) = lower-inv[F1](B) ∩ lower-inv[F2](B)",
            LawId::P32_4 => "lower-inv[F1∩F2](B) ⊇ lower-inv[F1](B) ∪ lower-inv[F2](B)",
            LawId::P42Add => "[x + y] = [x] + [y] (setwise)",
            LawId::P42Mul => "[x * y] ⊇ [x] * [y] (setwise)",
        }
    }

    /// How the source prints the claim, for the errata report.
    pub fn printed_claim(self) -> &'static str {
        match self {
            LawId::P21_1 => "item (1), printed as an equality",
            LawId::P21_2 => "item (2), printed garbled as F(∅) = ∅; read as the standard empty-set law",
            LawId::P21_3 => "item (4), printed as an equality",
            LawId::P21_4 => "item (3), printed as an equality between lower(A ∪ B) and lower(A) ∪ lower(B)",
            LawId::P21_5 => "item (5), printed garbled as F(X) = F(A) ∪ F(B); read as the standard intersection law",
            LawId::T21_1 => "item (1), printed as an equality with every operator underlined",
            LawId::T21_2 => "item (2), printed as an inclusion",
            LawId::T21_3 => "item (3), printed as an equality",
            LawId::T21_4 => "item (4), printed as an equality",
            LawId::P31_1 => "item (1), printed as an equality",
            LawId::P31_2 => "item (2), printed as an equality",
            LawId::P31_3 => "item (3), printed as an equality",
            LawId::P32_1 => "item (1), printed as an equality",
            LawId::P32_2 => "item (2), printed as an inclusion",
            LawId::P32_3 => "item (3), printed as an equality with ∩ on the right side",
            LawId::P32_4 => "item (4), printed as an equality",
            LawId::P42Add => "item (2), printed as an equality",
            LawId::P42Mul => "item (1), printed as an equality",
        }
    }

    fn family(self) -> LawFamily {
        match self {
            LawId::P21_2 => LawFamily::SingleMapNoSets,
            LawId::P21_1
            | LawId::P21_3
            | LawId::P21_4
            | LawId::P21_5
            | LawId::P31_1
            | LawId::P31_2
            | LawId::P31_3 => LawFamily::SingleMapTwoSets,
            LawId::T21_1
            | LawId::T21_2
            | LawId::T21_3
            | LawId::T21_4
            | LawId::P32_1
            | LawId::P32_2
            | LawId::P32_3
            | LawId::P32_4 => LawFamily::MapPairOneSet,
            LawId::P42Add | LawId::P42Mul => LawFamily::ClassLaw,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum LawFamily {
    SingleMapNoSets,
    SingleMapTwoSets,
    MapPairOneSet,
    ClassLaw,
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LawId::P21_1 => "P21-1",
            LawId::P21_2 => "P21-2",
            LawId::P21_3 => "P21-3",
            LawId::P21_4 => "P21-4",
            LawId::P21_5 => "P21-5",
            LawId::T21_1 => "T21-1",
            LawId::T21_2 => "T21-2",
            LawId::T21_3 => "T21-3",
            LawId::T21_4 => "T21-4",
            LawId::P31_1 => "P31-1",
            LawId::P31_2 => "P31-2",
            LawId::P31_3 => "P31-3",
            LawId::P32_1 => "P32-1",
            LawId::P32_2 => "P32-2",
            LawId::P32_3 => "P32-3",
            LawId::P32_4 => "P32-4",
            LawId::P42Add => "P42-add",
            LawId::P42Mul => "P42-mul",
        };
        f.write_str(s)
    }
}

impl FromStr for LawId {
    type Err = LawcheckError;

    fn from_str(s: &str) -> Result<LawId, LawcheckError> {
        LawId::ALL
            .iter()
            .copied()
            .find(|law| law.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| LawcheckError::UnknownLaw(s.to_string()))
    }
}

/// Bounds for the exhaustive scan.
#[derive(Debug, Clone)]
pub struct LawScope {
    /// Source universe size for map enumeration.
    pub x_size: usize,
    /// Target universe size for map enumeration.
    pub y_size: usize,
    /// Restrict enumeration to total maps.
    pub total_only: bool,
    /// Named rings for the congruence-class laws.
    pub rings: Vec<(String, Arc<FiniteRing>)>,
    pub budget: u64,
}

impl LawScope {
    /// Integers mod 1..=12 plus Z2 x Z4.
    pub fn default_ring_family() -> Vec<(String, Arc<FiniteRing>)> {
        let mut rings: Vec<(String, Arc<FiniteRing>)> = (1..=12)
            .map(|n| (format!("Z{n}"), FiniteRing::zmod(n).expect("small modulus")))
            .collect();
        let z2 = FiniteRing::zmod(2).expect("small modulus");
        let z4 = FiniteRing::zmod(4).expect("small modulus");
        rings.push((
            "Z2xZ4".to_string(),
            FiniteRing::product(&z2, &z4).expect("small product"),
        ));
        rings
    }
}

impl Default for LawScope {
    fn default() -> LawScope {
        LawScope {
            x_size: 3,
            y_size: 3,
            total_only: true,
            rings: LawScope::default_ring_family(),
            budget: DEFAULT_BUDGET,
        }
    }
}

/// A concrete instance where the equality reading of a law breaks, rebuilt
/// from the scan coordinates through the public operations.
#[derive(Debug, Clone)]
pub enum LawWitness {
    /// One map and up to two subsets; `lhs`/`rhs` follow the law statement.
    SingleMap {
        map: SetValuedMap,
        a: Subset,
        b: Option<Subset>,
        lhs: Subset,
        rhs: Subset,
    },
    MapPair {
        f1: SetValuedMap,
        f2: SetValuedMap,
        a: Subset,
        lhs: Subset,
        rhs: Subset,
    },
    ClassLaw {
        ring_name: String,
        ring: Arc<FiniteRing>,
        ideal: Subset,
        x: usize,
        y: usize,
        /// `[x ∘ y]`.
        class_side: Subset,
        /// `[x] ∘ [y]` setwise.
        setwise_side: Subset,
    },
}

#[derive(Debug, Clone)]
pub enum VerdictStatus {
    /// Expected equality confirmed on every instance.
    EqualityEverywhere,
    /// The inclusion holds everywhere and is strict at the witness.
    ProperInclusion(LawWitness),
    /// The expected (corrected) status itself is violated. Never produced by
    /// the shipped catalog; it would mean the correction is wrong.
    Refuted(LawWitness),
    /// Inclusion law: no strict instance inside the scope.
    ExhaustedNoWitness,
}

#[derive(Debug, Clone)]
pub struct LawVerdict {
    pub law: LawId,
    pub status: VerdictStatus,
    pub instances: u64,
}

impl LawVerdict {
    /// Whether the verdict matches the law's expected status.
    pub fn conforms(&self) -> bool {
        match (self.law.expected(), &self.status) {
            (ExpectedStatus::Equality, VerdictStatus::EqualityEverywhere) => true,
            (ExpectedStatus::InclusionSubset | ExpectedStatus::InclusionSuperset, s) => matches!(
                s,
                VerdictStatus::ProperInclusion(_) | VerdictStatus::ExhaustedNoWitness
            ),
            _ => false,
        }
    }

    pub fn witness(&self) -> Option<&LawWitness> {
        match &self.status {
            VerdictStatus::ProperInclusion(w) | VerdictStatus::Refuted(w) => Some(w),
            _ => None,
        }
    }
}

/// Yields every set-valued map from `x` to subsets of `y` exactly once:
/// maps are ordered as base-`k` counters over the per-element image masks,
/// the last source element varying fastest, each image stepping through
/// subsets in binary-counter order (skipping `{}` in total mode).
pub struct SvmEnumerator {
    x: Arc<Universe>,
    y: Arc<Universe>,
    total_only: bool,
    next_index: u64,
    count: u64,
}

impl SvmEnumerator {
    pub fn count(&self) -> u64 {
        self.count
    }
}

pub fn enumerate_svms(
    x: &Arc<Universe>,
    y: &Arc<Universe>,
    total_only: bool,
) -> Result<SvmEnumerator, LawcheckError> {
    let count = map_count(x.size(), y.size(), total_only, DEFAULT_BUDGET)?;
    Ok(SvmEnumerator {
        x: Arc::clone(x),
        y: Arc::clone(y),
        total_only,
        next_index: 0,
        count,
    })
}

fn map_count(
    x_size: usize,
    y_size: usize,
    total_only: bool,
    budget: u64,
) -> Result<u64, LawcheckError> {
    let base = (1u128 << y_size) - if total_only { 1 } else { 0 };
    let mut count: u128 = 1;
    for _ in 0..x_size {
        count = count.saturating_mul(base);
        if count > budget as u128 {
            return Err(LawcheckError::BudgetExceeded {
                required: count,
                budget,
            });
        }
    }
    Ok(count as u64)
}

fn masks_for_index(index: u64, x_size: usize, y_size: usize, total_only: bool) -> Vec<u64> {
    let base = (1u64 << y_size) - if total_only { 1 } else { 0 };
    let offset = if total_only { 1 } else { 0 };
    let mut digits = vec![0u64; x_size];
    let mut rest = index;
    for slot in (0..x_size).rev() {
        digits[slot] = rest % base + offset;
        rest /= base;
    }
    digits
}

impl Iterator for SvmEnumerator {
    type Item = SetValuedMap;

    fn next(&mut self) -> Option<SetValuedMap> {
        if self.next_index >= self.count {
            return None;
        }
        let masks = masks_for_index(
            self.next_index,
            self.x.size(),
            self.y.size(),
            self.total_only,
        );
        self.next_index += 1;
        let images = masks
            .iter()
            .map(|&m| Subset::from_low_mask(&self.y, m))
            .collect();
        Some(SetValuedMap::new(Arc::clone(&self.x), Arc::clone(&self.y), images).expect("shape"))
    }
}

fn lower_mask(map: &[u64], a: u64) -> u64 {
    let mut out = 0;
    for (x, &img) in map.iter().enumerate() {
        if img & !a == 0 {
            out |= 1 << x;
        }
    }
    out
}

fn upper_mask(map: &[u64], a: u64) -> u64 {
    let mut out = 0;
    for (x, &img) in map.iter().enumerate() {
        if img & a != 0 {
            out |= 1 << x;
        }
    }
    out
}

/// Exhaustively checks one law over the scope.
pub fn check_law(law: LawId, scope: &LawScope) -> Result<LawVerdict, LawcheckError> {
    match law.family() {
        LawFamily::SingleMapNoSets | LawFamily::SingleMapTwoSets => {
            check_single_map_law(law, scope)
        }
        LawFamily::MapPairOneSet => check_map_pair_law(law, scope),
        LawFamily::ClassLaw => check_class_law(law, scope),
    }
}

/// Runs the whole catalog in order.
pub fn check_all(scope: &LawScope) -> Result<Vec<LawVerdict>, LawcheckError> {
    LawId::ALL
        .iter()
        .map(|&law| check_law(law, scope))
        .collect()
}

/// Tracks the first strict witness and the first refutation while the scan
/// keeps running to completion.
struct Tracker {
    expected: ExpectedStatus,
    strict: Option<(u64, u64, u64)>,
    refuted: Option<(u64, u64, u64)>,
}

impl Tracker {
    fn new(expected: ExpectedStatus) -> Tracker {
        Tracker {
            expected,
            strict: None,
            refuted: None,
        }
    }

    /// Records the comparison of `lhs` and `rhs` at scan coordinates `key`.
    fn observe(&mut self, lhs: u64, rhs: u64, key: (u64, u64, u64)) {
        match self.expected {
            ExpectedStatus::Equality => {
                if lhs != rhs && self.refuted.is_none() {
                    self.refuted = Some(key);
                }
            }
            ExpectedStatus::InclusionSubset => {
                if lhs & !rhs != 0 {
                    if self.refuted.is_none() {
                        self.refuted = Some(key);
                    }
                } else if lhs != rhs && self.strict.is_none() {
                    self.strict = Some(key);
                }
            }
            ExpectedStatus::InclusionSuperset => {
                if rhs & !lhs != 0 {
                    if self.refuted.is_none() {
                        self.refuted = Some(key);
                    }
                } else if lhs != rhs && self.strict.is_none() {
                    self.strict = Some(key);
                }
            }
        }
    }

    fn done_early(&self) -> bool {
        // Equality laws can stop at the first refutation; inclusion laws
        // must finish the scan to certify the inclusion direction.
        self.expected == ExpectedStatus::Equality && self.refuted.is_some()
    }

    fn outcome(&self) -> (Option<(u64, u64, u64)>, bool) {
        if let Some(key) = self.refuted {
            (Some(key), true)
        } else {
            (self.strict, false)
        }
    }
}

/// Mask-level evaluation of a single-map law at `(a, b)`.
fn eval_single(law: LawId, map: &[u64], a: u64, b: u64) -> (u64, u64) {
    match law {
        LawId::P21_1 => (
            lower_mask(map, a & b),
            lower_mask(map, a) & lower_mask(map, b),
        ),
        LawId::P21_2 => (upper_mask(map, 0), 0),
        LawId::P21_3 | LawId::P31_2 => (
            upper_mask(map, a | b),
            upper_mask(map, a) | upper_mask(map, b),
        ),
        LawId::P21_4 | LawId::P31_3 => (
            lower_mask(map, a) | lower_mask(map, b),
            lower_mask(map, a | b),
        ),
        LawId::P21_5 | LawId::P31_1 => (
            upper_mask(map, a & b),
            upper_mask(map, a) & upper_mask(map, b),
        ),
        _ => unreachable!("not a single-map law"),
    }
}

/// Mask-level evaluation of a map-pair law at subset `a`.
fn eval_pair(
    law: LawId,
    f1: &[u64],
    f2: &[u64],
    union: &[u64],
    inter: &[u64],
    a: u64,
) -> (u64, u64) {
    match law {
        LawId::T21_1 | LawId::P32_1 => {
            (upper_mask(union, a), upper_mask(f1, a) | upper_mask(f2, a))
        }
        LawId::T21_2 | LawId::P32_2 => {
            (upper_mask(inter, a), upper_mask(f1, a) & upper_mask(f2, a))
        }
        LawId::T21_3 | LawId::P32_3 => {
            (lower_mask(union, a), lower_mask(f1, a) & lower_mask(f2, a))
        }
        LawId::T21_4 | LawId::P32_4 => {
            (lower_mask(inter, a), lower_mask(f1, a) | lower_mask(f2, a))
        }
        _ => unreachable!("not a map-pair law"),
    }
}

fn check_single_map_law(law: LawId, scope: &LawScope) -> Result<LawVerdict, LawcheckError> {
    validate_sizes(scope)?;
    let maps = map_count(scope.x_size, scope.y_size, scope.total_only, scope.budget)?;
    let y_count = 1u64 << scope.y_size;
    let set_instances = if law.family() == LawFamily::SingleMapNoSets {
        1
    } else {
        y_count * y_count
    };
    check_budget(maps as u128 * set_instances as u128, scope.budget)?;

    let mut tracker = Tracker::new(law.expected());
    let mut instances = 0u64;
    'scan: for m in 0..maps {
        let map = masks_for_index(m, scope.x_size, scope.y_size, scope.total_only);
        if law.family() == LawFamily::SingleMapNoSets {
            let (lhs, rhs) = eval_single(law, &map, 0, 0);
            instances += 1;
            tracker.observe(lhs, rhs, (m, 0, 0));
            if tracker.done_early() {
                break 'scan;
            }
            continue;
        }
        for a in 0..y_count {
            for b in 0..y_count {
                let (lhs, rhs) = eval_single(law, &map, a, b);
                instances += 1;
                tracker.observe(lhs, rhs, (m, a, b));
                if tracker.done_early() {
                    break 'scan;
                }
            }
        }
    }

    let (key, refuted) = tracker.outcome();
    let status = match key {
        None => empty_status(law),
        Some((m, a, b)) => {
            let witness = materialize_single(law, scope, m, a, b)?;
            if refuted {
                VerdictStatus::Refuted(witness)
            } else {
                VerdictStatus::ProperInclusion(witness)
            }
        }
    };
    Ok(LawVerdict {
        law,
        status,
        instances,
    })
}

fn check_map_pair_law(law: LawId, scope: &LawScope) -> Result<LawVerdict, LawcheckError> {
    validate_sizes(scope)?;
    // the combined-map hypothesis forces total maps, so enumerate total ones
    let maps = map_count(scope.x_size, scope.y_size, true, scope.budget)?;
    let y_count = 1u64 << scope.y_size;
    check_budget(maps as u128 * maps as u128 * y_count as u128, scope.budget)?;

    let tables: Vec<Vec<u64>> = (0..maps)
        .map(|m| masks_for_index(m, scope.x_size, scope.y_size, true))
        .collect();

    let mut tracker = Tracker::new(law.expected());
    let mut instances = 0u64;
    'scan: for (i, f1) in tables.iter().enumerate() {
        for (j, f2) in tables.iter().enumerate() {
            // hypothesis: every pointwise intersection is non-empty
            if f1.iter().zip(f2).any(|(&a, &b)| a & b == 0) {
                continue;
            }
            let union: Vec<u64> = f1.iter().zip(f2).map(|(&a, &b)| a | b).collect();
            let inter: Vec<u64> = f1.iter().zip(f2).map(|(&a, &b)| a & b).collect();
            for a in 0..y_count {
                let (lhs, rhs) = eval_pair(law, f1, f2, &union, &inter, a);
                instances += 1;
                tracker.observe(lhs, rhs, (i as u64, j as u64, a));
                if tracker.done_early() {
                    break 'scan;
                }
            }
        }
    }

    let (key, refuted) = tracker.outcome();
    let status = match key {
        None => empty_status(law),
        Some((i, j, a)) => {
            let witness = materialize_pair(law, scope, i, j, a)?;
            if refuted {
                VerdictStatus::Refuted(witness)
            } else {
                VerdictStatus::ProperInclusion(witness)
            }
        }
    };
    Ok(LawVerdict {
        law,
        status,
        instances,
    })
}

fn check_class_law(law: LawId, scope: &LawScope) -> Result<LawVerdict, LawcheckError> {
    let mut instances = 0u64;
    let mut strict: Option<LawWitness> = None;
    let mut refuted: Option<LawWitness> = None;

    for (name, ring) in &scope.rings {
        for ideal in ring.ideals()? {
            let congruence = Congruence::from_ideal(ring, &ideal)?;
            for x in 0..ring.size() {
                for y in 0..ring.size() {
                    instances += 1;
                    let (class_side, setwise_side) = match law {
                        LawId::P42Add => (
                            congruence.class_of(ring.add(x, y)).clone(),
                            setwise_add(ring, congruence.class_of(x), congruence.class_of(y))?,
                        ),
                        LawId::P42Mul => (
                            congruence.class_of(ring.mul(x, y)).clone(),
                            setwise_mul(ring, congruence.class_of(x), congruence.class_of(y))?,
                        ),
                        _ => unreachable!("not a class law"),
                    };
                    if class_side == setwise_side {
                        continue;
                    }
                    let witness = || LawWitness::ClassLaw {
                        ring_name: name.clone(),
                        ring: Arc::clone(ring),
                        ideal: ideal.clone(),
                        x,
                        y,
                        class_side: class_side.clone(),
                        setwise_side: setwise_side.clone(),
                    };
                    let contained = setwise_side
                        .is_subset_of(&class_side)
                        .expect("same ring universe");
                    match law.expected() {
                        ExpectedStatus::Equality => {
                            if refuted.is_none() {
                                refuted = Some(witness());
                            }
                        }
                        _ => {
                            if contained {
                                if strict.is_none() {
                                    strict = Some(witness());
                                }
                            } else if refuted.is_none() {
                                refuted = Some(witness());
                            }
                        }
                    }
                }
            }
        }
    }

    let status = if let Some(w) = refuted {
        VerdictStatus::Refuted(w)
    } else if let Some(w) = strict {
        VerdictStatus::ProperInclusion(w)
    } else {
        empty_status(law)
    };
    Ok(LawVerdict {
        law,
        status,
        instances,
    })
}

fn empty_status(law: LawId) -> VerdictStatus {
    match law.expected() {
        ExpectedStatus::Equality => VerdictStatus::EqualityEverywhere,
        _ => VerdictStatus::ExhaustedNoWitness,
    }
}

fn validate_sizes(scope: &LawScope) -> Result<(), LawcheckError> {
    if scope.x_size == 0 || scope.y_size == 0 || scope.x_size > 24 || scope.y_size > 24 {
        return Err(LawcheckError::BadScope { max: 24 });
    }
    Ok(())
}

fn check_budget(required: u128, budget: u64) -> Result<(), LawcheckError> {
    if required > budget as u128 {
        Err(LawcheckError::BudgetExceeded { required, budget })
    } else {
        Ok(())
    }
}

fn scope_universes(scope: &LawScope) -> Result<(Arc<Universe>, Arc<Universe>), LawcheckError> {
    let x = Universe::new((1..=scope.x_size).map(|i| i.to_string()))?;
    let y = Universe::new((1..=scope.y_size).map(|i| i.to_string()))?;
    Ok((x, y))
}

/// Rebuilds a single-map witness through the public operations and checks
/// that it reproduces the mask-level conclusion.
fn materialize_single(
    law: LawId,
    scope: &LawScope,
    map_index: u64,
    a: u64,
    b: u64,
) -> Result<LawWitness, LawcheckError> {
    let (xu, yu) = scope_universes(scope)?;
    let masks = masks_for_index(map_index, scope.x_size, scope.y_size, scope.total_only);
    let images = masks
        .iter()
        .map(|&m| Subset::from_low_mask(&yu, m))
        .collect();
    let map = SetValuedMap::new(Arc::clone(&xu), Arc::clone(&yu), images)?;
    let a = Subset::from_low_mask(&yu, a);
    let b = Subset::from_low_mask(&yu, b);

    let (lhs, rhs) = public_sides_single(law, &map, &a, &b)?;
    assert!(
        lhs != rhs,
        "witness for {law} does not reproduce through the public operations"
    );
    let uses_b = law.family() == LawFamily::SingleMapTwoSets;
    Ok(LawWitness::SingleMap {
        map,
        a,
        b: uses_b.then_some(b),
        lhs,
        rhs,
    })
}

/// Public-operation evaluation of a single-map law; sides follow the
/// statement orientation. The inverse-image forms go through the alias
/// methods, which is what makes them the same checks.
fn public_sides_single(
    law: LawId,
    map: &SetValuedMap,
    a: &Subset,
    b: &Subset,
) -> Result<(Subset, Subset), LawcheckError> {
    let sides = match law {
        LawId::P21_1 => (
            map.lower_approx(&a.intersection(b)?)?,
            map.lower_approx(a)?.intersection(&map.lower_approx(b)?)?,
        ),
        LawId::P21_2 => {
            let empty = Subset::empty(map.target());
            (map.upper_approx(&empty)?, Subset::empty(map.source()))
        }
        LawId::P21_3 => (
            map.upper_approx(&a.union(b)?)?,
            map.upper_approx(a)?.union(&map.upper_approx(b)?)?,
        ),
        LawId::P21_4 => (
            map.lower_approx(a)?.union(&map.lower_approx(b)?)?,
            map.lower_approx(&a.union(b)?)?,
        ),
        LawId::P21_5 => (
            map.upper_approx(&a.intersection(b)?)?,
            map.upper_approx(a)?.intersection(&map.upper_approx(b)?)?,
        ),
        LawId::P31_1 => (
            map.upper_inverse_image(&a.intersection(b)?)?,
            map.upper_inverse_image(a)?
                .intersection(&map.upper_inverse_image(b)?)?,
        ),
        LawId::P31_2 => (
            map.upper_inverse_image(&a.union(b)?)?,
            map.upper_inverse_image(a)?
                .union(&map.upper_inverse_image(b)?)?,
        ),
        LawId::P31_3 => (
            map.lower_inverse_image(a)?
                .union(&map.lower_inverse_image(b)?)?,
            map.lower_inverse_image(&a.union(b)?)?,
        ),
        _ => unreachable!("not a single-map law"),
    };
    Ok(sides)
}

fn materialize_pair(
    law: LawId,
    scope: &LawScope,
    i: u64,
    j: u64,
    a: u64,
) -> Result<LawWitness, LawcheckError> {
    let (xu, yu) = scope_universes(scope)?;
    let build = |index: u64| -> Result<SetValuedMap, LawcheckError> {
        let masks = masks_for_index(index, scope.x_size, scope.y_size, true);
        let images = masks
            .iter()
            .map(|&m| Subset::from_low_mask(&yu, m))
            .collect();
        Ok(SetValuedMap::new(Arc::clone(&xu), Arc::clone(&yu), images)?)
    };
    let f1 = build(i)?;
    let f2 = build(j)?;
    let a = Subset::from_low_mask(&yu, a);

    let (lhs, rhs) = public_sides_pair(law, &f1, &f2, &a)?;
    assert!(
        lhs != rhs,
        "witness for {law} does not reproduce through the public operations"
    );
    Ok(LawWitness::MapPair {
        f1,
        f2,
        a,
        lhs,
        rhs,
    })
}

fn public_sides_pair(
    law: LawId,
    f1: &SetValuedMap,
    f2: &SetValuedMap,
    a: &Subset,
) -> Result<(Subset, Subset), LawcheckError> {
    let union = f1.union_with(f2)?;
    let inter = f1.intersect_with(f2)?;
    let sides = match law {
        LawId::T21_1 => (
            union.upper_approx(a)?,
            f1.upper_approx(a)?.union(&f2.upper_approx(a)?)?,
        ),
        LawId::T21_2 => (
            inter.upper_approx(a)?,
            f1.upper_approx(a)?.intersection(&f2.upper_approx(a)?)?,
        ),
        LawId::T21_3 => (
            union.lower_approx(a)?,
            f1.lower_approx(a)?.intersection(&f2.lower_approx(a)?)?,
        ),
        LawId::T21_4 => (
            inter.lower_approx(a)?,
            f1.lower_approx(a)?.union(&f2.lower_approx(a)?)?,
        ),
        LawId::P32_1 => (
            union.upper_inverse_image(a)?,
            f1.upper_inverse_image(a)?
                .union(&f2.upper_inverse_image(a)?)?,
        ),
        LawId::P32_2 => (
            inter.upper_inverse_image(a)?,
            f1.upper_inverse_image(a)?
                .intersection(&f2.upper_inverse_image(a)?)?,
        ),
        LawId::P32_3 => (
            union.lower_inverse_image(a)?,
            f1.lower_inverse_image(a)?
                .intersection(&f2.lower_inverse_image(a)?)?,
        ),
        LawId::P32_4 => (
            inter.lower_inverse_image(a)?,
            f1.lower_inverse_image(a)?
                .union(&f2.lower_inverse_image(a)?)?,
        ),
        _ => unreachable!("not a map-pair law"),
    };
    Ok(sides)
}

/// Re-evaluates a witness through the public operations; true when the two
/// sides of the law statement still differ.
pub fn revalidate(witness: &LawWitness, law: LawId) -> Result<bool, LawcheckError> {
    match witness {
        LawWitness::SingleMap {
            map,
            a,
            b,
            lhs,
            rhs,
        } => {
            let blank = Subset::empty(map.target());
            let b = b.as_ref().unwrap_or(&blank);
            let (l, r) = public_sides_single(law, map, a, b)?;
            Ok(l == *lhs && r == *rhs && l != r)
        }
        LawWitness::MapPair {
            f1,
            f2,
            a,
            lhs,
            rhs,
        } => {
            let (l, r) = public_sides_pair(law, f1, f2, a)?;
            Ok(l == *lhs && r == *rhs && l != r)
        }
        LawWitness::ClassLaw {
            ring,
            ideal,
            x,
            y,
            class_side,
            setwise_side,
            ..
        } => {
            let congruence = Congruence::from_ideal(ring, ideal)?;
            let (class, setwise) = match law {
                LawId::P42Add => (
                    congruence.class_of(ring.add(*x, *y)).clone(),
                    setwise_add(ring, congruence.class_of(*x), congruence.class_of(*y))?,
                ),
                LawId::P42Mul => (
                    congruence.class_of(ring.mul(*x, *y)).clone(),
                    setwise_mul(ring, congruence.class_of(*x), congruence.class_of(*y))?,
                ),
                _ => return Ok(false),
            };
            Ok(class == *class_side && setwise == *setwise_side && class != setwise)
        }
    }
}
