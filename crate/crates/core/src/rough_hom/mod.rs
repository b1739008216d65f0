//! Set-valued ring homomorphisms: total maps from a ring into subsets of a
//! ring, the "powerful" preservation laws, congruence-class maps, kernels,
//! rough subrings, induced maps and the fundamental-theorem pipeline.
//!
//! The prototype is the class map of a congruence, `F(x) = [x]`, and the
//! degenerate case is the singleton map `F(x) = {rho(x)}` of an ordinary
//! ring homomorphism. A map is *powerful* when it turns ring operations into
//! exact setwise operations:
//!
//! * `F(x+y) = F(x) + F(y)` and `F(x·y) = F(x) · F(y)` (setwise),
//! * `F(-x) = -F(x)` elementwise,
//! * for every unit `u` of a unital source, `F(u⁻¹)` is the two-sided
//!   inverse of `F(u)` among image sets, with identity `F(1)`.

mod fundamental;
mod induced;

pub use fundamental::{ImageRing, IsoFinding, IsoReport};
pub use induced::{check_thm42, check_thm43, induced_svh, Thm42Outcome, Thm43Report};

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::finite_ring::{
    Congruence, FiniteRing, RingError, RingHom, SubringVerdict, SubringViolation,
};
use crate::finite_sets::{same_universe, SetError, SetValuedMap, Subset};

#[derive(Debug, Error)]
pub enum RoughHomError {
    #[error("the map is not total: the image of element {x} is empty")]
    NotTotal { x: usize },
    #[error("map endpoints do not match the ring element universes")]
    Endpoints,
    #[error("the set-valued map is not powerful")]
    NotPowerful(Box<PowerfulReport>),
    #[error("the homomorphism must be surjective")]
    NotSurjective,
    #[error("the set is not a subring of the target ring: {0}")]
    NotASubring(SubringViolation),
    #[error("image sets are not closed under setwise {op}: index pair ({x}, {y})")]
    ImageNotClosed {
        op: &'static str,
        x: usize,
        y: usize,
    },
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Set(#[from] SetError),
}

/// `{a + b : a ∈ A, b ∈ B}` in the given ring.
pub fn setwise_add(ring: &FiniteRing, a: &Subset, b: &Subset) -> Result<Subset, RoughHomError> {
    ring.check_subset(a)?;
    ring.check_subset(b)?;
    let mut out = Subset::empty(ring.elems());
    for x in a.iter() {
        for y in b.iter() {
            out.insert(ring.add(x, y));
        }
    }
    Ok(out)
}

/// `{a · b : a ∈ A, b ∈ B}`.
pub fn setwise_mul(ring: &FiniteRing, a: &Subset, b: &Subset) -> Result<Subset, RoughHomError> {
    ring.check_subset(a)?;
    ring.check_subset(b)?;
    let mut out = Subset::empty(ring.elems());
    for x in a.iter() {
        for y in b.iter() {
            out.insert(ring.mul(x, y));
        }
    }
    Ok(out)
}

/// `{-a : a ∈ A}`.
pub fn setwise_neg(ring: &FiniteRing, a: &Subset) -> Result<Subset, RoughHomError> {
    ring.check_subset(a)?;
    let mut out = Subset::empty(ring.elems());
    for x in a.iter() {
        out.insert(ring.neg(x));
    }
    Ok(out)
}

/// A total set-valued map between two rings, the carrier for all the
/// preservation checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetValuedRingHom {
    source: Arc<FiniteRing>,
    target: Arc<FiniteRing>,
    map: SetValuedMap,
}

impl SetValuedRingHom {
    /// Wraps a map whose endpoints are the element universes of the two
    /// rings. Every image must be non-empty.
    pub fn new(
        source: Arc<FiniteRing>,
        target: Arc<FiniteRing>,
        map: SetValuedMap,
    ) -> Result<SetValuedRingHom, RoughHomError> {
        if !same_universe(map.source(), source.elems())
            || !same_universe(map.target(), target.elems())
        {
            return Err(RoughHomError::Endpoints);
        }
        if let Some(x) = (0..source.size()).find(|&x| map.image_of(x).is_empty()) {
            return Err(RoughHomError::NotTotal { x });
        }
        Ok(SetValuedRingHom {
            source,
            target,
            map,
        })
    }

    /// The class map of a congruence: `F(x) = [x]`, source = target.
    pub fn from_congruence(c: &Congruence) -> SetValuedRingHom {
        let ring = c.ring();
        let images = (0..ring.size()).map(|x| c.class_of(x).clone()).collect();
        let map = SetValuedMap::new(Arc::clone(ring.elems()), Arc::clone(ring.elems()), images)
            .expect("class map has one block per element");
        SetValuedRingHom {
            source: Arc::clone(ring),
            target: Arc::clone(ring),
            map,
        }
    }

    /// The singleton map `F(x) = {rho(x)}` of an ordinary homomorphism.
    pub fn from_hom(rho: &RingHom) -> SetValuedRingHom {
        let target = rho.target();
        let images = (0..rho.source().size())
            .map(|x| {
                let mut s = Subset::empty(target.elems());
                s.insert(rho.apply(x));
                s
            })
            .collect();
        let map = SetValuedMap::new(
            Arc::clone(rho.source().elems()),
            Arc::clone(target.elems()),
            images,
        )
        .expect("one singleton per element");
        SetValuedRingHom {
            source: Arc::clone(rho.source()),
            target: Arc::clone(target),
            map,
        }
    }

    pub fn source(&self) -> &Arc<FiniteRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteRing> {
        &self.target
    }

    pub fn map(&self) -> &SetValuedMap {
        &self.map
    }

    pub fn image_of(&self, x: usize) -> &Subset {
        self.map.image_of(x)
    }

    /// `{x : F(x) = F(0)}`, the kernel taken at the additive identity.
    /// Always contains 0.
    pub fn kernel(&self) -> Subset {
        let f0 = self.image_of(self.source.zero());
        let mut k = Subset::empty(self.source.elems());
        for x in 0..self.source.size() {
            if self.image_of(x) == f0 {
                k.insert(x);
            }
        }
        k
    }

    /// The non-default variant `{x : F(x) = F(1)}`, for comparison with the
    /// kernel at the additive identity; `None` when the source has no one.
    pub fn kernel_at_one(&self) -> Option<Subset> {
        let one = self.source.one()?;
        let f1 = self.image_of(one);
        let mut k = Subset::empty(self.source.elems());
        for x in 0..self.source.size() {
            if self.image_of(x) == f1 {
                k.insert(x);
            }
        }
        Some(k)
    }

    /// Runs all preservation laws, each with its own verdict and a
    /// lexicographically first witness on failure.
    pub fn is_powerful(&self) -> PowerfulReport {
        let n = self.source.size();
        let tgt = &self.target;

        let mut additive = Verdict::Holds;
        let mut multiplicative = Verdict::Holds;
        'add: for x in 0..n {
            for y in 0..n {
                let lhs = self.image_of(self.source.add(x, y));
                let rhs = setwise_add(tgt, self.image_of(x), self.image_of(y))
                    .expect("images live in the target ring");
                if *lhs != rhs {
                    additive = Verdict::Fails(PowerfulWitness::Pair { x, y });
                    break 'add;
                }
            }
        }
        'mul: for x in 0..n {
            for y in 0..n {
                let lhs = self.image_of(self.source.mul(x, y));
                let rhs = setwise_mul(tgt, self.image_of(x), self.image_of(y))
                    .expect("images live in the target ring");
                if *lhs != rhs {
                    multiplicative = Verdict::Fails(PowerfulWitness::Pair { x, y });
                    break 'mul;
                }
            }
        }

        let mut negation = Verdict::Holds;
        for x in 0..n {
            let lhs = self.image_of(self.source.neg(x));
            let rhs = setwise_neg(tgt, self.image_of(x)).expect("images live in the target ring");
            if *lhs != rhs {
                negation = Verdict::Fails(PowerfulWitness::Element { x });
                break;
            }
        }

        let (unit_inverse, unit_inverse_elementwise, unit_images_all_units) = self.unit_laws();

        PowerfulReport {
            additive,
            multiplicative,
            negation,
            unit_inverse,
            unit_inverse_elementwise,
            unit_images_all_units,
        }
    }

    /// The three readings of the unit-inverse clause. All quantify over the
    /// units of a unital source and hold vacuously otherwise.
    ///
    /// The verdict that gates powerfulness is the set-level one: `F(u⁻¹)` is
    /// a two-sided setwise-multiplicative inverse of `F(u)` relative to
    /// `F(1)`. The literal elementwise readings — `F(u⁻¹) = {a⁻¹ : a ∈ F(u),
    /// a a unit}` and "every member of `F(u)` is a unit" — already fail on
    /// congruence-class maps (a class of a unit contains non-units), so they
    /// are computed and reported separately rather than gating.
    fn unit_laws(&self) -> (Verdict, Verdict, Verdict) {
        let Some(one) = self.source.one() else {
            return (Verdict::Holds, Verdict::Holds, Verdict::Holds);
        };
        let tgt = &self.target;
        let f1 = self.image_of(one);

        let mut set_level = Verdict::Holds;
        let mut elementwise = Verdict::Holds;
        let mut all_units = Verdict::Holds;

        for u in self.source.units() {
            let u_inv = self.source.inverse_of(u).expect("unit has an inverse");
            let fu = self.image_of(u);
            let fu_inv = self.image_of(u_inv);

            if set_level.holds() {
                let left = setwise_mul(tgt, fu, fu_inv).expect("images in target");
                let right = setwise_mul(tgt, fu_inv, fu).expect("images in target");
                if left != *f1 || right != *f1 {
                    set_level = Verdict::Fails(PowerfulWitness::InverseMismatch { u });
                }
            }
            if all_units.holds() {
                if let Some(a) = fu.iter().find(|&a| !tgt.is_unit(a)) {
                    all_units = Verdict::Fails(PowerfulWitness::NonUnitImage { u, a });
                }
            }
            if elementwise.holds() {
                let mut inverses = Subset::empty(tgt.elems());
                for a in fu.iter() {
                    if let Some(ai) = tgt.inverse_of(a) {
                        inverses.insert(ai);
                    }
                }
                if inverses != *fu_inv {
                    elementwise = Verdict::Fails(PowerfulWitness::InverseMismatch { u });
                }
            }
        }
        (set_level, elementwise, all_units)
    }

    /// Asserts the kernel-is-a-subring theorem for a powerful map.
    pub fn check_kernel_subring(&self) -> Result<KernelSubringReport, RoughHomError> {
        let report = self.is_powerful();
        if !report.is_powerful() {
            return Err(RoughHomError::NotPowerful(Box::new(report)));
        }
        let kernel = self.kernel();
        let verdict = self.source.is_subring(&kernel)?;
        Ok(KernelSubringReport { kernel, verdict })
    }

    /// Lower/upper rough-subring verdicts for a subring `s` of the target,
    /// with the `F(0) ⊆ S` hypothesis tracked explicitly.
    pub fn rough_subring_check(&self, s: &Subset) -> Result<RoughSubringReport, RoughHomError> {
        if let Some(v) = self.target.is_subring(s)?.violation() {
            return Err(RoughHomError::NotASubring(v));
        }
        let lower = self.map.lower_approx(s)?;
        let upper = self.map.upper_approx(s)?;
        let lower_verdict = self.source.is_subring(&lower)?;
        let upper_verdict = self.source.is_subring(&upper)?;
        let hypothesis_holds = self
            .image_of(self.source.zero())
            .is_subset_of(s)
            .expect("subring is over the target universe");
        let falsifies_lower_theorem = hypothesis_holds && !lower_verdict.holds();
        Ok(RoughSubringReport {
            lower,
            upper,
            lower_verdict,
            upper_verdict,
            hypothesis_holds,
            falsifies_lower_theorem,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerfulWitness {
    Pair { x: usize, y: usize },
    Element { x: usize },
    NonUnitImage { u: usize, a: usize },
    InverseMismatch { u: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(PowerfulWitness),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<PowerfulWitness> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(*w),
        }
    }
}

/// Verdicts for the four powerful laws plus the two informational literal
/// readings of the unit-inverse clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerfulReport {
    pub additive: Verdict,
    pub multiplicative: Verdict,
    pub negation: Verdict,
    /// Set-level unit-inverse law; this one gates [`is_powerful`](Self::is_powerful).
    pub unit_inverse: Verdict,
    /// Literal reading `F(u⁻¹) = {a⁻¹ : a ∈ F(u), a a unit}`; informational.
    pub unit_inverse_elementwise: Verdict,
    /// Literal reading "every member of `F(u)` is a unit"; informational.
    pub unit_images_all_units: Verdict,
}

impl PowerfulReport {
    pub fn is_powerful(&self) -> bool {
        self.additive.holds()
            && self.multiplicative.holds()
            && self.negation.holds()
            && self.unit_inverse.holds()
    }
}

#[derive(Debug, Clone)]
pub struct KernelSubringReport {
    pub kernel: Subset,
    pub verdict: SubringVerdict,
}

#[derive(Debug, Clone)]
pub struct RoughSubringReport {
    pub lower: Subset,
    pub upper: Subset,
    pub lower_verdict: SubringVerdict,
    pub upper_verdict: SubringVerdict,
    /// Whether `F(0) ⊆ S`.
    pub hypothesis_holds: bool,
    /// Hypothesis holds yet the lower approximation is not a subring; a
    /// refutation of the lower rough-subring theorem if it ever fires.
    pub falsifies_lower_theorem: bool,
}

/// Per-pair comparison of congruence-class arithmetic with setwise
/// arithmetic on classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassLawStatus {
    /// `[x ∘ y] = [x] ∘ [y]` setwise, everywhere.
    Equality,
    /// Setwise is contained in the class everywhere, strictly at `(x, y)`.
    ProperInclusion { x: usize, y: usize },
    /// Setwise escapes the class at `(x, y)`; never expected for a valid
    /// congruence.
    Incomparable { x: usize, y: usize },
}

impl ClassLawStatus {
    pub fn is_equality(&self) -> bool {
        matches!(self, ClassLawStatus::Equality)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassLawReport {
    pub additive: ClassLawStatus,
    pub multiplicative: ClassLawStatus,
}

/// Classifies `[x+y]` against `[x]+[y]` and `[x·y]` against `[x]·[y]` over
/// all pairs. For ideal-coset congruences the additive law is an equality;
/// the multiplicative law is an inclusion that can be proper.
pub fn check_class_laws(c: &Congruence) -> Result<ClassLawReport, RoughHomError> {
    let ring = c.ring();
    let n = ring.size();
    let mut additive = ClassLawStatus::Equality;
    let mut multiplicative = ClassLawStatus::Equality;

    for x in 0..n {
        for y in 0..n {
            let class_sum = c.class_of(ring.add(x, y));
            let setwise_sum = setwise_add(ring, c.class_of(x), c.class_of(y))?;
            update_status(&mut additive, class_sum, &setwise_sum, x, y);

            let class_prod = c.class_of(ring.mul(x, y));
            let setwise_prod = setwise_mul(ring, c.class_of(x), c.class_of(y))?;
            update_status(&mut multiplicative, class_prod, &setwise_prod, x, y);
        }
    }
    Ok(ClassLawReport {
        additive,
        multiplicative,
    })
}

fn update_status(
    status: &mut ClassLawStatus,
    class: &Subset,
    setwise: &Subset,
    x: usize,
    y: usize,
) {
    if setwise == class {
        return;
    }
    let contained = setwise
        .is_subset_of(class)
        .expect("classes share the ring universe");
    match (*status, contained) {
        // an escape is worse than a proper inclusion; keep the first escape
        (ClassLawStatus::Incomparable { .. }, _) => {}
        (_, false) => *status = ClassLawStatus::Incomparable { x, y },
        (ClassLawStatus::Equality, true) => *status = ClassLawStatus::ProperInclusion { x, y },
        (ClassLawStatus::ProperInclusion { .. }, true) => {}
    }
}

impl fmt::Display for PowerfulWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PowerfulWitness::Pair { x, y } => write!(f, "pair ({x}, {y})"),
            PowerfulWitness::Element { x } => write!(f, "element {x}"),
            PowerfulWitness::NonUnitImage { u, a } => {
                write!(f, "image of unit {u} contains the non-unit {a}")
            }
            PowerfulWitness::InverseMismatch { u } => write!(f, "unit {u}"),
        }
    }
}
