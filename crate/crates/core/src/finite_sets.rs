//! Finite universes, subsets as bit-vectors, and set-valued maps with their
//! lower/upper approximation operators.
//!
//! A [`Universe`] is an ordered list of distinct labels; element identity is
//! the positional index and labels only matter at the I/O boundary. A
//! [`Subset`] is a membership bit-vector bound to its universe, and a
//! [`SetValuedMap`] assigns to every source element a subset of the target.
//! The approximation operators are
//!
//! * `lower(F, A) = {x : F(x) ⊆ A}` — elements certainly in `A` through `F`,
//! * `upper(F, A) = {x : F(x) ∩ A ≠ ∅}` — elements possibly in `A` through `F`,
//!
//! and the boundary `upper \ lower` decides whether `A` is rough.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Hard cap on universe size; subsets are fixed-width bit-vectors.
pub const MAX_UNIVERSE: usize = 256;

const WORDS: usize = MAX_UNIVERSE / 64;

#[derive(Debug, Error)]
pub enum SetError {
    #[error("universe must contain at least one element")]
    EmptyUniverse,
    #[error("universe has {size} elements, the maximum is {max}")]
    UniverseTooLarge { size: usize, max: usize },
    #[error("duplicate label `{label}` in universe")]
    DuplicateLabel { label: String },
    #[error("label `{label}` is not an element of the universe")]
    UnknownLabel { label: String },
    #[error("element index {index} out of range for universe of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("operands are bound to different universes")]
    UniverseMismatch,
    #[error("map table has {got} entries, source universe has {expected}")]
    TableSizeMismatch { expected: usize, got: usize },
}

/// An ordered finite set of distinct element names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Universe {
    labels: Vec<String>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Arc<Universe>, SetError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(SetError::EmptyUniverse);
        }
        if labels.len() > MAX_UNIVERSE {
            return Err(SetError::UniverseTooLarge {
                size: labels.len(),
                max: MAX_UNIVERSE,
            });
        }
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(SetError::DuplicateLabel {
                    label: label.clone(),
                });
            }
        }
        Ok(Arc::new(Universe { labels }))
    }

    /// Universe labeled `0..n-1`, the element set of modular-arithmetic rings.
    pub fn indexed(n: usize) -> Result<Arc<Universe>, SetError> {
        Universe::new((0..n).map(|i| i.to_string()))
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.labels.iter().map(String::as_str)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// Two universes are interchangeable when they are the same allocation or
/// have identical label sequences.
pub fn same_universe(a: &Arc<Universe>, b: &Arc<Universe>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Every subset of a universe of at most 24 elements, in binary-counter
/// order (bit `i` of the counter is membership of element `i`).
pub fn all_subsets(
    universe: &Arc<Universe>,
) -> Result<impl Iterator<Item = Subset> + '_, SetError> {
    if universe.size() > 24 {
        return Err(SetError::UniverseTooLarge {
            size: universe.size(),
            max: 24,
        });
    }
    let count = 1u64 << universe.size();
    Ok((0..count).map(move |m| Subset::from_low_mask(universe, m)))
}

/// A membership bit-vector over a fixed universe.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    universe: Arc<Universe>,
    words: [u64; WORDS],
}

impl Subset {
    pub fn empty(universe: &Arc<Universe>) -> Subset {
        Subset {
            universe: Arc::clone(universe),
            words: [0; WORDS],
        }
    }

    pub fn full(universe: &Arc<Universe>) -> Subset {
        let mut s = Subset::empty(universe);
        for i in 0..universe.size() {
            s.words[i / 64] |= 1 << (i % 64);
        }
        s
    }

    pub fn from_indices<I>(universe: &Arc<Universe>, indices: I) -> Result<Subset, SetError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = Subset::empty(universe);
        for i in indices {
            if i >= universe.size() {
                return Err(SetError::IndexOutOfRange {
                    index: i,
                    size: universe.size(),
                });
            }
            s.words[i / 64] |= 1 << (i % 64);
        }
        Ok(s)
    }

    pub fn from_labels<I, S>(universe: &Arc<Universe>, labels: I) -> Result<Subset, SetError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut s = Subset::empty(universe);
        for label in labels {
            let label = label.as_ref();
            let i = universe
                .index_of(label)
                .ok_or_else(|| SetError::UnknownLabel {
                    label: label.to_string(),
                })?;
            s.words[i / 64] |= 1 << (i % 64);
        }
        Ok(s)
    }

    pub(crate) fn from_low_mask(universe: &Arc<Universe>, mask: u64) -> Subset {
        debug_assert!(universe.size() <= 64);
        let mut s = Subset::empty(universe);
        s.words[0] = mask;
        s
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.universe.size() && self.words[index / 64] >> (index % 64) & 1 == 1
    }

    pub fn insert(&mut self, index: usize) {
        assert!(index < self.universe.size(), "index out of universe range");
        self.words[index / 64] |= 1 << (index % 64);
    }

    pub fn cardinality(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe.size()).filter(move |&i| self.contains(i))
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> + '_ {
        self.iter().map(move |i| self.universe.label(i))
    }

    fn check_same(&self, other: &Subset) -> Result<(), SetError> {
        if same_universe(&self.universe, &other.universe) {
            Ok(())
        } else {
            Err(SetError::UniverseMismatch)
        }
    }

    fn zip_words(&self, other: &Subset, f: impl Fn(u64, u64) -> u64) -> Subset {
        let mut words = [0; WORDS];
        for (i, w) in words.iter_mut().enumerate() {
            *w = f(self.words[i], other.words[i]);
        }
        Subset {
            universe: Arc::clone(&self.universe),
            words,
        }
    }

    pub fn union(&self, other: &Subset) -> Result<Subset, SetError> {
        self.check_same(other)?;
        Ok(self.zip_words(other, |a, b| a | b))
    }

    pub fn intersection(&self, other: &Subset) -> Result<Subset, SetError> {
        self.check_same(other)?;
        Ok(self.zip_words(other, |a, b| a & b))
    }

    pub fn difference(&self, other: &Subset) -> Result<Subset, SetError> {
        self.check_same(other)?;
        Ok(self.zip_words(other, |a, b| a & !b))
    }

    pub fn symmetric_difference(&self, other: &Subset) -> Result<Subset, SetError> {
        self.check_same(other)?;
        Ok(self.zip_words(other, |a, b| a ^ b))
    }

    pub fn complement(&self) -> Subset {
        let full = Subset::full(&self.universe);
        self.zip_words(&full, |a, b| !a & b)
    }

    pub fn is_subset_of(&self, other: &Subset) -> Result<bool, SetError> {
        self.check_same(other)?;
        Ok(self
            .words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0))
    }

    pub fn is_disjoint_from(&self, other: &Subset) -> Result<bool, SetError> {
        self.check_same(other)?;
        Ok(self
            .words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0))
    }
}

impl fmt::Display for Subset {
    /// Canonical set syntax: `{` + space-separated labels in universe order + `}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, label) in self.labels().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{label}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subset{self}")
    }
}

/// A multivalued map: every source element gets a subset of the target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetValuedMap {
    source: Arc<Universe>,
    target: Arc<Universe>,
    images: Vec<Subset>,
}

impl SetValuedMap {
    pub fn new(
        source: Arc<Universe>,
        target: Arc<Universe>,
        images: Vec<Subset>,
    ) -> Result<SetValuedMap, SetError> {
        if images.len() != source.size() {
            return Err(SetError::TableSizeMismatch {
                expected: source.size(),
                got: images.len(),
            });
        }
        for image in &images {
            if !same_universe(image.universe(), &target) {
                return Err(SetError::UniverseMismatch);
            }
        }
        Ok(SetValuedMap {
            source,
            target,
            images,
        })
    }

    /// Builds the map from one list of member indices per source element.
    pub fn from_index_table(
        source: Arc<Universe>,
        target: Arc<Universe>,
        table: &[Vec<usize>],
    ) -> Result<SetValuedMap, SetError> {
        let images = table
            .iter()
            .map(|row| Subset::from_indices(&target, row.iter().copied()))
            .collect::<Result<Vec<_>, _>>()?;
        SetValuedMap::new(source, target, images)
    }

    pub fn source(&self) -> &Arc<Universe> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Universe> {
        &self.target
    }

    pub fn image_of(&self, x: usize) -> &Subset {
        &self.images[x]
    }

    /// True iff every image is non-empty.
    pub fn is_total(&self) -> bool {
        self.images.iter().all(|s| !s.is_empty())
    }

    /// `{x : F(x) ≠ ∅}`.
    pub fn domain(&self) -> Subset {
        let mut d = Subset::empty(&self.source);
        for (x, image) in self.images.iter().enumerate() {
            if !image.is_empty() {
                d.insert(x);
            }
        }
        d
    }

    /// `∪_x F(x)` as a subset of the target.
    pub fn image(&self) -> Subset {
        let mut im = Subset::empty(&self.target);
        for s in &self.images {
            im = im.union(s).expect("images share the target universe");
        }
        im
    }

    fn check_target_set(&self, a: &Subset) -> Result<(), SetError> {
        if same_universe(a.universe(), &self.target) {
            Ok(())
        } else {
            Err(SetError::UniverseMismatch)
        }
    }

    /// `{x : F(x) ⊆ A}`. Elements with empty image are included, since the
    /// empty set is a subset of everything; restrict to total maps for the
    /// Pawlak-style reading.
    pub fn lower_approx(&self, a: &Subset) -> Result<Subset, SetError> {
        self.check_target_set(a)?;
        let mut out = Subset::empty(&self.source);
        for (x, image) in self.images.iter().enumerate() {
            if image.is_subset_of(a)? {
                out.insert(x);
            }
        }
        Ok(out)
    }

    /// `{x : F(x) ∩ A ≠ ∅}`.
    pub fn upper_approx(&self, a: &Subset) -> Result<Subset, SetError> {
        self.check_target_set(a)?;
        let mut out = Subset::empty(&self.source);
        for (x, image) in self.images.iter().enumerate() {
            if !image.is_disjoint_from(a)? {
                out.insert(x);
            }
        }
        Ok(out)
    }

    /// The lower inverse image of `B` under this map. Alias for
    /// [`lower_approx`](Self::lower_approx): the inverse-map formulation
    /// `{x : F(x) ⊆ B}` is the same set.
    pub fn lower_inverse_image(&self, b: &Subset) -> Result<Subset, SetError> {
        self.lower_approx(b)
    }

    /// The upper inverse image of `B`; alias for
    /// [`upper_approx`](Self::upper_approx) (`{x : F(x) ∩ B ≠ ∅}`).
    pub fn upper_inverse_image(&self, b: &Subset) -> Result<Subset, SetError> {
        self.upper_approx(b)
    }

    pub fn rough_pair(&self, a: &Subset) -> Result<RoughPair, SetError> {
        let lower = self.lower_approx(a)?;
        let upper = self.upper_approx(a)?;
        let boundary = upper.difference(&lower)?;
        Ok(RoughPair {
            lower,
            upper,
            boundary,
        })
    }

    /// `G` with `y ∈ F(x) ⟺ x ∈ G(y)`; swaps source and target.
    pub fn invert(&self) -> SetValuedMap {
        let mut images: Vec<Subset> = (0..self.target.size())
            .map(|_| Subset::empty(&self.source))
            .collect();
        for (x, image) in self.images.iter().enumerate() {
            for y in image.iter() {
                images[y].insert(x);
            }
        }
        SetValuedMap {
            source: Arc::clone(&self.target),
            target: Arc::clone(&self.source),
            images,
        }
    }

    fn check_parallel(&self, other: &SetValuedMap) -> Result<(), SetError> {
        if same_universe(&self.source, &other.source) && same_universe(&self.target, &other.target)
        {
            Ok(())
        } else {
            Err(SetError::UniverseMismatch)
        }
    }

    /// Pointwise union `(F1 ∪ F2)(x) = F1(x) ∪ F2(x)`.
    pub fn union_with(&self, other: &SetValuedMap) -> Result<SetValuedMap, SetError> {
        self.check_parallel(other)?;
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| a.union(b))
            .collect::<Result<Vec<_>, _>>()?;
        SetValuedMap::new(Arc::clone(&self.source), Arc::clone(&self.target), images)
    }

    /// Pointwise intersection. Whether the result still has all images
    /// non-empty — the hypothesis of the combined-map laws — is readable from
    /// [`is_total`](Self::is_total) on the result.
    pub fn intersect_with(&self, other: &SetValuedMap) -> Result<SetValuedMap, SetError> {
        self.check_parallel(other)?;
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| a.intersection(b))
            .collect::<Result<Vec<_>, _>>()?;
        SetValuedMap::new(Arc::clone(&self.source), Arc::clone(&self.target), images)
    }
}

/// Lower and upper approximations of one subset, with their boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoughPair {
    pub lower: Subset,
    pub upper: Subset,
    pub boundary: Subset,
}

impl RoughPair {
    /// A set is rough exactly when the boundary region is non-empty.
    pub fn is_rough(&self) -> bool {
        !self.boundary.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u6() -> Arc<Universe> {
        Universe::new(["1", "2", "3", "4", "5", "6"]).unwrap()
    }

    /// The worked six-element example: F(1)={1}, F(2)={1,3}, F(3)={3,4},
    /// F(4)={4}, F(5)={1,6}, F(6)={1,5,6}.
    fn example_map(u: &Arc<Universe>) -> SetValuedMap {
        SetValuedMap::from_index_table(
            Arc::clone(u),
            Arc::clone(u),
            &[
                vec![0],
                vec![0, 2],
                vec![2, 3],
                vec![3],
                vec![0, 5],
                vec![0, 4, 5],
            ],
        )
        .unwrap()
    }

    fn letters() -> Arc<Universe> {
        Universe::new(["a", "b", "c", "d", "e", "f"]).unwrap()
    }

    /// F(a)={a}, F(b)={a,c}, F(c)={c,d}, F(d)={d}, F(e)={a,f}, F(f)={a,e,f}.
    fn letters_map(u: &Arc<Universe>) -> SetValuedMap {
        SetValuedMap::from_index_table(
            Arc::clone(u),
            Arc::clone(u),
            &[
                vec![0],
                vec![0, 2],
                vec![2, 3],
                vec![3],
                vec![0, 5],
                vec![0, 4, 5],
            ],
        )
        .unwrap()
    }

    fn set(u: &Arc<Universe>, labels: &[&str]) -> Subset {
        Subset::from_labels(u, labels).unwrap()
    }

    #[test]
    fn universe_rejects_duplicates_and_empty() {
        assert!(matches!(
            Universe::new(["a", "b", "a"]),
            Err(SetError::DuplicateLabel { .. })
        ));
        assert!(matches!(
            Universe::new(Vec::<String>::new()),
            Err(SetError::EmptyUniverse)
        ));
        assert!(matches!(
            Universe::indexed(MAX_UNIVERSE + 1),
            Err(SetError::UniverseTooLarge { .. })
        ));
    }

    #[test]
    fn subset_algebra_basics() {
        let u = u6();
        let a = set(&u, &["1", "3"]);
        let b = set(&u, &["2"]);
        assert_eq!(a.union(&b).unwrap(), set(&u, &["1", "2", "3"]));
        assert!(a.symmetric_difference(&a).unwrap().is_empty());
        assert_eq!(
            set(&u, &["1", "3", "5"]).complement(),
            set(&u, &["2", "4", "6"])
        );
        let other = Universe::new(["x"]).unwrap();
        assert!(matches!(
            a.union(&Subset::empty(&other)),
            Err(SetError::UniverseMismatch)
        ));
    }

    #[test]
    fn display_is_canonical() {
        let u = u6();
        assert_eq!(set(&u, &["5", "1", "3"]).to_string(), "{1 3 5}");
        assert_eq!(Subset::empty(&u).to_string(), "{}");
        assert_eq!(Subset::full(&u).to_string(), "{1 2 3 4 5 6}");
    }

    #[test]
    fn domain_and_image() {
        let u = u6();
        let f = example_map(&u);
        assert!(f.is_total());
        assert_eq!(f.domain(), Subset::full(&u));
        assert_eq!(f.image(), set(&u, &["1", "3", "4", "5", "6"]));

        let empty_map =
            SetValuedMap::new(Arc::clone(&u), Arc::clone(&u), vec![Subset::empty(&u); 6]).unwrap();
        assert!(empty_map.domain().is_empty());
        assert!(empty_map.image().is_empty());

        let u2 = Universe::new(["1", "2"]).unwrap();
        let partial =
            SetValuedMap::from_index_table(Arc::clone(&u2), Arc::clone(&u2), &[vec![], vec![0]])
                .unwrap();
        assert_eq!(partial.domain(), set(&u2, &["2"]));
        assert!(!partial.is_total());

        let singletons = SetValuedMap::from_index_table(
            Arc::clone(&u),
            Arc::clone(&u),
            &[vec![0], vec![1], vec![2], vec![3], vec![4], vec![5]],
        )
        .unwrap();
        assert_eq!(singletons.image(), Subset::full(&u));
    }

    #[test]
    fn example_approximations() {
        let u = u6();
        let f = example_map(&u);
        let a = set(&u, &["1", "3", "5"]);
        let b = set(&u, &["2", "4", "6"]);

        assert_eq!(f.lower_approx(&a).unwrap(), set(&u, &["1", "2"]));
        assert_eq!(
            f.upper_approx(&a).unwrap(),
            set(&u, &["1", "2", "3", "5", "6"])
        );
        assert_eq!(f.lower_approx(&b).unwrap(), set(&u, &["4"]));
        assert_eq!(f.upper_approx(&b).unwrap(), set(&u, &["3", "4", "5", "6"]));

        // Total map against the full and empty target sets.
        assert_eq!(f.lower_approx(&Subset::full(&u)).unwrap(), Subset::full(&u));
        assert!(f.upper_approx(&Subset::empty(&u)).unwrap().is_empty());

        let pair = f.rough_pair(&a).unwrap();
        assert_eq!(pair.boundary, set(&u, &["3", "5", "6"]));
        assert!(pair.is_rough());
    }

    #[test]
    fn lower_includes_empty_images() {
        let u2 = Universe::new(["1", "2"]).unwrap();
        let partial =
            SetValuedMap::from_index_table(Arc::clone(&u2), Arc::clone(&u2), &[vec![], vec![0]])
                .unwrap();
        // {} ⊆ {} so the empty-image element sits in every lower approximation.
        let lower = partial.lower_approx(&Subset::empty(&u2)).unwrap();
        assert_eq!(lower, set(&u2, &["1"]));
    }

    #[test]
    fn letters_example_b1_and_b2() {
        let u = letters();
        let f = letters_map(&u);

        let b1 = set(&u, &["a", "d", "e"]);
        let pair = f.rough_pair(&b1).unwrap();
        assert_eq!(pair.lower, set(&u, &["a", "d"]));
        assert_eq!(pair.upper, Subset::full(&u));
        assert!(pair.is_rough());

        // Evaluating the definitions on B2 = {b,e,f} gives lower = {} and
        // upper = {e,f}; the printed source values disagree and are carried
        // in the errata report instead.
        let b2 = set(&u, &["b", "e", "f"]);
        let pair = f.rough_pair(&b2).unwrap();
        assert!(pair.lower.is_empty());
        assert_eq!(pair.upper, set(&u, &["e", "f"]));
        assert!(pair.is_rough());
    }

    #[test]
    fn identity_map_is_exact() {
        let u = u6();
        let id = SetValuedMap::from_index_table(
            Arc::clone(&u),
            Arc::clone(&u),
            &[vec![0], vec![1], vec![2], vec![3], vec![4], vec![5]],
        )
        .unwrap();
        let a = set(&u, &["2", "5"]);
        let pair = id.rough_pair(&a).unwrap();
        assert_eq!(pair.lower, a);
        assert_eq!(pair.upper, a);
        assert!(!pair.is_rough());
    }

    #[test]
    fn invert_letters_example() {
        let u = letters();
        let f = letters_map(&u);
        let g = f.invert();
        assert_eq!(g.image_of(0), &set(&u, &["a", "b", "e", "f"]));
        assert!(g.image_of(1).is_empty());
        assert_eq!(g.image_of(2), &set(&u, &["b", "c"]));
        assert_eq!(f.invert().invert(), f);

        let empty =
            SetValuedMap::new(Arc::clone(&u), Arc::clone(&u), vec![Subset::empty(&u); 6]).unwrap();
        assert_eq!(empty.invert().invert(), empty);
    }

    #[test]
    fn map_union_and_intersection() {
        let u = letters();
        let f1 = letters_map(&u);
        // F2(a)={a}, F2(b)={a,b}, F2(c)={c}, F2(d)={d}, F2(e)=F2(f)={a,e,f}.
        let f2 = SetValuedMap::from_index_table(
            Arc::clone(&u),
            Arc::clone(&u),
            &[
                vec![0],
                vec![0, 1],
                vec![2],
                vec![3],
                vec![0, 4, 5],
                vec![0, 4, 5],
            ],
        )
        .unwrap();
        let inter = f1.intersect_with(&f2).unwrap();
        assert_eq!(inter.image_of(1), &set(&u, &["a"]));
        assert!(inter.is_total());

        assert_eq!(f1.union_with(&f1).unwrap(), f1);
        let full =
            SetValuedMap::new(Arc::clone(&u), Arc::clone(&u), vec![Subset::full(&u); 6]).unwrap();
        assert_eq!(f1.intersect_with(&full).unwrap(), f1);
    }

    #[test]
    fn duality_and_monotonicity_exhaustive_small() {
        // Every map over |X| = |Y| = 2, total or not, every subset pair.
        let u = Universe::new(["1", "2"]).unwrap();
        for m0 in 0u64..4 {
            for m1 in 0u64..4 {
                let f = SetValuedMap::new(
                    Arc::clone(&u),
                    Arc::clone(&u),
                    vec![Subset::from_low_mask(&u, m0), Subset::from_low_mask(&u, m1)],
                )
                .unwrap();
                for a_mask in 0u64..4 {
                    let a = Subset::from_low_mask(&u, a_mask);
                    let lower = f.lower_approx(&a).unwrap();
                    let dual = f.upper_approx(&a.complement()).unwrap().complement();
                    assert_eq!(lower, dual);
                    for b_mask in 0u64..4 {
                        let b = Subset::from_low_mask(&u, b_mask);
                        if a.is_subset_of(&b).unwrap() {
                            assert!(lower.is_subset_of(&f.lower_approx(&b).unwrap()).unwrap());
                            assert!(f
                                .upper_approx(&a)
                                .unwrap()
                                .is_subset_of(&f.upper_approx(&b).unwrap())
                                .unwrap());
                        }
                    }
                }
            }
        }
    }
}
