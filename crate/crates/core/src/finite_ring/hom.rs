//! Ring homomorphisms as validated lookup tables, plus a backtracking search
//! for homomorphisms and isomorphisms over images of additive generators.

use std::fmt;
use std::sync::Arc;

use crate::finite_sets::{same_universe, SetError, Subset};

use super::{FiniteRing, RingError, MAX_ISO_SEARCH};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomLaw {
    Additive,
    Multiplicative,
}

impl fmt::Display for HomLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HomLaw::Additive => "rho(x+y) = rho(x)+rho(y)",
            HomLaw::Multiplicative => "rho(x*y) = rho(x)*rho(y)",
        })
    }
}

/// A validated ring homomorphism. Both preservation laws are checked on all
/// pairs at construction; `rho(0) = 0` follows. Unitality is not required.
#[derive(Debug, Clone)]
pub struct RingHom {
    source: Arc<FiniteRing>,
    target: Arc<FiniteRing>,
    table: Vec<usize>,
    injective: bool,
    surjective: bool,
}

impl PartialEq for RingHom {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.table == other.table
    }
}
impl Eq for RingHom {}

impl RingHom {
    pub fn from_table(
        source: &Arc<FiniteRing>,
        target: &Arc<FiniteRing>,
        table: Vec<usize>,
    ) -> Result<RingHom, RingError> {
        let n = source.size();
        if table.len() != n {
            return Err(RingError::TableShape {
                expected: n,
                got: table.len(),
            });
        }
        for &t in &table {
            if t >= target.size() {
                return Err(RingError::TableEntry {
                    entry: t,
                    size: target.size(),
                });
            }
        }
        for x in 0..n {
            for y in 0..n {
                if table[source.add(x, y)] != target.add(table[x], table[y]) {
                    return Err(RingError::NotAHomomorphism {
                        law: HomLaw::Additive,
                        x,
                        y,
                    });
                }
                if table[source.mul(x, y)] != target.mul(table[x], table[y]) {
                    return Err(RingError::NotAHomomorphism {
                        law: HomLaw::Multiplicative,
                        x,
                        y,
                    });
                }
            }
        }
        let mut hit = vec![false; target.size()];
        for &t in &table {
            hit[t] = true;
        }
        let surjective = hit.iter().all(|&h| h);
        let injective = {
            let mut seen = vec![false; target.size()];
            table
                .iter()
                .all(|&t| !std::mem::replace(&mut seen[t], true))
        };
        Ok(RingHom {
            source: Arc::clone(source),
            target: Arc::clone(target),
            table,
            injective,
            surjective,
        })
    }

    pub fn identity(ring: &Arc<FiniteRing>) -> RingHom {
        RingHom {
            source: Arc::clone(ring),
            target: Arc::clone(ring),
            table: (0..ring.size()).collect(),
            injective: true,
            surjective: true,
        }
    }

    pub fn source(&self) -> &Arc<FiniteRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteRing> {
        &self.target
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn is_injective(&self) -> bool {
        self.injective
    }

    pub fn is_surjective(&self) -> bool {
        self.surjective
    }

    pub fn is_isomorphism(&self) -> bool {
        self.injective && self.surjective
    }

    /// Classical kernel `{x : rho(x) = 0}`.
    pub fn kernel(&self) -> Subset {
        let mut k = Subset::empty(self.source.elems());
        for x in 0..self.source.size() {
            if self.table[x] == self.target.zero() {
                k.insert(x);
            }
        }
        k
    }

    /// `{rho(x) : x ∈ s}` as a subset of the target elements.
    pub fn image_of_subset(&self, s: &Subset) -> Result<Subset, RingError> {
        if !same_universe(s.universe(), self.source.elems()) {
            return Err(RingError::Set(SetError::UniverseMismatch));
        }
        let mut out = Subset::empty(self.target.elems());
        for x in s.iter() {
            out.insert(self.table[x]);
        }
        Ok(out)
    }

    /// `{x : rho(x) ∈ s}`.
    pub fn preimage_of_subset(&self, s: &Subset) -> Result<Subset, RingError> {
        if !same_universe(s.universe(), self.target.elems()) {
            return Err(RingError::Set(SetError::UniverseMismatch));
        }
        let mut out = Subset::empty(self.source.elems());
        for x in 0..self.source.size() {
            if s.contains(self.table[x]) {
                out.insert(x);
            }
        }
        Ok(out)
    }

    /// Composition `next ∘ self`.
    pub fn then(&self, next: &RingHom) -> Result<RingHom, RingError> {
        if self.target != next.source {
            return Err(RingError::HomMismatch);
        }
        let table = self.table.iter().map(|&x| next.table[x]).collect();
        RingHom::from_table(&self.source, &next.target, table)
    }
}

/// Finds a ring isomorphism, or proves none exists. Backtracks over images
/// of a minimal additive generating set with additive-order pruning; the
/// returned isomorphism is the first in lexicographic order of generator
/// images.
pub fn find_isomorphism(
    a: &Arc<FiniteRing>,
    b: &Arc<FiniteRing>,
) -> Result<Option<RingHom>, RingError> {
    if a.size() > MAX_ISO_SEARCH || b.size() > MAX_ISO_SEARCH {
        return Err(RingError::SizeCap {
            size: a.size().max(b.size()),
            max: MAX_ISO_SEARCH,
        });
    }
    if a.size() != b.size() {
        return Ok(None);
    }
    Ok(search_homs(a, b, true, true)?.into_iter().next())
}

/// Every ring homomorphism from `a` to `b`, in lexicographic order of
/// generator images.
pub fn enumerate_homs(a: &Arc<FiniteRing>, b: &Arc<FiniteRing>) -> Result<Vec<RingHom>, RingError> {
    if a.size() > MAX_ISO_SEARCH || b.size() > MAX_ISO_SEARCH {
        return Err(RingError::SizeCap {
            size: a.size().max(b.size()),
            max: MAX_ISO_SEARCH,
        });
    }
    search_homs(a, b, false, false)
}

/// Greedy minimal additive generating sequence: repeatedly adjoin the least
/// element outside the additive span.
fn additive_generators(ring: &FiniteRing) -> Vec<usize> {
    let n = ring.size();
    let mut in_span = vec![false; n];
    in_span[ring.zero()] = true;
    let mut gens = Vec::new();
    loop {
        let Some(g) = (0..n).find(|&x| !in_span[x]) else {
            return gens;
        };
        gens.push(g);
        in_span[g] = true;
        // close the span additively
        loop {
            let mut changed = false;
            for x in 0..n {
                if !in_span[x] {
                    continue;
                }
                for y in 0..n {
                    if !in_span[y] {
                        continue;
                    }
                    let s = ring.add(x, y);
                    if !in_span[s] {
                        in_span[s] = true;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
    }
}

fn search_homs(
    a: &Arc<FiniteRing>,
    b: &Arc<FiniteRing>,
    bijective_only: bool,
    first_only: bool,
) -> Result<Vec<RingHom>, RingError> {
    let gens = additive_generators(a);
    let mut found = Vec::new();
    let mut images = Vec::with_capacity(gens.len());
    assign(
        a,
        b,
        &gens,
        &mut images,
        bijective_only,
        first_only,
        &mut found,
    );
    Ok(found)
}

fn assign(
    a: &Arc<FiniteRing>,
    b: &Arc<FiniteRing>,
    gens: &[usize],
    images: &mut Vec<usize>,
    bijective_only: bool,
    first_only: bool,
    found: &mut Vec<RingHom>,
) {
    if first_only && !found.is_empty() {
        return;
    }
    if images.len() == gens.len() {
        if let Some(hom) = build_candidate(a, b, gens, images, bijective_only) {
            found.push(hom);
        }
        return;
    }
    let g = gens[images.len()];
    for h in 0..b.size() {
        // a homomorphic image's additive order divides the source order
        if !a.additive_order(g).is_multiple_of(b.additive_order(h)) {
            continue;
        }
        images.push(h);
        assign(a, b, gens, images, bijective_only, first_only, found);
        images.pop();
    }
}

/// Propagates generator images over the additive span and verifies the full
/// candidate table; returns the hom when everything checks out.
fn build_candidate(
    a: &Arc<FiniteRing>,
    b: &Arc<FiniteRing>,
    gens: &[usize],
    images: &[usize],
    bijective_only: bool,
) -> Option<RingHom> {
    let n = a.size();
    let mut table = vec![usize::MAX; n];
    table[a.zero()] = b.zero();
    // BFS over sums: each reachable x+g gets image phi(x)+phi(g).
    let mut queue = vec![a.zero()];
    while let Some(x) = queue.pop() {
        for (k, &g) in gens.iter().enumerate() {
            let s = a.add(x, g);
            let img = b.add(table[x], images[k]);
            if table[s] == usize::MAX {
                table[s] = img;
                queue.push(s);
            } else if table[s] != img {
                return None;
            }
        }
    }
    if table.contains(&usize::MAX) {
        return None;
    }
    let hom = RingHom::from_table(a, b, table).ok()?;
    if bijective_only && !hom.is_isomorphism() {
        return None;
    }
    Some(hom)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod3_reduction_is_a_surjective_hom() {
        let z6 = FiniteRing::zmod(6).unwrap();
        let z3 = FiniteRing::zmod(3).unwrap();
        let rho = RingHom::from_table(&z6, &z3, vec![0, 1, 2, 0, 1, 2]).unwrap();
        assert!(rho.is_surjective());
        assert!(!rho.is_injective());
        assert_eq!(rho.kernel().iter().collect::<Vec<_>>(), vec![0, 3]);
    }

    #[test]
    fn shift_by_one_is_not_a_hom() {
        let z6 = FiniteRing::zmod(6).unwrap();
        let err = RingHom::from_table(&z6, &z6, vec![1, 2, 3, 4, 5, 0]).unwrap_err();
        assert!(matches!(err, RingError::NotAHomomorphism { .. }));
    }

    #[test]
    fn identity_isomorphism_always_found() {
        for n in [1, 2, 5, 6, 8] {
            let r = FiniteRing::zmod(n).unwrap();
            let iso = find_isomorphism(&r, &r).unwrap().unwrap();
            assert!(iso.is_isomorphism());
        }
    }

    #[test]
    fn chinese_remainder_isomorphism() {
        let z6 = FiniteRing::zmod(6).unwrap();
        let z2 = FiniteRing::zmod(2).unwrap();
        let z3 = FiniteRing::zmod(3).unwrap();
        let p = FiniteRing::product(&z2, &z3).unwrap();
        let iso = find_isomorphism(&z6, &p).unwrap().expect("Z6 = Z2 x Z3");
        assert!(iso.is_isomorphism());
        // and there is none onto Z4-like structures
        let z2z2 = FiniteRing::product(&z2, &z2).unwrap();
        let z4 = FiniteRing::zmod(4).unwrap();
        assert!(find_isomorphism(&z4, &z2z2).unwrap().is_none());
    }

    #[test]
    fn hom_enumeration_between_small_zmods() {
        let z2 = FiniteRing::zmod(2).unwrap();
        let z4 = FiniteRing::zmod(4).unwrap();
        let z6 = FiniteRing::zmod(6).unwrap();
        // Z2 -> Z4: only the zero map (2 is not idempotent mod 4).
        assert_eq!(enumerate_homs(&z2, &z4).unwrap().len(), 1);
        // Z6 -> Z6: determined by the idempotents 0, 1, 3, 4.
        assert_eq!(enumerate_homs(&z6, &z6).unwrap().len(), 4);
    }

    #[test]
    fn hom_search_matches_the_idempotent_oracle() {
        // A map Z_n -> Z_m is x -> x*t for t with t*t = t and n*t = 0; the
        // search must find exactly these.
        for n in 1..=8usize {
            for m in 1..=8usize {
                let src = FiniteRing::zmod(n).unwrap();
                let dst = FiniteRing::zmod(m).unwrap();
                let mut expected: Vec<Vec<usize>> = (0..m)
                    .filter(|&t| t * t % m == t && n * t % m == 0)
                    .map(|t| (0..n).map(|x| x * t % m).collect())
                    .collect();
                expected.sort();
                let mut found: Vec<Vec<usize>> = enumerate_homs(&src, &dst)
                    .unwrap()
                    .into_iter()
                    .map(|h| h.table().to_vec())
                    .collect();
                found.sort();
                assert_eq!(found, expected, "Z{n} -> Z{m}");
            }
        }
    }

    #[test]
    fn composition() {
        let z12 = FiniteRing::zmod(12).unwrap();
        let z6 = FiniteRing::zmod(6).unwrap();
        let z3 = FiniteRing::zmod(3).unwrap();
        let a = RingHom::from_table(&z12, &z6, (0..12).map(|x| x % 6).collect()).unwrap();
        let b = RingHom::from_table(&z6, &z3, (0..6).map(|x| x % 3).collect()).unwrap();
        let c = a.then(&b).unwrap();
        assert_eq!(c.apply(7), 1);
        assert!(c.is_surjective());
    }
}
