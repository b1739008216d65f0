//! Rough-set approximations over finite set-valued maps and finite rings.
//!
//! The crate has five layers:
//!
//! * [`finite_sets`] — universes, subsets, set-valued maps and the
//!   lower/upper approximation operators;
//! * [`powerset_ring`] — the ring `(2^X, Δ, ∩)` with exhaustive axiom
//!   verification;
//! * [`finite_ring`] — Cayley-table rings, congruences, ideals, quotients
//!   and homomorphisms, all validated by brute force at construction;
//! * [`rough_hom`] — set-valued ring homomorphisms, the powerful
//!   preservation laws, kernels, rough subrings and the
//!   `R/ker(F) ≅ F(R)` pipeline;
//! * [`lawcheck`] — exhaustive verification of the approximation
//!   distribution laws with minimal-counterexample reporting, and the
//!   generated errata report.
//!
//! Everything is immutable after construction and safe to share across
//! threads; all checks are deterministic, with witnesses fixed by
//! enumeration order.
//!
//! ```
//! use std::sync::Arc;
//! use roughring::finite_sets::{SetValuedMap, Subset, Universe};
//!
//! let u = Universe::new(["1", "2", "3"])?;
//! let f = SetValuedMap::from_index_table(
//!     Arc::clone(&u),
//!     Arc::clone(&u),
//!     &[vec![0], vec![0, 1], vec![1]],
//! )?;
//! let a = Subset::from_labels(&u, ["1", "3"])?;
//! assert_eq!(f.lower_approx(&a)?.to_string(), "{1}");
//! assert_eq!(f.upper_approx(&a)?.to_string(), "{1 2}");
//! # Ok::<(), roughring::finite_sets::SetError>(())
//! ```

pub mod finite_ring;
pub mod finite_sets;
pub mod lawcheck;
pub mod powerset_ring;
pub mod rough_hom;
