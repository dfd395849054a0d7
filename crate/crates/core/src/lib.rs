//! Exact arithmetic for the octahedral family of rational elliptic surfaces.
//!
//! Coefficients live in `Q(i, sqrt2)` ([`FieldElem`]); polynomials are sparse
//! over that field ([`Poly`]). The invariant forms of the binary octahedral
//! group are in [`octahedral`], the Weierstrass family and its Kodaira fibers in
//! [`weierstrass`], the Néron–Severi lattice in [`lattice`], and the cubic
//! pencil with its section generators in [`pencil`]. [`verify`] bundles the
//! exact checks into named suites.

pub mod error;
pub mod field;
pub mod lattice;
pub mod octahedral;
pub mod pencil;
pub mod poly;
pub mod text;
pub mod verify;
pub mod weierstrass;

pub use error::{Error, Result};
pub use field::{rat, FieldElem, Rational};
pub use lattice::{DivisorClass, SectionIndex};
pub use octahedral::{Catalog, Group, GroupElement, SignedPermutation};
pub use pencil::cubic::{CubicPoint, MuConvention, PlaneCubic};
pub use pencil::CubicPencil;
pub use poly::{Poly, RationalFn, Var};
pub use verify::{Suite, SuiteReport};
pub use weierstrass::{CaseLabel, FiberRecord, FiberType, JClass, WeierstrassData};
