//! dkplab: lattice-based preconditioning for integer-programming
//! feasibility problems, generators for decomposable knapsack problems
//! (DKPs), and an exact-rational branch-and-bound engine for verifying
//! hardness/easiness behavior at desk scale.
//!
//! The pieces:
//! - [`lattice`]: exact LLL/KZ reduction, HNF, kernel and dual bases,
//!   Babai nearest plane, brute-force successive minima.
//! - [`lp`]: exact rational two-phase simplex, widths and integer widths,
//!   closed-form knapsack relaxation values.
//! - [`reformulate`]: rangespace and AHL (kernel-lattice) reformulations,
//!   right-hand-side reduction, direction correspondence maps.
//! - [`instances`]: DKP recipes, named hard families, Frobenius bounds,
//!   branch-and-bound node lower bounds, reduced-basis counterexamples.
//! - [`bnb`]: exact branch and bound with variable or constraint branching
//!   and split-disjunction certificate checking.
//! - [`fileio`] and [`experiment`]: the text formats and the desk-scale
//!   experiment tables behind the `dkplab` binary.
//!
//! See the `examples/` directory for one runnable walkthrough per
//! capability.

pub mod bnb;
pub mod error;
pub mod experiment;
pub mod fileio;
pub mod instance;
pub mod instances;
pub mod lattice;
pub mod lp;
pub mod mat;
pub mod reformulate;
pub mod rng;

pub use error::{Error, Result};
