//! Convex hulls in the weak order of Coxeter groups.
//!
//! The crate is organised by backend:
//!
//! * [`coxeter`] holds Coxeter matrices, words and the generic weak-order
//!   vocabulary shared by every backend.
//! * [`finite`] realizes finite-type matrices through their root systems and
//!   enumerates the whole group into a [`finite::GroupTable`] of inversion
//!   bit masks.
//! * [`convexity`] computes hulls, convexity tests and the (strong) hull
//!   property sweeps over anything exposing inversion masks.
//! * [`type_a`] and [`type_b`] are the symmetric and hyperoctahedral
//!   backends with posets, linear extensions and the insertion maps.
//! * [`right_angled`] handles right-angled groups through commutation normal
//!   forms and inversion-set meets.
//! * [`graphical`] works with acyclic orientations of simple graphs.
//! * [`commands`] implements the batch commands behind the `coxhull` binary.

pub mod commands;
pub mod convexity;
pub mod coxeter;
mod error;
pub mod finite;
pub mod graphical;
pub mod injection;
pub mod perm;
pub mod poset;
pub mod relabel;
pub mod right_angled;
pub mod signed;
pub mod type_a;
pub mod type_b;

pub use error::{Error, Result};
