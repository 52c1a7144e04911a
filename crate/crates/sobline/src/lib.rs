//! Exact-rational desk models of compact lines, their measure duals, and
//! c0-valued operator extension.
//!
//! The crate provides, end to end and without floating point:
//!
//! * computable compact lines (finite, ordinal segments in Cantor normal
//!   form, lexicographic doubles, the rational unit interval, double-arrow
//!   lines over a finite rational cut set) with order queries, clopen
//!   partitions and increasing quotient maps ([`order`]);
//! * finitely supported signed measures with exact total variation, Jordan
//!   decomposition, the cumulative (NBV) correspondence and
//!   Riemann-Stieltjes integration ([`measure`]);
//! * step / piecewise-linear test functions, subspaces with exactly
//!   computable dual norms (rational LP by vertex enumeration and simplex)
//!   and operators `R: X -> C(L)` with their boundary maps ([`space`]);
//! * the delta-oscillation hierarchy of closed sets, interval ranks and the
//!   flower norm bound ([`fragment`]);
//! * measure-rewriting algorithms (tilde, skeleton, schedule, the full
//!   decomposition contract), the quotient extension criterion, the dyadic
//!   sweep counterexample and the operator extension pipeline ([`decomp`],
//!   [`pipeline`]);
//! * deterministic random campaigns that re-verify every quantitative
//!   postcondition on generated instances ([`campaign`]).
//!
//! All arithmetic is `BigRational`; every asserted inequality or identity is
//! checked as an exact rational comparison. Campaign and per-index work runs
//! data-parallel via rayon when the `parallel` feature (default) is enabled
//! and falls back to plain iterators otherwise.

pub mod campaign;
pub mod decomp;
pub mod error;
pub mod exec;
pub mod fragment;
pub mod gen;
pub mod jsonio;
pub mod measure;
pub mod order;
pub mod pipeline;
pub mod rat;
pub mod space;

pub use error::Error;
pub type Result<T> = std::result::Result<T, Error>;
