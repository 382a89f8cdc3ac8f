//! Exact combinatorial checks around the relative presentation
//! `P_n = <t,u | t^5, t^2 u t u^-n>` and the generalised Fibonacci groups
//! `F(r,n)`.
//!
//! The crate is split into six modules:
//!
//! - [`presentations`]: words, presentations, `F(r,n)`, Tietze script replay.
//! - [`oracle`]: coset enumeration and Smith normal form.
//! - [`stargraph`]: the star graph alphabet and vertex label enumeration.
//! - [`curvature`]: exact angle arithmetic and curvature formulas.
//! - [`regions`]: chord configurations, length and labelling checks.
//! - [`ledger`]: inequality ledgers over transcribed case data.

pub mod curvature;
pub mod ledger;
pub mod oracle;
pub mod presentations;
pub mod regions;
pub mod stargraph;
