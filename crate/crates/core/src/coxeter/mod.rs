//! Coxeter groups: graphs, the word problem, descents, Bruhat order and
//! parabolic cosets.

mod bruhat;
mod classify;
mod coset;
mod element;
mod graph;
mod system;

pub use classify::{Classification, FcPrefix};
pub use coset::{CosetCase, CosetDecomposition};
pub use element::{GenSet, GroupElement, Side};
pub use graph::{BondLabel, CoxeterGraph};
pub use system::{Coxeter, Filter, DEFAULT_CLOSURE_CAP, DEFAULT_ELEMENT_CAP};
