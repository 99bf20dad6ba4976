//! Lattice files, reports, diagrams and corpus search for `xlattice`.

pub mod app;
pub mod load;
pub mod render;
pub mod search;
pub mod spec;

pub use app::run;
