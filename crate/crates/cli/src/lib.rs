//! File formats, law sweeps, and the command-line front end for
//! `sublists-core`.

pub mod app;
pub mod bench;
pub mod golden;
pub mod treedoc;
pub mod verify;
