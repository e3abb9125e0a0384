//! Finite orders of automorphisms of K3 surfaces from eigenvalue data on `H^2`.

pub mod cli;
pub mod cyclotomic_core;
pub mod spectrum;
pub mod surface_models;
pub mod tame_engine;
pub mod wild_replay;
