//! Deciding ultimate periodicity of sets of integers recognized by finite
//! automata in linear and abstract numeration systems.

pub mod algebra;
pub mod ans;
pub mod automata;
pub mod cli;
pub mod error;
pub mod hd0l;
pub mod io;
pub mod linrec;
pub mod positional;
pub mod search;
pub mod upset;

pub use error::{Error, Result};
