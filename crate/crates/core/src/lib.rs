//! Exact root data, weight systems of representations, and Griffiths
//! characters of cocharacter data `(G, mu, r)`.

pub mod cochar;
pub mod error;
pub mod exact;
pub mod griffiths;
pub mod par;
pub mod repweights;
pub mod rootdata;
pub mod sweep;
pub mod table1;

pub use error::{Error, Result};
