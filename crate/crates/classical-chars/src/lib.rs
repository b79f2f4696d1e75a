//! Exact-arithmetic engine for low-degree irreducible complex characters of
//! finite classical groups.
//!
//! The crate enumerates Lusztig symbols and evaluates unipotent character
//! degrees ([`symbols`]), computes exact orders and p′-parts of classical
//! factors ([`orders`]), enumerates semisimple-centralizer shapes in the dual
//! groups with exact indices and class counts ([`centralizers`]), assembles
//! unipotent character degree sets of centralizer factors ([`unipotent`]),
//! and classifies all irreducible character degrees below explicit bounds for
//! the symplectic, odd spin, even-characteristic orthogonal, and even spin
//! families ([`classify`]). Everything is computed with exact rational
//! polynomial arithmetic in `q` ([`qpoly`]); no floating point is used
//! anywhere.

pub mod centralizers;
pub mod classify;
pub mod cli;
pub mod orders;
pub mod qpoly;
pub mod symbols;
pub mod unipotent;
