//! Exact polynomial algebra for Fano threefolds of genus twelve: Gröbner
//! bases, Grassmannians, invariant divisors, threshold bounds and the
//! plane quartic of lines.

pub mod exterior;
pub mod grassmann;
pub mod groebner;
pub mod lct;
pub mod linalg;
pub mod lines_vsp;
pub mod mukai;
pub mod polycore;
