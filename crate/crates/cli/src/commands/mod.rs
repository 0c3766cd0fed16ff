//! The built-in subcommands.

mod divisors;
mod lct;
mod lines;
mod plucker;
mod v12;

pub use divisors::Divisors;
pub use lct::Lct;
pub use lines::LinesQuartic;
pub use plucker::Plucker;
pub use v12::BuildV12;

/// Runs `$body` with `$F` bound to the field chosen by the config and `$ctx`
/// to its context.
macro_rules! over_field {
    ($cfg:expr, |$F:ident, $ctx:ident| $body:expr) => {
        if $cfg.exact {
            type $F = num_rational::BigRational;
            let $ctx = ();
            $body
        } else {
            type $F = fanocalc_core::polycore::Fp;
            let $ctx: u32 = $cfg.modulus;
            $body
        }
    };
}
pub(crate) use over_field;
