//! Shared helpers for the integration tests: an independent dense oracle for
//! Artinian quotients, a brute-force semigroup oracle, random-input
//! strategies and the property bodies.

#![allow(dead_code)]

pub mod oracle;
pub mod props;
pub mod strategies;

use macdual::exactalg::monomial::Monomial;
use macdual::{Polynomial, Side};

/// Rewrites a polynomial in `m` variables into `m + 1` variables, the new
/// variable being the first.
pub fn prepend_var(p: &Polynomial) -> Polynomial {
    let m = p.nvars();
    Polynomial::from_terms(
        m + 1,
        p.side(),
        p.terms().map(|(mono, c)| {
            let mut e = vec![0u16];
            e.extend_from_slice(mono.exponents());
            (Monomial::from_exponents(&e), c.clone())
        }),
    )
}

pub fn ring_var(m: usize, i: usize) -> Polynomial {
    Polynomial::var(m, i, Side::Ring)
}
