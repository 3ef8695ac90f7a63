use macdual::exactalg::linalg::determinant;
use macdual::exactalg::monomial::Monomial;
use macdual::exactalg::scalar;
use macdual::{Polynomial, Scalar, Side};
use proptest::collection::vec;
use proptest::prelude::*;

fn mono_upto(m: usize, maxdeg: u32) -> impl Strategy<Value = Vec<u16>> {
    vec(0u16..=maxdeg as u16, m).prop_map(move |mut e| {
        while e.iter().map(|&x| x as u32).sum::<u32>() > maxdeg {
            let i = e.iter().enumerate().max_by_key(|(_, x)| **x).unwrap().0;
            e[i] -= 1;
        }
        e
    })
}

fn nonconstant(m: usize, maxdeg: u32) -> impl Strategy<Value = Vec<u16>> {
    (mono_upto(m, maxdeg), 0..m).prop_map(|(mut e, i)| {
        if e.iter().all(|&x| x == 0) {
            e[i] = 1;
        }
        e
    })
}

pub fn poly(m: usize, maxdeg: u32, nterms: usize, side: Side) -> impl Strategy<Value = Polynomial> {
    vec((mono_upto(m, maxdeg), -3i64..=3), 1..=nterms).prop_map(move |ts| {
        Polynomial::from_terms(m, side, ts.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), scalar::int(c))))
    })
}

/// Homogeneous form of degree `deg` in `m` variables.
pub fn form(m: usize, deg: u32, nterms: usize, side: Side) -> impl Strategy<Value = Polynomial> {
    vec((vec(0u16..=deg as u16, m), -4i64..=4), 1..=nterms).prop_map(move |ts| {
        Polynomial::from_terms(
            m,
            side,
            ts.into_iter().map(|(raw, c)| {
                let mut left = deg as u16;
                let mut e = vec![0u16; m];
                for i in 0..m - 1 {
                    e[i] = raw[i] % (left + 1);
                    left -= e[i];
                }
                e[m - 1] = left;
                (Monomial::from_exponents(&e), scalar::int(c))
            }),
        )
    })
}

/// Artinian ideal in at most three variables with socle degree at most 4:
/// pure powers plus random monomials and binomials. Also returns `k` with
/// `M^k ⊆ I`.
#[derive(Clone, Debug)]
pub struct ArtinianInput {
    pub nvars: usize,
    pub gens: Vec<Polynomial>,
    pub k: u32,
}

pub fn artinian_ideal() -> impl Strategy<Value = ArtinianInput> {
    (1usize..=3).prop_flat_map(|m| {
        (
            vec(1u16..=3, m),
            vec(nonconstant(m, 4), 0..3),
            vec((nonconstant(m, 4), nonconstant(m, 4), prop::sample::select(vec![1i64, -1, 2])), 0..3),
        )
            .prop_map(move |(mut pw, monos, bins)| {
                while pw.iter().map(|&a| a as u32 - 1).sum::<u32>() > 4 {
                    let i = pw.iter().enumerate().max_by_key(|(_, x)| **x).unwrap().0;
                    pw[i] -= 1;
                }
                let k = pw.iter().map(|&a| a as u32 - 1).sum::<u32>() + 1;
                let mut gens = Vec::new();
                for (i, &a) in pw.iter().enumerate() {
                    gens.push(Polynomial::term(Monomial::var(m, i), scalar::one(), Side::Ring).pow(a as u32));
                }
                for e in monos {
                    gens.push(Polynomial::term(Monomial::from_exponents(&e), scalar::one(), Side::Ring));
                }
                for (u, v, c) in bins {
                    let p = Polynomial::from_terms(
                        m,
                        Side::Ring,
                        [(Monomial::from_exponents(&u), scalar::one()), (Monomial::from_exponents(&v), scalar::int(-c))],
                    );
                    if !p.is_zero() {
                        gens.push(p);
                    }
                }
                ArtinianInput { nvars: m, gens, k }
            })
    })
}

/// `tau` dual forms of degree `s` in two variables with independent
/// top forms.
#[derive(Clone, Debug)]
pub struct LevelInput {
    pub tau: usize,
    pub s: u32,
    pub forms: Vec<Polynomial>,
}

fn independent(forms: &[Polynomial]) -> bool {
    macdual::dpmodule::top_forms_independent(forms)
}

pub fn level_input() -> impl Strategy<Value = LevelInput> {
    (1usize..=2, 1u32..=3)
        .prop_flat_map(|(tau, s)| vec(form(2, s, 3, Side::Dual), tau).prop_map(move |forms| LevelInput { tau, s, forms }))
        .prop_filter("independent forms", |l| l.forms.iter().all(|f| !f.is_zero()) && independent(&l.forms))
}

pub fn invertible(m: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    vec(vec(-3i64..=3, m), m)
        .prop_map(|rows| rows.into_iter().map(|r| r.into_iter().map(scalar::int).collect::<Vec<_>>()).collect::<Vec<_>>())
        .prop_filter("invertible", |a: &Vec<Vec<Scalar>>| !num_traits::Zero::is_zero(&determinant(a)))
}

/// Cone family data with an optional perturbation
/// `(n, j, exponent seeds, coefficient)` added to `H_n^j`.
#[derive(Clone, Debug)]
pub struct ConeInput {
    pub level: LevelInput,
    pub t0: u32,
    pub perturb: Option<(u32, usize, Vec<u16>, i64)>,
}

pub fn cone_input() -> impl Strategy<Value = ConeInput> {
    (level_input(), 3u32..=4, prop::option::weighted(0.6, (1u32..=6, 0usize..2, vec(0u16..8, 3), 1i64..=3)))
        .prop_map(|(level, t0, perturb)| {
            let perturb = perturb.map(|(n, j, e, c)| (n.min(t0), j % level.tau, e, c));
            ConeInput { level, t0, perturb }
        })
}
