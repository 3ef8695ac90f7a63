//! Column matroids of matrices and Stanley–Reisner ideals.

use crate::duality::Ideal;
use crate::error::{Error, Result};
use crate::exactalg::linalg::determinant;
use crate::exactalg::monomial::Monomial;
use crate::exactalg::{scalar, Polynomial, Scalar, Side};
use itertools::Itertools;
use num_traits::Zero;

/// A simplicial complex on vertices `1..=n` given by its facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplexFacets {
    n: usize,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplexFacets {
    pub fn new(n: usize, facets: Vec<Vec<usize>>) -> Result<Self> {
        let mut fs: Vec<Vec<usize>> = facets
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        fs.sort();
        fs.dedup();
        for f in &fs {
            if f.iter().any(|&v| v == 0 || v > n) {
                return Err(Error::Invalid(format!("facet {f:?} has a vertex outside 1..={n}")));
            }
        }
        for (a, b) in fs.iter().tuple_combinations() {
            if is_subset(a, b) || is_subset(b, a) {
                return Err(Error::Invalid(format!("facets {a:?} and {b:?} are comparable")));
            }
        }
        Ok(SimplicialComplexFacets { n, facets: fs })
    }

    pub fn vertices(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn is_face(&self, s: &[usize]) -> bool {
        s.is_empty() || self.facets.iter().any(|f| is_subset(s, f))
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

/// Facets `{i_1..i_m}` (1-based) with nonzero maximal minor.
pub fn matroid_from_matrix(x: &[Vec<Scalar>]) -> Result<SimplicialComplexFacets> {
    let m = x.len();
    let n = x.first().map_or(0, Vec::len);
    if x.iter().any(|r| r.len() != n) {
        return Err(Error::Invalid("ragged matrix".into()));
    }
    if m > n {
        return Err(Error::Invalid(format!("need rows <= columns, got {m}x{n}")));
    }
    let mut facets = Vec::new();
    for cols in (0..n).combinations(m) {
        let minor: Vec<Vec<Scalar>> = x.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
        if !determinant(&minor).is_zero() {
            facets.push(cols.iter().map(|c| c + 1).collect());
        }
    }
    SimplicialComplexFacets::new(n, facets)
}

/// Squarefree monomial ideal of minimal non-faces, sorted.
pub fn stanley_reisner(c: &SimplicialComplexFacets) -> Ideal {
    let n = c.n;
    let top = c.facets.iter().map(Vec::len).max().unwrap_or(0);
    let mut gens: Vec<Vec<usize>> = Vec::new();
    for k in 1..=(top + 1).min(n) {
        for s in (1..=n).combinations(k) {
            if c.is_face(&s) {
                continue;
            }
            if s.iter().combinations(k - 1).all(|t| c.is_face(&t.into_iter().copied().collect::<Vec<_>>())) {
                gens.push(s);
            }
        }
    }
    let polys = gens
        .into_iter()
        .map(|s| {
            let mut e = vec![0u16; n];
            for v in s {
                e[v - 1] = 1;
            }
            Polynomial::term(Monomial::from_exponents(&e), scalar::one(), Side::Ring)
        })
        .collect();
    Ideal::new(n, polys).expect("ring side")
}
