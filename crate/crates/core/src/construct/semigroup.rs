//! Numerical semigroups: Apéry sets, Frobenius number and minimal
//! presentations from the factorization graph.

use crate::duality::Ideal;
use crate::error::{Error, Result};
use crate::exactalg::monomial::Monomial;
use crate::exactalg::{scalar, Polynomial, Side};
use num_integer::Integer;
use std::collections::{BTreeSet, BinaryHeap};
use std::cmp::Reverse;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    gens: Vec<u64>,
}

impl NumericalSemigroup {
    /// Sorts, drops redundant generators; fails unless the gcd is 1.
    pub fn new(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() || gens.contains(&0) {
            return Err(Error::Invalid("generators must be positive".into()));
        }
        if gens.iter().fold(0u64, |g, &x| g.gcd(&x)) != 1 {
            return Err(Error::NonCoprime);
        }
        let mut g: Vec<u64> = gens.to_vec();
        g.sort_unstable();
        g.dedup();
        let mut minimal: Vec<u64> = Vec::new();
        for &x in &g {
            if !representable(&minimal, x) {
                minimal.push(x);
            }
        }
        Ok(NumericalSemigroup { gens: minimal })
    }

    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    pub fn multiplicity(&self) -> u64 {
        self.gens[0]
    }

    pub fn contains(&self, x: u64) -> bool {
        let a = self.gens[0];
        x >= self.apery_unchecked(a)[(x % a) as usize]
    }

    /// Least element of `S` in each residue class mod `a`, by residue.
    fn apery_unchecked(&self, a: u64) -> Vec<u64> {
        let mut dist = vec![u64::MAX; a as usize];
        dist[0] = 0;
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((0u64, 0usize)));
        while let Some(Reverse((dv, r))) = heap.pop() {
            if dv > dist[r] {
                continue;
            }
            for &g in &self.gens {
                let nr = ((r as u64 + g) % a) as usize;
                let nd = dv + g;
                if nd < dist[nr] {
                    dist[nr] = nd;
                    heap.push(Reverse((nd, nr)));
                }
            }
        }
        dist
    }

    /// `Ap(S, a)` for `a ∈ S`, sorted.
    pub fn apery(&self, a: u64) -> Result<Vec<u64>> {
        if a == 0 || !self.contains(a) {
            return Err(Error::Invalid(format!("{a} is not a nonzero element of the semigroup")));
        }
        let mut v = self.apery_unchecked(a);
        v.sort_unstable();
        Ok(v)
    }

    /// Largest integer not in `S`; `-1` when `S = N`.
    pub fn frobenius(&self) -> i64 {
        let a = self.gens[0];
        *self.apery_unchecked(a).iter().max().unwrap() as i64 - a as i64
    }

    pub fn presentation(&self) -> Presentation {
        semigroup_presentation(&self.gens).expect("valid semigroup")
    }
}

fn representable(gens: &[u64], x: u64) -> bool {
    let mut reach = vec![false; x as usize + 1];
    reach[0] = true;
    for v in 1..=x as usize {
        reach[v] = gens.iter().any(|&g| g as usize <= v && reach[v - g as usize]);
    }
    reach[x as usize]
}

/// All `u` with `sum u_i w_i = s`.
pub fn factorizations(w: &[u64], s: u64) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; w.len()];
    fn rec(w: &[u64], i: usize, left: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == w.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut k = 0u32;
        loop {
            let used = k as u64 * w[i];
            if used > left {
                break;
            }
            cur[i] = k;
            rec(w, i + 1, left - used, cur, out);
            k += 1;
        }
        cur[i] = 0;
    }
    rec(w, 0, s, &mut cur, &mut out);
    out
}

/// Binomial relations `x^u = x^v` among weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub weights: Vec<u64>,
    pub relations: Vec<(Vec<u32>, Vec<u32>)>,
}

impl Presentation {
    pub fn weighted_degree(&self, u: &[u32]) -> u64 {
        u.iter().zip(&self.weights).map(|(&a, &w)| a as u64 * w).sum()
    }

    pub fn binomials(&self) -> Vec<Polynomial> {
        self.relations
            .iter()
            .map(|(u, v)| {
                let a = Monomial::from_exponents(&u.iter().map(|&x| x as u16).collect::<Vec<_>>());
                let b = Monomial::from_exponents(&v.iter().map(|&x| x as u16).collect::<Vec<_>>());
                let mut p = Polynomial::term(a, scalar::one(), Side::Ring);
                p.add_term(b, -scalar::one());
                p
            })
            .collect()
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::new(self.weights.len(), self.binomials()).expect("ring side")
    }

    /// Largest weighted degree of a relation.
    pub fn max_degree(&self) -> u64 {
        self.relations.iter().map(|(u, _)| self.weighted_degree(u)).max().unwrap_or(0)
    }
}

/// Minimal presentation of the monoid generated by `weights` (positive; not
/// necessarily minimal or coprime), from the connected components of the
/// factorization graph at each element.
pub fn semigroup_presentation(weights: &[u64]) -> Result<Presentation> {
    if weights.is_empty() || weights.contains(&0) {
        return Err(Error::Invalid("weights must be positive".into()));
    }
    let g = weights.iter().fold(0u64, |g, &x| g.gcd(&x));
    let w: Vec<u64> = weights.iter().map(|x| x / g).collect();
    let s = NumericalSemigroup::new(&w)?;
    let f = s.frobenius().max(0) as u64;
    let lo = *w.iter().min().unwrap();
    let hi = *w.iter().max().unwrap();
    let bound = f + lo + 2 * hi;
    let mut relations = Vec::new();
    for e in 1..=bound {
        let facts = factorizations(&w, e);
        if facts.len() < 2 {
            continue;
        }
        let comps = r_classes(&facts);
        if comps.len() < 2 {
            continue;
        }
        let reps: Vec<&Vec<u32>> = comps.iter().map(|c| c.iter().map(|&k| &facts[k]).max().unwrap()).collect();
        for r in &reps[1..] {
            relations.push((reps[0].clone(), (*r).clone()));
        }
    }
    Ok(Presentation { weights: weights.to_vec(), relations })
}

/// Components of factorizations linked when their supports meet.
fn r_classes(facts: &[Vec<u32>]) -> Vec<Vec<usize>> {
    let n = facts.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if facts[i].iter().zip(&facts[j]).any(|(&a, &b)| a > 0 && b > 0) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let roots: BTreeSet<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
    let mut comps: Vec<Vec<usize>> = roots.iter().map(|&r| (0..n).filter(|&i| find(&mut parent, i) == r).collect()).collect();
    comps.sort_by_key(|c| std::cmp::Reverse(facts[*c.iter().max_by_key(|&&k| &facts[k]).unwrap()].clone()));
    comps
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_three() {
        let s = NumericalSemigroup::new(&[2, 3]).unwrap();
        assert_eq!(s.apery(2).unwrap(), vec![0, 3]);
        assert_eq!(s.frobenius(), 1);
        let p = s.presentation();
        assert_eq!(p.relations.len(), 1);
        assert_eq!(p.max_degree(), 6);
    }

    #[test]
    fn minimality_and_errors() {
        let s = NumericalSemigroup::new(&[6, 9, 10, 12, 15]).unwrap();
        assert_eq!(s.generators(), &[6, 9, 10]);
        assert!(matches!(NumericalSemigroup::new(&[4, 6]), Err(Error::NonCoprime)));
        assert_eq!(NumericalSemigroup::new(&[1, 5]).unwrap().frobenius(), -1);
        assert!(s.apery(7).is_err());
    }

    #[test]
    fn factorization_listing() {
        let f = factorizations(&[6, 8, 10, 13], 24);
        assert!(f.contains(&vec![4, 0, 0, 0]));
        assert!(f.contains(&vec![0, 3, 0, 0]));
        assert!(f.contains(&vec![1, 1, 1, 0]));
    }
}
