//! Exponent vectors with graded reverse lexicographic order.

use smallvec::SmallVec;
use std::cmp::Ordering;

pub type Exponents = SmallVec<[u16; 8]>;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Exponents);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(e: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(e))
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(other.0.iter().zip(self.0.iter()).map(|(b, a)| b - a).collect()))
    }

    pub fn with_exponent(&self, i: usize, e: u16) -> Monomial {
        let mut m = self.clone();
        m.0[i] = e;
        m
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for (a, b) in self.0.iter().zip(other.0.iter()).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of degree `d`, largest first.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u16; nvars];
    fn rec(i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left as u16;
            out.push(Monomial::from_exponents(cur));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u16;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

pub fn count_monomials(nvars: usize, d: u32) -> usize {
    if nvars == 0 {
        return usize::from(d == 0);
    }
    let (n, k) = (nvars as u64 + d as u64 - 1, d as u64);
    let mut r: u64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r as usize
}
