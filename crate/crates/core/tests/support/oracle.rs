//! Oracles written without the library's linear algebra.

use macdual::{Polynomial, Scalar};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};

fn exponent_vectors(m: usize, below: u32) -> Vec<Vec<u16>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        let mut next = Vec::new();
        for e in &out {
            let used: u32 = e.iter().map(|&x| x as u32).sum();
            for k in 0..(below - used) {
                let mut f = e.clone();
                f.push(k as u16);
                next.push(f);
            }
        }
        out = next;
    }
    out
}

/// Row echelon form by plain Gaussian elimination; returns (pivot, row).
fn echelon(rows: Vec<Vec<Scalar>>) -> Vec<(usize, Vec<Scalar>)> {
    let mut basis: Vec<(usize, Vec<Scalar>)> = Vec::new();
    for mut r in rows {
        for (p, b) in &basis {
            if !r[*p].is_zero() {
                let c = r[*p].clone();
                for (x, y) in r.iter_mut().zip(b) {
                    *x -= &c * y;
                }
            }
        }
        if let Some(p) = r.iter().position(|x| !x.is_zero()) {
            let inv = Scalar::one() / &r[p];
            for x in r.iter_mut() {
                *x *= &inv;
            }
            for (_, b) in basis.iter_mut() {
                if !b[p].is_zero() {
                    let c = b[p].clone();
                    for (x, y) in b.iter_mut().zip(&r) {
                        *x -= &c * y;
                    }
                }
            }
            basis.push((p, r));
        }
    }
    basis
}

fn rank(rows: Vec<Vec<Scalar>>) -> usize {
    echelon(rows).len()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleData {
    pub socle_degree: u32,
    pub socle_type: usize,
    pub level: bool,
    pub hilbert: Vec<usize>,
}

/// Socle data of `R/I` computed in `R/M^k`; requires `M^k ⊆ I`.
pub fn socle_oracle(gens: &[Polynomial], m: usize, k: u32) -> SocleData {
    let mons = exponent_vectors(m, k);
    let index: BTreeMap<Vec<u16>, usize> = mons.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let n = mons.len();
    let deg = |e: &[u16]| e.iter().map(|&x| x as u32).sum::<u32>();
    let shift = |v: &BTreeMap<Vec<u16>, Scalar>, u: &[u16]| {
        let mut row = vec![Scalar::zero(); n];
        for (e, c) in v {
            let f: Vec<u16> = e.iter().zip(u).map(|(a, b)| a + b).collect();
            if let Some(&i) = index.get(&f) {
                row[i] += c;
            }
        }
        row
    };
    let gmaps: Vec<BTreeMap<Vec<u16>, Scalar>> = gens
        .iter()
        .map(|g| g.terms().map(|(mono, c)| (mono.exponents().to_vec(), c.clone())).collect())
        .collect();
    let mut irows = Vec::new();
    for g in &gmaps {
        for u in &mons {
            irows.push(shift(g, u));
        }
    }
    let ibasis = echelon(irows.clone());
    let irank = ibasis.len();
    let nf = |mut v: Vec<Scalar>| {
        for (p, b) in &ibasis {
            if !v[*p].is_zero() {
                let c = v[*p].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= &c * y;
                }
            }
        }
        v
    };
    // dim M^j A for j = 0..k
    let mut powers = Vec::new();
    for j in 0..=k {
        let mut rows = irows.clone();
        for (i, e) in mons.iter().enumerate() {
            if deg(e) >= j {
                let mut r = vec![Scalar::zero(); n];
                r[i] = Scalar::one();
                rows.push(r);
            }
        }
        powers.push(rank(rows) - irank);
    }
    let socle_degree = (0..=k).filter(|&j| powers[j as usize] > 0).max().expect("A is nonzero");
    let hilbert: Vec<usize> = (0..=socle_degree as usize).map(|j| powers[j] - powers[j + 1]).collect();
    // socle: kernel of f -> (x_i f mod I)_i
    let mut map_rows = Vec::new();
    for u in &mons {
        let mut row = Vec::new();
        for i in 0..m {
            let mut e = u.clone();
            e[i] += 1;
            let mut v = vec![Scalar::zero(); n];
            if let Some(&c) = index.get(&e) {
                v[c] = Scalar::one();
            }
            row.extend(nf(v));
        }
        map_rows.push(row);
    }
    let kernel = n - rank(map_rows);
    let socle_type = kernel - irank;
    let level = socle_type == powers[socle_degree as usize];
    SocleData { socle_degree, socle_type, level, hilbert }
}

/// All factorizations of `s` over `w`.
pub fn factorizations(w: &[u64], s: u64) -> Vec<Vec<u32>> {
    fn go(w: &[u64], s: u64, i: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == w.len() {
            if s == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut k = 0;
        while k as u64 * w[i] <= s {
            cur.push(k);
            go(w, s - k as u64 * w[i], i + 1, cur, out);
            cur.pop();
            k += 1;
        }
    }
    let mut out = Vec::new();
    go(w, s, 0, &mut Vec::new(), &mut out);
    out
}

/// Number of classes of factorizations of `s` under "share a variable".
pub fn r_classes(w: &[u64], s: u64) -> usize {
    let f = factorizations(w, s);
    let mut comp: Vec<usize> = (0..f.len()).collect();
    fn find(c: &mut Vec<usize>, x: usize) -> usize {
        if c[x] != x {
            let r = find(c, c[x]);
            c[x] = r;
        }
        c[x]
    }
    for a in 0..f.len() {
        for b in a + 1..f.len() {
            if f[a].iter().zip(&f[b]).any(|(x, y)| *x > 0 && *y > 0) {
                let (ra, rb) = (find(&mut comp, a), find(&mut comp, b));
                comp[ra] = rb;
            }
        }
    }
    (0..f.len()).map(|x| find(&mut comp, x)).collect::<BTreeSet<_>>().len()
}

/// Minimal number of relations: `sum_s (classes(s) - 1)` over `s <= bound`.
pub fn betti_count(w: &[u64], bound: u64) -> usize {
    (1..=bound).map(|s| r_classes(w, s).saturating_sub(1)).sum()
}

/// Whether the moves `u -> u - a + b` (and back) connect all factorizations
/// of every `s <= bound`.
pub fn relations_connect(w: &[u64], relations: &[(Vec<u32>, Vec<u32>)], bound: u64) -> bool {
    let moves: Vec<(Vec<u32>, Vec<u32>)> =
        relations.iter().flat_map(|(a, b)| [(a.clone(), b.clone()), (b.clone(), a.clone())]).collect();
    for s in 1..=bound {
        let all: BTreeSet<Vec<u32>> = factorizations(w, s).into_iter().collect();
        let Some(start) = all.iter().next().cloned() else { continue };
        let mut seen = BTreeSet::from([start.clone()]);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for (a, b) in &moves {
                if u.iter().zip(a).all(|(x, y)| x >= y) {
                    let v: Vec<u32> = u.iter().zip(a).zip(b).map(|((x, y), z)| x - y + z).collect();
                    if seen.insert(v.clone()) {
                        stack.push(v);
                    }
                }
            }
        }
        if seen != all {
            return false;
        }
    }
    true
}

/// Degrees of a socle basis of `R/I` for homogeneous generators, with
/// multiplicity; requires `M^k ⊆ I`.
pub fn graded_socle_degrees(gens: &[Polynomial], m: usize, k: u32) -> Vec<u32> {
    let mut out = Vec::new();
    for j in 0..k {
        let mons: Vec<Vec<u16>> =
            exponent_vectors(m, k).into_iter().filter(|e| e.iter().map(|&x| x as u32).sum::<u32>() == j).collect();
        let up: Vec<Vec<u16>> = exponent_vectors(m, k + 1)
            .into_iter()
            .filter(|e| e.iter().map(|&x| x as u32).sum::<u32>() == j + 1)
            .collect();
        let idx = |set: &Vec<Vec<u16>>| -> BTreeMap<Vec<u16>, usize> {
            set.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect()
        };
        let (ij, iu) = (idx(&mons), idx(&up));
        let rows_in = |target: &BTreeMap<Vec<u16>, usize>, deg: u32| {
            let mut rows = Vec::new();
            for g in gens {
                for (gm, _) in g.terms().take(1) {
                    let gd = gm.degree();
                    if gd > deg {
                        continue;
                    }
                    for u in exponent_vectors(m, deg - gd + 1).into_iter().filter(|e| {
                        e.iter().map(|&x| x as u32).sum::<u32>() == deg - gd
                    }) {
                        let mut r = vec![Scalar::zero(); target.len()];
                        for (mono, c) in g.terms() {
                            let e: Vec<u16> = mono.exponents().iter().zip(&u).map(|(a, b)| a + b).collect();
                            r[target[&e]] += c;
                        }
                        rows.push(r);
                    }
                }
            }
            rows
        };
        let ij_rows = rows_in(&ij, j);
        let iu_basis = echelon(rows_in(&iu, j + 1));
        let ij_rank = rank(ij_rows);
        // f in R_j with x_i f in I_(j+1) for all i
        let mut map_rows = Vec::new();
        for u in &mons {
            let mut row = Vec::new();
            for i in 0..m {
                let mut e = u.clone();
                e[i] += 1;
                let mut v = vec![Scalar::zero(); up.len()];
                v[iu[&e]] = Scalar::one();
                for (p, b) in &iu_basis {
                    if !v[*p].is_zero() {
                        let c = v[*p].clone();
                        for (x, y) in v.iter_mut().zip(b) {
                            *x -= &c * y;
                        }
                    }
                }
                row.extend(v);
            }
            map_rows.push(row);
        }
        let socle = mons.len() - rank(map_rows) - ij_rank;
        out.extend(std::iter::repeat_n(j, socle));
    }
    out
}
