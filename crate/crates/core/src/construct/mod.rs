//! Constructions of admissible families and level algebras: cones, the
//! effective graded construction, a local heuristic, lifting a family from
//! an ideal, and inputs from matroids and numerical semigroups.

mod change;
mod matroid;
mod semigroup;

pub use change::{substitute, LinearChange};
pub use matroid::{matroid_from_matrix, stanley_reisner, SimplicialComplexFacets};
pub use semigroup::{factorizations, semigroup_presentation, NumericalSemigroup, Presentation};

use crate::admissible::{check_family, AdmissibleFamily, MultiIndex};
use crate::dpmodule::top_forms_independent;
use crate::duality::{annihilator, ideal_equal, truncated_span, Certainty, Ideal};
use crate::error::{Error, Result};
use crate::exactalg::linalg::{SpanBasis, SparseVec};
use crate::exactalg::monomial::{monomials_of_degree, Monomial};
use crate::exactalg::space::ColumnOrder;
use crate::exactalg::{Polynomial, Scalar, Side, VarNames};
use crate::quotient::{artinian_dual, default_cap, is_level, LevelOptions, LevelReport};
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap};

/// `H_n^j = X_1^(n_1-1)...X_d^(n_d-1) H^j` for `|n| <= t0`, with `z = x_1..x_d`.
pub fn cone_family(names: &VarNames, h: &[Polynomial], d: usize, t0: u32) -> Result<AdmissibleFamily> {
    let m = names.len();
    if d == 0 || d > m {
        return Err(Error::Invalid(format!("need 0 < d <= {m}")));
    }
    if h.is_empty() {
        return Err(Error::Invalid("empty list of dual generators".into()));
    }
    for p in h {
        if p.side() != Side::Dual || p.nvars() != m {
            return Err(Error::SideMismatch);
        }
        if p.terms().any(|(mono, _)| mono.exponents()[..d].iter().any(|&e| e > 0)) {
            return Err(Error::Invalid(format!("{} involves one of the first {d} variables", names.format(p))));
        }
    }
    let b = h[0].degree();
    if h.iter().any(|p| p.degree() != b) {
        return Err(Error::Invalid("generators have different degrees".into()));
    }
    if !top_forms_independent(h) {
        return Err(Error::Invalid("top-degree forms are linearly dependent".into()));
    }
    let z: Vec<Polynomial> = (0..d).map(|i| Polynomial::var(m, i, Side::Ring)).collect();
    let mut entries = BTreeMap::new();
    for n in MultiIndex::all_up_to(d, t0) {
        let mut e = vec![0u16; m];
        for i in 0..d {
            e[i] = (n.get(i) - 1) as u16;
        }
        let shift = Monomial::from_exponents(&e);
        entries.insert(n, h.iter().map(|p| p.mul_monomial(&shift)).collect());
    }
    let graded = h.iter().all(Polynomial::is_homogeneous);
    AdmissibleFamily::new(names.clone(), z, h.len(), t0, Some(graded), entries)
}

#[derive(Clone, Debug)]
pub struct EffectiveConstruction {
    pub ideal: Ideal,
    pub n_star: MultiIndex,
    pub s: u32,
    pub level: LevelReport,
    /// Whether the output is level of dimension `d`, type `tau` and socle
    /// degree `s`; otherwise the family does not extend.
    pub extendable: bool,
}

/// `I = (ann<H_{(s+2)_d}^j>)_{<= s+1}` for a graded family with
/// `t0 >= (s+2)d`, followed by a levelness check of `R/I`.
pub fn effective_construct(f: &AdmissibleFamily) -> Result<EffectiveConstruction> {
    if !f.graded() {
        return Err(Error::Hypothesis("effective construction needs a graded family".into()));
    }
    let d = f.d();
    let s = f.base_socle_degree().ok_or_else(|| Error::Hypothesis("H_(1..1) is zero".into()))?;
    if f.t0() < (s + 2) * d as u32 {
        return Err(Error::Hypothesis(format!("t0={} is below (s+2)d={}", f.t0(), (s + 2) * d as u32)));
    }
    let report = check_family(f);
    if !report.admissible() {
        return Err(Error::Hypothesis("family is not admissible".into()));
    }
    let n_star = MultiIndex::new(vec![s + 2; d]);
    let w = f.module(&n_star);
    let ann = annihilator(w, Some(s + 1), &[])?;
    let ideal = ann.ideal;
    let opts = LevelOptions { reduction: Some(f.z().to_vec()), cap: Some(s + 2), ..Default::default() };
    let level = match is_level(&ideal, d, &opts) {
        Ok(r) => r,
        Err(Error::NotArtinian { .. }) => {
            return Err(Error::Hypothesis("z is not a reduction of the constructed ideal; family not extendable".into()))
        }
        Err(e) => return Err(e),
    };
    let first = &level.trials[0].report;
    let extendable = level.level && first.socle_type == f.tau() && first.socle_degree == s;
    Ok(EffectiveConstruction { ideal, n_star, s, level, extendable })
}

#[derive(Clone, Debug)]
pub struct LocalConstruction {
    /// Minimal generators of `ann(W_{n*})`.
    pub full: Ideal,
    /// The candidate ideal.
    pub ideal: Ideal,
    pub removed: Vec<Polynomial>,
    /// Certainty of `ideal + (z^{n*}) = ann(W_{n*})`.
    pub certainty: Certainty,
    pub heuristic: bool,
}

/// Heuristic candidate for `ann(W)` from `ann(W_{n*})`: optionally drops the
/// pure powers `z_i^{n_i}` and generators above `bound`.
pub fn local_construct_heuristic(
    f: &AdmissibleFamily,
    n_star: &MultiIndex,
    split_z: bool,
    bound: Option<u32>,
) -> Result<LocalConstruction> {
    if n_star.len() != f.d() || !f.entries().contains_key(n_star) {
        return Err(Error::Invalid(format!("index {n_star} not in the family")));
    }
    let powers: Vec<Polynomial> = f.z().iter().zip(n_star.iter()).map(|(z, &e)| z.pow(e)).collect();
    let w = f.module(n_star);
    let full = annihilator(w, None, &powers)?.ideal;
    let mut kept = Vec::new();
    let mut removed = Vec::new();
    for g in full.generators() {
        let is_power = split_z && powers.iter().any(|p| proportional(p, g));
        let too_big = bound.is_some_and(|b| g.degree().unwrap_or(0) > b);
        if is_power || too_big {
            removed.push(g.clone());
        } else {
            kept.push(g.clone());
        }
    }
    let ideal = Ideal::new(f.nvars(), kept)?;
    let s = w.top_degree().unwrap_or(0);
    let (eq, certainty) = ideal_equal(&ideal.with_generators(&powers)?, &full, Some(2 * (s + 2)))?;
    if !eq {
        return Err(Error::Hypothesis("candidate plus z-powers differs from ann(W_n*)".into()));
    }
    Ok(LocalConstruction { full, ideal, removed, certainty, heuristic: true })
}

fn proportional(a: &Polynomial, b: &Polynomial) -> bool {
    match (a.leading(), b.leading()) {
        (Some((_, ca)), Some((_, cb))) => a.scale(cb) == b.scale(ca),
        _ => false,
    }
}

/// Builds `{H_n^j : |n| <= t0}` from an ideal by solving
/// `z_k o H_n^j = H_{n-e_k}^j` inside `(I + z^n)^⊥`. The base `H_{1_d}` is
/// given or taken as minimal generators of `(I + (z))^⊥`.
pub fn lift_family(
    names: &VarNames,
    ideal: &Ideal,
    z: &[Polynomial],
    t0: u32,
    base: Option<Vec<Polynomial>>,
) -> Result<AdmissibleFamily> {
    let m = names.len();
    let d = z.len();
    crate::quotient::check_linear_forms(z, m)?;
    let graded = ideal.is_graded();
    let base = match base {
        Some(b) => b,
        None => {
            let j = ideal.with_generators(z)?;
            let (_, w) = artinian_dual(&j, default_cap(&j))?;
            w.min_generators().generators
        }
    };
    let tau = base.len();
    let s = base.iter().filter_map(Polynomial::degree).max().unwrap_or(0);
    let mut entries: BTreeMap<MultiIndex, Vec<Polynomial>> = BTreeMap::new();
    for n in MultiIndex::all_up_to(d, t0) {
        if n == MultiIndex::ones(d) {
            entries.insert(n, base.clone());
            continue;
        }
        let sn = s + n.total() - d as u32;
        let powers: Vec<Polynomial> = z.iter().zip(n.iter()).map(|(zi, &e)| zi.pow(e)).collect();
        let jn = ideal.with_generators(&powers)?;
        let solver = LiftSolver::new(m, sn, graded, &jn);
        let mut h = Vec::with_capacity(tau);
        for j in 0..tau {
            let targets: Vec<Option<&Polynomial>> =
                (0..d).map(|k| n.minus_e(k).map(|p| &entries[&p][j])).collect();
            let sol = solver
                .solve(z, &targets)
                .ok_or_else(|| Error::Hypothesis(format!("no lift for H[{n}][{}]", j + 1)))?;
            h.push(sol);
        }
        entries.insert(n, h);
    }
    AdmissibleFamily::new(names.clone(), z.to_vec(), tau, t0, Some(graded), entries)
}

struct LiftSolver {
    m: usize,
    sn: u32,
    graded: bool,
    cols: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    base: SpanBasis,
}

impl LiftSolver {
    fn new(m: usize, sn: u32, graded: bool, jn: &Ideal) -> Self {
        let cols: Vec<Monomial> = if graded {
            monomials_of_degree(m, sn)
        } else {
            (0..=sn).rev().flat_map(|k| monomials_of_degree(m, k)).collect()
        };
        let index: HashMap<Monomial, usize> = cols.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        let ncols = cols.len() + 1;
        let mut base = SpanBasis::new(ncols);
        if graded {
            for g in jn.generators() {
                let dg = g.degree().unwrap();
                if dg > sn {
                    continue;
                }
                for mono in monomials_of_degree(m, sn - dg) {
                    base.insert(to_row(&index, &g.mul_monomial(&mono)));
                }
            }
        } else {
            let span = truncated_span(jn, sn, ColumnOrder::TopDegreeFirst);
            for p in span.polys() {
                base.insert(to_row(&index, &p));
            }
        }
        LiftSolver { m, sn, graded, cols, index, base }
    }

    fn solve(&self, z: &[Polynomial], targets: &[Option<&Polynomial>]) -> Option<Polynomial> {
        let ncols = self.cols.len();
        let mut sys = self.base.clone();
        let lower: Vec<Monomial> = if self.graded {
            if self.sn == 0 { Vec::new() } else { monomials_of_degree(self.m, self.sn - 1) }
        } else {
            (0..self.sn).rev().flat_map(|k| monomials_of_degree(self.m, k)).collect()
        };
        for (zk, target) in z.iter().zip(targets) {
            let coeffs = zk.linear_coeffs();
            for c in &lower {
                let mut row: SparseVec = Vec::new();
                for (l, a) in coeffs.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    let col = self.index[&c.mul(&Monomial::var(self.m, l))];
                    row.push((col, a.clone()));
                }
                let rhs = target.map(|t| t.coeff(c)).unwrap_or_else(Scalar::zero);
                if !rhs.is_zero() {
                    row.push((ncols, -rhs));
                }
                row.sort_by_key(|e| e.0);
                if !row.is_empty() {
                    sys.insert(row);
                }
            }
        }
        if sys.is_pivot(ncols) {
            return None;
        }
        let mut out = Polynomial::zero(self.m, Side::Dual);
        for r in sys.rows() {
            let p = r[0].0;
            if let Some((_, e)) = r.last().filter(|e| e.0 == ncols) {
                out.add_term(self.cols[p].clone(), -e.clone());
            }
        }
        Some(out)
    }
}

fn to_row(index: &HashMap<Monomial, usize>, p: &Polynomial) -> SparseVec {
    let mut v: SparseVec = p.terms().filter_map(|(m, c)| index.get(m).map(|&i| (i, c.clone()))).collect();
    v.sort_by_key(|e| e.0);
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::admissible::check_family;

    #[test]
    fn cone_over_cubes() {
        let v = VarNames::new(&["x", "y", "z"]).unwrap();
        let h = vec![v.parse_dual("Y^3").unwrap(), v.parse_dual("Z^3").unwrap()];
        let f = cone_family(&v, &h, 1, 5).unwrap();
        assert_eq!(f.h(&MultiIndex::new(vec![3]))[0], v.parse_dual("X^2Y^3").unwrap());
        assert!(check_family(&f).admissible());
        let e = effective_construct(&f).unwrap();
        assert_eq!(e.ideal.format(&v), "(y^4,yz,z^4)");
        assert!(e.extendable);
    }

    #[test]
    fn cone_input_errors() {
        let v = VarNames::new(&["x", "y", "z"]).unwrap();
        assert!(cone_family(&v, &[v.parse_dual("XY").unwrap()], 1, 3).is_err());
        assert!(cone_family(&v, &[v.parse_dual("Y^2").unwrap(), v.parse_dual("Z").unwrap()], 1, 3).is_err());
        assert!(cone_family(&v, &[v.parse_dual("Y^2").unwrap(), v.parse_dual("Y^2+Z").unwrap()], 1, 3).is_err());
    }

    #[test]
    fn lift_recovers_cone() {
        let v = VarNames::new(&["x", "y", "z"]).unwrap();
        let i = Ideal::parse(&v, "yz, y^4, z^4").unwrap();
        let f = lift_family(&v, &i, &[v.parse_ring("x").unwrap()], 4, None).unwrap();
        assert_eq!(f.tau(), 2);
        assert!(check_family(&f).admissible());
        let h3 = f.h(&MultiIndex::new(vec![3]));
        assert!(h3.contains(&v.parse_dual("X^2Y^3").unwrap()));
    }

    #[test]
    fn effective_rejects_small_t0() {
        let v = VarNames::new(&["x", "y", "z"]).unwrap();
        let f = cone_family(&v, &[v.parse_dual("Y^3").unwrap()], 1, 4).unwrap();
        assert!(matches!(effective_construct(&f), Err(Error::Hypothesis(_))));
    }
}
