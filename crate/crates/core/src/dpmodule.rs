//! The dual module `D = K[X1..Xm]` under contraction, and its finitely
//! generated submodules.

use crate::error::{Error, Result};
use crate::exactalg::space::{ColumnOrder, MonomialBasis, PolySpan};
use crate::exactalg::{Monomial, Polynomial, Scalar, Side};
use num_traits::Zero;
use std::collections::VecDeque;

/// `x^a o X^b = X^(b-a)` when `a <= b`, else 0; extended bilinearly.
pub fn contract(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    check_sides(f, g)?;
    let mut out = Polynomial::zero(g.nvars(), Side::Dual);
    for (a, c) in f.terms() {
        for (b, e) in g.terms() {
            if let Some(q) = a.quotient_of(b) {
                out.add_term(q, c * e);
            }
        }
    }
    Ok(out)
}

/// `<f, g> = (f o g)(0)`: the dot product of coefficient vectors.
pub fn pairing(f: &Polynomial, g: &Polynomial) -> Result<Scalar> {
    check_sides(f, g)?;
    let mut s = Scalar::zero();
    for (m, c) in f.terms() {
        let e = g.coeff(m);
        if !e.is_zero() {
            s += c * e;
        }
    }
    Ok(s)
}

pub(crate) fn contract_var(i: usize, g: &Polynomial) -> Polynomial {
    let n = g.nvars();
    Polynomial::from_terms(
        n,
        Side::Dual,
        g.terms().filter(|(m, _)| m.exponents()[i] > 0).map(|(m, c)| {
            let e = m.exponents()[i];
            (m.with_exponent(i, e - 1), c.clone())
        }),
    )
}

fn check_sides(f: &Polynomial, g: &Polynomial) -> Result<()> {
    if f.side() != Side::Ring || g.side() != Side::Dual {
        return Err(Error::SideMismatch);
    }
    if f.nvars() != g.nvars() {
        return Err(Error::VarCountMismatch { left: f.nvars(), right: g.nvars() });
    }
    Ok(())
}

/// Minimal generating data of a submodule.
#[derive(Clone, Debug)]
pub struct MinGens {
    pub generators: Vec<Polynomial>,
    pub degrees: Vec<u32>,
}

impl MinGens {
    pub fn count(&self) -> usize {
        self.generators.len()
    }
}

/// A finitely generated submodule `W` of `D`, stored as a K-space inside
/// `D_{<= top}`.
#[derive(Clone, Debug)]
pub struct DualSubmodule {
    nvars: usize,
    generators: Vec<Polynomial>,
    space: PolySpan,
}

impl DualSubmodule {
    /// The submodule generated by `gens` (all contractions, spanned).
    pub fn closure(nvars: usize, gens: &[Polynomial]) -> Result<Self> {
        for g in gens {
            if g.side() != Side::Dual {
                return Err(Error::SideMismatch);
            }
            if g.nvars() != nvars {
                return Err(Error::VarCountMismatch { left: g.nvars(), right: nvars });
            }
        }
        let top = gens.iter().filter_map(Polynomial::degree).max().unwrap_or(0);
        let basis = MonomialBasis::new(nvars, top, ColumnOrder::TopDegreeFirst);
        let mut space = PolySpan::new(basis, Side::Dual);
        let mut queue: VecDeque<Polynomial> = gens.iter().cloned().collect();
        while let Some(v) = queue.pop_front() {
            if v.is_zero() || !space.insert(&v)? {
                continue;
            }
            for i in 0..nvars {
                let c = contract_var(i, &v);
                if !c.is_zero() {
                    queue.push_back(c);
                }
            }
        }
        Ok(DualSubmodule { nvars, generators: gens.to_vec(), space })
    }

    /// Wraps a space already known to be closed under contraction.
    pub(crate) fn from_closed_space(space: PolySpan) -> Result<Self> {
        let nvars = space.basis().nvars();
        let space = if space.basis().order() == ColumnOrder::TopDegreeFirst {
            space
        } else {
            let top = space.polys().iter().filter_map(Polynomial::degree).max().unwrap_or(0);
            space.reindex(MonomialBasis::new(nvars, top, ColumnOrder::TopDegreeFirst))?
        };
        let generators = space.polys();
        Ok(DualSubmodule { nvars, generators, space })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn space(&self) -> &PolySpan {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    /// Largest degree of an element; `None` for the zero module.
    pub fn top_degree(&self) -> Option<u32> {
        let b = self.space.basis();
        (0..=b.max_degree()).rev().find(|&d| self.space.pivot_count_in_degree(d) > 0)
    }

    /// Basis elements whose top degree is `k`. Over all `k` these form a
    /// basis of `W`; for graded `W` they are homogeneous.
    pub fn basis_by_degree(&self, k: u32) -> Vec<Polynomial> {
        if k > self.space.basis().max_degree() {
            return Vec::new();
        }
        self.space.rows_with_pivot_degree(k)
    }

    /// Number of elements of top degree `k` in the echelon basis.
    pub fn dim_by_degree(&self, k: u32) -> usize {
        if k > self.space.basis().max_degree() {
            return 0;
        }
        self.space.pivot_count_in_degree(k)
    }

    pub fn basis(&self) -> Vec<Polynomial> {
        self.space.polys()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        f.side() == Side::Dual && f.nvars() == self.nvars && self.space.contains(f)
    }

    pub fn is_graded(&self) -> bool {
        self.basis().iter().all(Polynomial::is_homogeneous)
    }

    pub fn is_submodule_of(&self, other: &DualSubmodule) -> bool {
        self.basis().iter().all(|p| other.contains(p))
    }

    pub fn same_as(&self, other: &DualSubmodule) -> bool {
        self.dim() == other.dim() && self.is_submodule_of(other)
    }

    /// `M o W`.
    pub fn contraction_image(&self) -> PolySpan {
        let mut s = PolySpan::new(self.space.basis().clone(), Side::Dual);
        for p in self.basis() {
            for i in 0..self.nvars {
                let c = contract_var(i, &p);
                if !c.is_zero() {
                    s.insert(&c).expect("contraction lowers degree");
                }
            }
        }
        s
    }

    /// Minimal generators chosen greedily from the top degree down; their
    /// number is `dim W - dim(M o W)`.
    pub fn min_generators(&self) -> MinGens {
        let mut acc = self.contraction_image();
        let expected = self.dim() - acc.dim();
        let mut generators = Vec::new();
        let mut degrees = Vec::new();
        let top = self.space.basis().max_degree();
        for k in (0..=top).rev() {
            for p in self.basis_by_degree(k) {
                if acc.insert(&p).expect("in range") {
                    generators.push(p);
                    degrees.push(k);
                }
            }
        }
        debug_assert_eq!(generators.len(), expected);
        MinGens { generators, degrees }
    }

    pub fn intersect(&self, other: &DualSubmodule) -> Result<DualSubmodule> {
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch { left: self.nvars, right: other.nvars });
        }
        let top = self.space.basis().max_degree().max(other.space.basis().max_degree());
        let b = MonomialBasis::new(self.nvars, top, ColumnOrder::TopDegreeFirst);
        let a = self.space.reindex(b.clone())?;
        let c = other.space.reindex(b)?;
        DualSubmodule::from_closed_space(a.intersect(&c))
    }

    pub fn sum(&self, other: &DualSubmodule) -> Result<DualSubmodule> {
        let mut g = self.generators.clone();
        g.extend(other.generators.iter().cloned());
        DualSubmodule::closure(self.nvars, &g)
    }
}

/// Whether the top-degree forms of `gens` are linearly independent.
pub fn top_forms_independent(gens: &[Polynomial]) -> bool {
    let Some(first) = gens.first() else {
        return true;
    };
    let top = gens.iter().filter_map(Polynomial::degree).max().unwrap_or(0);
    let b = MonomialBasis::new(first.nvars(), top, ColumnOrder::TopDegreeFirst);
    let mut s = PolySpan::new(b, first.side());
    gens.iter().all(|g| !g.is_zero() && s.insert(&g.top_form()).unwrap_or(false))
}

/// `x^a` as a ring element acting by contraction.
pub fn monomial_operator(m: &Monomial) -> Polynomial {
    Polynomial::term(m.clone(), Scalar::from_integer(1.into()), Side::Ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::VarNames;

    fn v3() -> VarNames {
        VarNames::new(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn contraction_rules() {
        let v = v3();
        let f = v.parse_ring("x").unwrap();
        let g = v.parse_dual("X^3Y + Y^2").unwrap();
        assert_eq!(contract(&f, &g).unwrap(), v.parse_dual("X^2Y").unwrap());
        let f = v.parse_ring("x^2y^2").unwrap();
        assert!(contract(&f, &g).unwrap().is_zero());
        assert!(contract(&g, &f).is_err());
        let one = v.parse_ring("1").unwrap();
        assert_eq!(contract(&one, &g).unwrap(), g);
    }

    #[test]
    fn closure_of_cubes() {
        let v = v3();
        let w = DualSubmodule::closure(3, &[v.parse_dual("Y^3").unwrap(), v.parse_dual("Z^3").unwrap()]).unwrap();
        // 1, Y, Y^2, Y^3, Z, Z^2, Z^3
        assert_eq!(w.dim(), 7);
        assert_eq!(w.top_degree(), Some(3));
        assert_eq!(w.dim_by_degree(3), 2);
        assert!(w.is_graded());
        let g = w.min_generators();
        assert_eq!(g.count(), 2);
        assert_eq!(g.degrees, vec![3, 3]);
    }

    #[test]
    fn min_generators_mixed_degrees() {
        let v = v3();
        let w = DualSubmodule::closure(3, &[v.parse_dual("X^2").unwrap(), v.parse_dual("Y").unwrap(), v.parse_dual("X").unwrap()]).unwrap();
        let g = w.min_generators();
        assert_eq!(g.degrees, vec![2, 1]);
    }

    #[test]
    fn non_homogeneous_basis_by_degree() {
        let v = v3();
        let w = DualSubmodule::closure(3, &[v.parse_dual("X^2+Y").unwrap()]).unwrap();
        assert_eq!(w.dim(), 3);
        assert!(!w.is_graded());
        assert_eq!(w.basis_by_degree(2), vec![v.parse_dual("X^2+Y").unwrap()]);
        assert_eq!(w.basis_by_degree(1).len(), 1);
    }

    #[test]
    fn intersection_and_top_forms() {
        let v = v3();
        let a = DualSubmodule::closure(3, &[v.parse_dual("X^2Y").unwrap()]).unwrap();
        let b = DualSubmodule::closure(3, &[v.parse_dual("X^2Z").unwrap()]).unwrap();
        let c = a.intersect(&b).unwrap();
        // X^2, X, 1
        assert_eq!(c.dim(), 3);
        assert!(top_forms_independent(&[v.parse_dual("X^2+Y").unwrap(), v.parse_dual("Y^2").unwrap()]));
        assert!(!top_forms_independent(&[v.parse_dual("X^2+Y").unwrap(), v.parse_dual("X^2").unwrap()]));
        assert!(!top_forms_independent(&[Polynomial::zero(3, Side::Dual)]));
    }

    #[test]
    fn pairing_matches_contraction_at_zero() {
        let v = v3();
        let f = v.parse_ring("2xy - z^2 + 3").unwrap();
        let g = v.parse_dual("XY + 5Z^2 - 7 + X^3").unwrap();
        let p = pairing(&f, &g).unwrap();
        let c = contract(&f, &g).unwrap();
        assert_eq!(p, c.coeff(&Monomial::one(3)));
        assert_eq!(p, crate::exactalg::scalar::int(2 - 5 - 21));
    }
}
