//! Ideals of `R = K[x1..xm]`, inverse systems and annihilators.
//!
//! Local (non-graded) ideals are handled through their images in
//! `R / M^(N+1)`; results obtained that way carry a [`Certainty`] tag.

use crate::dpmodule::DualSubmodule;
use crate::error::{Error, Result};
use crate::exactalg::monomial::monomials_of_degree;
use crate::exactalg::space::{ColumnOrder, MonomialBasis, PolySpan};
use crate::exactalg::{Monomial, Polynomial, Side, VarNames};
use std::cmp::Ordering;
use std::fmt;

pub use crate::dpmodule::pairing;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certainty {
    Exact,
    /// Valid modulo `M^k`.
    ModPower(u32),
}

impl Certainty {
    pub fn and(self, other: Certainty) -> Certainty {
        match (self, other) {
            (Certainty::Exact, c) | (c, Certainty::Exact) => c,
            (Certainty::ModPower(a), Certainty::ModPower(b)) => Certainty::ModPower(a.min(b)),
        }
    }

    pub fn is_exact(self) -> bool {
        self == Certainty::Exact
    }
}

impl fmt::Display for Certainty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certainty::Exact => f.write_str("exact"),
            Certainty::ModPower(k) => write!(f, "mod-M^{k}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Ideal {
    nvars: usize,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(nvars: usize, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if g.side() != Side::Ring {
                return Err(Error::SideMismatch);
            }
            if g.nvars() != nvars {
                return Err(Error::VarCountMismatch { left: g.nvars(), right: nvars });
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { nvars, generators })
    }

    pub fn parse(names: &VarNames, text: &str) -> Result<Self> {
        let t = text.trim();
        let t = t.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(t);
        if t.trim().is_empty() || t.trim() == "empty" || t.trim() == "0" {
            return Ideal::new(names.len(), Vec::new());
        }
        Ideal::new(names.len(), names.parse_list(t, Side::Ring)?)
    }

    pub fn unit(nvars: usize) -> Self {
        Ideal { nvars, generators: vec![Polynomial::constant(nvars, Side::Ring, crate::exactalg::scalar::one())] }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_graded(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    pub fn max_degree(&self) -> u32 {
        self.generators.iter().filter_map(Polynomial::degree).max().unwrap_or(0)
    }

    pub fn min_order(&self) -> Option<u32> {
        self.generators.iter().filter_map(Polynomial::order).min()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        let mut g = self.generators.clone();
        g.extend(other.generators.iter().cloned());
        Ideal::new(self.nvars, g)
    }

    pub fn with_generators(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut g = self.generators.clone();
        g.extend(extra.iter().cloned());
        Ideal::new(self.nvars, g)
    }

    /// Generators sorted by leading monomial, lex descending.
    pub fn sorted_generators(&self) -> Vec<Polynomial> {
        let mut g = self.generators.clone();
        g.sort_by_key(|a| std::cmp::Reverse(lex_lead(a)));
        g
    }

    pub fn format(&self, names: &VarNames) -> String {
        if self.is_zero() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = self.sorted_generators().iter().map(|g| names.format(g)).collect();
        format!("({})", parts.join(","))
    }
}

fn lex_key(m: &Monomial) -> Vec<u16> {
    m.exponents().to_vec()
}

fn lex_lead(p: &Polynomial) -> Vec<u16> {
    p.terms().map(|(m, _)| lex_key(m)).max().unwrap_or_default()
}

/// Compares monomials lexicographically (first variable most significant).
pub fn lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.exponents().cmp(b.exponents())
}

/// Span of `I + M^(n+1)` inside `R_{<=n}`, i.e. all `trunc_n(m g)`.
pub fn truncated_span(ideal: &Ideal, n: u32, order: ColumnOrder) -> PolySpan {
    let basis = MonomialBasis::new(ideal.nvars, n, order);
    let mut s = PolySpan::new(basis.clone(), Side::Ring);
    let mut gens: Vec<&Polynomial> = ideal.generators.iter().collect();
    gens.sort_by_key(|g| (g.order(), g.num_terms()));
    for g in gens {
        let ord = g.order().unwrap();
        if ord > n {
            continue;
        }
        let tg = g.truncate(n);
        for k in 0..=(n - ord) {
            for m in monomials_of_degree(ideal.nvars, k) {
                let v = basis.to_sparse_truncated(&tg.mul_monomial(&m));
                if !v.is_empty() {
                    s.insert_sparse(v);
                }
            }
        }
    }
    s
}

/// Exact test of `M^k ⊆ I` (via Nakayama: it suffices modulo `M^(k+1)`).
pub fn contains_power(ideal: &Ideal, k: u32) -> bool {
    let s = truncated_span(ideal, k, ColumnOrder::LowDegreeFirst);
    s.pivot_count_in_degree(k) == s.basis().degree_range(k).len()
}

pub fn default_truncation(ideal: &Ideal) -> u32 {
    2 * (ideal.max_degree() + 2)
}

/// Whether `f ∈ I`. Exact for graded `I` or when `M^(n+1) ⊆ I`; otherwise
/// the answer holds modulo `M^(n+1)`.
pub fn ideal_contains(ideal: &Ideal, f: &Polynomial, trunc: Option<u32>) -> Result<(bool, Certainty)> {
    if f.side() != Side::Ring {
        return Err(Error::SideMismatch);
    }
    if f.nvars() != ideal.nvars {
        return Err(Error::VarCountMismatch { left: f.nvars(), right: ideal.nvars });
    }
    if f.is_zero() {
        return Ok((true, Certainty::Exact));
    }
    if ideal.is_graded() {
        let n = f.degree().unwrap();
        let s = truncated_span(ideal, n, ColumnOrder::LowDegreeFirst);
        return Ok((s.contains(f), Certainty::Exact));
    }
    let n = trunc.unwrap_or_else(|| default_truncation(ideal).max(f.degree().unwrap()));
    let s = truncated_span(ideal, n + 1, ColumnOrder::LowDegreeFirst);
    let saturated = s.pivot_count_in_degree(n + 1) == s.basis().degree_range(n + 1).len();
    let low = s.project(MonomialBasis::new(ideal.nvars, n, ColumnOrder::LowDegreeFirst));
    let inside = low.contains(&f.truncate(n));
    let cert = if saturated { Certainty::Exact } else { Certainty::ModPower(n + 1) };
    Ok((inside, cert))
}

pub fn ideal_subset(a: &Ideal, b: &Ideal, trunc: Option<u32>) -> Result<(bool, Certainty)> {
    let mut cert = Certainty::Exact;
    for g in &a.generators {
        let (ok, c) = ideal_contains(b, g, trunc)?;
        cert = cert.and(c);
        if !ok {
            return Ok((false, cert));
        }
    }
    Ok((true, cert))
}

pub fn ideal_equal(a: &Ideal, b: &Ideal, trunc: Option<u32>) -> Result<(bool, Certainty)> {
    let (x, c1) = ideal_subset(a, b, trunc)?;
    if !x {
        return Ok((false, c1));
    }
    let (y, c2) = ideal_subset(b, a, trunc)?;
    Ok((y, c1.and(c2)))
}

/// `I^⊥ ∩ D_{<=N}`.
#[derive(Clone, Debug)]
pub struct TruncatedPerp {
    pub bound: u32,
    pub space: PolySpan,
    /// Exact when `M^(N+1) ⊆ I`, so that nothing beyond degree `N` exists.
    pub certainty: Certainty,
}

impl TruncatedPerp {
    pub fn by_degree(&self) -> Vec<(u32, Vec<Polynomial>)> {
        (0..=self.bound)
            .map(|d| (d, self.space.rows_with_pivot_degree(d)))
            .filter(|(_, v)| !v.is_empty())
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn module(&self) -> Result<DualSubmodule> {
        DualSubmodule::from_closed_space(self.space.clone())
    }
}

pub fn inverse_system(ideal: &Ideal, n: u32) -> TruncatedPerp {
    let s = truncated_span(ideal, n, ColumnOrder::TopDegreeFirst);
    let certainty = if contains_power(ideal, n + 1) { Certainty::Exact } else { Certainty::ModPower(n + 1) };
    TruncatedPerp { bound: n, space: s.complement(), certainty }
}

#[derive(Clone, Debug)]
pub struct Annihilator {
    pub ideal: Ideal,
    /// Generators are complete up to this degree.
    pub complete_to: u32,
    pub unit: bool,
}

/// Minimal generators of `ann(W)`. With `bound = Some(b)` and graded `W`
/// only generators of degree `<= b` are produced. `preferred` elements are
/// tried first when they annihilate `W`.
pub fn annihilator(w: &DualSubmodule, bound: Option<u32>, preferred: &[Polynomial]) -> Result<Annihilator> {
    let m = w.nvars();
    let Some(s) = w.top_degree() else {
        return Ok(Annihilator { ideal: Ideal::unit(m), complete_to: u32::MAX, unit: true });
    };
    let t = match (w.is_graded(), bound) {
        (true, Some(b)) => b.min(s + 1),
        _ => s + 1,
    };
    let low = t.min(s);
    let low_basis = MonomialBasis::new(m, low, ColumnOrder::TopDegreeFirst);
    let kernel = w.space().project(low_basis).complement();
    let basis = MonomialBasis::new(m, t, ColumnOrder::TopDegreeFirst);
    let mut jspace = kernel.reindex(basis.clone())?.with_side(Side::Ring);
    if t == s + 1 {
        for c in basis.degree_range(t) {
            jspace.insert_sparse(vec![(c, crate::exactalg::scalar::one())]);
        }
    }
    let gens = minimal_generators(&jspace, t, preferred, |f| annihilates(f, w))?;
    let complete_to = match bound {
        Some(b) if b < s + 1 => b,
        _ => u32::MAX,
    };
    let unit = gens.iter().any(|g| g.degree() == Some(0));
    Ok(Annihilator { ideal: Ideal::new(m, gens)?, complete_to, unit })
}

fn annihilates(f: &Polynomial, w: &DualSubmodule) -> bool {
    w.generators().iter().all(|g| crate::dpmodule::contract(f, g).map(|c| c.is_zero()).unwrap_or(false))
}

/// Greedy minimal generators of the ideal `J` whose image in `R_{<=t}`
/// (modulo `M^(t+1)`) is `jspace`, assumed closed under multiplication
/// followed by truncation.
fn minimal_generators(
    jspace: &PolySpan,
    t: u32,
    preferred: &[Polynomial],
    in_ideal: impl Fn(&Polynomial) -> bool,
) -> Result<Vec<Polynomial>> {
    let basis = jspace.basis().clone();
    let m = basis.nvars();
    let mut acc = PolySpan::new(basis.clone(), Side::Ring);
    for p in jspace.polys() {
        for i in 0..m {
            let v = basis.to_sparse_truncated(&p.mul_monomial(&Monomial::var(m, i)));
            if !v.is_empty() {
                acc.insert_sparse(v);
            }
        }
    }
    let mut chosen = Vec::new();
    for p in preferred {
        if p.degree().is_some_and(|d| d <= t) && jspace.contains(p) && in_ideal(p) && acc.insert(p)? {
            chosen.push(p.clone());
        }
    }
    for d in 0..=t {
        for p in jspace.rows_with_pivot_degree(d) {
            if acc.insert(&p)? {
                chosen.push(p);
            }
        }
    }
    Ok(chosen)
}

impl PolySpan {
    pub(crate) fn with_side(self, side: Side) -> PolySpan {
        let basis = self.basis().clone();
        PolySpan::from_span(basis, side, self.span().clone())
    }
}
