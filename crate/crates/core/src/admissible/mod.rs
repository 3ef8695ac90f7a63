//! Families `{H_n^j}` of dual polynomials indexed by `n ∈ N^d_+` and the
//! checks that make `R/ann(W)` level of dimension `d` and type `tau`.

pub mod file;

pub use file::{format_family, parse_family};

use crate::construct::LinearChange;
use crate::dpmodule::{contract, top_forms_independent, DualSubmodule};
use crate::error::{Error, Result};
use crate::exactalg::space::{ColumnOrder, MonomialBasis, PolySpan};
use crate::exactalg::{Monomial, Polynomial, Side, VarNames};
use crate::quotient::check_linear_forms;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(v: Vec<u32>) -> Self {
        MultiIndex(v)
    }

    pub fn ones(d: usize) -> Self {
        MultiIndex(vec![1; d])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, u32> {
        self.0.iter()
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.0.clone()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&x| x > 0)
    }

    /// `n - e_i` when it stays positive.
    pub fn minus_e(&self, i: usize) -> Option<MultiIndex> {
        if self.0[i] < 2 {
            return None;
        }
        let mut v = self.0.clone();
        v[i] -= 1;
        Some(MultiIndex(v))
    }

    pub fn plus_e(&self, i: usize) -> MultiIndex {
        let mut v = self.0.clone();
        v[i] += 1;
        MultiIndex(v)
    }

    pub fn with(&self, i: usize, value: u32) -> MultiIndex {
        let mut v = self.0.clone();
        v[i] = value;
        MultiIndex(v)
    }

    /// All positive `n` with `|n| <= t`, by total then lexicographically.
    pub fn all_up_to(d: usize, t: u32) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        if d == 0 {
            return out;
        }
        fn rec(d: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
            if cur.len() == d {
                out.push(MultiIndex(cur.clone()));
                return;
            }
            let rest = (d - cur.len() - 1) as u32;
            if left < rest + 1 {
                return;
            }
            for x in 1..=(left - rest) {
                cur.push(x);
                rec(d, left - x, cur, out);
                cur.pop();
            }
        }
        rec(d, t, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.total().cmp(&b.total()).then(a.cmp(b)));
        out
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.0.iter().map(u32::to_string).collect();
        if p.len() == 1 {
            write!(f, "{}", p[0])
        } else {
            write!(f, "({})", p.join(","))
        }
    }
}

/// A finite piece `{H_n^j : |n| <= t0}` of a candidate admissible family.
#[derive(Debug)]
pub struct AdmissibleFamily {
    nvars: usize,
    tau: usize,
    t0: u32,
    z: Vec<Polynomial>,
    graded: bool,
    names: VarNames,
    entries: BTreeMap<MultiIndex, Vec<Polynomial>>,
    change: LinearChange,
    modules: BTreeMap<MultiIndex, OnceLock<DualSubmodule>>,
    z_modules: BTreeMap<MultiIndex, OnceLock<DualSubmodule>>,
}

impl Clone for AdmissibleFamily {
    fn clone(&self) -> Self {
        AdmissibleFamily::new(self.names.clone(), self.z.clone(), self.tau, self.t0, Some(self.graded), self.entries.clone())
            .expect("already validated")
    }
}

impl AdmissibleFamily {
    /// Validates shape: `z` independent linear forms, every positive `n`
    /// with `|n| <= t0` present with exactly `tau` dual polynomials.
    pub fn new(
        names: VarNames,
        z: Vec<Polynomial>,
        tau: usize,
        t0: u32,
        graded: Option<bool>,
        entries: BTreeMap<MultiIndex, Vec<Polynomial>>,
    ) -> Result<Self> {
        let nvars = names.len();
        let d = z.len();
        if d == 0 || tau == 0 {
            return Err(Error::InvalidFamily("d and tau must be positive".into()));
        }
        check_linear_forms(&z, nvars)?;
        if t0 < d as u32 {
            return Err(Error::InvalidFamily(format!("t0={t0} is below d={d}")));
        }
        let idx = MultiIndex::all_up_to(d, t0);
        for n in &idx {
            let h = entries.get(n).ok_or_else(|| Error::InvalidFamily(format!("missing H[{n}]")))?;
            if h.len() != tau {
                return Err(Error::InvalidFamily(format!("H[{n}] has {} entries, expected {tau}", h.len())));
            }
            for p in h {
                if p.side() != Side::Dual || p.nvars() != nvars {
                    return Err(Error::InvalidFamily(format!("H[{n}] is not a dual polynomial in {nvars} variables")));
                }
            }
        }
        if let Some(n) = entries.keys().find(|n| n.len() != d || !n.is_positive() || n.total() > t0) {
            return Err(Error::InvalidFamily(format!("index {n} outside the range |n| <= {t0}")));
        }
        let all_homogeneous = entries.values().flatten().all(|p| p.is_zero() || p.is_homogeneous());
        let graded = match graded {
            Some(true) if !all_homogeneous => {
                return Err(Error::InvalidFamily("graded family with a non-homogeneous member".into()))
            }
            Some(g) => g,
            None => all_homogeneous,
        };
        let change = LinearChange::extend(&z, nvars)?;
        let modules = idx.iter().map(|n| (n.clone(), OnceLock::new())).collect();
        let z_modules = idx.iter().map(|n| (n.clone(), OnceLock::new())).collect();
        Ok(AdmissibleFamily { nvars, tau, t0, z, graded, names, entries, change, modules, z_modules })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn d(&self) -> usize {
        self.z.len()
    }

    pub fn tau(&self) -> usize {
        self.tau
    }

    pub fn t0(&self) -> u32 {
        self.t0
    }

    pub fn z(&self) -> &[Polynomial] {
        &self.z
    }

    pub fn graded(&self) -> bool {
        self.graded
    }

    pub fn names(&self) -> &VarNames {
        &self.names
    }

    pub fn change(&self) -> &LinearChange {
        &self.change
    }

    pub fn indices(&self) -> impl Iterator<Item = &MultiIndex> {
        self.entries.keys()
    }

    pub fn h(&self, n: &MultiIndex) -> &[Polynomial] {
        &self.entries[n]
    }

    pub fn entries(&self) -> &BTreeMap<MultiIndex, Vec<Polynomial>> {
        &self.entries
    }

    /// `s_n`, the degree of `H_n^1`.
    pub fn s(&self, n: &MultiIndex) -> Option<u32> {
        self.entries[n].iter().filter_map(Polynomial::degree).max()
    }

    /// `W_n = <H_n^1..H_n^tau>`.
    pub fn module(&self, n: &MultiIndex) -> &DualSubmodule {
        self.modules[n].get_or_init(|| DualSubmodule::closure(self.nvars, &self.entries[n]).expect("validated"))
    }

    /// `W_n` in coordinates where `z_i` is the i-th variable.
    pub fn module_z(&self, n: &MultiIndex) -> &DualSubmodule {
        if self.change.is_identity() {
            return self.module(n);
        }
        self.z_modules[n].get_or_init(|| {
            let h: Vec<Polynomial> = self.entries[n].iter().map(|p| self.change.apply_dual(p).expect("dual")).collect();
            DualSubmodule::closure(self.nvars, &h).expect("validated")
        })
    }

    /// The family `{H_n^j : j ∈ js}`.
    pub fn subfamily(&self, js: &[usize]) -> Result<AdmissibleFamily> {
        if js.is_empty() || js.iter().any(|&j| j >= self.tau) {
            return Err(Error::InvalidFamily("subfamily indices out of range".into()));
        }
        let entries = self.entries.iter().map(|(n, h)| (n.clone(), js.iter().map(|&j| h[j].clone()).collect())).collect();
        AdmissibleFamily::new(self.names.clone(), self.z.clone(), js.len(), self.t0, Some(self.graded), entries)
    }

    /// The same family cut down to `|n| <= t`.
    pub fn truncated(&self, t: u32) -> Result<AdmissibleFamily> {
        let entries = self.entries.iter().filter(|(n, _)| n.total() <= t).map(|(n, h)| (n.clone(), h.clone())).collect();
        AdmissibleFamily::new(self.names.clone(), self.z.clone(), self.tau, t, Some(self.graded), entries)
    }

    /// `s_{1_d}`.
    pub fn base_socle_degree(&self) -> Option<u32> {
        self.s(&MultiIndex::ones(self.d()))
    }
}

#[derive(Clone, Debug)]
pub struct Failure {
    pub n: MultiIndex,
    pub i: Option<usize>,
    pub j: Option<usize>,
    pub detail: String,
    pub witness: Option<Polynomial>,
}

#[derive(Clone, Debug, Default)]
pub struct CondOutcome {
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl CondOutcome {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first(&self) -> Option<&Failure> {
        self.failures.first()
    }
}

#[derive(Clone, Debug)]
pub struct AdmissibilityReport {
    pub cond1: CondOutcome,
    pub cond2: CondOutcome,
    pub cond3: CondOutcome,
    pub s: BTreeMap<MultiIndex, u32>,
}

impl AdmissibilityReport {
    pub fn admissible(&self) -> bool {
        self.cond1.pass() && self.cond2.pass() && self.cond3.pass()
    }
}

/// Equal degrees and independent top forms for every `n`.
pub fn check_cond1(f: &AdmissibleFamily) -> CondOutcome {
    let mut out = CondOutcome::default();
    for (n, h) in &f.entries {
        out.checked += 1;
        if let Some(j) = h.iter().position(Polynomial::is_zero) {
            out.failures.push(Failure { n: n.clone(), i: None, j: Some(j), detail: "zero generator".into(), witness: None });
            continue;
        }
        let s = h[0].degree();
        if let Some(j) = h.iter().position(|p| p.degree() != s) {
            out.failures.push(Failure { n: n.clone(), i: None, j: Some(j), detail: "unequal degrees".into(), witness: Some(h[j].clone()) });
            continue;
        }
        if !top_forms_independent(h) {
            out.failures.push(Failure { n: n.clone(), i: None, j: None, detail: "dependent top forms".into(), witness: None });
        }
    }
    out
}

/// `z_i o H_n^j = H_{n-e_i}^j`, or 0 at the boundary.
pub fn check_cond2(f: &AdmissibleFamily) -> CondOutcome {
    let mut out = CondOutcome::default();
    for (n, h) in &f.entries {
        for (i, z) in f.z.iter().enumerate() {
            let prev = n.minus_e(i);
            for (j, hj) in h.iter().enumerate() {
                out.checked += 1;
                let got = contract(z, hj).expect("validated");
                let want = match &prev {
                    Some(p) => f.entries[p][j].clone(),
                    None => Polynomial::zero(f.nvars, Side::Dual),
                };
                if got != want {
                    let diff = &got - &want;
                    out.failures.push(Failure {
                        n: n.clone(),
                        i: Some(i),
                        j: Some(j),
                        detail: "contraction mismatch".into(),
                        witness: Some(diff),
                    });
                }
            }
        }
    }
    out
}

/// `V_n^i` inside the basis of `W_n`: monomials with `k_i <= n_i - 2`.
fn in_v(m: &Monomial, i: usize, ni: u32) -> bool {
    (m.exponents()[i] as u32) + 2 <= ni
}

/// `W_n ∩ V_n^i`, in `z`-coordinates.
pub fn w_cap_v(f: &AdmissibleFamily, n: &MultiIndex, i: usize) -> PolySpan {
    let w = f.module_z(n);
    w.space().restrict_to(|m| in_v(m, i, n.get(i)))
}

/// `W_n ∩ V_n^i ⊆ W_{n-e_i}` for all `n` with `n_i >= 2`. Witnesses are
/// in `z`-coordinates, reduced modulo `W_{n-e_i}`.
pub fn check_cond3(f: &AdmissibleFamily) -> CondOutcome {
    let mut out = CondOutcome::default();
    for n in f.entries.keys() {
        for i in 0..f.d() {
            let Some(prev) = n.minus_e(i) else { continue };
            out.checked += 1;
            let cap = w_cap_v(f, n, i);
            let below = f.module_z(&prev);
            let big = cap.basis().clone();
            let below_big = match below.space().reindex(big.clone()) {
                Ok(s) => s,
                Err(_) => {
                    out.failures.push(Failure {
                        n: n.clone(),
                        i: Some(i),
                        j: None,
                        detail: "W_(n-e_i) has larger degree than W_n".into(),
                        witness: None,
                    });
                    continue;
                }
            };
            if let Some(p) = cap.polys().into_iter().find(|p| !below_big.contains(p)) {
                let w = below_big.reduce(&p).expect("same basis");
                out.failures.push(Failure {
                    n: n.clone(),
                    i: Some(i),
                    j: None,
                    detail: "W_n ∩ V_n^i not contained in W_(n-e_i)".into(),
                    witness: Some(w),
                });
            }
        }
    }
    out
}

pub fn check_family(f: &AdmissibleFamily) -> AdmissibilityReport {
    let s = f.entries.keys().filter_map(|n| f.s(n).map(|s| (n.clone(), s))).collect();
    AdmissibilityReport { cond1: check_cond1(f), cond2: check_cond2(f), cond3: check_cond3(f), s }
}

/// `ann(W_{n-e_i}) o W_n`, as a span in `D_{<= top}`.
fn ann_image(f: &AdmissibleFamily, n: &MultiIndex, prev: &MultiIndex, basis: &std::sync::Arc<MonomialBasis>) -> PolySpan {
    let m = f.nvars;
    let h = &f.entries[n];
    let top = h.iter().filter_map(Polynomial::degree).max().unwrap_or(0);
    let below = f.module(prev);
    let mut image = PolySpan::new(basis.clone(), Side::Dual);
    let mut push = |g: &Polynomial| {
        for hj in h {
            let c = contract(g, hj).expect("ring on dual");
            if !c.is_zero() {
                image.insert(&c).expect("contraction lowers degree");
            }
        }
    };
    let sp = below.top_degree().map_or(0, |t| t + 1);
    let kernel_deg = below.top_degree();
    if let Some(sb) = kernel_deg {
        let kb = MonomialBasis::new(m, sb, ColumnOrder::TopDegreeFirst);
        for g in below.space().project(kb).complement().polys() {
            push(&g);
        }
    }
    for d in sp..=top.max(sp) {
        for mono in crate::exactalg::monomial::monomials_of_degree(m, d) {
            push(&crate::dpmodule::monomial_operator(&mono));
        }
    }
    image
}

/// `ann(W_{n-e_i}) o W_n = W_{n-(n_i-1)e_i}` for all `n` with `n_i >= 2`.
pub fn check_weak(f: &AdmissibleFamily) -> CondOutcome {
    let mut out = CondOutcome::default();
    for n in f.entries.keys() {
        for i in 0..f.d() {
            let Some(prev) = n.minus_e(i) else { continue };
            out.checked += 1;
            let target = f.module(&n.with(i, 1));
            let top = f.module(n).space().basis().max_degree().max(target.space().basis().max_degree());
            let basis = MonomialBasis::new(f.nvars, top, ColumnOrder::TopDegreeFirst);
            let lhs = ann_image(f, n, &prev, &basis);
            let rhs = target.space().reindex(basis).expect("covers degrees");
            let missing = rhs.polys().into_iter().find(|p| !lhs.contains(p));
            let extra = lhs.polys().into_iter().find(|p| !rhs.contains(p));
            if let Some(w) = extra.or(missing) {
                out.failures.push(Failure {
                    n: n.clone(),
                    i: Some(i),
                    j: None,
                    detail: "ann(W_(n-e_i)) o W_n differs from W_(n-(n_i-1)e_i)".into(),
                    witness: Some(w),
                });
            }
        }
    }
    out
}

/// The `G_d` equality `ann<H_{n-e_i}> o H_n = <H_{n-(n_i-1)e_i}>`; needs `tau = 1`.
pub fn check_gd(f: &AdmissibleFamily) -> Result<CondOutcome> {
    if f.tau != 1 {
        return Err(Error::InvalidFamily(format!("G_d check needs tau=1, got {}", f.tau)));
    }
    let mut out = check_cond2(f);
    let w = check_weak(f);
    out.checked += w.checked;
    out.failures.extend(w.failures);
    Ok(out)
}

impl PolySpan {
    /// Intersection with the coordinate subspace spanned by the monomials
    /// satisfying `inside`.
    pub fn restrict_to(&self, inside: impl Fn(&Monomial) -> bool) -> PolySpan {
        let b = self.basis().clone();
        let n = b.len();
        let outside: Vec<usize> = (0..n).filter(|&c| !inside(b.monomial(c))).collect();
        let ins: Vec<usize> = (0..n).filter(|&c| inside(b.monomial(c))).collect();
        let mut perm = vec![0usize; n];
        for (k, &c) in outside.iter().chain(ins.iter()).enumerate() {
            perm[c] = k;
        }
        let mut inv = vec![0usize; n];
        for (c, &k) in perm.iter().enumerate() {
            inv[k] = c;
        }
        let mut tmp = crate::exactalg::SpanBasis::new(n);
        for r in self.span().rows() {
            let mut v: Vec<_> = r.iter().map(|(c, x)| (perm[*c], x.clone())).collect();
            v.sort_by_key(|e| e.0);
            tmp.insert(v);
        }
        let mut out = PolySpan::new(b, self.side());
        let cut = outside.len();
        for r in tmp.rows().filter(|r| r[0].0 >= cut) {
            let mut v: Vec<_> = r.iter().map(|(k, x)| (inv[*k], x.clone())).collect();
            v.sort_by_key(|e| e.0);
            out.insert_sparse(v);
        }
        out
    }
}
