//! Artinian quotients: Hilbert function, socle degree, type and levelness,
//! plus levelness of positive-dimensional quotients through Artinian
//! reductions.

use crate::admissible::MultiIndex;
use crate::dpmodule::{top_forms_independent, DualSubmodule};
use crate::duality::{truncated_span, Ideal};
use crate::error::{Error, Result};
use crate::exactalg::linalg::rank;
use crate::exactalg::scalar;
use crate::exactalg::space::{ColumnOrder, MonomialBasis};
use crate::exactalg::{Polynomial, Scalar, Side};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ArtinianReport {
    pub hilbert: Vec<usize>,
    pub socle_degree: u32,
    pub socle_type: usize,
    pub level: bool,
    /// Top degrees of minimal generators of the inverse system.
    pub dual_degrees: Vec<u32>,
    pub length: usize,
}

pub fn default_cap(j: &Ideal) -> u32 {
    (2 * (j.nvars() as u32 + j.max_degree())).max(8)
}

/// Report for `R/J`, which must be Artinian with `M^(cap+1) ⊆ J`.
pub fn artinian_report(j: &Ideal, cap: u32) -> Result<ArtinianReport> {
    let (_, w) = artinian_parts(j, cap)?;
    Ok(report_from_dual(&w.0, w.1))
}

/// Socle degree and inverse system of `R/J`.
pub fn artinian_dual(j: &Ideal, cap: u32) -> Result<(u32, DualSubmodule)> {
    let (s, (w, _)) = artinian_parts(j, cap)?;
    Ok((s, w))
}

type DualWithHf = (DualSubmodule, Vec<usize>);

fn artinian_parts(j: &Ideal, cap: u32) -> Result<(u32, DualWithHf)> {
    let m = j.nvars();
    let mut t = cap.min(4);
    loop {
        let span = truncated_span(j, t, ColumnOrder::LowDegreeFirst);
        let b = span.basis().clone();
        let found = (0..=t).find(|&n| span.pivot_count_in_degree(n) == b.degree_range(n).len());
        if let Some(n) = found {
            if n == 0 {
                return Err(Error::Hypothesis("quotient is the zero ring".into()));
            }
            let s = n - 1;
            let hilbert: Vec<usize> =
                (0..=s).map(|d| b.degree_range(d).len() - span.pivot_count_in_degree(d)).collect();
            let low = span.project(MonomialBasis::new(m, s, ColumnOrder::LowDegreeFirst));
            let w = DualSubmodule::from_closed_space(low.complement())?;
            return Ok((s, (w, hilbert)));
        }
        if t >= cap {
            return Err(Error::NotArtinian { cap });
        }
        t = (t + (t / 2).max(2)).min(cap);
    }
}

fn report_from_dual(w: &DualSubmodule, hilbert: Vec<usize>) -> ArtinianReport {
    let s = hilbert.len() as u32 - 1;
    let g = w.min_generators();
    let level = g.degrees.iter().all(|&d| d == s) && top_forms_independent(&g.generators);
    ArtinianReport {
        length: hilbert.iter().sum(),
        hilbert,
        socle_degree: s,
        socle_type: g.count(),
        level,
        dual_degrees: g.degrees,
    }
}

/// Checks that `forms` are linear and linearly independent.
pub fn check_linear_forms(forms: &[Polynomial], nvars: usize) -> Result<()> {
    for z in forms {
        if z.nvars() != nvars {
            return Err(Error::VarCountMismatch { left: z.nvars(), right: nvars });
        }
        if z.side() != Side::Ring || !z.is_linear_form() {
            return Err(Error::Invalid(format!("{z} is not a linear form")));
        }
    }
    let rows: Vec<Vec<Scalar>> = forms.iter().map(Polynomial::linear_coeffs).collect();
    if rank(&rows) < forms.len() {
        return Err(Error::DependentForms);
    }
    Ok(())
}

/// `I + (z1^n1, ..., zd^nd)`.
pub fn quotient_by_powers(ideal: &Ideal, z: &[Polynomial], n: &MultiIndex) -> Result<Ideal> {
    check_linear_forms(z, ideal.nvars())?;
    if z.len() != n.len() {
        return Err(Error::Invalid("exponent vector length differs from number of forms".into()));
    }
    let extra: Vec<Polynomial> = z.iter().zip(n.iter()).map(|(f, &e)| f.pow(e)).collect();
    ideal.with_generators(&extra)
}

#[derive(Clone, Debug)]
pub struct LevelOptions {
    pub seed: u64,
    pub trials: usize,
    pub coeff_bound: i64,
    pub cap: Option<u32>,
    pub reduction: Option<Vec<Polynomial>>,
    pub retries: usize,
}

impl Default for LevelOptions {
    fn default() -> Self {
        LevelOptions { seed: 1, trials: 3, coeff_bound: 100, cap: None, reduction: None, retries: 8 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Trial {
    pub seed: Option<u64>,
    #[serde(skip)]
    pub forms: Vec<Polynomial>,
    pub report: ArtinianReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelReport {
    pub dim: usize,
    pub level: bool,
    pub multiplicity: usize,
    pub socle_degree: u32,
    /// Trials agreeing with the first one.
    pub stability: usize,
    pub trials: Vec<Trial>,
}

/// Levelness of `R/I` of Krull dimension `d`, decided on `R/(I + (l1..ld))`
/// for a regular sequence of linear forms (given, or random).
pub fn is_level(ideal: &Ideal, d: usize, opts: &LevelOptions) -> Result<LevelReport> {
    let m = ideal.nvars();
    if d > m {
        return Err(Error::Invalid(format!("dimension {d} exceeds {m} variables")));
    }
    let cap = opts.cap.unwrap_or_else(|| default_cap(ideal));
    let mut trials = Vec::new();
    if let Some(forms) = &opts.reduction {
        if forms.len() != d {
            return Err(Error::Invalid(format!("expected {d} reduction forms, got {}", forms.len())));
        }
        check_linear_forms(forms, m)?;
        let report = artinian_report(&ideal.with_generators(forms)?, cap)?;
        trials.push(Trial { seed: None, forms: forms.clone(), report });
    } else {
        for t in 0..opts.trials.max(1) {
            let seed = opts.seed.wrapping_add(t as u64);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut done = false;
            for _ in 0..opts.retries.max(1) {
                let forms: Vec<Polynomial> = (0..d)
                    .map(|_| {
                        let c: Vec<Scalar> =
                            (0..m).map(|_| scalar::int(rng.gen_range(-opts.coeff_bound..=opts.coeff_bound))).collect();
                        Polynomial::linear(&c, Side::Ring)
                    })
                    .collect();
                if check_linear_forms(&forms, m).is_err() {
                    continue;
                }
                match artinian_report(&ideal.with_generators(&forms)?, cap) {
                    Ok(report) => {
                        trials.push(Trial { seed: Some(seed), forms, report });
                        done = true;
                        break;
                    }
                    Err(Error::NotArtinian { .. }) => continue,
                    Err(e) => return Err(e),
                }
            }
            if !done {
                return Err(Error::NoReduction { attempts: opts.retries.max(1) });
            }
        }
    }
    let first = trials[0].report.clone();
    let stability = trials.iter().filter(|t| t.report == first).count();
    Ok(LevelReport {
        dim: d,
        level: first.level,
        multiplicity: first.length,
        socle_degree: first.socle_degree,
        stability,
        trials,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PowerCheck {
    pub n: Vec<u32>,
    pub socle_degree: u32,
    pub socle_type: usize,
    pub level: bool,
}

/// Reports for `R/(I + z^n)` over all `n >= 1` with `|n| <= max_total`.
pub fn power_checks(ideal: &Ideal, z: &[Polynomial], max_total: u32, cap: Option<u32>) -> Result<Vec<PowerCheck>> {
    let mut out = Vec::new();
    for n in MultiIndex::all_up_to(z.len(), max_total) {
        let q = quotient_by_powers(ideal, z, &n)?;
        let c = cap.unwrap_or_else(|| default_cap(&q));
        let r = artinian_report(&q, c)?;
        out.push(PowerCheck { n: n.to_vec(), socle_degree: r.socle_degree, socle_type: r.socle_type, level: r.level });
    }
    Ok(out)
}

/// Whether `socdeg R/(I + z^n) = s + |n| - d` for all `|n| <= max_total`.
pub fn socdeg_power_check(ideal: &Ideal, z: &[Polynomial], s: u32, max_total: u32) -> Result<bool> {
    let d = z.len() as u32;
    Ok(power_checks(ideal, z, max_total, None)?
        .iter()
        .all(|c| c.socle_degree + d == s + c.n.iter().sum::<u32>()))
}

/// Whether every `R/(I + z^n)` with `|n| <= max_total` is level of type `tau`.
pub fn level_power_check(ideal: &Ideal, z: &[Polynomial], tau: usize, max_total: u32) -> Result<bool> {
    Ok(power_checks(ideal, z, max_total, None)?.iter().all(|c| c.level && c.socle_type == tau))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::VarNames;

    #[test]
    fn complete_intersection_report() {
        let v = VarNames::new(&["x", "y"]).unwrap();
        let j = Ideal::parse(&v, "x^2, y^3").unwrap();
        let r = artinian_report(&j, 10).unwrap();
        assert_eq!(r.hilbert, vec![1, 2, 2, 1]);
        assert_eq!(r.socle_degree, 3);
        assert_eq!(r.socle_type, 1);
        assert!(r.level);
        assert_eq!(r.length, 6);
    }

    #[test]
    fn non_level_and_errors() {
        let v = VarNames::new(&["x", "y"]).unwrap();
        let j = Ideal::parse(&v, "x^2, xy, y^3").unwrap();
        let r = artinian_report(&j, 10).unwrap();
        assert_eq!(r.hilbert, vec![1, 2, 1]);
        assert!(!r.level);
        assert_eq!(r.dual_degrees, vec![2, 1]);
        assert!(matches!(artinian_report(&Ideal::parse(&v, "x").unwrap(), 6), Err(Error::NotArtinian { .. })));
        assert!(artinian_report(&Ideal::parse(&v, "1+x").unwrap(), 6).is_err());
    }

    #[test]
    fn local_report() {
        // x^2 - y^3 with xy: local algebra, socle degree 3, Gorenstein
        let v = VarNames::new(&["x", "y"]).unwrap();
        let j = Ideal::parse(&v, "xy, x^2 - y^3").unwrap();
        let r = artinian_report(&j, 10).unwrap();
        assert_eq!(r.hilbert, vec![1, 2, 1, 1]);
        assert_eq!(r.socle_type, 1);
        assert!(r.level);
    }

    #[test]
    fn reductions_and_dependent_forms() {
        let v = VarNames::new(&["x", "y", "z"]).unwrap();
        let i = Ideal::parse(&v, "xy, xz, yz").unwrap();
        let opts = LevelOptions { seed: 7, trials: 3, ..Default::default() };
        let r = is_level(&i, 1, &opts).unwrap();
        assert_eq!(r.trials.len(), 3);
        assert_eq!(r.stability, 3);
        assert!(r.level);
        assert_eq!(r.multiplicity, 3);
        let bad = LevelOptions { reduction: Some(vec![v.parse_ring("x").unwrap(), v.parse_ring("2x").unwrap()]), ..Default::default() };
        assert!(matches!(is_level(&i, 2, &bad), Err(Error::DependentForms)));
    }
}
