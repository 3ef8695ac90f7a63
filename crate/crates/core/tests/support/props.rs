//! Property bodies. Each runs `cases` deterministic random cases and returns
//! the first counterexample as an error string.

use super::oracle::socle_oracle;
use super::strategies::*;
use super::{prepend_var, ring_var};
use macdual::admissible::{check_cond2, check_family, check_gd, check_weak, w_cap_v, AdmissibleFamily, MultiIndex};
use macdual::construct::{cone_family, LinearChange};
use macdual::dpmodule::{contract, pairing, top_forms_independent, DualSubmodule};
use macdual::duality::{annihilator, ideal_equal, inverse_system, Ideal};
use macdual::exactalg::linalg::{kernel_basis, rank, rref, span_contains, span_intersect};
use macdual::exactalg::monomial::Monomial;
use macdual::exactalg::scalar;
use macdual::quotient::{artinian_report, level_power_check, socdeg_power_check};
use macdual::{Polynomial, Scalar, Side, VarNames};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

pub const CASES: u32 = 100;

fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn run<S: Strategy>(cases: u32, s: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    runner(cases).run(&s, test).map_err(|e| e.to_string())
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

fn err(e: macdual::Error) -> TestCaseError {
    TestCaseError::fail(e.to_string())
}

/// `(fg) o F = f o (g o F)` and bilinearity of contraction.
pub fn module_axioms(cases: u32) -> Result<(), String> {
    let s = (1usize..=3).prop_flat_map(|m| {
        (
            poly(m, 3, 4, Side::Ring),
            poly(m, 3, 4, Side::Ring),
            poly(m, 6, 6, Side::Dual),
            poly(m, 6, 6, Side::Dual),
            -5i64..=5,
            -5i64..=5,
        )
    });
    run(cases, s, |(f, g, a, b, p, q)| {
        let fg = &f * &g;
        let lhs = contract(&fg, &a).map_err(err)?;
        let rhs = contract(&f, &contract(&g, &a).map_err(err)?).map_err(err)?;
        check(lhs == rhs, || "(fg) o F != f o (g o F)".into())?;
        let (p, q) = (scalar::int(p), scalar::int(q));
        let comb = &f.scale(&p) + &g.scale(&q);
        let l = contract(&comb, &a).map_err(err)?;
        let r = &contract(&f, &a).map_err(err)?.scale(&p) + &contract(&g, &a).map_err(err)?.scale(&q);
        check(l == r, || "not linear in the ring argument".into())?;
        let combd = &a.scale(&p) + &b.scale(&q);
        let l = contract(&f, &combd).map_err(err)?;
        let r = &contract(&f, &a).map_err(err)?.scale(&p) + &contract(&f, &b).map_err(err)?.scale(&q);
        check(l == r, || "not linear in the dual argument".into())?;
        let one = Polynomial::constant(f.nvars(), Side::Ring, scalar::one());
        check(contract(&one, &a).map_err(err)? == a, || "1 o F != F".into())
    })
}

/// `ann(W1 ∩ W2) = ann(W1) + ann(W2)`.
pub fn ann_of_intersection(cases: u32) -> Result<(), String> {
    let s = (1usize..=3).prop_flat_map(|m| {
        (
            proptest::collection::vec(poly(m, 4, 4, Side::Dual), 1..=2),
            proptest::collection::vec(poly(m, 4, 4, Side::Dual), 1..=2),
        )
    });
    run(cases, s, |(g1, g2)| {
        let m = g1[0].nvars();
        let w1 = DualSubmodule::closure(m, &g1).map_err(err)?;
        let w2 = DualSubmodule::closure(m, &g2).map_err(err)?;
        let cap = w1.intersect(&w2).map_err(err)?;
        let lhs = annihilator(&cap, None, &[]).map_err(err)?.ideal;
        let a1 = annihilator(&w1, None, &[]).map_err(err)?.ideal;
        let a2 = annihilator(&w2, None, &[]).map_err(err)?.ideal;
        let rhs = a1.sum(&a2).map_err(err)?;
        let (eq, c) = ideal_equal(&lhs, &rhs, None).map_err(err)?;
        check(eq && c.is_exact(), || format!("ann(W1∩W2) != ann(W1)+ann(W2) ({c})"))
    })
}

/// Level of socle degree `s` and type `tau` iff the inverse system is
/// minimally generated by `tau` elements of degree `s` with independent top
/// forms; both sides are decided independently of each other.
pub fn level_biconditional(cases: u32) -> Result<(), String> {
    run(cases, artinian_ideal(), |inp| {
        let o = socle_oracle(&inp.gens, inp.nvars, inp.k);
        let ideal = Ideal::new(inp.nvars, inp.gens.clone()).map_err(err)?;
        let w = inverse_system(&ideal, o.socle_degree).module().map_err(err)?;
        let mg = w.min_generators();
        let dual_level =
            mg.degrees.iter().all(|&d| d == o.socle_degree) && top_forms_independent(&mg.generators);
        check(dual_level == o.level, || format!("dual side says level={dual_level}, socle oracle {o:?}"))?;
        if o.level {
            check(mg.count() == o.socle_type, || format!("{} generators, type {}", mg.count(), o.socle_type))?;
        }
        let r = artinian_report(&ideal, 12).map_err(err)?;
        check(
            r.hilbert == o.hilbert && r.socle_degree == o.socle_degree && r.level == o.level && r.socle_type == o.socle_type,
            || format!("report {r:?} vs oracle {o:?}"),
        )
    })
}

/// `ann(I^⊥) = I` for Artinian ideals.
pub fn matlis_round_trip(cases: u32) -> Result<(), String> {
    run(cases, artinian_ideal(), |inp| {
        let ideal = Ideal::new(inp.nvars, inp.gens.clone()).map_err(err)?;
        let s = inp.k - 1;
        let w = inverse_system(&ideal, s).module().map_err(err)?;
        let back = annihilator(&w, None, &[]).map_err(err)?.ideal;
        let (eq, c) = ideal_equal(&back, &ideal, None).map_err(err)?;
        check(eq && c.is_exact(), || format!("ann(I^perp) differs from I ({c})"))
    })
}

/// `A = B[x]` for an Artinian level `B` in two variables, moved by a random
/// change of coordinates; returns `(I, z, s, tau)` with `z` the image of `x`.
fn cylinder(l: &LevelInput, a: &[Vec<Scalar>]) -> Result<(Ideal, Vec<Polynomial>), TestCaseError> {
    let w = DualSubmodule::closure(2, &l.forms).map_err(err)?;
    let b = annihilator(&w, None, &[]).map_err(err)?.ideal;
    let gens: Vec<Polynomial> = b.generators().iter().map(prepend_var).collect();
    let change = LinearChange::new(a.to_vec()).map_err(err)?;
    let i = change.inverse().apply_ideal(&Ideal::new(3, gens).map_err(err)?).map_err(err)?;
    let z = change.inverse().apply_ring(&ring_var(3, 0)).map_err(err)?;
    Ok((i, vec![z]))
}

/// `socdeg R/(I + z^n) = s + |n| - d` for `|n| <= s + 3`.
pub fn socdeg_formula(cases: u32) -> Result<(), String> {
    run(cases, (level_input(), invertible(3)), |(l, a)| {
        let (i, z) = cylinder(&l, &a)?;
        check(socdeg_power_check(&i, &z, l.s, l.s + 3).map_err(err)?, || "socle degree not additive".into())
    })
}

/// Every `R/(I + z^n)` is level of type `tau`.
pub fn type_preservation(cases: u32) -> Result<(), String> {
    run(cases, (level_input(), invertible(3)), |(l, a)| {
        let (i, z) = cylinder(&l, &a)?;
        check(level_power_check(&i, &z, l.tau, l.s + 3).map_err(err)?, || "type or levelness changed".into())
    })
}

fn build_cone(c: &ConeInput) -> Result<AdmissibleFamily, TestCaseError> {
    let v = VarNames::new(&["x", "y", "z"]).unwrap();
    let h: Vec<Polynomial> = c.level.forms.iter().map(prepend_var).collect();
    let f = cone_family(&v, &h, 1, c.t0).map_err(err)?;
    let Some((n, j, e, k)) = &c.perturb else { return Ok(f) };
    let deg = c.level.s as u16 + *n as u16 - 1;
    let a = if e[0] >= 4 { 0 } else { e[0] % (deg + 1) };
    let b = e[1] % (deg - a + 1);
    let mono = Monomial::from_exponents(&[a, b, deg - a - b]);
    let mut entries = f.entries().clone();
    let key = MultiIndex::new(vec![*n]);
    let slot = &mut entries.get_mut(&key).unwrap()[*j];
    slot.add_term(mono, scalar::int(*k));
    AdmissibleFamily::new(v, f.z().to_vec(), f.tau(), f.t0(), None, entries).map_err(err)
}

/// Condition 2 gives `W_(n-e_i) ⊆ W_n ∩ V_n^i`, with equality once the
/// family is admissible.
pub fn intersection_equality(cases: u32) -> Result<(), String> {
    run(cases, cone_input(), |c| {
        let f = build_cone(&c)?;
        let cond2 = check_cond2(&f).pass();
        let adm = check_family(&f).admissible();
        for n in f.indices() {
            let Some(prev) = n.minus_e(0) else { continue };
            let cap = w_cap_v(&f, n, 0);
            let Ok(below) = f.module_z(&prev).space().reindex(cap.basis().clone()) else { continue };
            if cond2 {
                check(below.is_subspace_of(&cap), || format!("W_(n-e) not inside W_n ∩ V at n={n}"))?;
            }
            if adm {
                check(below.same_span(&cap), || format!("W_n ∩ V != W_(n-e) at n={n}"))?;
            }
        }
        Ok(())
    })
}

/// For one generator per index, admissibility and the `G_d` condition agree.
pub fn tau_one_equivalence(cases: u32) -> Result<(), String> {
    let s = cone_input().prop_map(|mut c| {
        c.level.forms.truncate(1);
        c.level.tau = 1;
        if let Some(p) = c.perturb.as_mut() {
            p.1 = 0;
        }
        c
    });
    run(cases, s, |c| {
        let f = build_cone(&c)?;
        let a = check_family(&f).admissible();
        let g = check_gd(&f).map_err(err)?.pass();
        check(a == g, || format!("admissible={a} but G_d={g}"))
    })
}

/// Admissible families satisfy the weak condition.
pub fn admissible_implies_weak(cases: u32) -> Result<(), String> {
    run(cases, cone_input(), |c| {
        let f = build_cone(&c)?;
        if check_family(&f).admissible() {
            check(check_weak(&f).pass(), || "admissible family fails the weak condition".into())?;
        }
        Ok(())
    })
}

/// `<phi(f), phi^*(F)> = <f, F>`, and the same for contraction.
pub fn pairing_under_change(cases: u32) -> Result<(), String> {
    let s = (2usize..=3).prop_flat_map(|m| (invertible(m), poly(m, 3, 4, Side::Ring), poly(m, 3, 5, Side::Dual)));
    run(cases, s, |(a, f, g)| {
        let c = LinearChange::new(a).map_err(err)?;
        let pf = c.apply_ring(&f).map_err(err)?;
        let pg = c.apply_dual(&g).map_err(err)?;
        check(pairing(&pf, &pg).map_err(err)? == pairing(&f, &g).map_err(err)?, || "pairing changed".into())?;
        let lhs = contract(&pf, &pg).map_err(err)?;
        let rhs = c.apply_dual(&contract(&f, &g).map_err(err)?).map_err(err)?;
        check(lhs == rhs, || "contraction not equivariant".into())
    })
}

/// RREF is idempotent and rank preserving, kernels are annihilated and the
/// intersection satisfies the dimension formula.
pub fn linear_algebra(cases: u32) -> Result<(), String> {
    let mat = |r: usize, c: usize| {
        proptest::collection::vec(proptest::collection::vec(-2i64..=2, c), 0..=r)
            .prop_map(|rows| rows.into_iter().map(|r| r.into_iter().map(scalar::int).collect()).collect::<Vec<Vec<Scalar>>>())
    };
    let s = (1usize..=6).prop_flat_map(move |n| (Just(n), mat(5, n), mat(5, n)));
    run(cases, s, |(n, a, b)| {
        let r = rref(&a);
        check(rref(&r) == r, || "rref not idempotent".into())?;
        check(rank(&a) == r.len(), || "rank differs from rref rows".into())?;
        let k = kernel_basis(&a, n);
        check(k.len() + rank(&a) == n, || "rank-nullity".into())?;
        for v in &k {
            for row in &a {
                let dot: Scalar = row.iter().zip(v).map(|(x, y)| x * y).sum();
                check(dot == scalar::zero(), || "kernel vector not annihilated".into())?;
            }
        }
        let i = span_intersect(&a, &b, n);
        for v in &i {
            check(span_contains(&a, v) && span_contains(&b, v), || "intersection escapes".into())?;
        }
        let both: Vec<Vec<Scalar>> = a.iter().chain(b.iter()).cloned().collect();
        check(rank(&i) + rank(&both) == rank(&a) + rank(&b), || "dimension formula".into())
    })
}

/// Formatting then parsing gives the same polynomial.
pub fn text_round_trip(cases: u32) -> Result<(), String> {
    let s = (1usize..=4, any::<bool>())
        .prop_flat_map(|(m, dual)| poly(m, 4, 5, if dual { Side::Dual } else { Side::Ring }));
    run(cases, s, |p| {
        for names in [VarNames::indexed(p.nvars()), VarNames::new(&["x", "y", "z", "w"][..p.nvars()]).unwrap()] {
            let text = names.format(&p);
            let back = names.parse(&text, p.side()).map_err(err)?;
            check(back == p, || format!("'{text}' parses to something else"))?;
        }
        Ok(())
    })
}

/// The socle-degree formula and type preservation on the worked examples,
/// over every `n` with `|n| <= s + 3`.
pub fn power_checks_on_fixtures() -> Result<(), String> {
    use macdual::fixtures::*;
    let v = xyz();
    let i53 = Ideal::parse(&v, EX5_3_IDEAL).map_err(|e| e.to_string())?;
    let z = vec![v.parse_ring("x").unwrap()];
    let y = y5();
    let i57 = Ideal::parse(&y, EX5_7_IDEAL).map_err(|e| e.to_string())?;
    let z57 = vec![y.parse_ring("y1").unwrap(), y.parse_ring("y2").unwrap()];
    for (name, i, z, s, tau) in [("5.3", &i53, &z, 3u32, 2usize), ("5.7", &i57, &z57, 2, 2)] {
        let e = |e: macdual::Error| e.to_string();
        if !socdeg_power_check(i, z, s, s + 3).map_err(e)? {
            return Err(format!("socle degree formula fails on {name}"));
        }
        if !level_power_check(i, z, tau, s + 3).map_err(e)? {
            return Err(format!("type not preserved on {name}"));
        }
    }
    Ok(())
}

/// `W_(1..1) = 0` forces every `W_n` to vanish: a family that starts at zero
/// and becomes nonzero is rejected, and the zero family gives no ideal.
pub fn vacuous_family_guard() -> Result<(), String> {
    use macdual::construct::effective_construct;
    use std::collections::BTreeMap;
    let v = VarNames::new(&["x", "y", "z"]).unwrap();
    let z = vec![v.parse_ring("x").unwrap()];
    let zero = Polynomial::zero(3, Side::Dual);
    let mk = |hs: Vec<Polynomial>| -> Result<AdmissibleFamily, String> {
        let entries: BTreeMap<MultiIndex, Vec<Polynomial>> =
            hs.into_iter().enumerate().map(|(k, h)| (MultiIndex::new(vec![k as u32 + 1]), vec![h])).collect();
        AdmissibleFamily::new(v.clone(), z.clone(), 1, 3, None, entries).map_err(|e| e.to_string())
    };
    let late = mk(vec![zero.clone(), v.parse_dual("X").unwrap(), v.parse_dual("X^2").unwrap()])?;
    if check_family(&late).admissible() {
        return Err("family with W_1 = 0 and W_2 != 0 passes".into());
    }
    let dead = mk(vec![zero.clone(), zero.clone(), zero])?;
    if effective_construct(&dead).is_ok() {
        return Err("zero family produced an ideal".into());
    }
    Ok(())
}
