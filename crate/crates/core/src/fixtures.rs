//! Worked examples: data and end-to-end runs used by the `examples`
//! subcommand and the test suites.

use crate::admissible::{check_cond3, check_family, check_gd, check_weak, AdmissibleFamily, MultiIndex};
use crate::construct::{
    effective_construct, lift_family, local_construct_heuristic, matroid_from_matrix, semigroup_presentation,
    stanley_reisner, LinearChange,
};
use crate::dpmodule::DualSubmodule;
use crate::duality::{annihilator, ideal_equal, Ideal};
use crate::error::Result;
use crate::exactalg::monomial::Monomial;
use crate::exactalg::{scalar, Polynomial, Scalar, Side, VarNames};
use crate::quotient::{artinian_report, default_cap, is_level, LevelOptions};
use std::collections::BTreeMap;

pub const EXAMPLE_IDS: &[&str] = &["ex2.5", "ex2.11", "ex5.3", "ex5.4", "ex5.5", "ex5.6", "ex5.7"];

pub fn xyz() -> VarNames {
    VarNames::new(&["x", "y", "z"]).unwrap()
}

pub fn xyzw() -> VarNames {
    VarNames::new(&["x", "y", "z", "w"]).unwrap()
}

pub fn y5() -> VarNames {
    VarNames::new(&["y1", "y2", "y3", "y4", "y5"]).unwrap()
}

fn dual(v: &VarNames, s: &str) -> Polynomial {
    v.parse_dual(s).expect("fixture polynomial")
}

/// `X * p` (formal shift by the first variable).
fn xshift(p: &Polynomial) -> Polynomial {
    p.mul_monomial(&Monomial::var(p.nvars(), 0))
}

fn one_dim_family(v: &VarNames, t0: u32, rows: Vec<[Polynomial; 2]>) -> AdmissibleFamily {
    let entries: BTreeMap<MultiIndex, Vec<Polynomial>> =
        rows.into_iter().enumerate().map(|(k, h)| (MultiIndex::new(vec![k as u32 + 1]), h.to_vec())).collect();
    let z = vec![v.parse_ring("x").unwrap()];
    AdmissibleFamily::new(v.clone(), z, 2, t0, None, entries).expect("fixture family")
}

// Cone over Y^3, Z^3.
pub const EX5_3_H: [&str; 2] = ["Y^3", "Z^3"];
pub const EX5_3_IDEAL: &str = "y^4, yz, z^4";

pub fn ex5_3_family() -> AdmissibleFamily {
    let v = xyz();
    let h: Vec<Polynomial> = EX5_3_H.iter().map(|s| dual(&v, s)).collect();
    crate::construct::cone_family(&v, &h, 1, 5).expect("cone")
}

// Two Gorenstein families whose union is not admissible.
pub const EX5_5_I: &str = "yz+xz, y^3+z^3-xy^2+x^2y-x^3";
pub const EX5_5_J: &str = "z^2, y^3";
/// Intersection computed by elimination.
pub const EX5_5_INTERSECTION: &str = "xz^2+yz^2, 4y^3z+z^4, 4x^3y^3-4x^2y^4+4xy^5-4y^6+z^6";
/// The third generator as printed, which does not lie in `I`.
pub const EX5_5_PRINTED_THIRD: &str = "x^3y^3-x^2y^4+xy^5-y^6-y^2z^3";

pub fn ex5_5_family() -> AdmissibleFamily {
    let v = xyz();
    let h1 = dual(&v, "Y^3-Z^3");
    let h2 = &xshift(&h1) + &dual(&v, "YZ^3");
    let h3 = &xshift(&h2) - &dual(&v, "Y^2Z^3");
    let h4 = &xshift(&h3) + &dual(&v, "Y^3Z^3-4Z^6");
    let h5 = &xshift(&h4) + &dual(&v, "Y^7-Y^4Z^3+4YZ^6");
    let g1 = dual(&v, "Y^2Z");
    let mut g = vec![g1];
    for _ in 0..4 {
        let next = xshift(g.last().unwrap());
        g.push(next);
    }
    let rows = [h1, h2, h3, h4, h5].into_iter().zip(g).map(|(a, b)| [a, b]).collect();
    one_dim_family(&v, 5, rows)
}

// Local family in four variables.
pub const EX5_4_IDEAL: &str = "y^2-xz, x^3-yz, x^2y-z^2, w^2-x^3y";
pub const EX5_4_FULL: &str = "x^4, y^2-xz, x^3-yz, x^2y-z^2, w^2-x^3y";

pub fn ex5_4_family() -> AdmissibleFamily {
    let v = xyzw();
    let a1 = dual(&v, "YW");
    let b1 = dual(&v, "ZW");
    let a2 = xshift(&a1);
    let b2 = &xshift(&b1) + &dual(&v, "Y^2W");
    let a3 = &xshift(&a2) + &dual(&v, "Z^2W");
    let b3 = xshift(&b2);
    let a4 = &xshift(&a3) + &dual(&v, "Y^2ZW+W^3");
    let b4 = &xshift(&b3) + &dual(&v, "YZ^2W");
    one_dim_family(&v, 4, vec![[a1, b1], [a2, b2], [a3, b3], [a4, b4]])
}

// Arithmetic-sequence semigroup t^6, t^10, t^14, t^18.
pub const EX5_6_IDEAL: &str = "x^3-w, xz-y^2, xw-yz, z^2-yw";
/// Another generating set of the same ideal.
pub const EX5_6_PRESENTATION: &str = "x^3-w, x^4-yz, xz-y^2, x^3y-z^2";

pub fn ex5_6_family() -> AdmissibleFamily {
    let v = xyzw();
    let a1 = dual(&v, "Y");
    let b1 = dual(&v, "Z");
    let a2 = xshift(&a1);
    let b2 = &xshift(&b1) + &dual(&v, "Y^2");
    let a3 = xshift(&a2);
    let b3 = xshift(&b2);
    let a4 = &xshift(&a3) + &dual(&v, "YW+Z^2");
    let b4 = &xshift(&b3) + &dual(&v, "ZW");
    let a5 = &xshift(&a4) + &dual(&v, "Y^2Z");
    let b5 = &xshift(&b4) + &dual(&v, "YZ^2+Y^2W");
    one_dim_family(&v, 5, vec![[a1, b1], [a2, b2], [a3, b3], [a4, b4], [a5, b5]])
}

// Stanley–Reisner ring of a column matroid.
pub const EX5_7_MATRIX: [[i64; 5]; 2] = [[1, 0, 2, 0, 3], [0, 1, 0, 2, 0]];
pub const EX5_7_FACETS: [[usize; 2]; 6] = [[1, 2], [2, 3], [3, 4], [4, 5], [1, 4], [2, 5]];
pub const EX5_7_SR: &str = "x1x3, x2x4, x1x5, x3x5";
/// Preimages of `y1..y5`.
pub const EX5_7_PHI: [&str; 5] = ["x2+x4", "x1+x3+x5", "x3", "x4", "x5"];
pub const EX5_7_IMAGE: &str = "(y2-y3-y5)y3, (y1-y4)y4, (y2-y3-y5)y5, y3y5";
pub const EX5_7_IDEAL: &str = "y3y5, y2y5-y5^2, y1y4-y4^2, y2y3-y3^2";
pub const EX5_7_BASE: [&str; 2] = ["Y4Y5", "Y3Y4"];
pub const EX5_7_H12: [&str; 2] = ["Y2Y4Y5+Y4Y5^2", "Y2Y3Y4+Y3^2Y4"];
pub const EX5_7_H22: [&str; 2] = ["Y1Y2Y4Y5+Y1Y4Y5^2+Y2Y4^2Y5+Y4^2Y5^2", "Y1Y2Y3Y4+Y1Y3^2Y4+Y2Y3Y4^2+Y3^2Y4^2"];
pub const EX5_7_H44_TAIL: [&str; 2] = [
    "Y1Y2^3Y4^3Y5+Y2^3Y4^4Y5+Y1Y2^2Y4^3Y5^2+Y2^2Y4^4Y5^2+Y1^3Y2Y4Y5^3+Y1^2Y2Y4^2Y5^3+Y1Y2Y4^3Y5^3+Y2Y4^4Y5^3+Y1^3Y4Y5^4+Y1^2Y4^2Y5^4+Y1Y4^3Y5^4+Y4^4Y5^4",
    "Y1^3Y2Y3^3Y4+Y1^3Y3^4Y4+Y1^2Y2Y3^3Y4^2+Y1^2Y3^4Y4^2+Y1Y2^3Y3Y4^3+Y1Y2^2Y3^2Y4^3+Y1Y2Y3^3Y4^3+Y1Y3^4Y4^3+Y2^3Y3Y4^4+Y2^2Y3^2Y4^4+Y2Y3^3Y4^4+Y3^4Y4^4",
];

pub fn ex5_7_matrix() -> Vec<Vec<Scalar>> {
    EX5_7_MATRIX.iter().map(|r| r.iter().map(|&x| scalar::int(x)).collect()).collect()
}

pub fn ex5_7_change() -> LinearChange {
    let v = VarNames::indexed(5);
    let forms: Vec<Polynomial> = EX5_7_PHI.iter().map(|s| v.parse_ring(s).unwrap()).collect();
    LinearChange::from_forms(&forms).expect("invertible")
}

/// `H_(4,4)^j` as printed: `Y1^2 Y2^2 H_(2,2)^j` plus the listed tail.
pub fn ex5_7_printed_h44() -> Vec<Polynomial> {
    let v = y5();
    let shift = Monomial::from_exponents(&[2, 2, 0, 0, 0]);
    (0..2).map(|j| &dual(&v, EX5_7_H22[j]).mul_monomial(&shift) + &dual(&v, EX5_7_H44_TAIL[j])).collect()
}

pub fn ex5_7_family(t0: u32) -> Result<AdmissibleFamily> {
    let v = y5();
    let i = Ideal::parse(&v, EX5_7_IMAGE)?;
    let z = vec![v.parse_ring("y1")?, v.parse_ring("y2")?];
    let base = EX5_7_BASE.iter().map(|s| dual(&v, s)).collect();
    lift_family(&v, &i, &z, t0, Some(base))
}

// Examples 2.5 and 2.11: semigroup rings.
pub const EX2_5_GENS: [u64; 4] = [6, 7, 11, 15];
pub const EX2_11_GENS: [u64; 4] = [6, 8, 10, 13];
pub const EX2_11_IDEAL: &str = "y^2-xz, yz-x^3, z^2-x^2y, w^2-x^3y";

pub fn semigroup_ideal(gens: &[u64]) -> Result<Ideal> {
    Ok(semigroup_presentation(gens)?.ideal())
}

/// One example run: printable lines and an overall verdict.
#[derive(Clone, Debug)]
pub struct ExampleOutcome {
    pub id: String,
    pub summary: String,
    pub lines: Vec<String>,
    pub pass: bool,
}

struct Run {
    checks: usize,
    agreed: usize,
    summary: Vec<String>,
    lines: Vec<String>,
    pass: bool,
}

impl Run {
    fn new() -> Self {
        Run { checks: 0, agreed: 0, summary: Vec::new(), lines: Vec::new(), pass: true }
    }

    fn check(&mut self, label: &str, ok: bool, detail: impl Into<String>) {
        self.pass &= ok;
        self.checks += 1;
        self.agreed += ok as usize;
        let d = detail.into();
        let tag = if ok { "ok" } else { "MISMATCH" };
        if d.is_empty() {
            self.lines.push(format!("{label}: {tag}"));
        } else {
            self.lines.push(format!("{label}: {d} [{tag}]"));
        }
    }

    fn say(&mut self, s: impl Into<String>) {
        self.summary.push(s.into());
    }

    fn info(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }
}

pub fn run_example(id: &str) -> Result<ExampleOutcome> {
    let mut r = Run::new();
    match id {
        "ex2.5" => ex2_5(&mut r)?,
        "ex2.11" => ex2_11(&mut r)?,
        "ex5.3" => ex5_3(&mut r)?,
        "ex5.4" => ex5_4(&mut r)?,
        "ex5.5" => ex5_5(&mut r)?,
        "ex5.6" => ex5_6(&mut r)?,
        "ex5.7" => ex5_7(&mut r)?,
        other => return Err(crate::Error::Invalid(format!("unknown example '{other}'; known: {}", EXAMPLE_IDS.join(", ")))),
    }
    if r.summary.is_empty() {
        let msg = format!("{}/{} checks agree", r.agreed, r.checks);
        r.say(msg);
    }
    Ok(ExampleOutcome { id: id.to_string(), summary: r.summary.join("; "), lines: r.lines, pass: r.pass })
}

fn hf(h: &[usize]) -> String {
    format!("({})", h.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
}

fn ex2_5(r: &mut Run) -> Result<()> {
    let v = xyzw();
    let i = semigroup_ideal(&EX2_5_GENS)?;
    r.info(format!("presentation of <6,7,11,15>: I={}", i.format(&v)));
    for (form, want, level) in [("x", vec![1, 3, 2], true), ("x+y", vec![1, 3, 1, 1], false)] {
        let l = v.parse_ring(form)?;
        let rep = artinian_report(&i.with_generators(&[l])?, 12)?;
        r.check(
            &format!("reduction {form}"),
            rep.hilbert == want && rep.level == level,
            format!("HF={} level={}", hf(&rep.hilbert), rep.level),
        );
    }
    let g = is_level(&i, 1, &LevelOptions { seed: 1, trials: 3, ..Default::default() })?;
    r.check(
        "general reduction, 3 seeds",
        g.stability == g.trials.len(),
        format!("level={} stable in {}/{}", g.level, g.stability, g.trials.len()),
    );
    Ok(())
}

fn ex2_11(r: &mut Run) -> Result<()> {
    let v = xyzw();
    let i = semigroup_ideal(&EX2_11_GENS)?;
    let expected = Ideal::parse(&v, EX2_11_IDEAL)?;
    let (eq, c) = ideal_equal(&i, &expected, Some(12))?;
    r.check("presentation of <6,8,10,13>", eq, format!("I={} ({c})", i.format(&v)));
    let rep = artinian_report(&i.with_generators(&[v.parse_ring("x")?])?, 12)?;
    r.check(
        "reduction x",
        rep.hilbert == vec![1, 3, 2] && rep.level && rep.socle_type == 2,
        format!("HF={} level={} type={}", hf(&rep.hilbert), rep.level, rep.socle_type),
    );
    Ok(())
}

fn ex5_3(r: &mut Run) -> Result<()> {
    let v = xyz();
    let f = ex5_3_family();
    let adm = check_family(&f).admissible();
    r.check("L_1^2-admissible", adm, "");
    r.say(format!("L_1^2-admissible: {}", if adm { "PASS" } else { "FAIL" }));
    let e = effective_construct(&f)?;
    let expected = Ideal::parse(&v, EX5_3_IDEAL)?;
    let (eq, _) = ideal_equal(&e.ideal, &expected, None)?;
    r.check("effective construction", eq, format!("I={}", e.ideal.format(&v)));
    let first = &e.level.trials[0].report;
    r.check(
        "level",
        e.extendable,
        format!("d=1 type={} socdeg={} level={}", first.socle_type, first.socle_degree, e.level.level),
    );
    r.say(format!("I={}", e.ideal.format(&v)));
    r.say(if e.level.level { format!("level type {}", first.socle_type) } else { "not level".to_string() });
    Ok(())
}

fn ex5_4(r: &mut Run) -> Result<()> {
    let v = xyzw();
    let f = ex5_4_family();
    r.check("L_1^2-admissible", check_family(&f).admissible(), "");
    let lc = local_construct_heuristic(&f, &MultiIndex::new(vec![4]), true, None)?;
    let full = Ideal::parse(&v, EX5_4_FULL)?;
    let (eq_full, c_full) = ideal_equal(&lc.full, &full, None)?;
    r.check("ann(W_4)", eq_full, format!("{} ({c_full})", lc.full.format(&v)));
    let expected = Ideal::parse(&v, EX5_4_IDEAL)?;
    let (eq, c) = ideal_equal(&lc.ideal, &expected, None)?;
    r.check("heuristic I", eq, format!("I={} ({c}, heuristic)", lc.ideal.format(&v)));
    let rep = is_level(&lc.ideal, 1, &LevelOptions { reduction: Some(vec![v.parse_ring("x")?]), ..Default::default() })?;
    let t = &rep.trials[0].report;
    r.check("R/I level of type 2", rep.level && t.socle_type == 2, format!("HF={}", hf(&t.hilbert)));
    Ok(())
}

fn ex5_5(r: &mut Run) -> Result<()> {
    let v = xyz();
    let f = ex5_5_family();
    for (j, name, text) in [(0usize, "I", EX5_5_I), (1, "J", EX5_5_J)] {
        let sub = f.subfamily(&[j])?;
        let gd = check_gd(&sub)?;
        r.check(&format!("H^{} is G_1-admissible", j + 1), gd.pass(), "");
        let w = DualSubmodule::closure(3, sub.h(&MultiIndex::new(vec![5])))?;
        let a = annihilator(&w, Some(4), &[])?.ideal;
        let (eq, _) = ideal_equal(&a, &Ideal::parse(&v, text)?, None)?;
        r.check(&format!("{name}=ann<H_5^{}>_(<=4)", j + 1), eq, a.format(&v));
    }
    let small = f.truncated(2)?;
    let c3 = check_cond3(&small);
    let wit = c3.first().and_then(|x| x.witness.clone());
    let witness = wit.as_ref().map(|w| v.format(w)).unwrap_or_default();
    r.check("combined family fails condition (3)", !c3.pass(), format!("witness {witness} at n=2, i=1"));
    r.check("combined family satisfies the weak condition", check_weak(&small).pass(), "");
    let ij = Ideal::parse(&v, EX5_5_INTERSECTION)?;
    let rep = is_level(&ij, 1, &LevelOptions { seed: 5, trials: 3, ..Default::default() })?;
    let t = &rep.trials[0].report;
    r.check(
        "I∩J not level",
        !rep.level,
        format!("HF={} dual generator degrees {:?}", hf(&t.hilbert), t.dual_degrees),
    );
    Ok(())
}

fn ex5_6(r: &mut Run) -> Result<()> {
    let v = xyzw();
    let f = ex5_6_family();
    r.check("L_1^2-admissible", check_family(&f).admissible(), "");
    let lc = local_construct_heuristic(&f, &MultiIndex::new(vec![5]), true, Some(4))?;
    let expected = Ideal::parse(&v, EX5_6_IDEAL)?;
    let (eq, c) = ideal_equal(&lc.ideal, &expected, None)?;
    r.check("ann(W_5)_(<=4)", eq, format!("I={} ({c}, heuristic)", lc.ideal.format(&v)));
    let pres = semigroup_ideal(&[6, 10, 14, 18])?;
    let (eq2, c2) = ideal_equal(&pres, &Ideal::parse(&v, EX5_6_PRESENTATION)?, None)?;
    r.check("presentation of <6,10,14,18>", eq2, format!("{} ({c2})", pres.format(&v)));
    let (eq3, c3) = ideal_equal(&pres, &expected, None)?;
    r.check("agrees with the presentation", eq3, format!("{c3}"));
    Ok(())
}

fn ex5_7(r: &mut Run) -> Result<()> {
    let x5 = VarNames::indexed(5);
    let v = y5();
    let c = matroid_from_matrix(&ex5_7_matrix())?;
    let mut want: Vec<Vec<usize>> = EX5_7_FACETS.iter().map(|f| f.to_vec()).collect();
    want.sort();
    r.check("matroid facets", c.facets() == want.as_slice(), format!("{:?}", c.facets()));
    let sr = stanley_reisner(&c);
    let (eq, _) = ideal_equal(&sr, &Ideal::parse(&x5, EX5_7_SR)?, None)?;
    r.check("Stanley-Reisner ideal", eq, sr.format(&x5));
    let img = ex5_7_change().apply_ideal(&sr)?;
    let (eq, _) = ideal_equal(&img, &Ideal::parse(&v, EX5_7_IMAGE)?, None)?;
    r.check("change of coordinates", eq, img.format(&v));
    let f = ex5_7_family(8)?;
    let rep = check_family(&f);
    r.check("L_2^2-admissible up to |n|<=8", rep.admissible(), "");
    let h44 = f.h(&MultiIndex::new(vec![4, 4]));
    r.check("H_(4,4) matches", h44 == ex5_7_printed_h44().as_slice(), "");
    let e = effective_construct(&f)?;
    let (eq, _) = ideal_equal(&e.ideal, &Ideal::parse(&v, EX5_7_IDEAL)?, None)?;
    r.check("effective construction", eq && e.extendable, format!("I={}", e.ideal.format(&v)));
    Ok(())
}

/// The socle degree `s` of `R/(I + (z))` for a family's base ideal.
pub fn reduction_socle_degree(i: &Ideal, z: &[Polynomial]) -> Result<u32> {
    let j = i.with_generators(z)?;
    Ok(artinian_report(&j, default_cap(&j))?.socle_degree)
}

pub fn ring_var(m: usize, i: usize) -> Polynomial {
    Polynomial::var(m, i, Side::Ring)
}
