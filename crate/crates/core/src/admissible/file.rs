//! Text format for families.
//!
//! ```text
//! d=1, tau=2, t0=5, vars=x,y,z, z=x
//! H[1][1] = Y^3-Z^3
//! H[1][2] = Y^2Z
//! ```
//!
//! Header tokens without `=` continue the previous value. `graded=` is
//! optional. `#` starts a comment.

use super::{AdmissibleFamily, MultiIndex};
use crate::error::{Error, Result};
use crate::exactalg::{Polynomial, Side, VarNames};
use std::collections::BTreeMap;

fn header(line: &str) -> Result<BTreeMap<String, String>> {
    let mut out: BTreeMap<String, String> = BTreeMap::new();
    let mut last: Option<String> = None;
    for tok in line.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        match tok.split_once('=') {
            Some((k, v)) => {
                let k = k.trim().to_ascii_lowercase();
                out.insert(k.clone(), v.trim().to_string());
                last = Some(k);
            }
            None => {
                let k = last.clone().ok_or_else(|| Error::Parse(format!("header token '{tok}' has no key")))?;
                let e = out.get_mut(&k).unwrap();
                e.push(',');
                e.push_str(tok);
            }
        }
    }
    Ok(out)
}

fn field<T: std::str::FromStr>(h: &BTreeMap<String, String>, k: &str) -> Result<T> {
    h.get(k)
        .ok_or_else(|| Error::Parse(format!("header is missing '{k}'")))?
        .parse()
        .map_err(|_| Error::Parse(format!("bad value for '{k}'")))
}

pub fn parse_family(text: &str) -> Result<AdmissibleFamily> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .filter(|l| !l.is_empty());
    let head = header(lines.next().ok_or_else(|| Error::Parse("empty family file".into()))?)?;
    let d: usize = field(&head, "d")?;
    let tau: usize = field(&head, "tau")?;
    let t0: u32 = field(&head, "t0")?;
    let names = VarNames::parse_spec(head.get("vars").ok_or_else(|| Error::Parse("header is missing 'vars'".into()))?)?;
    let z = names.parse_list(head.get("z").ok_or_else(|| Error::Parse("header is missing 'z'".into()))?, Side::Ring)?;
    if z.len() != d {
        return Err(Error::InvalidFamily(format!("d={d} but {} forms in z", z.len())));
    }
    let graded = match head.get("graded").map(String::as_str) {
        None => None,
        Some("true") | Some("yes") | Some("1") => Some(true),
        Some("false") | Some("no") | Some("0") => Some(false),
        Some(o) => return Err(Error::Parse(format!("bad value for 'graded': {o}"))),
    };
    let mut slots: BTreeMap<MultiIndex, Vec<Option<Polynomial>>> = BTreeMap::new();
    for line in lines {
        let (lhs, rhs) = line.split_once('=').ok_or_else(|| Error::Parse(format!("expected 'H[..][..] = ...': {line}")))?;
        let lhs = lhs.trim();
        let body = lhs.strip_prefix('H').ok_or_else(|| Error::Parse(format!("expected 'H[': {line}")))?;
        let parts: Vec<&str> = body.split(']').map(|s| s.trim().trim_start_matches('[')).filter(|s| !s.is_empty()).collect();
        if parts.len() != 2 {
            return Err(Error::Parse(format!("expected H[n][j]: {lhs}")));
        }
        let n: Vec<u32> = parts[0]
            .split(',')
            .map(|x| x.trim().parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse(format!("bad index in {lhs}")))?;
        let j: usize = parts[1].trim().parse().map_err(|_| Error::Parse(format!("bad index in {lhs}")))?;
        if n.len() != d || j == 0 || j > tau {
            return Err(Error::InvalidFamily(format!("index out of range: {lhs}")));
        }
        let p = names.parse_dual(rhs)?;
        let slot = slots.entry(MultiIndex::new(n)).or_insert_with(|| vec![None; tau]);
        if slot[j - 1].replace(p).is_some() {
            return Err(Error::InvalidFamily(format!("duplicate entry {lhs}")));
        }
    }
    let mut entries = BTreeMap::new();
    for (n, v) in slots {
        let h: Option<Vec<Polynomial>> = v.into_iter().collect();
        let h = h.ok_or_else(|| Error::InvalidFamily(format!("incomplete entries for H[{n}]")))?;
        entries.insert(n, h);
    }
    AdmissibleFamily::new(names, z, tau, t0, graded, entries)
}

pub fn format_family(f: &AdmissibleFamily) -> String {
    let names = f.names();
    let z: Vec<String> = f.z().iter().map(|p| names.format(p)).collect();
    let mut out = format!(
        "d={}, tau={}, t0={}, vars={}, z={}, graded={}\n",
        f.d(),
        f.tau(),
        f.t0(),
        names.names().join(","),
        z.join(","),
        f.graded()
    );
    for (n, h) in f.entries() {
        let idx: Vec<String> = n.iter().map(u32::to_string).collect();
        for (j, p) in h.iter().enumerate() {
            out.push_str(&format!("H[{}][{}] = {}\n", idx.join(","), j + 1, names.format(p)));
        }
    }
    out
}
