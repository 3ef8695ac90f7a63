//! Linear changes of coordinates acting on both sides of the pairing.

use crate::duality::Ideal;
use crate::error::{Error, Result};
use crate::exactalg::linalg::{inverse, rank};
use crate::exactalg::monomial::{monomials_of_degree, Monomial};
use crate::exactalg::{scalar, Polynomial, Scalar, Side};
use num_traits::Zero;

/// The change sending the linear form `l_i = sum_j a_ij x_j` to `y_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearChange {
    a: Vec<Vec<Scalar>>,
    inv: Vec<Vec<Scalar>>,
}

impl LinearChange {
    pub fn new(a: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = a.len();
        if a.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("change of coordinates must be square".into()));
        }
        let inv = inverse(&a).ok_or(Error::Singular)?;
        Ok(LinearChange { a, inv })
    }

    pub fn identity(m: usize) -> Self {
        let a: Vec<Vec<Scalar>> = (0..m)
            .map(|i| (0..m).map(|j| if i == j { scalar::one() } else { scalar::zero() }).collect())
            .collect();
        LinearChange { inv: a.clone(), a }
    }

    /// From the images' preimages: `forms[i]` is sent to `y_i`.
    pub fn from_forms(forms: &[Polynomial]) -> Result<Self> {
        for f in forms {
            if !f.is_linear_form() || f.side() != Side::Ring {
                return Err(Error::Invalid(format!("{f} is not a linear form")));
            }
        }
        Self::new(forms.iter().map(Polynomial::linear_coeffs).collect())
    }

    /// Extends independent forms `z` by the standard variables of least
    /// index that keep the rows independent.
    pub fn extend(z: &[Polynomial], m: usize) -> Result<Self> {
        let mut rows: Vec<Vec<Scalar>> = z.iter().map(Polynomial::linear_coeffs).collect();
        if rank(&rows) < rows.len() {
            return Err(Error::DependentForms);
        }
        for k in 0..m {
            if rows.len() == m {
                break;
            }
            let mut e = vec![scalar::zero(); m];
            e[k] = scalar::one();
            rows.push(e);
            if rank(&rows) < rows.len() {
                rows.pop();
            }
        }
        Self::new(rows)
    }

    pub fn nvars(&self) -> usize {
        self.a.len()
    }

    pub fn matrix(&self) -> &[Vec<Scalar>] {
        &self.a
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.nvars())
    }

    pub fn inverse(&self) -> LinearChange {
        LinearChange { a: self.inv.clone(), inv: self.a.clone() }
    }

    pub fn forms(&self) -> Vec<Polynomial> {
        self.a.iter().map(|r| Polynomial::linear(r, Side::Ring)).collect()
    }

    /// `phi(f)`, substituting `x_j -> sum_i inv_ji y_i`.
    pub fn apply_ring(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.side() != Side::Ring {
            return Err(Error::SideMismatch);
        }
        let images: Vec<Polynomial> = self.inv.iter().map(|r| Polynomial::linear(r, Side::Ring)).collect();
        Ok(substitute(f, &images))
    }

    /// `phi_*(F)`: the coefficient of `Y^b` is `<l^b, F>`.
    pub fn apply_dual(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.side() != Side::Dual {
            return Err(Error::SideMismatch);
        }
        let m = self.nvars();
        let forms = self.forms();
        let mut cache = PowerCache::new(&forms);
        let mut out = Polynomial::zero(m, Side::Dual);
        let (Some(lo), Some(hi)) = (f.order(), f.degree()) else {
            return Ok(out);
        };
        for k in lo..=hi {
            let part = f.homogeneous_part(k);
            if part.is_zero() {
                continue;
            }
            for b in monomials_of_degree(m, k) {
                let lb = cache.product(&b);
                let mut c = Scalar::zero();
                for (mm, x) in lb.terms() {
                    let y = part.coeff(mm);
                    if !y.is_zero() {
                        c += x * y;
                    }
                }
                out.add_term(b, c);
            }
        }
        Ok(out)
    }

    pub fn apply_ideal(&self, ideal: &Ideal) -> Result<Ideal> {
        let g = ideal.generators().iter().map(|f| self.apply_ring(f)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ideal.nvars(), g)
    }
}

struct PowerCache<'a> {
    forms: &'a [Polynomial],
    powers: Vec<Vec<Polynomial>>,
}

impl<'a> PowerCache<'a> {
    fn new(forms: &'a [Polynomial]) -> Self {
        let m = forms.first().map_or(0, Polynomial::nvars);
        PowerCache { forms, powers: forms.iter().map(|_| vec![Polynomial::constant(m, Side::Ring, scalar::one())]).collect() }
    }

    fn power(&mut self, i: usize, e: usize) -> &Polynomial {
        while self.powers[i].len() <= e {
            let next = self.powers[i].last().unwrap() * &self.forms[i];
            self.powers[i].push(next);
        }
        &self.powers[i][e]
    }

    fn product(&mut self, b: &Monomial) -> Polynomial {
        let m = b.nvars();
        let mut acc = Polynomial::constant(m, Side::Ring, scalar::one());
        for (i, &e) in b.exponents().iter().enumerate() {
            if e > 0 {
                acc = &acc * &self.power(i, e as usize).clone();
            }
        }
        acc
    }
}

/// Substitutes `x_j -> images[j]`.
pub fn substitute(f: &Polynomial, images: &[Polynomial]) -> Polynomial {
    let mut cache = PowerCache::new(images);
    let m = images.first().map_or(f.nvars(), Polynomial::nvars);
    let mut out = Polynomial::zero(m, f.side());
    for (mono, c) in f.terms() {
        let p = cache.product(mono).with_side(f.side());
        out = &out + &p.scale(c);
    }
    out
}
