//! Univariate polynomials over [`ExactScalar`] and polynomial determinants.
//!
//! These carry the dispersion determinants: a wave operator is assembled as
//! a small square matrix of polynomials in one variable (a squared-mass
//! ratio), its determinant is expanded exactly, and the rational roots give
//! the mass branches. Only rational roots are extracted exactly; anything
//! irrational is reported as an unresolved factor with non-exact float
//! approximations.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::scalar::{rational_to_f64, ExactScalar};
use crate::Error;

/// Coefficients in ascending degree; the leading coefficient is nonzero
/// unless the polynomial is zero (empty coefficient list).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactPoly {
    coeffs: Vec<ExactScalar>,
}

impl ExactPoly {
    pub fn new(mut coeffs: Vec<ExactScalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![] }
    }

    pub fn constant(c: ExactScalar) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::new(vec![ExactScalar::zero(), ExactScalar::one()])
    }

    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> ExactScalar {
        self.coeffs.get(k).cloned().unwrap_or_else(ExactScalar::zero)
    }

    pub fn add(&self, other: &ExactPoly) -> ExactPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        ExactPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &ExactPoly) -> ExactPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        ExactPoly::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn neg(&self) -> ExactPoly {
        ExactPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &ExactPoly) -> ExactPoly {
        if self.is_zero() || other.is_zero() {
            return ExactPoly::zero();
        }
        let mut out = vec![ExactScalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let p = a * b;
                out[i + j] += p;
            }
        }
        ExactPoly::new(out)
    }

    pub fn scale(&self, s: &ExactScalar) -> ExactPoly {
        ExactPoly::new(self.coeffs.iter().map(|c| s * c).collect())
    }

    pub fn eval(&self, x: &ExactScalar) -> ExactScalar {
        let mut acc = ExactScalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Exact division by a monic linear factor (x - r); returns the quotient
    /// iff the remainder vanishes.
    pub fn div_linear(&self, root: &ExactScalar) -> Option<ExactPoly> {
        if self.is_zero() {
            return None;
        }
        let mut q = vec![ExactScalar::zero(); self.coeffs.len() - 1];
        let mut carry = ExactScalar::zero();
        for k in (0..self.coeffs.len()).rev() {
            let v = self.coeff(k) + carry.clone();
            if k == 0 {
                return if v.is_zero() { Some(ExactPoly::new(q)) } else { None };
            }
            q[k - 1] = v.clone();
            carry = v * root.clone();
        }
        unreachable!()
    }
}

/// Exact determinant of a square matrix of polynomials by Laplace expansion.
///
/// The dispersion operators here are at most 6x6, so cofactor expansion is
/// cheap and avoids any intermediate division.
pub fn det_poly(m: &[Vec<ExactPoly>]) -> Result<ExactPoly, Error> {
    let n = m.len();
    for row in m {
        if row.len() != n {
            return Err(Error::Shape("det_poly: matrix is not square".into()));
        }
    }
    Ok(det_rec(m, &(0..n).collect::<Vec<_>>(), 0))
}

fn det_rec(m: &[Vec<ExactPoly>], cols: &[usize], row: usize) -> ExactPoly {
    if cols.is_empty() {
        return ExactPoly::constant(ExactScalar::one());
    }
    let mut acc = ExactPoly::zero();
    for (k, &c) in cols.iter().enumerate() {
        let e = &m[row][c];
        if e.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = det_rec(m, &rest, row + 1);
        let term = e.mul(&minor);
        acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// A rational root with its exact multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalRoot {
    pub root: BigRational,
    pub multiplicity: usize,
}

/// Root extraction report: exact rational roots plus whatever could not be
/// resolved over the rationals.
#[derive(Clone, Debug)]
pub struct RootReport {
    pub rational_roots: Vec<RationalRoot>,
    /// Unresolved exact factor after dividing out rational roots; `None`
    /// when the polynomial splits completely over the rationals.
    pub unresolved_factor: Option<ExactPoly>,
    /// Float approximations to the unresolved factor's roots, flagged
    /// non-exact by construction.
    pub approximate_roots: Vec<(f64, f64)>,
}

/// All rational roots, with multiplicities, of a polynomial with rational
/// (real) coefficients, by the rational-root theorem on the content-cleared
/// integer polynomial.
pub fn rational_root_masses(p: &ExactPoly) -> Result<RootReport, Error> {
    if p.is_zero() {
        return Err(Error::Degenerate("zero polynomial has no root spectrum".into()));
    }
    if p.coeffs().iter().any(|c| !c.is_real()) {
        return Err(Error::Degenerate(
            "rational root extraction expects real rational coefficients".into(),
        ));
    }
    // Strip x^k factors first: root 0 with multiplicity k.
    let mut work = p.clone();
    let mut roots: Vec<RationalRoot> = Vec::new();
    let mut zero_mult = 0;
    while !work.is_zero() && work.coeff(0).is_zero() {
        work = work.div_linear(&ExactScalar::zero()).expect("x divides");
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push(RationalRoot {
            root: BigRational::zero(),
            multiplicity: zero_mult,
        });
    }
    if work.degree() == Some(0) {
        return Ok(RootReport {
            rational_roots: roots,
            unresolved_factor: None,
            approximate_roots: vec![],
        });
    }
    // Clear denominators to an integer polynomial for candidate enumeration.
    let mut lcm = BigInt::one();
    for c in work.coeffs() {
        lcm = num::integer::lcm(lcm, c.re.denom().clone());
    }
    let ints: Vec<BigInt> = work
        .coeffs()
        .iter()
        .map(|c| (&c.re * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let a0 = ints[0].clone();
    let an = ints.last().unwrap().clone();
    let mut candidates: Vec<BigRational> = Vec::new();
    for p_div in divisors(&a0.abs()) {
        for q_div in divisors(&an.abs()) {
            let r = BigRational::new(p_div.clone(), q_div.clone());
            candidates.push(r.clone());
            candidates.push(-r);
        }
    }
    candidates.sort();
    candidates.dedup();
    for cand in candidates {
        let z = ExactScalar::from_rational(cand.clone());
        let mut mult = 0;
        while let Some(q) = work.div_linear(&z) {
            work = q;
            mult += 1;
            if work.degree().is_none() {
                break;
            }
        }
        if mult > 0 {
            roots.push(RationalRoot {
                root: cand,
                multiplicity: mult,
            });
        }
        if work.degree() == Some(0) || work.is_zero() {
            break;
        }
    }
    roots.sort_by(|a, b| a.root.cmp(&b.root));
    let (unresolved, approx) = if work.degree().map_or(true, |d| d == 0) {
        (None, vec![])
    } else {
        let approx = durand_kerner(&work);
        (Some(work), approx)
    };
    Ok(RootReport {
        rational_roots: roots,
        unresolved_factor: unresolved,
        approximate_roots: approx,
    })
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut out = Vec::new();
    let mut d = BigInt::one();
    // Candidate roots stay tiny in practice (mass ratios), cap the scan.
    let limit = BigInt::from(1_000_000u64);
    while &d * &d <= *n && d <= limit {
        if (n % &d).is_zero() {
            out.push(d.clone());
            out.push(n / &d);
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    out
}

/// Durand-Kerner iteration; float-only, used solely to annotate unresolved
/// factors.
fn durand_kerner(p: &ExactPoly) -> Vec<(f64, f64)> {
    let deg = match p.degree() {
        Some(d) if d > 0 => d,
        _ => return vec![],
    };
    let lead = p.coeff(deg).to_f64();
    let c: Vec<(f64, f64)> = (0..=deg)
        .map(|k| {
            let (re, im) = p.coeff(k).to_f64();
            cdiv((re, im), lead)
        })
        .collect();
    let eval = |z: (f64, f64)| -> (f64, f64) {
        let mut acc = (0.0, 0.0);
        for k in (0..=deg).rev() {
            acc = cadd(cmul(acc, z), c[k]);
        }
        acc
    };
    let mut zs: Vec<(f64, f64)> = (0..deg)
        .map(|k| {
            let ang = 2.0 * std::f64::consts::PI * (k as f64) / (deg as f64) + 0.5;
            (1.3f64.powi(k as i32 % 5) * ang.cos(), 1.3f64.powi(k as i32 % 5) * ang.sin())
        })
        .collect();
    for _ in 0..200 {
        let mut next = zs.clone();
        for i in 0..deg {
            let mut denom = (1.0, 0.0);
            for j in 0..deg {
                if i != j {
                    denom = cmul(denom, csub(zs[i], zs[j]));
                }
            }
            next[i] = csub(zs[i], cdiv(eval(zs[i]), denom));
        }
        zs = next;
    }
    zs.sort_by(|a, b| (a.0, a.1).partial_cmp(&(b.0, b.1)).unwrap());
    zs
}

fn cadd(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 + b.0, a.1 + b.1)
}
fn csub(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 - b.0, a.1 - b.1)
}
fn cmul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}
fn cdiv(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    let n = b.0 * b.0 + b.1 * b.1;
    ((a.0 * b.0 + a.1 * b.1) / n, (a.1 * b.0 - a.0 * b.1) / n)
}

/// Float value of a real rational, for report rendering.
pub fn rational_f64(r: &BigRational) -> f64 {
    rational_to_f64(r)
}
