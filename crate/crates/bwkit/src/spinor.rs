//! Dirac-algebra objects of the (1/2,0)+(0,1/2) representation.
//!
//! Euclidean convention throughout: {gamma_mu, gamma_nu} = 2 delta_mn with
//! index 4 as time, chiral (spinorial) representation with diagonal gamma5.
//! The reflection matrix R intertwines the gammas with their transposes and
//! makes gamma_mu R, sigma_mn R and gamma5 sigma_mn R symmetric; those are
//! the expansion matrices of the symmetric multispinor machinery.

use num::{BigRational, Signed, Zero};

use crate::matrix::ExactMatrix;
use crate::scalar::{rat, ExactScalar};
use crate::Error;

/// Index pairs (mu < nu) in lexicographic order; fixed storage order for
/// every antisymmetric-pair family in the crate.
pub const PAIRS: [(usize, usize); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

/// Position of an (unordered) index pair in [`PAIRS`], with the sign of the
/// permutation relative to stored order. Returns `None` for mu == nu.
pub fn pair_index(mu: usize, nu: usize) -> Option<(usize, i64)> {
    if mu == nu {
        return None;
    }
    let (a, b, sign) = if mu < nu { (mu, nu, 1) } else { (nu, mu, -1) };
    PAIRS.iter().position(|&p| p == (a, b)).map(|k| (k, sign))
}

/// Totally antisymmetric symbol with eps_1234 = +1.
pub fn epsilon4(a: usize, b: usize, c: usize, d: usize) -> i64 {
    let idx = [a, b, c, d];
    let mut seen = [false; 5];
    for &i in &idx {
        if !(1..=4).contains(&i) || seen[i] {
            return 0;
        }
        seen[i] = true;
    }
    let mut perm = idx;
    let mut sign = 1i64;
    for i in 0..4 {
        for j in (i + 1)..4 {
            if perm[i] > perm[j] {
                perm.swap(i, j);
                sign = -sign;
            }
        }
    }
    sign
}

#[derive(Clone, Debug)]
pub struct DiracSet {
    /// gamma_1..gamma_4 at indices 0..3.
    pub gamma: [ExactMatrix; 4],
    pub gamma5: ExactMatrix,
    /// sigma_mn = (i/2)[gamma_m, gamma_n] for the pairs in [`PAIRS`].
    pub sigma: [ExactMatrix; 6],
    pub reflection: ExactMatrix,
    /// Phase of R as a rational multiple of pi.
    pub phase_phi: BigRational,
}

fn pauli() -> [ExactMatrix; 3] {
    let i = ExactScalar::i;
    [
        ExactMatrix::from_int_rows(&[&[0, 1], &[1, 0]]),
        ExactMatrix::from_fn(2, 2, |r, c| match (r, c) {
            (0, 1) => -i(),
            (1, 0) => i(),
            _ => ExactScalar::zero(),
        }),
        ExactMatrix::from_int_rows(&[&[1, 0], &[0, -1]]),
    ]
}

fn block2(tl: &ExactMatrix, tr: &ExactMatrix, bl: &ExactMatrix, br: &ExactMatrix) -> ExactMatrix {
    ExactMatrix::from_fn(4, 4, |r, c| {
        let m = match (r / 2, c / 2) {
            (0, 0) => tl,
            (0, 1) => tr,
            (1, 0) => bl,
            (1, 1) => br,
            _ => unreachable!(),
        };
        m[(r % 2, c % 2)].clone()
    })
}

use crate::scalar::exact_phase;

/// Construct the full Dirac set in the chiral representation, with
/// R = e^{i phi} blockdiag(Theta, -Theta), Theta = [[0,-1],[1,0]].
pub fn build_dirac_set(phase_phi: BigRational) -> Result<DiracSet, Error> {
    let s = pauli();
    let z2 = ExactMatrix::zeros(2, 2);
    let i2 = ExactMatrix::identity(2);
    let i = ExactScalar::i();
    let gamma: [ExactMatrix; 4] = [
        block2(&z2, &s[0].scale(&-&i), &s[0].scale(&i), &z2),
        block2(&z2, &s[1].scale(&-&i), &s[1].scale(&i), &z2),
        block2(&z2, &s[2].scale(&-&i), &s[2].scale(&i), &z2),
        block2(&z2, &i2, &i2, &z2),
    ];
    let gamma5 = gamma[0]
        .mat_mul(&gamma[1])?
        .mat_mul(&gamma[2])?
        .mat_mul(&gamma[3])?;
    let half_i = ExactScalar::new(BigRational::zero(), rat(1, 2));
    let sigma: Vec<ExactMatrix> = PAIRS
        .iter()
        .map(|&(m, n)| {
            gamma[m - 1]
                .commutator(&gamma[n - 1])
                .map(|c| c.scale(&half_i))
        })
        .collect::<Result<_, _>>()?;
    let theta = ExactMatrix::from_int_rows(&[&[0, -1], &[1, 0]]);
    let phase = exact_phase(&phase_phi)?;
    let reflection = block2(&theta, &z2, &z2, &theta.neg()).scale(&phase);
    Ok(DiracSet {
        gamma,
        gamma5,
        sigma: sigma.try_into().unwrap(),
        reflection,
        phase_phi,
    })
}

impl DiracSet {
    /// The default set: phase pi/2, the unique quarter-turn phase for which
    /// R is simultaneously antisymmetric, hermitian and involutive.
    pub fn standard() -> Self {
        build_dirac_set(rat(1, 2)).expect("quarter-turn phase is exact")
    }

    pub fn r_inverse(&self) -> ExactMatrix {
        // R^2 = e^{2 i phi} * (-I), so R^{-1} = -e^{-2 i phi} R.
        let phase = exact_phase(&self.phase_phi).expect("validated at construction");
        let inv_sq = (phase.clone() * phase).inv().expect("unit phase");
        self.reflection.scale(&-inv_sq)
    }

    pub fn sigma_at(&self, mu: usize, nu: usize) -> ExactMatrix {
        match pair_index(mu, nu) {
            Some((k, 1)) => self.sigma[k].clone(),
            Some((k, _)) => self.sigma[k].neg(),
            None => ExactMatrix::zeros(4, 4),
        }
    }

    pub fn gamma5_sigma(&self, k: usize) -> ExactMatrix {
        self.gamma5.mat_mul(&self.sigma[k]).expect("4x4")
    }

    /// Check the full reflection-matrix property suite; all identities are
    /// exact. The hermiticity/involution subset holds only when
    /// e^{2 i phi} = -1.
    pub fn verify_reflection_properties(&self) -> Result<(), Error> {
        let r = &self.reflection;
        let rinv = self.r_inverse();
        let fail = |what: &str| Err(Error::Representation(format!("R property failed: {what}")));
        if r.transpose() != r.neg() {
            return fail("R^T = -R");
        }
        if rinv.mat_mul(r)? != ExactMatrix::identity(4) {
            return fail("R^{-1} R = I");
        }
        if r.conj_transpose() != *r {
            return fail("R^dagger = R");
        }
        if rinv != *r {
            return fail("R^{-1} = R");
        }
        if rinv.mat_mul(&self.gamma5)?.mat_mul(r)? != self.gamma5.transpose() {
            return fail("R^{-1} gamma5 R = gamma5^T");
        }
        for g in &self.gamma {
            if rinv.mat_mul(g)?.mat_mul(r)? != g.transpose().neg() {
                return fail("R^{-1} gamma R = -gamma^T");
            }
        }
        for s in &self.sigma {
            if rinv.mat_mul(s)?.mat_mul(r)? != s.transpose().neg() {
                return fail("R^{-1} sigma R = -sigma^T");
            }
        }
        Ok(())
    }
}

/// The 10 symmetric and 6 antisymmetric expansion matrices, plus the exact
/// duality relations gamma5 sigma_mn = c * sigma_kt that make the 16-matrix
/// generalized expansion overcomplete.
#[derive(Clone, Debug)]
pub struct SymmetricBasis {
    pub symmetric: Vec<ExactMatrix>,
    pub antisymmetric: Vec<ExactMatrix>,
    pub symmetric_labels: Vec<String>,
    pub antisymmetric_labels: Vec<String>,
    /// (pair k, partner pair, coefficient) with gamma5 sigma[k] R = c * sigma[partner] R.
    pub duality: Vec<(usize, usize, ExactScalar)>,
}

pub fn classify_matrix_basis(d: &DiracSet) -> Result<SymmetricBasis, Error> {
    let r = &d.reflection;
    let rinv = d.r_inverse();
    let mut symmetric = Vec::new();
    let mut symmetric_labels = Vec::new();
    for (mu, g) in d.gamma.iter().enumerate() {
        symmetric.push(g.mat_mul(r)?);
        symmetric_labels.push(format!("gamma{} R", mu + 1));
    }
    for (k, s) in d.sigma.iter().enumerate() {
        symmetric.push(s.mat_mul(r)?);
        let (m, n) = PAIRS[k];
        symmetric_labels.push(format!("sigma{m}{n} R"));
    }
    for m in &symmetric {
        if !m.is_symmetric() {
            return Err(Error::Representation("expansion matrix not symmetric".into()));
        }
    }
    let mut antisymmetric = vec![rinv.clone(), rinv.mat_mul(&d.gamma5)?];
    let mut antisymmetric_labels = vec!["R^-1".to_string(), "R^-1 gamma5".to_string()];
    for (mu, g) in d.gamma.iter().enumerate() {
        antisymmetric.push(rinv.mat_mul(&d.gamma5)?.mat_mul(g)?);
        antisymmetric_labels.push(format!("R^-1 gamma5 gamma{}", mu + 1));
    }
    for m in &antisymmetric {
        if !m.is_antisymmetric() {
            return Err(Error::Representation("contraction matrix not antisymmetric".into()));
        }
    }
    // Independence: vectorize and take exact ranks.
    let stack = |ms: &[ExactMatrix]| {
        ExactMatrix::from_fn(ms.len(), 16, |i, j| ms[i][(j / 4, j % 4)].clone())
    };
    if stack(&symmetric).rank() != 10 {
        return Err(Error::Representation("symmetric matrices not independent".into()));
    }
    if stack(&antisymmetric).rank() != 6 {
        return Err(Error::Representation("antisymmetric matrices not independent".into()));
    }
    // Duality: gamma5 sigma_mn is a scalar multiple of the complementary
    // sigma pair; exhaustive search over the six pairs.
    let mut duality = Vec::new();
    for k in 0..6 {
        let g5s = d.gamma5_sigma(k).mat_mul(r)?;
        let mut found = None;
        for t in 0..6 {
            let cand = d.sigma[t].mat_mul(r)?;
            if let Some(c) = proportionality(&g5s, &cand) {
                found = Some((k, t, c));
                break;
            }
        }
        duality.push(found.ok_or_else(|| {
            Error::Representation("gamma5 sigma R falls outside the sigma R span".into())
        })?);
    }
    Ok(SymmetricBasis {
        symmetric,
        antisymmetric,
        symmetric_labels,
        antisymmetric_labels,
        duality,
    })
}

/// If a = c * b for a single exact scalar c (b nonzero), return c.
pub fn proportionality(a: &ExactMatrix, b: &ExactMatrix) -> Option<ExactScalar> {
    if a.rows() != b.rows() || a.cols() != b.cols() || b.is_zero() {
        return None;
    }
    let mut ratio: Option<ExactScalar> = None;
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let (x, y) = (&a[(i, j)], &b[(i, j)]);
            match (x.is_zero(), y.is_zero()) {
                (true, true) => continue,
                (false, true) => return None,
                _ => {
                    let c = x.clone() / y.clone();
                    match &ratio {
                        None => ratio = Some(c),
                        Some(r) if *r == c => {}
                        _ => return None,
                    }
                }
            }
        }
    }
    ratio
}

/// Spectrum of the two-mass Dirac operator i gamma d + m1 + m2 gamma5: the
/// squared mass at which the momentum-space operator is singular, extracted
/// from the determinant polynomial rather than assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoMassSpectrum {
    pub mass_sq: BigRational,
    pub tachyonic: bool,
}

pub fn generalized_dirac_spectrum(
    m1: &BigRational,
    m2: &BigRational,
) -> Result<TwoMassSpectrum, Error> {
    use crate::poly::{det_poly, ExactPoly};
    let d = DiracSet::standard();
    // Momentum p = (q, 0, 0, 0): gamma d + m1 + m2 gamma5 becomes
    // i gamma_1 q + m1 + m2 gamma5, entries linear in q.
    let mat: Vec<Vec<ExactPoly>> = (0..4)
        .map(|r| {
            (0..4)
                .map(|c| {
                    let mut p = ExactPoly::new(vec![
                        ExactScalar::zero(),
                        ExactScalar::i() * d.gamma[0][(r, c)].clone(),
                    ]);
                    let mut con = ExactScalar::zero();
                    if r == c {
                        con += ExactScalar::from_rational(m1.clone());
                    }
                    con += ExactScalar::from_rational(m2.clone()) * d.gamma5[(r, c)].clone();
                    p = p.add(&ExactPoly::constant(con));
                    p
                })
                .collect()
        })
        .collect();
    let det = det_poly(&mat)?;
    // The determinant is a polynomial in q^2; singular where q^2 = -(M^2)
    // with M^2 the on-shell squared mass (p.p = q^2 = -M^2).
    for (k, c) in det.coeffs().iter().enumerate() {
        if k % 2 == 1 && !c.is_zero() {
            return Err(Error::Internal("determinant not even in q".into()));
        }
    }
    let even = ExactPoly::new(
        det.coeffs()
            .iter()
            .step_by(2)
            .cloned()
            .collect::<Vec<_>>(),
    );
    let report = crate::poly::rational_root_masses(&even)?;
    let root = report
        .rational_roots
        .first()
        .ok_or_else(|| Error::Internal("no rational singular point".into()))?;
    let mass_sq = -root.root.clone();
    let tachyonic = mass_sq.is_negative();
    Ok(TwoMassSpectrum { mass_sq, tachyonic })
}

/// Mass ratio m2/m1 = 1 + 3/(2 alpha) of the fixed-moment second state.
pub fn barut_mass_ratio(alpha: &BigRational) -> Result<BigRational, Error> {
    if alpha.is_zero() {
        return Err(Error::Degenerate("alpha must be nonzero".into()));
    }
    Ok(BigRational::from_integer(1.into()) + rat(3, 2) / alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clifford_algebra_holds() {
        let d = DiracSet::standard();
        for m in 0..4 {
            for n in 0..4 {
                let anti = d.gamma[m].anticommutator(&d.gamma[n]).unwrap();
                let expect = if m == n {
                    ExactMatrix::identity(4).scale(&ExactScalar::from_int(2))
                } else {
                    ExactMatrix::zeros(4, 4)
                };
                assert_eq!(anti, expect, "anticommutator ({m},{n})");
            }
        }
    }

    #[test]
    fn gamma5_is_diagonal() {
        let d = DiracSet::standard();
        for r in 0..4 {
            for c in 0..4 {
                if r != c {
                    assert!(d.gamma5[(r, c)].is_zero());
                }
            }
        }
        assert_eq!(
            d.gamma5.mat_mul(&d.gamma5).unwrap(),
            ExactMatrix::identity(4)
        );
    }

    #[test]
    fn reflection_property_suite() {
        DiracSet::standard().verify_reflection_properties().unwrap();
    }

    #[test]
    fn zero_phase_reflection_is_real_but_not_involutive() {
        let d = build_dirac_set(BigRational::zero()).unwrap();
        let r = &d.reflection;
        for i in 0..4 {
            for j in 0..4 {
                let e = &r[(i, j)];
                assert!(e.is_real());
                let v = e.re.clone();
                assert!(v == rat(0, 1) || v == rat(1, 1) || v == rat(-1, 1));
            }
        }
        // R^2 = -I at phi = 0; the hermitian-involutive phase is pi/2.
        assert_eq!(
            r.mat_mul(r).unwrap(),
            ExactMatrix::identity(4).scale(&ExactScalar::from_int(-1))
        );
        assert!(d.verify_reflection_properties().is_err());
        assert_eq!(
            DiracSet::standard()
                .reflection
                .mat_mul(&DiracSet::standard().reflection)
                .unwrap(),
            ExactMatrix::identity(4)
        );
    }

    #[test]
    fn sixteen_products_pass_symmetry_scan() {
        let d = DiracSet::standard();
        let r = &d.reflection;
        for g in &d.gamma {
            assert!(g.mat_mul(r).unwrap().is_symmetric());
        }
        for k in 0..6 {
            assert!(d.sigma[k].mat_mul(r).unwrap().is_symmetric());
            assert!(d.gamma5_sigma(k).mat_mul(r).unwrap().is_symmetric());
        }
    }

    #[test]
    fn basis_classification_counts() {
        let d = DiracSet::standard();
        let b = classify_matrix_basis(&d).unwrap();
        assert_eq!(b.symmetric.len(), 10);
        assert_eq!(b.antisymmetric.len(), 6);
        // sigma12 R symmetric, R^-1 gamma5 gamma1 antisymmetric.
        assert!(b.symmetric[4].is_symmetric());
        assert!(b.antisymmetric[2].is_antisymmetric());
        assert_eq!(b.duality.len(), 6);
        for &(k, t, ref c) in &b.duality {
            // Self-duality pairs complementary index pairs.
            let (a, b_) = PAIRS[k];
            let (x, y) = PAIRS[t];
            assert_eq!(epsilon4(a, b_, x, y).abs(), 1);
            assert!(!c.is_zero());
        }
    }

    #[test]
    fn two_mass_spectrum() {
        let five = BigRational::from_integer(5.into());
        let three = BigRational::from_integer(3.into());
        let s = generalized_dirac_spectrum(&five, &three).unwrap();
        assert_eq!(s.mass_sq, BigRational::from_integer(16.into()));
        assert!(!s.tachyonic);

        // Dirac limit m2 = 0.
        let s = generalized_dirac_spectrum(&five, &BigRational::zero()).unwrap();
        assert_eq!(s.mass_sq, BigRational::from_integer(25.into()));

        // Massless branch m1 = m2.
        let s = generalized_dirac_spectrum(&three, &three).unwrap();
        assert_eq!(s.mass_sq, BigRational::zero());

        // Tachyonic flag, not an error.
        let s = generalized_dirac_spectrum(&three, &five).unwrap();
        assert_eq!(s.mass_sq, BigRational::from_integer((-16).into()));
        assert!(s.tachyonic);
    }

    #[test]
    fn barut_ratio_values() {
        assert_eq!(barut_mass_ratio(&rat(1, 1)).unwrap(), rat(5, 2));
        assert_eq!(barut_mass_ratio(&rat(3, 2)).unwrap(), rat(2, 1));
        let muon = barut_mass_ratio(&rat(1, 137)).unwrap();
        assert_eq!(muon, rat(413, 2));
        assert!(barut_mass_ratio(&BigRational::zero()).is_err());
    }
}
