//! Polarization vectors of the 4-vector field in the standard and helicity
//! bases, exact Lorentz boosts, E/B field extraction, and the
//! antisymmetric-tensor ("notoph") potential.
//!
//! Conventions (recorded once):
//!   - Components are stored exactly; a vector's physical value is
//!     sqrt(scale2) * components, which keeps the ubiquitous 1/sqrt(2)
//!     factors out of the arithmetic.
//!   - Completeness holds bilinearly: sum_s eta_s e_mu(p,s) e_nu(p,-s)
//!     = delta_mn with eta = -1 for labels +-1 and 0_t, +1 for 0. It holds
//!     in both bases at every exact momentum, which also proves the two
//!     bases differ by a transformation orthogonal with respect to that
//!     pairing (the hermitian-unitary version fails off the rest frame
//!     because boosts are complex-orthogonal, not unitary).
//!   - Field extraction: F_mn = i(p_m e_n - p_n e_m), E_i = i F_{i4},
//!     B_i = -(1/2) eps_{ijk} F_{jk}; the E sign is pinned by the
//!     longitudinal result E(p,0) = (im/p) p.

use num::{BigRational, One, Signed, Zero};

use crate::matrix::ExactMatrix;
use crate::momentum::{rational_sqrt, FourMomentum};
use crate::scalar::{exact_phase, rat, ExactScalar};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Label {
    Plus,
    Minus,
    Zero,
    ZeroT,
}

impl Label {
    pub const ALL: [Label; 4] = [Label::Plus, Label::Minus, Label::Zero, Label::ZeroT];

    pub fn opposite(self) -> Label {
        match self {
            Label::Plus => Label::Minus,
            Label::Minus => Label::Plus,
            other => other,
        }
    }

    /// Sign entering the bilinear completeness sum.
    pub fn eta(self) -> i64 {
        match self {
            Label::Zero => 1,
            _ => -1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Label::Plus => "+1",
            Label::Minus => "-1",
            Label::Zero => "0",
            Label::ZeroT => "0_t",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    Standard,
    Helicity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizationVector {
    pub components: [ExactScalar; 4],
    /// Physical vector = sqrt(scale2) * components; scale2 is 1/2 for the
    /// transverse labels and 1 otherwise.
    pub scale2: BigRational,
    pub label: Label,
    pub basis: Basis,
    pub momentum: FourMomentum,
}

impl PolarizationVector {
    fn new(
        components: [ExactScalar; 4],
        scale2: BigRational,
        label: Label,
        basis: Basis,
        momentum: FourMomentum,
    ) -> Self {
        Self {
            components,
            scale2,
            label,
            basis,
            momentum,
        }
    }

    pub fn apply(&self, m: &ExactMatrix) -> Self {
        let mut out = self.clone();
        for (i, slot) in out.components.iter_mut().enumerate() {
            let mut acc = ExactScalar::zero();
            for j in 0..4 {
                acc += m[(i, j)].clone() * self.components[j].clone();
            }
            *slot = acc;
        }
        out
    }

    /// Parity image gamma_44 u(-p): spatial momentum flipped, time
    /// component negated.
    pub fn parity_image(&self, rebuild: impl Fn(&FourMomentum, Label) -> Result<Self, Error>) -> Result<Self, Error> {
        let flipped = self.momentum.negated();
        let mut v = rebuild(&flipped, self.label)?;
        v.components[3] = -v.components[3].clone();
        Ok(v)
    }

    /// Euclidean bilinear pairing on raw components; the physical pairing
    /// is this times sqrt(scale2 * other.scale2).
    pub fn bilinear(&self, other: &Self) -> ExactScalar {
        let mut acc = ExactScalar::zero();
        for k in 0..4 {
            acc += self.components[k].clone() * other.components[k].clone();
        }
        acc
    }

    pub fn to_f64(&self) -> [(f64, f64); 4] {
        let s = crate::scalar::rational_to_f64(&self.scale2).sqrt();
        let mut out = [(0.0, 0.0); 4];
        for k in 0..4 {
            let (re, im) = self.components[k].to_f64();
            out[k] = (re * s, im * s);
        }
        out
    }
}

/// The four printed rest-frame columns. The momentum slot carries the rest
/// momentum of the given mass.
pub fn rest_frame_basis(mass: i64) -> [PolarizationVector; 4] {
    let rest = FourMomentum::rest(mass);
    let z = ExactScalar::zero;
    let one = ExactScalar::one;
    let i = ExactScalar::i;
    let half = rat(1, 2);
    let mk = |comps, scale2, label| {
        PolarizationVector::new(comps, scale2, label, Basis::Standard, rest.clone())
    };
    [
        mk([-one(), -i(), z(), z()], half.clone(), Label::Plus),
        mk([one(), -i(), z(), z()], half, Label::Minus),
        mk([z(), z(), one(), z()], BigRational::one(), Label::Zero),
        mk([z(), z(), z(), i()], BigRational::one(), Label::ZeroT),
    ]
}

/// Exact boost with L_44 = E/m, L_i4 = -L_4i = i p_i/m,
/// L_ik = d_ik + p_i p_k / (m(E+m)); rational for every rational on-shell
/// momentum because gamma^2 - 1 = |p|^2/m^2.
pub fn boost_matrix(p: &FourMomentum) -> Result<ExactMatrix, Error> {
    if p.is_massless() {
        return Err(Error::Degenerate("boost undefined for massless momentum".into()));
    }
    let m = p.mass();
    let denom = m * &(p.energy() + m);
    Ok(ExactMatrix::from_fn(4, 4, |r, c| match (r, c) {
        (3, 3) => ExactScalar::from_rational(p.energy() / m),
        (i, 3) => ExactScalar::imaginary(&p.spatial()[i] / m),
        (3, k) => ExactScalar::imaginary(-(&p.spatial()[k] / m)),
        (i, k) => {
            let kron = if i == k {
                BigRational::one()
            } else {
                BigRational::zero()
            };
            ExactScalar::from_rational(kron + &p.spatial()[i] * &p.spatial()[k] / &denom)
        }
    }))
}

/// Boosted standard basis u(p, sigma) = L(p) e(0, sigma).
pub fn standard_basis(p: &FourMomentum) -> Result<[PolarizationVector; 4], Error> {
    let l = boost_matrix(p)?;
    // Mass of the rest basis is irrelevant to the components.
    let rest = rest_frame_basis(1);
    Ok(rest.map(|v| {
        let mut out = v.apply(&l);
        out.momentum = p.clone();
        out
    }))
}

/// The printed (J.p)/p matrix; requires |p| rational and nonzero.
pub fn helicity_operator(p: &FourMomentum) -> Result<ExactMatrix, Error> {
    let norm = p
        .spatial_norm()
        .ok_or_else(|| Error::Domain("|p| must be rational for the exact helicity operator".into()))?;
    if norm.is_zero() {
        return Err(Error::Degenerate("helicity direction undefined at p = 0".into()));
    }
    let [px, py, pz] = p.spatial().clone();
    let e = |r: BigRational| ExactScalar::imaginary(r / &norm);
    let z = ExactScalar::zero;
    Ok(ExactMatrix::from_fn(4, 4, |r, c| match (r, c) {
        (0, 1) => e(-pz.clone()),
        (1, 0) => e(pz.clone()),
        (0, 2) => e(py.clone()),
        (2, 0) => e(-py.clone()),
        (1, 2) => e(-px.clone()),
        (2, 1) => e(px.clone()),
        _ => z(),
    }))
}

/// Printed helicity eigenvectors; phases alpha, beta are rational
/// multiples of pi restricted to quarter turns. Falls back to the circular
/// combinations about z when p_x = p_y = 0 (the printed formulas are 0/0
/// there).
pub fn helicity_basis(
    p: &FourMomentum,
    alpha: &BigRational,
    beta: &BigRational,
) -> Result<[PolarizationVector; 4], Error> {
    let norm = p
        .spatial_norm()
        .ok_or_else(|| Error::Domain("|p| must be rational for exact helicity vectors".into()))?;
    if norm.is_zero() {
        return Err(Error::Degenerate("helicity direction undefined at p = 0".into()));
    }
    if p.is_massless() {
        return Err(Error::Degenerate(
            "the 0 and 0_t helicity states have no massless limit".into(),
        ));
    }
    let [px, py, pz] = p.spatial().clone();
    let q2 = &px * &px + &py * &py;
    let ephase_a = exact_phase(alpha)?;
    let ephase_b = exact_phase(beta)?;
    let half = rat(1, 2);
    let (plus, minus) = if q2.is_zero() {
        // Circular transverse combinations about z, with the sign of p_z
        // orienting the helicity; matches the q -> 0 limit along +z.
        let sgn = if pz.is_positive() {
            ExactScalar::one()
        } else {
            ExactScalar::from_int(-1)
        };
        let z = ExactScalar::zero;
        let i = ExactScalar::i;
        let plus = [
            -(sgn.clone() * ephase_a.clone()),
            -(ExactScalar::i() * ephase_a.clone()),
            z(),
            z(),
        ];
        let minus = [
            sgn * ephase_b.clone(),
            -(i() * ephase_b.clone()),
            z(),
            z(),
        ];
        (plus, minus)
    } else {
        let q = rational_sqrt(&q2).ok_or_else(|| {
            Error::Domain("transverse norm must be rational for exact helicity vectors".into())
        })?;
        let r = |v: BigRational| ExactScalar::from_rational(v);
        let im = |v: BigRational| ExactScalar::imaginary(v);
        let plus = [
            ephase_a.clone() * (r(-(&px * &pz) / (&q * &norm)) + im(&py / &q)),
            ephase_a.clone() * (r(-(&py * &pz) / (&q * &norm)) - im(&px / &q)),
            ephase_a.clone() * r(&q / &norm),
            ExactScalar::zero(),
        ];
        let minus = [
            ephase_b.clone() * (r((&px * &pz) / (&q * &norm)) + im(&py / &q)),
            ephase_b.clone() * (r((&py * &pz) / (&q * &norm)) - im(&px / &q)),
            ephase_b.clone() * r(-(&q / &norm)),
            ExactScalar::zero(),
        ];
        (plus, minus)
    };
    let m = p.mass();
    let e_over_p = p.energy() / &norm;
    let zero = [
        ExactScalar::from_rational(&e_over_p * &px / m),
        ExactScalar::from_rational(&e_over_p * &py / m),
        ExactScalar::from_rational(&e_over_p * &pz / m),
        ExactScalar::imaginary(&norm / m),
    ];
    let zero_t = [
        ExactScalar::from_rational(&px / m),
        ExactScalar::from_rational(&py / m),
        ExactScalar::from_rational(&pz / m),
        ExactScalar::imaginary(p.energy() / m),
    ];
    let mk = |comps, scale2, label| {
        PolarizationVector::new(comps, scale2, label, Basis::Helicity, p.clone())
    };
    Ok([
        mk(plus, half.clone(), Label::Plus),
        mk(minus, half, Label::Minus),
        mk(zero, BigRational::one(), Label::Zero),
        mk(zero_t, BigRational::one(), Label::ZeroT),
    ])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldStrengthPair {
    pub e: [ExactScalar; 3],
    pub b: [ExactScalar; 3],
    pub scale2: BigRational,
    pub label: Label,
}

/// E and B from the potential: F_mn = i(p_m e_n - p_n e_m), E_i = i F_{i4},
/// B_i = -(1/2) eps_{ijk} F_{jk}.
pub fn eb_from_potential(v: &PolarizationVector) -> FieldStrengthPair {
    let p4 = v.momentum.component(4);
    let pc = [
        v.momentum.component(1),
        v.momentum.component(2),
        v.momentum.component(3),
    ];
    let f = |mu: usize, nu: usize| -> ExactScalar {
        let pm = if mu == 3 { p4.clone() } else { pc[mu].clone() };
        let pn = if nu == 3 { p4.clone() } else { pc[nu].clone() };
        ExactScalar::i() * (pm * v.components[nu].clone() - pn * v.components[mu].clone())
    };
    let e = [
        ExactScalar::i() * f(0, 3),
        ExactScalar::i() * f(1, 3),
        ExactScalar::i() * f(2, 3),
    ];
    let b = [-f(1, 2), -f(2, 0), -f(0, 1)];
    FieldStrengthPair {
        e,
        b,
        scale2: v.scale2.clone(),
        label: v.label,
    }
}

/// The antisymmetric-tensor potential A(p) of the second, "longitudinal"
/// photon-like field: the printed matrix transcribed to the Euclidean index
/// order (time fourth, one factor -i per former time index). Equal to
/// i N^2 e1(p) /\ e2(p) with e1, e2 the boosted Cartesian transverse
/// vectors — asserted in tests.
pub fn notoph_tensor(p: &FourMomentum, n: &BigRational) -> Result<ExactMatrix, Error> {
    if p.is_massless() {
        return Err(Error::Degenerate("notoph potential has no naive massless limit".into()));
    }
    let m = p.mass();
    let [p1, p2, p3] = p.spatial().clone();
    let d = p.energy() + m;
    let q2 = &p1 * &p1 + &p2 * &p2;
    let pref = ExactScalar::imaginary(n * n / m);
    let mut a = ExactMatrix::zeros(4, 4);
    let r = ExactScalar::from_rational;
    // Spatial block.
    a[(0, 1)] = r(m + &q2 / &d);
    a[(0, 2)] = r(&p2 * &p3 / &d);
    a[(1, 2)] = r(-(&p1 * &p3) / &d);
    // Former time column (p2, -p1, 0), transcribed with a factor -i.
    a[(0, 3)] = ExactScalar::imaginary(-p2.clone());
    a[(1, 3)] = ExactScalar::imaginary(p1.clone());
    for i in 0..4 {
        for j in 0..i {
            a[(i, j)] = -a[(j, i)].clone();
        }
    }
    Ok(a.scale(&pref))
}

/// sum_s eta_s e_mu(p,s) e_nu(p,-s) over a full basis; the completeness
/// identity says this is the identity matrix.
pub fn bilinear_completeness(basis: &[PolarizationVector; 4]) -> ExactMatrix {
    let mut acc = ExactMatrix::zeros(4, 4);
    for v in basis {
        let partner = basis
            .iter()
            .find(|w| w.label == v.label.opposite())
            .expect("full basis");
        let eta = ExactScalar::from_int(v.label.eta());
        let s2 = ExactScalar::from_rational(v.scale2.clone());
        acc = acc
            + ExactMatrix::from_fn(4, 4, |m, n| {
                eta.clone()
                    * s2.clone()
                    * v.components[m].clone()
                    * partner.components[n].clone()
            });
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture() -> FourMomentum {
        // (3,4,12) with |p| = 13, m = 84, E = 85: every radical rational.
        FourMomentum::from_ints([3, 4, 12], 85).unwrap()
    }

    #[test]
    fn rest_columns_match_print() {
        let b = rest_frame_basis(1);
        assert_eq!(b[2].components, [
            ExactScalar::zero(),
            ExactScalar::zero(),
            ExactScalar::one(),
            ExactScalar::zero()
        ]);
        assert_eq!(b[3].components[3], ExactScalar::i());
        // Orthogonality of the transverse pair under the hermitian pairing.
        let mut dot = ExactScalar::zero();
        for k in 0..4 {
            dot += b[0].components[k].clone() * b[1].components[k].conj();
        }
        assert!(dot.is_zero());
    }

    #[test]
    fn boost_is_complex_orthogonal_and_trivial_at_rest() {
        let l = boost_matrix(&FourMomentum::rest(3)).unwrap();
        assert_eq!(l, ExactMatrix::identity(4));
        let l = boost_matrix(&fixture()).unwrap();
        assert_eq!(
            l.transpose().mat_mul(&l).unwrap(),
            ExactMatrix::identity(4)
        );
    }

    #[test]
    fn boosted_standard_columns_match_print() {
        // p = (0,0,4), m = 3, E = 5.
        let p = FourMomentum::from_ints([0, 0, 4], 5).unwrap();
        let u = standard_basis(&p).unwrap();
        // u(p,0) = (1/m)(p1 p3/(E+m), p2 p3/(E+m), m + p3^2/(E+m), -i p3).
        assert_eq!(u[2].components, [
            ExactScalar::zero(),
            ExactScalar::zero(),
            ExactScalar::from_rational(rat(3, 1) + rat(16, 8)) / ExactScalar::from_int(3),
            ExactScalar::imaginary(rat(-4, 3)),
        ]);
        // u(p,0_t) = (1/m)(-p1,-p2,-p3, iE).
        assert_eq!(u[3].components, [
            ExactScalar::zero(),
            ExactScalar::zero(),
            ExactScalar::imaginary(rat(1, 1)) * ExactScalar::imaginary(rat(4, 3)),
            ExactScalar::i() * ExactScalar::from_rational(rat(5, 3)),
        ]);
        // And the general fixture against the printed closed forms.
        let p = fixture();
        let u = standard_basis(&p).unwrap();
        let (m, e) = (rat(84, 1), rat(85, 1));
        let d = &e + &m;
        let pr = ExactScalar::new(rat(3, 1), rat(4, 1));
        let minus_i = -ExactScalar::i();
        // u(p,+1) = -(1/(sqrt2 m)) (m + p1 pr/d, im + p2 pr/d, p3 pr/d, -i pr).
        let expect = [
            -((ExactScalar::from_rational(m.clone())
                + ExactScalar::from_rational(rat(3, 1) / &d) * pr.clone())
                / ExactScalar::from_rational(m.clone())),
            -((ExactScalar::imaginary(m.clone())
                + ExactScalar::from_rational(rat(4, 1) / &d) * pr.clone())
                / ExactScalar::from_rational(m.clone())),
            -(ExactScalar::from_rational(rat(12, 1) / &d) * pr.clone()
                / ExactScalar::from_rational(m.clone())),
            -(minus_i * pr / ExactScalar::from_rational(m.clone())),
        ];
        assert_eq!(u[0].components, expect);
        assert_eq!(u[0].scale2, rat(1, 2));
    }

    #[test]
    fn parity_eigenvalues_standard() {
        let p = fixture();
        for (idx, v) in standard_basis(&p).unwrap().iter().enumerate() {
            let image = v
                .parity_image(|q, label| {
                    Ok(standard_basis(q).unwrap()[Label::ALL
                        .iter()
                        .position(|&l| l == label)
                        .unwrap()]
                    .clone())
                })
                .unwrap();
            let sign = if idx == 3 {
                ExactScalar::from_int(-1)
            } else {
                ExactScalar::one()
            };
            for k in 0..4 {
                assert_eq!(image.components[k], sign.clone() * v.components[k].clone());
            }
        }
    }

    #[test]
    fn helicity_operator_actions() {
        let p = fixture();
        let j = helicity_operator(&p).unwrap();
        let basis = helicity_basis(&p, &BigRational::zero(), &BigRational::zero()).unwrap();
        for v in &basis {
            let jv = v.apply(&j);
            let eig = match v.label {
                Label::Plus => ExactScalar::one(),
                Label::Minus => ExactScalar::from_int(-1),
                _ => ExactScalar::zero(),
            };
            for k in 0..4 {
                assert_eq!(jv.components[k], eig.clone() * v.components[k].clone());
            }
        }
        // z-aligned momentum exercises the printed 2x2 i-block.
        let pz = FourMomentum::from_ints([0, 0, 4], 5).unwrap();
        let j = helicity_operator(&pz).unwrap();
        assert_eq!(j[(0, 1)], -ExactScalar::i());
        assert_eq!(j[(1, 0)], ExactScalar::i());
        assert!(j[(2, 2)].is_zero());
        assert!(helicity_operator(&FourMomentum::rest(2)).is_err());
    }

    #[test]
    fn helicity_parity_relations() {
        let p = fixture();
        let zero = BigRational::zero();
        let basis = helicity_basis(&p, &zero, &zero).unwrap();
        let flipped = helicity_basis(&p.negated(), &zero, &zero).unwrap();
        // gamma44 e_{+1}(-p) is NOT +-e_{+1}(p)...
        let mut image = flipped[0].clone();
        image.components[3] = -image.components[3].clone();
        assert_ne!(image.components, basis[0].components);
        let negated = basis[0].components.clone().map(|c| -c);
        assert_ne!(image.components, negated);
        // ...but equals -e_{-1}(p): the cross-helicity parity relation.
        let cross = basis[1].components.clone().map(|c| -c);
        assert_eq!(image.components, cross);
        // gamma44 e_{0_t}(-p) = -e_{0_t}(p) holds.
        let mut image = flipped[3].clone();
        image.components[3] = -image.components[3].clone();
        let negated = basis[3].components.clone().map(|c| -c);
        assert_eq!(image.components, negated);
        // e_0 . e_{0_t} = 0 under the Euclidean bilinear pairing.
        assert!(basis[2].bilinear(&basis[3]).is_zero());
    }

    #[test]
    fn completeness_in_both_bases() {
        let p = fixture();
        let zero = BigRational::zero();
        let std = standard_basis(&p).unwrap();
        let hel = helicity_basis(&p, &zero, &zero).unwrap();
        assert_eq!(bilinear_completeness(&std), ExactMatrix::identity(4));
        assert_eq!(bilinear_completeness(&hel), ExactMatrix::identity(4));
        // Same at a second momentum.
        let p2 = FourMomentum::from_ints([0, 3, 4], 13).unwrap();
        let std = standard_basis(&p2).unwrap();
        assert_eq!(bilinear_completeness(&std), ExactMatrix::identity(4));
    }

    #[test]
    fn eb_longitudinal_pin() {
        let p = fixture();
        let zero = BigRational::zero();
        let basis = helicity_basis(&p, &zero, &zero).unwrap();
        let fields = eb_from_potential(&basis[2]);
        // E(p,0) = (im/p) p, B = 0.
        for (k, pk) in p.spatial().iter().enumerate() {
            assert_eq!(fields.e[k], ExactScalar::imaginary(rat(84, 13) * pk.clone()));
            assert!(fields.b[k].is_zero());
        }
    }

    #[test]
    fn eb_transverse_phase_pin() {
        let p = fixture();
        let zero = BigRational::zero();
        let basis = helicity_basis(&p, &zero, &zero).unwrap();
        let (norm, e) = (rat(13, 1), rat(85, 1));
        let q = rat(5, 1);
        let ptilde = [
            ExactScalar::from_rational(rat(4, 1)),
            ExactScalar::from_rational(rat(-3, 1)),
            ExactScalar::imaginary(-norm.clone()),
        ];
        let pvec = [rat(3, 1), rat(4, 1), rat(12, 1)];
        // lambda = +1: the printed fields carry the extra unit phase q/p_l
        // relative to the convention used here, so computed * q equals the
        // printed bracket times p_l; equivalently
        // E_k * q = -(iE pz/p) p_k - E ptilde_k and
        // B_k * q =  pz p_k - i p ptilde_k (1/sqrt2 tracked by scale2).
        let fields = eb_from_potential(&basis[0]);
        let qs = ExactScalar::from_rational(q);
        for k in 0..3 {
            let bracket_e = -(ExactScalar::imaginary(&e * rat(12, 1) / &norm)
                * ExactScalar::from_rational(pvec[k].clone())
                + ExactScalar::from_rational(e.clone()) * ptilde[k].clone());
            assert_eq!(fields.e[k].clone() * qs.clone(), bracket_e);
            let bracket_b = ExactScalar::from_rational(rat(12, 1) * pvec[k].clone())
                - ExactScalar::imaginary(norm.clone()) * ptilde[k].clone();
            assert_eq!(fields.b[k].clone() * qs.clone(), bracket_b);
        }
        // Zero vector in, zero fields out.
        let mut null = basis[0].clone();
        null.components = [
            ExactScalar::zero(),
            ExactScalar::zero(),
            ExactScalar::zero(),
            ExactScalar::zero(),
        ];
        let fields = eb_from_potential(&null);
        assert!(fields.e.iter().all(|c| c.is_zero()));
        assert!(fields.b.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn notoph_matches_wedge_and_print() {
        // p = (3,4,0), m = 12, E = 13: entry pin m + q^2/(E+m) = 13.
        let p = FourMomentum::from_ints([3, 4, 0], 13).unwrap();
        let one = BigRational::one();
        let a = notoph_tensor(&p, &one).unwrap();
        assert_eq!(a.transpose(), a.neg());
        assert_eq!(
            a[(0, 1)],
            ExactScalar::imaginary(rat(13, 12))
        );
        // Wedge construction from the boosted Cartesian transverse vectors.
        let l = boost_matrix(&p).unwrap();
        let e1 = l.column(0);
        let e2 = l.column(1);
        let wedge = ExactMatrix::from_fn(4, 4, |m, n| {
            e1[(m, 0)].clone() * e2[(n, 0)].clone() - e1[(n, 0)].clone() * e2[(m, 0)].clone()
        });
        let c = crate::spinor::proportionality(&a, &wedge).expect("proportional");
        assert_eq!(c, ExactScalar::i());
        assert!(notoph_tensor(&FourMomentum::from_ints([3, 4, 0], 5).unwrap(), &one).is_err());
    }

    #[test]
    fn z_axis_helicity_fallback() {
        let p = FourMomentum::from_ints([0, 0, 4], 5).unwrap();
        let zero = BigRational::zero();
        let basis = helicity_basis(&p, &zero, &zero).unwrap();
        let j = helicity_operator(&p).unwrap();
        for v in &basis {
            let jv = v.apply(&j);
            let eig = match v.label {
                Label::Plus => ExactScalar::one(),
                Label::Minus => ExactScalar::from_int(-1),
                _ => ExactScalar::zero(),
            };
            for k in 0..4 {
                assert_eq!(jv.components[k], eig.clone() * v.components[k].clone());
            }
        }
        assert_eq!(bilinear_completeness(&basis), ExactMatrix::identity(4));
    }

    #[test]
    fn massless_helicity_rejected() {
        let p = FourMomentum::from_ints([0, 3, 4], 5).unwrap();
        assert!(p.is_massless());
        let zero = BigRational::zero();
        assert!(helicity_basis(&p, &zero, &zero).is_err());
    }
}
