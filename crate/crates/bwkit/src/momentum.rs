//! On-shell four-momenta in the Euclidean convention.
//!
//! The whole crate uses index 4 as the time direction with p4 = iE, so the
//! invariant p.p = |p|^2 - E^2 equals -mass^2 on shell. Momenta are stored
//! as exact rationals; "Pythagorean" tuples (rational |p| and rational
//! transverse norm) make every radical in the polarization formulas
//! rational and keep those paths exact.

use num::{BigInt, BigRational, Signed, Zero};

use crate::scalar::ExactScalar;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourMomentum {
    p: [BigRational; 3],
    energy: BigRational,
    mass: BigRational,
}

/// Exact square root of a rational, when it is a perfect square.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let sqrt_of = |n: &BigInt| -> Option<BigInt> {
        let s = n.sqrt();
        (&s * &s == *n).then_some(s)
    };
    Some(BigRational::new(sqrt_of(r.numer())?, sqrt_of(r.denom())?))
}

impl FourMomentum {
    /// Construct from spatial momentum and energy; the mass is derived and
    /// must be a rational square root of E^2 - |p|^2.
    pub fn from_energy(p: [BigRational; 3], energy: BigRational) -> Result<Self, Error> {
        let m2 = &energy * &energy - p.iter().map(|c| c * c).sum::<BigRational>();
        if m2.is_negative() {
            return Err(Error::Domain("spacelike momentum: E^2 < |p|^2".into()));
        }
        let mass = rational_sqrt(&m2)
            .ok_or_else(|| Error::Domain("E^2 - |p|^2 is not a rational square".into()))?;
        Ok(Self { p, energy, mass })
    }

    /// Construct from spatial momentum and mass; E must come out rational.
    pub fn from_mass(p: [BigRational; 3], mass: BigRational) -> Result<Self, Error> {
        let e2 = &mass * &mass + p.iter().map(|c| c * c).sum::<BigRational>();
        let energy = rational_sqrt(&e2)
            .ok_or_else(|| Error::Domain("m^2 + |p|^2 is not a rational square".into()))?;
        Ok(Self { p, energy, mass })
    }

    pub fn from_ints(p: [i64; 3], energy: i64) -> Result<Self, Error> {
        Self::from_energy(
            [
                BigRational::from_integer(p[0].into()),
                BigRational::from_integer(p[1].into()),
                BigRational::from_integer(p[2].into()),
            ],
            BigRational::from_integer(energy.into()),
        )
    }

    pub fn rest(mass: i64) -> Self {
        Self::from_ints([0, 0, 0], mass).expect("rest frame is always on shell")
    }

    pub fn spatial(&self) -> &[BigRational; 3] {
        &self.p
    }

    pub fn energy(&self) -> &BigRational {
        &self.energy
    }

    pub fn mass(&self) -> &BigRational {
        &self.mass
    }

    pub fn is_massless(&self) -> bool {
        self.mass.is_zero()
    }

    pub fn is_at_rest(&self) -> bool {
        self.p.iter().all(|c| c.is_zero())
    }

    /// Euclidean component p_mu for mu in 1..=4; p4 = iE.
    pub fn component(&self, mu: usize) -> ExactScalar {
        match mu {
            1..=3 => ExactScalar::from_rational(self.p[mu - 1].clone()),
            4 => ExactScalar::imaginary(self.energy.clone()),
            _ => panic!("four-momentum index {mu} out of range 1..=4"),
        }
    }

    /// The invariant p.p = |p|^2 - E^2 (equals -m^2 on shell).
    pub fn p_dot_p(&self) -> BigRational {
        self.p.iter().map(|c| c * c).sum::<BigRational>() - &self.energy * &self.energy
    }

    pub fn spatial_norm_sq(&self) -> BigRational {
        self.p.iter().map(|c| c * c).sum()
    }

    /// |p| when rational; polarization formulas need it exactly.
    pub fn spatial_norm(&self) -> Option<BigRational> {
        rational_sqrt(&self.spatial_norm_sq())
    }

    /// sqrt(px^2 + py^2) when rational.
    pub fn transverse_norm(&self) -> Option<BigRational> {
        rational_sqrt(&(&self.p[0] * &self.p[0] + &self.p[1] * &self.p[1]))
    }

    pub fn negated(&self) -> Self {
        Self {
            p: [-self.p[0].clone(), -self.p[1].clone(), -self.p[2].clone()],
            energy: self.energy.clone(),
            mass: self.mass.clone(),
        }
    }

    pub fn to_f64(&self) -> [f64; 4] {
        [
            crate::scalar::rational_to_f64(&self.p[0]),
            crate::scalar::rational_to_f64(&self.p[1]),
            crate::scalar::rational_to_f64(&self.p[2]),
            crate::scalar::rational_to_f64(&self.energy),
        ]
    }
}

/// Deterministic stream of exact on-shell momenta with rational |p| and
/// rational transverse norm, for exhaustive exact testing.
///
/// Spatial parts are integer multiples of Pythagorean quadruples
/// (a,b,c; d) with a^2+b^2 rational-normed, and (E - m)(E + m) = |p|^2 is
/// split rationally.
pub fn pythagorean_momenta(count: usize) -> Vec<FourMomentum> {
    // Quadruples (a, b, c) with a^2+b^2 and a^2+b^2+c^2 perfect squares.
    const QUADS: [[i64; 3]; 6] = [
        [0, 0, 1],
        [3, 4, 12],
        [0, 3, 4],
        [6, 8, 24],
        [4, 3, 0],
        [12, 16, 21],
    ];
    let mut out = Vec::new();
    let mut k = 0usize;
    while out.len() < count {
        let q = QUADS[k % QUADS.len()];
        let scale = 1 + (k / QUADS.len()) as i64;
        let p = [q[0] * scale, q[1] * scale, q[2] * scale];
        let d2 = p.iter().map(|x| x * x).sum::<i64>();
        // E - m = u, E + m = d2/u with u = 1 gives rational E, m.
        let e = BigRational::new(BigInt::from(d2 + 1), BigInt::from(2));
        let pr = [
            BigRational::from_integer(p[0].into()),
            BigRational::from_integer(p[1].into()),
            BigRational::from_integer(p[2].into()),
        ];
        if let Ok(m) = FourMomentum::from_energy(pr, e) {
            if !m.is_massless() {
                out.push(m);
            }
        }
        k += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn on_shell_enforced() {
        let p = FourMomentum::from_ints([0, 0, 4], 5).unwrap();
        assert_eq!(p.mass(), &BigRational::from_integer(3.into()));
        assert!(FourMomentum::from_ints([0, 0, 4], 3).is_err());
        assert!(FourMomentum::from_ints([0, 0, 4], 6).is_err());
    }

    #[test]
    fn p4_is_imaginary_energy() {
        let p = FourMomentum::from_ints([0, 0, 4], 5).unwrap();
        assert_eq!(p.component(4), ExactScalar::imaginary(BigRational::from_integer(5.into())));
        assert_eq!(p.component(3), ExactScalar::from_int(4));
    }

    #[test]
    fn invariant_matches_mass() {
        let p = FourMomentum::from_ints([3, 4, 12], 85).unwrap();
        assert_eq!(p.mass(), &BigRational::from_integer(84.into()));
        assert_eq!(p.p_dot_p(), -(p.mass() * p.mass()));
    }

    #[test]
    fn generator_produces_exact_tuples() {
        for p in pythagorean_momenta(20) {
            assert!(p.spatial_norm().is_some());
            assert!(p.transverse_norm().is_some());
            assert!(!p.is_massless());
        }
    }
}
