//! Spin-1 systems built from coupled pairs of Dirac conditions on a rank-2
//! multispinor, together with their reductions to Proca-type field equations.
//!
//! A 4x4 matrix field `Psi` subject to
//!
//! ```text
//!   K1 Psi      = 0        (first index)
//!   Psi K2^T    = 0        (second index)
//! ```
//!
//! is expanded over the sixteen matrices `gamma_mu R`, `sigma_mn R` (the
//! symmetric block) and `gamma5 gamma_mu R`, `R`, `gamma5 R` (the
//! antisymmetric block). The expansion coefficients are the physical fields:
//! a vector potential `A`, an antisymmetric tensor `F`, an axial potential
//! `At` and two scalars `phi`, `phit`. In momentum space each matrix
//! condition becomes a 32-row exact linear system over those coefficients.
//!
//! Transcription conventions used throughout this module (all verified
//! against the assembled spinor systems by exact nullspace annihilation):
//!
//! * the Dirac operator `i gamma d + mass` becomes `i gamma.p + mass` with
//!   `p_4 = iE`, so a squared derivative becomes `w = p.p = |p|^2 - E^2`;
//! * field-level relations carry the same momentum components (`p_4 = iE`):
//!   curl-type rows read `p /\ A + mass F = 0` and divergence-type rows
//!   read `p.F - mass A = 0`. The relative sign between the two is a fixed
//!   property of this index-4 convention, not a free choice;
//! * tensor coefficients are stored once per index pair, which doubles them
//!   relative to a sum over both index orders;
//! * dual tensors act through the exact constants `gamma5 sigma_k R =
//!   c_k sigma_partner(k) R` rather than through a hand-written epsilon sum.

use num::{BigRational, One, Signed, Zero};

use crate::matrix::{ConstraintSystem, ExactMatrix};
use crate::momentum::FourMomentum;
use crate::poly::{det_poly, ExactPoly};
use crate::scalar::ExactScalar;
use crate::spinor::{classify_matrix_basis, DiracSet, SymmetricBasis, PAIRS};
use crate::Error;

/// Sign of the mass term in the underlying Dirac conditions. Both appear in
/// practice; the two systems differ exactly by the relabeling m -> -m.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MassSign {
    Plus,
    Minus,
}

impl MassSign {
    fn apply(&self, m: &BigRational) -> BigRational {
        match self {
            MassSign::Plus => m.clone(),
            MassSign::Minus => -m.clone(),
        }
    }
}

/// A labeled linear identity over the unknowns of a [`MomentumSystem`],
/// together with the result of the exact row-space membership check.
#[derive(Clone, Debug)]
pub struct DerivedRelation {
    pub label: String,
    /// 1 x n coefficient row over the system unknowns.
    pub row: ExactMatrix,
    pub in_row_space: bool,
}

/// A momentum-space constraint system plus the field-level identities that
/// were derived from it.
#[derive(Clone, Debug)]
pub struct MomentumSystem {
    pub momentum: FourMomentum,
    pub system: ConstraintSystem,
    pub derived_relations: Vec<DerivedRelation>,
}

impl MomentumSystem {
    pub fn all_relations_in_row_space(&self) -> bool {
        self.derived_relations.iter().all(|r| r.in_row_space)
    }
}

/// `i gamma.p + scalar I + pseudo gamma5` in the spinorial representation.
pub fn momentum_dirac_operator(
    d: &DiracSet,
    p: &FourMomentum,
    scalar: &ExactScalar,
    pseudo: &ExactScalar,
) -> Result<ExactMatrix, Error> {
    let mut op = ExactMatrix::identity(4).scale(scalar);
    op = op + d.gamma5.scale(pseudo);
    for mu in 1..=4 {
        let coeff = ExactScalar::i() * p.component(mu);
        op = op + d.gamma[mu - 1].scale(&coeff);
    }
    Ok(op)
}

/// Coefficient matrix of the coupled pair `K1 Psi = 0`, `Psi K2^T = 0` over
/// the given expansion matrices: 32 scalar equations per column.
fn assemble_system(
    k1: &ExactMatrix,
    k2: &ExactMatrix,
    columns: &[ExactMatrix],
) -> Result<ExactMatrix, Error> {
    let n = columns.len();
    let k2t = k2.transpose();
    let mut cols = Vec::with_capacity(n);
    for m in columns {
        let left = k1.mat_mul(m)?;
        let right = m.mat_mul(&k2t)?;
        cols.push((left, right));
    }
    Ok(ExactMatrix::from_fn(32, n, |r, j| {
        let (left, right) = &cols[j];
        if r < 16 {
            left[(r / 4, r % 4)].clone()
        } else {
            let rr = r - 16;
            right[(rr / 4, rr % 4)].clone()
        }
    }))
}


fn field_labels() -> Vec<String> {
    let mut labels: Vec<String> = (1..=4).map(|mu| format!("A_{mu}")).collect();
    for (m, n) in PAIRS {
        labels.push(format!("F_{m}{n}"));
    }
    labels
}

fn row(n: usize, entries: &[(usize, ExactScalar)]) -> ExactMatrix {
    let mut r = ExactMatrix::zeros(1, n);
    for (j, v) in entries {
        let cur = r[(0, *j)].clone();
        r.set(0, *j, cur + v.clone());
    }
    r
}

/// Index of the pair `(m, n)` (1-based, either order) in [`PAIRS`], with the
/// antisymmetry sign for the stored orientation.
fn pair_slot(m: usize, n: usize) -> (usize, ExactScalar) {
    let (lo, hi, sign) = if m < n { (m, n, 1) } else { (n, m, -1) };
    let k = PAIRS.iter().position(|&(a, b)| (a, b) == (lo, hi)).unwrap();
    (k, ExactScalar::from_int(sign))
}

/// The coupled symmetric-multispinor system for a single mass: unknowns
/// `(A_mu, F_mn)`, ten in total. On shell the nullspace is the spin-1
/// triplet; off shell it is trivial.
pub fn bw_system_spin1(
    p: &FourMomentum,
    m: &BigRational,
    sign: MassSign,
) -> Result<MomentumSystem, Error> {
    let d = DiracSet::standard();
    let basis = classify_matrix_basis(&d)?;
    let mass = ExactScalar::from_rational(sign.apply(m));
    let k = momentum_dirac_operator(&d, p, &mass, &ExactScalar::zero())?;
    let matrix = assemble_system(&k, &k, &basis.symmetric)?;

    let mut relations = Vec::new();
    // Curl rows: p /\ A + mass F = 0, one per index pair.
    for (idx, (mu, nu)) in PAIRS.iter().enumerate() {
        let r = row(
            10,
            &[
                (nu - 1, p.component(*mu)),
                (mu - 1, -p.component(*nu)),
                (4 + idx, mass.clone()),
            ],
        );
        relations.push(("curl".to_string(), format!("p/\\A + m F [{mu}{nu}]"), r));
    }
    // Divergence rows: p.F - mass A = 0, one per vector index.
    for lam in 1..=4 {
        let mut entries = vec![(lam - 1, -mass.clone())];
        for mu in 1..=4 {
            if mu != lam {
                let (k, s) = pair_slot(mu, lam);
                entries.push((4 + k, p.component(mu) * s));
            }
        }
        relations.push((
            "div".to_string(),
            format!("p.F - m A [{lam}]"),
            row(10, &entries),
        ));
    }
    // Transversality: p.A = 0.
    let lorenz = row(
        10,
        &(1..=4)
            .map(|mu| (mu - 1, p.component(mu)))
            .collect::<Vec<_>>(),
    );
    relations.push(("constraint".to_string(), "p.A".to_string(), lorenz));

    let basis_rows = matrix.row_basis();
    let derived_relations = relations
        .into_iter()
        .map(|(_, label, r)| {
            let in_row_space = basis_rows.contains(&r)?;
            Ok(DerivedRelation {
                label,
                row: r,
                in_row_space,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;

    Ok(MomentumSystem {
        momentum: p.clone(),
        system: ConstraintSystem::solve(matrix, field_labels()),
        derived_relations,
    })
}

/// Outcome of reducing the four-coefficient expansion to Proca-type
/// equations and constraints.
#[derive(Clone, Debug)]
pub struct ProcaReport {
    pub momentum: FourMomentum,
    pub coefficients: [BigRational; 4],
    pub system: ConstraintSystem,
    /// Curl-type Proca pair rows, one per tensor pair.
    pub proca_curl_in_row_space: bool,
    /// Divergence-type Proca pair rows, one per vector index.
    pub proca_div_in_row_space: bool,
    /// `m c_a p.A + c_f p.F = 0`..
    pub subtraction_in_row_space: bool,
    /// The dual-sector subtraction constraint, one row per vector index.
    pub dual_subtraction_in_row_space: bool,
    /// Whether the `A -> 2mA` rescaled system keeps the same memberships.
    pub rescaled_in_row_space: bool,
    /// Whether substituting `F_mu = m A_mu` and dual(F) = i m A_tensor turns
    /// every subtraction constraint into a transversality condition.
    pub suggestion_consistent: bool,
}

fn dual_partners(basis: &SymmetricBasis) -> Vec<(usize, ExactScalar)> {
    let mut map = vec![(0usize, ExactScalar::zero()); 6];
    for (k, partner, c) in &basis.duality {
        map[*k] = (*partner, c.clone());
    }
    map
}

/// Membership checks for the Proca-type reduction of the weighted expansion
/// `Psi = (gamma R)(c_a m A + c_f Fv) + c_A m (gamma5 sigma R) At2 +
/// c_F (sigma R) F2` against the single-mass pair with the `-m` sign.
///
/// Unknown order: `A_mu` (4), `Fv_mu` (4), `At2_mn` (6), `F2_mn` (6).
pub fn proca_reduction_check(
    p: &FourMomentum,
    m: &BigRational,
    coefficients: &[BigRational; 4],
) -> Result<ProcaReport, Error> {
    let d = DiracSet::standard();
    let basis = classify_matrix_basis(&d)?;
    let duality = dual_partners(&basis);
    let [ca, cf, c_a2, c_f2] = coefficients.clone();
    let two = BigRational::from_integer(2.into());

    let mass = ExactScalar::from_rational(-m.clone());
    let k = momentum_dirac_operator(&d, p, &mass, &ExactScalar::zero())?;

    let mut columns = Vec::with_capacity(20);
    let mut labels = Vec::with_capacity(20);
    for mu in 1..=4 {
        columns.push(basis.symmetric[mu - 1].scale(&ExactScalar::from_rational(ca.clone() * m)));
        labels.push(format!("A_{mu}"));
    }
    for mu in 1..=4 {
        columns.push(basis.symmetric[mu - 1].scale(&ExactScalar::from_rational(cf.clone())));
        labels.push(format!("Fv_{mu}"));
    }
    for (k_idx, (mu, nu)) in PAIRS.iter().enumerate() {
        let g5s = d.gamma5_sigma(k_idx).mat_mul(&d.reflection)?;
        columns.push(g5s.scale(&ExactScalar::from_rational(two.clone() * &c_a2 * m)));
        labels.push(format!("At2_{mu}{nu}"));
    }
    for (k_idx, (mu, nu)) in PAIRS.iter().enumerate() {
        columns.push(
            basis.symmetric[4 + k_idx].scale(&ExactScalar::from_rational(two.clone() * &c_f2)),
        );
        labels.push(format!("F2_{mu}{nu}"));
    }
    let matrix = assemble_system(&k, &k, &columns)?;

    let n = 20;
    let m_s = ExactScalar::from_rational(m.clone());
    let ca_s = ExactScalar::from_rational(ca.clone());
    let cf_s = ExactScalar::from_rational(cf.clone());
    let ca2_s = ExactScalar::from_rational(c_a2.clone());
    let cf2_s = ExactScalar::from_rational(c_f2.clone());
    let two_s = ExactScalar::from_int(2);

    // Effective tensor slot: coefficient of sigma_k R in the expansion is
    // 2 c_F F2[k] + 2 c_A m c_j At2[j] summed over j with partner(j) = k.
    let teff = |k_idx: usize, coeff: &ExactScalar| -> Vec<(usize, ExactScalar)> {
        let mut out = vec![(14 + k_idx, coeff.clone() * two_s.clone() * cf2_s.clone())];
        for (j, (partner, c)) in duality.iter().enumerate() {
            if *partner == k_idx {
                out.push((
                    8 + j,
                    coeff.clone() * two_s.clone() * ca2_s.clone() * m_s.clone() * c.clone(),
                ));
            }
        }
        out
    };
    // Dual-sector slot: coefficient of gamma5 sigma_k R is
    // 2 c_A m At2[k] + 2 c_F c_j F2[j] over j with partner(j) = k.
    let beff = |k_idx: usize, coeff: &ExactScalar| -> Vec<(usize, ExactScalar)> {
        let mut out = vec![(
            8 + k_idx,
            coeff.clone() * two_s.clone() * ca2_s.clone() * m_s.clone(),
        )];
        for (j, (partner, c)) in duality.iter().enumerate() {
            if *partner == k_idx {
                out.push((14 + j, coeff.clone() * two_s.clone() * cf2_s.clone() * c.clone()));
            }
        }
        out
    };

    let basis_rows = matrix.row_basis();
    // Curl pair: p /\ (c_a m A + c_f Fv) - m Teff = 0.
    let mut curl_ok = true;
    for (idx, (mu, nu)) in PAIRS.iter().enumerate() {
        let qmu = p.component(*mu);
        let qnu = p.component(*nu);
        let mut entries = vec![
            (nu - 1, qmu.clone() * ca_s.clone() * m_s.clone()),
            (mu - 1, -(qnu.clone() * ca_s.clone() * m_s.clone())),
            (4 + nu - 1, qmu * cf_s.clone()),
            (4 + mu - 1, -(qnu * cf_s.clone())),
        ];
        entries.extend(teff(idx, &(-m_s.clone())));
        curl_ok &= basis_rows.contains(&row(n, &entries))?;
    }

    // Divergence pair: p.Teff + m (c_a m A + c_f Fv) = 0.
    let mut div_ok = true;
    for lam in 1..=4 {
        let mut entries = vec![
            (lam - 1, m_s.clone() * ca_s.clone() * m_s.clone()),
            (4 + lam - 1, m_s.clone() * cf_s.clone()),
        ];
        for mu in 1..=4 {
            if mu != lam {
                let (k_idx, s) = pair_slot(mu, lam);
                entries.extend(teff(k_idx, &(p.component(mu) * s)));
            }
        }
        div_ok &= basis_rows.contains(&row(n, &entries))?;
    }

    // Subtraction constraint: p.(c_a m A + c_f Fv) = 0.
    let mut entries = Vec::new();
    for mu in 1..=4 {
        let q = p.component(mu);
        entries.push((mu - 1, q.clone() * ca_s.clone() * m_s.clone()));
        entries.push((4 + mu - 1, q * cf_s.clone()));
    }
    let sub_row = row(n, &entries);
    let sub_ok = basis_rows.contains(&sub_row)?;

    // Dual subtraction constraint: p.Beff = 0 per vector index.
    let mut dual_ok = true;
    let mut dual_rows = Vec::new();
    for lam in 1..=4 {
        let mut entries = Vec::new();
        for mu in 1..=4 {
            if mu != lam {
                let (k_idx, s) = pair_slot(mu, lam);
                entries.extend(beff(k_idx, &(p.component(mu) * s)));
            }
        }
        let r = row(n, &entries);
        dual_ok &= basis_rows.contains(&r)?;
        dual_rows.push(r);
    }

    // Rescaling A -> 2mA: column-scale both the system and the relation rows
    // and re-check memberships (the textbook normalization).
    let rescale = |mat: &ExactMatrix| -> ExactMatrix {
        ExactMatrix::from_fn(mat.rows(), mat.cols(), |i, j| {
            if j < 4 {
                mat[(i, j)].clone() * ExactScalar::from_rational(two.clone() * m)
            } else {
                mat[(i, j)].clone()
            }
        })
    };
    let rescaled = rescale(&matrix);
    let rescaled_ok = rescaled.row_space_contains(&rescale(&sub_row))?;

    // Substitute Fv = m A and dual(F2) = i m At2, i.e. F2[j] =
    // i m At2[partner(j)] / c_j, into the subtraction constraints; the
    // composites must be spanned by plain transversality rows.
    let mut subst = ExactMatrix::zeros(n, 10);
    for mu in 0..4 {
        subst.set(mu, mu, ExactScalar::one());
        subst.set(4 + mu, mu, m_s.clone());
    }
    for (j, (partner, c)) in duality.iter().enumerate() {
        subst.set(8 + j, 4 + j, ExactScalar::one());
        let inv = c.inv().ok_or_else(|| Error::Internal("zero duality constant".into()))?;
        subst.set(14 + j, 4 + partner, ExactScalar::i() * m_s.clone() * inv);
    }
    let mut trans_rows = ExactMatrix::zeros(5, 10);
    for mu in 1..=4 {
        trans_rows.set(0, mu - 1, p.component(mu));
    }
    for lam in 1..=4 {
        for mu in 1..=4 {
            if mu != lam {
                let (k_idx, s) = pair_slot(mu, lam);
                trans_rows.set(lam, 4 + k_idx, p.component(mu) * s);
            }
        }
    }
    let trans_basis = trans_rows.row_basis();
    let mut suggestion_ok = true;
    for r in std::iter::once(&sub_row).chain(dual_rows.iter()) {
        let reduced = r.mat_mul(&subst)?;
        suggestion_ok &= trans_basis.contains(&reduced)?;
    }

    Ok(ProcaReport {
        momentum: p.clone(),
        coefficients: coefficients.clone(),
        system: ConstraintSystem::solve(matrix, labels),
        proca_curl_in_row_space: curl_ok,
        proca_div_in_row_space: div_ok,
        subtraction_in_row_space: sub_ok,
        dual_subtraction_in_row_space: dual_ok,
        rescaled_in_row_space: rescaled_ok,
        suggestion_consistent: suggestion_ok,
    })
}

/// Which block the ambiguous scalar constraint is counted in; the row itself
/// is identical, only the sector bookkeeping differs between the readings.
#[derive(Clone, Debug)]
pub struct ConstraintGrouping {
    pub name: String,
    pub spin1_labels: Vec<String>,
    pub spin0_labels: Vec<String>,
}

/// The coupled system for the operator family
/// `i gamma.p + (a - b w) +- gamma5 (c - d w)` with `w = p.p`, over all
/// sixteen expansion coefficients `(A, F, At, phi, phit)`.
#[derive(Clone, Debug)]
pub struct GeneralizedSystem {
    pub momentum: FourMomentum,
    pub params: [BigRational; 4],
    /// `a - b p.p`.
    pub scalar_coef: BigRational,
    /// `c - d p.p`.
    pub pseudo_coef: BigRational,
    pub system: ConstraintSystem,
    pub derived_relations: Vec<DerivedRelation>,
    /// Cross-sector coupling entries of the field equations: the `At`
    /// coefficients of the divergence rows and the `A` coefficients of the
    /// axial-vector rows. Zero iff the two spin sectors decouple.
    pub coupling: ExactMatrix,
    pub decoupled: bool,
    /// Whether the closed-form second-order tensor rows (potentials
    /// eliminated) lie in the system row space.
    pub ast_rows_in_row_space: bool,
    /// Whether eliminating the non-tensor columns of the field relations
    /// reproduces exactly the closed-form tensor rows.
    pub schur_matches: bool,
    pub groupings: [ConstraintGrouping; 2],
}

impl GeneralizedSystem {
    /// The 32 x 10 restriction to the symmetric (vector/tensor) columns.
    pub fn symmetric_block(&self) -> ExactMatrix {
        ExactMatrix::from_fn(32, 10, |i, j| self.system.matrix[(i, j)].clone())
    }
}

fn generalized_labels() -> Vec<String> {
    let mut labels = field_labels();
    labels.extend((1..=4).map(|mu| format!("At_{mu}")));
    labels.push("phi".to_string());
    labels.push("phit".to_string());
    labels
}

pub fn generalized_abcd_system(
    p: &FourMomentum,
    params: &[BigRational; 4],
) -> Result<GeneralizedSystem, Error> {
    let d = DiracSet::standard();
    let basis = classify_matrix_basis(&d)?;
    let [a, b, c, dd] = params.clone();
    let w = p.p_dot_p();
    let alpha = a - &b * &w;
    let gamma_c = c - &dd * &w;
    let al = ExactScalar::from_rational(alpha.clone());
    let ga = ExactScalar::from_rational(gamma_c.clone());

    let k1 = momentum_dirac_operator(&d, p, &al, &ga)?;
    let k2 = momentum_dirac_operator(&d, p, &al, &(-ga.clone()))?;

    let mut columns = basis.symmetric.clone();
    for mu in 0..4 {
        columns.push(d.gamma5.mat_mul(&d.gamma[mu])?.mat_mul(&d.reflection)?);
    }
    columns.push(d.reflection.clone());
    columns.push(d.gamma5.mat_mul(&d.reflection)?);
    let matrix = assemble_system(&k1, &k2, &columns)?;

    let n = 16;
    let q = |mu: usize| p.component(mu);
    let mut tagged: Vec<(&str, String, ExactMatrix)> = Vec::new();

    // Spin-1 sector.
    for (idx, (mu, nu)) in PAIRS.iter().enumerate() {
        let r = row(
            n,
            &[
                (nu - 1, q(*mu)),
                (mu - 1, -q(*nu)),
                (4 + idx, al.clone()),
            ],
        );
        tagged.push(("spin1", format!("p/\\A + alpha F [{mu}{nu}]"), r));
    }
    for lam in 1..=4 {
        let mut entries = vec![(lam - 1, -al.clone()), (10 + lam - 1, -ga.clone())];
        for mu in 1..=4 {
            if mu != lam {
                let (k_idx, s) = pair_slot(mu, lam);
                entries.push((4 + k_idx, q(mu) * s));
            }
        }
        tagged.push(("spin1", format!("p.F - alpha A - gamma At [{lam}]"), row(n, &entries)));
    }
    let mut entries: Vec<(usize, ExactScalar)> =
        (1..=4).map(|mu| (mu - 1, q(mu))).collect();
    entries.push((15, -(ExactScalar::i() * ga.clone())));
    tagged.push(("spin1", "p.A - i gamma phit".to_string(), row(n, &entries)));
    for tau in 1..=4 {
        let mut entries = Vec::new();
        for mu in 1..=4 {
            for lam in 1..=4 {
                for kap in 1..=4 {
                    let e = crate::spinor::epsilon4(mu, lam, kap, tau);
                    if e != 0 && lam != kap {
                        let (k_idx, s) = pair_slot(lam, kap);
                        entries.push((4 + k_idx, q(mu) * s * ExactScalar::from_int(e)));
                    }
                }
            }
        }
        tagged.push(("spin1", format!("eps p F [{tau}]"), row(n, &entries)));
    }
    // The ambiguous scalar constraint; block assignment differs by reading.
    tagged.push(("ambiguous", "gamma phi".to_string(), row(n, &[(14, ga.clone())])));

    // Spin-0 sector.
    tagged.push(("spin0", "alpha phi".to_string(), row(n, &[(14, al.clone())])));
    let mut entries: Vec<(usize, ExactScalar)> =
        (1..=4).map(|mu| (10 + mu - 1, q(mu))).collect();
    entries.push((15, ExactScalar::i() * al.clone()));
    tagged.push(("spin0", "p.At + i alpha phit".to_string(), row(n, &entries)));
    for nu in 1..=4 {
        let r = row(
            n,
            &[
                (10 + nu - 1, al.clone()),
                (nu - 1, ga.clone()),
                (15, -(ExactScalar::i() * q(nu))),
            ],
        );
        tagged.push(("spin0", format!("alpha At + gamma A - i p phit [{nu}]"), r));
    }
    for nu in 1..=4 {
        tagged.push(("spin0", format!("p phi [{nu}]"), row(n, &[(14, q(nu))])));
    }
    for (idx, (mu, nu)) in PAIRS.iter().enumerate() {
        let r = row(
            n,
            &[
                (10 + nu - 1, q(*mu)),
                (10 + mu - 1, -q(*nu)),
                (4 + idx, -ga.clone()),
            ],
        );
        tagged.push(("spin0", format!("p/\\At - gamma F [{mu}{nu}]"), r));
    }

    let basis_rows = matrix.row_basis();
    let mut derived_relations = Vec::new();
    let mut relation_matrix = ExactMatrix::zeros(tagged.len(), n);
    for (i, (_, label, r)) in tagged.iter().enumerate() {
        for j in 0..n {
            relation_matrix.set(i, j, r[(0, j)].clone());
        }
        derived_relations.push(DerivedRelation {
            label: label.clone(),
            row: r.clone(),
            in_row_space: basis_rows.contains(r)?,
        });
    }

    // Cross-sector coupling: At entries of the divergence rows, A entries of
    // the axial-vector rows.
    let coupling = ExactMatrix::from_fn(8, 4, |i, j| {
        if i < 4 {
            // p.F rows are tagged entries 6..10; their At columns.
            tagged[6 + i].2[(0, 10 + j)].clone()
        } else {
            // alpha At + gamma A rows are entries 13..17; their A columns.
            tagged[13 + (i - 4)].2[(0, j)].clone()
        }
    });
    let decoupled = coupling.is_zero();

    // Closed-form second-order tensor rows: for each pair (mu, lam),
    //   sum_nu [ q_mu q_nu F_nu lam - q_lam q_nu F_nu mu ]
    //   + (alpha^2 - gamma^2) F_mu lam = 0.
    let quartic = ExactScalar::from_rational(&alpha * &alpha - &gamma_c * &gamma_c);
    let mut ast = ExactMatrix::zeros(6, n);
    for (idx, (mu, lam)) in PAIRS.iter().enumerate() {
        let mut entries = vec![(4 + idx, quartic.clone())];
        for nu in 1..=4 {
            if nu != *lam {
                let (k_idx, s) = pair_slot(nu, *lam);
                entries.push((4 + k_idx, q(*mu) * q(nu) * s));
            }
            if nu != *mu {
                let (k_idx, s) = pair_slot(nu, *mu);
                entries.push((4 + k_idx, -(q(*lam) * q(nu) * s)));
            }
        }
        let r = row(n, &entries);
        for j in 0..n {
            ast.set(idx, j, r[(0, j)].clone());
        }
    }
    let mut ast_ok = true;
    for i in 0..6 {
        ast_ok &= basis_rows.contains(&ast.row(i))?;
    }

    // Schur-style elimination: order columns as (non-tensor | tensor), run
    // the exact elimination over the field relations, and keep the rows whose
    // non-tensor part vanished; compare with the closed form.
    let perm: Vec<usize> = (0..4).chain(10..16).chain(4..10).collect();
    let permuted = ExactMatrix::from_fn(relation_matrix.rows(), n, |i, j| {
        relation_matrix[(i, perm[j])].clone()
    });
    let (rref, _, _) = permuted.rref();
    let mut f_only = Vec::new();
    'rows: for i in 0..rref.rows() {
        for j in 0..10 {
            if !rref[(i, j)].is_zero() {
                continue 'rows;
            }
        }
        let mut r = ExactMatrix::zeros(1, 6);
        let mut nonzero = false;
        for j in 0..6 {
            let v = rref[(i, 10 + j)].clone();
            nonzero |= !v.is_zero();
            r.set(0, j, v);
        }
        if nonzero {
            f_only.push(r);
        }
    }
    let ast_f = ExactMatrix::from_fn(6, 6, |i, j| ast[(i, 4 + j)].clone());
    let schur_matches = if f_only.is_empty() {
        ast_f.is_zero()
    } else {
        let mut stacked = f_only[0].clone();
        for r in &f_only[1..] {
            stacked = stacked.vstack(r)?;
        }
        stacked.same_row_space(&ast_f)?
    };

    let labels_of = |tags: &[&str]| -> Vec<String> {
        tagged
            .iter()
            .filter(|(t, _, _)| tags.contains(t))
            .map(|(_, l, _)| l.clone())
            .collect()
    };
    let groupings = [
        ConstraintGrouping {
            name: "scalar constraint with the spin-1 block".to_string(),
            spin1_labels: labels_of(&["spin1", "ambiguous"]),
            spin0_labels: labels_of(&["spin0"]),
        },
        ConstraintGrouping {
            name: "scalar constraint with the spin-0 block".to_string(),
            spin1_labels: labels_of(&["spin1"]),
            spin0_labels: labels_of(&["spin0", "ambiguous"]),
        },
    ];

    Ok(GeneralizedSystem {
        momentum: p.clone(),
        params: params.clone(),
        scalar_coef: alpha,
        pseudo_coef: gamma_c,
        system: ConstraintSystem::solve(matrix, generalized_labels()),
        derived_relations,
        coupling,
        decoupled,
        ast_rows_in_row_space: ast_ok,
        schur_matches,
        groupings,
    })
}

/// One parity branch of the six-component parameter mapping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WthBranch {
    pub parity: i8,
    pub cap_a: BigRational,
    pub cap_b: BigRational,
}

impl WthBranch {
    /// The defining substitution identities, with masses normalized away.
    pub fn satisfies_substitution(&self, params: &[BigRational; 4]) -> bool {
        let [a, b, c, d] = params;
        let two = BigRational::from_integer(2.into());
        let abcd = a * b - c * d;
        let csq_asq = c * c - a * a;
        let one = BigRational::one();
        match self.parity {
            -1 => {
                csq_asq == -(&self.cap_b / &two)
                    && -(&two * &abcd) == (&self.cap_a - &one) / &two
            }
            1 => {
                csq_asq == &self.cap_b / &two && &two * &abcd == (&self.cap_a + &one) / &two
            }
            _ => false,
        }
    }
}

/// Maps the `(a, b, c, d)` operator family onto the two parity branches of
/// the six-component `(A, B)` parameters, valid under the side condition
/// `b = +-d`.
pub fn wth_mapping(params: &[BigRational; 4]) -> Result<[WthBranch; 2], Error> {
    let [_, b, _, d] = params;
    if b != d && *b != -d.clone() {
        return Err(Error::Domain("parameter mapping requires b = +-d".into()));
    }
    let [a, b, c, d] = params;
    let two = BigRational::from_integer(2.into());
    let four = BigRational::from_integer(4.into());
    let one = BigRational::one();
    let abcd = a * b - c * d;
    let asq_csq = a * a - c * c;
    Ok([
        WthBranch {
            parity: -1,
            cap_a: &one - &four * &abcd,
            cap_b: &two * &asq_csq,
        },
        WthBranch {
            parity: 1,
            cap_a: &four * &abcd - &one,
            cap_b: -(&two * &asq_csq),
        },
    ])
}

/// A determinant root of a rest-frame tensor operator, in units of `m^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorRoot {
    pub mass_sq_over_m_sq: BigRational,
    pub multiplicity: usize,
    pub tachyonic: bool,
}

/// One parity branch of the second-order tensor dispersion analysis.
#[derive(Clone, Debug)]
pub struct AstBranch {
    pub parity: i8,
    /// All determinant roots in `y = E^2 / m^2` at rest.
    pub roots: Vec<SectorRoot>,
    /// `B/(A-1)` for parity -1 and `B/(A+1)` for parity +1, when defined.
    pub reported_mass_sq: Option<BigRational>,
    pub degenerate: bool,
}

#[derive(Clone, Debug)]
pub struct AstDispersion {
    pub cap_a: BigRational,
    pub cap_b: BigRational,
    pub branches: [AstBranch; 2],
}

/// Builds the rest-frame 6x6 operator for each parity branch of the tensor
/// equations and extracts the exact determinant roots in `y = E^2` (mass
/// normalized to 1). The derivative bracket contributes `-q q` and a squared
/// derivative contributes `+y` at rest.
pub fn ast_dispersion(cap_a: &BigRational, cap_b: &BigRational) -> Result<AstDispersion, Error> {
    let one = BigRational::one();
    let branches = [-1i8, 1i8]
        .into_iter()
        .map(|parity| {
            // Scalar part: for parity -1, (A-1)/2 * y - B/2; for +1 the
            // displayed equation flips both signs.
            let half = ExactScalar::from_ratio(1, 2);
            let (lin, cst) = match parity {
                -1 => (
                    ExactScalar::from_rational(cap_a - &one) * half.clone(),
                    ExactScalar::from_rational(-cap_b.clone()) * half.clone(),
                ),
                _ => (
                    ExactScalar::from_rational(-(cap_a + &one)) * half.clone(),
                    ExactScalar::from_rational(cap_b.clone()) * half.clone(),
                ),
            };
            let scalar = ExactPoly::new(vec![cst, lin]);
            // Bracket: -[q_mu q_nu F_nu lam - q_lam q_nu F_nu mu]; at rest
            // the only nonzero bilinear is q_4 q_4 = -y, so electric pairs
            // (k, 4) receive +y and magnetic pairs receive nothing.
            let mut op = vec![vec![ExactPoly::zero(); 6]; 6];
            for (i, (mu, nu)) in PAIRS.iter().enumerate() {
                op[i][i] = scalar.clone();
                if *nu == 4 {
                    let _ = mu;
                    op[i][i] = op[i][i].add(&ExactPoly::new(vec![
                        ExactScalar::zero(),
                        ExactScalar::one(),
                    ]));
                }
            }
            let det = det_poly(&op)?;
            let mut roots = Vec::new();
            if !det.is_zero() {
                for r in crate::poly::rational_root_masses(&det)?.rational_roots {
                    roots.push(SectorRoot {
                        tachyonic: r.root.is_negative(),
                        mass_sq_over_m_sq: r.root,
                        multiplicity: r.multiplicity,
                    });
                }
            }
            roots.sort_by(|a, b| a.mass_sq_over_m_sq.cmp(&b.mass_sq_over_m_sq));
            let denom = match parity {
                -1 => cap_a - &one,
                _ => cap_a + &one,
            };
            let degenerate = denom.is_zero();
            let reported_mass_sq = if degenerate { None } else { Some(cap_b / &denom) };
            Ok(AstBranch {
                parity,
                roots,
                reported_mass_sq,
                degenerate,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let mut it = branches.into_iter();
    Ok(AstDispersion {
        cap_a: cap_a.clone(),
        cap_b: cap_b.clone(),
        branches: [it.next().unwrap(), it.next().unwrap()],
    })
}

/// A single sign assignment and its induced Proca-type coefficients.
#[derive(Clone, Debug)]
pub struct SignCombination {
    pub eps: [i8; 4],
    pub a1: BigRational,
    pub a2: BigRational,
    pub b1: BigRational,
    pub b2: BigRational,
    /// Index of the equivalence class of the induced field-equation set.
    pub class: usize,
}

#[derive(Clone, Debug)]
pub struct SignOperatorReport {
    pub combinations: Vec<SignCombination>,
    pub distinct_systems: usize,
    pub duplicate_combinations: usize,
    /// Field sign pattern `(A, F, At)` under which the all-signs flip
    /// reproduces the same field-equation set.
    pub flip_redefinition: [i8; 3],
    pub flip_invariant: bool,
}

/// The displayed field-equation set induced by one sign assignment, as an
/// exact coefficient matrix over `(A, F, At)` at a fixed probe momentum.
fn sign_system_rows(
    p: &FourMomentum,
    duality: &[(usize, ExactScalar)],
    m1: &BigRational,
    m2: &BigRational,
    a1: &BigRational,
    a2: &BigRational,
    b2: &BigRational,
    field_signs: [i8; 3],
) -> ExactMatrix {
    let n = 14; // A(4) F(6) At(4)
    let [sa, sf, sat] = field_signs.map(|s| ExactScalar::from_int(s as i64));
    let q = |mu: usize| p.component(mu);
    let mut rows = Vec::new();
    // Curl-type: p /\ A + m1 A1 F + i m2 A2 dual(F) = 0.
    for (idx, (mu, nu)) in PAIRS.iter().enumerate() {
        let mut entries = vec![
            (nu - 1, q(*mu) * sa.clone()),
            (mu - 1, -(q(*nu) * sa.clone())),
            (
                4 + idx,
                ExactScalar::from_rational(m1 * a1) * sf.clone(),
            ),
        ];
        let (partner, c) = &duality[idx];
        entries.push((
            4 + partner,
            ExactScalar::i() * ExactScalar::from_rational(m2 * a2) * c.clone() * sf.clone(),
        ));
        rows.push(row(n, &entries));
    }
    // Divergence-type: p.F - m1 A1 A - m2 B2 At = 0.
    for lam in 1..=4 {
        let mut entries = vec![
            (lam - 1, -(ExactScalar::from_rational(m1 * a1) * sa.clone())),
            (
                10 + lam - 1,
                -(ExactScalar::from_rational(m2 * b2) * sat.clone()),
            ),
        ];
        for mu in 1..=4 {
            if mu != lam {
                let (k_idx, s) = pair_slot(mu, lam);
                entries.push((4 + k_idx, q(mu) * s * sf.clone()));
            }
        }
        rows.push(row(n, &entries));
    }
    let mut out = ExactMatrix::zeros(rows.len(), n);
    for (i, r) in rows.iter().enumerate() {
        for j in 0..n {
            out.set(i, j, r[(0, j)].clone());
        }
    }
    out
}

/// Enumerates all sixteen sign assignments of the two-mass pair, groups the
/// induced field-equation sets, and checks the all-signs-flip symmetry.
pub fn sign_operator_enumeration() -> Result<SignOperatorReport, Error> {
    let d = DiracSet::standard();
    let basis = classify_matrix_basis(&d)?;
    let duality = dual_partners(&basis);
    let p = FourMomentum::from_ints([3, 4, 12], 85)?;
    let m1 = BigRational::from_integer(2.into());
    let m2 = BigRational::from_integer(3.into());
    let two = BigRational::from_integer(2.into());

    let mut combinations = Vec::new();
    let mut classes: Vec<ExactMatrix> = Vec::new();
    let mut duplicate_combinations = 0usize;
    for bits in 0..16u8 {
        let eps: [i8; 4] = std::array::from_fn(|i| if bits & (1 << i) == 0 { 1 } else { -1 });
        let r = |x: i8, y: i8| {
            (BigRational::from_integer((x as i64).into())
                + BigRational::from_integer((y as i64).into()))
                / &two
        };
        let a1 = r(eps[0], eps[2]);
        let a2 = r(eps[1], eps[3]);
        let b1 = r(eps[0], -eps[2]);
        let b2 = r(eps[1], -eps[3]);
        let rows = sign_system_rows(&p, &duality, &m1, &m2, &a1, &a2, &b2, [1, 1, 1]);
        let class = match classes.iter().position(|c| *c == rows) {
            Some(i) => {
                duplicate_combinations += 1;
                i
            }
            None => {
                classes.push(rows);
                classes.len() - 1
            }
        };
        combinations.push(SignCombination {
            eps,
            a1,
            a2,
            b1,
            b2,
            class,
        });
    }

    // All-signs flip: the set for -eps equals the set for eps after the
    // field redefinition A -> -A, At -> -At (rows compared as row spaces).
    let flip_redefinition = [-1i8, 1, -1];
    let mut flip_invariant = true;
    for combo in &combinations {
        let flipped: [i8; 4] = combo.eps.map(|e| -e);
        let r = |x: i8, y: i8| {
            (BigRational::from_integer((x as i64).into())
                + BigRational::from_integer((y as i64).into()))
                / &two
        };
        let fa1 = r(flipped[0], flipped[2]);
        let fa2 = r(flipped[1], flipped[3]);
        let fb2 = r(flipped[1], -flipped[3]);
        let original = sign_system_rows(&p, &duality, &m1, &m2, &combo.a1, &combo.a2, &combo.b2, [1, 1, 1]);
        let redefined = sign_system_rows(&p, &duality, &m1, &m2, &fa1, &fa2, &fb2, flip_redefinition);
        flip_invariant &= original.same_row_space(&redefined)?;
    }

    Ok(SignOperatorReport {
        combinations,
        distinct_systems: classes.len(),
        duplicate_combinations,
        flip_redefinition,
        flip_invariant,
    })
}

/// Exact plane-wave residuals of the four field equations with the scalar
/// gradient source, under the ansatz `exp(i(k.x - w t))`.
#[derive(Clone, Debug)]
pub struct ChiMaxwellResidual {
    pub curl_e: [ExactScalar; 3],
    pub curl_b: [ExactScalar; 3],
    pub div_e: ExactScalar,
    pub div_b: ExactScalar,
}

impl ChiMaxwellResidual {
    pub fn is_zero(&self) -> bool {
        self.curl_e.iter().all(ExactScalar::is_zero)
            && self.curl_b.iter().all(ExactScalar::is_zero)
            && self.div_e.is_zero()
            && self.div_b.is_zero()
    }

    pub fn max_abs(&self) -> f64 {
        let norm = |s: &ExactScalar| {
            let (re, im) = s.to_f64();
            (re * re + im * im).sqrt()
        };
        self.curl_e
            .iter()
            .chain(self.curl_b.iter())
            .chain([&self.div_e, &self.div_b])
            .map(norm)
            .fold(0.0, f64::max)
    }
}

fn cross(a: &[ExactScalar; 3], b: &[ExactScalar; 3]) -> [ExactScalar; 3] {
    [
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

fn dot(a: &[ExactScalar; 3], b: &[ExactScalar; 3]) -> ExactScalar {
    a.iter()
        .zip(b)
        .fold(ExactScalar::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Residuals of the four equations
///
/// ```text
///   curl E = -dB/dt + grad Im chi      div E = -d(Re chi)/dt
///   curl B =  dE/dt + grad Re chi      div B =  d(Im chi)/dt
/// ```
///
/// for plane-wave amplitudes, where the two parts of the scalar source are
/// independent complex amplitudes.
pub fn chi_maxwell_residual(
    e_amp: &[ExactScalar; 3],
    b_amp: &[ExactScalar; 3],
    chi_re: &ExactScalar,
    chi_im: &ExactScalar,
    k: &FourMomentum,
) -> ChiMaxwellResidual {
    let i = ExactScalar::i();
    let kv: [ExactScalar; 3] =
        std::array::from_fn(|j| ExactScalar::from_rational(k.spatial()[j].clone()));
    let omega = ExactScalar::from_rational(k.energy().clone());
    let iw = i.clone() * omega;

    let ke = cross(&kv, e_amp);
    let kb = cross(&kv, b_amp);
    let curl_e: [ExactScalar; 3] = std::array::from_fn(|j| {
        i.clone() * ke[j].clone()
            - iw.clone() * b_amp[j].clone()
            - i.clone() * kv[j].clone() * chi_im.clone()
    });
    let curl_b: [ExactScalar; 3] = std::array::from_fn(|j| {
        i.clone() * kb[j].clone() + iw.clone() * e_amp[j].clone()
            - i.clone() * kv[j].clone() * chi_re.clone()
    });
    let div_e = i.clone() * dot(&kv, e_amp) - iw.clone() * chi_re.clone();
    let div_b = i.clone() * dot(&kv, b_amp) + iw * chi_im.clone();
    ChiMaxwellResidual {
        curl_e,
        curl_b,
        div_e,
        div_b,
    }
}
