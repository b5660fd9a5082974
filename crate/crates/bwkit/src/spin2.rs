//! Rank-4 multispinor machinery for spin 2.
//!
//! A field with four spinor indices, symmetric in the first and last pairs,
//! expands block-wise over tensor products of the symmetric-pair matrices
//! `gamma_mu R`, `sigma_mn R` and the pseudo-tensor family
//! `gamma5 sigma_mn R`. Nine blocks of tensor components appear, weighted by
//! the expansion coefficients `alpha_1..3` (first pair) and `beta_1..9`
//! (second pair). Total symmetry across the two pairs is imposed exactly and
//! the resulting component-space kernel is computed by exact elimination;
//! the momentum-space dynamical system is assembled from the same Dirac
//! conditions per index as in the spin-1 case.
//!
//! Component storage is antisymmetry-reduced: every bracketed index pair is
//! stored once in lexicographic order (the `(1,2)..(3,4)` pair list), so the
//! tensor blocks have 16/24/36 stored entries rather than 16/64/144.

use num::{BigRational, One, Zero};

use crate::matrix::{ConstraintSystem, ExactMatrix};
use crate::momentum::FourMomentum;
use crate::scalar::ExactScalar;
use crate::spinor::{epsilon4, DiracSet, PAIRS};
use crate::Error;

/// Expansion weights of the nine-block rank-4 decomposition.
#[derive(Clone, Debug, PartialEq)]
pub struct Spin2Coefficients {
    pub alpha: [BigRational; 3],
    pub beta: [BigRational; 9],
}

impl Spin2Coefficients {
    /// The restricted assignment that keeps only the `G`, `F`, `T`, `R`
    /// blocks: `alpha_3 = beta_3 = beta_6 = beta_9 = 0`, all others one.
    pub fn standard() -> Self {
        let one = BigRational::one();
        let zero = BigRational::zero();
        Spin2Coefficients {
            alpha: [one.clone(), one.clone(), zero.clone()],
            beta: [
                one.clone(),
                one.clone(),
                zero.clone(),
                one.clone(),
                one.clone(),
                zero.clone(),
                one.clone(),
                one,
                zero,
            ],
        }
    }

    /// All nine products active with unit weight.
    pub fn generic() -> Self {
        Spin2Coefficients {
            alpha: std::array::from_fn(|_| BigRational::one()),
            beta: std::array::from_fn(|_| BigRational::one()),
        }
    }
}

/// One tensor block of the expansion: which matrix family carries each of
/// the two spinor pairs, which coefficient product weighs it, and how its
/// stored component indices are laid out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `gamma_mu R`, one index.
    Vector,
    /// `sigma_mn R`, one stored index pair.
    Tensor,
    /// `gamma5 sigma_mn R`, one stored index pair.
    PseudoTensor,
}

impl Family {
    fn len(&self) -> usize {
        match self {
            Family::Vector => 4,
            _ => 6,
        }
    }
}

/// Block table: label, first-pair family (the `mu` side), second-pair family
/// (the `kappa` side), and the (alpha, beta) coefficient indices.
pub const BLOCKS: [(&str, Family, Family, usize, usize); 9] = [
    ("G", Family::Vector, Family::Vector, 0, 0),
    ("F", Family::Vector, Family::Tensor, 0, 1),
    ("Ft", Family::Vector, Family::PseudoTensor, 0, 2),
    ("T", Family::Tensor, Family::Vector, 1, 3),
    ("R", Family::Tensor, Family::Tensor, 1, 4),
    ("Rt", Family::Tensor, Family::PseudoTensor, 1, 5),
    ("Tt", Family::PseudoTensor, Family::Vector, 2, 6),
    ("Dt", Family::PseudoTensor, Family::Tensor, 2, 7),
    ("D", Family::PseudoTensor, Family::PseudoTensor, 2, 8),
];

/// Total stored components across all blocks.
pub const N_COMPONENTS: usize = 256;

fn block_len(b: &(&str, Family, Family, usize, usize)) -> usize {
    b.1.len() * b.2.len()
}

/// Offset of each block in the component vector.
pub fn block_offsets() -> [usize; 9] {
    let mut off = [0usize; 9];
    let mut acc = 0;
    for (i, b) in BLOCKS.iter().enumerate() {
        off[i] = acc;
        acc += block_len(b);
    }
    debug_assert_eq!(acc, N_COMPONENTS);
    off
}

/// Columns of the component vector whose block carries nonzero weight.
fn active_columns(coeffs: &Spin2Coefficients) -> Vec<usize> {
    let offsets = block_offsets();
    let mut cols = Vec::new();
    for (i, b) in BLOCKS.iter().enumerate() {
        if !(&coeffs.alpha[b.3] * &coeffs.beta[b.4]).is_zero() {
            for j in 0..block_len(b) {
                cols.push(offsets[i] + j);
            }
        }
    }
    cols
}

/// Kernel dimension of `m` after dropping the zero-weight columns
/// (components that never enter the expansion).
fn active_nullity_of(m: &ExactMatrix, coeffs: &Spin2Coefficients) -> usize {
    let cols = active_columns(coeffs);
    let restricted =
        ExactMatrix::from_fn(m.rows(), cols.len(), |i, j| m[(i, cols[j])].clone());
    cols.len() - restricted.rank()
}

fn block_index(label: &str) -> usize {
    BLOCKS.iter().position(|b| b.0 == label).unwrap()
}

/// Component slot of `block[second_idx, first_idx]`: the second-pair index
/// (`kappa` side) is the slow axis, matching the `X_kappa^mu` notation.
pub fn component_slot(label: &str, second_idx: usize, first_idx: usize) -> usize {
    let bi = block_index(label);
    let off = block_offsets()[bi];
    off + second_idx * BLOCKS[bi].1.len() + first_idx
}

fn component_labels() -> Vec<String> {
    let mut labels = Vec::with_capacity(N_COMPONENTS);
    for b in BLOCKS.iter() {
        let first: Vec<String> = match b.1 {
            Family::Vector => (1..=4).map(|m| format!("{m}")).collect(),
            _ => PAIRS.iter().map(|(m, n)| format!("{m}{n}")).collect(),
        };
        let second: Vec<String> = match b.2 {
            Family::Vector => (1..=4).map(|m| format!("{m}")).collect(),
            _ => PAIRS.iter().map(|(m, n)| format!("{m}{n}")).collect(),
        };
        for s in &second {
            for f in &first {
                labels.push(format!("{}_{s}^{f}", b.0));
            }
        }
    }
    labels
}

fn family_matrices(d: &DiracSet, f: Family) -> Result<Vec<ExactMatrix>, Error> {
    Ok(match f {
        Family::Vector => (0..4)
            .map(|m| d.gamma[m].mat_mul(&d.reflection))
            .collect::<Result<_, _>>()?,
        Family::Tensor => (0..6)
            .map(|k| d.sigma[k].mat_mul(&d.reflection))
            .collect::<Result<_, _>>()?,
        Family::PseudoTensor => (0..6)
            .map(|k| d.gamma5_sigma(k).mat_mul(&d.reflection))
            .collect::<Result<_, _>>()?,
    })
}

/// The linear map from stored components to the flattened rank-4
/// multispinor, `(alpha beta gamma delta)` flattened as
/// `alpha*64 + beta*16 + gamma*4 + delta`.
#[derive(Clone, Debug)]
pub struct MultispinorMap {
    pub matrix: ExactMatrix,
    pub active_blocks: Vec<String>,
    /// Per component: (left factor matrix, right factor matrix, weight);
    /// both indices point into the shared 16-matrix pool.
    factors: Vec<(usize, usize, ExactScalar)>,
    pool: Vec<ExactMatrix>,
}

/// Builds the component-to-multispinor map for a coefficient assignment.
pub fn multispinor_map(coeffs: &Spin2Coefficients) -> Result<MultispinorMap, Error> {
    let d = DiracSet::standard();
    let gamma_r = family_matrices(&d, Family::Vector)?;
    let sigma_r = family_matrices(&d, Family::Tensor)?;
    let g5_sigma_r = family_matrices(&d, Family::PseudoTensor)?;
    // A shared pool of the 16 distinct factor matrices, indexed 0..16.
    let mut pool = Vec::new();
    pool.extend(gamma_r.iter().cloned());
    pool.extend(sigma_r.iter().cloned());
    pool.extend(g5_sigma_r.iter().cloned());
    let pool_base = |f: Family| -> usize {
        match f {
            Family::Vector => 0,
            Family::Tensor => 4,
            Family::PseudoTensor => 10,
        }
    };

    let mut factors = Vec::with_capacity(N_COMPONENTS);
    let mut active_blocks = Vec::new();
    for b in BLOCKS.iter() {
        let weight = &coeffs.alpha[b.3] * &coeffs.beta[b.4];
        if !weight.is_zero() {
            active_blocks.push(b.0.to_string());
        }
        let w = ExactScalar::from_rational(weight);
        for s in 0..b.2.len() {
            for f in 0..b.1.len() {
                factors.push((pool_base(b.1) + f, pool_base(b.2) + s, w.clone()));
            }
        }
    }

    let mut matrix = ExactMatrix::zeros(256, N_COMPONENTS);
    for (c, (li, ri, w)) in factors.iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        let l = &pool[*li];
        let r = &pool[*ri];
        for a in 0..4 {
            for bb in 0..4 {
                if l[(a, bb)].is_zero() {
                    continue;
                }
                for g in 0..4 {
                    for dd in 0..4 {
                        if r[(g, dd)].is_zero() {
                            continue;
                        }
                        let row = a * 64 + bb * 16 + g * 4 + dd;
                        let v = matrix[(row, c)].clone()
                            + w.clone() * l[(a, bb)].clone() * r[(g, dd)].clone();
                        matrix.set(row, c, v);
                    }
                }
            }
        }
    }
    Ok(MultispinorMap {
        matrix,
        active_blocks,
        factors,
        pool,
    })
}

impl MultispinorMap {
    /// Applies the map to a component vector (n x 1).
    pub fn apply(&self, components: &ExactMatrix) -> Result<ExactMatrix, Error> {
        self.matrix.mat_mul(components)
    }
}

/// Result of imposing total symmetry on the rank-4 expansion.
#[derive(Clone, Debug)]
pub struct Spin2SymmetryReport {
    pub coefficients: Spin2Coefficients,
    /// Constraint system over all 256 stored components.
    pub system: ConstraintSystem,
    /// Dimension of the space of symmetric multispinors actually reached:
    /// component kernel minus the kernel of the expansion map itself.
    pub image_nullity: usize,
    /// Whether the transposition construction and the antisymmetric
    /// contraction construction produced identical row spaces.
    pub contraction_matches_direct: bool,
    /// Component-space nullity restricted to the active blocks.
    pub active_nullity: usize,
}

/// Rows demanding invariance of the multispinor under the `beta <-> gamma`
/// transposition (enough, with the built-in pair symmetries, for total
/// symmetry).
fn transposition_rows(map: &MultispinorMap) -> ExactMatrix {
    ExactMatrix::from_fn(256, N_COMPONENTS, |idx, c| {
        let (a, b, g, dd) = (idx / 64, (idx / 16) % 4, (idx / 4) % 4, idx % 4);
        let swapped = a * 64 + g * 16 + b * 4 + dd;
        map.matrix[(idx, c)].clone() - map.matrix[(swapped, c)].clone()
    })
}

/// Rows contracting the `(beta gamma)` slot with the antisymmetric matrices
/// `R^{-1}`, `R^{-1} gamma5`, `R^{-1} gamma5 gamma_lambda`.
fn contraction_rows(map: &MultispinorMap) -> Result<ExactMatrix, Error> {
    let d = DiracSet::standard();
    let rinv = d.r_inverse();
    let mut contractors = vec![rinv.clone(), rinv.mat_mul(&d.gamma5)?];
    for mu in 0..4 {
        contractors.push(rinv.mat_mul(&d.gamma5)?.mat_mul(&d.gamma[mu])?);
    }
    let mut rows = ExactMatrix::zeros(6 * 16, N_COMPONENTS);
    for (ci, cm) in contractors.iter().enumerate() {
        for a in 0..4 {
            for dd in 0..4 {
                let r = ci * 16 + a * 4 + dd;
                for c in 0..N_COMPONENTS {
                    let mut acc = ExactScalar::zero();
                    for b in 0..4 {
                        for g in 0..4 {
                            if cm[(b, g)].is_zero() {
                                continue;
                            }
                            let idx = a * 64 + b * 16 + g * 4 + dd;
                            if !map.matrix[(idx, c)].is_zero() {
                                acc = acc + cm[(b, g)].clone() * map.matrix[(idx, c)].clone();
                            }
                        }
                    }
                    rows.set(r, c, acc);
                }
            }
        }
    }
    Ok(rows)
}

/// Imposes total symmetry by both constructions and reports the exact
/// component-space kernel.
pub fn symmetry_constraint_system(
    coeffs: &Spin2Coefficients,
) -> Result<Spin2SymmetryReport, Error> {
    let map = multispinor_map(coeffs)?;
    let direct = transposition_rows(&map);
    let contracted = contraction_rows(&map)?;
    let contraction_matches_direct = direct.same_row_space(&contracted)?;

    let system = ConstraintSystem::solve(contracted, component_labels());

    // Image nullity: rank of the expansion map applied to the kernel basis.
    let nullity = system.nullity();
    let image_nullity = if nullity == 0 {
        0
    } else {
        let mut stacked = system.nullspace[0].clone();
        for v in &system.nullspace[1..] {
            stacked = ExactMatrix::from_fn(N_COMPONENTS, stacked.cols() + 1, |i, j| {
                if j < stacked.cols() {
                    stacked[(i, j)].clone()
                } else {
                    v[(i, 0)].clone()
                }
            });
        }
        map.matrix.mat_mul(&stacked)?.rank()
    };

    let active_nullity = active_nullity_of(&system.matrix, coeffs);

    Ok(Spin2SymmetryReport {
        coefficients: coeffs.clone(),
        system,
        image_nullity,
        contraction_matches_direct,
        active_nullity,
    })
}

fn rows_to_matrix(rows: Vec<Vec<(usize, ExactScalar)>>) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(rows.len(), N_COMPONENTS);
    for (r, entries) in rows.iter().enumerate() {
        for (c, v) in entries {
            let acc = m[(r, *c)].clone() + v.clone();
            m.set(r, *c, acc);
        }
    }
    m
}

fn pair_slot_signed(m: usize, n: usize) -> (usize, i64) {
    if m < n {
        (PAIRS.iter().position(|&p| p == (m, n)).unwrap(), 1)
    } else {
        (PAIRS.iter().position(|&p| p == (n, m)).unwrap(), -1)
    }
}

/// `sum_mu X_{(k mu)}^mu` for a pair-vector block (first index a pair).
fn pair_trace_entries(block: &str, k: usize) -> Vec<(usize, ExactScalar)> {
    let mut entries = Vec::new();
    for mu in 1..=4usize {
        if mu != k {
            let (slot_idx, s) = pair_slot_signed(k, mu);
            entries.push((component_slot(block, slot_idx, mu - 1), ExactScalar::from_int(s)));
        }
    }
    entries
}

/// `eps^{kt m a} X_{(kt)}^m` for a pair-vector block, free index `a`.
fn pair_eps_entries(block: &str, a: usize) -> Vec<(usize, ExactScalar)> {
    let mut entries = Vec::new();
    for (kt, &(k, t)) in PAIRS.iter().enumerate() {
        for m in 1..=4usize {
            let e = epsilon4(k, t, m, a);
            if e != 0 {
                // Both pair orders contribute equally: factor 2.
                entries.push((component_slot(block, kt, m - 1), ExactScalar::from_int(2 * e)));
            }
        }
    }
    entries
}

/// `sum_mu X_mu^{(mu k)}` for a vector-pair block (second index a pair).
fn vec_pair_trace_entries(block: &str, k: usize) -> Vec<(usize, ExactScalar)> {
    let mut entries = Vec::new();
    for mu in 1..=4usize {
        if mu != k {
            let (slot_idx, s) = pair_slot_signed(mu, k);
            entries.push((component_slot(block, mu - 1, slot_idx), ExactScalar::from_int(s)));
        }
    }
    entries
}

/// `eps^{k t m a} X_k^{(t m)}` for a vector-pair block, free index `a`.
fn vec_pair_eps_entries(block: &str, a: usize) -> Vec<(usize, ExactScalar)> {
    let mut entries = Vec::new();
    for k in 1..=4usize {
        for t in 1..=4usize {
            for m in 1..=4usize {
                let e = epsilon4(k, t, m, a);
                if e != 0 && t != m {
                    let (slot_idx, s) = pair_slot_signed(t, m);
                    entries.push((
                        component_slot(block, k - 1, slot_idx),
                        ExactScalar::from_int(e * s),
                    ));
                }
            }
        }
    }
    entries
}

/// Single trace `S_{k m} = sum_n X_{(k n)}^{(m n)}` of a pair-pair block.
fn single_trace_entries(block: &str, k: usize, m: usize) -> Vec<(usize, ExactScalar)> {
    let mut entries = Vec::new();
    for n in 1..=4usize {
        if n != k && n != m {
            let (s1, sg1) = pair_slot_signed(k, n);
            let (s2, sg2) = pair_slot_signed(m, n);
            entries.push((component_slot(block, s1, s2), ExactScalar::from_int(sg1 * sg2)));
        }
    }
    entries
}

/// Double trace `sum_{mn} X_{(mn)}^{(mn)}` of a pair-pair block.
fn double_trace_entries(block: &str) -> Vec<(usize, ExactScalar)> {
    (0..6)
        .map(|kt| (component_slot(block, kt, kt), ExactScalar::from_int(2)))
        .collect()
}

/// `eps^{m n k t} X_{(kt)}^{(mn)}` of a pair-pair block, fully contracted.
fn double_eps_entries(block: &str) -> Vec<(usize, ExactScalar)> {
    let mut entries = Vec::new();
    for (kt, &(k, t)) in PAIRS.iter().enumerate() {
        for (mn, &(m, n)) in PAIRS.iter().enumerate() {
            let e = epsilon4(m, n, k, t);
            if e != 0 {
                entries.push((component_slot(block, kt, mn), ExactScalar::from_int(4 * e)));
            }
        }
    }
    entries
}

/// The standard-case tensor constraint families implied by total symmetry,
/// one labeled row group per family, as exact linear forms over the stored
/// components. The two displayed forms that hold only in coupled
/// combination are listed separately in `paper_decoupled_families`.
pub fn standard_constraint_families() -> Vec<(String, ExactMatrix)> {
    let one = ExactScalar::one();
    let mut fams: Vec<(String, ExactMatrix)> = Vec::new();
    let mut push_rows = |label: &str, rows: Vec<Vec<(usize, ExactScalar)>>| {
        fams.push((label.to_string(), rows_to_matrix(rows)));
    };

    // Trace of G.
    push_rows(
        "G trace",
        vec![(0..4).map(|m| (component_slot("G", m, m), one.clone())).collect()],
    );
    // Antisymmetric part of G.
    push_rows(
        "G antisymmetric part",
        PAIRS
            .iter()
            .map(|&(m, n)| {
                vec![
                    (component_slot("G", m - 1, n - 1), one.clone()),
                    (component_slot("G", n - 1, m - 1), -one.clone()),
                ]
            })
            .collect(),
    );
    // F pair-trace: sum_mu F_{k mu}^mu = 0.
    push_rows(
        "F pair trace",
        (1..=4).map(|k| pair_trace_entries("F", k)).collect(),
    );
    // eps^{ktmn} F_{kt,m} = 0.
    push_rows(
        "F epsilon contraction",
        (1..=4).map(|a| pair_eps_entries("F", a)).collect(),
    );
    // T pair-trace: sum_mu T_mu^{mu k} = 0.
    push_rows(
        "T pair trace",
        (1..=4).map(|k| vec_pair_trace_entries("T", k)).collect(),
    );
    // eps^{ktmn} T_{k,tm} = 0.
    push_rows(
        "T epsilon contraction",
        (1..=4).map(|a| vec_pair_eps_entries("T", a)).collect(),
    );
    // F^{kt,m} = T^{m,kt}.
    push_rows("F equals T", {
        let mut rows = Vec::new();
        for kt in 0..6 {
            for m in 0..4 {
                rows.push(vec![
                    (component_slot("F", kt, m), one.clone()),
                    (component_slot("T", m, kt), -one.clone()),
                ]);
            }
        }
        rows
    });
    // eps^{ktml}(F_{kt,m} + T_{k,tm}) = 0.
    push_rows(
        "F plus T epsilon",
        (1..=4)
            .map(|a| {
                let mut entries = pair_eps_entries("F", a);
                entries.extend(vec_pair_eps_entries("T", a));
                entries
            })
            .collect(),
    );
    // Antisymmetric part of the R single trace S_{km} = sum_n R_{kn,mn}.
    push_rows(
        "R single-trace antisymmetric part",
        PAIRS
            .iter()
            .map(|&(k, m)| {
                let mut entries = single_trace_entries("R", k, m);
                for (c, v) in single_trace_entries("R", m, k) {
                    entries.push((c, -v));
                }
                entries
            })
            .collect(),
    );
    // Double trace of R.
    push_rows("R double trace", vec![double_trace_entries("R")]);
    // Traceless symmetric parts of G and of the R single trace cancel:
    // G_{km} - (1/2) delta_{km} tr G + (1/2)(S_{km} + S_{mk})
    //        - (1/4) delta_{km} tr S = 0.
    // The displayed forms set each half to zero separately; only the sum
    // is implied by the symmetrization.
    push_rows("G and R-trace coupled traceless parts", {
        let half = ExactScalar::from_ratio(1, 2);
        let mut rows = Vec::new();
        for k in 1..=4usize {
            for m in 1..=4usize {
                let mut entries = vec![(component_slot("G", k - 1, m - 1), one.clone())];
                for (c, v) in single_trace_entries("R", k, m) {
                    entries.push((c, half.clone() * v));
                }
                for (c, v) in single_trace_entries("R", m, k) {
                    entries.push((c, half.clone() * v));
                }
                if k == m {
                    for n in 0..4 {
                        entries.push((component_slot("G", n, n), -half.clone()));
                    }
                    for j in 1..=4usize {
                        for (c, v) in single_trace_entries("R", j, j) {
                            entries.push((c, -ExactScalar::from_ratio(1, 4) * v));
                        }
                    }
                }
                rows.push(entries);
            }
        }
        rows
    });
    // eps^{mnab}(g_{bk} R_{mt,na} - g_{bt} R_{na,mk}) = 0, free (k, t).
    push_rows("R epsilon pair contraction", {
        let mut rows = Vec::new();
        for k in 1..=4usize {
            for t in 1..=4usize {
                let mut entries = Vec::new();
                for m in 1..=4usize {
                    for n in 1..=4usize {
                        for a in 1..=4usize {
                            let e = epsilon4(m, n, a, k);
                            if e != 0 && m != t && n != a {
                                let (s1, sg1) = pair_slot_signed(m, t);
                                let (s2, sg2) = pair_slot_signed(n, a);
                                entries.push((
                                    component_slot("R", s1, s2),
                                    ExactScalar::from_int(e * sg1 * sg2),
                                ));
                            }
                            let e2 = epsilon4(m, n, a, t);
                            if e2 != 0 && n != a && m != k {
                                let (s1, sg1) = pair_slot_signed(n, a);
                                let (s2, sg2) = pair_slot_signed(m, k);
                                entries.push((
                                    component_slot("R", s1, s2),
                                    ExactScalar::from_int(-e2 * sg1 * sg2),
                                ));
                            }
                        }
                    }
                }
                if !entries.is_empty() {
                    rows.push(entries);
                }
            }
        }
        rows
    });
    // eps^{ktmn} R_{kt,mn} = 0.
    push_rows("R epsilon double contraction", vec![double_eps_entries("R")]);
    fams
}

/// The two displayed standard-case forms that are NOT individually implied
/// by total symmetry: the pure-trace form of `G` and the `R` single
/// traces. Their traceless symmetric parts only vanish in the coupled
/// combination listed in `standard_constraint_families`.
pub fn paper_decoupled_families() -> Vec<(String, ExactMatrix)> {
    let one = ExactScalar::one();
    let mut fams = Vec::new();
    // G_{km} = (1/2) delta_{km} tr G.
    let mut rows = Vec::new();
    for k in 0..4 {
        for m in 0..4 {
            let mut entries = vec![(component_slot("G", k, m), one.clone())];
            if k == m {
                for n in 0..4 {
                    entries.push((component_slot("G", n, n), -ExactScalar::from_ratio(1, 2)));
                }
            }
            rows.push(entries);
        }
    }
    fams.push(("G pure-trace form".to_string(), rows_to_matrix(rows)));
    // All single traces of R.
    let mut rows = Vec::new();
    for k in 1..=4usize {
        for m in 1..=4usize {
            let entries = single_trace_entries("R", k, m);
            if !entries.is_empty() {
                rows.push(entries);
            }
        }
    }
    fams.push(("R single traces".to_string(), rows_to_matrix(rows)));
    fams
}

/// Divergence record for the standard case: the computed kernel is not
/// zero-dimensional and two displayed constraint forms fail individually.
#[derive(Clone, Debug)]
pub struct Spin2DivergenceReport {
    /// Component-space nullity on the active blocks (claimed 0).
    pub active_nullity: usize,
    /// Membership of each implied family (all expected true).
    pub implied_families: Vec<(String, bool)>,
    /// Membership of each displayed-but-decoupled family (expected false).
    pub decoupled_families: Vec<(String, bool)>,
}

/// Checks every standard-case family against the exact row space and
/// reports the divergences from the claimed all-zero solution.
pub fn standard_divergence_report() -> Result<Spin2DivergenceReport, Error> {
    let report = symmetry_constraint_system(&Spin2Coefficients::standard())?;
    let basis = report.system.matrix.row_basis();
    let check = |fams: Vec<(String, ExactMatrix)>| -> Result<Vec<(String, bool)>, Error> {
        let mut out = Vec::new();
        for (label, rows) in fams {
            let mut ok = true;
            for r in 0..rows.rows() {
                ok &= basis.contains(&rows.row(r))?;
            }
            out.push((label, ok));
        }
        Ok(out)
    };
    Ok(Spin2DivergenceReport {
        active_nullity: report.active_nullity,
        implied_families: check(standard_constraint_families())?,
        decoupled_families: check(paper_decoupled_families())?,
    })
}

/// The generalized essential constraints: coefficient-weighted coupled
/// linear forms, one matrix per displayed family.
pub fn essential_constraint_rows(
    coeffs: &Spin2Coefficients,
) -> Vec<(String, ExactMatrix)> {
    let w = |a: usize, b: usize| {
        ExactScalar::from_rational(&coeffs.alpha[a] * &coeffs.beta[b])
    };
    let scale_entries = |entries: Vec<(usize, ExactScalar)>, s: &ExactScalar| {
        entries
            .into_iter()
            .map(|(c, v)| (c, s.clone() * v))
            .collect::<Vec<_>>()
    };
    let two_i = ExactScalar::from_int(2) * ExactScalar::i();
    let mut fams = Vec::new();

    // a1 b1 tr G = 0 and a1 b1 G_{[km]} = 0.
    let mut rows = vec![scale_entries(
        (0..4).map(|m| (component_slot("G", m, m), ExactScalar::one())).collect(),
        &w(0, 0),
    )];
    for &(m, n) in PAIRS.iter() {
        rows.push(scale_entries(
            vec![
                (component_slot("G", m - 1, n - 1), ExactScalar::one()),
                (component_slot("G", n - 1, m - 1), -ExactScalar::one()),
            ],
            &w(0, 0),
        ));
    }
    fams.push(("G trace and antisymmetric part".to_string(), rows_to_matrix(rows)));

    // 2i a1b2 F_{am}^m + i a1b3 eps^{ktm}_a Ft_{kt,m} = 0.
    let mut rows = Vec::new();
    for a in 1..=4usize {
        let mut entries = scale_entries(pair_trace_entries("F", a), &(two_i.clone() * w(0, 1)));
        entries.extend(scale_entries(
            pair_eps_entries("Ft", a),
            &(ExactScalar::i() * w(0, 2)),
        ));
        rows.push(entries);
    }
    fams.push(("F trace with dual epsilon".to_string(), rows_to_matrix(rows)));

    // 2i a1b3 Ft_{am}^m + i a1b2 eps^{ktm}_a F_{kt,m} = 0.
    let mut rows = Vec::new();
    for a in 1..=4usize {
        let mut entries = scale_entries(pair_trace_entries("Ft", a), &(two_i.clone() * w(0, 2)));
        entries.extend(scale_entries(
            pair_eps_entries("F", a),
            &(ExactScalar::i() * w(0, 1)),
        ));
        rows.push(entries);
    }
    fams.push(("dual F trace with F epsilon".to_string(), rows_to_matrix(rows)));

    // 2i a2b4 T^m_{ma} - i a3b7 eps^{ktm}_a Tt_{k,tm} = 0.
    let mut rows = Vec::new();
    for a in 1..=4usize {
        let mut entries =
            scale_entries(vec_pair_trace_entries("T", a), &(two_i.clone() * w(1, 3)));
        entries.extend(scale_entries(
            vec_pair_eps_entries("Tt", a),
            &(-ExactScalar::i() * w(2, 6)),
        ));
        rows.push(entries);
    }
    fams.push(("T trace with dual epsilon".to_string(), rows_to_matrix(rows)));

    // 2i a3b7 Tt^m_{ma} - i a2b4 eps^{ktm}_a T_{k,tm} = 0.
    let mut rows = Vec::new();
    for a in 1..=4usize {
        let mut entries =
            scale_entries(vec_pair_trace_entries("Tt", a), &(two_i.clone() * w(2, 6)));
        entries.extend(scale_entries(
            vec_pair_eps_entries("T", a),
            &(-ExactScalar::i() * w(1, 3)),
        ));
        rows.push(entries);
    }
    fams.push(("dual T trace with T epsilon".to_string(), rows_to_matrix(rows)));

    // i eps[a2b6 Rt + a3b8 Dt] + 2 a2b5 tr R + 2 a3b9 tr D = 0 (i eps fitted
    // to the Euclidean transcription as -1/2 of the displayed 2i factor).
    let mut entries = scale_entries(
        double_trace_entries("R"),
        &(ExactScalar::from_int(2) * w(1, 4)),
    );
    entries.extend(scale_entries(
        double_trace_entries("D"),
        &(ExactScalar::from_int(2) * w(2, 8)),
    ));
    entries.extend(scale_entries(double_eps_entries("Rt"), &(-w(1, 5))));
    entries.extend(scale_entries(double_eps_entries("Dt"), &(-w(2, 7))));
    fams.push((
        "R and D double traces with dual epsilons".to_string(),
        rows_to_matrix(vec![entries]),
    ));

    // Mirror: 2 a2b6 tr Rt + 2 a3b8 tr Dt - eps[a2b5 R + a3b9 D] = 0.
    let mut entries = scale_entries(
        double_trace_entries("Rt"),
        &(ExactScalar::from_int(2) * w(1, 5)),
    );
    entries.extend(scale_entries(
        double_trace_entries("Dt"),
        &(ExactScalar::from_int(2) * w(2, 7)),
    ));
    entries.extend(scale_entries(double_eps_entries("R"), &(-w(1, 4))));
    entries.extend(scale_entries(double_eps_entries("D"), &(-w(2, 8))));
    fams.push((
        "dual R and D double traces with plain epsilons".to_string(),
        rows_to_matrix(vec![entries]),
    ));
    fams
}

/// Report of the standard-case specialization of the generalized system.
#[derive(Clone, Debug)]
pub struct StandardRecovery {
    /// Row-space equality between the specialized generalized system and
    /// the directly built standard system, on the active columns.
    pub row_space_equal: bool,
    /// Membership of every constraint family row after specialization.
    pub families_in_row_space: Vec<(String, bool)>,
    /// Whether turning beta_9 back on changes the constraint row space.
    pub beta9_changes_row_space: bool,
}

/// Specializes the generalized symmetry system to the standard coefficients
/// and verifies it reproduces the standard-case constraints.
pub fn recover_standard_case() -> Result<StandardRecovery, Error> {
    let std_report = symmetry_constraint_system(&Spin2Coefficients::standard())?;
    let basis = std_report.system.matrix.row_basis();

    let mut families_in_row_space = Vec::new();
    for (label, rows) in standard_constraint_families() {
        let mut ok = true;
        for r in 0..rows.rows() {
            ok &= basis.contains(&rows.row(r))?;
        }
        families_in_row_space.push((label, ok));
    }

    // Direct standard build: same coefficients, so "row-space equality" is
    // checked against an independently assembled transposition system.
    let map = multispinor_map(&Spin2Coefficients::standard())?;
    let direct = transposition_rows(&map);
    let row_space_equal = std_report.system.matrix.same_row_space(&direct)?;

    // beta_9 enters only through the product alpha_3 beta_9; turning it
    // back on therefore requires a nonzero alpha_3. The perturbation
    // activates exactly the D block (beta_7 = beta_8 = 0 keep the other
    // alpha_3 blocks off).
    let mut perturbed_coeffs = Spin2Coefficients::standard();
    perturbed_coeffs.alpha[2] = BigRational::one();
    perturbed_coeffs.beta[6] = BigRational::zero();
    perturbed_coeffs.beta[7] = BigRational::zero();
    perturbed_coeffs.beta[8] = BigRational::one();
    let perturbed = symmetry_constraint_system(&perturbed_coeffs)?;
    let beta9_changes_row_space = !perturbed
        .system
        .matrix
        .same_row_space(&std_report.system.matrix)?;

    Ok(StandardRecovery {
        row_space_equal,
        families_in_row_space,
        beta9_changes_row_space,
    })
}

/// Momentum-space dynamical system for the rank-4 field, intersected with
/// the symmetry constraints.
#[derive(Clone, Debug)]
pub struct Spin2Dynamics {
    pub momentum: FourMomentum,
    pub mass: BigRational,
    /// Dynamics rows plus symmetry rows, over all components.
    pub system: ConstraintSystem,
    /// Nullity of the dynamics rows alone, over all components.
    pub dynamics_nullity: usize,
    /// Nullity of the combined system restricted to active components.
    pub active_nullity: usize,
    /// Labeled derived relations with membership flags.
    pub derived_in_row_space: Vec<(String, bool)>,
}

/// Applies the single-index Dirac condition on the left and right factor of
/// every component column and stacks the result with the symmetry rows.
pub fn dynamics_system(
    p: &FourMomentum,
    m: &BigRational,
    coeffs: &Spin2Coefficients,
) -> Result<Spin2Dynamics, Error> {
    let d = DiracSet::standard();
    let map = multispinor_map(coeffs)?;
    let mass = ExactScalar::from_rational(-m.clone());
    let k = crate::bw_spin1::momentum_dirac_operator(&d, p, &mass, &ExactScalar::zero())?;

    // Independent factor matrices: gamma R (4) and sigma R (6); the
    // pseudo-tensor family folds onto the sigma span through duality.
    let gamma_r = family_matrices(&d, Family::Vector)?;
    let sigma_r = family_matrices(&d, Family::Tensor)?;
    let mut pool_expansion: Vec<Vec<(usize, ExactScalar)>> = Vec::new();
    for g in &gamma_r {
        let _ = g;
        let idx = pool_expansion.len();
        pool_expansion.push(vec![(idx, ExactScalar::one())]);
    }
    for s in &sigma_r {
        let _ = s;
        let idx = pool_expansion.len();
        pool_expansion.push(vec![(idx, ExactScalar::one())]);
    }
    let basis16 = crate::spinor::classify_matrix_basis(&d)?;
    for (kk, partner, c) in &basis16.duality {
        let _ = kk;
        pool_expansion.push(vec![(4 + *partner, c.clone())]);
    }

    // First-index condition: for each independent right factor s and each
    // matrix entry (a,b): sum over components with that right factor of
    // weight * expansion * (K L)[a,b] = 0. Third-index condition mirrors it.
    let kl: Vec<ExactMatrix> = map
        .pool
        .iter()
        .map(|l| k.mat_mul(l))
        .collect::<Result<_, _>>()?;
    let mut rows = ExactMatrix::zeros(2 * 10 * 16, N_COMPONENTS);
    for (c, (li, ri, w)) in map.factors.iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        // Left condition: group by independent expansion of the right pool.
        for (s, coef) in &pool_expansion[*ri] {
            for a in 0..4 {
                for b in 0..4 {
                    let v = kl[*li][(a, b)].clone();
                    if v.is_zero() {
                        continue;
                    }
                    let r = s * 16 + a * 4 + b;
                    let acc = rows[(r, c)].clone() + w.clone() * coef.clone() * v;
                    rows.set(r, c, acc);
                }
            }
        }
        // Right condition: group by independent expansion of the left pool.
        for (s, coef) in &pool_expansion[*li] {
            for a in 0..4 {
                for b in 0..4 {
                    let v = kl[*ri][(a, b)].clone();
                    if v.is_zero() {
                        continue;
                    }
                    let r = 160 + s * 16 + a * 4 + b;
                    let acc = rows[(r, c)].clone() + w.clone() * coef.clone() * v;
                    rows.set(r, c, acc);
                }
            }
        }
    }
    let dynamics_nullity = N_COMPONENTS - rows.rank();


    let symmetry = contraction_rows(&map)?;
    let full = rows.vstack(&symmetry)?;
    let system = ConstraintSystem::solve(full, component_labels());
    let active_nullity = active_nullity_of(&system.matrix, coeffs);
    let basis = system.matrix.row_basis();

    // Derived relations for the standard blocks, in stored doubled units:
    // p /\ G - m T per (kappa; mu nu) and p.T + m G per (kappa; nu).
    let mut derived_in_row_space = Vec::new();
    let pair_slot = |mu: usize, lam: usize| -> (usize, i64) {
        if mu < lam {
            (PAIRS.iter().position(|&q| q == (mu, lam)).unwrap(), 1)
        } else {
            (PAIRS.iter().position(|&q| q == (lam, mu)).unwrap(), -1)
        }
    };
    let w_gt = &coeffs.alpha[0] * &coeffs.beta[0];
    let w_t = &coeffs.alpha[1] * &coeffs.beta[3];
    if !w_gt.is_zero() && !w_t.is_zero() {
        let mut ok = true;
        for kap in 0..4 {
            for (slot, (mu, nu)) in PAIRS.iter().enumerate() {
                let mut r = ExactMatrix::zeros(1, N_COMPONENTS);
                r.set(0, component_slot("G", kap, nu - 1), p.component(*mu));
                r.set(0, component_slot("G", kap, mu - 1), -p.component(*nu));
                r.set(
                    0,
                    component_slot("T", kap, slot),
                    -ExactScalar::from_rational(m.clone()),
                );
                ok &= basis.contains(&r)?;
            }
        }
        derived_in_row_space.push(("T from curl of G".to_string(), ok));

        let mut ok = true;
        for kap in 0..4 {
            for nu in 1..=4usize {
                let mut r = ExactMatrix::zeros(1, N_COMPONENTS);
                for mu in 1..=4usize {
                    if mu != nu {
                        let (slot, s) = pair_slot(mu, nu);
                        let acc = r[(0, component_slot("T", kap, slot))].clone()
                            + p.component(mu) * ExactScalar::from_int(s);
                        r.set(0, component_slot("T", kap, slot), acc);
                    }
                }
                r.set(
                    0,
                    component_slot("G", kap, nu - 1),
                    ExactScalar::from_rational(m.clone()),
                );
                ok &= basis.contains(&r)?;
            }
        }
        derived_in_row_space.push(("divergence of T".to_string(), ok));

        let mut ok = true;
        for kap in 0..4 {
            let mut r = ExactMatrix::zeros(1, N_COMPONENTS);
            for mu in 1..=4usize {
                r.set(0, component_slot("G", kap, mu - 1), p.component(mu));
            }
            ok &= basis.contains(&r)?;
        }
        derived_in_row_space.push(("transversality of G".to_string(), ok));
    }

    Ok(Spin2Dynamics {
        momentum: p.clone(),
        mass: m.clone(),
        system,
        dynamics_nullity,
        active_nullity,
        derived_in_row_space,
    })
}

/// Residual and contraction report for the second-order equation on a
/// rank-2 tensor block.
#[derive(Clone, Debug)]
pub struct SecondOrderReport {
    /// `(1/m^2)[p_nu p^mu G_k^nu - p.p G_k^mu] - G_k^mu`, 4x4.
    pub residual: ExactMatrix,
    /// `F_k = i p_mu G^mu_k`.
    pub f_vector: [ExactScalar; 4],
    /// `p.F`.
    pub f_divergence: ExactScalar,
    /// The exact trace identity tying the residual trace to `p.F` and the
    /// trace of `G`; always zero by construction, recorded as a check.
    pub trace_identity: ExactScalar,
}

/// Evaluates the second-order residual for an explicit `G` (stored row-major
/// as `G[k][mu]`).
pub fn g_second_order_check(
    p: &FourMomentum,
    m: &BigRational,
    g: &ExactMatrix,
) -> Result<SecondOrderReport, Error> {
    if g.rows() != 4 || g.cols() != 4 {
        return Err(Error::Shape("G must be 4x4".into()));
    }
    let msq = ExactScalar::from_rational(m * m);
    let msq_inv = msq
        .inv()
        .ok_or_else(|| Error::Domain("mass must be nonzero".into()))?;
    let pp = ExactScalar::from_rational(p.p_dot_p());
    let pv: Vec<ExactScalar> = (1..=4).map(|mu| p.component(mu)).collect();

    let residual = ExactMatrix::from_fn(4, 4, |kap, mu| {
        let mut acc = ExactScalar::zero();
        for nu in 0..4 {
            acc = acc + pv[nu].clone() * pv[mu].clone() * g[(kap, nu)].clone();
        }
        acc = acc - pp.clone() * g[(kap, mu)].clone();
        msq_inv.clone() * acc - g[(kap, mu)].clone()
    });

    let f_vector: [ExactScalar; 4] = std::array::from_fn(|kap| {
        let mut acc = ExactScalar::zero();
        for mu in 0..4 {
            acc = acc + pv[mu].clone() * g[(kap, mu)].clone();
        }
        ExactScalar::i() * acc
    });
    let mut f_divergence = ExactScalar::zero();
    for kap in 0..4 {
        f_divergence = f_divergence + pv[kap].clone() * f_vector[kap].clone();
    }

    // Trace identity: trace(residual) + (1/m^2)(i p.F + p.p tr G) + tr G = 0.
    let mut tr_res = ExactScalar::zero();
    let mut tr_g = ExactScalar::zero();
    for kap in 0..4 {
        tr_res = tr_res + residual[(kap, kap)].clone();
        tr_g = tr_g + g[(kap, kap)].clone();
    }
    let trace_identity = tr_res
        + msq_inv * (ExactScalar::i() * f_divergence.clone() + pp * tr_g.clone())
        + tr_g;

    Ok(SecondOrderReport {
        residual,
        f_vector,
        f_divergence,
        trace_identity,
    })
}

/// A transverse-traceless on-shell `G` built by projector, for oracle tests.
pub fn transverse_traceless_example(p: &FourMomentum) -> Result<ExactMatrix, Error> {
    // Projector theta_{mu nu} = delta_{mu nu} - p_mu p_nu / p.p, applied to
    // a fixed seed symmetric tensor, then trace-removed.
    let pp = ExactScalar::from_rational(p.p_dot_p());
    let pp_inv = pp
        .inv()
        .ok_or_else(|| Error::Domain("momentum must be off the light cone".into()))?;
    let pv: Vec<ExactScalar> = (1..=4).map(|mu| p.component(mu)).collect();
    let theta = ExactMatrix::from_fn(4, 4, |mu, nu| {
        let kron = if mu == nu {
            ExactScalar::one()
        } else {
            ExactScalar::zero()
        };
        kron - pv[mu].clone() * pv[nu].clone() * pp_inv.clone()
    });
    let seed = ExactMatrix::from_int_rows(&[
        &[2, 1, 0, 0],
        &[1, -1, 3, 0],
        &[0, 3, 1, 1],
        &[0, 0, 1, 0],
    ]);
    let projected = theta.mat_mul(&seed)?.mat_mul(&theta)?;
    // Remove the theta-trace part: G -> G - (tr G / tr theta) theta.
    let mut tr = ExactScalar::zero();
    let mut tr_theta = ExactScalar::zero();
    for k in 0..4 {
        tr = tr + projected[(k, k)].clone();
        tr_theta = tr_theta + theta[(k, k)].clone();
    }
    let scale = tr
        * tr_theta
            .inv()
            .ok_or_else(|| Error::Internal("projector trace vanished".into()))?;
    Ok(ExactMatrix::from_fn(4, 4, |i, j| {
        projected[(i, j)].clone() - scale.clone() * theta[(i, j)].clone()
    }))
}
