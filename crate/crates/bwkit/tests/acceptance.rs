//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line with its runtime.

use std::time::{Duration, Instant};

use num::{BigRational, One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use bwkit::bw_spin1::{
    ast_dispersion, bw_system_spin1, proca_reduction_check, sign_operator_enumeration,
    wth_mapping, MassSign,
};
use bwkit::matrix::ExactMatrix;
use bwkit::momentum::{pythagorean_momenta, FourMomentum};
use bwkit::polarization::{eb_from_potential, helicity_basis, helicity_operator, standard_basis, Label};
use bwkit::quanta::{bivector_relation, dynamical_invariants, propagator, spin_half_relation};
use bwkit::scalar::{rat, ExactScalar};
use bwkit::spin2::{
    recover_standard_case, standard_divergence_report, symmetry_constraint_system,
    Spin2Coefficients,
};
use bwkit::spinor::DiracSet;
use bwkit::vector_rep::{build_gamma5, build_vector_rep, dispersion_spectrum, WaveOperatorParams};

#[must_use]
fn criterion(n: u32, desc: &str, limit: Duration, f: impl FnOnce() -> Result<(), String>) -> bool {
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed();
    let within = elapsed <= limit;
    let verdict = if outcome.is_ok() && within { "PASS" } else { "FAIL" };
    println!("criterion {n} ({desc}): {verdict} [{elapsed:.2?}]");
    if let Err(msg) = &outcome {
        println!("  failure: {msg}");
    }
    if !within {
        println!("  budget exceeded: {elapsed:?} > {limit:?}");
    }
    outcome.is_ok() && within
}

fn ensure(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

fn criterion_1_representation_identities() -> bool {
    criterion(1, "representation identities", Duration::from_secs(1), || {
        let d = DiracSet::standard();
        d.verify_reflection_properties()
            .map_err(|e| format!("reflection suite: {e}"))?;
        let rep = build_vector_rep();
        // Trace identity of the generator family.
        let mut trace_sum = ExactMatrix::zeros(4, 4);
        for a in 1..=4 {
            trace_sum = trace_sum + rep.gamma(a, a).clone();
        }
        let two = ExactMatrix::identity(4).scale(&ExactScalar::from_int(2));
        ensure(trace_sum == two, "sum of diagonal generators is not 2*I")?;
        // gamma5 family matches its commutator closed form entry-for-entry.
        let g5 = build_gamma5(&rep).map_err(|e| e.to_string())?;
        for a in 1..=4usize {
            for b in 1..=4usize {
                if a == b {
                    continue;
                }
                ensure(
                    &g5[a - 1][b - 1] == rep.gamma5(a, b),
                    "gamma5 closed form mismatch",
                )?;
            }
        }
        // The printed parity block: gamma_44 = diag(1,1,1,-1).
        let g44 = rep.gamma(4, 4);
        for i in 0..4 {
            let expect = ExactScalar::from_int(if i == 3 { -1 } else { 1 });
            ensure(g44[(i, i)] == expect, "gamma_44 diagonal mismatch")?;
        }
        Ok(())
    })
}

fn criterion_2_spectrum_reproduction() -> bool {
    criterion(2, "spectrum reproduction", Duration::from_secs(1), || {
        let rep = build_vector_rep();
        let sp = dispersion_spectrum(&rep, &WaveOperatorParams::from_ints(-7, -8, 1))
            .map_err(|e| e.to_string())?;
        let m2 = sp
            .branch(1)
            .and_then(|b| b.mass_sq_over_m_sq.clone())
            .ok_or("missing spin-1 branch")?;
        ensure(m2 == rat(4, 3), "dispersion_spectrum(-7,-8) != 4/3")?;
        let ast = ast_dispersion(&rat(7, 1), &rat(8, 1)).map_err(|e| e.to_string())?;
        ensure(
            ast.branches[0].reported_mass_sq == Some(rat(4, 3)),
            "ast_dispersion(7,8) odd branch != 4/3",
        )?;
        // A + 1 = B pins the vector branch; A - 1 = B the scalar branch.
        let sp = dispersion_spectrum(&rep, &WaveOperatorParams::from_ints(3, 4, 1))
            .map_err(|e| e.to_string())?;
        ensure(
            sp.branch(1).and_then(|b| b.mass_sq_over_m_sq.clone()) == Some(BigRational::one()),
            "A+1=B does not give m^2 on the vector branch",
        )?;
        let sp = dispersion_spectrum(&rep, &WaveOperatorParams::from_ints(5, 4, 1))
            .map_err(|e| e.to_string())?;
        ensure(
            sp.branch(0).and_then(|b| b.mass_sq_over_m_sq.clone()) == Some(BigRational::one()),
            "A-1=B does not give m^2 on the scalar branch",
        )?;
        Ok(())
    })
}

fn criterion_3_polarization_suite() -> bool {
    criterion(3, "polarization suite", Duration::from_secs(1), || {
        let p = FourMomentum::from_ints([3, 4, 12], 85).map_err(|e| e.to_string())?;
        // Standard-basis parity eigenvalues (+, +, +, -).
        let basis = standard_basis(&p).map_err(|e| e.to_string())?;
        for (idx, v) in basis.iter().enumerate() {
            let image = v
                .parity_image(|q, label| {
                    Ok(standard_basis(q)?[Label::ALL
                        .iter()
                        .position(|&l| l == label)
                        .unwrap()]
                    .clone())
                })
                .map_err(|e| e.to_string())?;
            let sign = ExactScalar::from_int(if idx == 3 { -1 } else { 1 });
            for k in 0..4 {
                ensure(
                    image.components[k] == sign.clone() * v.components[k].clone(),
                    "standard-basis parity eigenvalue mismatch",
                )?;
            }
        }
        // Helicity eigenvalues (+1, -1, 0, 0).
        let zero = BigRational::zero();
        let hel = helicity_basis(&p, &zero, &zero).map_err(|e| e.to_string())?;
        let j = helicity_operator(&p).map_err(|e| e.to_string())?;
        for v in &hel {
            let jv = v.apply(&j);
            let eig = match v.label {
                Label::Plus => ExactScalar::one(),
                Label::Minus => ExactScalar::from_int(-1),
                _ => ExactScalar::zero(),
            };
            for k in 0..4 {
                ensure(
                    jv.components[k] == eig.clone() * v.components[k].clone(),
                    "helicity eigenvalue mismatch",
                )?;
            }
        }
        // Helicity +-1 vectors are NOT parity eigenvectors.
        let plus = hel.iter().find(|v| v.label == Label::Plus).unwrap();
        let image = plus
            .parity_image(|q, label| {
                Ok(helicity_basis(q, &zero, &zero)?[Label::ALL
                    .iter()
                    .position(|&l| l == label)
                    .unwrap()]
                .clone())
            })
            .map_err(|e| e.to_string())?;
        let is_eigen = [1i64, -1].iter().any(|s| {
            (0..4).all(|k| {
                image.components[k]
                    == ExactScalar::from_int(*s) * plus.components[k].clone()
            })
        });
        ensure(!is_eigen, "helicity +1 unexpectedly a parity eigenvector")?;
        // Longitudinal fields E(p,0) = (i m / |p|) p, B = 0 at Pythagorean
        // momenta.
        for q in pythagorean_momenta(12) {
            if q.is_massless() || q.spatial().iter().all(BigRational::is_zero) {
                continue;
            }
            let norm = q.spatial_norm().ok_or("irrational |p|")?;
            let hel = helicity_basis(&q, &zero, &zero).map_err(|e| e.to_string())?;
            let longitudinal = hel.iter().find(|v| v.label == Label::Zero).unwrap();
            let fields = eb_from_potential(longitudinal);
            let m = q.mass().clone();
            for (k, pk) in q.spatial().iter().enumerate() {
                ensure(
                    fields.e[k] == ExactScalar::imaginary(&m / &norm * pk),
                    "longitudinal E field mismatch",
                )?;
                ensure(fields.b[k].is_zero(), "longitudinal B field nonzero")?;
            }
        }
        Ok(())
    })
}

fn criterion_4_spin1_shell() -> bool {
    criterion(4, "spin-1 coupled system", Duration::from_secs(5), || {
        let momenta: Vec<FourMomentum> = pythagorean_momenta(40)
            .into_iter()
            .filter(|p| !p.is_massless())
            .take(20)
            .collect();
        ensure(momenta.len() == 20, "fewer than 20 exact massive momenta")?;
        for p in &momenta {
            let m = p.mass().clone();
            let sys = bw_system_spin1(p, &m, MassSign::Minus).map_err(|e| e.to_string())?;
            ensure(sys.system.nullity() == 3, "on-shell nullity != 3")?;
            ensure(
                sys.all_relations_in_row_space(),
                "derived relation missing from row space",
            )?;
            let off = bw_system_spin1(p, &(&m + BigRational::one()), MassSign::Minus)
                .map_err(|e| e.to_string())?;
            ensure(off.system.nullity() == 0, "off-shell nullity != 0")?;
        }
        let p = FourMomentum::from_ints([0, 0, 4], 5).map_err(|e| e.to_string())?;
        let textbook = proca_reduction_check(
            &p,
            &rat(3, 1),
            &[BigRational::one(), BigRational::zero(), BigRational::zero(), rat(1, 2)],
        )
        .map_err(|e| e.to_string())?;
        ensure(
            textbook.proca_curl_in_row_space
                && textbook.proca_div_in_row_space
                && textbook.subtraction_in_row_space
                && textbook.dual_subtraction_in_row_space,
            "textbook reduction constraints not all in row space",
        )?;
        Ok(())
    })
}

fn criterion_5_generalized_spin1() -> bool {
    criterion(5, "generalized spin-1", Duration::from_secs(5), || {
        let mut rng = StdRng::seed_from_u64(0xACCE97);
        let mut samples = 0usize;
        while samples < 20 {
            let a = rat(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=4));
            let c = rat(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=4));
            let b = rat(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=4));
            let d = if rng.gen_bool(0.5) { b.clone() } else { -&b };
            if a.is_zero() && c.is_zero() {
                continue;
            }
            samples += 1;
            let params = [a, b, c, d];
            let branches = wth_mapping(&params).map_err(|e| e.to_string())?;
            for br in &branches {
                ensure(
                    br.satisfies_substitution(&params),
                    "round-trip substitution failed",
                )?;
            }
        }
        let rep = sign_operator_enumeration().map_err(|e| e.to_string())?;
        ensure(rep.combinations.len() == 16, "expected 16 combinations")?;
        ensure(rep.distinct_systems == 12, "expected 12 distinct systems")?;
        ensure(rep.duplicate_combinations == 4, "expected 4 duplicates")?;
        Ok(())
    })
}

fn criterion_6_spin2_standard() -> bool {
    criterion(6, "spin-2 standard case", Duration::from_secs(60), || {
        let rep = standard_divergence_report().map_err(|e| e.to_string())?;
        for (label, ok) in &rep.implied_families {
            ensure(*ok, &format!("constraint family not in row space: {label}"))?;
        }
        // The printed claim is an all-zero kernel; the computed kernel is
        // reported and the discrepancy surfaced as informational.
        println!(
            "  informational: printed all-zero claim vs computed component nullity {}",
            rep.active_nullity
        );
        for (label, ok) in &rep.decoupled_families {
            if !ok {
                println!("  informational: printed decoupled form not implied: {label}");
            }
        }
        ensure(
            rep.active_nullity == 35,
            "component nullity drifted from the machine-checked value",
        )?;
        Ok(())
    })
}

fn criterion_7_spin2_generalized() -> bool {
    criterion(7, "spin-2 generalized case", Duration::from_secs(60), || {
        let std_rep = symmetry_constraint_system(&Spin2Coefficients::standard())
            .map_err(|e| e.to_string())?;
        let gen_rep = symmetry_constraint_system(&Spin2Coefficients::generic())
            .map_err(|e| e.to_string())?;
        ensure(
            gen_rep.system.nullity() > std_rep.active_nullity,
            "generalized kernel not strictly larger",
        )?;
        let rec = recover_standard_case().map_err(|e| e.to_string())?;
        ensure(rec.row_space_equal, "standard row space not recovered")?;
        ensure(
            rec.families_in_row_space.iter().all(|(_, ok)| *ok),
            "constraint family lost in recovery",
        )?;
        Ok(())
    })
}

fn criterion_8_quanta() -> bool {
    criterion(8, "quanta", Duration::from_secs(1), || {
        // Both relation constructors assert their involution identities
        // internally and fail otherwise.
        let n = [rat(3, 13), rat(4, 13), rat(12, 13)];
        spin_half_relation(&n, &rat(5, 1)).map_err(|e| e.to_string())?;
        bivector_relation(&n).map_err(|e| e.to_string())?;
        let m = rat(3, 1);
        let mut points = 0usize;
        for i in -2i64..=2 {
            for j in -2i64..=2 {
                let spatial = [rat(i, 1), rat(j, 2), rat(1, 3)];
                let k0 = rat(i + j, 5);
                let val = propagator(&spatial, &k0, &m, &m).map_err(|e| e.to_string())?;
                let scale = ExactScalar::from_rational(
                    BigRational::one() / (&val.k_squared + &m * &m),
                );
                ensure(
                    val.matrix == ExactMatrix::identity(4).scale(&scale),
                    "propagator does not collapse at mu = m",
                )?;
                points += 1;
            }
        }
        ensure(points == 25, "expected 25 rational points")?;
        let p = FourMomentum::from_ints([0, 0, 4], 5).map_err(|e| e.to_string())?;
        let eps = [
            ExactScalar::one(),
            ExactScalar::i(),
            ExactScalar::zero(),
            ExactScalar::zero(),
        ];
        let inv = dynamical_invariants(&p, &eps, &WaveOperatorParams::from_ints(0, -1, 3))
            .map_err(|e| e.to_string())?;
        ensure(
            inv.t_scalar_portion.is_zero()
                && inv.j_scalar_portion.iter().all(ExactScalar::is_zero),
            "transverse scalar portion does not vanish",
        )?;
        Ok(())
    })
}

fn criterion_9_deterministic_json() -> bool {
    criterion(9, "deterministic verify-all --json", Duration::from_secs(600), || {
        let bin = env!("CARGO_BIN_EXE_bwkit");
        let run = || {
            std::process::Command::new(bin)
                .args(["verify-all", "--json"])
                .env_remove("BWKIT_REPORT_DIR")
                .output()
                .map_err(|e| e.to_string())
        };
        let first = run()?;
        let second = run()?;
        ensure(first.status.success(), "first run failed")?;
        ensure(second.status.success(), "second run failed")?;
        ensure(!first.stdout.is_empty(), "empty JSON output")?;
        ensure(
            first.stdout == second.stdout,
            "verify-all --json output differs between runs",
        )?;
        Ok(())
    })
}

/// Runs every criterion serially (exact-arithmetic timings are only
/// meaningful without thread contention) and reports one line each.
#[test]
fn acceptance_criteria() {
    let outcomes = [
        criterion_1_representation_identities(),
        criterion_2_spectrum_reproduction(),
        criterion_3_polarization_suite(),
        criterion_4_spin1_shell(),
        criterion_5_generalized_spin1(),
        criterion_6_spin2_standard(),
        criterion_7_spin2_generalized(),
        criterion_8_quanta(),
        criterion_9_deterministic_json(),
    ];
    let failed: Vec<usize> = outcomes
        .iter()
        .enumerate()
        .filter(|(_, ok)| !**ok)
        .map(|(i, _)| i + 1)
        .collect();
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
