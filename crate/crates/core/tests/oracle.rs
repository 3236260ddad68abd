use dkp_core::oracle::{compare, discretize, limit_energy_squared, solve_lowest};
use dkp_core::spectrum::{self, energy_natural_limit, natural_energy_squared};
use dkp_core::wavefunction::{natural_solution, unnatural_solution};
use dkp_core::{Branch, ModelParams, Sector};

const REF: ModelParams = ModelParams::REFERENCE;

#[test]
fn doubling_the_grid_quarters_the_error() {
    let exact = natural_energy_squared(&REF, 2, 1);
    let errs: Vec<f64> = [512, 1024, 2048]
        .iter()
        .map(|&g| {
            let p = discretize(&REF, Sector::Natural(1), g).unwrap();
            (solve_lowest(&p, 3).unwrap()[2] - exact).abs()
        })
        .collect();
    for w in errs.windows(2) {
        let ratio = w[0] / w[1];
        assert!((3.0..=5.0).contains(&ratio), "ratio {ratio}");
    }
}

#[test]
fn reference_sweep_agrees() {
    for j in 0..=2 {
        let report = compare(&REF, Sector::Natural(j), 4, 8192, 1e-6, |n| {
            Ok(spectrum::energy_natural(&REF, n, j, Branch::Plus)?.value)
        })
        .unwrap();
        assert!(report.passed, "{report:?}");
    }
}

#[test]
fn corrupted_centrifugal_term_is_caught() {
    let report = compare(&REF, Sector::Natural(2), 4, 4096, 1e-6, |n| {
        Ok((natural_energy_squared(&REF, n, 2) - REF.alpha * 2.0).sqrt())
    })
    .unwrap();
    assert!(!report.passed);
    assert!(report.rows.iter().all(|r| r.rel_error > 1e-4));
}

#[test]
fn richardson_recovers_the_undeformed_limit() {
    for j in 0..=2 {
        for n in 0..=2 {
            let e = limit_energy_squared(&REF, Sector::Natural(j), n, 32768).unwrap().sqrt();
            let exact = energy_natural_limit(&REF, n, j, Branch::Plus).unwrap().value;
            assert!((e - exact).abs() / exact < 1e-6, "n={n} J={j}: {e} vs {exact}");
        }
    }
}

#[test]
fn oracle_and_eigenfunction_agree_on_unnatural_levels() {
    let p = REF.with_lambda0(0.0);
    for sector in [Sector::UnnaturalPhi, Sector::UnnaturalH0] {
        let e2 = solve_lowest(&discretize(&p, sector, 8192).unwrap(), 3).unwrap();
        for (n, v) in e2.iter().enumerate() {
            let sol = unnatural_solution(&p, n as u32, sector, 512).unwrap();
            assert_eq!(sol.node_count(10_000), n);
            assert!((v.sqrt() - sol.energy).abs() / sol.energy < 1e-5);
        }
    }
}

#[test]
fn eigenfunctions_on_an_independent_grid() {
    for n in 0..=5 {
        let sol = natural_solution(&REF, n, 1, 2048).unwrap();
        let r_max = 1.0 / REF.alpha.sqrt();
        let samples = (1..1000).map(|i| sol.primary_at_r(r_max * f64::from(i) / 1000.0));
        assert_eq!(dkp_core::wavefunction::count_sign_changes(samples), n as usize);
    }
}
