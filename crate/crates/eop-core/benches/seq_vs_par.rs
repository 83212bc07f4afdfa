//! Sequential vs data-parallel comparison for the grid-heavy kernels.
//!
//! The parallel feature gates a rayon-backed map; `par::set_parallel(false)`
//! forces the sequential fallback at runtime so both paths are measured from
//! one binary.  Run with `cargo bench -p eop-core`.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_complex::Complex64;

use eop_core::families::{angular_potential, radial_potential, solve_params, Couplings, FamilyId};
use eop_core::numverify::fd::{discretize, residual_with};
use eop_core::numverify::{eigen_tridiag, GridSpec};
use eop_core::par;
use eop_core::spectra::{lambda_ell, AngularWavefunction};

const MODES: [(&str, bool); 2] = [("sequential", false), ("parallel", true)];

fn bench_discretize_and_diagonalize(c: &mut Criterion) {
    let couplings = Couplings::new(1.0, 4.0, 0.0, 1, 1).unwrap();
    let grid = GridSpec::new_radial(1e-4, GridSpec::radial_rmax(1.0), 8192).unwrap();
    let mut group = c.benchmark_group("radial_discretize_diagonalize");
    group.sample_size(10);
    for (name, enabled) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            par::set_parallel(enabled);
            b.iter(|| {
                let tri = discretize(|r| radial_potential(&couplings, 6.0, r), &grid).unwrap();
                eigen_tridiag(&tri, 4).unwrap()
            });
        });
    }
    group.finish();
    par::set_parallel(true);
}

fn bench_angular_residual(c: &mut Criterion) {
    let family = FamilyId::PtEckart;
    let couplings = Couplings::new(1.0, 4.0, 2.0, 0, 1).unwrap();
    let sp = solve_params(family, &couplings).unwrap();
    let (lo, hi) = family.angular_domain();
    let grid = GridSpec::new(lo, hi, 4096).unwrap();
    let aw = AngularWavefunction::new(family, &sp, 0, 1).unwrap();
    let lam = lambda_ell(family, &sp, 0).unwrap();
    let mut group = c.benchmark_group("angular_residual");
    group.sample_size(10);
    for (name, enabled) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            par::set_parallel(enabled);
            b.iter(|| {
                residual_with(
                    |phi| aw.eval(phi),
                    lam * lam,
                    |phi| angular_potential(family, &sp, &couplings, 1, phi),
                    &grid,
                    8,
                    128,
                )
                .unwrap()
            });
        });
    }
    group.finish();
    par::set_parallel(true);
}

fn bench_identity_grid(c: &mut Criterion) {
    let grid = GridSpec::new(-1.5, 1.5, 65_536).unwrap();
    let mut group = c.benchmark_group("potential_grid_sampling");
    group.sample_size(10);
    let couplings = Couplings::new(1.0, 4.0, 2.0, 0, 2).unwrap();
    let family = FamilyId::PtRosenMorse;
    let sp = solve_params(family, &couplings).unwrap();
    let (lo, hi) = family.angular_domain();
    let width = hi - lo;
    for (name, enabled) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            par::set_parallel(enabled);
            b.iter(|| {
                par::map_range(grid.npoints, |i| {
                    // Fold the long benchmark axis into the open sector.
                    let u = (i as f64 + 0.5) / grid.npoints as f64;
                    let phi = lo + 1e-3 + (width - 2e-3) * u;
                    angular_potential(family, &sp, &couplings, 2, phi)
                        .unwrap_or(Complex64::new(0.0, 0.0))
                })
            });
        });
    }
    group.finish();
    par::set_parallel(true);
}

criterion_group!(
    benches,
    bench_discretize_and_diagonalize,
    bench_angular_residual,
    bench_identity_grid
);
criterion_main!(benches);
