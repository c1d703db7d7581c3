use criterion::{criterion_group, criterion_main, Criterion};
use nuspectra::batch::{self, GridSpec, SpectrumRequest, SweepParam, SweepRequest};
use nuspectra::oracle::{self, EigenOptions, Grid};
use nuspectra::radial::PotentialParams;
use nuspectra::Execution;

fn params() -> PotentialParams {
    PotentialParams {
        a: 40.0,
        b: 3.0,
        lambda: 0.5,
        ..Default::default()
    }
}

fn eigenpairs(c: &mut Criterion) {
    let p = params();
    let grid = Grid::radial(p.lambda, 20.0, 4000).unwrap();
    let mut group = c.benchmark_group("eigenpairs");
    for (name, execution) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
        let opts = EigenOptions {
            execution,
            ..Default::default()
        };
        group.bench_function(name, |b| {
            b.iter(|| oracle::radial_solve_with(|r| p.radial_potential(r), &grid, 8, p.kinetic(), &opts).unwrap())
        });
    }
    group.finish();
}

fn sweep(c: &mut Criterion) {
    let mut base = SpectrumRequest::new(params(), 3);
    base.n_max = 2;
    base.l_max = 2;
    base.numeric = true;
    base.grid = GridSpec {
        rmax_factor: 20.0,
        points: 1500,
    };
    let values: Vec<f64> = (0..16).map(|i| 20.0 + 2.0 * f64::from(i)).collect();
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for (name, execution) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
        let req = SweepRequest {
            base: SpectrumRequest { execution, ..base },
            param: SweepParam::A,
            values: values.clone(),
            limiting: None,
        };
        group.bench_function(name, |b| b.iter(|| batch::sweep(&req).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, eigenpairs, sweep);
criterion_main!(benches);
