use nuspectra::batch::{self, GridSpec, SpectrumRequest, SweepParam, SweepRequest};
use nuspectra::radial::PotentialParams;
use nuspectra::Execution;

fn request(execution: Execution) -> SpectrumRequest {
    let mut req = SpectrumRequest::new(
        PotentialParams {
            a: 30.0,
            b: 2.0,
            lambda: 0.5,
            gamma: 0.3,
            zeta: 0.2,
            kappa: 0.1,
            ..Default::default()
        },
        4,
    );
    req.n_max = 2;
    req.l_max = 2;
    req.numeric = true;
    req.grid = GridSpec {
        rmax_factor: 20.0,
        points: 2000,
    };
    req.execution = execution;
    req
}

#[test]
fn sequential_and_parallel_agree_bitwise() {
    let a = batch::spectrum(&request(Execution::Sequential));
    let b = batch::spectrum(&request(Execution::Parallel));
    assert_eq!(a, b);
}

#[test]
fn ring_spectrum_rows_match_oracle() {
    let rows = batch::spectrum(&request(Execution::default()));
    assert_eq!(rows.len(), 9);
    let ok: Vec<_> = rows.iter().filter(|r| r.error.is_none()).collect();
    assert!(ok.len() >= 3, "{rows:?}");
    for r in ok {
        assert!(r.rel_diff.unwrap() < 1e-4, "{r:?}");
        assert!(r.l_eff.fract() != 0.0);
    }
}

#[test]
fn sweep_preserves_order() {
    let req = SweepRequest {
        base: request(Execution::Parallel),
        param: SweepParam::A,
        values: vec![40.0, 20.0, 30.0],
        limiting: None,
    };
    let rows = batch::sweep(&req).unwrap();
    let values: Vec<f64> = rows.iter().map(|r| r.value).collect();
    assert_eq!(&values[..9], &[40.0; 9]);
    assert_eq!(values[9], 20.0);
    assert_eq!(SweepParam::parse("lambda"), Some(SweepParam::Lambda));
    assert_eq!(SweepParam::parse("nope"), None);
}
