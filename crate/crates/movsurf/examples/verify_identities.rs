//! Run the determinant-identity suites on random instances with a fixed
//! seed. The reports are byte-deterministic per seed.
//!
//! ```text
//! cargo run --example verify_identities
//! ```

use movsurf::verify::{run_suite, IdentityKind, SuiteParams};
use movsurf::SurfaceKind;

fn main() -> Result<(), movsurf::Error> {
    let suites = [
        SuiteParams {
            identity: IdentityKind::Conj61,
            kind: SurfaceKind::Tensor { m: 1, n: 1 },
            d: 2,
            trials: 5,
            seed: 7,
        },
        SuiteParams {
            identity: IdentityKind::ThmMt,
            kind: SurfaceKind::Tensor { m: 1, n: 1 },
            d: 3,
            trials: 3,
            seed: 7,
        },
        SuiteParams {
            identity: IdentityKind::Conj62,
            kind: SurfaceKind::Triangular { n: 2 },
            d: 2,
            trials: 3,
            seed: 7,
        },
        SuiteParams {
            identity: IdentityKind::DimFormula,
            kind: SurfaceKind::Tensor { m: 1, n: 2 },
            d: 3,
            trials: 3,
            seed: 7,
        },
    ];
    for params in suites {
        let report = run_suite(params)?;
        print!("{}", report.render_text());
        println!();
        assert!(report.all_pass());
    }
    Ok(())
}
