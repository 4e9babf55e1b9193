//! Shared fixtures for the criterion benchmarks.

use pqc_core::{BoundParams, EntropyEngine, FieldSpec};

/// `(params, engine)` for `n = 2`, `q = 2`.
pub fn binary_setup(f: usize) -> (BoundParams, EntropyEngine) {
    let params = BoundParams::new(2, f, FieldSpec::binary()).expect("valid parameters");
    let engine = params.engine().expect("engine fits");
    (params, engine)
}
