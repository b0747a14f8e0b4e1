//! Input builders shared by the criterion benchmarks. Every builder is
//! seeded so repeated runs measure the same inputs.

use pmtrop::minors::{flag_valuation, gram, trop_principal_minors};
use pmtrop::random::{random_nonsingular, random_submodular_flag_matrix, rng};
use pmtrop::{Mode, SeriesMatrix, SetFunction};

/// A nonsingular `n x n` matrix of Puiseux polynomials.
pub fn nonsingular(n: usize, seed: u64) -> SeriesMatrix {
    random_nonsingular(&mut rng(seed), n, Mode::Real)
}

/// Tropical principal minors of the gram matrix of [`nonsingular`].
pub fn pd_minors(n: usize, seed: u64) -> SetFunction {
    let a = gram(&nonsingular(n, seed)).expect("square input");
    trop_principal_minors(&a).expect("finite minors")
}

/// Upper-triangular matrix whose flag valuation is strictly submodular, with that valuation.
pub fn flag_input(n: usize, seed: u64) -> (SeriesMatrix, SetFunction) {
    let b = random_submodular_flag_matrix(&mut rng(seed), n, Mode::Real);
    let w = flag_valuation(&b).expect("finite flag valuation");
    (b, w)
}
