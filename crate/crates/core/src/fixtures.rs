//! Named reference inputs with known tropical behaviour.

use crate::minors::SeriesMatrix;
use crate::series::{int, Rational};
use crate::subset::{all_subsets, Subset};
use crate::tropfn::{SetFunction, TropValue};

/// Upper triangular 3×3 flag matrix whose Gram matrix has minor valuations
/// [`cube3_minor_values`].
pub fn cube3_flag_matrix() -> SeriesMatrix {
    SeriesMatrix::from_literals(&[&["1", "1", "1"], &["0", "t^2", "t"], &["0", "0", "t^2"]])
        .expect("literal matrix")
}

/// `B^T B` for [`cube3_flag_matrix`].
pub fn cube3_gram_matrix() -> SeriesMatrix {
    SeriesMatrix::from_literals(&[
        &["1", "1", "1"],
        &["1", "1 + t^4", "1 + t^3"],
        &["1", "1 + t^3", "1 + t^2 + t^4"],
    ])
    .expect("literal matrix")
}

/// `ν` of the principal minors of [`cube3_gram_matrix`]; M♮-concave and
/// strictly submodular.
pub fn cube3_minor_values() -> SetFunction {
    let v = |s: &str| match s {
        "12" => -4,
        "13" | "23" => -2,
        "123" => -8,
        _ => 0,
    };
    SetFunction::from_fn(3, |s| TropValue::from(v(&s.label(3)))).expect("n = 3")
}

/// Constant lower triangular mixer for [`cube3_flag_matrix`].
pub fn cube3_mixer() -> SeriesMatrix {
    SeriesMatrix::from_literals(&[&["1", "0", "0"], &["1", "1", "0"], &["2", "1", "1"]])
        .expect("literal matrix")
}

/// `cube3_mixer() * cube3_flag_matrix()`.
pub fn cube3_mixed_matrix() -> SeriesMatrix {
    SeriesMatrix::from_literals(&[
        &["1", "1", "1"],
        &["1", "1 + t^2", "1 + t"],
        &["2", "2 + t^2", "2 + t + t^2"],
    ])
    .expect("literal matrix")
}

/// A strictly submodular function on `2^[4]` that is not M♮-concave: its
/// upper-hull subdivision has the edge `[e_1, e_234]`.
pub fn strict_non_mnatural() -> SetFunction {
    let one = Subset::singleton(1);
    let top = Subset::from_elements([2, 3, 4]);
    SetFunction::from_fn(4, |s| {
        let v = match s.len() {
            0 | 4 => -6,
            1 if s == one => 0,
            1 => -3,
            2 => -1,
            _ if s == top => 0,
            _ => -3,
        };
        TropValue::from(v)
    })
    .expect("n = 4")
}

/// Upper triangular 4×4 matrix with all top-justified minors of valuation
/// zero, yet `w({1,3},{3,4}) = -1 < w({2,3},{3,4}) = 0`.
pub fn gale_counterexample_matrix() -> SeriesMatrix {
    SeriesMatrix::from_literals(&[
        &["1", "1", "1", "1"],
        &["0", "1", "2", "3"],
        &["0", "0", "1", "1 + t"],
        &["0", "0", "0", "1"],
    ])
    .expect("literal matrix")
}

/// A function on `2^[3]` violating the incidence relation for `S = ∅, T = [3]`.
pub fn flag_incidence_counterexample() -> SetFunction {
    let v = |s: Subset| -> i64 {
        match s.label(3).as_str() {
            "13" | "23" => -1,
            _ => 0,
        }
    };
    SetFunction::from_fn(3, |s| TropValue::from(v(s))).expect("n = 3")
}

/// Zero function on `2^[n]`.
pub fn zero_function(n: usize) -> SetFunction {
    SetFunction::zero(n)
}

/// Finite function from integer values listed in mask order.
pub fn from_mask_values(n: usize, values: &[i64]) -> SetFunction {
    assert_eq!(values.len(), 1 << n);
    SetFunction::from_fn(n, |s| TropValue::from(values[s.0 as usize])).expect("n within bound")
}

/// Rational-valued variant of [`from_mask_values`].
pub fn from_mask_rationals(n: usize, values: &[Rational]) -> SetFunction {
    assert_eq!(values.len(), 1 << n);
    SetFunction::new(n, all_subsets(n).map(|s| TropValue::Finite(values[s.0 as usize].clone())).collect())
        .expect("n within bound")
}

/// `x ↦ c` on all of `2^[n]`.
pub fn constant_function(n: usize, c: i64) -> SetFunction {
    SetFunction::from_fn(n, |_| TropValue::Finite(int(c))).expect("n within bound")
}
