//! Seeded generators for matrices, set functions and mixing constants.
//!
//! Every generator takes an explicit `ChaCha8Rng`, so a `u64` seed fully
//! determines the output.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::minors::{flag_valuation, Mode, SeriesMatrix};
use crate::series::{int, ratio, Coefficient, PuiseuxPoly, Rational};
use crate::tropfn::{strictifying_scaling, SetFunction, TropValue};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Exponents used by the random entry generator.
pub fn exponent_pool() -> [Rational; 5] {
    [int(0), ratio(1, 2), int(1), int(2), int(3)]
}

fn small_coefficient(rng: &mut ChaCha8Rng, mode: Mode) -> Coefficient {
    let re = rng.gen_range(-3i64..=3);
    match mode {
        Mode::Real => Coefficient::from_int(re),
        Mode::Complex => Coefficient::new(int(re), int(rng.gen_range(-3i64..=3))),
    }
}

/// `c·t^γ + c'·t^γ'` with small integer coefficients and `γ, γ'` from
/// [`exponent_pool`]; may be zero.
pub fn random_series(rng: &mut ChaCha8Rng, mode: Mode) -> PuiseuxPoly {
    let pool = exponent_pool();
    let mut p = PuiseuxPoly::zero();
    for _ in 0..2 {
        let c = small_coefficient(rng, mode);
        let g = pool.choose(rng).expect("nonempty pool").clone();
        p = &p + &PuiseuxPoly::monomial(c, g);
    }
    p
}

fn nonzero_series(rng: &mut ChaCha8Rng, mode: Mode) -> PuiseuxPoly {
    loop {
        let p = random_series(rng, mode);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_matrix(rng: &mut ChaCha8Rng, n: usize, mode: Mode) -> SeriesMatrix {
    let entries = (0..n * n).map(|_| random_series(rng, mode)).collect();
    SeriesMatrix::new(n, n, entries, mode).expect("square shape")
}

/// A random matrix with nonzero determinant.
pub fn random_nonsingular(rng: &mut ChaCha8Rng, n: usize, mode: Mode) -> SeriesMatrix {
    loop {
        let m = random_matrix(rng, n, mode);
        if !m.det().expect("square").is_zero() {
            return m;
        }
    }
}

/// Random upper triangular matrix whose top-justified minors are all nonzero.
pub fn random_upper_triangular(rng: &mut ChaCha8Rng, n: usize, mode: Mode) -> SeriesMatrix {
    loop {
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                entries.push(match c.cmp(&r) {
                    std::cmp::Ordering::Less => PuiseuxPoly::zero(),
                    std::cmp::Ordering::Equal => nonzero_series(rng, mode),
                    std::cmp::Ordering::Greater => random_series(rng, mode),
                });
            }
        }
        let m = SeriesMatrix::new(n, n, entries, mode).expect("square shape");
        if flag_valuation(&m).is_ok() {
            return m;
        }
    }
}

/// Upper triangular matrix with strictly submodular flag valuation: a
/// random one with rows rescaled so that layer `k` of its flag valuation
/// shifts by the strictifying `λ_k`.
pub fn random_submodular_flag_matrix(rng: &mut ChaCha8Rng, n: usize, mode: Mode) -> SeriesMatrix {
    let mut b = random_upper_triangular(rng, n, mode);
    let w = flag_valuation(&b).expect("nonvanishing by construction");
    let lam = strictifying_scaling(&w, &ratio(1, 10)).expect("flag valuations are finite");
    for k in 1..=n {
        b.scale_row(k - 1, &(lam.get(k - 1) - lam.get(k)));
    }
    b
}

/// Integer-valued set function with values in `lo..=hi`.
pub fn random_set_function(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> SetFunction {
    SetFunction::from_fn(n, |_| TropValue::from(rng.gen_range(lo..=hi))).expect("n within bound")
}

/// Constant in `[1, 2^16]`, the range used for generic mixing.
pub fn mixing_constant(rng: &mut ChaCha8Rng) -> i64 {
    rng.gen_range(1..=1i64 << 16)
}

/// Nonzero integer in `[-2^16, 2^16]`.
pub fn signed_generic_constant(rng: &mut ChaCha8Rng) -> i64 {
    let v = mixing_constant(rng);
    if rng.gen_bool(0.5) {
        v
    } else {
        -v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        let a = random_matrix(&mut rng(7), 3, Mode::Real);
        let b = random_matrix(&mut rng(7), 3, Mode::Real);
        assert_eq!(a, b);
        let u = random_upper_triangular(&mut rng(11), 4, Mode::Complex);
        assert!(u.is_upper_triangular());
        assert!(flag_valuation(&u).is_ok());
        assert!(!random_nonsingular(&mut rng(3), 3, Mode::Real).det().unwrap().is_zero());
    }

    #[test]
    fn strictified_flag_matrices() {
        let mut r = rng(4);
        for n in 2..=4 {
            let b = random_submodular_flag_matrix(&mut r, n, Mode::Real);
            assert!(b.is_upper_triangular());
            let w = flag_valuation(&b).unwrap();
            assert!(crate::tropfn::is_strictly_submodular(&w).unwrap());
        }
    }

    #[test]
    fn series_use_the_exponent_pool() {
        let mut r = rng(1);
        let pool = exponent_pool();
        for _ in 0..200 {
            let p = random_series(&mut r, Mode::Real);
            assert!(p.terms().len() <= 2);
            assert!(p.terms().iter().all(|(e, _)| pool.contains(e)));
        }
    }
}
