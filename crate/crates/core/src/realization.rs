//! From flag valuations to positive definite matrices: minor tables of
//! upper triangular matrices, top-heaviness, generic mixing, the
//! realization pipeline and the membership test.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::minors::{flag_valuation, gram, is_positive_definite, nu_or_neg_inf, trop_principal_minors, SeriesMatrix};
use crate::random::{mixing_constant, rng, signed_generic_constant};
use crate::series::{int, ratio, Coefficient, PuiseuxPoly, Rational};
use crate::subset::{all_subsets, subsets_of_size, Subset};
use crate::tropfn::{
    flag_dressian_violation, is_submodular, submodular_violation, three_term_violation, PluckerVector,
    RelationViolation, ScalingVector, SetFunction, SquareViolation, TropValue,
};

/// `S ⪯ T` in the Gale order: `|{s ∈ S : s <= t_j}| >= j` for every `j`.
pub fn gale_leq(s: Subset, t: Subset) -> Result<bool> {
    if s.len() != t.len() {
        return Err(Error::Dimension(format!("Gale order compares equal sizes, got {s} and {t}")));
    }
    Ok(t.elements()
        .enumerate()
        .all(|(j, tj)| s.elements().filter(|&x| x <= tj).count() > j))
}

/// `w(T, S) = ν(det B(T, S))` on all same-size pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorTable {
    n: usize,
    values: BTreeMap<(Subset, Subset), TropValue>,
}

impl MinorTable {
    pub fn new(b: &SeriesMatrix) -> Result<Self> {
        if !b.is_square() {
            return Err(Error::Dimension("minor table needs a square matrix".into()));
        }
        let n = b.rows();
        let mut values = BTreeMap::new();
        for k in 0..=n {
            let subs = subsets_of_size(n, k);
            for &t in &subs {
                for &s in &subs {
                    values.insert((t, s), nu_or_neg_inf(&b.minor(t, s)?));
                }
            }
        }
        Ok(Self { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `w(T, S)`; panics if `|T| != |S|`.
    pub fn get(&self, t: Subset, s: Subset) -> &TropValue {
        &self.values[&(t, s)]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Subset, Subset), &TropValue)> {
        self.values.iter()
    }

    fn diag_sum(&self, set: Subset) -> TropValue {
        set.elements().fold(TropValue::Finite(Rational::zero()), |acc, i| {
            let e = Subset::singleton(i);
            &acc + self.get(e, e)
        })
    }
}

pub fn minor_table(b: &SeriesMatrix) -> Result<MinorTable> {
    MinorTable::new(b)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyCheck {
    pub property: &'static str,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorTableReport {
    pub checks: Vec<PropertyCheck>,
}

impl MinorTableReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, property: &str) -> Option<&PropertyCheck> {
        self.checks.iter().find(|c| c.property == property)
    }
}

fn require_flag_matrix(b: &SeriesMatrix) -> Result<SetFunction> {
    if !b.is_square() || !b.is_upper_triangular() {
        return Err(Error::InvalidInput("expected a square upper triangular matrix".into()));
    }
    flag_valuation(b)
}

fn check(property: &'static str, witness: Option<String>) -> PropertyCheck {
    PropertyCheck { property, passed: witness.is_none(), witness }
}

/// Intervals `[a, b]` inside `[n]`, including the empty one.
fn intervals(n: usize) -> Vec<Subset> {
    let mut out = vec![Subset::EMPTY];
    for a in 1..=n {
        for b in a..=n {
            out.push(Subset::from_elements(a..=b));
        }
    }
    out
}

/// Exhaustive check of the structural properties of the minor table of an
/// upper triangular matrix:
/// - `finite_top`: `w([|S|], S)` is finite;
/// - `gale_vanishing`: `w(T, S) = -inf` when `S ≺ T`;
/// - `interval_prefix`: `w(I∪T, I∪S) = Σ_{i∈I} w(i,i) + w(T,S)` for intervals
///   `I` with `max I < min(T ∪ S)`;
/// - `corner`: `w(Tt, Ss) = w(T,S) + w(t,s)` for `t, s > max(S ∪ T)`;
/// - `plucker`: for each `S`, `T ↦ w(T, S)` satisfies the three-term relations.
pub fn check_minor_table_properties(b: &SeriesMatrix) -> Result<MinorTableReport> {
    require_flag_matrix(b)?;
    let w = MinorTable::new(b)?;
    let n = w.n;
    let pairs: Vec<(Subset, Subset)> = w.values.keys().copied().collect();

    let finite_top = all_subsets(n)
        .find(|&s| !w.get(Subset::prefix(s.len()), s).is_finite())
        .map(|s| format!("S = {s}"));

    let mut gale = None;
    for &(t, s) in &pairs {
        if s != t && gale_leq(s, t)? && w.get(t, s).is_finite() {
            gale = Some(format!("T = {t}, S = {s}"));
            break;
        }
    }

    let ivs = intervals(n);
    let mut prefix = None;
    'outer: for &(t, s) in &pairs {
        let lo = t.union(s).min().unwrap_or(n + 1);
        for &i in &ivs {
            if i.is_empty() || i.max().expect("nonempty") >= lo {
                continue;
            }
            let lhs = w.get(i.union(t), i.union(s));
            let rhs = &w.diag_sum(i) + w.get(t, s);
            if *lhs != rhs {
                prefix = Some(format!("I = {i}, T = {t}, S = {s}"));
                break 'outer;
            }
        }
    }

    let mut corner = None;
    'outer2: for &(t, s) in &pairs {
        let hi = t.union(s).max().unwrap_or(0);
        for tt in hi + 1..=n {
            for ss in hi + 1..=n {
                let lhs = w.get(t.with(tt), s.with(ss));
                let rhs = w.get(t, s) + w.get(Subset::singleton(tt), Subset::singleton(ss));
                if *lhs != rhs {
                    corner = Some(format!("T = {t}, S = {s}, t = {tt}, s = {ss}"));
                    break 'outer2;
                }
            }
        }
    }

    let mut plucker = None;
    for s in all_subsets(n).filter(|s| s.len() >= 2) {
        let p = PluckerVector::from_fn(s.len(), n, |t| w.get(t, s).clone())?;
        if let Some((u, quad)) = three_term_violation(&p) {
            plucker = Some(format!("S = {s}, U = {u}, indices {quad:?}"));
            break;
        }
    }

    Ok(MinorTableReport {
        checks: vec![
            check("finite_top", finite_top),
            check("gale_vanishing", gale),
            check("interval_prefix", prefix),
            check("corner", corner),
            check("plucker", plucker),
        ],
    })
}

/// First `(T, S)` with `w(T, S) > w([|S|], S)`.
pub fn top_heavy_violation(b: &SeriesMatrix) -> Result<Option<(Subset, Subset)>> {
    require_flag_matrix(b)?;
    let w = MinorTable::new(b)?;
    Ok(w.values
        .iter()
        .find(|((_, s), v)| *v > w.get(Subset::prefix(s.len()), *s))
        .map(|((t, s), _)| (*t, *s)))
}

/// `ν(B([|S|], S)) >= ν(B(T, S))` for all same-size `S, T`.
pub fn is_top_heavy(b: &SeriesMatrix) -> Result<bool> {
    Ok(top_heavy_violation(b)?.is_none())
}

/// Top-heaviness by a chain of local comparisons in the minor table: first
/// `w(T, S) <= w(I, S)` for the interval `I` of size `|S|` starting at
/// `min T`, then interval shifts `w(J + 1, S) <= w(J, S)` down to `[|S|]`.
/// Requires a submodular flag valuation.
pub fn interval_chain_check(b: &SeriesMatrix) -> Result<bool> {
    let f = require_flag_matrix(b)?;
    if !is_submodular(&f)? {
        return Err(Error::Hypothesis("flag valuation is not submodular".into()));
    }
    let w = MinorTable::new(b)?;
    let n = w.n;
    for ((t, s), v) in &w.values {
        let k = s.len();
        if k == 0 {
            continue;
        }
        let start = (*t).min().expect("nonempty");
        let interval = |a: usize| Subset::from_elements(a..a + k);
        if v > w.get(interval(start), *s) {
            return Ok(false);
        }
        for a in (2..=start).rev() {
            if a + k - 1 > n {
                continue;
            }
            if w.get(interval(a), *s) > w.get(interval(a - 1), *s) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Pairs `T ⪯ T'` (distinct) and `S` with `w(T, S) < w(T', S)`.
pub fn gale_monotonicity_violations(table: &MinorTable) -> Result<Vec<(Subset, Subset, Subset)>> {
    let n = table.n;
    let mut out = Vec::new();
    for k in 1..=n {
        let subs = subsets_of_size(n, k);
        for &t in &subs {
            for &t2 in &subs {
                if t == t2 || !gale_leq(t, t2)? {
                    continue;
                }
                for &s in &subs {
                    if table.get(t, s) < table.get(t2, s) {
                        out.push((t, t2, s));
                    }
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MixShape {
    Full,
    LowerTriangular,
}

/// Target valuation of `B̃(T, S)` for the given shape.
fn mix_targets(b: &SeriesMatrix, shape: MixShape) -> Result<Vec<TropValue>> {
    let n = b.rows();
    match shape {
        MixShape::LowerTriangular => Ok(b.top_justified_minors()?.iter().map(nu_or_neg_inf).collect()),
        MixShape::Full => all_subsets(n)
            .map(|s| {
                subsets_of_size(n, s.len())
                    .into_iter()
                    .map(|t| b.minor(t, s).map(|m| nu_or_neg_inf(&m)))
                    .try_fold(TropValue::NegInf, |acc, v| v.map(|v| acc.max(v)))
            })
            .collect(),
    }
}

/// First `(T, S)` where `ν(mixed(T, S))` differs from the target for `b`.
pub fn mix_failure(b: &SeriesMatrix, mixed: &SeriesMatrix, shape: MixShape) -> Result<Option<(Subset, Subset)>> {
    let n = b.rows();
    let targets = mix_targets(b, shape)?;
    for s in all_subsets(n) {
        for t in subsets_of_size(n, s.len()) {
            if nu_or_neg_inf(&mixed.minor(t, s)?) != targets[s.0 as usize] {
                return Ok(Some((t, s)));
            }
        }
    }
    Ok(None)
}

/// Redraws allowed after the first mixer.
pub const MIX_REDRAWS: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MixResult {
    pub mixer: SeriesMatrix,
    pub mixed: SeriesMatrix,
    pub seed: u64,
    pub attempts: usize,
}

fn draw_mixer(seed: u64, n: usize, shape: MixShape) -> SeriesMatrix {
    let mut r = rng(seed);
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if shape == MixShape::LowerTriangular && j > i {
                        PuiseuxPoly::zero()
                    } else {
                        PuiseuxPoly::from_int(mixing_constant(&mut r))
                    }
                })
                .collect()
        })
        .collect();
    SeriesMatrix::from_rows(rows).expect("square mixer")
}

/// `B̃ = C·B` for a seeded constant `C` whose genericity is verified on
/// every minor; redraws with seeds `seed + 1, …` on failure.
pub fn generic_mix(b: &SeriesMatrix, shape: MixShape, seed: u64) -> Result<MixResult> {
    if !b.is_square() {
        return Err(Error::Dimension("mixing needs a square matrix".into()));
    }
    if shape == MixShape::LowerTriangular && !is_top_heavy(b)? {
        return Err(Error::Hypothesis("lower triangular mixing needs a top heavy matrix".into()));
    }
    let n = b.rows();
    let mut last = (Subset::EMPTY, Subset::EMPTY);
    for attempt in 0..=MIX_REDRAWS {
        let s = seed.wrapping_add(attempt as u64);
        let c = draw_mixer(s, n, shape);
        if c.det()?.is_zero() {
            continue;
        }
        let mixed = c.mul(b)?;
        match mix_failure(b, &mixed, shape)? {
            None => return Ok(MixResult { mixer: c, mixed, seed: s, attempts: attempt + 1 }),
            Some(pair) => last = pair,
        }
    }
    Err(Error::Genericity {
        attempts: MIX_REDRAWS + 1,
        rows: last.0.to_string(),
        cols: last.1.to_string(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StageResult {
    pub stage: &'static str,
    pub passed: bool,
}

/// A positive definite matrix whose tropicalized principal minors are
/// `2·w`, or `w` after the substitution `t -> t^(1/2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealizationCertificate {
    pub input: SetFunction,
    pub seed: u64,
    pub lambdas: ScalingVector,
    pub halved: bool,
    pub scaled_b: SeriesMatrix,
    pub mixer: SeriesMatrix,
    pub mixed_b: SeriesMatrix,
    pub gram_a: SeriesMatrix,
    pub achieved_minors: SetFunction,
    pub mix_attempts: usize,
    pub stages: Vec<StageResult>,
}

/// Realizes `w(S) = ν(B([|S|], S)) - λ_{|S|}` as tropicalized principal
/// minors: rescale rows so the flag valuation is `w`, mix with a generic
/// lower triangular constant matrix, take the Gram matrix.
pub fn realize_flag_point(
    w: &SetFunction,
    b: &SeriesMatrix,
    lambdas: &ScalingVector,
    halve: bool,
    seed: u64,
) -> Result<RealizationCertificate> {
    let n = w.n();
    if !b.is_square() || b.rows() != n {
        return Err(Error::Dimension(format!("expected an {n}x{n} matrix")));
    }
    if lambdas.len() != n + 1 {
        return Err(Error::Dimension(format!("expected {} lambdas, got {}", n + 1, lambdas.len())));
    }
    if !w.at(Subset::EMPTY)?.is_zero() {
        return Err(Error::InvalidInput("w(∅) must be 0; normalize first".into()));
    }
    let fv = require_flag_matrix(b)?;
    for s in all_subsets(n) {
        let expect = &fv.get(s).clone() + &TropValue::Finite(-lambdas.get(s.len()).clone());
        if *w.get(s) != expect {
            return Err(Error::Hypothesis(format!("w({s}) differs from ν(B([k], S)) - λ_k")));
        }
    }
    if let Some(v) = submodular_violation(w)? {
        return Err(Error::Hypothesis(format!(
            "input not submodular-consistent: square at {} with i = {}, j = {}",
            v.base, v.i, v.j
        )));
    }
    let mut stages = Vec::new();

    let mut scaled = b.clone();
    for k in 1..=n {
        scaled.scale_row(k - 1, &(lambdas.get(k) - lambdas.get(k - 1)));
    }
    let ok = flag_valuation(&scaled)? == *w;
    stages.push(StageResult { stage: "rescale", passed: ok });
    if !ok {
        return Err(Error::Internal("row rescaling did not produce w".into()));
    }

    let ok = is_top_heavy(&scaled)?;
    stages.push(StageResult { stage: "top_heavy", passed: ok });
    if !ok {
        return Err(Error::Hypothesis("input not submodular-consistent: rescaled matrix is not top heavy".into()));
    }

    let mix = generic_mix(&scaled, MixShape::LowerTriangular, seed)?;
    stages.push(StageResult { stage: "generic_mix", passed: true });

    let a = gram(&mix.mixed)?;
    let ok = is_positive_definite(&a)?;
    stages.push(StageResult { stage: "positive_definite", passed: ok });
    if !ok {
        return Err(Error::Internal("Gram matrix is not positive definite".into()));
    }

    let achieved = trop_principal_minors(&a)?;
    let ok = achieved == w.scaled(&int(2));
    stages.push(StageResult { stage: "doubled_minors", passed: ok });
    if !ok {
        return Err(Error::Internal("tropicalized minors differ from 2w".into()));
    }

    let (gram_a, achieved) = if halve {
        let h = a.substitute_power(&ratio(1, 2))?;
        let m = trop_principal_minors(&h)?;
        let ok = m == *w;
        stages.push(StageResult { stage: "halved_minors", passed: ok });
        if !ok {
            return Err(Error::Internal("halved minors differ from w".into()));
        }
        (h, m)
    } else {
        (a, achieved)
    };

    Ok(RealizationCertificate {
        input: w.clone(),
        seed,
        lambdas: lambdas.clone(),
        halved: halve,
        scaled_b: scaled,
        mixer: mix.mixer,
        mixed_b: mix.mixed,
        gram_a,
        achieved_minors: achieved,
        mix_attempts: mix.attempts,
        stages,
    })
}

/// Upper triangular matrix with generic constant coefficients whose
/// entries have `ν(b_ij) = w([i-1] ∪ {j}) - w([i-1])`, so its flag
/// valuation agrees with `w` on every set of the form `[i-1] ∪ {j}`.
pub fn template_witness(w: &SetFunction, seed: u64) -> Result<SeriesMatrix> {
    let n = w.n();
    let mut r = rng(seed);
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        let head = Subset::prefix(i - 1);
        let base = w.at(head)?.clone();
        let mut row = Vec::with_capacity(n);
        for j in 1..=n {
            if j < i {
                row.push(PuiseuxPoly::zero());
            } else {
                let nu = w.at(head.with(j))? - &base;
                let c = Coefficient::from_int(signed_generic_constant(&mut r));
                row.push(PuiseuxPoly::monomial(c, -nu));
            }
        }
        rows.push(row);
    }
    SeriesMatrix::from_rows(rows)
}

/// Template draws tried by [`membership_check`].
pub const TEMPLATE_ATTEMPTS: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Membership {
    Inside { witness: Option<SeriesMatrix> },
    Outside { reason: OutsideReason },
    WitnessNeeded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OutsideReason {
    NotSubmodular { square: SquareViolation },
    NotFlagDressian { relation: RelationViolation },
}

/// Necessary conditions (submodularity, flag-Dressian relations), decided
/// exactly; sufficient for `n <= 5`. For larger `n` an upper triangular
/// witness is searched for among [`template_witness`] draws.
pub fn membership_check(w: &SetFunction, seed: u64) -> Result<Membership> {
    if !w.at(Subset::EMPTY)?.is_zero() {
        return Err(Error::InvalidInput("w(∅) must be 0; normalize first".into()));
    }
    if let Some(square) = submodular_violation(w)? {
        return Ok(Membership::Outside { reason: OutsideReason::NotSubmodular { square } });
    }
    if let Some(relation) = flag_dressian_violation(w) {
        return Ok(Membership::Outside { reason: OutsideReason::NotFlagDressian { relation } });
    }
    for attempt in 0..TEMPLATE_ATTEMPTS {
        let b = template_witness(w, seed.wrapping_add(attempt as u64))?;
        if matches!(flag_valuation(&b), Ok(f) if f == *w) {
            return Ok(Membership::Inside { witness: Some(b) });
        }
    }
    if w.n() <= 5 {
        Ok(Membership::Inside { witness: None })
    } else {
        Ok(Membership::WitnessNeeded)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::minors::Mode;
    use crate::random::{random_upper_triangular, rng as seeded};
    use crate::tropfn::{strictifying_scaling, tropical_scale};

    fn sub(e: &[usize]) -> Subset {
        Subset::from_elements(e.iter().copied())
    }

    #[test]
    fn gale_examples() {
        assert!(gale_leq(sub(&[1, 2]), sub(&[2, 4])).unwrap());
        assert!(gale_leq(sub(&[2, 4]), sub(&[2, 4])).unwrap());
        assert!(!gale_leq(sub(&[3, 4]), sub(&[1, 2])).unwrap());
        assert!(gale_leq(sub(&[1, 3]), sub(&[2, 3])).unwrap());
        assert!(gale_leq(sub(&[1]), sub(&[1, 2])).is_err());
    }

    #[test]
    fn minor_table_examples() {
        let w = minor_table(&fixtures::gale_counterexample_matrix()).unwrap();
        assert_eq!(w.get(sub(&[1, 3]), sub(&[3, 4])), &TropValue::from(-1));
        assert_eq!(w.get(sub(&[2, 3]), sub(&[3, 4])), &TropValue::from(0));
        let id = minor_table(&SeriesMatrix::identity(3)).unwrap();
        for ((t, s), v) in id.iter() {
            assert_eq!(v.is_finite(), t == s);
            if t == s {
                assert_eq!(v, &TropValue::from(0));
            }
        }
        let c = minor_table(&fixtures::cube3_flag_matrix()).unwrap();
        assert_eq!(c.get(sub(&[1, 2]), sub(&[2, 3])), &TropValue::from(-1));
    }

    #[test]
    fn table_properties_hold() {
        for b in [fixtures::cube3_flag_matrix(), fixtures::gale_counterexample_matrix()] {
            let r = check_minor_table_properties(&b).unwrap();
            assert!(r.all_passed(), "{r:?}");
        }
        let mut g = seeded(5);
        for _ in 0..10 {
            let b = random_upper_triangular(&mut g, 4, Mode::Real);
            assert!(check_minor_table_properties(&b).unwrap().all_passed());
        }
        assert!(check_minor_table_properties(&SeriesMatrix::from_literals(&[&["1", "0"], &["1", "1"]]).unwrap())
            .is_err());
    }

    #[test]
    fn top_heavy_examples() {
        assert!(is_top_heavy(&fixtures::cube3_flag_matrix()).unwrap());
        assert!(is_top_heavy(&fixtures::gale_counterexample_matrix()).unwrap());
        let light = SeriesMatrix::from_literals(&[&["1", "1"], &["0", "t^-1"]]).unwrap();
        assert!(!is_top_heavy(&light).unwrap());
        assert_eq!(top_heavy_violation(&light).unwrap(), Some((sub(&[2]), sub(&[2]))));
    }

    #[test]
    fn chain_check_examples() {
        assert!(interval_chain_check(&fixtures::cube3_flag_matrix()).unwrap());
        assert!(interval_chain_check(&fixtures::gale_counterexample_matrix()).unwrap());
        let light = SeriesMatrix::from_literals(&[&["1", "1"], &["0", "t^-1"]]).unwrap();
        assert!(matches!(interval_chain_check(&light), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn gale_monotonicity_fails_on_counterexample() {
        let b = fixtures::gale_counterexample_matrix();
        let v = gale_monotonicity_violations(&minor_table(&b).unwrap()).unwrap();
        assert!(v.contains(&(sub(&[1, 3]), sub(&[2, 3]), sub(&[3, 4]))));
        assert!(is_top_heavy(&b).unwrap());
    }

    #[test]
    fn printed_mixer_example() {
        let b = fixtures::cube3_flag_matrix();
        let mixed = fixtures::cube3_mixer().mul(&b).unwrap();
        assert_eq!(mixed, fixtures::cube3_mixed_matrix());
        assert_eq!(mixed.minor(sub(&[2, 3]), sub(&[2, 3])).unwrap(), "-t + 2*t^2 + t^4".parse().unwrap());
        for t in subsets_of_size(3, 2) {
            assert_eq!(mixed.minor(t, sub(&[2, 3])).unwrap().nu().unwrap(), int(-1));
        }
        assert_eq!(mix_failure(&b, &mixed, MixShape::LowerTriangular).unwrap(), None);
    }

    #[test]
    fn generic_mix_shapes() {
        let b = fixtures::cube3_flag_matrix();
        let m = generic_mix(&b, MixShape::LowerTriangular, 1).unwrap();
        assert!(m.mixer.is_lower_triangular());
        let id = generic_mix(&SeriesMatrix::identity(3), MixShape::Full, 2).unwrap();
        assert_eq!(mix_failure(&SeriesMatrix::identity(3), &id.mixed, MixShape::Full).unwrap(), None);
        let mut g = seeded(9);
        for seed in 0..5 {
            let b = crate::random::random_nonsingular(&mut g, 3, Mode::Real);
            assert!(generic_mix(&b, MixShape::Full, seed).is_ok());
        }
        let light = SeriesMatrix::from_literals(&[&["1", "1"], &["0", "t^-1"]]).unwrap();
        assert!(matches!(generic_mix(&light, MixShape::LowerTriangular, 0), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn realize_cube3() {
        let b = fixtures::cube3_flag_matrix();
        let w = flag_valuation(&b).unwrap();
        let cert = realize_flag_point(&w, &b, &ScalingVector::zeros(3), false, 0).unwrap();
        assert_eq!(cert.achieved_minors, w.scaled(&int(2)));
        assert_eq!(cert.achieved_minors.get(sub(&[2, 3])), &TropValue::from(-2));
        let halved = realize_flag_point(&w, &b, &ScalingVector::zeros(3), true, 0).unwrap();
        assert_eq!(halved.achieved_minors, w);
    }

    #[test]
    fn realize_zero_with_and_without_halving() {
        let b = fixtures::gale_counterexample_matrix();
        let w = SetFunction::zero(4);
        let plain = realize_flag_point(&w, &b, &ScalingVector::zeros(4), false, 3).unwrap();
        let halved = realize_flag_point(&w, &b, &ScalingVector::zeros(4), true, 3).unwrap();
        assert_eq!(plain.achieved_minors, w);
        assert_eq!(halved.achieved_minors, w);
    }

    #[test]
    fn realize_with_lambdas() {
        let mut g = seeded(21);
        let b0 = random_upper_triangular(&mut g, 3, Mode::Real);
        let w0 = flag_valuation(&b0).unwrap();
        let lam = strictifying_scaling(&w0, &ratio(1, 10)).unwrap();
        let w = tropical_scale(&w0, &lam).unwrap();
        let w = w.map(|_, v| v + &TropValue::Finite(-w0.at(Subset::EMPTY).unwrap().clone() - lam.get(0)));
        let neg = ScalingVector::new(lam.as_slice().iter().map(|x| -x.clone()).collect());
        let cert = realize_flag_point(&w, &b0, &neg, true, 4).unwrap();
        assert_eq!(cert.achieved_minors, w);
    }

    #[test]
    fn realize_rejects_non_submodular() {
        let b = SeriesMatrix::from_literals(&[&["1", "1"], &["0", "t^-1"]]).unwrap();
        let w = flag_valuation(&b).unwrap();
        let err = realize_flag_point(&w, &b, &ScalingVector::zeros(2), false, 0).unwrap_err();
        assert!(matches!(err, Error::Hypothesis(_)));
        let bad = w.map(|s, v| if s.len() == 2 { v + &TropValue::from(1) } else { v.clone() });
        assert!(realize_flag_point(&bad, &b, &ScalingVector::zeros(2), false, 0).is_err());
    }

    #[test]
    fn membership_examples() {
        assert!(matches!(
            membership_check(&fixtures::cube3_minor_values(), 0).unwrap(),
            Membership::Inside { .. }
        ));
        match membership_check(&fixtures::flag_incidence_counterexample(), 0).unwrap() {
            Membership::Outside { .. } => {}
            other => panic!("expected outside, got {other:?}"),
        }
        match membership_check(&SetFunction::zero(6), 0).unwrap() {
            Membership::Inside { witness: Some(b) } => {
                assert_eq!(flag_valuation(&b).unwrap(), SetFunction::zero(6));
            }
            other => panic!("expected a witness, got {other:?}"),
        }
        let shifted = SetFunction::from_fn(2, |_| TropValue::from(1)).unwrap();
        assert!(membership_check(&shifted, 0).is_err());
    }
}
