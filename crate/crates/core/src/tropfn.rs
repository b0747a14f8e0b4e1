//! Set functions on `2^[n]` and the tropical predicates on them:
//! submodularity, M♮-concavity, Dressian and flag-Dressian membership,
//! tropical scaling and the strictifying perturbation.
//!
//! Every comparison is an exact rational comparison. "Attained at least
//! twice" means two or more terms equal the maximum exactly; a relation whose
//! terms are all `-inf` holds vacuously.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{int, parse_rational, Rational};
use crate::subset::{all_subsets, subsets_of_size, Subset};

/// Enumeration bound for set functions.
pub const MAX_N: usize = 16;

/// Bound for the Dressian check on the multisymmetric lift.
pub const MAX_LIFT_N: usize = 5;

/// An element of `Q ∪ {-inf}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TropValue {
    NegInf,
    Finite(Rational),
}

impl TropValue {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            TropValue::Finite(r) => Some(r),
            TropValue::NegInf => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, TropValue::Finite(_))
    }

    pub fn parse(s: &str) -> Result<Self> {
        if s.trim() == "-inf" {
            Ok(TropValue::NegInf)
        } else {
            parse_rational(s).map(TropValue::Finite)
        }
    }
}

impl From<Rational> for TropValue {
    fn from(r: Rational) -> Self {
        TropValue::Finite(r)
    }
}

impl From<i64> for TropValue {
    fn from(v: i64) -> Self {
        TropValue::Finite(int(v))
    }
}

impl Add for &TropValue {
    type Output = TropValue;
    fn add(self, rhs: &TropValue) -> TropValue {
        match (self, rhs) {
            (TropValue::Finite(a), TropValue::Finite(b)) => TropValue::Finite(a + b),
            _ => TropValue::NegInf,
        }
    }
}

impl fmt::Display for TropValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropValue::NegInf => f.write_str("-inf"),
            TropValue::Finite(r) => write!(f, "{r}"),
        }
    }
}

impl Serialize for TropValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// True when the maximum of `terms` is attained at least twice, or every
/// term is `-inf`.
pub fn max_attained_twice<I: IntoIterator<Item = TropValue>>(terms: I) -> bool {
    let mut best = TropValue::NegInf;
    let mut count = 0usize;
    for t in terms {
        match t.cmp(&best) {
            Ordering::Greater => {
                best = t;
                count = 1;
            }
            Ordering::Equal => count += 1,
            Ordering::Less => {}
        }
    }
    best == TropValue::NegInf || count >= 2
}

/// A total map `2^[n] -> Q ∪ {-inf}`, indexed by subset bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFunction {
    n: usize,
    values: Vec<TropValue>,
}

impl SetFunction {
    pub fn new(n: usize, values: Vec<TropValue>) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::EnumerationBound { n, limit: MAX_N });
        }
        if values.len() != 1 << n {
            return Err(Error::Dimension(format!(
                "set function on n = {n} needs {} values, got {}",
                1usize << n,
                values.len()
            )));
        }
        Ok(Self { n, values })
    }

    pub fn from_fn<F: FnMut(Subset) -> TropValue>(n: usize, f: F) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::EnumerationBound { n, limit: MAX_N });
        }
        Self::new(n, all_subsets(n).map(f).collect())
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_| TropValue::Finite(Rational::zero())).expect("n within bound")
    }

    /// Builds a finite function from `(label, value)` pairs; labels use the
    /// digit-string convention (`"13"` for `{1,3}`) and must cover `2^[n]`.
    pub fn from_labels(n: usize, entries: &[(&str, Rational)]) -> Result<Self> {
        let mut values = vec![None; 1 << n];
        for (label, v) in entries {
            let s = Subset::parse_label(label, n)?;
            values[s.0 as usize] = Some(TropValue::Finite(v.clone()));
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| {
                    Error::InvalidInput(format!("missing value for {}", Subset(i as u64).label(n)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, values)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, s: Subset) -> &TropValue {
        &self.values[s.0 as usize]
    }

    pub fn values(&self) -> &[TropValue] {
        &self.values
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(TropValue::is_finite)
    }

    /// Finite value at `s`, or an error if it is `-inf`.
    pub fn at(&self, s: Subset) -> Result<&Rational> {
        self.get(s).finite().ok_or(Error::NonFinite)
    }

    fn require_finite(&self) -> Result<Vec<Rational>> {
        self.values
            .iter()
            .map(|v| v.finite().cloned().ok_or(Error::NonFinite))
            .collect()
    }

    pub fn map<F: FnMut(Subset, &TropValue) -> TropValue>(&self, mut f: F) -> Self {
        Self {
            n: self.n,
            values: self
                .values
                .iter()
                .enumerate()
                .map(|(i, v)| f(Subset(i as u64), v))
                .collect(),
        }
    }

    /// `c·F` for a rational `c` (used for the factor-two comparisons).
    pub fn scaled(&self, c: &Rational) -> Self {
        self.map(|_, v| match v {
            TropValue::Finite(r) => TropValue::Finite(r * c),
            TropValue::NegInf => TropValue::NegInf,
        })
    }

    /// Subsets in output order: by size, then lexicographically by elements.
    pub fn ordered_subsets(n: usize) -> Vec<Subset> {
        let mut subs: Vec<Subset> = all_subsets(n).collect();
        subs.sort_by_key(|s| (s.len(), s.elements().collect::<Vec<_>>()));
        subs
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("set function serializes")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("set function serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse {
            position: e.column(),
            message: format!("line {}: {e}", e.line()),
        })
    }
}

struct ValuesView<'a>(&'a SetFunction);

impl Serialize for ValuesView<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let f = self.0;
        let mut map = s.serialize_map(Some(f.values.len()))?;
        for sub in SetFunction::ordered_subsets(f.n) {
            map.serialize_entry(&sub.label(f.n), &f.get(sub).to_string())?;
        }
        map.end()
    }
}

impl Serialize for SetFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SetFunction", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("values", &ValuesView(self))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for SetFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            n: usize,
            values: BTreeMap<String, String>,
        }
        let raw = Raw::deserialize(d)?;
        if raw.n > MAX_N {
            return Err(de::Error::custom(format!("n = {} exceeds bound {MAX_N}", raw.n)));
        }
        let mut values = vec![None; 1 << raw.n];
        for (k, v) in &raw.values {
            let s = Subset::parse_label(k, raw.n).map_err(de::Error::custom)?;
            let val = TropValue::parse(v)
                .map_err(|e| de::Error::custom(format!("value for {k:?}: {e}")))?;
            if values[s.0 as usize].replace(val).is_some() {
                return Err(de::Error::custom(format!("duplicate key for subset {s}")));
            }
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| {
                    de::Error::custom(format!("missing value for {:?}", Subset(i as u64).label(raw.n)))
                })
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        SetFunction::new(raw.n, values).map_err(de::Error::custom)
    }
}

/// The lambdas of a tropical scaling, one per layer `0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalingVector(Vec<Rational>);

impl Serialize for ScalingVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(ToString::to_string))
    }
}

impl ScalingVector {
    pub fn new(lambdas: Vec<Rational>) -> Self {
        Self(lambdas)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![Rational::zero(); n + 1])
    }

    pub fn get(&self, k: usize) -> &Rational {
        &self.0[k]
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parse_list(s: &str) -> Result<Self> {
        s.split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}

/// A violated local submodularity square `F(S) + F(Sij) <= F(Si) + F(Sj)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareViolation {
    pub base: Subset,
    pub i: usize,
    pub j: usize,
    /// `F(Si) + F(Sj) - F(S) - F(Sij)`.
    pub slack: String,
}

/// A relation `max_{i in T\S} p(Si) + p(T\i)` whose maximum is attained once.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationViolation {
    pub s: Subset,
    pub t: Subset,
    pub terms: Vec<(usize, String)>,
}

/// A failed M♮ exchange at `(S, T, i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExchangeViolation {
    pub s: Subset,
    pub t: Subset,
    pub i: usize,
}

fn local_squares(n: usize) -> impl Iterator<Item = (Subset, usize, usize)> {
    all_subsets(n).flat_map(move |s| {
        (1..=n).filter(move |&i| !s.contains(i)).flat_map(move |i| {
            (i + 1..=n)
                .filter(move |&j| !s.contains(j))
                .map(move |j| (s, i, j))
        })
    })
}

fn square_slack(f: &[Rational], s: Subset, i: usize, j: usize) -> Rational {
    let at = |x: Subset| &f[x.0 as usize];
    at(s.with(i)) + at(s.with(j)) - at(s) - at(s.with(i).with(j))
}

fn first_square(f: &SetFunction, strict: bool) -> Result<Option<SquareViolation>> {
    let vals = f.require_finite()?;
    Ok(local_squares(f.n).find_map(|(s, i, j)| {
        let slack = square_slack(&vals, s, i, j);
        let bad = if strict {
            !slack.is_positive()
        } else {
            slack.is_negative()
        };
        bad.then(|| SquareViolation {
            base: s,
            i,
            j,
            slack: slack.to_string(),
        })
    }))
}

/// First local square violating `F(S) + F(Sij) <= F(Si) + F(Sj)`.
pub fn submodular_violation(f: &SetFunction) -> Result<Option<SquareViolation>> {
    first_square(f, false)
}

pub fn is_submodular(f: &SetFunction) -> Result<bool> {
    Ok(submodular_violation(f)?.is_none())
}

pub fn strict_submodular_violation(f: &SetFunction) -> Result<Option<SquareViolation>> {
    first_square(f, true)
}

pub fn is_strictly_submodular(f: &SetFunction) -> Result<bool> {
    Ok(strict_submodular_violation(f)?.is_none())
}

/// First `(S, T, i)` at which the M♮ exchange disjunction fails.
pub fn m_natural_violation(f: &SetFunction) -> Result<Option<ExchangeViolation>> {
    let vals = f.require_finite()?;
    let n = f.n;
    let at = |x: Subset| &vals[x.0 as usize];
    for s in all_subsets(n) {
        for t in all_subsets(n) {
            let lhs = at(s) + at(t);
            for i in s.difference(t).elements() {
                if lhs <= at(s.without(i)) + at(t.with(i)) {
                    continue;
                }
                let rescued = t.difference(s).elements().any(|j| {
                    lhs <= at(s.with(j).without(i)) + at(t.with(i).without(j))
                });
                if !rescued {
                    return Ok(Some(ExchangeViolation { s, t, i }));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_m_natural_concave(f: &SetFunction) -> Result<bool> {
    Ok(m_natural_violation(f)?.is_none())
}

/// A total function on the `k`-subsets of `[m]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerVector {
    k: usize,
    m: usize,
    values: BTreeMap<Subset, TropValue>,
}

impl PluckerVector {
    pub fn from_fn<F: FnMut(Subset) -> TropValue>(k: usize, m: usize, mut f: F) -> Result<Self> {
        if k > m || m >= 64 {
            return Err(Error::Dimension(format!("invalid Grassmannian shape ({k}, {m})")));
        }
        let values = subsets_of_size(m, k).into_iter().map(|s| (s, f(s))).collect();
        Ok(Self { k, m, values })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, s: Subset) -> &TropValue {
        &self.values[&s]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Subset, &TropValue)> {
        self.values.iter()
    }

    fn relation(&self, s: Subset, t: Subset) -> Option<RelationViolation> {
        let terms: Vec<(usize, TropValue)> = t
            .difference(s)
            .elements()
            .map(|i| (i, self.get(s.with(i)) + self.get(t.without(i))))
            .collect();
        if max_attained_twice(terms.iter().map(|(_, v)| v.clone())) {
            None
        } else {
            Some(RelationViolation {
                s,
                t,
                terms: terms.into_iter().map(|(i, v)| (i, v.to_string())).collect(),
            })
        }
    }
}

/// First Plücker relation of `Dr(k, m)` whose maximum is attained only once.
pub fn dressian_violation(p: &PluckerVector) -> Option<RelationViolation> {
    if p.k == 0 || p.k >= p.m {
        return None;
    }
    let lows = subsets_of_size(p.m, p.k - 1);
    let highs = subsets_of_size(p.m, p.k + 1);
    lows.iter()
        .flat_map(|&s| highs.iter().map(move |&t| (s, t)))
        .find_map(|(s, t)| p.relation(s, t))
}

pub fn is_dressian(p: &PluckerVector) -> bool {
    dressian_violation(p).is_none()
}

/// First violated three-term relation: for a `(k-2)`-subset `U` and distinct
/// `a < b < c < d` outside `U`, the maximum of `p(Uab)+p(Ucd)`,
/// `p(Uac)+p(Ubd)`, `p(Uad)+p(Ubc)` must be attained twice.
pub fn three_term_violation(p: &PluckerVector) -> Option<(Subset, [usize; 4])> {
    if p.k < 2 {
        return None;
    }
    for u in subsets_of_size(p.m, p.k - 2) {
        let rest: Vec<usize> = (1..=p.m).filter(|&i| !u.contains(i)).collect();
        for (ai, &a) in rest.iter().enumerate() {
            for (bi, &b) in rest.iter().enumerate().skip(ai + 1) {
                for (ci, &c) in rest.iter().enumerate().skip(bi + 1) {
                    for &d in rest.iter().skip(ci + 1) {
                        let pair = |x: usize, y: usize| p.get(u.with(x).with(y));
                        let terms = [
                            pair(a, b) + pair(c, d),
                            pair(a, c) + pair(b, d),
                            pair(a, d) + pair(b, c),
                        ];
                        if !max_attained_twice(terms) {
                            return Some((u, [a, b, c, d]));
                        }
                    }
                }
            }
        }
    }
    None
}

/// `F̂(T) = F(T ∩ [n])` on the `n`-subsets of `[2n]`.
pub fn multisymmetric_lift(f: &SetFunction) -> PluckerVector {
    let low = Subset::full(f.n);
    PluckerVector::from_fn(f.n, 2 * f.n, |t| f.get(t.intersection(low)).clone())
        .expect("lift shape is valid")
}

/// Homogenization of layers `k` and `k+1` onto the `(k+1)`-subsets of `[n+1]`.
pub fn homogenize_layer(f: &SetFunction, k: usize) -> Result<PluckerVector> {
    let n = f.n;
    if k >= n {
        return Err(Error::InvalidInput(format!("layer {k} out of range for n = {n}")));
    }
    PluckerVector::from_fn(k + 1, n + 1, |s| {
        if s.contains(n + 1) {
            f.get(s.without(n + 1)).clone()
        } else {
            f.get(s).clone()
        }
    })
}

/// First violated Plücker (`|S| = |T|-2`) or incidence (`|S| < |T|-2`)
/// relation of the affine flag Dressian.
pub fn flag_dressian_violation(f: &SetFunction) -> Option<RelationViolation> {
    let n = f.n;
    for t in SetFunction::ordered_subsets(n) {
        if t.len() < 2 {
            continue;
        }
        for s in all_subsets(n) {
            if s.len() + 2 > t.len() {
                continue;
            }
            let terms: Vec<(usize, TropValue)> = t
                .difference(s)
                .elements()
                .map(|i| (i, f.get(s.with(i)) + f.get(t.without(i))))
                .collect();
            if !max_attained_twice(terms.iter().map(|(_, v)| v.clone())) {
                return Some(RelationViolation {
                    s,
                    t,
                    terms: terms.into_iter().map(|(i, v)| (i, v.to_string())).collect(),
                });
            }
        }
    }
    None
}

pub fn is_flag_dressian(f: &SetFunction) -> bool {
    flag_dressian_violation(f).is_none()
}

/// `(λ·F)(S) = λ_{|S|} + F(S)`.
pub fn tropical_scale(f: &SetFunction, lam: &ScalingVector) -> Result<SetFunction> {
    if lam.len() != f.n + 1 {
        return Err(Error::Dimension(format!(
            "scaling vector has length {}, expected {}",
            lam.len(),
            f.n + 1
        )));
    }
    Ok(f.map(|s, v| v + &TropValue::Finite(lam.get(s.len()).clone())))
}

/// Layer shifts making `λ·F` strictly submodular.
///
/// For submodular `F` the shifts are small: `λ_0 = λ_1 = 0`, `λ_2 = -eps`
/// and each later `λ_k` is the midpoint of `(3λ_{k-1}, min(0, 2λ_{k-1} - λ_{k-2}))`,
/// so `|λ_k| < 3^{k-1}·eps`. Otherwise every `λ_k` sits one unit below the
/// largest value that still makes each square in layer `k` strict.
pub fn strictifying_scaling(f: &SetFunction, eps: &Rational) -> Result<ScalingVector> {
    if !eps.is_positive() {
        return Err(Error::InvalidInput("eps must be positive".into()));
    }
    let vals = f.require_finite()?;
    let n = f.n;
    let mut lam = vec![Rational::zero(); n + 1];
    if n < 2 {
        return Ok(ScalingVector(lam));
    }
    if submodular_violation(f)?.is_none() {
        lam[2] = -eps.clone();
        let half = Rational::new(1.into(), 2.into());
        for k in 3..=n {
            let lo = int(3) * &lam[k - 1];
            let hi = (int(2) * &lam[k - 1] - &lam[k - 2]).min(Rational::zero());
            lam[k] = (lo + hi) * &half;
        }
    } else {
        for k in 2..=n {
            let bound = local_squares(n)
                .filter(|(s, _, _)| s.len() + 2 == k)
                .map(|(s, i, j)| square_slack(&vals, s, i, j))
                .min()
                .expect("layer has at least one square");
            lam[k] = bound + int(2) * &lam[k - 1] - &lam[k - 2] - Rational::one();
        }
    }
    Ok(ScalingVector(lam))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    fn from_ints(n: usize, vals: &[(&str, i64)]) -> SetFunction {
        let entries: Vec<(&str, Rational)> = vals.iter().map(|(l, v)| (*l, int(*v))).collect();
        SetFunction::from_labels(n, &entries).unwrap()
    }

    #[test]
    fn submodularity_examples() {
        let w = fixtures::cube3_minor_values();
        assert!(is_submodular(&w).unwrap());
        assert!(is_submodular(&SetFunction::zero(3)).unwrap());
        let bad = from_ints(2, &[("", 1), ("1", 0), ("2", 0), ("12", 1)]);
        assert!(!is_submodular(&bad).unwrap());
        let v = submodular_violation(&bad).unwrap().unwrap();
        assert_eq!((v.base, v.i, v.j), (Subset::EMPTY, 1, 2));
        let partial = SetFunction::new(1, vec![TropValue::NegInf, 0.into()]).unwrap();
        assert_eq!(is_submodular(&partial), Err(Error::NonFinite));
    }

    #[test]
    fn strict_submodularity_examples() {
        assert!(is_strictly_submodular(&fixtures::cube3_minor_values()).unwrap());
        assert!(!is_strictly_submodular(&SetFunction::zero(3)).unwrap());
        assert!(is_strictly_submodular(&fixtures::strict_non_mnatural()).unwrap());
    }

    #[test]
    fn m_natural_examples() {
        assert!(is_m_natural_concave(&fixtures::cube3_minor_values()).unwrap());
        assert!(is_m_natural_concave(&SetFunction::zero(4)).unwrap());
        assert!(!is_m_natural_concave(&fixtures::strict_non_mnatural()).unwrap());
    }

    #[test]
    fn lift_examples() {
        let f = from_ints(1, &[("", 5), ("1", 7)]);
        let lift = multisymmetric_lift(&f);
        assert_eq!(lift.get(Subset::from_elements([1])), &TropValue::from(7));
        assert_eq!(lift.get(Subset::from_elements([2])), &TropValue::from(5));

        let w = fixtures::cube3_minor_values();
        let w2 = SetFunction::from_fn(2, |s| w.get(s).clone()).unwrap();
        let lift = multisymmetric_lift(&w2);
        assert_eq!(lift.get(Subset::from_elements([1, 2])), &TropValue::from(-4));
        assert_eq!(lift.get(Subset::from_elements([3, 4])), &TropValue::from(0));
        assert_eq!(lift.get(Subset::from_elements([1, 3])), w.get(Subset::singleton(1)));
        assert_eq!(lift.get(Subset::from_elements([1, 4])), w.get(Subset::singleton(1)));
    }

    #[test]
    fn dressian_examples() {
        let lift = multisymmetric_lift(&fixtures::cube3_minor_values());
        assert_eq!((lift.k(), lift.m()), (3, 6));
        assert!(is_dressian(&lift));
        let zero = PluckerVector::from_fn(2, 4, |_| 0.into()).unwrap();
        assert!(is_dressian(&zero));
        let one_up = PluckerVector::from_fn(2, 4, |s| {
            if s == Subset::from_elements([1, 2]) { 1.into() } else { 0.into() }
        })
        .unwrap();
        let v = dressian_violation(&one_up).unwrap();
        assert!(!is_dressian(&one_up));
        assert_eq!(v.t.len(), 3);
    }

    #[test]
    fn all_neg_inf_relations_hold() {
        let p = PluckerVector::from_fn(2, 4, |s| {
            if s == Subset::from_elements([1, 2]) { 0.into() } else { TropValue::NegInf }
        })
        .unwrap();
        assert!(is_dressian(&p));
        let q = PluckerVector::from_fn(2, 4, |s| {
            if s.contains(1) { 0.into() } else { TropValue::NegInf }
        })
        .unwrap();
        assert!(is_dressian(&q));
        let r = PluckerVector::from_fn(2, 4, |s| match s.bits() {
            0b0011 | 0b1100 => 0.into(),
            _ => TropValue::NegInf,
        })
        .unwrap();
        assert!(!is_dressian(&r));
        assert!(three_term_violation(&r).is_some());
    }

    #[test]
    fn homogenized_layers() {
        let w = fixtures::cube3_minor_values();
        let h = homogenize_layer(&w, 1).unwrap();
        assert_eq!(h.get(Subset::from_elements([1, 2])), &TropValue::from(-4));
        assert_eq!(h.get(Subset::from_elements([1, 4])), &TropValue::from(0));
        assert_eq!(h.get(Subset::from_elements([3, 4])), &TropValue::from(0));
        assert!(is_dressian(&h));
        let h0 = homogenize_layer(&w, 0).unwrap();
        for i in 1..=3 {
            assert_eq!(h0.get(Subset::singleton(i)), w.get(Subset::singleton(i)));
        }
        assert_eq!(h0.get(Subset::singleton(4)), w.get(Subset::EMPTY));
        assert!(homogenize_layer(&w, 3).is_err());
    }

    #[test]
    fn flag_dressian_examples() {
        assert!(is_flag_dressian(&fixtures::cube3_minor_values()));
        assert!(is_flag_dressian(&SetFunction::zero(4)));
        let bad = fixtures::flag_incidence_counterexample();
        let v = flag_dressian_violation(&bad).unwrap();
        assert_eq!((v.s, v.t), (Subset::EMPTY, Subset::full(3)));
    }

    #[test]
    fn scaling_examples() {
        let w = fixtures::cube3_minor_values();
        assert_eq!(tropical_scale(&w, &ScalingVector::zeros(3)).unwrap(), w);
        let lam = ScalingVector::new(vec![int(0), int(0), int(-1), int(-3)]);
        let s = tropical_scale(&w, &lam).unwrap();
        let expect = from_ints(
            3,
            &[("", 0), ("1", 0), ("2", 0), ("3", 0), ("12", -5), ("13", -3), ("23", -3), ("123", -11)],
        );
        assert_eq!(s, expect);
        assert!(tropical_scale(&w, &ScalingVector::zeros(2)).is_err());
    }

    #[test]
    fn strictifying_examples() {
        let zero = SetFunction::zero(4);
        let lam = strictifying_scaling(&zero, &int(1)).unwrap();
        assert_eq!(lam.get(2), &int(-1));
        assert!(is_strictly_submodular(&tropical_scale(&zero, &lam).unwrap()).unwrap());

        let w = fixtures::cube3_minor_values();
        let lam = strictifying_scaling(&w, &Rational::new(1.into(), 1000.into())).unwrap();
        assert!(is_strictly_submodular(&tropical_scale(&w, &lam).unwrap()).unwrap());

        let bad = from_ints(2, &[("", 1), ("1", 0), ("2", 0), ("12", 1)]);
        let lam = strictifying_scaling(&bad, &int(1)).unwrap();
        assert!(is_strictly_submodular(&tropical_scale(&bad, &lam).unwrap()).unwrap());
        assert!(strictifying_scaling(&bad, &int(0)).is_err());
    }

    #[test]
    fn json_round_trip_and_order() {
        let w = fixtures::cube3_minor_values();
        let text = w.to_json();
        assert_eq!(
            text,
            r#"{"n":3,"values":{"":"0","1":"0","2":"0","3":"0","12":"-4","13":"-2","23":"-2","123":"-8"}}"#
        );
        assert_eq!(SetFunction::from_json(&text).unwrap(), w);
        assert!(SetFunction::from_json(r#"{"n":1,"values":{"":"0","1":"1/0"}}"#).is_err());
        assert!(SetFunction::from_json(r#"{"n":1,"values":{"":"0"}}"#).is_err());
        let with_inf = SetFunction::from_json(r#"{"n":1,"values":{"":"-inf","1":"3/2"}}"#).unwrap();
        assert_eq!(with_inf.get(Subset::EMPTY), &TropValue::NegInf);
        let big = SetFunction::zero(10);
        let text = big.to_json();
        assert!(text.contains(r#""1,10":"0""#));
        assert_eq!(SetFunction::from_json(&text).unwrap(), big);
    }

    fn arb_function(n: usize) -> impl Strategy<Value = SetFunction> {
        prop::collection::vec(-6i64..=6, 1 << n)
            .prop_map(move |v| SetFunction::new(n, v.into_iter().map(TropValue::from).collect()).unwrap())
    }

    fn arb_scaling(n: usize) -> impl Strategy<Value = ScalingVector> {
        prop::collection::vec((-9i64..=9, 1i64..=4), n + 1)
            .prop_map(|v| ScalingVector::new(v.into_iter().map(|(a, b)| Rational::new(a.into(), b.into())).collect()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn flag_membership_is_scaling_invariant(
            (f, lam) in (2usize..=4).prop_flat_map(|n| (arb_function(n), arb_scaling(n)))
        ) {
            let g = tropical_scale(&f, &lam).unwrap();
            prop_assert_eq!(is_flag_dressian(&f), is_flag_dressian(&g));
            for k in 0..f.n() {
                prop_assert_eq!(
                    is_dressian(&homogenize_layer(&f, k).unwrap()),
                    is_dressian(&homogenize_layer(&g, k).unwrap())
                );
            }
        }

        #[test]
        fn strictifying_postcondition(f in (2usize..=5).prop_flat_map(arb_function), e in 1i64..=50) {
            let eps = Rational::new(1.into(), e.into());
            let lam = strictifying_scaling(&f, &eps).unwrap();
            prop_assert!(is_strictly_submodular(&tropical_scale(&f, &lam).unwrap()).unwrap());
            if is_submodular(&f).unwrap() {
                let mut bound = eps.clone() / int(3);
                for k in 0..=f.n() {
                    prop_assert!(lam.get(k).abs() < bound);
                    bound *= int(3);
                }
            }
        }

        #[test]
        fn strict_implies_plain(f in (2usize..=4).prop_flat_map(arb_function)) {
            if is_strictly_submodular(&f).unwrap() {
                prop_assert!(is_submodular(&f).unwrap());
            }
            if is_m_natural_concave(&f).unwrap() {
                prop_assert!(is_flag_dressian(&f));
                prop_assert!(is_submodular(&f).unwrap());
            }
        }

        #[test]
        fn lift_is_fiber_constant(f in (1usize..=4).prop_flat_map(arb_function)) {
            let lift = multisymmetric_lift(&f);
            let low = Subset::full(f.n());
            for (t, v) in lift.iter() {
                prop_assert_eq!(v, f.get(t.intersection(low)));
            }
        }
    }
}
