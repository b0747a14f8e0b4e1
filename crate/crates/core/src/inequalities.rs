//! Quadratic inequalities on principal minors of positive semidefinite
//! matrices and on coefficients of Lorentzian quadratics.
//!
//! For a triple `(x, y, z)` the family `(r+1)x + r(r+1)y >= r z` over all
//! real `r` is the quadratic `y r^2 + (x + y - z) r + x >= 0`; its
//! discriminant is `x^2 + y^2 + z^2 - 2(xy + xz + yz)`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::minors::SeriesMatrix;
use crate::series::{int, Rational};
use crate::subset::{all_subsets, subsets_of_size, Subset};

/// Dense matrix over `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Self { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![Rational::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = Rational::one();
        }
        Self { rows: n, cols: n, entries }
    }

    /// Requires every entry to be a real constant.
    pub fn from_series(m: &SeriesMatrix) -> Result<Self> {
        let mut rows = Vec::with_capacity(m.rows());
        for r in 0..m.rows() {
            let mut row = Vec::with_capacity(m.cols());
            for c in 0..m.cols() {
                let v = m.get(r, c);
                match v.as_constant() {
                    Some(k) if k.is_real() => row.push(k.re),
                    _ => {
                        return Err(Error::InvalidInput(format!(
                            "entry ({}, {}) = {v} is not a real constant",
                            r + 1,
                            c + 1
                        )))
                    }
                }
            }
            rows.push(row);
        }
        Self::from_rows(rows)
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::from_series(&SeriesMatrix::parse(text)?)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// 0-based entry.
    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    /// Determinant of the submatrix on 1-based rows `t` and columns `s`.
    pub fn minor(&self, t: Subset, s: Subset) -> Result<Rational> {
        if t.len() != s.len() {
            return Err(Error::Dimension(format!("minor needs |T| = |S|, got {t} and {s}")));
        }
        if t.max().is_some_and(|m| m > self.rows) || s.max().is_some_and(|m| m > self.cols) {
            return Err(Error::Dimension("minor index out of range".into()));
        }
        let rs: Vec<usize> = t.elements().map(|i| i - 1).collect();
        let cs: Vec<usize> = s.elements().map(|i| i - 1).collect();
        let mut a: Vec<Vec<Rational>> =
            rs.iter().map(|&r| cs.iter().map(|&c| self.get(r, c).clone()).collect()).collect();
        Ok(gaussian_det(&mut a))
    }

    pub fn principal_minor(&self, s: Subset) -> Result<Rational> {
        self.minor(s, s)
    }

    pub fn det(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        self.minor(Subset::prefix(self.rows), Subset::prefix(self.cols))
    }

    /// First principal minor that is negative, for symmetric input.
    pub fn psd_violation(&self) -> Result<Option<Subset>> {
        if !self.is_symmetric() {
            return Err(Error::InvalidInput("matrix is not symmetric".into()));
        }
        for s in all_subsets(self.rows) {
            if self.principal_minor(s)?.is_negative() {
                return Ok(Some(s));
            }
        }
        Ok(None)
    }

    /// Symmetric with every principal minor nonnegative.
    pub fn is_psd(&self) -> Result<bool> {
        Ok(self.psd_violation()?.is_none())
    }

    /// Largest `k` with a nonzero `k x k` minor.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<Rational>> =
            (0..self.rows).map(|r| (0..self.cols).map(|c| self.get(r, c).clone()).collect()).collect();
        row_reduce(&mut a)
    }

    /// Coefficients of `det(λI - A)`, highest degree first:
    /// the coefficient of `λ^(n-k)` is `(-1)^k` times the sum of `k x k`
    /// principal minors.
    pub fn characteristic_polynomial(&self) -> Result<Vec<Rational>> {
        if self.rows != self.cols {
            return Err(Error::Dimension("characteristic polynomial of a non-square matrix".into()));
        }
        let n = self.rows;
        (0..=n)
            .map(|k| {
                let mut e = Rational::zero();
                for s in subsets_of_size(n, k) {
                    e += self.principal_minor(s)?;
                }
                Ok(if k % 2 == 0 { e } else { -e })
            })
            .collect()
    }

    /// Number of positive eigenvalues with multiplicity, for symmetric
    /// input. All roots of the characteristic polynomial are real, so the
    /// sign changes of its coefficients count them exactly.
    pub fn positive_eigenvalue_count(&self) -> Result<usize> {
        if !self.is_symmetric() {
            return Err(Error::InvalidInput("matrix is not symmetric".into()));
        }
        let signs: Vec<bool> =
            self.characteristic_polynomial()?.iter().filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
        Ok(signs.windows(2).filter(|w| w[0] != w[1]).count())
    }
}

fn gaussian_det(a: &mut [Vec<Rational>]) -> Rational {
    let n = a.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let piv = a[col][col].clone();
        det *= &piv;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &piv;
            for c in col..n {
                let d = &f * &a[col][c];
                a[r][c] -= d;
            }
        }
    }
    det
}

fn row_reduce(a: &mut [Vec<Rational>]) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        let piv = a[rank][col].clone();
        for r in rank + 1..rows {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &piv;
            for c in col..cols {
                let d = &f * &a[rank][c];
                a[r][c] -= d;
            }
        }
        rank += 1;
    }
    rank
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} real", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "{}", row.join("; "))?;
        }
        Ok(())
    }
}

impl Serialize for RationalMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            (0..self.rows).map(|r| (0..self.cols).map(|c| self.get(r, c).to_string()).collect()).collect();
        rows.serialize(s)
    }
}

/// Coefficients `c_ij` of `q = Σ c_ij x_k x_l` over pairs of `{1,2,3,4}`,
/// where `{k, l}` is the complement of `{i, j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadCoeffs {
    pub c12: Rational,
    pub c13: Rational,
    pub c14: Rational,
    pub c23: Rational,
    pub c24: Rational,
    pub c34: Rational,
}

impl QuadCoeffs {
    pub fn uniform(v: Rational) -> Self {
        Self { c12: v.clone(), c13: v.clone(), c14: v.clone(), c23: v.clone(), c24: v.clone(), c34: v }
    }

    /// `c_ij = A_{S ∪ {i, j}}` for four indices outside `S`.
    pub fn from_minors(a: &RationalMatrix, s: Subset, idx: [usize; 4]) -> Result<Self> {
        let m = |i: usize, j: usize| a.principal_minor(s.with(idx[i]).with(idx[j]));
        Ok(Self { c12: m(0, 1)?, c13: m(0, 2)?, c14: m(0, 3)?, c23: m(1, 2)?, c24: m(1, 3)?, c34: m(2, 3)? })
    }

    pub fn is_nonnegative(&self) -> bool {
        [&self.c12, &self.c13, &self.c14, &self.c23, &self.c24, &self.c34].iter().all(|c| !c.is_negative())
    }

    /// Hessian of `q`: zero diagonal, entry `(k, l)` is `c_ij` for the
    /// complementary pair.
    pub fn hessian(&self) -> RationalMatrix {
        let z = Rational::zero();
        RationalMatrix::from_rows(vec![
            vec![z.clone(), self.c34.clone(), self.c24.clone(), self.c23.clone()],
            vec![self.c34.clone(), z.clone(), self.c14.clone(), self.c13.clone()],
            vec![self.c24.clone(), self.c14.clone(), z.clone(), self.c12.clone()],
            vec![self.c23.clone(), self.c13.clone(), self.c12.clone(), z],
        ])
        .expect("4x4")
    }

    /// `(c14 c23, c13 c24, c12 c34)`.
    pub fn triple(&self) -> IneqTriple {
        IneqTriple::new(&self.c14 * &self.c23, &self.c13 * &self.c24, &self.c12 * &self.c34)
    }

    /// Nonnegative coefficients and at most one positive Hessian eigenvalue.
    pub fn is_lorentzian(&self) -> bool {
        self.is_nonnegative() && self.hessian().positive_eigenvalue_count().expect("symmetric") <= 1
    }
}

/// `det` of the Hessian of `q`; nonpositive for Lorentzian `q`.
pub fn hessian_det(q: &QuadCoeffs) -> Rational {
    q.hessian().det().expect("square")
}

/// Discriminant of `c13 c24 r^2 + (c13 c24 + c14 c23 - c12 c34) r + c14 c23`.
pub fn quadratic_discriminant(q: &QuadCoeffs) -> Rational {
    q.triple().discriminant()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IneqTriple {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl IneqTriple {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        Self { x, y, z }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Self::new(int(x), int(y), int(z))
    }

    /// `(r+1)x + r(r+1)y - r z`.
    pub fn evaluate(&self, r: &Rational) -> Rational {
        let r1 = r + Rational::one();
        &r1 * &self.x + r * &r1 * &self.y - r * &self.z
    }

    /// `(x + y - z)^2 - 4xy`.
    pub fn discriminant(&self) -> Rational {
        let b = &self.x + &self.y - &self.z;
        &b * &b - int(4) * &self.x * &self.y
    }

    /// Real `r` where the inequality is tight, when it holds for all `r`
    /// and the tight set is finite.
    pub fn equality_roots(&self) -> Vec<Rational> {
        if self.y.is_positive() && self.discriminant().is_zero() {
            vec![-(&self.x + &self.y - &self.z) / (int(2) * &self.y)]
        } else {
            Vec::new()
        }
    }
}

/// `2(xy + xz + yz) >= x^2 + y^2 + z^2` and `x + y + z >= 0`.
pub fn cone_condition(t: &IneqTriple) -> bool {
    let (x, y, z) = (&t.x, &t.y, &t.z);
    let lhs = int(2) * (x * y + x * z + y * z);
    let rhs = x * x + y * y + z * z;
    lhs >= rhs && !(x + y + z).is_negative()
}

/// Whether the inequality holds at every sample.
pub fn sampled_r_check(t: &IneqTriple, rs: &[Rational]) -> bool {
    rs.iter().all(|r| !t.evaluate(r).is_negative())
}

/// Nonnegativity of `y r^2 + (x + y - z) r + x` on all of `R`, decided from
/// the coefficients: a positive leading coefficient needs a nonpositive
/// discriminant, a zero one leaves the linear `(x - z) r + x`.
pub fn all_r_symbolic(t: &IneqTriple) -> bool {
    if t.y.is_positive() {
        !t.discriminant().is_positive()
    } else if t.y.is_negative() {
        false
    } else {
        t.x == t.z && !t.x.is_negative()
    }
}

/// Which product pattern to test around a base set `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "indices", rename_all = "snake_case")]
pub enum IneqMode {
    /// `x = A_{Sad} A_{Sbc}`, `y = A_{Sac} A_{Sbd}`, `z = A_{Sab} A_{Scd}`.
    Quadruple([usize; 4]),
    /// `x = A_{Sa} A_{Sbc}`, `y = A_{Sb} A_{Sac}`, `z = A_{Sc} A_{Sab}`.
    Triple([usize; 3]),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermutationVerdict {
    pub indices: Vec<usize>,
    pub x: String,
    pub y: String,
    pub z: String,
    pub discriminant: String,
    pub cone_condition: bool,
    pub all_r: bool,
    pub equality_roots: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorInequalityReport {
    pub base: Subset,
    pub mode: IneqMode,
    pub permutations: Vec<PermutationVerdict>,
}

impl MinorInequalityReport {
    pub fn all_pass(&self) -> bool {
        self.permutations.iter().all(|p| p.cone_condition && p.all_r)
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

fn triple_for(a: &RationalMatrix, s: Subset, p: &[usize]) -> Result<IneqTriple> {
    let m = |e: &[usize]| a.principal_minor(e.iter().fold(s, |acc, &i| acc.with(i)));
    Ok(match *p {
        [pa, pb, pc, pd] => IneqTriple::new(
            m(&[pa, pd])? * m(&[pb, pc])?,
            m(&[pa, pc])? * m(&[pb, pd])?,
            m(&[pa, pb])? * m(&[pc, pd])?,
        ),
        [pa, pb, pc] => IneqTriple::new(
            m(&[pa])? * m(&[pb, pc])?,
            m(&[pb])? * m(&[pa, pc])?,
            m(&[pc])? * m(&[pa, pb])?,
        ),
        _ => unreachable!("three or four indices"),
    })
}

/// Evaluates the inequality family on every ordering of the indices.
pub fn minor_inequality_report(a: &RationalMatrix, s: Subset, mode: IneqMode) -> Result<MinorInequalityReport> {
    if let Some(bad) = a.psd_violation()? {
        return Err(Error::InvalidInput(format!("matrix is not positive semidefinite: minor {bad} is negative")));
    }
    let idx: Vec<usize> = match mode {
        IneqMode::Quadruple(q) => q.to_vec(),
        IneqMode::Triple(t) => t.to_vec(),
    };
    let set = Subset::from_elements(idx.iter().copied());
    if set.len() != idx.len() || idx.iter().any(|&i| i == 0 || i > a.rows()) {
        return Err(Error::InvalidInput("indices must be distinct and within the matrix".into()));
    }
    if !set.intersection(s).is_empty() || s.max().is_some_and(|m| m > a.rows()) {
        return Err(Error::InvalidInput(format!("base set {s} must avoid the indices and fit the matrix")));
    }
    let mut out = Vec::new();
    for p in permutations(&idx) {
        let t = triple_for(a, s, &p)?;
        out.push(PermutationVerdict {
            indices: p,
            x: t.x.to_string(),
            y: t.y.to_string(),
            z: t.z.to_string(),
            discriminant: t.discriminant().to_string(),
            cone_condition: cone_condition(&t),
            all_r: all_r_symbolic(&t),
            equality_roots: t.equality_roots().iter().map(ToString::to_string).collect(),
        });
    }
    Ok(MinorInequalityReport { base: s, mode, permutations: out })
}

/// Rank two positive semidefinite family on which the quadruple inequality
/// is tight at parameter `r`.
pub fn rank_two_matrix(r: &Rational) -> RationalMatrix {
    let one = Rational::one();
    let i = |v: i64| int(v);
    let r2 = r * r;
    RationalMatrix::from_rows(vec![
        vec![one.clone(), one.clone(), one.clone(), r.clone()],
        vec![one.clone(), i(2), i(2) - r, i(2) * r - &one],
        vec![one.clone(), i(2) - r, &r2 - i(2) * r + i(2), -&r2 + i(3) * r - &one],
        vec![r.clone(), i(2) * r - &one, -&r2 + i(3) * r - &one, i(2) * &r2 - i(2) * r + &one],
    ])
    .expect("4x4")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankTwoReport {
    pub r: String,
    pub psd: bool,
    pub rank: usize,
    pub cubic_minors_vanish: bool,
    /// `(r+1)A14 A23 + r(r+1)A13 A24 - r A12 A34`.
    pub identity_value: String,
}

impl RankTwoReport {
    pub fn passes(&self) -> bool {
        self.psd && self.rank == 2 && self.cubic_minors_vanish && self.identity_value == "0"
    }
}

pub fn rank_two_report(r: &Rational) -> Result<RankTwoReport> {
    let a = rank_two_matrix(r);
    let mut vanish = true;
    for t in subsets_of_size(4, 3) {
        for s in subsets_of_size(4, 3) {
            vanish &= a.minor(t, s)?.is_zero();
        }
    }
    let t = triple_for(&a, Subset::EMPTY, &[1, 2, 3, 4])?;
    Ok(RankTwoReport {
        r: r.to_string(),
        psd: a.is_psd()?,
        rank: a.rank(),
        cubic_minors_vanish: vanish,
        identity_value: t.evaluate(r).to_string(),
    })
}

/// Parameters of the 3x3 family with diagonal `1 + eps` and off-diagonal
/// entries `sqrt(1 - lam (r+1)^2)`, `sqrt(1 - lam)`, `sqrt(1 - lam r^2)` at
/// positions `12`, `13`, `23`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitFamily {
    pub r: Rational,
    pub lam: Rational,
    pub eps: Rational,
}

impl LimitFamily {
    /// Requires `0 < lam`, `lam s^2 < 1` for `s ∈ {r+1, 1, r}`, and `eps >= 0`.
    pub fn new(r: Rational, lam: Rational, eps: Rational) -> Result<Self> {
        let p = Self { r, lam, eps };
        if !p.lam.is_positive() || p.squares().iter().any(|sq| sq.is_negative() || sq.is_zero()) {
            return Err(Error::InvalidInput(format!("lam = {} is outside the admissible range for r = {}", p.lam, p.r)));
        }
        if p.eps.is_negative() {
            return Err(Error::InvalidInput(format!("eps = {} must be nonnegative", p.eps)));
        }
        Ok(p)
    }

    /// Squares of the off-diagonal entries at `12`, `13`, `23`.
    pub fn squares(&self) -> [Rational; 3] {
        let one = Rational::one();
        let r1 = &self.r + &one;
        [
            &one - &self.lam * &r1 * &r1,
            &one - &self.lam,
            &one - &self.lam * &self.r * &self.r,
        ]
    }

    pub fn diagonal(&self) -> Rational {
        Rational::one() + &self.eps
    }

    /// `(A1, A2, A3, A12, A13, A23)`, all rational.
    pub fn small_minors(&self) -> [Rational; 6] {
        let d = self.diagonal();
        let d2 = &d * &d;
        let [a, b, c] = self.squares();
        [d.clone(), d.clone(), d, &d2 - a, &d2 - b, &d2 - c]
    }

    /// `(r+1) A1 A23 + r(r+1) A2 A13 - r A3 A12`.
    pub fn gap(&self) -> Rational {
        let [a1, a2, a3, a12, a13, a23] = self.small_minors();
        let t = IneqTriple::new(a1 * a23, a2 * a13, a3 * a12);
        t.evaluate(&self.r)
    }

    /// `(1 + r + r^2) eps (1 + eps) (2 + eps)`.
    pub fn closed_form(&self) -> Rational {
        let one = Rational::one();
        (&one + &self.r + &self.r * &self.r) * &self.eps * (&one + &self.eps) * (int(2) + &self.eps)
    }

    /// `det A > 0`, decided exactly. With `d` the diagonal and `a, b, c >= 0`
    /// the off-diagonal entries, `det A = d^3 + 2abc - d(a^2 + b^2 + c^2)`,
    /// so positivity is `2abc > D` for `D = d(a^2+b^2+c^2) - d^3`, which for
    /// `D >= 0` is `4 a^2 b^2 c^2 > D^2`.
    pub fn det_positive(&self) -> bool {
        let d = self.diagonal();
        let [a, b, c] = self.squares();
        let dd = &d * (&a + &b + &c) - &d * &d * &d;
        if dd.is_negative() {
            return true;
        }
        int(4) * a * b * c > &dd * &dd
    }

    pub fn small_minors_positive(&self) -> bool {
        self.small_minors().iter().all(Signed::is_positive)
    }
}
