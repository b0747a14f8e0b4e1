//! Dense matrices over the Puiseux-polynomial ring: division-free minors,
//! the Gram construction, positive definiteness and tropicalized minors.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::series::{PuiseuxPoly, Rational};
use crate::subset::{all_subsets, subsets_of_size, Subset};
use crate::tropfn::{SetFunction, TropValue};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Real,
    Complex,
}

impl Mode {
    fn join(self, other: Mode) -> Mode {
        if self == Mode::Complex || other == Mode::Complex {
            Mode::Complex
        } else {
            Mode::Real
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Real => "real",
            Mode::Complex => "complex",
        })
    }
}

/// A `rows × cols` matrix of Puiseux polynomials, row-major.
///
/// Row and column indices in the subset-based API are 1-based to match
/// [`Subset`]; `get` is 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<PuiseuxPoly>,
    mode: Mode,
}

impl SeriesMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<PuiseuxPoly>, mode: Mode) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if rows > 63 || cols > 63 {
            return Err(Error::Dimension("matrices are limited to 63 rows and columns".into()));
        }
        if mode == Mode::Real && !entries.iter().all(PuiseuxPoly::is_real) {
            return Err(Error::InvalidInput("real-mode matrix has a complex entry".into()));
        }
        Ok(Self { rows, cols, entries, mode })
    }

    /// Builds a matrix from rows, choosing complex mode iff some entry is complex.
    pub fn from_rows(rows: Vec<Vec<PuiseuxPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let entries: Vec<PuiseuxPoly> = rows.into_iter().flatten().collect();
        let mode = if entries.iter().all(PuiseuxPoly::is_real) {
            Mode::Real
        } else {
            Mode::Complex
        };
        Self::new(r, c, entries, mode)
    }

    /// Parses rows of series literals, e.g. `&[&["1", "t"], &["0", "t^2"]]`.
    pub fn from_literals(rows: &[&[&str]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|row| row.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(vec![PuiseuxPoly::one(); n])
    }

    pub fn diagonal(diag: Vec<PuiseuxPoly>) -> Self {
        let n = diag.len();
        let mut entries = vec![PuiseuxPoly::zero(); n * n];
        for (i, d) in diag.into_iter().enumerate() {
            entries[i * n + i] = d;
        }
        Self::from_rows(entries.chunks(n.max(1)).take(n).map(<[_]>::to_vec).collect())
            .expect("diagonal matrix is well formed")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &PuiseuxPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: PuiseuxPoly) {
        if !v.is_real() {
            self.mode = Mode::Complex;
        }
        self.entries[r * self.cols + c] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        Self { rows: self.cols, cols: self.rows, entries, mode: self.mode }
    }

    pub fn conj_transpose(&self) -> Self {
        let mut t = self.transpose();
        t.entries.iter_mut().for_each(|e| *e = e.conj());
        t
    }

    pub fn mul(&self, rhs: &SeriesMatrix) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = PuiseuxPoly::zero();
                for k in 0..self.cols {
                    let (a, b) = (self.get(r, k), rhs.get(k, c));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                entries.push(acc);
            }
        }
        Ok(Self { rows: self.rows, cols: rhs.cols, entries, mode: self.mode.join(rhs.mode) })
    }

    /// Multiplies row `r` (0-based) by `t^exp`.
    pub fn scale_row(&mut self, r: usize, exp: &Rational) {
        let unit = crate::series::Coefficient::one();
        for c in 0..self.cols {
            let e = &mut self.entries[r * self.cols + c];
            *e = e.mul_monomial(&unit, exp);
        }
    }

    /// Substitutes `t -> t^factor` in every entry.
    pub fn substitute_power(&self, factor: &Rational) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.substitute_power(factor))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { entries, ..self.clone() })
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|r| (0..r.min(self.cols)).all(|c| self.get(r, c).is_zero()))
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|r| (r + 1..self.cols).all(|c| self.get(r, c).is_zero()))
    }

    /// Symmetric in real mode, Hermitian in complex mode.
    pub fn is_hermitian(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (r..self.cols).all(|c| *self.get(r, c) == self.get(c, r).conj()))
    }

    fn check_rows(&self, rows: Subset) -> Result<()> {
        if !rows.is_subset_of(Subset::full(self.rows)) {
            return Err(Error::Dimension(format!("row set {rows} exceeds {} rows", self.rows)));
        }
        Ok(())
    }

    fn check_cols(&self, cols: Subset) -> Result<()> {
        if !cols.is_subset_of(Subset::full(self.cols)) {
            return Err(Error::Dimension(format!("column set {cols} exceeds {} columns", self.cols)));
        }
        Ok(())
    }

    /// `det B(T, S)` by Laplace expansion along the last row, memoized on
    /// column subsets. The empty minor is `1`.
    pub fn minor(&self, t: Subset, s: Subset) -> Result<PuiseuxPoly> {
        if t.len() != s.len() {
            return Err(Error::Dimension(format!("minor needs |T| = |S|, got {t} and {s}")));
        }
        self.check_rows(t)?;
        self.check_cols(s)?;
        let rows: Vec<usize> = t.elements().collect();
        let mut memo = HashMap::new();
        Ok(self.laplace(&rows, s, &mut memo))
    }

    fn laplace(&self, rows: &[usize], cols: Subset, memo: &mut HashMap<Subset, PuiseuxPoly>) -> PuiseuxPoly {
        let k = cols.len();
        if k == 0 {
            return PuiseuxPoly::one();
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let r = rows[k - 1] - 1;
        let mut acc = PuiseuxPoly::zero();
        for (pos, j) in cols.elements().enumerate() {
            let a = self.get(r, j - 1);
            if a.is_zero() {
                continue;
            }
            let sub = self.laplace(rows, cols.without(j), memo);
            if sub.is_zero() {
                continue;
            }
            let term = a * &sub;
            // sign (-1)^{k + pos + 1} counts columns of `cols` to the right of j
            acc = if (k - 1 - pos).is_multiple_of(2) { &acc + &term } else { &acc - &term };
        }
        memo.insert(cols, acc.clone());
        acc
    }

    /// Every minor on the rows `1..=|S|`, indexed by column mask. One shared
    /// memo makes this `O(2^m · m)` ring operations.
    pub fn top_justified_minors(&self) -> Result<Vec<PuiseuxPoly>> {
        if self.cols > 20 {
            return Err(Error::EnumerationBound { n: self.cols, limit: 20 });
        }
        let rows: Vec<usize> = (1..=self.rows).collect();
        let mut memo = HashMap::new();
        Ok(all_subsets(self.cols)
            .map(|s| {
                if s.len() > self.rows {
                    PuiseuxPoly::zero()
                } else {
                    self.laplace(&rows, s, &mut memo)
                }
            })
            .collect())
    }

    pub fn det(&self) -> Result<PuiseuxPoly> {
        if !self.is_square() {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        self.minor(Subset::full(self.rows), Subset::full(self.cols))
    }

    pub fn principal_minor(&self, s: Subset) -> Result<PuiseuxPoly> {
        self.minor(s, s)
    }

    /// Parses the matrix file format: a header `rows cols real|complex`
    /// followed by one line per row with `;`-separated series literals.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "empty matrix file"))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 3 {
            return Err(Error::parse(hline, "header must be `rows cols real|complex`"));
        }
        let dim = |s: &str| s.parse::<usize>().map_err(|_| Error::parse(hline, format!("bad dimension {s:?}")));
        let (rows, cols) = (dim(parts[0])?, dim(parts[1])?);
        let mode = match parts[2] {
            "real" => Mode::Real,
            "complex" => Mode::Complex,
            other => return Err(Error::parse(hline, format!("unknown mode {other:?}"))),
        };
        let mut entries = Vec::with_capacity(rows * cols);
        let mut seen = 0;
        for (lineno, line) in lines {
            seen += 1;
            if seen > rows {
                return Err(Error::parse(lineno, "more rows than declared"));
            }
            let row: Vec<&str> = line.split(';').collect();
            if row.len() != cols {
                return Err(Error::parse(lineno, format!("expected {cols} entries, found {}", row.len())));
            }
            for cell in row {
                let p: PuiseuxPoly = cell.parse().map_err(|e| match e {
                    Error::Parse { position, message } => {
                        Error::parse(lineno, format!("column {position}: {message}"))
                    }
                    other => other,
                })?;
                entries.push(p);
            }
        }
        if seen != rows {
            return Err(Error::parse(hline, format!("declared {rows} rows, found {seen}")));
        }
        Self::new(rows, cols, entries, mode)
    }
}

impl fmt::Display for SeriesMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.rows, self.cols, self.mode)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "{}", row.join("; "))?;
        }
        Ok(())
    }
}

impl FromStr for SeriesMatrix {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl Serialize for SeriesMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `B^* B`; an error if `B` is singular.
pub fn gram(b: &SeriesMatrix) -> Result<SeriesMatrix> {
    if !b.is_square() {
        return Err(Error::Dimension("Gram construction needs a square matrix".into()));
    }
    if b.det()?.is_zero() {
        return Err(Error::SingularGram);
    }
    b.conj_transpose().mul(b)
}

/// All nonempty principal minors are positive real series.
pub fn is_positive_definite(a: &SeriesMatrix) -> Result<bool> {
    if !a.is_hermitian() {
        return Err(Error::InvalidInput("matrix is not symmetric/Hermitian".into()));
    }
    for s in all_subsets(a.rows()).skip(1) {
        let m = a.principal_minor(s)?;
        if !m.is_real() {
            return Err(Error::Internal(format!("principal minor on {s} of a Hermitian matrix is not real")));
        }
        if !m.is_positive()? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `S ↦ ν(A_S)`, with `ν(A_∅) = 0`.
pub fn trop_principal_minors(a: &SeriesMatrix) -> Result<SetFunction> {
    if !a.is_square() {
        return Err(Error::Dimension("principal minors need a square matrix".into()));
    }
    let values = all_subsets(a.rows())
        .map(|s| {
            let m = a.principal_minor(s)?;
            if m.is_zero() {
                return Err(Error::ZeroPrincipalMinor { subset: s.to_string() });
            }
            Ok(TropValue::Finite(m.nu()?))
        })
        .collect::<Result<Vec<_>>>()?;
    SetFunction::new(a.rows(), values)
}

/// `ν` of a series, `-inf` for zero.
pub fn nu_or_neg_inf(p: &PuiseuxPoly) -> TropValue {
    p.nu().map_or(TropValue::NegInf, TropValue::Finite)
}

/// Checks `ν(A_S) = max_T 2ν(B(T,S))` for `A = B^* B` and every `S`.
pub fn verify_cauchy_binet_valuation(b: &SeriesMatrix) -> Result<bool> {
    let a = gram(b)?;
    let n = b.rows();
    let two = Rational::from_integer(2.into());
    for s in all_subsets(n) {
        let lhs = nu_or_neg_inf(&a.principal_minor(s)?);
        let mut rhs = TropValue::NegInf;
        for t in subsets_of_size(n, s.len()) {
            if let TropValue::Finite(v) = nu_or_neg_inf(&b.minor(t, s)?) {
                rhs = rhs.max(TropValue::Finite(&two * v));
            }
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `S ↦ ν(B([|S|], S))` for upper triangular `B`.
pub fn flag_valuation(b: &SeriesMatrix) -> Result<SetFunction> {
    if !b.is_square() || !b.is_upper_triangular() {
        return Err(Error::InvalidInput("flag valuation needs a square upper triangular matrix".into()));
    }
    let minors = b.top_justified_minors()?;
    let values = minors
        .iter()
        .enumerate()
        .map(|(mask, m)| {
            if m.is_zero() {
                Err(Error::VanishingPlucker { subset: Subset(mask as u64).to_string() })
            } else {
                m.nu().map(TropValue::Finite)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    SetFunction::new(b.rows(), values)
}

/// `true` iff every entry is a constant (exponent-0 or zero).
pub fn is_constant(m: &SeriesMatrix) -> bool {
    m.entries.iter().all(|e| e.terms().iter().all(|(x, _)| x.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::series::{int, ratio};

    fn p(s: &str) -> PuiseuxPoly {
        s.parse().unwrap()
    }

    fn sub(e: &[usize]) -> Subset {
        Subset::from_elements(e.iter().copied())
    }

    #[test]
    fn minor_examples() {
        let b = fixtures::cube3_flag_matrix();
        assert_eq!(b.minor(sub(&[1, 2]), sub(&[2, 3])).unwrap(), p("t - t^2"));
        assert_eq!(b.minor(Subset::EMPTY, Subset::EMPTY).unwrap(), PuiseuxPoly::one());
        assert_eq!(b.minor(sub(&[2, 3]), sub(&[2, 3])).unwrap(), p("t^4"));
        assert!(b.minor(sub(&[1]), sub(&[1, 2])).is_err());
        assert!(b.minor(sub(&[4]), sub(&[1])).is_err());
    }

    #[test]
    fn laplace_matches_permutation_expansion() {
        let m = SeriesMatrix::from_literals(&[
            &["1", "t", "2", "0"],
            &["t^2", "1 + t", "0", "3"],
            &["0", "t^(1/2)", "t", "1"],
            &["5", "0", "1 - t", "t^3"],
        ])
        .unwrap();
        let perms = [
            [0, 1, 2, 3], [0, 1, 3, 2], [0, 2, 1, 3], [0, 2, 3, 1], [0, 3, 1, 2], [0, 3, 2, 1],
            [1, 0, 2, 3], [1, 0, 3, 2], [1, 2, 0, 3], [1, 2, 3, 0], [1, 3, 0, 2], [1, 3, 2, 0],
            [2, 0, 1, 3], [2, 0, 3, 1], [2, 1, 0, 3], [2, 1, 3, 0], [2, 3, 0, 1], [2, 3, 1, 0],
            [3, 0, 1, 2], [3, 0, 2, 1], [3, 1, 0, 2], [3, 1, 2, 0], [3, 2, 0, 1], [3, 2, 1, 0],
        ];
        let mut expect = PuiseuxPoly::zero();
        for perm in perms {
            let inversions = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                .filter(|&(i, j)| perm[i] > perm[j])
                .count();
            let mut term = PuiseuxPoly::one();
            for (r, &c) in perm.iter().enumerate() {
                term = &term * m.get(r, c);
            }
            expect = if inversions % 2 == 0 { &expect + &term } else { &expect - &term };
        }
        assert_eq!(m.det().unwrap(), expect);
    }

    #[test]
    fn gram_examples() {
        assert_eq!(gram(&SeriesMatrix::identity(3)).unwrap(), SeriesMatrix::identity(3));
        let a = gram(&fixtures::cube3_flag_matrix()).unwrap();
        assert_eq!(a, fixtures::cube3_gram_matrix());
        let c = SeriesMatrix::diagonal(vec![p("1 + (0+1i)*t"), p("1")]);
        let g = gram(&c).unwrap();
        assert_eq!(g.get(0, 0), &p("1 + t^2"));
        assert_eq!(g.get(1, 1), &p("1"));
        assert!(g.is_hermitian());
        let singular = SeriesMatrix::from_literals(&[&["1", "t"], &["1", "t"]]).unwrap();
        assert_eq!(gram(&singular), Err(Error::SingularGram));
    }

    #[test]
    fn positive_definite_examples() {
        assert!(is_positive_definite(&fixtures::cube3_gram_matrix()).unwrap());
        assert!(!is_positive_definite(&SeriesMatrix::diagonal(vec![p("-1"); 3])).unwrap());
        assert!(is_positive_definite(&SeriesMatrix::diagonal(vec![p("1"), p("t"), p("t^3")])).unwrap());
        let asym = SeriesMatrix::from_literals(&[&["1", "t"], &["0", "1"]]).unwrap();
        assert!(is_positive_definite(&asym).is_err());
    }

    #[test]
    fn trop_minor_examples() {
        let w = trop_principal_minors(&fixtures::cube3_gram_matrix()).unwrap();
        assert_eq!(w, fixtures::cube3_minor_values());
        assert_eq!(trop_principal_minors(&SeriesMatrix::identity(3)).unwrap(), SetFunction::zero(3));
        let d = trop_principal_minors(&SeriesMatrix::diagonal(vec![p("t^2"), p("t^4")])).unwrap();
        assert_eq!(d.get(sub(&[1])), &TropValue::from(-2));
        assert_eq!(d.get(sub(&[2])), &TropValue::from(-4));
        assert_eq!(d.get(sub(&[1, 2])), &TropValue::from(-6));
        let z = SeriesMatrix::diagonal(vec![p("1"), p("0")]);
        assert!(matches!(trop_principal_minors(&z), Err(Error::ZeroPrincipalMinor { .. })));
    }

    #[test]
    fn cauchy_binet_examples() {
        let b = fixtures::cube3_flag_matrix();
        assert!(verify_cauchy_binet_valuation(&b).unwrap());
        let a = gram(&b).unwrap();
        assert_eq!(a.principal_minor(sub(&[2, 3])).unwrap().nu().unwrap(), int(-2));
        assert!(verify_cauchy_binet_valuation(&SeriesMatrix::identity(4)).unwrap());
    }

    #[test]
    fn flag_valuation_examples() {
        let f = flag_valuation(&fixtures::cube3_flag_matrix()).unwrap();
        assert_eq!(f.get(sub(&[3])), &TropValue::from(0));
        assert_eq!(f.get(sub(&[2, 3])), &TropValue::from(-1));
        assert_eq!(f.get(sub(&[1, 2, 3])), &TropValue::from(-4));
        assert!(matches!(
            flag_valuation(&SeriesMatrix::identity(3)),
            Err(Error::VanishingPlucker { .. })
        ));
        assert_eq!(flag_valuation(&fixtures::gale_counterexample_matrix()).unwrap(), SetFunction::zero(4));
        let not_ut = SeriesMatrix::from_literals(&[&["1", "0"], &["1", "1"]]).unwrap();
        assert!(flag_valuation(&not_ut).is_err());
    }

    #[test]
    fn top_justified_minors_agree_with_minor() {
        let b = fixtures::gale_counterexample_matrix();
        let all = b.top_justified_minors().unwrap();
        for s in all_subsets(4) {
            assert_eq!(all[s.0 as usize], b.minor(Subset::prefix(s.len()), s).unwrap());
        }
    }

    #[test]
    fn matrix_file_round_trip() {
        let b = fixtures::cube3_flag_matrix();
        let text = b.to_string();
        assert_eq!(text, "3 3 real\n1; 1; 1\n0; t^2; t\n0; 0; t^2\n");
        assert_eq!(SeriesMatrix::parse(&text).unwrap(), b);
        let c = SeriesMatrix::parse("2 2 complex\n(1+1i)*t; 0\n0; 1\n").unwrap();
        assert_eq!(c.mode(), Mode::Complex);
        assert_eq!(SeriesMatrix::parse(&c.to_string()).unwrap(), c);
        assert!(SeriesMatrix::parse("2 2 real\n(1+1i)*t; 0\n0; 1\n").is_err());
        assert!(SeriesMatrix::parse("2 2 real\n1; 0\n").is_err());
        assert!(SeriesMatrix::parse("2 2 real\n1; 0; 0\n0; 1\n").is_err());
        let err = SeriesMatrix::parse("1 1 real\nt^(1/0)\n").unwrap_err();
        assert!(matches!(err, Error::Parse { position: 2, .. }));
    }

    #[test]
    fn determinant_multiplicativity() {
        let b = SeriesMatrix::from_literals(&[
            &["1 + (0+1i)*t", "t^(1/2)"],
            &["2", "(1-1i) + t^2"],
        ])
        .unwrap();
        let d = b.det().unwrap();
        assert_eq!(gram(&b).unwrap().det().unwrap(), &d.conj() * &d);
        let halved = b.substitute_power(&ratio(1, 2)).unwrap();
        assert_eq!(halved.get(0, 1), &p("t^(1/4)"));
    }
}
