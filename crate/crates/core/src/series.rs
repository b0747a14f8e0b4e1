//! Exact Puiseux polynomials: finite sums `c·t^γ` with rational exponents
//! `γ` and rational or Gaussian-rational coefficients `c`.
//!
//! The ring is closed under `+`, `-` and `×`, which is all the determinant
//! machinery needs, so no truncation policy exists anywhere. The valuation
//! `val` is the smallest exponent present; `nu = -val` is the max-convention
//! tropicalization used by every other module.
//!
//! Printing and parsing follow a small literal grammar:
//!
//! ```text
//! series := term (('+'|'-') term)*
//! term   := coeff ('*' 't' ('^' exp)?)? | 't' ('^' exp)?
//! coeff  := rational | '(' rational ('+'|'-') rational 'i' ')'
//! exp    := integer | '(' integer '/' integer ')'
//! ```
//!
//! ```
//! use pmtrop::series::PuiseuxPoly;
//!
//! let p: PuiseuxPoly = "1 - 2*t^(3/2) + t^2".parse().unwrap();
//! assert_eq!(p.to_string(), "1 - 2*t^(3/2) + t^2");
//! assert_eq!(p.nu().unwrap(), pmtrop::series::int(0));
//! ```

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational numbers; always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Builds the rational `p/q`. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Parses `"p"`, `"-p"` or `"p/q"`; rejects zero denominators and whitespace.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (s, None),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::parse(0, format!("invalid rational {s:?}")))?;
    let den: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| Error::parse(0, format!("invalid rational {s:?}")))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::parse(0, format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Element of `Q` (real mode) or `Q(i)` (complex mode).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coefficient {
    pub re: Rational,
    pub im: Rational,
}

impl Coefficient {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self {
            re,
            im: Rational::zero(),
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::real(int(v))
    }

    pub fn zero() -> Self {
        Self::real(Rational::zero())
    }

    pub fn one() -> Self {
        Self::real(Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Add for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        Coefficient::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        Coefficient::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        Coefficient::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient::new(-self.re.clone(), -self.im.clone())
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_real() {
            write!(f, "{}", self.re)
        } else {
            let sign = if self.im.is_negative() { '-' } else { '+' };
            write!(f, "({}{}{}i)", self.re, sign, self.im.abs())
        }
    }
}

/// A finite Puiseux polynomial in canonical form: exponents strictly
/// increasing, no zero coefficients, zero is the empty sum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PuiseuxPoly {
    terms: Vec<(Rational, Coefficient)>,
}

impl PuiseuxPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(Coefficient::real(c), Rational::zero())
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(int(c))
    }

    /// `c·t^exp`.
    pub fn monomial(c: Coefficient, exp: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self {
                terms: vec![(exp, c)],
            }
        }
    }

    /// `t^exp`.
    pub fn t_pow(exp: Rational) -> Self {
        Self::monomial(Coefficient::one(), exp)
    }

    /// Collects arbitrary `(exponent, coefficient)` pairs into canonical form.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Coefficient)>,
    {
        let mut acc: BTreeMap<Rational, Coefficient> = BTreeMap::new();
        for (e, c) in terms {
            let slot = acc.entry(e).or_insert_with(Coefficient::zero);
            *slot = &*slot + &c;
        }
        Self {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[(Rational, Coefficient)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every coefficient has zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_real())
    }

    /// The coefficient when `self` is a constant (including zero).
    pub fn as_constant(&self) -> Option<Coefficient> {
        match self.terms.as_slice() {
            [] => Some(Coefficient::zero()),
            [(e, c)] if e.is_zero() => Some(c.clone()),
            _ => None,
        }
    }

    /// Smallest exponent present.
    pub fn val(&self) -> Result<Rational> {
        self.terms
            .first()
            .map(|(e, _)| e.clone())
            .ok_or(Error::ZeroValuation)
    }

    /// Negated valuation, the max-convention tropicalization.
    pub fn nu(&self) -> Result<Rational> {
        self.val().map(|v| -v)
    }

    pub fn leading_coeff(&self) -> Result<Coefficient> {
        self.terms
            .first()
            .map(|(_, c)| c.clone())
            .ok_or(Error::ZeroValuation)
    }

    /// Positivity in the unique ordering compatible with the valuation:
    /// nonzero with positive leading coefficient.
    pub fn is_positive(&self) -> Result<bool> {
        if !self.is_real() {
            return Err(Error::ComplexOrder);
        }
        Ok(self
            .terms
            .first()
            .is_some_and(|(_, c)| c.re.is_positive()))
    }

    /// Total order on real-mode elements: `p < q` iff `q - p` is positive.
    pub fn compare(&self, other: &Self) -> Result<Ordering> {
        let diff = self - other;
        if diff.is_zero() {
            if !self.is_real() || !other.is_real() {
                return Err(Error::ComplexOrder);
            }
            return Ok(Ordering::Equal);
        }
        if diff.is_positive()? {
            Ok(Ordering::Greater)
        } else {
            Ok(Ordering::Less)
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.conj())).collect(),
        }
    }

    /// Substitutes `t -> t^factor`; `factor = 1/2` halves every valuation.
    pub fn substitute_power(&self, factor: &Rational) -> Result<Self> {
        if factor.is_zero() {
            return Err(Error::InvalidInput(
                "substitution t -> t^0 collapses the ring".into(),
            ));
        }
        let mut terms: Vec<_> = self
            .terms
            .iter()
            .map(|(e, c)| (e * factor, c.clone()))
            .collect();
        if factor.is_negative() {
            terms.reverse();
        }
        Ok(Self { terms })
    }

    /// Multiplies by `c·t^exp` without renormalizing the term order.
    pub fn mul_monomial(&self, c: &Coefficient, exp: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, d)| (e + exp, d * c))
                .collect(),
        }
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let rhs = |c: &Coefficient| if negate_other { -c } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (ea, ca) = &self.terms[i];
            let (eb, cb) = &other.terms[j];
            match ea.cmp(eb) {
                Ordering::Less => {
                    out.push((ea.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((eb.clone(), rhs(cb)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca + &rhs(cb);
                    if !c.is_zero() {
                        out.push((ea.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(e, c)| (e.clone(), rhs(c))));
        Self { terms: out }
    }
}

impl Add for &PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn add(self, rhs: &PuiseuxPoly) -> PuiseuxPoly {
        self.merge(rhs, false)
    }
}

impl Sub for &PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn sub(self, rhs: &PuiseuxPoly) -> PuiseuxPoly {
        self.merge(rhs, true)
    }
}

impl Mul for &PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn mul(self, rhs: &PuiseuxPoly) -> PuiseuxPoly {
        if self.is_zero() || rhs.is_zero() {
            return PuiseuxPoly::zero();
        }
        let mut acc: BTreeMap<Rational, Coefficient> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let prod = ca * cb;
                let slot = acc.entry(ea + eb).or_insert_with(Coefficient::zero);
                *slot = &*slot + &prod;
            }
        }
        PuiseuxPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn neg(self) -> PuiseuxPoly {
        PuiseuxPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for PuiseuxPoly {
            type Output = PuiseuxPoly;
            fn $m(self, rhs: PuiseuxPoly) -> PuiseuxPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&PuiseuxPoly> for PuiseuxPoly {
            type Output = PuiseuxPoly;
            fn $m(self, rhs: &PuiseuxPoly) -> PuiseuxPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn neg(self) -> PuiseuxPoly {
        -&self
    }
}

fn fmt_exponent(e: &Rational) -> String {
    if e.is_one() {
        String::new()
    } else if e.is_integer() {
        format!("^{}", e.numer())
    } else {
        format!("^({}/{})", e.numer(), e.denom())
    }
}

impl fmt::Display for PuiseuxPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if c.is_real() {
                let negative = c.re.is_negative();
                match (k, negative) {
                    (0, true) => f.write_str("-")?,
                    (0, false) => {}
                    (_, true) => f.write_str(" - ")?,
                    (_, false) => f.write_str(" + ")?,
                }
                let mag = c.re.abs();
                if e.is_zero() {
                    write!(f, "{mag}")?;
                } else if mag.is_one() {
                    write!(f, "t{}", fmt_exponent(e))?;
                } else {
                    write!(f, "{mag}*t{}", fmt_exponent(e))?;
                }
            } else {
                if k > 0 {
                    f.write_str(" + ")?;
                }
                write!(f, "{c}")?;
                if !e.is_zero() {
                    write!(f, "*t{}", fmt_exponent(e))?;
                }
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected '{}'", b as char)))
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digit run parses"))
    }

    fn signed_integer(&mut self) -> Result<BigInt> {
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let v = self.digits()?;
        Ok(if neg { -v } else { v })
    }

    fn unsigned_rational(&mut self) -> Result<Rational> {
        let num = self.digits()?;
        if self.eat(b'/') {
            let at = self.pos;
            let den = self.digits()?;
            if den.is_zero() {
                return Err(Error::parse(at, "zero denominator"));
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn signed_rational(&mut self) -> Result<Rational> {
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let v = self.unsigned_rational()?;
        Ok(if neg { -v } else { v })
    }

    fn exponent(&mut self) -> Result<Rational> {
        if self.eat(b'(') {
            let num = self.signed_integer()?;
            let den = if self.eat(b'/') {
                let at = self.pos;
                let d = self.digits()?;
                if d.is_zero() {
                    return Err(Error::parse(at, "zero denominator"));
                }
                d
            } else {
                BigInt::one()
            };
            self.expect(b')')?;
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(self.signed_integer()?))
        }
    }

    fn t_power(&mut self) -> Result<Rational> {
        self.expect(b't')?;
        if self.eat(b'^') {
            self.exponent()
        } else {
            Ok(Rational::one())
        }
    }

    fn term(&mut self) -> Result<(Rational, Coefficient)> {
        match self.peek() {
            Some(b't') => Ok((self.t_power()?, Coefficient::one())),
            Some(b'(') => {
                self.pos += 1;
                let re = self.signed_rational()?;
                let neg = match self.peek() {
                    Some(b'+') => false,
                    Some(b'-') => true,
                    _ => return Err(Error::parse(self.pos, "expected '+' or '-' in complex coefficient")),
                };
                self.pos += 1;
                let im = self.unsigned_rational()?;
                self.expect(b'i')?;
                self.expect(b')')?;
                let c = Coefficient::new(re, if neg { -im } else { im });
                Ok((self.optional_t()?, c))
            }
            Some(b) if b.is_ascii_digit() => {
                let c = Coefficient::real(self.unsigned_rational()?);
                Ok((self.optional_t()?, c))
            }
            _ => Err(Error::parse(self.pos, "expected a term")),
        }
    }

    fn optional_t(&mut self) -> Result<Rational> {
        if self.eat(b'*') || self.peek() == Some(b't') {
            self.t_power()
        } else {
            Ok(Rational::zero())
        }
    }

    fn series(&mut self) -> Result<PuiseuxPoly> {
        let mut terms = Vec::new();
        let mut negate = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let (e, c) = self.term()?;
            terms.push((e, if negate { -&c } else { c }));
            match self.peek() {
                None => break,
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                Some(_) => return Err(Error::parse(self.pos, "expected '+' or '-'")),
            }
            self.pos += 1;
        }
        Ok(PuiseuxPoly::from_terms(terms))
    }
}

impl FromStr for PuiseuxPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if !compact.is_ascii() {
            return Err(Error::parse(0, "non-ASCII character in series literal"));
        }
        let mut p = Parser {
            src: compact.as_bytes(),
            pos: 0,
        };
        p.series()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> PuiseuxPoly {
        s.parse().unwrap()
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(p("t^4").val().unwrap(), int(4));
        assert_eq!(p("t^2 + t^4").val().unwrap(), int(2));
        let q = p("t - t^2");
        assert_eq!((&q * &q).val().unwrap(), int(2));
        assert_eq!(PuiseuxPoly::zero().val(), Err(Error::ZeroValuation));
    }

    #[test]
    fn nu_examples() {
        assert_eq!(p("t^8").nu().unwrap(), int(-8));
        assert_eq!(PuiseuxPoly::one().nu().unwrap(), int(0));
        assert_eq!(p("-t + 2*t^2 + t^4").nu().unwrap(), int(-1));
        assert_eq!(PuiseuxPoly::zero().nu(), Err(Error::ZeroValuation));
    }

    #[test]
    fn leading_coefficients() {
        assert_eq!(p("-t + 2*t^2").leading_coeff().unwrap(), Coefficient::from_int(-1));
        assert_eq!(p("3 + t").leading_coeff().unwrap(), Coefficient::from_int(3));
        assert_eq!((p("1 + t") * p("2 - t")).leading_coeff().unwrap(), Coefficient::from_int(2));
        assert!(PuiseuxPoly::zero().leading_coeff().is_err());
    }

    #[test]
    fn positivity() {
        assert!(p("t^2 - 2*t^3 + 2*t^4 + t^8").is_positive().unwrap());
        assert!(!PuiseuxPoly::zero().is_positive().unwrap());
        assert!(!p("-t + 2*t^2").is_positive().unwrap());
        assert_eq!(p("(1+1i)*t").is_positive(), Err(Error::ComplexOrder));
    }

    #[test]
    fn conjugation() {
        assert_eq!(p("(1+1i)*t").conj(), p("(1-1i)*t"));
        let real = p("1 - 2*t^(3/2) + t^2");
        assert_eq!(real.conj(), real);
        let a = p("(1+1i)*t");
        let prod = &a.conj() * &a;
        assert_eq!(prod, p("2*t^2"));
        assert!(prod.is_real());
        assert_eq!(prod.nu().unwrap(), int(2) * a.nu().unwrap());
    }

    #[test]
    fn literal_round_trips() {
        for s in [
            "1 - 2*t^(3/2) + t^2",
            "(1+1i)*t",
            "0",
            "-t + 2*t^2 + t^4",
            "1/2*t^-1 + (0-3/4i) + t^(-1/2)",
            "(-2+1i)*t^3 - 5/3*t^(7/2)",
        ] {
            let parsed = p(s);
            let printed = parsed.to_string();
            assert_eq!(p(&printed), parsed, "{s}");
        }
        assert_eq!(p("1 - 2*t^(3/2) + t^2").to_string(), "1 - 2*t^(3/2) + t^2");
        assert_eq!(p("(1+1i)*t").to_string(), "(1+1i)*t");
        assert_eq!(p(" t ^ 2 +1 ").to_string(), "1 + t^2");
    }

    #[test]
    fn parse_errors() {
        assert!("1/0".parse::<PuiseuxPoly>().is_err());
        assert!("t^(1/0)".parse::<PuiseuxPoly>().is_err());
        assert!("1 +".parse::<PuiseuxPoly>().is_err());
        assert!("x".parse::<PuiseuxPoly>().is_err());
        assert!("(1+1)".parse::<PuiseuxPoly>().is_err());
        assert!(parse_rational("1/0").is_err());
        assert_eq!(parse_rational("-6/4").unwrap(), ratio(-3, 2));
    }

    #[test]
    fn halving_substitution() {
        let q = p("1 + t^2 + t^3");
        let h = q.substitute_power(&ratio(1, 2)).unwrap();
        assert_eq!(h, p("1 + t + t^(3/2)"));
        assert_eq!(h.nu().unwrap() * int(2), q.nu().unwrap());
        let inv = p("t + 2*t^3").substitute_power(&int(-1)).unwrap();
        assert_eq!(inv, p("2*t^-3 + t^-1"));
    }

    fn arb_coeff(complex: bool) -> impl Strategy<Value = Coefficient> {
        let im = if complex { -3i64..=3 } else { 0i64..=0 };
        (-4i64..=4, 1i64..=3, im).prop_map(|(a, d, b)| Coefficient::new(ratio(a, d), int(b)))
    }

    fn arb_poly() -> impl Strategy<Value = PuiseuxPoly> {
        (any::<bool>(), 0usize..5).prop_flat_map(|(complex, len)| {
            prop::collection::vec((-6i64..=6, 1i64..=2, arb_coeff(complex)), len).prop_map(|ts| {
                PuiseuxPoly::from_terms(ts.into_iter().map(|(n, d, c)| (ratio(n, d), c)))
            })
        })
    }

    fn is_canonical(q: &PuiseuxPoly) -> bool {
        q.terms.windows(2).all(|w| w[0].0 < w[1].0) && q.terms.iter().all(|(_, c)| !c.is_zero())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            let sum = &a + &b;
            let prod = &a * &b;
            prop_assert!(is_canonical(&sum) && is_canonical(&prod) && is_canonical(&(&a - &b)));
            prop_assert_eq!(&sum, &(&b + &a));
            prop_assert_eq!(&prod, &(&b * &a));
            prop_assert_eq!(&(&sum + &c), &(&a + &(&b + &c)));
            prop_assert_eq!(&(&prod * &c), &(&a * &(&b * &c)));
            prop_assert_eq!(&a * &(&b + &c), &prod + &(&a * &c));
            prop_assert!((&(&a - &b) + &b) == a);
        }

        #[test]
        fn valuation_laws(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert_eq!((&a * &b).val().unwrap(), a.val().unwrap() + b.val().unwrap());
            let s = &a + &b;
            let lo = a.val().unwrap().min(b.val().unwrap());
            if !s.is_zero() {
                prop_assert!(s.val().unwrap() >= lo);
            }
            let cancels = a.val().unwrap() == b.val().unwrap()
                && (&a.leading_coeff().unwrap() + &b.leading_coeff().unwrap()).is_zero();
            if !cancels {
                prop_assert_eq!(s.val().unwrap(), lo);
            }
            prop_assert_eq!(a.conj().nu().unwrap(), a.nu().unwrap());
        }

        #[test]
        fn printing_round_trips(a in arb_poly()) {
            let printed = a.to_string();
            prop_assert_eq!(printed.parse::<PuiseuxPoly>().unwrap(), a);
        }

        #[test]
        fn order_is_compatible_with_nu(a in arb_poly(), b in arb_poly()) {
            let (a, b) = (a.conj() * &a, b.conj() * &b);
            prop_assume!(a.is_positive().unwrap() && b.is_positive().unwrap());
            let (lo, hi) = if a.compare(&b).unwrap() == Ordering::Less { (a, b) } else { (b, a) };
            prop_assert!(lo.nu().unwrap() <= hi.nu().unwrap());
        }
    }
}
