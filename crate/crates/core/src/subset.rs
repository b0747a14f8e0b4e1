//! Subsets of `[m] = {1, …, m}` as bitmasks: element `i` lives in bit `i-1`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest ground set a [`Subset`] can index.
pub const MAX_GROUND: usize = 64;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// `{1, …, k}`.
    pub fn prefix(k: usize) -> Self {
        if k >= 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << k) - 1)
        }
    }

    pub fn full(m: usize) -> Self {
        Self::prefix(m)
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i >= 1);
        Subset(1u64 << (i - 1))
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elems: I) -> Self {
        elems
            .into_iter()
            .fold(Subset::EMPTY, |s, i| s.with(i))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i >= 1 && self.0 >> (i - 1) & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        Subset(self.0 | 1u64 << (i - 1))
    }

    pub fn without(self, i: usize) -> Self {
        Subset(self.0 & !(1u64 << (i - 1)))
    }

    pub fn union(self, o: Subset) -> Self {
        Subset(self.0 | o.0)
    }

    pub fn intersection(self, o: Subset) -> Self {
        Subset(self.0 & o.0)
    }

    pub fn difference(self, o: Subset) -> Self {
        Subset(self.0 & !o.0)
    }

    pub fn is_subset_of(self, o: Subset) -> bool {
        self.0 & !o.0 == 0
    }

    /// Elements in increasing order (1-based).
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i + 1)
            }
        })
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Number of elements strictly smaller than `i`.
    pub fn rank_below(self, i: usize) -> usize {
        (self.0 & ((1u64 << (i - 1)) - 1)).count_ones() as usize
    }

    /// Label used in JSON keys: digits for `m <= 9`, comma-separated otherwise.
    pub fn label(self, m: usize) -> String {
        let elems: Vec<String> = self.elements().map(|i| i.to_string()).collect();
        if m <= 9 {
            elems.concat()
        } else {
            elems.join(",")
        }
    }

    pub fn parse_label(s: &str, m: usize) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("invalid subset label {s:?} for ground set of size {m}"));
        let elems: Vec<usize> = if s.is_empty() {
            Vec::new()
        } else if m <= 9 {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        } else {
            s.split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        };
        let mut out = Subset::EMPTY;
        let mut prev = 0;
        for i in elems {
            if i == 0 || i > m || i <= prev {
                return Err(bad());
            }
            prev = i;
            out = out.with(i);
        }
        Ok(out)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let elems: Vec<String> = self.elements().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", elems.join(","))
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.elements())
    }
}

/// All subsets of `[m]` in mask order.
pub fn all_subsets(m: usize) -> impl Iterator<Item = Subset> {
    assert!(m < 64, "ground set too large to enumerate");
    (0..1u64 << m).map(Subset)
}

/// All `k`-subsets of `[m]` in increasing mask order.
pub fn subsets_of_size(m: usize, k: usize) -> Vec<Subset> {
    let mut out = Vec::new();
    if k > m {
        return out;
    }
    if k == 0 {
        out.push(Subset::EMPTY);
        return out;
    }
    // Gosper's hack
    let limit: u128 = 1u128 << m;
    let mut x: u64 = (1u64 << k) - 1;
    while (x as u128) < limit {
        out.push(Subset(x));
        let c = x & x.wrapping_neg();
        let r = x.wrapping_add(c);
        if r == 0 {
            break;
        }
        x = (((r ^ x) >> 2) / c) | r;
    }
    out
}

pub fn binomial(m: usize, k: usize) -> usize {
    if k > m {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (m - i) / (i + 1))
}
