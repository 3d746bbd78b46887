//! Elements of `S`: sequences over GF(2) with finitely many ones.
//!
//! A vector is stored as its support, the strictly increasing list of
//! 1-based positions holding a 1. The empty support is the zero vector.
//! Equality, ordering, hashing and the text form are all defined on the
//! support, so the invariants hold regardless of how a caller built the value.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::gf2::Gf2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VectorError {
    #[error("invalid basis index {0} (indices start at 1)")]
    InvalidBasisIndex(u64),
    #[error("support is not strictly increasing: {next} follows {prev}")]
    NotIncreasing { prev: u64, next: u64 },
    #[error("index {index} exceeds rank width {width}")]
    RankOverflow { index: u64, width: u32 },
    #[error("rank width {0} outside 1..=64")]
    InvalidWidth(u32),
    #[error("invalid vector literal at `{token}`: {reason}")]
    Parse { token: String, reason: &'static str },
}

/// A vector of `S`, in canonical (sorted, duplicate-free, 1-based) form.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinSupportVec {
    support: Vec<u64>,
}

impl FinSupportVec {
    pub const fn zero() -> Self {
        FinSupportVec {
            support: Vec::new(),
        }
    }

    /// Builds a vector from a support list, rejecting anything not already canonical.
    pub fn from_support(support: Vec<u64>) -> Result<Self, VectorError> {
        if let Some(&first) = support.first() {
            if first == 0 {
                return Err(VectorError::InvalidBasisIndex(0));
            }
        }
        for pair in support.windows(2) {
            if pair[1] <= pair[0] {
                return Err(VectorError::NotIncreasing {
                    prev: pair[0],
                    next: pair[1],
                });
            }
        }
        Ok(FinSupportVec { support })
    }

    /// The canonical basis vector `e_n`.
    pub fn basis(n: u64) -> Result<Self, VectorError> {
        if n == 0 {
            return Err(VectorError::InvalidBasisIndex(n));
        }
        Ok(FinSupportVec { support: vec![n] })
    }

    pub fn support(&self) -> &[u64] {
        &self.support
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    /// Largest index holding a 1, or `None` for the zero vector.
    pub fn max_index(&self) -> Option<u64> {
        self.support.last().copied()
    }

    /// Whether every 1 lies within the first `p` positions.
    pub fn within(&self, p: u64) -> bool {
        self.max_index().is_none_or(|m| m <= p)
    }

    /// Entry `s_i` of the sequence.
    pub fn entry(&self, i: u64) -> Gf2 {
        Gf2::new(self.support.binary_search(&i).is_ok())
    }

    /// Entry-wise sum. On supports this is the symmetric difference.
    pub fn add(&self, other: &FinSupportVec) -> FinSupportVec {
        let (a, b) = (&self.support, &other.support);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                // 1 + 1 = 0
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        FinSupportVec { support: out }
    }

    /// Additive inverse. Every vector is its own inverse.
    pub fn neg(&self) -> FinSupportVec {
        self.clone()
    }

    /// `self - other`, which coincides with `self + other`.
    pub fn sub(&self, other: &FinSupportVec) -> FinSupportVec {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, alpha: Gf2) -> FinSupportVec {
        if alpha.bit() {
            self.clone()
        } else {
            FinSupportVec::zero()
        }
    }

    /// The discrete norm: 0 for the zero vector, 1 otherwise.
    pub fn norm(&self) -> u8 {
        u8::from(!self.is_zero())
    }

    /// Encodes the vector as `Σ 2^(i-1)` over its support.
    pub fn rank(&self, width: RankWidth) -> Result<u64, VectorError> {
        let mut n = 0u64;
        for &i in &self.support {
            if i > u64::from(width.get()) {
                return Err(VectorError::RankOverflow {
                    index: i,
                    width: width.get(),
                });
            }
            n |= 1u64 << (i - 1);
        }
        Ok(n)
    }

    /// Inverse of [`rank`](Self::rank): bit `k` of `n` becomes index `k + 1`.
    pub fn unrank(n: u64) -> FinSupportVec {
        let mut support = Vec::with_capacity(n.count_ones() as usize);
        let mut rest = n;
        while rest != 0 {
            let k = rest.trailing_zeros();
            support.push(u64::from(k) + 1);
            rest &= rest - 1;
        }
        FinSupportVec { support }
    }
}

/// All `2^p` vectors with support inside `{1..p}`, in rank order.
///
/// # Panics
/// If `p > 63`.
pub fn truncation(p: u32) -> impl Iterator<Item = FinSupportVec> + Clone {
    assert!(p <= 63, "truncation {p} is not enumerable");
    (0..1u64 << p).map(FinSupportVec::unrank)
}

/// Largest support index admitted by [`FinSupportVec::rank`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RankWidth(u32);

impl RankWidth {
    pub const DEFAULT: RankWidth = RankWidth(62);
    pub const MAX: RankWidth = RankWidth(64);

    pub fn new(width: u32) -> Result<Self, VectorError> {
        if (1..=64).contains(&width) {
            Ok(RankWidth(width))
        } else {
            Err(VectorError::InvalidWidth(width))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl Default for RankWidth {
    fn default() -> Self {
        RankWidth::DEFAULT
    }
}

impl fmt::Display for FinSupportVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.support.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for FinSupportVec {
    type Err = VectorError;

    /// Parses `{i1,...,ik}`; whitespace around the braces and commas is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        let parse_err = |token: &str, reason| VectorError::Parse {
            token: token.to_string(),
            reason,
        };
        let body = trimmed
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| parse_err(trimmed, "expected `{...}`"))?;
        if body.trim().is_empty() {
            return Ok(FinSupportVec::zero());
        }
        let mut support: Vec<u64> = Vec::new();
        for raw in body.split(',') {
            let token = raw.trim();
            if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
                return Err(parse_err(token, "expected a positive decimal index"));
            }
            let i: u64 = token
                .parse()
                .map_err(|_| parse_err(token, "index out of range"))?;
            if i == 0 {
                return Err(parse_err(token, "indices start at 1"));
            }
            if let Some(&prev) = support.last() {
                if i == prev {
                    return Err(parse_err(token, "repeated index"));
                }
                if i < prev {
                    return Err(parse_err(token, "indices must be strictly increasing"));
                }
            }
            support.push(i);
        }
        Ok(FinSupportVec { support })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> FinSupportVec {
        s.parse().unwrap()
    }

    #[test]
    fn addition_examples() {
        assert_eq!(v("{1,2}").add(&v("{2,3}")), v("{1,3}"));
        let x = v("{1,4,9}");
        assert_eq!(x.add(&x), FinSupportVec::zero());
        assert_eq!(x.add(&FinSupportVec::zero()), x);
    }

    #[test]
    fn scalar_examples() {
        assert_eq!(v("{1,5}").scalar_mul(Gf2::ZERO), v("{}"));
        assert_eq!(v("{1,5}").scalar_mul(Gf2::ONE), v("{1,5}"));
        assert_eq!(v("{}").scalar_mul(Gf2::ONE), v("{}"));
    }

    #[test]
    fn norm_examples() {
        assert_eq!(v("{}").norm(), 0);
        assert_eq!(v("{5}").norm(), 1);
        assert_eq!(v("{1,3,7}").norm(), 1);
    }

    #[test]
    fn basis_vectors() {
        assert_eq!(FinSupportVec::basis(1).unwrap(), v("{1}"));
        assert_eq!(FinSupportVec::basis(3).unwrap(), v("{3}"));
        assert_eq!(FinSupportVec::basis(3).unwrap().norm(), 1);
        assert_eq!(
            FinSupportVec::basis(0),
            Err(VectorError::InvalidBasisIndex(0))
        );
        let e2 = FinSupportVec::basis(2).unwrap();
        assert!(e2.add(&e2).is_zero());
    }

    #[test]
    fn rank_examples() {
        let w = RankWidth::DEFAULT;
        assert_eq!(v("{}").rank(w), Ok(0));
        assert_eq!(v("{1}").rank(w), Ok(1));
        assert_eq!(v("{1,3}").rank(w), Ok(5));
        assert_eq!(
            v("{2,63}").rank(w),
            Err(VectorError::RankOverflow {
                index: 63,
                width: 62
            })
        );
        assert_eq!(v("{64}").rank(RankWidth::MAX), Ok(1 << 63));
        assert!(v("{4}").rank(RankWidth::new(3).unwrap()).is_err());
    }

    #[test]
    fn unrank_examples() {
        assert_eq!(FinSupportVec::unrank(0), v("{}"));
        assert_eq!(FinSupportVec::unrank(5), v("{1,3}"));
        assert_eq!(FinSupportVec::unrank(8), v("{4}"));
        assert_eq!(FinSupportVec::unrank(u64::MAX).support().len(), 64);
    }

    #[test]
    fn rank_width_bounds() {
        assert!(RankWidth::new(0).is_err());
        assert!(RankWidth::new(65).is_err());
        assert_eq!(RankWidth::default().get(), 62);
    }

    #[test]
    fn literal_parsing() {
        assert_eq!(v(" { 1 , 3,7 } ").support(), &[1, 3, 7]);
        assert_eq!(v("{ }"), FinSupportVec::zero());
        for bad in [
            "{2,1}", "{1,1}", "{0}", "{-1}", "{1,}", "1,2", "{a}", "{1 2}", "",
        ] {
            assert!(bad.parse::<FinSupportVec>().is_err(), "{bad}");
        }
        match "{1,3,2}".parse::<FinSupportVec>() {
            Err(VectorError::Parse { token, .. }) => assert_eq!(token, "2"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn from_support_validates() {
        assert!(FinSupportVec::from_support(vec![1, 2, 9]).is_ok());
        assert!(FinSupportVec::from_support(vec![0, 2]).is_err());
        assert!(FinSupportVec::from_support(vec![3, 3]).is_err());
        assert!(FinSupportVec::from_support(vec![]).unwrap().is_zero());
    }

    #[test]
    fn entries_and_truncation() {
        let x = v("{2,5}");
        assert_eq!(x.entry(2), Gf2::ONE);
        assert_eq!(x.entry(3), Gf2::ZERO);
        assert!(x.within(5) && !x.within(4));
        assert!(FinSupportVec::zero().within(0));
        let all: Vec<_> = truncation(3).collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|x| x.within(3)));
    }

    #[test]
    fn sub_is_add() {
        let (x, y) = (v("{1,2}"), v("{2,7}"));
        assert_eq!(x.sub(&y), x.add(&y));
        assert_eq!(x.neg(), x);
    }
}
