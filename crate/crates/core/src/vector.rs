//! Integer vectors indexed by the vertices of a quiver.
//!
//! Entries are arbitrary-precision integers: path counts and cone
//! coefficients can exceed machine words on wild quivers. The ordering is
//! lexicographic in the declared vertex order, which is what every
//! "sorted"/"tie-broken lexicographically" contract in this crate means.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        IntVector(entries)
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        IntVector(entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn zero(len: usize) -> Self {
        IntVector(vec![BigInt::zero(); len])
    }

    /// Standard unit vector `eps_i`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zero(len);
        v.0[i] = BigInt::from(1);
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn get(&self, i: usize) -> &BigInt {
        &self.0[i]
    }

    pub fn set(&mut self, i: usize, value: BigInt) {
        self.0[i] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|e| !e.is_negative())
    }

    /// Index of the first negative entry, if any.
    pub fn first_negative(&self) -> Option<usize> {
        self.0.iter().position(|e| e.is_negative())
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &IntVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.0[i].is_zero()).collect()
    }

    pub fn total(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &IntVector) -> IntVector {
        assert_eq!(self.len(), other.len());
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &IntVector) -> IntVector {
        assert_eq!(self.len(), other.len());
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> IntVector {
        IntVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &BigInt) -> IntVector {
        IntVector(self.0.iter().map(|a| a * c).collect())
    }

    pub fn dot(&self, other: &IntVector) -> BigInt {
        assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|e| i64::try_from(e).ok()).collect()
    }

    /// Parses a comma-separated list such as `1,0,-2`.
    pub fn parse_csv(text: &str) -> Result<IntVector> {
        let entries = text
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad integer `{}`", part.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        if entries.is_empty() {
            return Err(Error::Parse("empty vector".into()));
        }
        Ok(IntVector(entries))
    }
}

/// Iterates over all vectors in the box `[lo, hi]^len` in lexicographic
/// order (last coordinate fastest).
pub fn enumerate_box(len: usize, lo: i64, hi: i64) -> BoxIter {
    BoxIter {
        lo,
        hi,
        current: if lo <= hi { Some(vec![lo; len]) } else { None },
    }
}

pub struct BoxIter {
    lo: i64,
    hi: i64,
    current: Option<Vec<i64>>,
}

impl Iterator for BoxIter {
    type Item = IntVector;

    fn next(&mut self) -> Option<IntVector> {
        let cur = self.current.as_mut()?;
        let out = IntVector::from_i64(cur);
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] < self.hi {
                cur[i] += 1;
                for e in &mut cur[i + 1..] {
                    *e = self.lo;
                }
                break;
            }
        }
        Some(out)
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl Serialize for IntVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for e in &self.0 {
            let small: i128 = e.try_into().map_err(|_| {
                serde::ser::Error::custom("entry exceeds the serializable integer range")
            })?;
            seq.serialize_element(&small)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = IntVector;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a sequence of integers")
            }
            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<IntVector, A::Error> {
                let mut entries = Vec::new();
                while let Some(e) = seq.next_element::<i128>()? {
                    entries.push(BigInt::from(e));
                }
                Ok(IntVector(entries))
            }
        }
        deserializer.deserialize_seq(V)
    }
}
