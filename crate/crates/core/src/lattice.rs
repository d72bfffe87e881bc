//! Lattice vectors and height-truncated formal characters.
//!
//! A [`FormalCharacter`] stores a finitely supported integer combination
//! `sum_v coeff(v) * e^{-v}` of exponentials indexed by lattice vectors,
//! together with the height cutoff it is valid up to. All series
//! arithmetic (products, geometric-series inverses) silently drops terms
//! beyond the common cutoff, which is the truncation discipline every
//! infinite product in this crate follows.

use std::collections::HashMap;
use std::fmt;

/// Integer coordinate vector over a declared basis (the simple roots of a
/// root system; for affine systems the affine simple root comes first).
/// The height of a vector is the sum of its coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct LatticeVector(pub Vec<i32>);

impl LatticeVector {
    pub fn zero(rank: usize) -> Self {
        LatticeVector(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().map(|&c| c as i64).sum()
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank(), "lattice basis mismatch");
        LatticeVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank(), "lattice basis mismatch");
        LatticeVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, n: i32) -> Self {
        LatticeVector(self.0.iter().map(|c| c * n).collect())
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, PartialEq, Eq)]
pub enum SeriesError {
    BasisMismatch,
    NonUnitConstantTerm,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::BasisMismatch => write!(f, "lattice basis mismatch"),
            SeriesError::NonUnitConstantTerm => {
                write!(f, "series inverse needs constant term +1 or -1")
            }
        }
    }
}

impl std::error::Error for SeriesError {}

/// Finitely supported integer series `sum coeff(v) e^{-v}`, truncated at
/// `cutoff`: coefficients of vectors of height above the cutoff are
/// unknown and implicitly dropped by every operation.
#[derive(Clone, Debug)]
pub struct FormalCharacter {
    rank: usize,
    cutoff: i64,
    support: HashMap<LatticeVector, i64>,
}

impl FormalCharacter {
    pub fn zero(rank: usize, cutoff: i64) -> Self {
        FormalCharacter { rank, cutoff, support: HashMap::new() }
    }

    pub fn one(rank: usize, cutoff: i64) -> Self {
        let mut s = Self::zero(rank, cutoff);
        s.add_term(LatticeVector::zero(rank), 1);
        s
    }

    /// `1 + sign * e^{-v}`.
    pub fn one_plus(v: LatticeVector, sign: i64, cutoff: i64) -> Self {
        let mut s = Self::one(v.rank(), cutoff);
        s.add_term(v, sign);
        s
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    pub fn coeff(&self, v: &LatticeVector) -> i64 {
        self.support.get(v).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = (&LatticeVector, &i64)> {
        self.support.iter()
    }

    pub fn add_term(&mut self, v: LatticeVector, c: i64) {
        assert_eq!(v.rank(), self.rank, "lattice basis mismatch");
        if c == 0 || v.height() > self.cutoff {
            return;
        }
        let e = self.support.entry(v.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.support.remove(&v);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        if self.rank != other.rank {
            return Err(SeriesError::BasisMismatch);
        }
        let mut out = FormalCharacter {
            rank: self.rank,
            cutoff: self.cutoff.min(other.cutoff),
            support: HashMap::new(),
        };
        for (v, c) in self.support.iter().chain(other.support.iter()) {
            out.add_term(v.clone(), *c);
        }
        Ok(out)
    }

    pub fn negate(&self) -> Self {
        let mut out = self.clone();
        for c in out.support.values_mut() {
            *c = -*c;
        }
        out
    }

    /// Truncated product; the result's cutoff is the minimum of the two.
    pub fn multiply(&self, other: &Self) -> Result<Self, SeriesError> {
        if self.rank != other.rank {
            return Err(SeriesError::BasisMismatch);
        }
        let cutoff = self.cutoff.min(other.cutoff);
        let mut out = FormalCharacter { rank: self.rank, cutoff, support: HashMap::new() };
        for (va, ca) in &self.support {
            for (vb, cb) in &other.support {
                let v = va.add(vb);
                if v.height() <= cutoff {
                    let e = out.support.entry(v).or_insert(0);
                    *e += ca * cb;
                }
            }
        }
        out.support.retain(|_, c| *c != 0);
        Ok(out)
    }

    /// Geometric-series inverse, valid when the constant term is `+1` or
    /// `-1` and all other supported vectors have positive height.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let zero = LatticeVector::zero(self.rank);
        let c0 = self.coeff(&zero);
        if c0 != 1 && c0 != -1 {
            return Err(SeriesError::NonUnitConstantTerm);
        }
        // group the non-constant part by height
        let mut by_height: Vec<(i64, LatticeVector, i64)> = self
            .support
            .iter()
            .filter(|(v, _)| **v != zero)
            .map(|(v, c)| (v.height(), v.clone(), *c))
            .collect();
        if by_height.iter().any(|(h, _, _)| *h <= 0) {
            // inverse only defined w.r.t. the height grading
            return Err(SeriesError::NonUnitConstantTerm);
        }
        by_height.sort();
        let mut inv = FormalCharacter::zero(self.rank, self.cutoff);
        inv.support.insert(zero.clone(), c0);
        // solve (self * inv) = 1 height by height
        let mut frontier: Vec<(LatticeVector, i64)> = vec![(zero.clone(), c0)];
        let mut h = 0;
        while h < self.cutoff {
            h += 1;
            let mut layer: HashMap<LatticeVector, i64> = HashMap::new();
            for (ha, va, ca) in &by_height {
                if *ha > h {
                    break;
                }
                for (vb, cb) in &frontier {
                    if vb.height() + ha == h {
                        let v = va.add(vb);
                        *layer.entry(v).or_insert(0) -= c0 * ca * cb;
                    }
                }
            }
            layer.retain(|_, c| *c != 0);
            for (v, c) in &layer {
                inv.support.insert(v.clone(), *c);
                frontier.push((v.clone(), *c));
            }
        }
        Ok(inv)
    }
}

impl fmt::Display for FormalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut entries: Vec<_> = self.support.iter().collect();
        entries.sort_by_key(|(v, _)| (v.height(), (*v).clone()));
        if entries.is_empty() {
            return write!(f, "0 (cutoff {})", self.cutoff);
        }
        for (i, (v, c)) in entries.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c:+}*e^-{v}")?;
        }
        write!(f, " (cutoff {})", self.cutoff)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(coords: &[i32]) -> LatticeVector {
        LatticeVector(coords.to_vec())
    }

    #[test]
    fn difference_of_squares() {
        // (1 - e^-a)(1 + e^-a) = 1 - e^-2a at cutoff 2
        let a = FormalCharacter::one_plus(e(&[1]), -1, 2);
        let b = FormalCharacter::one_plus(e(&[1]), 1, 2);
        let p = a.multiply(&b).unwrap();
        assert_eq!(p.coeff(&e(&[0])), 1);
        assert_eq!(p.coeff(&e(&[1])), 0);
        assert_eq!(p.coeff(&e(&[2])), -1);
    }

    #[test]
    fn rank_two_product() {
        // (1-e^-a1)(1-e^-a2) = 1 - e^-a1 - e^-a2 + e^-a1-a2
        let a = FormalCharacter::one_plus(e(&[1, 0]), -1, 2);
        let b = FormalCharacter::one_plus(e(&[0, 1]), -1, 2);
        let p = a.multiply(&b).unwrap();
        assert_eq!(p.coeff(&e(&[1, 1])), 1);
        assert_eq!(p.coeff(&e(&[1, 0])), -1);
        assert_eq!(p.coeff(&e(&[0, 1])), -1);
    }

    #[test]
    fn geometric_inverse() {
        // (1-e^-a)^-1 = 1 + e^-a + e^-2a + e^-3a at cutoff 3
        let a = FormalCharacter::one_plus(e(&[1]), -1, 3);
        let inv = a.invert().unwrap();
        for n in 0..=3 {
            assert_eq!(inv.coeff(&e(&[n])), 1);
        }
        // (1+e^-b)^-1 = 1 - e^-b + e^-2b
        let b = FormalCharacter::one_plus(e(&[1]), 1, 2);
        let inv = b.invert().unwrap();
        assert_eq!(inv.coeff(&e(&[0])), 1);
        assert_eq!(inv.coeff(&e(&[1])), -1);
        assert_eq!(inv.coeff(&e(&[2])), 1);
    }

    #[test]
    fn inverse_times_series_is_one() {
        let mut s = FormalCharacter::one(2, 6);
        s.add_term(e(&[1, 0]), -1);
        s.add_term(e(&[1, 1]), 2);
        s.add_term(e(&[0, 2]), -3);
        let inv = s.invert().unwrap();
        let p = s.multiply(&inv).unwrap();
        assert_eq!(p.coeff(&e(&[0, 0])), 1);
        assert!(p.support().all(|(v, c)| *c == 0 || v.height() == 0));
    }

    #[test]
    fn basis_mismatch_is_an_error() {
        let a = FormalCharacter::one(1, 2);
        let b = FormalCharacter::one(2, 2);
        assert_eq!(a.multiply(&b).unwrap_err(), SeriesError::BasisMismatch);
    }

    #[test]
    fn non_unit_constant_term_is_an_error() {
        let mut s = FormalCharacter::zero(1, 2);
        s.add_term(e(&[0]), 2);
        assert_eq!(s.invert().unwrap_err(), SeriesError::NonUnitConstantTerm);
    }
}
