//! Finitely supported integer combinations of ordinal tuples.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use crate::ordinal::Ordinal;

/// An element of the free abelian group on ordinal tuples. Zero coefficients
/// are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct FormalSum {
    coeffs: BTreeMap<Vec<Ordinal>, i64>,
}

impl FormalSum {
    pub fn zero() -> Self {
        FormalSum::default()
    }

    /// The generator for `key` with coefficient `c`.
    pub fn term(key: Vec<Ordinal>, c: i64) -> Self {
        let mut s = FormalSum::zero();
        s.add_term(key, c);
        s
    }

    pub fn add_term(&mut self, key: Vec<Ordinal>, c: i64) {
        if c == 0 {
            return;
        }
        match self.coeffs.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, key: &[Ordinal]) -> i64 {
        self.coeffs.get(key).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<Ordinal>, i64)> {
        self.coeffs.iter().map(|(k, v)| (k, *v))
    }

    pub fn scale(&self, k: i64) -> FormalSum {
        if k == 0 {
            return FormalSum::zero();
        }
        FormalSum { coeffs: self.coeffs.iter().map(|(key, v)| (key.clone(), v * k)).collect() }
    }

    /// Sum of all coefficients.
    pub fn augmentation(&self) -> i64 {
        self.coeffs.values().sum()
    }
}

impl AddAssign<&FormalSum> for FormalSum {
    fn add_assign(&mut self, rhs: &FormalSum) {
        for (k, v) in &rhs.coeffs {
            self.add_term(k.clone(), *v);
        }
    }
}

impl Add<&FormalSum> for &FormalSum {
    type Output = FormalSum;
    fn add(self, rhs: &FormalSum) -> FormalSum {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&FormalSum> for &FormalSum {
    type Output = FormalSum;
    fn sub(self, rhs: &FormalSum) -> FormalSum {
        let mut out = self.clone();
        out += &rhs.scale(-1);
        out
    }
}

impl Neg for &FormalSum {
    type Output = FormalSum;
    fn neg(self) -> FormalSum {
        self.scale(-1)
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, v)) in self.coeffs.iter().enumerate() {
            let sign = if *v < 0 { "-" } else if i > 0 { "+" } else { "" };
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(sign)?;
            if v.abs() != 1 {
                write!(f, "{}", v.abs())?;
            }
            f.write_str("[")?;
            for (j, o) in k.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{o}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordinal::ord;

    fn key(s: &[&str]) -> Vec<Ordinal> {
        s.iter().map(|x| ord(x)).collect()
    }

    #[test]
    fn cancellation_removes_keys() {
        let mut s = FormalSum::term(key(&["1", "2"]), 3);
        s.add_term(key(&["1", "2"]), -3);
        assert!(s.is_zero());
        assert_eq!(s, FormalSum::zero());
    }

    #[test]
    fn group_laws() {
        let a = FormalSum::term(key(&["w"]), 2);
        let b = FormalSum::term(key(&["3"]), -1);
        assert_eq!(&a + &b, &b + &a);
        assert!((&(&a + &b) - &(&b + &a)).is_zero());
        assert!((&a + &(-&a)).is_zero());
        assert_eq!(a.to_string(), "2[w]");
        assert_eq!((&a + &b).to_string(), "-[3] +2[w]");
    }
}
