//! Ordinals below epsilon_0 in Cantor normal form.
//!
//! An [`Ordinal`] is a finite list of terms `w^e * c` with strictly
//! decreasing exponents and positive coefficients; the empty list is 0.
//! Values are immutable and cheap to clone.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// One Cantor normal form term `w^exp * coef`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub exp: Ordinal,
    pub coef: BigUint,
}

/// An ordinal below epsilon_0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ordinal {
    terms: Arc<Vec<Term>>,
}

/// Shape of an ordinal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Kind {
    Zero,
    Successor(Ordinal),
    Limit,
}

/// Error from [`Ordinal::from_str`].
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("bad ordinal literal at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl Default for Ordinal {
    fn default() -> Self {
        Ordinal::zero()
    }
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Arc::new(Vec::new()) }
    }

    pub fn one() -> Self {
        Ordinal::nat(1)
    }

    pub fn nat(k: u64) -> Self {
        Ordinal::from_biguint(BigUint::from(k))
    }

    pub fn from_biguint(k: BigUint) -> Self {
        if k.is_zero() {
            return Ordinal::zero();
        }
        Ordinal { terms: Arc::new(vec![Term { exp: Ordinal::zero(), coef: k }]) }
    }

    pub fn omega() -> Self {
        Ordinal::omega_pow(Ordinal::one())
    }

    /// `w^e`.
    pub fn omega_pow(e: Ordinal) -> Self {
        Ordinal::monomial(e, BigUint::one())
    }

    /// `w^e * c`; zero when `c` is zero.
    pub fn monomial(e: Ordinal, c: BigUint) -> Self {
        if c.is_zero() {
            return Ordinal::zero();
        }
        Ordinal { terms: Arc::new(vec![Term { exp: e, coef: c }]) }
    }

    /// Builds an ordinal from terms in any order by summing them left to right
    /// with ordinal addition.
    pub fn from_terms<I: IntoIterator<Item = Term>>(terms: I) -> Self {
        terms
            .into_iter()
            .fold(Ordinal::zero(), |acc, t| acc.add(&Ordinal::monomial(t.exp, t.coef)))
    }

    fn from_canonical(terms: Vec<Term>) -> Self {
        Ordinal { terms: Arc::new(terms) }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.terms.iter().all(|t| t.exp.is_zero())
    }

    /// The value as a natural number, if finite.
    pub fn as_biguint(&self) -> Option<BigUint> {
        match self.terms.as_slice() {
            [] => Some(BigUint::zero()),
            [t] if t.exp.is_zero() => Some(t.coef.clone()),
            _ => None,
        }
    }

    pub fn as_u64(&self) -> Option<u64> {
        self.as_biguint().and_then(|b| b.to_u64())
    }

    pub fn kind(&self) -> Kind {
        match self.terms.last() {
            None => Kind::Zero,
            Some(t) if t.exp.is_zero() => Kind::Successor(self.pred_unchecked()),
            Some(_) => Kind::Limit,
        }
    }

    pub fn is_limit(&self) -> bool {
        matches!(self.terms.last(), Some(t) if !t.exp.is_zero())
    }

    pub fn is_successor(&self) -> bool {
        matches!(self.terms.last(), Some(t) if t.exp.is_zero())
    }

    /// Predecessor of a successor ordinal.
    pub fn pred(&self) -> Option<Ordinal> {
        if self.is_successor() {
            Some(self.pred_unchecked())
        } else {
            None
        }
    }

    fn pred_unchecked(&self) -> Ordinal {
        let mut terms = (*self.terms).clone();
        let last = terms.last_mut().expect("successor is nonzero");
        last.coef -= 1u32;
        if last.coef.is_zero() {
            terms.pop();
        }
        Ordinal::from_canonical(terms)
    }

    pub fn succ(&self) -> Ordinal {
        self.add(&Ordinal::one())
    }

    /// Exponent of the leading term (0 for the ordinal 0).
    pub fn leading_exponent(&self) -> Ordinal {
        self.terms.first().map(|t| t.exp.clone()).unwrap_or_default()
    }

    /// Ordinal sum `self + other`.
    pub fn add(&self, other: &Ordinal) -> Ordinal {
        let Some(head) = other.terms.first() else {
            return self.clone();
        };
        let mut out: Vec<Term> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut merged = head.coef.clone();
        for t in self.terms.iter() {
            match t.exp.cmp(&head.exp) {
                Ordering::Greater => out.push(t.clone()),
                Ordering::Equal => merged += &t.coef,
                Ordering::Less => break,
            }
        }
        out.push(Term { exp: head.exp.clone(), coef: merged });
        out.extend(other.terms[1..].iter().cloned());
        Ordinal::from_canonical(out)
    }

    /// `self * k` for a natural number `k`.
    pub fn mul_nat(&self, k: &BigUint) -> Ordinal {
        if k.is_zero() || self.is_zero() {
            return Ordinal::zero();
        }
        let mut terms = (*self.terms).clone();
        terms[0].coef *= k;
        Ordinal::from_canonical(terms)
    }

    /// `w^self`.
    pub fn exp_omega(&self) -> Ordinal {
        Ordinal::omega_pow(self.clone())
    }

    /// Splits a limit `self = delta + w^e` with `e > 0`, returning `(delta, e)`.
    fn split_last_power(&self) -> Option<(Ordinal, Ordinal)> {
        let last = self.terms.last()?;
        if last.exp.is_zero() {
            return None;
        }
        let mut terms = (*self.terms).clone();
        let l = terms.last_mut().unwrap();
        l.coef -= 1u32;
        if l.coef.is_zero() {
            terms.pop();
        }
        Some((Ordinal::from_canonical(terms), last.exp.clone()))
    }

    /// The `k`-th element of the canonical fundamental sequence of a limit.
    ///
    /// For `self = delta + w^(e+1)` this is `delta + w^e * k`; for
    /// `self = delta + w^e` with `e` a limit it is `delta + w^(e[k])`.
    pub fn fundamental(&self, k: &BigUint) -> Option<Ordinal> {
        let (delta, e) = self.split_last_power()?;
        match e.kind() {
            Kind::Successor(ep) => Some(delta.add(&Ordinal::monomial(ep, k.clone()))),
            Kind::Limit => {
                let ek = e.fundamental(k)?;
                Some(delta.add(&Ordinal::omega_pow(ek)))
            }
            Kind::Zero => None,
        }
    }

    /// `fundamental` with a machine-sized index.
    pub fn fundamental_sequence(&self, k: u64) -> Option<Ordinal> {
        self.fundamental(&BigUint::from(k))
    }

    /// Least `k` with `self[k] >= xi`, for a limit `self` and `xi < self`.
    pub fn fundamental_ceil(&self, xi: &Ordinal) -> Option<BigUint> {
        if xi >= self {
            return None;
        }
        let (delta, e) = self.split_last_power()?;
        if *xi <= delta {
            return Some(BigUint::zero());
        }
        // delta < xi < delta + w^e, so xi = delta + rho with rho < w^e and the
        // terms of delta form a prefix of the terms of xi.
        let rho = Ordinal::from_canonical(xi.terms[delta.terms.len()..].to_vec());
        debug_assert!(!rho.is_zero());
        match e.kind() {
            Kind::Successor(ep) => {
                let (c, exact) = match rho.terms.first() {
                    Some(t) if t.exp == ep => (t.coef.clone(), rho.terms.len() == 1),
                    _ => (BigUint::zero(), false),
                };
                Some(if exact { c } else { c + 1u32 })
            }
            Kind::Limit => {
                let p = rho.leading_exponent();
                let k1 = e.fundamental_ceil(&p)?;
                let ek1 = e.fundamental(&k1)?;
                let rho_is_power = rho.terms.len() == 1 && rho.terms[0].coef.is_one();
                if ek1 == p && !rho_is_power {
                    Some(k1 + 1u32)
                } else {
                    Some(k1)
                }
            }
            Kind::Zero => None,
        }
    }

    /// For `other >= self`, the unique `rho` with `self + rho = other`.
    pub fn left_difference(&self, other: &Ordinal) -> Option<Ordinal> {
        if other < self {
            return None;
        }
        let mut i = 0;
        while i < self.terms.len() && i < other.terms.len() && self.terms[i] == other.terms[i] {
            i += 1;
        }
        if i == self.terms.len() {
            return Some(Ordinal::from_canonical(other.terms[i..].to_vec()));
        }
        // First mismatch: other's term is larger, so the remainder absorbs
        // everything of self from position i on.
        let (a, b) = (&self.terms[i], &other.terms[i]);
        let mut rest = Vec::with_capacity(other.terms.len() - i);
        if a.exp == b.exp {
            rest.push(Term { exp: b.exp.clone(), coef: &b.coef - &a.coef });
        } else {
            rest.push(b.clone());
        }
        rest.extend(other.terms[i + 1..].iter().cloned());
        Some(Ordinal::from_canonical(rest))
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.terms, &other.terms) {
            return Ordering::Equal;
        }
        for (a, b) in self.terms.iter().zip(other.terms.iter()) {
            let c = a.exp.cmp(&b.exp).then_with(|| a.coef.cmp(&b.coef));
            if c != Ordering::Equal {
                return c;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Compares two ordinals.
pub fn compare(a: &Ordinal, b: &Ordinal) -> Ordering {
    a.cmp(b)
}

impl From<u64> for Ordinal {
    fn from(k: u64) -> Self {
        Ordinal::nat(k)
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            if t.exp.is_zero() {
                write!(f, "{}", t.coef)?;
                continue;
            }
            f.write_str("w")?;
            if t.exp != Ordinal::one() {
                match t.exp.as_biguint() {
                    Some(k) => write!(f, "^{k}")?,
                    None => write!(f, "^({})", t.exp)?,
                }
            }
            if !t.coef.is_one() {
                write!(f, "*{}", t.coef)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w^({:?})*{}", self.exp, self.coef)
    }
}

impl FromStr for Ordinal {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let v = p.sum()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("trailing input"));
        }
        Ok(v)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ParseError {
        ParseError { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Ordinal, ParseError> {
        let mut acc = self.term()?;
        while self.eat(b'+') {
            let t = self.term()?;
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Ordinal, ParseError> {
        match self.peek() {
            Some(b'w') => {
                self.pos += 1;
                let exp = if self.eat(b'^') { self.atom()? } else { Ordinal::one() };
                let coef = if self.eat(b'*') { self.nat()? } else { BigUint::one() };
                Ok(Ordinal::monomial(exp, coef))
            }
            Some(c) if c.is_ascii_digit() => Ok(Ordinal::from_biguint(self.nat()?)),
            _ => Err(self.err("expected a term")),
        }
    }

    fn atom(&mut self) -> Result<Ordinal, ParseError> {
        if self.eat(b'(') {
            let v = self.sum()?;
            if !self.eat(b')') {
                return Err(self.err("expected ')'"));
            }
            Ok(v)
        } else {
            Ok(Ordinal::from_biguint(self.nat()?))
        }
    }

    fn nat(&mut self) -> Result<BigUint, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a natural number"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        BigUint::from_str(digits).map_err(|_| self.err("bad number"))
    }
}

/// Parses a literal, panicking on malformed input. Meant for tests and
/// hard-coded constants.
pub fn ord(s: &str) -> Ordinal {
    s.parse().unwrap_or_else(|e| panic!("{s:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_examples() {
        for s in ["0", "7", "w", "w*2+3", "w^2*5+w+1", "w^(w)+w^3", "w^(w^(w)+1)*3"] {
            assert_eq!(ord(s).to_string(), s);
        }
    }

    #[test]
    fn noncanonical_input_is_summed() {
        assert_eq!(ord("1+w"), ord("w"));
        assert_eq!(ord("w+w^2"), ord("w^2"));
        assert_eq!(ord("w^2+w+w^2"), ord("w^2*2"));
        assert_eq!(ord("w^1"), ord("w"));
        assert_eq!(ord("w^0*3"), ord("3"));
        assert_eq!(ord(" w * 2 + 3 "), ord("w*2+3"));
    }

    #[test]
    fn parse_errors() {
        for s in ["", "w^", "w*", "x", "w^(w", "3+", "w)"] {
            assert!(s.parse::<Ordinal>().is_err(), "{s:?}");
        }
    }

    #[test]
    fn compare_examples() {
        assert_eq!(compare(&ord("0"), &ord("0")), Ordering::Equal);
        assert_eq!(compare(&ord("w"), &ord("w+1")), Ordering::Less);
        assert_eq!(compare(&ord("w^2"), &ord("w*3+5")), Ordering::Greater);
    }

    #[test]
    fn add_examples() {
        assert_eq!(ord("1").add(&ord("w")), ord("w"));
        assert_eq!(ord("w").add(&ord("1")), ord("w+1"));
        assert_eq!(ord("w^2+w").add(&ord("w^2")), ord("w^2*2"));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(ord("0").kind(), Kind::Zero);
        assert_eq!(ord("w+3").kind(), Kind::Successor(ord("w+2")));
        assert_eq!(ord("w^(w)").kind(), Kind::Limit);
    }

    #[test]
    fn fundamental_examples() {
        assert_eq!(ord("w").fundamental_sequence(5), Some(ord("5")));
        assert_eq!(ord("w*2").fundamental_sequence(3), Some(ord("w+3")));
        assert_eq!(ord("w^(w)").fundamental_sequence(2), Some(ord("w^2")));
        assert_eq!(ord("w*2").fundamental_sequence(0), Some(ord("w")));
        assert_eq!(ord("w").fundamental_sequence(0), Some(ord("0")));
        assert_eq!(ord("w^2").fundamental_sequence(3), Some(ord("w*3")));
        assert_eq!(ord("5").fundamental_sequence(1), None);
    }

    #[test]
    fn left_difference_examples() {
        assert_eq!(ord("w").left_difference(&ord("w*2+1")), Some(ord("w+1")));
        assert_eq!(ord("3").left_difference(&ord("w")), Some(ord("w")));
        assert_eq!(ord("w^2+w").left_difference(&ord("w^2*2")), Some(ord("w^2")));
        assert_eq!(ord("w+1").left_difference(&ord("w")), None);
    }
}
