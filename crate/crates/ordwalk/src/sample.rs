//! Seeded random ordinals and tuples for property checks.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ordinal::{Ordinal, Term};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random ordinal below `bound` (which must be nonzero). Infinite draws are
/// random Cantor normal forms with small coefficients; a quarter of all draws
/// are small naturals.
pub fn random_below<R: Rng>(rng: &mut R, bound: &Ordinal) -> Ordinal {
    assert!(!bound.is_zero(), "nothing below 0");
    if let Some(b) = bound.as_u64() {
        return Ordinal::nat(rng.gen_range(0..b));
    }
    if rng.gen_ratio(1, 4) {
        return Ordinal::nat(rng.gen_range(0..12));
    }
    let top = bound.leading_exponent().succ();
    for _ in 0..256 {
        let k = rng.gen_range(1..=3);
        let mut terms: Vec<Term> = (0..k)
            .map(|_| Term { exp: random_below(rng, &top), coef: BigUint::from(rng.gen_range(1u32..=5)) })
            .collect();
        terms.sort_by(|a, b| b.exp.cmp(&a.exp));
        let x = Ordinal::from_terms(terms);
        if x < *bound {
            return x;
        }
    }
    Ordinal::zero()
}

/// Random limit ordinal below `bound`, if there is one.
pub fn random_limit_below<R: Rng>(rng: &mut R, bound: &Ordinal) -> Option<Ordinal> {
    if *bound <= Ordinal::omega() {
        return None;
    }
    for _ in 0..256 {
        let x = random_below(rng, bound);
        let lim = Ordinal::from_terms(x.terms().iter().filter(|t| !t.exp.is_zero()).cloned());
        if lim.is_limit() {
            return Some(lim);
        }
    }
    Some(Ordinal::omega())
}

/// Random ordinal in `(lo, hi]`; `hi` when the interval is empty.
pub fn random_in<R: Rng>(rng: &mut R, lo: &Ordinal, hi: &Ordinal) -> Ordinal {
    let top = hi.succ();
    for _ in 0..64 {
        let x = random_below(rng, &top);
        if x > *lo {
            return x;
        }
    }
    let next = lo.succ();
    if rng.gen_bool(0.5) && next <= *hi {
        next
    } else {
        hi.clone()
    }
}

/// Sorted tuple of `len` ordinals below `bound`.
pub fn random_tuple<R: Rng>(rng: &mut R, bound: &Ordinal, len: usize) -> Vec<Ordinal> {
    let mut v: Vec<Ordinal> = (0..len).map(|_| random_below(rng, bound)).collect();
    v.sort();
    v
}

/// Strictly increasing tuple of `len` ordinals below `bound`.
pub fn random_increasing<R: Rng>(rng: &mut R, bound: &Ordinal, len: usize) -> Vec<Ordinal> {
    loop {
        let mut v = random_tuple(rng, bound, len);
        v.dedup();
        if v.len() == len {
            return v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordinal::ord;

    #[test]
    fn draws_respect_bounds() {
        let mut r = rng(1);
        for b in ["7", "w", "w^3", "w^2+3", "w^(w)"] {
            let b = ord(b);
            for _ in 0..200 {
                assert!(random_below(&mut r, &b) < b);
            }
        }
        for _ in 0..100 {
            let l = random_limit_below(&mut r, &ord("w^3")).unwrap();
            assert!(l.is_limit() && l < ord("w^3"));
        }
        assert_eq!(random_limit_below(&mut r, &ord("w")), None);
        for _ in 0..100 {
            let x = random_in(&mut r, &ord("w*2+3"), &ord("w^2"));
            assert!(x > ord("w*2+3") && x <= ord("w^2"));
        }
    }

    #[test]
    fn reproducible() {
        let b = ord("w^3");
        let a: Vec<_> = (0..20).map({
            let mut r = rng(9);
            move |_| random_below(&mut r, &b)
        }).collect();
        let mut r = rng(9);
        let c: Vec<_> = (0..20).map(|_| random_below(&mut r, &ord("w^3"))).collect();
        assert_eq!(a, c);
    }
}
