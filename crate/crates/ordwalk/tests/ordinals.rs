//! Ordinal arithmetic against a coefficient-vector model of ordinals below w^w.

use std::cmp::Ordering;

use num_bigint::BigUint;
use ordwalk::ord;
use ordwalk::Ordinal;
use proptest::prelude::*;

const DEG: usize = 5;

/// `c[i]` is the coefficient of `w^i`.
#[derive(Clone, Debug, PartialEq)]
struct Poly([u64; DEG]);

impl Poly {
    fn to_ordinal(&self) -> Ordinal {
        let mut acc = Ordinal::zero();
        for e in (0..DEG).rev() {
            if self.0[e] > 0 {
                acc = acc.add(&Ordinal::monomial(Ordinal::nat(e as u64), BigUint::from(self.0[e])));
            }
        }
        acc
    }

    fn render(&self) -> String {
        let mut parts = vec![];
        for e in (0..DEG).rev() {
            let c = self.0[e];
            if c == 0 {
                continue;
            }
            let base = match e {
                0 => c.to_string(),
                1 => "w".to_string(),
                _ => format!("w^{e}"),
            };
            parts.push(if e == 0 || c == 1 { base } else { format!("{base}*{c}") });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }

    fn cmp(&self, o: &Poly) -> Ordering {
        for e in (0..DEG).rev() {
            match self.0[e].cmp(&o.0[e]) {
                Ordering::Equal => continue,
                x => return x,
            }
        }
        Ordering::Equal
    }

    fn lead(&self) -> Option<usize> {
        (0..DEG).rev().find(|&e| self.0[e] > 0)
    }

    fn add(&self, o: &Poly) -> Poly {
        let Some(e) = o.lead() else { return self.clone() };
        let mut r = [0; DEG];
        r[e + 1..].copy_from_slice(&self.0[e + 1..]);
        r[e] = self.0[e] + o.0[e];
        r[..e].copy_from_slice(&o.0[..e]);
        Poly(r)
    }

    fn last(&self) -> Option<usize> {
        (0..DEG).find(|&e| self.0[e] > 0)
    }

    fn fundamental(&self, k: u64) -> Option<Poly> {
        let e = self.last()?;
        if e == 0 {
            return None;
        }
        let mut r = self.0;
        r[e] -= 1;
        r[e - 1] += k;
        Some(Poly(r))
    }
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::array::uniform5(prop_oneof![3 => Just(0u64), 2 => 1u64..4, 1 => 4u64..40]).prop_map(Poly)
}

proptest! {
    #[test]
    fn compare_matches_model(a in poly(), b in poly()) {
        prop_assert_eq!(a.to_ordinal().cmp(&b.to_ordinal()), a.cmp(&b));
    }

    #[test]
    fn addition_matches_model(a in poly(), b in poly()) {
        prop_assert_eq!(a.to_ordinal().add(&b.to_ordinal()), a.add(&b).to_ordinal());
    }

    #[test]
    fn render_matches_model_and_round_trips(a in poly()) {
        let x = a.to_ordinal();
        prop_assert_eq!(x.to_string(), a.render());
        prop_assert_eq!(x.to_string().parse::<Ordinal>().unwrap(), x);
    }

    #[test]
    fn fundamental_matches_model(a in poly(), k in 0u64..50) {
        let x = a.to_ordinal();
        prop_assert_eq!(x.fundamental_sequence(k), a.fundamental(k).map(|p| p.to_ordinal()));
        if x.is_limit() {
            let (s, t) = (x.fundamental_sequence(k).unwrap(), x.fundamental_sequence(k + 1).unwrap());
            prop_assert!(s < t && t < x);
        }
    }

    #[test]
    fn fundamental_ceil_is_least(a in poly(), b in poly()) {
        let (x, y) = (a.to_ordinal(), b.to_ordinal());
        prop_assume!(x.is_limit() && y < x);
        let k = x.fundamental_ceil(&y).unwrap();
        prop_assert!(x.fundamental(&k).unwrap() >= y);
        if k > BigUint::from(0u32) {
            prop_assert!(x.fundamental(&(k - 1u32)).unwrap() < y);
        }
    }

    #[test]
    fn left_difference_inverts_addition(a in poly(), b in poly()) {
        let (x, y) = (a.to_ordinal(), b.to_ordinal());
        match x.left_difference(&y) {
            Some(d) => prop_assert_eq!(x.add(&d), y),
            None => prop_assert!(y < x),
        }
    }

    #[test]
    fn addition_is_associative_and_monotone(a in poly(), b in poly(), c in poly()) {
        let (x, y, z) = (a.to_ordinal(), b.to_ordinal(), c.to_ordinal());
        prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
        prop_assert!(x.add(&y) >= y);
        if y < z {
            prop_assert!(x.add(&y) < x.add(&z));
        }
    }

    #[test]
    fn successor_and_predecessor(a in poly()) {
        let x = a.to_ordinal();
        prop_assert_eq!(x.succ().pred(), Some(x.clone()));
        prop_assert!(x.succ().is_successor());
        prop_assert_eq!(x.is_limit(), a.last().is_some_and(|e| e > 0));
    }
}

#[test]
fn towers_above_w_to_the_w() {
    let x = ord("w^(w^(w)+1)*2+w^(w)+3");
    assert_eq!(x.to_string(), "w^(w^(w)+1)*2+w^(w)+3");
    assert!(x > ord("w^(w^(w))*100"));
    assert!(x < ord("w^(w^(w)+2)"));
    assert_eq!(ord("w^(w)").fundamental_sequence(2), Some(ord("w^2")));
    assert_eq!(ord("w^(w^(w))").fundamental_sequence(3), Some(ord("w^(w^3)")));
    assert_eq!(ord("w*2").fundamental_sequence(3), Some(ord("w+3")));
    assert_eq!(ord("w").fundamental_sequence(5), Some(ord("5")));
    assert_eq!(ord("5").add(&ord("w")), ord("w"));
    assert_eq!(ord("w+1").add(&ord("w")), ord("w*2"));
}

#[test]
fn bad_literals_are_rejected() {
    for s in ["", "w^", "3+", "(w", "x", "w^(w", "2w"] {
        assert!(s.parse::<Ordinal>().is_err(), "{s:?} parsed");
    }
}
