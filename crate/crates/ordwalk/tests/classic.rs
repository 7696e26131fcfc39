//! Classical walks: a hand-rolled model below w^2 and structural properties.

use num_bigint::BigUint;
use ordwalk::clubs::canonical_sequence;
use ordwalk::sample::{random_increasing, rng};
use ordwalk::walks_classic::{branch_order, lower_trace, recursive_phi, rho1, rho2, upper_trace};
use ordwalk::{ord, Ordinal};
use proptest::prelude::*;

/// `w*a + b`.
type P = (u64, u64);

fn o((a, b): P) -> Ordinal {
    Ordinal::omega().mul_nat(&BigUint::from(a)).add(&Ordinal::nat(b))
}

/// The canonical ladder of `w*a + b` as a predicate plus its least member
/// at or above `x`.
fn next_step(beta: P, x: P) -> P {
    match beta {
        (a, b) if b > 0 => (a, b - 1),
        (a, _) => {
            if x.0 == a - 1 {
                (a - 1, x.1)
            } else {
                (a - 1, 0)
            }
        }
    }
}

/// `sup(x ∩ C_beta)` and `|x ∩ C_beta|`.
fn below(beta: P, x: P) -> (P, u64) {
    match beta {
        (a, b) if b > 0 => {
            let m = (a, b - 1);
            if m < x {
                (m, 1)
            } else {
                ((0, 0), 0)
            }
        }
        (a, _) => {
            if x.0 == a - 1 && x.1 > 0 {
                ((a - 1, x.1 - 1), x.1)
            } else if x.0 > a - 1 {
                unreachable!("x below beta")
            } else {
                ((0, 0), 0)
            }
        }
    }
}

fn model(x: P, beta: P) -> (Vec<P>, Vec<P>, u64) {
    let (mut steps, mut lower, mut w) = (vec![beta], vec![], 0);
    let mut cur = beta;
    while cur != x {
        let (s, k) = below(cur, x);
        let prev = lower.last().copied().unwrap_or((0, 0));
        lower.push(prev.max(s));
        w = w.max(k);
        cur = next_step(cur, x);
        steps.push(cur);
    }
    (steps, lower, w)
}

fn pair() -> impl Strategy<Value = P> {
    (0u64..6, 0u64..12)
}

fn ordered_pair() -> impl Strategy<Value = (P, P)> {
    (pair(), pair()).prop_map(|(x, y)| if x <= y { (x, y) } else { (y, x) })
}

proptest! {
    #[test]
    fn walks_below_w2_match_model((x, y) in ordered_pair()) {
        let c = canonical_sequence(None);
        let (steps, lower, w) = model(x, y);
        let tr = upper_trace(&c, &o(x), &o(y)).unwrap();
        prop_assert_eq!(tr.steps, steps.iter().map(|&p| o(p)).collect::<Vec<_>>());
        prop_assert_eq!(tr.lower, lower.iter().map(|&p| o(p)).collect::<Vec<_>>());
        prop_assert_eq!(rho1(&c, &o(x), &o(y)).unwrap(), w);
    }

    #[test]
    fn each_step_is_least_in_its_club(seed in 0u64..400) {
        let c = canonical_sequence(None);
        let mut r = rng(seed);
        let t = random_increasing(&mut r, &ord("w^(w)"), 2);
        let tr = upper_trace(&c, &t[0], &t[1]).unwrap();
        for w in tr.steps.windows(2) {
            let club = c.club(std::slice::from_ref(&w[0])).unwrap();
            prop_assert!(club.contains(&w[1]));
            prop_assert!(w[1] >= t[0] && w[1] < w[0]);
            prop_assert_eq!(club.min_above(&t[0]), Some(w[1].clone()));
        }
        prop_assert!(tr.lower.windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(tr.max_lower() < t[0] || t[0].is_zero());
    }

    #[test]
    fn walks_pass_through_points_above_the_lower_trace(seed in 0u64..400) {
        let c = canonical_sequence(None);
        let mut r = rng(seed);
        let t = random_increasing(&mut r, &ord("w^3"), 3);
        let (a, b, g) = (&t[0], &t[1], &t[2]);
        let lb = upper_trace(&c, b, g).unwrap();
        if lb.max_lower() < *a {
            let whole = upper_trace(&c, a, g).unwrap().steps;
            let mut glued = lb.steps.clone();
            glued.extend(upper_trace(&c, a, b).unwrap().steps.into_iter().skip(1));
            prop_assert_eq!(whole, glued);
        }
    }

    #[test]
    fn phi_recursion_is_rho1_at_successor(seed in 0u64..200) {
        let c = canonical_sequence(None);
        let mut r = rng(seed);
        let t = random_increasing(&mut r, &ord("w^2*3"), 2);
        prop_assert_eq!(recursive_phi(&c, &t[1], &t[0]).unwrap(), rho1(&c, &t[0].succ(), &t[1]).unwrap());
    }
}

#[test]
fn branch_order_is_a_strict_linear_order() {
    let c = canonical_sequence(None);
    let mut r = rng(5);
    let ground = random_increasing(&mut r, &ord("w^2"), 9);
    let rho = |x: &Ordinal, y: &Ordinal| rho2(&c, x, y).unwrap() as i64;
    let lt = |x: &Ordinal, y: &Ordinal| branch_order(rho, &ground, x, y);
    for x in &ground {
        assert!(!lt(x, x));
        for y in &ground {
            if x != y {
                assert!(lt(x, y) ^ lt(y, x), "{x} {y}");
            }
            for z in &ground {
                if lt(x, y) && lt(y, z) {
                    assert!(lt(x, z), "{x} {y} {z}");
                }
            }
        }
    }
}

#[test]
fn lower_trace_of_trivial_walk_is_empty() {
    let c = canonical_sequence(None);
    assert!(lower_trace(&c, &ord("w+4"), &ord("w+4")).unwrap().is_empty());
    assert_eq!(rho2(&c, &ord("0"), &ord("w^2")).unwrap(), 1);
    assert_eq!(rho2(&c, &ord("1"), &ord("w^2")).unwrap(), 2);
}
