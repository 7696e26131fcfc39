//! `ordwalk check`: seeded property harnesses over sampled tuples.

use std::collections::BTreeSet;

use clap::{Args, ValueEnum};

use ordwalk::sample::{random_below, random_in, random_increasing, random_limit_below, random_tuple, rng, SampleRng};
use ordwalk::walks_higher::{
    coherence_check, delete, depth, expand_tr, face_eta, initial_subtree_mismatch, lower_values, max_lower_n,
    pairing_partition, r2n_slice, verify_descent_claims,
};
use ordwalk::{parse_selector, CSeq, FormalSum, Ordinal};

use crate::{parse_ord, Failure};

#[derive(Args)]
pub struct CheckArgs {
    #[arg(value_enum)]
    kind: Kind,
    #[arg(short = 'n', default_value_t = 2)]
    n: usize,
    /// Sampled ordinals stay below this bound
    #[arg(long, default_value = "w^3")]
    bound: String,
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "canonical")]
    cseq: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Finiteness,
    EndExtension,
    Pairing,
    Coherence,
    R2n,
    DepthTruncation,
}

/// Outcome of one sample: `None` when it had to be redrawn.
type Sample = Result<Option<String>, (Vec<Ordinal>, String)>;

struct Ctx {
    c: std::sync::Arc<CSeq>,
    n: usize,
    bound: Ordinal,
    rng: SampleRng,
}

fn with_first(x: &Ordinal, g: &[Ordinal]) -> Vec<Ordinal> {
    let mut t = vec![x.clone()];
    t.extend_from_slice(g);
    t
}

fn fail<T: std::fmt::Display>(t: &[Ordinal]) -> impl FnOnce(T) -> (Vec<Ordinal>, String) + '_ {
    move |e| (t.to_vec(), e.to_string())
}

fn finiteness(x: &mut Ctx) -> Sample {
    let t = random_tuple(&mut x.rng, &x.bound, x.n + 1);
    let tree = expand_tr(&x.c, 1, &t).map_err(fail(&t))?;
    verify_descent_claims(&tree).map_err(fail(&t))?;
    Ok(Some(format!("{} nodes", tree.len())))
}

fn end_extension(x: &mut Ctx) -> Sample {
    let t = random_tuple(&mut x.rng, &x.bound, x.n + 1);
    let (beta, g) = (&t[0], &t[1..]);
    if beta.is_zero() {
        return Ok(None);
    }
    let m = max_lower_n(&x.c, beta, g).map_err(fail(&t))?;
    if m >= *beta {
        return Err((t.clone(), format!("max L_n = {m} is not below {beta}")));
    }
    let top = expand_tr(&x.c, 1, &t).map_err(fail(&t))?;
    let mut probes = vec![beta.clone(), m.succ()];
    while probes.len() < 8 {
        probes.push(random_in(&mut x.rng, &m, beta));
    }
    for a in probes {
        let ta = with_first(&a, g);
        let low = expand_tr(&x.c, 1, &ta).map_err(fail(&ta))?;
        if let Some(s) = initial_subtree_mismatch(&top, &low) {
            return Err((ta, format!("does not end-extend the tree of {beta} at node {s:?}")));
        }
    }
    Ok(Some(String::new()))
}

fn pairing(x: &mut Ctx) -> Sample {
    let g = random_increasing(&mut x.rng, &x.bound, x.n + 1);
    let a = random_below(&mut x.rng, &g[0].succ());
    let t = with_first(&a, &g);
    let pairs = pairing_partition(&x.c, &a, &g).map_err(fail(&t))?;
    Ok(Some(format!("{} pairs", pairs.len())))
}

fn coherence(x: &mut Ctx) -> Sample {
    let d = random_increasing(&mut x.rng, &x.bound, x.n + 1);
    let Some(alpha) = random_limit_below(&mut x.rng, &d[0].succ()) else { return Ok(None) };
    let t = with_first(&alpha, &d);
    let rep = coherence_check(&x.c, &d, &alpha, 16).map_err(fail(&t))?;
    if !rep.constant {
        let (xi, v) = rep.samples.iter().find(|(_, v)| *v != rep.value).expect("a differing sample");
        return Err((t, format!("face sum {v} at {xi} differs from {} at {alpha}", rep.value)));
    }
    Ok(Some(String::new()))
}

fn r2n(x: &mut Ctx) -> Sample {
    let d = random_increasing(&mut x.rng, &x.bound, x.n + 1);
    let alpha = random_in(&mut x.rng, &Ordinal::zero(), &d[0]);
    let t = with_first(&alpha, &d);
    let eta = face_eta(&x.c, &alpha, &d).map_err(fail(&t))?;
    if eta >= alpha {
        return Ok(None);
    }
    let beta = random_in(&mut x.rng, &eta, &alpha);
    let mut seen = BTreeSet::new();
    for i in 0..d.len() {
        let tree = expand_tr(&x.c, 1, &with_first(&beta, &delete(&d, i))).map_err(fail(&t))?;
        let vals = lower_values(&x.c, &tree).map_err(fail(&t))?;
        seen.extend(vals.into_values().filter(|v| *v > eta && *v < beta));
    }
    let xi = match seen.into_iter().next() {
        Some(v) => v,
        None if eta.succ() < beta => eta.succ(),
        None => return Ok(None),
    };
    let mut total = FormalSum::zero();
    for i in 0..d.len() {
        let s = r2n_slice(&x.c, &xi, &beta, &delete(&d, i)).map_err(fail(&t))?;
        total += &if i % 2 == 0 { s } else { -&s };
    }
    if !total.is_zero() {
        return Err((with_first(&xi, &with_first(&beta, &d)), format!("alternating slice sum is {total}")));
    }
    Ok(Some(String::new()))
}

fn depth_truncation(x: &mut Ctx) -> Sample {
    let t = random_tuple(&mut x.rng, &x.bound, 3);
    let small = expand_tr(&x.c, 1, &t).map_err(fail(&t))?;
    let big = expand_tr(&x.c, 1, &with_first(&Ordinal::zero(), &t[1..])).map_err(fail(&t))?;
    if let Some(s) = initial_subtree_mismatch(&small, &big) {
        return Err((t, format!("not an initial subtree of the walk from 0, node {s:?}")));
    }
    let d = depth(&x.c, &t[0], &t[1], &t[2]).map_err(fail(&t))?;
    Ok(Some(format!("{d}")))
}

pub fn run(a: CheckArgs) -> Result<(), Failure> {
    let bound = parse_ord(&a.bound)?;
    if bound.is_zero() {
        return Err(Failure::Usage("--bound must be positive".into()));
    }
    if a.n == 0 {
        return Err(Failure::Usage("-n must be positive".into()));
    }
    if a.kind == Kind::DepthTruncation && a.n != 2 {
        return Err(Failure::Usage("depth-truncation is a check on triples; use -n 2".into()));
    }
    let c = parse_selector(&a.cseq, a.n, None)?;
    let mut ctx = Ctx { c, n: a.n, bound, rng: rng(a.seed) };
    let f: fn(&mut Ctx) -> Sample = match a.kind {
        Kind::Finiteness => finiteness,
        Kind::EndExtension => end_extension,
        Kind::Pairing => pairing,
        Kind::Coherence => coherence,
        Kind::R2n => r2n,
        Kind::DepthTruncation => depth_truncation,
    };
    let name = a.kind.to_possible_value().expect("named").get_name().to_string();
    let mut done = 0;
    let mut max_depth = 0;
    let mut attempts = 0;
    while done < a.samples {
        attempts += 1;
        if attempts > 100 * a.samples.max(1) {
            return Err(Failure::Usage(format!("could not draw {} usable samples below {}", a.samples, a.bound)));
        }
        match f(&mut ctx) {
            Ok(None) => continue,
            Ok(Some(note)) => {
                if a.kind == Kind::DepthTruncation {
                    max_depth = max_depth.max(note.parse::<usize>().unwrap_or(0));
                }
                done += 1;
            }
            Err((t, detail)) => {
                let v = serde_json::json!({
                    "check": name,
                    "cseq": a.cseq,
                    "seed": a.seed,
                    "tuple": t.iter().map(|o| o.to_string()).collect::<Vec<_>>(),
                    "detail": detail,
                });
                println!("{v}");
                return Err(Failure::Violation(format!("{name} fails at sample {}", done + 1)));
            }
        }
    }
    let extra = if a.kind == Kind::DepthTruncation { format!(", max depth {max_depth}") } else { String::new() };
    println!("{name}: {} samples hold (n={}, cseq {}, seed {}){extra}", a.samples, a.n, a.cseq, a.seed);
    Ok(())
}
