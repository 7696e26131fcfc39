//! Walk-induced hypertournaments and their small-case combinatorics.
//!
//! A rho function here maps `(xi, t)` with `t` a strictly increasing tuple and
//! `xi < t[0]` to an integer. Minima are taken over a finite ground set.

use std::collections::{BTreeMap, HashMap};

use crate::clubs::CSeq;
use crate::error::{Error, Result};
use crate::ordinal::Ordinal;
use crate::walks_higher::rho2n;

/// Sign of a permutation of `0..p.len()`.
pub fn perm_sign(p: &[usize]) -> i8 {
    let mut seen = vec![false; p.len()];
    let mut sign = 1;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            k = p[k];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// All permutations of `0..k` in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// `(sigma . t)[k] = t[sigma[k]]`.
pub fn act<T: Clone>(sigma: &[usize], t: &[T]) -> Vec<T> {
    sigma.iter().map(|&i| t[i].clone()).collect()
}

/// Sorts `t`, returning the sorted tuple and the sign of the sorting
/// permutation, or `None` when `t` has a repeated entry.
pub fn sort_with_sign<T: Ord + Clone>(t: &[T]) -> Option<(Vec<T>, i8)> {
    let mut idx: Vec<usize> = (0..t.len()).collect();
    idx.sort_by(|&a, &b| t[a].cmp(&t[b]));
    if idx.windows(2).any(|w| t[w[0]] == t[w[1]]) {
        return None;
    }
    Some((act(&idx, t), perm_sign(&idx)))
}

/// The alternating extension of `rho` to tuples in any order.
pub fn rho_hat<F>(rho: &F, xi: &Ordinal, t: &[Ordinal]) -> i64
where
    F: Fn(&Ordinal, &[Ordinal]) -> i64,
{
    match sort_with_sign(t) {
        Some((s, sign)) => sign as i64 * rho(xi, &s),
        None => 0,
    }
}

/// `rho_hat(xi, sigma . t)`.
pub fn symmetrize<F>(rho: &F, xi: &Ordinal, sigma: &[usize], t: &[Ordinal]) -> i64
where
    F: Fn(&Ordinal, &[Ordinal]) -> i64,
{
    rho_hat(rho, xi, &act(sigma, t))
}

/// `sum_j (-1)^j rho_hat(xi, g^j)`.
pub fn alt_face_sum<F>(rho: &F, xi: &Ordinal, g: &[Ordinal]) -> i64
where
    F: Fn(&Ordinal, &[Ordinal]) -> i64,
{
    let mut s = 0;
    for j in 0..g.len() {
        let mut face = g.to_vec();
        face.remove(j);
        let v = rho_hat(rho, xi, &face);
        s += if j % 2 == 0 { v } else { -v };
    }
    s
}

/// Least `xi` in `ground` below every entry of `g` with a nonzero face sum.
pub fn delta<F>(rho: &F, ground: &[Ordinal], g: &[Ordinal]) -> Option<Ordinal>
where
    F: Fn(&Ordinal, &[Ordinal]) -> i64,
{
    let lo = g.iter().min()?;
    let mut pts: Vec<&Ordinal> = ground.iter().filter(|x| *x < lo).collect();
    pts.sort();
    pts.into_iter().find(|xi| alt_face_sum(rho, xi, g) != 0).cloned()
}

/// Whether the hypertournament holds of `g` in the given order.
pub fn orient<F>(rho: &F, ground: &[Ordinal], g: &[Ordinal]) -> bool
where
    F: Fn(&Ordinal, &[Ordinal]) -> i64,
{
    match delta(rho, ground, g) {
        Some(d) => alt_face_sum(rho, &d, g) > 0,
        None => sort_with_sign(g).is_some_and(|(_, s)| s > 0),
    }
}

/// `rho2n` on every `(xi, t)` the orientation of a ground set can query.
pub struct RhoTable {
    map: HashMap<(Ordinal, Vec<Ordinal>), i64>,
}

impl RhoTable {
    pub fn rho2n(c: &CSeq, ground: &[Ordinal], n: usize) -> Result<RhoTable> {
        let mut pts = ground.to_vec();
        pts.sort();
        pts.dedup();
        let mut map = HashMap::new();
        for sub in subsets(pts.len(), n) {
            let t = act(&sub, &pts);
            for xi in pts.iter().take_while(|x| **x < t[0]) {
                let mut full = vec![xi.clone()];
                full.extend(t.iter().cloned());
                map.insert((xi.clone(), t.clone()), rho2n(c, &full)?);
            }
        }
        Ok(RhoTable { map })
    }

    /// Panics outside the tabulated domain.
    pub fn eval(&self, xi: &Ordinal, t: &[Ordinal]) -> i64 {
        self.map[&(xi.clone(), t.to_vec())]
    }
}

/// Increasing `k`-subsets of `0..v` in lexicographic order.
pub fn subsets(v: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, v: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..v {
            if v - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, v, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, v, k, &mut Vec::new(), &mut out);
    out
}

/// An orientation class for every `arity`-subset of `0..vertices`, stored as
/// one bit per increasing subset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hypertournament {
    vertices: usize,
    arity: usize,
    bits: BTreeMap<Vec<usize>, bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    H4,
    C4,
    O4,
}

impl std::fmt::Display for Tag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Tag::H4 => "H4",
            Tag::C4 => "C4",
            Tag::O4 => "O4",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub h_type: bool,
    /// Refined isomorphism tag, for arity 3 only.
    pub tag: Option<Tag>,
}

impl Hypertournament {
    pub fn new<F: FnMut(&[usize]) -> bool>(vertices: usize, arity: usize, mut bit: F) -> Self {
        let bits = subsets(vertices, arity).into_iter().map(|s| {
            let b = bit(&s);
            (s, b)
        });
        Hypertournament { vertices, arity, bits: bits.collect() }
    }

    /// The hypertournament `orient(rho)` on the points of `ground` (sorted).
    pub fn from_rho<F>(rho: &F, ground: &[Ordinal], n: usize) -> Self
    where
        F: Fn(&Ordinal, &[Ordinal]) -> i64,
    {
        let mut pts = ground.to_vec();
        pts.sort();
        Hypertournament::new(pts.len(), n + 1, |s| orient(rho, &pts, &act(s, &pts)))
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Bit of an increasing subset.
    pub fn bit(&self, s: &[usize]) -> bool {
        self.bits[s]
    }

    pub fn bits(&self) -> impl Iterator<Item = (&Vec<usize>, bool)> {
        self.bits.iter().map(|(k, v)| (k, *v))
    }

    /// Whether the relation holds of the tuple `t` of distinct vertices.
    pub fn holds(&self, t: &[usize]) -> bool {
        let (s, sign) = sort_with_sign(t).expect("distinct vertices");
        self.bits[&s] == (sign > 0)
    }

    /// The image under `p`: the result holds of `p . t` iff `self` holds of `t`.
    pub fn relabel(&self, p: &[usize]) -> Hypertournament {
        Hypertournament::new(self.vertices, self.arity, |s| {
            let pre: Vec<usize> = s.iter().map(|&v| p.iter().position(|&x| x == v).expect("permutation")).collect();
            self.holds(&pre)
        })
    }

    /// The induced hypertournament on `q`, relabelled `0..q.len()` in order.
    pub fn restrict(&self, q: &[usize]) -> Hypertournament {
        let mut q = q.to_vec();
        q.sort();
        Hypertournament::new(q.len(), self.arity, |s| self.bit(&act(s, &q)))
    }

    /// The least bit vector over all relabellings.
    pub fn canonical_form(&self) -> Vec<bool> {
        permutations(self.vertices)
            .iter()
            .map(|p| self.relabel(p).bits.into_values().collect::<Vec<_>>())
            .min()
            .unwrap_or_default()
    }

    /// Permutations of the vertices fixing the hypertournament.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        permutations(self.vertices).into_iter().filter(|p| self.relabel(p) == *self).collect()
    }

    /// Type of the restriction to an `(arity + 1)`-set `q`: it is the higher
    /// cycle iff the bits of its faces alternate.
    pub fn classify_restriction(&self, q: &[usize]) -> Classification {
        assert_eq!(q.len(), self.arity + 1, "need an (arity+1)-set");
        let r = self.restrict(q);
        let faces: Vec<bool> = (0..q.len())
            .map(|k| {
                let f: Vec<usize> = (0..q.len()).filter(|&x| x != k).collect();
                r.bit(&f)
            })
            .collect();
        let h_type = faces.windows(2).all(|w| w[0] != w[1]);
        let tag = (self.arity == 3).then(|| {
            if h_type {
                Tag::H4
            } else if r.canonical_form() == c4_form() {
                Tag::C4
            } else {
                Tag::O4
            }
        });
        Classification { h_type, tag }
    }

    /// `None` if no `(arity + 1)`-subset is of higher-cycle type, else a witness.
    pub fn h_free_witness(&self) -> Option<Vec<usize>> {
        subsets(self.vertices, self.arity + 1)
            .into_iter()
            .find(|q| self.classify_restriction(q).h_type)
    }

    pub fn is_h_free(&self) -> bool {
        self.h_free_witness().is_none()
    }
}

fn c4_form() -> Vec<bool> {
    Hypertournament::new(4, 3, |_| true).canonical_form()
}

/// Edges of the 4-vertex complete graph, in the order edge bits are read.
pub const EDGES4: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Face orientations induced by majority rule from edge orientations; an
/// edge bit is true when the edge points from the smaller vertex.
pub fn edge_induced(edges: [bool; 6]) -> Hypertournament {
    let e = |a: usize, b: usize| edges[EDGES4.iter().position(|&x| x == (a, b)).expect("edge")];
    Hypertournament::new(4, 3, |s| {
        let (a, b, c) = (s[0], s[1], s[2]);
        let votes = [e(a, b), e(b, c), !e(a, c)];
        votes.iter().filter(|&&v| v).count() >= 2
    })
}

/// Every hypertournament of the given arity on `vertices` points.
pub fn enumerate(vertices: usize, arity: usize, max_bits: usize) -> Result<Vec<Hypertournament>> {
    let subs = subsets(vertices, arity);
    if subs.len() > max_bits {
        return Err(Error::BadArgs(format!("{} subsets exceed the limit of {max_bits}", subs.len())));
    }
    Ok((0u64..1 << subs.len())
        .map(|mask| {
            let mut k = 0;
            Hypertournament::new(vertices, arity, |_| {
                let b = mask >> k & 1 == 1;
                k += 1;
                b
            })
        })
        .collect())
}

/// Labelled and unlabelled counts of each tag among all 4-vertex
/// 3-hypertournaments.
pub fn h3_census() -> BTreeMap<Tag, (usize, usize)> {
    let mut classes: BTreeMap<Tag, std::collections::BTreeSet<Vec<bool>>> = BTreeMap::new();
    let mut labelled: BTreeMap<Tag, usize> = BTreeMap::new();
    for h in enumerate(4, 3, 4).expect("small") {
        let tag = h.classify_restriction(&[0, 1, 2, 3]).tag.expect("arity 3");
        *labelled.entry(tag).or_default() += 1;
        classes.entry(tag).or_default().insert(h.canonical_form());
    }
    labelled.into_iter().map(|(t, l)| (t, (l, classes[&t].len()))).collect()
}
